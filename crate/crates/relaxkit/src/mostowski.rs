//! Well-founded finite relations and the Mostowski collapse.
//!
//! A [`WfGraph`] is a finite directed relation: an edge `(x, y)` reads
//! "x is a member of y". When the relation is acyclic it is well-founded,
//! and recursion along it is possible; the collapse assigns each node the
//! code of the set of its predecessors' codes, giving the unique morphism
//! of pairings into the Ackermann universe. The collapse is injective
//! exactly when the graph is extensional (no two nodes share a predecessor
//! set); non-extensional graphs are still collapsed, with the loss of
//! injectivity reported by the caller via [`WfGraph::check_extensional`].

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::domain::FinDomain;
use crate::hf::{encode, HfCode, HfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MostowskiError {
    #[error("not well-founded: cycle {}", .0.join(","))]
    NotWellFounded(Vec<String>),
    #[error("unknown node \"{0}\"")]
    UnknownNode(String),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(String, String),
    #[error(transparent)]
    Code(#[from] HfError),
}

/// A finite directed relation with labelled nodes; edge `(x, y)` means
/// "x is a member of y".
#[derive(Clone, Debug)]
pub struct WfGraph {
    nodes: FinDomain,
    edges: Vec<(usize, usize)>,
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
}

impl WfGraph {
    /// Builds a graph from labelled edges, rejecting unknown endpoints and
    /// duplicate edges.
    pub fn new(nodes: FinDomain, edges: &[(String, String)]) -> Result<Self, MostowskiError> {
        let n = nodes.size();
        let mut seen = BTreeSet::new();
        let mut index_edges = Vec::with_capacity(edges.len());
        let mut preds = vec![Vec::new(); n];
        let mut succs = vec![Vec::new(); n];
        for (x, y) in edges {
            let xi = nodes
                .index_of(x)
                .ok_or_else(|| MostowskiError::UnknownNode(x.clone()))?;
            let yi = nodes
                .index_of(y)
                .ok_or_else(|| MostowskiError::UnknownNode(y.clone()))?;
            if !seen.insert((xi, yi)) {
                return Err(MostowskiError::DuplicateEdge(x.clone(), y.clone()));
            }
            index_edges.push((xi, yi));
            preds[yi].push(xi);
            succs[xi].push(yi);
        }
        for list in preds.iter_mut().chain(succs.iter_mut()) {
            list.sort_unstable();
        }
        Ok(WfGraph {
            nodes,
            edges: index_edges,
            preds,
            succs,
        })
    }

    pub fn nodes(&self) -> &FinDomain {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.preds[y].binary_search(&x).is_ok()
    }

    /// Predecessor set of `y`: the `x` with an edge `(x, y)`; the opposite
    /// adjoint of the pairing.
    pub fn preds(&self, y: usize) -> &[usize] {
        &self.preds[y]
    }

    /// Ok iff the relation is acyclic; otherwise a cycle as a node list.
    /// For finite relations acyclicity is the minimal-element condition.
    pub fn check_well_founded(&self) -> Result<(), Vec<String>> {
        match self.find_cycle() {
            None => Ok(()),
            Some(cycle) => Err(cycle
                .into_iter()
                .map(|i| self.nodes.label(i).to_owned())
                .collect()),
        }
    }

    fn find_cycle(&self) -> Option<Vec<usize>> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.nodes.size();
        let mut color = vec![WHITE; n];
        let mut stack: Vec<usize> = Vec::new();
        // Iterative DFS over successor lists, in node order.
        for start in 0..n {
            if color[start] != WHITE {
                continue;
            }
            let mut frames: Vec<(usize, usize)> = vec![(start, 0)];
            color[start] = GRAY;
            stack.push(start);
            while let Some(&mut (node, ref mut next)) = frames.last_mut() {
                if *next < self.succs[node].len() {
                    let succ = self.succs[node][*next];
                    *next += 1;
                    match color[succ] {
                        WHITE => {
                            color[succ] = GRAY;
                            stack.push(succ);
                            frames.push((succ, 0));
                        }
                        GRAY => {
                            let at = stack.iter().position(|&s| s == succ).unwrap();
                            return Some(stack[at..].to_vec());
                        }
                        _ => {}
                    }
                } else {
                    color[node] = BLACK;
                    stack.pop();
                    frames.pop();
                }
            }
        }
        None
    }

    /// Ok iff no two distinct nodes have identical predecessor sets; the
    /// first offending pair (in node order) otherwise.
    pub fn check_extensional(&self) -> Result<(), (String, String)> {
        let n = self.nodes.size();
        for i in 0..n {
            for j in i + 1..n {
                if self.preds[i] == self.preds[j] {
                    return Err((
                        self.nodes.label(i).to_owned(),
                        self.nodes.label(j).to_owned(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// A topological order of the membership relation (predecessors first),
    /// deterministic given the canonical node order.
    fn topo_order(&self) -> Result<Vec<usize>, MostowskiError> {
        self.check_well_founded()
            .map_err(MostowskiError::NotWellFounded)?;
        let n = self.nodes.size();
        let mut missing: Vec<usize> = (0..n).map(|i| self.preds[i].len()).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| missing[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&i) = ready.iter().next() {
            ready.remove(&i);
            order.push(i);
            for &s in &self.succs[i] {
                missing[s] -= 1;
                if missing[s] == 0 {
                    ready.insert(s);
                }
            }
        }
        Ok(order)
    }

    /// Strict ancestor sets: the transitive closure of each node's
    /// predecessors.
    fn ancestor_sets(&self, topo: &[usize]) -> Vec<BTreeSet<usize>> {
        let mut tcl: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.nodes.size()];
        for &a in topo {
            let mut set = BTreeSet::new();
            for &p in &self.preds[a] {
                set.insert(p);
                set.extend(tcl[p].iter().copied());
            }
            tcl[a] = set;
        }
        tcl
    }
}

impl Serialize for WfGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            nodes: &'a [String],
            edges: Vec<(&'a str, &'a str)>,
        }
        Raw {
            nodes: self.nodes.labels(),
            edges: self
                .edges
                .iter()
                .map(|&(x, y)| (self.nodes.label(x), self.nodes.label(y)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WfGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            nodes: Vec<String>,
            edges: Vec<(String, String)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let nodes = FinDomain::new(raw.nodes).map_err(D::Error::custom)?;
        WfGraph::new(nodes, &raw.edges).map_err(D::Error::custom)
    }
}

/// Recursion along a well-founded relation.
///
/// Nodes are processed in a topological order; at node `a` the rule sees the
/// function restricted to the strict ancestors of `a`. A node stays
/// undefined when the rule declines it or when a predecessor is undefined,
/// which keeps the defined set closed under membership. The result is the
/// unique maximal recursive partial map and does not depend on the
/// topological order used.
pub fn wf_recursion<V, R>(g: &WfGraph, rule: R) -> Result<BTreeMap<usize, V>, MostowskiError>
where
    V: Clone,
    R: Fn(&BTreeMap<usize, V>, usize) -> Option<V>,
{
    let topo = g.topo_order()?;
    let tcl = g.ancestor_sets(&topo);
    let mut values: BTreeMap<usize, V> = BTreeMap::new();
    for &a in &topo {
        if !g.preds(a).iter().all(|p| values.contains_key(p)) {
            continue;
        }
        let restricted: BTreeMap<usize, V> =
            tcl[a].iter().map(|&x| (x, values[&x].clone())).collect();
        if let Some(v) = rule(&restricted, a) {
            values.insert(a, v);
        }
    }
    Ok(values)
}

/// The Mostowski collapse: assigns each node the code of the set of its
/// predecessors' codes. A morphism of pairings; injective iff the graph is
/// extensional. Duplicate predecessor codes merge, as sets do.
pub fn collapse(g: &WfGraph, bit_budget: u64) -> Result<Vec<HfCode>, MostowskiError> {
    let failure = std::cell::Cell::new(None);
    let assigned = wf_recursion(g, |f: &BTreeMap<usize, HfCode>, a| {
        let mut codes: Vec<HfCode> = g.preds(a).iter().map(|p| f[p].clone()).collect();
        codes.sort();
        codes.dedup();
        match encode(&codes, bit_budget) {
            Ok(c) => Some(c),
            Err(e) => {
                failure.set(Some(e));
                None
            }
        }
    })?;
    if let Some(e) = failure.take() {
        return Err(e.into());
    }
    let mut out = Vec::with_capacity(g.nodes().size());
    for i in 0..g.nodes().size() {
        out.push(assigned[&i].clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::{bit_positions, mem, transitive_closure, DEFAULT_BIT_BUDGET};

    fn graph(nodes: &[&str], edges: &[(&str, &str)]) -> WfGraph {
        let dom = FinDomain::new(nodes.iter().copied()).unwrap();
        let edges: Vec<(String, String)> = edges
            .iter()
            .map(|&(x, y)| (x.to_owned(), y.to_owned()))
            .collect();
        WfGraph::new(dom, &edges).unwrap()
    }

    #[test]
    fn well_foundedness_cases() {
        assert!(graph(&["a", "b"], &[]).check_well_founded().is_ok());
        assert!(graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
            .check_well_founded()
            .is_ok());
        let cyc = graph(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(
            cyc.check_well_founded().unwrap_err(),
            vec!["a".to_owned(), "b".to_owned()]
        );
    }

    #[test]
    fn extensionality_cases() {
        let two_isolated = graph(&["p", "q"], &[]);
        assert_eq!(
            two_isolated.check_extensional().unwrap_err(),
            ("p".to_owned(), "q".to_owned())
        );
        assert!(graph(&["p", "q"], &[("p", "q")])
            .check_extensional()
            .is_ok());
        let fork = graph(&["p", "q", "r"], &[("p", "q"), ("p", "r")]);
        assert_eq!(
            fork.check_extensional().unwrap_err(),
            ("q".to_owned(), "r".to_owned())
        );
    }

    fn height_rule(g: &WfGraph) -> impl Fn(&BTreeMap<usize, u64>, usize) -> Option<u64> + '_ {
        |f, a| Some(g.preds(a).iter().map(|p| f[p] + 1).max().unwrap_or(0))
    }

    #[test]
    fn recursion_computes_membership_height() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let h = wf_recursion(&g, height_rule(&g)).unwrap();
        assert_eq!(h[&0], 0);
        assert_eq!(h[&1], 1);
        assert_eq!(h[&2], 2);
    }

    #[test]
    fn recursion_with_undefined_rule_is_empty() {
        let g = graph(&["a", "b"], &[("a", "b")]);
        let h: BTreeMap<usize, u64> = wf_recursion(&g, |_, _| None).unwrap();
        assert!(h.is_empty());
    }

    #[test]
    fn recursion_rejects_cycles() {
        let g = graph(&["a", "b"], &[("a", "b"), ("b", "a")]);
        let err = wf_recursion(&g, |_, _| Some(0u64)).unwrap_err();
        assert_eq!(
            err,
            MostowskiError::NotWellFounded(vec!["a".into(), "b".into()])
        );
    }

    #[test]
    fn recursion_is_independent_of_node_order() {
        // Permute the node list (which permutes the processing order) and
        // compare results through the permutation.
        let nodes = ["a", "b", "c", "d", "e"];
        let edges = [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("d", "e")];
        let base = graph(&nodes, &edges);
        let base_h = wf_recursion(&base, height_rule(&base)).unwrap();
        let perms = [
            ["e", "d", "c", "b", "a"],
            ["c", "a", "e", "b", "d"],
            ["b", "e", "a", "d", "c"],
        ];
        for perm in perms {
            let g = graph(&perm, &edges);
            let h = wf_recursion(&g, height_rule(&g)).unwrap();
            for (label, idx) in perm.iter().zip(0..) {
                let base_idx = base.nodes().index_of(label).unwrap();
                assert_eq!(h[&idx], base_h[&base_idx], "value at {label}");
            }
        }
    }

    #[test]
    fn collapse_examples() {
        let lone = graph(&["p"], &[]);
        assert_eq!(
            collapse(&lone, DEFAULT_BIT_BUDGET).unwrap(),
            [HfCode::from(0u64)]
        );

        let g = graph(&["p", "q", "r"], &[("p", "q"), ("p", "r"), ("q", "r")]);
        let codes = collapse(&g, DEFAULT_BIT_BUDGET).unwrap();
        assert_eq!(
            codes,
            [HfCode::from(0u64), HfCode::from(1u64), HfCode::from(3u64)]
        );

        // Non-extensional graphs collapse anyway, losing injectivity.
        let dup = graph(&["p", "q"], &[]);
        let codes = collapse(&dup, DEFAULT_BIT_BUDGET).unwrap();
        assert_eq!(codes[0], codes[1]);
    }

    /// The membership graph of `tcl(n) + {n}`, nodes labelled by code.
    fn membership_graph(n: u64) -> WfGraph {
        let code = HfCode::from(n);
        let mut members: Vec<u64> = bit_positions(&transitive_closure(&code));
        if !members.contains(&n) {
            members.push(n);
        }
        members.sort_unstable();
        let labels: Vec<String> = members.iter().map(|m| m.to_string()).collect();
        let mut edges = Vec::new();
        for &x in &members {
            for &y in &members {
                if mem(&HfCode::from(x), &HfCode::from(y)) {
                    edges.push((x.to_string(), y.to_string()));
                }
            }
        }
        WfGraph::new(FinDomain::new(labels).unwrap(), &edges).unwrap()
    }

    #[test]
    fn collapse_roundtrips_membership_graphs() {
        for n in [0u64, 1, 2, 3, 5, 12, 100, 1000, 4095] {
            let g = membership_graph(n);
            let codes = collapse(&g, DEFAULT_BIT_BUDGET).unwrap();
            for (i, code) in codes.iter().enumerate() {
                assert_eq!(
                    code.to_string(),
                    g.nodes().label(i),
                    "node {i} of graph {n}"
                );
            }
        }
    }
}
