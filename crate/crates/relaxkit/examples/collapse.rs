//! The Mostowski collapse: any well-founded finite relation maps uniquely
//! into the Ackermann universe, and the map is injective exactly when the
//! relation is extensional.
//!
//! Run with `cargo run --example collapse`.

use std::collections::BTreeMap;

use relaxkit::domain::FinDomain;
use relaxkit::hf::{mem, set_literal, DEFAULT_BIT_BUDGET};
use relaxkit::mostowski::{collapse, wf_recursion, WfGraph};

fn graph(nodes: &[&str], edges: &[(&str, &str)]) -> WfGraph {
    let dom = FinDomain::new(nodes.iter().copied()).unwrap();
    let edges: Vec<(String, String)> = edges
        .iter()
        .map(|&(x, y)| (x.to_owned(), y.to_owned()))
        .collect();
    WfGraph::new(dom, &edges).unwrap()
}

fn main() {
    // "x -> y" reads "x is a member of y".
    let g = graph(
        &["empty", "one", "two", "pair"],
        &[
            ("empty", "one"),
            ("one", "two"),
            ("empty", "pair"),
            ("one", "pair"),
        ],
    );
    assert!(g.check_well_founded().is_ok());
    assert!(g.check_extensional().is_ok());

    let codes = collapse(&g, DEFAULT_BIT_BUDGET).unwrap();
    println!("collapse into the Ackermann universe:");
    for i in 0..g.nodes().size() {
        println!(
            "  {} -> {} = {}",
            g.nodes().label(i),
            codes[i],
            set_literal(&codes[i])
        );
    }

    // Edges correspond exactly to coded membership.
    for x in 0..g.nodes().size() {
        for y in 0..g.nodes().size() {
            assert_eq!(g.has_edge(x, y), mem(&codes[x], &codes[y]));
        }
    }
    println!("every edge matches coded membership");

    // Recursion along the relation: membership height.
    let heights = wf_recursion(&g, |f: &BTreeMap<usize, u64>, a| {
        Some(g.preds(a).iter().map(|p| f[p] + 1).max().unwrap_or(0))
    })
    .unwrap();
    for (i, h) in &heights {
        println!("height of {} = {h}", g.nodes().label(*i));
    }

    // A cycle is rejected with a witness.
    let cyclic = graph(&["a", "b"], &[("a", "b"), ("b", "a")]);
    println!(
        "cyclic graph: {:?}",
        cyclic.check_well_founded().unwrap_err()
    );

    // Two nodes with the same predecessors collapse to the same code.
    let dup = graph(&["p", "q"], &[]);
    let codes = collapse(&dup, DEFAULT_BIT_BUDGET).unwrap();
    println!(
        "non-extensional pair collapses to {} and {} (injectivity lost: {:?})",
        codes[0],
        codes[1],
        dup.check_extensional().unwrap_err()
    );
}
