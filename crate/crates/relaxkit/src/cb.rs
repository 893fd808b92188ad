//! The explicit Cantor-Bernstein bijection.
//!
//! Given validated injections `f: A -> B` and `g: B -> A`, compose them to
//! `J = g . f : A -> A`, let `j` detect the image of `J` and `k` the image
//! of `g`, and send `a` to itself when some iterate puts it in an image of
//! `k` but not of `j`, and to `J[a]` otherwise. The adjusted map lands on
//! the image of `g`, and composing with `g`'s inverse yields the bijection
//! `A -> B` together with the case used at each element.
//!
//! For finite domains the existential over iterates is decided exactly:
//! orbits revisit within `|A|` steps, so the search stops there.

use std::fmt;

use thiserror::Error;

use crate::domain::FinDomain;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CbError {
    #[error("\"{0}\" has no image")]
    MissingImage(String),
    #[error("\"{0}\" is not in the source domain")]
    UnknownSource(String),
    #[error("image \"{target}\" of \"{element}\" is not in the target domain")]
    UnknownTarget { element: String, target: String },
    #[error("not injective: ({first},{second})")]
    NotInjective { first: String, second: String },
    #[error("injection endpoints do not match: {0}")]
    DomainMismatch(String),
}

/// A validated injection between two finite domains.
#[derive(Clone, Debug)]
pub struct InjectionTable {
    from: FinDomain,
    to: FinDomain,
    map: Vec<usize>,
}

impl InjectionTable {
    /// Builds and validates an injection from `(source, target)` label
    /// pairs: every source element needs exactly one target, and no two
    /// sources may share one.
    pub fn new(
        from: FinDomain,
        to: FinDomain,
        assignments: &[(String, String)],
    ) -> Result<Self, CbError> {
        let mut map = vec![usize::MAX; from.size()];
        for (s, t) in assignments {
            let si = from
                .index_of(s)
                .ok_or_else(|| CbError::UnknownSource(s.clone()))?;
            let ti = to.index_of(t).ok_or_else(|| CbError::UnknownTarget {
                element: s.clone(),
                target: t.clone(),
            })?;
            map[si] = ti;
        }
        if let Some(i) = map.iter().position(|&t| t == usize::MAX) {
            return Err(CbError::MissingImage(from.label(i).to_owned()));
        }
        let mut seen = vec![usize::MAX; to.size()];
        for (i, &t) in map.iter().enumerate() {
            if seen[t] != usize::MAX {
                return Err(CbError::NotInjective {
                    first: from.label(seen[t]).to_owned(),
                    second: from.label(i).to_owned(),
                });
            }
            seen[t] = i;
        }
        Ok(InjectionTable { from, to, map })
    }

    /// The identity injection on a domain.
    pub fn identity(domain: FinDomain) -> Self {
        let map = (0..domain.size()).collect();
        InjectionTable {
            from: domain.clone(),
            to: domain,
            map,
        }
    }

    pub fn from_domain(&self) -> &FinDomain {
        &self.from
    }

    pub fn to_domain(&self) -> &FinDomain {
        &self.to
    }

    /// Target index of source element `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// The inverse as a partial map on target indices.
    pub fn inverse(&self) -> Vec<Option<usize>> {
        let mut inv = vec![None; self.to.size()];
        for (i, &t) in self.map.iter().enumerate() {
            inv[t] = Some(i);
        }
        inv
    }
}

/// Which case of the adjusted map applied at an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// The element was in some iterated image difference and kept fixed.
    Fixed,
    /// The element was sent through the composite injection.
    Shifted,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Fixed => write!(f, "fixed"),
            CaseTag::Shifted => write!(f, "shifted"),
        }
    }
}

/// A bijection `A -> B` with the per-element case analysis that produced it.
#[derive(Clone, Debug)]
pub struct Bijection {
    from: FinDomain,
    to: FinDomain,
    map: Vec<usize>,
    cases: Vec<CaseTag>,
}

impl Bijection {
    pub fn from_domain(&self) -> &FinDomain {
        &self.from
    }

    pub fn to_domain(&self) -> &FinDomain {
        &self.to
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn case(&self, i: usize) -> CaseTag {
        self.cases[i]
    }

    pub fn cases(&self) -> &[CaseTag] {
        &self.cases
    }

    /// Total, injective and surjective; true by construction, re-checkable.
    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.to.size()];
        for &t in &self.map {
            if t >= seen.len() || seen[t] {
                return false;
            }
            seen[t] = true;
        }
        self.map.len() == self.to.size()
    }
}

/// Computes the explicit Cantor-Bernstein bijection `A -> B` from
/// injections `f: A -> B` and `g: B -> A`.
pub fn cantor_bernstein(f: &InjectionTable, g: &InjectionTable) -> Result<Bijection, CbError> {
    if f.to_domain() != g.from_domain() || f.from_domain() != g.to_domain() {
        return Err(CbError::DomainMismatch(
            "f must map A to B and g must map B to A".into(),
        ));
    }
    let a_dom = f.from_domain().clone();
    let b_dom = f.to_domain().clone();
    let n = a_dom.size();

    // J = g . f, j detects im(J), k detects im(g).
    let big_j: Vec<usize> = (0..n).map(|a| g.apply(f.apply(a))).collect();
    let image_of = |set: &[bool]| {
        let mut out = vec![false; n];
        for (a, &inside) in set.iter().enumerate() {
            if inside {
                out[big_j[a]] = true;
            }
        }
        out
    };
    let mut j_set = vec![false; n];
    for &x in &big_j {
        j_set[x] = true;
    }
    let mut k_set = vec![false; n];
    for b in 0..b_dom.size() {
        k_set[g.apply(b)] = true;
    }

    // fixed = union over iterates of (image of k) minus (image of j).
    let mut fixed = vec![false; n];
    let mut k_iter = k_set;
    let mut j_iter = j_set;
    for _ in 0..=n {
        for a in 0..n {
            if k_iter[a] && !j_iter[a] {
                fixed[a] = true;
            }
        }
        k_iter = image_of(&k_iter);
        j_iter = image_of(&j_iter);
    }

    let g_inv = g.inverse();
    let mut map = Vec::with_capacity(n);
    let mut cases = Vec::with_capacity(n);
    for a in 0..n {
        let (adjusted, tag) = if fixed[a] {
            (a, CaseTag::Fixed)
        } else {
            (big_j[a], CaseTag::Shifted)
        };
        let b = g_inv[adjusted].expect("adjusted image lies in the image of g");
        map.push(b);
        cases.push(tag);
    }
    Ok(Bijection {
        from: a_dom,
        to: b_dom,
        map,
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(labels: &[&str]) -> FinDomain {
        FinDomain::new(labels.iter().copied()).unwrap()
    }

    fn table(from: &FinDomain, to: &FinDomain, pairs: &[(&str, &str)]) -> InjectionTable {
        let assignments: Vec<(String, String)> = pairs
            .iter()
            .map(|&(s, t)| (s.to_owned(), t.to_owned()))
            .collect();
        InjectionTable::new(from.clone(), to.clone(), &assignments).unwrap()
    }

    /// Evaluates the adjusted map at one element by walking the preimage
    /// chain of J: the element is fixed exactly when the chain terminates
    /// within |A| steps at a point of k outside j.
    fn oracle_case(big_j: &[usize], j_set: &[bool], k_set: &[bool], a: usize) -> CaseTag {
        let n = big_j.len();
        let preimage = |x: usize| (0..n).find(|&y| big_j[y] == x);
        let mut x = a;
        for _ in 0..=n {
            if !j_set[x] {
                return if k_set[x] {
                    CaseTag::Fixed
                } else {
                    CaseTag::Shifted
                };
            }
            x = preimage(x).expect("x is in the image of J");
        }
        CaseTag::Shifted // the orbit is cyclic
    }

    fn check_against_oracle(f: &InjectionTable, g: &InjectionTable) {
        let bij = cantor_bernstein(f, g).unwrap();
        assert!(bij.is_bijection());
        let n = f.from_domain().size();
        let big_j: Vec<usize> = (0..n).map(|a| g.apply(f.apply(a))).collect();
        let mut j_set = vec![false; n];
        for &x in &big_j {
            j_set[x] = true;
        }
        let mut k_set = vec![false; n];
        for b in 0..g.from_domain().size() {
            k_set[g.apply(b)] = true;
        }
        let g_inv = g.inverse();
        for a in 0..n {
            let tag = oracle_case(&big_j, &j_set, &k_set, a);
            assert_eq!(bij.case(a), tag, "case tag at element {a}");
            let adjusted = match tag {
                CaseTag::Fixed => a,
                CaseTag::Shifted => big_j[a],
            };
            assert_eq!(bij.apply(a), g_inv[adjusted].unwrap(), "value at {a}");
        }
    }

    #[test]
    fn identity_injections_give_identity() {
        let a = dom(&["a", "b", "c"]);
        let f = InjectionTable::identity(a.clone());
        let g = InjectionTable::identity(a);
        let bij = cantor_bernstein(&f, &g).unwrap();
        for i in 0..3 {
            assert_eq!(bij.apply(i), i);
        }
        check_against_oracle(&f, &g);
    }

    #[test]
    fn crossed_two_element_example() {
        let a = dom(&["0", "1"]);
        let b = dom(&["x", "y"]);
        let f = table(&a, &b, &[("0", "x"), ("1", "y")]);
        let g = table(&b, &a, &[("x", "1"), ("y", "0")]);
        let bij = cantor_bernstein(&f, &g).unwrap();
        assert!(bij.is_bijection());
        // Brute force: the output must be one of the two bijections {0,1}->{x,y},
        // and it must match the per-element oracle.
        let all: [[usize; 2]; 2] = [[0, 1], [1, 0]];
        assert!(all.iter().any(|m| m == bij.map()));
        check_against_oracle(&f, &g);
    }

    #[test]
    fn rejects_non_injective_map() {
        let a = dom(&["0", "1"]);
        let b = dom(&["x", "y"]);
        let assignments = vec![
            ("0".to_owned(), "x".to_owned()),
            ("1".to_owned(), "x".to_owned()),
        ];
        let err = InjectionTable::new(a, b, &assignments).unwrap_err();
        assert_eq!(
            err,
            CbError::NotInjective {
                first: "0".into(),
                second: "1".into()
            }
        );
    }

    #[test]
    fn rejects_partial_map() {
        let a = dom(&["0", "1"]);
        let b = dom(&["x", "y"]);
        let assignments = vec![("0".to_owned(), "x".to_owned())];
        let err = InjectionTable::new(a, b, &assignments).unwrap_err();
        assert_eq!(err, CbError::MissingImage("1".into()));
    }

    #[test]
    fn inverse_pair_returns_f() {
        // g = f^{-1} forces the output to equal f.
        let a = dom(&["0", "1", "2"]);
        let b = dom(&["x", "y", "z"]);
        let f = table(&a, &b, &[("0", "y"), ("1", "z"), ("2", "x")]);
        let g = table(&b, &a, &[("y", "0"), ("z", "1"), ("x", "2")]);
        let bij = cantor_bernstein(&f, &g).unwrap();
        for i in 0..3 {
            assert_eq!(bij.apply(i), f.apply(i));
        }
        check_against_oracle(&f, &g);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for slot in 0..n {
                let mut q = p.clone();
                q.insert(slot, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn exhaustive_small_cases_match_oracle() {
        // Injections both ways force |A| = |B|; try all pairs up to size 4.
        for n in 0..=4usize {
            let a = FinDomain::new((0..n).map(|i| format!("a{i}"))).unwrap();
            let b = FinDomain::new((0..n).map(|i| format!("b{i}"))).unwrap();
            let perms = permutations(n);
            for fp in &perms {
                for gp in &perms {
                    let f = InjectionTable {
                        from: a.clone(),
                        to: b.clone(),
                        map: fp.clone(),
                    };
                    let g = InjectionTable {
                        from: b.clone(),
                        to: a.clone(),
                        map: gp.clone(),
                    };
                    check_against_oracle(&f, &g);
                }
            }
        }
    }
}
