//! Well-orders on finite domains and recursion along them.
//!
//! A [`WellOrder`] is a domain plus a rank permutation. For finite domains
//! every linear order is a well-order (the transitive subdomains are exactly
//! the initial segments), so [`check_well_order`] only has to verify
//! linearity. The recursion engine computes the unique maximal recursive
//! function for an arbitrary caller-supplied partial rule; order
//! isomorphisms, choice-driven enumeration and the canonical product order
//! are built on top of it.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::domain::{BinFn, FinDomain};
use crate::ordinal::pair_index;

/// Which linear-order axiom a comparison table violates, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearViolation {
    /// Neither `a <= b` nor `b <= a`.
    Totality(String, String),
    /// `a <= b` and `b <= a` for distinct `a`, `b`.
    Antisymmetry(String, String),
    /// `a <= b` and `b <= c` but not `a <= c`.
    Transitivity(String, String, String),
}

impl fmt::Display for LinearViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearViolation::Totality(a, b) => write!(f, "totality ({a},{b})"),
            LinearViolation::Antisymmetry(a, b) => write!(f, "antisymmetry ({a},{b})"),
            LinearViolation::Transitivity(a, b, c) => write!(f, "transitivity ({a},{b},{c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("not a linear order: {0}")]
    NotLinear(LinearViolation),
    #[error("table shape mismatch: expected {expected} rows/columns, got {got}")]
    TableShape { expected: usize, got: usize },
    #[error("position list is not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("seed domain is not an initial segment of the order")]
    NonTransitiveSeed,
    #[error("bad choice at step {step}: \"{label}\"")]
    BadChoice { step: usize, label: String },
    #[error("bad bound: {d} exceeds order size {size}")]
    BadBound { d: usize, size: usize },
}

/// A well-order: a finite domain together with the rank of each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellOrder {
    domain: FinDomain,
    position: Vec<usize>,
    by_rank: Vec<usize>,
}

impl WellOrder {
    /// Builds a well-order from a rank permutation; `position[i]` is the
    /// rank of element `i`.
    pub fn new(domain: FinDomain, position: Vec<usize>) -> Result<Self, OrderError> {
        let n = domain.size();
        if position.len() != n {
            return Err(OrderError::TableShape {
                expected: n,
                got: position.len(),
            });
        }
        let mut by_rank = vec![usize::MAX; n];
        for (i, &r) in position.iter().enumerate() {
            if r >= n || by_rank[r] != usize::MAX {
                return Err(OrderError::BadPermutation(n));
            }
            by_rank[r] = i;
        }
        Ok(WellOrder {
            domain,
            position,
            by_rank,
        })
    }

    /// The order that follows the domain's label-list order.
    pub fn by_list_order(domain: FinDomain) -> Self {
        let n = domain.size();
        WellOrder {
            domain,
            position: (0..n).collect(),
            by_rank: (0..n).collect(),
        }
    }

    pub fn domain(&self) -> &FinDomain {
        &self.domain
    }

    pub fn size(&self) -> usize {
        self.position.len()
    }

    /// Rank of element `i` (0 = least).
    pub fn rank_of(&self, i: usize) -> usize {
        self.position[i]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Element index holding rank `r`.
    pub fn element_at_rank(&self, r: usize) -> usize {
        self.by_rank[r]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.position[i] <= self.position[j]
    }

    /// Labels listed in rank order, least first.
    pub fn labels_in_order(&self) -> Vec<&str> {
        self.by_rank.iter().map(|&i| self.domain.label(i)).collect()
    }
}

impl Serialize for WellOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            labels: &'a [String],
            position: &'a [usize],
        }
        Raw {
            labels: self.domain.labels(),
            position: &self.position,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WellOrder {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            labels: Vec<String>,
            position: Vec<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let domain = FinDomain::new(raw.labels).map_err(D::Error::custom)?;
        WellOrder::new(domain, raw.position).map_err(D::Error::custom)
    }
}

/// Validates a square yes/no comparison table as a linear order and returns
/// the induced well-order. For finite domains linearity is all that well
/// ordering requires.
pub fn check_well_order(domain: &FinDomain, leq: &[Vec<bool>]) -> Result<WellOrder, OrderError> {
    let n = domain.size();
    if leq.len() != n || leq.iter().any(|row| row.len() != n) {
        return Err(OrderError::TableShape {
            expected: n,
            got: leq.len().max(leq.iter().map(Vec::len).max().unwrap_or(0)),
        });
    }
    let lbl = |i: usize| domain.label(i).to_owned();
    for i in 0..n {
        for j in 0..n {
            if !leq[i][j] && !leq[j][i] {
                return Err(OrderError::NotLinear(LinearViolation::Totality(
                    lbl(i),
                    lbl(j),
                )));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] && leq[j][i] {
                return Err(OrderError::NotLinear(LinearViolation::Antisymmetry(
                    lbl(i),
                    lbl(j),
                )));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !leq[i][j] {
                continue;
            }
            for k in 0..n {
                if leq[j][k] && !leq[i][k] {
                    return Err(OrderError::NotLinear(LinearViolation::Transitivity(
                        lbl(i),
                        lbl(j),
                        lbl(k),
                    )));
                }
            }
        }
    }
    // Rank = number of strictly smaller elements.
    let position: Vec<usize> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && leq[j][i]).count())
        .collect();
    WellOrder::new(domain.clone(), position)
}

/// A partially-defined function on a well-ordered domain.
///
/// The recursion engine only ever produces functions whose defined set is an
/// initial segment of the order (a transitive domain); seeds supplied by
/// callers are checked before use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFn<V> {
    order: WellOrder,
    values: Vec<Option<V>>,
}

impl<V: Clone> PartialFn<V> {
    /// The everywhere-undefined function.
    pub fn empty(order: WellOrder) -> Self {
        let values = vec![None; order.size()];
        PartialFn { order, values }
    }

    /// Wraps raw per-element values without checking transitivity; used to
    /// hand seeds to [`recursive_extension`], which validates them.
    pub fn from_values(order: WellOrder, values: Vec<Option<V>>) -> Self {
        assert_eq!(values.len(), order.size());
        PartialFn { order, values }
    }

    pub fn order(&self) -> &WellOrder {
        &self.order
    }

    /// Value at element index `i`.
    pub fn value(&self, i: usize) -> Option<&V> {
        self.values[i].as_ref()
    }

    /// Value at the element of rank `r`.
    pub fn value_at_rank(&self, r: usize) -> Option<&V> {
        self.values[self.order.element_at_rank(r)].as_ref()
    }

    pub fn defined_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(|v| v.is_some())
    }

    /// Whether the defined set is an initial segment of the order.
    pub fn has_transitive_domain(&self) -> bool {
        let k = self.defined_count();
        (0..k).all(|r| self.value_at_rank(r).is_some())
    }

    /// Values listed in rank order over the defined initial segment.
    pub fn values_in_order(&self) -> Vec<&V> {
        (0..self.order.size())
            .map_while(|r| self.value_at_rank(r))
            .collect()
    }

    /// The restriction to elements of rank below `r`.
    pub fn restriction_below_rank(&self, r: usize) -> PartialFn<V> {
        let mut values = vec![None; self.order.size()];
        for rr in 0..r.min(self.order.size()) {
            let i = self.order.element_at_rank(rr);
            values[i] = self.values[i].clone();
        }
        PartialFn {
            order: self.order.clone(),
            values,
        }
    }
}

/// Computes the unique maximal recursive function for the rule `R`.
///
/// Elements are visited in rank order; at each element `a` the rule sees the
/// function built so far, which is exactly the restriction to `(#<a)`. The
/// run stops at the first element where the rule is undefined, which is the
/// maximality criterion: either the domain is everything, or the rule is
/// undefined at the least element outside it.
///
/// The rule must be deterministic; the engine never inspects it.
pub fn recursion<V, R>(order: &WellOrder, rule: R) -> PartialFn<V>
where
    V: Clone,
    R: Fn(&PartialFn<V>, usize) -> Option<V>,
{
    recursive_extension(order, rule, PartialFn::empty(order.clone()))
        .expect("the empty seed has transitive domain")
}

/// Computes the unique maximal recursive extension of `seed`: it agrees
/// with `seed` on its domain and applies the rule beyond it.
pub fn recursive_extension<V, R>(
    order: &WellOrder,
    rule: R,
    seed: PartialFn<V>,
) -> Result<PartialFn<V>, OrderError>
where
    V: Clone,
    R: Fn(&PartialFn<V>, usize) -> Option<V>,
{
    assert!(
        seed.order() == order,
        "seed must live on the order being recursed over"
    );
    if !seed.has_transitive_domain() {
        return Err(OrderError::NonTransitiveSeed);
    }
    let start = seed.defined_count();
    Ok(extend(seed, start, rule))
}

fn extend<V, R>(mut f: PartialFn<V>, start_rank: usize, rule: R) -> PartialFn<V>
where
    V: Clone,
    R: Fn(&PartialFn<V>, usize) -> Option<V>,
{
    for r in start_rank..f.order.size() {
        let elem = f.order.element_at_rank(r);
        match rule(&f, elem) {
            Some(v) => f.values[elem] = Some(v),
            None => break,
        }
    }
    f
}

/// The unique maximal order-isomorphism from an initial segment of `a` onto
/// an initial segment of `b`, as a partial function whose values are element
/// indices in `b`.
///
/// This is the recursion with rule "send `x` to the least element of `b` not
/// yet used"; maximality means either full domain or full image.
pub fn order_isomorphism(a: &WellOrder, b: &WellOrder) -> PartialFn<usize> {
    recursion(a, |f: &PartialFn<usize>, _elem| {
        let used = f.defined_count();
        (used < b.size()).then(|| b.element_at_rank(used))
    })
}

/// The order type of a finite well-order: its size.
pub fn order_type(a: &WellOrder) -> usize {
    a.size()
}

/// Enumerates the domain by repeatedly applying a choice rule.
///
/// `ch` receives the characteristic function of the already-enumerated
/// subset and must name an element outside it; the enumeration order is the
/// resulting well-order. A rule that returns an unknown or already-chosen
/// label fails with [`OrderError::BadChoice`].
pub fn well_order_via_choice<C>(domain: &FinDomain, ch: C) -> Result<WellOrder, OrderError>
where
    C: Fn(&BinFn) -> String,
{
    let n = domain.size();
    let mut chosen = vec![false; n];
    let mut position = vec![usize::MAX; n];
    for step in 0..n {
        let h = BinFn::new(domain.clone(), chosen.clone()).expect("length matches");
        let label = ch(&h);
        let i = match domain.index_of(&label) {
            Some(i) if !chosen[i] => i,
            _ => return Err(OrderError::BadChoice { step, label }),
        };
        chosen[i] = true;
        position[i] = step;
    }
    WellOrder::new(domain.clone(), position)
}

/// Compares two rank pairs under the canonical product order: by maximum
/// first, then pairs `(#<c, c)` before `(c, #<=c)`, each band in order.
/// Equivalently, lexicographically by `(max, first, second)`.
pub fn canonical_pair_cmp(p: (usize, usize), q: (usize, usize)) -> Ordering {
    let mp = p.0.max(p.1);
    let mq = q.0.max(q.1);
    (mp, p.0, p.1).cmp(&(mq, q.0, q.1))
}

/// The canonical well-order on pairs `(x, y)` with `x` in `a` and `y` in the
/// initial segment of `a` of size `d`.
///
/// The pair domain lists labels in row order (`x` major); positions come
/// from the canonical comparator, realized through the closed-form pair
/// index.
pub fn canonical_product(a: &WellOrder, d: usize) -> Result<WellOrder, OrderError> {
    let n = a.size();
    if d > n {
        return Err(OrderError::BadBound { d, size: n });
    }
    let mut labels = Vec::with_capacity(n * d);
    let mut keys = Vec::with_capacity(n * d);
    for ra in 0..n {
        let x = a.domain().label(a.element_at_rank(ra));
        for rb in 0..d {
            let y = a.domain().label(a.element_at_rank(rb));
            labels.push(format!("({x},{y})"));
            keys.push(pair_index(ra as u64, rb as u64));
        }
    }
    let domain = FinDomain::new(labels).expect("rank pairs are distinct");
    // Rank of each pair = how many present pairs have a smaller key.
    let mut sorted: Vec<usize> = (0..keys.len()).collect();
    sorted.sort_by_key(|&i| keys[i]);
    let mut position = vec![0usize; keys.len()];
    for (rank, &i) in sorted.iter().enumerate() {
        position[i] = rank;
    }
    WellOrder::new(domain, position)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(labels: &[&str]) -> FinDomain {
        FinDomain::new(labels.iter().copied()).unwrap()
    }

    fn numeric_leq(n: usize) -> Vec<Vec<bool>> {
        (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect()
    }

    #[test]
    fn check_numeric_order() {
        let d = dom(&["0", "1", "2"]);
        let w = check_well_order(&d, &numeric_leq(3)).unwrap();
        assert_eq!(w.positions(), &[0, 1, 2]);
    }

    #[test]
    fn check_rejects_antisymmetry_violation() {
        let d = dom(&["a", "b"]);
        let table = vec![vec![true, true], vec![true, true]];
        let err = check_well_order(&d, &table).unwrap_err();
        assert_eq!(
            err,
            OrderError::NotLinear(LinearViolation::Antisymmetry("a".into(), "b".into()))
        );
    }

    #[test]
    fn check_rejects_three_cycle() {
        let d = dom(&["a", "b", "c"]);
        // a<=b, b<=c, c<=a plus reflexivity; transitivity fails at (a,b,c).
        let table = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![true, false, true],
        ];
        let err = check_well_order(&d, &table).unwrap_err();
        assert_eq!(
            err,
            OrderError::NotLinear(LinearViolation::Transitivity(
                "a".into(),
                "b".into(),
                "c".into()
            ))
        );
    }

    fn numeric_order(n: usize) -> WellOrder {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        WellOrder::by_list_order(FinDomain::new(labels).unwrap())
    }

    fn factorial_rule(f: &PartialFn<u64>, elem: usize) -> Option<u64> {
        let r = f.order().rank_of(elem);
        if r == 0 {
            Some(1)
        } else {
            let prev = f.value_at_rank(r - 1)?;
            Some(prev * r as u64)
        }
    }

    #[test]
    fn recursion_factorial() {
        let w = numeric_order(5);
        let f = recursion(&w, factorial_rule);
        let vals: Vec<u64> = f.values_in_order().into_iter().copied().collect();
        assert_eq!(vals, [1, 1, 2, 6, 24]);
        assert!(f.is_total());
    }

    #[test]
    fn recursion_undefined_at_minimum_is_empty() {
        let w = numeric_order(4);
        let f: PartialFn<u64> = recursion(&w, |_, _| None);
        assert_eq!(f.defined_count(), 0);
    }

    #[test]
    fn recursion_total_rule_fills_domain() {
        let w = numeric_order(6);
        let f = recursion(&w, |f: &PartialFn<usize>, _| Some(f.defined_count()));
        assert!(f.is_total());
    }

    #[test]
    fn recursion_is_hereditary() {
        // Every restriction of the maximal function to (#<a) is itself
        // recursive for the same rule.
        let w = numeric_order(6);
        let f = recursion(&w, factorial_rule);
        for r in 0..f.defined_count() {
            let elem = w.element_at_rank(r);
            let restricted = f.restriction_below_rank(r);
            assert_eq!(factorial_rule(&restricted, elem).as_ref(), f.value(elem));
        }
    }

    #[test]
    fn extension_of_empty_seed_is_recursion() {
        let w = numeric_order(5);
        let seed = PartialFn::empty(w.clone());
        let f = recursive_extension(&w, factorial_rule, seed).unwrap();
        assert_eq!(f, recursion(&w, factorial_rule));
    }

    #[test]
    fn extension_respects_seed() {
        let w = numeric_order(4);
        let mut values = vec![None; 4];
        values[w.element_at_rank(0)] = Some(5u64);
        let seed = PartialFn::from_values(w.clone(), values);
        let f = recursive_extension(&w, factorial_rule, seed).unwrap();
        let vals: Vec<u64> = f.values_in_order().into_iter().copied().collect();
        assert_eq!(vals, [5, 5, 10, 30]);
    }

    #[test]
    fn extension_rejects_non_transitive_seed() {
        let w = numeric_order(3);
        let mut values = vec![None; 3];
        values[w.element_at_rank(1)] = Some(1u64);
        let seed = PartialFn::from_values(w.clone(), values);
        let err = recursive_extension(&w, factorial_rule, seed).unwrap_err();
        assert_eq!(err, OrderError::NonTransitiveSeed);
    }

    #[test]
    fn iso_small_into_large_has_full_domain() {
        let a = numeric_order(2);
        let b = numeric_order(3);
        let f = order_isomorphism(&a, &b);
        assert!(f.is_total());
        let image: Vec<usize> = f.values_in_order().into_iter().copied().collect();
        assert_eq!(image, [b.element_at_rank(0), b.element_at_rank(1)]);
    }

    #[test]
    fn iso_identity_on_equal_orders() {
        let a = numeric_order(4);
        let f = order_isomorphism(&a, &a);
        for i in 0..4 {
            assert_eq!(f.value(i), Some(&i));
        }
    }

    #[test]
    fn iso_large_into_small_has_full_image() {
        let a = numeric_order(3);
        let b = numeric_order(2);
        let f = order_isomorphism(&a, &b);
        assert_eq!(f.defined_count(), 2);
        assert!(f.has_transitive_domain());
    }

    #[test]
    fn order_type_is_size() {
        assert_eq!(order_type(&numeric_order(0)), 0);
        let w = WellOrder::new(dom(&["x", "y", "z"]), vec![2, 0, 1]).unwrap();
        assert_eq!(order_type(&w), 3);
    }

    #[test]
    fn choice_least_unused_reproduces_label_order() {
        let d = dom(&["a", "b", "c"]);
        let w = well_order_via_choice(&d, |h: &BinFn| {
            let i = (0..h.domain().size()).find(|&i| !h.bit(i)).unwrap();
            h.domain().label(i).to_owned()
        })
        .unwrap();
        assert_eq!(w.labels_in_order(), ["a", "b", "c"]);
    }

    #[test]
    fn choice_on_empty_domain() {
        let w = well_order_via_choice(&FinDomain::empty(), |_| unreachable!()).unwrap();
        assert_eq!(w.size(), 0);
    }

    #[test]
    fn choice_rejects_repeated_label() {
        let d = dom(&["a", "b"]);
        let err = well_order_via_choice(&d, |_| "a".to_owned()).unwrap_err();
        assert_eq!(
            err,
            OrderError::BadChoice {
                step: 1,
                label: "a".into()
            }
        );
    }

    #[test]
    fn product_two_by_two() {
        let a = numeric_order(2);
        let p = canonical_product(&a, 2).unwrap();
        assert_eq!(p.labels_in_order(), ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
    }

    #[test]
    fn product_with_singleton_segment_is_lexicographic() {
        let a = numeric_order(4);
        let p = canonical_product(&a, 1).unwrap();
        assert_eq!(order_type(&p), 4);
        assert_eq!(p.labels_in_order(), ["(0,0)", "(1,0)", "(2,0)", "(3,0)"]);
    }

    #[test]
    fn product_order_type_multiplies() {
        let a = numeric_order(5);
        for d in 0..=5 {
            assert_eq!(order_type(&canonical_product(&a, d).unwrap()), 5 * d);
        }
    }

    #[test]
    fn product_rejects_oversized_segment() {
        let a = numeric_order(2);
        assert_eq!(
            canonical_product(&a, 3).unwrap_err(),
            OrderError::BadBound { d: 3, size: 2 }
        );
    }

    #[test]
    fn product_positions_match_comparator_sort() {
        // Closed-form pair index against a comparator-based sort.
        for n in [1usize, 2, 7, 30] {
            let a = numeric_order(n);
            for d in [1usize, n / 2, n] {
                let p = canonical_product(&a, d).unwrap();
                let mut pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|x| (0..d).map(move |y| (x, y))).collect();
                pairs.sort_by(|&x, &y| canonical_pair_cmp(x, y));
                let by_formula: Vec<&str> = p.labels_in_order().into_iter().collect();
                let by_cmp: Vec<String> =
                    pairs.iter().map(|&(x, y)| format!("({x},{y})")).collect();
                assert_eq!(by_formula, by_cmp);
            }
        }
    }

    #[test]
    fn wellorder_json_roundtrip() {
        let w = WellOrder::new(dom(&["x", "y", "z"]), vec![2, 0, 1]).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"labels":["x","y","z"],"position":[2,0,1]}"#);
        let back: WellOrder = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        assert!(
            serde_json::from_str::<WellOrder>(r#"{"labels":["x","y"],"position":[0,0]}"#).is_err()
        );
    }
}
