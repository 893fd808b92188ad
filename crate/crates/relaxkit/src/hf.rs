//! The Ackermann-coded hereditarily finite universe.
//!
//! Every natural number is the code of a hereditarily finite set: `m` is a
//! member of `n` exactly when bit `m` of `n` is 1. This realizes the
//! universal membership pairing at finite rank; [`decode`]/[`encode`] are
//! the canonical order-preserving isomorphism between codes and the finite
//! sets of codes, and membership strictly decreases the beth rank.
//!
//! Codes are arbitrary-precision, guarded by a configurable bit budget:
//! operations that would exceed it fail loudly instead of truncating.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use crate::domain::DEFAULT_POWERSET_BOUND;

/// Default bit budget for code growth: 2^20 bits.
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfError {
    #[error("duplicate element {0}")]
    DuplicateElement(HfCode),
    #[error("code too large: needs more than {budget} bits")]
    CodeTooLarge { budget: u64 },
    #[error("domain too large: {size} elements exceeds bound {bound}")]
    DomainTooLarge { size: usize, bound: usize },
    #[error("beth tower exceeds the bit budget at level {k}")]
    BudgetExceeded { k: u64 },
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
}

/// An arbitrary-precision natural read as the Ackermann code of a
/// hereditarily finite set. Every natural is a valid code.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HfCode(BigUint);

impl HfCode {
    pub fn zero() -> Self {
        HfCode(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn bit_len(&self) -> u64 {
        self.0.bits()
    }

    /// The code as a bit position, when it fits.
    fn as_position(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl From<u64> for HfCode {
    fn from(n: u64) -> Self {
        HfCode(BigUint::from(n))
    }
}

impl From<BigUint> for HfCode {
    fn from(n: BigUint) -> Self {
        HfCode(n)
    }
}

impl fmt::Display for HfCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for HfCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HfCode({})", self.0)
    }
}

impl FromStr for HfCode {
    type Err = HfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigUint>()
            .map(HfCode)
            .map_err(|e| HfError::Parse {
                at: 0,
                msg: e.to_string(),
            })
    }
}

/// Ackermann membership: yes iff bit `m` of `n` is 1.
pub fn mem(m: &HfCode, n: &HfCode) -> bool {
    match m.as_position() {
        Some(i) => n.0.bit(i),
        None => false, // n has fewer than 2^64 bits
    }
}

/// The set bits of `n`, ascending.
pub fn bit_positions(n: &HfCode) -> Vec<u64> {
    let mut out = Vec::new();
    for (word, digit) in n.0.iter_u64_digits().enumerate() {
        let mut d = digit;
        while d != 0 {
            out.push(word as u64 * 64 + d.trailing_zeros() as u64);
            d &= d - 1;
        }
    }
    out
}

/// The elements of `n`, in ascending code order.
pub fn decode(n: &HfCode) -> Vec<HfCode> {
    bit_positions(n).into_iter().map(HfCode::from).collect()
}

/// Codes the set with the given distinct elements: the sum of `2^e` over
/// them. Inverse of [`decode`].
pub fn encode(elements: &[HfCode], bit_budget: u64) -> Result<HfCode, HfError> {
    let mut positions = Vec::with_capacity(elements.len());
    for e in elements {
        match e.as_position() {
            Some(p) if p < bit_budget => positions.push(p),
            _ => return Err(HfError::CodeTooLarge { budget: bit_budget }),
        }
    }
    let mut sorted = positions.clone();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(HfError::DuplicateElement(HfCode::from(pair[0])));
        }
    }
    let mut code = BigUint::zero();
    for p in positions {
        code.set_bit(p, true);
    }
    Ok(HfCode(code))
}

/// The union of the elements of `n`: since an element's bits are its own
/// members, this is the bitwise or of the element codes.
pub fn hf_union(n: &HfCode) -> HfCode {
    let mut out = BigUint::zero();
    for p in bit_positions(n) {
        out |= BigUint::from(p);
    }
    HfCode(out)
}

/// The set of all subsets of `n`.
pub fn hf_powerset(n: &HfCode, bound: usize, bit_budget: u64) -> Result<HfCode, HfError> {
    let positions = bit_positions(n);
    if positions.len() > bound.min(63) {
        return Err(HfError::DomainTooLarge {
            size: positions.len(),
            bound: bound.min(63),
        });
    }
    // The full subset codes back to n itself, so the result needs n+1 bits.
    if n.0 >= BigUint::from(bit_budget) {
        return Err(HfError::CodeTooLarge { budget: bit_budget });
    }
    let mut code = BigUint::zero();
    for mask in 0u64..1 << positions.len() {
        let subset: u64 = positions
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| 1u64 << p)
            .sum();
        code.set_bit(subset, true);
    }
    Ok(HfCode(code))
}

/// The elements of `n` satisfying `pred`.
pub fn hf_separation<P: Fn(&HfCode) -> bool>(n: &HfCode, pred: P) -> HfCode {
    let mut code = BigUint::zero();
    for p in bit_positions(n) {
        if pred(&HfCode::from(p)) {
            code.set_bit(p, true);
        }
    }
    HfCode(code)
}

/// The image of the elements of `n` under `f`, duplicates merged.
pub fn hf_replacement<F: Fn(&HfCode) -> HfCode>(
    n: &HfCode,
    f: F,
    bit_budget: u64,
) -> Result<HfCode, HfError> {
    let mut code = BigUint::zero();
    for p in bit_positions(n) {
        let img = f(&HfCode::from(p));
        match img.as_position() {
            Some(q) if q < bit_budget => code.set_bit(q, true),
            _ => return Err(HfError::CodeTooLarge { budget: bit_budget }),
        }
    }
    Ok(HfCode(code))
}

/// The least natural not in `n`; its membership in `n` is always no.
pub fn hf_choice(n: &HfCode) -> HfCode {
    let mut base = 0u64;
    for digit in n.0.iter_u64_digits() {
        if digit != u64::MAX {
            return HfCode::from(base + digit.trailing_ones() as u64);
        }
        base += 64;
    }
    HfCode::from(base)
}

/// The set of all codes reachable by iterated decoding from the elements
/// of `n`: the smallest transitive set containing the elements of `n`.
pub fn transitive_closure(n: &HfCode) -> HfCode {
    let mut closure: BTreeSet<u64> = BTreeSet::new();
    let mut queue: Vec<u64> = bit_positions(n);
    while let Some(p) = queue.pop() {
        if !closure.insert(p) {
            continue;
        }
        // Members of p are the set bits of the number p.
        let mut d = p;
        while d != 0 {
            queue.push(d.trailing_zeros() as u64);
            d &= d - 1;
        }
    }
    let mut code = BigUint::zero();
    for p in closure {
        code.set_bit(p, true);
    }
    HfCode(code)
}

/// A finite miniature of the iterated-powerset tower: `B[0] = base`,
/// `B[k+1] = 2^B[k]`, refusing values whose bit length would exceed the
/// budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BethTower {
    base: u64,
    bit_budget: u64,
}

impl BethTower {
    /// A tower with the given positive base and the default bit budget.
    pub fn new(base: u64) -> Self {
        BethTower::with_budget(base, DEFAULT_BIT_BUDGET)
    }

    pub fn with_budget(base: u64, bit_budget: u64) -> Self {
        assert!(base >= 1, "beth base must be positive");
        BethTower { base, bit_budget }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// `B[k]`, or [`HfError::BudgetExceeded`] if it does not fit the budget.
    pub fn value(&self, k: u64) -> Result<BigUint, HfError> {
        let mut b = BigUint::from(self.base);
        for step in 0..k {
            let shift = match u64::try_from(&b) {
                Ok(s) if s < self.bit_budget => s,
                _ => return Err(HfError::BudgetExceeded { k: step + 1 }),
            };
            b = BigUint::one() << shift;
        }
        Ok(b)
    }

    /// The least `k` with `n < B[k]`.
    pub fn rank(&self, n: &HfCode) -> Result<u64, HfError> {
        let mut k = 0u64;
        let mut b = BigUint::from(self.base);
        loop {
            if n.0 < b {
                return Ok(k);
            }
            let shift = match u64::try_from(&b) {
                Ok(s) if s < self.bit_budget => s,
                _ => return Err(HfError::BudgetExceeded { k: k + 1 }),
            };
            b = BigUint::one() << shift;
            k += 1;
        }
    }

    /// Rank of `n` read as a binary function: 0 for the empty set, else the
    /// sup (here: max) of the ranks of its elements.
    pub fn rank_fn(&self, n: &HfCode) -> Result<u64, HfError> {
        let mut best = 0u64;
        for p in bit_positions(n) {
            best = best.max(self.rank(&HfCode::from(p))?);
        }
        Ok(best)
    }
}

/// Status of one checked axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

/// The translated axioms checked by [`zfc_check`], in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZfcAxiom {
    WellFounded,
    Extensionality,
    Union,
    Powerset,
    Separation,
    Replacement,
    Choice,
    Infinity,
}

impl ZfcAxiom {
    pub const ALL: [ZfcAxiom; 8] = [
        ZfcAxiom::WellFounded,
        ZfcAxiom::Extensionality,
        ZfcAxiom::Union,
        ZfcAxiom::Powerset,
        ZfcAxiom::Separation,
        ZfcAxiom::Replacement,
        ZfcAxiom::Choice,
        ZfcAxiom::Infinity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ZfcAxiom::WellFounded => "well-founded",
            ZfcAxiom::Extensionality => "extensionality",
            ZfcAxiom::Union => "union",
            ZfcAxiom::Powerset => "powerset",
            ZfcAxiom::Separation => "separation",
            ZfcAxiom::Replacement => "replacement",
            ZfcAxiom::Choice => "choice",
            ZfcAxiom::Infinity => "infinity",
        }
    }
}

/// Result of the axiom battery: one status per axiom, in fixed order.
#[derive(Debug, Clone)]
pub struct ZfcReport {
    pub entries: Vec<(ZfcAxiom, AxiomStatus)>,
}

impl ZfcReport {
    /// True when no checked axiom failed (skips do not count as failures).
    pub fn passed(&self) -> bool {
        !self
            .entries
            .iter()
            .any(|(_, s)| matches!(s, AxiomStatus::Fail(_)))
    }
}

impl fmt::Display for ZfcReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (axiom, status) in &self.entries {
            match status {
                AxiomStatus::Pass => writeln!(f, "{}=pass", axiom.name())?,
                AxiomStatus::Fail(w) => writeln!(f, "{}=fail: {w}", axiom.name())?,
                AxiomStatus::Skipped(r) => writeln!(f, "{}=skipped: {r}", axiom.name())?,
            }
        }
        Ok(())
    }
}

/// Runs the translated ZFC axiom battery over all codes below `bound`,
/// using seeded pseudo-random predicates and maps for separation and
/// replacement. Infinity is reported as skipped: the finite universe is a
/// model of ZFC minus Infinity, and failing it would misreport that.
pub fn zfc_check(bound: u64, seed: u64) -> ZfcReport {
    assert!(bound >= 2, "bound must be at least 2");
    let tower = BethTower::new(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = vec![
        (
            ZfcAxiom::WellFounded,
            check_well_founded_axiom(bound, &tower),
        ),
        (ZfcAxiom::Extensionality, check_extensionality(bound)),
        (ZfcAxiom::Union, check_union(bound)),
        (ZfcAxiom::Powerset, check_powerset(bound)),
        (ZfcAxiom::Separation, check_separation(bound, &mut rng)),
        (ZfcAxiom::Replacement, check_replacement(bound, &mut rng)),
        (ZfcAxiom::Choice, check_choice(bound)),
        (
            ZfcAxiom::Infinity,
            AxiomStatus::Skipped("no finite model".into()),
        ),
    ];

    ZfcReport { entries }
}

fn check_well_founded_axiom(bound: u64, tower: &BethTower) -> AxiomStatus {
    for n in 0..bound {
        let code = HfCode::from(n);
        let rn = tower.rank(&code).expect("small code ranks fit the budget");
        for p in bit_positions(&code) {
            let rp = tower.rank(&HfCode::from(p)).expect("element rank fits");
            if rp >= rn {
                return AxiomStatus::Fail(format!(
                    "mem({p},{n}) but rank({p})={rp} >= rank({n})={rn}"
                ));
            }
        }
    }
    AxiomStatus::Pass
}

fn check_extensionality(bound: u64) -> AxiomStatus {
    for n in 0..bound {
        let code = HfCode::from(n);
        let back =
            encode(&decode(&code), DEFAULT_BIT_BUDGET).expect("decoded elements are distinct");
        if back != code {
            return AxiomStatus::Fail(format!("encode(decode({n})) = {back}"));
        }
    }
    AxiomStatus::Pass
}

fn check_union(bound: u64) -> AxiomStatus {
    for n in 0..bound {
        let code = HfCode::from(n);
        let got: Vec<u64> = bit_positions(&hf_union(&code));
        let mut want: BTreeSet<u64> = BTreeSet::new();
        for e in bit_positions(&code) {
            let mut d = e;
            while d != 0 {
                want.insert(d.trailing_zeros() as u64);
                d &= d - 1;
            }
        }
        if got != want.into_iter().collect::<Vec<u64>>() {
            return AxiomStatus::Fail(format!("union of {n} disagrees with direct scan"));
        }
    }
    AxiomStatus::Pass
}

fn check_powerset(bound: u64) -> AxiomStatus {
    for n in 0..bound {
        let code = HfCode::from(n);
        let pow = match hf_powerset(&code, DEFAULT_POWERSET_BOUND, DEFAULT_BIT_BUDGET) {
            Ok(p) => p,
            Err(e) => return AxiomStatus::Fail(format!("powerset of {n}: {e}")),
        };
        let members = bit_positions(&pow);
        if members.len() != 1 << bit_positions(&code).len() {
            return AxiomStatus::Fail(format!("powerset of {n} has {} members", members.len()));
        }
        for s in members {
            if s & n != s {
                return AxiomStatus::Fail(format!("powerset of {n} contains non-subset {s}"));
            }
        }
    }
    AxiomStatus::Pass
}

fn check_separation(bound: u64, rng: &mut ChaCha8Rng) -> AxiomStatus {
    for _ in 0..4 {
        let mul: u64 = rng.gen::<u64>() | 1;
        let xor: u64 = rng.gen();
        let pred = |e: &HfCode| -> bool {
            let p = e.as_position().unwrap_or(0);
            (p.wrapping_mul(mul) ^ xor).count_ones() % 2 == 0
        };
        for n in 0..bound {
            let code = HfCode::from(n);
            let got = bit_positions(&hf_separation(&code, pred));
            let want: Vec<u64> = bit_positions(&code)
                .into_iter()
                .filter(|&p| pred(&HfCode::from(p)))
                .collect();
            if got != want {
                return AxiomStatus::Fail(format!("separation on {n} disagrees"));
            }
        }
    }
    AxiomStatus::Pass
}

fn check_replacement(bound: u64, rng: &mut ChaCha8Rng) -> AxiomStatus {
    for _ in 0..4 {
        let a: u64 = rng.gen_range(1..1 << 16);
        let b: u64 = rng.gen_range(0..1 << 16);
        let modulus: u64 = rng.gen_range(2..1 << 16);
        let f = |e: &HfCode| -> HfCode {
            let p = e.as_position().unwrap_or(0);
            HfCode::from((p.wrapping_mul(a).wrapping_add(b)) % modulus)
        };
        for n in 0..bound {
            let code = HfCode::from(n);
            let got = match hf_replacement(&code, f, DEFAULT_BIT_BUDGET) {
                Ok(r) => bit_positions(&r),
                Err(e) => return AxiomStatus::Fail(format!("replacement on {n}: {e}")),
            };
            let want: BTreeSet<u64> = bit_positions(&code)
                .into_iter()
                .map(|p| f(&HfCode::from(p)).as_position().unwrap())
                .collect();
            if got != want.into_iter().collect::<Vec<u64>>() {
                return AxiomStatus::Fail(format!("replacement image of {n} disagrees"));
            }
        }
    }
    AxiomStatus::Pass
}

fn check_choice(bound: u64) -> AxiomStatus {
    for n in 0..bound {
        let code = HfCode::from(n);
        let c = hf_choice(&code);
        if mem(&c, &code) {
            return AxiomStatus::Fail(format!("choice({n}) = {c} is a member"));
        }
        let c_pos = c.as_position().unwrap();
        for p in 0..c_pos {
            if !mem(&HfCode::from(p), &code) {
                return AxiomStatus::Fail(format!("choice({n}) = {c} is not least"));
            }
        }
    }
    AxiomStatus::Pass
}

/// Parses a set literal per the grammar `set := '{' (set (',' set)*)? '}'`,
/// whitespace ignored, and returns its Ackermann code.
pub fn parse_set_literal(s: &str, bit_budget: u64) -> Result<HfCode, HfError> {
    let mut p = LiteralParser {
        bytes: s.as_bytes(),
        at: 0,
        bit_budget,
    };
    p.skip_ws();
    let code = p.set()?;
    p.skip_ws();
    if p.at != p.bytes.len() {
        return Err(HfError::Parse {
            at: p.at,
            msg: "trailing input".into(),
        });
    }
    Ok(code)
}

struct LiteralParser<'a> {
    bytes: &'a [u8],
    at: usize,
    bit_budget: u64,
}

impl LiteralParser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.at), Some(b) if b.is_ascii_whitespace()) {
            self.at += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), HfError> {
        if self.bytes.get(self.at) == Some(&b) {
            self.at += 1;
            Ok(())
        } else {
            Err(HfError::Parse {
                at: self.at,
                msg: format!("expected '{}'", b as char),
            })
        }
    }

    fn set(&mut self) -> Result<HfCode, HfError> {
        self.expect(b'{')?;
        self.skip_ws();
        let mut elements = Vec::new();
        if self.bytes.get(self.at) != Some(&b'}') {
            loop {
                elements.push(self.set()?);
                self.skip_ws();
                if self.bytes.get(self.at) == Some(&b',') {
                    self.at += 1;
                    self.skip_ws();
                } else {
                    break;
                }
            }
        }
        self.expect(b'}')?;
        encode(&elements, self.bit_budget)
    }
}

/// Renders a code as a set literal, elements in ascending code order.
pub fn set_literal(n: &HfCode) -> String {
    let mut out = String::new();
    write_literal(n, &mut out);
    out
}

fn write_literal(n: &HfCode, out: &mut String) {
    out.push('{');
    for (i, p) in bit_positions(n).into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_literal(&HfCode::from(p), out);
    }
    out.push('}');
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(n: u64) -> HfCode {
        HfCode::from(n)
    }

    #[test]
    fn membership_is_bit_test() {
        assert!(mem(&hf(0), &hf(1)));
        assert!(!mem(&hf(1), &hf(1)));
        for k in 0..10 {
            assert!(!mem(&hf(k), &hf(0)));
        }
    }

    #[test]
    fn decode_examples() {
        assert!(decode(&hf(0)).is_empty());
        assert_eq!(decode(&hf(3)), [hf(0), hf(1)]);
        assert_eq!(decode(&hf(5)), [hf(0), hf(2)]);
        assert_eq!(encode(&[hf(0), hf(1)], DEFAULT_BIT_BUDGET).unwrap(), hf(3));
    }

    #[test]
    fn encode_rejects_duplicates() {
        let err = encode(&[hf(2), hf(2)], DEFAULT_BIT_BUDGET).unwrap_err();
        assert_eq!(err, HfError::DuplicateElement(hf(2)));
    }

    #[test]
    fn encode_respects_budget() {
        let err = encode(&[hf(16)], 16).unwrap_err();
        assert_eq!(err, HfError::CodeTooLarge { budget: 16 });
        assert!(encode(&[hf(15)], 16).is_ok());
    }

    #[test]
    fn roundtrip_below_two_to_ten() {
        for n in 0..1024u64 {
            let code = hf(n);
            assert_eq!(encode(&decode(&code), DEFAULT_BIT_BUDGET).unwrap(), code);
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(hf_union(&hf(0)), hf(0));
        assert_eq!(hf_union(&hf(3)), hf(1));
        let singleton = encode(&[hf(3)], DEFAULT_BIT_BUDGET).unwrap();
        assert_eq!(hf_union(&singleton), hf(3));
    }

    #[test]
    fn powerset_examples() {
        let pow = |n: u64| hf_powerset(&hf(n), DEFAULT_POWERSET_BOUND, DEFAULT_BIT_BUDGET).unwrap();
        assert_eq!(pow(0), hf(1));
        assert_eq!(pow(1), hf(3));
        for n in 0..256u64 {
            let k = bit_positions(&hf(n)).len();
            assert_eq!(bit_positions(&pow(n)).len(), 1 << k);
        }
    }

    #[test]
    fn separation_examples() {
        assert_eq!(hf_separation(&hf(3), |_| false), hf(0));
        assert_eq!(hf_separation(&hf(3), |_| true), hf(3));
        assert_eq!(hf_separation(&hf(3), |e| *e == hf(0)), hf(1));
    }

    #[test]
    fn replacement_examples() {
        let id = hf_replacement(&hf(3), |e| e.clone(), DEFAULT_BIT_BUDGET).unwrap();
        assert_eq!(id, hf(3));
        let powed = hf_replacement(
            &hf(3),
            |e| hf_powerset(e, DEFAULT_POWERSET_BOUND, DEFAULT_BIT_BUDGET).unwrap(),
            DEFAULT_BIT_BUDGET,
        )
        .unwrap();
        assert_eq!(powed, hf(10)); // images 1 and 3
        let constant = hf_replacement(&hf(3), |_| hf(0), DEFAULT_BIT_BUDGET).unwrap();
        assert_eq!(constant, hf(1));
    }

    #[test]
    fn choice_examples() {
        assert_eq!(hf_choice(&hf(0)), hf(0));
        assert_eq!(hf_choice(&hf(3)), hf(2));
        assert_eq!(hf_choice(&hf(5)), hf(1));
        for n in 0..512u64 {
            assert!(!mem(&hf_choice(&hf(n)), &hf(n)));
        }
    }

    #[test]
    fn transitive_closure_examples() {
        assert_eq!(transitive_closure(&hf(0)), hf(0));
        assert_eq!(transitive_closure(&hf(2)), hf(3));
        for n in 0..4096u64 {
            let tc = transitive_closure(&hf(n));
            // Transitive: every element's elements are elements.
            for p in bit_positions(&tc) {
                for q in bit_positions(&hf(p)) {
                    assert!(mem(&hf(q), &tc));
                }
            }
        }
    }

    #[test]
    fn transitive_closure_is_least_fixpoint() {
        // Against a naive re-scan-to-fixpoint oracle.
        for n in 0..4096u64 {
            let mut set: BTreeSet<u64> = bit_positions(&hf(n)).into_iter().collect();
            loop {
                let mut grown = set.clone();
                for &e in &set {
                    grown.extend(bit_positions(&hf(e)));
                }
                if grown == set {
                    break;
                }
                set = grown;
            }
            assert_eq!(
                bit_positions(&transitive_closure(&hf(n))),
                set.into_iter().collect::<Vec<u64>>()
            );
        }
    }

    #[test]
    fn beth_tower_base_one() {
        let tower = BethTower::new(1);
        let values: Vec<BigUint> = (0..5).map(|k| tower.value(k).unwrap()).collect();
        let expected: Vec<BigUint> = [1u64, 2, 4, 16, 65536]
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert_eq!(values, expected);
        assert_eq!(tower.value(5).unwrap().bits(), 65537);
        assert_eq!(
            tower.value(6).unwrap_err(),
            HfError::BudgetExceeded { k: 6 }
        );
    }

    #[test]
    fn beth_tower_base_two() {
        let tower = BethTower::new(2);
        let values: Vec<BigUint> = (0..4).map(|k| tower.value(k).unwrap()).collect();
        let expected: Vec<BigUint> = [2u64, 4, 16, 65536]
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert_eq!(values, expected);
    }

    #[test]
    fn rank_examples() {
        let tower = BethTower::new(1);
        let rank = |n: u64| tower.rank(&hf(n)).unwrap();
        assert_eq!(rank(0), 0);
        assert_eq!(rank(1), 1);
        assert_eq!(rank(2), 2);
        assert_eq!(rank(3), 2);
        for n in 4..16 {
            assert_eq!(rank(n), 3);
        }
        // Non-decreasing in n.
        let mut prev = 0;
        for n in 0..1000 {
            let r = rank(n);
            assert!(r >= prev);
            prev = r;
        }
    }

    #[test]
    fn rank_fn_examples() {
        let tower = BethTower::new(1);
        assert_eq!(tower.rank_fn(&hf(0)).unwrap(), 0);
        assert_eq!(tower.rank_fn(&hf(3)).unwrap(), 1);
        assert_eq!(tower.rank_fn(&hf(4)).unwrap(), 2);
    }

    #[test]
    fn rank_law_small() {
        let tower = BethTower::new(1);
        for n in 1..2048u64 {
            assert_eq!(
                tower.rank_fn(&hf(n)).unwrap(),
                tower.rank(&hf(n)).unwrap() - 1,
                "rank law at {n}"
            );
        }
    }

    #[test]
    fn zfc_check_tiny_bound_passes() {
        let report = zfc_check(2, 0);
        assert!(report.passed());
        let infinity = report
            .entries
            .iter()
            .find(|(a, _)| *a == ZfcAxiom::Infinity)
            .unwrap();
        assert!(matches!(infinity.1, AxiomStatus::Skipped(_)));
    }

    #[test]
    fn literal_roundtrip() {
        assert_eq!(
            parse_set_literal("{{},{{}}}", DEFAULT_BIT_BUDGET).unwrap(),
            hf(3)
        );
        assert_eq!(set_literal(&hf(3)), "{{},{{}}}");
        assert_eq!(set_literal(&hf(0)), "{}");
        assert_eq!(
            parse_set_literal(" { { } , { { } } } ", DEFAULT_BIT_BUDGET).unwrap(),
            hf(3)
        );
        for n in 0..512u64 {
            let lit = set_literal(&hf(n));
            assert_eq!(parse_set_literal(&lit, DEFAULT_BIT_BUDGET).unwrap(), hf(n));
        }
    }

    #[test]
    fn literal_rejects_duplicates_and_garbage() {
        assert_eq!(
            parse_set_literal("{{},{}}", DEFAULT_BIT_BUDGET).unwrap_err(),
            HfError::DuplicateElement(hf(0))
        );
        assert!(parse_set_literal("{", DEFAULT_BIT_BUDGET).is_err());
        assert!(parse_set_literal("{}}", DEFAULT_BIT_BUDGET).is_err());
        assert!(parse_set_literal("x", DEFAULT_BIT_BUDGET).is_err());
    }

    // ---- nested-tree oracle for the set operations ----

    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
    struct Tree(Vec<Tree>);

    fn tree_of(n: u64) -> Tree {
        let mut children: Vec<Tree> = bit_positions(&hf(n)).into_iter().map(tree_of).collect();
        children.sort();
        Tree(children)
    }

    fn code_of(t: &Tree) -> BigUint {
        let mut code = BigUint::zero();
        for c in &t.0 {
            let p = u64::try_from(&code_of(c)).expect("child codes stay small in these tests");
            code.set_bit(p, true);
        }
        code
    }

    fn hf_of_tree(t: &Tree) -> HfCode {
        HfCode::from(code_of(t))
    }

    #[test]
    fn tree_oracle_agrees_on_codes() {
        for n in 0..4096u64 {
            assert_eq!(code_of(&tree_of(n)), BigUint::from(n));
        }
    }

    #[test]
    fn set_operations_agree_with_tree_oracle() {
        for n in 0..4096u64 {
            let t = tree_of(n);

            let mut union_children: Vec<Tree> =
                t.0.iter().flat_map(|c| c.0.iter().cloned()).collect();
            union_children.sort();
            union_children.dedup();
            assert_eq!(
                hf_union(&hf(n)),
                hf_of_tree(&Tree(union_children)),
                "union of {n}"
            );

            let pred = |e: &HfCode| bit_positions(e).len() % 2 == 0;
            let sep_children: Vec<Tree> =
                t.0.iter().filter(|c| c.0.len() % 2 == 0).cloned().collect();
            assert_eq!(
                hf_separation(&hf(n), pred),
                hf_of_tree(&Tree(sep_children)),
                "separation on {n}"
            );

            // f = union, so the image of a child is its grandchildren merged.
            let f = |e: &HfCode| hf_union(e);
            let mut repl_children: Vec<Tree> =
                t.0.iter()
                    .map(|c| {
                        let mut grand: Vec<Tree> =
                            c.0.iter().flat_map(|gc| gc.0.iter().cloned()).collect();
                        grand.sort();
                        grand.dedup();
                        Tree(grand)
                    })
                    .collect();
            repl_children.sort();
            repl_children.dedup();
            assert_eq!(
                hf_replacement(&hf(n), f, DEFAULT_BIT_BUDGET).unwrap(),
                hf_of_tree(&Tree(repl_children)),
                "replacement on {n}"
            );

            if n < 1024 {
                let mut pow_children = Vec::new();
                let k = t.0.len();
                for mask in 0u32..1 << k {
                    let subset: Vec<Tree> =
                        t.0.iter()
                            .enumerate()
                            .filter(|&(i, _)| mask >> i & 1 == 1)
                            .map(|(_, c)| c.clone())
                            .collect();
                    pow_children.push(Tree(subset));
                }
                pow_children.sort();
                pow_children.dedup();
                assert_eq!(
                    hf_powerset(&hf(n), DEFAULT_POWERSET_BOUND, DEFAULT_BIT_BUDGET).unwrap(),
                    hf_of_tree(&Tree(pow_children)),
                    "powerset of {n}"
                );
            }
        }
    }

    #[test]
    fn order_preservation_small() {
        // For m < n the largest differing bit belongs to n.
        for n in 0..2048u64 {
            for m in 0..n {
                let top = 63 - (m ^ n).leading_zeros() as u64;
                assert!(mem(&hf(top), &hf(n)));
            }
        }
    }
}
