//! Coherent families and the coherent-limit counterexample demonstrator.
//!
//! A coherent family assigns to each position `a` of a well-order a
//! function on the initial segment `(#<=a)`, such that later functions
//! restrict to earlier ones. The limit is the diagonal `F[a] = f_a[a]`.
//! For finite orders the limit is trivially the top function; the
//! interesting behaviour lives at order type omega, where a sub-theory
//! given by admissibility predicates can admit every finite stage while
//! rejecting the limit. The step family against the eventually-zero
//! sub-theory is the canonical counterexample.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::order::WellOrder;

/// Default number of diagonal entries probed when classifying limits.
pub const DEFAULT_PROBE_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoherentError {
    #[error("not coherent: funcs[{a}] and funcs[{b}] differ at position {position}")]
    NotCoherent { a: usize, b: usize, position: usize },
    #[error("diagonal does not stabilize within probe bound {0}")]
    Unclassifiable(usize),
    #[error("malformed family: {0}")]
    Malformed(String),
}

/// A coherent family over a finite well-order: one value list of length
/// `a + 1` per position `a`, indexed by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCoherentFamily {
    order: WellOrder,
    funcs: Vec<Vec<u32>>,
}

impl FiniteCoherentFamily {
    pub fn new(order: WellOrder, funcs: Vec<Vec<u32>>) -> Result<Self, CoherentError> {
        if funcs.len() != order.size() {
            return Err(CoherentError::Malformed(format!(
                "expected {} stage functions, got {}",
                order.size(),
                funcs.len()
            )));
        }
        for (a, f) in funcs.iter().enumerate() {
            if f.len() != a + 1 {
                return Err(CoherentError::Malformed(format!(
                    "funcs[{a}] has length {}, expected {}",
                    f.len(),
                    a + 1
                )));
            }
        }
        Ok(FiniteCoherentFamily { order, funcs })
    }

    pub fn order(&self) -> &WellOrder {
        &self.order
    }

    pub fn funcs(&self) -> &[Vec<u32>] {
        &self.funcs
    }

    /// Ok iff every later stage restricts to every earlier one; the first
    /// violation in `(a, b, position)` lexicographic order otherwise.
    pub fn check_coherent(&self) -> Result<(), CoherentError> {
        for a in 0..self.funcs.len() {
            for b in 0..a {
                for position in 0..=b {
                    if self.funcs[a][position] != self.funcs[b][position] {
                        return Err(CoherentError::NotCoherent { a, b, position });
                    }
                }
            }
        }
        Ok(())
    }

    /// The diagonal `F[a] = funcs[a][a]`. For a finite order this equals
    /// the top stage function, which is asserted as a postcondition.
    pub fn limit(&self) -> Result<Vec<u32>, CoherentError> {
        self.check_coherent()?;
        let diagonal: Vec<u32> = (0..self.funcs.len()).map(|a| self.funcs[a][a]).collect();
        if let Some(top) = self.funcs.last() {
            assert_eq!(
                &diagonal, top,
                "finite coherent limit must be the top stage"
            );
        }
        Ok(diagonal)
    }
}

impl Serialize for FiniteCoherentFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            order: &'a WellOrder,
            funcs: &'a [Vec<u32>],
        }
        Raw {
            order: &self.order,
            funcs: &self.funcs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteCoherentFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: WellOrder,
            funcs: Vec<Vec<u32>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        FiniteCoherentFamily::new(raw.order, raw.funcs).map_err(D::Error::custom)
    }
}

/// An eventually-constant binary sequence: a finite prefix followed by a
/// constant tail. Canonical form: the prefix never ends in the tail bit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvConstSeq {
    prefix: Vec<u8>,
    tail: u8,
}

impl EvConstSeq {
    /// Normalizes to canonical form; bits must be 0 or 1.
    pub fn new(mut prefix: Vec<u8>, tail: u8) -> Self {
        assert!(tail <= 1 && prefix.iter().all(|&b| b <= 1), "bits only");
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        EvConstSeq { prefix, tail }
    }

    pub fn constant(bit: u8) -> Self {
        EvConstSeq::new(Vec::new(), bit)
    }

    pub fn prefix(&self) -> &[u8] {
        &self.prefix
    }

    pub fn tail(&self) -> u8 {
        self.tail
    }

    /// Value at position `n`.
    pub fn at(&self, n: usize) -> u8 {
        self.prefix.get(n).copied().unwrap_or(self.tail)
    }
}

/// A coherent family over order type omega, described finitely.
#[derive(Clone, Debug)]
pub enum OmegaFamily {
    /// Every stage is constantly `c`.
    Constant(u8),
    /// Stage `n` is 1 on every position of its domain `(#<=n)`: the
    /// cumulative indicator whose stages are all finitely supported when
    /// extended by zero, while the diagonal is constantly 1.
    Step,
    /// Stage `n` is the restriction of `seqs[min(n, len-1)]` to `(#<=n)`;
    /// the last sequence repeats from there on.
    Explicit(Vec<EvConstSeq>),
}

impl OmegaFamily {
    /// Builds an explicit family, validating coherence of the given
    /// sequences (exact: the sequences are finite descriptions).
    pub fn explicit(seqs: Vec<EvConstSeq>) -> Result<Self, CoherentError> {
        if seqs.is_empty() {
            return Err(CoherentError::Malformed(
                "explicit family needs at least one sequence".into(),
            ));
        }
        for n in 0..seqs.len() - 1 {
            for position in 0..=n {
                if seqs[n + 1].at(position) != seqs[n].at(position) {
                    return Err(CoherentError::NotCoherent {
                        a: n + 1,
                        b: n,
                        position,
                    });
                }
            }
        }
        Ok(OmegaFamily::Explicit(seqs))
    }

    /// The diagonal entry `f_n[n]`.
    pub fn diagonal_at(&self, n: usize) -> u8 {
        match self {
            OmegaFamily::Constant(c) => *c,
            OmegaFamily::Step => 1,
            OmegaFamily::Explicit(seqs) => seqs[n.min(seqs.len() - 1)].at(n),
        }
    }

    /// Index from which the diagonal is provably constant.
    fn stabilization_index(&self) -> usize {
        match self {
            OmegaFamily::Constant(_) | OmegaFamily::Step => 0,
            OmegaFamily::Explicit(seqs) => {
                let last = seqs.last().expect("explicit families are nonempty");
                (seqs.len() - 1).max(last.prefix().len())
            }
        }
    }
}

/// The limit of an omega family: its diagonal, as an eventually-constant
/// sequence. Fails with [`CoherentError::Unclassifiable`] when the diagonal
/// is not provably constant within the probe bound.
pub fn omega_limit(fam: &OmegaFamily, probe_bound: usize) -> Result<EvConstSeq, CoherentError> {
    match fam {
        OmegaFamily::Constant(c) => Ok(EvConstSeq::constant(*c)),
        OmegaFamily::Step => Ok(EvConstSeq::constant(1)),
        OmegaFamily::Explicit(_) => {
            let n0 = fam.stabilization_index();
            if n0 > probe_bound {
                return Err(CoherentError::Unclassifiable(probe_bound));
            }
            let prefix: Vec<u8> = (0..n0).map(|n| fam.diagonal_at(n)).collect();
            Ok(EvConstSeq::new(prefix, fam.diagonal_at(n0)))
        }
    }
}

/// Outcome of checking a family against a sub-theory given by
/// admissibility predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVerdict {
    /// Every probed finite stage was admissible.
    pub stages_admissible: bool,
    /// The first rejected stage, if any.
    pub first_rejected_stage: Option<usize>,
    /// The limit is admissible.
    pub limit_admissible: bool,
}

impl LambdaVerdict {
    /// All finite stages pass but the limit fails: the coherent-limit
    /// axiom fails for this sub-theory.
    pub fn is_counterexample(&self) -> bool {
        self.stages_admissible && !self.limit_admissible
    }
}

/// Checks every finite stage (up to the probe bound) against
/// `restriction_pred` and the limit against `lambda_pred`.
pub fn lambda_check<L, R>(
    fam: &OmegaFamily,
    lambda_pred: L,
    restriction_pred: R,
    probe_bound: usize,
) -> Result<LambdaVerdict, CoherentError>
where
    L: Fn(&EvConstSeq) -> bool,
    R: Fn(&[u8]) -> bool,
{
    let limit = omega_limit(fam, probe_bound)?;
    // Coherence makes stage n the length-(n+1) prefix of the diagonal, so
    // the stages can share one growing buffer.
    let mut stage: Vec<u8> = Vec::with_capacity(probe_bound);
    let mut stages_admissible = true;
    let mut first_rejected_stage = None;
    for n in 0..probe_bound {
        stage.push(fam.diagonal_at(n));
        if !restriction_pred(&stage) {
            stages_admissible = false;
            first_rejected_stage = Some(n);
            break;
        }
    }
    Ok(LambdaVerdict {
        stages_admissible,
        first_rejected_stage,
        limit_admissible: lambda_pred(&limit),
    })
}

/// The built-in sub-theories exposed by the command-line front end.
pub mod lambdas {
    use super::EvConstSeq;

    /// Admissibility of a limit sequence.
    pub type LimitPred = fn(&EvConstSeq) -> bool;
    /// Admissibility of a finite stage.
    pub type StagePred = fn(&[u8]) -> bool;

    /// Eventually-zero sequences: the limit predicate accepts tail 0; every
    /// finite stage extends to an eventually-zero sequence, so the stage
    /// predicate is constantly true.
    pub fn eventually_zero() -> (LimitPred, StagePred) {
        (|seq| seq.tail() == 0, |_| true)
    }

    /// Eventually-constant sequences: every representable limit qualifies.
    pub fn eventually_constant() -> (LimitPred, StagePred) {
        (|_| true, |_| true)
    }

    /// The maximal sub-theory: everything is admissible.
    pub fn all() -> (LimitPred, StagePred) {
        (|_| true, |_| true)
    }
}
