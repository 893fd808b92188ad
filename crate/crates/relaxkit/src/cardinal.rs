//! Finite cardinality and Cantor's diagonal as executable checks.

use thiserror::Error;

use crate::domain::{BinFn, FinDomain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CardinalError {
    #[error("function table entry for \"{0}\" is not a binary function on the domain")]
    ShapeMismatch(String),
}

/// Whether an injection `A -> B` exists; for finite domains, exactly when
/// `|A| <= |B|`.
pub fn inj_exists(a: &FinDomain, b: &FinDomain) -> bool {
    a.size() <= b.size()
}

/// The cardinality of a finite domain: the least well-order class admitting
/// an injection from it, which is its size.
pub fn card(a: &FinDomain) -> usize {
    a.size()
}

/// Cantor's diagonal: given a table `p` assigning a binary function on `a`
/// to each element of `a`, returns `h` with `h[x] = not p[x][x]`. The result
/// is never in the image of `p`.
pub fn cantor_diagonal(a: &FinDomain, p: &[BinFn]) -> Result<BinFn, CardinalError> {
    if p.len() != a.size() {
        let at = a.label(p.len().min(a.size().saturating_sub(1)));
        return Err(CardinalError::ShapeMismatch(at.to_owned()));
    }
    let mut bits = Vec::with_capacity(a.size());
    for (i, row) in p.iter().enumerate() {
        if row.domain() != a {
            return Err(CardinalError::ShapeMismatch(a.label(i).to_owned()));
        }
        bits.push(!row.bit(i));
    }
    Ok(BinFn::new(a.clone(), bits).expect("diagonal has one bit per element"))
}
