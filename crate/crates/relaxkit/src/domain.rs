//! Finite logical domains and binary functions.
//!
//! A [`FinDomain`] is an ordered list of pairwise-distinct element labels;
//! equality of elements is label equality, so the equality pairing is
//! decidable by construction. A [`BinFn`] is a yes/no-valued function on a
//! domain, stored as one bit per element in domain order. The powerset of a
//! domain is the enumeration of all binary functions over it.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Default cap on domain size for powerset enumeration (2^20 functions).
pub const DEFAULT_POWERSET_BOUND: usize = 20;

/// Which equivalence-relation axiom a table violates, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqvViolation {
    /// `eqv[x,x]` is no.
    Reflexive(String),
    /// `eqv[x,y]` is yes but `eqv[y,x]` is no.
    Symmetric(String, String),
    /// `eqv[x,y]` and `eqv[y,z]` are yes but `eqv[x,z]` is no.
    Transitive(String, String, String),
}

impl fmt::Display for EqvViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqvViolation::Reflexive(a) => write!(f, "reflexive ({a})"),
            EqvViolation::Symmetric(a, b) => write!(f, "symmetric ({a},{b})"),
            EqvViolation::Transitive(a, b, c) => write!(f, "transitive ({a},{b},{c})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("duplicate label \"{0}\"")]
    DuplicateLabel(String),
    #[error("domain too large: size {size} exceeds bound {bound}")]
    DomainTooLarge { size: usize, bound: usize },
    #[error("not an equivalence relation: {0}")]
    NotEquivalence(EqvViolation),
    #[error("table shape mismatch: expected {expected} rows/columns, got {got}")]
    TableShape { expected: usize, got: usize },
    #[error("bit vector length {got} does not match domain size {expected}")]
    BitLength { expected: usize, got: usize },
}

struct DomainInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// A finite logical domain: ordered, pairwise-distinct element labels.
///
/// The list order is canonical for every derived enumeration (powersets,
/// comparison tables, quotients). Cloning is cheap; the label data is shared.
#[derive(Clone)]
pub struct FinDomain {
    inner: Arc<DomainInner>,
}

impl FinDomain {
    /// Builds a domain from element labels, rejecting duplicates.
    pub fn new<I, S>(labels: I) -> Result<Self, DomainError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(DomainError::DuplicateLabel(l.clone()));
            }
        }
        Ok(FinDomain {
            inner: Arc::new(DomainInner { labels, index }),
        })
    }

    /// The empty domain.
    pub fn empty() -> Self {
        FinDomain::new(Vec::<String>::new()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    /// Enumerates all binary functions on this domain in binary-counter
    /// order: function `n` has bit `i` set iff bit `i` of `n` is set, so
    /// element 0 is the least-significant bit and the empty function comes
    /// first.
    pub fn powerset(&self, bound: usize) -> Result<Vec<BinFn>, DomainError> {
        let n = self.size();
        if n > bound || n >= usize::BITS as usize - 1 {
            return Err(DomainError::DomainTooLarge { size: n, bound });
        }
        let count: usize = 1 << n;
        let mut out = Vec::with_capacity(count);
        for code in 0..count {
            let bits = (0..n).map(|i| code >> i & 1 == 1).collect();
            out.push(BinFn {
                domain: self.clone(),
                bits,
            });
        }
        Ok(out)
    }
}

impl PartialEq for FinDomain {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for FinDomain {}

impl fmt::Debug for FinDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("FinDomain")
            .field(&self.inner.labels)
            .finish()
    }
}

impl Serialize for FinDomain {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            labels: &'a [String],
        }
        Raw {
            labels: self.labels(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinDomain {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            labels: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        FinDomain::new(raw.labels).map_err(D::Error::custom)
    }
}

/// A binary (yes/no) function on a [`FinDomain`], one bit per element in
/// domain order.
#[derive(Clone, PartialEq, Eq)]
pub struct BinFn {
    domain: FinDomain,
    bits: Vec<bool>,
}

impl BinFn {
    pub fn new(domain: FinDomain, bits: Vec<bool>) -> Result<Self, DomainError> {
        if bits.len() != domain.size() {
            return Err(DomainError::BitLength {
                expected: domain.size(),
                got: bits.len(),
            });
        }
        Ok(BinFn { domain, bits })
    }

    /// The empty function: `no` everywhere.
    pub fn empty(domain: FinDomain) -> Self {
        let bits = vec![false; domain.size()];
        BinFn { domain, bits }
    }

    /// The function that is `yes` exactly on the given element indices.
    pub fn from_indices(domain: FinDomain, indices: &[usize]) -> Self {
        let mut bits = vec![false; domain.size()];
        for &i in indices {
            bits[i] = true;
        }
        BinFn { domain, bits }
    }

    pub fn domain(&self) -> &FinDomain {
        &self.domain
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Detects the empty function: yes iff every bit is no.
    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    /// Indices of the elements on which the function is `yes`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn support_size(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Renders the bits as a 0/1 string, element 0 first.
    pub fn bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinFn({})", self.bit_string())
    }
}

/// A candidate equivalence relation on a domain, as a square yes/no table
/// in label order. Validation is explicit: the table is data, not trusted.
#[derive(Clone, Debug)]
pub struct EqvTable {
    domain: FinDomain,
    pairs: Vec<Vec<bool>>,
}

impl EqvTable {
    pub fn new(domain: FinDomain, pairs: Vec<Vec<bool>>) -> Result<Self, DomainError> {
        let n = domain.size();
        if pairs.len() != n {
            return Err(DomainError::TableShape {
                expected: n,
                got: pairs.len(),
            });
        }
        for row in &pairs {
            if row.len() != n {
                return Err(DomainError::TableShape {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        Ok(EqvTable { domain, pairs })
    }

    /// The identity relation: each element related only to itself.
    pub fn identity(domain: FinDomain) -> Self {
        let n = domain.size();
        let pairs = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        EqvTable { domain, pairs }
    }

    pub fn domain(&self) -> &FinDomain {
        &self.domain
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.pairs[i][j]
    }

    /// Checks reflexivity, symmetry and transitivity, reporting the first
    /// violation in index order.
    pub fn validate(&self) -> Result<(), DomainError> {
        let n = self.domain.size();
        let lbl = |i: usize| self.domain.label(i).to_owned();
        for i in 0..n {
            if !self.pairs[i][i] {
                return Err(DomainError::NotEquivalence(EqvViolation::Reflexive(lbl(i))));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.pairs[i][j] && !self.pairs[j][i] {
                    return Err(DomainError::NotEquivalence(EqvViolation::Symmetric(
                        lbl(i),
                        lbl(j),
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.pairs[i][j] {
                    continue;
                }
                for k in 0..n {
                    if self.pairs[j][k] && !self.pairs[i][k] {
                        return Err(DomainError::NotEquivalence(EqvViolation::Transitive(
                            lbl(i),
                            lbl(j),
                            lbl(k),
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Forms the domain of equivalence classes.
    ///
    /// Classes are ordered by first occurrence in the underlying domain and
    /// labelled by their lexicographically least member label, so the output
    /// is deterministic.
    pub fn quotient(&self) -> Result<Quotient, DomainError> {
        self.validate()?;
        let n = self.domain.size();
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = members.len();
            let mut group = Vec::new();
            for j in i..n {
                if self.pairs[i][j] {
                    class_of[j] = c;
                    group.push(j);
                }
            }
            members.push(group);
        }
        let labels: Vec<String> = members
            .iter()
            .map(|group| {
                group
                    .iter()
                    .map(|&j| self.domain.label(j))
                    .min()
                    .expect("class is nonempty")
                    .to_owned()
            })
            .collect();
        let classes = FinDomain::new(labels)?;
        Ok(Quotient {
            source: self.domain.clone(),
            classes,
            class_of,
        })
    }
}

impl Serialize for EqvTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            labels: &'a [String],
            pairs: &'a [Vec<bool>],
        }
        Raw {
            labels: self.domain.labels(),
            pairs: &self.pairs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EqvTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            labels: Vec<String>,
            pairs: Vec<Vec<bool>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let domain = FinDomain::new(raw.labels).map_err(D::Error::custom)?;
        EqvTable::new(domain, raw.pairs).map_err(D::Error::custom)
    }
}

/// The result of quotienting a domain by an equivalence relation: the domain
/// of classes plus the projection from elements to classes.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: FinDomain,
    classes: FinDomain,
    class_of: Vec<usize>,
}

impl Quotient {
    pub fn source(&self) -> &FinDomain {
        &self.source
    }

    pub fn classes(&self) -> &FinDomain {
        &self.classes
    }

    /// Class index of the element at `i` in the source domain.
    pub fn class_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Class label of a source element.
    pub fn class_label(&self, i: usize) -> &str {
        self.classes.label(self.class_of[i])
    }
}

/// Disjoint union of a family of domains indexed by a base domain.
///
/// `fibers[i]` is the fiber over base element `i`; the union's labels are the
/// pairs `(base,fiber)` and equality is pairwise label equality. Returns the
/// union domain together with the projection from each pair to its base
/// element index.
pub fn union_of_fibers(base: &FinDomain, fibers: &[FinDomain]) -> (FinDomain, Vec<usize>) {
    assert_eq!(
        base.size(),
        fibers.len(),
        "one fiber required per base element"
    );
    let mut labels = Vec::new();
    let mut to_base = Vec::new();
    for (b, fiber) in fibers.iter().enumerate() {
        for x in fiber.labels() {
            labels.push(format!("({},{})", base.label(b), x));
            to_base.push(b);
        }
    }
    let domain = FinDomain::new(labels).expect("pair labels collide; rename the inputs");
    (domain, to_base)
}
