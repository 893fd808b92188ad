//! Ordinals below epsilon-0 in Cantor normal form, plus the canonical
//! pairing bijection on the naturals.
//!
//! An [`OrdCnf`] is a list of `(exponent, coefficient)` terms with strictly
//! decreasing exponents and positive coefficients; the empty list is 0.
//! Comparison is lexicographic on the term lists, and addition and
//! multiplication are the usual normal-form arithmetic.
//!
//! Literals use the grammar `ord := term ('+' term)*`,
//! `term := 'w' ('^' exponent)? ('*' nat)? | nat`, where an exponent is a
//! natural, a bare `w`-power, or a parenthesized ordinal. Canonical printing
//! uses the same grammar with minimal parentheses, e.g. `w^2*3+w+5`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdError {
    #[error("malformed ordinal: {0}")]
    MalformedCnf(String),
    #[error("sup of an empty list")]
    EmptyList,
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
}

/// Zero, successor, or limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdClass {
    Zero,
    Successor,
    Limit,
}

impl fmt::Display for OrdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdClass::Zero => write!(f, "zero"),
            OrdClass::Successor => write!(f, "successor"),
            OrdClass::Limit => write!(f, "limit"),
        }
    }
}

/// An ordinal below epsilon-0 in Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrdCnf {
    terms: Vec<(OrdCnf, u64)>,
}

impl OrdCnf {
    pub fn zero() -> Self {
        OrdCnf { terms: Vec::new() }
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            OrdCnf::zero()
        } else {
            OrdCnf {
                terms: vec![(OrdCnf::zero(), n)],
            }
        }
    }

    pub fn omega() -> Self {
        OrdCnf::omega_pow(OrdCnf::nat(1))
    }

    /// `w^e` (so `omega_pow(0)` is 1).
    pub fn omega_pow(e: OrdCnf) -> Self {
        OrdCnf {
            terms: vec![(e, 1)],
        }
    }

    /// Builds from raw terms, enforcing strictly decreasing exponents and
    /// positive coefficients.
    pub fn from_terms(terms: Vec<(OrdCnf, u64)>) -> Result<Self, OrdError> {
        for (e, c) in &terms {
            if *c == 0 {
                return Err(OrdError::MalformedCnf(format!("zero coefficient on w^{e}")));
            }
        }
        for pair in terms.windows(2) {
            if pair[0].0 <= pair[1].0 {
                return Err(OrdError::MalformedCnf(format!(
                    "exponents not strictly decreasing: w^{} then w^{}",
                    pair[0].0, pair[1].0
                )));
            }
        }
        Ok(OrdCnf { terms })
    }

    pub fn terms(&self) -> &[(OrdCnf, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// If this is a plain natural, returns it.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    /// Ordinal addition, normalized: the right operand's leading term
    /// absorbs every smaller term of the left.
    pub fn add(&self, b: &OrdCnf) -> OrdCnf {
        let Some((be, bc)) = b.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(OrdCnf, u64)> = self
            .terms
            .iter()
            .take_while(|(e, _)| e > be)
            .cloned()
            .collect();
        let mut rest = b.terms.clone();
        if let Some((e, c)) = self.terms.get(terms.len()) {
            if e == be {
                rest[0].1 = bc.checked_add(*c).expect("coefficient overflow");
            }
        }
        terms.extend(rest);
        OrdCnf { terms }
    }

    /// Ordinal multiplication, normalized.
    pub fn mul(&self, b: &OrdCnf) -> OrdCnf {
        if self.is_zero() || b.is_zero() {
            return OrdCnf::zero();
        }
        let (ae, ac) = &self.terms[0];
        let mut acc = OrdCnf::zero();
        for (be, bc) in &b.terms {
            let part = if be.is_zero() {
                // Finite factor: scale the leading coefficient, keep the tail.
                let mut terms = self.terms.clone();
                terms[0].1 = ac.checked_mul(*bc).expect("coefficient overflow");
                OrdCnf { terms }
            } else {
                OrdCnf {
                    terms: vec![(ae.add(be), *bc)],
                }
            };
            acc = acc.add(&part);
        }
        acc
    }

    /// The maximum of a nonempty list (finite lists have maxima, so sup is
    /// max here).
    pub fn sup(xs: &[OrdCnf]) -> Result<OrdCnf, OrdError> {
        xs.iter().max().cloned().ok_or(OrdError::EmptyList)
    }

    pub fn classify(&self) -> OrdClass {
        match self.terms.last() {
            None => OrdClass::Zero,
            Some((e, _)) if e.is_zero() => OrdClass::Successor,
            Some(_) => OrdClass::Limit,
        }
    }

    /// Whether the canonical printing of this ordinal is valid as a bare
    /// exponent (no parentheses needed after `^`).
    fn prints_bare(&self) -> bool {
        match self.terms.as_slice() {
            [(e, _)] if e.is_zero() => true, // a natural
            [(_, 1)] => true,                // single w-power
            _ => false,
        }
    }
}

impl PartialOrd for OrdCnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdCnf {
    fn cmp(&self, other: &Self) -> Ordering {
        for (x, y) in self.terms.iter().zip(other.terms.iter()) {
            match x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for OrdCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            if e.as_nat() == Some(1) {
                write!(f, "w")?;
            } else if e.prints_bare() {
                write!(f, "w^{e}")?;
            } else {
                write!(f, "w^({e})")?;
            }
            if *c > 1 {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrdCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrdCnf({self})")
    }
}

impl FromStr for OrdCnf {
    type Err = OrdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            bytes: s.as_bytes(),
            at: 0,
        };
        let ord = p.ord()?;
        if p.at != p.bytes.len() {
            return Err(p.error("trailing input"));
        }
        Ok(ord)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> OrdError {
        OrdError::Parse {
            at: self.at,
            msg: msg.to_owned(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.at).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<u64, OrdError> {
        let start = self.at;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.at += 1;
        }
        if self.at == start {
            return Err(self.error("expected a natural number"));
        }
        std::str::from_utf8(&self.bytes[start..self.at])
            .unwrap()
            .parse()
            .map_err(|_| self.error("natural number out of range"))
    }

    fn ord(&mut self) -> Result<OrdCnf, OrdError> {
        let mut terms = Vec::new();
        let mut zeros = 0usize;
        loop {
            match self.term()? {
                Some(t) => terms.push(t),
                None => zeros += 1,
            }
            if !self.eat(b'+') {
                break;
            }
        }
        if zeros > 0 && (zeros > 1 || !terms.is_empty()) {
            return Err(OrdError::MalformedCnf("zero term in a sum".into()));
        }
        OrdCnf::from_terms(terms)
    }

    /// One term; `None` stands for a literal `0`.
    fn term(&mut self) -> Result<Option<(OrdCnf, u64)>, OrdError> {
        if self.eat(b'w') {
            let exp = if self.eat(b'^') {
                self.exponent()?
            } else {
                OrdCnf::nat(1)
            };
            let coeff = if self.eat(b'*') { self.nat()? } else { 1 };
            if coeff == 0 {
                return Err(OrdError::MalformedCnf("zero coefficient".into()));
            }
            Ok(Some((exp, coeff)))
        } else {
            match self.nat()? {
                0 => Ok(None),
                n => Ok(Some((OrdCnf::zero(), n))),
            }
        }
    }

    fn exponent(&mut self) -> Result<OrdCnf, OrdError> {
        if self.eat(b'(') {
            let inner = self.ord()?;
            if !self.eat(b')') {
                return Err(self.error("expected ')'"));
            }
            return Ok(inner);
        }
        if self.eat(b'w') {
            let exp = if self.eat(b'^') {
                self.exponent()?
            } else {
                OrdCnf::nat(1)
            };
            return Ok(OrdCnf::omega_pow(exp));
        }
        Ok(OrdCnf::nat(self.nat()?))
    }
}

/// Position of the pair `(a, b)` in the canonical order on pairs of
/// naturals: with `m = max(a, b)`, the band below `m`'s diagonal corner
/// comes first (`index = m^2 + a` when `b = m, a < m`), then the row
/// (`index = m^2 + m + b` when `a = m`). A bijection with the naturals.
pub fn pair_index(a: u64, b: u64) -> u64 {
    let m = a.max(b);
    let base = m.checked_mul(m).expect("pair coordinate too large");
    if b == m && a < m {
        base + a
    } else {
        base + m + b
    }
}

/// Inverse of [`pair_index`].
pub fn unpair(n: u64) -> (u64, u64) {
    let m = n.isqrt();
    let r = n - m * m;
    if r < m {
        (r, m)
    } else {
        (m, r - m)
    }
}
