//! W-structure of standard modules and the signature-character value type.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use crate::combinat::partition::partitions_unchecked;
use crate::combinat::{kostka, Partition};
use crate::error::{Error, ParseError, Result};
use crate::multisegment::Multisegment;

/// Unproven statements a signature computation may lean on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conjecture {
    /// Jantzen filtrations at ramified height-one walls have odd length, so
    /// the crossing rule of the unramified case applies.
    OddJantzenLength,
    /// For the family of singleton pairs around copies of `[-1/2,1/2]`, the
    /// chamber value depends only on how many parameters exceed `1/2`.
    FamilyChamberInvariance,
    /// Height-two walls of ramified families are transparent and their wall
    /// value follows the unramified formula.
    RamifiedHeightTwo,
}

impl Conjecture {
    pub const ALL: [Conjecture; 3] = [
        Conjecture::OddJantzenLength,
        Conjecture::FamilyChamberInvariance,
        Conjecture::RamifiedHeightTwo,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Conjecture::OddJantzenLength => "odd-jantzen-length",
            Conjecture::FamilyChamberInvariance => "family-chamber-invariance",
            Conjecture::RamifiedHeightTwo => "ramified-height-two",
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Proven,
    Conjectural,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Proven => "proven",
            Provenance::Conjectural => "conjectural",
        })
    }
}

/// Integer vector over the irreducible representations of `S_n` (indexed by
/// partitions in canonical order) together with the conjectures used to
/// obtain it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignatureCharacter {
    n: usize,
    coeffs: Vec<i64>,
    conjectures: Vec<Conjecture>,
}

impl SignatureCharacter {
    pub fn new(n: usize, coeffs: Vec<i64>) -> Result<SignatureCharacter> {
        let expected = labels_checked(n)?.len();
        if coeffs.len() != expected {
            return Err(Error::SizeMismatch(coeffs.len(), expected));
        }
        Ok(SignatureCharacter {
            n,
            coeffs,
            conjectures: Vec::new(),
        })
    }

    pub fn zero(n: usize) -> Result<SignatureCharacter> {
        let len = labels_checked(n)?.len();
        SignatureCharacter::new(n, alloc::vec![0; len])
    }

    pub fn from_multiplicities(n: usize, mults: &[u64]) -> Result<SignatureCharacter> {
        SignatureCharacter::new(n, mults.iter().map(|&m| m as i64).collect())
    }

    /// Builds a character from `(λ, coefficient)` terms.
    pub fn from_terms<'a>(
        n: usize,
        terms: impl IntoIterator<Item = (&'a Partition, i64)>,
    ) -> Result<SignatureCharacter> {
        let labels = labels_checked(n)?;
        let mut coeffs = alloc::vec![0; labels.len()];
        for (p, c) in terms {
            let i = labels
                .iter()
                .position(|q| q == p)
                .ok_or(Error::SizeMismatch(p.n(), n))?;
            coeffs[i] += c;
        }
        SignatureCharacter::new(n, coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn labels(&self) -> Vec<Partition> {
        partitions_unchecked(self.n)
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.labels()
            .iter()
            .position(|q| q == lambda)
            .map_or(0, |i| self.coeffs[i])
    }

    /// Coefficient of the trivial representation `(n)`.
    pub fn trivial_coeff(&self) -> i64 {
        self.coeffs[0]
    }

    /// Coefficient of the sign representation `(1^n)`.
    pub fn sgn_coeff(&self) -> i64 {
        *self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn provenance(&self) -> Provenance {
        if self.conjectures.is_empty() {
            Provenance::Proven
        } else {
            Provenance::Conjectural
        }
    }

    /// Sorted, without repetitions.
    pub fn conjectures(&self) -> &[Conjecture] {
        &self.conjectures
    }

    pub fn with_conjecture(mut self, c: Conjecture) -> SignatureCharacter {
        if let Err(i) = self.conjectures.binary_search(&c) {
            self.conjectures.insert(i, c);
        }
        self
    }

    pub fn with_conjectures(self, cs: &[Conjecture]) -> SignatureCharacter {
        cs.iter().fold(self, |acc, &c| acc.with_conjecture(c))
    }

    /// Same coefficients, provenance reset to proven.
    pub fn without_conjectures(mut self) -> SignatureCharacter {
        self.conjectures.clear();
        self
    }

    /// `λ ↦ λ^t`: the effect of the Zelevinsky involution.
    pub fn sgn_twist(&self) -> SignatureCharacter {
        let labels = self.labels();
        let coeffs = labels
            .iter()
            .map(|l| {
                let t = l.transpose();
                self.coeffs[labels.iter().position(|q| *q == t).unwrap()]
            })
            .collect();
        SignatureCharacter {
            n: self.n,
            coeffs,
            conjectures: self.conjectures.clone(),
        }
    }

    /// Flips the global sign so that the coefficient at `lambda_max` is `+1`.
    pub fn normalize(&self, lambda_max: &Partition) -> Result<SignatureCharacter> {
        match self.coeff(lambda_max) {
            1 => Ok(self.clone()),
            -1 => Ok(-self.clone()),
            c => Err(Error::NormalizationUndefined(lambda_max.symbol(), c)),
        }
    }

    /// Exact division by two; fails if some coefficient is odd.
    pub fn halve(&self) -> Option<SignatureCharacter> {
        if self.coeffs.iter().any(|c| c % 2 != 0) {
            return None;
        }
        Some(SignatureCharacter {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c / 2).collect(),
            conjectures: self.conjectures.clone(),
        })
    }

    /// `|Σ_λ| <= mult_λ` and `Σ_λ ≡ mult_λ (mod 2)` for every λ.
    pub fn consistent_with(&self, mults: &[u64]) -> bool {
        mults.len() == self.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(mults)
                .all(|(&c, &m)| c.unsigned_abs() <= m && (c - m as i64).rem_euclid(2) == 0)
    }

    /// Standard notation, smallest partition first: `-(1^4)-(2,1^2)+0(2^2)+(3,1)+(4)`.
    /// Zero terms are shown only when `show_zeros` is set.
    pub fn render(&self, show_zeros: bool) -> String {
        let labels = self.labels();
        let mut out = String::new();
        for (p, &c) in labels.iter().zip(&self.coeffs).rev() {
            if c == 0 && !show_zeros {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            match c.unsigned_abs() {
                1 => {}
                a => out.push_str(&a.to_string()),
            }
            out.push_str(&p.symbol());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn merged(&self, other: &SignatureCharacter, coeffs: Vec<i64>) -> SignatureCharacter {
        SignatureCharacter {
            n: self.n,
            coeffs,
            conjectures: self.conjectures.clone(),
        }
        .with_conjectures(&other.conjectures)
    }
}

fn labels_checked(n: usize) -> Result<Vec<Partition>> {
    crate::combinat::partitions(n)
}

impl Add for SignatureCharacter {
    type Output = SignatureCharacter;

    fn add(self, rhs: SignatureCharacter) -> SignatureCharacter {
        assert_eq!(self.n, rhs.n, "signature characters of different rank");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        self.merged(&rhs, coeffs)
    }
}

impl Sub for SignatureCharacter {
    type Output = SignatureCharacter;

    fn sub(self, rhs: SignatureCharacter) -> SignatureCharacter {
        self + (-rhs)
    }
}

impl Neg for SignatureCharacter {
    type Output = SignatureCharacter;

    fn neg(mut self) -> SignatureCharacter {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Mul<i64> for SignatureCharacter {
    type Output = SignatureCharacter;

    fn mul(mut self, k: i64) -> SignatureCharacter {
        self.coeffs.iter_mut().for_each(|c| *c *= k);
        self
    }
}

impl fmt::Display for SignatureCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for SignatureCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))?;
        if !self.conjectures.is_empty() {
            write!(f, " [")?;
            for (i, c) in self.conjectures.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl FromStr for SignatureCharacter {
    type Err = ParseError;

    /// Standard notation; terms may appear in any order and `n` is read off the
    /// first partition symbol.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let bad = || ParseError::Partition(s.into());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms: Vec<(Partition, i64)> = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let (sign, r) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let open = r.find('(').ok_or_else(bad)?;
            let close = r.find(')').ok_or_else(bad)?;
            let k: i64 = if open == 0 {
                1
            } else {
                r[..open].parse().map_err(|_| bad())?
            };
            let p: Partition = r[open..=close].parse()?;
            terms.push((p, sign * k));
            rest = &r[close + 1..];
        }
        let n = terms.first().ok_or_else(bad)?.0.n();
        SignatureCharacter::from_terms(n, terms.iter().map(|(p, c)| (p, *c))).map_err(|_| bad())
    }
}

/// `[X(𝔐) : π_d] = K_{d^t, e}` with `e` the Jordan type of `𝔐`, over
/// `partitions(N)`.
pub fn standard_w_multiplicities(m: &Multisegment) -> Result<Vec<u64>> {
    let e = m.jordan_type();
    crate::combinat::partitions(e.n())?
        .iter()
        .map(|d| kostka(&d.transpose(), &e))
        .collect()
}

/// The dual partition of the Jordan type: the unique maximal W-type of
/// `X(𝔐)`, occurring with multiplicity one in `L(𝔐)`.
pub fn max_lambda(m: &Multisegment) -> Partition {
    m.jordan_type().transpose()
}

/// `v_λ ↦ v_{λ^t}`.
pub fn transpose_vector(n: usize, v: &[u64]) -> Vec<u64> {
    let labels = partitions_unchecked(n);
    labels
        .iter()
        .map(|l| v[labels.iter().position(|q| *q == l.transpose()).unwrap()])
        .collect()
}

/// W-multiplicities of `L(𝔐)` when they follow from the structure of
/// standard modules alone: `L = X` if no two segments are linked, and
/// `L(𝔐) = ζ(L(𝔐^#))` with `L(𝔐^#) = X(𝔐^#)` if the dual has no links.
pub fn known_l_multiplicities(m: &Multisegment) -> Option<Vec<u64>> {
    if m.is_unlinked() {
        return standard_w_multiplicities(m).ok();
    }
    let dual = m.zelevinsky();
    if dual.is_unlinked() {
        let v = standard_w_multiplicities(&dual).ok()?;
        return Some(transpose_vector(m.n(), &v));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SignatureCharacter {
        s.parse().unwrap()
    }

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn multiplicities() {
        assert_eq!(
            standard_w_multiplicities(&ms("0;1;2;3")).unwrap(),
            [1, 3, 2, 3, 1]
        );
        assert_eq!(
            standard_w_multiplicities(&ms("[0,1,2,3]")).unwrap(),
            [0, 0, 0, 0, 1]
        );
        assert_eq!(
            standard_w_multiplicities(&ms("[-1/2,1/2];0;0")).unwrap(),
            [0, 1, 1, 2, 1]
        );
        assert_eq!(max_lambda(&ms("0;1;2;3")), p("4"));
        assert_eq!(max_lambda(&ms("[-1/2,1/2];[-1/2,1/2]")), p("2,2"));
        assert_eq!(max_lambda(&ms("[-1/2,1/2];0;0")), p("3,1"));
    }

    #[test]
    fn twist_and_normalize() {
        assert_eq!(sc("(4)").sgn_twist(), sc("(1^4)"));
        assert_eq!(sc("(1^2)+(2)").sgn_twist(), sc("(1^2)+(2)"));
        assert_eq!(
            sc("-(1^4)-(2^2)+(3,1)").sgn_twist(),
            sc("-(4)-(2^2)+(2,1^2)")
        );
        assert_eq!(
            sc("-(2)-(1^2)").normalize(&p("2")).unwrap(),
            sc("(2)+(1^2)")
        );
        assert_eq!(sc("(2)-(1^2)").normalize(&p("2")).unwrap(), sc("(2)-(1^2)"));
        let v = sc("-(2,1^2)+(2^2)+(4)");
        assert_eq!(v.normalize(&p("4")).unwrap(), v);
        assert!(sc("2(2)+(1^2)").normalize(&p("2")).is_err());
    }

    #[test]
    fn rendering_roundtrip() {
        let v = sc("-(1^4)-(2,1^2)+0(2^2)+(3,1)+(4)");
        assert_eq!(v.coeffs(), [1, 1, 0, -1, -1]);
        assert_eq!(v.render(true), "-(1^4)-(2,1^2)+0(2^2)+(3,1)+(4)");
        assert_eq!(v.to_string(), "-(1^4)-(2,1^2)+(3,1)+(4)");
        assert_eq!(sc(&v.to_string()), v);
        assert_eq!(
            sc("(1^4)+3(2,1^2)+2(2^2)+3(3,1)+(4)").coeffs(),
            [1, 3, 2, 3, 1]
        );
        assert_eq!(
            sc("(2,1^2) + (2,2) + 2(3,1) + (4)").coeffs(),
            [1, 2, 1, 1, 0]
        );
    }

    #[test]
    fn provenance_merges() {
        let a = sc("(2)").with_conjecture(Conjecture::OddJantzenLength);
        let b = sc("(1^2)").with_conjecture(Conjecture::FamilyChamberInvariance);
        let c = a.clone() + b;
        assert_eq!(c.provenance(), Provenance::Conjectural);
        assert_eq!(c.conjectures().len(), 2);
        assert_eq!((sc("(2)") * 2).halve().unwrap(), sc("(2)"));
        assert_eq!(sc("(2)").provenance(), Provenance::Proven);
    }

    #[test]
    fn known_multiplicities() {
        // L(3/2,1/2,-1/2,-3/2) is the trivial representation
        assert_eq!(
            known_l_multiplicities(&ms("3/2;1/2;-1/2;-3/2")).unwrap(),
            [1, 0, 0, 0, 0]
        );
        assert_eq!(known_l_multiplicities(&ms("1/4;-1/4")).unwrap(), [1, 1]);
        assert!(sc("(2)-(1^2)").consistent_with(&[1, 1]));
        assert!(!sc("(2)").consistent_with(&[1, 1]));
    }
}
