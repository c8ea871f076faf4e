//! The one-parameter-per-pair families `𝔐^N_{ν_1..ν_p}`: `p` singleton
//! pairs `±ν_i` around a tempered middle made of `[-1/2,1/2]` copies (plus
//! `[0]` when `N` is odd).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::{binomial, kostka, partitions, w0_cycle_type, CharacterTable, Partition};
use crate::error::{Error, Result};
use crate::multisegment::{Multisegment, Segment};
use crate::rational::Rational;
use crate::wmodule::{Conjecture, SignatureCharacter};

/// A chamber of the family: `N`, number of singleton pairs `m`, and
/// `r = #{ν_i > 1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyPoint {
    pub n: usize,
    pub m: usize,
    pub r: usize,
}

impl FamilyPoint {
    pub fn new(n: usize, m: usize, r: usize) -> Result<FamilyPoint> {
        if m > n / 2 || r > m {
            return Err(Error::FamilyRange(format!("N={n}, m={m}, r={r}")));
        }
        Ok(FamilyPoint { n, m, r })
    }

    /// Number of `[-1/2,1/2]` copies in the middle block.
    pub fn half_copies(&self) -> usize {
        self.n / 2 - self.m
    }

    /// Block sizes `(1^m, N-2m, 1^m)`; the middle is omitted when empty.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mid = self.n - 2 * self.m;
        let mut out = alloc::vec![1; self.m];
        if mid > 0 {
            out.push(mid);
        }
        out.extend(core::iter::repeat_n(1, self.m));
        out
    }

    /// Tempered BZ data of each block.
    pub fn tempered_parts(&self) -> Vec<Multisegment> {
        let zero = Multisegment::singletons(&[Rational::ZERO]);
        let mut out = alloc::vec![zero.clone(); self.m];
        if self.n > 2 * self.m {
            out.push(middle_block(self.n - 2 * self.m));
        }
        out.extend(core::iter::repeat_n(zero, self.m));
        out
    }

    /// `𝔐^N_ν` for the given pair parameters (`ν_1 > .. > ν_m > 0`).
    pub fn multisegment(&self, nu: &[Rational]) -> Result<Multisegment> {
        if nu.len() != self.m {
            return Err(Error::SizeMismatch(nu.len(), self.m));
        }
        let mut segs: Vec<Segment> = Vec::new();
        for &v in nu {
            segs.push(Segment::singleton(v));
            segs.push(Segment::singleton(-v));
        }
        segs.extend(middle_block(self.n - 2 * self.m).segments().iter().cloned());
        Ok(Multisegment::new(segs))
    }
}

fn middle_block(size: usize) -> Multisegment {
    let mut segs = alloc::vec![Segment::centered(Rational::ZERO, 2); size / 2];
    if size % 2 == 1 {
        segs.push(Segment::singleton(Rational::ZERO));
    }
    Multisegment::new(segs)
}

/// `[X : π_d] = K_{d^t, e}` for `e = (2^k, 1^{N-2k})`.
fn kostka_column(n: usize, k: usize) -> Result<Vec<i64>> {
    let mut e = alloc::vec![2; k];
    e.extend(core::iter::repeat_n(1, n - 2 * k));
    let e = Partition::from_parts(e);
    partitions(n)?
        .iter()
        .map(|d| kostka(&d.transpose(), &e).map(|v| v as i64))
        .collect()
}

/// `Σ^N(m, r) = Σ_i (-2)^i C(r,i) K(e = (2^{q+i}, 1^{N-2(q+i)}))` with
/// `q = [N/2] - m` the number of `[-1/2,1/2]` copies.
///
/// Proven for `r = 0` (the unitary chamber) and, in the unramified case
/// `m = [N/2]`, for `r ∈ {1, m}`; otherwise tagged with the chamber
/// invariance conjecture.
pub fn sigma_family(n: usize, m: usize, r: usize) -> Result<SignatureCharacter> {
    let fp = FamilyPoint::new(n, m, r)?;
    let q = fp.half_copies();
    let len = partitions(n)?.len();
    let mut acc = alloc::vec![0i64; len];
    for i in 0..=r {
        let weight = (-2i64)
            .checked_pow(i as u32)
            .and_then(|w| w.checked_mul(binomial(r as u64, i as u64) as i64))
            .ok_or(Error::Overflow("sigma_family"))?;
        for (a, k) in acc.iter_mut().zip(kostka_column(n, q + i)?) {
            *a = k
                .checked_mul(weight)
                .and_then(|v| a.checked_add(v))
                .ok_or(Error::Overflow("sigma_family"))?;
        }
    }
    let s = SignatureCharacter::new(n, acc)?;
    let proven = r == 0 || (m == n / 2 && (r == 1 || r == m));
    Ok(if proven {
        s
    } else {
        s.with_conjecture(Conjecture::FamilyChamberInvariance)
    })
}

/// `Σ(m, r-1) - Σ(m, r) = 2 Σ(m-1, r-1)` for `1 <= r <= m`.
pub fn telescoping_holds(n: usize, m: usize, r: usize) -> Result<bool> {
    if r == 0 || r > m {
        return Err(Error::FamilyRange(format!("N={n}, m={m}, r={r}")));
    }
    let lhs = sigma_family(n, m, r - 1)? - sigma_family(n, m, r)?;
    let rhs = sigma_family(n, m - 1, r - 1)? * 2;
    Ok(lhs.coeffs() == rhs.coeffs())
}

/// Outcome of checking `χ_λ(w_0) = Σ_i (-2)^i C(r,i) K_{λ^t,(2^i,1^{N-2i})}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaIdentityReport {
    pub n: usize,
    pub checked: usize,
    /// `(λ, χ_λ(w_0), right-hand side)` for each failure.
    pub violations: Vec<(Partition, i64, i64)>,
}

impl KostkaIdentityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.holds() {
            format!("N={}: {} identities hold", self.n, self.checked)
        } else {
            format!(
                "N={}: {} of {} identities fail",
                self.n,
                self.violations.len(),
                self.checked
            )
        }
    }
}

pub fn kostka_identity_check(n: usize) -> Result<KostkaIdentityReport> {
    let table = CharacterTable::new(n)?;
    let w0 = table.index_of(&w0_cycle_type(n)).unwrap();
    let rhs = sigma_family(n, n / 2, n / 2)?;
    let violations = table
        .labels()
        .iter()
        .enumerate()
        .filter_map(|(i, lam)| {
            let l = table.value(i, w0);
            let r = rhs.coeffs()[i];
            (l != r).then(|| (lam.clone(), l, r))
        })
        .collect();
    Ok(KostkaIdentityReport {
        n,
        checked: table.labels().len(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SignatureCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(sigma_family(2, 1, 1).unwrap(), sc("(2)-(1^2)"));
        assert_eq!(
            sigma_family(4, 2, 2).unwrap(),
            sc("(1^4)-(2,1^2)+2(2^2)-(3,1)+(4)")
        );
        assert_eq!(
            sigma_family(4, 2, 0).unwrap(),
            sc("(1^4)+3(2,1^2)+2(2^2)+3(3,1)+(4)")
        );
        assert_eq!(
            sigma_family(4, 2, 1).unwrap(),
            sc("-(1^4)-(2,1^2)+(3,1)+(4)")
        );
        assert_eq!(sigma_family(3, 1, 1).unwrap(), sc("-(1^3)+(3)"));
        assert!(sigma_family(4, 3, 0).is_err());
        assert!(sigma_family(4, 1, 2).is_err());
    }

    #[test]
    fn provenance_split() {
        assert!(
            sigma_family(6, 3, 2).unwrap().conjectures() == [Conjecture::FamilyChamberInvariance]
        );
        assert!(sigma_family(6, 3, 3).unwrap().conjectures().is_empty());
        assert!(
            sigma_family(6, 2, 1).unwrap().conjectures() == [Conjecture::FamilyChamberInvariance]
        );
        assert!(sigma_family(6, 2, 0).unwrap().conjectures().is_empty());
    }

    #[test]
    fn block_data() {
        let fp = FamilyPoint::new(5, 1, 1).unwrap();
        assert_eq!(fp.block_sizes(), [1, 3, 1]);
        assert_eq!(fp.tempered_parts()[1].to_string(), "[0];[-1/2,1/2]");
        let m = fp.multisegment(&[Rational::new(3, 4).unwrap()]).unwrap();
        assert_eq!(m.jordan_type(), "2,1,1,1".parse().unwrap());
        assert_eq!(
            FamilyPoint::new(4, 2, 0).unwrap().block_sizes(),
            [1, 1, 1, 1]
        );
    }

    #[test]
    fn identities() {
        for n in 1..=10 {
            assert!(kostka_identity_check(n).unwrap().holds(), "N={n}");
            for m in 1..=n / 2 {
                for r in 1..=m {
                    assert!(telescoping_holds(n, m, r).unwrap());
                }
            }
        }
    }
}
