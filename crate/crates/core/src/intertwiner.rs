//! The intertwining operator `A_{w_0}(ν)` on the regular realization of an
//! unramified standard module, and exact signatures of its isotypic parts.
//!
//! `X(ν) ≅ C[W]` with basis `t_w`. `A` is the product over a reduced word
//! `s_{j_1}..s_{j_k}` of `w_0` of the factors `T_i: t_w ↦ c_i t_{w s_{j_i}} - t_w`,
//! `c_i = ⟨α_{j_i}, s_{j_{i-1}}..s_{j_1} ν⟩`, so it is right multiplication by
//! `∏ (c_i s_{j_i} - 1)` and commutes with the left `W`-action. In this
//! realization the `W`-type `λ` of `X` sits in the `λ^t`-isotypic part of the
//! left regular representation; on the right ideal `e_T C[W]` of a Young
//! symmetrizer of shape `λ^t` the operator acts as on one copy of that type.
//!
//! All arithmetic is exact: every `c_i` is scaled by the common denominator
//! `D` so vectors stay integral (`A` is computed up to the factor `D^k > 0`).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::perm::all_perms;
use crate::combinat::{partitions, Partition, Perm};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::walls::HermitianParameter;
use crate::wmodule::{
    known_l_multiplicities, max_lambda, standard_w_multiplicities, SignatureCharacter,
};

/// Largest `N` for which the operator is built.
pub const MAX_OPERATOR_N: usize = 7;

/// The scalar of one factor: simple reflection `s_j` (1-based) and
/// `c = ⟨α_j, s_{j_{i-1}}..s_{j_1} ν⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorScalar {
    pub simple: usize,
    pub c: Rational,
}

/// `w_0 = (s_1)(s_2 s_1)(s_3 s_2 s_1)..` as a list of 1-based indices.
pub fn reduced_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

/// The factor scalars along `word`.
pub fn factor_scalars(nu: &[Rational], word: &[usize]) -> Result<Vec<FactorScalar>> {
    let mut v = nu.to_vec();
    let mut out = Vec::with_capacity(word.len());
    for &j in word {
        if j == 0 || j >= v.len() {
            return Err(Error::SegmentIndex(j, v.len()));
        }
        let c = v[j - 1]
            .checked_sub(v[j])
            .ok_or(Error::Overflow("factor scalar"))?;
        out.push(FactorScalar { simple: j, c });
        v.swap(j - 1, j);
    }
    Ok(out)
}

fn is_reduced_word_of_w0(n: usize, word: &[usize]) -> bool {
    let mut p = Perm::identity(n);
    for &j in word {
        if j == 0 || j >= n {
            return false;
        }
        p = p.mul_simple_right(j - 1);
    }
    word.len() == n * (n - 1) / 2 && p == Perm::longest(n)
}

/// `A_{w_0}(ν)` on `C[W]`, stored as its factors and multiplication tables.
#[derive(Clone, Debug)]
pub struct RegularOperator {
    n: usize,
    perms: Vec<Perm>,
    /// `right[j][rank(w)] = rank(w s_{j+1})`.
    right: Vec<Vec<usize>>,
    factors: Vec<FactorScalar>,
    /// Integer factor data `(j, D c_i, D)`.
    scaled: Vec<(usize, BigInt, BigInt)>,
}

impl RegularOperator {
    pub fn build(p: &HermitianParameter) -> Result<RegularOperator> {
        RegularOperator::with_word(p.nu(), &reduced_word(p.n()))
    }

    /// Same operator from another reduced word of `w_0`.
    pub fn with_word(nu: &[Rational], word: &[usize]) -> Result<RegularOperator> {
        let n = nu.len();
        if n > MAX_OPERATOR_N {
            return Err(Error::Bounds {
                what: "N",
                value: n,
                max: MAX_OPERATOR_N,
            });
        }
        if !is_reduced_word_of_w0(n, word) {
            return Err(Error::InvalidParameter(
                "not a reduced word for the longest element".into(),
            ));
        }
        let factors = factor_scalars(nu, word)?;
        let perms = all_perms(n);
        let right = (0..n.saturating_sub(1))
            .map(|j| perms.iter().map(|w| w.mul_simple_right(j).rank()).collect())
            .collect();
        let d = factors.iter().fold(BigInt::one(), |acc, f| {
            num_integer::Integer::lcm(&acc, &BigInt::from(f.c.denom()))
        });
        let scaled = factors
            .iter()
            .map(|f| {
                let c = BigInt::from(f.c.numer()) * (&d / BigInt::from(f.c.denom()));
                (f.simple - 1, c, d.clone())
            })
            .collect();
        Ok(RegularOperator {
            n,
            perms,
            right,
            factors,
            scaled,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `#W`.
    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    pub fn factors(&self) -> &[FactorScalar] {
        &self.factors
    }

    /// Basis order of vectors: `perms()[i]` is the element behind coordinate `i`.
    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    /// `D^k · A v` for an integral vector `v` over the basis `t_w`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut cur = v.to_vec();
        for (j, c, d) in &self.scaled {
            let tab = &self.right[*j];
            // coefficient at u of Σ β_w (c t_{ws} - t_w) is c β_{us} - β_u
            cur = (0..cur.len())
                .map(|u| c * &cur[tab[u]] - d * &cur[u])
                .collect();
        }
        cur
    }

    fn basis_vector(&self, i: usize) -> Vec<BigInt> {
        let mut v = alloc::vec![BigInt::zero(); self.dim()];
        v[i] = BigInt::one();
        v
    }

    /// Dense matrix (up to `D^k`): column `w` is `A t_w`.
    pub fn matrix(&self) -> Vec<Vec<BigInt>> {
        let cols: Vec<Vec<BigInt>> = (0..self.dim())
            .map(|w| self.apply(&self.basis_vector(w)))
            .collect();
        (0..self.dim())
            .map(|u| (0..self.dim()).map(|w| cols[w][u].clone()).collect())
            .collect()
    }

    /// Symmetry of the matrix in the orthonormal basis `{t_w}`.
    pub fn is_self_adjoint(&self) -> bool {
        let m = self.matrix();
        (0..m.len()).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
    }

    /// `A(g t_w) = g A(t_w)` for every `w`.
    pub fn commutes_with_left(&self, g: &Perm) -> bool {
        let left: Vec<usize> = self.perms.iter().map(|w| g.compose(w).rank()).collect();
        let shift = |v: &[BigInt]| {
            let mut out = alloc::vec![BigInt::zero(); v.len()];
            for (w, x) in v.iter().enumerate() {
                out[left[w]] = x.clone();
            }
            out
        };
        (0..self.dim()).all(|w| {
            let e = self.basis_vector(w);
            self.apply(&shift(&e)) == shift(&self.apply(&e))
        })
    }

    /// `det A = ∏_i ((c_i - 1)(-c_i - 1))^{#W/2}`.
    pub fn determinant(&self) -> BigRational {
        let half = (self.dim() / 2) as i32;
        self.factors.iter().fold(BigRational::one(), |acc, f| {
            let c = to_big(f.c);
            let one = BigRational::one();
            acc * num_traits::pow::Pow::pow((&c - &one) * (-&c - &one), half)
        })
    }
}

fn to_big(q: Rational) -> BigRational {
    BigRational::new(BigInt::from(q.numer()), BigInt::from(q.denom()))
}

/// The Young symmetrizer `Σ_{r ∈ R_T} Σ_{c ∈ C_T} sgn(c) r c` of the
/// row-reading tableau of shape `mu`, as coefficients over `perms`.
fn young_symmetrizer(mu: &Partition, perms: &[Perm]) -> Vec<i64> {
    let n = mu.n();
    let mut row = alloc::vec![0usize; n];
    let mut col = alloc::vec![0usize; n];
    let mut k = 0;
    for (i, &len) in mu.parts().iter().enumerate() {
        for j in 0..len {
            row[k] = i;
            col[k] = j;
            k += 1;
        }
    }
    let rows: Vec<&Perm> = perms
        .iter()
        .filter(|p| (0..n).all(|i| row[p.apply(i)] == row[i]))
        .collect();
    let cols: Vec<&Perm> = perms
        .iter()
        .filter(|p| (0..n).all(|i| col[p.apply(i)] == col[i]))
        .collect();
    let mut e = alloc::vec![0i64; perms.len()];
    for r in &rows {
        for c in &cols {
            e[r.compose(c).rank()] += c.sign();
        }
    }
    e
}

/// Greedy choice of `e·g` that are independent modulo a prime (hence over
/// `Q`), until `target` of them are found.
fn right_ideal_basis(e: &[i64], perms: &[Perm], target: usize) -> Vec<Vec<BigInt>> {
    const P: i64 = 2_147_483_629;
    let support: Vec<(usize, i64)> = e
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    let mut reduced: Vec<(usize, Vec<i64>)> = Vec::new();
    let mut out = Vec::new();
    for g in perms {
        if out.len() == target {
            break;
        }
        let mut v = alloc::vec![0i64; perms.len()];
        for &(x, c) in &support {
            v[perms[x].compose(g).rank()] += c;
        }
        let mut m: Vec<i64> = v.iter().map(|x| x.rem_euclid(P)).collect();
        for (piv, row) in &reduced {
            let f = m[*piv];
            if f != 0 {
                for (a, b) in m.iter_mut().zip(row) {
                    *a = (*a - f * b % P).rem_euclid(P);
                }
            }
        }
        if let Some(piv) = m.iter().position(|&x| x != 0) {
            let inv = mod_pow(m[piv], P - 2, P);
            for a in m.iter_mut() {
                *a = *a * inv % P;
            }
            reduced.push((piv, m));
            out.push(v.into_iter().map(BigInt::from).collect());
        }
    }
    out
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1i64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `(positive, negative, zero)` eigenvalue counts of a real symmetric
/// matrix, by exact symmetric elimination with 1×1 and 2×2 pivots.
pub fn inertia(mut m: Vec<Vec<BigRational>>) -> (usize, usize, usize) {
    let (mut pos, mut neg) = (0, 0);
    let n = m.len();
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        if let Some(&p) = alive.iter().find(|&&i| !m[i][i].is_zero()) {
            let d = m[p][p].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            alive.retain(|&i| i != p);
            for &i in &alive {
                let f = &m[i][p] / &d;
                if f.is_zero() {
                    continue;
                }
                for &j in &alive {
                    let t = &f * &m[p][j];
                    m[i][j] -= t;
                }
            }
            continue;
        }
        let pair = alive
            .iter()
            .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i < j && !m[i][j].is_zero());
        let Some((p, q)) = pair else { break };
        // 2x2 pivot [[0,b],[b,0]] has one eigenvalue of each sign
        pos += 1;
        neg += 1;
        let b = m[p][q].clone();
        alive.retain(|&i| i != p && i != q);
        // Schur complement: subtract [m_ip m_iq] [[0,1/b],[1/b,0]] [m_pj; m_qj]
        let upd: Vec<(usize, usize, BigRational)> = alive
            .iter()
            .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
            .map(|(i, j)| {
                let t = (&m[i][p] * &m[q][j] + &m[i][q] * &m[p][j]) / &b;
                (i, j, t)
            })
            .collect();
        for (i, j, t) in upd {
            m[i][j] -= t;
        }
    }
    let zero = n - pos - neg;
    (pos, neg, zero)
}

/// Eigenvalue sign counts of `A` on one copy of the `W`-type `λ`, together
/// with the multiplicities `[X:λ]` and `[L:λ]` (the rank).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicSignature {
    pub lambda: Partition,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl IsotypicSignature {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    /// Multiplicity of `λ` in the image of `A`.
    pub fn image_multiplicity(&self) -> usize {
        self.positive + self.negative
    }
}

pub fn isotypic_signature(a: &RegularOperator, lambda: &Partition) -> Result<IsotypicSignature> {
    if lambda.n() != a.n() {
        return Err(Error::SizeMismatch(lambda.n(), a.n()));
    }
    let mu = lambda.transpose();
    let e = young_symmetrizer(&mu, &a.perms);
    let basis = right_ideal_basis(&e, &a.perms, lambda.dim() as usize);
    if basis.len() != lambda.dim() as usize {
        return Err(Error::Oracle("right ideal has the wrong dimension".into()));
    }
    let images: Vec<Vec<BigInt>> = basis.iter().map(|b| a.apply(b)).collect();
    let gram: Vec<Vec<BigRational>> = images
        .iter()
        .map(|ab| {
            basis
                .iter()
                .map(|b| BigRational::from_integer(ab.iter().zip(b).map(|(x, y)| x * y).sum()))
                .collect()
        })
        .collect();
    let (positive, negative, zero) = inertia(gram);
    Ok(IsotypicSignature {
        lambda: lambda.clone(),
        positive,
        negative,
        zero,
    })
}

/// Per-type counts and the normalized signature character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub entries: Vec<IsotypicSignature>,
    pub signature: SignatureCharacter,
}

/// Every isotypic signature of `A_{w_0}(ν)`, the zero counts checked against
/// `[X:λ] - [L:λ]` whenever the multiplicities of `L` are known.
pub fn oracle_report(p: &HermitianParameter) -> Result<OracleReport> {
    let a = RegularOperator::build(p)?;
    let m = p.multisegment();
    let x = standard_w_multiplicities(&m)?;
    let l = known_l_multiplicities(&m);
    let mut entries = Vec::new();
    for (i, lam) in partitions(p.n())?.iter().enumerate() {
        let s = isotypic_signature(&a, lam)?;
        if s.positive + s.negative + s.zero != x[i] as usize {
            return Err(Error::Oracle(
                "isotypic block size differs from [X:λ]".into(),
            ));
        }
        if let Some(l) = &l {
            if s.image_multiplicity() != l[i] as usize {
                return Err(Error::Oracle(alloc::format!(
                    "zero count {} at {} but [X:λ]-[L:λ] = {}",
                    s.zero,
                    lam,
                    x[i] - l[i]
                )));
            }
        }
        entries.push(s);
    }
    let raw = SignatureCharacter::new(
        p.n(),
        entries.iter().map(IsotypicSignature::signature).collect(),
    )?;
    let signature = raw.normalize(&max_lambda(&m))?;
    Ok(OracleReport { entries, signature })
}

/// Normalized signature character of `L(ν)` read off the operator.
pub fn unramified_signature(p: &HermitianParameter) -> Result<SignatureCharacter> {
    Ok(oracle_report(p)?.signature)
}

/// Vanishing order at `t = 0` of `det A(ν_0 + t·δ)`:
/// `Σ (#W/2)·ord_{t=0}(c_i(t) ∓ 1)` over the factors with `c_i(0) = ±1`.
/// `None` when the determinant vanishes identically along the line.
pub fn det_order(nu0: &[Rational], direction: &[Rational]) -> Result<Option<usize>> {
    let n = nu0.len();
    if direction.len() != n {
        return Err(Error::SizeMismatch(direction.len(), n));
    }
    let word = reduced_word(n);
    let at0 = factor_scalars(nu0, &word)?;
    let slope = factor_scalars(direction, &word)?;
    let half: usize = (1..=n).product::<usize>() / 2;
    let mut order = 0;
    for (f, s) in at0.iter().zip(&slope) {
        if f.c.abs() == Rational::ONE {
            if s.c.is_zero() {
                return Ok(None);
            }
            order += half;
        }
    }
    Ok(Some(order))
}
