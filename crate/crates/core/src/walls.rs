//! Reducibility walls in parameter space.
//!
//! A Hermitian Langlands datum with `r` blocks is a point of a family
//! `x ↦ 𝔐(x)` where `x = (ν_1, .., ν_M)`, `M = [r/2]`, ranges over the open
//! cone `x_1 > .. > x_M > 0`. Two segments of different blocks are linked
//! exactly on finitely many affine hyperplanes; their complement splits into
//! chambers on which the standard module stays irreducible.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::classification::{bz_to_langlands, langlands_to_bz, LanglandsDatum};
use crate::error::{Error, ParseError, Result};
use crate::multisegment::{Multisegment, Segment};
use crate::rational::Rational;

/// `Σ coeffs[k]·x_k = rhs`, with integer coefficients of gcd one and the
/// first nonzero coefficient positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub coeffs: Vec<i64>,
    pub rhs: Rational,
}

impl Hyperplane {
    fn normalized(mut coeffs: Vec<i64>, mut rhs: Rational) -> Option<Hyperplane> {
        let g = coeffs.iter().fold(0i64, |g, &c| num_integer::gcd(g, c));
        if g == 0 {
            return None;
        }
        let lead = *coeffs.iter().find(|&&c| c != 0).unwrap();
        let g = if lead < 0 { -g } else { g };
        coeffs.iter_mut().for_each(|c| *c /= g);
        rhs = rhs / g;
        Some(Hyperplane { coeffs, rhs })
    }

    /// `ℓ(x)`, checked.
    pub fn linear(&self, x: &[Rational]) -> Option<Rational> {
        self.coeffs
            .iter()
            .zip(x)
            .try_fold(Rational::ZERO, |acc, (&c, &v)| {
                acc.checked_add(v.checked_mul(Rational::from(c))?)
            })
    }

    /// `ℓ(x) - rhs`, checked.
    pub fn eval(&self, x: &[Rational]) -> Option<Rational> {
        self.linear(x)?.checked_sub(self.rhs)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.eval(x).is_some_and(|v| v.is_zero())
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 {
                String::new()
            } else {
                format!("{}", c.abs())
            };
            write!(f, "{sign}{mag}x{}", k + 1)?;
            first = false;
        }
        write!(f, " = {}", self.rhs)
    }
}

/// The affine family through a Hermitian Langlands datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    n: usize,
    /// Tempered part of each block and `ν_block` as a coefficient vector in `x`.
    blocks: Vec<(Multisegment, Vec<i64>)>,
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

/// A crossing along a straight path: parameter in `(0,1)`, hyperplane index,
/// crossing point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCrossing {
    pub s: Rational,
    pub hyperplane: usize,
    pub point: Vec<Rational>,
}

/// A transversal straight path; `base` is the (possibly perturbed) start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPath {
    pub base: Vec<Rational>,
    pub crossings: Vec<FamilyCrossing>,
}

const MAX_PERTURBATIONS: usize = 256;

impl Family {
    /// The family of `m` together with its coordinates `x`.
    pub fn of(m: &Multisegment) -> Result<(Family, Vec<Rational>)> {
        let l = bz_to_langlands(m);
        if !l.is_hermitian_shape() {
            return Err(Error::NotHermitian(m.to_string()));
        }
        let r = l.block_sizes.len();
        let dim = r / 2;
        let blocks = (0..r)
            .map(|b| {
                let mut coeff = alloc::vec![0i64; dim];
                if b < dim {
                    coeff[b] = 1;
                } else if r - 1 - b < dim {
                    coeff[r - 1 - b] = -1;
                }
                (l.tempered_parts[b].clone(), coeff)
            })
            .collect();
        let x = l.nu[..dim].to_vec();
        let mut fam = Family {
            n: m.n(),
            blocks,
            dim,
            hyperplanes: Vec::new(),
        };
        fam.hyperplanes = fam.compute_hyperplanes();
        Ok((fam, x))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of free coordinates.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|(t, _)| t.n()).collect()
    }

    pub fn tempered_parts(&self) -> Vec<Multisegment> {
        self.blocks.iter().map(|(t, _)| t.clone()).collect()
    }

    fn nu_of(&self, coeff: &[i64], x: &[Rational]) -> Rational {
        coeff.iter().zip(x).map(|(&c, &v)| v * c).sum()
    }

    /// `x_1 > .. > x_M > 0`.
    pub fn in_domain(&self, x: &[Rational]) -> bool {
        x.len() == self.dim
            && x.windows(2).all(|w| w[0] > w[1])
            && x.last().is_none_or(|v| v.is_positive())
    }

    pub fn point(&self, x: &[Rational]) -> Multisegment {
        debug_assert!(self.in_domain(x));
        let datum = LanglandsDatum {
            block_sizes: self.block_sizes(),
            tempered_parts: self.tempered_parts(),
            nu: self.blocks.iter().map(|(_, c)| self.nu_of(c, x)).collect(),
        };
        langlands_to_bz(&datum)
    }

    fn compute_hyperplanes(&self) -> Vec<Hyperplane> {
        let mut out = Vec::new();
        for (a, (ta, ca)) in self.blocks.iter().enumerate() {
            for (b, (tb, cb)) in self.blocks.iter().enumerate() {
                if a == b {
                    continue;
                }
                let form: Vec<i64> = cb.iter().zip(ca).map(|(p, q)| p - q).collect();
                for s in ta.segments() {
                    for t in tb.segments() {
                        // s (block a) precedes t (block b) iff the start
                        // difference d is an integer with
                        // max(1, ls-lt+1) <= d <= ls
                        let (ls, lt) = (s.len() as i64, t.len() as i64);
                        let offset = Rational::new(ls - lt, 2).unwrap();
                        for d in (1.max(ls - lt + 1))..=ls {
                            if let Some(h) =
                                Hyperplane::normalized(form.clone(), Rational::from(d) - offset)
                            {
                                out.push(h);
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        // A form whose prefix sums are all nonnegative is positive on the
        // cone (write x as a positive combination of (1,..,1,0,..,0)), so
        // such a hyperplane with rhs <= 0 misses the domain.
        out.retain(|h| {
            let positive = h
                .coeffs
                .iter()
                .scan(0i64, |acc, &c| {
                    *acc += c;
                    Some(*acc)
                })
                .all(|p| p >= 0);
            !(positive && !h.rhs.is_positive())
        });
        out
    }

    /// Indices of the hyperplanes through `x`.
    pub fn walls_at(&self, x: &[Rational]) -> Vec<usize> {
        (0..self.hyperplanes.len())
            .filter(|&i| self.hyperplanes[i].contains(x))
            .collect()
    }

    pub fn is_chamber_point(&self, x: &[Rational]) -> bool {
        self.in_domain(x) && self.walls_at(x).is_empty()
    }

    /// Sign of `ℓ(x) - rhs` for every hyperplane.
    pub fn chamber(&self, x: &[Rational]) -> Vec<i32> {
        self.hyperplanes
            .iter()
            .map(|h| h.eval(x).map_or(0, |v| v.signum()))
            .collect()
    }

    /// A point of the chamber next to the origin, where every coordinate is
    /// below `1/2` and the module is unitary.
    pub fn unitary_point(&self) -> Vec<Rational> {
        let m = self.dim as i64;
        (0..m)
            .map(|i| Rational::new(m - i, 2 * m + 2).unwrap())
            .collect()
    }

    /// A point of the unique chamber on which every coordinate and every
    /// coordinate difference is unbounded: `t·(M, .., 1)` beyond all walls.
    pub fn infinity_point(&self) -> Vec<Rational> {
        let m = self.dim as i64;
        let v: Vec<Rational> = (0..m).map(|i| Rational::from(m - i)).collect();
        let mut t = Rational::ONE;
        for h in &self.hyperplanes {
            let lv = h.linear(&v).unwrap();
            if !lv.is_zero() {
                let cross = (h.rhs / lv).abs();
                if cross >= t {
                    t = Rational::from(cross.floor() + 1);
                }
            }
        }
        v.into_iter().map(|c| c * t).collect()
    }

    pub fn is_infinity_chamber(&self, x: &[Rational]) -> bool {
        self.chamber(x) == self.chamber(&self.infinity_point())
    }

    pub fn is_unitary_chamber(&self, x: &[Rational]) -> bool {
        self.chamber(x) == self.chamber(&self.unitary_point())
    }

    /// Crossings of the straight path `base → target`, sorted along the
    /// path. Both ends must be chamber points. If the raw segment passes
    /// through an intersection of walls, `base` is moved inside its chamber
    /// by `c/P_k` on coordinate `k` (`P_k` the `k`-th prime beyond a
    /// denominator bound, `c = 1, 2, ..`) until every crossing is simple.
    pub fn path(&self, base: &[Rational], target: &[Rational]) -> Result<FamilyPath> {
        if !self.is_chamber_point(base) || !self.is_chamber_point(target) {
            return Err(Error::InvalidParameter(
                "path ends must avoid all walls".into(),
            ));
        }
        if let Some(p) = self.try_path(base, target) {
            return Ok(p);
        }
        let chamber = self.chamber(base);
        let bound = base
            .iter()
            .chain(target)
            .map(|v| v.denom())
            .chain(self.hyperplanes.iter().map(|h| h.rhs.denom()))
            .max()
            .unwrap_or(1)
            .max(2)
            * 16;
        let primes = primes_above(bound, self.dim);
        for c in 1..=MAX_PERTURBATIONS as i64 {
            let moved: Option<Vec<Rational>> = base
                .iter()
                .zip(&primes)
                .map(|(&v, &p)| v.checked_add(Rational::new(c, p)?))
                .collect();
            let Some(moved) = moved else { continue };
            if !self.in_domain(&moved) || self.chamber(&moved) != chamber {
                continue;
            }
            if let Some(p) = self.try_path(&moved, target) {
                return Ok(p);
            }
        }
        Err(Error::PerturbationFailed(MAX_PERTURBATIONS))
    }

    fn try_path(&self, base: &[Rational], target: &[Rational]) -> Option<FamilyPath> {
        let dir: Vec<Rational> = target
            .iter()
            .zip(base)
            .map(|(&t, &b)| t.checked_sub(b))
            .collect::<Option<_>>()?;
        let mut crossings = Vec::new();
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let slope = h.linear(&dir)?;
            if slope.is_zero() {
                continue;
            }
            let s = h.eval(base)?.checked_neg()?.checked_div(slope)?;
            if s.is_positive() && s < Rational::ONE {
                let point = base
                    .iter()
                    .zip(&dir)
                    .map(|(&b, &d)| b.checked_add(d.checked_mul(s)?))
                    .collect::<Option<Vec<_>>>()?;
                crossings.push(FamilyCrossing {
                    s,
                    hyperplane: i,
                    point,
                });
            }
        }
        crossings.sort_by_key(|a| a.s);
        if crossings.windows(2).any(|w| w[0].s == w[1].s) {
            return None;
        }
        if crossings.iter().any(|c| self.walls_at(&c.point).len() != 1) {
            return None;
        }
        Some(FamilyPath {
            base: base.to_vec(),
            crossings,
        })
    }

    /// Two chamber points on either side of the single wall through `x`,
    /// close enough that no other wall separates them from `x`.
    pub fn flanking_points(&self, x: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>)> {
        let walls = self.walls_at(x);
        if walls.len() != 1 || !self.in_domain(x) {
            return Err(Error::InvalidParameter(
                "point must lie on exactly one wall".into(),
            ));
        }
        let normal: Vec<Rational> = self.hyperplanes[walls[0]]
            .coeffs
            .iter()
            .map(|&c| Rational::from(c))
            .collect();
        let own = self.chamber(x);
        let mut delta = Rational::new(1, 8).unwrap();
        for _ in 0..40 {
            let shift = |sign: i64| -> Option<Vec<Rational>> {
                x.iter()
                    .zip(&normal)
                    .map(|(&v, &c)| {
                        v.checked_add(c.checked_mul(delta)?.checked_mul(Rational::from(sign))?)
                    })
                    .collect()
            };
            if let (Some(lo), Some(hi)) = (shift(-1), shift(1)) {
                let ok = |p: &[Rational]| {
                    self.is_chamber_point(p)
                        && self
                            .chamber(p)
                            .iter()
                            .zip(&own)
                            .enumerate()
                            .all(|(i, (a, b))| i == walls[0] || a == b)
                };
                if ok(&lo) && ok(&hi) {
                    return Ok((lo, hi));
                }
            }
            delta = delta / 2;
        }
        Err(Error::PerturbationFailed(40))
    }
}

fn primes_above(bound: i64, count: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut p = bound + 1;
    while out.len() < count {
        if (2..).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            out.push(p);
        }
        p += 1;
    }
    out
}

/// Rank of a rational matrix by exact elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c] / m[r][c];
                for k in c..cols {
                    let v = m[r][k];
                    m[i][k] = m[i][k] - f * v;
                }
            }
        }
        r += 1;
    }
    r
}

/// An unramified Hermitian parameter `ν_1 > .. > ν_N`, `ν_i + ν_{N+1-i} = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HermitianParameter {
    nu: Vec<Rational>,
}

impl HermitianParameter {
    pub fn new(nu: Vec<Rational>) -> Result<HermitianParameter> {
        let n = nu.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty parameter".into()));
        }
        if nu.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameter(
                "entries must be strictly decreasing".into(),
            ));
        }
        if (0..n).any(|i| nu[i] + nu[n - 1 - i] != Rational::ZERO) {
            return Err(Error::InvalidParameter(
                "entries must satisfy nu_i + nu_{N+1-i} = 0".into(),
            ));
        }
        Ok(HermitianParameter { nu })
    }

    /// From folded coordinates `x_1 > .. > x_M > 0`, `M = [N/2]`.
    pub fn from_x(n: usize, x: &[Rational]) -> Result<HermitianParameter> {
        if x.len() != n / 2 {
            return Err(Error::InvalidParameter(format!(
                "N = {n} needs {} coordinates, got {}",
                n / 2,
                x.len()
            )));
        }
        let mut nu = x.to_vec();
        if n % 2 == 1 {
            nu.push(Rational::ZERO);
        }
        nu.extend(x.iter().rev().map(|&v| -v));
        HermitianParameter::new(nu)
    }

    /// Parses either the full `ν` or, when `n` is given and the entry count
    /// is `[n/2]`, the folded coordinates.
    pub fn parse(s: &str, n: Option<usize>) -> Result<HermitianParameter> {
        let values: Vec<Rational> = s
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<core::result::Result<_, _>>()?;
        match n {
            Some(n) if values.len() == n / 2 && values.len() != n => {
                HermitianParameter::from_x(n, &values)
            }
            Some(n) if values.len() != n => {
                Err(ParseError::Parameter(s.into(), "wrong number of entries").into())
            }
            _ => HermitianParameter::new(values),
        }
    }

    pub fn n(&self) -> usize {
        self.nu.len()
    }

    /// `M = [N/2]`.
    pub fn m(&self) -> usize {
        self.nu.len() / 2
    }

    pub fn nu(&self) -> &[Rational] {
        &self.nu
    }

    pub fn x(&self) -> &[Rational] {
        &self.nu[..self.m()]
    }

    /// `#{i | x_i > 1/2}`.
    pub fn r(&self) -> usize {
        self.x().iter().filter(|&&v| v > Rational::HALF).count()
    }

    pub fn multisegment(&self) -> Multisegment {
        Multisegment::new(self.nu.iter().map(|&v| Segment::singleton(v)).collect())
    }

    pub fn walls_through(&self) -> Vec<WallDescriptor> {
        all_walls(self.n())
            .into_iter()
            .filter(|w| w.contains(self.x()))
            .collect()
    }

    /// Pairs `(i, j)`, `i < j` (1-based), with `ν_i - ν_j = 1`.
    pub fn linking_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.nu[i] - self.nu[j] == Rational::ONE {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// The walls through this point cut out exactly this point of `D_M`.
    pub fn is_isolated_unitary(&self) -> bool {
        let walls = self.walls_through();
        let m = self.m();
        if m == 0 || walls.is_empty() {
            return false;
        }
        let rows: Vec<Vec<Rational>> = walls.iter().map(|w| w.equation(m).0).collect();
        let isolated = rank(&rows) == m;
        debug_assert!(!isolated || crate::classification::is_unitary(&self.multisegment()));
        isolated
    }
}

impl fmt::Display for HermitianParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.nu.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HermitianParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for HermitianParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HermitianParameter::parse(s, None)
    }
}

/// Reducibility walls of the unramified family, in folded coordinates
/// (indices 1-based, `i < j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallDescriptor {
    /// `x_i - x_j = 1`
    Minus(usize, usize),
    /// `x_i + x_j = 1`
    Plus(usize, usize),
    /// `x_i = 1/2`
    Half(usize),
    /// `x_i = 1`, odd `N` only
    One(usize),
}

impl WallDescriptor {
    /// Number of linking pairs at a generic point of the wall.
    pub fn height(&self) -> usize {
        match self {
            WallDescriptor::Half(_) => 1,
            _ => 2,
        }
    }

    /// `(coefficients, rhs)` in `m` coordinates.
    pub fn equation(&self, m: usize) -> (Vec<Rational>, Rational) {
        let mut c = alloc::vec![Rational::ZERO; m];
        let rhs = match *self {
            WallDescriptor::Minus(i, j) => {
                c[i - 1] = Rational::ONE;
                c[j - 1] = -Rational::ONE;
                Rational::ONE
            }
            WallDescriptor::Plus(i, j) => {
                c[i - 1] = Rational::ONE;
                c[j - 1] = Rational::ONE;
                Rational::ONE
            }
            WallDescriptor::Half(i) => {
                c[i - 1] = Rational::ONE;
                Rational::HALF
            }
            WallDescriptor::One(i) => {
                c[i - 1] = Rational::ONE;
                Rational::ONE
            }
        };
        (c, rhs)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        let (c, rhs) = self.equation(x.len());
        c.iter().zip(x).map(|(&a, &b)| a * b).sum::<Rational>() == rhs
    }

    /// Recognizes a family hyperplane of the unramified arrangement.
    pub fn from_hyperplane(h: &Hyperplane) -> Option<WallDescriptor> {
        let nz: Vec<(usize, i64)> = h
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + 1, c))
            .collect();
        match nz.as_slice() {
            [(i, 1)] if h.rhs == Rational::HALF => Some(WallDescriptor::Half(*i)),
            [(i, 1)] if h.rhs == Rational::ONE => Some(WallDescriptor::One(*i)),
            [(i, 1), (j, -1)] if h.rhs == Rational::ONE => Some(WallDescriptor::Minus(*i, *j)),
            [(i, 1), (j, 1)] if h.rhs == Rational::ONE => Some(WallDescriptor::Plus(*i, *j)),
            _ => None,
        }
    }
}

impl fmt::Display for WallDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallDescriptor::Minus(i, j) => write!(f, "x{i}-x{j}=1"),
            WallDescriptor::Plus(i, j) => write!(f, "x{i}+x{j}=1"),
            WallDescriptor::Half(i) => write!(f, "x{i}=1/2"),
            WallDescriptor::One(i) => write!(f, "x{i}=1"),
        }
    }
}

/// Every wall of the unramified arrangement for `GL_N`.
pub fn all_walls(n: usize) -> Vec<WallDescriptor> {
    let m = n / 2;
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            out.push(WallDescriptor::Minus(i, j));
            out.push(WallDescriptor::Plus(i, j));
        }
        out.push(WallDescriptor::Half(i));
        if n % 2 == 1 {
            out.push(WallDescriptor::One(i));
        }
    }
    out
}

/// Grid points `x = (a_1/q, .., a_M/q)` with `bound·q > a_1 > .. > a_M > 0`,
/// grouped by their position relative to every wall (`-1`, `0`, `+1` per
/// wall of [`all_walls`]). Strata with more than `per_stratum` points keep
/// an evenly spread selection.
pub fn strata_grid(
    n: usize,
    q: i64,
    bound: i64,
    per_stratum: usize,
) -> Result<BTreeMap<Vec<i8>, Vec<HermitianParameter>>> {
    let m = n / 2;
    let walls: Vec<(Vec<Rational>, Rational)> =
        all_walls(n).iter().map(|w| w.equation(m)).collect();
    let mut strata: BTreeMap<Vec<i8>, Vec<HermitianParameter>> = BTreeMap::new();
    let top = bound.checked_mul(q).ok_or(Error::Overflow("strata grid"))?;
    let mut a: Vec<i64> = (0..m as i64).map(|i| m as i64 - i).collect();
    if m == 0 || a[0] >= top {
        return Ok(strata);
    }
    loop {
        let x: Vec<Rational> = a.iter().map(|&v| Rational::new(v, q).unwrap()).collect();
        let key = walls
            .iter()
            .map(|(c, rhs)| {
                let v: Rational = c.iter().zip(&x).map(|(&ci, &xi)| ci * xi).sum();
                v.cmp(rhs) as i8
            })
            .collect();
        strata
            .entry(key)
            .or_default()
            .push(HermitianParameter::from_x(n, &x)?);
        // next strictly decreasing tuple, last coordinate fastest
        let mut k = m;
        loop {
            if k == 0 {
                for pts in strata.values_mut() {
                    thin(pts, per_stratum);
                }
                return Ok(strata);
            }
            k -= 1;
            let cap = if k == 0 { top - 1 } else { a[k - 1] - 1 };
            if a[k] < cap {
                a[k] += 1;
                for i in k + 1..m {
                    a[i] = (m - i) as i64;
                }
                break;
            }
        }
    }
}

fn thin<T: Clone>(v: &mut Vec<T>, keep: usize) {
    if v.len() > keep && keep > 0 {
        let len = v.len();
        *v = (0..keep)
            .map(|i| v[i * (len - 1) / (keep - 1).max(1)].clone())
            .collect();
    }
}

/// A crossing of the unramified arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub t: Rational,
    pub wall: WallDescriptor,
    pub point: HermitianParameter,
}

/// Crossings of the straight path between two wall-free parameters, in path
/// order (the base may be perturbed inside its chamber, see [`Family::path`]).
pub fn chamber_path(
    base: &HermitianParameter,
    target: &HermitianParameter,
) -> Result<Vec<Crossing>> {
    if base.n() != target.n() {
        return Err(Error::SizeMismatch(base.n(), target.n()));
    }
    if base == target {
        return Ok(Vec::new());
    }
    let (fam, _) = Family::of(&base.multisegment())?;
    let path = fam.path(base.x(), target.x())?;
    path.crossings
        .into_iter()
        .map(|c| {
            let wall = WallDescriptor::from_hyperplane(&fam.hyperplanes()[c.hyperplane])
                .ok_or_else(|| Error::InvalidParameter("unexpected wall".into()))?;
            Ok(Crossing {
                t: c.s,
                wall,
                point: HermitianParameter::from_x(base.n(), &c.point)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn hp(n: usize, x: &str) -> HermitianParameter {
        HermitianParameter::parse(x, Some(n)).unwrap()
    }

    #[test]
    fn walls_through_examples() {
        assert!(hp(2, "1/4").walls_through().is_empty());
        assert_eq!(hp(4, "1/2,1/4").walls_through(), [WallDescriptor::Half(1)]);
        let mut w = hp(4, "3/2,1/2").walls_through();
        w.sort();
        assert_eq!(w, [WallDescriptor::Minus(1, 2), WallDescriptor::Half(2)]);
    }

    #[test]
    fn heights_and_linking_pairs() {
        assert_eq!(WallDescriptor::Half(1).height(), 1);
        assert_eq!(WallDescriptor::One(1).height(), 2);
        assert_eq!(WallDescriptor::Minus(1, 2).height(), 2);
        assert!(hp(4, "3/5,1/5").linking_pairs().is_empty());
        assert_eq!(hp(2, "1/2").linking_pairs(), [(1, 2)]);
        assert_eq!(hp(3, "1").linking_pairs(), [(1, 2), (2, 3)]);
    }

    #[test]
    fn isolated_points() {
        assert!(hp(4, "3/2,1/2").is_isolated_unitary());
        assert!(!hp(4, "3/5,1/5").is_isolated_unitary());
        assert!(!hp(4, "1/2,1/4").is_isolated_unitary());
    }

    #[test]
    fn paths() {
        let c = chamber_path(&hp(2, "1/4"), &hp(2, "3/4")).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].t, c[0].wall), (q("1/2"), WallDescriptor::Half(1)));
        assert_eq!(c[0].point, hp(2, "1/2"));
        assert!(chamber_path(&hp(2, "1/4"), &hp(2, "1/4"))
            .unwrap()
            .is_empty());

        let c = chamber_path(&hp(4, "2/5,1/5"), &hp(4, "8/5,6/5")).unwrap();
        let walls: Vec<WallDescriptor> = c.iter().map(|c| c.wall).collect();
        assert_eq!(
            walls,
            [
                WallDescriptor::Half(1),
                WallDescriptor::Plus(1, 2),
                WallDescriptor::Half(2),
            ]
        );
        assert!(c.windows(2).all(|w| w[0].t < w[1].t));
    }

    #[test]
    fn perturbation_avoids_intersections() {
        // the straight line from (1/4,1/8) to (11/4,7/8) meets x2 = 1/2 and
        // x1 - x2 = 1 simultaneously at (3/2,1/2)
        let base = hp(4, "1/4,1/8");
        let target = hp(4, "11/4,7/8");
        let c = chamber_path(&base, &target).unwrap();
        assert!(c.iter().all(|c| c.point.walls_through().len() == 1));
        assert_eq!(c.len(), 4);
        assert_eq!(chamber_path(&base, &target).unwrap(), c);
    }

    #[test]
    fn family_hyperplanes() {
        let m: Multisegment = "3/4;[-1/2,1/2];-3/4".parse().unwrap();
        let (fam, x) = Family::of(&m).unwrap();
        assert_eq!(x, [q("3/4")]);
        let hs: Vec<String> = fam.hyperplanes().iter().map(|h| h.to_string()).collect();
        assert_eq!(hs, ["x1 = 1/2", "x1 = 3/2"]);
        assert_eq!(
            fam.point(&[q("3/2")]),
            "3/2;[-1/2,1/2];-3/2".parse().unwrap()
        );

        let m: Multisegment = "[1/4,5/4];[-5/4,-1/4]".parse().unwrap();
        let (fam, _) = Family::of(&m).unwrap();
        let hs: Vec<String> = fam.hyperplanes().iter().map(|h| h.to_string()).collect();
        assert_eq!(hs, ["x1 = 1/2", "x1 = 1"]);
        assert!(fam.is_infinity_chamber(&[q("5/4")]));
        assert!(fam.is_unitary_chamber(&[q("1/4")]));
        assert!(!fam.is_unitary_chamber(&[q("3/4")]));
    }

    /// Feasibility of `{x_1 > .. > x_M > 0} ∩ {equations}` by Fourier–Motzkin
    /// elimination with strict inequalities.
    fn feasible(m: usize, eqs: &[(Vec<Rational>, Rational)]) -> bool {
        // constraints a·x > b
        let mut ineqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for i in 0..m {
            let mut a = alloc::vec![Rational::ZERO; m];
            a[i] = Rational::ONE;
            if i + 1 < m {
                a[i + 1] = -Rational::ONE;
            }
            ineqs.push((a, Rational::ZERO));
        }
        // substitute equalities
        let mut eqs = eqs.to_vec();
        while let Some((a, b)) = eqs.pop() {
            let Some(k) = a.iter().position(|c| !c.is_zero()) else {
                if !b.is_zero() {
                    return false;
                }
                continue;
            };
            let sub = |(c, d): (Vec<Rational>, Rational)| {
                let f = c[k] / a[k];
                let c2: Vec<Rational> = c.iter().zip(&a).map(|(&x, &y)| x - f * y).collect();
                (c2, d - f * b)
            };
            ineqs = ineqs.into_iter().map(sub).collect();
            eqs = eqs.into_iter().map(sub).collect();
        }
        for k in 0..m {
            let (zero, rest): (Vec<_>, Vec<_>) =
                ineqs.into_iter().partition(|(a, _)| a[k].is_zero());
            let (pos, neg): (Vec<_>, Vec<_>) =
                rest.into_iter().partition(|(a, _)| a[k].is_positive());
            ineqs = zero;
            for (ap, bp) in &pos {
                for (an, bn) in &neg {
                    let (fp, fn_) = (an[k].abs(), ap[k].abs());
                    let a: Vec<Rational> =
                        ap.iter().zip(an).map(|(&x, &y)| x * fp + y * fn_).collect();
                    ineqs.push((a, *bp * fp + *bn * fn_));
                }
            }
        }
        ineqs.iter().all(|(_, b)| b.is_negative())
    }

    #[test]
    fn intersection_rules() {
        use WallDescriptor::*;
        for n in 4..=9 {
            let m = n / 2;
            let eq = |w: WallDescriptor| w.equation(m);
            let empty = |a: WallDescriptor, b: WallDescriptor| !feasible(m, &[eq(a), eq(b)]);
            for i in 1..=m {
                for j in i + 1..=m {
                    assert!(empty(Plus(i, j), Minus(i, j)));
                    assert!(empty(Minus(i, j), Half(i)));
                    assert!(empty(Plus(i, j), Half(i)));
                    assert!(empty(Plus(i, j), Half(j)));
                    assert!(empty(Half(i), Half(j)));
                    if n % 2 == 1 {
                        assert!(empty(Minus(i, j), One(i)));
                        assert!(empty(Plus(i, j), One(i)));
                        assert!(empty(Plus(i, j), One(j)));
                        assert!(empty(One(i), One(j)));
                    }
                    for k in j + 1..=m {
                        assert!(empty(Minus(i, j), Minus(i, k)));
                        assert!(empty(Minus(i, k), Minus(j, k)));
                        assert!(empty(Plus(i, j), Plus(i, k)));
                        assert!(empty(Plus(i, k), Plus(j, k)));
                        assert!(empty(Plus(i, j), Plus(j, k)));
                        assert!(empty(Plus(i, j), Minus(j, k)));
                    }
                }
            }
            // sanity: a genuinely meeting pair
            if m >= 2 {
                assert!(!empty(Minus(1, 2), Half(2)));
            }
        }
    }

    #[test]
    fn height_matches_linking_pairs_at_generic_points() {
        // generic points of each wall for N = 4, 5
        let cases = [
            (4, "1/2,1/5", Half(1)),
            (4, "6/5,1/5", Minus(1, 2)),
            (4, "4/5,1/5", Plus(1, 2)),
            (5, "1,1/5", One(1)),
            (5, "7/10,1/2", Half(2)),
        ];
        use WallDescriptor::*;
        for (n, x, w) in cases {
            let p = hp(n, x);
            assert_eq!(p.walls_through(), [w]);
            assert_eq!(p.linking_pairs().len(), w.height());
            assert_eq!(p.multisegment().height(), w.height());
        }
    }
}
