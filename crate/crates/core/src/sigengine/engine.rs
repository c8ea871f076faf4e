//! Signature of `L(𝔐)` for Hermitian `𝔐`, assembled from the chamber at
//! infinity, wall crossings along straight paths inside the family of `𝔐`,
//! the closed family formula, and Zelevinsky duality.
//!
//! Every route yields a [`SignatureCharacter`] tagged with the conjectures
//! it used; the engine keeps the best one (proven first, then fewest
//! conjectures).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::crossing::{cross_height1, cross_height2, matches_sgn_twist, orientation};
use super::family::sigma_family;
use super::infinity::{sig_at_infinity, sig_at_infinity_unramified, InfinityInput, MAX_INFINITY_N};
use crate::classification::is_unitary;
use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::rational::Rational;
use crate::walls::{Family, HermitianParameter};
use crate::wmodule::{
    known_l_multiplicities, max_lambda, standard_w_multiplicities, Conjecture, Provenance,
    SignatureCharacter,
};

/// Largest `N` accepted by [`signature_unramified`] outside oracle mode.
pub const MAX_UNRAMIFIED_N: usize = 12;
/// Largest `N` accepted in oracle mode.
pub const MAX_ORACLE_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    ProvenOnly,
    AllowConjectures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnramifiedMode {
    ProvenOnly,
    AllowConjectures,
    /// Exact signatures of the intertwining operator.
    Oracle,
}

/// Memoizing signature computer.
#[derive(Default)]
pub struct Engine {
    memo: BTreeMap<Multisegment, Result<SignatureCharacter>>,
    active: BTreeSet<Multisegment>,
}

fn rank_key(s: &SignatureCharacter) -> (bool, usize) {
    (
        s.provenance() == Provenance::Conjectural,
        s.conjectures().len(),
    )
}

/// Best candidate: proven first, then fewest conjectures, then earliest.
/// With no success, the first error.
fn pick(cands: Vec<Result<SignatureCharacter>>) -> Result<SignatureCharacter> {
    let mut best: Option<SignatureCharacter> = None;
    let mut first_err = None;
    for c in cands {
        match c {
            Ok(s) => {
                if best.as_ref().is_none_or(|b| rank_key(&s) < rank_key(b)) {
                    best = Some(s);
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    best.ok_or_else(|| first_err.unwrap_or_else(|| Error::NoRoute(String::new())))
}

fn is_proven(r: &Result<SignatureCharacter>) -> bool {
    matches!(r, Ok(s) if s.provenance() == Provenance::Proven)
}

fn tag(s: SignatureCharacter, ramified: bool, c: Conjecture) -> SignatureCharacter {
    if ramified {
        s.with_conjecture(c)
    } else {
        s
    }
}

/// `𝔐` of the shape `𝔐^N_ν`: singleton blocks `[0]` around an optional
/// middle made of `[-1/2,1/2]` copies and at most one `[0]`. Returns the
/// number of singleton pairs.
fn family_pairs(fam: &Family) -> Option<usize> {
    let parts = fam.tempered_parts();
    let sizes = fam.block_sizes();
    let dim = fam.dim();
    let zero = Multisegment::singletons(&[Rational::ZERO]);
    if parts[..dim].iter().any(|p| *p != zero) {
        return None;
    }
    if sizes.len() % 2 == 1 {
        let mid = &parts[dim];
        let halves = mid.segments().iter().filter(|s| s.len() == 2).count();
        let zeros = mid.segments().iter().filter(|s| s.len() == 1).count();
        let ok = mid
            .segments()
            .iter()
            .all(|s| s.center() == Rational::ZERO && s.len() <= 2)
            && zeros == fam.n() % 2
            && halves * 2 + zeros == mid.n();
        if !ok {
            return None;
        }
    }
    Some(dim)
}

impl Engine {
    pub fn new() -> Engine {
        Engine::default()
    }

    /// `Σ(L(𝔐))` normalized at the maximal W-type. In [`Mode::ProvenOnly`]
    /// a value that needs a conjecture is reported as
    /// [`Error::RequiresConjecture`].
    pub fn signature(&mut self, m: &Multisegment, mode: Mode) -> Result<SignatureCharacter> {
        let s = self.best(m)?;
        if mode == Mode::ProvenOnly && s.provenance() == Provenance::Conjectural {
            let names: Vec<&str> = s.conjectures().iter().map(Conjecture::name).collect();
            return Err(Error::RequiresConjecture(names.join(", ")));
        }
        Ok(s)
    }

    /// Every route that succeeds at `m`, best first (for cross-checking).
    pub fn all_routes(&mut self, m: &Multisegment) -> Result<Vec<SignatureCharacter>> {
        let (fam, x) = Family::of(m)?;
        let ramified = fam.block_sizes().iter().any(|&b| b > 1);
        let mut out: Vec<SignatureCharacter> = if fam.is_chamber_point(&x) {
            self.chamber_routes(m, &fam, &x, ramified, false)
        } else {
            self.wall_routes(m, &fam, &x, ramified, false)
        }
        .into_iter()
        .filter_map(Result::ok)
        .collect();
        out.sort_by_key(rank_key);
        Ok(out)
    }

    fn best(&mut self, m: &Multisegment) -> Result<SignatureCharacter> {
        if let Some(r) = self.memo.get(m) {
            return r.clone();
        }
        if !self.active.insert(m.clone()) {
            return Err(Error::NoRoute(format!("{m} (cyclic dependency)")));
        }
        let r = self.compute(m);
        self.active.remove(m);
        self.memo.insert(m.clone(), r.clone());
        r
    }

    fn compute(&mut self, m: &Multisegment) -> Result<SignatureCharacter> {
        if m.is_empty() || !m.is_hermitian() {
            return Err(Error::NotHermitian(m.to_string()));
        }
        if is_unitary(m) {
            if let Some(v) = known_l_multiplicities(m) {
                return SignatureCharacter::from_multiplicities(m.n(), &v);
            }
        }
        let (fam, x) = Family::of(m)?;
        let ramified = fam.block_sizes().iter().any(|&b| b > 1);
        let cands = if fam.is_chamber_point(&x) {
            self.chamber_routes(m, &fam, &x, ramified, true)
        } else {
            self.wall_routes(m, &fam, &x, ramified, true)
        };
        let s = pick(cands).map_err(|e| match e {
            Error::NoRoute(_) => Error::NoRoute(m.to_string()),
            e => e,
        })?;
        if let Some(v) = known_l_multiplicities(m) {
            if !s.consistent_with(&v) {
                return Err(Error::Oracle(format!(
                    "{s:?} is inconsistent with the multiplicities of L({m})"
                )));
            }
        }
        Ok(s)
    }

    fn chamber_routes(
        &mut self,
        m: &Multisegment,
        fam: &Family,
        x: &[Rational],
        ramified: bool,
        lazy: bool,
    ) -> Vec<Result<SignatureCharacter>> {
        let lmax = max_lambda(m);
        let mut cands = Vec::new();
        let family = family_pairs(fam).map(|p| {
            let r = x
                .iter()
                .filter(|&&v| v > Rational::new(1, 2).unwrap())
                .count();
            sigma_family(m.n(), p, r).and_then(|s| s.normalize(&lmax))
        });

        let infinity = self.infinity_value(m, fam);
        if fam.is_infinity_chamber(x) {
            cands.push(infinity.clone());
        }
        if !(lazy && cands.iter().any(is_proven)) {
            let u = fam.unitary_point();
            let start = standard_w_multiplicities(&fam.point(&u))
                .and_then(|v| SignatureCharacter::from_multiplicities(m.n(), &v));
            cands.push(start.and_then(|s| self.walk(fam, &u, s, x, ramified, &lmax)));
        }
        if !(lazy && cands.iter().any(is_proven)) {
            if let Ok(inf) = infinity {
                let base = fam.infinity_point();
                cands.push(self.walk(fam, &base, inf, x, ramified, &lmax));
            }
        }
        if let Some(f) = family {
            // a proven derivation must reproduce the closed formula
            if let (Ok(fv), Some(Ok(p))) = (&f, cands.iter().find(|c| is_proven(c))) {
                if fv.coeffs() != p.coeffs() {
                    return alloc::vec![Err(Error::Oracle(format!(
                        "family formula {fv:?} disagrees with {p:?} at {m}"
                    )))];
                }
            }
            if !cands.iter().any(is_proven) {
                // among conjectural values the closed formula is preferred
                cands.insert(0, f);
            }
        }
        cands
    }

    fn infinity_value(&mut self, m: &Multisegment, fam: &Family) -> Result<SignatureCharacter> {
        let lmax = max_lambda(m);
        if fam.block_sizes().iter().all(|&b| b == 1) {
            return sig_at_infinity_unramified(m.n())?.normalize(&lmax);
        }
        if m.n() > MAX_INFINITY_N {
            return Err(Error::Bounds {
                what: "N",
                value: m.n(),
                max: MAX_INFINITY_N,
            });
        }
        sig_at_infinity(&InfinityInput::from_tempered(&fam.tempered_parts())?, &lmax)
    }

    /// Carries `start` (the value at `base`) to `target` across every wall
    /// of the straight path.
    fn walk(
        &mut self,
        fam: &Family,
        base: &[Rational],
        start: SignatureCharacter,
        target: &[Rational],
        ramified: bool,
        lmax: &crate::Partition,
    ) -> Result<SignatureCharacter> {
        let path = fam.path(base, target)?;
        let mut sigma = start;
        for c in &path.crossings {
            let q = fam.point(&c.point);
            match q.preceding_pairs().as_slice() {
                [(i, j)] => {
                    let mp = q.elementary_operation(*i, *j)?;
                    let sp = self.best(&mp)?;
                    let eps = orientation(&sigma, &sp)?;
                    let (plus, _) = cross_height1(&sigma, &(sp * eps))?;
                    sigma = tag(plus, ramified, Conjecture::OddJantzenLength);
                }
                [_, _] => sigma = tag(sigma, ramified, Conjecture::RamifiedHeightTwo),
                _ => {
                    return Err(Error::NoRoute(format!(
                        "wall of height {} at {q}",
                        q.height()
                    )))
                }
            }
        }
        sigma.normalize(lmax)
    }

    fn wall_routes(
        &mut self,
        m: &Multisegment,
        fam: &Family,
        x: &[Rational],
        ramified: bool,
        lazy: bool,
    ) -> Vec<Result<SignatureCharacter>> {
        let lmax = max_lambda(m);
        let mut cands = Vec::new();
        if !fam.in_domain(x) {
            return alloc::vec![Err(Error::FamilyRange(m.to_string()))];
        }
        let single = fam.walls_at(x).len() == 1;
        if single && m.height() == 1 {
            cands.extend(self.height_one_wall(m, fam, x, ramified, &lmax));
        } else if single && m.height() == 2 {
            cands.extend(self.height_two_wall(m, fam, x, ramified, &lmax));
        }
        if !(lazy && cands.iter().any(is_proven)) {
            cands.push(self.dual_route(m, &lmax));
        }
        cands
    }

    fn flanking_values(
        &mut self,
        fam: &Family,
        x: &[Rational],
    ) -> Result<(Result<SignatureCharacter>, Result<SignatureCharacter>)> {
        let (lo, hi) = fam.flanking_points(x)?;
        let lo = self.best(&fam.point(&lo));
        let hi = self.best(&fam.point(&hi));
        Ok((lo, hi))
    }

    fn height_one_wall(
        &mut self,
        m: &Multisegment,
        fam: &Family,
        x: &[Rational],
        ramified: bool,
        lmax: &crate::Partition,
    ) -> Vec<Result<SignatureCharacter>> {
        let (lo, hi) = match self.flanking_values(fam, x) {
            Ok(v) => v,
            Err(e) => return alloc::vec![Err(e)],
        };
        let mut cands = Vec::new();
        if let (Ok(a), Ok(b)) = (&lo, &hi) {
            cands.push(
                (a.clone() + b.clone())
                    .halve()
                    .ok_or_else(|| {
                        Error::Oracle(format!("flanking values of {m} differ in parity"))
                    })
                    .and_then(|s| s.normalize(lmax))
                    .map(|s| tag(s, ramified, Conjecture::OddJantzenLength)),
            );
        }
        let (i, j) = m.preceding_pairs()[0];
        let mp = m.elementary_operation(i, j).and_then(|mp| self.best(&mp));
        for side in [lo, hi] {
            cands.push(side.and_then(|s| {
                let sp = mp.clone()?;
                let eps = orientation(&s, &sp)?;
                let (_, wall) = cross_height1(&s, &(sp * eps))?;
                Ok(tag(
                    wall.normalize(lmax)?,
                    ramified,
                    Conjecture::OddJantzenLength,
                ))
            }));
        }
        cands
    }

    fn height_two_wall(
        &mut self,
        m: &Multisegment,
        fam: &Family,
        x: &[Rational],
        ramified: bool,
        lmax: &crate::Partition,
    ) -> Vec<Result<SignatureCharacter>> {
        let (lo, hi) = match self.flanking_values(fam, x) {
            Ok(v) => v,
            Err(e) => return alloc::vec![Err(e)],
        };
        let Some(mp) = lowest_below(m) else {
            return alloc::vec![Err(Error::NoRoute(format!(
                "{m}: no unique lowest degeneration"
            )))];
        };
        let sp = self.best(&mp);
        let dual_is_mp = m.zelevinsky() == mp;
        [lo, hi]
            .into_iter()
            .map(|side| {
                let side = side?;
                let sp = sp.clone()?;
                let (_, wall, _) = cross_height2(&side, &sp)?;
                if dual_is_mp
                    && wall.provenance() == Provenance::Proven
                    && !matches_sgn_twist(&wall, &sp)
                {
                    return Err(Error::Oracle(format!(
                        "wall value at {m} is not the twist of the dual"
                    )));
                }
                Ok(tag(
                    wall.normalize(lmax)?,
                    ramified,
                    Conjecture::RamifiedHeightTwo,
                ))
            })
            .collect()
    }

    /// `Σ(L(𝔐)) = ±Σ(L(𝔐^#)) ⊗ sgn`, used when the dual is an irreducible
    /// standard module or unitary with known multiplicities.
    fn dual_route(
        &mut self,
        m: &Multisegment,
        lmax: &crate::Partition,
    ) -> Result<SignatureCharacter> {
        let z = m.zelevinsky();
        if z == *m {
            return Err(Error::NoRoute(format!("{m} is self-dual")));
        }
        let usable = (is_unitary(&z) && known_l_multiplicities(&z).is_some())
            || Family::of(&z).is_ok_and(|(f, zx)| f.is_chamber_point(&zx));
        if !usable {
            return Err(Error::NoRoute(format!("dual of {m} is on a wall")));
        }
        self.best(&z)?.sgn_twist().normalize(lmax)
    }
}

/// The unique `⪯`-minimum of all multisegments reachable from `m` by
/// elementary operations.
fn lowest_below(m: &Multisegment) -> Option<Multisegment> {
    let mut seen: BTreeSet<Multisegment> = BTreeSet::new();
    let mut stack = alloc::vec![m.clone()];
    while let Some(cur) = stack.pop() {
        for (i, j) in cur.preceding_pairs() {
            if let Ok(next) = cur.elementary_operation(i, j) {
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    let mins: Vec<&Multisegment> = seen
        .iter()
        .filter(|a| seen.iter().all(|b| a.preceq(b)))
        .collect();
    match mins.as_slice() {
        [one] => Some((*one).clone()),
        _ => None,
    }
}

/// Signature of the unramified module with parameter `p`.
pub fn signature_unramified(
    p: &HermitianParameter,
    mode: UnramifiedMode,
) -> Result<SignatureCharacter> {
    let n = p.n();
    let max = if mode == UnramifiedMode::Oracle {
        MAX_ORACLE_N
    } else {
        MAX_UNRAMIFIED_N
    };
    if n > max {
        return Err(Error::Bounds {
            what: "N",
            value: n,
            max,
        });
    }
    let mode = match mode {
        UnramifiedMode::Oracle => return crate::intertwiner::unramified_signature(p),
        UnramifiedMode::ProvenOnly => Mode::ProvenOnly,
        UnramifiedMode::AllowConjectures => Mode::AllowConjectures,
    };
    Engine::new().signature(&p.multisegment(), mode)
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

    fn sig(s: &str) -> SignatureCharacter {
        Engine::new()
            .signature(&ms(s), Mode::AllowConjectures)
            .unwrap()
    }

    fn same(a: SignatureCharacter, b: &str) {
        assert_eq!(a.coeffs(), sc(b).coeffs(), "{a:?} vs {b}");
    }

    fn unr(x: &str) -> SignatureCharacter {
        let p: HermitianParameter = x.parse().unwrap();
        signature_unramified(&p, UnramifiedMode::AllowConjectures).unwrap()
    }

    #[test]
    fn small_unramified() {
        same(unr("1/4,-1/4"), "(1^2)+(2)");
        same(unr("1/2,-1/2"), "(2)");
        same(unr("1,-1"), "-(1^2)+(2)");
        same(unr("1/4,0,-1/4"), "(1^3)+2(2,1)+(3)");
        same(unr("1/2,0,-1/2"), "(2,1)+(3)");
        same(unr("3/4,0,-3/4"), "-(1^3)+(3)");
        same(unr("1,0,-1"), "(3)");
        same(unr("2,0,-2"), "-(1^3)+(3)");
    }

    #[test]
    fn n4_unramified() {
        same(unr("2/5,1/5,-1/5,-2/5"), "(1^4)+3(2,1^2)+2(2^2)+3(3,1)+(4)");
        same(unr("4/5,1/10,-1/10,-4/5"), "-(1^4)-(2,1^2)+(3,1)+(4)");
        // on the wall ν_1 + ν_2 = 1
        same(unr("4/5,1/5,-1/5,-4/5"), "(2^2)+(3,1)+(4)");
        same(unr("3/2,1/2,-1/2,-3/2"), "(4)");
        same(unr("5,3,-3,-5"), "(1^4)-(2,1^2)+2(2^2)-(3,1)+(4)");
        // walls
        same(unr("3/4,1/4,-1/4,-3/4"), "(2^2)+(3,1)+(4)");
        let w = unr("5/4,1/2,-1/2,-5/4");
        same(w.clone(), "-(2,1^2)+(2^2)+(4)");
        assert!(w.conjectures().is_empty());
        let c = unr("5/4,1/4,-1/4,-5/4");
        same(c.clone(), "-(2^2)+(3,1)+(4)");
        assert!(!c.conjectures().is_empty());
        assert!(unr("7/2,5/2,-5/2,-7/2").conjectures().is_empty());
        same(unr("7/2,5/2,-5/2,-7/2"), "(2^2)-(3,1)+(4)");
    }

    #[test]
    fn ramified_n4() {
        // S=(2,2), U=[-1/2,1/2]^2
        let a = sig("[1/4,5/4];[-5/4,-1/4]");
        same(a.clone(), "-(1^4)-(2,1^2)+(2^2)");
        assert_eq!(a.conjectures(), [Conjecture::OddJantzenLength]);
        same(sig("[0,1];[-1,0]"), "(2^2)");
        same(sig("[1/2,3/2];[-3/2,-1/2]"), "-(2,1^2)+(2^2)");
        same(sig("[1,2];[-2,-1]"), "(1^4)-(2,1^2)+(2^2)");
        // S=(2,2), U=(0,0)
        let b = sig("1/2;1/2;-1/2;-1/2");
        same(b.clone(), "(2^2)+(3,1)+(4)");
        assert!(b.conjectures().is_empty());
        // S=(1,2,1), U=(0),(0,0),(0)
        same(sig("1;0;0;-1"), "(3,1)+(4)");
        same(sig("2;0;0;-2"), "-(1^4)-(2,1^2)+(3,1)+(4)");
        same(sig("1/2;0;0;-1/2"), "(2,1^2)+(2^2)+2(3,1)+(4)");
        // S=(1,2,1), U=(0),[-1/2,1/2],(0)
        let c = sig("3/2;[-1/2,1/2];-3/2");
        same(c.clone(), "-(2^2)+(3,1)");
        assert_eq!(c.conjectures(), [Conjecture::RamifiedHeightTwo]);
    }

    #[test]
    fn proven_only_reports_conjecture() {
        let e = Engine::new().signature(&ms("[1/4,5/4];[-5/4,-1/4]"), Mode::ProvenOnly);
        assert_eq!(
            e,
            Err(Error::RequiresConjecture("odd-jantzen-length".into()))
        );
        assert!(Engine::new()
            .signature(&ms("1;2"), Mode::AllowConjectures)
            .is_err());
    }

    #[test]
    fn routes_agree() {
        let mut e = Engine::new();
        for s in [
            "3/4;1/4;-1/4;-3/4",
            "7/4;1/4;-1/4;-7/4",
            "5;3;-3;-5",
            "3/4;[-1/2,1/2];-3/4",
        ] {
            let m = ms(s);
            let routes = e.all_routes(&m).unwrap();
            let proven: Vec<_> = routes
                .iter()
                .filter(|r| r.provenance() == Provenance::Proven)
                .collect();
            assert!(
                proven.windows(2).all(|w| w[0].coeffs() == w[1].coeffs()),
                "{s}"
            );
        }
    }
}
