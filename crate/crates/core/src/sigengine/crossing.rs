//! Signature change across a reducibility wall.

use crate::error::{Error, Result};
use crate::wmodule::SignatureCharacter;

fn same_n(a: &SignatureCharacter, b: &SignatureCharacter) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    Ok(())
}

/// Height one: `Σ⁻ - Σ⁺ = 2Σ(L(𝔐'))` and `Σ⁻ + Σ⁺ = 2Σ(L(ν_0))`.
/// `sigma_mprime` must already carry the orientation of the form induced
/// on `L(𝔐')`; see [`orientation`]. Returns `(Σ⁺, Σ_wall)`.
pub fn cross_height1(
    sigma_minus: &SignatureCharacter,
    sigma_mprime: &SignatureCharacter,
) -> Result<(SignatureCharacter, SignatureCharacter)> {
    same_n(sigma_minus, sigma_mprime)?;
    let plus = sigma_minus.clone() - sigma_mprime.clone() * 2;
    let wall = sigma_minus.clone() - sigma_mprime.clone();
    Ok((plus, wall))
}

/// `ε = (Σ_side)_sgn · Σ(L(𝔐'))_sgn`. The sign representation occurs once in
/// a standard module, so when it lies in `L(𝔐')` the two coefficients fix
/// the relative sign of the forms.
pub fn orientation(side: &SignatureCharacter, mprime: &SignatureCharacter) -> Result<i64> {
    same_n(side, mprime)?;
    let e = side.sgn_coeff() * mprime.sgn_coeff();
    if e == 0 {
        return Err(Error::EpsilonUndefined);
    }
    Ok(e.signum())
}

/// Height two: both sides agree and `Σ_wall = Σ_side - ε Σ(L(𝔐'))`.
/// Returns `(Σ_otherside, Σ_wall, ε)`.
pub fn cross_height2(
    sigma_side: &SignatureCharacter,
    sigma_mprime: &SignatureCharacter,
) -> Result<(SignatureCharacter, SignatureCharacter, i64)> {
    let eps = orientation(sigma_side, sigma_mprime)?;
    let wall = sigma_side.clone() - sigma_mprime.clone() * eps;
    Ok((sigma_side.clone(), wall, eps))
}

/// `Σ_wall ≡ ±(Σ(L(𝔐')) ⊗ sgn)`, expected when `L(ν_0)` is the dual of
/// `L(𝔐')`.
pub fn matches_sgn_twist(wall: &SignatureCharacter, sigma_mprime: &SignatureCharacter) -> bool {
    let t = sigma_mprime.sgn_twist();
    wall.coeffs() == t.coeffs() || (-wall.clone()).coeffs() == t.coeffs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SignatureCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn height_one() {
        let (p, w) = cross_height1(&sc("(1^2)+(2)"), &sc("(1^2)")).unwrap();
        assert_eq!((p, w), (sc("-(1^2)+(2)"), sc("(2)")));
        let (p, w) = cross_height1(&sc("(1^3)+2(2,1)+(3)"), &sc("(2,1)+(1^3)")).unwrap();
        assert_eq!(p, sc("-(1^3)+0(2,1)+(3)"));
        assert_eq!(w, sc("(2,1)+(3)"));
        let z = SignatureCharacter::zero(3).unwrap();
        assert_eq!(cross_height1(&sc("(3)"), &z).unwrap().0, sc("(3)"));
        assert!(cross_height1(&sc("(3)"), &sc("(2)")).is_err());
    }

    #[test]
    fn height_two() {
        let (o, w, e) = cross_height2(&sc("-(1^3)+(3)"), &sc("(1^3)")).unwrap();
        assert_eq!((o, w, e), (sc("-(1^3)+(3)"), sc("(3)"), -1));
        assert!(matches_sgn_twist(&sc("(3)"), &sc("(1^3)")));
        assert_eq!(
            cross_height2(&sc("(2,1)+(3)"), &sc("(1^3)")),
            Err(Error::EpsilonUndefined)
        );
    }
}
