//! Signature characters: chamber at infinity, family formula, wall
//! crossings and the routing engine.

pub mod crossing;
pub mod engine;
pub mod family;
pub mod infinity;

pub use crossing::{cross_height1, cross_height2};
pub use engine::{signature_unramified, Engine, Mode, UnramifiedMode};
pub use family::{
    kostka_identity_check, sigma_family, telescoping_holds, FamilyPoint, KostkaIdentityReport,
};
pub use infinity::{
    sig_at_infinity, sig_at_infinity_raw, sig_at_infinity_unramified, InfinityInput,
};

use alloc::string::ToString;

use crate::classification::is_unitary;
use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::wmodule::{known_l_multiplicities, SignatureCharacter};

/// A unitary module has a definite form: its signature is its W-multiplicity
/// vector.
pub fn sig_unitary(m: &Multisegment) -> Result<SignatureCharacter> {
    if !is_unitary(m) {
        return Err(Error::NotUnitary(m.to_string()));
    }
    let v = known_l_multiplicities(m).ok_or_else(|| Error::NoRoute(m.to_string()))?;
    SignatureCharacter::from_multiplicities(m.n(), &v)
}
