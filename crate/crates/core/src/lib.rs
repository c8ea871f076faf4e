//! Exact combinatorial core for signature characters of Hermitian modules of
//! the graded Hecke algebra of `GL_N` (Iwahori-spherical representations of
//! p-adic `GL_N`).
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: scalars
//! are [`Rational`]s with checked 64-bit components, and the intertwining
//! operator oracle runs over arbitrary-precision rationals.
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod classification;
pub mod combinat;
pub mod error;
pub mod intertwiner;
pub mod multisegment;
pub mod rational;
pub mod sigengine;
pub mod walls;
pub mod wmodule;

pub use combinat::{CharacterTable, Partition, Perm};
pub use error::{Error, ParseError, Result};
pub use multisegment::{Multisegment, Segment};
pub use rational::Rational;
pub use wmodule::{Conjecture, Provenance, SignatureCharacter};
