//! Partitions, permutations, symmetric-group characters and Kostka numbers.

pub mod character;
pub mod kostka;
pub mod partition;
pub mod perm;

pub use character::{character, CharacterTable, CharacterValue};
pub use kostka::kostka;
pub use partition::{partitions, w0_cycle_type, Partition};
pub use perm::Perm;

use crate::error::Result;

/// `χ_λ` at the longest element of `S_n`.
pub fn character_at_w0(lambda: &Partition) -> Result<i64> {
    character(lambda, &w0_cycle_type(lambda.n()))
}

pub fn dim_irrep(p: &Partition) -> u64 {
    p.dim()
}

pub fn class_size(mu: &Partition) -> u64 {
    mu.class_size()
}

pub fn transpose(p: &Partition) -> Partition {
    p.transpose()
}

pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    p.dominance_leq(q)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
