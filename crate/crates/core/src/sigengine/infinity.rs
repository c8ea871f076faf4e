//! Signature character in the chamber at infinity, from symmetric-group
//! character sums.
//!
//! `σ_λ = (1/#W) Σ_μ N(μ) χ_λ(μ) Tr(f^{w(μ)})` where
//! `Tr(f^w) = Σ_z Tr(z⁻¹wz·w_{0,M}·τ | U)` over minimal coset representatives
//! `z ∈ [W/W_M]` with `z⁻¹wz·w_{0,M} ∈ W_M`, and the trace on `U` factors over
//! mirrored block pairs as `Σ_λ [U_i:λ] χ_λ(x_i x_{r+1-i})`.

use alloc::vec::Vec;

use crate::combinat::partition::{partitions_unchecked, Partition};
use crate::combinat::perm::{all_perms, perm_of_cycle_type, Perm};
use crate::combinat::CharacterTable;
use crate::error::{Error, Result};
use crate::multisegment::Multisegment;
use crate::wmodule::{standard_w_multiplicities, SignatureCharacter};

/// Largest `N` for which the full Weyl group is enumerated.
pub const MAX_INFINITY_N: usize = 8;

/// Block structure and tempered W-multiplicities of a Hermitian family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityInput {
    pub block_sizes: Vec<usize>,
    /// Multiplicity vector of each tempered block over `partitions(N_i)`.
    pub tempered_mults: Vec<Vec<u64>>,
}

impl InfinityInput {
    pub fn new(block_sizes: Vec<usize>, tempered_mults: Vec<Vec<u64>>) -> Result<InfinityInput> {
        let r = block_sizes.len();
        if r == 0 || tempered_mults.len() != r {
            return Err(Error::InvalidLanglands(
                "one multiplicity vector per block".into(),
            ));
        }
        for i in 0..r {
            let j = r - 1 - i;
            if block_sizes[i] == 0
                || block_sizes[i] != block_sizes[j]
                || tempered_mults[i] != tempered_mults[j]
            {
                return Err(Error::InvalidLanglands("blocks must be palindromic".into()));
            }
            if tempered_mults[i].len() != partitions_unchecked(block_sizes[i]).len() {
                return Err(Error::SizeMismatch(tempered_mults[i].len(), block_sizes[i]));
            }
        }
        Ok(InfinityInput {
            block_sizes,
            tempered_mults,
        })
    }

    /// From the tempered BZ data of each block (all centers zero).
    pub fn from_tempered(parts: &[Multisegment]) -> Result<InfinityInput> {
        let sizes = parts.iter().map(Multisegment::n).collect();
        let mults = parts
            .iter()
            .map(standard_w_multiplicities)
            .collect::<Result<Vec<_>>>()?;
        InfinityInput::new(sizes, mults)
    }

    /// All blocks of size one with the trivial module.
    pub fn unramified(n: usize) -> InfinityInput {
        InfinityInput {
            block_sizes: alloc::vec![1; n],
            tempered_mults: alloc::vec![alloc::vec![1]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.block_sizes.iter().sum()
    }
}

/// The raw integer vector `(σ_{∞,λ})` over `partitions(N)`, before fixing
/// the global sign.
pub fn sig_at_infinity_raw(inp: &InfinityInput) -> Result<Vec<i64>> {
    let n = inp.n();
    if n > MAX_INFINITY_N {
        return Err(Error::Bounds {
            what: "N",
            value: n,
            max: MAX_INFINITY_N,
        });
    }
    let r = inp.block_sizes.len();
    let starts: Vec<usize> = inp
        .block_sizes
        .iter()
        .scan(0, |acc, &s| {
            let st = *acc;
            *acc += s;
            Some(st)
        })
        .collect();
    let block_of: Vec<usize> = (0..r)
        .flat_map(|b| core::iter::repeat_n(b, inp.block_sizes[b]))
        .collect();
    // block-reversing, order-preserving
    let w0m = Perm::from_images(
        (0..n)
            .map(|p| {
                let b = block_of[p];
                (starts[r - 1 - b] + (p - starts[b])) as u8
            })
            .collect(),
    );
    // minimal coset representatives: increasing on every block
    let reps: Vec<Perm> = all_perms(n)
        .into_iter()
        .filter(|z| {
            (0..n - 1).all(|p| block_of[p] != block_of[p + 1] || z.apply(p) < z.apply(p + 1))
        })
        .collect();
    let tables: Vec<Option<CharacterTable>> = (0..r)
        .map(|b| {
            let j = r - 1 - b;
            if b <= j {
                CharacterTable::new(inp.block_sizes[b]).ok()
            } else {
                None
            }
        })
        .collect();

    // Tr(y τ | U) for y in W_M
    let trace_on_u = |y: &Perm| -> i64 {
        let mut total = 1i64;
        for b in 0..r {
            let j = r - 1 - b;
            if b > j {
                break;
            }
            let size = inp.block_sizes[b];
            let restrict = |blk: usize| -> Vec<u8> {
                (0..size)
                    .map(|k| (y.apply(starts[blk] + k) - starts[blk]) as u8)
                    .collect()
            };
            let yb = Perm::from_images(restrict(b));
            let x = if b == j {
                yb
            } else {
                yb.compose(&Perm::from_images(restrict(j)))
            };
            let table = tables[b].as_ref().unwrap();
            let mu = table.index_of(&x.cycle_type()).unwrap();
            let tr: i64 = inp.tempered_mults[b]
                .iter()
                .enumerate()
                .map(|(l, &m)| m as i64 * table.value(l, mu))
                .sum();
            total *= tr;
            if total == 0 {
                break;
            }
        }
        total
    };

    let full = CharacterTable::new(n)?;
    let order = crate::combinat::partition::factorial(n) as i128;
    let traces: Vec<i64> = full
        .labels()
        .iter()
        .map(|mu| {
            let w = perm_of_cycle_type(mu);
            reps.iter()
                .filter_map(|z| {
                    let y = z.inverse().compose(&w).compose(z).compose(&w0m);
                    (0..n)
                        .all(|p| block_of[y.apply(p)] == block_of[p])
                        .then(|| trace_on_u(&y))
                })
                .sum()
        })
        .collect();
    let mut out = Vec::with_capacity(full.labels().len());
    for (li, _) in full.labels().iter().enumerate() {
        let s: i128 = full
            .labels()
            .iter()
            .enumerate()
            .map(|(mi, mu)| {
                mu.class_size() as i128 * full.value(li, mi) as i128 * traces[mi] as i128
            })
            .sum();
        if s % order != 0 {
            return Err(Error::Oracle(
                "signature at infinity is not integral".into(),
            ));
        }
        out.push((s / order) as i64);
    }
    Ok(out)
}

/// `Σ_∞` normalized to `+1` at the maximal W-type (the transpose of the
/// Jordan type made of all tempered segment lengths).
pub fn sig_at_infinity(inp: &InfinityInput, lambda_max: &Partition) -> Result<SignatureCharacter> {
    let raw = sig_at_infinity_raw(inp)?;
    SignatureCharacter::new(inp.n(), raw)?.normalize(lambda_max)
}

/// Unramified chamber at infinity: `σ_λ = χ_λ(w_0)`, any `N` the character
/// routine accepts.
pub fn sig_at_infinity_unramified(n: usize) -> Result<SignatureCharacter> {
    let coeffs = crate::combinat::partitions(n)?
        .iter()
        .map(crate::combinat::character_at_w0)
        .collect::<Result<Vec<_>>>()?;
    SignatureCharacter::new(n, coeffs)
}
