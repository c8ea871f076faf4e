//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, evaluated on beta-sets (rim hooks of length `k` correspond to
//! moving one bead `k` positions down).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::partition::{partitions_unchecked, Partition};
use crate::error::{Error, Result};

/// Largest `n` accepted by the single-value [`character`] entry point.
pub const MAX_CHARACTER_N: usize = 14;

/// A value `χ_λ(μ)`.
pub type CharacterValue = i64;

/// `χ_λ(μ)` for partitions of the same `n <= 14`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<CharacterValue> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    if lambda.n() > MAX_CHARACTER_N {
        return Err(Error::Bounds {
            what: "n",
            value: lambda.n(),
            max: MAX_CHARACTER_N,
        });
    }
    let mut memo = BTreeMap::new();
    Ok(mn(&beta_set(lambda), mu.parts(), &mut memo))
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect()
}

type Memo = BTreeMap<(Vec<usize>, Vec<usize>), i64>;

/// Removes rim hooks of the lengths in `mu` (largest first) from the
/// diagram encoded by the strictly decreasing beta-set `beta`.
fn mn(beta: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        // beads strictly between target and b give the leg length
        let leg = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn(&next, rest, memo);
        total += if leg % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// Full character table of `S_n`, rows and columns in canonical partition
/// order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    labels: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Result<CharacterTable> {
        if n == 0 || n > super::partition::MAX_PARTITION_N {
            return Err(Error::Bounds {
                what: "n",
                value: n,
                max: super::partition::MAX_PARTITION_N,
            });
        }
        let labels = partitions_unchecked(n);
        let mut values = Vec::with_capacity(labels.len());
        for lambda in &labels {
            let beta = beta_set(lambda);
            let mut memo = BTreeMap::new();
            values.push(
                labels
                    .iter()
                    .map(|mu| mn(&beta, mu.parts(), &mut memo))
                    .collect(),
            );
        }
        Ok(CharacterTable { n, labels, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.labels.iter().position(|q| q == p)
    }

    /// `χ_{labels[lambda]}(labels[mu])`.
    pub fn value(&self, lambda: usize, mu: usize) -> i64 {
        self.values[lambda][mu]
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    pub fn row(&self, lambda: usize) -> &[i64] {
        &self.values[lambda]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::perm::all_perms;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        for mu in partitions_unchecked(5) {
            assert_eq!(character(&p("5"), &mu).unwrap(), 1);
        }
        assert_eq!(character(&p("1^4"), &p("2,2")).unwrap(), 1);
        assert_eq!(character(&p("2,2"), &p("2,2")).unwrap(), 2);
        assert!(character(&p("2,2"), &p("3")).is_err());
    }

    /// Brute force for S_4: the permutation character on 2-subsets is
    /// 1 + (3,1) + (2,2); removing 1 + (3,1) (the permutation character on
    /// points) isolates χ_(2,2).
    #[test]
    fn two_two_from_permutation_modules() {
        for g in all_perms(4) {
            let fixed_points = (0..4).filter(|&i| g.apply(i) == i).count() as i64;
            let mut fixed_pairs = 0;
            for a in 0..4 {
                for b in a + 1..4 {
                    let (x, y) = (g.apply(a), g.apply(b));
                    if (x == a && y == b) || (x == b && y == a) {
                        fixed_pairs += 1;
                    }
                }
            }
            let chi = fixed_pairs - fixed_points;
            assert_eq!(character(&p("2,2"), &g.cycle_type()).unwrap(), chi);
        }
    }

    #[test]
    fn sign_twist_and_dimension() {
        let t = CharacterTable::new(6).unwrap();
        let id = t.index_of(&p("1^6")).unwrap();
        for (li, lambda) in t.labels().iter().enumerate() {
            assert_eq!(t.value(li, id), lambda.dim() as i64);
            let lt = t.index_of(&lambda.transpose()).unwrap();
            for (mi, mu) in t.labels().iter().enumerate() {
                assert_eq!(t.value(lt, mi), mu.sign() * t.value(li, mi));
            }
        }
    }
}
