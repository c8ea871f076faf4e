//! Kostka numbers: semistandard tableaux of shape λ and content μ, counted
//! by peeling off the horizontal strip occupied by the largest entry.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::partition::{Partition, MAX_PARTITION_N};
use crate::error::{Error, Result};

pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    if lambda.n() > MAX_PARTITION_N {
        return Err(Error::Bounds {
            what: "n",
            value: lambda.n(),
            max: MAX_PARTITION_N,
        });
    }
    let mut memo = BTreeMap::new();
    Ok(count(lambda.parts(), mu.parts(), &mut memo))
}

/// Memoized count; `content` may be any composition.
fn count(shape: &[usize], content: &[usize], memo: &mut BTreeMap<(Vec<usize>, usize), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // An entry `k` may only sit in rows `0..k`.
    if shape.iter().skip(content.len()).any(|&p| p > 0) {
        memo.insert(key, 0);
        return 0;
    }
    let mut total = 0;
    let mut inner = shape.to_vec();
    strips(shape, 0, last, &mut inner, &mut |nu| {
        total += count(nu, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerates partitions `nu ⊆ shape` such that `shape / nu` is a horizontal
/// strip of size `size`, i.e. `shape[i+1] <= nu[i] <= shape[i]`.
fn strips(
    shape: &[usize],
    row: usize,
    size: usize,
    nu: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if size == 0 {
            visit(nu);
        }
        return;
    }
    let below = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - below).min(size);
    for take in 0..=max_take {
        nu[row] = shape[row] - take;
        strips(shape, row + 1, size - take, nu, visit);
    }
    nu[row] = shape[row];
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        for lambda in partitions(5).unwrap() {
            assert_eq!(kostka(&lambda, &p("1^5")).unwrap(), lambda.dim());
        }
        assert_eq!(kostka(&p("2,2"), &p("2,1,1")).unwrap(), 1);
        assert_eq!(kostka(&p("2,1,1"), &p("2,1,1")).unwrap(), 1);
        assert_eq!(kostka(&p("3,1"), &p("2,1,1")).unwrap(), 2);
        assert!(kostka(&p("3"), &p("2")).is_err());
    }

    /// Direct enumeration of fillings for small shapes.
    fn brute(lambda: &Partition, mu: &Partition) -> u64 {
        let cells: Vec<(usize, usize)> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
            .collect();
        let k = mu.len();
        let mut fill = alloc::vec![0usize; cells.len()];
        let mut n = 0;
        loop {
            let mut content = alloc::vec![0usize; k];
            fill.iter().for_each(|&v| content[v] += 1);
            let ok = content == mu.parts()
                && cells.iter().enumerate().all(|(a, &(i, j))| {
                    cells.iter().enumerate().all(|(b, &(i2, j2))| {
                        !((i2 == i && j2 == j + 1 && fill[b] < fill[a])
                            || (j2 == j && i2 == i + 1 && fill[b] <= fill[a]))
                    })
                });
            if ok {
                n += 1;
            }
            let mut pos = 0;
            loop {
                if pos == fill.len() {
                    return n;
                }
                fill[pos] += 1;
                if fill[pos] < k {
                    break;
                }
                fill[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 1..=5 {
            let ps = partitions(n).unwrap();
            for lambda in &ps {
                for mu in &ps {
                    assert_eq!(
                        kostka(lambda, mu).unwrap(),
                        brute(lambda, mu),
                        "{lambda:?} {mu:?}"
                    );
                }
            }
        }
    }
}
