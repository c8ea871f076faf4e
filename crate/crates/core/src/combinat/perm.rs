//! Permutations of `{0, .., n-1}` stored as image arrays.

use alloc::vec::Vec;

use super::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// Panics unless `images` is a permutation of `0..len`.
    pub fn from_images(images: Vec<u8>) -> Perm {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            assert!(!seen[i as usize], "not a permutation");
            seen[i as usize] = true;
        }
        Perm(images)
    }

    /// The simple reflection swapping `j` and `j + 1`.
    pub fn simple(n: usize, j: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(j, j + 1);
        p
    }

    /// `i -> n - 1 - i`.
    pub fn longest(n: usize) -> Perm {
        Perm((0..n as u8).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `self ∘ s_j`: swaps the images at positions `j` and `j + 1`.
    pub fn mul_simple_right(&self, j: usize) -> Perm {
        let mut p = self.clone();
        p.0.swap(j, j + 1);
        p
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = alloc::vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_parts(parts)
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    /// Number of inversions (Coxeter length).
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Lexicographic rank in `0..n!`.
    pub fn rank(&self) -> usize {
        let n = self.0.len();
        let mut r = 0;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    /// Inverse of [`Perm::rank`].
    pub fn unrank(n: usize, mut r: usize) -> Perm {
        let mut digits = alloc::vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        Perm(digits.into_iter().map(|d| pool.remove(d)).collect())
    }
}

/// All permutations of `n` letters in lexicographic order (index = rank).
pub fn all_perms(n: usize) -> Vec<Perm> {
    let total: usize = (1..=n).product();
    let mut out = Vec::with_capacity(total);
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// One permutation of the given cycle type: consecutive cycles
/// `(0 1 .. k-1)(k ..)` in the order of the parts.
pub fn perm_of_cycle_type(mu: &Partition) -> Perm {
    let n = mu.n();
    let mut img = alloc::vec![0u8; n];
    let mut start = 0;
    for &k in mu.parts() {
        for i in 0..k {
            img[start + i] = (start + (i + 1) % k) as u8;
        }
        start += k;
    }
    Perm(img)
}
