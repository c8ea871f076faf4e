use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// Largest `n` for which partitions are enumerated.
pub const MAX_PARTITION_N: usize = 20;

/// A weakly decreasing tuple of positive integers.
///
/// The same type labels irreducible representations of `S_n` (with `(n)`
/// the trivial and `(1^n)` the sign representation), cycle types of
/// permutations, Jordan types of nilpotents and compositions of block sizes
/// once sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` descending and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Accepts only an already weakly decreasing list of positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::Partition(format!("{parts:?}")).into());
        }
        Ok(Partition { parts })
    }

    /// `(n)`, the label of the trivial representation.
    pub fn row(n: usize) -> Partition {
        Partition::from_parts(alloc::vec![n])
    }

    /// `(1^n)`, the label of the sign representation.
    pub fn column(n: usize) -> Partition {
        Partition {
            parts: alloc::vec![1; n],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of the irreducible representation, by the hook length formula.
    pub fn dim(&self) -> u64 {
        let n = self.n();
        let conj = self.transpose();
        // n! / prod(hooks), accumulated as a reduced fraction to stay in u128.
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for k in 2..=n as u128 {
            num *= k;
        }
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
                den *= hook as u128;
                let g = gcd_u128(num, den);
                num /= g;
                den /= g;
            }
        }
        debug_assert_eq!(den, 1);
        (num / den) as u64
    }

    /// Centralizer order `z_mu = prod_k k^{m_k} m_k!` of a permutation with
    /// this cycle type.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mut m = 0;
            while i < self.parts.len() && self.parts[i] == k {
                m += 1;
                i += 1;
                z *= k as u128 * m as u128;
            }
        }
        z
    }

    /// Size of the conjugacy class of `S_n` with this cycle type.
    pub fn class_size(&self) -> u64 {
        (factorial(self.n()) / self.centralizer_order()) as u64
    }

    /// `(-1)^{n - #parts}`, the sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Symbol with exponents for repeated parts, e.g. `(2,1^2)`.
    pub fn symbol(&self) -> String {
        let mut out = String::from("(");
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mut m = 0;
            while i < self.parts.len() && self.parts[i] == k {
                m += 1;
                i += 1;
            }
            if !first {
                out.push(',');
            }
            first = false;
            if m == 1 {
                out.push_str(&format!("{k}"));
            } else {
                out.push_str(&format!("{k}^{m}"));
            }
        }
        out.push(')');
        out
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n` in descending lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::Bounds {
            what: "n",
            value: n,
            max: MAX_PARTITION_N,
        });
    }
    Ok(partitions_unchecked(n))
}

pub(crate) fn partitions_unchecked(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle type of the order-reversing permutation of `n` letters.
pub fn w0_cycle_type(n: usize) -> Partition {
    let mut parts = alloc::vec![2; n / 2];
    if n % 2 == 1 {
        parts.push(1);
    }
    Partition { parts }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Comma-separated parts; `k^m` stands for `m` copies of `k`. Surrounding
    /// parentheses are tolerated so rendered symbols parse too.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let bad = || ParseError::Partition(s.into());
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let (k, m) = match tok.split_once('^') {
                Some((k, m)) => (k.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let k: usize = k.parse().map_err(|_| bad())?;
            if k == 0 || m == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(k, m));
        }
        Partition::new(parts).map_err(|_| bad())
    }
}
