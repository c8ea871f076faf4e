//! Translations among the Bernstein–Zelevinsky, Kazhdan–Lusztig and
//! Langlands parametrizations, and the tempered / unramified / irreducible /
//! unitary predicates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::multisegment::{Multisegment, Segment};
use crate::rational::Rational;

/// A pair `(s, e)`: the diagonal of the semisimple element and the Jordan
/// type of the nilpotent, together with the blocks that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlDatum {
    /// Diagonal entries of `s`, block by block.
    pub s: Vec<Rational>,
    pub e: Partition,
    /// `(start, length)` per block, centers weakly decreasing.
    pub blocks: Vec<(Rational, usize)>,
}

impl KlDatum {
    pub fn block_center(&self, i: usize) -> Rational {
        Segment::new(self.blocks[i].0, self.blocks[i].1).center()
    }
}

/// A Langlands datum `(S, U, ν)` with `S` encoded by its ordered block
/// composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanglandsDatum {
    pub block_sizes: Vec<usize>,
    /// BZ datum of each tempered factor; every center is zero.
    pub tempered_parts: Vec<Multisegment>,
    /// Strictly decreasing, one entry per block.
    pub nu: Vec<Rational>,
}

impl LanglandsDatum {
    pub fn new(
        block_sizes: Vec<usize>,
        tempered_parts: Vec<Multisegment>,
        nu: Vec<Rational>,
    ) -> Result<LanglandsDatum> {
        let d = LanglandsDatum {
            block_sizes,
            tempered_parts,
            nu,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.block_sizes.len();
        let bad = |msg: String| Err(Error::InvalidLanglands(msg));
        if r == 0 || self.tempered_parts.len() != r || self.nu.len() != r {
            return bad(format!(
                "{} blocks, {} tempered parts, {} parameters",
                r,
                self.tempered_parts.len(),
                self.nu.len()
            ));
        }
        for (i, (t, &size)) in self
            .tempered_parts
            .iter()
            .zip(&self.block_sizes)
            .enumerate()
        {
            if t.n() != size || size == 0 {
                return bad(format!(
                    "block {i} has size {size} but tempered part of size {}",
                    t.n()
                ));
            }
            if !is_tempered(t) {
                return bad(format!("block {i}: {} is not tempered", t));
            }
        }
        if self.nu.windows(2).any(|w| w[0] <= w[1]) {
            return bad("nu must be strictly decreasing".into());
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// `ν_i + ν_{r+1-i} = 0`, equal block sizes and isomorphic tempered
    /// parts at mirrored positions.
    pub fn is_hermitian_shape(&self) -> bool {
        let r = self.block_sizes.len();
        (0..r).all(|i| {
            let j = r - 1 - i;
            self.block_sizes[i] == self.block_sizes[j]
                && self.tempered_parts[i] == self.tempered_parts[j]
                && self.nu[i] + self.nu[j] == Rational::ZERO
        })
    }
}

pub fn bz_to_kl(m: &Multisegment) -> KlDatum {
    let mut segs: Vec<Segment> = m.segments().to_vec();
    segs.sort_by(|a, b| {
        b.center()
            .cmp(&a.center())
            .then_with(|| b.len().cmp(&a.len()))
            .then_with(|| b.start().cmp(&a.start()))
    });
    KlDatum {
        s: segs
            .iter()
            .flat_map(|s| s.entries().collect::<Vec<_>>())
            .collect(),
        e: m.jordan_type(),
        blocks: segs.iter().map(|s| (s.start(), s.len())).collect(),
    }
}

/// Groups equal centers: `t = s - h/2` is constant on each Langlands block.
pub fn kl_to_langlands(k: &KlDatum) -> LanglandsDatum {
    let mut block_sizes = Vec::new();
    let mut tempered_parts: Vec<Multisegment> = Vec::new();
    let mut nu: Vec<Rational> = Vec::new();
    for (i, &(start, len)) in k.blocks.iter().enumerate() {
        let seg = Segment::new(start, len);
        let c = k.block_center(i);
        let centered = Multisegment::new(alloc::vec![seg.shifted(-c)]);
        if nu.last() == Some(&c) {
            let last = tempered_parts.len() - 1;
            tempered_parts[last] = tempered_parts[last].union(&centered);
            *block_sizes.last_mut().unwrap() += len;
        } else {
            nu.push(c);
            block_sizes.push(len);
            tempered_parts.push(centered);
        }
    }
    LanglandsDatum {
        block_sizes,
        tempered_parts,
        nu,
    }
}

pub fn bz_to_langlands(m: &Multisegment) -> LanglandsDatum {
    kl_to_langlands(&bz_to_kl(m))
}

pub fn langlands_to_bz(l: &LanglandsDatum) -> Multisegment {
    l.tempered_parts
        .iter()
        .zip(&l.nu)
        .fold(Multisegment::default(), |acc, (t, &v)| {
            acc.union(&t.shifted(v))
        })
}

/// All centers are zero.
pub fn is_tempered(m: &Multisegment) -> bool {
    !m.is_empty() && m.segments().iter().all(|s| s.center().is_zero())
}

/// Singletons with pairwise distinct values.
pub fn is_unramified(m: &Multisegment) -> bool {
    let segs = m.segments();
    segs.iter().all(|s| s.len() == 1) && segs.windows(2).all(|w| w[0].start() != w[1].start())
}

/// No two members are linked.
pub fn is_irreducible_standard(m: &Multisegment) -> bool {
    m.is_unlinked()
}

/// A unitary building block in the `(length, center)` picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitaryBlock {
    /// `l` segments of length `d`, centers `(1-l)/2, .., (l-1)/2`.
    Speh { l: usize, d: usize },
    /// `2l` segments of length `d`: a Speh string shifted by `+alpha` and by
    /// `-alpha`, `0 < alpha < 1/2`.
    Complementary { l: usize, d: usize, alpha: Rational },
}

impl UnitaryBlock {
    fn members(&self) -> Vec<(usize, Rational)> {
        let string = |l: usize, shift: Rational| {
            (0..l).map(move |k| Rational::new(1 - l as i64 + 2 * k as i64, 2).unwrap() + shift)
        };
        match *self {
            UnitaryBlock::Speh { l, d } => string(l, Rational::ZERO).map(|c| (d, c)).collect(),
            UnitaryBlock::Complementary { l, d, alpha } => string(l, alpha)
                .chain(string(l, -alpha))
                .map(|c| (d, c))
                .collect(),
        }
    }
}

/// Searches for a decomposition of `m` into unitary blocks.
pub fn unitary_decomposition(m: &Multisegment) -> Option<Vec<UnitaryBlock>> {
    let items: Vec<(usize, Rational)> =
        m.segments().iter().map(|s| (s.len(), s.center())).collect();
    let mut memo = BTreeMap::new();
    let mut items = items;
    items.sort();
    decompose(&items, &mut memo)
}

pub fn is_unitary(m: &Multisegment) -> bool {
    !m.is_empty() && unitary_decomposition(m).is_some()
}

type UnitaryMemo = BTreeMap<Vec<(usize, Rational)>, Option<Vec<UnitaryBlock>>>;

fn decompose(items: &[(usize, Rational)], memo: &mut UnitaryMemo) -> Option<Vec<UnitaryBlock>> {
    if items.is_empty() {
        return Some(Vec::new());
    }
    if let Some(v) = memo.get(items) {
        return v.clone();
    }
    let (d, c) = items[0];
    let same_len = items.iter().filter(|(len, _)| *len == d).count();
    let mut candidates = Vec::new();
    for l in (1..=same_len).rev() {
        // Speh strings through c
        let offset = c - Rational::new(1 - l as i64, 2).unwrap();
        if offset.is_integer() && offset.numer() >= 0 && (offset.numer() as usize) < l {
            candidates.push(UnitaryBlock::Speh { l, d });
        }
        if 2 * l <= same_len {
            for k in 0..l {
                let base = Rational::new(1 - l as i64 + 2 * k as i64, 2).unwrap();
                let alpha = (c - base).abs();
                if alpha.is_positive() && alpha < Rational::HALF {
                    let b = UnitaryBlock::Complementary { l, d, alpha };
                    if !candidates.contains(&b) {
                        candidates.push(b);
                    }
                }
            }
        }
    }
    candidates.sort_by_key(|b| match *b {
        UnitaryBlock::Speh { l, d } => core::cmp::Reverse(l * d),
        UnitaryBlock::Complementary { l, d, .. } => core::cmp::Reverse(2 * l * d),
    });
    let mut result = None;
    for block in candidates {
        let mut rest = items.to_vec();
        let ok = block
            .members()
            .into_iter()
            .all(|m| match rest.iter().position(|x| *x == m) {
                Some(p) => {
                    rest.remove(p);
                    true
                }
                None => false,
            });
        if !ok {
            continue;
        }
        if let Some(mut tail) = decompose(&rest, memo) {
            tail.insert(0, block);
            result = Some(tail);
            break;
        }
    }
    memo.insert(items.to_vec(), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn bz_to_kl_examples() {
        let k = bz_to_kl(&ms("[2,3];[0,1,2];[1]"));
        let s: Vec<String> = k.s.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["2", "3", "0", "1", "2", "1"]);
        let lens: Vec<usize> = k.blocks.iter().map(|b| b.1).collect();
        assert_eq!(lens, [2, 3, 1]);
        assert_eq!(k.e, "3,2,1".parse().unwrap());
        let k = bz_to_kl(&ms("0"));
        assert_eq!(
            (k.s, k.e),
            (alloc::vec![Rational::ZERO], "1".parse().unwrap())
        );
        let k = bz_to_kl(&ms("[-1/2,1/2]"));
        assert_eq!(
            (k.s, k.e),
            (alloc::vec![q("-1/2"), q("1/2")], "2".parse().unwrap())
        );
    }

    #[test]
    fn kl_to_langlands_examples() {
        let l = bz_to_langlands(&ms("[2,3];[0,1,2];[1]"));
        assert_eq!(l.block_sizes, [2, 4]);
        assert_eq!(l.tempered_parts, [ms("[-1/2,1/2]"), ms("[-1,0,1];[0]")]);
        assert_eq!(l.nu, [q("5/2"), q("1")]);

        let l = bz_to_langlands(&ms("3;1;-2"));
        assert_eq!(l.block_sizes, [1, 1, 1]);
        assert_eq!(l.nu, [q("3"), q("1"), q("-2")]);

        let l = bz_to_langlands(&ms("[-1/2,1/2]"));
        assert_eq!(
            (l.block_sizes, l.nu),
            (alloc::vec![2], alloc::vec![Rational::ZERO])
        );
    }

    #[test]
    fn langlands_to_bz_examples() {
        let nu1 = q("3/4");
        let l = LanglandsDatum::new(
            alloc::vec![2, 2],
            alloc::vec![ms("[-1/2,1/2]"), ms("[-1/2,1/2]")],
            alloc::vec![nu1, -nu1],
        )
        .unwrap();
        assert_eq!(langlands_to_bz(&l), ms("[1/4,5/4];[-5/4,-1/4]"));

        let l = LanglandsDatum::new(
            alloc::vec![1, 2, 1],
            alloc::vec![ms("0"), ms("[-1/2,1/2]"), ms("0")],
            alloc::vec![nu1, Rational::ZERO, -nu1],
        )
        .unwrap();
        assert_eq!(langlands_to_bz(&l), ms("3/4;[-1/2,1/2];-3/4"));
        assert!(LanglandsDatum::new(
            alloc::vec![2],
            alloc::vec![ms("[0,1]")],
            alloc::vec![Rational::ZERO]
        )
        .is_err());
    }

    #[test]
    fn predicates() {
        assert!(is_tempered(&ms("[-1/2,1/2]")));
        assert!(is_tempered(&ms("0;0")));
        assert!(!is_tempered(&ms("[0,1]")));
        assert!(is_unramified(&ms("0;1;2")));
        assert!(!is_unramified(&ms("0;0")));
        assert!(!is_unramified(&ms("[0,1]")));
        assert!(is_irreducible_standard(&ms("0;5")));
        assert!(!is_irreducible_standard(&ms("0;1")));
        assert!(!is_irreducible_standard(&ms("[2,3];[0,1,2];[1]")));
    }

    #[test]
    fn unitary_examples() {
        assert!(is_unitary(&ms("[-1/2,1/2]")));
        assert!(is_unitary(&ms("1/4;-1/4")));
        assert!(!is_unitary(&ms("3/4;-3/4")));
        assert!(is_unitary(&ms("1/2;-1/2")));
        assert!(is_unitary(&ms("3/2;1/2;-1/2;-3/2")));
        assert!(is_unitary(&ms("[-1,0,1];[0]")));
        assert!(!is_unitary(&ms("[0,1]")));
        // a Speh string twisted by 1/4 on both sides
        assert!(is_unitary(&ms("3/4;-1/4;1/4;-3/4")));
    }
}
