//! Segments `[σ, σ+1, .., σ+m-1]`, multisegments, the linking calculus and
//! the Zelevinsky involution (Moeglin–Waldspurger algorithm).

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::combinat::Partition;
use crate::error::{Error, ParseError, Result};
use crate::rational::Rational;

/// `Δ(start, len) = [start, start + 1, .., start + len - 1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    start: Rational,
    len: usize,
}

impl Segment {
    /// Panics on `len == 0`.
    pub fn new(start: Rational, len: usize) -> Segment {
        assert!(len > 0, "segments have positive length");
        Segment { start, len }
    }

    pub fn singleton(x: Rational) -> Segment {
        Segment::new(x, 1)
    }

    /// Segment of length `len` centered at `center`.
    pub fn centered(center: Rational, len: usize) -> Segment {
        Segment::new(center - Rational::new(len as i64 - 1, 2).unwrap(), len)
    }

    pub fn start(&self) -> Rational {
        self.start
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn end(&self) -> Rational {
        self.start + (self.len as i64 - 1)
    }

    pub fn center(&self) -> Rational {
        self.start + Rational::new(self.len as i64 - 1, 2).unwrap()
    }

    pub fn entries(&self) -> impl Iterator<Item = Rational> + '_ {
        (0..self.len as i64).map(move |k| self.start + k)
    }

    pub fn shifted(&self, by: Rational) -> Segment {
        Segment::new(self.start + by, self.len)
    }

    fn same_class(&self, other: &Segment) -> bool {
        (self.start - other.start).is_integer()
    }

    /// `self ⊆ other` as sets of numbers.
    pub fn is_subset_of(&self, other: &Segment) -> bool {
        self.same_class(other) && other.start <= self.start && self.end() <= other.end()
    }

    /// Neither contains the other and the union is again a segment.
    pub fn linked(&self, other: &Segment) -> bool {
        if !self.same_class(other) {
            return false;
        }
        let one = Rational::ONE;
        let union_is_segment = other.start <= self.end() + one && self.start <= other.end() + one;
        union_is_segment && !self.is_subset_of(other) && !other.is_subset_of(self)
    }

    /// Linked, and `self` starts first.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.linked(other) && self.start < other.start
    }

    fn union_with(&self, other: &Segment) -> Segment {
        let s = self.start.min(other.start);
        let e = self.end().max(other.end());
        Segment::new(s, ((e - s).numer() + 1) as usize)
    }

    fn intersection_with(&self, other: &Segment) -> Option<Segment> {
        let s = self.start.max(other.start);
        let e = self.end().min(other.end());
        (s <= e).then(|| Segment::new(s, ((e - s).numer() + 1) as usize))
    }

    /// `[x, .., x+m-1] ↦ [-(x+m-1), .., -x]`.
    pub fn hermitian_dual(&self) -> Segment {
        Segment::new(-self.end(), self.len)
    }

    /// Drops the last entry; `None` for a singleton.
    fn shortened(&self) -> Option<Segment> {
        (self.len > 1).then(|| Segment::new(self.start, self.len - 1))
    }
}

/// Canonical order: descending start, ties broken by descending end.
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .start
            .cmp(&self.start)
            .then_with(|| other.len.cmp(&self.len))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Segment {
    type Err = ParseError;

    /// `[a,b,..]` with consecutive entries differing by exactly one, or a
    /// bare rational for a singleton.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let t = s.trim();
        let Some(body) = t.strip_prefix('[') else {
            return Ok(Segment::singleton(t.parse()?));
        };
        let body = body
            .strip_suffix(']')
            .ok_or(ParseError::Segment(t.into(), "missing `]`"))?;
        let entries = body
            .split(',')
            .map(str::parse::<Rational>)
            .collect::<core::result::Result<Vec<_>, _>>()?;
        if entries.is_empty() {
            return Err(ParseError::Segment(t.into(), "empty segment"));
        }
        if entries.windows(2).any(|w| w[1] - w[0] != Rational::ONE) {
            return Err(ParseError::Segment(
                t.into(),
                "consecutive entries must differ by 1",
            ));
        }
        Ok(Segment::new(entries[0], entries.len()))
    }
}

/// A finite multiset of segments, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Multisegment {
        segments.sort();
        Multisegment { segments }
    }

    pub fn singletons(values: &[Rational]) -> Multisegment {
        Multisegment::new(values.iter().map(|&x| Segment::singleton(x)).collect())
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Total length (the `N` of `GL_N`).
    pub fn n(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }

    /// Multiset of all entries, sorted descending.
    pub fn content(&self) -> Vec<Rational> {
        let mut all: Vec<Rational> = self.segments.iter().flat_map(|s| s.entries()).collect();
        all.sort_by(|a, b| b.cmp(a));
        all
    }

    pub fn shifted(&self, by: Rational) -> Multisegment {
        Multisegment::new(self.segments.iter().map(|s| s.shifted(by)).collect())
    }

    /// Multiset union.
    pub fn union(&self, other: &Multisegment) -> Multisegment {
        let mut all = self.segments.clone();
        all.extend_from_slice(&other.segments);
        Multisegment::new(all)
    }

    /// Replaces the linked pair `i`, `j` by their union and (if nonempty)
    /// intersection.
    pub fn elementary_operation(&self, i: usize, j: usize) -> Result<Multisegment> {
        let len = self.segments.len();
        if i >= len || j >= len || i == j {
            return Err(Error::SegmentIndex(i.max(j), len));
        }
        let (a, b) = (self.segments[i], self.segments[j]);
        if !a.linked(&b) {
            return Err(Error::NotLinked(i, j));
        }
        let mut rest: Vec<Segment> = self
            .segments
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, s)| *s)
            .collect();
        rest.push(a.union_with(&b));
        rest.extend(a.intersection_with(&b));
        Ok(Multisegment::new(rest))
    }

    /// Ordered pairs `(i, j)` of distinct members with `segments[i]`
    /// preceding `segments[j]`.
    pub fn preceding_pairs(&self) -> Vec<(usize, usize)> {
        let s = &self.segments;
        let mut out = Vec::new();
        for i in 0..s.len() {
            for j in 0..s.len() {
                if i != j && s[i].precedes(&s[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of preceding pairs.
    pub fn height(&self) -> usize {
        self.preceding_pairs().len()
    }

    /// No two members are linked.
    pub fn is_unlinked(&self) -> bool {
        self.height() == 0
    }

    /// Whether `self` is obtained from `other` by elementary operations
    /// (reflexive).
    pub fn preceq(&self, other: &Multisegment) -> bool {
        if self == other {
            return true;
        }
        if self.content() != other.content() {
            return false;
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(other.clone());
        queue.push_back(other.clone());
        while let Some(m) = queue.pop_front() {
            for (i, j) in m.preceding_pairs() {
                let next = m
                    .elementary_operation(i, j)
                    .expect("preceding pairs are linked");
                if next == *self {
                    return true;
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        false
    }

    pub fn hermitian_dual(&self) -> Multisegment {
        Multisegment::new(self.segments.iter().map(Segment::hermitian_dual).collect())
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_dual() == *self
    }

    /// Segment lengths sorted descending.
    pub fn jordan_type(&self) -> Partition {
        Partition::from_parts(self.segments.iter().map(Segment::len).collect())
    }

    /// The Moeglin–Waldspurger dual `𝔐^#`, computed class by class modulo `Z`.
    pub fn zelevinsky(&self) -> Multisegment {
        let mut classes: BTreeMap<Rational, Vec<Segment>> = BTreeMap::new();
        for s in &self.segments {
            classes.entry(s.start.fract()).or_default().push(*s);
        }
        let mut out = Vec::new();
        for (_, class) in classes {
            out.extend(mw_dual_class(class));
        }
        Multisegment::new(out)
    }

    /// Tuple rendering: `([2,3],[0,1,2],[1])`.
    pub fn tuple_notation(&self) -> String {
        let inner: Vec<String> = self.segments.iter().map(|s| format!("{s}")).collect();
        format!("({})", inner.join(","))
    }
}

/// MW dual of a multisegment whose starts all agree modulo `Z`.
fn mw_dual_class(mut segs: Vec<Segment>) -> Vec<Segment> {
    let mut dual = Vec::new();
    while !segs.is_empty() {
        segs.sort();
        let delta = segs.iter().map(Segment::end).max().unwrap();
        // canonical order puts the maximal segment first among candidates
        let mut chain = Vec::new();
        let first = segs.iter().position(|s| s.end() == delta).unwrap();
        chain.push(first);
        loop {
            let prev = segs[*chain.last().unwrap()];
            let want_end = delta - chain.len() as i64;
            let next = segs
                .iter()
                .enumerate()
                .position(|(k, s)| !chain.contains(&k) && s.end() == want_end && s.precedes(&prev));
            match next {
                Some(k) => chain.push(k),
                None => break,
            }
        }
        let r = chain.len() as i64 - 1;
        dual.push(Segment::new(delta - r, chain.len()));
        let mut rest = Vec::with_capacity(segs.len());
        for (k, s) in segs.iter().enumerate() {
            if chain.contains(&k) {
                rest.extend(s.shortened());
            } else {
                rest.push(*s);
            }
        }
        segs = rest;
    }
    dual
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tuple_notation())
    }
}

impl FromStr for Multisegment {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseError::Multisegment(t.into()));
        }
        let segs = t
            .split(';')
            .map(str::parse::<Segment>)
            .collect::<core::result::Result<Vec<_>, _>>()?;
        Ok(Multisegment::new(segs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(s: &str) -> Segment {
        s.parse().unwrap()
    }

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    #[test]
    fn linking() {
        assert!(seg("[0]").linked(&seg("[1]")));
        assert!(seg("[0,1]").linked(&seg("[1,2]")));
        assert!(!seg("[0,1,2]").linked(&seg("[1]")));
        assert!(!seg("[0]").linked(&seg("[2]")));
        assert!(!seg("[0]").linked(&seg("[1/2]")));
        assert!(seg("[0]").precedes(&seg("[1]")));
        assert!(!seg("[1]").precedes(&seg("[0]")));
        assert!(seg("[-1/2]").precedes(&seg("[1/2]")));
    }

    #[test]
    fn elementary_operations() {
        assert_eq!(
            ms("[0];[1]").elementary_operation(0, 1).unwrap(),
            ms("[0,1]")
        );
        assert_eq!(
            ms("[0,1];[1,2]").elementary_operation(0, 1).unwrap(),
            ms("[0,1,2];[1]")
        );
        assert_eq!(
            ms("[2,3];[1,2]").elementary_operation(0, 1).unwrap(),
            ms("[1,2,3];[2]")
        );
        assert!(matches!(
            ms("[0,1,2];[1]").elementary_operation(0, 1),
            Err(Error::NotLinked(0, 1))
        ));
    }

    #[test]
    fn order_examples() {
        let m = ms("[0];[1];[2]");
        assert!(m.preceq(&m));
        assert!(ms("[0,1]").preceq(&ms("[0];[1]")));
        assert!(!ms("[0];[1]").preceq(&ms("[0,1]")));
        assert!(ms("[0,1,2]").preceq(&ms("[0];[1];[2]")));
        assert!(ms("[0,1,2]").preceq(&ms("[0];[1,2]")));
        assert!(!ms("[0];[1,2]").preceq(&ms("[0,1,2]")));
    }

    #[test]
    fn heights() {
        assert_eq!(ms("[0,1]").height(), 0);
        assert_eq!(ms("1;0;-1").height(), 2);
        assert_eq!(ms("1/2;-1/2").height(), 1);
    }

    #[test]
    fn hermitian() {
        assert_eq!(ms("[-1/2,1/2]").hermitian_dual(), ms("[-1/2,1/2]"));
        assert_eq!(ms("[0,1]").hermitian_dual(), ms("[-1,0]"));
        assert_eq!(
            ms("[2,3];[0,1,2];[1]").hermitian_dual(),
            ms("[-3,-2];[-2,-1,0];[-1]")
        );
        assert!(ms("[-1/2,1/2]").is_hermitian());
        assert!(ms("1;-1;0").is_hermitian());
        assert!(!ms("[0,1]").is_hermitian());
    }

    #[test]
    fn zelevinsky_worked_example() {
        let m = ms("[3,4];[2,3,4];[1,2];[1/2];[0];[-1/2];[-1,0,1]");
        let expected = ms("[4];[4];[3];[1,2,3];[0,1,2];[0];[-1/2,1/2];[-1]");
        assert_eq!(m.zelevinsky(), expected);
        assert_eq!(
            expected.tuple_notation(),
            "([4],[4],[3],[1,2,3],[0,1,2],[0],[-1/2,1/2],[-1])"
        );
    }

    #[test]
    fn zelevinsky_of_a_segment_is_its_singletons() {
        let m = ms("[-1,0,1,2]");
        assert_eq!(m.zelevinsky(), ms("2;1;0;-1"));
        assert_eq!(ms("1/2;-1/2").zelevinsky(), ms("[-1/2,1/2]"));
    }

    #[test]
    fn jordan_types() {
        assert_eq!(ms("0;1;2;3").jordan_type(), "1^4".parse().unwrap());
        assert_eq!(
            ms("[2,3];[0,1,2];[1]").jordan_type(),
            "3,2,1".parse().unwrap()
        );
        assert_eq!(
            ms("[-1/2,1/2];[-1/2,1/2]").jordan_type(),
            "2,2".parse().unwrap()
        );
    }

    #[test]
    fn parse_and_print() {
        let m = ms("[2,3];[0,1,2];1");
        assert_eq!(m.to_string(), "[2,3];[1];[0,1,2]");
        assert_eq!(ms(&m.to_string()), m);
        assert!("[0,2]".parse::<Multisegment>().is_err());
        assert!("[0,1".parse::<Multisegment>().is_err());
        assert!("".parse::<Multisegment>().is_err());
    }
}
