//! Integer partitions in canonical form and the box-relative operations the
//! classifiers need (complements, boundary paths, shortness).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the zero partition.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts, stripping zeros. Fails if a nonzero
    /// part is followed by a larger one.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::NotDecreasing { prev: w[0], next: w[1] });
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(value^count)`, the rectangle with `count` rows of length `value`.
    pub fn rectangle(value: usize, count: usize) -> Self {
        if value == 0 {
            return Self::empty();
        }
        Partition { parts: vec![value; count] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Parts padded with zeros to length `n`. Panics if `n < self.len()`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.len(), "cannot pad {self} to length {n}");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// Distinct part values with multiplicities, largest first: the
    /// `(a^p b^q ...)` form.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, k)) if *v == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Componentwise sum `self + other`.
    pub fn add(&self, other: &Partition) -> Self {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// Multiset union of parts, `self ∪ other`.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// Adds a single part (a no-op for zero).
    pub fn with_part(&self, part: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.push(part);
        Self::from_unsorted(parts)
    }

    /// True if the diagram of `inner` lies inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.parts[i] <= self.parts[i])
    }

    pub fn fits_in_box(&self, m: usize, n: usize) -> bool {
        self.len() <= n && self.first() <= m
    }

    fn check_box(&self, m: usize, n: usize) -> Result<()> {
        if self.fits_in_box(m, n) {
            Ok(())
        } else {
            Err(Error::OutsideBox { partition: self.to_string(), m, n })
        }
    }

    /// The `m^n`-complement: part `k` is `m - self_{n-k+1}`.
    pub fn complement(&self, m: usize, n: usize) -> Result<Self> {
        self.check_box(m, n)?;
        let padded = self.padded(n);
        let parts = padded.iter().rev().map(|&p| m - p).collect();
        Partition::new(parts)
    }

    pub fn shape_class(&self) -> ShapeClass {
        let blocks = self.blocks();
        let mut class = ShapeClass::default();
        match blocks[..] {
            [(a, p)] => {
                class.is_rectangle = true;
                class.is_one_line_rectangle = a == 1 || p == 1;
                class.is_two_line_rectangle = a > 1 && p > 1 && (a == 2 || p == 2);
            }
            [(a, p), (b, q)] => {
                class.is_fat_hook = true;
                class.is_near_rectangle = a - b == 1 || b == 1 || p == 1 || q == 1;
            }
            _ => {}
        }
        class
    }

    /// Segment lengths of the lattice path from the southwest to the
    /// northeast corner of the `m x n` box that traces the boundary of this
    /// diagram.
    pub fn boundary_segments(&self, m: usize, n: usize) -> Result<SegmentSeq> {
        self.check_box(m, n)?;
        let padded = self.padded(n);
        let mut steps: Vec<(bool, usize)> = Vec::with_capacity(2 * n + 1);
        let mut x = 0;
        for &p in padded.iter().rev() {
            steps.push((false, p - x));
            steps.push((true, 1));
            x = p;
        }
        steps.push((false, m - x));
        Ok(SegmentSeq::from_steps(steps))
    }

    /// Length of the shortest straight segment of the boundary path in the
    /// `m x n` box.
    pub fn shortness(&self, m: usize, n: usize) -> Result<usize> {
        Ok(self.boundary_segments(m, n)?.min_len())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Lexicographic on parts; `Ord` sorts `(2,1) < (3)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma and/or whitespace separated parts, each `v` or `v^k`.
    /// `"0"` and the empty string give the zero partition.
    fn from_str(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let (value, count) = match token.split_once('^') {
                Some((v, k)) => (parse_uint(token, v)?, parse_uint(token, k)?),
                None => (parse_uint(token, token)?, 1),
            };
            if token.contains('^') && count == 0 {
                return Err(Error::BadToken {
                    token: token.to_string(),
                    reason: "exponent must be at least 1".into(),
                });
            }
            parts.extend(std::iter::repeat(value).take(count));
        }
        Partition::new(parts)
    }
}

fn parse_uint(token: &str, text: &str) -> Result<usize> {
    text.trim().parse::<usize>().map_err(|_| Error::BadToken {
        token: token.to_string(),
        reason: "expected a non-negative integer".into(),
    })
}

/// Shape predicates used by the multiplicity-free classifiers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ShapeClass {
    pub is_rectangle: bool,
    pub is_one_line_rectangle: bool,
    pub is_two_line_rectangle: bool,
    pub is_fat_hook: bool,
    pub is_near_rectangle: bool,
}

/// Alternating vertical/horizontal run lengths of a boundary path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentSeq {
    pub segments: Vec<usize>,
    pub starts_vertical: bool,
}

impl SegmentSeq {
    fn from_steps(steps: Vec<(bool, usize)>) -> Self {
        let mut runs: Vec<(bool, usize)> = Vec::new();
        for (vertical, len) in steps.into_iter().filter(|&(_, l)| l > 0) {
            match runs.last_mut() {
                Some((v, l)) if *v == vertical => *l += len,
                _ => runs.push((vertical, len)),
            }
        }
        SegmentSeq {
            starts_vertical: runs.first().map_or(true, |r| r.0),
            segments: runs.into_iter().map(|r| r.1).collect(),
        }
    }

    pub fn is_vertical(&self, k: usize) -> bool {
        (k % 2 == 0) == self.starts_vertical
    }

    pub fn min_len(&self) -> usize {
        self.segments.iter().copied().min().unwrap_or(0)
    }

    pub fn vertical_total(&self) -> usize {
        (0..self.segments.len()).filter(|&k| self.is_vertical(k)).map(|k| self.segments[k]).sum()
    }

    pub fn horizontal_total(&self) -> usize {
        (0..self.segments.len()).filter(|&k| !self.is_vertical(k)).map(|k| self.segments[k]).sum()
    }

    /// The path walked backwards; each run keeps its direction.
    pub fn reversed(&self) -> Self {
        let count = self.segments.len();
        SegmentSeq {
            segments: self.segments.iter().rev().copied().collect(),
            starts_vertical: if count == 0 { self.starts_vertical } else { self.is_vertical(count - 1) },
        }
    }
}

/// All partitions of `weight` with at most `max_len` parts, each at most
/// `max_part`, in decreasing lexicographic order.
pub fn partitions_bounded(weight: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(rem: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 || cap * slots < rem {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_of(weight: usize) -> Vec<Partition> {
    partitions_bounded(weight, weight, weight)
}

/// Every partition fitting in the `m x n` box, the zero partition included.
pub fn partitions_in_box(m: usize, n: usize) -> Vec<Partition> {
    (0..=m * n).flat_map(|w| partitions_bounded(w, n, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn cells(q: &Partition) -> BTreeSet<(usize, usize)> {
        q.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect()
    }

    fn from_cells(cells: &BTreeSet<(usize, usize)>) -> Partition {
        let rows = cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
        Partition::new((0..rows).map(|r| cells.iter().filter(|c| c.0 == r).count()).collect()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("4,3,2,1").parts(), &[4, 3, 2, 1]);
        assert_eq!(p("9^2,6^3").parts(), &[9, 9, 6, 6, 6]);
        assert_eq!(p("3,0,0").parts(), &[3]);
        assert_eq!(p("3 2  1").parts(), &[3, 2, 1]);
        assert_eq!(p("0^4"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
    }

    #[test]
    fn parse_rejects() {
        assert!(matches!("1,2".parse::<Partition>(), Err(Error::NotDecreasing { .. })));
        assert!(matches!("3,-1".parse::<Partition>(), Err(Error::BadToken { .. })));
        assert!(matches!("2.5".parse::<Partition>(), Err(Error::BadToken { .. })));
        assert!(matches!("2^0".parse::<Partition>(), Err(Error::BadToken { .. })));
        assert!(matches!("3,0,1".parse::<Partition>(), Err(Error::NotDecreasing { .. })));
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(p("9^2,6^3").to_string(), "9,9,6,6,6");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(p(&Partition::empty().to_string()), Partition::empty());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("1").conjugate(), p("1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // transpose the diagram cell by cell
        let lam = p("4,3,2");
        let transposed: BTreeSet<_> = cells(&lam).into_iter().map(|(r, c)| (c, r)).collect();
        assert_eq!(from_cells(&transposed), p("3,3,2,1"));
        assert_eq!(lam.conjugate(), p("3,3,2,1"));
    }

    #[test]
    fn add_and_union() {
        assert_eq!(p("4,3").add(&p("2,1")), p("6,4"));
        assert_eq!(p("4,3").union(&p("2,1")), p("4,3,2,1"));
        assert_eq!(p("3,1").add(&Partition::empty()), p("3,1"));
        assert_eq!(p("3,1").union(&Partition::empty()), p("3,1"));
        // conj(p + 1^a) = conj(p) ∪ (a): widen the first a rows cell by cell,
        // then transpose the diagram
        let q = p("2,2");
        let mut diagram = cells(&q);
        diagram.extend((0..2).map(|r| (r, q.part(r))));
        let transposed: BTreeSet<_> = diagram.into_iter().map(|(r, c)| (c, r)).collect();
        assert_eq!(from_cells(&transposed), p("2,2,2"));
        assert_eq!(q.add(&Partition::rectangle(1, 2)).conjugate(), p("2,2,2"));
        assert_eq!(q.conjugate().union(&p("2")), p("2,2,2"));
    }

    #[test]
    fn containment() {
        assert!(p("3,2,1").contains(&p("2,1")));
        assert!(!p("2,2").contains(&p("3")));
        assert!(p("9^2,6^3").contains(&p("5,5,2")));
        assert!(p("1").contains(&Partition::empty()));
        assert!(!p("1").contains(&p("1,1")));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p("9,9,6,6,6").complement(9, 5).unwrap(), p("3,3,3"));
        assert_eq!(Partition::empty().complement(4, 3).unwrap(), Partition::rectangle(4, 3));
        // rotate the complementary cells of the 3x3 box by 180 degrees
        let lam = p("3,2,1");
        let inside = cells(&lam);
        let rotated: BTreeSet<_> = (0..3)
            .flat_map(|r| (0..3).map(move |c| (r, c)))
            .filter(|cell| !inside.contains(cell))
            .map(|(r, c)| (2 - r, 2 - c))
            .collect();
        assert_eq!(from_cells(&rotated), p("2,1"));
        assert_eq!(lam.complement(3, 3).unwrap(), p("2,1"));
        assert!(matches!(p("4").complement(3, 3), Err(Error::OutsideBox { .. })));
        assert!(matches!(p("1,1").complement(3, 1), Err(Error::OutsideBox { .. })));
    }

    #[test]
    fn shape_class_examples() {
        let c = p("5").shape_class();
        assert!(c.is_rectangle && c.is_one_line_rectangle && !c.is_two_line_rectangle);
        let c = p("3,3,1").shape_class();
        assert!(c.is_fat_hook && c.is_near_rectangle && !c.is_rectangle);
        let c = p("2,2,2").shape_class();
        assert!(c.is_rectangle && c.is_two_line_rectangle && !c.is_one_line_rectangle);
        let c = p("5,5,2,2").shape_class();
        assert!(c.is_fat_hook && !c.is_near_rectangle);
        let c = p("3,3,3").shape_class();
        assert!(c.is_rectangle && !c.is_two_line_rectangle);
        assert_eq!(Partition::empty().shape_class(), ShapeClass::default());
        assert_eq!(p("3,2,1").shape_class(), ShapeClass::default());
    }

    #[test]
    fn boundary_examples() {
        let s = p("5,5,2").boundary_segments(9, 5).unwrap();
        assert_eq!(s.segments, vec![2, 2, 1, 3, 2, 4]);
        assert!(s.starts_vertical);
        let s = p("9,9,6,6,6").boundary_segments(9, 5).unwrap();
        assert_eq!(s.segments, vec![6, 3, 3, 2]);
        assert!(!s.starts_vertical);
        let s = Partition::empty().boundary_segments(4, 7).unwrap();
        assert_eq!(s.segments, vec![7, 4]);
        assert!(s.starts_vertical);
        assert_eq!(p("5,5,2").shortness(9, 5).unwrap(), 1);
        assert_eq!(p("3,3,3").shortness(9, 5).unwrap(), 2);
        assert_eq!(Partition::empty().shortness(4, 7).unwrap(), 4);
        assert!(p("5,5,2").boundary_segments(4, 5).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        // binomial(m+n, n) partitions fit in an m x n box
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(partitions_in_box(4, 4).len(), 70);
        assert_eq!(partitions_in_box(2, 5).len(), 21);
        let six = partitions_of(6);
        assert!(six.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn exhaustive_box_invariants() {
        for m in 1..=8 {
            for n in 1..=8 {
                for q in partitions_in_box(m, n) {
                    let segs = q.boundary_segments(m, n).unwrap();
                    assert_eq!(segs.vertical_total(), n);
                    assert_eq!(segs.horizontal_total(), m);
                    assert!(segs.segments.iter().all(|&s| s > 0));
                    let star = q.complement(m, n).unwrap();
                    assert_eq!(star.complement(m, n).unwrap(), q);
                    assert_eq!(q.weight() + star.weight(), m * n);
                    assert_eq!(star.boundary_segments(m, n).unwrap(), segs.reversed());
                }
            }
        }
    }

    #[test]
    fn conjugation_is_involution() {
        for w in 0..=12 {
            for q in partitions_of(w) {
                assert_eq!(q.conjugate().conjugate(), q);
                assert_eq!(q.conjugate().weight(), w);
            }
        }
    }

    #[test]
    fn shape_flags_consistent() {
        for w in 0..=12 {
            for q in partitions_of(w) {
                let c = q.shape_class();
                assert!(!c.is_one_line_rectangle || c.is_rectangle);
                assert!(!c.is_two_line_rectangle || c.is_rectangle);
                assert!(!c.is_near_rectangle || c.is_fat_hook);
                assert!(!(c.is_rectangle && c.is_fat_hook));
            }
        }
    }
}
