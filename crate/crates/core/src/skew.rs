//! Skew diagrams `outer/inner` and their normal forms.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_in_box, Partition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `p/0`.
    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// True when the inner partition is zero.
    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Cells as 0-indexed `(row, column)` pairs in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    /// 180 degree rotation inside the `outer_1 x l(outer)` bounding box.
    pub fn rotate_pi(&self) -> Self {
        let (m, n) = (self.outer.first(), self.outer.len());
        let outer = self.inner.complement(m, n).expect("inner fits the bounding box");
        let inner = self.outer.complement(m, n).expect("outer fits its own bounding box");
        SkewShape { outer, inner }
    }

    /// No empty rows.
    pub fn is_row_basic(&self) -> bool {
        (0..self.outer.len()).all(|i| self.inner.part(i) < self.outer.part(i))
    }

    /// No empty rows and no empty columns.
    pub fn is_basic(&self) -> bool {
        let (oc, ic) = (self.outer.conjugate(), self.inner.conjugate());
        self.is_row_basic() && (0..oc.len()).all(|j| ic.part(j) < oc.part(j))
    }

    /// Deletes empty rows and empty columns.
    pub fn to_basic(&self) -> Self {
        let (mut outer, mut inner): (Vec<usize>, Vec<usize>) = (0..self.outer.len())
            .map(|i| (self.outer.part(i), self.inner.part(i)))
            .filter(|(o, i)| o > i)
            .unzip();
        let width = outer.first().copied().unwrap_or(0);
        for col in (1..=width).rev() {
            let filled = outer.iter().zip(&inner).any(|(&o, &i)| i < col && col <= o);
            if !filled {
                for v in outer.iter_mut().chain(inner.iter_mut()) {
                    if *v >= col {
                        *v -= 1;
                    }
                }
            }
        }
        SkewShape {
            outer: Partition::new(outer).expect("row deletion keeps parts decreasing"),
            inner: Partition::new(inner).expect("row deletion keeps parts decreasing"),
        }
    }

    /// Edge-connected components, top to bottom, each as its own basic
    /// skew shape.
    pub fn components(&self) -> Result<Vec<SkewShape>> {
        if !self.is_basic() {
            return Err(Error::NotBasic(self.to_string()));
        }
        let cells: BTreeSet<(usize, usize)> = self.cells().into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in &cells {
            if !seen.insert(start) {
                continue;
            }
            let mut rows = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some((r, c)) = queue.pop_front() {
                rows.insert(r);
                let nbrs = [(r.wrapping_sub(1), c), (r + 1, c), (r, c.wrapping_sub(1)), (r, c + 1)];
                for nb in nbrs {
                    if cells.contains(&nb) && seen.insert(nb) {
                        queue.push_back(nb);
                    }
                }
            }
            comps.push(rows);
        }
        comps.sort_by_key(|rows| *rows.first().unwrap());
        Ok(comps
            .into_iter()
            .map(|rows| {
                let outer = rows.iter().map(|&r| self.outer.part(r)).collect();
                let inner = rows.iter().map(|&r| self.inner.part(r)).collect();
                SkewShape {
                    outer: Partition::new(outer).unwrap(),
                    inner: Partition::new(inner).unwrap(),
                }
                .to_basic()
            })
            .collect())
    }

    /// The shape with `self` to the north-east and `other` to the
    /// south-west, touching at a single corner, so that its skew Schur
    /// function is the product of the two.
    pub fn join(&self, other: &SkewShape) -> SkewShape {
        let shift = other.outer.first();
        let mut outer: Vec<usize> = self.outer.parts().iter().map(|&p| p + shift).collect();
        let mut inner: Vec<usize> = (0..self.outer.len()).map(|i| self.inner.part(i) + shift).collect();
        outer.extend_from_slice(other.outer.parts());
        inner.extend(other.inner.padded(other.outer.len()));
        SkewShape {
            outer: Partition::new(outer).unwrap(),
            inner: Partition::new(inner).unwrap(),
        }
    }

    /// `#` for cells of the shape, `.` for cells of the inner partition.
    pub fn ascii(&self) -> String {
        (0..self.outer.len())
            .map(|r| {
                let (i, o) = (self.inner.part(r), self.outer.part(r));
                format!("{}{}", ".".repeat(i), "#".repeat(o - i))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `OUTER/INNER`; a bare `OUTER` is a straight shape.
    fn from_str(text: &str) -> Result<Self> {
        let mut pieces = text.split('/');
        let outer = pieces.next().ok_or_else(|| Error::BadSkew(text.into()))?.parse()?;
        let inner = match pieces.next() {
            Some(t) => t.parse()?,
            None => Partition::empty(),
        };
        if pieces.next().is_some() {
            return Err(Error::BadSkew(text.into()));
        }
        SkewShape::new(outer, inner)
    }
}

/// Every skew shape whose outer partition fits in the `m x n` box.
pub fn skew_shapes_in_box(m: usize, n: usize) -> Vec<SkewShape> {
    let all = partitions_in_box(m, n);
    let mut out = Vec::new();
    for outer in &all {
        for inner in &all {
            if outer.contains(inner) {
                out.push(SkewShape { outer: outer.clone(), inner: inner.clone() });
            }
        }
    }
    out
}

/// Every nonempty basic skew shape with exactly `size` cells, built row by
/// row from the top.
pub fn basic_shapes_with_cells(size: usize) -> Vec<SkewShape> {
    fn rec(rem: usize, outer: &mut Vec<usize>, inner: &mut Vec<usize>, out: &mut Vec<SkewShape>) {
        let (po, pi) = (*outer.last().unwrap(), *inner.last().unwrap());
        if rem == 0 {
            if pi == 0 {
                out.push(SkewShape {
                    outer: Partition::new(outer.clone()).unwrap(),
                    inner: Partition::new(inner.clone()).unwrap(),
                });
            }
            return;
        }
        // the next row must reach column pi + 1 so that no column empties
        for o in pi.max(1)..=po {
            for i in o.saturating_sub(rem)..o.min(pi + 1) {
                outer.push(o);
                inner.push(i);
                rec(rem - (o - i), outer, inner, out);
                outer.pop();
                inner.pop();
            }
        }
    }
    let mut out = Vec::new();
    for o in 1..=size {
        for i in o.saturating_sub(size)..o {
            let (mut outer, mut inner) = (vec![o], vec![i]);
            rec(size - (o - i), &mut outer, &mut inner, &mut out);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> SkewShape {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(s("6^2,4^2,2^2/3^3").to_string(), "6,6,4,4,2,2/3,3,3");
        assert_eq!(s("3,2").inner(), &Partition::empty());
        assert!(matches!("2/3".parse::<SkewShape>(), Err(Error::NotContained { .. })));
        assert!(matches!("3/1/1".parse::<SkewShape>(), Err(Error::BadSkew(_))));
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(s("4,3,2/0").rotate_pi(), s("4,4,4/2,1"));
        assert_eq!(s("4,3,2/2").rotate_pi(), s("4,4,2/2,1"));
        assert_eq!(s("3,3/0").rotate_pi(), s("3,3/0"));
        assert_eq!(s("0/0").rotate_pi(), s("0/0"));
    }

    #[test]
    fn basic_examples() {
        assert_eq!(s("9,8,5,3,3,3/7,5,5,3,2,1").to_basic(), s("6,5,2,2/4,2,1"));
        assert_eq!(s("3,2,1/2,1").to_basic(), s("3,2,1/2,1"));
        assert_eq!(s("4,4,4/2,1").to_basic(), s("4,4,4/2,1"));
        assert!(s("6,5,2,2/4,2,1").is_basic());
        assert!(!s("9,8,5,3,3,3/7,5,5,3,2,1").is_basic());
        assert!(!s("9,8,5,3,3,3/7,5,5,3,2,1").is_row_basic());
        // 321/21: rows and columns each hold one cell
        let shape = s("3,2,1/2,1");
        let cells = shape.cells();
        assert_eq!(cells, vec![(0, 2), (1, 1), (2, 0)]);
        for k in 0..3 {
            assert!(cells.iter().any(|c| c.0 == k) && cells.iter().any(|c| c.1 == k));
        }
        assert!(shape.is_basic());
        // row-basic but with an empty first column
        assert!(s("2,2/1,1").is_row_basic());
        assert!(!s("2,2/1,1").is_basic());
        assert_eq!(s("2,2/1,1").to_basic(), s("1,1/0"));
    }

    #[test]
    fn component_examples() {
        assert_eq!(s("6,5,2,2,1/4,2,1").components().unwrap(), vec![s("4,3/2"), s("2,2,1/1")]);
        assert_eq!(s("3,2,1/2,1").components().unwrap().len(), 3);
        assert_eq!(s("3,3,2/1").components().unwrap(), vec![s("3,3,2/1")]);
        assert_eq!(s("6,5,2,2/4,2,1").components().unwrap().len(), 2);
        assert!(matches!(s("2,2/1,1").components(), Err(Error::NotBasic(_))));
    }

    #[test]
    fn join_splits_back() {
        let (theta, phi) = (s("2,2,1/1"), s("4,3/2"));
        let joined = phi.join(&theta);
        assert_eq!(joined, s("6,5,2,2,1/4,2,1"));
        assert_eq!(joined.components().unwrap(), vec![phi, theta]);
    }

    #[test]
    fn ascii_dump() {
        assert_eq!(s("3,2/1").ascii(), ".##\n##");
    }

    #[test]
    fn rotation_is_involution_on_basic_shapes() {
        for shape in skew_shapes_in_box(5, 5).into_iter().filter(SkewShape::is_basic) {
            let rotated = shape.rotate_pi();
            assert!(rotated.is_basic(), "{shape}");
            assert_eq!(rotated.rotate_pi(), shape);
            assert_eq!(rotated.size(), shape.size());
        }
    }

    #[test]
    fn normal_forms_preserve_cells() {
        for shape in skew_shapes_in_box(4, 5) {
            let basic = shape.to_basic();
            assert_eq!(basic.size(), shape.size());
            assert!(basic.is_basic());
            assert_eq!(basic.to_basic(), basic);
            let total: usize = basic.components().unwrap().iter().map(SkewShape::size).sum();
            assert_eq!(total, shape.size());
        }
    }

    #[test]
    fn small_basic_shape_counts() {
        // 1 cell: (1); 2 cells: (2), (1,1), 21/1
        assert_eq!(basic_shapes_with_cells(1), vec![s("1")]);
        assert_eq!(basic_shapes_with_cells(2).len(), 3);
        for size in 1..=6 {
            let mut filtered: Vec<SkewShape> = skew_shapes_in_box(size, size)
                .into_iter()
                .filter(|s| s.size() == size && s.is_basic())
                .collect();
            filtered.sort();
            assert_eq!(basic_shapes_with_cells(size), filtered);
        }
    }
}
