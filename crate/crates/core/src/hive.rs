//! Integer hives and the LR-hive enumerator.
//!
//! An `n`-hive stores a label `a(i, j)` at each vertex `i, j >= 0`,
//! `i + j <= n`, of a triangular grid. The three lattice edge directions are
//! `(1, 0)`, `(0, 1)` and `(1, -1)`; two unit triangles sharing an edge
//! form a unit rhombus, and the hive condition asks that the two labels on
//! the shared edge sum to at least the two labels at the far corners.
//!
//! For an LR-hive the boundary is fixed by three partitions:
//! `a(0, i) = nu_1 + ... + nu_i`, `a(k, 0) = lambda_1 + ... + lambda_k` and
//! `a(j, n - j) = |nu| + mu_1 + ... + mu_j`. Only vertex labels are stored;
//! edge labels are differences of their endpoints.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest boundary weight accepted by the enumerator.
pub const MAX_WEIGHT: u64 = 1 << 31;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hive {
    n: usize,
    labels: Vec<i64>,
}

fn offset(n: usize, i: usize) -> usize {
    i * (n + 1) - i * (i.saturating_sub(1)) / 2
}

fn vertex_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

impl Hive {
    pub fn zeros(n: usize) -> Self {
        Hive { n, labels: vec![0; vertex_count(n)] }
    }

    /// Builds a hive from rows `i = 0..=n`, row `i` holding `a(i, 0..=n-i)`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let n = rows.len().checked_sub(1)?;
        if rows.iter().enumerate().any(|(i, r)| r.len() != n + 1 - i) {
            return None;
        }
        Some(Hive { n, labels: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i + j <= self.n);
        offset(self.n, i) + j
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.labels[self.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        let k = self.index(i, j);
        self.labels[k] = value;
    }

    /// Rows `i = 0..=n`, row `i` holding `a(i, 0..=n-i)`.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..=self.n).map(|i| (0..=self.n - i).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Rows from the apex `a(0, 0)` to the base `i + j = n`; row `r` lists
    /// `a(r, 0), a(r - 1, 1), ..., a(0, r)`.
    pub fn apex_rows(&self) -> Vec<Vec<i64>> {
        (0..=self.n).map(|r| (0..=r).map(|j| self.get(r - j, j)).collect()).collect()
    }

    /// Edge labels `(end - start)` for every edge, grouped by direction and
    /// listed line by line, each line in the direction of its edges.
    pub fn edge_lines(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut lines = Vec::new();
        for j in 0..n {
            lines.push((0..n - j).map(|i| self.get(i + 1, j) - self.get(i, j)).collect());
        }
        for i in 0..n {
            lines.push((0..n - i).map(|j| self.get(i, j + 1) - self.get(i, j)).collect());
        }
        for s in 1..=n {
            lines.push((0..s).map(|i| self.get(i + 1, s - i - 1) - self.get(i, s - i)).collect());
        }
        lines
    }

    /// Checks every unit rhombus; returns the first violated one.
    pub fn first_violation(&self) -> Option<Rhombus> {
        rhombi(self.n).into_iter().find(|r| !r.holds(|i, j| self.get(i, j)))
    }
}

impl fmt::Display for Hive {
    /// One row per line, apex first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.apex_rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Hive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hive{:?}", self.apex_rows())
    }
}

impl Serialize for Hive {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.apex_rows().serialize(s)
    }
}

/// A unit rhombus: `short` spans the shared edge, `long` the far corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rhombus {
    pub short: [(usize, usize); 2],
    pub long: [(usize, usize); 2],
}

impl Rhombus {
    fn holds(&self, label: impl Fn(usize, usize) -> i64) -> bool {
        let s = label(self.short[0].0, self.short[0].1) + label(self.short[1].0, self.short[1].1);
        let l = label(self.long[0].0, self.long[0].1) + label(self.long[1].0, self.long[1].1);
        s >= l
    }

    fn vertices(&self) -> [(usize, usize); 4] {
        [self.short[0], self.short[1], self.long[0], self.long[1]]
    }
}

/// All unit rhombi of an `n`-hive, in the three orientations.
pub fn rhombi(n: usize) -> Vec<Rhombus> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n - i {
            // shared edge (i+1, j)-(i, j+1)
            if i + j + 2 <= n {
                out.push(Rhombus { short: [(i + 1, j), (i, j + 1)], long: [(i, j), (i + 1, j + 1)] });
            }
            // shared edge (i, j)-(i+1, j)
            if j >= 1 && i + j < n {
                out.push(Rhombus { short: [(i, j), (i + 1, j)], long: [(i, j + 1), (i + 1, j - 1)] });
            }
            // shared edge (i, j)-(i, j+1)
            if i >= 1 && i + j < n {
                out.push(Rhombus { short: [(i, j), (i, j + 1)], long: [(i + 1, j), (i - 1, j + 1)] });
            }
        }
    }
    out
}

/// The boundary data `(lambda, mu, nu)` of an LR-hive of side `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiveBoundary {
    n: usize,
    lambda: Partition,
    mu: Partition,
    nu: Partition,
}

impl HiveBoundary {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition, n: usize) -> Result<Self> {
        for p in [&lambda, &mu, &nu] {
            if p.len() > n {
                return Err(Error::TooLong { partition: p.to_string(), n });
            }
        }
        let w = lambda.weight().max(mu.weight() + nu.weight()) as u64;
        if w > MAX_WEIGHT {
            return Err(Error::WeightTooLarge(w));
        }
        Ok(HiveBoundary { n, lambda, mu, nu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    /// `|mu| + |nu| = |lambda|`; otherwise no LR-hive exists.
    pub fn is_balanced(&self) -> bool {
        self.mu.weight() + self.nu.weight() == self.lambda.weight()
    }

    /// The prescribed label at a boundary vertex, `None` for interior ones.
    /// Where two boundary edges meet, the `lambda` and `nu` sides win.
    pub fn label(&self, i: usize, j: usize) -> Option<i64> {
        let prefix = |p: &Partition, k: usize| p.parts().iter().take(k).sum::<usize>() as i64;
        if i == 0 {
            Some(prefix(&self.nu, j))
        } else if j == 0 {
            Some(prefix(&self.lambda, i))
        } else if i + j == self.n {
            Some(self.nu.weight() as i64 + prefix(&self.mu, i))
        } else {
            None
        }
    }

    /// The hive with boundary labels filled in and zero interior.
    fn skeleton(&self) -> Hive {
        let mut h = Hive::zeros(self.n);
        for i in 0..=self.n {
            for j in 0..=self.n - i {
                if let Some(v) = self.label(i, j) {
                    h.set(i, j, v);
                }
            }
        }
        h
    }
}

/// Order in which the enumerator assigns interior vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanOrder {
    /// By `i`, then `j`.
    #[default]
    RowMajor,
    /// By `i + j`, then `i`.
    AntiDiagonal,
}

/// Interior vertices `i, j >= 1`, `i + j <= n - 1`, in scan order.
pub fn interior_vertices(n: usize, order: ScanOrder) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> =
        (1..n).flat_map(|i| (1..n.saturating_sub(i)).map(move |j| (i, j))).collect();
    if order == ScanOrder::AntiDiagonal {
        v.sort_by_key(|&(i, j)| (i + j, i));
    }
    v
}

/// True iff `h` carries `b`'s boundary labels and satisfies every rhombus
/// inequality.
pub fn is_valid_lr_hive(h: &Hive, b: &HiveBoundary) -> Result<bool> {
    if h.n != b.n {
        return Err(Error::DimensionMismatch { hive: h.n, boundary: b.n });
    }
    if !b.is_balanced() {
        return Ok(false);
    }
    for i in 0..=h.n {
        for j in 0..=h.n - i {
            if let Some(v) = b.label(i, j) {
                if h.get(i, j) != v {
                    return Ok(false);
                }
            }
        }
    }
    Ok(h.first_violation().is_none())
}

/// One linear bound on the vertex being assigned: `value >= plus - minus`
/// for a lower bound, `value <= plus - minus` for an upper one. Terms are
/// label indices.
#[derive(Debug, Clone)]
struct Bound {
    lower: bool,
    plus: [usize; 2],
    minus: usize,
}

struct Search<'a> {
    hive: Hive,
    boundary: &'a HiveBoundary,
    slots: Vec<usize>,
    bounds: Vec<Vec<Bound>>,
    cap: i64,
}

impl<'a> Search<'a> {
    /// Returns `None` when a rhombus on the boundary alone already fails.
    fn new(boundary: &'a HiveBoundary, order: ScanOrder) -> Option<Self> {
        let hive = boundary.skeleton();
        let n = boundary.n;
        let vertices = interior_vertices(n, order);
        let mut step_of = vec![usize::MAX; vertex_count(n)];
        for (k, &(i, j)) in vertices.iter().enumerate() {
            step_of[hive.index(i, j)] = k;
        }
        let mut bounds = vec![Vec::new(); vertices.len()];
        for r in rhombi(n) {
            let step = |v: (usize, usize)| step_of[hive.index(v.0, v.1)];
            let last = r.vertices().into_iter().filter(|&v| step(v) != usize::MAX).max_by_key(|&v| step(v));
            let Some(last) = last else {
                if !r.holds(|i, j| hive.get(i, j)) {
                    return None;
                }
                continue;
            };
            let idx = |v: (usize, usize)| hive.index(v.0, v.1);
            let bound = if r.short.contains(&last) {
                let other = if r.short[0] == last { r.short[1] } else { r.short[0] };
                Bound { lower: true, plus: [idx(r.long[0]), idx(r.long[1])], minus: idx(other) }
            } else {
                let other = if r.long[0] == last { r.long[1] } else { r.long[0] };
                Bound { lower: false, plus: [idx(r.short[0]), idx(r.short[1])], minus: idx(other) }
            };
            bounds[step(last)].push(bound);
        }
        let slots = vertices.iter().map(|&(i, j)| hive.index(i, j)).collect();
        Some(Search { cap: boundary.lambda.weight() as i64, hive, boundary, slots, bounds })
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&Hive)) {
        if k == self.slots.len() {
            debug_assert!(is_valid_lr_hive(&self.hive, self.boundary).unwrap());
            if self.hive.first_violation().is_none() {
                visit(&self.hive);
            }
            return;
        }
        let labels = &self.hive.labels;
        let (mut lo, mut hi) = (0i64, self.cap);
        for b in &self.bounds[k] {
            let v = labels[b.plus[0]] + labels[b.plus[1]] - labels[b.minus];
            if b.lower {
                lo = lo.max(v);
            } else {
                hi = hi.min(v);
            }
        }
        let slot = self.slots[k];
        for value in lo..=hi {
            self.hive.labels[slot] = value;
            self.run(k + 1, visit);
        }
        self.hive.labels[slot] = 0;
    }
}

/// Calls `visit` on every LR-hive with boundary `b`, in lexicographic order
/// of the interior labels taken in `order`.
pub fn for_each_lr_hive(b: &HiveBoundary, order: ScanOrder, visit: &mut dyn FnMut(&Hive)) {
    if !b.is_balanced() {
        return;
    }
    if let Some(mut search) = Search::new(b, order) {
        search.run(0, visit);
    }
}

pub fn enumerate_lr_hives_with(b: &HiveBoundary, order: ScanOrder) -> Vec<Hive> {
    let mut out = Vec::new();
    for_each_lr_hive(b, order, &mut |h| out.push(h.clone()));
    out
}

/// All LR-hives of side `n` with boundary `(lambda, mu, nu)`.
pub fn enumerate_lr_hives(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<Vec<Hive>> {
    let b = HiveBoundary::new(lambda.clone(), mu.clone(), nu.clone(), n)?;
    Ok(enumerate_lr_hives_with(&b, ScanOrder::RowMajor))
}

pub fn count_lr_hives(b: &HiveBoundary) -> u64 {
    let mut count = 0;
    for_each_lr_hive(b, ScanOrder::RowMajor, &mut |_| count += 1);
    count
}

/// The necessary conditions on weights, lengths and containment for
/// `c^lambda_{mu nu}` to be nonzero.
pub fn support_holds(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lambda.weight() == mu.weight() + nu.weight()
        && mu.len().max(nu.len()) <= lambda.len()
        && lambda.len() <= mu.len() + nu.len()
        && lambda.contains(mu)
        && lambda.contains(nu)
}

/// `c^lambda_{mu nu}` as a count of LR-hives of side
/// `max(l(lambda), l(mu) + l(nu))`.
///
/// Panics if the weight exceeds [`MAX_WEIGHT`].
pub fn lr_coefficient_hive(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !support_holds(lambda, mu, nu) {
        return 0;
    }
    let n = lambda.len().max(mu.len() + nu.len()).max(1);
    lr_coefficient_hive_n(lambda, mu, nu, n)
}

/// `c^lambda_{mu nu}` counted on hives of an explicit side `n`.
pub fn lr_coefficient_hive_n(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> u64 {
    let b = HiveBoundary::new(lambda.clone(), mu.clone(), nu.clone(), n).expect("hive boundary within limits");
    count_lr_hives(&b)
}

/// Interior vertices whose label is not the same in every LR-hive with
/// this boundary.
pub fn free_interior_vertices(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<Vec<(usize, usize)>> {
    let hives = enumerate_lr_hives(lambda, mu, nu, n)?;
    let first = hives.first().ok_or(Error::NoHive)?;
    Ok(interior_vertices(n, ScanOrder::RowMajor)
        .into_iter()
        .filter(|&(i, j)| hives.iter().any(|h| h.get(i, j) != first.get(i, j)))
        .collect())
}
