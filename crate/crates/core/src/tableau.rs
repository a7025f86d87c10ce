//! Littlewood-Richardson tableau counting, used as the independent oracle
//! for the hive engine.
//!
//! Cells are filled in reverse reading order (rows top to bottom, each row
//! right to left) so every partial filling is a prefix of the reverse
//! reading word and the lattice condition can be checked one letter at a
//! time.

use std::collections::BTreeMap;

use crate::partition::Partition;
use crate::skew::SkewShape;

/// An LR tableau. Entry keys are 1-indexed `(row, column)` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrTableau {
    pub shape: SkewShape,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl LrTableau {
    /// Row reading right to left, rows top to bottom.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.entries.len());
        let outer = self.shape.outer();
        for r in 1..=outer.len() {
            for c in (1..=outer.part(r - 1)).rev() {
                if let Some(&v) = self.entries.get(&(r, c)) {
                    word.push(v);
                }
            }
        }
        word
    }

    /// Full re-validation against shape, semistandardness, content and the
    /// lattice condition.
    pub fn is_valid_for(&self, content: &Partition) -> bool {
        let cells = self.shape.cells();
        if cells.len() != self.entries.len() {
            return false;
        }
        if !cells.iter().all(|&(r, c)| self.entries.contains_key(&(r + 1, c + 1))) {
            return false;
        }
        for (&(r, c), &v) in &self.entries {
            if v == 0 {
                return false;
            }
            if let Some(&right) = self.entries.get(&(r, c + 1)) {
                if v > right {
                    return false;
                }
            }
            if let Some(&below) = self.entries.get(&(r + 1, c)) {
                if v >= below {
                    return false;
                }
            }
        }
        let mut counts = vec![0usize; content.len() + 2];
        for v in self.reverse_reading_word() {
            if v > content.len() {
                return false;
            }
            counts[v] += 1;
            if v > 1 && counts[v] > counts[v - 1] {
                return false;
            }
        }
        (1..=content.len()).all(|i| counts[i] == content.part(i - 1))
    }
}

/// Where the lattice-word condition is enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeCheck {
    /// On every prefix while filling.
    Incremental,
    /// Only on complete fillings.
    AtLeaves,
}

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    order: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    word: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, alphabet: usize) -> Self {
        let (outer, inner) = (shape.outer(), shape.inner());
        let order = (0..outer.len())
            .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
            .collect::<Vec<_>>();
        Filler {
            outer,
            inner,
            grid: outer.parts().iter().map(|&p| vec![0; p]).collect(),
            counts: vec![0; alphabet + 2],
            word: Vec::with_capacity(order.len()),
            order,
        }
    }

    /// Entry range allowed by the row and column conditions at `(r, c)`.
    fn local_range(&self, r: usize, c: usize, alphabet: usize) -> (usize, usize) {
        let mut lo = 1;
        let mut hi = alphabet;
        if c + 1 < self.outer.part(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        if r > 0 && c >= self.inner.part(r - 1) {
            lo = lo.max(self.grid[r - 1][c] + 1);
        }
        (lo, hi)
    }

    fn is_lattice(word: &[usize], alphabet: usize) -> bool {
        let mut counts = vec![0usize; alphabet + 2];
        word.iter().all(|&v| {
            counts[v] += 1;
            v == 1 || counts[v] <= counts[v - 1]
        })
    }

    /// Fills with content bounded by `content`; calls `leaf` on each
    /// complete LR filling.
    fn fill_content(&mut self, k: usize, content: &[usize], check: LatticeCheck, leaf: &mut dyn FnMut(&Self)) {
        if k == self.order.len() {
            if check == LatticeCheck::AtLeaves && !Self::is_lattice(&self.word, content.len()) {
                return;
            }
            if (0..content.len()).all(|i| self.counts[i + 1] == content[i]) {
                leaf(self);
            }
            return;
        }
        let (r, c) = self.order[k];
        let (lo, hi) = self.local_range(r, c, content.len());
        for v in lo..=hi {
            if self.counts[v] >= content[v - 1] {
                continue;
            }
            if check == LatticeCheck::Incremental && v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            self.place(r, c, v);
            self.fill_content(k + 1, content, check, leaf);
            self.unplace(r, c, v);
        }
    }

    /// Fills with any content; `leaf` receives the count vector.
    fn fill_free(&mut self, k: usize, alphabet: usize, leaf: &mut dyn FnMut(&[usize])) {
        if k == self.order.len() {
            leaf(&self.counts[1..]);
            return;
        }
        let (r, c) = self.order[k];
        let (lo, hi) = self.local_range(r, c, alphabet);
        for v in lo..=hi {
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            self.place(r, c, v);
            self.fill_free(k + 1, alphabet, leaf);
            self.unplace(r, c, v);
        }
    }

    fn place(&mut self, r: usize, c: usize, v: usize) {
        self.grid[r][c] = v;
        self.counts[v] += 1;
        self.word.push(v);
    }

    fn unplace(&mut self, r: usize, c: usize, v: usize) {
        self.grid[r][c] = 0;
        self.counts[v] -= 1;
        self.word.pop();
    }

    fn snapshot(&self, shape: &SkewShape) -> LrTableau {
        let entries = self.order.iter().map(|&(r, c)| ((r + 1, c + 1), self.grid[r][c])).collect();
        LrTableau { shape: shape.clone(), entries }
    }
}

fn admissible(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lambda.contains(mu) && lambda.weight() == mu.weight() + nu.weight()
}

/// All LR tableaux of shape `lambda/mu` and content `nu`, in the order the
/// backtracking search meets them.
pub fn enumerate_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<LrTableau> {
    if !admissible(lambda, mu, nu) {
        return Vec::new();
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
    let mut filler = Filler::new(&shape, nu.len());
    let mut out = Vec::new();
    filler.fill_content(0, nu.parts(), LatticeCheck::Incremental, &mut |f| out.push(f.snapshot(&shape)));
    out
}

/// `c^lambda_{mu nu}` by the Littlewood-Richardson rule.
pub fn lr_tableau_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    lr_tableau_count_with(lambda, mu, nu, LatticeCheck::Incremental)
}

pub fn lr_tableau_count_with(lambda: &Partition, mu: &Partition, nu: &Partition, check: LatticeCheck) -> u64 {
    if !admissible(lambda, mu, nu) {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
    let mut filler = Filler::new(&shape, nu.len());
    let mut count = 0;
    filler.fill_content(0, nu.parts(), check, &mut |_| count += 1);
    count
}

/// Counts LR fillings of `shape` grouped by content: the full expansion of
/// the skew Schur function in one pass.
pub fn lr_contents(shape: &SkewShape) -> BTreeMap<Partition, u64> {
    let alphabet = shape.outer().len();
    let mut filler = Filler::new(shape, alphabet);
    let mut out = BTreeMap::new();
    filler.fill_free(0, alphabet, &mut |counts| {
        let content = Partition::new(counts.to_vec()).expect("lattice words have partition content");
        *out.entry(content).or_insert(0) += 1;
    });
    out
}
