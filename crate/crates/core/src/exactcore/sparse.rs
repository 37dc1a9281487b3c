//! Incremental sparse row echelon form over ℚ.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_traits::{One, Zero};

use super::Rat;

/// A sparse vector: `(column, value)` pairs sorted by column, no zeros.
pub type SparseVec = Vec<(u32, Rat)>;

const NONE: u32 = u32::MAX;

/// A row echelon basis of a subspace of ℚ^ncols, built one vector at a time.
///
/// Each stored row has leading entry 1 at its pivot column; other entries sit
/// at larger columns. Reduction works in a dense scratch buffer, visiting
/// columns in increasing order through a heap of touched positions.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    ncols: usize,
    pivot_row: Vec<u32>,
    rows: Vec<SparseVec>,
    pivots: Vec<u32>,
    scratch: Vec<Rat>,
    in_heap: Vec<bool>,
}

enum Outcome {
    Reduced,
    NewPivot(SparseVec),
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> SparseEchelon {
        SparseEchelon {
            ncols,
            pivot_row: vec![NONE; ncols],
            rows: Vec::new(),
            pivots: Vec::new(),
            scratch: vec![Rat::zero(); ncols],
            in_heap: vec![false; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Extends the ambient space to `ncols` columns. New columns come last.
    pub fn grow(&mut self, ncols: usize) {
        if ncols > self.ncols {
            self.ncols = ncols;
            self.pivot_row.resize(ncols, NONE);
            self.scratch.resize(ncols, Rat::zero());
            self.in_heap.resize(ncols, false);
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Pivot column of each row, in insertion order.
    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivot_row[col as usize] != NONE
    }

    fn load(&mut self, v: &[(u32, Rat)], heap: &mut BinaryHeap<Reverse<u32>>) {
        for (c, a) in v {
            let ci = *c as usize;
            debug_assert!(ci < self.ncols);
            if a.is_zero() {
                continue;
            }
            self.scratch[ci] += a;
            if !self.in_heap[ci] {
                self.in_heap[ci] = true;
                heap.push(Reverse(*c));
            }
        }
    }

    /// Reduces against the stored rows. Stops at the first column that is not
    /// a pivot unless `full` is set, in which case such columns are kept in
    /// the remainder and reduction continues past them.
    fn run(&mut self, v: &[(u32, Rat)], full: bool, mut coords: Option<&mut Vec<(usize, Rat)>>) -> Outcome {
        let mut heap = BinaryHeap::new();
        self.load(v, &mut heap);
        let mut rest: SparseVec = Vec::new();
        while let Some(Reverse(c)) = heap.pop() {
            let ci = c as usize;
            self.in_heap[ci] = false;
            if self.scratch[ci].is_zero() {
                continue;
            }
            let r = self.pivot_row[ci];
            if r == NONE {
                let val = std::mem::take(&mut self.scratch[ci]);
                rest.push((c, val));
                if full {
                    continue;
                }
                while let Some(Reverse(d)) = heap.pop() {
                    let di = d as usize;
                    self.in_heap[di] = false;
                    let val = std::mem::take(&mut self.scratch[di]);
                    if !val.is_zero() {
                        rest.push((d, val));
                    }
                }
                rest.sort_unstable_by_key(|p| p.0);
                return Outcome::NewPivot(rest);
            }
            let f = std::mem::take(&mut self.scratch[ci]);
            let row = &self.rows[r as usize];
            for (j, a) in &row[1..] {
                let ji = *j as usize;
                self.scratch[ji] -= &f * a;
                if !self.in_heap[ji] {
                    self.in_heap[ji] = true;
                    heap.push(Reverse(*j));
                }
            }
            if let Some(cs) = coords.as_deref_mut() {
                cs.push((r as usize, f));
            }
        }
        if rest.is_empty() {
            Outcome::Reduced
        } else {
            Outcome::NewPivot(rest)
        }
    }

    fn push_row(&mut self, mut rest: SparseVec) {
        let lead = rest[0].1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for e in rest.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        let c = rest[0].0;
        self.pivot_row[c as usize] = self.rows.len() as u32;
        self.pivots.push(c);
        self.rows.push(rest);
    }

    /// Adds `v` to the spanning set. Returns true if the rank grew.
    pub fn insert(&mut self, v: &[(u32, Rat)]) -> bool {
        match self.run(v, false, None) {
            Outcome::Reduced => false,
            Outcome::NewPivot(rest) => {
                self.push_row(rest);
                true
            }
        }
    }

    /// The fully reduced remainder of `v` (empty iff `v` is in the span).
    pub fn reduce(&mut self, v: &[(u32, Rat)]) -> SparseVec {
        match self.run(v, true, None) {
            Outcome::Reduced => Vec::new(),
            Outcome::NewPivot(rest) => rest,
        }
    }

    pub fn contains(&mut self, v: &[(u32, Rat)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in terms of the stored rows, or `None` when `v` is
    /// not in the span.
    pub fn coordinates(&mut self, v: &[(u32, Rat)]) -> Option<Vec<(usize, Rat)>> {
        let mut cs = Vec::new();
        match self.run(v, true, Some(&mut cs)) {
            Outcome::Reduced => Some(cs),
            Outcome::NewPivot(_) => None,
        }
    }
}

/// Rank of a list of sparse vectors.
pub fn sparse_rank(ncols: usize, vs: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = SparseEchelon::new(ncols);
    for v in vs {
        if e.rank() == ncols {
            break;
        }
        e.insert(&v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(pairs: &[(u32, i64)]) -> SparseVec {
        pairs.iter().map(|&(c, a)| (c, Rat::from_int(a))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = SparseEchelon::new(4);
        assert!(e.insert(&sv(&[(0, 1), (2, 3)])));
        assert!(e.insert(&sv(&[(0, 2), (1, 1), (2, 6)])));
        assert!(!e.insert(&sv(&[(0, 3), (1, 1), (2, 9)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&sv(&[(1, 5)])));
        assert!(!e.contains(&sv(&[(3, 1)])));
        let cs = e.coordinates(&sv(&[(0, 2), (1, 3), (2, 6)])).unwrap();
        let total: Vec<(usize, Rat)> = cs;
        assert_eq!(total, vec![(0, Rat::from_int(2)), (1, Rat::from_int(3))]);
    }
}
