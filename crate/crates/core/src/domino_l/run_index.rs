//! Scanline state for the greedy tiler: maximal horizontal runs of untiled cells.
//!
//! Cells are numbered in scan order, so every run is a contiguous index range
//! and the whole structure is one ordered map from run start to run end.
//! Candidate even top rows, leftmost top rows, and corners live in
//! lazy-deletion heaps that are re-validated when popped.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use super::DominoLError;
use crate::lattice::{Cell, Polyomino};

/// A maximal horizontal run of untiled cells `[x_lo, x_hi]` at height `y`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Run {
    pub y: i32,
    pub x_lo: i32,
    pub x_hi: i32,
    /// Run cells whose upper neighbour is untiled.
    pub uncovered_above: usize,
}

impl Run {
    pub fn len(&self) -> usize {
        (self.x_hi - self.x_lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.x_hi < self.x_lo
    }

    pub fn is_top(&self) -> bool {
        self.uncovered_above == 0
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CornerKind {
    /// A horizontal pair with nothing above, nothing left, nothing below the left cell.
    Case1,
    /// A 2x2 block with nothing to its left or above.
    Case2,
}

/// A top left corner: a configuration where the covering tile is forced to be a domino.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Corner {
    pub kind: CornerKind,
    /// Lower-left cell of the configuration.
    pub anchor: Cell,
}

impl Corner {
    /// Left cell of the forced domino.
    pub fn domino_at(&self) -> (i32, i32) {
        match self.kind {
            CornerKind::Case1 => (self.anchor.x(), self.anchor.y()),
            CornerKind::Case2 => (self.anchor.x(), self.anchor.y() + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowDecomposition {
    pub runs: Vec<Run>,
    pub top_rows: Vec<Run>,
    /// Smallest `x_hi`, ties broken by largest `y`.
    pub leftmost_top_row: Option<Run>,
}

/// Cells whose removal can change the corner status of the anchor at the origin.
const CORNER_WINDOW: [(i32, i32); 9] = [(0, 0), (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, 1), (0, 2), (1, 2)];

pub struct RunIndex {
    xs: Vec<i32>,
    ys: Vec<i32>,
    y_min: i32,
    /// `row_start[r]..row_start[r + 1]` are the cells with `y = y_min + r`.
    row_start: Vec<u32>,
    untiled: Vec<bool>,
    /// Anchors currently waiting in `corners`.
    corner_queued: Vec<bool>,
    runs: BTreeMap<u32, u32>,
    remaining: usize,
    even_tops: BinaryHeap<Reverse<(i32, i32, u32, u32)>>,
    leftmost: BinaryHeap<Reverse<(i32, i32, u32, u32)>>,
    corners: BinaryHeap<Reverse<(i32, i32, u32)>>,
}

impl RunIndex {
    /// Index over all cells of a planar region, everything untiled.
    pub fn new(region: &Polyomino) -> Result<Self, DominoLError> {
        if region.dim() != 2 {
            return Err(DominoLError::Dimension { found: region.dim() });
        }
        let n = region.len();
        let xs: Vec<i32> = region.cells().iter().map(Cell::x).collect();
        let ys: Vec<i32> = region.cells().iter().map(Cell::y).collect();
        let y_min = ys.first().copied().unwrap_or(0);
        let y_max = ys.last().copied().unwrap_or(-1);
        let rows = (y_max - y_min + 1).max(0) as usize;
        let mut row_start = vec![0u32; rows + 1];
        for &y in &ys {
            row_start[(y - y_min) as usize + 1] += 1;
        }
        for r in 0..rows {
            row_start[r + 1] += row_start[r];
        }
        let mut idx = RunIndex {
            xs,
            ys,
            y_min,
            row_start,
            untiled: vec![true; n],
            corner_queued: vec![false; n],
            runs: BTreeMap::new(),
            remaining: n,
            even_tops: BinaryHeap::new(),
            leftmost: BinaryHeap::new(),
            corners: BinaryHeap::new(),
        };
        let mut lo = 0usize;
        while lo < n {
            let mut hi = lo;
            while hi + 1 < n && idx.ys[hi + 1] == idx.ys[lo] && idx.xs[hi + 1] == idx.xs[hi] + 1 {
                hi += 1;
            }
            idx.runs.insert(lo as u32, hi as u32);
            idx.push_run(lo as u32, hi as u32);
            idx.queue_corner(lo as u32);
            lo = hi + 1;
        }
        Ok(idx)
    }

    /// Number of untiled cells.
    pub fn remaining(&self) -> usize {
        self.remaining
    }

    pub fn cell_at(&self, x: i32, y: i32) -> Option<u32> {
        let r = y.checked_sub(self.y_min)?;
        if r < 0 || r as usize + 1 >= self.row_start.len() {
            return None;
        }
        let (a, b) = (self.row_start[r as usize] as usize, self.row_start[r as usize + 1] as usize);
        self.xs[a..b].binary_search(&x).ok().map(|i| (a + i) as u32)
    }

    /// Whether `(x, y)` is a cell of the region that is not yet tiled.
    pub fn is_untiled(&self, x: i32, y: i32) -> bool {
        self.cell_at(x, y).is_some_and(|i| self.untiled[i as usize])
    }

    /// First and last index of row `y` cells with `x` in `[x_lo, x_hi]`, if any.
    fn row_span(&self, y: i32, x_lo: i32, x_hi: i32) -> Option<(u32, u32)> {
        let r = y - self.y_min;
        if r < 0 || r as usize + 1 >= self.row_start.len() {
            return None;
        }
        let (a, b) = (self.row_start[r as usize] as usize, self.row_start[r as usize + 1] as usize);
        let row = &self.xs[a..b];
        let first = row.partition_point(|&x| x < x_lo);
        let end = row.partition_point(|&x| x <= x_hi);
        (first < end).then(|| ((a + first) as u32, (a + end - 1) as u32))
    }

    fn any_untiled_in(&self, lo: u32, hi: u32) -> bool {
        self.runs.range(..=hi).next_back().is_some_and(|(_, &end)| end >= lo)
    }

    fn run_is_top(&self, lo: u32, hi: u32) -> bool {
        let y = self.ys[lo as usize];
        match self.row_span(y + 1, self.xs[lo as usize], self.xs[hi as usize]) {
            Some((a, b)) => !self.any_untiled_in(a, b),
            None => true,
        }
    }

    fn run_containing(&self, i: u32) -> Option<(u32, u32)> {
        self.runs.range(..=i).next_back().filter(|(_, &hi)| hi >= i).map(|(&lo, &hi)| (lo, hi))
    }

    fn run_info(&self, lo: u32, hi: u32) -> Run {
        let y = self.ys[lo as usize];
        let above = (lo..=hi).filter(|&i| self.is_untiled(self.xs[i as usize], y + 1)).count();
        Run { y, x_lo: self.xs[lo as usize], x_hi: self.xs[hi as usize], uncovered_above: above }
    }

    fn push_run(&mut self, lo: u32, hi: u32) {
        let (y, x_lo, x_hi) = (self.ys[lo as usize], self.xs[lo as usize], self.xs[hi as usize]);
        if (hi - lo) % 2 == 1 {
            self.even_tops.push(Reverse((y, x_lo, lo, hi)));
        }
        self.leftmost.push(Reverse((x_hi, -y, lo, hi)));
    }

    /// All runs in scan order with top rows and the leftmost top row. `O(n log n)`.
    pub fn row_decomposition(&self) -> RowDecomposition {
        let runs: Vec<Run> = self.runs.iter().map(|(&lo, &hi)| self.run_info(lo, hi)).collect();
        let top_rows: Vec<Run> = runs.iter().copied().filter(Run::is_top).collect();
        let leftmost_top_row = top_rows.iter().copied().min_by_key(|r| (r.x_hi, Reverse(r.y)));
        RowDecomposition { runs, top_rows, leftmost_top_row }
    }

    /// The corner anchored at `(x, y)`, if that cell anchors one.
    pub fn corner_at(&self, x: i32, y: i32) -> Option<Corner> {
        let u = |dx: i32, dy: i32| self.is_untiled(x + dx, y + dy);
        if !u(0, 0) || !u(1, 0) || u(-1, 0) {
            return None;
        }
        if !u(0, 1) && !u(1, 1) && !u(0, -1) {
            return Some(Corner { kind: CornerKind::Case1, anchor: Cell::xy(x, y) });
        }
        if u(0, 1) && u(1, 1) && !u(-1, 1) && !u(0, 2) && !u(1, 2) {
            return Some(Corner { kind: CornerKind::Case2, anchor: Cell::xy(x, y) });
        }
        None
    }

    /// The corner with the smallest `(y, x)` anchor, by a full scan.
    pub fn find_corner(&self) -> Option<Corner> {
        // Every anchor has no untiled left neighbour, so it starts a run.
        self.runs.keys().filter_map(|&lo| self.corner_at(self.xs[lo as usize], self.ys[lo as usize])).next()
    }

    /// Pops the smallest `(y, x_lo)` even-length top run.
    pub(crate) fn next_even_top(&mut self) -> Option<(u32, u32)> {
        while let Some(&Reverse((_, _, lo, hi))) = self.even_tops.peek() {
            self.even_tops.pop();
            if self.runs.get(&lo) == Some(&hi) && self.run_is_top(lo, hi) {
                return Some((lo, hi));
            }
        }
        None
    }

    /// Pops the smallest `(y, x)` corner.
    pub(crate) fn next_corner(&mut self) -> Option<Corner> {
        while let Some(&Reverse((y, x, i))) = self.corners.peek() {
            self.corners.pop();
            self.corner_queued[i as usize] = false;
            if self.untiled[i as usize] {
                if let Some(c) = self.corner_at(x, y) {
                    return Some(c);
                }
            }
        }
        None
    }

    /// The leftmost top row, left in place.
    pub(crate) fn leftmost_top(&mut self) -> Option<Run> {
        while let Some(&Reverse((_, _, lo, hi))) = self.leftmost.peek() {
            if self.runs.get(&lo) == Some(&hi) && self.run_is_top(lo, hi) {
                let y = self.ys[lo as usize];
                return Some(Run { y, x_lo: self.xs[lo as usize], x_hi: self.xs[hi as usize], uncovered_above: 0 });
            }
            self.leftmost.pop();
        }
        None
    }

    /// Marks untiled cells as tiled and queues every candidate they may have changed.
    pub(crate) fn remove_cells(&mut self, cells: &[(i32, i32)]) {
        let mut touched_runs: Vec<u32> = Vec::with_capacity(8);
        for &(x, y) in cells {
            let i = self.cell_at(x, y).expect("cell in region");
            debug_assert!(self.untiled[i as usize]);
            let (lo, hi) = self.run_containing(i).expect("untiled cell lies in a run");
            self.runs.remove(&lo);
            if lo < i {
                self.runs.insert(lo, i - 1);
                touched_runs.push(lo);
            }
            if i < hi {
                self.runs.insert(i + 1, hi);
                touched_runs.push(i + 1);
            }
            self.untiled[i as usize] = false;
            self.remaining -= 1;
        }
        self.after_removal(cells, touched_runs);
    }

    /// Removes the whole run starting at `lo`.
    pub(crate) fn remove_run(&mut self, lo: u32) -> Vec<(i32, i32)> {
        let hi = self.runs.remove(&lo).expect("run exists");
        let cells: Vec<(i32, i32)> = (lo..=hi).map(|i| (self.xs[i as usize], self.ys[i as usize])).collect();
        for i in lo..=hi {
            self.untiled[i as usize] = false;
        }
        self.remaining -= cells.len();
        self.after_removal(&cells, Vec::new());
        cells
    }

    fn queue_corner(&mut self, i: u32) {
        let k = i as usize;
        if self.untiled[k] && !self.corner_queued[k] {
            self.corner_queued[k] = true;
            self.corners.push(Reverse((self.ys[k], self.xs[k], i)));
        }
    }

    fn after_removal(&mut self, cells: &[(i32, i32)], touched_runs: Vec<u32>) {
        for lo in touched_runs {
            if let Some(&hi) = self.runs.get(&lo) {
                self.push_run(lo, hi);
            }
        }
        for &(x, y) in cells {
            if let Some(below) = self.cell_at(x, y - 1) {
                if let Some((lo, hi)) = self.run_containing(below) {
                    self.push_run(lo, hi);
                }
            }
            for (dx, dy) in CORNER_WINDOW {
                let (ax, ay) = (x - dx, y - dy);
                if let Some(a) = self.cell_at(ax, ay) {
                    self.queue_corner(a);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn index(cells: &[(i32, i32)]) -> RunIndex {
        RunIndex::new(&Polyomino::from_xy(cells.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn leftmost_top_row_prefers_small_right_end() {
        let idx = index(&[(5, 2), (6, 2), (0, 1), (1, 1), (2, 1)]);
        let d = idx.row_decomposition();
        assert_eq!(d.top_rows.len(), 2);
        let l = d.leftmost_top_row.unwrap();
        assert_eq!((l.y, l.x_lo, l.x_hi), (1, 0, 2));
    }

    #[test]
    fn leftmost_top_row_ties_go_to_the_highest() {
        let idx = index(&[(0, 3), (1, 3), (1, 1)]);
        let l = idx.row_decomposition().leftmost_top_row.unwrap();
        assert_eq!(l.y, 3);
    }

    #[test]
    fn square_has_one_top_row() {
        let idx = RunIndex::new(&Polyomino::rectangle(3, 3)).unwrap();
        let d = idx.row_decomposition();
        assert_eq!(d.runs.len(), 3);
        assert_eq!(d.top_rows.len(), 1);
        assert_eq!((d.top_rows[0].y, d.top_rows[0].len()), (2, 3));
        assert_eq!(d.runs[0].uncovered_above, 3);
    }

    #[test]
    fn corners_of_both_kinds() {
        let sq = RunIndex::new(&Polyomino::rectangle(2, 2)).unwrap();
        assert_eq!(sq.find_corner(), Some(Corner { kind: CornerKind::Case2, anchor: Cell::xy(0, 0) }));
        let bar = RunIndex::new(&Polyomino::rectangle(4, 1)).unwrap();
        assert_eq!(bar.find_corner(), Some(Corner { kind: CornerKind::Case1, anchor: Cell::xy(0, 0) }));
    }

    #[test]
    fn seven_cell_region_has_no_corner() {
        let idx = index(&[(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1)]);
        assert_eq!(idx.find_corner(), None);
    }

    #[test]
    fn removal_splits_runs_and_exposes_rows_below() {
        let mut idx = RunIndex::new(&Polyomino::rectangle(4, 2)).unwrap();
        idx.remove_cells(&[(1, 1), (2, 1)]);
        let d = idx.row_decomposition();
        let runs: Vec<_> = d.runs.iter().map(|r| (r.y, r.x_lo, r.x_hi)).collect();
        assert_eq!(runs, vec![(0, 0, 3), (1, 0, 0), (1, 3, 3)]);
        assert_eq!(d.top_rows.len(), 2);
        assert_eq!(idx.remaining(), 6);
    }
}
