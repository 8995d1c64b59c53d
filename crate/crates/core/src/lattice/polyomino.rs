use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use super::{Cell, LatticeError};

/// A finite set of lattice cells: the region to be tiled.
///
/// Cells are kept sorted in scan order without duplicates. Connectivity is
/// not assumed; callers check it with [`Polyomino::is_connected`] when an
/// operation requires it.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Polyomino {
    dim: usize,
    cells: Vec<Cell>,
}

impl Polyomino {
    /// Builds a nonempty region, rejecting duplicates and mixed dimensions.
    pub fn new(dim: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self, LatticeError> {
        let p = Self::with_cells(dim, cells)?;
        if p.cells.is_empty() {
            return Err(LatticeError::EmptyRegion);
        }
        Ok(p)
    }

    /// The explicitly empty region of dimension `dim`.
    pub fn empty(dim: usize) -> Self {
        Polyomino { dim, cells: Vec::new() }
    }

    /// Like [`Polyomino::new`] but accepts an empty cell list.
    pub fn with_cells(dim: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self, LatticeError> {
        if dim == 0 {
            return Err(LatticeError::ZeroDimension);
        }
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        if let Some(bad) = cells.iter().find(|c| c.dim() != dim) {
            return Err(LatticeError::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(LatticeError::DuplicateCell(w[0].clone()));
        }
        Ok(Polyomino { dim, cells })
    }

    /// Convenience constructor for planar regions.
    pub fn from_xy(cells: impl IntoIterator<Item = (i32, i32)>) -> Result<Self, LatticeError> {
        Self::new(2, cells.into_iter().map(Cell::from))
    }

    /// Builds from cells already sorted and unique. Used on hot paths.
    pub(crate) fn from_sorted_unchecked(dim: usize, cells: Vec<Cell>) -> Self {
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        Polyomino { dim, cells }
    }

    /// The `w` by `h` rectangle with lower-left cell at the origin.
    pub fn rectangle(w: i32, h: i32) -> Self {
        let mut cells = Vec::with_capacity((w.max(0) * h.max(0)) as usize);
        for y in 0..h {
            for x in 0..w {
                cells.push(Cell::xy(x, y));
            }
        }
        Polyomino { dim: 2, cells }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells in scan order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<Cell> {
        self.cells
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    /// Coordinatewise (min, max) corners, or `None` when empty.
    pub fn bounds(&self) -> Option<(Cell, Cell)> {
        let first = self.cells.first()?;
        Some(self.cells.iter().fold((first.clone(), first.clone()), |(lo, hi), c| (lo.coord_min(c), hi.coord_max(c))))
    }

    pub fn translated(&self, by: &Cell) -> Polyomino {
        // Translation preserves scan order.
        Polyomino { dim: self.dim, cells: self.cells.iter().map(|c| c.add(by)).collect() }
    }

    /// Translates so the coordinatewise minimum is the origin.
    pub fn normalized(&self) -> Polyomino {
        match self.bounds() {
            Some((lo, _)) => self.translated(&Cell::origin(self.dim).sub(&lo)),
            None => self.clone(),
        }
    }

    /// The union with one more cell. Fails if the cell is already present.
    pub fn with_cell(&self, c: Cell) -> Result<Polyomino, LatticeError> {
        Polyomino::with_cells(self.dim, self.cells.iter().cloned().chain(std::iter::once(c)))
    }

    /// Cells outside the region that share a face with it, in scan order.
    pub fn boundary(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> =
            self.cells.iter().flat_map(|c| c.neighbors().collect::<Vec<_>>()).filter(|n| !self.contains(n)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Face-adjacency connectivity by flood fill. The empty region counts as connected.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.cells.first() else {
            return true;
        };
        let mut seen: FxHashSet<&Cell> = FxHashSet::default();
        seen.insert(start);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbors() {
                if let Ok(i) = self.cells.binary_search(&n) {
                    if seen.insert(&self.cells[i]) {
                        queue.push_back(n);
                    }
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Face-connected components, each in scan order, ordered by least cell.
    pub fn components(&self) -> Vec<Polyomino> {
        let mut seen = vec![false; self.cells.len()];
        let mut out = Vec::new();
        for start in 0..self.cells.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let c = &self.cells[members[k]];
                k += 1;
                for n in c.neighbors() {
                    if let Ok(i) = self.cells.binary_search(&n) {
                        if !seen[i] {
                            seen[i] = true;
                            members.push(i);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(Polyomino { dim: self.dim, cells: members.into_iter().map(|i| self.cells[i].clone()).collect() });
        }
        out
    }

    /// Planar simple connectivity: connected, and the complement inside the
    /// bounding box padded by one ring forms a single face-connected component.
    pub fn is_simply_connected(&self) -> Result<bool, LatticeError> {
        if self.dim != 2 {
            return Err(LatticeError::DimensionMismatch { expected: 2, found: self.dim });
        }
        if self.is_empty() || !self.is_connected() {
            return Ok(false);
        }
        Ok(self.box_complement_connected())
    }

    /// Complement connectivity inside the padded bounding box, in any dimension.
    pub(crate) fn box_complement_connected(&self) -> bool {
        let Some((lo, hi)) = self.bounds() else {
            return true;
        };
        let lo: Vec<i64> = lo.coords().iter().map(|&v| v as i64 - 1).collect();
        let hi: Vec<i64> = hi.coords().iter().map(|&v| v as i64 + 1).collect();
        let extent: Vec<usize> = lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as usize).collect();
        let total: usize = extent.iter().product();
        let mut blocked = vec![false; total];
        let index = |c: &[i64]| -> usize {
            let mut idx = 0usize;
            for axis in (0..c.len()).rev() {
                idx = idx * extent[axis] + (c[axis] - lo[axis]) as usize;
            }
            idx
        };
        for c in &self.cells {
            let v: Vec<i64> = c.coords().iter().map(|&x| x as i64).collect();
            blocked[index(&v)] = true;
        }
        let free = total - self.cells.len();
        // The padded corner `lo` is always outside the region.
        let mut seen = blocked.clone();
        let start = lo.clone();
        seen[index(&start)] = true;
        let mut stack = vec![start];
        let mut reached = 1usize;
        while let Some(c) = stack.pop() {
            for axis in 0..c.len() {
                for step in [-1i64, 1] {
                    let mut n = c.clone();
                    n[axis] += step;
                    if n[axis] < lo[axis] || n[axis] > hi[axis] {
                        continue;
                    }
                    let i = index(&n);
                    if !seen[i] {
                        seen[i] = true;
                        reached += 1;
                        stack.push(n);
                    }
                }
            }
        }
        reached == free
    }
}

impl<'a> IntoIterator for &'a Polyomino {
    type Item = &'a Cell;
    type IntoIter = std::slice::Iter<'a, Cell>;

    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}
