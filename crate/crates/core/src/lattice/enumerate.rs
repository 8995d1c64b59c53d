//! Fixed polyomino enumeration by Redelmeier's method.
//!
//! Cells are grown from the origin inside the half plane `y > 0 || (y == 0 && x >= 0)`,
//! so each fixed polyomino is produced exactly once with its lowest-leftmost
//! cell at the origin, and no deduplication table is needed.

use super::{Cell, LatticeError, Polyomino};

/// Largest size accepted by [`enumerate_fixed_polyominoes`].
pub const ENUMERATION_CAP: usize = 12;

/// Every fixed (translation-distinct) planar polyomino with `n` cells, in a deterministic order.
pub fn enumerate_fixed_polyominoes(n: usize) -> Result<Vec<Polyomino>, LatticeError> {
    let mut out = Vec::new();
    for_each_fixed_polyomino(n, |p| out.push(p))?;
    Ok(out)
}

/// Streaming form of [`enumerate_fixed_polyominoes`].
pub fn for_each_fixed_polyomino(n: usize, mut visit: impl FnMut(Polyomino)) -> Result<(), LatticeError> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(LatticeError::EnumerationCap { n, cap: ENUMERATION_CAP });
    }
    let mut grid = Grid::new(n);
    let origin = grid.index(0, 0);
    grid.reached[origin] = true;
    let mut poly = Vec::with_capacity(n);
    grow(&mut grid, n, vec![origin], &mut poly, &mut visit);
    Ok(())
}

struct Grid {
    width: i32,
    span: i32,
    reached: Vec<bool>,
}

impl Grid {
    fn new(n: usize) -> Self {
        let span = n as i32;
        let width = 2 * span + 1;
        Grid { width, span, reached: vec![false; (width * (span + 1)) as usize] }
    }

    fn index(&self, x: i32, y: i32) -> usize {
        (y * self.width + x + self.span) as usize
    }

    fn coords(&self, i: usize) -> (i32, i32) {
        let i = i as i32;
        (i % self.width - self.span, i / self.width)
    }

    fn allowed(&self, x: i32, y: i32) -> bool {
        (y > 0 || (y == 0 && x >= 0)) && y <= self.span && x.abs() <= self.span
    }
}

fn grow(grid: &mut Grid, n: usize, mut untried: Vec<usize>, poly: &mut Vec<usize>, visit: &mut impl FnMut(Polyomino)) {
    while let Some(cell) = untried.pop() {
        poly.push(cell);
        if poly.len() == n {
            visit(to_polyomino(grid, poly));
        } else {
            let (x, y) = grid.coords(cell);
            let mut fresh = Vec::with_capacity(4);
            for (dx, dy) in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
                let (nx, ny) = (x + dx, y + dy);
                if grid.allowed(nx, ny) {
                    let j = grid.index(nx, ny);
                    if !grid.reached[j] {
                        grid.reached[j] = true;
                        fresh.push(j);
                    }
                }
            }
            let mut next = untried.clone();
            next.extend_from_slice(&fresh);
            grow(grid, n, next, poly, visit);
            for j in fresh {
                grid.reached[j] = false;
            }
        }
        poly.pop();
    }
}

fn to_polyomino(grid: &Grid, poly: &[usize]) -> Polyomino {
    let cells: Vec<(i32, i32)> = poly.iter().map(|&i| grid.coords(i)).collect();
    let min_x = cells.iter().map(|c| c.0).min().unwrap_or(0);
    let mut cells: Vec<Cell> = cells.into_iter().map(|(x, y)| Cell::xy(x - min_x, y)).collect();
    cells.sort_unstable();
    Polyomino::from_sorted_unchecked(2, cells)
}
