use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Coordinate storage; dimensions up to four stay inline.
pub type Coords = SmallVec<[i32; 4]>;

/// A unit cell of the integer lattice `Z^d`.
///
/// In two dimensions `x` grows rightward and `y` upward. Cells are ordered in
/// *scan order*: by `y`, then `x`, then the remaining coordinates in axis
/// order. Every "least cell" choice in the crate refers to this order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cell(Coords);

impl Cell {
    pub fn new(coords: impl IntoIterator<Item = i32>) -> Self {
        Cell(coords.into_iter().collect())
    }

    pub fn xy(x: i32, y: i32) -> Self {
        let mut c = Coords::new();
        c.push(x);
        c.push(y);
        Cell(c)
    }

    pub fn origin(dim: usize) -> Self {
        Cell(SmallVec::from_elem(0, dim))
    }

    /// The unit vector along `axis`, scaled by `sign`.
    pub fn unit(dim: usize, axis: usize, sign: i32) -> Self {
        let mut c = Self::origin(dim);
        c.0[axis] = sign;
        c
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn x(&self) -> i32 {
        self.0[0]
    }

    pub fn y(&self) -> i32 {
        self.0[1]
    }

    pub fn get(&self, axis: usize) -> i32 {
        self.0[axis]
    }

    pub fn add(&self, other: &Cell) -> Cell {
        debug_assert_eq!(self.dim(), other.dim());
        Cell(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Cell) -> Cell {
        debug_assert_eq!(self.dim(), other.dim());
        Cell(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    /// The `2d` face-adjacent cells, ordered axis by axis (`-e_i` before `+e_i`).
    pub fn neighbors(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.dim()).flat_map(move |axis| {
            [-1, 1].into_iter().map(move |step| {
                let mut c = self.0.clone();
                c[axis] += step;
                Cell(c)
            })
        })
    }

    pub fn is_adjacent(&self, other: &Cell) -> bool {
        self.dim() == other.dim()
            && self.0.iter().zip(other.0.iter()).map(|(a, b)| (a - b).unsigned_abs()).sum::<u32>() == 1
    }

    /// Coordinatewise minimum.
    pub fn coord_min(&self, other: &Cell) -> Cell {
        Cell(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    /// Coordinatewise maximum.
    pub fn coord_max(&self, other: &Cell) -> Cell {
        Cell(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        a.len().cmp(&b.len()).then_with(|| {
            if a.len() >= 2 {
                a[1].cmp(&b[1]).then(a[0].cmp(&b[0])).then_with(|| a[2..].cmp(&b[2..]))
            } else {
                a[..].cmp(&b[..])
            }
        })
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell::xy(x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_order_is_row_major_from_bottom() {
        let mut cells = vec![Cell::xy(1, 0), Cell::xy(0, 1), Cell::xy(0, 0), Cell::xy(-3, 1)];
        cells.sort();
        assert_eq!(cells, vec![Cell::xy(0, 0), Cell::xy(1, 0), Cell::xy(-3, 1), Cell::xy(0, 1)]);
    }

    #[test]
    fn higher_axes_break_ties_last() {
        assert!(Cell::new([0, 0, 5]) < Cell::new([1, 0, 0]));
        assert!(Cell::new([0, 0, 0]) < Cell::new([0, 0, 1]));
        assert!(Cell::new([9, 0, 9]) < Cell::new([0, 1, 0]));
    }

    #[test]
    fn neighbors_are_face_adjacent() {
        let c = Cell::new([0, 0, 0]);
        let n: Vec<_> = c.neighbors().collect();
        assert_eq!(n.len(), 6);
        assert!(n.iter().all(|m| m.is_adjacent(&c)));
        assert!(!Cell::xy(0, 0).is_adjacent(&Cell::xy(1, 1)));
    }
}
