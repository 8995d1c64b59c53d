use rustc_hash::FxHashMap;

use super::check::{adjacent_cells, union_with};
use super::FountainError;
use crate::lattice::{validate_tiling, Cell, Placement, Tile, TileSet, Tiling};
use crate::oracle::{first_tiling, OracleBudget};

/// One tile of a replacement, relative to the frame of the tile being replaced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replacement {
    pub tile: usize,
    pub variant: usize,
    pub offset: Cell,
}

/// For each oriented tile and adjacent cell, a tiling of their union.
///
/// Keys are `(tile index, variant index, cell)` with the cell in the
/// variant's normalized frame, so lookups during growth need no rotation.
#[derive(Clone, Debug)]
pub struct RetileTable {
    tileset: TileSet,
    entries: FxHashMap<(usize, usize, Cell), Vec<Replacement>>,
}

impl RetileTable {
    pub fn tileset(&self) -> &TileSet {
        &self.tileset
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, tile: usize, variant: usize, cell: &Cell) -> Option<&[Replacement]> {
        self.entries.get(&(tile, variant, cell.clone())).map(Vec::as_slice)
    }

    /// Lookup by shape: `shape` must be an admissible orientation of some tile.
    pub fn lookup(&self, shape: &Tile, cell: &Cell) -> Option<&[Replacement]> {
        let tile = self.tileset.identify(shape)?;
        let variant = self.tileset.variants(tile).binary_search(shape).ok()?;
        self.get(tile, variant, cell)
    }

    /// The replacement as a tiling of `shape ∪ {cell}`.
    pub fn replacement_tiling(&self, shape: &Tile, cell: &Cell) -> Option<Tiling> {
        let reps = self.lookup(shape, cell)?;
        Some(Tiling::new(
            union_with(shape, cell),
            self.tileset.clone(),
            self.placements(reps, &Cell::origin(shape.dim())),
        ))
    }

    pub(crate) fn placements(&self, reps: &[Replacement], at: &Cell) -> Vec<Placement> {
        reps.iter()
            .map(|r| Placement::new(r.tile, self.tileset.variants(r.tile)[r.variant].clone(), r.offset.add(at)))
            .collect()
    }
}

/// Solves every `(oriented tile, adjacent cell)` union with the oracle and
/// keeps its first tiling. Fails on the first union that has none.
pub fn build_retile_table(set: &TileSet, budget: OracleBudget) -> Result<RetileTable, FountainError> {
    let mut entries = FxHashMap::default();
    for tile in 0..set.len() {
        for (variant, shape) in set.variants(tile).iter().enumerate() {
            for u in adjacent_cells(shape) {
                let union = union_with(shape, &u);
                let Some(t) = first_tiling(&union, set, budget)? else {
                    return Err(FountainError::MissingEntry { tile: set.name(tile).to_string(), cell: u });
                };
                validate_tiling(&t).map_err(|_| FountainError::InconsistentTable)?;
                let reps = t
                    .placements
                    .iter()
                    .map(|p| Replacement {
                        tile: p.tile,
                        variant: set.variants(p.tile).binary_search(&p.variant).expect("admissible"),
                        offset: p.offset.clone(),
                    })
                    .collect();
                entries.insert((tile, variant, u), reps);
            }
        }
    }
    Ok(RetileTable { tileset: set.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::shapes;

    fn table() -> RetileTable {
        build_retile_table(&TileSet::s2(), OracleBudget::default()).unwrap()
    }

    #[test]
    fn domino_plus_inline_cell_is_a_bar() {
        let t = table();
        let reps = t.lookup(&shapes::domino(), &Cell::xy(-1, 0)).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(t.tileset().name(reps[0].tile), "bar3");
    }

    #[test]
    fn bar_plus_cell_above_middle_is_a_t() {
        let t = table();
        let reps = t.lookup(&shapes::bar3(), &Cell::xy(1, 1)).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(t.tileset().name(reps[0].tile), "T");
    }

    #[test]
    fn every_entry_is_a_valid_tiling_of_at_most_two_tiles() {
        let t = table();
        let s = TileSet::s2();
        let mut n = 0;
        for i in 0..s.len() {
            for v in s.variants(i) {
                for u in adjacent_cells(v) {
                    let tiling = t.replacement_tiling(v, &u).unwrap();
                    assert_eq!(validate_tiling(&tiling), Ok(()));
                    assert!(tiling.len() <= 2);
                    n += 1;
                }
            }
        }
        assert_eq!(n, t.len());
        let plus = t.lookup(&shapes::plus(), &Cell::xy(3, 1)).unwrap();
        assert_eq!(plus.len(), 2);
    }

    #[test]
    fn missing_entries_are_reported() {
        assert!(matches!(
            build_retile_table(&TileSet::sa(), OracleBudget::default()),
            Err(FountainError::MissingEntry { .. })
        ));
    }
}
