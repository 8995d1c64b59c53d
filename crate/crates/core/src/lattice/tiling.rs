use rustc_hash::FxHashMap;
use thiserror::Error;

use super::{Cell, LatticeError, Polyomino, Tile, TileSet};

/// One placed copy of a tile: orientation `variant` translated by `offset`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Placement {
    pub tile: usize,
    pub variant: Tile,
    pub offset: Cell,
}

impl Placement {
    pub fn new(tile: usize, variant: Tile, offset: Cell) -> Self {
        Placement { tile, variant, offset }
    }

    /// Builds the placement covering exactly `block`, which must be nonempty and connected.
    pub fn covering(tile: usize, block: &[Cell]) -> Result<Self, LatticeError> {
        let dim = block.first().ok_or(LatticeError::EmptyRegion)?.dim();
        let p = Polyomino::new(dim, block.iter().cloned())?;
        let (lo, _) = p.bounds().expect("nonempty");
        Ok(Placement { tile, variant: Tile::from_polyomino(&p)?, offset: lo })
    }

    /// Covered cells in scan order.
    pub fn cells(&self) -> Vec<Cell> {
        self.variant.placed_at(&self.offset)
    }

    pub fn len(&self) -> usize {
        self.variant.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variant.is_empty()
    }
}

/// A region together with placements claimed to partition it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tiling {
    pub region: Polyomino,
    pub tileset: TileSet,
    pub placements: Vec<Placement>,
}

/// The first problem found by [`validate_tiling`].
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum Violation {
    #[error("placement {placement} has dimension {found}, expected {expected}")]
    Dimension { placement: usize, expected: usize, found: usize },
    #[error("placement {placement} refers to tile {tile}, which is not in the tile set")]
    UnknownTile { placement: usize, tile: usize },
    #[error("placement {placement} uses an orientation not admitted by the tile set")]
    InadmissibleVariant { placement: usize },
    #[error("placement {placement} covers {cell}, which is outside the region")]
    OutsideRegion { placement: usize, cell: Cell },
    #[error("cell {cell} is covered by placements {first} and {second}")]
    Overlap { cell: Cell, first: usize, second: usize },
    #[error("cell {cell} is not covered")]
    Uncovered { cell: Cell },
}

/// Checks that the placements are admissible, disjoint, inside the region, and cover it.
pub fn validate_tiling(t: &Tiling) -> Result<(), Violation> {
    let dim = t.region.dim();
    let mut owner: FxHashMap<Cell, usize> = FxHashMap::default();
    owner.reserve(t.region.len());
    for (i, p) in t.placements.iter().enumerate() {
        if p.variant.dim() != dim || p.offset.dim() != dim {
            return Err(Violation::Dimension { placement: i, expected: dim, found: p.variant.dim() });
        }
        if p.tile >= t.tileset.len() {
            return Err(Violation::UnknownTile { placement: i, tile: p.tile });
        }
        if !t.tileset.is_admissible(p.tile, &p.variant) {
            return Err(Violation::InadmissibleVariant { placement: i });
        }
        for c in p.cells() {
            if !t.region.contains(&c) {
                return Err(Violation::OutsideRegion { placement: i, cell: c });
            }
            if let Some(&first) = owner.get(&c) {
                return Err(Violation::Overlap { cell: c, first, second: i });
            }
            owner.insert(c, i);
        }
    }
    if owner.len() != t.region.len() {
        let missing = t.region.cells().iter().find(|c| !owner.contains_key(*c)).expect("count mismatch");
        return Err(Violation::Uncovered { cell: missing.clone() });
    }
    Ok(())
}

impl Tiling {
    pub fn new(region: Polyomino, tileset: TileSet, placements: Vec<Placement>) -> Self {
        Tiling { region, tileset, placements }
    }

    /// Builds placements from `(tile index, covered cells)` blocks.
    pub fn from_blocks(
        region: Polyomino,
        tileset: TileSet,
        blocks: impl IntoIterator<Item = (usize, Vec<Cell>)>,
    ) -> Result<Self, LatticeError> {
        let placements =
            blocks.into_iter().map(|(tile, cells)| Placement::covering(tile, &cells)).collect::<Result<_, _>>()?;
        Ok(Tiling { region, tileset, placements })
    }

    pub fn validate(&self) -> Result<(), Violation> {
        validate_tiling(self)
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    /// Number of placements of tile `i`.
    pub fn count_of(&self, i: usize) -> usize {
        self.placements.iter().filter(|p| p.tile == i).count()
    }

    /// The covered-cell blocks, each sorted, in sorted order. Two tilings with
    /// equal block sets are the same tiling.
    pub fn blocks(&self) -> Vec<Vec<Cell>> {
        let mut b: Vec<Vec<Cell>> = self.placements.iter().map(Placement::cells).collect();
        b.sort_unstable();
        b
    }

    pub fn same_blocks(&self, other: &Tiling) -> bool {
        self.blocks() == other.blocks()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::tile::shapes;

    fn domino_at(x: i32, y: i32) -> Placement {
        Placement::new(0, shapes::domino(), Cell::xy(x, y))
    }

    #[test]
    fn single_domino_is_valid() {
        let t = Tiling::new(Polyomino::rectangle(2, 1), TileSet::domino_l(), vec![domino_at(0, 0)]);
        assert_eq!(validate_tiling(&t), Ok(()));
    }

    #[test]
    fn overlap_is_reported() {
        let t = Tiling::new(Polyomino::rectangle(2, 2), TileSet::domino_l(), vec![domino_at(0, 0), domino_at(0, 0)]);
        assert!(matches!(validate_tiling(&t), Err(Violation::Overlap { first: 0, second: 1, .. })));
    }

    #[test]
    fn vertical_domino_is_inadmissible_when_fixed() {
        let vertical = Tile::from_xy([(0, 0), (0, 1)]).unwrap();
        let t = Tiling::new(
            Polyomino::rectangle(2, 2),
            TileSet::domino_l(),
            vec![Placement::new(0, vertical, Cell::xy(0, 0))],
        );
        assert_eq!(validate_tiling(&t), Err(Violation::InadmissibleVariant { placement: 0 }));
    }

    #[test]
    fn uncovered_and_outside() {
        let region = Polyomino::rectangle(2, 2);
        let t = Tiling::new(region.clone(), TileSet::domino_l(), vec![domino_at(0, 0)]);
        assert_eq!(validate_tiling(&t), Err(Violation::Uncovered { cell: Cell::xy(0, 1) }));
        let t = Tiling::new(region, TileSet::domino_l(), vec![domino_at(1, 0)]);
        assert!(matches!(validate_tiling(&t), Err(Violation::OutsideRegion { cell, .. }) if cell == Cell::xy(2, 0)));
    }

    #[test]
    fn blocks_ignore_placement_order() {
        let region = Polyomino::rectangle(2, 2);
        let a = Tiling::new(region.clone(), TileSet::domino_l(), vec![domino_at(0, 0), domino_at(0, 1)]);
        let b = Tiling::new(region, TileSet::domino_l(), vec![domino_at(0, 1), domino_at(0, 0)]);
        assert!(a.same_blocks(&b));
    }
}
