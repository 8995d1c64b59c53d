//! Closure of a generator set under "tile plus adjacent cell".

use std::collections::BTreeSet;

use super::check::{adjacent_cells, union_with};
use super::FountainError;
use crate::lattice::{canonical_tile_form, NamedTile, Symmetry, Tile, TileSet};
use crate::oracle::{is_tileable, OracleBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FsgenCaps {
    pub max_tile_size: usize,
    pub max_set_size: usize,
}

impl Default for FsgenCaps {
    fn default() -> Self {
        FsgenCaps { max_tile_size: 16, max_set_size: 64 }
    }
}

fn build(dim: usize, symmetry: Symmetry, tiles: &BTreeSet<(usize, Tile)>) -> TileSet {
    let named =
        tiles.iter().enumerate().map(|(i, (_, t))| NamedTile { name: format!("t{i}"), tile: t.clone() }).collect();
    TileSet::new(dim, symmetry, named).expect("canonical forms are distinct")
}

/// Grows `generators` until every tile plus any adjacent cell is tileable.
///
/// Obligations run smallest tile first, then by canonical form, then by cell.
/// Each failing union joins the set as a new tile. Output tiles are named
/// `t0, t1, ...` in (size, canonical form) order.
pub fn fsgen(
    generators: &[Tile],
    dim: usize,
    symmetry: Symmetry,
    caps: FsgenCaps,
    budget: OracleBudget,
) -> Result<TileSet, FountainError> {
    let mut tiles: BTreeSet<(usize, Tile)> = BTreeSet::new();
    for g in generators {
        if g.dim() != dim {
            return Err(FountainError::Dimension { expected: dim, found: g.dim() });
        }
        tiles.insert((g.len(), canonical_tile_form(g, symmetry)));
    }
    let mut pending = tiles.clone();
    let mut current = build(dim, symmetry, &tiles);
    while let Some((_, s)) = pending.pop_first() {
        for u in adjacent_cells(&s) {
            let union = union_with(&s, &u);
            if is_tileable(&union, &current, budget)? {
                continue;
            }
            let t = canonical_tile_form(&Tile::from_polyomino(&union)?, symmetry);
            if t.len() > caps.max_tile_size || tiles.len() >= caps.max_set_size {
                return Err(FountainError::CapExceeded { partial: current, caps });
            }
            tiles.insert((t.len(), t.clone()));
            pending.insert((t.len(), t));
            current = build(dim, symmetry, &tiles);
        }
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{shapes, Cell};

    #[test]
    fn unit_cell_is_already_closed() {
        let s = fsgen(&[shapes::monomino()], 2, Symmetry::Rotations, FsgenCaps::default(), OracleBudget::default())
            .unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn domino_generates_five_planar_tiles() {
        let s =
            fsgen(&[shapes::domino()], 2, Symmetry::Rotations, FsgenCaps::default(), OracleBudget::default()).unwrap();
        assert_eq!(s.canonical_forms(), TileSet::s2().canonical_forms());
    }

    #[test]
    fn caps_report_the_partial_set() {
        let caps = FsgenCaps { max_tile_size: 3, max_set_size: 64 };
        let err = fsgen(&[shapes::domino()], 2, Symmetry::Rotations, caps, OracleBudget::default()).unwrap_err();
        match err {
            FountainError::CapExceeded { partial, .. } => assert_eq!(partial.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dimension_mismatch() {
        let cube = Tile::new(3, [Cell::new([0, 0, 0])]).unwrap();
        assert!(fsgen(&[cube], 2, Symmetry::Rotations, FsgenCaps::default(), OracleBudget::default()).is_err());
    }
}
