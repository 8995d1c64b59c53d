use std::collections::BTreeSet;

use super::FountainError;
use crate::lattice::{canonical_tile_form, Cell, Polyomino, Tile, TileSet};
use crate::oracle::{is_tileable, OracleBudget};

/// A tile and an adjacent cell whose union the set cannot tile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tile: String,
    /// The cell, in the frame of the tile's stored shape.
    pub cell: Cell,
    pub union: Polyomino,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalWitness {
    pub removed: String,
    /// Why the set without `removed` is not a fountain set; `None` if it still is.
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FountainReport {
    pub is_fountain: bool,
    pub witnesses: Vec<Witness>,
    /// Present when minimality was requested.
    pub is_minimal: Option<bool>,
    pub removal_witnesses: Vec<RemovalWitness>,
}

/// Cells outside `t` sharing a face with it, in scan order.
pub fn adjacent_cells(t: &Tile) -> Vec<Cell> {
    t.as_polyomino().boundary()
}

/// `t` plus one outside cell.
pub(crate) fn union_with(t: &Tile, u: &Cell) -> Polyomino {
    t.as_polyomino().with_cell(u.clone()).expect("cell lies outside the tile")
}

/// Each `(tile, adjacent cell)` pair of `set` whose union is new up to the set's symmetry, in tile order.
pub(crate) fn obligations(set: &TileSet) -> Vec<(usize, Cell, Polyomino)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..set.len() {
        let t = set.tile(i);
        for u in adjacent_cells(t) {
            let union = union_with(t, &u);
            let key = canonical_tile_form(&Tile::from_polyomino(&union).expect("connected"), set.symmetry());
            if seen.insert(key) {
                out.push((i, u, union));
            }
        }
    }
    out
}

fn first_witness(set: &TileSet, budget: OracleBudget, all: bool) -> Result<Vec<Witness>, FountainError> {
    let mut out = Vec::new();
    for (i, u, union) in obligations(set) {
        if !is_tileable(&union, set, budget)? {
            out.push(Witness { tile: set.name(i).to_string(), cell: u, union });
            if !all {
                break;
            }
        }
    }
    Ok(out)
}

/// Checks that every tile plus any adjacent cell can be tiled by the set.
/// With `minimality`, also checks that no tile can be dropped.
pub fn is_fountain_set(set: &TileSet, minimality: bool, budget: OracleBudget) -> Result<FountainReport, FountainError> {
    let witnesses = first_witness(set, budget, true)?;
    let is_fountain = witnesses.is_empty();
    let mut removal_witnesses = Vec::new();
    let mut is_minimal = None;
    if minimality {
        for i in 0..set.len() {
            let smaller = set.without(i);
            let witness = first_witness(&smaller, budget, false)?.into_iter().next();
            removal_witnesses.push(RemovalWitness { removed: set.name(i).to_string(), witness });
        }
        is_minimal = Some(is_fountain && removal_witnesses.iter().all(|r| r.witness.is_some()));
    }
    Ok(FountainReport { is_fountain, witnesses, is_minimal, removal_witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{shapes, Symmetry};

    #[test]
    fn s2_is_a_minimal_fountain_set() {
        let r = is_fountain_set(&TileSet::s2(), true, OracleBudget::default()).unwrap();
        assert!(r.is_fountain);
        assert_eq!(r.is_minimal, Some(true));
        assert_eq!(r.removal_witnesses.len(), 5);
    }

    #[test]
    fn lone_domino_fails_on_the_bar() {
        let d = TileSet::from_shapes(2, Symmetry::Rotations, [("domino", shapes::domino())]).unwrap();
        let r = is_fountain_set(&d, false, OracleBudget::default()).unwrap();
        assert!(!r.is_fountain);
        let bar = canonical_tile_form(&shapes::bar3(), Symmetry::Rotations);
        assert!(r.witnesses.iter().any(|w| Tile::from_polyomino(&w.union).unwrap() == bar));
    }

    #[test]
    fn dropping_the_plus_exposes_the_plus() {
        let sa = TileSet::sa();
        let r = is_fountain_set(&sa, false, OracleBudget::default()).unwrap();
        assert!(!r.is_fountain);
        let plus = canonical_tile_form(&shapes::plus(), Symmetry::Rotations);
        assert!(r.witnesses.iter().all(|w| w.tile == "T"));
        assert!(r.witnesses.iter().any(|w| Tile::from_polyomino(&w.union).unwrap() == plus));
    }

    #[test]
    fn adjacent_cells_of_domino() {
        assert_eq!(adjacent_cells(&shapes::domino()).len(), 6);
        assert_eq!(adjacent_cells(&shapes::plus()).len(), 8);
    }
}
