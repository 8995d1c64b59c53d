use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::retile::RetileTable;
use super::FountainError;
use crate::lattice::{Cell, Placement, Polyomino, TileSet, Tiling};

/// The tiles of a set that contain no other tile of the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingTiles {
    pub tiles: Vec<usize>,
}

impl GeneratingTiles {
    pub fn of(set: &TileSet) -> Self {
        let tiles = (0..set.len()).filter(|&i| !(0..set.len()).any(|j| j != i && contains_copy(set, i, j))).collect();
        GeneratingTiles { tiles }
    }
}

/// Whether some admissible copy of tile `inner` fits inside tile `outer`.
fn contains_copy(set: &TileSet, outer: usize, inner: usize) -> bool {
    let host = set.tile(outer).as_polyomino();
    set.variants(inner)
        .iter()
        .any(|v| host.cells().iter().any(|c| v.placed_at(&c.sub(&v.cells()[0])).iter().all(|x| host.contains(x))))
}

struct Placed {
    tile: usize,
    variant: usize,
    offset: Cell,
}

/// Seeds one generating tile and grows the tiling one cell at a time in
/// breadth-first order, retiling the neighbouring tile from `table`.
///
/// The region must be connected. Fails with `NoSeed` when no generating tile fits.
pub fn alg2_tile(
    region: &Polyomino,
    generators: &GeneratingTiles,
    table: &RetileTable,
) -> Result<Tiling, FountainError> {
    let set = table.tileset();
    if region.dim() != set.dim() {
        return Err(FountainError::Dimension { expected: set.dim(), found: region.dim() });
    }
    let cells = region.cells();
    let index: FxHashMap<&Cell, u32> = cells.iter().enumerate().map(|(i, c)| (c, i as u32)).collect();
    let lookup = |c: &Cell| index.get(c).map(|&i| i as usize);
    let (seed_tile, seed_variant, seed_offset) = find_seed(region, set, generators).ok_or(FountainError::NoSeed)?;

    const FREE: u32 = u32::MAX;
    let degree = 2 * region.dim();
    let mut adjacency = vec![FREE; cells.len() * degree];
    for (i, c) in cells.iter().enumerate() {
        for (k, n) in c.neighbors().enumerate() {
            if let Some(j) = lookup(&n) {
                adjacency[i * degree + k] = j as u32;
            }
        }
    }
    let neighbours =
        |i: usize| adjacency[i * degree..(i + 1) * degree].iter().filter(|&&j| j != FREE).map(|&j| j as usize);

    let mut owner = vec![FREE; cells.len()];
    let mut queued = vec![false; cells.len()];
    let mut placed: Vec<Option<Placed>> = Vec::with_capacity(cells.len());
    let mut queue = VecDeque::with_capacity(cells.len());

    let claim = |owner: &mut Vec<u32>, placed: &mut Vec<Option<Placed>>, p: Placed| -> Result<(), FountainError> {
        let id = placed.len() as u32;
        for c in set.variants(p.tile)[p.variant].cells() {
            let i = lookup(&c.add(&p.offset)).ok_or(FountainError::InconsistentTable)?;
            owner[i] = id;
        }
        placed.push(Some(p));
        Ok(())
    };

    for c in set.variants(seed_tile)[seed_variant].placed_at(&seed_offset) {
        let i = lookup(&c).expect("seed lies in region");
        queued[i] = true;
        queue.push_back(i);
    }
    claim(&mut owner, &mut placed, Placed { tile: seed_tile, variant: seed_variant, offset: seed_offset })?;

    let mut tiled = queue.len();
    while let Some(i) = queue.pop_front() {
        if owner[i] == FREE {
            let host =
                neighbours(i).map(|j| owner[j]).filter(|&o| o != FREE).min().expect("queued from a tiled neighbour");
            let old = placed[host as usize].take().expect("live placement");
            let rel = cells[i].sub(&old.offset);
            let reps = table.get(old.tile, old.variant, &rel).ok_or(FountainError::InconsistentTable)?;
            for r in reps {
                let p = Placed { tile: r.tile, variant: r.variant, offset: r.offset.add(&old.offset) };
                claim(&mut owner, &mut placed, p)?;
            }
            if owner[i] == FREE {
                return Err(FountainError::InconsistentTable);
            }
            tiled += 1;
        }
        for j in neighbours(i) {
            if !queued[j] {
                queued[j] = true;
                queue.push_back(j);
            }
        }
    }
    if tiled != cells.len() {
        return Err(FountainError::Disconnected);
    }
    let placements = placed
        .into_iter()
        .flatten()
        .map(|p| Placement::new(p.tile, set.variants(p.tile)[p.variant].clone(), p.offset))
        .collect();
    Ok(Tiling::new(region.clone(), set.clone(), placements))
}

/// First `(tile, variant, offset)` in scan order whose copy lies inside `region`.
fn find_seed(region: &Polyomino, set: &TileSet, generators: &GeneratingTiles) -> Option<(usize, usize, Cell)> {
    region.cells().iter().find_map(|c| {
        generators.tiles.iter().find_map(|&t| {
            set.variants(t).iter().enumerate().find_map(|(v, shape)| {
                let offset = c.sub(&shape.cells()[0]);
                shape.placed_at(&offset).iter().all(|x| region.contains(x)).then_some((t, v, offset))
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fountain::build_retile_table;
    use crate::lattice::{enumerate_fixed_polyominoes, validate_tiling};
    use crate::oracle::OracleBudget;

    fn s2_table() -> RetileTable {
        build_retile_table(&TileSet::s2(), OracleBudget::default()).unwrap()
    }

    #[test]
    fn generators_of_s2() {
        assert_eq!(GeneratingTiles::of(&TileSet::s2()).tiles, vec![0]);
        assert_eq!(GeneratingTiles::of(&TileSet::sa()).tiles, vec![0]);
    }

    #[test]
    fn single_domino() {
        let t = alg2_tile(&Polyomino::rectangle(2, 1), &GeneratingTiles::of(&TileSet::s2()), &s2_table()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.placements[0].tile, 0);
    }

    #[test]
    fn plus_region_becomes_one_plus() {
        let plus = Polyomino::from_xy([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]).unwrap();
        let t = alg2_tile(&plus, &GeneratingTiles::of(&TileSet::s2()), &s2_table()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.tileset.name(t.placements[0].tile), "plus");
        assert_eq!(validate_tiling(&t), Ok(()));
    }

    #[test]
    fn monomino_has_no_seed() {
        let one = Polyomino::from_xy([(0, 0)]).unwrap();
        assert_eq!(
            alg2_tile(&one, &GeneratingTiles::of(&TileSet::s2()), &s2_table()).unwrap_err(),
            FountainError::NoSeed
        );
    }

    #[test]
    fn disconnected_regions_are_rejected() {
        let two = Polyomino::from_xy([(0, 0), (1, 0), (5, 5), (6, 5)]).unwrap();
        assert_eq!(
            alg2_tile(&two, &GeneratingTiles::of(&TileSet::s2()), &s2_table()).unwrap_err(),
            FountainError::Disconnected
        );
    }

    #[test]
    fn all_small_regions() {
        let table = s2_table();
        let gens = GeneratingTiles::of(&TileSet::s2());
        for n in 2..=7 {
            for p in enumerate_fixed_polyominoes(n).unwrap() {
                let t = alg2_tile(&p, &gens, &table).unwrap();
                assert_eq!(validate_tiling(&t), Ok(()), "{p:?}");
            }
        }
    }
}
