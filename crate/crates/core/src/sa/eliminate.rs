use std::ops::ControlFlow;

use rustc_hash::{FxHashMap, FxHashSet};

use super::{in_crenellated_class, CrenellationReason, SaError};
use crate::fountain::s2_retile_table;
use crate::fountain::{alg2_tile, GeneratingTiles};
use crate::lattice::{Cell, Placement, Polyomino, TileSet, Tiling};
use crate::oracle::{first_tiling, for_each_tiling, OracleBudget};

const T_TILE: usize = 3;
const PLUS: usize = 4;

/// Mutable tiling with a cell-to-placement map.
struct Board {
    placements: Vec<Option<Placement>>,
    owner: FxHashMap<Cell, usize>,
}

impl Board {
    fn new(t: Tiling) -> Self {
        let mut owner = FxHashMap::default();
        for (i, p) in t.placements.iter().enumerate() {
            for c in p.cells() {
                owner.insert(c, i);
            }
        }
        Board { placements: t.placements.into_iter().map(Some).collect(), owner }
    }

    fn cells(&self, id: usize) -> Vec<Cell> {
        self.placements[id].as_ref().expect("live placement").cells()
    }

    /// Placements touching `id`, non-T first, then by id.
    fn neighbours(&self, id: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .cells(id)
            .iter()
            .flat_map(|c| c.neighbors().collect::<Vec<_>>())
            .filter_map(|n| self.owner.get(&n).copied())
            .filter(|&j| j != id)
            .collect();
        out.sort_unstable_by_key(|&j| (self.placements[j].as_ref().map(|p| p.tile) == Some(T_TILE), j));
        out.dedup();
        out
    }

    /// Replaces the placements `old` by `new`; returns the new ids.
    fn replace(&mut self, old: &[usize], new: Vec<Placement>) -> Vec<usize> {
        for &i in old {
            self.placements[i] = None;
        }
        new.into_iter()
            .map(|p| {
                let id = self.placements.len();
                for c in p.cells() {
                    self.owner.insert(c, id);
                }
                self.placements.push(Some(p));
                id
            })
            .collect()
    }
}

fn union_region(board: &Board, ids: &[usize]) -> Polyomino {
    Polyomino::new(2, ids.iter().flat_map(|&i| board.cells(i))).expect("placements are disjoint")
}

/// Tiles with the domino, L, 3-bar and T, or reports why that is impossible.
///
/// Grows an S_2 tiling, then removes each plus: first by retiling it together
/// with one neighbouring tile (non-T neighbours tried first); if no neighbour
/// works, the plus is pushed through an adjacent T to a new position and the
/// attempt repeats there.
pub fn sa_tile(region: &Polyomino) -> Result<Tiling, SaError> {
    let report = in_crenellated_class(region)?;
    if region.len() < 2 {
        return Err(SaError::Untileable { reason: CrenellationReason::TooSmall });
    }
    if report.in_class {
        return Err(SaError::Untileable { reason: report.reason });
    }
    let table = s2_retile_table();
    let grown = alg2_tile(region, &GeneratingTiles::of(table.tileset()), table)?;
    let sa = TileSet::sa();
    let s2 = TileSet::s2();
    let budget = OracleBudget::default();
    let mut board = Board::new(grown);
    let mut pluses: Vec<usize> =
        (0..board.placements.len()).filter(|&i| board.placements[i].as_ref().is_some_and(|p| p.tile == PLUS)).collect();
    let mut steps = 0usize;

    while let Some(start) = pluses.pop() {
        let mut plus = start;
        let mut visited: FxHashSet<Cell> = FxHashSet::default();
        'chain: loop {
            steps += 1;
            if steps > region.len() {
                return Err(SaError::Internal(format!("plus elimination exceeded {} steps", region.len())));
            }
            visited.insert(board.placements[plus].as_ref().expect("live").offset.clone());
            let around = board.neighbours(plus);
            for &t in &around {
                let union = union_region(&board, &[plus, t]);
                if let Some(sol) = first_tiling(&union, &sa, budget)? {
                    board.replace(&[plus, t], sol.placements);
                    break 'chain;
                }
            }
            for &t in around.iter().filter(|&&t| board.placements[t].as_ref().is_some_and(|p| p.tile == T_TILE)) {
                let union = union_region(&board, &[plus, t]);
                let mut moved = None;
                for_each_tiling(&union, &s2, budget, |ps| {
                    let mut plus_at = ps.iter().filter(|p| p.tile == PLUS).map(|p| &p.offset);
                    match (plus_at.next(), plus_at.next()) {
                        (Some(o), None) if !visited.contains(o) => {
                            moved = Some(ps.to_vec());
                            ControlFlow::Break(())
                        }
                        _ => ControlFlow::Continue(()),
                    }
                })?;
                if let Some(ps) = moved {
                    let ids = board.replace(&[plus, t], ps);
                    plus = ids
                        .into_iter()
                        .find(|&i| board.placements[i].as_ref().is_some_and(|p| p.tile == PLUS))
                        .expect("one plus");
                    continue 'chain;
                }
            }
            return Err(SaError::Internal(format!(
                "plus at {} has no neighbour to merge with",
                board.placements[plus].as_ref().expect("live").offset
            )));
        }
    }

    let placements = board.placements.into_iter().flatten().collect();
    Ok(Tiling::new(region.clone(), sa, placements))
}
