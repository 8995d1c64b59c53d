//! Exhaustive exact-cover search: the ground truth for every other solver.
//!
//! The search always branches on the least uncovered cell (scan order) and
//! tries every admissible placement whose own least cell lands there. Every
//! cell before it is already covered, so no other placement can cover it.
//! The enumeration order is therefore canonical.

use std::ops::ControlFlow;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use thiserror::Error;

use crate::lattice::{Cell, Placement, Polyomino, TileSet, Tiling};

/// Caps on one oracle call. Exceeding any cap is an error, never a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_cells: usize,
    /// `None` means unlimited.
    pub max_solutions: Option<u64>,
    /// Backtracking nodes expanded.
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_cells: 64, max_solutions: None, max_steps: 50_000_000 }
    }
}

impl OracleBudget {
    pub fn with_max_cells(mut self, n: usize) -> Self {
        self.max_cells = n;
        self
    }

    pub fn with_max_steps(mut self, n: u64) -> Self {
        self.max_steps = n;
        self
    }

    pub fn with_max_solutions(mut self, n: u64) -> Self {
        self.max_solutions = Some(n);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
    Cells,
    Steps,
    Solutions,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle budget exceeded ({limit:?}) after {nodes} nodes")]
    BudgetExceeded { limit: Limit, nodes: u64 },
    #[error("region has dimension {region}, tile set has dimension {tiles}")]
    Dimension { region: usize, tiles: usize },
}

/// Whether `region` can be tiled by `tiles`.
pub fn is_tileable(region: &Polyomino, tiles: &TileSet, budget: OracleBudget) -> Result<bool, OracleError> {
    Ok(first_tiling(region, tiles, budget)?.is_some())
}

/// The first tiling in canonical search order, if any.
pub fn first_tiling(region: &Polyomino, tiles: &TileSet, budget: OracleBudget) -> Result<Option<Tiling>, OracleError> {
    let mut found = None;
    search(region, tiles, budget, false, |placements| {
        found = Some(placements.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found.map(|p| Tiling::new(region.clone(), tiles.clone(), p)))
}

/// Every distinct tiling exactly once, in canonical search order.
pub fn enumerate_tilings(
    region: &Polyomino,
    tiles: &TileSet,
    budget: OracleBudget,
) -> Result<Vec<Tiling>, OracleError> {
    let mut out = Vec::new();
    for_each_tiling(region, tiles, budget, |p| {
        out.push(Tiling::new(region.clone(), tiles.clone(), p.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_tilings(region: &Polyomino, tiles: &TileSet, budget: OracleBudget) -> Result<u64, OracleError> {
    let mut n = 0u64;
    for_each_tiling(region, tiles, budget, |_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

/// Streams tilings to `visit` until it breaks. Counts against `max_solutions`.
pub fn for_each_tiling(
    region: &Polyomino,
    tiles: &TileSet,
    budget: OracleBudget,
    visit: impl FnMut(&[Placement]) -> ControlFlow<()>,
) -> Result<(), OracleError> {
    search(region, tiles, budget, true, visit)
}

/// Whether `n` is a nonnegative integer combination of `sizes`.
pub fn size_representable(n: usize, sizes: impl IntoIterator<Item = usize>) -> bool {
    let sizes: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for k in 1..=n {
        ok[k] = sizes.iter().any(|&s| s <= k && ok[k - s]);
    }
    ok[n]
}

struct Candidate {
    tile: usize,
    variant: usize,
    cells: SmallVec<[u32; 8]>,
}

struct Search<'a, F> {
    tiles: &'a TileSet,
    cells: &'a [Cell],
    options_at: Vec<Vec<Candidate>>,
    covered: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    nodes: u64,
    solutions: u64,
    budget: OracleBudget,
    count_solutions: bool,
    visit: F,
}

fn search<F>(
    region: &Polyomino,
    tiles: &TileSet,
    budget: OracleBudget,
    count_solutions: bool,
    visit: F,
) -> Result<(), OracleError>
where
    F: FnMut(&[Placement]) -> ControlFlow<()>,
{
    if region.dim() != tiles.dim() {
        return Err(OracleError::Dimension { region: region.dim(), tiles: tiles.dim() });
    }
    if region.len() > budget.max_cells {
        return Err(OracleError::BudgetExceeded { limit: Limit::Cells, nodes: 0 });
    }
    let cells = region.cells();
    let sizes = tiles.tiles().iter().map(|t| t.tile.len());
    let mut s = Search {
        tiles,
        cells,
        options_at: Vec::new(),
        covered: vec![false; cells.len()],
        chosen: Vec::new(),
        nodes: 0,
        solutions: 0,
        budget,
        count_solutions,
        visit,
    };
    if !size_representable(cells.len(), sizes) {
        return Ok(());
    }
    s.options_at = build_options(cells, tiles);
    s.descend(0).map(|_| ())
}

/// Placements indexed by the region cell their least cell lands on.
fn build_options(cells: &[Cell], tiles: &TileSet) -> Vec<Vec<Candidate>> {
    let index: FxHashMap<&Cell, u32> = cells.iter().enumerate().map(|(i, c)| (c, i as u32)).collect();
    let mut shapes: Vec<(usize, usize, Vec<Cell>)> = Vec::new();
    for t in 0..tiles.len() {
        for (v, variant) in tiles.variants(t).iter().enumerate() {
            let anchor = &variant.cells()[0];
            shapes.push((t, v, variant.cells().iter().map(|c| c.sub(anchor)).collect()));
        }
    }
    cells
        .iter()
        .map(|c| {
            shapes
                .iter()
                .filter_map(|(t, v, rel)| {
                    let mut idx = SmallVec::new();
                    for r in rel {
                        idx.push(*index.get(&c.add(r))?);
                    }
                    Some(Candidate { tile: *t, variant: *v, cells: idx })
                })
                .collect()
        })
        .collect()
}

impl<F> Search<'_, F>
where
    F: FnMut(&[Placement]) -> ControlFlow<()>,
{
    fn descend(&mut self, from: usize) -> Result<ControlFlow<()>, OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget.max_steps {
            return Err(OracleError::BudgetExceeded { limit: Limit::Steps, nodes: self.nodes });
        }
        let Some(first) = (from..self.cells.len()).find(|&i| !self.covered[i]) else {
            return self.emit();
        };
        for k in 0..self.options_at[first].len() {
            let fits = self.options_at[first][k].cells.iter().all(|&c| !self.covered[c as usize]);
            if !fits {
                continue;
            }
            self.set(first, k, true);
            self.chosen.push((first, k));
            let flow = self.descend(first + 1);
            self.chosen.pop();
            self.set(first, k, false);
            if flow?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn set(&mut self, at: usize, k: usize, value: bool) {
        for &c in &self.options_at[at][k].cells {
            self.covered[c as usize] = value;
        }
    }

    fn emit(&mut self) -> Result<ControlFlow<()>, OracleError> {
        self.solutions += 1;
        if self.count_solutions {
            if let Some(max) = self.budget.max_solutions {
                if self.solutions > max {
                    return Err(OracleError::BudgetExceeded { limit: Limit::Solutions, nodes: self.nodes });
                }
            }
        }
        let placements: Vec<Placement> = self
            .chosen
            .iter()
            .map(|&(at, k)| {
                let o = &self.options_at[at][k];
                let variant = self.tiles.variants(o.tile)[o.variant].clone();
                let offset = self.cells[at].sub(&variant.cells()[0]);
                Placement::new(o.tile, variant, offset)
            })
            .collect();
        Ok((self.visit)(&placements))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_tiling;

    fn seven_cell() -> Polyomino {
        Polyomino::from_xy([(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1)]).unwrap()
    }

    fn plus_region() -> Polyomino {
        Polyomino::from_xy([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn square_is_tileable_by_domino_l() {
        let b = OracleBudget::default();
        assert!(is_tileable(&Polyomino::rectangle(2, 2), &TileSet::domino_l(), b).unwrap());
        assert_eq!(count_tilings(&Polyomino::rectangle(2, 2), &TileSet::domino_l(), b).unwrap(), 1);
    }

    #[test]
    fn bar_is_not_tileable_by_domino_l() {
        assert!(!is_tileable(&Polyomino::rectangle(3, 1), &TileSet::domino_l(), OracleBudget::default()).unwrap());
    }

    #[test]
    fn plus_is_not_tileable_by_sa() {
        assert!(!is_tileable(&plus_region(), &TileSet::sa(), OracleBudget::default()).unwrap());
    }

    #[test]
    fn seven_cell_region_has_two_tilings() {
        let all = enumerate_tilings(&seven_cell(), &TileSet::domino_l(), OracleBudget::default()).unwrap();
        assert_eq!(all.len(), 2);
        for t in &all {
            assert_eq!(validate_tiling(t), Ok(()));
            assert_eq!(t.count_of(1), 1);
        }
        assert!(!all[0].same_blocks(&all[1]));
    }

    #[test]
    fn two_by_three_has_no_domino_l_tiling() {
        assert_eq!(
            count_tilings(&Polyomino::rectangle(3, 2), &TileSet::domino_l(), OracleBudget::default()).unwrap(),
            0
        );
    }

    #[test]
    fn two_by_two_with_rotated_dominoes() {
        let dominoes =
            TileSet::from_shapes(2, crate::Symmetry::Rotations, [("domino", crate::lattice::shapes::domino())])
                .unwrap();
        assert_eq!(count_tilings(&Polyomino::rectangle(2, 2), &dominoes, OracleBudget::default()).unwrap(), 2);
        assert_eq!(
            count_tilings(&Polyomino::rectangle(2, 1), &TileSet::domino_l(), OracleBudget::default()).unwrap(),
            1
        );
    }

    #[test]
    fn budgets_are_reported() {
        let big = Polyomino::rectangle(10, 10);
        assert!(matches!(
            is_tileable(&big, &TileSet::s2(), OracleBudget::default()),
            Err(OracleError::BudgetExceeded { limit: Limit::Cells, .. })
        ));
        let tight = OracleBudget::default().with_max_cells(200).with_max_steps(3);
        assert!(matches!(
            count_tilings(&Polyomino::rectangle(8, 2), &TileSet::s2(), tight),
            Err(OracleError::BudgetExceeded { limit: Limit::Steps, .. })
        ));
        let one = OracleBudget::default().with_max_solutions(1);
        assert!(matches!(
            count_tilings(&seven_cell(), &TileSet::domino_l(), one),
            Err(OracleError::BudgetExceeded { limit: Limit::Solutions, .. })
        ));
        // Deciding never counts solutions.
        assert!(is_tileable(&seven_cell(), &TileSet::domino_l(), one).unwrap());
    }

    #[test]
    fn parity_guard() {
        assert!(!size_representable(1, [2, 3]));
        assert!(size_representable(7, [2, 3]));
        assert!(!size_representable(3, [2, 4]));
    }
}
