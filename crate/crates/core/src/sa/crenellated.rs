//! Detection of regions built only from pluses meeting at spoke tips.
//!
//! These are the regions (besides single cells) that the domino, L, 3-bar
//! and T cannot tile. Each such tile covers exactly one center and at most
//! three of its spoke tips, so a plus union is tileable exactly when its
//! centers, joined through shared tips, contain a cycle. Every step is a
//! constant number of hash probes per cell; `visits` counts them.

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use super::SaError;
use crate::lattice::{Cell, Polyomino};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrenellationReason {
    TooSmall,
    /// Some cell lies in no plus centered at a cell with all four neighbours.
    CoverageGap,
    /// Two centers are within one step of each other, diagonals included.
    OverlapViolation,
    /// Two adjacent cells with neither of them a center, i.e. not inside one plus.
    StrayAdjacency,
    /// The pluses close into a loop: centers joined through shared spoke tips form a cycle.
    NotSimplyConnected,
    Disconnected,
    Ok,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrenellationReport {
    pub in_class: bool,
    /// Plus centers, in scan order. Empty unless `in_class`.
    pub centers: Vec<Cell>,
    pub reason: CrenellationReason,
    /// Hash probes and cell visits performed.
    pub visits: u64,
}

const DIRS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

struct Probe<'a> {
    cells: &'a FxHashSet<(i32, i32)>,
    visits: u64,
}

impl Probe<'_> {
    fn has(&mut self, c: (i32, i32)) -> bool {
        self.visits += 1;
        self.cells.contains(&c)
    }
}

pub fn in_crenellated_class(region: &Polyomino) -> Result<CrenellationReport, SaError> {
    if region.dim() != 2 {
        return Err(SaError::Dimension { found: region.dim() });
    }
    let n = region.len();
    let xy: Vec<(i32, i32)> = region.cells().iter().map(|c| (c.x(), c.y())).collect();
    let set: FxHashSet<(i32, i32)> = xy.iter().copied().collect();
    let mut p = Probe { cells: &set, visits: n as u64 };
    let report = |reason, visits| CrenellationReport { in_class: false, centers: Vec::new(), reason, visits };
    if n < 5 {
        return Ok(report(CrenellationReason::TooSmall, p.visits));
    }

    let centers: Vec<(i32, i32)> =
        xy.iter().copied().filter(|&(x, y)| DIRS.iter().all(|&(dx, dy)| p.has((x + dx, y + dy)))).collect();
    let center_set: FxHashSet<(i32, i32)> = centers.iter().copied().collect();
    let is_center = |p: &mut Probe, c: (i32, i32)| {
        p.visits += 1;
        center_set.contains(&c)
    };

    let covered = xy
        .iter()
        .all(|&(x, y)| is_center(&mut p, (x, y)) || DIRS.iter().any(|&(dx, dy)| is_center(&mut p, (x + dx, y + dy))));
    if centers.is_empty() || !covered {
        return Ok(report(CrenellationReason::CoverageGap, p.visits));
    }

    let crowded = centers
        .iter()
        .any(|&(x, y)| (-1..=1).any(|dx| (-1..=1).any(|dy| (dx, dy) != (0, 0) && is_center(&mut p, (x + dx, y + dy)))));
    if crowded {
        return Ok(report(CrenellationReason::OverlapViolation, p.visits));
    }

    let stray = xy.iter().any(|&(x, y)| {
        !is_center(&mut p, (x, y))
            && [(1, 0), (0, 1)].iter().any(|&(dx, dy)| p.has((x + dx, y + dy)) && !is_center(&mut p, (x + dx, y + dy)))
    });
    if stray {
        return Ok(report(CrenellationReason::StrayAdjacency, p.visits));
    }

    if count_components(&xy, &mut p) != 1 {
        return Ok(report(CrenellationReason::Disconnected, p.visits));
    }
    // Every non-center cell touches one center, or two on opposite sides.
    let shared_tips = xy
        .iter()
        .filter(|&&(x, y)| {
            !is_center(&mut p, (x, y))
                && DIRS.iter().filter(|&&(dx, dy)| is_center(&mut p, (x + dx, y + dy))).count() == 2
        })
        .count();
    if shared_tips + 1 != centers.len() {
        return Ok(report(CrenellationReason::NotSimplyConnected, p.visits));
    }

    Ok(CrenellationReport {
        in_class: true,
        centers: centers.into_iter().map(|(x, y)| Cell::xy(x, y)).collect(),
        reason: CrenellationReason::Ok,
        visits: p.visits,
    })
}

fn count_components(xy: &[(i32, i32)], p: &mut Probe) -> i64 {
    let index: FxHashMap<(i32, i32), usize> = xy.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut seen = vec![false; xy.len()];
    let mut stack = Vec::new();
    let mut components = 0;
    for start in 0..xy.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(i) = stack.pop() {
            let (x, y) = xy[i];
            for (dx, dy) in DIRS {
                p.visits += 1;
                if let Some(&j) = index.get(&(x + dx, y + dy)) {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
    }
    components
}
