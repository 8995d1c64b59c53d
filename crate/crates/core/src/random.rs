//! Seeded random regions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use rustc_hash::FxHashSet;

use crate::lattice::{Cell, Polyomino};

/// Name of the generator recorded alongside seeds.
pub const RNG_NAME: &str = "chacha8";

/// Grows a connected planar region of exactly `n` cells from the origin,
/// each step adding a uniformly random cell of the current outer boundary.
pub fn eden(n: usize, seed: u64) -> Polyomino {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: FxHashSet<(i32, i32)> = FxHashSet::default();
    let mut frontier: Vec<(i32, i32)> = Vec::new();
    let mut slot: FxHashMap<(i32, i32), usize> = FxHashMap::default();
    cells.reserve(n);
    let mut next = (0, 0);
    for _ in 0..n {
        cells.insert(next);
        if let Some(i) = slot.remove(&next) {
            frontier.swap_remove(i);
            if let Some(&moved) = frontier.get(i) {
                slot.insert(moved, i);
            }
        }
        let (x, y) = next;
        for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if !cells.contains(&nb) && !slot.contains_key(&nb) {
                slot.insert(nb, frontier.len());
                frontier.push(nb);
            }
        }
        next = frontier[rng.gen_range(0..frontier.len())];
    }
    let mut v: Vec<Cell> = cells.into_iter().map(|(x, y)| Cell::xy(x, y)).collect();
    v.sort_unstable();
    Polyomino::from_sorted_unchecked(2, v)
}
