use super::run_index::RunIndex;
use super::DominoLError;
use crate::lattice::{Cell, Placement, Polyomino, Tile, TileSet, Tiling};

/// Index of the domino in [`TileSet::domino_l`].
pub const DOMINO: usize = 0;
/// Index of the L-tromino in [`TileSet::domino_l`].
pub const L_TILE: usize = 1;

/// Tiles `region` with fixed horizontal dominoes and L-trominoes, or proves it impossible.
///
/// Repeats until nothing is left: tile an even top row with dominoes; else
/// put a domino on a top left corner; else put an L under the left end of
/// the leftmost top row. Disconnected input is fine, the components never
/// interact.
pub fn alg_tile(region: &Polyomino) -> Result<Tiling, DominoLError> {
    let tileset = TileSet::domino_l();
    let domino = tileset.tile(DOMINO).clone();
    let l_tile = tileset.tile(L_TILE).clone();
    let mut idx = RunIndex::new(region)?;
    let mut placements = Vec::with_capacity(region.len() / 2 + 1);
    let place = |placements: &mut Vec<Placement>, tile: usize, variant: &Tile, x: i32, y: i32| {
        placements.push(Placement::new(tile, variant.clone(), Cell::xy(x, y)));
    };

    while idx.remaining() > 0 {
        if let Some((lo, _)) = idx.next_even_top() {
            let cells = idx.remove_run(lo);
            for pair in cells.chunks_exact(2) {
                place(&mut placements, DOMINO, &domino, pair[0].0, pair[0].1);
            }
            continue;
        }
        if let Some(corner) = idx.next_corner() {
            let (x, y) = corner.domino_at();
            idx.remove_cells(&[(x, y), (x + 1, y)]);
            place(&mut placements, DOMINO, &domino, x, y);
            continue;
        }
        let row = idx.leftmost_top().expect("a nonempty remainder has a top row");
        let (x0, h) = (row.x_lo, row.y);
        let l_cells = [(x0 - 1, h - 1), (x0, h - 1), (x0, h)];
        if !l_cells.iter().all(|&(x, y)| idx.is_untiled(x, y)) {
            return Err(DominoLError::Untileable { row });
        }
        idx.remove_cells(&l_cells);
        place(&mut placements, L_TILE, &l_tile, x0 - 1, h - 1);
    }
    Ok(Tiling::new(region.clone(), tileset, placements))
}
