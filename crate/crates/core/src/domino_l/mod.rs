//! Tiling by the fixed horizontal domino and the fixed L-tromino `{(0,0),(1,0),(1,1)}`.
//!
//! [`alg_tile`] decides and constructs in `O(n log n)`. [`apply_move`] and
//! [`connect_tilings`] implement the two local moves and search the graph of
//! tilings they induce.

mod alg;
mod moves;
mod run_index;

use thiserror::Error;

pub use alg::{alg_tile, DOMINO, L_TILE};
pub use moves::{
    apply_move, connect_tilings, find_move_applications, move_template, reachable_tilings, Direction, MoveApplication,
    MoveError, MoveKind,
};
pub use run_index::{Corner, CornerKind, RowDecomposition, Run, RunIndex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DominoLError {
    /// Step C could not place an L under the leftmost top row.
    #[error("region is not tileable: no L fits under the row y={} x={}..{}", row.y, row.x_lo, row.x_hi)]
    Untileable { row: Run },
    #[error("expected a planar region, found dimension {found}")]
    Dimension { found: usize },
}
