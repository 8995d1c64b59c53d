//! Polyomino tiling algorithms.
//!
//! * [`domino_l`]: an `O(n log n)` greedy tiler for the fixed horizontal
//!   domino and L-tromino, with the two local moves connecting its tilings.
//! * [`fountain`]: tile sets that can tile every region that fits one of their
//!   generating tiles, their closure procedure, and the incremental tiler
//!   built on their retiling table.
//! * [`sa`]: decision and construction for the domino, L, 3-bar and T with rotations.
//! * [`oracle`]: exhaustive exact-cover search used as ground truth.
//! * [`render`], [`bench`], [`random`]: drawing, timing, and seeded Eden regions.

pub mod bench;
pub mod domino_l;
pub mod fountain;
pub mod lattice;
pub mod oracle;
pub mod random;
pub mod render;
pub mod sa;

pub use lattice::{Cell, Polyomino, Symmetry, Tile, TileSet, Tiling};
