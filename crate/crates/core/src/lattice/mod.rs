//! Cells, regions, tiles, symmetry, tilings, and their text encodings.

mod cell;
mod enumerate;
pub mod io;
mod polyomino;
mod symmetry;
pub mod tile;
mod tiling;

use thiserror::Error;

pub use cell::{Cell, Coords};
pub use enumerate::{enumerate_fixed_polyominoes, for_each_fixed_polyomino, ENUMERATION_CAP};
pub use polyomino::Polyomino;
pub use symmetry::{SignedPermutation, Symmetry};
pub use tile::{canonical_tile_form, shapes, tile_orbit, NamedTile, Tile, TileSet};
pub use tiling::{validate_tiling, Placement, Tiling, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cell {0} appears twice")]
    DuplicateCell(Cell),
    #[error("region is empty")]
    EmptyRegion,
    #[error("shape is not connected")]
    Disconnected,
    #[error("tile `{0}` is not simply connected")]
    NotSimplyConnected(String),
    #[error("duplicate tile: {0}")]
    DuplicateTile(String),
    #[error("unknown tile `{0}`")]
    UnknownTile(String),
    #[error("block {0} matches no tile in the set")]
    UnknownShape(String),
    #[error("placement {0} has too many neighbours to colour")]
    TooManyNeighbors(usize),
    #[error("enumeration size {n} outside 1..={cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
