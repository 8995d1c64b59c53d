//! Fountain sets: tile sets where any tile plus any adjacent cell is tileable
//! by the set. Such a set tiles every connected region that contains one of
//! its generating tiles, by growing a tiling one cell at a time.

mod alg2;
mod check;
mod fsgen;
mod plus;
mod retile;

use std::sync::OnceLock;

use thiserror::Error;

pub use alg2::{alg2_tile, GeneratingTiles};
pub use check::{adjacent_cells, is_fountain_set, FountainReport, RemovalWitness, Witness};
pub use fsgen::{fsgen, FsgenCaps};
pub use plus::{count_subtiles_by_spokes, plus_subtiles, plus_tile, sd_size, MAX_PLUS_DIM};
pub use retile::{build_retile_table, Replacement, RetileTable};

use crate::lattice::{Cell, LatticeError, TileSet};
use crate::oracle::{OracleBudget, OracleError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FountainError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("generation stopped at {} tiles: caps {caps:?} exceeded", partial.len())]
    CapExceeded { partial: TileSet, caps: FsgenCaps },
    #[error("{tile} plus the cell {cell} cannot be tiled: not a fountain set")]
    MissingEntry { tile: String, cell: Cell },
    #[error("no generating tile fits in the region")]
    NoSeed,
    #[error("region is not connected")]
    Disconnected,
    #[error("retiling table does not match the tiling being grown")]
    InconsistentTable,
    #[error("expected dimension {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("{what} {value} out of range (max {max})")]
    OutOfRange { what: &'static str, value: usize, max: usize },
}

/// The retiling table of [`TileSet::s2`], built on first use.
pub fn s2_retile_table() -> &'static RetileTable {
    static TABLE: OnceLock<RetileTable> = OnceLock::new();
    TABLE.get_or_init(|| build_retile_table(&TileSet::s2(), OracleBudget::default()).expect("S_2 is a fountain set"))
}
