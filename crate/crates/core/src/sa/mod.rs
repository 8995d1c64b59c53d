//! Tiling by the domino, L, 3-bar and T with rotations.
//!
//! A region of at least two cells is tileable exactly when it is not built
//! from pluses meeting at spoke tips ([`in_crenellated_class`]). Tilings are
//! built by growing an S_2 tiling and then dissolving every plus into its
//! neighbours.

mod crenellated;
mod eliminate;

use thiserror::Error;

pub use crenellated::{in_crenellated_class, CrenellationReason, CrenellationReport};
pub use eliminate::sa_tile;

use crate::fountain::FountainError;
use crate::lattice::Polyomino;
use crate::oracle::OracleError;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SaError {
    #[error("region is not tileable ({reason:?})")]
    Untileable { reason: CrenellationReason },
    #[error("expected a planar region, found dimension {found}")]
    Dimension { found: usize },
    /// A plus could not be removed. This contradicts the characterization and is always a bug.
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Fountain(#[from] FountainError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Whether the region can be tiled by the domino, L, 3-bar and T. Linear time.
pub fn sa_decide(region: &Polyomino) -> Result<bool, SaError> {
    let report = in_crenellated_class(region)?;
    Ok(region.len() >= 2 && !report.in_class)
}
