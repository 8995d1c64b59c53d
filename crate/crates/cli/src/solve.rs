//! Tile-set selection and dispatch to the matching solver.

use std::path::PathBuf;

use tessella::domino_l::{alg_tile, DominoLError};
use tessella::fountain::{alg2_tile, s2_retile_table, FountainError, GeneratingTiles};
use tessella::lattice::io::parse_tileset_json;
use tessella::lattice::Placement;
use tessella::oracle::{first_tiling, is_tileable, OracleBudget, OracleError};
use tessella::sa::{sa_decide, sa_tile, SaError};
use tessella::{Polyomino, TileSet, Tiling};

use crate::CliError;

#[derive(Clone, Debug)]
pub enum Solver {
    DominoL,
    S2,
    Sa,
    /// A tile set read from JSON; always solved by exhaustive search.
    File(TileSet),
}

impl Solver {
    pub fn from_arg(arg: &str) -> Result<Self, CliError> {
        match arg {
            "domino-l" => Ok(Solver::DominoL),
            "s2" => Ok(Solver::S2),
            "sa" => Ok(Solver::Sa),
            path => {
                let text = std::fs::read_to_string(PathBuf::from(path))
                    .map_err(|e| CliError::Usage(format!("--tileset {path}: {e}")))?;
                Ok(Solver::File(parse_tileset_json(&text)?))
            }
        }
    }

    pub fn tileset(&self) -> TileSet {
        match self {
            Solver::DominoL => TileSet::domino_l(),
            Solver::S2 => TileSet::s2(),
            Solver::Sa => TileSet::sa(),
            Solver::File(s) => s.clone(),
        }
    }

    /// A tiling, or `None` when the region is untileable.
    pub fn tile(&self, region: &Polyomino, exact: bool) -> Result<Option<Tiling>, CliError> {
        let tiles = self.tileset();
        if exact || matches!(self, Solver::File(_)) {
            return first_tiling(region, &tiles, OracleBudget::default()).map_err(oracle_err);
        }
        let mut placements: Vec<Placement> = Vec::new();
        for part in region.components() {
            let found = match self {
                Solver::DominoL => match alg_tile(&part) {
                    Ok(t) => Some(t),
                    Err(DominoLError::Untileable { .. }) => None,
                    Err(e) => return Err(CliError::Usage(e.to_string())),
                },
                Solver::S2 => match alg2_tile(&part, &GeneratingTiles::of(&tiles), s2_retile_table()) {
                    Ok(t) => Some(t),
                    Err(FountainError::NoSeed) => None,
                    Err(e) => return Err(fountain_err(e)),
                },
                Solver::Sa => match sa_tile(&part) {
                    Ok(t) => Some(t),
                    Err(SaError::Untileable { .. }) => None,
                    Err(e) => return Err(sa_err(e)),
                },
                Solver::File(_) => unreachable!("handled by the oracle above"),
            };
            match found {
                Some(t) => placements.extend(t.placements),
                None => return Ok(None),
            }
        }
        Ok(Some(Tiling::new(region.clone(), tiles, placements)))
    }

    pub fn decide(&self, region: &Polyomino, exact: bool) -> Result<bool, CliError> {
        match self {
            Solver::Sa if !exact => {
                for part in region.components() {
                    if !sa_decide(&part).map_err(sa_err)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Solver::File(_) => is_tileable(region, &self.tileset(), OracleBudget::default()).map_err(oracle_err),
            _ if exact => is_tileable(region, &self.tileset(), OracleBudget::default()).map_err(oracle_err),
            _ => Ok(self.tile(region, false)?.is_some()),
        }
    }
}

pub fn oracle_err(e: OracleError) -> CliError {
    match e {
        OracleError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        OracleError::Dimension { .. } => CliError::Usage(e.to_string()),
    }
}

pub fn fountain_err(e: FountainError) -> CliError {
    match e {
        FountainError::Oracle(o) => oracle_err(o),
        FountainError::CapExceeded { .. } => CliError::Budget(e.to_string()),
        FountainError::Lattice(l) => CliError::Lattice(l),
        FountainError::Dimension { .. } | FountainError::OutOfRange { .. } => CliError::Usage(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn sa_err(e: SaError) -> CliError {
    match e {
        SaError::Dimension { .. } => CliError::Usage(e.to_string()),
        SaError::Oracle(o) => oracle_err(o),
        SaError::Fountain(f) => fountain_err(f),
        other => CliError::Internal(other.to_string()),
    }
}
