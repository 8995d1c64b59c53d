//! `tessella`: tile, check, and generate polyomino regions from the command line.
//!
//! Exit codes: 0 success or tileable, 1 untileable or invalid, 2 usage or
//! format error, 3 budget exceeded.

mod solve;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use tessella::bench::{bench_run, BenchSolver};
use tessella::fountain::{fsgen, plus_subtiles, FsgenCaps};
use tessella::lattice::io::{
    emit_region, emit_tileset_json, emit_tiling_ascii, emit_tiling_json, parse_region, parse_tileset_json,
    parse_tiling_ascii, parse_tiling_json, Format,
};
use tessella::lattice::{enumerate_fixed_polyominoes, validate_tiling, LatticeError, NamedTile, Tile};
use tessella::oracle::{for_each_tiling, OracleBudget};
use tessella::random::eden;
use tessella::render::{render, RenderFormat};
use tessella::{Cell, Symmetry, TileSet, Tiling};

use solve::{fountain_err, oracle_err, Solver};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) => 3,
            _ => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "tessella", version, about = "Polyomino tiling engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Io {
    /// Input file, or `-` for standard input.
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Output file, or `-` for standard output.
    #[arg(long, default_value = "-")]
    out: String,
    /// Read and write JSON instead of ASCII grids.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
struct TilesetArg {
    /// `domino-l`, `s2`, `sa`, or a path to a JSON tile set.
    #[arg(long, default_value = "domino-l")]
    tileset: String,
}

#[derive(Subcommand)]
enum Command {
    /// Tile a region and print the tiling.
    Tile {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tileset: TilesetArg,
        /// Use exhaustive search instead of the fast solver.
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether a region is tileable, or validate a tiling with `--validate`.
    Check {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tileset: TilesetArg,
        #[arg(long)]
        exact: bool,
        /// Read a tiling and check that it partitions its region into admissible tiles.
        #[arg(long, conflicts_with = "exact")]
        validate: bool,
    },
    /// Close a generator set into a fountain set. Reads a JSON tile set or one
    /// ASCII tile; defaults to the domino.
    Fsgen {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long)]
        json: bool,
        /// Lattice dimension; planar generators are embedded with zero coordinates.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = FsgenCaps::default().max_tile_size)]
        max_tile_size: usize,
        #[arg(long, default_value_t = FsgenCaps::default().max_set_size)]
        max_set_size: usize,
    },
    /// Subtiles of the d-dimensional plus that contain its center.
    Subtiles {
        #[arg(long)]
        dim: usize,
        /// Print only the number of subtiles.
        #[arg(long)]
        count: bool,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// List fixed polyominoes of `--size` cells, or with `--in`, every tiling of a region.
    Enumerate {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tileset: TilesetArg,
        #[arg(long, required_unless_present = "input")]
        size: Option<usize>,
        #[arg(long)]
        count: bool,
    },
    /// Grow a random connected region by Eden growth.
    Random {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long)]
        json: bool,
    },
    /// Time the linear-time tilers on random regions.
    Bench {
        /// `domino-l` or `s2`.
        #[arg(long, default_value = "domino-l")]
        tileset: String,
        /// Region sizes, comma separated, ascending.
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        size: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long)]
        json: bool,
    },
    /// Draw a tiling as ASCII or SVG.
    Render {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tileset: TilesetArg,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        format: Style,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Ascii,
    Svg,
}

/// Whether the command's answer was positive.
enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("tessella: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(PathBuf::from(path)).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

fn write_output(path: &str, text: &str) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    if path == "-" {
        std::io::stdout().write_all(text.as_bytes())?;
    } else {
        std::fs::write(PathBuf::from(path), text)?;
    }
    Ok(())
}

fn format_of(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Ascii
    }
}

fn emit_tiling(t: &Tiling, json: bool) -> Result<String, CliError> {
    Ok(if json { emit_tiling_json(t) } else { emit_tiling_ascii(t)? })
}

fn read_tiling(text: &str, tiles: &TileSet, json: bool) -> Result<Tiling, CliError> {
    Ok(if json { parse_tiling_json(text, tiles)? } else { parse_tiling_ascii(text, tiles)? })
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Tile { io, tileset, exact } => {
            let solver = Solver::from_arg(&tileset.tileset)?;
            let region = parse_region(&read_input(&io.input)?, format_of(io.json))?;
            match solver.tile(&region, exact)? {
                Some(t) => {
                    write_output(&io.out, &emit_tiling(&t, io.json)?)?;
                    Ok(Outcome::Yes)
                }
                None => {
                    eprintln!("untileable");
                    Ok(Outcome::No)
                }
            }
        }
        Command::Check { io, tileset, exact, validate } => {
            let solver = Solver::from_arg(&tileset.tileset)?;
            let text = read_input(&io.input)?;
            let (ok, word) = if validate {
                let t = read_tiling(&text, &solver.tileset(), io.json)?;
                match validate_tiling(&t) {
                    Ok(()) => (true, "valid".to_string()),
                    Err(v) => (false, format!("invalid: {v}")),
                }
            } else {
                let region = parse_region(&text, format_of(io.json))?;
                let ok = solver.decide(&region, exact)?;
                (ok, if ok { "tileable" } else { "untileable" }.to_string())
            };
            let out = if io.json { serde_json::json!({ "ok": ok, "result": word }).to_string() } else { word };
            write_output(&io.out, &out)?;
            Ok(if ok { Outcome::Yes } else { Outcome::No })
        }
        Command::Fsgen { input, out, json, dim, max_tile_size, max_set_size } => {
            let generators: Vec<Tile> = match input {
                None => vec![tessella::lattice::shapes::domino()],
                Some(path) => {
                    let text = read_input(&path)?;
                    if json {
                        parse_tileset_json(&text)?.tiles().iter().map(|t| t.tile.clone()).collect()
                    } else {
                        vec![Tile::from_polyomino(&parse_region(&text, Format::Ascii)?)?]
                    }
                }
            };
            let from = generators.iter().map(Tile::dim).max().unwrap_or(2);
            let dim = dim.unwrap_or(from);
            let generators = generators.iter().map(|g| embed(g, dim)).collect::<Result<Vec<_>, _>>()?;
            let caps = FsgenCaps { max_tile_size, max_set_size };
            let set =
                fsgen(&generators, dim, Symmetry::Rotations, caps, OracleBudget::default()).map_err(fountain_err)?;
            write_output(&out, &emit_tileset_json(&set))?;
            Ok(Outcome::Yes)
        }
        Command::Subtiles { dim, count, out } => {
            let tiles = plus_subtiles(dim).map_err(fountain_err)?;
            if count {
                write_output(&out, &tiles.len().to_string())?;
            } else {
                let named =
                    tiles.into_iter().enumerate().map(|(i, tile)| NamedTile { name: format!("s{i}"), tile }).collect();
                write_output(&out, &emit_tileset_json(&TileSet::new(dim, Symmetry::Rotations, named)?))?;
            }
            Ok(Outcome::Yes)
        }
        Command::Enumerate { input, out, json, tileset, size, count } => {
            let mut lines = Vec::new();
            let mut n = 0u64;
            if let Some(path) = input {
                let tiles = Solver::from_arg(&tileset.tileset)?.tileset();
                let region = parse_region(&read_input(&path)?, format_of(json))?;
                let mut failed = None;
                for_each_tiling(&region, &tiles, OracleBudget::default(), |p| {
                    n += 1;
                    if !count {
                        match emit_tiling(&Tiling::new(region.clone(), tiles.clone(), p.to_vec()), json) {
                            Ok(s) => lines.push(s),
                            Err(e) => failed = Some(e),
                        }
                    }
                    std::ops::ControlFlow::Continue(())
                })
                .map_err(oracle_err)?;
                if let Some(e) = failed {
                    return Err(e);
                }
            } else {
                let size = size.ok_or_else(|| CliError::Usage("--size is required".into()))?;
                for p in enumerate_fixed_polyominoes(size)? {
                    n += 1;
                    if !count {
                        lines.push(emit_region(&p, format_of(json))?);
                    }
                }
            }
            let text = if count { n.to_string() } else { lines.join(if json { "\n" } else { "\n\n" }) };
            write_output(&out, &text)?;
            Ok(Outcome::Yes)
        }
        Command::Random { size, seed, out, json } => {
            if size == 0 {
                return Err(CliError::Usage("--size must be at least 1".into()));
            }
            write_output(&out, &emit_region(&eden(size, seed), format_of(json))?)?;
            Ok(Outcome::Yes)
        }
        Command::Bench { tileset, size, reps, seed, out, json } => {
            let solver = match tileset.as_str() {
                "domino-l" => BenchSolver::DominoL,
                "s2" => BenchSolver::S2,
                other => return Err(CliError::Usage(format!("bench supports domino-l and s2, not {other}"))),
            };
            if size.windows(2).any(|w| w[0] > w[1]) || size.contains(&0) || reps == 0 {
                return Err(CliError::Usage("sizes must be positive and ascending, reps at least 1".into()));
            }
            let summary = bench_run(&size, solver, reps, seed);
            let text = if json {
                serde_json::to_string_pretty(&summary).map_err(|e| CliError::Internal(e.to_string()))?
            } else {
                let mut s = String::from("n\tmedian_ms\n");
                for (n, t) in &summary.medians {
                    s.push_str(&format!("{n}\t{:.3}\n", *t as f64 / 1e6));
                }
                match summary.exponent {
                    Some(b) => s.push_str(&format!("exponent\t{b:.3}")),
                    None => s.push_str("exponent\t-"),
                }
                s
            };
            write_output(&out, &text)?;
            Ok(Outcome::Yes)
        }
        Command::Render { io, tileset, format } => {
            let tiles = Solver::from_arg(&tileset.tileset)?.tileset();
            let t = read_tiling(&read_input(&io.input)?, &tiles, io.json)?;
            let style = match format {
                Style::Ascii => RenderFormat::Ascii,
                Style::Svg => RenderFormat::Svg,
            };
            write_output(&io.out, &render(&t, style)?)?;
            Ok(Outcome::Yes)
        }
    }
}

/// Pads a tile with zero coordinates up to `dim`.
fn embed(t: &Tile, dim: usize) -> Result<Tile, CliError> {
    if t.dim() > dim {
        return Err(CliError::Usage(format!("generator has dimension {}, above --dim {dim}", t.dim())));
    }
    let cells = t.cells().iter().map(|c| Cell::new(c.coords().iter().copied().chain(std::iter::repeat(0)).take(dim)));
    Ok(Tile::new(dim, cells)?)
}
