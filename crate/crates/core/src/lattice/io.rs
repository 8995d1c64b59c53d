//! Text encodings for regions, tile sets, and tilings.
//!
//! ASCII regions use `#` for a cell and `.` for a gap. The first line is the
//! top row: row `r` of `h` lines maps to `y = h - 1 - r` and column `c` to
//! `x = c`. ASCII tilings use the same grid, with every tile drawn in one
//! character from `a-z`, `A-Z`, `0-9`, chosen so that neighbouring tiles
//! never share a character.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{Cell, LatticeError, NamedTile, Placement, Polyomino, Symmetry, Tile, TileSet, Tiling};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Ascii,
    Json,
}

/// Characters used for tiles in ASCII tilings, in assignment order.
pub const TILE_ALPHABET: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

#[derive(Serialize, Deserialize)]
struct RegionJson {
    dim: usize,
    cells: Vec<Vec<i32>>,
}

#[derive(Serialize, Deserialize)]
struct TileJson {
    name: String,
    cells: Vec<Vec<i32>>,
}

#[derive(Serialize, Deserialize)]
struct TileSetJson {
    dim: usize,
    symmetry: Symmetry,
    tiles: Vec<TileJson>,
}

#[derive(Serialize, Deserialize)]
struct TilingJson {
    region: RegionJson,
    tiles: Vec<TileJson>,
}

fn cells_to_json(cells: &[Cell]) -> Vec<Vec<i32>> {
    cells.iter().map(|c| c.coords().to_vec()).collect()
}

fn cells_from_json(dim: usize, cells: Vec<Vec<i32>>) -> Result<Vec<Cell>, LatticeError> {
    cells
        .into_iter()
        .map(|c| {
            if c.len() != dim {
                Err(LatticeError::DimensionMismatch { expected: dim, found: c.len() })
            } else {
                Ok(Cell::new(c))
            }
        })
        .collect()
}

impl RegionJson {
    fn from_region(p: &Polyomino) -> Self {
        RegionJson { dim: p.dim(), cells: cells_to_json(p.cells()) }
    }

    fn into_region(self) -> Result<Polyomino, LatticeError> {
        Polyomino::new(self.dim, cells_from_json(self.dim, self.cells)?)
    }
}

fn json_err(e: serde_json::Error) -> LatticeError {
    LatticeError::Parse(e.to_string())
}

pub fn parse_region(text: &str, format: Format) -> Result<Polyomino, LatticeError> {
    match format {
        Format::Ascii => parse_region_ascii(text),
        Format::Json => serde_json::from_str::<RegionJson>(text).map_err(json_err)?.into_region(),
    }
}

pub fn emit_region(p: &Polyomino, format: Format) -> Result<String, LatticeError> {
    match format {
        Format::Ascii => emit_region_ascii(p),
        Format::Json => Ok(serde_json::to_string(&RegionJson::from_region(p)).expect("serializable")),
    }
}

/// Non-blank lines with trailing whitespace removed; leading and trailing blank lines dropped.
fn grid_lines(text: &str) -> Vec<&str> {
    let lines: Vec<&str> = text.lines().map(str::trim_end).collect();
    let first = lines.iter().position(|l| !l.is_empty());
    let last = lines.iter().rposition(|l| !l.is_empty());
    match (first, last) {
        (Some(a), Some(b)) => lines[a..=b].to_vec(),
        _ => Vec::new(),
    }
}

fn parse_region_ascii(text: &str) -> Result<Polyomino, LatticeError> {
    let lines = grid_lines(text);
    let h = lines.len() as i32;
    let mut cells = Vec::new();
    for (r, line) in lines.iter().enumerate() {
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::xy(c as i32, h - 1 - r as i32)),
                '.' => {}
                other => {
                    return Err(LatticeError::Parse(format!(
                        "unexpected character {other:?} at line {}, column {}",
                        r + 1,
                        c + 1
                    )))
                }
            }
        }
    }
    Polyomino::new(2, cells)
}

/// Lays out planar cells on a character grid spanning their bounding box.
fn ascii_grid(p: &Polyomino, glyph: impl Fn(usize, &Cell) -> char) -> Result<String, LatticeError> {
    if p.dim() != 2 {
        return Err(LatticeError::DimensionMismatch { expected: 2, found: p.dim() });
    }
    let Some((lo, hi)) = p.bounds() else {
        return Ok(String::new());
    };
    let w = (hi.x() - lo.x() + 1) as usize;
    let h = (hi.y() - lo.y() + 1) as usize;
    let mut rows = vec![vec!['.'; w]; h];
    for (i, c) in p.cells().iter().enumerate() {
        let row = (hi.y() - c.y()) as usize;
        let col = (c.x() - lo.x()) as usize;
        rows[row][col] = glyph(i, c);
    }
    Ok(rows.into_iter().map(|r| r.into_iter().collect::<String>()).collect::<Vec<_>>().join("\n"))
}

fn emit_region_ascii(p: &Polyomino) -> Result<String, LatticeError> {
    ascii_grid(p, |_, _| '#')
}

pub fn parse_tileset_json(text: &str) -> Result<TileSet, LatticeError> {
    let raw: TileSetJson = serde_json::from_str(text).map_err(json_err)?;
    let dim = raw.dim;
    let tiles = raw
        .tiles
        .into_iter()
        .map(|t| Ok(NamedTile { name: t.name, tile: Tile::new(dim, cells_from_json(dim, t.cells)?)? }))
        .collect::<Result<Vec<_>, LatticeError>>()?;
    TileSet::new(dim, raw.symmetry, tiles)
}

pub fn emit_tileset_json(s: &TileSet) -> String {
    let raw = TileSetJson {
        dim: s.dim(),
        symmetry: s.symmetry(),
        tiles: s
            .tiles()
            .iter()
            .map(|t| TileJson { name: t.name.clone(), cells: cells_to_json(t.tile.cells()) })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}

pub fn emit_tiling_json(t: &Tiling) -> String {
    let raw = TilingJson {
        region: RegionJson::from_region(&t.region),
        tiles: t
            .placements
            .iter()
            .map(|p| TileJson {
                name: t.tileset.tiles().get(p.tile).map_or_else(|| format!("#{}", p.tile), |n| n.name.clone()),
                cells: cells_to_json(&p.cells()),
            })
            .collect(),
    };
    serde_json::to_string(&raw).expect("serializable")
}

/// Reads a JSON tiling, resolving tile names against `tileset`.
pub fn parse_tiling_json(text: &str, tileset: &TileSet) -> Result<Tiling, LatticeError> {
    let raw: TilingJson = serde_json::from_str(text).map_err(json_err)?;
    let dim = raw.region.dim;
    let region = raw.region.into_region()?;
    let placements = raw
        .tiles
        .into_iter()
        .map(|t| {
            let idx = tileset.index_of(&t.name).ok_or_else(|| LatticeError::UnknownTile(t.name.clone()))?;
            Placement::covering(idx, &cells_from_json(dim, t.cells)?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tiling::new(region, tileset.clone(), placements))
}

/// Assigns each placement a character such that face-adjacent placements differ.
/// Greedy in placement order, always taking the first free character.
pub fn tile_glyphs(t: &Tiling) -> Result<Vec<char>, LatticeError> {
    let mut owner: FxHashMap<Cell, usize> = FxHashMap::default();
    for (i, p) in t.placements.iter().enumerate() {
        for c in p.cells() {
            owner.insert(c, i);
        }
    }
    let mut glyph: Vec<Option<u8>> = vec![None; t.placements.len()];
    for (i, p) in t.placements.iter().enumerate() {
        let mut used = [false; TILE_ALPHABET.len()];
        for c in p.cells() {
            for n in c.neighbors() {
                if let Some(&j) = owner.get(&n) {
                    if j != i {
                        if let Some(g) = glyph[j] {
                            used[g as usize] = true;
                        }
                    }
                }
            }
        }
        let free = used.iter().position(|u| !u).ok_or(LatticeError::TooManyNeighbors(i))?;
        glyph[i] = Some(free as u8);
    }
    Ok(glyph.into_iter().map(|g| TILE_ALPHABET[g.expect("assigned") as usize] as char).collect())
}

/// The ASCII tiling encoding. Placement cells must lie inside the region.
pub fn emit_tiling_ascii(t: &Tiling) -> Result<String, LatticeError> {
    let glyphs = tile_glyphs(t)?;
    let mut by_cell: FxHashMap<Cell, char> = FxHashMap::default();
    for (p, g) in t.placements.iter().zip(&glyphs) {
        for c in p.cells() {
            by_cell.insert(c, *g);
        }
    }
    ascii_grid(&t.region, |_, c| by_cell.get(c).copied().unwrap_or('?'))
}

/// Reads an ASCII tiling. Each face-connected group of equal characters is
/// one placement, identified against `tileset`. A block whose shape matches a
/// tile only up to a disallowed rotation or reflection keeps its actual
/// orientation, so validation reports it as inadmissible.
pub fn parse_tiling_ascii(text: &str, tileset: &TileSet) -> Result<Tiling, LatticeError> {
    let lines = grid_lines(text);
    let h = lines.len() as i32;
    let mut glyph_at: BTreeMap<Cell, char> = BTreeMap::new();
    for (r, line) in lines.iter().enumerate() {
        for (c, ch) in line.chars().enumerate() {
            if ch == '.' || ch == ' ' {
                continue;
            }
            if !ch.is_ascii_alphanumeric() {
                return Err(LatticeError::Parse(format!(
                    "unexpected character {ch:?} at line {}, column {}",
                    r + 1,
                    c + 1
                )));
            }
            glyph_at.insert(Cell::xy(c as i32, h - 1 - r as i32), ch);
        }
    }
    let region = Polyomino::new(2, glyph_at.keys().cloned())?;
    let mut seen: FxHashMap<Cell, ()> = FxHashMap::default();
    let mut placements = Vec::new();
    for (start, &ch) in &glyph_at {
        if seen.contains_key(start) {
            continue;
        }
        let mut block = vec![start.clone()];
        seen.insert(start.clone(), ());
        let mut k = 0;
        while k < block.len() {
            let c = block[k].clone();
            k += 1;
            for n in c.neighbors() {
                if glyph_at.get(&n) == Some(&ch) && !seen.contains_key(&n) {
                    seen.insert(n.clone(), ());
                    block.push(n);
                }
            }
        }
        let shape = Tile::from_polyomino(&Polyomino::new(2, block.iter().cloned())?)?;
        let idx = tileset.identify(&shape).or_else(|| {
            let loose = super::canonical_tile_form(&shape, Symmetry::RotationsAndReflections);
            (0..tileset.len())
                .find(|&i| super::canonical_tile_form(tileset.tile(i), Symmetry::RotationsAndReflections) == loose)
        });
        let idx = idx.ok_or_else(|| LatticeError::UnknownShape(format!("{shape:?}")))?;
        placements.push(Placement::covering(idx, &block)?);
    }
    Ok(Tiling::new(region, tileset.clone(), placements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{tile::shapes, validate_tiling, Violation};

    #[test]
    fn first_line_is_the_top_row() {
        let p = parse_region("##\n.#", Format::Ascii).unwrap();
        assert_eq!(p, Polyomino::from_xy([(0, 1), (1, 1), (1, 0)]).unwrap());
        assert_eq!(emit_region(&p, Format::Ascii).unwrap(), "##\n.#");
    }

    #[test]
    fn json_region_in_three_dimensions() {
        let p = parse_region(r#"{"dim":3,"cells":[[0,0,0],[1,0,0]]}"#, Format::Json).unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.len(), 2);
        let back = parse_region(&emit_region(&p, Format::Json).unwrap(), Format::Json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_region("#x", Format::Ascii), Err(LatticeError::Parse(_))));
        assert!(matches!(parse_region("..\n..", Format::Ascii), Err(LatticeError::EmptyRegion)));
        assert!(matches!(
            parse_region(r#"{"dim":2,"cells":[[0,0,0]]}"#, Format::Json),
            Err(LatticeError::DimensionMismatch { .. })
        ));
        assert!(matches!(parse_region("{", Format::Json), Err(LatticeError::Parse(_))));
        let p3 = Polyomino::new(3, [Cell::new([0, 0, 0])]).unwrap();
        assert!(emit_region(&p3, Format::Ascii).is_err());
    }

    #[test]
    fn tileset_json_round_trip() {
        let s = TileSet::s2();
        let back = parse_tileset_json(&emit_tileset_json(&s)).unwrap();
        assert_eq!(back, s);
        assert!(emit_tileset_json(&s).contains("\"symmetry\": \"rotations\""));
    }

    fn seven_cell_right() -> Tiling {
        let region = Polyomino::from_xy([(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1)]).unwrap();
        Tiling::new(
            region,
            TileSet::domino_l(),
            vec![
                Placement::new(1, shapes::l_tromino(), Cell::xy(0, 0)),
                Placement::new(0, shapes::domino(), Cell::xy(2, 1)),
                Placement::new(0, shapes::domino(), Cell::xy(2, 0)),
            ],
        )
    }

    #[test]
    fn ascii_tiling_encoding() {
        let t = seven_cell_right();
        assert_eq!(emit_tiling_ascii(&t).unwrap(), ".abb\naacc");
        let back = parse_tiling_ascii(".abb\naacc", &TileSet::domino_l()).unwrap();
        assert!(back.same_blocks(&t));
        assert_eq!(validate_tiling(&back), Ok(()));
    }

    #[test]
    fn ascii_tiling_flags_rotated_tiles_under_fixed_symmetry() {
        let t = parse_tiling_ascii("a\na", &TileSet::domino_l()).unwrap();
        assert_eq!(validate_tiling(&t), Err(Violation::InadmissibleVariant { placement: 0 }));
    }

    #[test]
    fn json_tiling_round_trip() {
        let t = seven_cell_right();
        let back = parse_tiling_json(&emit_tiling_json(&t), &TileSet::domino_l()).unwrap();
        assert!(back.same_blocks(&t));
        assert_eq!(back.region, t.region);
    }
}
