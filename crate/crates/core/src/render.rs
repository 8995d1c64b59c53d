//! Drawing planar tilings as text or SVG.

use std::fmt::Write as _;

use rustc_hash::FxHashMap;

use crate::lattice::io::emit_tiling_ascii;
use crate::lattice::{Cell, LatticeError, Tiling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Pixels per cell side in SVG output.
pub const CELL_PX: i32 = 24;

pub fn render(t: &Tiling, format: RenderFormat) -> Result<String, LatticeError> {
    if t.region.dim() != 2 {
        return Err(LatticeError::DimensionMismatch { expected: 2, found: t.region.dim() });
    }
    match format {
        RenderFormat::Ascii => emit_tiling_ascii(t),
        RenderFormat::Svg => Ok(svg(t)),
    }
}

/// Fill colour of placement `id`: hues spaced by the golden angle.
pub fn placement_color(id: usize) -> String {
    let hue = (id as f64 * 137.507_764) % 360.0;
    format!("hsl({hue:.1},65%,70%)")
}

fn svg(t: &Tiling) -> String {
    let mut owner: FxHashMap<Cell, usize> = FxHashMap::default();
    for (i, p) in t.placements.iter().enumerate() {
        for c in p.cells() {
            owner.insert(c, i);
        }
    }
    let Some((lo, hi)) = t.region.bounds() else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n".to_string();
    };
    let (w, h) = (hi.x() - lo.x() + 1, hi.y() - lo.y() + 1);
    // SVG y grows downward; the top row of the region is drawn first.
    let px = |c: &Cell| ((c.x() - lo.x()) * CELL_PX, (hi.y() - c.y()) * CELL_PX);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"-2 -2 {} {}\">",
        w * CELL_PX + 4,
        h * CELL_PX + 4,
        w * CELL_PX + 4,
        h * CELL_PX + 4
    );
    for c in t.region.cells() {
        let (x, y) = px(c);
        let fill = owner.get(c).map_or_else(|| "white".to_string(), |&i| placement_color(i));
        let _ = writeln!(
            out,
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL_PX}\" height=\"{CELL_PX}\" fill=\"{fill}\" stroke=\"#999\" stroke-width=\"0.5\"/>"
        );
    }
    let mut path = String::new();
    for c in t.region.cells() {
        let (x, y) = px(c);
        let mine = owner.get(c);
        let edges = [
            ((1, 0), (x + CELL_PX, y, x + CELL_PX, y + CELL_PX)),
            ((-1, 0), (x, y, x, y + CELL_PX)),
            ((0, 1), (x, y, x + CELL_PX, y)),
            ((0, -1), (x, y + CELL_PX, x + CELL_PX, y + CELL_PX)),
        ];
        for ((dx, dy), (x1, y1, x2, y2)) in edges {
            let n = Cell::xy(c.x() + dx, c.y() + dy);
            if mine.is_none() || owner.get(&n) != mine {
                let _ = write!(path, "M{x1} {y1}L{x2} {y2}");
            }
        }
    }
    let _ = writeln!(
        out,
        "  <path d=\"{path}\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\" stroke-linecap=\"square\"/>"
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Placement, Polyomino, TileSet};

    fn seven_cell_right() -> Tiling {
        let region = Polyomino::from_xy([(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1)]).unwrap();
        let blocks: [(usize, &[(i32, i32)]); 3] =
            [(1, &[(0, 0), (1, 0), (1, 1)]), (0, &[(2, 1), (3, 1)]), (0, &[(2, 0), (3, 0)])];
        let placements = blocks
            .iter()
            .map(|(t, b)| Placement::covering(*t, &b.iter().map(|&c| Cell::from(c)).collect::<Vec<_>>()).unwrap())
            .collect();
        Tiling::new(region, TileSet::domino_l(), placements)
    }

    #[test]
    fn ascii_domino() {
        let region = Polyomino::rectangle(2, 1);
        let p = Placement::covering(0, region.cells()).unwrap();
        let t = Tiling::new(region, TileSet::domino_l(), vec![p]);
        assert_eq!(render(&t, RenderFormat::Ascii).unwrap().trim_end(), "aa");
    }

    #[test]
    fn ascii_seven_cell() {
        let text = render(&seven_cell_right(), RenderFormat::Ascii).unwrap();
        assert_eq!(text, ".abb\naacc");
    }

    #[test]
    fn svg_has_one_rect_per_cell() {
        let text = render(&seven_cell_right(), RenderFormat::Svg).unwrap();
        assert_eq!(text.matches("<rect").count(), 7);
        assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
        assert_eq!(text, render(&seven_cell_right(), RenderFormat::Svg).unwrap());
    }

    #[test]
    fn three_dimensions_are_rejected() {
        let region = Polyomino::new(3, [Cell::new([0, 0, 0])]).unwrap();
        let t = Tiling::new(region, TileSet::domino_l(), vec![]);
        assert!(render(&t, RenderFormat::Svg).is_err());
    }
}
