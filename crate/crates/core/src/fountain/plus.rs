//! The d-dimensional plus and the subtiles obtained by dropping spokes.
//!
//! A subtile is identified with a bitmask over the `2d` spokes: bit `2i` is
//! `-e_i`, bit `2i + 1` is `+e_i`.

use super::FountainError;
use crate::lattice::{canonical_tile_form, Cell, Symmetry, Tile};

/// Largest dimension accepted by the subtile enumeration.
pub const MAX_PLUS_DIM: usize = 7;

fn check_dim(d: usize) -> Result<(), FountainError> {
    if d == 0 || d > MAX_PLUS_DIM {
        return Err(FountainError::OutOfRange { what: "dimension", value: d, max: MAX_PLUS_DIM });
    }
    Ok(())
}

fn spoke_tile(d: usize, mask: u32) -> Tile {
    let center = Cell::new(vec![1; d]);
    let mut cells = vec![center.clone()];
    for s in 0..2 * d {
        if mask & (1 << s) != 0 {
            let sign = if s % 2 == 0 { -1 } else { 1 };
            cells.push(center.add(&Cell::unit(d, s / 2, sign)));
        }
    }
    Tile::new(d, cells).expect("spokes are attached to the center")
}

/// Center plus all `2d` spokes, `2d + 1` cells.
pub fn plus_tile(d: usize) -> Result<Tile, FountainError> {
    check_dim(d)?;
    Ok(spoke_tile(d, (1u32 << (2 * d)) - 1))
}

/// Image of a spoke mask under the axis permutation `perm` followed by flipping the axes in `flip`.
fn act(mask: u32, perm: &[usize], flip: u32) -> u32 {
    let mut out = 0;
    for (axis, &to) in perm.iter().enumerate() {
        let (neg, pos) = (mask >> (2 * axis) & 1, mask >> (2 * axis + 1) & 1);
        let (neg, pos) = if flip >> to & 1 == 1 { (pos, neg) } else { (neg, pos) };
        out |= neg << (2 * to) | pos << (2 * to + 1);
    }
    out
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..d).collect();
    fn rec(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, out);
            p.swap(k, i);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}

/// One spoke mask per orbit of the full symmetry group, smallest mask of each orbit, ascending.
fn orbit_representatives(d: usize) -> Vec<u32> {
    let perms = permutations(d);
    let n = 1usize << (2 * d);
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for mask in 1..n as u32 {
        if seen[mask as usize] {
            continue;
        }
        reps.push(mask);
        for p in &perms {
            for flip in 0..1u32 << d {
                seen[act(mask, p, flip) as usize] = true;
            }
        }
    }
    reps
}

/// Every subtile of the d-plus with at least one spoke, as canonical forms
/// under rotations and reflections, sorted.
pub fn plus_subtiles(d: usize) -> Result<Vec<Tile>, FountainError> {
    check_dim(d)?;
    let mut out: Vec<Tile> = orbit_representatives(d)
        .into_iter()
        .map(|m| canonical_tile_form(&spoke_tile(d, m), Symmetry::RotationsAndReflections))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Number of distinct subtiles with exactly `k` spokes.
pub fn count_subtiles_by_spokes(d: usize, k: usize) -> Result<usize, FountainError> {
    check_dim(d)?;
    if k == 0 || k > 2 * d {
        return Err(FountainError::OutOfRange { what: "spoke count", value: k, max: 2 * d });
    }
    Ok(orbit_representatives(d).into_iter().filter(|m| m.count_ones() as usize == k).count())
}

/// `d(d+3)/2`, the size of the d-dimensional fountain set generated by the domino.
pub fn sd_size(d: usize) -> usize {
    d * (d + 3) / 2
}
