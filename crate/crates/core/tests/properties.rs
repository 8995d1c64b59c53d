use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tessella::domino_l::{apply_move, find_move_applications};
use tessella::fountain::{alg2_tile, s2_retile_table, GeneratingTiles};
use tessella::lattice::io::{
    emit_region, emit_tiling_ascii, emit_tiling_json, parse_region, parse_tiling_ascii, parse_tiling_json, Format,
};
use tessella::lattice::{canonical_tile_form, tile_orbit, validate_tiling, SignedPermutation};
use tessella::random::eden;
use tessella::{Cell, Polyomino, Symmetry, Tile, TileSet, Tiling};

fn s2_tiling(r: &Polyomino) -> Tiling {
    alg2_tile(r, &GeneratingTiles::of(&TileSet::s2()), s2_retile_table()).unwrap()
}

/// Attaches random fixed dominoes and Ls next to the covered cells.
fn random_domino_l_tiling(seed: u64, tiles: usize) -> Tiling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes: [&[(i32, i32)]; 2] = [&[(0, 0), (1, 0)], &[(0, 0), (1, 0), (1, 1)]];
    let mut covered = BTreeSet::new();
    let mut blocks = Vec::new();
    let mut frontier = vec![(0, 0)];
    for _ in 0..tiles * 20 {
        if blocks.len() == tiles {
            break;
        }
        let (fx, fy) = frontier[rng.gen_range(0..frontier.len())];
        let tile = rng.gen_range(0..2);
        let rel = shapes[tile];
        let (ax, ay) = rel[rng.gen_range(0..rel.len())];
        let cells: Vec<(i32, i32)> = rel.iter().map(|&(x, y)| (x + fx - ax, y + fy - ay)).collect();
        if cells.iter().any(|c| covered.contains(c)) {
            continue;
        }
        for &(x, y) in &cells {
            covered.insert((x, y));
            frontier.extend([(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]);
        }
        frontier.retain(|c| !covered.contains(c));
        blocks.push((tile, cells.into_iter().map(Cell::from).collect()));
    }
    Tiling::from_blocks(Polyomino::from_xy(covered).unwrap(), TileSet::domino_l(), blocks).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_a_class_invariant(n in 1usize..9, seed in any::<u64>(), which in 0usize..8) {
        let t = Tile::from_polyomino(&eden(n, seed)).unwrap();
        let g = &SignedPermutation::all(2)[which];
        let moved = Tile::from_polyomino(&Polyomino::new(2, t.cells().iter().map(|c| g.apply(c))).unwrap()).unwrap();
        prop_assert_eq!(
            canonical_tile_form(&t, Symmetry::RotationsAndReflections),
            canonical_tile_form(&moved, Symmetry::RotationsAndReflections)
        );
        if g.determinant() == 1 {
            prop_assert_eq!(canonical_tile_form(&t, Symmetry::Rotations), canonical_tile_form(&moved, Symmetry::Rotations));
            prop_assert!(tile_orbit(&t, Symmetry::Rotations).contains(&moved));
        }
        prop_assert_eq!(canonical_tile_form(&t, Symmetry::Fixed), t);
    }

    #[test]
    fn region_text_round_trips(n in 1usize..300, seed in any::<u64>()) {
        let r = eden(n, seed).normalized();
        for f in [Format::Ascii, Format::Json] {
            let text = emit_region(&r, f).unwrap();
            prop_assert_eq!(&parse_region(&text, f).unwrap(), &r);
        }
    }

    #[test]
    fn tiling_text_round_trips(n in 2usize..200, seed in any::<u64>()) {
        let r = eden(n, seed).normalized();
        let t = s2_tiling(&r);
        let json = parse_tiling_json(&emit_tiling_json(&t), &TileSet::s2()).unwrap();
        prop_assert!(json.same_blocks(&t));
        let ascii = parse_tiling_ascii(&emit_tiling_ascii(&t).unwrap(), &TileSet::s2()).unwrap();
        prop_assert!(ascii.same_blocks(&t));
        prop_assert_eq!(validate_tiling(&ascii), Ok(()));
    }

    #[test]
    fn components_partition_the_region(n in 1usize..60, m in 1usize..60, seed in any::<u64>(), dx in 0i32..20) {
        let a = eden(n, seed);
        let b = eden(m, seed ^ 1).translated(&Cell::xy(dx + 130, 0));
        let r = Polyomino::new(2, a.cells().iter().chain(b.cells()).cloned()).unwrap();
        let parts = r.components();
        prop_assert!(parts.iter().all(Polyomino::is_connected));
        prop_assert_eq!(parts.iter().map(Polyomino::len).sum::<usize>(), r.len());
        prop_assert_eq!(parts.len(), 2);
    }

    #[test]
    fn moves_round_trip(seed in any::<u64>(), tiles in 2usize..30) {
        let mut t = random_domino_l_tiling(seed, tiles);
        prop_assert_eq!(validate_tiling(&t), Ok(()));
        for step in 0..10u64 {
            let moves = find_move_applications(&t);
            if moves.is_empty() {
                break;
            }
            let m = &moves[((seed >> 8).wrapping_add(step) as usize) % moves.len()];
            let next = apply_move(&t, m).unwrap();
            prop_assert_eq!(validate_tiling(&next), Ok(()));
            prop_assert!(apply_move(&next, &m.inverse()).unwrap().same_blocks(&t));
            t = next;
        }
    }

    #[test]
    fn eden_is_connected_and_exact(n in 1usize..500, seed in any::<u64>()) {
        let r = eden(n, seed);
        prop_assert_eq!(r.len(), n);
        prop_assert!(r.is_connected());
    }
}
