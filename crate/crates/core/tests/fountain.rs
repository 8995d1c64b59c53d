use tessella::fountain::{
    alg2_tile, build_retile_table, fsgen, is_fountain_set, s2_retile_table, FountainError, FsgenCaps, GeneratingTiles,
};
use tessella::lattice::{shapes, validate_tiling};
use tessella::oracle::OracleBudget;
use tessella::random::eden;
use tessella::{Symmetry, Tile, TileSet};

#[test]
fn fsgen_output_is_a_fountain_set() {
    let b = OracleBudget::default();
    for gens in [vec![shapes::domino()], vec![shapes::l_tromino()], vec![shapes::domino(), shapes::bar3()]] {
        match fsgen(&gens, 2, Symmetry::Rotations, FsgenCaps::default(), b) {
            Ok(set) => {
                assert!(is_fountain_set(&set, false, b).unwrap().is_fountain);
                assert!(build_retile_table(&set, b).is_ok());
            }
            Err(FountainError::CapExceeded { partial, .. }) => assert!(!partial.is_empty()),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn generators_of_s2_are_the_domino() {
    let g = GeneratingTiles::of(&TileSet::s2());
    assert_eq!(g.tiles, vec![0]);
}

#[test]
fn large_random_regions() {
    let gens = GeneratingTiles::of(&TileSet::s2());
    for (n, seed) in [(50_000, 1), (200_000, 2)] {
        let t = alg2_tile(&eden(n, seed), &gens, s2_retile_table()).unwrap();
        assert_eq!(validate_tiling(&t), Ok(()));
    }
}

#[test]
fn fixed_dominoes_are_not_a_fountain_set() {
    let set = TileSet::from_shapes(2, Symmetry::Fixed, [("domino", shapes::domino())]).unwrap();
    let report = is_fountain_set(&set, false, OracleBudget::default()).unwrap();
    assert!(!report.is_fountain);
    let w = &report.witnesses[0];
    assert_eq!(w.union.len(), 3);
    assert!(Tile::from_polyomino(&w.union).is_ok());
}
