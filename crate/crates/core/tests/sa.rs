use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tessella::lattice::validate_tiling;
use tessella::oracle::{is_tileable, OracleBudget};
use tessella::sa::{in_crenellated_class, sa_decide, sa_tile, CrenellationReason};
use tessella::{Cell, Polyomino, TileSet};

fn pluses(centers: &[(i32, i32)]) -> Polyomino {
    let cells: BTreeSet<(i32, i32)> =
        centers.iter().flat_map(|&(x, y)| [(x, y), (x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]).collect();
    Polyomino::from_xy(cells).unwrap()
}

fn oracle(r: &Polyomino) -> bool {
    is_tileable(r, &TileSet::sa(), OracleBudget::default().with_max_steps(500_000_000)).unwrap()
}

#[test]
fn crenellated_examples() {
    let left = pluses(&[(1, 0), (3, 0)]);
    let report = in_crenellated_class(&left).unwrap();
    assert!(report.in_class);
    assert_eq!(report.centers, vec![Cell::xy(1, 0), Cell::xy(3, 0)]);
    let right = pluses(&[(1, 0), (3, 0), (3, -2)]);
    assert!(in_crenellated_class(&right).unwrap().in_class);
    for r in [left, right, pluses(&[(0, 0)])] {
        assert!(!oracle(&r));
        assert!(!sa_decide(&r).unwrap());
        assert!(matches!(sa_tile(&r), Err(tessella::sa::SaError::Untileable { .. })));
    }
}

// Each tile of the set covers one center and at most three of its tips, so
// a tree of k pluses (3k + 1 tips) is stuck while a loop is not.
#[test]
fn loops_of_pluses_are_tileable() {
    let rings: [&[(i32, i32)]; 4] = [
        &[(0, 0), (2, 0), (0, 2), (2, 2)],
        &[(0, 0), (2, 0), (0, 2), (2, 2), (4, 0)],
        &[(0, 0), (2, 0), (4, 0), (4, 2), (2, 2), (0, 2)],
        &[(0, 0), (2, 0), (4, 0), (4, 2), (4, 4), (2, 4), (0, 4), (0, 2)],
    ];
    for centers in rings {
        let r = pluses(centers);
        assert_eq!(in_crenellated_class(&r).unwrap().reason, CrenellationReason::NotSimplyConnected);
        assert!(oracle(&r));
        let t = sa_tile(&r).unwrap();
        assert_eq!(validate_tiling(&t), Ok(()));
    }
}

#[test]
fn bent_and_branched_trees_are_untileable() {
    let trees: [&[(i32, i32)]; 4] = [
        &[(0, 0), (2, 0), (2, 2)],
        &[(0, 0), (2, 0), (2, 2), (4, 2), (4, 4)],
        &[(0, 0), (0, 2), (2, 2), (4, 2), (4, 0)],
        &[(0, 0), (2, 0), (4, 0), (2, 2), (2, -2)],
    ];
    for centers in trees {
        let r = pluses(centers);
        assert!(in_crenellated_class(&r).unwrap().in_class, "{centers:?}");
        assert!(!oracle(&r), "{centers:?}");
    }
}

#[test]
fn random_plus_clusters_match_the_oracle() {
    let mut in_class = 0;
    for seed in 0..400u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut centers = vec![(0i32, 0i32)];
        let k = rng.gen_range(1..7);
        for _ in 0..100 {
            if centers.len() >= k {
                break;
            }
            let (x, y) = centers[rng.gen_range(0..centers.len())];
            let (dx, dy) = [(2, 0), (-2, 0), (0, 2), (0, -2), (2, 1), (1, 2), (3, 0)][rng.gen_range(0..7)];
            let c = (x + dx, y + dy);
            if centers.iter().all(|&(a, b)| (a - c.0).abs() > 1 || (b - c.1).abs() > 1) {
                centers.push(c);
            }
        }
        let mut cells: Vec<(i32, i32)> = pluses(&centers).cells().iter().map(|c| (c.x(), c.y())).collect();
        for _ in 0..rng.gen_range(0..3) {
            let (x, y) = cells[rng.gen_range(0..cells.len())];
            let c = [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)][rng.gen_range(0..4)];
            if !cells.contains(&c) {
                cells.push(c);
            }
        }
        let r = Polyomino::from_xy(cells).unwrap();
        if !r.is_connected() {
            continue;
        }
        let truth = oracle(&r);
        assert_eq!(sa_decide(&r).unwrap(), truth, "seed {seed}");
        in_class += usize::from(!truth);
        if truth {
            assert_eq!(validate_tiling(&sa_tile(&r).unwrap()), Ok(()), "seed {seed}");
        }
    }
    assert!(in_class > 20);
}

#[test]
fn long_chain_is_rejected_in_linear_work() {
    let centers: Vec<(i32, i32)> = (0..20_000).map(|i| (2 * i, 0)).collect();
    let r = pluses(&centers);
    let report = in_crenellated_class(&r).unwrap();
    assert!(report.in_class);
    assert!(report.visits <= 48 * r.len() as u64);
}
