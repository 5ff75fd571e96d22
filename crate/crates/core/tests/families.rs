use coverdeg::betti::{hochster_table, reg_cover, Field};
use coverdeg::families::*;
use coverdeg::graph::{enumerate_connected, enumerate_trees, split_partition};
use coverdeg::hilbert::h_cover;
use coverdeg::survey::PairSet;
use coverdeg::{bundle, Graph};

/// `(reg R/J, deg h_{R/J})` straight from Hochster and the h-polynomial.
fn measured_pair(g: &Graph) -> (usize, usize) {
    (reg_cover(g, Field::Rational).unwrap(), h_cover(&bundle(g)).unwrap().deg_h)
}

#[test]
fn quick_grid_matches() {
    let results = check_grid(grid(GridLimits::QUICK).unwrap()).unwrap();
    assert!(results.len() > 100);
    for r in &results {
        assert!(r.ok(), "{} {}: {:?}", r.case.family, r.case.label, r.checks);
    }
}

#[test]
fn radius2_pairs_are_exactly_the_radius2_trees() {
    for n in 4..=9 {
        let observed: PairSet = enumerate_trees(n)
            .unwrap()
            .iter()
            .filter(|t| t.radius().unwrap() <= 2)
            .map(measured_pair)
            .collect();
        let claimed = radius2_pairs(n).unwrap();
        assert!(observed.same_pairs(&claimed), "n={n}: {:?} vs {:?}", observed.pairs(), claimed.pairs());
        for (r, d) in claimed.pairs() {
            let w = build_radius2(&radius2_witness(n, r, d).unwrap());
            assert_eq!(w.n(), n);
            assert_eq!(measured_pair(&w), (r, d));
        }
    }
}

#[test]
fn split_pairs_are_exactly_the_connected_split_graphs() {
    for n in 2..=8 {
        let observed: PairSet = enumerate_connected(n)
            .unwrap()
            .iter()
            .filter(|g| split_partition(g).is_some())
            .map(measured_pair)
            .collect();
        let claimed = split_pairs(n).unwrap();
        assert!(observed.same_pairs(&claimed), "n={n}: {:?} vs {:?}", observed.pairs(), claimed.pairs());
        for (q, _) in claimed.pairs() {
            let w = build_split(&split_witness(n, q).unwrap());
            assert_eq!(measured_pair(&w), (q, q));
        }
    }
}

#[test]
fn split_predictions_on_every_split_graph() {
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            if split_partition(&g).is_none() {
                continue;
            }
            let checks = check(&g, &predict_split(&g).unwrap()).unwrap();
            assert!(checks.iter().all(|c| c.ok), "{checks:?}");
        }
    }
}

#[test]
fn gkr_degrees_fill_the_bounds() {
    for n in 5..=12 {
        let (lo, hi) = gkr_degree_bounds(n);
        let mut seen = Vec::new();
        for k in 1..n {
            for r in 1..n {
                if let Ok(g) = build_gkr(k, r) {
                    if g.n() == n {
                        seen.push(predict_gkr(k, r).deg_h_cover.unwrap());
                    }
                }
            }
        }
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen, (lo..=hi).collect::<Vec<_>>(), "n={n}");
    }
}

#[test]
fn hnp_first_member() {
    // H_{7,3}: M = 3, pdim = n − p
    let g = build_hnp(7, 3).unwrap();
    let t = hochster_table(&g, Field::Rational).unwrap();
    assert_eq!(t.pdim(), 4);
    assert_eq!(bundle(&g).m, 3);
    assert!(build_hnp(6, 3).is_err());
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(Radius2Spec::new(0, vec![]).is_err());
    assert!(Radius2Spec::new(1, vec![0, 2]).is_err());
    assert!(SplitSpec::new(vec![]).is_err());
    assert!(build_bk(0).is_err());
    assert!(build_hpq(0, 2).is_err());
}
