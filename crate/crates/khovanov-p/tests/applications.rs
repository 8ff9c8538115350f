use std::collections::BTreeSet;

use khovanov_p::algebra::{compatible_weights, Mode};
use khovanov_p::applications::*;
use khovanov_p::diagrams::*;
use khovanov_p::modules::{theta_on_simple, GrothendieckClass};

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec()).unwrap()
}

fn layers(ls: &[&[&[i64]]]) -> Vec<GrothendieckClass> {
    ls.iter().map(|l| l.iter().map(|v| w(v)).collect()).collect()
}

#[test]
fn primitivity_for_n1() {
    for k in -4..5 {
        let d = CircleDiagram::from_weights(&w(&[k + 2]), &w(&[k]));
        assert!(is_primitive(&d).unwrap().is_primitive());
        assert!(nonsplittable_oracle(&d).unwrap());
        assert_eq!(ext1_dim(&w(&[k]), &w(&[k + 2])).unwrap(), 1);
        assert_eq!(ext1_dim(&w(&[k]), &w(&[k])).unwrap(), 0);
        for j in -6..7 {
            if j != k + 2 {
                assert_eq!(ext1_dim(&w(&[k]), &w(&[j])).unwrap(), 0);
            }
        }
        assert!(is_primitive(&CircleDiagram::idempotent(&w(&[k]))).is_err());
        assert!(nonsplittable_oracle(&CircleDiagram::idempotent(&w(&[k]))).is_err());
    }
}

fn check_ext_window(n: usize, lo: i64, hi: i64) -> usize {
    let mut count = 0;
    for lam in weights_in_window(n, lo, hi) {
        let head = radical_head(&lam).unwrap();
        for mu in compatible_weights(&lam, Mode::Kn(n)) {
            if mu == lam {
                continue;
            }
            let d = CircleDiagram::from_weights(&mu, &lam);
            let p = is_primitive(&d).unwrap().is_primitive();
            let o = nonsplittable_oracle(&d).unwrap();
            let r = head.multiplicity(&mu);
            assert_eq!(p, o, "{d}");
            assert_eq!(r, o as usize, "{d}");
            assert_eq!(ext1_dim(&lam, &mu).unwrap(), r);
            count += 1;
        }
    }
    count
}

#[test]
fn ext_criterion_n2() {
    assert!(check_ext_window(2, -4, 5) > 100);
}

#[test]
fn both_kinds_of_primitivity_occur() {
    let mut seen = BTreeSet::new();
    for lam in weights_in_window(2, -3, 4) {
        for mu in compatible_weights(&lam, Mode::Kn(2)) {
            if mu != lam {
                seen.insert(format!("{:?}", is_primitive(&CircleDiagram::from_weights(&mu, &lam)).unwrap()));
            }
        }
    }
    for k in ["DeltaPrimitive", "NablaPrimitive", "No"] {
        assert!(seen.contains(k), "{k} missing from {seen:?}");
    }
}

#[test]
fn duals_of_simples() {
    for k in -5..6 {
        assert_eq!(simple_dual(&w(&[k])).unwrap(), w(&[-k]));
    }
    for n in 1..4 {
        for lam in weights_in_window(n, -3, 4) {
            let d = simple_dual(&lam).unwrap();
            assert_eq!(simple_dual(&d).unwrap(), lam);
        }
    }
    // The trivial weight of p(2) is self-dual exactly when its cap diagram is
    // symmetric under the rotation.
    let fixed: Vec<Weight> =
        weights_in_window(2, -3, 4).into_iter().filter(|l| simple_dual(l).unwrap() == *l).collect();
    assert!(fixed.contains(&w(&[1, 0])));
}

#[test]
fn irreducible_summands() {
    for n in 1..6 {
        let ws = irreducible_summand_weights(n);
        assert_eq!(ws.len(), n);
        let sigs: BTreeSet<usize> = ws.iter().map(block_signature).collect();
        assert_eq!(sigs.len(), n);
        let mut expect = ws.clone();
        expect.sort_by_key(|w| std::cmp::Reverse(w.order_key()));
        assert_eq!(irreducible_summands_by_matchings(n), expect);
        // k = n - 1 is (n-1, n-3, …, -n+1).
        let top: Vec<i64> = (0..n as i64).map(|j| n as i64 - 1 - 2 * j).collect();
        assert_eq!(ws[n - 1], w(&top));
    }
    // k = n gives a projective with several factors; k > n gives zero.
    for n in 1..4 {
        let trivial = Weight::new((0..n as i64).rev().collect()).unwrap();
        let at_n = theta_on_simple(&summand_matching(n), &trivial);
        assert!(at_n.nonzero && at_n.class.total() > 1);
        assert!(!theta_on_simple(&summand_matching(n + 1), &trivial).nonzero);
    }
}

#[test]
fn quiver_p1() {
    let q = build_quiver(1, None, -6, 6).unwrap();
    assert_eq!(q.nodes.len(), 13);
    assert_eq!(q.arrows.len(), 11);
    for a in &q.arrows {
        assert_eq!(a.to.entries()[0], a.from.entries()[0] + 2);
    }
    assert!(q.relations.iter().all(|r| r.relation == PathRelation::Zero));
    assert_eq!(build_quiver(1, None, 3, 2).unwrap(), Quiver::default());
}

fn offsets(path: &[Weight]) -> Vec<(i64, i64)> {
    path.windows(2).map(|p| (p[1].entries()[0] - p[0].entries()[0], p[1].entries()[1] - p[0].entries()[1])).collect()
}

#[test]
fn quiver_p2_block1() {
    let q = build_quiver(2, Some(1), -6, 8).unwrap();
    let green = (2, 0);
    let blue = (0, 2);
    let orange = (-1, -1);
    let red = (1, 3);
    let kinds: BTreeSet<(i64, i64)> = q.arrows.iter().map(|a| offsets(&[a.from.clone(), a.to.clone()])[0]).collect();
    assert_eq!(kinds, [green, blue, orange, red].into_iter().collect());
    let relation_of = |shape: &[(i64, i64)]| -> BTreeSet<String> {
        q.relations
            .iter()
            .filter(|r| offsets(&r.path) == shape)
            .map(|r| match &r.relation {
                PathRelation::Zero => "zero".to_string(),
                PathRelation::Free => "free".to_string(),
                PathRelation::Equals(others) => {
                    let s: BTreeSet<Vec<(i64, i64)>> = others.iter().map(|p| offsets(p)).collect();
                    format!("{s:?}")
                }
            })
            .collect()
    };
    let zero: BTreeSet<String> = ["zero".to_string()].into_iter().collect();
    for shape in [[blue, blue], [green, green], [orange, orange], [blue, red], [red, green]] {
        assert_eq!(relation_of(&shape), zero, "{shape:?}");
    }
    assert!(relation_of(&[green, blue]).contains(&format!("{:?}", BTreeSet::from([vec![blue, green]]))));
    // The inhomogeneous relation: a path of length three equals one of length two.
    assert!(relation_of(&[red, orange, green]).contains(&format!("{:?}", BTreeSet::from([vec![green, blue]]))));
    assert!(relation_of(&[orange, green, red]).contains(&format!("{:?}", BTreeSet::from([vec![green, red, orange]]))));
}

#[test]
fn quiver_is_stable_under_enlarging_the_window() {
    let small = build_quiver(2, Some(1), -3, 5).unwrap();
    let big = build_quiver(2, Some(1), -5, 7).unwrap();
    for a in &big.arrows {
        if small.nodes.contains(&a.from) && small.nodes.contains(&a.to) {
            assert!(small.arrows.contains(a));
        }
    }
    for a in &small.arrows {
        assert!(big.arrows.contains(a));
    }
}

#[test]
fn koszulity_reports() {
    let r = koszulity_report(&w(&[2, -1])).unwrap();
    assert!(!r.agree);
    assert_eq!(r.radical_layers, layers(&[&[&[2, -1]], &[&[4, -1], &[3, 2]], &[&[2, 1]], &[&[4, 1]]]));
    assert_eq!(r.socle_layers, layers(&[&[&[2, -1]], &[&[3, 2]], &[&[4, -1], &[2, 1]], &[&[4, 1]]]));
    for k in -3..4 {
        let r = koszulity_report(&w(&[k])).unwrap();
        assert!(r.agree);
        assert_eq!(r.radical_layers.len(), 2);
    }
    assert!(!koszulity_report(&w(&[2, -1, -5])).unwrap().agree);
}
