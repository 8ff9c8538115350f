use khovanov_p::diagrams::*;
use khovanov_p::error::Error;

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec()).unwrap()
}

fn sorted(mut v: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    v.sort();
    v
}

#[test]
fn cup_from_weight_examples() {
    assert_eq!(cup_from_weight(&w(&[3, 0, -2])).arcs(), &[(-3, -2), (-1, 0), (2, 3)]);
    assert!(cup_from_weight(&w(&[])).is_empty());
    assert_eq!(cup_from_weight(&w(&[1, 0, -1])).arcs(), &[(-4, 1), (-3, 0), (-2, -1)]);
    assert_eq!(cup_from_weight(&w(&[3, -1, -2])).arcs(), &[(-4, -1), (-3, -2), (2, 3)]);
}

#[test]
fn rejects_non_decreasing() {
    assert_eq!(Weight::new(vec![0, 0]), Err(Error::NotStrictlyDecreasing(vec![0, 0])));
    assert!(Weight::new(vec![-1, 2]).is_err());
}

#[test]
fn cap_from_weight_examples() {
    // (n-1, ..., 0): right endpoints at reals n+1/2, ..., 3/2, i.e. codes n, ..., 1.
    for n in 1..5i64 {
        let lam = w(&(0..n).rev().collect::<Vec<_>>());
        let cap = cap_from_weight(&lam);
        let mut rights: Vec<i64> = cap.arcs().iter().map(|a| a.1).collect();
        rights.sort();
        assert_eq!(rights, (1..=n).collect::<Vec<_>>());
        let outer: Vec<_> = cap.arcs().iter().filter(|a| a.0 == -n + 1).collect();
        assert_eq!(outer, vec![&(-n + 1, n)]);
    }
    for k in -3..4 {
        assert_eq!(cap_from_weight(&w(&[k])).arcs(), &[(k, k + 1)]);
    }
    assert!(cap_from_weight(&w(&[])).is_empty());
}

#[test]
fn weight_round_trip() {
    for n in 0..4 {
        for lam in weights_in_window(n, -4, 4) {
            assert_eq!(weight_from_cup(&cup_from_weight(&lam)), lam);
            assert_eq!(weight_from_cap(&cap_from_weight(&lam)), lam);
        }
    }
    assert_eq!(weight_from_cup(&CupDiagram::new(vec![(-3, -2), (-1, 0), (2, 3)]).unwrap()), w(&[3, 0, -2]));
    assert_eq!(weight_from_cup(&CupDiagram::new(vec![(4, 5)]).unwrap()), w(&[5]));
    assert_eq!(weight_from_cup(&CupDiagram::empty()), w(&[]));
}

#[test]
fn invalid_arcs_rejected() {
    assert!(CupDiagram::new(vec![(0, 2), (1, 3)]).is_err());
    assert!(CupDiagram::new(vec![(0, 2)]).is_err());
    assert!(CupDiagram::new(vec![(0, 1), (1, 2)]).is_err());
    assert!(CupDiagram::new(vec![(1, 0)]).is_err());
    assert!(CupDiagram::new(vec![(0, 3), (1, 2)]).is_ok());
}

#[test]
fn compare_weights_examples() {
    assert_eq!(compare_weights(&w(&[3, 0, -2]), &w(&[3, -1, -2])), WeightOrder::Less);
    assert_eq!(compare_weights(&w(&[3, 0]), &w(&[3, 0])), WeightOrder::Equal);
    assert_eq!(compare_weights(&w(&[2, 0]), &w(&[3, -1])), WeightOrder::Incomparable);
    assert_eq!(compare_weights(&w(&[2, 0, -1]), &w(&[5, 4])), WeightOrder::Less);
}

#[test]
fn order_key_refines_partial_order() {
    let ws = weights_in_window(2, -3, 3);
    for a in &ws {
        for b in &ws {
            if compare_weights(a, b) == WeightOrder::Greater {
                assert!(a.order_key() < b.order_key(), "{a} > {b}");
            }
        }
    }
}

#[test]
fn trace_examples() {
    for k in -3..4 {
        let e = CircleDiagram::idempotent(&w(&[k]));
        assert_eq!(sorted(e.bottom.arcs().to_vec()), vec![(k - 1, k)]);
        let r = trace_components(&e);
        assert_eq!(r.circles, 0);
        let moving: Vec<_> = r.lines.iter().filter(|l| l.ends.0.raw() != l.ends.1.raw()).collect();
        assert_eq!(moving.len(), 1);
        assert!(moving[0].is_propagating());

        let circ =
            CircleDiagram::new(CupDiagram::new(vec![(k - 1, k)]).unwrap(), CapDiagram::new(vec![(k - 1, k)]).unwrap());
        assert_eq!(trace_components(&circ).circles, 1);
        assert!(!is_orientable_k(&circ));

        let rad = CircleDiagram::new(
            CupDiagram::new(vec![(k + 1, k + 2)]).unwrap(),
            CapDiagram::new(vec![(k, k + 1)]).unwrap(),
        );
        let r = trace_components(&rad);
        assert_eq!(r.circles, 0);
        assert!(r.lines.iter().all(|l| l.is_propagating()));
        assert!(is_orientable_kn(&rad));
    }
}

#[test]
fn kn_orientability_for_rank_one() {
    for k in -5..5 {
        let lam = w(&[k]);
        assert!(is_orientable_kn(&CircleDiagram::idempotent(&lam)));
        assert!(is_orientable_kn(&CircleDiagram::from_weights(&w(&[k + 2]), &lam)));
        assert!(!is_orientable_kn(&CircleDiagram::from_weights(&w(&[k - 2]), &lam)));
        let np = trace_components(&CircleDiagram::from_weights(&w(&[k - 2]), &lam));
        assert_eq!(np.non_propagating().count(), 2);
        let ok: Vec<i64> =
            (k - 8..k + 8).filter(|&m| is_orientable_kn(&CircleDiagram::from_weights(&w(&[m]), &lam))).collect();
        assert_eq!(ok, vec![k, k + 2]);
    }
}

#[test]
fn kn_implies_k_and_idempotents_orientable() {
    for n in 1..3 {
        let ws = weights_in_window(n, -4, 4);
        for a in &ws {
            assert!(is_orientable_kn(&CircleDiagram::idempotent(a)));
            assert!(is_orientable_k(&CircleDiagram::idempotent(a)));
            for b in &ws {
                let d = CircleDiagram::from_weights(a, b);
                if is_orientable_kn(&d) {
                    assert!(is_orientable_k(&d));
                }
            }
        }
    }
}

#[test]
fn very_typical_count() {
    for n in 1..4usize {
        for shift in 0..5i64 {
            let mu = w(&(0..n as i64).map(|i| 40 - 5 * i + shift).collect::<Vec<_>>());
            let count = weights_in_window(n, 0, 60)
                .iter()
                .filter(|lam| {
                    is_orientable_k(&CircleDiagram::from_weights(lam, &mu))
                        && trace_components(&CircleDiagram::from_weights(lam, &mu)).non_propagating().next().is_none()
                })
                .count();
            assert_eq!(count, 1 << n);
        }
    }
}

#[test]
fn line_accounting_balances() {
    for n in 0..3 {
        let ws = weights_in_window(n, -3, 3);
        for a in &ws {
            for b in &ws {
                let r = trace_components(&CircleDiagram::from_weights(a, b));
                let bottoms = r.lines.iter().flat_map(|l| [l.ends.0, l.ends.1]).filter(|e| !e.is_top()).count();
                let tops = r.lines.iter().flat_map(|l| [l.ends.0, l.ends.1]).filter(|e| e.is_top()).count();
                assert_eq!(bottoms, tops);
                let bb = r.non_propagating().filter(|l| !l.ends.0.is_top()).count();
                let tt = r.non_propagating().filter(|l| l.ends.0.is_top()).count();
                assert_eq!(bb, tt);
            }
        }
    }
}

#[test]
fn block_signature_examples() {
    assert_eq!(block_signature(&w(&[2, -1])), 1);
    assert_eq!(block_signature(&w(&[])), 0);
    assert_eq!(block_signature(&w(&[3, 1])), 2);
}

#[test]
fn weight_json() {
    let lam: Weight = serde_json::from_str("[3,0,-2]").unwrap();
    assert_eq!(lam, w(&[3, 0, -2]));
    assert!(serde_json::from_str::<Weight>("[0,3]").is_err());
    assert_eq!(serde_json::to_string(&lam).unwrap(), "[3,0,-2]");
}
