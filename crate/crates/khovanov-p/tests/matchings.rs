use khovanov_p::algebra::{hom_dim, Mode};
use khovanov_p::diagrams::*;
use khovanov_p::matchings::*;
use khovanov_p::tableaux::{reduce_residue_seq, seq_realizable, seq_realizable_empty_shape};

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec()).unwrap()
}

#[test]
fn special_matching_and_transforms() {
    let t0 = special_matching(0);
    assert_eq!(t0.bottom_arcs(), &[(-1, 0)]);
    assert_eq!(t0.top_arcs(), &[(-1, 0)]);
    for i in -4..5 {
        assert_eq!(special_matching(i).ddagger(), special_matching(i + 1));
        assert_eq!(special_matching(i).dagger(), special_matching(-i));
    }
    let m = CrossinglessMatching::new(vec![(0, 3), (1, 2)], vec![(-2, -1), (4, 5)]).unwrap();
    assert_eq!(m.dagger().dagger(), m);
    assert_eq!(m.star().star(), m);
    assert!(CrossinglessMatching::new(vec![(0, 1)], vec![]).is_err());
}

#[test]
fn throughs_are_planar_and_identity_outside() {
    let m = CrossinglessMatching::new(vec![(0, 1)], vec![(5, 6)]).unwrap();
    assert_eq!(m.throughs(), vec![(2, 0), (3, 1), (4, 2), (5, 3), (6, 4)]);
    assert_eq!(m.through_from_bottom(-7), Some(-7));
    assert_eq!(m.through_from_bottom(0), None);
    assert_eq!(m.through_from_bottom(3), Some(1));
}

#[test]
fn reduce_examples() {
    for i in -3..4 {
        let (_, c) = reduce(&special_layers(&[i, i]));
        assert_eq!(c, 1);
        assert_eq!(reduce(&[special_matching(i)]), (special_matching(i), 0));
        // t^{i+1} below t^i.
        let (m, c) = reduce(&special_layers(&[i + 1, i]));
        assert_eq!(c, 0);
        assert_eq!(m.bottom_arcs(), &[(i, i + 1)]);
        assert_eq!(m.top_arcs(), &[(i - 1, i)]);
        assert_eq!(m.through_from_bottom(i - 1), Some(i + 1));
    }
}

fn seqs(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (lo..=hi).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

#[test]
fn reduce_is_functorial() {
    for s in seqs(4, -2, 2) {
        let layers = special_layers(&s);
        let (whole, c) = reduce(&layers);
        for cut in 0..=s.len() {
            let (lo, c1) = reduce(&layers[..cut]);
            let (hi, c2) = reduce(&layers[cut..]);
            let (again, c3) = reduce(&[lo, hi]);
            assert_eq!(again, whole, "{s:?} cut {cut}");
            assert_eq!(c1 + c2 + c3, c, "{s:?} cut {cut}");
        }
    }
}

#[test]
fn stack_orientability_survives_reduction() {
    let ws = weights_in_window(1, -2, 2);
    for s in seqs(3, -2, 2) {
        for a in &ws {
            for b in &ws {
                let st = StackedDiagram::new(cup_from_weight(a), special_layers(&s), cap_from_weight(b));
                let (red, c) = st.reduced();
                let expect = c == 0 && stacked_orientable(&red);
                assert_eq!(stacked_orientable(&st), expect, "{s:?} {a} {b}");
            }
        }
    }
}

#[test]
fn ured_examples() {
    assert_eq!(ured(&special_matching(0), &CapDiagram::empty()), Some(cap_from_weight(&w(&[-1]))));
    for lam in weights_in_window(2, -2, 2) {
        let b = cap_from_weight(&lam);
        assert_eq!(ured(&CrossinglessMatching::identity(), &b), Some(b.clone()));
        let a = cup_from_weight(&lam);
        assert_eq!(lred(&a, &CrossinglessMatching::identity()), Some(a));
    }
    // A circle appears when the arc meets a cap with the same ends.
    assert_eq!(ured(&special_matching(1), &cap_from_weight(&w(&[0]))), None);
}

/// Target residue sequences of up-tableaux of shape δ_n.
fn delta_sequences(n: usize) -> Vec<Vec<i64>> {
    let size = n * (n + 1) / 2;
    let target = khovanov_p::tableaux::Partition::staircase(n);
    seqs(size, -(n as i64), n as i64)
        .into_iter()
        .filter(|s| {
            khovanov_p::tableaux::is_up_tableau_residue_seq(s)
                && khovanov_p::tableaux::tableaux_with_residues(s, khovanov_p::tableaux::ResidueFlavor::Target)
                    .contains_key(&target)
        })
        .collect()
}

#[test]
fn translation_chain_over_staircase() {
    for n in 1..4usize {
        let found = delta_sequences(n);
        assert!(found.len() >= if n == 1 { 1 } else { 2 });
        let expect = cap_from_weight(&w(&(0..n as i64).map(|j| n as i64 - 2 - 2 * j).collect::<Vec<_>>()));
        for s in &found {
            let mut cap = CapDiagram::empty();
            for &i in s {
                cap = ured(&special_matching(i), &cap).unwrap();
            }
            assert_eq!(cap, expect, "{s:?}");
        }
    }
}

fn literal_same_side(st: &StackedDiagram) -> bool {
    let r = st.components();
    r.circles == 0
        && r.non_propagating().all(|l| {
            let (a, b) = (l.ends.0.raw(), l.ends.1.raw());
            a.min(b) <= -1 && a.max(b) >= 0
        })
}

#[test]
fn tableau_bridge() {
    let mut literal_mismatch = 0;
    for len in 0..=6 {
        for s in seqs(len, -3, 3) {
            let st = StackedDiagram::from_residues(&s);
            assert_eq!(seq_realizable_empty_shape(&s), stacked_orientable(&st), "{s:?}");
            literal_mismatch += (literal_same_side(&st) != stacked_orientable(&st)) as usize;
        }
    }
    // The literal reading of the side condition disagrees already on (0,-1).
    assert!(!literal_same_side(&StackedDiagram::from_residues(&[0, -1])));
    assert!(literal_mismatch > 0);
}

#[test]
fn reduction_preserves_stacked_orientability() {
    for len in 0..=6 {
        for s in seqs(len, -2, 2) {
            if !seq_realizable(&s) {
                continue;
            }
            let r = reduce_residue_seq(&s).unwrap();
            assert_eq!(
                stacked_orientable(&StackedDiagram::from_residues(&s)),
                stacked_orientable(&StackedDiagram::from_residues(&r)),
                "{s:?} -> {r:?}"
            );
        }
    }
}

#[test]
fn adjunction_dimensions() {
    for n in 1..3usize {
        let mode = Mode::Kn(n);
        let ws = weights_in_window(n, -3, 3);
        for i in -3..4 {
            for lam in &ws {
                let nu = ured_clean(&special_matching(i + 1), &cap_from_weight(lam)).map(|c| c.weight());
                for mu in &ws {
                    let rho = ured_clean(&special_matching(i), &cap_from_weight(mu)).map(|c| c.weight());
                    let left = nu.as_ref().map_or(0, |nu| hom_dim(nu, mu, mode));
                    let right = rho.as_ref().map_or(0, |rho| hom_dim(lam, rho, mode));
                    assert_eq!(left, right, "i={i} λ={lam} μ={mu}");
                }
            }
        }
    }
}

#[test]
fn figure_orientation_of_crossing_matching() {
    let t = CrossinglessMatching::new(vec![(-3, 2), (-2, -1), (0, 1)], vec![(0, 1), (-1, 2), (-4, -3)]).unwrap();
    let gamma = w(&[2, -1, -2, -3, -5]);
    let mu = w(&[0, -1, -2, -4, -5]);
    assert!(layer_oriented(&t, &mu, &gamma));
    assert!(oriented_middle_weights(&t, &gamma).contains(&mu));
}

#[test]
fn middle_weights_examples() {
    for lam in weights_in_window(2, -2, 2) {
        assert_eq!(oriented_middle_weights(&CrossinglessMatching::identity(), &lam), vec![lam.clone()]);
        assert_eq!(costandard_middle_weights(&CrossinglessMatching::identity(), &lam), vec![lam.clone()]);
    }
}

#[test]
fn stacked_orientation_examples() {
    for lam in weights_in_window(2, -2, 2) {
        let st = StackedDiagram::new(cup_from_weight(&lam), vec![], cap_from_weight(&lam));
        assert_eq!(stacked_orientation(&st).unwrap().weights, vec![lam.clone()]);
    }
    // A single-layer stack is oriented exactly when it is K_n-orientable.
    let ws = weights_in_window(1, -3, 3);
    for i in -2..3 {
        for a in &ws {
            for b in &ws {
                let st = StackedDiagram::new(cup_from_weight(a), vec![special_matching(i)], cap_from_weight(b));
                assert_eq!(stacked_orientation(&st).is_some(), stacked_orientable_kn(&st), "{i} {a} {b}");
            }
        }
    }
}

#[test]
fn bimodule_maps() {
    for i in -2..3 {
        for lam in weights_in_window(1, -3, 3) {
            let a = cup_from_weight(&lam);
            let b = cap_from_weight(&lam);
            let word = vec![i];
            if !stacked_orientable(&StackedDiagram::new(a.clone(), special_layers(&word), b.clone())) {
                continue;
            }
            let up = eps(i + 1, 0, &a, &word, &b).unwrap();
            if let Some(up) = up {
                assert_eq!(up, vec![i, i + 1, i]);
                assert_eq!(eta(i, 1, &a, &up, &b).unwrap(), Some(word.clone()));
            }
        }
    }
    let a = CupDiagram::empty();
    let b = CapDiagram::empty();
    for i in -3..4 {
        for j in -3..4 {
            let word = vec![i, j];
            let there = psi(i, j, 0, &a, &word, &b).unwrap();
            if (i - j).abs() > 1 {
                let back = psi(j, i, 0, &a, &there.clone().unwrap(), &b).unwrap();
                assert_eq!(back, Some(word.clone()));
            }
            if j == i || j == i - 1 {
                assert_eq!(there, None);
            }
        }
    }
    assert!(eta(0, 0, &a, &[0, 0], &b).is_err());
    let circle_cup = CupDiagram::new(vec![(4, 5)]).unwrap();
    let circle_cap = CapDiagram::new(vec![(4, 5)]).unwrap();
    assert_eq!(eta(-3, 0, &circle_cup, &[-2, -3], &circle_cap).unwrap(), None);
}
