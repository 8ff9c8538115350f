use khovanov_p::algebra::star_weight;
use khovanov_p::diagrams::*;
use khovanov_p::matchings::{special_matching, CrossinglessMatching};
use khovanov_p::modules::*;
use khovanov_p::orientation::{delta_flag, x_weights, y_weights};

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec()).unwrap()
}

fn class(ws: &[&[i64]]) -> GrothendieckClass {
    ws.iter().map(|v| w(v)).collect()
}

#[test]
fn projectives_for_n1() {
    for k in -5..6 {
        let p = build_projective(&w(&[k])).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.composition_factors(), class(&[&[k], &[k + 2]]));
        let d = build_standard(&w(&[k])).unwrap();
        assert_eq!(d.composition_factors(), p.composition_factors());
        assert_eq!(radical_filtration(&p).unwrap(), vec![class(&[&[k]]), class(&[&[k + 2]])]);
        assert_eq!(socle_filtration(&p).unwrap(), vec![class(&[&[k]]), class(&[&[k + 2]])]);
        assert_eq!(delta_flag(&w(&[k])), vec![w(&[k])]);
    }
}

#[test]
fn projective_2_minus1() {
    let p = build_projective(&w(&[2, -1])).unwrap();
    assert_eq!(p.dim(), 5);
    assert_eq!(p.composition_factors(), class(&[&[2, -1], &[4, -1], &[3, 2], &[2, 1], &[4, 1]]));
    let rad = radical_filtration(&p).unwrap();
    assert_eq!(rad, vec![class(&[&[2, -1]]), class(&[&[4, -1], &[3, 2]]), class(&[&[2, 1]]), class(&[&[4, 1]])]);
    let soc = socle_filtration(&p).unwrap();
    assert_eq!(soc, vec![class(&[&[2, -1]]), class(&[&[3, 2]]), class(&[&[4, -1], &[2, 1]]), class(&[&[4, 1]])]);
    assert_ne!(rad, soc);
    p.verify_action().unwrap();
}

#[test]
fn simples() {
    for lam in weights_in_window(2, -2, 2) {
        let l = build_simple(&lam).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(
            l.action(&CircleDiagram::idempotent(&lam)).get(0, 0),
            &num_rational::BigRational::from_integer(1.into())
        );
        assert_eq!(radical_filtration(&l).unwrap(), vec![class(&[lam.entries()])]);
        assert_eq!(socle_filtration(&l).unwrap(), vec![class(&[lam.entries()])]);
        l.verify_action().unwrap();
    }
}

#[test]
fn actions_are_sound() {
    for n in 1..3 {
        for lam in weights_in_window(n, -2, 3) {
            for kind in [ModuleKind::Projective, ModuleKind::Standard, ModuleKind::Costandard] {
                let m = build(kind, &lam).unwrap();
                m.verify_action().unwrap_or_else(|e| panic!("{kind:?}({lam}): {e}"));
                let total = m.composition_factors().total();
                let rad = radical_filtration(&m).unwrap();
                let soc = socle_filtration(&m).unwrap();
                assert_eq!(rad.iter().fold(GrothendieckClass::new(), |a, c| a.add(c)), m.composition_factors());
                assert_eq!(soc.iter().fold(GrothendieckClass::new(), |a, c| a.add(c)), m.composition_factors());
                assert_eq!(total, m.dim());
                match kind {
                    // Standard modules have simple head, costandard modules simple socle.
                    ModuleKind::Standard | ModuleKind::Projective => {
                        assert_eq!(rad[0], class(&[lam.entries()]), "{kind:?}({lam})")
                    }
                    ModuleKind::Costandard => assert_eq!(soc.last().unwrap(), &class(&[lam.entries()])),
                    ModuleKind::Simple => {}
                }
            }
        }
    }
}

#[test]
fn delta_flags_give_dimensions_and_reciprocity() {
    for n in 1..4 {
        for lam in weights_in_window(n, -2, 3) {
            let p = build_projective(&lam).unwrap();
            let flag = delta_flag(&lam);
            assert_eq!(flag.iter().filter(|mu| **mu == lam).count(), 1);
            let via_flag: usize = flag.iter().map(|mu| y_weights(mu).len()).sum();
            assert_eq!(p.dim(), via_flag, "{lam}");
            assert_eq!(flag_class(ModuleKind::Standard, &flag).unwrap(), p.composition_factors());
            // [P(λ) : Δ(μ)] = [∇(μ) : L(λ)].
            for mu in &flag {
                assert!(x_weights(mu).contains(&lam));
            }
        }
    }
}

#[test]
fn p2_flag_groups_the_basis() {
    let flag = delta_flag(&w(&[2, -1]));
    let p = build_projective(&w(&[2, -1])).unwrap();
    let mut grouped = GrothendieckClass::new();
    for b in &p.basis {
        let o = khovanov_p::orientation::orientation_of(&b.diagram).unwrap();
        assert!(flag.contains(&o));
        grouped.add_simple(b.tag.clone(), 1);
    }
    assert_eq!(grouped, p.composition_factors());
}

fn windows(n: usize) -> Vec<Weight> {
    weights_in_window(n, -3, 3)
}

#[test]
fn theta_identity_rules() {
    let id = CrossinglessMatching::identity();
    for lam in windows(2) {
        assert_eq!(theta_on_projective(&id, &lam), Some(lam.clone()));
        assert_eq!(theta_on_standard(&id, &lam), ThetaFlag { flag: vec![lam.clone()], end: Some(lam.clone()) });
        assert_eq!(theta_on_costandard(&id, &lam), ThetaFlag { flag: vec![lam.clone()], end: Some(lam.clone()) });
        let s = theta_on_simple(&id, &lam);
        assert_eq!(s.class, class(&[lam.entries()]));
        assert!(s.nonzero);
        assert_eq!(s.head, Some(lam.clone()));
        assert_eq!(s.socle, Some(lam.clone()));
    }
    // A circle kills the projective.
    assert_eq!(theta_on_projective(&special_matching(1), &w(&[0])), None);
}

#[test]
fn theta_standard_matches_projective() {
    for n in 1..3 {
        for i in -3..4 {
            let t = special_matching(i);
            for gamma in windows(n) {
                let mut union = Vec::new();
                for nu in delta_flag(&gamma) {
                    let r = theta_on_standard(&t, &nu);
                    assert_eq!(r.flag.is_empty(), r.end.is_none());
                    if let Some(h) = &r.end {
                        assert_eq!(r.flag.last(), Some(h), "head is the top of the flag");
                    }
                    union.extend(r.flag);
                }
                union.sort_by_key(|w| w.order_key());
                let expect = theta_on_projective(&t, &gamma).map(|nu| delta_flag(&nu)).unwrap_or_default();
                assert_eq!(union, expect, "t^{i} γ={gamma}");
            }
        }
    }
}

fn sum_simple_classes(t: &CrossinglessMatching, ws: &[Weight]) -> GrothendieckClass {
    ws.iter().fold(GrothendieckClass::new(), |a, mu| a.add(&theta_on_simple(t, mu).class))
}

#[test]
fn theta_classes_are_exact() {
    for n in 1..3 {
        for i in -2..3 {
            let t = special_matching(i);
            for gamma in windows(n) {
                // Projective route.
                let p = build_projective(&gamma).unwrap().composition_factors();
                let via_simples = sum_simple_classes(&t, &p.weights());
                let direct = match theta_on_projective(&t, &gamma) {
                    Some(nu) => build_projective(&nu).unwrap().composition_factors(),
                    None => GrothendieckClass::new(),
                };
                assert_eq!(via_simples, direct, "P t^{i} γ={gamma}");
                // Standard route.
                let d = theta_on_standard(&t, &gamma);
                let via_simples = sum_simple_classes(&t, &y_weights(&gamma));
                assert_eq!(flag_class(ModuleKind::Standard, &d.flag).unwrap(), via_simples, "Δ t^{i} γ={gamma}");
                // Costandard route.
                let c = theta_on_costandard(&t, &gamma);
                let via_simples = sum_simple_classes(&t, &x_weights(&gamma));
                assert_eq!(flag_class(ModuleKind::Costandard, &c.flag).unwrap(), via_simples, "∇ t^{i} γ={gamma}");
                if let Some(s) = &c.end {
                    assert_eq!(c.flag.first(), Some(s), "socle is the bottom of the flag");
                }
                // Simple route: nonzero test, head and socle.
                let s = theta_on_simple(&t, &gamma);
                assert_eq!(s.nonzero, !s.class.is_zero(), "L t^{i} γ={gamma}");
                if let Some(h) = &s.head {
                    assert!(s.class.multiplicity(h) > 0);
                    assert!(s.class.multiplicity(s.socle.as_ref().unwrap()) > 0);
                }
            }
        }
    }
}

#[test]
fn theta_commutes_with_duality_on_simples() {
    for n in 1..3 {
        for i in -2..3 {
            let t = special_matching(i);
            for lam in windows(n) {
                let here: GrothendieckClass =
                    theta_on_simple(&t, &lam).class.weights().iter().map(star_weight).collect();
                let there = theta_on_simple(&t.dagger(), &star_weight(&lam)).class;
                assert_eq!(here, there, "t^{i} λ={lam}");
            }
        }
    }
}
