use khovanov_p::tableaux::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn example_t() -> UpDownTableau {
    UpDownTableau::from_shapes(&[p(&[1]), p(&[2]), p(&[2, 1]), p(&[1, 1])]).unwrap()
}

fn example_s() -> UpDownTableau {
    UpDownTableau::from_shapes(&[p(&[1]), p(&[2]), p(&[1]), p(&[]), p(&[1]), p(&[1, 1])]).unwrap()
}

#[test]
fn residue_examples() {
    let t = example_t();
    assert_eq!(residue_seq(&t, ResidueFlavor::Source), vec![0, 1, -1, 2]);
    assert_eq!(residue_seq(&t, ResidueFlavor::Target), vec![0, 1, -1, 0]);
    let s = example_s();
    assert_eq!(residue_seq(&s, ResidueFlavor::Source), vec![0, 1, 2, 1, 0, -1]);
    assert_eq!(residue_seq(&s, ResidueFlavor::Target), vec![0, 1, 0, -1, 0, -1]);
    let e = UpDownTableau::new(vec![]).unwrap();
    assert!(residue_seq(&e, ResidueFlavor::Target).is_empty());
}

#[test]
fn invalid_tableaux_rejected() {
    assert!(UpDownTableau::new(vec![SignedBox { add: false, row: 1, col: 1 }]).is_err());
    assert!(UpDownTableau::new(vec![SignedBox { add: true, row: 2, col: 1 }]).is_err());
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(UpDownTableau::from_shapes(&[p(&[2])]).is_err());
}

#[test]
fn enumeration_examples() {
    let two = enumerate_udt(2, &p(&[]));
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].shapes(), vec![p(&[1]), p(&[])]);
    assert_eq!(enumerate_udt(1, &p(&[1])).len(), 1);
    assert!(enumerate_udt(3, &p(&[])).is_empty());
    let total: usize = count_udt_by_shape(2).values().map(|c| c * c).sum();
    assert_eq!(total, 3);
    for len in 0..7 {
        for (shape, c) in count_udt_by_shape(len) {
            assert_eq!(enumerate_udt(len, &shape).len(), c);
        }
    }
}

#[test]
fn staircase_criteria() {
    assert!(is_zero_for(&p(&[2, 1]), 1));
    assert!(is_projective_for(&p(&[1]), 1));
    assert!(!is_zero_for(&p(&[1]), 1));
    for n in 1..4 {
        assert!(!is_projective_for(&p(&[]), n));
    }
    assert!(contains_delta(&p(&[3, 3, 1]), 3));
    assert!(!contains_delta(&p(&[3, 1, 1]), 3));
}

#[test]
fn realizability_examples() {
    assert!(seq_realizable_empty_shape(&[0, -1]));
    assert!(!seq_realizable_empty_shape(&[0]));
    assert!(!seq_realizable_empty_shape(&[1, -1]));
    assert!(seq_realizable_empty_shape(&[]));
    assert!(seq_realizable(&[0, 1, -1, 0]));
}

#[test]
fn reduction_examples() {
    assert_eq!(reduce_residue_seq(&[0, 1, 0]).unwrap(), vec![0]);
    assert_eq!(reduce_residue_seq(&[0, 1, -1]).unwrap(), vec![0, 1, -1]);
    assert_eq!(reduce_residue_seq(&[0, -1, 0]).unwrap(), vec![0]);
    assert!(reduce_residue_seq(&[3]).is_err());
    // Distant entries commute past the pattern.
    assert_eq!(reduce_residue_seq(&[0, 1, -1, 0]).unwrap(), vec![0, 1, -1, 0]);
}

fn all_seqs(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
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
fn reduction_keeps_realizability_and_ends_in_up_tableaux() {
    for len in 0..7 {
        for s in all_seqs(len, -3, 3) {
            if !seq_realizable(&s) {
                continue;
            }
            let r = reduce_residue_seq(&s).unwrap();
            assert!(seq_realizable(&r), "{s:?} -> {r:?}");
            assert!(find_reducible_pattern(&r).is_none());
        }
    }
}

#[test]
fn hom_dim_examples() {
    assert_eq!(sg_hom_dim(&[0], &[0]), 1);
    assert!(sg_hom_dim(&[0, 1, -1, 2], &[0, 1, 0, -1, 0, -1]) >= 1);
    assert_eq!(sg_hom_dim(&[0], &[0, -1]), 0);
}

#[test]
fn grading_examples() {
    let z = grading_function(0, -3, 3);
    assert!(z.values().all(|&v| v == 0));
    assert!(is_grading_function(&z));
    let f = grading_function(1, -3, 3);
    assert_eq!(f[&(0, 2)], 1);
    assert!(is_grading_function(&f));
    assert_eq!(grading_constant(&f), Some(1));
    let mut bad = f.clone();
    *bad.get_mut(&(0, 2)).unwrap() = -1;
    assert!(!is_grading_function(&bad));
    assert_eq!(grading_constant(&bad), None);
}

#[test]
fn grading_conditions_characterize_closed_form() {
    // Exhaustive over {-1,0,1}-valued tables on a small window.
    let (lo, hi) = (0, 3);
    let keys: Vec<(i64, i64)> = grading_function(0, lo, hi).keys().copied().collect();
    let total = 3usize.pow(keys.len() as u32);
    let mut passing = 0;
    for code in 0..total {
        let mut c = code;
        let mut t = GradingTable::new();
        for &k in &keys {
            t.insert(k, (c % 3) as i64 - 1);
            c /= 3;
        }
        assert_eq!(is_grading_function(&t), grading_constant(&t).is_some(), "{t:?}");
        passing += is_grading_function(&t) as usize;
    }
    assert_eq!(passing, 3);
}
