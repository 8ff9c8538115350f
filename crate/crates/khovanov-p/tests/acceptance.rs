//! Runs the acceptance suite and prints one line per criterion.

use khovanov_p::acceptance::{run_criterion, DEFAULT_SEED};

fn check(id: u8) {
    let r = run_criterion(id, DEFAULT_SEED).unwrap();
    println!("{r}");
    assert!(r.passed, "{r}");
}

#[test]
fn criterion_01_associativity() {
    check(1);
}

#[test]
fn criterion_02_surgery_commutation() {
    check(2);
}

#[test]
fn criterion_03_unique_orientation() {
    check(3);
}

#[test]
fn criterion_04_triangular_basis() {
    check(4);
}

#[test]
fn criterion_05_p1_structure() {
    check(5);
}

#[test]
fn criterion_06_p2_structure() {
    check(6);
}

#[test]
fn criterion_07_typical_count() {
    check(7);
}

#[test]
fn criterion_08_translation_chain() {
    check(8);
}

#[test]
fn criterion_09_adjunction() {
    check(9);
}

#[test]
fn criterion_10_tableau_bridge() {
    check(10);
}

#[test]
fn criterion_11_ext_criterion() {
    check(11);
}

#[test]
fn criterion_12_duality() {
    check(12);
}

#[test]
fn criterion_13_irreducible_summands() {
    check(13);
}

#[test]
fn criterion_14_counting_oracle() {
    check(14);
}
