//! Standalone randomized property suites: each drives at least 1000 cases
//! through a seeded generator.
//!
//! Run alone with `cargo test --test properties`.

#[path = "support/mod.rs"]
mod common;

const CASES: usize = 1000;

#[test]
fn pauli_associativity() {
    common::property_pauli_associativity(CASES, 11);
}

#[test]
fn pauli_dense_homomorphism() {
    common::property_dense_homomorphism(CASES, 13);
}

#[test]
fn same_coset_is_an_equivalence_relation() {
    common::property_same_coset_equivalence(CASES, 17);
}

#[test]
fn verdicts_invariant_under_coset_representative_choice() {
    common::property_coset_representative_invariance(CASES, 19);
}

#[test]
fn verdicts_invariant_under_scalar_phases() {
    common::property_phase_invariance(CASES, 23);
}

#[test]
fn syndromes_are_additive() {
    common::property_syndrome_additivity(CASES, 29);
}
