//! Shared fixtures and randomized property drivers used by both the
//! standalone property suite and the acceptance suite.
#![allow(dead_code)] // each test target exercises a different subset

use rand::prelude::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hybridstab::code::{build_gkp18_with_transversal, build_motivating, HybridCode};
use hybridstab::correct::check_errors;
use hybridstab::oracle::{max_abs, Oracle, UNITARY_TOL};
use hybridstab::PauliOperator;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_pauli(rng: &mut ChaCha8Rng, dim: u64, num_sites: usize) -> PauliOperator {
    let x: Vec<i64> = (0..num_sites).map(|_| rng.random_range(0..dim) as i64).collect();
    let z: Vec<i64> = (0..num_sites).map(|_| rng.random_range(0..dim) as i64).collect();
    let phase = rng.random_range(0..2 * dim) as i64;
    PauliOperator::from_exponents(dim, phase, &x, &z).unwrap()
}

/// A randomized small hybrid code from the product family: random (d, n, s,
/// r) with a random transversal subset (identity always first).
pub fn random_small_code(rng: &mut ChaCha8Rng) -> HybridCode {
    let dim = *[2u64, 2, 2, 3].choose(rng).unwrap();
    let n = rng.random_range(2..=4usize);
    let s = rng.random_range(1..=n.min(2));
    let r = if n - s > 0 && rng.random_bool(0.5) { 1 } else { 0 };
    let code = build_motivating(dim, n, s, r).unwrap();
    let full = code.transversal().to_vec();
    let mut transversal = vec![full[0].clone()];
    let max_extra = (full.len() - 1).min(3);
    let extra = rng.random_range(0..=max_extra);
    let mut pool: Vec<PauliOperator> = full[1..].to_vec();
    for _ in 0..extra {
        let idx = rng.random_range(0..pool.len());
        transversal.push(pool.swap_remove(idx));
    }
    code.with_transversal(transversal).unwrap()
}

/// As [`random_small_code`] but restricted to qubits on at most 4 sites,
/// keeping d^n ≤ 64 for dense-oracle cross checks.
pub fn random_small_qubit_code(rng: &mut ChaCha8Rng) -> HybridCode {
    let n = rng.random_range(2..=4usize);
    let s = rng.random_range(1..=n.min(2));
    let r = if n - s > 0 && rng.random_bool(0.5) { 1 } else { 0 };
    let code = build_motivating(2, n, s, r).unwrap();
    let full = code.transversal().to_vec();
    let mut transversal = vec![full[0].clone()];
    let max_extra = (full.len() - 1).min(3);
    let extra = rng.random_range(0..=max_extra);
    let mut pool: Vec<PauliOperator> = full[1..].to_vec();
    for _ in 0..extra {
        let idx = rng.random_range(0..pool.len());
        transversal.push(pool.swap_remove(idx));
    }
    code.with_transversal(transversal).unwrap()
}

/// A random element of N(S) for a product-family code: a product of
/// stabilizer, gauge and logical generators with a random phase.
pub fn random_normalizer_element(rng: &mut ChaCha8Rng, code: &HybridCode) -> PauliOperator {
    let d = code.qudit_dim();
    let n = code.num_sites();
    let mut acc = PauliOperator::scalar(d, n, rng.random_range(0..2 * d) as i64);
    let mut gens: Vec<PauliOperator> = code.stabilizer().generators().to_vec();
    gens.extend(code.gauge_elements().into_iter().cloned());
    gens.extend(code.logical_elements().into_iter().cloned());
    for g in gens {
        let e = rng.random_range(0..d) as i64;
        if e != 0 {
            acc = acc.multiply(&g.pow(e)).unwrap();
        }
    }
    acc
}

pub fn random_error_set(
    rng: &mut ChaCha8Rng,
    dim: u64,
    num_sites: usize,
    max_len: usize,
) -> Vec<PauliOperator> {
    let len = rng.random_range(1..=max_len);
    let mut errors = vec![PauliOperator::identity(dim, num_sites)];
    for _ in 1..len {
        errors.push(random_pauli(rng, dim, num_sites));
    }
    errors
}

/// d=18 single-qudit code with a random transversal subset of the 9-element
/// coset transversal.
pub fn random_gkp_code(rng: &mut ChaCha8Rng) -> HybridCode {
    let x = PauliOperator::single_x(18, 1, 0, 1);
    let z = PauliOperator::single_z(18, 1, 0, 1);
    let mut pool = Vec::new();
    for a in -1i64..=1 {
        for b in -1i64..=1 {
            if a != 0 || b != 0 {
                pool.push(x.pow(a).multiply(&z.pow(b)).unwrap());
            }
        }
    }
    let mut t0 = vec![PauliOperator::identity(18, 1)];
    let extra = rng.random_range(0..=2usize);
    for _ in 0..extra {
        let idx = rng.random_range(0..pool.len());
        t0.push(pool.swap_remove(idx));
    }
    build_gkp18_with_transversal(Some(t0)).unwrap()
}

// ---- property drivers (each runs `cases` randomized checks) ----

pub fn property_pauli_associativity(cases: usize, seed: u64) {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let dim = *[2u64, 3, 5, 18].choose(&mut rng).unwrap();
        let n = rng.random_range(1..=4usize);
        let a = random_pauli(&mut rng, dim, n);
        let b = random_pauli(&mut rng, dim, n);
        let c = random_pauli(&mut rng, dim, n);
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

pub fn property_dense_homomorphism(cases: usize, seed: u64) {
    let mut rng = rng(seed);
    let oracle = Oracle::with_cap(64);
    for _ in 0..cases {
        let (dim, n) = *[(2u64, 3usize), (2, 2), (3, 2), (18, 1)].choose(&mut rng).unwrap();
        let a = random_pauli(&mut rng, dim, n);
        let b = random_pauli(&mut rng, dim, n);
        let lhs = oracle.render(&a.multiply(&b).unwrap()).unwrap();
        let rhs = oracle.render(&a).unwrap() * oracle.render(&b).unwrap();
        assert!(max_abs(&(lhs - rhs)) < UNITARY_TOL);
    }
}

pub fn property_same_coset_equivalence(cases: usize, seed: u64) {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let code = random_small_code(&mut rng);
        let s = code.stabilizer();
        let d = code.qudit_dim();
        let n = code.num_sites();
        let a = random_pauli(&mut rng, d, n);
        // force related elements half the time so transitivity bites
        let b = if rng.random_bool(0.5) {
            a.multiply(&random_normalizer_element(&mut rng, &code)).unwrap()
        } else {
            random_pauli(&mut rng, d, n)
        };
        let c = if rng.random_bool(0.5) {
            b.multiply(&random_normalizer_element(&mut rng, &code)).unwrap()
        } else {
            random_pauli(&mut rng, d, n)
        };
        assert!(s.same_coset(&a, &a), "reflexive");
        assert_eq!(s.same_coset(&a, &b), s.same_coset(&b, &a), "symmetric");
        if s.same_coset(&a, &b) && s.same_coset(&b, &c) {
            assert!(s.same_coset(&a, &c), "transitive");
        }
    }
}

pub fn property_coset_representative_invariance(cases: usize, seed: u64) {
    let mut rng = rng(seed);
    let mut done = 0usize;
    while done < cases {
        let code = random_small_code(&mut rng);
        if code.sector_count() < 2 {
            continue;
        }
        let errors = random_error_set(&mut rng, code.qudit_dim(), code.num_sites(), 4);
        let before = check_errors(&code, &errors).unwrap();
        // multiply one non-identity representative by a normalizer element
        let mut t = code.transversal().to_vec();
        let idx = rng.random_range(1..t.len());
        let n_el = random_normalizer_element(&mut rng, &code);
        t[idx] = t[idx].multiply(&n_el).unwrap();
        let moved = code.clone().with_transversal(t).unwrap();
        let after = check_errors(&moved, &errors).unwrap();
        assert_eq!(before.verdict, after.verdict);
        assert_eq!(before.per_sector, after.per_sector);
        done += 1;
    }
}

pub fn property_phase_invariance(cases: usize, seed: u64) {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let code = random_small_code(&mut rng);
        let errors = random_error_set(&mut rng, code.qudit_dim(), code.num_sites(), 4);
        let before = check_errors(&code, &errors).unwrap();
        let phased: Vec<PauliOperator> = errors
            .iter()
            .map(|e| e.with_extra_phase(rng.random_range(0..2 * code.qudit_dim()) as i64))
            .collect();
        let after = check_errors(&code, &phased).unwrap();
        assert_eq!(before.verdict, after.verdict);
        assert_eq!(before.per_sector, after.per_sector);
    }
}

pub fn property_syndrome_additivity(cases: usize, seed: u64) {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let code = random_small_code(&mut rng);
        let d = code.qudit_dim();
        let a = random_pauli(&mut rng, d, code.num_sites());
        let b = random_pauli(&mut rng, d, code.num_sites());
        let sa = code.syndrome(&a).unwrap();
        let sb = code.syndrome(&b).unwrap();
        let sab = code.syndrome(&a.multiply(&b).unwrap()).unwrap();
        for j in 0..sa.len() {
            assert_eq!(sab[j], (sa[j] + sb[j]) % d);
        }
    }
}
