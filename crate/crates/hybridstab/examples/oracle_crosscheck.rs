//! Randomized cross-validation: the group-theoretic verdict of
//! `check_errors` against the dense operator-algebra conditions, on small
//! random codes and error sets.
//!
//! ```bash
//! cargo run --example oracle_crosscheck
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hybridstab::code::{build_gkp18, build_motivating};
use hybridstab::correct::check_errors;
use hybridstab::oracle::Oracle;
use hybridstab::PauliOperator;

fn random_pauli(rng: &mut ChaCha8Rng, dim: u64, n: usize) -> PauliOperator {
    let x: Vec<i64> = (0..n).map(|_| rng.random_range(0..dim) as i64).collect();
    let z: Vec<i64> = (0..n).map(|_| rng.random_range(0..dim) as i64).collect();
    PauliOperator::from_exponents(dim, rng.random_range(0..2 * dim) as i64, &x, &z).unwrap()
}

fn main() -> hybridstab::Result<()> {
    let oracle = Oracle::with_cap(64);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut agree = 0usize;
    let mut total = 0usize;

    for trial in 0..60 {
        // random qubit code from the product family with a random transversal
        let n = rng.random_range(2..=4usize);
        let s = rng.random_range(1..=n.min(2));
        let r = usize::from(n - s > 0 && rng.random_bool(0.5));
        let base = build_motivating(2, n, s, r)?;
        let full = base.transversal().to_vec();
        let keep = rng.random_range(1..=full.len().min(3));
        let code = base.with_transversal(full[..keep].to_vec())?;

        let mut errors = vec![PauliOperator::identity(2, n)];
        for _ in 0..rng.random_range(1..=3usize) {
            errors.push(random_pauli(&mut rng, 2, n));
        }

        let group = check_errors(&code, &errors)?.is_correctable();
        let dense = oracle.check_oaqec_conditions(&code, &errors)?;
        total += 1;
        if group == dense {
            agree += 1;
        } else {
            println!("trial {trial}: DISAGREEMENT (group {group}, dense {dense})");
        }
    }

    // and the d=18 code with random error pairs
    let code = build_gkp18();
    for _ in 0..20 {
        let errors = vec![
            PauliOperator::identity(18, 1),
            random_pauli(&mut rng, 18, 1),
        ];
        let group = check_errors(&code, &errors)?.is_correctable();
        let dense = oracle.check_oaqec_conditions(&code, &errors)?;
        total += 1;
        if group == dense {
            agree += 1;
        }
    }

    println!("{agree}/{total} verdicts agree");
    assert_eq!(agree, total);
    Ok(())
}
