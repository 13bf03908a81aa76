//! The d=18 single-qudit hybrid code: coset counting over a composite
//! modulus, a 9-element correctable error set with degeneracy, and the
//! dense subspace picture behind it.
//!
//! ```bash
//! cargo run --example gkp18_qudit
//! ```

use hybridstab::code::build_gkp18;
use hybridstab::correct::check_errors;
use hybridstab::oracle::Oracle;
use hybridstab::PauliOperator;

fn main() -> hybridstab::Result<()> {
    let code = build_gkp18();
    assert!(code.validate().passes());
    println!(
        "d={}, n={}, cosets of N(S) = {}, dim C = {}, sectors = {}",
        code.qudit_dim(),
        code.num_sites(),
        code.stabilizer().coset_count()?,
        code.code_dimension()?,
        code.sector_count()
    );

    // the nine odd powers of Z are jointly correctable for T0 = {I, X, X⁻¹}
    let z = PauliOperator::single_z(18, 1, 0, 1);
    let errors: Vec<PauliOperator> = (0..9).map(|b| z.pow(2 * b + 1)).collect();
    let verdict = check_errors(&code, &errors)?;
    println!("check {{Z^(2b+1)}}: {:?}", verdict.verdict);

    // nine operators but only three images of the 6-dim hybrid space:
    // Z, Z^7, Z^13 act identically on it, and Z, Z^3, Z^5 move it to three
    // mutually orthogonal subspaces
    let oracle = Oracle::with_cap(64);
    println!("degeneracy picture verified: {}", oracle.check_degeneracy_example()?);

    // transversal operators themselves are never jointly correctable
    let x = PauliOperator::single_x(18, 1, 0, 1);
    let verdict = check_errors(&code, &[PauliOperator::identity(18, 1), x])?;
    println!("check {{I, X}}: {:?}", verdict.verdict);
    Ok(())
}
