//! The product-family code S = ⟨Z_1..Z_s⟩ with explicit gauge and logical
//! qudits: sector structure and forbidden-set membership for individual
//! operators.
//!
//! ```bash
//! cargo run --example motivating_code
//! ```

use hybridstab::code::build_motivating;
use hybridstab::correct::{check_errors, forbidden_set_membership};
use hybridstab::PauliOperator;

fn main() -> hybridstab::Result<()> {
    // n=4 qubits, s=2 stabilizers, one gauge pair, one logical pair
    let code = build_motivating(2, 4, 2, 1)?;
    println!(
        "n={}, s={}, r={}, k={}, full transversal has {} sectors",
        code.num_sites(),
        code.stabilizer_rank(),
        code.num_gauge_pairs(),
        code.num_logical_pairs(),
        code.sector_count()
    );

    // keep two sectors: I and X_1
    let code = code.with_transversal(vec![
        PauliOperator::identity(2, 4),
        PauliOperator::single_x(2, 4, 0, 1),
    ])?;
    assert!(code.validate().passes());

    // X_1 times a stabilizer element crosses between the two sectors
    let cross = PauliOperator::single_x(2, 4, 0, 1)
        .multiply(&PauliOperator::single_z(2, 4, 1, 1))?;
    println!("X1·Z2 lands in {:?}", forbidden_set_membership(&code, &cross)?);

    // a bare logical Z is in N(S)\G: it corrupts the protected qubit
    let logical_z = PauliOperator::single_z(2, 4, 3, 1);
    println!("Z4  lands in {:?}", forbidden_set_membership(&code, &logical_z)?);

    // a gauge operator is harmless
    let gauge = PauliOperator::single_x(2, 4, 2, 1);
    println!("X3  lands in {:?}", forbidden_set_membership(&code, &gauge)?);

    // unused coset representatives make a correctable error set
    let errors = vec![
        PauliOperator::identity(2, 4),
        PauliOperator::single_x(2, 4, 1, 1),
    ];
    println!("check {{I, X2}}: {:?}", check_errors(&code, &errors)?.verdict);
    Ok(())
}
