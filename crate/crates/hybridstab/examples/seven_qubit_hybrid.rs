//! The 7-qubit, 2-sector hybrid subspace code: load it from the text
//! format, validate, and test error sets against the forbidden-set
//! characterization.
//!
//! ```bash
//! cargo run --example seven_qubit_hybrid
//! ```

use hybridstab::codefile;
use hybridstab::correct::check_errors;
use hybridstab::PauliOperator;

const SEVEN_QUBIT: &str = "\
dim 2
sites 7
[stabilizers]
+1 XIIZYYZ
+1 ZIIIIIX
+1 IXIXZII
+1 IZIZIXX
+1 IIXXIZI
+1 IIZZXIX
[logical]
+1 IIIXZZX, +1 IIIZXXI
[transversal]
+1 IIIIIII
+1 IIIIXYY
";

fn main() -> hybridstab::Result<()> {
    let code = codefile::parse_code(SEVEN_QUBIT)?;
    let report = code.validate();
    println!(
        "validate: {} (s={}, k={}, sectors={})",
        if report.passes() { "ok" } else { "FAILED" },
        code.stabilizer_rank(),
        code.num_logical_pairs(),
        code.sector_count()
    );

    // the translation operator T and X_1 sit in distinct cosets of N(S)
    let i = PauliOperator::identity(2, 7);
    let x1 = PauliOperator::single_x(2, 7, 0, 1);
    let t = code.transversal()[1].clone();
    println!(
        "cosets: N(S) != X1·N(S): {}, N(S) != T·N(S): {}, X1·N(S) != T·N(S): {}",
        !code.stabilizer().same_coset(&i, &x1),
        !code.stabilizer().same_coset(&i, &t),
        !code.stabilizer().same_coset(&x1, &t),
    );

    // {I, X_1} is correctable
    let verdict = check_errors(&code, &[i.clone(), x1])?;
    println!("check {{I, X1}}: {:?}", verdict.verdict);

    // {I, T} fails the hybrid condition even though each sector code is fine
    let verdict = check_errors(&code, &[i, t])?;
    println!(
        "check {{I, T}}: {:?}, witness {:?}, per-sector {:?}",
        verdict.verdict,
        verdict.witness.as_ref().map(|w| w.tag),
        verdict.per_sector
    );
    Ok(())
}
