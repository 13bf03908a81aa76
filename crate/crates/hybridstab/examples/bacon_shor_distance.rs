//! Bacon-Shor subsystem codes: gauge pairing, anticommutation degrees, and
//! the exact distance search with its minimum-weight witness.
//!
//! ```bash
//! cargo run --example bacon_shor_distance
//! ```

use hybridstab::distance::{anticommute_degree, exact_distance_with_threads};

fn main() -> hybridstab::Result<()> {
    for ell in [2usize, 3] {
        let code = hybridstab::code::build_bacon_shor(ell)?;
        assert!(code.validate().passes());
        let deg = anticommute_degree(&code)?;
        println!(
            "ℓ={ell}: n={}, s={}, r={}, k={}, m={} css={:?}",
            code.num_sites(),
            code.stabilizer_rank(),
            code.num_gauge_pairs(),
            code.num_logical_pairs(),
            deg.overall,
            deg.css
        );
        let res = exact_distance_with_threads(&code, ell, 4)?;
        println!(
            "  distance {} with witness {}",
            res.exact_distance.unwrap(),
            res.witness.unwrap()
        );
    }
    Ok(())
}
