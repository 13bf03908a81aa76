//! Hybridizing Bacon-Shor codes with classical codes on their syndromes:
//! the repetition construction [[ℓ², 1:2, ⌈(ℓ−1)/2⌉]] and the Hamming
//! construction [[64, 1:8, 2]], with the distance bound alongside the
//! measured values.
//!
//! ```bash
//! cargo run --example hybrid_bacon_shor
//! ```

use hybridstab::code::{build_bacon_shor, classical_registry, hybridize_css};
use hybridstab::distance::{exact_distance_with_threads, hybrid_bound, hybrid_bound_css};
use hybridstab::report::hybrid_notation;

fn main() -> hybridstab::Result<()> {
    for ell in [3usize, 4, 5, 8] {
        let base = build_bacon_shor(ell)?;
        let rep = classical_registry(&format!("rep{}", ell - 1))?;
        let hybrid = hybridize_css(&base, &rep, &rep)?;
        let cutoff = (ell - 1).div_ceil(2);
        let res = exact_distance_with_threads(&hybrid, cutoff, 4)?;
        let bound = hybrid_bound(ell as u64, (ell - 1) as u64, 2);
        println!(
            "repetition ℓ={ell}: sectors={}, bound≥{}, measured={:?}, {}",
            hybrid.sector_count(),
            bound,
            res.exact_distance,
            hybrid_notation(&hybrid, res.exact_distance).unwrap_or_default()
        );
    }

    let base = build_bacon_shor(8)?;
    let ham = classical_registry("hamming743")?;
    let hybrid = hybridize_css(&base, &ham, &ham)?;
    let res = exact_distance_with_threads(&hybrid, 2, 4)?;
    let bound = hybrid_bound_css(8, (3, 2), (3, 2));
    println!(
        "hamming ℓ=8: sectors={}, bound≥{}, measured={:?}, {}",
        hybrid.sector_count(),
        bound,
        res.exact_distance,
        hybrid_notation(&hybrid, res.exact_distance).unwrap_or_default()
    );
    Ok(())
}
