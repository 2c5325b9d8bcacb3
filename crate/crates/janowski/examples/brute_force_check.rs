//! Cross-check the closed-form norm against the brute-force disk supremum:
//! a dense polar grid plus golden-section radial refinement that never
//! consults the branch dispatch.
//!
//! ```bash
//! cargo run --release --example brute_force_check
//! ```

use janowski::{norm, oracle, params};

fn main() {
    let pairs = [
        (1.0, -1.0),
        (1.0, 0.0),
        (0.8, 0.2),
        (0.9, -0.55),
        (-0.2, -0.8),
        (0.5, -0.25),
        (1.0, 0.5),
    ];
    println!(
        "{:>6} {:>6} {:>19} {:>19} {:>19} {:>10}",
        "A", "B", "closed form", "grid max", "refined", "|diff|"
    );
    for (a, b) in pairs {
        let p = params::validate(a, b).unwrap();
        let closed = norm::sharp_norm(p).unwrap().value;
        let report = oracle::disk_sup(p, 512, 1024);
        println!(
            "{:>6} {:>6} {:>19.15} {:>19.15} {:>19.15} {:>10.2e}",
            a,
            b,
            closed,
            report.sup_value,
            report.radial_refined,
            (closed - report.radial_refined).abs()
        );
    }
    println!();
    println!("grid max is a lower bound from 512 x 1024 samples; the refined value");
    println!("golden-sections both half-diameters and lands on the closed form.");
}
