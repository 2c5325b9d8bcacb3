//! Compute the sharp pre-Schwarzian norm for a handful of parameter pairs
//! and print which branch of the case analysis produced each value.
//!
//! ```bash
//! cargo run --example sharp_norm
//! ```

use janowski::{params, norm};

fn main() {
    let pairs = [
        (1.0, -1.0),  // full starlike class
        (0.5, -1.0),  // starlike of order 1/4
        (1.0, 0.0),   // Singh-Singh class
        (0.5, -0.5),  // Padmanabhan class, alpha = 1/2
        (1.0, 0.5),   // endpoint-attained branch
        (0.8, 0.2),   // generic interior root
        (0.5, -0.25), // A + 2B = 0 boundary
        (0.9, -0.55), // two-sided mixed branch
    ];
    println!(
        "{:>6} {:>6}  {:<18} {:>18} {:>12} {:>5}",
        "A", "B", "case", "norm", "argmax_x", "axis"
    );
    for (a, b) in pairs {
        let p = params::validate(a, b).expect("admissible parameters");
        let r = norm::sharp_norm(p).expect("norm computes");
        println!(
            "{:>6} {:>6}  {:<18} {:>18.15} {:>12.9} {:>5}",
            a,
            b,
            r.case.branch.name(),
            r.value,
            r.argmax_x,
            r.axis.symbol()
        );
        if let Some(cert) = &r.root_cert {
            println!(
                "{:14}quartic root {:.15} (residual {:.2e}, bracket width {:.2e})",
                "",
                cert.root,
                cert.residual,
                cert.bracket.1 - cert.bracket.0
            );
        }
    }
}
