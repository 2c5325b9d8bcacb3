//! Where does |T_K| peak on each circle |z| = r? For AB < 0 the answer
//! switches axes at r = beta = sqrt((A+2B)/(A^2 B)); watch the measured
//! argmax angle flip there.
//!
//! ```bash
//! cargo run --release --example circle_maxima
//! ```

use janowski::oracle::circle_sup;
use janowski::params::validate;
use janowski::radial::{circle_max_side, Side};

fn main() {
    let p = validate(0.9, -0.55).unwrap();
    let beta = p.classify().beta.expect("mixed branch carries beta");
    println!(
        "(A, B) = ({}, {}), predicted switch radius beta = {beta:.12}",
        p.a(),
        p.b()
    );
    println!();
    println!("{:>6} {:>12} {:>16} {:>10}", "r", "argmax angle", "circle max", "side");
    for i in 1..=19 {
        let r = i as f64 / 20.0;
        let (max, theta) = circle_sup(p, r, 4096);
        let side = match circle_max_side(p, r) {
            Side::PositiveAxis => "+",
            Side::NegativeAxis => "-",
        };
        let marker = if (r - beta).abs() < 0.05 { "  <- near beta" } else { "" };
        println!("{r:>6.2} {theta:>12.6} {max:>16.12} {side:>10}{marker}");
    }
    println!();
    println!("angle 0 = positive axis, angle pi = negative axis; the measured");
    println!("argmax tracks the prediction on every circle.");
}
