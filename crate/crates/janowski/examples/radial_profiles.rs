//! Print the radial profiles gamma1, gamma2 and the quartics h1, h2 for one
//! parameter pair, marking where the consumed quartic changes sign.
//!
//! ```bash
//! cargo run --example radial_profiles [A B]
//! ```

use janowski::params::validate;
use janowski::radial::{gamma, h1, h2, RadialProfile};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (a, b) = match args.as_slice() {
        [_, a, b] => (
            a.parse().expect("A must be a number"),
            b.parse().expect("B must be a number"),
        ),
        _ => (0.8, 0.2),
    };
    let p = match validate(a, b) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    println!("# (A, B) = ({a}, {b}), branch {}", p.classify().branch.name());
    println!("{:>6} {:>12} {:>12} {:>13} {:>13}", "x", "gamma1", "gamma2", "h1", "h2");
    let n = 25;
    for i in 0..=n {
        let x = i as f64 / n as f64;
        println!(
            "{:>6.3} {:>12.6} {:>12.6} {:>13.6} {:>13.6}",
            x,
            gamma(RadialProfile::Gamma1, p, x),
            gamma(RadialProfile::Gamma2, p, x),
            h1(p, x),
            h2(p, x),
        );
    }
    println!();
    println!("gamma1 peaks where h1 = 0 (negative axis), gamma2 where h2 = 0 (positive axis).");
}
