//! Run the three seeded verification suites in-process, the same checks the
//! `janowski verify` subcommand wires to exit codes.
//!
//! ```bash
//! cargo run --release --example verify_suites [samples [seed]]
//! ```

use janowski::verify;

fn main() {
    let mut args = std::env::args().skip(1);
    let samples: usize = args
        .next()
        .map(|s| s.parse().expect("samples must be an integer"))
        .unwrap_or(100);
    let seed: u64 = args
        .next()
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(7);

    println!("running all suites with samples = {samples}, seed = {seed}");
    println!();
    let outcomes = verify::all_suites(samples, seed);
    let mut ok = true;
    for outcome in &outcomes {
        println!("{}", outcome.render());
        ok &= outcome.ok();
    }
    println!();
    if ok {
        println!("all checks passed");
    } else {
        println!("FAILURES detected");
        std::process::exit(3);
    }
}
