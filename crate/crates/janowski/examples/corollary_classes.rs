//! The classical subclasses have published norm values; check each shortcut
//! against the general engine at the corresponding (A, B).
//!
//! ```bash
//! cargo run --example corollary_classes
//! ```

use janowski::norm::{corollary_norm, sharp_norm, CorollaryClass};
use janowski::params::validate;

fn main() {
    println!("{:<34} {:>18} {:>18} {:>10}", "class", "shortcut", "engine", "|diff|");

    let rows: Vec<(String, f64, f64, f64)> = vec![
        row("starlike (1, -1)", CorollaryClass::Starlike, 1.0, -1.0),
        row("order 1/4 (1/2, -1)", CorollaryClass::OrderAlpha(0.25), 0.5, -1.0),
        row("order 1/2 (0, -1)", CorollaryClass::OrderAlpha(0.5), 0.0, -1.0),
        row("Singh-Singh (1, 0)", CorollaryClass::SinghSingh, 1.0, 0.0),
        row("Padmanabhan 1/2 (1/2, -1/2)", CorollaryClass::Padmanabhan(0.5), 0.5, -0.5),
        row("Padmanabhan 9/10", CorollaryClass::Padmanabhan(0.9), 0.9, -0.9),
        row("Padmanabhan 1 (Koebe again)", CorollaryClass::Padmanabhan(1.0), 1.0, -1.0),
    ];
    for (name, shortcut, engine, diff) in rows {
        println!("{name:<34} {shortcut:>18.15} {engine:>18.15} {diff:>10.2e}");
    }
}

fn row(name: &str, class: CorollaryClass, a: f64, b: f64) -> (String, f64, f64, f64) {
    let shortcut = corollary_norm(class).expect("alpha in range");
    let engine = sharp_norm(validate(a, b).expect("valid")).expect("norm computes").value;
    (name.to_string(), shortcut, engine, (shortcut - engine).abs())
}
