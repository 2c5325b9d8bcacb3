//! Sweep the admissible (A, B) triangle and show how the nine norm-formula
//! branches tile it, plus an ASCII map of the tiling.
//!
//! ```bash
//! cargo run --example case_analysis
//! ```

use std::collections::BTreeMap;

use janowski::params::{validate, Branch};

fn glyph(branch: Branch) -> char {
    match branch {
        Branch::BNeg1 => '_',
        Branch::NonnegAbRootH1 => '1',
        Branch::A1BLtThird => 'a',
        Branch::A1BGeThird => 'A',
        Branch::NonposAbRootH2 => '2',
        Branch::MixedRootH1 => 'm',
        Branch::MixedBoundary => '0',
        Branch::MixedBetaLt1 => '<',
        Branch::MixedBetaGe1 => '>',
    }
}

fn main() {
    let n = 48;
    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    println!("branch map over the (A, B) square (rows: B from 1 down to -1, cols: A from -1 to 1)");
    for j in (0..=n).rev() {
        let b = -1.0 + 2.0 * j as f64 / n as f64;
        let mut row = String::new();
        for i in 0..=n {
            let a = -1.0 + 2.0 * i as f64 / n as f64;
            match validate(a, b) {
                Ok(p) => {
                    let branch = p.classify().branch;
                    *counts.entry(branch.name()).or_default() += 1;
                    row.push(glyph(branch));
                }
                Err(_) => row.push('.'),
            }
        }
        println!("{row}");
    }
    println!();
    println!("{:<20} {:>8}", "branch", "cells");
    for (name, count) in counts {
        println!("{name:<20} {count:>8}");
    }
    println!();
    println!("legend: . invalid | _ B=-1 | 1 h1 root | a A=1,B<1/3 | A A=1,B>=1/3");
    println!("        2 h2 root | m mixed h1 | 0 A+2B=0 | < beta<1 | > beta>=1");
}
