//! Generate random members of S*(A,B) from Blaschke-type Schwarz functions
//! and watch their sampled pre-Schwarzian norms stay below the sharp bound,
//! with equality approached by the identity (the kernel member itself).
//!
//! ```bash
//! cargo run --release --example schwarz_members [seed]
//! ```

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use janowski::schwarz::{sampled_norm, SchwarzMap};
use janowski::{norm, params};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(7);
    let p = params::validate(0.9, -0.4).unwrap();
    let bound = norm::sharp_norm(p).unwrap().value;
    println!("class S*({}, {}), sharp bound {:.15}, seed {seed}", p.a(), p.b(), bound);
    println!();
    println!("{:>4} {:>8} {:>20} {:>14}", "#", "factors", "sampled ||T_f||", "slack");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..12 {
        let omega = SchwarzMap::random(&mut rng);
        let sampled = sampled_norm(p, &omega, 64, 256);
        println!(
            "{:>4} {:>8} {:>20.15} {:>14.6e}",
            i,
            omega.zeros().len(),
            sampled,
            bound - sampled
        );
        assert!(sampled <= bound + 1e-9, "extremality violated");
    }

    let identity = SchwarzMap::identity();
    let sampled = sampled_norm(p, &identity, 1024, 256);
    println!("{:>4} {:>8} {:>20.15} {:>14.6e}", "id", 0, sampled, bound - sampled);
    println!();

    let z = Complex64::new(0.3, 0.2);
    let t_id = janowski::schwarz::t_f(p, &identity, z);
    let t_k = norm::t_k(p, z);
    println!("identity recovers the kernel: T_f(id, z) - T_K(z) = {:.2e}", (t_id - t_k).norm());
}
