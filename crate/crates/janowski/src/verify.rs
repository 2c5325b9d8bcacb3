//! Seeded verification suites behind the `verify` CLI subcommand.
//!
//! Each suite runs a list of named checks and reports per-check pass counts.
//! All randomness flows from an explicit seed through per-check ChaCha
//! streams, so identical (suite, samples, seed) always produces identical
//! output.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::norm::{self, CorollaryClass};
use crate::oracle;
use crate::params::{Branch, JanowskiParams};
use crate::radial::{self, Quartic, RadialProfile, Side};
use crate::schwarz::{self, SchwarzMap};

/// Result of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    /// Worst margin seen, as a printable diagnostic.
    pub worst: String,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }

    /// One summary line: `<name>: <passed>/<total> pass` or `... FAIL (...)`.
    pub fn render(&self) -> String {
        if self.ok() {
            format!("{}: {}/{} pass", self.name, self.passed, self.total)
        } else {
            format!(
                "{}: {}/{} FAIL ({})",
                self.name, self.passed, self.total, self.worst
            )
        }
    }
}

/// Independent RNG stream per check, derived from the user seed.
fn stream(seed: u64, lane: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&lane.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Uniform valid parameter pair.
fn random_params<R: Rng + ?Sized>(rng: &mut R) -> JanowskiParams {
    loop {
        let a = rng.gen_range(-1.0..1.0);
        let b = rng.gen_range(-1.0..1.0);
        if let Ok(p) = JanowskiParams::new(a, b) {
            return p;
        }
    }
}

fn random_disk_point<R: Rng + ?Sized>(rng: &mut R, r_lo: f64, r_hi: f64) -> Complex64 {
    Complex64::from_polar(
        rng.gen_range(r_lo..r_hi),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
}

/// Lemma suite: the Schwarz-function quotient bound M(z) <= 1 (headline,
/// named plain "lemma"), and the circle-maximum location law.
pub fn lemma_suite(samples: usize, seed: u64) -> Vec<SuiteOutcome> {
    let mut out = Vec::new();

    // M(z) <= 1 + 1e-12 over random (A, omega, z).
    {
        let mut rng = stream(seed, 1);
        let mut passed = 0;
        let mut worst = f64::NEG_INFINITY;
        for _ in 0..samples {
            let a = rng.gen_range(-0.999_999..=1.0);
            let omega = SchwarzMap::random(&mut rng);
            let z = random_disk_point(&mut rng, 1e-3, 0.999);
            let m = schwarz::m_value(a, &omega, z).expect("domain is valid");
            if m <= 1.0 + 1e-12 {
                passed += 1;
            }
            worst = worst.max(m - 1.0);
        }
        out.push(SuiteOutcome {
            name: "lemma".into(),
            passed,
            total: samples,
            worst: format!("max M-1 = {worst:e}"),
        });
    }

    // Circle argmax sits on the predicted axis, radii 0.1..0.9.
    {
        let mut rng = stream(seed, 2);
        let params = samples.clamp(1, 100);
        let tol = std::f64::consts::TAU / 4096.0;
        let mut passed = 0;
        let mut total = 0;
        let mut worst = 0.0_f64;
        for _ in 0..params {
            let p = random_params(&mut rng);
            for i in 1..=9 {
                let r = i as f64 / 10.0;
                let (_, theta) = oracle::circle_sup(p, r, 4096);
                let target = match radial::circle_max_side(p, r) {
                    Side::PositiveAxis => 0.0,
                    Side::NegativeAxis => std::f64::consts::PI,
                };
                let dist = (theta - target)
                    .abs()
                    .min((theta - target - std::f64::consts::TAU).abs());
                total += 1;
                if dist <= tol {
                    passed += 1;
                }
                worst = worst.max(dist);
            }
        }
        out.push(SuiteOutcome {
            name: "lemma.circle-argmax".into(),
            passed,
            total,
            worst: format!("max angle dist = {worst:e}"),
        });
    }

    // For AB < 0 with beta < 1, the argmax side flips across r = beta.
    {
        let mut rng = stream(seed, 3);
        let wanted = samples.clamp(1, 20);
        let tol = std::f64::consts::TAU / 4096.0;
        let mut passed = 0;
        let mut worst = 0.0_f64;
        for _ in 0..wanted {
            let p = loop {
                let p = random_params(&mut rng);
                if let Some(beta) = p.classify().beta {
                    if p.b() != -1.0 && beta > 0.06 && beta < 0.94 {
                        break p;
                    }
                }
            };
            let beta = p.classify().beta.unwrap();
            let (_, below) = oracle::circle_sup(p, beta - 0.05, 4096);
            let (_, above) = oracle::circle_sup(p, beta + 0.05, 4096);
            let d_below = below.abs().min((below - std::f64::consts::TAU).abs());
            let d_above = (above - std::f64::consts::PI).abs();
            if d_below <= tol && d_above <= tol {
                passed += 1;
            }
            worst = worst.max(d_below.max(d_above));
        }
        out.push(SuiteOutcome {
            name: "lemma.beta-flip".into(),
            passed,
            total: wanted,
            worst: format!("max angle dist = {worst:e}"),
        });
    }

    out
}

/// Theorem suite: oracle equivalence (headline, named plain "theorem"),
/// golden values, seam continuity, corollary agreement, algebraic
/// factorizations, and root certificates.
pub fn theorem_suite(samples: usize, seed: u64) -> Vec<SuiteOutcome> {
    let mut out = Vec::new();

    // |closed-form - brute force| <= 1e-8 on random parameters.
    {
        let mut rng = stream(seed, 11);
        let mut passed = 0;
        let mut worst = 0.0_f64;
        for _ in 0..samples {
            let p = random_params(&mut rng);
            let closed = norm::sharp_norm(p).expect("valid parameters").value;
            let report = oracle::disk_sup(p, oracle::DEFAULT_GRID_NR, oracle::DEFAULT_GRID_NTHETA);
            let diff = (closed - report.radial_refined).abs();
            let grid_ok = report.radial_refined >= report.sup_value - 1e-15;
            if diff <= 1e-8 && grid_ok {
                passed += 1;
            }
            worst = worst.max(diff);
        }
        out.push(SuiteOutcome {
            name: "theorem".into(),
            passed,
            total: samples,
            worst: format!("max |closed - oracle| = {worst:e}"),
        });
    }

    // Golden values at 1e-9.
    {
        let mut cases: Vec<(f64, f64, f64)> = vec![
            (1.0, -1.0, 6.0),
            (1.0, 0.0, 2.25),
            (1.0, 1.0 / 3.0, 2.0),
            (1.0, 0.5, 2.0),
            (1.0, 0.9, 2.0),
            (0.5, -0.25, 1.5),
            (0.8, -0.4, 2.4),
            (-0.5, -1.0, 3.0),
            (0.0, -1.0, 4.0),
            (0.3, -1.0, 4.6),
        ];
        for i in 1..=9 {
            let alpha = i as f64 / 10.0;
            cases.push((1.0 - 2.0 * alpha, -1.0, 6.0 - 4.0 * alpha));
        }
        let mut passed = 0;
        let mut worst = 0.0_f64;
        let total = cases.len();
        for (a, b, want) in cases {
            let p = JanowskiParams::new(a, b).expect("golden parameters are valid");
            let got = norm::sharp_norm(p).expect("golden parameters").value;
            let diff = (got - want).abs();
            if diff <= 1e-9 {
                passed += 1;
            }
            worst = worst.max(diff);
        }
        out.push(SuiteOutcome {
            name: "theorem.golden".into(),
            passed,
            total,
            worst: format!("max |norm - golden| = {worst:e}"),
        });
    }

    // First-order continuity across the three branch seams.
    {
        let eps = 1e-5;
        let bound = 1e-3;
        let norm_at = |a: f64, b: f64| {
            norm::sharp_norm(JanowskiParams::new(a, b).expect("seam point"))
                .expect("seam point")
                .value
        };
        let mut seams: Vec<(f64, f64)> = vec![(0.5, -0.25), (0.8, -0.4), (1.0, -0.5)];
        for a in [0.6, 0.8, 0.9] {
            seams.push((a, a / (a * a - 2.0))); // beta = 1
        }
        seams.push((1.0, 1.0 / 3.0));
        let mut passed = 0;
        let mut worst = 0.0_f64;
        let total = seams.len();
        for (a, b) in seams {
            let diff = (norm_at(a, b + eps) - norm_at(a, b - eps)).abs();
            if diff <= bound {
                passed += 1;
            }
            worst = worst.max(diff);
        }
        out.push(SuiteOutcome {
            name: "theorem.seams".into(),
            passed,
            total,
            worst: format!("max seam jump = {worst:e}"),
        });
    }

    // Corollary shortcuts agree with the engine.
    {
        let mut passed = 0;
        let mut worst = 0.0_f64;
        let count = 50;
        for i in 0..count {
            let alpha = (i as f64 + 0.5) / count as f64;
            let order = norm::corollary_norm(CorollaryClass::OrderAlpha(alpha)).expect("in range");
            let order_engine = norm::sharp_norm(
                JanowskiParams::new(1.0 - 2.0 * alpha, -1.0).expect("valid"),
            )
            .expect("valid")
            .value;
            let padma = norm::corollary_norm(CorollaryClass::Padmanabhan(alpha)).expect("in range");
            let padma_engine =
                norm::sharp_norm(JanowskiParams::new(alpha, -alpha).expect("valid"))
                    .expect("valid")
                    .value;
            let diff = (order - order_engine).abs().max((padma - padma_engine).abs());
            if diff <= 1e-10 {
                passed += 1;
            }
            worst = worst.max(diff);
        }
        out.push(SuiteOutcome {
            name: "theorem.corollaries".into(),
            passed,
            total: count,
            worst: format!("max |shortcut - engine| = {worst:e}"),
        });
    }

    // Factorization identities of the quartics.
    {
        let mut rng = stream(seed, 12);
        let count = 1000;
        let mut passed = 0;
        let mut worst = 0.0_f64;
        for _ in 0..count {
            let x = rng.gen_range(0.0..1.0);
            let mut diff = 0.0_f64;

            // A = 1: h1 = (1-x)^2 (1 + 2B - 2x + Bx^2).
            let b = rng.gen_range(-0.999..1.0);
            let p = JanowskiParams::new(1.0, b).expect("valid");
            let q = 1.0 + 2.0 * b - 2.0 * x + b * x * x;
            diff = diff.max((radial::h1(p, x) - (1.0 - x) * (1.0 - x) * q).abs());

            // A + 2B = 0: h1 = 4x (B^3 x^3 - B^2 x^2 + B^3 x - 2Bx + 2B^2 - 1).
            let b = rng.gen_range(-0.5..-1e-6);
            let p = JanowskiParams::new(-2.0 * b, b).expect("valid");
            let cubic = b * b * b * x * x * x - b * b * x * x + b * b * b * x - 2.0 * b * x
                + 2.0 * b * b
                - 1.0;
            diff = diff.max((radial::h1(p, x) - 4.0 * x * cubic).abs());

            // All parameters: h1 = (A+2B)/2 Q(x) - (x/2) R(x).
            let p = random_params(&mut rng);
            let (a, b) = (p.a(), p.b());
            let q_big = a * a * x.powi(4) - 2.0 * a * x.powi(3) + 2.0 * x * x + a * a * x * x
                - 4.0 * a * x
                + 2.0;
            let r_big = a.powi(3) * x.powi(3) + 2.0 * a * a * x * x - 8.0 * a * x + a.powi(3) * x
                - 4.0 * a * a
                + 8.0;
            diff = diff
                .max((radial::h1(p, x) - (0.5 * (a + 2.0 * b) * q_big - 0.5 * x * r_big)).abs());

            // (alpha, -alpha): the Padmanabhan quartic is -h2.
            let alpha = rng.gen_range(1e-3..1.0);
            let p = JanowskiParams::new(alpha, -alpha).expect("valid");
            let a3 = alpha * alpha * alpha;
            let quartic = a3 * x.powi(4) + (a3 - 3.0 * alpha) * x * x
                + (4.0 * alpha * alpha - 4.0) * x
                + alpha;
            diff = diff.max((radial::h2(p, x) + quartic).abs());

            if diff <= 1e-12 {
                passed += 1;
            }
            worst = worst.max(diff);
        }
        out.push(SuiteOutcome {
            name: "theorem.factorizations".into(),
            passed,
            total: count,
            worst: format!("max identity defect = {worst:e}"),
        });
    }

    // Root certificates: unique sign change at scan scale, small residual.
    {
        let mut rng = stream(seed, 13);
        let count = samples.clamp(1, 200);
        let mut passed = 0;
        let mut total = 0;
        let mut worst = 0.0_f64;
        for _ in 0..count {
            let p = random_params(&mut rng);
            let result = norm::sharp_norm(p).expect("valid parameters");
            let Some(cert) = result.root_cert else { continue };
            let quartic = match result.case.branch {
                Branch::NonnegAbRootH1 | Branch::A1BLtThird | Branch::MixedRootH1 => Quartic::H1,
                _ => Quartic::H2,
            };
            let changes =
                radial::count_sign_changes(&|x| quartic.eval(p, x), 0.0, 1.0, 1_000_000);
            total += 1;
            if cert.sign_changes == 1 && changes == 1 && cert.residual <= 1e-10 {
                passed += 1;
            }
            worst = worst.max(cert.residual);
        }
        out.push(SuiteOutcome {
            name: "theorem.roots".into(),
            passed,
            total,
            worst: format!("max residual = {worst:e}"),
        });
    }

    out
}

/// Schwarz suite: the Schwarz-Pick gap (headline, named plain "schwarz"),
/// extremality of K_{A,B}, and identity recovery.
pub fn schwarz_suite(samples: usize, seed: u64) -> Vec<SuiteOutcome> {
    let mut out = Vec::new();

    // Schwarz-Pick gap >= -1e-12.
    {
        let mut rng = stream(seed, 21);
        let mut passed = 0;
        let mut worst = f64::INFINITY;
        for _ in 0..samples {
            let omega = SchwarzMap::random(&mut rng);
            let z = random_disk_point(&mut rng, 1e-3, 0.999);
            let gap = schwarz::schwarz_pick_gap(&omega, z);
            if gap >= -1e-12 {
                passed += 1;
            }
            worst = worst.min(gap);
        }
        out.push(SuiteOutcome {
            name: "schwarz".into(),
            passed,
            total: samples,
            worst: format!("min gap = {worst:e}"),
        });
    }

    // Sampled norms of arbitrary members stay below the sharp bound.
    {
        let mut rng = stream(seed, 22);
        let count = samples.clamp(1, 1000);
        let mut passed = 0;
        let mut worst = f64::NEG_INFINITY;
        for _ in 0..count {
            let p = random_params(&mut rng);
            let omega = SchwarzMap::random(&mut rng);
            let bound = norm::sharp_norm(p).expect("valid parameters").value;
            let sampled = schwarz::sampled_norm(p, &omega, 64, 256);
            if sampled <= bound + 1e-9 {
                passed += 1;
            }
            worst = worst.max(sampled - bound);
        }
        out.push(SuiteOutcome {
            name: "schwarz.extremal".into(),
            passed,
            total: count,
            worst: format!("max excess = {worst:e}"),
        });
    }

    // omega = id reproduces T_K pointwise.
    {
        let mut rng = stream(seed, 23);
        let id = SchwarzMap::identity();
        let mut passed = 0;
        let mut worst = 0.0_f64;
        for _ in 0..samples {
            let p = random_params(&mut rng);
            let z = random_disk_point(&mut rng, 0.0, 0.99);
            let lhs = schwarz::t_f(p, &id, z);
            let rhs = norm::t_k(p, z);
            let rel = (lhs - rhs).norm() / rhs.norm().max(1.0);
            if rel <= 1e-13 {
                passed += 1;
            }
            worst = worst.max(rel);
        }
        out.push(SuiteOutcome {
            name: "schwarz.identity".into(),
            passed,
            total: samples,
            worst: format!("max relative defect = {worst:e}"),
        });
    }

    out
}

/// All three suites back to back.
pub fn all_suites(samples: usize, seed: u64) -> Vec<SuiteOutcome> {
    let mut out = lemma_suite(samples, seed);
    out.extend(theorem_suite(samples, seed));
    out.extend(schwarz_suite(samples, seed));
    out
}

/// Consistency identities between the radial profiles and |phi| on the
/// axes, plus the psi = |phi|^2 circle identity. Used by tests and examples.
pub fn profile_identity_worst(samples: usize, seed: u64) -> f64 {
    let mut rng = stream(seed, 31);
    let mut worst = 0.0_f64;
    for _ in 0..samples {
        let p = random_params(&mut rng);
        let x = rng.gen_range(1e-3..0.999);
        let w = (1.0 - x) * (1.0 + x);
        let g1 = radial::gamma(RadialProfile::Gamma1, p, x);
        let g2 = radial::gamma(RadialProfile::Gamma2, p, x);
        let neg = w * radial::phi(p, Complex64::new(-x, 0.0)).re;
        let pos = w * radial::phi(p, Complex64::new(x, 0.0)).re;
        worst = worst.max((g1 - neg).abs() / g1.abs().max(1.0));
        worst = worst.max((g2 - pos).abs() / g2.abs().max(1.0));

        let z = random_disk_point(&mut rng, 1e-3, 0.999);
        let lhs = radial::psi(p, z.norm(), z.re);
        let rhs = radial::phi(p, z).norm_sqr();
        worst = worst.max((lhs - rhs).abs() / rhs.max(1.0));
    }
    worst
}
