//! Radial profiles of the extremal pre-Schwarzian, the quartics h1/h2 that
//! drive their monotonicity, and bracketed root extraction with
//! certificates.
//!
//! gamma1(x) = (1-x^2)(2-Ax)/((1-Ax)(1-Bx)) is the norm integrand restricted
//! to the negative axis (z = -x), gamma2 the positive-axis counterpart, and
//!
//! ```text
//! h1(x) = A^2 B x^4 - 2A(A+B) x^3 + [5A + (2+A^2)B] x^2 - 4(1+AB) x + (A+2B)
//! h2(x) = A^2 B x^4 + 2A(A+B) x^3 + [5A + (2+A^2)B] x^2 + 4(1+AB) x + (A+2B)
//! ```
//!
//! satisfy gamma1'(x) = h1(x)/((1-Ax)^2 (1-Bx)^2) and
//! gamma2'(x) = -h2(x)/((1+Ax)^2 (1+Bx)^2). In every branch that consumes a
//! root, the relevant quartic has a unique simple zero in (0,1); the finder
//! brackets it with a uniform sign scan and certifies the bracket.

use num_complex::Complex64;
use thiserror::Error;

use crate::params::JanowskiParams;

/// Default bisection width for root extraction.
pub const DEFAULT_ROOT_TOL: f64 = 1e-13;

/// Subinterval count of the bracketing sign scan.
pub const SCAN_SUBINTERVALS: usize = 4096;

/// phi(z) = (2 + Az) / ((1 + Az)(1 + Bz)), the extremal pre-Schwarzian
/// shape factor: T_K = (A - B) phi.
pub fn phi(p: JanowskiParams, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let two = Complex64::new(2.0, 0.0);
    (two + p.a() * z) / ((one + p.a() * z) * (one + p.b() * z))
}

/// psi(x) = |phi(z)|^2 for any z with |z| = r and Re z = x:
/// (4 + A^2 r^2 + 4Ax) / ((1 + A^2 r^2 + 2Ax)(1 + B^2 r^2 + 2Bx)).
pub fn psi(p: JanowskiParams, r: f64, x: f64) -> f64 {
    let (a, b) = (p.a(), p.b());
    let a2r2 = a * a * r * r;
    let b2r2 = b * b * r * r;
    (4.0 + a2r2 + 4.0 * a * x) / ((1.0 + a2r2 + 2.0 * a * x) * (1.0 + b2r2 + 2.0 * b * x))
}

/// Which radial profile of (1-x^2)|T_K| to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadialProfile {
    /// Negative axis: (1-x^2)(2-Ax)/((1-Ax)(1-Bx)).
    Gamma1,
    /// Positive axis: (1-x^2)(2+Ax)/((1+Ax)(1+Bx)).
    Gamma2,
}

/// Evaluate a radial profile on x in [0, 1].
///
/// The 0/0 endpoint cases are removable and evaluated in cancelled form:
/// gamma2 with B = -1 becomes (1+x)(2+Ax)/(1+Ax) for all x, and gamma1 with
/// A = 1 becomes (1+x)(2-x)/(1-Bx), keeping the supremum-attaining endpoint
/// x = 1 finite. Elsewhere the weight is computed as (1-x)(1+x), which stays
/// cancellation-free next to 1.
pub fn gamma(profile: RadialProfile, p: JanowskiParams, x: f64) -> f64 {
    let (a, b) = (p.a(), p.b());
    // 1 -+ cx rewritten as (1-x) + x(1 -+ c): every piece is exact or one
    // rounding away, so the factors keep full relative accuracy when both
    // x -> 1 and c -> +-1 (plain 1 - c*x loses the low bits there).
    let down = |c: f64| (1.0 - x) + x * (1.0 - c);
    let up = |c: f64| (1.0 - x) + x * (1.0 + c);
    match profile {
        RadialProfile::Gamma1 => {
            if a == 1.0 {
                (1.0 + x) * (2.0 - x) / down(b)
            } else {
                (1.0 - x) * (1.0 + x) * (2.0 - a * x) / (down(a) * down(b))
            }
        }
        RadialProfile::Gamma2 => {
            if b == -1.0 {
                (1.0 + x) * (2.0 + a * x) / up(a)
            } else {
                (1.0 - x) * (1.0 + x) * (2.0 + a * x) / (up(a) * up(b))
            }
        }
    }
}

/// The quartic h1, Horner form on the monomial coefficients.
pub fn h1(p: JanowskiParams, x: f64) -> f64 {
    let (a, b) = (p.a(), p.b());
    let c4 = a * a * b;
    let c3 = -2.0 * a * (a + b);
    let c2 = 5.0 * a + (2.0 + a * a) * b;
    let c1 = -4.0 * (1.0 + a * b);
    let c0 = a + 2.0 * b;
    (((c4 * x + c3) * x + c2) * x + c1) * x + c0
}

/// The quartic h2, Horner form on the monomial coefficients.
///
/// h2(x) = h1(-x) coefficient-wise: the odd coefficients flip sign.
pub fn h2(p: JanowskiParams, x: f64) -> f64 {
    let (a, b) = (p.a(), p.b());
    let c4 = a * a * b;
    let c3 = 2.0 * a * (a + b);
    let c2 = 5.0 * a + (2.0 + a * a) * b;
    let c1 = 4.0 * (1.0 + a * b);
    let c0 = a + 2.0 * b;
    (((c4 * x + c3) * x + c2) * x + c1) * x + c0
}

/// Selector for the two quartics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quartic {
    H1,
    H2,
}

impl Quartic {
    pub fn eval(self, p: JanowskiParams, x: f64) -> f64 {
        match self {
            Quartic::H1 => h1(p, x),
            Quartic::H2 => h2(p, x),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Quartic::H1 => "h1",
            Quartic::H2 => "h2",
        }
    }
}

/// Axis on which |phi| is maximal over a circle |z| = r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    PositiveAxis,
    NegativeAxis,
}

impl Side {
    /// +1 or -1, the real direction of the axis.
    pub fn sign(self) -> f64 {
        match self {
            Side::PositiveAxis => 1.0,
            Side::NegativeAxis => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Side::PositiveAxis => '+',
            Side::NegativeAxis => '-',
        }
    }
}

/// Predict which axis carries the maximum of |phi| on the circle |z| = r.
///
/// For AB >= 0 the answer is radius-independent: negative axis when
/// 0 <= B < A, positive when B < A <= 0. For AB < 0 the sides switch at
/// r^2 = (A + 2B)/(A^2 B); the positive axis wins at or below the switch.
pub fn circle_max_side(p: JanowskiParams, r: f64) -> Side {
    let (a, b) = (p.a(), p.b());
    debug_assert!(r > 0.0 && r < 1.0);
    if a * b >= 0.0 {
        if b >= 0.0 {
            Side::NegativeAxis
        } else {
            Side::PositiveAxis
        }
    } else if r * r <= (a + 2.0 * b) / (a * a * b) {
        Side::PositiveAxis
    } else {
        Side::NegativeAxis
    }
}

/// Evidence that a bracketing scan isolated exactly one zero.
#[derive(Debug, Clone, PartialEq)]
pub struct RootCertificate {
    /// Midpoint of the final bisection bracket.
    pub root: f64,
    /// |polynomial(root)|, evaluated on the monomial Horner form.
    pub residual: f64,
    /// Bracket with opposite polynomial signs containing the root.
    pub bracket: (f64, f64),
    /// Sign-change events counted by the scan; 1 in every consuming branch.
    pub sign_changes: usize,
}

/// Failures of the bracketing scan. Either one signals use outside a
/// consuming branch or a transcription discrepancy; it is surfaced, never
/// patched over.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("no sign change in ({lo}, {hi}) over {subintervals} subintervals")]
    NoBracket { lo: f64, hi: f64, subintervals: usize },
    #[error("{count} sign changes in ({lo}, {hi}); expected exactly one")]
    MultipleBrackets { lo: f64, hi: f64, count: usize },
}

enum ScanEvent {
    /// f vanished exactly at an interior node; neighbors are the bracket.
    ExactZero { node: f64, left: f64, right: f64 },
    /// Opposite nonzero signs at two consecutive informative nodes.
    SignFlip { lo: f64, hi: f64 },
}

/// Uniform scan over [lo, hi] with `subintervals` pieces, collecting
/// sign-change events. Zeros at the interval endpoints are structural
/// (e.g. h1(1) = 0 when A = 1) and are not counted as roots.
fn scan_events<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, subintervals: usize) -> Vec<ScanEvent> {
    let n = subintervals;
    let step = (hi - lo) / n as f64;
    let node = |i: usize| if i == n { hi } else { lo + step * i as f64 };
    let mut events = Vec::new();
    let mut prev: Option<(f64, f64)> = None; // (x, f(x)) with f(x) != 0
    let mut crossed_zero = false;
    for i in 0..=n {
        let x = node(i);
        let fx = f(x);
        if fx == 0.0 {
            if i > 0 && i < n {
                events.push(ScanEvent::ExactZero {
                    node: x,
                    left: node(i - 1),
                    right: node(i + 1),
                });
            }
            crossed_zero = true;
            continue;
        }
        if let Some((px, pf)) = prev {
            if !crossed_zero && pf.signum() != fx.signum() {
                events.push(ScanEvent::SignFlip { lo: px, hi: x });
            }
        }
        prev = Some((x, fx));
        crossed_zero = false;
    }
    events
}

/// Bisect a sign-flip bracket down to width `tol`; returns (root, bracket).
fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, (f64, f64)) {
    let mut flo = f(lo);
    debug_assert!(flo != 0.0 && f(hi) != 0.0 && flo.signum() != f(hi).signum());
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval no longer splittable in f64
        }
        let fm = f(mid);
        if fm == 0.0 {
            return (mid, (lo, hi));
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi), (lo, hi))
}

/// Bracket and bisect the unique zero of `f` in (lo, hi).
///
/// A uniform scan with `subintervals` pieces must find exactly one
/// sign-change event; the event is then bisected to width `tol`.
pub fn bracket_root<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    subintervals: usize,
    tol: f64,
) -> Result<RootCertificate, RootError> {
    let events = scan_events(f, lo, hi, subintervals);
    match events.len() {
        0 => Err(RootError::NoBracket { lo, hi, subintervals }),
        1 => Ok(match events.into_iter().next().unwrap() {
            ScanEvent::ExactZero { node, left, right } => RootCertificate {
                root: node,
                residual: 0.0,
                bracket: (left, right),
                sign_changes: 1,
            },
            ScanEvent::SignFlip { lo: blo, hi: bhi } => {
                let (root, bracket) = bisect(f, blo, bhi, tol);
                RootCertificate {
                    root,
                    residual: f(root).abs(),
                    bracket,
                    sign_changes: 1,
                }
            }
        }),
        count => Err(RootError::MultipleBrackets { lo, hi, count }),
    }
}

/// Count sign-change events of `f` over a uniform scan of (lo, hi).
/// Interior exact zeros count one event each; endpoint zeros are structural
/// and ignored, matching the bracketing scan.
pub fn count_sign_changes<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, subintervals: usize) -> usize {
    scan_events(f, lo, hi, subintervals).len()
}

/// h1 in the exact split form
///
/// ```text
/// h1(x) = (1-x)^2 (1 + 2B - 2x + Bx^2)
///         + (A-1) [B(A+1)x^4 - 2(A+1+B)x^3 + (5+B+AB)x^2 - 4Bx + 1],
/// ```
///
/// coefficient-identical to the monomial form. The double zero at x = 1 is
/// carried as an exact product instead of a cancelling sum, so the sign of
/// h1 stays honest as its simple root approaches 1 (A -> 1, and B -> 1/3 at
/// A = 1), where the monomial Horner value sinks below f64 noise.
fn h1_split(p: JanowskiParams, x: f64) -> f64 {
    let (a, b) = (p.a(), p.b());
    let q = (b * x - 2.0) * x + (1.0 + 2.0 * b);
    let s = (((b * (a + 1.0) * x - 2.0 * (a + 1.0 + b)) * x + (5.0 + b + a * b)) * x - 4.0 * b)
        * x
        + 1.0;
    (1.0 - x) * (1.0 - x) * q + (a - 1.0) * s
}

/// Find the unique root of the chosen quartic in (0, 1).
pub fn find_root(q: Quartic, p: JanowskiParams, tol: f64) -> Result<RootCertificate, RootError> {
    find_root_in(q, p, 0.0, 1.0, tol)
}

/// Find the unique root of the chosen quartic in (lo, hi).
///
/// Bracketing evaluates h1 through [`h1_split`], which resolves the root
/// even when it hugs the x = 1 double zero; h2 has its double zero at
/// x = -1, outside the scan, and brackets on the plain Horner form.
pub fn find_root_in(
    q: Quartic,
    p: JanowskiParams,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<RootCertificate, RootError> {
    match q {
        Quartic::H1 => bracket_root(&|x| h1_split(p, x), lo, hi, SCAN_SUBINTERVALS, tol),
        Quartic::H2 => bracket_root(&|x| h2(p, x), lo, hi, SCAN_SUBINTERVALS, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::validate;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn phi_at_origin_is_two() {
        for (a, b) in [(1.0, -1.0), (0.5, -0.25), (0.9, 0.1), (-0.2, -0.8)] {
            let p = validate(a, b).unwrap();
            let v = phi(p, c(0.0, 0.0));
            assert_eq!(v, c(2.0, 0.0));
        }
    }

    #[test]
    fn phi_spec_points() {
        let p = validate(1.0, -1.0).unwrap();
        let v = phi(p, c(0.5, 0.0));
        assert!((v - c(10.0 / 3.0, 0.0)).norm() < 1e-15);

        let p = validate(1.0, 0.0).unwrap();
        let v = phi(p, c(-0.5, 0.0));
        assert!((v - c(3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn gamma_endpoints() {
        for (a, b) in [(0.9, 0.1), (-0.2, -0.8), (0.5, -0.25)] {
            let p = validate(a, b).unwrap();
            assert_eq!(gamma(RadialProfile::Gamma1, p, 0.0), 2.0);
            assert_eq!(gamma(RadialProfile::Gamma2, p, 0.0), 2.0);
            assert_eq!(gamma(RadialProfile::Gamma1, p, 1.0), 0.0);
            assert_eq!(gamma(RadialProfile::Gamma2, p, 1.0), 0.0);
        }
    }

    #[test]
    fn gamma_spec_points() {
        let p = validate(1.0, 0.0).unwrap();
        assert!((gamma(RadialProfile::Gamma1, p, 0.5) - 2.25).abs() < 1e-15);

        // Removable endpoint: gamma2 for B = -1 tends to 2 + x at A = 1.
        let p = validate(1.0, -1.0).unwrap();
        assert!((gamma(RadialProfile::Gamma2, p, 1.0) - 3.0).abs() < 1e-15);

        // Removable endpoint on the gamma1 side when A = 1.
        let p = validate(1.0, 0.5).unwrap();
        assert!((gamma(RadialProfile::Gamma1, p, 1.0) - 4.0).abs() < 1e-15);
    }

    #[test]
    fn quartic_endpoint_identities() {
        let pairs = [(0.9, 0.1), (0.3, -0.15), (0.7, -0.6), (-0.2, -0.8), (1.0, 0.2)];
        for (a, b) in pairs {
            let p = validate(a, b).unwrap();
            assert!((h1(p, 0.0) - (a + 2.0 * b)).abs() < 1e-15);
            assert!((h2(p, 0.0) - (a + 2.0 * b)).abs() < 1e-15);
            let h1_at_1 = 2.0 * (a - 1.0) * (1.0 - b) * (2.0 - a);
            let h2_at_1 = 2.0 * (1.0 + a) * (1.0 + b) * (2.0 + a);
            assert!((h1(p, 1.0) - h1_at_1).abs() < 1e-12, "h1(1) at ({a},{b})");
            assert!((h2(p, 1.0) - h2_at_1).abs() < 1e-12, "h2(1) at ({a},{b})");
        }
    }

    #[test]
    fn h1_vanishes_at_half_for_singh_singh_parameters() {
        let p = validate(1.0, 0.0).unwrap();
        assert_eq!(h1(p, 0.5), 0.0);
    }

    #[test]
    fn find_root_exact_hit() {
        let p = validate(1.0, 0.0).unwrap();
        let cert = find_root(Quartic::H1, p, DEFAULT_ROOT_TOL).unwrap();
        assert!((cert.root - 0.5).abs() < 1e-12);
        assert_eq!(cert.sign_changes, 1);
        assert!(cert.residual <= 1e-10);
    }

    #[test]
    fn find_root_frozen_values() {
        // Bisection oracle values frozen from a 50-digit scan of the quartics.
        let p = validate(0.9, 0.1).unwrap();
        let cert = find_root(Quartic::H1, p, DEFAULT_ROOT_TOL).unwrap();
        assert!((cert.root - 0.405_747_285_756_46).abs() < 1e-12);
        assert!(cert.residual < 1e-10);
        assert!(h1(p, cert.bracket.0) * h1(p, cert.bracket.1) < 0.0);

        let p = validate(-0.2, -0.8).unwrap();
        let cert = find_root(Quartic::H2, p, DEFAULT_ROOT_TOL).unwrap();
        assert!((cert.root - 0.540_765_216_610_247).abs() < 1e-12);

        let p = validate(0.9, -0.2).unwrap();
        let cert = find_root(Quartic::H1, p, DEFAULT_ROOT_TOL).unwrap();
        assert!((cert.root - 0.195_298_910_800_294_02).abs() < 1e-12);
    }

    #[test]
    fn find_root_reports_no_bracket_outside_consuming_branches() {
        // h2 = -(x^2-1)^2 for (1,-1): strictly negative on (0,1).
        let p = validate(1.0, -1.0).unwrap();
        let err = find_root(Quartic::H2, p, DEFAULT_ROOT_TOL).unwrap_err();
        assert!(matches!(err, RootError::NoBracket { .. }));
    }

    #[test]
    fn find_root_near_the_one_third_seam() {
        // The h1 root tends to 1 as B -> 1/3 with A = 1; the split form
        // keeps it resolvable.
        for eps in [1e-5, 1e-6, 1e-8] {
            let p = validate(1.0, 1.0 / 3.0 - eps).unwrap();
            let cert = find_root(Quartic::H1, p, DEFAULT_ROOT_TOL).unwrap();
            assert!(cert.root > 0.999, "root {} for eps {eps}", cert.root);
            assert!(cert.root < 1.0);
            assert!(cert.residual <= 1e-10);
        }
    }

    #[test]
    fn find_root_near_the_upper_corner() {
        // Both parameters near 1: the root hugs the double zero of h1 at 1.
        let p = validate(1.0 - 1e-9, 1.0 - 2e-9).unwrap();
        let cert = find_root(Quartic::H1, p, DEFAULT_ROOT_TOL).unwrap();
        assert!(cert.root > 1.0 - 1e-8 && cert.root < 1.0, "root {}", cert.root);
        assert!(cert.residual <= 1e-10);
    }

    #[test]
    fn split_form_matches_the_monomial_quartic() {
        let pairs = [(0.9, 0.1), (0.3, -0.15), (0.7, -0.6), (-0.2, -0.8), (1.0, 0.2)];
        for (a, b) in pairs {
            let p = validate(a, b).unwrap();
            for i in 0..=100 {
                let x = i as f64 / 100.0;
                assert!(
                    (h1_split(p, x) - h1(p, x)).abs() <= 1e-13,
                    "split defect at ({a},{b}), x={x}"
                );
            }
        }
    }

    #[test]
    fn count_sign_changes_matches_uniqueness() {
        let p = validate(0.9, 0.1).unwrap();
        assert_eq!(count_sign_changes(&|x| h1(p, x), 0.0, 1.0, 1_000_000), 1);
        let p = validate(1.0, -1.0).unwrap();
        assert_eq!(count_sign_changes(&|x| h2(p, x), 0.0, 1.0, 1_000_000), 0);
    }

    #[test]
    fn circle_side_spec_points() {
        let p = validate(1.0, 0.5).unwrap();
        assert_eq!(circle_max_side(p, 0.3), Side::NegativeAxis);

        let p = validate(-0.2, -0.8).unwrap();
        assert_eq!(circle_max_side(p, 0.3), Side::PositiveAxis);

        // Switch radius beta = 0.6700...; below positive, above negative.
        let p = validate(0.9, -0.55).unwrap();
        assert_eq!(circle_max_side(p, 0.5), Side::PositiveAxis);
        assert_eq!(circle_max_side(p, 0.9), Side::NegativeAxis);

        // (0.9, -0.8) has switch radius > 1, so every circle peaks on the
        // positive axis.
        let p = validate(0.9, -0.8).unwrap();
        for r in [0.1, 0.5, 0.95, 0.999] {
            assert_eq!(circle_max_side(p, r), Side::PositiveAxis);
        }
    }

    #[test]
    fn psi_spec_points() {
        let p = validate(1.0, -1.0).unwrap();
        assert!((psi(p, 0.5, 0.5) - 100.0 / 9.0).abs() < 1e-12);
        let p = validate(1.0, 0.0).unwrap();
        assert!((psi(p, 0.5, -0.5) - 9.0).abs() < 1e-12);
    }

    #[test]
    fn gamma1_derivative_matches_h1() {
        // Central finite differences against h1/((1-Ax)^2 (1-Bx)^2).
        let pairs = [(0.9, 0.1), (0.6, -0.2), (-0.3, -0.7), (1.0, 0.25), (0.8, 0.79)];
        let h = 1e-5;
        for (a, b) in pairs {
            let p = validate(a, b).unwrap();
            for i in 1..99 {
                let x = i as f64 / 100.0;
                let fd = (gamma(RadialProfile::Gamma1, p, x + h)
                    - gamma(RadialProfile::Gamma1, p, x - h))
                    / (2.0 * h);
                let denom = (1.0 - a * x).powi(2) * (1.0 - b * x).powi(2);
                let exact = h1(p, x) / denom;
                assert!((fd - exact).abs() < 1e-6, "({a},{b}) at x={x}: {fd} vs {exact}");
            }
        }
    }

    #[test]
    fn gamma2_derivative_matches_negated_h2() {
        let pairs = [(0.9, 0.1), (0.5, -0.5), (-0.2, -0.8)];
        let h = 1e-5;
        for (a, b) in pairs {
            let p = validate(a, b).unwrap();
            for i in 1..99 {
                let x = i as f64 / 100.0;
                let fd = (gamma(RadialProfile::Gamma2, p, x + h)
                    - gamma(RadialProfile::Gamma2, p, x - h))
                    / (2.0 * h);
                let denom = (1.0 + a * x).powi(2) * (1.0 + b * x).powi(2);
                let exact = -h2(p, x) / denom;
                assert!((fd - exact).abs() < 1e-6, "({a},{b}) at x={x}");
            }
        }
    }

    proptest! {
        #[test]
        fn gamma_is_the_weighted_axis_modulus(
            a in -0.999f64..1.0,
            b in -1.0f64..0.999,
            x in 0.001f64..0.999,
        ) {
            prop_assume!(b < a);
            let p = validate(a, b).unwrap();
            let w = (1.0 - x) * (1.0 + x);
            let neg = w * phi(p, c(-x, 0.0)).re;
            let pos = w * phi(p, c(x, 0.0)).re;
            let g1 = gamma(RadialProfile::Gamma1, p, x);
            let g2 = gamma(RadialProfile::Gamma2, p, x);
            prop_assert!((g1 - neg).abs() <= 1e-12 * g1.abs().max(1.0));
            prop_assert!((g2 - pos).abs() <= 1e-12 * g2.abs().max(1.0));
        }

        #[test]
        fn psi_is_the_squared_circle_modulus(
            a in -0.999f64..1.0,
            b in -1.0f64..0.999,
            r in 0.01f64..0.99,
            theta in 0.0f64..std::f64::consts::TAU,
        ) {
            prop_assume!(b < a);
            let p = validate(a, b).unwrap();
            let z = Complex64::from_polar(r, theta);
            let lhs = psi(p, r, z.re);
            let rhs = phi(p, z).norm_sqr();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
        }
    }
}
