//! Brute-force suprema of (1-|z|^2)|T_K(z)|, independent of the closed-form
//! branch dispatch.
//!
//! A dense polar grid gives a 2-D sanity value; a golden-section pass over
//! each half-diameter then refines it, justified by the circle-maximum
//! analysis (the supremum always sits on the real axis). The raw grid value
//! is kept in the report so a refinement falling below it is detectable.

use num_complex::Complex64;

use crate::norm;
use crate::params::JanowskiParams;
use crate::radial::{self, RadialProfile};

/// Default polar grid: 512 radii by 1024 angles.
pub const DEFAULT_GRID_NR: usize = 512;
pub const DEFAULT_GRID_NTHETA: usize = 1024;

/// Width tolerance in x for the golden-section refinement.
pub const REFINE_XTOL: f64 = 1e-12;

/// Radial evaluations stop just short of the boundary; endpoint-attained
/// suprema (B = -1, and A = 1 with B >= 1/3) are limits as x -> 1.
const X_CAP: f64 = 1.0 - 1e-13;

/// Brute-force supremum report.
#[derive(Debug, Clone, PartialEq)]
pub struct GridReport {
    /// Max of (1-r^2)|T_K| over the polar grid.
    pub sup_value: f64,
    /// Grid point attaining `sup_value` (ties: smallest theta, then radius).
    pub argmax: Complex64,
    /// Golden-section refinement over both half-diameters; never below
    /// `sup_value` unless axis unimodality failed.
    pub radial_refined: f64,
    /// Golden-section iterations spent in the refinement.
    pub refine_iters: usize,
}

/// The weighted modulus (1-x^2)|T_K(sign * x)| with the cancellation-free
/// weight (1-x)(1+x).
fn axis_objective(p: JanowskiParams, sign: f64, x: f64) -> f64 {
    (1.0 - x) * (1.0 + x) * norm::t_k(p, Complex64::new(sign * x, 0.0)).norm()
}

/// Golden-section maximization on [lo, hi]; returns the best evaluated
/// point, its value, and the iteration count. The best-seen point includes
/// both bracket endpoints, so monotone objectives resolve to the endpoint.
fn golden_max<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, xtol: f64) -> (f64, f64, usize) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best_x = lo;
    let mut best_v = f(lo);
    let consider = |x: f64, v: f64, best_x: &mut f64, best_v: &mut f64| {
        if v > *best_v {
            *best_x = x;
            *best_v = v;
        }
    };
    let v_hi = f(hi);
    consider(hi, v_hi, &mut best_x, &mut best_v);

    let (mut a, mut b) = (lo, hi);
    let mut c = b - (b - a) * INV_PHI;
    let mut d = a + (b - a) * INV_PHI;
    let mut fc = f(c);
    let mut fd = f(d);
    consider(c, fc, &mut best_x, &mut best_v);
    consider(d, fd, &mut best_x, &mut best_v);

    let mut iters = 0;
    while b - a > xtol && iters < 200 {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * INV_PHI;
            fc = f(c);
            consider(c, fc, &mut best_x, &mut best_v);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * INV_PHI;
            fd = f(d);
            consider(d, fd, &mut best_x, &mut best_v);
        }
        iters += 1;
    }
    let mid = 0.5 * (a + b);
    consider(mid, f(mid), &mut best_x, &mut best_v);
    (best_x, best_v, iters)
}

/// Supremum of (1-x^2)|T_K(sign x)| over one half-diameter: an n_r-point
/// radial grid brackets the argmax, golden-section polishes it.
fn half_diameter_sup(p: JanowskiParams, sign: f64, n_r: usize) -> (f64, f64, usize) {
    let r_at = |k: usize| k as f64 / (n_r + 1) as f64;
    let mut best_k = 0;
    let mut best_v = axis_objective(p, sign, 0.0); // x = 0: value 2(A-B)
    for k in 1..=n_r {
        let v = axis_objective(p, sign, r_at(k));
        if v > best_v {
            best_v = v;
            best_k = k;
        }
    }
    let lo = if best_k == 0 { 0.0 } else { r_at(best_k - 1) };
    let hi = if best_k == n_r { X_CAP } else { r_at(best_k + 1).min(X_CAP) };
    golden_max(&|x| axis_objective(p, sign, x), lo, hi, REFINE_XTOL)
}

/// Radial supremum over both half-diameters: (value, signed argmax x, iters).
pub fn radial_sup(p: JanowskiParams, n_r: usize) -> (f64, f64, usize) {
    let (x_pos, v_pos, it_pos) = half_diameter_sup(p, 1.0, n_r);
    let (x_neg, v_neg, it_neg) = half_diameter_sup(p, -1.0, n_r);
    if v_pos >= v_neg {
        (v_pos, x_pos, it_pos + it_neg)
    } else {
        (v_neg, -x_neg, it_pos + it_neg)
    }
}

/// Brute-force disk supremum of (1-|z|^2)|T_K(z)|.
///
/// Grid: r = k/(n_r+1) for k = 1..=n_r, theta = 2 pi j/n_theta for
/// j = 0..n_theta. Then both half-diameters are refined by golden section
/// and reported as `radial_refined`.
pub fn disk_sup(p: JanowskiParams, n_r: usize, n_theta: usize) -> GridReport {
    debug_assert!(n_r >= 64 && n_theta >= 64);
    let mut sup_value = f64::NEG_INFINITY;
    let mut argmax = Complex64::new(0.0, 0.0);
    let (mut best_theta, mut best_r) = (f64::INFINITY, f64::INFINITY);
    for k in 1..=n_r {
        let r = k as f64 / (n_r + 1) as f64;
        let weight = (1.0 - r) * (1.0 + r);
        for j in 0..n_theta {
            let theta = std::f64::consts::TAU * j as f64 / n_theta as f64;
            let z = Complex64::from_polar(r, theta);
            let v = weight * norm::t_k(p, z).norm();
            let better = v > sup_value
                || (v == sup_value && (theta < best_theta || (theta == best_theta && r < best_r)));
            if better {
                sup_value = v;
                argmax = z;
                best_theta = theta;
                best_r = r;
            }
        }
    }
    let (radial_refined, _, refine_iters) = radial_sup(p, n_r);
    GridReport {
        sup_value,
        argmax,
        radial_refined,
        refine_iters,
    }
}

/// Max of (1-r^2)|T_K(r e^{i theta})| over an n_theta-point circle grid,
/// with the attaining angle (ties to the smallest theta).
pub fn circle_sup(p: JanowskiParams, r: f64, n_theta: usize) -> (f64, f64) {
    debug_assert!(r > 0.0 && r < 1.0 && n_theta >= 64);
    let weight = (1.0 - r) * (1.0 + r);
    let mut best = f64::NEG_INFINITY;
    let mut best_theta = 0.0;
    for j in 0..n_theta {
        let theta = std::f64::consts::TAU * j as f64 / n_theta as f64;
        let v = weight * norm::t_k(p, Complex64::from_polar(r, theta)).norm();
        if v > best {
            best = v;
            best_theta = theta;
        }
    }
    (best, best_theta)
}
