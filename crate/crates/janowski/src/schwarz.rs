//! Schwarz functions as finite Blaschke-type products, and the functional
//! inequalities they witness.
//!
//! omega(z) = rotation * z * prod_k (z - a_k)/(1 - conj(a_k) z) is an
//! analytic self-map of the disk with omega(0) = 0 by construction, dense
//! enough to falsify the class inequalities while admitting exact
//! derivatives. Every member f of S*(A,B) arises from such an omega through
//! z f'(z)/f(z) = (1 + A omega)/(1 + B omega), and its pre-Schwarzian is
//! the closed expression evaluated by [`t_f`].

use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

use crate::params::JanowskiParams;

/// Finite Blaschke-type Schwarz function: one mandatory z factor times
/// disk-automorphism factors, times a unimodular rotation.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzMap {
    rotation: Complex64,
    zeros: Vec<Complex64>,
}

/// Construction failures for [`SchwarzMap::new`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchwarzError {
    #[error("rotation must be unimodular, got modulus {modulus}")]
    RotationNotUnimodular { modulus: f64 },
    #[error("Blaschke zero must satisfy |a| < 1, got modulus {modulus}")]
    ZeroOutsideDisk { modulus: f64 },
}

/// Domain failures of [`m_value`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MValueError {
    #[error("M(z) requires -1 < A <= 1, got A = {a}")]
    AOutOfRange { a: f64 },
    #[error("M(z) is undefined at z = 0")]
    OriginExcluded,
}

/// omega(z), omega'(z), and omega(z)/z, the last from the factored form
/// with the explicit z dropped (finite at z = 0, no cancellation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzEval {
    pub value: Complex64,
    pub derivative: Complex64,
    pub value_over_z: Complex64,
}

impl SchwarzMap {
    /// Build omega from a unimodular rotation and Blaschke zeros inside the
    /// disk. Both conditions are enforced.
    pub fn new(rotation: Complex64, zeros: Vec<Complex64>) -> Result<Self, SchwarzError> {
        let modulus = rotation.norm();
        if (modulus - 1.0).abs() > 1e-12 {
            return Err(SchwarzError::RotationNotUnimodular { modulus });
        }
        for a in &zeros {
            if a.norm() >= 1.0 {
                return Err(SchwarzError::ZeroOutsideDisk { modulus: a.norm() });
            }
        }
        Ok(Self { rotation, zeros })
    }

    /// The identity map omega(z) = z.
    pub fn identity() -> Self {
        Self {
            rotation: Complex64::new(1.0, 0.0),
            zeros: Vec::new(),
        }
    }

    pub fn rotation(&self) -> Complex64 {
        self.rotation
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    /// Draw a random map: factor count uniform on 0..=5, zeros uniform on
    /// |a| < 0.95 (near-boundary zeros make the suites needlessly stiff),
    /// rotation uniform on the circle.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let count: usize = rng.gen_range(0..=5);
        let zeros = (0..count)
            .map(|_| {
                let r = 0.95 * rng.gen::<f64>().sqrt();
                let theta = rng.gen_range(0.0..std::f64::consts::TAU);
                Complex64::from_polar(r, theta)
            })
            .collect();
        let rotation = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        Self { rotation, zeros }
    }

    /// Evaluate (omega(z), omega'(z), omega(z)/z) exactly.
    ///
    /// The Blaschke product and its derivative accumulate through the
    /// product rule, so the derivative stays exact at factor zeros.
    pub fn eval(&self, z: Complex64) -> SchwarzEval {
        let one = Complex64::new(1.0, 0.0);
        let mut prod = one;
        let mut dprod = Complex64::new(0.0, 0.0);
        for a in &self.zeros {
            let denom = one - a.conj() * z;
            let factor = (z - a) / denom;
            let dfactor = (1.0 - a.norm_sqr()) / (denom * denom);
            dprod = dprod * factor + prod * dfactor;
            prod *= factor;
        }
        let value_over_z = self.rotation * prod;
        SchwarzEval {
            value: z * value_over_z,
            derivative: value_over_z + z * self.rotation * dprod,
            value_over_z,
        }
    }
}

/// The Schwarz-function quotient bounded by 1 for -1 < A <= 1:
///
/// ```text
/// M(z) = [ (|z|^2 - |w|^2) + |w| (1 - |z|^2) |2 + Aw| ]
///        / [ |z| (1 - |w|^2) |2 + Aw| ],   w = omega(z).
/// ```
pub fn m_value(a: f64, omega: &SchwarzMap, z: Complex64) -> Result<f64, MValueError> {
    if !(a > -1.0 && a <= 1.0) {
        return Err(MValueError::AOutOfRange { a });
    }
    if z == Complex64::new(0.0, 0.0) {
        return Err(MValueError::OriginExcluded);
    }
    let w = omega.eval(z).value;
    let zm = z.norm();
    let wm = w.norm();
    let shift = (Complex64::new(2.0, 0.0) + a * w).norm();
    let numerator = (zm * zm - wm * wm) + wm * (1.0 - zm * zm) * shift;
    let denominator = zm * (1.0 - wm * wm) * shift;
    Ok(numerator / denominator)
}

/// Slack in the Schwarz-Pick bound for omega(z)/z:
/// (|z|^2 - |omega|^2)/|z| - (1 - |z|^2) |omega' - omega/z|, nonnegative on
/// 0 < |z| < 1.
pub fn schwarz_pick_gap(omega: &SchwarzMap, z: Complex64) -> f64 {
    let e = omega.eval(z);
    let zm = z.norm();
    let wm = e.value.norm();
    (zm * zm - wm * wm) / zm - (1.0 - zm * zm) * (e.derivative - e.value_over_z).norm()
}

/// Pre-Schwarzian derivative of the member of S*(A,B) generated by omega:
///
/// ```text
/// T_f(z) = (A-B) [ omega' - omega/z + (omega/z)(2 + A omega) ]
///          / [ (1 + A omega)(1 + B omega) ]
/// ```
///
/// Finite at z = 0 through the factored omega/z; omega = id recovers
/// [`crate::norm::t_k`].
pub fn t_f(p: JanowskiParams, omega: &SchwarzMap, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let two = Complex64::new(2.0, 0.0);
    let e = omega.eval(z);
    let w = e.value;
    let numerator = e.derivative - e.value_over_z + e.value_over_z * (two + p.a() * w);
    (p.a() - p.b()) * numerator / ((one + p.a() * w) * (one + p.b() * w))
}

/// Grid lower bound for ||T_f||: max of (1-|z|^2)|T_f(z)| over the polar
/// grid r = k/(n_r+1), theta = 2 pi j / n_theta.
pub fn sampled_norm(p: JanowskiParams, omega: &SchwarzMap, n_r: usize, n_theta: usize) -> f64 {
    debug_assert!(n_r >= 8 && n_theta >= 8);
    let mut best = 0.0_f64;
    for k in 1..=n_r {
        let r = k as f64 / (n_r + 1) as f64;
        let weight = (1.0 - r) * (1.0 + r);
        for j in 0..n_theta {
            let theta = std::f64::consts::TAU * j as f64 / n_theta as f64;
            let z = Complex64::from_polar(r, theta);
            let v = weight * t_f(p, omega, z).norm();
            if v > best {
                best = v;
            }
        }
    }
    best
}
