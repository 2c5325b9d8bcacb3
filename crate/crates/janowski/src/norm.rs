//! Closed-form evaluation of the sharp pre-Schwarzian norm over S*(A,B).
//!
//! The extremal member K_{A,B} has T_K(z) = (A-B)(2+Az)/((1+Az)(1+Bz)), and
//! its norm sup_(|z|<1) (1-|z|^2)|T_K(z)| reduces, branch by branch, either
//! to a closed constant or to (A-B) gamma(x*) at a certified quartic root.

use num_complex::Complex64;
use thiserror::Error;

use crate::params::{Branch, CaseTag, JanowskiParams};
use crate::radial::{self, Quartic, RadialProfile, RootCertificate, RootError, Side};

/// K_{A,B}(z): z e^{Az} when B = 0, else z (1+Bz)^{A/B - 1} on the principal
/// branch. Re(1 + Bz) > 0 for |z| < 1, |B| <= 1, so the principal log never
/// crosses its cut.
pub fn extremal_k(p: JanowskiParams, z: Complex64) -> Complex64 {
    let (a, b) = (p.a(), p.b());
    if b == 0.0 {
        z * (a * z).exp()
    } else {
        let one = Complex64::new(1.0, 0.0);
        z * ((a / b - 1.0) * (one + b * z).ln()).exp()
    }
}

/// T_{K_{A,B}}(z) = K''/K' = (A-B)(2+Az)/((1+Az)(1+Bz)).
pub fn t_k(p: JanowskiParams, z: Complex64) -> Complex64 {
    (p.a() - p.b()) * radial::phi(p, z)
}

/// Sharp norm value with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct NormResult {
    /// ||T_{K_{A,B}}|| = sup (1-|z|^2)|T_K(z)|.
    pub value: f64,
    /// Branch taken and beta when defined.
    pub case: CaseTag,
    /// Radial location of the supremum; endpoint branches report the limit
    /// location (x = 1, or x = 0 on the A + 2B = 0 boundary).
    pub argmax_x: f64,
    /// Axis of the supremum: z = +argmax_x or z = -argmax_x.
    pub axis: Side,
    /// Certificate for the consumed quartic root, when the branch needs one.
    pub root_cert: Option<RootCertificate>,
}

/// Compute the sharp pre-Schwarzian norm for S*(A,B).
///
/// `tol` is the bisection width forwarded to the root finder
/// ([`radial::DEFAULT_ROOT_TOL`] is the usual choice). Root-finder errors are
/// propagated; they cannot occur for validated parameters.
pub fn preschwarzian_norm(p: JanowskiParams, tol: f64) -> Result<NormResult, RootError> {
    let case = p.classify();
    let (a, b) = (p.a(), p.b());
    let result = match case.branch {
        Branch::BNeg1 => NormResult {
            value: 2.0 * (2.0 + a),
            case,
            argmax_x: 1.0,
            axis: Side::PositiveAxis,
            root_cert: None,
        },
        Branch::A1BGeThird => NormResult {
            value: 2.0,
            case,
            argmax_x: 1.0,
            axis: Side::NegativeAxis,
            root_cert: None,
        },
        Branch::MixedBoundary => NormResult {
            value: 2.0 * (a - b),
            case,
            argmax_x: 0.0,
            axis: Side::NegativeAxis,
            root_cert: None,
        },
        Branch::NonnegAbRootH1 | Branch::A1BLtThird | Branch::MixedRootH1 => {
            let cert = radial::find_root(Quartic::H1, p, tol)?;
            NormResult {
                value: (a - b) * radial::gamma(RadialProfile::Gamma1, p, cert.root),
                case,
                argmax_x: cert.root,
                axis: Side::NegativeAxis,
                root_cert: Some(cert),
            }
        }
        Branch::NonposAbRootH2 | Branch::MixedBetaGe1 => {
            let cert = radial::find_root(Quartic::H2, p, tol)?;
            NormResult {
                value: (a - b) * radial::gamma(RadialProfile::Gamma2, p, cert.root),
                case,
                argmax_x: cert.root,
                axis: Side::PositiveAxis,
                root_cert: Some(cert),
            }
        }
        Branch::MixedBetaLt1 => {
            let beta = case.beta.expect("beta defined on this branch");
            let cert = radial::find_root_in(Quartic::H2, p, 0.0, beta, tol)?;
            let g2 = radial::gamma(RadialProfile::Gamma2, p, cert.root);
            let g1 = radial::gamma(RadialProfile::Gamma1, p, beta);
            // Ties go to the positive axis; the values coincide there anyway.
            if g2 >= g1 {
                NormResult {
                    value: (a - b) * g2,
                    case,
                    argmax_x: cert.root,
                    axis: Side::PositiveAxis,
                    root_cert: Some(cert),
                }
            } else {
                NormResult {
                    value: (a - b) * g1,
                    case,
                    argmax_x: beta,
                    axis: Side::NegativeAxis,
                    root_cert: Some(cert),
                }
            }
        }
    };
    Ok(result)
}

/// [`preschwarzian_norm`] at the default root tolerance.
pub fn sharp_norm(p: JanowskiParams) -> Result<NormResult, RootError> {
    preschwarzian_norm(p, radial::DEFAULT_ROOT_TOL)
}

/// Classical subclasses with published closed or quartic-root norm values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CorollaryClass {
    /// Starlike of order alpha, 0 <= alpha < 1: parameters (1-2 alpha, -1).
    OrderAlpha(f64),
    /// The full starlike class: parameters (1, -1).
    Starlike,
    /// The Singh-Singh class: parameters (1, 0).
    SinghSingh,
    /// The Padmanabhan class, 0 < alpha <= 1: parameters (alpha, -alpha).
    Padmanabhan(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorollaryError {
    #[error("starlike order requires 0 <= alpha < 1, got {alpha}")]
    OrderAlphaOutOfRange { alpha: f64 },
    #[error("the Padmanabhan class requires 0 < alpha <= 1, got {alpha}")]
    PadmanabhanAlphaOutOfRange { alpha: f64 },
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Sharp norm for the classical subclasses.
///
/// OrderAlpha gives 6 - 4 alpha, Starlike 6, SinghSingh 9/4. Padmanabhan
/// with alpha < 1 evaluates 2 alpha (1-x0^2)(2+alpha x0)/(1-alpha^2 x0^2) at
/// the unique (0,1)-root x0 of
/// alpha^3 x^4 + (alpha^3 - 3 alpha) x^2 + (4 alpha^2 - 4) x + alpha = 0,
/// and alpha = 1 gives 6.
pub fn corollary_norm(class: CorollaryClass) -> Result<f64, CorollaryError> {
    match class {
        CorollaryClass::OrderAlpha(alpha) => {
            if !(0.0..1.0).contains(&alpha) {
                return Err(CorollaryError::OrderAlphaOutOfRange { alpha });
            }
            Ok(6.0 - 4.0 * alpha)
        }
        CorollaryClass::Starlike => Ok(6.0),
        CorollaryClass::SinghSingh => Ok(9.0 / 4.0),
        CorollaryClass::Padmanabhan(alpha) => {
            if !(alpha > 0.0 && alpha <= 1.0) {
                return Err(CorollaryError::PadmanabhanAlphaOutOfRange { alpha });
            }
            if alpha == 1.0 {
                return Ok(6.0);
            }
            let a3 = alpha * alpha * alpha;
            let quartic =
                |x: f64| ((a3 * x * x + (a3 - 3.0 * alpha)) * x + (4.0 * alpha * alpha - 4.0)) * x
                    + alpha;
            let cert = radial::bracket_root(
                &quartic,
                0.0,
                1.0,
                radial::SCAN_SUBINTERVALS,
                radial::DEFAULT_ROOT_TOL,
            )?;
            let x0 = cert.root;
            Ok(2.0 * alpha * (1.0 - x0 * x0) * (2.0 + alpha * x0)
                / (1.0 - alpha * alpha * x0 * x0))
        }
    }
}
