//! Parameter validation and case classification for the Janowski starlike
//! classes S*(A,B).
//!
//! A pair (A, B) is admissible when -1 <= B < A <= 1 (so A > -1 always
//! holds). Every admissible pair falls into exactly one of nine norm-formula
//! branches; [`JanowskiParams::classify`] performs that dispatch.

use thiserror::Error;

/// Absolute tolerance on A + 2B for detecting the boundary branch.
///
/// The two branches adjacent to A + 2B = 0 converge to the same norm
/// 2(A - B), so routing a thin band through the boundary formula is safe.
pub const BOUNDARY_TOL: f64 = 1e-14;

/// A validated Janowski parameter pair with -1 <= B < A <= 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiParams {
    a: f64,
    b: f64,
}

/// Rejection reasons for [`validate`]. Each variant names the violated bound.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("parameters must be finite, got A = {a}, B = {b}")]
    NonFinite { a: f64, b: f64 },
    #[error("A must satisfy A <= 1, got A = {a}")]
    UpperOutOfRange { a: f64 },
    #[error("B must satisfy B >= -1, got B = {b}")]
    LowerOutOfRange { b: f64 },
    #[error("A must satisfy A > -1, got A = {a}")]
    UpperDegenerate { a: f64 },
    #[error("parameters must satisfy B < A, got A = {a}, B = {b}")]
    OrderViolated { a: f64, b: f64 },
}

/// Norm-formula branch for an admissible (A, B).
///
/// Exactly one branch applies to each pair; ties on the A + 2B = 0 seam and
/// at beta = 1 are broken as documented on [`JanowskiParams::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// B = -1 (any admissible A): norm 2(2 + A), attained along the positive axis.
    BNeg1,
    /// 0 <= B < A < 1: norm (A-B) gamma1(alpha1) with alpha1 the h1 root.
    NonnegAbRootH1,
    /// A = 1, 0 <= B < 1/3: same formula as [`Branch::NonnegAbRootH1`].
    A1BLtThird,
    /// A = 1, B >= 1/3: norm 2, supremum attained in the x -> 1 limit.
    A1BGeThird,
    /// -1 < B < A <= 0: norm (A-B) gamma2(alpha2) with alpha2 the h2 root.
    NonposAbRootH2,
    /// AB < 0, A + 2B > 0: norm (A-B) gamma1(alpha1).
    MixedRootH1,
    /// AB < 0, A + 2B = 0: norm 2(A - B), attained at the origin.
    MixedBoundary,
    /// AB < 0, A + 2B < 0, beta < 1: norm (A-B) max{gamma2(alpha2), gamma1(beta)}.
    MixedBetaLt1,
    /// AB < 0, A + 2B < 0, beta >= 1, B != -1: norm (A-B) gamma2(alpha2).
    MixedBetaGe1,
}

impl Branch {
    /// Stable identifier used in CLI and file output.
    pub fn name(self) -> &'static str {
        match self {
            Branch::BNeg1 => "B_NEG1",
            Branch::NonnegAbRootH1 => "NONNEG_AB_ROOT_H1",
            Branch::A1BLtThird => "A1_B_LT_THIRD",
            Branch::A1BGeThird => "A1_B_GE_THIRD",
            Branch::NonposAbRootH2 => "NONPOS_AB_ROOT_H2",
            Branch::MixedRootH1 => "MIXED_ROOT_H1",
            Branch::MixedBoundary => "MIXED_BOUNDARY",
            Branch::MixedBetaLt1 => "MIXED_BETA_LT1",
            Branch::MixedBetaGe1 => "MIXED_BETA_GE1",
        }
    }
}

/// Branch assignment together with the circle-switch radius beta when it exists.
///
/// beta = sqrt((A + 2B) / (A^2 B)) is carried exactly when AB < 0 with
/// A + 2B <= 0 and B != -1; for A + 2B > 0 the radicand is negative and the
/// field is absent, and the B = -1 branch never consults it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseTag {
    pub branch: Branch,
    pub beta: Option<f64>,
}

/// Validate a parameter pair, rejecting anything outside -1 <= B < A <= 1.
pub fn validate(a: f64, b: f64) -> Result<JanowskiParams, ParamError> {
    JanowskiParams::new(a, b)
}

impl JanowskiParams {
    /// Validate and construct. See [`ParamError`] for the rejection cases.
    pub fn new(a: f64, b: f64) -> Result<Self, ParamError> {
        if !a.is_finite() || !b.is_finite() {
            return Err(ParamError::NonFinite { a, b });
        }
        if a > 1.0 {
            return Err(ParamError::UpperOutOfRange { a });
        }
        if b < -1.0 {
            return Err(ParamError::LowerOutOfRange { b });
        }
        if a <= -1.0 {
            return Err(ParamError::UpperDegenerate { a });
        }
        if b >= a {
            return Err(ParamError::OrderViolated { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(self) -> f64 {
        self.a
    }

    pub fn b(self) -> f64 {
        self.b
    }

    /// Assign the unique norm-formula branch for this pair.
    ///
    /// Tie-breaks: |A + 2B| <= [`BOUNDARY_TOL`] selects [`Branch::MixedBoundary`];
    /// beta = 1 exactly selects [`Branch::MixedBetaGe1`] (gamma1(beta) vanishes
    /// there, so the two adjacent formulas agree); A = 1 is compared exactly,
    /// it is a structural choice rather than a computed quantity.
    pub fn classify(self) -> CaseTag {
        let (a, b) = (self.a, self.b);
        if b == -1.0 {
            return CaseTag {
                branch: Branch::BNeg1,
                beta: None,
            };
        }
        if a * b >= 0.0 {
            if b >= 0.0 {
                // 0 <= B < A <= 1
                let branch = if a == 1.0 {
                    if b < 1.0 / 3.0 {
                        Branch::A1BLtThird
                    } else {
                        Branch::A1BGeThird
                    }
                } else {
                    Branch::NonnegAbRootH1
                };
                CaseTag { branch, beta: None }
            } else {
                // -1 < B < A <= 0
                CaseTag {
                    branch: Branch::NonposAbRootH2,
                    beta: None,
                }
            }
        } else {
            // AB < 0, hence -1 < B < 0 < A <= 1
            let s = a + 2.0 * b;
            let beta = if s <= 0.0 {
                // .abs() normalizes the -0.0 that sqrt produces at s = 0.
                Some((s / (a * a * b)).sqrt().abs())
            } else {
                None
            };
            let branch = if s.abs() <= BOUNDARY_TOL {
                Branch::MixedBoundary
            } else if s > 0.0 {
                Branch::MixedRootH1
            } else if beta.expect("s < 0 implies beta") < 1.0 {
                Branch::MixedBetaLt1
            } else {
                Branch::MixedBetaGe1
            };
            CaseTag { branch, beta }
        }
    }
}
