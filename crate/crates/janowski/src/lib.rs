//! Sharp pre-Schwarzian norms for the Janowski starlike classes S*(A,B),
//! with independent brute-force verification of every step.
//!
//! For -1 <= B < A <= 1, S*(A,B) collects the normalized analytic functions
//! f on the unit disk whose zf'/f is subordinate to (1+Az)/(1+Bz). The
//! pre-Schwarzian norm ||T_f|| = sup (1-|z|^2)|f''/f'| over this class is
//! attained by the kernel member K_{A,B}, and the sharp value reduces to a
//! nine-branch closed dispatch over (A, B): either a constant such as
//! 2(2 + A), or (A-B) gamma(x*) at a certified root x* of an explicit
//! quartic.
//!
//! The crate pairs that closed route with independent checks:
//!
//! - [`oracle`]: dense polar-grid suprema with golden-section radial
//!   refinement, never consulting the branch dispatch;
//! - [`schwarz`]: random class members built from Blaschke-type Schwarz
//!   functions, whose sampled norms must stay below the sharp bound;
//! - [`verify`]: seeded suites wiring both into pass/fail summaries.
//!
//! # Quick start
//!
//! ```
//! use janowski::{params, norm};
//!
//! let p = params::validate(1.0, -1.0).unwrap(); // the full starlike class
//! let result = norm::sharp_norm(p).unwrap();
//! assert!((result.value - 6.0).abs() < 1e-12);
//! ```
//!
//! The `janowski` binary exposes the same functionality as `compute`,
//! `table`, `verify`, and `profile` subcommands, and the `examples/`
//! directory walks through each capability.

pub mod cli;
pub mod norm;
pub mod oracle;
pub mod params;
pub mod radial;
pub mod schwarz;
pub mod verify;

pub use norm::{
    corollary_norm, extremal_k, preschwarzian_norm, sharp_norm, t_k, CorollaryClass,
    CorollaryError, NormResult,
};
pub use oracle::{circle_sup, disk_sup, radial_sup, GridReport};
pub use params::{validate, Branch, CaseTag, JanowskiParams, ParamError};
pub use radial::{
    circle_max_side, count_sign_changes, find_root, find_root_in, gamma, h1, h2, phi, psi,
    Quartic, RadialProfile, RootCertificate, RootError, Side,
};
pub use schwarz::{m_value, sampled_norm, schwarz_pick_gap, t_f, SchwarzEval, SchwarzMap};
pub use verify::{all_suites, lemma_suite, schwarz_suite, theorem_suite, SuiteOutcome};
