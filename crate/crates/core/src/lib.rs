//! Degenerate hypergeometric functions: the normalized solutions 𝔽 of the
//! ₀F₁, ₁F₁ and ₂F₁ equations, their logarithmic companions 𝔇, the solutions
//! U normalized at infinity, and an executable catalog of the identities that
//! tie them together.
//!
//! Parameters follow the Lie-algebraic convention: α for ₀F₁, (θ, α) for ₁F₁
//! and (α, β, μ) for ₂F₁, see [`params::EquationParams`].

pub mod error;
pub mod gammakit;
pub mod hyperd;
pub mod hyperf;
pub mod hyperu;
pub mod oracle;
pub mod params;
pub mod relations;
pub mod series;
pub mod verify;

pub use num_complex::Complex64 as C64;

pub use error::{HyperError, Result};
pub use hyperd::{d_eval, d_expand, log_solution, DSpec, LaurentExpansion};
pub use hyperf::{f2_norm_i, f2f0_asymptotic, f_norm, f_second};
pub use hyperu::{bessel, u0, u1, u2, BesselKind, URoute};
pub use params::{EquationKind, EquationParams, FunctionId};
pub use series::{EvalResult, Flags, Jet, JetResult, SeriesOpts};
