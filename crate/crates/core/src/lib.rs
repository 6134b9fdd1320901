//! Exact power-reduction and multiple-angle expansions of `cos` and `sin`,
//! closed-form Fourier series of `1/(a - cos t)` and `1/(a - sin t)`, and
//! quadrature-based verification of all of them.
//!
//! - [`kernels`]: exact binomials and binomial-sum identities
//! - [`trigpoly`]: exact trigonometric polynomials and power expansions
//! - [`expansions`]: multiple-angle and power-reduction generators plus oracles
//! - [`reciprocal`]: Fourier coefficients of `1/(a - cos t)`, `1/(a - sin t)`
//! - [`verify`]: trapezoidal Fourier analysis and coefficient comparison
//! - [`cli`]: the `trigpow` command-line front end

pub mod cli;
pub mod error;
pub mod expansions;
pub mod kernels;
mod rational;
pub mod reciprocal;
pub mod trigpoly;
pub mod verify;

pub use error::{Error, Result};
pub use expansions::{
    chebyshev_oracle, cos_multiple_angle, cos_power_fourier, power_fourier, power_product_oracle,
    sin_multiple_angle, sin_power_fourier, to_fourier, Parity,
};
pub use kernels::{
    binomial, cheie_sum, cooc_sum, kernel_alpha, kernel_alpha_dprime, kernel_alpha_prime,
    kernel_bruteforce, kernel_closed_form, lemma2_sum, KernelKind, SumMode,
};
pub use reciprocal::{RealTrigSeries, ReciprocalParams};
pub use trigpoly::{Base, PowerExpansion, Rational, TrigPolynomial};
pub use verify::{compare, numeric_fourier, Quadrature, VerificationReport};
