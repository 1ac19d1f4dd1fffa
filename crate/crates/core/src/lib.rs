//! Exact and floating-point machinery for Gegenbauer polynomials.
//!
//! The crate is generic over the coefficient field ([`Field`]): use
//! [`Rational`] for exact arithmetic and `f64` (or `f32`) for floating point.
//! Type aliases for the common instantiations are provided below.
//!
//! ```
//! use gegenbauer_core::{identity, Rational};
//!
//! let lambda: Rational = "3/2".parse().unwrap();
//! let report = identity::verify(&lambda, 5).unwrap();
//! assert!(report.passes(0.0));
//! ```

pub mod error;
pub mod gegenbauer;
pub mod identity;
pub mod pochhammer;
pub mod polynomial;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use gegenbauer::{GegenbauerParams, GegenbauerTable, Route, Tolerances};
pub use identity::{IdentityReport, Outcome};
pub use polynomial::Polynomial;
pub use scalar::{Field, Ring};
pub use series::TruncatedSeries;

pub use num_complex::Complex;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub type ExactPolynomial = Polynomial<Rational>;
pub type FloatPolynomial = Polynomial<f64>;
pub type ExactSeries = TruncatedSeries<Rational>;
pub type FloatSeries = TruncatedSeries<f64>;
pub type ComplexSeries = TruncatedSeries<Complex<f64>>;
pub type ExactTable = GegenbauerTable<Rational>;
pub type FloatTable = GegenbauerTable<f64>;
pub type ExactReport = IdentityReport<Rational>;
pub type FloatReport = IdentityReport<f64>;
