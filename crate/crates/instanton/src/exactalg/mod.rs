//! Exact arithmetic: rationals, Gaussian rationals, truncated series,
//! bivariate rational functions and graded coupling polynomials.

pub mod bivariate;
pub mod graded;
pub mod linear;
pub mod ring;
pub mod sample;
pub mod series;

pub use crate::error::Error as AlgError;
pub use bivariate::{eps1, eps2, Brf, BivariateRationalFunction, Poly2};
pub use graded::{GradedTauPolynomial, Mono, Truncation};
pub use linear::LinearForm;
pub use ring::{gauss, gauss_i, gauss_real, rat, rat_int, Coeff, Gauss, Rat};
pub use sample::{rational_sample, SampleConstraints, SamplePoint};
pub use series::{JsonSeries, QSeries, Series, TruncatedSeries, EXACT};
