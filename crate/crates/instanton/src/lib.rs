//! Exact instanton partition functions on `C²` and its one-point blowup,
//! together with machine-checked series identities around them.
//!
//! Everything is exact: rationals, Gaussian rationals and truncated
//! series. Nothing in the verification path uses floating point.

pub mod error;
pub mod exactalg;

pub use error::{Error, Result};
pub mod combinatorics;
pub mod localization;
pub mod blowup;
pub mod swcurve;
pub mod prepotential;
pub mod betti;
pub mod ktheory;
pub mod perturb;
pub mod acceptance;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod ch00 {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod ch01 {}
    #[doc = include_str!("../../../book/src/young-diagrams.md")]
    mod ch02 {}
    #[doc = include_str!("../../../book/src/localization.md")]
    mod ch03 {}
    #[doc = include_str!("../../../book/src/blowup.md")]
    mod ch04 {}
    #[doc = include_str!("../../../book/src/prepotential.md")]
    mod ch05 {}
    #[doc = include_str!("../../../book/src/curve.md")]
    mod ch06 {}
    #[doc = include_str!("../../../book/src/betti.md")]
    mod ch07 {}
    #[doc = include_str!("../../../book/src/ktheory.md")]
    mod ch08 {}
    #[doc = include_str!("../../../book/src/perturbation.md")]
    mod ch09 {}
    #[doc = include_str!("../../../book/src/acceptance.md")]
    mod ch10 {}
}
