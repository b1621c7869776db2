use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Rat = BigRational;

/// Gaussian rational `x + y i`.
pub type Gauss = Complex<BigRational>;

/// Coefficient ring used by every series and polynomial container.
///
/// All rings here are algebras over the rationals, so `scale` by a
/// rational is always available. `inv` returns `None` for non-units.
pub trait Coeff: Clone + Debug + PartialEq + Send + Sync {
    fn zero_elt() -> Self;
    fn one_elt() -> Self;
    fn is_zero_elt(&self) -> bool;
    fn is_one_elt(&self) -> bool {
        *self == Self::one_elt()
    }
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, c: &Rat) -> Self;

    fn from_rat(c: &Rat) -> Self {
        Self::one_elt().scale(c)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&rat(n, 1))
    }

    fn try_inv(&self) -> Option<Self> {
        None
    }

    /// `exp` of a nilpotent element, when the ring can decide nilpotency.
    fn exp_nilpotent(&self) -> Option<Self> {
        if self.is_zero_elt() {
            Some(Self::one_elt())
        } else {
            None
        }
    }

    /// `log` of `1 + nilpotent`.
    fn log_unipotent(&self) -> Option<Self> {
        if self.is_one_elt() {
            Some(Self::zero_elt())
        } else {
            None
        }
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one_elt();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn gauss(re: Rat, im: Rat) -> Gauss {
    Complex::new(re, im)
}

pub fn gauss_i() -> Gauss {
    Complex::new(Rat::zero(), Rat::one())
}

pub fn gauss_real(re: Rat) -> Gauss {
    Complex::new(re, Rat::zero())
}

impl Coeff for Rat {
    fn zero_elt() -> Self {
        Zero::zero()
    }
    fn one_elt() -> Self {
        One::one()
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
    fn from_rat(c: &Rat) -> Self {
        c.clone()
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for Gauss {
    fn zero_elt() -> Self {
        Complex::new(Rat::zero(), Rat::zero())
    }
    fn one_elt() -> Self {
        Complex::new(Rat::one(), Rat::zero())
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rat) -> Self {
        Complex::new(&self.re * c, &self.im * c)
    }
    fn from_rat(c: &Rat) -> Self {
        Complex::new(c.clone(), Rat::zero())
    }
    fn try_inv(&self) -> Option<Self> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if Zero::is_zero(&n) {
            None
        } else {
            Some(Complex::new(&self.re / &n, -&self.im / &n))
        }
    }
}

/// Render a rational as `num/den` (or `num` when integral).
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Absolute value of a rational.
pub fn abs_rat(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rat(2, 3).pow(5), rat(32, 243));
        assert_eq!(rat(7, 1).pow(0), rat(1, 1));
    }

    #[test]
    fn gauss_inverse() {
        let z = gauss(rat(1, 1), rat(2, 1));
        let w = z.try_inv().unwrap();
        assert_eq!(z.times(&w), Gauss::one_elt());
        assert!(Gauss::zero_elt().try_inv().is_none());
    }
}
