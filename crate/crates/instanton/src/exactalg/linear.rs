use std::fmt;

use num_traits::{One, Zero};

use super::ring::{fmt_rat, Rat};

/// `e1*ε₁ + e2*ε₂ + c` with rational coefficients.
///
/// Every parameter handed to localization (Ω-background and Coulomb
/// values, including blowup shifts like `a + ε₁k`) is one of these.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pub e1: Rat,
    pub e2: Rat,
    pub c: Rat,
}

impl LinearForm {
    pub fn new(e1: Rat, e2: Rat, c: Rat) -> Self {
        LinearForm { e1, e2, c }
    }

    pub fn constant(c: Rat) -> Self {
        LinearForm::new(Rat::zero(), Rat::zero(), c)
    }

    pub fn zero() -> Self {
        Self::constant(Rat::zero())
    }

    pub fn eps1() -> Self {
        LinearForm::new(Rat::one(), Rat::zero(), Rat::zero())
    }

    pub fn eps2() -> Self {
        LinearForm::new(Rat::zero(), Rat::one(), Rat::zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        LinearForm::new(&self.e1 + &o.e1, &self.e2 + &o.e2, &self.c + &o.c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        LinearForm::new(&self.e1 - &o.e1, &self.e2 - &o.e2, &self.c - &o.c)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        LinearForm::new(&self.e1 * s, &self.e2 * s, &self.c * s)
    }

    pub fn neg(&self) -> Self {
        LinearForm::new(-&self.e1, -&self.e2, -&self.c)
    }

    pub fn is_zero(&self) -> bool {
        self.e1.is_zero() && self.e2.is_zero() && self.c.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.e1.is_zero() && self.e2.is_zero()
    }

    pub fn eval(&self, e1: &Rat, e2: &Rat) -> Rat {
        &self.e1 * e1 + &self.e2 * e2 + &self.c
    }

    /// Substitute `ε₁ ↦ f1`, `ε₂ ↦ f2`.
    pub fn substitute(&self, f1: &LinearForm, f2: &LinearForm) -> LinearForm {
        f1.scale(&self.e1).add(&f2.scale(&self.e2)).add(&LinearForm::constant(self.c.clone()))
    }

    /// Split as `scalar * monic` where the first nonzero of `(e1, e2, c)` in
    /// the monic form is 1. `None` for the zero form.
    pub fn normalize(&self) -> Option<(Rat, LinearForm)> {
        let lead = if !self.e1.is_zero() {
            self.e1.clone()
        } else if !self.e2.is_zero() {
            self.e2.clone()
        } else if !self.c.is_zero() {
            self.c.clone()
        } else {
            return None;
        };
        let inv = lead.recip();
        Some((lead, self.scale(&inv)))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, name) in [(&self.e1, "e1"), (&self.e2, "e2")] {
            if !c.is_zero() {
                parts.push(format!("{}*{}", fmt_rat(c), name));
            }
        }
        if !self.c.is_zero() || parts.is_empty() {
            parts.push(fmt_rat(&self.c));
        }
        write!(f, "({})", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::rat;

    #[test]
    fn normalize_makes_leading_one() {
        let f = LinearForm::new(rat(0, 1), rat(3, 2), rat(1, 1));
        let (s, g) = f.normalize().unwrap();
        assert_eq!(s, rat(3, 2));
        assert_eq!(g, LinearForm::new(rat(0, 1), rat(1, 1), rat(2, 3)));
        assert!(LinearForm::zero().normalize().is_none());
    }

    #[test]
    fn substitution() {
        // ε₁ - ε₂ under (ε₁, ε₂ - ε₁) is 2ε₁ - ε₂
        let f = LinearForm::new(rat(1, 1), rat(-1, 1), rat(0, 1));
        let g = f.substitute(&LinearForm::eps1(), &LinearForm::eps2().sub(&LinearForm::eps1()));
        assert_eq!(g, LinearForm::new(rat(2, 1), rat(-1, 1), rat(0, 1)));
    }
}
