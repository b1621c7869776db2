//! Polynomials and rational functions in `(ε₁, ε₂)`.
//!
//! Denominators are multisets of monic linear forms. Sums go over the
//! least common multiple of the two multisets and every result is reduced
//! by trial division, so the representation is canonical.

use std::collections::BTreeMap;
use std::fmt;



use num_traits::{One, Zero};

use super::linear::LinearForm;
use super::ring::{fmt_rat, Coeff, Rat};
use super::AlgError;

/// Polynomial in `(ε₁, ε₂)`; keys are `(deg ε₁, deg ε₂)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly2::zero();
        p.add_term((0, 0), c);
        p
    }

    pub fn monomial(i: u32, j: u32, c: Rat) -> Self {
        let mut p = Poly2::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn from_form(f: &LinearForm) -> Self {
        let mut p = Poly2::zero();
        p.add_term((1, 0), f.e1.clone());
        p.add_term((0, 1), f.e2.clone());
        p.add_term((0, 0), f.c.clone());
        p
    }

    fn add_term(&mut self, k: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// The constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (k, c) in &o.terms {
            p.add_term(*k, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly2 { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Poly2::zero();
        }
        Poly2 { terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Poly2::zero();
        for ((i, j), c) in &self.terms {
            for ((k, l), d) in &o.terms {
                p.add_term((i + k, j + l), c * d);
            }
        }
        p
    }

    /// Product truncated to total degree `<= d`.
    pub fn mul_trunc(&self, o: &Self, d: u32) -> Self {
        let mut p = Poly2::zero();
        for ((i, j), c) in &self.terms {
            if i + j > d {
                continue;
            }
            for ((k, l), e) in &o.terms {
                if i + j + k + l <= d {
                    p.add_term((i + k, j + l), c * e);
                }
            }
        }
        p
    }

    pub fn mul_form(&self, f: &LinearForm) -> Self {
        let mut p = Poly2::zero();
        for ((i, j), c) in &self.terms {
            p.add_term((i + 1, *j), c * &f.e1);
            p.add_term((*i, j + 1), c * &f.e2);
            p.add_term((*i, *j), c * &f.c);
        }
        p
    }

    pub fn truncate(&self, d: u32) -> Self {
        Poly2 { terms: self.terms.iter().filter(|((i, j), _)| i + j <= d).map(|(k, c)| (*k, c.clone())).collect() }
    }

    pub fn eval(&self, e1: &Rat, e2: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for ((i, j), c) in &self.terms {
            acc += c * num_traits::pow(e1.clone(), *i as usize) * num_traits::pow(e2.clone(), *j as usize);
        }
        acc
    }

    /// Exact quotient by a monic linear form, or `None` when it does not divide.
    pub fn div_form(&self, f: &LinearForm) -> Option<Self> {
        if self.is_zero() {
            return Some(Poly2::zero());
        }
        // Work in the variable whose coefficient in f is 1.
        let first = !f.e1.is_zero();
        let (lead, other) = if first { (&f.e1, &f.e2) } else { (&f.e2, &f.e1) };
        if lead.is_zero() {
            // constant form: divides iff it is a unit
            return if f.c.is_zero() { None } else { Some(self.scale(&f.c.recip())) };
        }
        debug_assert!(*lead == Rat::one());
        let split = |k: &(u32, u32)| if first { (k.0, k.1) } else { (k.1, k.0) };
        let join = |x: u32, y: u32| if first { (x, y) } else { (y, x) };
        let n = self.terms.keys().map(|k| split(k).0).max().unwrap() as usize;
        // a[x-degree] is a dense polynomial in the other variable
        let mut a: Vec<Vec<Rat>> = vec![Vec::new(); n + 1];
        for (k, c) in &self.terms {
            let (x, y) = split(k);
            let row = &mut a[x as usize];
            if row.len() <= y as usize {
                row.resize(y as usize + 1, Rat::zero());
            }
            row[y as usize] = c.clone();
        }
        // root of f in the lead variable: -other*y - c
        let r_mul = |b: &Vec<Rat>| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); b.len() + 1];
            for (y, c) in b.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                out[y] -= c * &f.c;
                out[y + 1] -= c * other;
            }
            out
        };
        let add = |x: &Vec<Rat>, y: &Vec<Rat>| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); x.len().max(y.len())];
            for (i, c) in x.iter().enumerate() {
                out[i] += c;
            }
            for (i, c) in y.iter().enumerate() {
                out[i] += c;
            }
            out
        };
        if n == 0 {
            return None;
        }
        let mut b: Vec<Vec<Rat>> = vec![Vec::new(); n];
        b[n - 1] = a[n].clone();
        for k in (1..n).rev() {
            b[k - 1] = add(&a[k], &r_mul(&b[k]));
        }
        let rem = add(&a[0], &r_mul(&b[0]));
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut q = Poly2::zero();
        for (x, row) in b.iter().enumerate() {
            for (y, c) in row.iter().enumerate() {
                q.add_term(join(x as u32, y as u32), c.clone());
            }
        }
        Some(q)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| {
                let mut s = fmt_rat(c);
                if *i > 0 {
                    s += &format!("*e1^{}", i);
                }
                if *j > 0 {
                    s += &format!("*e2^{}", j);
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `numerator / ∏ form^mult` with monic, non-constant forms.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateRationalFunction {
    num: Poly2,
    den: BTreeMap<LinearForm, u32>,
}

pub type Brf = BivariateRationalFunction;

impl BivariateRationalFunction {
    pub fn from_poly(p: Poly2) -> Self {
        Brf { num: p, den: BTreeMap::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly2::constant(c))
    }

    pub fn form(f: &LinearForm) -> Self {
        Self::from_poly(Poly2::from_form(f))
    }

    /// `1 / ∏ forms`.
    pub fn inv_product(forms: &[LinearForm]) -> Result<Self, AlgError> {
        let mut scalar = Rat::one();
        let mut den = BTreeMap::new();
        for f in forms {
            let (s, g) = f.normalize().ok_or_else(|| AlgError::Pole("zero linear form".into()))?;
            if g.is_constant() {
                scalar *= s;
            } else {
                scalar *= s;
                *den.entry(g).or_insert(0) += 1;
            }
        }
        Ok(Brf { num: Poly2::constant(scalar.recip()), den })
    }

    pub fn numerator(&self) -> &Poly2 {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<LinearForm, u32> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let forms: Vec<LinearForm> = self.den.keys().cloned().collect();
        for f in forms {
            loop {
                let m = self.den[&f];
                if m == 0 {
                    break;
                }
                match self.num.div_form(&f) {
                    Some(q) => {
                        self.num = q;
                        let e = self.den.get_mut(&f).unwrap();
                        *e -= 1;
                    }
                    None => break,
                }
            }
            if self.den[&f] == 0 {
                self.den.remove(&f);
            }
        }
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (f, m) in &o.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let lift = |x: &Brf| -> Poly2 {
            let mut p = x.num.clone();
            for (f, m) in &den {
                let have = x.den.get(f).copied().unwrap_or(0);
                for _ in have..*m {
                    p = p.mul_form(f);
                }
            }
            p
        };
        Brf { num: lift(self).add(&lift(o)), den }.reduced()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Brf { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Brf::constant(Rat::zero());
        }
        Brf { num: self.num.scale(s), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Brf::constant(Rat::zero());
        }
        let mut den = self.den.clone();
        for (f, m) in &o.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        let shared = self.den.keys().any(|f| o.den.contains_key(f)) || !den.is_empty();
        let out = Brf { num: self.num.mul(&o.num), den };
        if shared {
            out.reduced()
        } else {
            out
        }
    }

    pub fn eval(&self, e1: &Rat, e2: &Rat) -> Result<Rat, AlgError> {
        let mut d = Rat::one();
        for (f, m) in &self.den {
            let v = f.eval(e1, e2);
            if v.is_zero() {
                return Err(AlgError::Pole(format!("{} vanishes at ({}, {})", f, fmt_rat(e1), fmt_rat(e2))));
            }
            d *= num_traits::pow(v, *m as usize);
        }
        Ok(self.num.eval(e1, e2) / d)
    }

    /// Taylor polynomial at `ε = 0` through total degree `d`.
    pub fn taylor_at_origin(&self, d: u32) -> Result<Poly2, AlgError> {
        let mut acc = self.num.truncate(d);
        for (f, m) in &self.den {
            if f.c.is_zero() {
                return Err(AlgError::Pole(format!("{} vanishes at the origin", f)));
            }
            // 1/(c + l) = (1/c) Σ (-l/c)^k
            let cinv = f.c.recip();
            let l = Poly2::from_form(&LinearForm::new(f.e1.clone(), f.e2.clone(), Rat::zero())).scale(&(-&cinv));
            let mut geo = Poly2::constant(Rat::one());
            let mut pw = Poly2::constant(Rat::one());
            for _ in 0..d {
                pw = pw.mul_trunc(&l, d);
                geo = geo.add(&pw);
            }
            let geo = geo.scale(&cinv);
            for _ in 0..*m {
                acc = acc.mul_trunc(&geo, d);
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Coeff for Brf {
    fn zero_elt() -> Self {
        Brf::constant(Rat::zero())
    }
    fn one_elt() -> Self {
        Brf::constant(Rat::one())
    }
    fn is_zero_elt(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn scale(&self, c: &Rat) -> Self {
        Brf::scale(self, c)
    }
    fn from_rat(c: &Rat) -> Self {
        Brf::constant(c.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let mut forms = Vec::new();
        let scalar;
        if let Some(c) = self.num.as_constant() {
            scalar = c;
        } else if self.num.total_degree() == Some(1) {
            let f = LinearForm::new(self.num.coeff(1, 0), self.num.coeff(0, 1), self.num.coeff(0, 0));
            forms.push(f);
            scalar = Rat::one();
        } else {
            return None;
        }
        let mut p = Poly2::constant(scalar.recip());
        for (f, m) in &self.den {
            for _ in 0..*m {
                p = p.mul_form(f);
            }
        }
        let base = Brf::inv_product(&forms).ok()?;
        Some(Brf::from_poly(p).mul(&base))
    }
}

impl fmt::Display for Brf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num)?;
        if !self.den.is_empty() {
            let parts: Vec<String> = self
                .den
                .iter()
                .map(|(g, m)| if *m == 1 { format!("{}", g) } else { format!("{}^{}", g, m) })
                .collect();
            write!(f, " / {}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// `ε₁` as a rational function.
pub fn eps1() -> Brf {
    Brf::form(&LinearForm::eps1())
}

/// `ε₂` as a rational function.
pub fn eps2() -> Brf {
    Brf::form(&LinearForm::eps2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::rat;

    fn lf(a: i64, b: i64, c: i64) -> LinearForm {
        LinearForm::new(rat(a, 1), rat(b, 1), rat(c, 1))
    }

    #[test]
    fn geometric_taylor() {
        let f = Brf::inv_product(&[lf(-1, 0, 1)]).unwrap();
        let t = f.taylor_at_origin(2).unwrap();
        assert_eq!(t, Poly2::constant(rat(1, 1)).add(&Poly2::monomial(1, 0, rat(1, 1))).add(&Poly2::monomial(2, 0, rat(1, 1))));
    }

    #[test]
    fn pole_at_origin() {
        let f = Brf::form(&lf(1, 1, 0)).mul(&Brf::inv_product(&[lf(1, 0, 0), lf(0, 1, 0)]).unwrap());
        assert!(matches!(f.taylor_at_origin(2), Err(AlgError::Pole(_))));
    }

    #[test]
    fn division_cancels() {
        // (ε₁+ε₂)^2 / (ε₁+ε₂) = ε₁+ε₂
        let g = Brf::form(&lf(1, 1, 0));
        let h = g.mul(&g).mul(&Brf::inv_product(&[lf(1, 1, 0)]).unwrap());
        assert_eq!(h, g);
        assert!(h.is_polynomial());
    }

    #[test]
    fn sum_over_common_denominator() {
        // 1/ε₁ - 1/ε₂ = (ε₂ - ε₁)/(ε₁ε₂)
        let a = Brf::inv_product(&[lf(1, 0, 0)]).unwrap();
        let b = Brf::inv_product(&[lf(0, 1, 0)]).unwrap();
        let d = a.sub(&b);
        assert_eq!(d.eval(&rat(2, 1), &rat(3, 1)).unwrap(), rat(1, 6));
        // a/(a) = 1 after reduction
        let one = Brf::form(&lf(2, 0, 6)).mul(&Brf::inv_product(&[lf(1, 0, 3)]).unwrap());
        assert_eq!(one, Brf::constant(rat(2, 1)));
    }

    #[test]
    fn inverse_of_linear() {
        let f = Brf::form(&lf(0, 2, 4));
        let g = f.try_inv().unwrap();
        assert_eq!(f.mul(&g), Brf::one_elt());
    }
}
