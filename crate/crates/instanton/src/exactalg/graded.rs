//! Polynomials in the couplings `τ₁..τ₈`, `t₁..t₈`, truncated by the
//! weighted degree `deg τ_p = p − 1`, `deg t_p = p`.
//!
//! `τ₁` has weight zero, so its power is capped separately.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{fmt_rat, rat, Coeff, Rat};

pub const MAX_P: usize = 8;

/// Exponent vector: slots `0..8` are `τ₁..τ₈`, slots `8..16` are `t₁..t₈`.
pub type Mono = [u8; 2 * MAX_P];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Largest weighted degree kept.
    pub degree: u32,
    /// Largest power of `τ₁` kept.
    pub tau1_cap: u8,
}

impl Truncation {
    pub const NONE: Truncation = Truncation { degree: u32::MAX, tau1_cap: u8::MAX };

    pub fn new(degree: u32, tau1_cap: u8) -> Self {
        Truncation { degree, tau1_cap }
    }

    fn meet(self, o: Truncation) -> Truncation {
        Truncation { degree: self.degree.min(o.degree), tau1_cap: self.tau1_cap.min(o.tau1_cap) }
    }

    pub fn keeps(&self, m: &Mono) -> bool {
        m[0] <= self.tau1_cap && weight(m) <= self.degree
    }
}

pub fn weight(m: &Mono) -> u32 {
    let mut w = 0;
    for p in 1..=MAX_P {
        w += m[p - 1] as u32 * (p as u32 - 1);
        w += m[MAX_P + p - 1] as u32 * p as u32;
    }
    w
}

pub fn tau_mono(p: usize) -> Mono {
    let mut m = [0u8; 2 * MAX_P];
    m[p - 1] = 1;
    m
}

pub fn t_mono(p: usize) -> Mono {
    let mut m = [0u8; 2 * MAX_P];
    m[MAX_P + p - 1] = 1;
    m
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for i in 0..2 * MAX_P {
        m[i] += b[i];
    }
    m
}

pub fn mono_to_string(m: &Mono) -> String {
    let mut parts = Vec::new();
    for p in 1..=MAX_P {
        for (slot, name) in [(p - 1, "tau"), (MAX_P + p - 1, "t")] {
            match m[slot] {
                0 => {}
                1 => parts.push(format!("{}{}", name, p)),
                e => parts.push(format!("{}{}^{}", name, p, e)),
            }
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[derive(Clone, Debug)]
pub struct GradedTauPolynomial<R> {
    trunc: Truncation,
    terms: BTreeMap<Mono, R>,
}

impl<R: PartialEq> PartialEq for GradedTauPolynomial<R> {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms
    }
}

impl<R: Coeff> GradedTauPolynomial<R> {
    pub fn zero_with(trunc: Truncation) -> Self {
        GradedTauPolynomial { trunc, terms: BTreeMap::new() }
    }

    pub fn constant(c: R, trunc: Truncation) -> Self {
        Self::monomial([0; 2 * MAX_P], c, trunc)
    }

    pub fn monomial(m: Mono, c: R, trunc: Truncation) -> Self {
        let mut g = Self::zero_with(trunc);
        g.add_term(m, c);
        g
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn retruncate(&self, trunc: Truncation) -> Self {
        let t = self.trunc.meet(trunc);
        GradedTauPolynomial {
            trunc: t,
            terms: self.terms.iter().filter(|(m, _)| t.keeps(m)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    fn add_term(&mut self, m: Mono, c: R) {
        if c.is_zero_elt() || !self.trunc.keeps(&m) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = e.plus(&c);
                if e.is_zero_elt() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn coeff(&self, m: &Mono) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero_elt)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&[0; 2 * MAX_P])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> GradedTauPolynomial<S> {
        let mut g = GradedTauPolynomial::zero_with(self.trunc);
        for (m, c) in &self.terms {
            g.add_term(*m, f(c));
        }
        g
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut g = GradedTauPolynomial { trunc: self.trunc.meet(o.trunc), terms: BTreeMap::new() };
        for (m, c) in self.terms.iter().chain(o.terms.iter()) {
            g.add_term(*m, c.clone());
        }
        g
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negate())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut g = GradedTauPolynomial { trunc: self.trunc.meet(o.trunc), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                let k = mono_mul(m, n);
                if g.trunc.keeps(&k) {
                    g.add_term(k, c.times(d));
                }
            }
        }
        g
    }

    /// Drop the constant term.
    fn without_constant(&self) -> Self {
        let mut g = self.clone();
        g.terms.remove(&[0; 2 * MAX_P]);
        g
    }

    /// `Σ_m coeffs[m] x^m` for nilpotent `x`, stopping once powers vanish.
    fn nilpotent_series(&self, x: &Self, coeffs: impl Fn(usize) -> Rat) -> Self {
        let one = Self::constant(R::one_elt(), self.trunc);
        let mut acc = one.scale_rat(&coeffs(0));
        let mut pw = one;
        let mut m = 1;
        loop {
            pw = pw.mul(x);
            if pw.is_empty() {
                break;
            }
            acc = acc.add(&pw.scale_rat(&coeffs(m)));
            m += 1;
        }
        acc
    }

    pub fn scale_rat(&self, s: &Rat) -> Self {
        self.map(|c| c.scale(s))
    }

    pub fn scale_by(&self, s: &R) -> Self {
        self.map(|c| c.times(s))
    }
}

fn factorial_inv(m: usize) -> Rat {
    let mut f = rat(1, 1);
    for i in 1..=m as i64 {
        f /= rat(i, 1);
    }
    f
}

impl<R: Coeff> Coeff for GradedTauPolynomial<R> {
    fn zero_elt() -> Self {
        Self::zero_with(Truncation::NONE)
    }
    fn one_elt() -> Self {
        Self::constant(R::one_elt(), Truncation::NONE)
    }
    fn is_zero_elt(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn scale(&self, c: &Rat) -> Self {
        self.scale_rat(c)
    }
    fn try_inv(&self) -> Option<Self> {
        let c0 = self.constant_term().try_inv()?;
        if self.trunc == Truncation::NONE && self.terms.len() > 1 {
            return None;
        }
        // c0^{-1} Σ (-y)^m with y = (self - c)/c
        let y = self.without_constant().scale_by(&c0);
        Some(self.nilpotent_series(&y, |m| if m % 2 == 0 { rat(1, 1) } else { rat(-1, 1) }).scale_by(&c0))
    }
    fn exp_nilpotent(&self) -> Option<Self> {
        if !self.constant_term().is_zero_elt() {
            return None;
        }
        if self.trunc == Truncation::NONE && !self.terms.is_empty() {
            return None;
        }
        Some(self.nilpotent_series(self, factorial_inv))
    }
    fn log_unipotent(&self) -> Option<Self> {
        if !self.constant_term().is_one_elt() {
            return None;
        }
        if self.trunc == Truncation::NONE && self.terms.len() > 1 {
            return None;
        }
        let y = self.without_constant();
        let mut out = self.nilpotent_series(&y, |m| if m == 0 { rat(0, 1) } else if m % 2 == 1 { rat(1, m as i64) } else { rat(-1, m as i64) });
        out.trunc = self.trunc;
        Some(out)
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for GradedTauPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({})*{}", c, mono_to_string(m))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rational coefficients rendered as `num/den`.
pub fn display_rat_poly(g: &GradedTauPolynomial<Rat>) -> String {
    if g.is_empty() {
        return "0".into();
    }
    g.terms().map(|(m, c)| format!("{}*{}", fmt_rat(c), mono_to_string(m))).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = GradedTauPolynomial<Rat>;

    #[test]
    fn weights() {
        assert_eq!(weight(&tau_mono(1)), 0);
        assert_eq!(weight(&tau_mono(3)), 2);
        assert_eq!(weight(&t_mono(2)), 2);
    }

    #[test]
    fn product_truncates() {
        let tr = Truncation::new(2, 1);
        let x = G::monomial(t_mono(1), rat(1, 1), tr);
        let x2 = x.mul(&x);
        assert_eq!(x2.len(), 1);
        assert!(x2.mul(&x).is_empty());
        let y = G::monomial(tau_mono(1), rat(1, 1), tr);
        assert!(y.mul(&y).is_empty());
    }

    #[test]
    fn exp_log_roundtrip() {
        let tr = Truncation::new(3, 2);
        let x = G::monomial(tau_mono(1), rat(2, 3), tr)
            .add(&G::monomial(t_mono(1), rat(-1, 1), tr))
            .add(&G::monomial(tau_mono(3), rat(5, 1), tr));
        let e = x.exp_nilpotent().unwrap();
        assert_eq!(e.log_unipotent().unwrap(), x);
        let inv = e.try_inv().unwrap();
        assert_eq!(e.mul(&inv), G::constant(rat(1, 1), tr));
    }
}
