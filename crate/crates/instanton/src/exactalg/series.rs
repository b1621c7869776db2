//! Truncated Laurent–Puiseux series over a pluggable coefficient ring.
//!
//! A series stores exponents as integers in units of `1/denom`. The
//! truncation `order` is exclusive and in the same units: every
//! coefficient with exponent `< order/denom` is known exactly, nothing
//! beyond is known. `EXACT` marks a series with no truncation.

use std::fmt;

use num_integer::Integer;

use serde::{Deserialize, Serialize};

use num_traits::{One, Zero};

use super::ring::{fmt_rat, rat, Coeff, Rat};
use super::AlgError;

/// Sentinel order of an untruncated series.
pub const EXACT: i64 = i64::MAX;

fn sat_add(a: i64, b: i64) -> i64 {
    if a == EXACT || b == EXACT {
        EXACT
    } else {
        a + b
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<R> {
    var: &'static str,
    denom: u32,
    low: i64,
    coeffs: Vec<R>,
    order: i64,
}

/// Univariate truncated series; `denom` is 1 for ordinary power series.
pub type TruncatedSeries<R> = Series<R>;

/// Laurent–Puiseux series in `q` with rational coefficients.
pub type QSeries = Series<Rat>;

impl<R: Coeff> Series<R> {
    /// Build a series whose first coefficient sits at exponent `low/denom`.
    pub fn new(var: &'static str, denom: u32, low: i64, coeffs: Vec<R>, order: i64) -> Self {
        assert!(denom >= 1, "denominator exponent must be positive");
        let mut s = Series { var, denom, low, coeffs, order };
        s.normalize();
        s
    }

    pub fn zero(var: &'static str, denom: u32, order: i64) -> Self {
        Series { var, denom, low: 0, coeffs: Vec::new(), order }
    }

    pub fn one(var: &'static str, denom: u32, order: i64) -> Self {
        Self::monomial(var, denom, 0, R::one_elt(), order)
    }

    /// `c * var^(units/denom)`.
    pub fn monomial(var: &'static str, denom: u32, units: i64, c: R, order: i64) -> Self {
        Self::new(var, denom, units, vec![c], order)
    }

    /// Coefficients `f(n)` for `low <= n < order` (units).
    pub fn from_fn(
        var: &'static str,
        denom: u32,
        low: i64,
        order: i64,
        f: impl Fn(i64) -> R,
    ) -> Self {
        assert!(order != EXACT, "from_fn needs a finite order");
        let coeffs = (low..order.max(low)).map(f).collect();
        Self::new(var, denom, low, coeffs, order)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero_elt()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero_elt()) {
            self.coeffs.pop();
        }
        if self.order != EXACT {
            let keep = (self.order - self.low).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        if self.coeffs.is_empty() {
            self.low = if self.order == EXACT { 0 } else { self.order };
        }
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn with_var(mut self, var: &'static str) -> Self {
        self.var = var;
        self
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    /// Exclusive truncation order in units.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    /// Lowest exponent (units) carrying a nonzero coefficient, or the
    /// order when every known coefficient vanishes.
    pub fn valuation(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.order
        } else {
            self.low
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at exponent `units/denom`; `None` when beyond the order.
    pub fn coeff(&self, units: i64) -> Option<R> {
        if units >= self.order {
            return None;
        }
        if units < self.low || units >= self.low + self.coeffs.len() as i64 {
            return Some(R::zero_elt());
        }
        Some(self.coeffs[(units - self.low) as usize].clone())
    }

    /// Coefficient at a rational exponent `num/den`.
    pub fn coeff_at(&self, num: i64, den: i64) -> Option<R> {
        let scaled = num * self.denom as i64;
        if scaled % den != 0 {
            return if num * self.denom as i64 >= self.order * den { None } else { Some(R::zero_elt()) };
        }
        self.coeff(scaled / den)
    }

    /// Nonzero terms as `(units, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero_elt())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn truncate(&self, order: i64) -> Self {
        let mut s = self.clone();
        s.order = s.order.min(order);
        s.normalize();
        s
    }

    /// Re-encode with a finer exponent grid `new_denom` (a multiple of the old one).
    pub fn reencode(&self, new_denom: u32) -> Self {
        assert!(new_denom % self.denom == 0, "new denominator must be a multiple");
        let f = (new_denom / self.denom) as i64;
        if f == 1 {
            return self.clone();
        }
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for _ in 1..f {
                    coeffs.push(R::zero_elt());
                }
            }
            coeffs.push(c.clone());
        }
        let order = if self.order == EXACT { EXACT } else { self.order * f };
        Series::new(self.var, new_denom, self.low * f, coeffs, order)
    }

    /// Coarsest exponent grid that still represents this series exactly.
    pub fn reduce_denom(&self) -> Self {
        let mut g = self.denom as i64;
        for (u, _) in self.terms() {
            g = g.gcd(&u);
        }
        if self.order != EXACT {
            g = g.gcd(&self.order);
        }
        if g <= 1 {
            return self.clone();
        }
        let new_denom = self.denom as i64 / g;
        let mut coeffs = Vec::new();
        let low = self.low / g;
        for (u, c) in self.terms() {
            let idx = (u / g - low) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, R::zero_elt());
            }
            coeffs[idx] = c.clone();
        }
        let order = if self.order == EXACT { EXACT } else { self.order / g };
        Series::new(self.var, new_denom as u32, low, coeffs, order)
    }

    fn pick_var(&self, other: &Self) -> &'static str {
        if self.var.is_empty() {
            other.var
        } else {
            self.var
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.denom == other.denom {
            return (self.clone(), other.clone());
        }
        let l = (self.denom as u64).lcm(&(other.denom as u64)) as u32;
        (self.reencode(l), other.reencode(l))
    }

    fn combine(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let (a, b) = self.aligned(other);
        let order = a.order.min(b.order);
        let lo = match (a.coeffs.is_empty(), b.coeffs.is_empty()) {
            (true, true) => 0,
            (true, false) => b.low,
            (false, true) => a.low,
            (false, false) => a.low.min(b.low),
        };
        let hi_a = a.low + a.coeffs.len() as i64;
        let hi_b = b.low + b.coeffs.len() as i64;
        let mut hi = hi_a.max(hi_b);
        if order != EXACT {
            hi = hi.min(order);
        }
        let zero = R::zero_elt();
        let mut coeffs = Vec::with_capacity((hi - lo).max(0) as usize);
        for u in lo..hi {
            let x = a.get(u).unwrap_or(&zero);
            let y = b.get(u).unwrap_or(&zero);
            coeffs.push(f(x, y));
        }
        Series::new(self.pick_var(other), a.denom, lo, coeffs, order)
    }

    fn get(&self, u: i64) -> Option<&R> {
        if u < self.low {
            return None;
        }
        self.coeffs.get((u - self.low) as usize)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x.plus(y))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x.minus(y))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negate())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Series::new(self.var, self.denom, self.low, self.coeffs.iter().map(f).collect(), self.order)
    }

    /// Change coefficient ring termwise.
    pub fn map_into<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series::new(self.var, self.denom, self.low, self.coeffs.iter().map(f).collect(), self.order)
    }

    /// Multiply by `var^(units/denom)`.
    pub fn shift(&self, units: i64) -> Self {
        let order = sat_add(self.order, units);
        Series::new(self.var, self.denom, self.low + units, self.coeffs.clone(), order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut order = sat_add(a.valuation(), b.order).min(sat_add(b.valuation(), a.order));
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            if order == EXACT {
                return Series::zero(self.pick_var(other), a.denom, EXACT);
            }
            return Series::zero(self.pick_var(other), a.denom, order);
        }
        let lo = a.low + b.low;
        let full = a.coeffs.len() + b.coeffs.len() - 1;
        let n = if order == EXACT {
            full
        } else {
            ((order - lo).max(0) as usize).min(full)
        };
        let mut coeffs = vec![R::zero_elt(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if i >= n || x.is_zero_elt() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if y.is_zero_elt() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].plus(&x.times(y));
            }
        }
        if order == EXACT {
            order = EXACT;
        }
        Series::new(self.pick_var(other), a.denom, lo, coeffs, order)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Series::one(self.var, self.denom, EXACT);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the leading coefficient must be a unit.
    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.order == EXACT {
            if self.coeffs.len() == 1 {
                let c = self.coeffs[0]
                    .try_inv()
                    .ok_or_else(|| AlgError::Domain("leading coefficient is not a unit".into()))?;
                return Ok(Series::monomial(self.var, self.denom, -self.low, c, EXACT));
            }
            return Err(AlgError::Order("inverse of an untruncated series needs an order".into()));
        }
        self.inv_with_precision(self.order - self.valuation())
    }

    /// Inverse known to relative precision `n` terms.
    pub fn inv_with_precision(&self, n: i64) -> Result<Self, AlgError> {
        if self.coeffs.is_empty() {
            return Err(AlgError::Domain("inverse of zero series".into()));
        }
        let b0 = self.coeffs[0]
            .try_inv()
            .ok_or_else(|| AlgError::Domain("leading coefficient is not a unit".into()))?;
        let n = n.max(0) as usize;
        let mut out: Vec<R> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(b0.clone());
                continue;
            }
            let mut acc = R::zero_elt();
            for j in 1..=k {
                if let Some(a) = self.coeffs.get(j) {
                    if !a.is_zero_elt() {
                        acc = acc.plus(&a.times(&out[k - j]));
                    }
                }
            }
            out.push(acc.times(&b0).negate());
        }
        let v = self.valuation();
        Ok(Series::new(self.var, self.denom, -v, out, -v + n as i64))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgError> {
        Ok(self.mul(&other.inv()?))
    }

    /// `exp` of a series with no negative exponents. A constant term is
    /// allowed when the coefficient ring can exponentiate it.
    pub fn exp(&self) -> Result<Self, AlgError> {
        if self.order == EXACT {
            return Err(AlgError::Order("exp of an untruncated series needs an order".into()));
        }
        if !self.coeffs.is_empty() && self.low < 0 {
            return Err(AlgError::Domain("exp of a series with negative exponents".into()));
        }
        let c0 = self.coeff(0).unwrap_or_else(R::zero_elt);
        let e0 = c0
            .exp_nilpotent()
            .ok_or_else(|| AlgError::Domain("exp needs a vanishing or nilpotent constant term".into()))?;
        let n = self.order.max(0) as usize;
        let f: Vec<R> = (0..n as i64).map(|u| if u == 0 { R::zero_elt() } else { self.coeff(u).unwrap() }).collect();
        let mut e: Vec<R> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                e.push(R::one_elt());
                continue;
            }
            let mut acc = R::zero_elt();
            for j in 1..=k {
                if !f[j].is_zero_elt() {
                    acc = acc.plus(&f[j].times(&e[k - j]).scale(&rat(j as i64, 1)));
                }
            }
            e.push(acc.scale(&rat(1, k as i64)));
        }
        let out = Series::new(self.var, self.denom, 0, e, self.order);
        Ok(out.scale_by(&e0))
    }

    /// `log` of a series whose leading term sits at exponent 0.
    pub fn log(&self) -> Result<Self, AlgError> {
        if self.order == EXACT {
            return Err(AlgError::Order("log of an untruncated series needs an order".into()));
        }
        if self.coeffs.is_empty() || self.low != 0 {
            return Err(AlgError::Domain("log needs a series starting at exponent 0".into()));
        }
        let c0 = self.coeffs[0].clone();
        let l0 = c0
            .log_unipotent()
            .ok_or_else(|| AlgError::Domain("log needs constant term 1 (or unipotent)".into()))?;
        let inv0 = c0
            .try_inv()
            .ok_or_else(|| AlgError::Domain("constant term is not a unit".into()))?;
        let h: Vec<R> = (0..self.order).map(|u| self.coeff(u).unwrap().times(&inv0)).collect();
        let n = h.len();
        let mut g: Vec<R> = vec![R::zero_elt(); n];
        for k in 1..n {
            let mut acc = h[k].scale(&rat(k as i64, 1));
            for j in 1..k {
                if !g[j].is_zero_elt() && !h[k - j].is_zero_elt() {
                    acc = acc.minus(&g[j].times(&h[k - j]).scale(&rat(j as i64, 1)));
                }
            }
            g[k] = acc.scale(&rat(1, k as i64));
        }
        g[0] = l0;
        Ok(Series::new(self.var, self.denom, 0, g, self.order))
    }

    /// `self^alpha` for a series with constant term 1.
    pub fn pow_rat(&self, alpha: &Rat) -> Result<Self, AlgError> {
        self.log()?.scale(alpha).exp()
    }

    /// The Euler operator `var * d/dvar`: exponent `e` multiplies its coefficient.
    pub fn euler(&self) -> Self {
        let d = self.denom as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&rat(self.low + i as i64, d)))
            .collect();
        Series::new(self.var, self.denom, self.low, coeffs, self.order)
    }

    /// `f(h)` for a power series `f` in integer exponents and `h` with positive valuation.
    pub fn compose(&self, h: &Series<R>) -> Result<Series<R>, AlgError> {
        if self.denom != 1 {
            return Err(AlgError::Domain("compose needs integer exponents in the outer series".into()));
        }
        if !self.coeffs.is_empty() && self.low < 0 {
            return Err(AlgError::Domain("compose needs a power series".into()));
        }
        let vh = h.valuation();
        if vh <= 0 {
            return Err(AlgError::Domain("inner series must have positive valuation".into()));
        }
        let mut acc = Series::zero(h.var, h.denom, h.order);
        let mut power = Series::one(h.var, h.denom, EXACT);
        let top = if self.order == EXACT {
            self.low + self.coeffs.len() as i64
        } else {
            self.order
        };
        for n in 0..top {
            if n > 0 {
                power = power.mul(h);
            }
            let c = self.coeff(n).unwrap_or_else(R::zero_elt);
            if !c.is_zero_elt() {
                acc = acc.add(&power.scale_by(&c));
            }
        }
        if self.order != EXACT {
            acc = acc.truncate(self.order.saturating_mul(vh));
        }
        Ok(acc)
    }

    /// Functional inverse of a series `v = g(q)` with `g = g1 q + ...`, `g1` a unit.
    pub fn revert(&self, new_var: &'static str) -> Result<Series<R>, AlgError> {
        if self.denom != 1 || self.valuation() != 1 {
            return Err(AlgError::Domain("revert needs valuation exactly 1".into()));
        }
        if self.order == EXACT {
            return Err(AlgError::Order("revert needs a truncated series".into()));
        }
        let n = self.order;
        let quotient = self.shift(-1);
        let v = Series::monomial(new_var, 1, 1, R::one_elt(), EXACT);
        let g1inv = self.coeffs[0]
            .try_inv()
            .ok_or_else(|| AlgError::Domain("linear coefficient is not a unit".into()))?;
        let mut h = Series::monomial(new_var, 1, 1, g1inv, n);
        for _ in 0..n {
            let denom = quotient.compose(&h)?;
            h = v.mul(&denom.inv()?).truncate(n);
        }
        Ok(h.with_var(new_var))
    }

    /// Coefficients below `order` as `(units, coefficient)` including zeros.
    pub fn dense(&self, from: i64, to: i64) -> Vec<(i64, R)> {
        (from..to).filter_map(|u| self.coeff(u).map(|c| (u, c))).collect()
    }

    /// First exponent (units) where two series differ, within their common order.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        let d = self.sub(other);
        let first = d.terms().next().map(|(u, _)| u);
        first
    }
}

impl<R: Coeff> Coeff for Series<R> {
    fn zero_elt() -> Self {
        Series::zero("", 1, EXACT)
    }
    fn one_elt() -> Self {
        Series::one("", 1, EXACT)
    }
    fn is_zero_elt(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// Known coefficients are those of `1`; truncation is ignored.
    fn is_one_elt(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one_elt()
    }
    fn exp_nilpotent(&self) -> Option<Self> {
        if self.is_zero_elt() {
            Some(Series::one(self.var, self.denom, self.order))
        } else {
            None
        }
    }
    fn log_unipotent(&self) -> Option<Self> {
        if self.is_one_elt() {
            Some(Series::zero(self.var, self.denom, self.order))
        } else {
            None
        }
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn scale(&self, c: &Rat) -> Self {
        Series::scale(self, c)
    }
    fn try_inv(&self) -> Option<Self> {
        Series::inv(self).ok()
    }
}

/// Canonical JSON term of a rational series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub pow: i64,
    pub num: String,
    pub den: String,
}

/// Canonical JSON encoding of a rational series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonSeries {
    pub variable: String,
    pub denom_exp: u32,
    pub order: i64,
    pub terms: Vec<JsonTerm>,
}

impl Series<Rat> {
    pub fn to_json(&self) -> JsonSeries {
        JsonSeries {
            variable: self.var.to_string(),
            denom_exp: self.denom,
            order: self.order,
            terms: self
                .terms()
                .map(|(u, c)| JsonTerm { pow: u, num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &JsonSeries, var: &'static str) -> Result<Self, AlgError> {
        let mut out = Series::zero(var, j.denom_exp, j.order);
        for t in &j.terms {
            let num: num_bigint::BigInt =
                t.num.parse().map_err(|_| AlgError::Domain(format!("bad numerator {}", t.num)))?;
            let den: num_bigint::BigInt =
                t.den.parse().map_err(|_| AlgError::Domain(format!("bad denominator {}", t.den)))?;
            if den.is_zero() {
                return Err(AlgError::Domain("zero denominator".into()));
            }
            let c = Rat::new(num, den);
            out = out.add(&Series::monomial(var, j.denom_exp, t.pow, c, j.order));
        }
        Ok(out)
    }

    /// Integer power series from a coefficient list starting at `var^0`.
    pub fn from_ints(var: &'static str, coeffs: &[i64], order: i64) -> Self {
        Series::new(var, 1, 0, coeffs.iter().map(|&c| rat(c, 1)).collect(), order)
    }
}

impl fmt::Display for Series<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (u, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = Rat::new(u.into(), (self.denom as i64).into());
            if e.is_zero() {
                write!(f, "{}", fmt_rat(c))?;
            } else if e.is_one() {
                write!(f, "{}*{}", fmt_rat(c), self.var)?;
            } else {
                write!(f, "{}*{}^{}", fmt_rat(c), self.var, fmt_rat(&e))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order != EXACT {
            let e = Rat::new(self.order.into(), (self.denom as i64).into());
            write!(f, " + O({}^{})", self.var, fmt_rat(&e))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64], order: i64) -> QSeries {
        QSeries::from_ints("q", coeffs, order)
    }

    #[test]
    fn mercator() {
        let f = q(&[1, 1], 4);
        let l = f.log().unwrap();
        assert_eq!(l.coeff(1), Some(rat(1, 1)));
        assert_eq!(l.coeff(2), Some(rat(-1, 2)));
        assert_eq!(l.coeff(3), Some(rat(1, 3)));
        assert_eq!(l.coeff(4), None);
    }

    #[test]
    fn exp_of_zero_is_one() {
        let z = QSeries::zero("q", 1, 6);
        assert_eq!(z.exp().unwrap(), QSeries::one("q", 1, 6));
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = q(&[0, 3, -2, 5, 1, 0, 7], 7);
        let back = f.exp().unwrap().log().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn inverse_geometric() {
        let f = q(&[1, -1], 6);
        let g = f.inv().unwrap();
        for n in 0..6 {
            assert_eq!(g.coeff(n), Some(rat(1, 1)));
        }
        assert_eq!(g.coeff(6), None);
    }

    #[test]
    fn laurent_product_order() {
        let a = QSeries::new("q", 1, -2, vec![rat(1, 1), rat(1, 1)], 3);
        let b = q(&[1, 2, 3], 5);
        let c = a.mul(&b);
        // valid to min(-2 + 5, 0 + 3)
        assert_eq!(c.order(), 3);
        assert_eq!(c.coeff(-2), Some(rat(1, 1)));
        assert_eq!(c.coeff(-1), Some(rat(3, 1)));
    }

    #[test]
    fn reencode_roundtrip() {
        let a = QSeries::new("q", 4, 1, vec![rat(2, 1), rat(0, 1), rat(-3, 7)], 9);
        let b = a.reencode(8);
        assert_eq!(b.denom(), 8);
        assert_eq!(b.coeff(2), Some(rat(2, 1)));
        assert_eq!(b.reduce_denom(), a.reduce_denom());
    }

    #[test]
    fn revert_inverts() {
        // v = q + q^2  =>  q = v - v^2 + 2v^3 - 5v^4 + ...
        let g = q(&[0, 1, 1], 6);
        let h = g.revert("v").unwrap();
        assert_eq!(h.coeff(1), Some(rat(1, 1)));
        assert_eq!(h.coeff(2), Some(rat(-1, 1)));
        assert_eq!(h.coeff(3), Some(rat(2, 1)));
        assert_eq!(h.coeff(4), Some(rat(-5, 1)));
        let back = g.compose(&h).unwrap();
        assert_eq!(back.truncate(6), QSeries::monomial("v", 1, 1, rat(1, 1), 6));
    }

    #[test]
    fn json_roundtrip() {
        let a = QSeries::new("q", 4, -1, vec![rat(1, 4), rat(0, 1), rat(-5, 3)], 8);
        let j = a.to_json();
        let b = QSeries::from_json(&j, "q").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sqrt_squares_back() {
        let f = q(&[1, 4, 2, 0, 9], 5);
        let s = f.pow_rat(&rat(1, 2)).unwrap();
        assert_eq!(s.mul(&s), f);
    }
}
