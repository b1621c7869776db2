//! Characters of `H⁰(SⁿC²)`, their `ħ`-expansion at `t₁ = e^ħ, t₂ = e^{−ħ}`,
//! and Gromov–Witten coefficients of the resolved conifold.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactalg::ring::fmt_rat;
use crate::exactalg::{rat, QSeries, Rat};
use crate::{Error, Result};

/// Polynomial in `t₁, t₂` truncated at total degree `deg`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BiPoly {
    pub deg: u32,
    pub terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero(deg: u32) -> Self {
        BiPoly { deg, terms: BTreeMap::new() }
    }

    pub fn monomial(deg: u32, i: u32, j: u32, c: Rat) -> Self {
        let mut p = Self::zero(deg);
        p.add_term(i, j, c);
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if i + j > self.deg || c == rat(0, 1) {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(|| rat(0, 1));
        *e += c;
        if *e == rat(0, 1) {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (&(i, j), c) in &o.terms {
            p.add_term(i, j, c.clone());
        }
        p
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut p = Self::zero(self.deg);
        for (&(i, j), c) in &self.terms {
            p.add_term(i, j, c * s);
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero(self.deg.min(o.deg));
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &o.terms {
                p.add_term(i + k, j + l, c * d);
            }
        }
        p
    }

    /// Every coefficient is a nonnegative integer.
    pub fn is_character(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && *c >= rat(0, 1))
    }

    pub fn get(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| rat(0, 1))
    }
}

/// `1/((1 − t₁^d)(1 − t₂^d))` truncated.
fn inv_box(d: u32, deg: u32) -> BiPoly {
    let mut p = BiPoly::zero(deg);
    let mut i = 0;
    while i <= deg {
        let mut j = 0;
        while i + j <= deg {
            p.add_term(i, j, rat(1, 1));
            j += d;
        }
        i += d;
    }
    p
}

/// `q`-series with [`BiPoly`] coefficients, `q⁰` through `q^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BigradedCharacter {
    pub t_degree: u32,
    pub coeffs: Vec<BiPoly>,
}

/// `∏_{i,j≥0} 1/(1 − q t₁^i t₂^j)`, monomials with `i + j ≤ t_degree`.
pub fn hilbert_product(q_order: u32, t_degree: u32) -> BigradedCharacter {
    let n = q_order as usize;
    let mut acc = vec![BiPoly::zero(t_degree); n + 1];
    acc[0] = BiPoly::monomial(t_degree, 0, 0, rat(1, 1));
    for i in 0..=t_degree {
        for j in 0..=t_degree - i {
            // multiply by Σ_m q^m t₁^{mi} t₂^{mj}
            let mut next = vec![BiPoly::zero(t_degree); n + 1];
            for (k, c) in acc.iter().enumerate() {
                for m in 0..=n - k {
                    let mono = BiPoly::monomial(t_degree, m as u32 * i, m as u32 * j, rat(1, 1));
                    if mono.terms.is_empty() {
                        break;
                    }
                    next[k + m] = next[k + m].add(&c.mul(&mono));
                }
            }
            acc = next;
        }
    }
    BigradedCharacter { t_degree, coeffs: acc }
}

/// `exp(Σ_d q^d / (d(1 − t₁^d)(1 − t₂^d)))`.
pub fn hilbert_exponential(q_order: u32, t_degree: u32) -> BigradedCharacter {
    let n = q_order as usize;
    let s: Vec<BiPoly> = (0..=n)
        .map(|d| if d == 0 { BiPoly::zero(t_degree) } else { inv_box(d as u32, t_degree).scale(&rat(1, d as i64)) })
        .collect();
    // n E_n = Σ_k k S_k E_{n−k}
    let mut e = vec![BiPoly::zero(t_degree); n + 1];
    e[0] = BiPoly::monomial(t_degree, 0, 0, rat(1, 1));
    for m in 1..=n {
        let mut acc = BiPoly::zero(t_degree);
        for k in 1..=m {
            acc = acc.add(&s[k].mul(&e[m - k]).scale(&rat(k as i64, 1)));
        }
        e[m] = acc.scale(&rat(1, m as i64));
    }
    BigradedCharacter { t_degree, coeffs: e }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KCheck {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
    pub first_mismatch: Option<String>,
}

impl KCheck {
    fn new(name: &str) -> Self {
        KCheck { name: name.into(), checked: 0, pass: true, first_mismatch: None }
    }
    fn cmp(&mut self, what: String, l: &Rat, r: &Rat) {
        self.checked += 1;
        if l != r && self.pass {
            self.pass = false;
            self.first_mismatch = Some(format!("{}: {} vs {}", what, fmt_rat(l), fmt_rat(r)));
        }
    }
}

/// Plethystic product against the exponential form, plus character positivity.
pub fn hilbert_series_check(q_order: u32, t_degree: u32) -> KCheck {
    let a = hilbert_product(q_order, t_degree);
    let b = hilbert_exponential(q_order, t_degree);
    let mut rep = KCheck::new("symmetric product character");
    for n in 0..=q_order as usize {
        for i in 0..=t_degree {
            for j in 0..=t_degree - i {
                rep.cmp(format!("q^{} t1^{} t2^{}", n, i, j), &a.coeffs[n].get(i, j), &b.coeffs[n].get(i, j));
            }
        }
        if !b.coeffs[n].is_character() && rep.pass {
            rep.pass = false;
            rep.first_mismatch = Some(format!("q^{} coefficient is not a character", n));
        }
    }
    rep
}

/// `B₀..B_n` from `t/(eᵗ − 1)`.
pub fn bernoulli(n: usize) -> Vec<Rat> {
    let ord = n as i64 + 1;
    // (eᵗ − 1)/t
    let mut fact = rat(1, 1);
    let mut c = Vec::with_capacity(n + 1);
    for k in 0..=n as i64 {
        fact *= rat(k + 1, 1);
        c.push(rat(1, 1) / &fact);
    }
    let g = QSeries::new("t", 1, 0, c, ord).inv().expect("unit constant term");
    let mut fact = rat(1, 1);
    (0..=n as i64)
        .map(|k| {
            if k > 0 {
                fact *= rat(k, 1);
            }
            g.coeff(k).expect("in range") * &fact
        })
        .collect()
}

/// `Σ_{k<n} (dħ)^k / k!` with absolute order `n`.
fn exp_series(d: i64, n: i64) -> QSeries {
    let mut fact = rat(1, 1);
    let mut c = Vec::new();
    for k in 0..n {
        if k > 0 {
            fact *= rat(k, 1);
        }
        c.push(rat(d.pow(k as u32), 1) / &fact);
    }
    QSeries::new("h", 1, 0, c, n)
}

/// Coefficients of `q^d ħ^{2g−2}` in `Σ_d q^d/(d(1 − e^{dħ})(1 − e^{−dħ}))`, keyed by `(g, d)`.
pub fn hbar_expansion(q_order: u32, g_max: u32) -> Result<BTreeMap<(u32, u32), Rat>> {
    let mut out = BTreeMap::new();
    // denominator has valuation 2; relative precision 2g_max + 1 reaches ħ^{2g_max−2}
    let n = 2 * g_max as i64 + 3;
    for d in 1..=q_order as i64 {
        let one = QSeries::one("h", 1, n);
        let a = one.sub(&exp_series(d, n));
        let b = one.sub(&exp_series(-d, n));
        let den = a.mul(&b);
        let inv = den.inv_with_precision(2 * g_max as i64 + 1)?;
        for g in 0..=g_max {
            let c = inv.coeff(2 * g as i64 - 2).ok_or_else(|| Error::Order("ħ precision".into()))?;
            out.insert((g, d as u32), c / rat(d, 1));
        }
    }
    Ok(out)
}

/// `C(g, d)` of the resolved conifold.
pub fn gw_conifold(g: u32, d: u32) -> Rat {
    let d = rat(d as i64, 1);
    match g {
        0 => rat(1, 1) / d.pow(3),
        1 => rat(1, 1) / (rat(12, 1) * d),
        _ => {
            let b = bernoulli(2 * g as usize)[2 * g as usize].clone();
            let sign = if g % 2 == 1 { rat(1, 1) } else { rat(-1, 1) };
            let fact: Rat = (1..=(2 * g as i64 - 2)).fold(rat(1, 1), |f, k| f * rat(k, 1));
            sign * b / (rat(2 * g as i64, 1) * fact) * d.pow(2 * g as i32 - 3)
        }
    }
}

/// `ħ`-expansion against the three displayed families and against `Σ C(g,d)q^d(iħ)^{2g−2}`.
pub fn gw_check(g_max: u32, d_max: u32) -> Result<Vec<KCheck>> {
    let h = hbar_expansion(d_max, g_max)?;
    let bern = bernoulli(2 * g_max as usize + 2);
    let log1q = QSeries::one("q", 1, d_max as i64 + 1)
        .sub(&QSeries::monomial("q", 1, 1, rat(1, 1), d_max as i64 + 1))
        .log()?
        .scale(&rat(-1, 12));
    let mut fam = KCheck::new("hbar expansion families");
    let mut gw = KCheck::new("conifold GW coefficients");
    for (&(g, d), c) in &h {
        let dd = rat(d as i64, 1);
        let want = match g {
            0 => -(rat(1, 1) / dd.pow(3)),
            1 => log1q.coeff(d as i64).expect("in range"),
            _ => {
                let fact: Rat = (1..=(2 * g as i64 - 2)).fold(rat(1, 1), |f, k| f * rat(k, 1));
                bern[2 * g as usize].clone() / (rat(2 * g as i64, 1) * fact) * dd.pow(2 * g as i32 - 3)
            }
        };
        fam.cmp(format!("g={} d={}", g, d), c, &want);
        // (iħ)^{2g−2} = (−1)^{g−1} ħ^{2g−2}
        let sign = if g % 2 == 1 { rat(1, 1) } else { rat(-1, 1) };
        gw.cmp(format!("g={} d={}", g, d), c, &(gw_conifold(g, d) * sign));
    }
    Ok(vec![fam, gw])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_table() {
        let b = bernoulli(12);
        let want = [(2, rat(1, 6)), (4, rat(-1, 30)), (6, rat(1, 42)), (8, rat(-1, 30)), (10, rat(5, 66)), (12, rat(-691, 2730))];
        for (k, v) in want {
            assert_eq!(b[k], v);
        }
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[3], rat(0, 1));
    }

    #[test]
    fn gw_examples() {
        assert_eq!(gw_conifold(0, 2), rat(1, 8));
        assert_eq!(gw_conifold(1, 3), rat(1, 36));
        assert_eq!(gw_conifold(2, 1), rat(1, 240));
        let h = hbar_expansion(2, 2).unwrap();
        assert_eq!(h[&(2, 1)], rat(-1, 240));
        assert_eq!(h[&(0, 2)], rat(-1, 8));
    }

    #[test]
    fn character_low_order() {
        let e = hilbert_exponential(2, 4);
        // q¹: 1/((1−t₁)(1−t₂))
        assert_eq!(e.coeffs[1], inv_box(1, 4));
        // q²: half of (1/((1−t₁)²(1−t₂)²) + 1/((1−t₁²)(1−t₂²)))
        let sq = inv_box(1, 4).mul(&inv_box(1, 4));
        assert_eq!(e.coeffs[2], sq.add(&inv_box(2, 4)).scale(&rat(1, 2)));
        assert!(hilbert_series_check(4, 5).pass);
    }

    #[test]
    fn gw_small() {
        for c in gw_check(3, 3).unwrap() {
            assert!(c.pass, "{:?}", c);
        }
    }
}
