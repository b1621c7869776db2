//! The perturbation term `γ_{ε₁,ε₂}(x; Λ)` as an exact expansion, and its
//! identities, in a formal ring with `Λ = 1`.
//!
//! Everything is stored as `ε₁ε₂·γ`, a polynomial in `ε₁, ε₂`, Laurent in
//! `x`, with formal symbols `L = log x`, `P = π√−1` and `U` (the shift
//! `Λ → Λe^U`). Terms are kept up to a total `ε`-degree.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::exactalg::ring::fmt_rat;
use crate::exactalg::{Brf, LinearForm, Poly2, Rat, SamplePoint, Series};
use crate::exactalg::rat;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mon {
    pub e1: u32,
    pub e2: u32,
    pub x: i64,
    pub l: u32,
    pub p: u32,
    pub u: u32,
}

impl Mon {
    pub const ONE: Mon = Mon { e1: 0, e2: 0, x: 0, l: 0, p: 0, u: 0 };

    fn mul(&self, o: &Mon) -> Mon {
        Mon { e1: self.e1 + o.e1, e2: self.e2 + o.e2, x: self.x + o.x, l: self.l + o.l, p: self.p + o.p, u: self.u + o.u }
    }

    fn eps_degree(&self) -> u32 {
        self.e1 + self.e2
    }
}

impl fmt::Display for Mon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("e1", self.e1 as i64), ("e2", self.e2 as i64), ("x", self.x), ("L", self.l as i64), ("P", self.p as i64), ("U", self.u as i64)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{}^{}", name, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Element of the formal log ring, truncated at `ε`-degree `deg`.
#[derive(Clone, Debug, PartialEq)]
pub struct LogPoly {
    pub deg: u32,
    pub terms: BTreeMap<Mon, Rat>,
}

impl LogPoly {
    pub fn zero(deg: u32) -> Self {
        LogPoly { deg, terms: BTreeMap::new() }
    }

    pub fn term(deg: u32, m: Mon, c: Rat) -> Self {
        let mut p = Self::zero(deg);
        p.add_term(m, c);
        p
    }

    pub fn one(deg: u32) -> Self {
        Self::term(deg, Mon::ONE, rat(1, 1))
    }

    pub fn x_pow(deg: u32, m: i64) -> Self {
        Self::term(deg, Mon { x: m, ..Mon::ONE }, rat(1, 1))
    }

    pub fn log_x(deg: u32) -> Self {
        Self::term(deg, Mon { l: 1, ..Mon::ONE }, rat(1, 1))
    }

    pub fn pi_i(deg: u32) -> Self {
        Self::term(deg, Mon { p: 1, ..Mon::ONE }, rat(1, 1))
    }

    pub fn u_sym(deg: u32) -> Self {
        Self::term(deg, Mon { u: 1, ..Mon::ONE }, rat(1, 1))
    }

    pub fn from_poly2(deg: u32, p: &Poly2) -> Self {
        let mut out = Self::zero(deg);
        for (&(i, j), c) in p.terms() {
            out.add_term(Mon { e1: i, e2: j, ..Mon::ONE }, c.clone());
        }
        out
    }

    pub fn from_form(deg: u32, f: &LinearForm) -> Self {
        Self::from_poly2(deg, &Poly2::from_form(f))
    }

    fn add_term(&mut self, m: Mon, c: Rat) {
        if m.eps_degree() > self.deg || c == rat(0, 1) {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(|| rat(0, 1));
        *e += c;
        if *e == rat(0, 1) {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mon) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(|| rat(0, 1))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = LogPoly { deg: self.deg.min(o.deg), terms: BTreeMap::new() };
        for (m, c) in self.terms.iter().chain(o.terms.iter()) {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&rat(-1, 1)))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut p = Self::zero(self.deg);
        for (m, c) in &self.terms {
            p.add_term(*m, c * s);
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = LogPoly { deg: self.deg.min(o.deg), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                p.add_term(m.mul(n), c * d);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.deg), |acc, _| acc.mul(self))
    }

    pub fn truncate(&self, deg: u32) -> Self {
        LogPoly { deg: self.deg.min(deg), terms: self.terms.iter().filter(|(m, _)| m.eps_degree() <= deg).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Ring homomorphism given by the images of `ε₁, ε₂, x^m, L, P, U`.
    fn substitute(
        &self,
        e1: &LogPoly,
        e2: &LogPoly,
        x_pow: impl Fn(i64) -> LogPoly,
        l: &LogPoly,
        p: &LogPoly,
        u: &LogPoly,
    ) -> LogPoly {
        let mut out = Self::zero(self.deg);
        let mut xcache: BTreeMap<i64, LogPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let xm = xcache.entry(m.x).or_insert_with(|| x_pow(m.x)).clone();
            let t = e1.pow(m.e1).mul(&e2.pow(m.e2)).mul(&xm).mul(&l.pow(m.l)).mul(&p.pow(m.p)).mul(&u.pow(m.u));
            out = out.add(&t.scale(c));
        }
        out
    }

    fn eps(&self) -> (LogPoly, LogPoly) {
        (LogPoly::term(self.deg, Mon { e1: 1, ..Mon::ONE }, rat(1, 1)), LogPoly::term(self.deg, Mon { e2: 1, ..Mon::ONE }, rat(1, 1)))
    }

    /// `(ε₁, ε₂) ↦ (f₁, f₂)`, linear forms without constant part.
    pub fn subst_eps(&self, f1: &LinearForm, f2: &LinearForm) -> LogPoly {
        let d = self.deg;
        self.substitute(
            &LogPoly::from_form(d, f1),
            &LogPoly::from_form(d, f2),
            |m| LogPoly::x_pow(d, m),
            &LogPoly::log_x(d),
            &LogPoly::pi_i(d),
            &LogPoly::u_sym(d),
        )
    }

    /// `x ↦ x + δ` with `δ` linear in `ε`.
    pub fn shift_x(&self, delta: &LinearForm) -> LogPoly {
        let d = self.deg;
        let dl = LogPoly::from_form(d, delta);
        let (e1, e2) = self.eps();
        // (x + δ)^m = Σ_k C(m, k) δ^k x^{m−k}
        let x_pow = |m: i64| {
            let mut acc = LogPoly::zero(d);
            let mut binom = rat(1, 1);
            let mut dk = LogPoly::one(d);
            for k in 0..=d as i64 {
                acc = acc.add(&dk.mul(&LogPoly::x_pow(d, m - k)).scale(&binom));
                binom = binom * rat(m - k, 1) / rat(k + 1, 1);
                dk = dk.mul(&dl);
            }
            acc
        };
        // log(x + δ) = L + Σ (−1)^{k+1} δ^k x^{−k}/k
        let mut l = LogPoly::log_x(d);
        let mut dk = LogPoly::one(d);
        for k in 1..=d as i64 {
            dk = dk.mul(&dl);
            let s = if k % 2 == 1 { rat(1, k) } else { rat(-1, k) };
            l = l.add(&dk.mul(&LogPoly::x_pow(d, -k)).scale(&s));
        }
        self.substitute(&e1, &e2, x_pow, &l, &LogPoly::pi_i(d), &LogPoly::u_sym(d))
    }

    /// `x ↦ −x` with `log(−x) = log x + π√−1`.
    pub fn negate_x(&self) -> LogPoly {
        let d = self.deg;
        let (e1, e2) = self.eps();
        let l = LogPoly::log_x(d).add(&LogPoly::pi_i(d));
        self.substitute(
            &e1,
            &e2,
            |m| LogPoly::x_pow(d, m).scale(&rat(if m % 2 == 0 { 1 } else { -1 }, 1)),
            &l,
            &LogPoly::pi_i(d),
            &LogPoly::u_sym(d),
        )
    }

    /// Rewrite in `L̃ = log(√−1 x) = L + P/2`; the `L` slot then holds `L̃`.
    pub fn to_log_ix(&self) -> LogPoly {
        let d = self.deg;
        let (e1, e2) = self.eps();
        let l = LogPoly::log_x(d).sub(&LogPoly::pi_i(d).scale(&rat(1, 2)));
        self.substitute(&e1, &e2, |m| LogPoly::x_pow(d, m), &l, &LogPoly::pi_i(d), &LogPoly::u_sym(d))
    }

    /// `Λ ↦ Λe^U`, i.e. `L ↦ L − U`.
    pub fn rescale_lambda(&self) -> LogPoly {
        let d = self.deg;
        let (e1, e2) = self.eps();
        let l = LogPoly::log_x(d).sub(&LogPoly::u_sym(d));
        self.substitute(&e1, &e2, |m| LogPoly::x_pow(d, m), &l, &LogPoly::pi_i(d), &LogPoly::u_sym(d))
    }

    /// First nonzero term, for reports.
    pub fn first_term(&self) -> Option<String> {
        self.terms.iter().next().map(|(m, c)| format!("{}*{}", fmt_rat(c), m))
    }

    /// Value at rational `ε₁, ε₂, x`, keeping the formal symbols.
    pub fn eval(&self, e1: &Rat, e2: &Rat, x: &Rat) -> Result<BTreeMap<(u32, u32, u32), Rat>> {
        let mut out: BTreeMap<(u32, u32, u32), Rat> = BTreeMap::new();
        for (m, c) in &self.terms {
            if x == &rat(0, 1) && m.x < 0 {
                return Err(Error::Pole("x = 0".into()));
            }
            let v = c * e1.pow(m.e1 as i32) * e2.pow(m.e2 as i32) * x.pow(m.x as i32);
            *out.entry((m.l, m.p, m.u)).or_insert_with(|| rat(0, 1)) += v;
        }
        out.retain(|_, v| v != &rat(0, 1));
        Ok(out)
    }
}

/// `Q_n = ε₁ε₂ c_n / n!`, the `tⁿ` coefficient of `ε₁ε₂t² / ((e^{ε₁t} − 1)(e^{ε₂t} − 1))`.
pub fn c_coefficients(n_max: u32) -> Result<Vec<Poly2>> {
    let ord = n_max as i64 + 1;
    let factor = |e1: u32, e2: u32| {
        // (e^{εt} − 1)/(εt) = Σ εᵏtᵏ/(k+1)!
        let mut fact = rat(1, 1);
        let mut c = Vec::new();
        for k in 0..ord {
            fact *= rat(k + 1, 1);
            c.push(Brf::from_poly(Poly2::monomial(e1 * k as u32, e2 * k as u32, rat(1, 1) / &fact)));
        }
        Series::new("t", 1, 0, c, ord)
    };
    let den = factor(1, 0).mul(&factor(0, 1));
    let inv = den.inv()?;
    (0..=n_max as i64)
        .map(|n| {
            let c: Brf = inv.coeff(n).ok_or_else(|| Error::Order("t precision".into()))?;
            if !c.is_polynomial() {
                return Err(Error::Internal("non-polynomial c_n".into()));
            }
            Ok(c.numerator().clone())
        })
        .collect()
}

/// `ε₁ε₂ γ_{ε₁,ε₂}(x; 1)` through total `ε`-degree `deg`.
pub fn gamma2_expansion(deg: u32) -> Result<LogPoly> {
    let q = c_coefficients(deg)?;
    let mut out = LogPoly::zero(deg);
    let l = LogPoly::log_x(deg);
    let one = LogPoly::one(deg);
    for (n, qn) in q.iter().enumerate() {
        let n = n as i64;
        let phi = match n {
            0 => l.scale(&rat(-1, 2)).add(&one.scale(&rat(3, 4))),
            1 => l.sub(&one),
            2 => l.scale(&rat(-1, 1)),
            _ => one.scale(&(1..=n - 3).fold(rat(1, 1), |f, k| f * rat(k, 1))),
        };
        out = out.add(&LogPoly::from_poly2(deg, qn).mul(&LogPoly::x_pow(deg, 2 - n)).mul(&phi));
    }
    Ok(out)
}

/// `−ħ²γ_ħ(x; 1) = ε₁ε₂γ_{ε₁,ε₂}` at `(ε₁, ε₂) = (ħ, −ħ)`; `ħ` sits in the `ε₁` slot.
pub fn gamma1_expansion(deg: u32) -> Result<LogPoly> {
    let g = gamma2_expansion(deg)?;
    Ok(g.subst_eps(&LinearForm::eps1(), &LinearForm::eps1().neg()))
}

fn form(e1: i64, e2: i64) -> LinearForm {
    LinearForm::new(rat(e1, 1), rat(e2, 1), rat(0, 1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerturbCheck {
    pub name: String,
    pub eps_order: u32,
    pub pass: bool,
    /// First nonzero term of the residual.
    pub residual: Option<String>,
}

fn report(name: &str, eps_order: u32, residual: &LogPoly) -> PerturbCheck {
    let r = residual.truncate(eps_order);
    PerturbCheck { name: name.into(), eps_order, pass: r.is_zero(), residual: r.first_term() }
}

/// `γ(x−ε₁) + γ(x−ε₂) − γ(x) − γ(x−ε₁−ε₂) = log x`.
pub fn check_difference2(eps_order: u32) -> Result<PerturbCheck> {
    let g = gamma2_expansion(eps_order)?;
    let lhs = g
        .shift_x(&form(-1, 0))
        .add(&g.shift_x(&form(0, -1)))
        .sub(&g)
        .sub(&g.shift_x(&form(-1, -1)));
    let rhs = LogPoly::term(eps_order, Mon { e1: 1, e2: 1, l: 1, ..Mon::ONE }, rat(1, 1));
    Ok(report("two-parameter difference equation", eps_order, &lhs.sub(&rhs)))
}

/// `γ_ħ(x+ħ) + γ_ħ(x−ħ) − 2γ_ħ(x) = log x`.
pub fn check_difference1(eps_order: u32) -> Result<PerturbCheck> {
    let g = gamma1_expansion(eps_order)?;
    let lhs = g.shift_x(&form(1, 0)).add(&g.shift_x(&form(-1, 0))).sub(&g.scale(&rat(2, 1)));
    // times −ħ²
    let rhs = LogPoly::term(eps_order, Mon { e1: 2, l: 1, ..Mon::ONE }, rat(-1, 1));
    Ok(report("one-parameter difference equation", eps_order, &lhs.sub(&rhs)))
}

/// `log s^{k}(ε₁, ε₂, x)` with `Λ = 1`.
pub fn log_s_factor(k: i64, deg: u32) -> LogPoly {
    let l = LogPoly::log_x(deg);
    let mut out = LogPoly::zero(deg);
    if k > 0 {
        for i in 0..k {
            for j in 0..k - i {
                out = out.add(&l.shift_x(&form(-i, -j)));
            }
        }
    } else if k < -1 {
        for i in 0..=(-k - 2) {
            for j in 0..=(-k - 2 - i) {
                out = out.add(&l.shift_x(&form(i + 1, j + 1)));
            }
        }
    }
    out
}

/// `ε₁ε₂(ε₁−ε₂)` times `γ_{ε₁,ε₂−ε₁}(x+kε₁) + γ_{ε₁−ε₂,ε₂}(x+kε₂) − γ(x) − log s^{−k}`.
pub fn pert_shift_residual(k: i64, eps_order: u32) -> Result<LogPoly> {
    let deg = eps_order + 1;
    let g = gamma2_expansion(deg)?;
    let e1 = LinearForm::eps1();
    let e2 = LinearForm::eps2();
    let a = g.subst_eps(&e1, &e2.sub(&e1)).shift_x(&form(k, 0));
    let b = g.subst_eps(&e1.sub(&e2), &e2).shift_x(&form(0, k));
    let f = |x: &LinearForm| LogPoly::from_form(deg, x);
    let lhs = f(&e2).scale(&rat(-1, 1)).mul(&a).add(&f(&e1).mul(&b));
    let e12 = LogPoly::term(deg, Mon { e1: 1, e2: 1, ..Mon::ONE }, rat(1, 1));
    let rhs = f(&e1.sub(&e2)).mul(&g.add(&e12.mul(&log_s_factor(-k, deg))));
    Ok(lhs.sub(&rhs))
}

pub fn check_pert_shift(k_range: i64, eps_order: u32) -> Result<Vec<PerturbCheck>> {
    (-k_range..=k_range)
        .map(|k| Ok(report(&format!("shift identity k={}", k), eps_order + 1, &pert_shift_residual(k, eps_order)?)))
        .collect()
}

/// Residual of the shift identity evaluated at sample points with `x = a_β − a_α`.
pub fn pert_shift_at_samples(k: i64, eps_order: u32, samples: &[SamplePoint]) -> Result<bool> {
    let r = pert_shift_residual(k, eps_order)?;
    for s in samples {
        for (i, a) in s.a.iter().enumerate() {
            for b in s.a.iter().skip(i + 1) {
                if !r.eval(&s.e1, &s.e2, &(b - a))?.is_empty() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `Λ ↦ Λe^U` and `γ(x) + γ(−x)` against their displayed closed forms.
pub fn check_e_u_and_double(eps_order: u32) -> Result<Vec<PerturbCheck>> {
    let d = eps_order;
    let g = gamma2_expansion(d)?;
    let e = |i, j, c| LogPoly::term(d, Mon { e1: i, e2: j, ..Mon::ONE }, c);
    let x = |m| LogPoly::x_pow(d, m);
    // ε₁ε₂ {x²/(2ε₁ε₂) + x(ε₁+ε₂)/(2ε₁ε₂) + (ε₁²+ε₂²+3ε₁ε₂)/(12ε₁ε₂)}
    let sigma = e(2, 0, rat(1, 1)).add(&e(0, 2, rat(1, 1))).add(&e(1, 1, rat(3, 1)));
    let bracket = x(2)
        .scale(&rat(1, 2))
        .add(&x(1).mul(&e(1, 0, rat(1, 1)).add(&e(0, 1, rat(1, 1)))).scale(&rat(1, 2)))
        .add(&sigma.scale(&rat(1, 12)));
    let eu = g.rescale_lambda().sub(&g).sub(&LogPoly::u_sym(d).mul(&bracket));

    let lt = LogPoly::log_x(d);
    let q = c_coefficients(d)?;
    let mut rhs = x(2)
        .mul(&lt)
        .scale(&rat(-1, 1))
        .add(&x(2).scale(&rat(3, 2)))
        .add(&LogPoly::pi_i(d).mul(&x(1)).mul(&e(1, 0, rat(1, 1)).add(&e(0, 1, rat(1, 1)))).scale(&rat(1, 2)))
        .sub(&sigma.mul(&lt).scale(&rat(1, 6)));
    let mut g2 = 2;
    while 2 * g2 <= d as i64 {
        let n = 2 * g2;
        // 2c_n/(n(n−1)(n−2)) with ε₁ε₂c_n = n! Q_n
        let fact: Rat = (1..=n).fold(rat(1, 1), |f, k| f * rat(k, 1));
        let coef = rat(2, 1) * fact / rat(n * (n - 1) * (n - 2), 1);
        rhs = rhs.add(&LogPoly::from_poly2(d, &q[n as usize]).mul(&x(2 - n)).scale(&coef));
        g2 += 1;
    }
    let lhs = g.add(&g.negate_x()).to_log_ix();
    let dbl = lhs.sub(&rhs);

    // γ_ħ(x) + γ_ħ(−x) = 2γ_{√−1ħ}(√−1x); both sides times −ħ²
    let g1 = gamma1_expansion(d)?;
    let lhs1 = g1.add(&g1.negate_x()).to_log_ix();
    let mut rot = LogPoly::zero(d);
    for (m, c) in &g1.terms {
        // ħ^a x^m ↦ i^{a+m} ħ^a x^m, and log x ↦ log(√−1x)
        let w = m.e1 as i64 + m.x;
        if w.rem_euclid(2) != 0 {
            return Err(Error::Internal("odd total weight in the rotation".into()));
        }
        let s = if (w / 2).rem_euclid(2) == 0 { rat(1, 1) } else { rat(-1, 1) };
        rot = rot.add(&LogPoly::term(d, *m, c * s));
    }
    // −ħ²·2γ_{iħ}(ix) = 2·(iħ)²γ_{iħ}(ix) = −2·rot
    let one_param = lhs1.add(&rot.scale(&rat(2, 1)));
    Ok(vec![
        report("Lambda rescaling", eps_order, &eu),
        report("reflection x -> -x", eps_order, &dbl),
        report("one-parameter reflection", eps_order, &one_param),
    ])
}

/// One-parameter expansion: leading terms and tail `B_{2g}/(2g(2g−2)) (ħ/x)^{2g−2}` for `g ≤ g_max`.
pub fn check_one_parameter_tail(g_max: u32) -> Result<PerturbCheck> {
    let d = 2 * g_max;
    let g1 = gamma1_expansion(d)?;
    let b = crate::ktheory::bernoulli(2 * g_max as usize);
    let h = |a: u32, m: i64, l: u32, c: Rat| LogPoly::term(d, Mon { e1: a, x: m, l, ..Mon::ONE }, c);
    // −ħ² × [ħ^{−2}(x²L/2 − 3x²/4) − L/12 + Σ …]
    let mut want = h(0, 2, 1, rat(-1, 2)).add(&h(0, 2, 0, rat(3, 4))).add(&h(2, 0, 1, rat(1, 12)));
    for g in 2..=g_max as i64 {
        let c = -b[2 * g as usize].clone() / rat(2 * g * (2 * g - 2), 1);
        want = want.add(&h(2 * g as u32, 2 - 2 * g, 0, c));
    }
    Ok(report("one-parameter expansion tail", d, &g1.sub(&want)))
}

/// Displayed leading structures of `ε₁ε₂γ`.
pub fn leading_structure_check(eps_order: u32) -> Result<PerturbCheck> {
    let d = eps_order.max(2);
    let g = gamma2_expansion(d)?;
    let t = |e1, e2, x, l, c| LogPoly::term(d, Mon { e1, e2, x, l, ..Mon::ONE }, c);
    let want = t(0, 0, 2, 1, rat(-1, 2))
        .add(&t(0, 0, 2, 0, rat(3, 4)))
        .add(&t(1, 0, 1, 1, rat(-1, 2)))
        .add(&t(0, 1, 1, 1, rat(-1, 2)))
        .add(&t(1, 0, 1, 0, rat(1, 2)))
        .add(&t(0, 1, 1, 0, rat(1, 2)))
        .add(&t(2, 0, 0, 1, rat(-1, 12)))
        .add(&t(0, 2, 0, 1, rat(-1, 12)))
        .add(&t(1, 1, 0, 1, rat(-3, 12)));
    Ok(report("leading structure", 2, &g.truncate(2).sub(&want)))
}

/// Every identity of the module at one `ε`-order.
pub fn all_checks(eps_order: u32, k_range: i64) -> Result<Vec<PerturbCheck>> {
    let mut out = vec![leading_structure_check(eps_order)?, check_difference2(eps_order)?, check_difference1(eps_order)?];
    out.extend(check_pert_shift(k_range, eps_order)?);
    out.extend(check_e_u_and_double(eps_order)?);
    out.push(check_one_parameter_tail(5)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_examples() {
        let q = c_coefficients(3).unwrap();
        assert_eq!(q[0], Poly2::constant(rat(1, 1)));
        // ε₁ε₂c₁ = −(ε₁+ε₂)/2
        assert_eq!(q[1], Poly2::monomial(1, 0, rat(-1, 2)).add(&Poly2::monomial(0, 1, rat(-1, 2))));
        // ε₁ε₂c₂/2 = (ε₁²+ε₂²+3ε₁ε₂)/12
        let want = Poly2::monomial(2, 0, rat(1, 12)).add(&Poly2::monomial(0, 2, rat(1, 12))).add(&Poly2::monomial(1, 1, rat(1, 4)));
        assert_eq!(q[2], want);
        assert_eq!(q[3].total_degree(), Some(3));
    }

    #[test]
    fn leading() {
        assert!(leading_structure_check(4).unwrap().pass);
    }

    #[test]
    fn difference_equations() {
        assert!(check_difference2(5).unwrap().pass);
        assert!(check_difference1(5).unwrap().pass);
    }

    #[test]
    fn shift_small_k() {
        for c in check_pert_shift(2, 4).unwrap() {
            assert!(c.pass, "{:?}", c);
        }
    }

    #[test]
    fn reflections() {
        for c in check_e_u_and_double(5).unwrap() {
            assert!(c.pass, "{:?}", c);
        }
        assert!(check_one_parameter_tail(4).unwrap().pass);
    }

    #[test]
    fn shift_residual_breaks_without_s_factor() {
        // dropping log s^{−k} must leave a nonzero residual for k = 2
        let deg = 4;
        let r = pert_shift_residual(2, deg - 1).unwrap();
        assert!(r.is_zero());
        let e12 = LogPoly::term(deg, Mon { e1: 1, e2: 1, ..Mon::ONE }, rat(1, 1));
        let f = LogPoly::from_form(deg, &LinearForm::eps1().sub(&LinearForm::eps2()));
        let broken = r.add(&f.mul(&e12).mul(&log_s_factor(-2, deg)));
        assert!(!broken.is_zero());
    }
}
