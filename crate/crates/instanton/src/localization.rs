//! Torus localization on the framed moduli space: tangent weights,
//! Euler classes, fixed-point characters and `Z^inst`.
//!
//! Colour indices are 0-based. A parameter point is an [`OmegaParams`]
//! of linear forms in the base `(ε₁, ε₂)`; an [`Evaluator`] decides
//! whether those forms become sampled rationals or rational functions.

use rayon::prelude::*;

use crate::combinatorics::{enumerate_tuples, DiagramTuple};
use crate::exactalg::graded::{t_mono, tau_mono, MAX_P};
use crate::exactalg::{
    rat, Brf, Coeff, GradedTauPolynomial, LinearForm, Rat, SamplePoint, Series, Truncation,
};
use crate::{Error, Result};

/// `ε₁, ε₂, a₁..a_r` as linear forms in the base `(ε₁, ε₂)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaParams {
    pub e1: LinearForm,
    pub e2: LinearForm,
    pub a: Vec<LinearForm>,
}

impl OmegaParams {
    /// The base point `(ε₁, ε₂, ā)` with constant Coulomb values.
    pub fn base(a: &[Rat]) -> Self {
        OmegaParams {
            e1: LinearForm::eps1(),
            e2: LinearForm::eps2(),
            a: a.iter().map(|x| LinearForm::constant(x.clone())).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// Swap `ε₁ ↔ ε₂`.
    pub fn swapped(&self) -> Self {
        OmegaParams { e1: self.e2.clone(), e2: self.e1.clone(), a: self.a.clone() }
    }
}

/// A tangent weight `c·ε₁ + d·ε₂ + a_β − a_α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub c: i64,
    pub d: i64,
    pub alpha: usize,
    pub beta: usize,
}

impl Weight {
    pub fn form(&self, p: &OmegaParams) -> LinearForm {
        p.e1.scale(&rat(self.c, 1))
            .add(&p.e2.scale(&rat(self.d, 1)))
            .add(&p.a[self.beta])
            .sub(&p.a[self.alpha])
    }
}

/// Weights of `N_{α,β}` at the fixed point `ys`.
pub fn tangent_weights(ys: &DiagramTuple, alpha: usize, beta: usize) -> Result<Vec<Weight>> {
    let r = ys.rank();
    if alpha >= r || beta >= r {
        return Err(Error::InvalidInput(format!("colour index out of range for rank {}", r)));
    }
    let ya = &ys.diagrams[alpha];
    let yb = &ys.diagrams[beta];
    let mut out = Vec::with_capacity((ya.size() + yb.size()) as usize);
    for (i, j) in ya.boxes() {
        out.push(Weight { c: -yb.leg(i, j), d: ya.arm(i, j) + 1, alpha, beta });
    }
    for (i, j) in yb.boxes() {
        out.push(Weight { c: ya.leg(i, j) + 1, d: -yb.arm(i, j), alpha, beta });
    }
    Ok(out)
}

/// All `2nr` tangent weights at `ys`.
pub fn all_tangent_weights(ys: &DiagramTuple) -> Vec<Weight> {
    let r = ys.rank();
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r {
            out.extend(tangent_weights(ys, a, b).expect("indices in range"));
        }
    }
    out
}

/// How linear forms in `(ε₁, ε₂)` become ring elements.
pub trait Evaluator: Sync {
    type R: Coeff;
    fn lin(&self, f: &LinearForm) -> Self::R;
    /// `1 / ∏ forms`, failing when a form vanishes.
    fn inv_product(&self, forms: &[LinearForm]) -> Result<Self::R>;
}

/// Sampled `(ε₁, ε₂)`: everything is a rational number.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluated {
    pub e1: Rat,
    pub e2: Rat,
}

impl Evaluated {
    pub fn at(p: &SamplePoint) -> Self {
        Evaluated { e1: p.e1.clone(), e2: p.e2.clone() }
    }
}

impl Evaluator for Evaluated {
    type R = Rat;
    fn lin(&self, f: &LinearForm) -> Rat {
        f.eval(&self.e1, &self.e2)
    }
    fn inv_product(&self, forms: &[LinearForm]) -> Result<Rat> {
        let mut acc = rat(1, 1);
        for f in forms {
            let v = f.eval(&self.e1, &self.e2);
            if v.is_zero_elt() {
                return Err(Error::Pole(format!("weight {} vanishes at the sample", f)));
            }
            acc *= v;
        }
        Ok(acc.try_inv().expect("nonzero"))
    }
}

/// Formal `(ε₁, ε₂)`: rational functions with linear-form denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Symbolic;

impl Evaluator for Symbolic {
    type R = Brf;
    fn lin(&self, f: &LinearForm) -> Brf {
        Brf::form(f)
    }
    fn inv_product(&self, forms: &[LinearForm]) -> Result<Brf> {
        Brf::inv_product(forms)
    }
}

/// `∏ weights` at `ys`.
pub fn euler_class<E: Evaluator>(ys: &DiagramTuple, p: &OmegaParams, ev: &E) -> Result<E::R> {
    let mut acc = E::R::one_elt();
    for w in all_tangent_weights(ys) {
        let f = w.form(p);
        let v = ev.lin(&f);
        if v.is_zero_elt() {
            return Err(Error::Pole(format!("tangent weight {:?} = {} vanishes", w, f)));
        }
        acc = acc.times(&v);
    }
    Ok(acc)
}

/// `1 / euler_class`.
pub fn inverse_euler_class<E: Evaluator>(ys: &DiagramTuple, p: &OmegaParams, ev: &E) -> Result<E::R> {
    let forms: Vec<LinearForm> = all_tangent_weights(ys).iter().map(|w| w.form(p)).collect();
    ev.inv_product(&forms)
}

fn inv_factorial(m: u32) -> Rat {
    let mut f = rat(1, 1);
    for i in 1..=m as i64 {
        f /= rat(i, 1);
    }
    f
}

/// Coefficients of `s⁰..s^{s_order}` in the fixed-point character of the
/// universal sheaf, with every weight scaled by `s`.
///
/// Box terms are `e^{a_α − l′ε₁ − a′ε₂}(1−e^{−ε₁})(1−e^{−ε₂})`, the sign
/// that matches the tangent weights above.
pub fn fixed_point_character<E: Evaluator>(
    ys: &DiagramTuple,
    p: &OmegaParams,
    ev: &E,
    s_order: u32,
) -> Vec<E::R> {
    let e12 = p.e1.add(&p.e2);
    (0..=s_order)
        .map(|m| {
            let mut acc = E::R::zero_elt();
            for (al, y) in ys.diagrams.iter().enumerate() {
                acc = acc.plus(&ev.lin(&p.a[al]).pow(m));
                for (i, j) in y.boxes() {
                    let w = p.a[al]
                        .sub(&p.e1.scale(&rat(i - 1, 1)))
                        .sub(&p.e2.scale(&rat(j - 1, 1)));
                    let t = ev
                        .lin(&w)
                        .pow(m)
                        .minus(&ev.lin(&w.sub(&p.e1)).pow(m))
                        .minus(&ev.lin(&w.sub(&p.e2)).pow(m))
                        .plus(&ev.lin(&w.sub(&e12)).pow(m));
                    acc = acc.minus(&t);
                }
            }
            acc.scale(&inv_factorial(m))
        })
        .collect()
}

/// Which couplings enter `Z^inst` and how the result is truncated.
#[derive(Clone, Debug, PartialEq)]
pub struct TauSpec {
    /// Couplings `τ₁..τ_P`; `0` means none.
    pub max_p: usize,
    /// Skip `τ₁` even when `max_p ≥ 1`.
    pub skip_tau1: bool,
    pub trunc: Truncation,
    /// When set, every `τ_p` is replaced by `τ_p + scale·t_p`.
    pub t_scale: Option<LinearForm>,
}

impl TauSpec {
    /// No couplings at all.
    pub fn none() -> Self {
        TauSpec { max_p: 0, skip_tau1: false, trunc: Truncation::new(0, 0), t_scale: None }
    }

    pub fn new(max_p: usize, degree: u32, tau1_cap: u8) -> Self {
        TauSpec { max_p, skip_tau1: false, trunc: Truncation::new(degree, tau1_cap), t_scale: None }
    }

    pub fn with_t(mut self, scale: LinearForm) -> Self {
        self.t_scale = Some(scale);
        self
    }
}

pub type ZSeries<R> = Series<GradedTauPolynomial<R>>;

/// Contribution of a single fixed point: `exp(Σ τ_p C_p) / e(ys)`.
pub fn fixed_point_term<E: Evaluator>(
    ys: &DiagramTuple,
    p: &OmegaParams,
    ev: &E,
    tau: &TauSpec,
) -> Result<GradedTauPolynomial<E::R>> {
    if tau.max_p > MAX_P {
        return Err(Error::InvalidInput(format!("at most {} couplings are supported", MAX_P)));
    }
    let inv_e = inverse_euler_class(ys, p, ev)?;
    let tr = tau.trunc;
    if tau.max_p == 0 {
        return Ok(GradedTauPolynomial::constant(inv_e, tr));
    }
    let ch = fixed_point_character(ys, p, ev, tau.max_p as u32 + 1);
    let slant = ev.inv_product(&[p.e1.clone(), p.e2.clone()])?;
    let scale = tau.t_scale.as_ref().map(|s| ev.lin(s));
    let mut x = GradedTauPolynomial::zero_with(tr);
    for pp in 1..=tau.max_p {
        let cp = ch[pp + 1].times(&slant);
        if !(pp == 1 && tau.skip_tau1) {
            x = x.add(&GradedTauPolynomial::monomial(tau_mono(pp), cp.clone(), tr));
        }
        if let Some(s) = &scale {
            x = x.add(&GradedTauPolynomial::monomial(t_mono(pp), cp.times(s), tr));
        }
    }
    let e = x
        .exp_nilpotent()
        .ok_or_else(|| Error::Internal("coupling exponent is not nilpotent".into()))?;
    Ok(e.scale_by(&inv_e))
}

/// `Z^inst` through `q^{q_order}`.
pub fn zinst<E: Evaluator>(p: &OmegaParams, ev: &E, q_order: u32, tau: &TauSpec) -> Result<ZSeries<E::R>>
where
    E::R: Send,
{
    let r = p.rank();
    if r == 0 {
        return Err(Error::InvalidInput("rank must be at least 1".into()));
    }
    let mut coeffs = Vec::with_capacity(q_order as usize + 1);
    for n in 0..=q_order {
        let tuples = enumerate_tuples(r, n);
        let terms: Vec<Result<GradedTauPolynomial<E::R>>> =
            tuples.par_iter().map(|ys| fixed_point_term(ys, p, ev, tau)).collect();
        let mut acc = GradedTauPolynomial::zero_with(tau.trunc);
        for t in terms {
            acc = acc.add(&t?);
        }
        coeffs.push(acc);
    }
    Ok(Series::new("q", 1, 0, coeffs, q_order as i64 + 1))
}

/// `Z^inst` without couplings, as a plain series.
pub fn zinst_plain<E: Evaluator>(p: &OmegaParams, ev: &E, q_order: u32) -> Result<Series<E::R>>
where
    E::R: Send,
{
    let z = zinst(p, ev, q_order, &TauSpec::none())?;
    Ok(z.map_into(|g| g.constant_term()))
}

/// `ε₁ε₂ log Z^inst`. The classical part of `Z^inst` already carries the
/// τ-linear prefix `Σ τ_p Σ_α a_α^{p+1}/(p+1)!`.
pub fn finst<E: Evaluator>(p: &OmegaParams, ev: &E, q_order: u32, tau: &TauSpec) -> Result<ZSeries<E::R>>
where
    E::R: Send,
{
    let z = zinst(p, ev, q_order, tau)?;
    let l = z.log()?;
    let e12 = ev.lin(&p.e1).times(&ev.lin(&p.e2));
    Ok(l.map(|g| g.scale_by(&e12)))
}

/// Outcome of the `τ₁` shift law comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftLawReport {
    pub pass: bool,
    /// `(q-power, monomial)` of the first mismatch.
    pub first_mismatch: Option<(i64, String)>,
}

/// Check `Z(τ̄ + τ₁) = exp(τ₁ Σa²/(2ε₁ε₂)) Z(q e^{−τ₁}, τ̄)` through `q^{q_order}`.
pub fn shift_law_check<E: Evaluator>(
    p: &OmegaParams,
    ev: &E,
    q_order: u32,
    max_p: usize,
    degree: u32,
    tau1_cap: u8,
) -> Result<ShiftLawReport>
where
    E::R: Send,
{
    let full = TauSpec::new(max_p.max(1), degree, tau1_cap);
    let lhs = zinst(p, ev, q_order, &full)?;
    let mut rest = full.clone();
    rest.skip_tau1 = true;
    let z0 = zinst(p, ev, q_order, &rest)?;
    let tr = full.trunc;
    let tau1 = GradedTauPolynomial::monomial(tau_mono(1), E::R::one_elt(), tr);
    let mut sum_a2 = E::R::zero_elt();
    for a in &p.a {
        sum_a2 = sum_a2.plus(&ev.lin(a).pow(2));
    }
    let pref_c = sum_a2.times(&ev.inv_product(&[p.e1.clone(), p.e2.clone()])?).scale(&rat(1, 2));
    let pref = tau1.scale_by(&pref_c).exp_nilpotent().ok_or_else(|| Error::Internal("exp".into()))?;
    let mut coeffs = Vec::new();
    for n in 0..=q_order as i64 {
        let damp = tau1
            .scale_rat(&rat(-n, 1))
            .exp_nilpotent()
            .ok_or_else(|| Error::Internal("exp".into()))?;
        coeffs.push(z0.coeff(n).expect("in range").mul(&damp).mul(&pref));
    }
    let rhs = Series::new("q", 1, 0, coeffs, q_order as i64 + 1);
    for n in 0..=q_order as i64 {
        let l = lhs.coeff(n).expect("in range");
        let r = rhs.coeff(n).expect("in range");
        let d = l.minus(&r);
        let bad = d.terms().next().map(|(m, _)| crate::exactalg::graded::mono_to_string(m));
        if let Some(m) = bad {
            return Ok(ShiftLawReport { pass: false, first_mismatch: Some((n, m)) });
        }
    }
    Ok(ShiftLawReport { pass: true, first_mismatch: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::YoungDiagram;
    use crate::exactalg::Poly2;

    fn single(c: &[u32]) -> DiagramTuple {
        DiagramTuple::new(vec![YoungDiagram::new(c.to_vec()).unwrap()])
    }

    #[test]
    fn weights_of_column_two() {
        let w = tangent_weights(&single(&[2]), 0, 0).unwrap();
        let got: Vec<(i64, i64)> = w.iter().map(|w| (w.c, w.d)).collect();
        assert_eq!(got, vec![(0, 2), (0, 1), (1, -1), (1, 0)]);
        assert!(tangent_weights(&single(&[]), 0, 0).unwrap().is_empty());
    }

    #[test]
    fn euler_examples() {
        let p = OmegaParams::base(&[rat(0, 1)]);
        let e = euler_class(&single(&[2]), &p, &Symbolic).unwrap();
        // 2 ε₁ ε₂² (ε₁ − ε₂)
        let want = Poly2::monomial(2, 2, rat(2, 1)).sub(&Poly2::monomial(1, 3, rat(2, 1)));
        assert_eq!(e, Brf::from_poly(want));
        let e = euler_class(&single(&[1, 1]), &p, &Symbolic).unwrap();
        // 2 ε₂ ε₁² (ε₂ − ε₁)
        let want = Poly2::monomial(2, 2, rat(2, 1)).sub(&Poly2::monomial(3, 1, rat(2, 1)));
        assert_eq!(e, Brf::from_poly(want));
        let e = euler_class(&single(&[1]), &p, &Symbolic).unwrap();
        assert_eq!(e, Brf::from_poly(Poly2::monomial(1, 1, rat(1, 1))));
    }

    #[test]
    fn character_of_one_box() {
        let a = rat(3, 7);
        let ev = Evaluated { e1: rat(2, 5), e2: rat(-1, 3) };
        let p = OmegaParams::base(&[a.clone()]);
        let ch = fixed_point_character(&single(&[1]), &p, &ev, 2);
        assert_eq!(ch[0], rat(1, 1));
        assert_eq!(ch[2], &a * &a / rat(2, 1) - rat(2, 5) * rat(-1, 3));
    }

    #[test]
    fn rank_one_closed_form() {
        let ev = Evaluated { e1: rat(3, 4), e2: rat(-5, 2) };
        let p = OmegaParams::base(&[rat(0, 1)]);
        let z = zinst_plain(&p, &ev, 4).unwrap();
        let x = (&ev.e1 * &ev.e2).recip();
        let want = Series::new("q", 1, 1, vec![x], 5).exp().unwrap();
        assert_eq!(z, want);
    }

    #[test]
    fn q0_is_one() {
        let ev = Evaluated { e1: rat(3, 4), e2: rat(-5, 2) };
        let p = OmegaParams::base(&[rat(1, 3), rat(-1, 3)]);
        let z = zinst_plain(&p, &ev, 1).unwrap();
        assert_eq!(z.coeff(0), Some(rat(1, 1)));
    }
}
