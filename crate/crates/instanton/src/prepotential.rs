//! Taylor data of `F^inst = ε₁ε₂ log Z^inst` at `ε = 0`, and the
//! quantities read off from it: `F₀`, `H`, `G`, `F₁` and contact terms.
//!
//! `ε` is restricted to rays `ε = λ(s₁, s₂)` and `F` is computed as an
//! exact Laurent series in `λ`. The degree-`d` part along `d + 1` rays
//! determines the homogeneous degree-`d` polynomial in `(ε₁, ε₂)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactalg::graded::{mono_to_string, tau_mono, Mono, MAX_P};
use crate::exactalg::ring::fmt_rat;
use crate::exactalg::{rat, Coeff, LinearForm, Rat, SamplePoint, Series};
use crate::localization::{finst, zinst, Evaluated, Evaluator, OmegaParams, TauSpec};
use crate::swcurve;
use crate::{Error, Result};

/// Fixed directions in the `(ε₁, ε₂)` plane, generic enough to avoid
/// every small tangent weight.
pub const RAYS: [(i64, i64); 8] = [(13, -7), (11, 17), (-19, 5), (23, 29), (-31, 37), (41, -43), (47, 53), (-59, 61)];

/// `ε = λ(s₁, s₂)`; every ring element is a series in `λ`, absolute order `order`.
#[derive(Clone, Debug)]
pub struct RayEvaluator {
    pub s1: Rat,
    pub s2: Rat,
    pub order: i64,
}

impl Evaluator for RayEvaluator {
    type R = Series<Rat>;
    fn lin(&self, f: &LinearForm) -> Series<Rat> {
        let slope = &f.e1 * &self.s1 + &f.e2 * &self.s2;
        Series::new("h", 1, 0, vec![f.c.clone(), slope], crate::exactalg::EXACT)
    }
    fn inv_product(&self, forms: &[LinearForm]) -> Result<Series<Rat>> {
        let mut acc = Series::one("h", 1, crate::exactalg::EXACT);
        for f in forms {
            let l = self.lin(f);
            if l.is_zero() {
                return Err(Error::Pole(format!("weight {} vanishes on the ray", f)));
            }
            acc = acc.mul(&l);
        }
        let v = acc.valuation();
        Ok(acc.inv_with_precision(self.order + v)?)
    }
}

/// `c_{ij}` in `F = Σ c_{ij} ε₁^i ε₂^j`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Taylor {
    pub coeffs: BTreeMap<(u32, u32), Rat>,
}

impl Taylor {
    pub fn get(&self, i: u32, j: u32) -> Rat {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(|| rat(0, 1))
    }
    pub fn f0(&self) -> Rat {
        self.get(0, 0)
    }
    pub fn h(&self) -> Rat {
        self.get(1, 0)
    }
    pub fn g(&self) -> Rat {
        self.get(2, 0)
    }
    pub fn f1(&self) -> Rat {
        self.get(1, 1) - self.get(2, 0) * rat(2, 1)
    }
    /// `c_{ij} = c_{ji}`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.keys().all(|&(i, j)| self.get(i, j) == self.get(j, i))
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SampleExpansion {
    pub sample: Vec<Rat>,
    /// Keyed by `(q-power, coupling monomial)`.
    pub terms: BTreeMap<(u32, Mono), Taylor>,
}

impl SampleExpansion {
    pub fn taylor(&self, n: u32, m: &Mono) -> Taylor {
        self.terms.get(&(n, *m)).cloned().unwrap_or_default()
    }
    pub fn plain(&self, n: u32) -> Taylor {
        self.taylor(n, &[0; 2 * MAX_P])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionSpec {
    pub tau_degree: u32,
    pub tau1_cap: u8,
    /// Highest total `ε`-degree kept.
    pub eps_degree: u32,
}

impl ExpansionSpec {
    pub fn plain() -> Self {
        ExpansionSpec { tau_degree: 0, tau1_cap: 0, eps_degree: 2 }
    }

    fn tau_spec(&self) -> TauSpec {
        if self.tau_degree == 0 && self.tau1_cap == 0 {
            return TauSpec::none();
        }
        let max_p = (self.tau_degree as usize + 1).min(MAX_P);
        TauSpec::new(max_p, self.tau_degree, self.tau1_cap)
    }
}

/// r = 2 closed forms: `F₀ = f_n a^{2−4n}`, `F₁ = f′_n a^{−4n}`, `G = g_n a^{−4n}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankTwoForms {
    pub f0: Vec<String>,
    pub f1: Vec<String>,
    pub g: Vec<String>,
    /// Reconstruction from every sample agrees.
    pub agree: bool,
    #[serde(skip)]
    pub f0_exact: Vec<Rat>,
    #[serde(skip)]
    pub f1_exact: Vec<Rat>,
    #[serde(skip)]
    pub g_exact: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonExpansion {
    pub rank: usize,
    pub q_order: u32,
    pub spec: ExpansionSpec,
    pub samples: Vec<SampleExpansion>,
    pub rank_two: Option<RankTwoForms>,
}

fn solve(mut m: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Result<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero_elt())
            .ok_or_else(|| Error::Internal("singular ray system".into()))?;
        m.swap(col, piv);
        b.swap(col, piv);
        let inv = rat(1, 1) / &m[col][col];
        for r in 0..n {
            if r == col || m[r][col].is_zero_elt() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
            let d = &f * &b[col];
            b[r] -= d;
        }
    }
    Ok((0..n).map(|i| &b[i] / &m[i][i]).collect())
}

/// `F^inst` along one ray, as `(q, mono) ↦ λ`-series.
fn along_ray(
    a: &[Rat],
    ray: (i64, i64),
    q_order: u32,
    spec: &ExpansionSpec,
) -> Result<BTreeMap<(u32, Mono), Series<Rat>>> {
    let tau = spec.tau_spec();
    let couplings = spec.tau1_cap as i64 + spec.tau_degree as i64;
    let need = spec.eps_degree as i64 + 1;
    let mut order = need + 2 * q_order as i64 + 2 * couplings + 4;
    for _ in 0..4 {
        let ev = RayEvaluator { s1: rat(ray.0, 1), s2: rat(ray.1, 1), order };
        let p = OmegaParams::base(a);
        let f = finst(&p, &ev, q_order, &tau)?;
        let mut out = BTreeMap::new();
        let mut short = false;
        for n in 0..=q_order {
            let g = f.coeff(n as i64).ok_or_else(|| Error::Order("q-coefficient missing".into()))?;
            for (m, s) in g.terms() {
                if let Some((k, _)) = s.terms().find(|(k, c)| *k < 0 && !c.is_zero_elt()) {
                    return Err(Error::Domain(format!(
                        "regularity violation: q^{} {} has a λ^{} pole",
                        n,
                        mono_to_string(m),
                        k
                    )));
                }
                if s.order() < need {
                    short = true;
                }
                out.insert((n, *m), s.clone());
            }
        }
        if !short {
            return Ok(out);
        }
        order += 8;
    }
    Err(Error::Order("λ-precision did not reach the requested ε-degree".into()))
}

/// Taylor data of `F^inst` at each sample through `q^{q_order}`.
///
/// Only the Coulomb values of each sample are used.
pub fn expand_f(r: usize, samples: &[SamplePoint], q_order: u32, spec: &ExpansionSpec) -> Result<EpsilonExpansion> {
    if spec.eps_degree as usize >= RAYS.len() {
        return Err(Error::InvalidInput(format!("ε-degree at most {}", RAYS.len() - 1)));
    }
    let mut out = Vec::new();
    for sp in samples {
        if sp.a.len() != r {
            return Err(Error::InvalidInput("sample rank mismatch".into()));
        }
        let rays: Vec<(i64, i64)> = RAYS[..spec.eps_degree as usize + 1].to_vec();
        let per_ray: Vec<_> = rays.iter().map(|&ray| along_ray(&sp.a, ray, q_order, spec)).collect::<Result<_>>()?;
        let mut keys: Vec<(u32, Mono)> = per_ray.iter().flat_map(|m| m.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        let mut terms = BTreeMap::new();
        for key in keys {
            let mut t = Taylor::default();
            for d in 0..=spec.eps_degree {
                let k = d as usize + 1;
                let mut m = Vec::with_capacity(k);
                let mut b = Vec::with_capacity(k);
                for (ri, &(s1, s2)) in rays.iter().take(k).enumerate() {
                    let row: Vec<Rat> = (0..=d).map(|i| rat(s1, 1).pow(i as i32) * rat(s2, 1).pow((d - i) as i32)).collect();
                    m.push(row);
                    b.push(per_ray[ri].get(&key).and_then(|s| s.coeff(d as i64)).unwrap_or_else(|| rat(0, 1)));
                }
                for (i, c) in solve(m, b)?.into_iter().enumerate() {
                    if !c.is_zero_elt() {
                        t.coeffs.insert((i as u32, d - i as u32), c);
                    }
                }
            }
            if !t.coeffs.is_empty() {
                terms.insert(key, t);
            }
        }
        out.push(SampleExpansion { sample: sp.a.clone(), terms });
    }
    let rank_two = if r == 2 && spec.eps_degree >= 2 { Some(rank_two_forms(&out, q_order)?) } else { None };
    Ok(EpsilonExpansion { rank: r, q_order, spec: *spec, samples: out, rank_two })
}

/// Homogeneity reconstruction at `ā = (a, −a)`.
pub fn rank_two_forms(samples: &[SampleExpansion], q_order: u32) -> Result<RankTwoForms> {
    let mut agree = true;
    let mut f0 = Vec::new();
    let mut f1 = Vec::new();
    let mut g = Vec::new();
    for n in 0..=q_order {
        let mut vals: Vec<(Rat, Rat, Rat)> = Vec::new();
        for s in samples {
            let a = &s.sample[0];
            if &s.sample[1] != &-a.clone() {
                return Err(Error::InvalidInput("rank-2 reconstruction needs traceless samples".into()));
            }
            let t = s.plain(n);
            let p = a.pow(4 * n as i32);
            vals.push((t.f0() * &p / (a * a), t.f1() * &p, t.g() * &p));
        }
        if let Some(first) = vals.first() {
            agree &= vals.iter().all(|v| v == first);
            f0.push(first.0.clone());
            f1.push(first.1.clone());
            g.push(first.2.clone());
        }
    }
    Ok(RankTwoForms {
        f0: f0.iter().map(fmt_rat).collect(),
        f1: f1.iter().map(fmt_rat).collect(),
        g: g.iter().map(fmt_rat).collect(),
        agree: agree && samples.len() >= 2,
        f0_exact: f0,
        f1_exact: f1,
        g_exact: g,
    })
}

/// `T_{p,q} = ½ ∂²F₀/∂τ_p∂τ_q` per `q`-order at one sample.
pub fn contact_terms(e: &SampleExpansion, q_order: u32, max_p: usize) -> BTreeMap<(usize, usize), Vec<Rat>> {
    let mut out = BTreeMap::new();
    for p in 1..=max_p {
        for q in p..=max_p {
            let mut m = tau_mono(p);
            m[q - 1] += 1;
            let f = if p == q { rat(1, 1) } else { rat(1, 2) };
            let vals = (0..=q_order).map(|n| e.taylor(n, &m).f0() * &f).collect();
            out.insert((p, q), vals);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub sample: usize,
    pub q_exponent: u32,
    pub what: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub q_order: u32,
    pub samples: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub pass: bool,
}

impl IdentityReport {
    fn new(name: &str, q_order: u32, samples: usize) -> Self {
        IdentityReport { name: name.into(), q_order, samples, checked: 0, mismatches: vec![], pass: true }
    }
    fn cmp(&mut self, sample: usize, n: u32, what: &str, l: &Rat, r: &Rat) {
        self.checked += 1;
        if l != r {
            self.pass = false;
            if self.mismatches.len() < 8 {
                self.mismatches.push(Mismatch { sample, q_exponent: n, what: what.into(), left: fmt_rat(l), right: fmt_rat(r) });
            }
        }
    }
}

/// `∂F₀/∂τ₁ = −q∂_qF₀ + Σa²/2` and `T_{1,1} = ½(q∂_q)²F₀`.
pub fn tau1_contact_check(r: usize, samples: &[SamplePoint], q_order: u32) -> Result<IdentityReport> {
    let spec = ExpansionSpec { tau_degree: 0, tau1_cap: 2, eps_degree: 0 };
    let e = expand_f(r, samples, q_order, &spec)?;
    let mut rep = IdentityReport::new("tau1 contact terms", q_order, samples.len());
    let t1 = tau_mono(1);
    let mut t11 = tau_mono(1);
    t11[0] = 2;
    for (si, s) in e.samples.iter().enumerate() {
        let half_a2 = s.sample.iter().fold(rat(0, 1), |acc, a| acc + a * a) * rat(1, 2);
        for n in 0..=q_order {
            let f0 = s.plain(n).f0();
            let nn = rat(n as i64, 1);
            let mut d1 = -(&nn * &f0);
            if n == 0 {
                d1 += &half_a2;
            }
            rep.cmp(si, n, "dF0/dtau1", &s.taylor(n, &t1).f0(), &d1);
            let rhs = &nn * &nn * &f0 * rat(1, 2);
            rep.cmp(si, n, "T11", &s.taylor(n, &t11).f0(), &rhs);
        }
    }
    Ok(rep)
}

/// `Z^inst(ε, −2ε) = Z^inst(2ε, −ε)` through `τ`-degree `2r − 3`.
pub fn h_vanishing_check(r: usize, samples: &[SamplePoint], q_order: u32) -> Result<IdentityReport> {
    let degree = (2 * r as u32).saturating_sub(3);
    let tau = TauSpec::new((degree as usize + 1).min(MAX_P), degree, 1);
    let mut rep = IdentityReport::new("H instanton part vanishes", q_order, samples.len());
    for (si, sp) in samples.iter().enumerate() {
        let p = OmegaParams::base(&sp.a);
        let e = &sp.e1;
        let l = zinst(&p, &Evaluated { e1: e.clone(), e2: e * rat(-2, 1) }, q_order, &tau)?;
        let rr = zinst(&p, &Evaluated { e1: e * rat(2, 1), e2: -e.clone() }, q_order, &tau)?;
        for n in 0..=q_order {
            let lc = l.coeff(n as i64).expect("in range");
            let rc = rr.coeff(n as i64).expect("in range");
            let mut monos: Vec<Mono> = lc.terms().chain(rc.terms()).map(|(m, _)| *m).collect();
            monos.sort();
            monos.dedup();
            for m in monos {
                rep.cmp(si, n, &mono_to_string(&m), &lc.coeff(&m), &rc.coeff(&m));
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatoneReport {
    pub q_order: u32,
    /// `u/a² = Σ u_n vⁿ` from the curve.
    pub u_coefficients: Vec<String>,
    /// `f_n` from localization.
    pub f0_coefficients: Vec<String>,
    pub lambda_derivative: IdentityReport,
    pub tau1_derivative: IdentityReport,
    pub pass: bool,
}

/// `Λ∂_ΛF₀ = −4u` and `∂F₀/∂τ₁ = u` at rank 2, `q = Λ⁴`.
pub fn matone_check(r: usize, samples: &[SamplePoint], q_order: u32) -> Result<MatoneReport> {
    if r != 2 {
        return Err(Error::Unsupported("the curve comparison is implemented for rank 2 only".into()));
    }
    let spec = ExpansionSpec { tau_degree: 0, tau1_cap: 1, eps_degree: 0 };
    let e = expand_f(r, samples, q_order, &spec)?;
    let uv = swcurve::u_over_a2(q_order)?;
    let un: Vec<Rat> = (0..=q_order as i64).map(|n| uv.coeff(n).unwrap_or_else(|| rat(0, 1))).collect();
    let mut lam = IdentityReport::new("Lambda dF0/dLambda = -4u", q_order, samples.len());
    let mut t1 = IdentityReport::new("dF0/dtau1 = u", q_order, samples.len());
    let mut f0s = Vec::new();
    for (si, s) in e.samples.iter().enumerate() {
        let a = &s.sample[0];
        for n in 0..=q_order {
            let u_n = &un[n as usize] * a * a / a.pow(4 * n as i32);
            let f0 = s.plain(n).f0();
            let mut left = f0.clone() * rat(4 * n as i64, 1);
            if n == 0 {
                // perturbative part: −½ Σ_{α≠β} (a_α − a_β)²
                left = pert_lambda_derivative(&s.sample);
            }
            lam.cmp(si, n, "Lambda-derivative", &left, &(u_n.clone() * rat(-4, 1)));
            t1.cmp(si, n, "tau1-derivative", &s.taylor(n, &tau_mono(1)).f0(), &u_n);
            if si == 0 {
                f0s.push(fmt_rat(&(f0 * a.pow(4 * n as i32) / (a * a))));
            }
        }
    }
    let pass = lam.pass && t1.pass;
    Ok(MatoneReport {
        q_order,
        u_coefficients: un.iter().map(fmt_rat).collect(),
        f0_coefficients: f0s,
        lambda_derivative: lam,
        tau1_derivative: t1,
        pass,
    })
}

/// `Λ∂_Λ` of the perturbative `F₀`.
pub fn pert_lambda_derivative(a: &[Rat]) -> Rat {
    let mut s = rat(0, 1);
    for x in a {
        for y in a {
            let d = x - y;
            s -= &d * &d * rat(1, 2);
        }
    }
    s
}

/// `f_n = −u_n/n`, from the monomial forms.
pub fn f0_from_curve(q_order: u32) -> Result<Vec<Rat>> {
    let uv = swcurve::u_over_a2(q_order)?;
    Ok((0..=q_order as i64)
        .map(|n| if n == 0 { rat(0, 1) } else { -uv.coeff(n).unwrap_or_else(|| rat(0, 1)) / rat(n, 1) })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rational_sample, SampleConstraints};

    fn samples(r: usize, k: u64) -> Vec<SamplePoint> {
        (0..k).map(|s| rational_sample(100 + s, &SampleConstraints::new(r)).unwrap()).collect()
    }

    #[test]
    fn solve_small() {
        let m = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]];
        assert_eq!(solve(m, vec![rat(3, 1), rat(1, 1)]).unwrap(), vec![rat(2, 1), rat(1, 1)]);
    }

    #[test]
    fn rank_one_is_polynomial() {
        // Z = exp(q/(ε₁ε₂)) so F^inst = q exactly
        let e = expand_f(1, &samples(1, 1), 3, &ExpansionSpec::plain()).unwrap();
        let s = &e.samples[0];
        assert_eq!(s.plain(1).coeffs, BTreeMap::from([((0, 0), rat(1, 1))]));
        assert!(s.plain(2).coeffs.is_empty());
    }

    #[test]
    fn rank_two_first_orders() {
        let e = expand_f(2, &samples(2, 2), 2, &ExpansionSpec::plain()).unwrap();
        let r2 = e.rank_two.unwrap();
        assert!(r2.agree);
        assert_eq!(r2.f0_exact[1], rat(-1, 2));
        assert_eq!(r2.f0_exact, f0_from_curve(2).unwrap());
        for s in &e.samples {
            for t in s.terms.values() {
                assert!(t.is_symmetric());
            }
            assert_eq!(s.plain(1).h(), rat(0, 1));
        }
    }

    #[test]
    fn matone_rank_two() {
        let rep = matone_check(2, &samples(2, 2), 2).unwrap();
        assert!(rep.pass, "{:#?}", rep);
    }

    #[test]
    fn tau1_contact() {
        assert!(tau1_contact_check(2, &samples(2, 1), 2).unwrap().pass);
    }

    #[test]
    fn h_vanishing() {
        let rep = h_vanishing_check(2, &samples(2, 1), 2).unwrap();
        assert!(rep.pass, "{:#?}", rep);
    }
}
