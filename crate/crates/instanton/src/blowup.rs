//! The blowup side: edge factors `s^k`, tangent weights at blowup fixed
//! points, the lattice sum `Ẑ^inst`, its low-degree vanishing, and the
//! order-by-order reconstruction of `Z^inst` from the `c₁ = 0` equation.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{enumerate_coroots, BlowupFixedPoint, CorootVector};
use crate::exactalg::graded::{mono_to_string, weight, MAX_P};
use crate::exactalg::sample::SampleJson;
use crate::exactalg::{
    rat, Coeff, LinearForm, QSeries, Rat, SamplePoint, Series,
};
use crate::localization::{
    all_tangent_weights, zinst, Evaluated, Evaluator, OmegaParams, TauSpec, ZSeries,
};
use crate::{Error, Result};

/// Linear factors of `s^k(ε₁, ε₂, x)`, with `ε₁, ε₂, x` given as forms.
pub fn s_factor_forms(k: i64, e1: &LinearForm, e2: &LinearForm, x: &LinearForm) -> Vec<LinearForm> {
    let mut out = Vec::new();
    if k > 0 {
        for i in 0..k {
            for j in 0..k - i {
                out.push(x.sub(&e1.scale(&rat(i, 1))).sub(&e2.scale(&rat(j, 1))));
            }
        }
    } else if k < -1 {
        for i in 0..=(-k - 2) {
            for j in 0..=(-k - 2 - i) {
                out.push(x.add(&e1.scale(&rat(i + 1, 1))).add(&e2.scale(&rat(j + 1, 1))));
            }
        }
    }
    out
}

/// `s^k(ε₁, ε₂, x)` evaluated in a ring.
pub fn s_factor<R: Coeff>(k: i64, e1: &R, e2: &R, x: &R) -> R {
    let mut acc = R::one_elt();
    if k > 0 {
        for i in 0..k {
            for j in 0..k - i {
                let f = x.minus(&e1.scale(&rat(i, 1))).minus(&e2.scale(&rat(j, 1)));
                acc = acc.times(&f);
            }
        }
    } else if k < -1 {
        for i in 0..=(-k - 2) {
            for j in 0..=(-k - 2 - i) {
                let f = x.plus(&e1.scale(&rat(i + 1, 1))).plus(&e2.scale(&rat(j + 1, 1)));
                acc = acc.times(&f);
            }
        }
    }
    acc
}

/// The two Ω-points entering the lattice sum for `k̄`:
/// `(ε₁, ε₂−ε₁, ā+ε₁k̄)` and `(ε₁−ε₂, ε₂, ā+ε₂k̄)`.
pub fn shifted_params(base: &OmegaParams, kbar: &[Rat]) -> (OmegaParams, OmegaParams) {
    let pa = OmegaParams {
        e1: base.e1.clone(),
        e2: base.e2.sub(&base.e1),
        a: base.a.iter().zip(kbar).map(|(a, k)| a.add(&base.e1.scale(k))).collect(),
    };
    let pb = OmegaParams {
        e1: base.e1.sub(&base.e2),
        e2: base.e2.clone(),
        a: base.a.iter().zip(kbar).map(|(a, k)| a.add(&base.e2.scale(k))).collect(),
    };
    (pa, pb)
}

/// All factors `l^{k̄}_{α,β} = s^{k_α−k_β}(ε₁, ε₂, a_β − a_α)`.
pub fn l_forms(base: &OmegaParams, k: &CorootVector) -> Vec<LinearForm> {
    let r = base.rank();
    let mut out = Vec::new();
    for al in 0..r {
        for be in 0..r {
            let d = k.entries[al] - k.entries[be];
            out.extend(s_factor_forms(d, &base.e1, &base.e2, &base.a[be].sub(&base.a[al])));
        }
    }
    out
}

/// Tangent weights at a blowup fixed point for the pair `(α, β)`.
pub fn blowup_tangent_weights(
    fp: &BlowupFixedPoint,
    base: &OmegaParams,
    alpha: usize,
    beta: usize,
) -> Result<Vec<LinearForm>> {
    let r = base.rank();
    if alpha >= r || beta >= r || fp.coroot.rank() != r {
        return Err(Error::InvalidInput("colour index or rank mismatch".into()));
    }
    let d = fp.coroot.entries[alpha] - fp.coroot.entries[beta];
    let mut out = s_factor_forms(d, &base.e1, &base.e2, &base.a[beta].sub(&base.a[alpha]));
    let (pa, pb) = shifted_params(base, &fp.coroot.shifted());
    for w in crate::localization::tangent_weights(&fp.y1, alpha, beta)? {
        out.push(w.form(&pa));
    }
    for w in crate::localization::tangent_weights(&fp.y2, alpha, beta)? {
        out.push(w.form(&pb));
    }
    Ok(out)
}

/// Every tangent weight at a blowup fixed point.
pub fn all_blowup_weights(fp: &BlowupFixedPoint, base: &OmegaParams) -> Vec<LinearForm> {
    let r = base.rank();
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r {
            out.extend(blowup_tangent_weights(fp, base, a, b).expect("valid indices"));
        }
    }
    out
}

/// Couplings used on the blowup side.
#[derive(Clone, Debug, PartialEq)]
pub struct CouplingSpec {
    pub max_p: usize,
    /// Largest weighted `(τ, t)` degree kept.
    pub degree: u32,
    pub tau1_cap: u8,
}

impl CouplingSpec {
    fn tau(&self) -> TauSpec {
        TauSpec::new(self.max_p, self.degree, self.tau1_cap)
    }
}

/// `Ẑ^inst_{c₁=k}` through `q^{q_order}` (exponents in units of `1/2r`).
pub fn zhat_inst<E: Evaluator>(
    base: &OmegaParams,
    sector: i64,
    ev: &E,
    q_order: u32,
    cs: &CouplingSpec,
) -> Result<ZSeries<E::R>>
where
    E::R: Send,
{
    let r = base.rank();
    if sector < 0 || sector >= r as i64 {
        return Err(Error::InvalidInput(format!("sector must lie in [0, {})", r)));
    }
    let den = 2 * r as u32;
    let order = (q_order as i64 + 1) * den as i64;
    let bound = rat(q_order as i64 + 1, 1);
    let coroots: Vec<CorootVector> = enumerate_coroots(r, sector, &bound)?
        .into_iter()
        .filter(|c| c.half_norm() < bound)
        .collect();
    let tau = cs.tau();
    let terms: Vec<Result<ZSeries<E::R>>> = coroots
        .par_iter()
        .map(|c| {
            let hn = c.half_norm();
            let units = (&hn * rat(den as i64, 1)).to_integer();
            let units: i64 = i64::try_from(units).map_err(|_| Error::Internal("exponent overflow".into()))?;
            // Z factors are needed through q^m with hn + m < q_order + 1
            let m = (order - units - 1).div_euclid(den as i64);
            let (pa, pb) = shifted_params(base, &c.shifted());
            let za = zinst(&pa, ev, m as u32, &tau.clone().with_t(base.e1.clone()))?;
            let zb = zinst(&pb, ev, m as u32, &tau.clone().with_t(base.e2.clone()))?;
            let inv_l = ev.inv_product(&l_forms(base, c))?;
            let prod = za.mul(&zb).map(|g| g.scale_by(&inv_l));
            Ok(prod.reencode(den).shift(units).truncate(order))
        })
        .collect();
    let mut acc: ZSeries<E::R> = Series::zero("q", den, order);
    for t in terms {
        acc = acc.add(&t?);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    /// q-exponent as `num/den`.
    pub q_exponent: String,
    pub monomial: String,
    pub value: String,
    pub sample: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapReport {
    pub rank: usize,
    pub sector: i64,
    pub q_order: u32,
    /// Monomials of weighted degree strictly below this must vanish.
    pub degree_bound: u32,
    pub tau1_cap: u8,
    pub samples: Vec<SampleJson>,
    pub checked_coefficients: usize,
    pub violations: Vec<Violation>,
    pub pass: bool,
}

/// Degree below which the sector-`k` equation forces vanishing.
pub fn gap_degree(r: usize, k: i64) -> u32 {
    if k == 0 {
        2 * r as u32
    } else {
        (k * (r as i64 - k)) as u32
    }
}

/// Check the low-degree vanishing of the blowup equation at each sample.
///
/// Sector 0 compares `Ẑ` with `Z^inst` below degree `2r`; sector
/// `0 < k < r` requires `Ẑ` itself to vanish below degree `k(r−k)`.
pub fn check_blowup_gap(
    r: usize,
    sector: i64,
    samples: &[SamplePoint],
    q_order: u32,
    tau1_cap: u8,
) -> Result<GapReport> {
    if sector < 0 || sector >= r as i64 {
        return Err(Error::InvalidInput(format!("sector must lie in [0, {})", r)));
    }
    let bound = gap_degree(r, sector);
    let cs = CouplingSpec { max_p: (bound as usize).min(MAX_P), degree: bound.saturating_sub(1), tau1_cap };
    if bound == 0 {
        return Err(Error::InvalidInput("empty degree range".into()));
    }
    let mut violations = Vec::new();
    let mut checked = 0usize;
    for (si, sp) in samples.iter().enumerate() {
        if sp.a.len() != r {
            return Err(Error::InvalidInput("sample rank mismatch".into()));
        }
        let ev = Evaluated::at(sp);
        let base = OmegaParams::base(&sp.a);
        let zh = zhat_inst(&base, sector, &ev, q_order, &cs)?;
        let diff = if sector == 0 {
            let z = zinst(&base, &ev, q_order, &cs.tau())?;
            zh.sub(&z.reencode(zh.denom()))
        } else {
            zh
        };
        let den = diff.denom() as i64;
        for u in 0..diff.order() {
            let c = diff.coeff(u).expect("below order");
            for (m, v) in c.terms() {
                if weight(m) < bound {
                    violations.push(Violation {
                        q_exponent: crate::exactalg::ring::fmt_rat(&rat(u, den)),
                        monomial: mono_to_string(m),
                        value: crate::exactalg::ring::fmt_rat(v),
                        sample: si,
                    });
                }
            }
            checked += 1;
        }
    }
    Ok(GapReport {
        rank: r,
        sector,
        q_order,
        degree_bound: bound,
        tau1_cap,
        samples: samples.iter().map(|s| s.describe()).collect(),
        checked_coefficients: checked,
        pass: violations.is_empty(),
        violations,
    })
}

/// Nonzero coefficients of `Ẑ` below the gap degree, as `(q units, monomial)`.
pub fn low_degree_support(z: &ZSeries<Rat>, bound: u32) -> Vec<(i64, String)> {
    let mut out = Vec::new();
    for u in 0..z.order() {
        for (m, _) in z.coeff(u).expect("below order").terms() {
            if weight(m) < bound {
                out.push((u, mono_to_string(m)));
            }
        }
    }
    out
}

/// Point `(ε₁, ε₂, ā)` used by the recursion.
type Point = (Rat, Rat, Vec<Rat>);

/// Recursive reconstruction of `log Z^inst` from the sector-0 blowup
/// equation at `τ = 0`.
///
/// The `t₁` and `t₁²` coefficients of `Ẑ_{c₁=0}(τ = 0, t = t₁e₁)` vanish
/// for `r ≥ 2`. Expanding the two `Z` factors with the `τ₁` shift law gives a
/// 2×2 linear system for the `qⁿ` coefficients of `log Z` at
/// `(ε₁, ε₂−ε₁, ā)` and `(ε₁−ε₂, ε₂, ā)`; lower orders and the shifted
/// points `ā+ε_i k̄` are obtained recursively.
pub struct BlowupRecursion {
    memo: BTreeMap<(Point, u32), Vec<Rat>>,
}

impl Default for BlowupRecursion {
    fn default() -> Self {
        Self::new()
    }
}

fn sum_rat<'a>(it: impl Iterator<Item = &'a Rat>) -> Rat {
    it.fold(rat(0, 1), |s, x| s + x)
}

impl BlowupRecursion {
    pub fn new() -> Self {
        BlowupRecursion { memo: BTreeMap::new() }
    }

    /// `[q¹..qⁿ] log Z^inst(ε₁, ε₂, ā)`.
    pub fn log_z(&mut self, p: &Point, n: u32) -> Result<Vec<Rat>> {
        if n == 0 {
            return Ok(vec![]);
        }
        if let Some(v) = self.memo.get(&(p.clone(), n)) {
            return Ok(v.clone());
        }
        // (ε₁, ε₂, ā) is the first blown-up point of (ε₁, ε₁+ε₂, ā)
        let pre = (p.0.clone(), &p.0 + &p.1, p.2.clone());
        let (wa, _) = self.solve(&pre, n)?;
        self.memo.insert((p.clone(), n), wa.clone());
        Ok(wa)
    }

    fn lattice(r: usize, n: u32) -> Result<Vec<CorootVector>> {
        enumerate_coroots(r, 0, &rat(n as i64, 1))
    }

    /// Series pieces `(c_k, D_k, E_k)` through `qⁿ` for one lattice vector.
    fn pieces(p: &Point, k: &CorootVector, wa: &[Rat], wb: &[Rat], n: u32) -> Result<(QSeries, QSeries, QSeries)> {
        let (e1, e2, a) = p;
        let order = n as i64 + 1;
        let hn = k.half_norm().to_integer();
        let hn = i64::try_from(hn).map_err(|_| Error::Internal("norm overflow".into()))?;
        let r = a.len();
        let mut lprod = rat(1, 1);
        for al in 0..r {
            for be in 0..r {
                let d = k.entries[al] - k.entries[be];
                lprod *= s_factor(d, e1, e2, &(&a[be] - &a[al]));
            }
        }
        if lprod.is_zero_elt() {
            return Err(Error::Pole(format!("edge factor vanishes for k = {}", k)));
        }
        let w: Vec<Rat> = (0..n as usize)
            .map(|i| wa.get(i).cloned().unwrap_or_else(|| rat(0, 1)) + wb.get(i).cloned().unwrap_or_else(|| rat(0, 1)))
            .collect();
        let mut wser = QSeries::new("q", 1, 1, w, order);
        wser = wser.truncate(order - hn);
        let c = wser.exp()?.scale(&lprod.try_inv().expect("nonzero")).shift(hn).truncate(order);
        let ka: Rat = sum_rat(a.iter().zip(&k.entries).map(|(x, &kk)| x * rat(kk, 1)).collect::<Vec<_>>().iter());
        let k2 = rat(k.entries.iter().map(|x| x * x).sum::<i64>(), 1);
        let d0 = -(ka + (e1 + e2) * k2 / rat(2, 1));
        let mut dco = vec![d0];
        let mut eco = vec![rat(0, 1)];
        for m in 1..=n as usize {
            let xa = wa.get(m - 1).cloned().unwrap_or_else(|| rat(0, 1));
            let xb = wb.get(m - 1).cloned().unwrap_or_else(|| rat(0, 1));
            let mm = rat(m as i64, 1);
            dco.push(-(&mm * (e1 * &xa + e2 * &xb)));
            eco.push(&mm * &mm * (e1 * e1 * &xa + e2 * e2 * &xb));
        }
        let tr = (order - hn).max(0);
        let d = QSeries::new("q", 1, 0, dco, order).truncate(tr);
        let e = QSeries::new("q", 1, 0, eco, order).truncate(tr);
        Ok((c, d, e))
    }

    /// Solve the sector-0 equation at `p` for orders `1..=n`; returns the
    /// log-coefficients at the two blown-up points.
    pub fn solve(&mut self, p: &Point, n: u32) -> Result<(Vec<Rat>, Vec<Rat>)> {
        let (e1, e2, a) = p.clone();
        if e1.is_zero_elt() || e2.is_zero_elt() || e1 == e2 {
            return Err(Error::Domain("recursion needs ε₁ ≠ ε₂, both nonzero".into()));
        }
        let r = a.len();
        let lattice = Self::lattice(r, n)?;
        // data at shifted points for k ≠ 0
        let mut shifted = Vec::new();
        for k in lattice.iter().filter(|k| k.entries.iter().any(|&x| x != 0)) {
            let hn = k.half_norm().to_integer();
            let left: u32 = (n as i64 - i64::try_from(hn).unwrap_or(i64::MAX)).max(0) as u32;
            let pa: Point = (e1.clone(), &e2 - &e1, a.iter().zip(&k.entries).map(|(x, &kk)| x + &e1 * rat(kk, 1)).collect());
            let pb: Point = (&e1 - &e2, e2.clone(), a.iter().zip(&k.entries).map(|(x, &kk)| x + &e2 * rat(kk, 1)).collect());
            let wa = self.log_z(&pa, left)?;
            let wb = self.log_z(&pb, left)?;
            shifted.push((k.clone(), wa, wb));
        }
        let zero = CorootVector::new(vec![0; r]);
        let mut wa0: Vec<Rat> = Vec::new();
        let mut wb0: Vec<Rat> = Vec::new();
        for j in 1..=n {
            let mut ta = wa0.clone();
            ta.push(rat(0, 1));
            let mut tb = wb0.clone();
            tb.push(rat(0, 1));
            let (s1, s2) = self.sums(&p.clone(), &zero, &ta, &tb, &shifted, j)?;
            let jj = rat(j as i64, 1);
            // -j(ε₁X + ε₂Y) = -s1 ; j²(ε₁²X + ε₂²Y)/2 = -s2
            let a11 = -(&jj * &e1);
            let a12 = -(&jj * &e2);
            let a21 = &jj * &jj * &e1 * &e1 / rat(2, 1);
            let a22 = &jj * &jj * &e2 * &e2 / rat(2, 1);
            let det = &a11 * &a22 - &a12 * &a21;
            if det.is_zero_elt() {
                return Err(Error::Internal("singular recursion system".into()));
            }
            let b1 = -s1;
            let b2 = -s2;
            let x = (&b1 * &a22 - &a12 * &b2) / &det;
            let y = (&a11 * &b2 - &a21 * &b1) / &det;
            wa0.push(x);
            wb0.push(y);
        }
        Ok((wa0, wb0))
    }

    /// `[q^j] Σ c_k D_k` and `[q^j] Σ c_k (D_k² + E_k)/2`.
    fn sums(
        &self,
        p: &Point,
        zero: &CorootVector,
        wa0: &[Rat],
        wb0: &[Rat],
        shifted: &[(CorootVector, Vec<Rat>, Vec<Rat>)],
        j: u32,
    ) -> Result<(Rat, Rat)> {
        let mut s1 = rat(0, 1);
        let mut s2 = rat(0, 1);
        let mut add = |k: &CorootVector, wa: &[Rat], wb: &[Rat]| -> Result<()> {
            if k.half_norm() > rat(j as i64, 1) {
                return Ok(());
            }
            let (c, d, e) = Self::pieces(p, k, wa, wb, j)?;
            let cd = c.mul(&d);
            let second = c.mul(&d.mul(&d).add(&e)).scale(&rat(1, 2));
            s1 += cd.coeff(j as i64).unwrap_or_else(|| rat(0, 1));
            s2 += second.coeff(j as i64).unwrap_or_else(|| rat(0, 1));
            Ok(())
        };
        add(zero, wa0, wb0)?;
        for (k, wa, wb) in shifted {
            add(k, wa, wb)?;
        }
        Ok((s1, s2))
    }

    /// `Z^inst` at `p` through `qⁿ` from the `t⁰` part of the equation.
    pub fn z_from_lattice(&mut self, p: &Point, n: u32) -> Result<QSeries> {
        let (e1, e2, a) = p.clone();
        let (wa0, wb0) = self.solve(p, n)?;
        let r = a.len();
        let mut acc = QSeries::zero("q", 1, n as i64 + 1);
        for k in Self::lattice(r, n)? {
            let (wa, wb) = if k.entries.iter().all(|&x| x == 0) {
                (wa0.clone(), wb0.clone())
            } else {
                let hn = i64::try_from(k.half_norm().to_integer()).unwrap_or(i64::MAX);
                let left = (n as i64 - hn).max(0) as u32;
                let pa: Point = (e1.clone(), &e2 - &e1, a.iter().zip(&k.entries).map(|(x, &kk)| x + &e1 * rat(kk, 1)).collect());
                let pb: Point = (&e1 - &e2, e2.clone(), a.iter().zip(&k.entries).map(|(x, &kk)| x + &e2 * rat(kk, 1)).collect());
                (self.log_z(&pa, left)?, self.log_z(&pb, left)?)
            };
            let (c, _, _) = Self::pieces(p, &k, &wa, &wb, n)?;
            acc = acc.add(&c);
        }
        Ok(acc)
    }
}

/// Report of the recursion against direct localization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecursionReport {
    pub rank: usize,
    pub q_order: u32,
    pub sample: SampleJson,
    /// `[qⁿ] F^inst` at `τ = 0` from the recursion, `n = 1..=q_order`.
    pub recursive: Vec<String>,
    pub localization: Vec<String>,
    /// `τ₁` coefficients via the shift law, against localization.
    pub tau1_recursive: Vec<String>,
    pub tau1_localization: Vec<String>,
    pub pass: bool,
}

/// Reconstruct `F^inst = ε₁ε₂ log Z^inst` at `τ = 0` (and its `τ₁` part via
/// the shift law) from the blowup equation, and compare with localization.
pub fn recursive_solve(sp: &SamplePoint, q_order: u32) -> Result<RecursionReport> {
    let r = sp.a.len();
    if r < 2 {
        return Err(Error::InvalidInput("the recursion needs rank at least 2".into()));
    }
    let p: Point = (sp.e1.clone(), sp.e2.clone(), sp.a.clone());
    let mut rec = BlowupRecursion::new();
    let z = rec.z_from_lattice(&p, q_order)?;
    let e12 = &sp.e1 * &sp.e2;
    let f_rec = z.log()?.scale(&e12);
    let ev = Evaluated::at(sp);
    let base = OmegaParams::base(&sp.a);
    let zl = zinst(&base, &ev, q_order, &TauSpec::new(1, 0, 1))?;
    let fl = zl.log()?.map(|g| g.scale_rat(&e12));
    let one = crate::exactalg::graded::tau_mono(1);
    let sum_a2 = sum_rat(sp.a.iter().map(|x| x * x).collect::<Vec<_>>().iter());
    let mut recursive = Vec::new();
    let mut localization = Vec::new();
    let mut t_rec = Vec::new();
    let mut t_loc = Vec::new();
    let mut pass = true;
    for n in 0..=q_order as i64 {
        let fr = f_rec.coeff(n).expect("in range");
        let g = fl.coeff(n).expect("in range");
        let flv = g.constant_term();
        // ∂F/∂τ₁ = Σa²/2 − n F_n
        let tr = if n == 0 { &sum_a2 / rat(2, 1) } else { -(rat(n, 1) * &fr) };
        let tl = g.coeff(&one);
        pass &= fr == flv && tr == tl;
        if n >= 1 {
            recursive.push(crate::exactalg::ring::fmt_rat(&fr));
            localization.push(crate::exactalg::ring::fmt_rat(&flv));
        }
        t_rec.push(crate::exactalg::ring::fmt_rat(&tr));
        t_loc.push(crate::exactalg::ring::fmt_rat(&tl));
    }
    Ok(RecursionReport {
        rank: r,
        q_order,
        sample: sp.describe(),
        recursive,
        localization,
        tau1_recursive: t_rec,
        tau1_localization: t_loc,
        pass,
    })
}

/// `∏_{α,β} Λ^{(k_β−k_α)²/2}` as a power of `q = Λ^{2r}`.
pub fn lambda_power_as_q(k: &CorootVector) -> Rat {
    let r = k.rank() as i64;
    let mut s = 0i64;
    for a in &k.entries {
        for b in &k.entries {
            s += (b - a) * (b - a);
        }
    }
    rat(s, 2) / rat(2 * r, 1)
}

/// The weights of `N_{α,β}` at a fixed point on `C²`, re-exported for
/// the total-count invariant.
pub fn fixed_point_weight_count(ys: &crate::combinatorics::DiagramTuple) -> usize {
    all_tangent_weights(ys).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_blowup_fixed_points, DiagramTuple};
    use crate::exactalg::{rational_sample, SampleConstraints};

    #[test]
    fn s_examples() {
        let e1 = rat(3, 1);
        let e2 = rat(5, 1);
        let x = rat(7, 1);
        assert_eq!(s_factor(1, &e1, &e2, &x), x);
        assert_eq!(s_factor(2, &e1, &e2, &x), rat(7 * 4 * 2, 1));
        assert_eq!(s_factor(-2, &e1, &e2, &x), rat(15, 1));
        assert_eq!(s_factor(0, &e1, &e2, &x), rat(1, 1));
        assert_eq!(s_factor(-1, &e1, &e2, &x), rat(1, 1));
    }

    #[test]
    fn factor_counts() {
        let f = |k| s_factor_forms(k, &LinearForm::eps1(), &LinearForm::eps2(), &LinearForm::zero()).len() as i64;
        for k in 1..6 {
            assert_eq!(f(k), k * (k + 1) / 2);
        }
        for k in 2..6 {
            assert_eq!(f(-k), (k - 1) * k / 2);
        }
    }

    #[test]
    fn pure_lattice_point_weights() {
        let base = OmegaParams::base(&[rat(1, 3), rat(-1, 3)]);
        let fp = BlowupFixedPoint {
            coroot: CorootVector::new(vec![1, -1]),
            y1: DiagramTuple::empty(2),
            y2: DiagramTuple::empty(2),
        };
        assert_eq!(all_blowup_weights(&fp, &base).len(), 4);
        let fp0 = BlowupFixedPoint { coroot: CorootVector::new(vec![0, 0]), ..fp.clone() };
        assert!(all_blowup_weights(&fp0, &base).is_empty());
        // L vanishes when k_α ∈ {k_β, k_β − 1}
        let l = s_factor_forms(-1, &base.e1, &base.e2, &LinearForm::zero());
        assert!(l.is_empty());
    }

    #[test]
    fn weight_count_is_dimension() {
        let base = OmegaParams::base(&[rat(1, 3), rat(-1, 5), rat(-2, 15)]);
        for (r, k, n) in [(2usize, 0i64, rat(2, 1)), (2, 1, rat(5, 4)), (3, 1, rat(4, 3))] {
            let b = OmegaParams { a: base.a[..r].to_vec(), ..base.clone() };
            for fp in enumerate_blowup_fixed_points(r, k, &n).unwrap() {
                let want = rat(2 * r as i64, 1) * &n;
                assert_eq!(rat(all_blowup_weights(&fp, &b).len() as i64, 1), want);
            }
        }
    }

    #[test]
    fn recursion_first_order_rank2() {
        let sp = rational_sample(11, &SampleConstraints::new(2)).unwrap();
        let rep = recursive_solve(&sp, 1).unwrap();
        assert!(rep.pass, "{:?}", rep);
    }

    #[test]
    fn rank2_sector1_constant_terms_vanish() {
        let sp = rational_sample(3, &SampleConstraints::new(2)).unwrap();
        let rep = check_blowup_gap(2, 1, &[sp], 1, 1).unwrap();
        assert!(rep.pass, "{:?}", rep.violations);
    }
}
