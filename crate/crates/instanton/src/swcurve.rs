//! Rank-2 Seiberg–Witten side as exact `q`-series with `q = e^{πiτ}` and
//! `Λ = 1`.
//!
//! `π` never appears: every exported identity is arranged so that it
//! cancels. `√−1` is carried by Gaussian rationals where a series is
//! genuinely imaginary (`a`, `du/da`).

use serde::Serialize;

use crate::exactalg::ring::fmt_rat;
use crate::exactalg::{gauss, gauss_i, rat, Coeff, Gauss, QSeries, Rat, Series};
use crate::{Error, Result};

pub type GSeries = Series<Gauss>;

fn units(n: u32, den: u32) -> i64 {
    (n as i64 + 1) * den as i64
}

fn is_square(k: i64) -> Option<i64> {
    if k < 0 {
        return None;
    }
    let r = (k as f64).sqrt().round() as i64;
    (r * r == k).then_some(r)
}

/// `Σ_{n∈Z} q^{n²}` through `qⁿ`.
pub fn theta00(n: u32) -> QSeries {
    QSeries::from_fn("q", 1, 0, n as i64 + 1, |k| match is_square(k) {
        Some(0) => rat(1, 1),
        Some(_) => rat(2, 1),
        None => rat(0, 1),
    })
}

/// `Σ_{n∈Z} (−1)ⁿ q^{n²}`.
pub fn theta01(n: u32) -> QSeries {
    QSeries::from_fn("q", 1, 0, n as i64 + 1, |k| match is_square(k) {
        Some(0) => rat(1, 1),
        Some(m) => rat(if m % 2 == 0 { 2 } else { -2 }, 1),
        None => rat(0, 1),
    })
}

/// `θ₁₀ q^{−1/4} = Σ_{m≥0} 2q^{m²+m}`.
pub fn theta10_reduced(n: u32) -> QSeries {
    QSeries::from_fn("q", 1, 0, n as i64 + 1, |k| {
        let mut c = 0;
        let mut m = 0;
        while m * m + m <= k {
            if m * m + m == k {
                c += 2;
            }
            m += 1;
        }
        rat(c, 1)
    })
}

/// `Σ_{n≥0}` of `f(n) q^{g(n)}` for increasing `g`.
fn lattice_series(n: u32, g: impl Fn(i64) -> i64, f: impl Fn(i64) -> Rat) -> QSeries {
    let mut coeffs = vec![rat(0, 1); n as usize + 1];
    let mut m = 0;
    while g(m) <= n as i64 {
        coeffs[g(m) as usize] += f(m);
        m += 1;
    }
    QSeries::new("q", 1, 0, coeffs, n as i64 + 1)
}

/// `∏_{d≥1} (1 − q^{step·d − shift})^{power}`.
fn eta_like(n: u32, step: i64, shift: i64, power: i64) -> QSeries {
    let one = QSeries::one("q", 1, n as i64 + 1);
    let mut acc = one.clone();
    let mut d = 1;
    while step * d - shift <= n as i64 {
        let f = one.sub(&QSeries::monomial("q", 1, step * d - shift, rat(1, 1), n as i64 + 1));
        acc = acc.mul(&f);
        d += 1;
    }
    if power >= 0 {
        acc.pow(power as u32).truncate(n as i64 + 1)
    } else {
        acc.inv().expect("unit constant term").pow((-power) as u32).truncate(n as i64 + 1)
    }
}

pub fn sigma1(k: i64) -> i64 {
    (1..=k).filter(|d| k % d == 0).sum()
}

/// `E₂(τ) = 1 − 24 Σ σ₁(n) q^{2n}`.
pub fn eisenstein_e2(n: u32) -> QSeries {
    QSeries::from_fn("q", 1, 0, n as i64 + 1, |k| {
        if k == 0 {
            rat(1, 1)
        } else if k % 2 == 0 {
            rat(-24 * sigma1(k / 2), 1)
        } else {
            rat(0, 1)
        }
    })
}

#[derive(Clone, Debug)]
pub struct ThetaConstants {
    pub theta00: QSeries,
    pub theta01: QSeries,
    /// Exponents in quarters.
    pub theta10: QSeries,
    /// `θ₁₁′(0)/π = −2q^{1/4}∏(1−q^{2d})³`, exponents in quarters.
    pub theta11_prime_over_pi: QSeries,
}

pub fn theta_constants(n: u32) -> ThetaConstants {
    let t10 = theta10_reduced(n).reencode(4).shift(1).truncate(units(n, 4));
    let tp = eta_like(n, 2, 0, 3).scale(&rat(-2, 1)).reencode(4).shift(1).truncate(units(n, 4));
    ThetaConstants { theta00: theta00(n), theta01: theta01(n), theta10: t10, theta11_prime_over_pi: tp }
}

/// SW data with `Λ = 1`.
///
/// The reduced series are `q`-integral: `u = −q^{−1/2}U`,
/// `du/da = i q^{−1/4}D`, `a = (i/2) q^{−1/4}S`.
#[derive(Clone, Debug)]
pub struct SWData {
    pub n: u32,
    pub e2: QSeries,
    /// Exponents in quarters.
    pub u: QSeries,
    pub du_da: GSeries,
    pub a: GSeries,
    pub u_red: QSeries,
    pub d_red: QSeries,
    pub s_red: QSeries,
}

fn to_gauss(s: &QSeries) -> GSeries {
    s.map_into(|c| gauss(c.clone(), rat(0, 1)))
}

pub fn sw_data(n: u32) -> SWData {
    let ord = n as i64 + 1;
    let p = theta00(n);
    let t1 = theta10_reduced(n);
    let e2 = eisenstein_e2(n);
    let p4 = p.pow(4).truncate(ord);
    let qt4 = t1.pow(4).shift(1).truncate(ord);
    let pt = p.mul(&t1);
    let u_red = p4.add(&qt4).mul(&p.pow(2).mul(&t1.pow(2)).inv().expect("unit")).truncate(ord);
    let d_red = pt.inv().expect("unit").scale(&rat(2, 1));
    let s_red = e2
        .scale(&rat(2, 1))
        .add(&p4)
        .add(&qt4)
        .mul(&pt.inv().expect("unit"))
        .scale(&rat(2, 3));
    let u = u_red.neg().reencode(4).shift(-2);
    let i = gauss_i();
    let du_da = to_gauss(&d_red.reencode(4).shift(-1)).scale_by(&i);
    let a = to_gauss(&s_red.reencode(4).shift(-1)).scale_by(&gauss(rat(0, 1), rat(1, 2)));
    SWData { n, e2, u, du_da, a, u_red, d_red, s_red }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesCheck {
    pub name: String,
    /// Exponents compared, as `through q^x` (or `v^x`).
    pub through: String,
    pub pass: bool,
    pub first_mismatch: Option<String>,
}

fn compare(name: &str, x: &QSeries, y: &QSeries, upto_units: i64) -> SeriesCheck {
    let x = x.truncate(upto_units);
    let y = y.truncate(upto_units);
    let d = x.sub(&y);
    let den = d.denom() as i64;
    let bad = d.terms().next().map(|(u, c)| format!("{}^{}: {}", d.var(), fmt_rat(&rat(u, den)), fmt_rat(c)));
    let known = d.order().min(upto_units);
    SeriesCheck {
        name: name.into(),
        through: fmt_rat(&rat(known - 1, den)),
        pass: bad.is_none(),
        first_mismatch: bad,
    }
}

/// Contact-term identity `2u − a du/da = −(1/3)E₂(du/da)² + (4/3)u`.
pub fn contact_identity_check(n: u32) -> SeriesCheck {
    let sw = sw_data(n + 2);
    let u = to_gauss(&sw.u);
    let lhs = u.scale(&rat(2, 1)).sub(&sw.a.mul(&sw.du_da));
    let e2 = to_gauss(&sw.e2.reencode(4));
    let rhs = e2.mul(&sw.du_da.mul(&sw.du_da)).scale(&rat(-1, 3)).add(&u.scale(&rat(4, 3)));
    let d = lhs.sub(&rhs).truncate(units(n, 4));
    let bad = d.terms().next().map(|(e, c)| format!("q^{}: {}+{}i", fmt_rat(&rat(e, 4)), fmt_rat(&c.re), fmt_rat(&c.im)));
    SeriesCheck {
        name: "contact identity".into(),
        through: fmt_rat(&rat(d.order().min(units(n, 4)) - 1, 4)),
        pass: bad.is_none() && d.order() >= units(n, 4),
        first_mismatch: bad,
    }
}

/// Mirror map at `Λ = 1`: `v = 1/a⁴ = 16q/S⁴` and its inverse `q(v)`.
#[derive(Clone, Debug)]
pub struct MirrorMap {
    pub v_of_q: QSeries,
    pub q_of_v: QSeries,
}

pub fn mirror_map(sw: &SWData) -> Result<MirrorMap> {
    let ord = sw.n as i64 + 1;
    let v_of_q = sw.s_red.pow(4).inv()?.scale(&rat(16, 1)).shift(1).truncate(ord);
    let q_of_v = v_of_q.revert("v")?;
    Ok(MirrorMap { v_of_q, q_of_v })
}

impl MirrorMap {
    /// Substitute `q = q(v)` into a power series in `q`.
    pub fn push_forward(&self, f: &QSeries) -> Result<QSeries> {
        Ok(f.compose(&self.q_of_v)?.with_var("v"))
    }
}

/// `u/a²` as a series in `v`; the classical term is `+1`.
pub fn u_over_a2(n: u32) -> Result<QSeries> {
    let sw = sw_data(n);
    let mm = mirror_map(&sw)?;
    let ratio = sw.u_red.mul(&sw.s_red.pow(2).inv()?).scale(&rat(4, 1));
    mm.push_forward(&ratio)
}

fn log1(s: &QSeries) -> Result<QSeries> {
    let c = s.coeff(0).ok_or_else(|| Error::Order("empty series".into()))?;
    Ok(s.scale(&(rat(1, 1) / c)).log()?)
}

/// SW-side genus-one series in `v` (instanton parts, no logarithms).
#[derive(Clone, Debug)]
pub struct GenusOneSeries {
    pub f1: QSeries,
    pub g: QSeries,
    pub a: QSeries,
    pub b: QSeries,
}

pub fn genus_one_series(n: u32) -> Result<GenusOneSeries> {
    let sw = sw_data(n);
    let mm = mirror_map(&sw)?;
    let log_s = log1(&sw.s_red)?;
    let f1 = log_s.scale(&rat(-1, 6)).sub(&log1(&eta_like(n, 1, 0, 1))?);
    let g = log_s.scale(&rat(-1, 6)).add(&log1(&eta_like(n, 2, 1, 1))?);
    let p = theta00(n);
    let qt4 = theta10_reduced(n).pow(4).shift(1).truncate(n as i64 + 1);
    let a_q = log1(&sw.e2.scale(&rat(2, 1)).add(&p.pow(4)).add(&qt4).truncate(n as i64 + 1))?.scale(&rat(-1, 2));
    let ua = u_over_a2(n)?;
    let v = QSeries::monomial("v", 1, 1, rat(1, 1), ua.order());
    let b = log1(&ua.mul(&ua).sub(&v.scale(&rat(4, 1))))?.scale(&rat(1, 8));
    Ok(GenusOneSeries {
        f1: mm.push_forward(&f1)?,
        g: mm.push_forward(&g)?,
        a: mm.push_forward(&a_q)?,
        b,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenusOneReport {
    pub q_order: u32,
    pub checks: Vec<SeriesCheck>,
    /// Log structure of the `v⁰` term, reported as is.
    pub v0_term: String,
    pub pass: bool,
}

fn v_series(c: &[Rat], n: u32) -> QSeries {
    QSeries::new("v", 1, 0, c.to_vec(), n as i64 + 1)
}

/// Localization `F₁`, `G` at rank 2 against the curve, plus the `A`, `B`
/// forms and `exp(G − F₁) = θ₀₁`.
pub fn genus_one_check(q_order: u32, samples: &[crate::exactalg::SamplePoint]) -> Result<GenusOneReport> {
    use crate::prepotential::{expand_f, ExpansionSpec};
    let e = expand_f(2, samples, q_order, &ExpansionSpec::plain())?;
    let forms = e.rank_two.ok_or_else(|| Error::Internal("rank-2 forms missing".into()))?;
    let n = q_order;
    let ord = n as i64 + 1;
    let f1 = v_series(&forms.f1_exact, n);
    let g = v_series(&forms.g_exact, n);
    let sw = genus_one_series(n)?;
    let mm = mirror_map(&sw_data(n))?;
    let theta = mm.push_forward(&log1(&theta01(n))?)?;
    let mut checks = vec![
        compare("F1 = -log eta(tau/2)", &f1, &sw.f1, ord),
        compare("G = log q^(-1/24) prod(1-q^(2d-1))", &g, &sw.g, ord),
        compare("A = F1 + 2G", &f1.add(&g.scale(&rat(2, 1))), &sw.a, ord),
        compare("B = 3G", &g.scale(&rat(3, 1)), &sw.b, ord),
        compare("G - F1 = log theta01", &g.sub(&f1), &theta, ord),
        discriminant_check(n + 1),
    ];
    if !forms.agree {
        checks.push(SeriesCheck {
            name: "two-sample reconstruction".into(),
            through: n.to_string(),
            pass: false,
            first_mismatch: Some("samples disagree".into()),
        });
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(GenusOneReport { q_order, checks, v0_term: "F1 = (1/6) log(2ia) + O(v)".into(), pass })
}

/// `Δ = 2^{12}(u² − 4) = 2^8 q^{−1}∏(1−q^{2d−1})^{24}`, both sides times `q`.
pub fn discriminant_check(n: u32) -> SeriesCheck {
    let lhs = eta_like(n, 2, 1, 24).scale(&rat(256, 1));
    let sw = sw_data(n);
    let qq = QSeries::monomial("q", 1, 1, rat(4, 1), n as i64 + 1);
    let rhs = sw.u_red.mul(&sw.u_red).sub(&qq).scale(&rat(4096, 1));
    compare("quantum discriminant", &lhs, &rhs, n as i64 + 1)
}

/// `θ₀₀⁴ = θ₀₁⁴ + θ₁₀⁴`.
pub fn jacobi_quartic_check(n: u32) -> SeriesCheck {
    let th = theta_constants(n);
    let ord = units(n, 4);
    let lhs = th.theta00.pow(4).reencode(4).truncate(ord);
    let rhs = th.theta01.pow(4).reencode(4).add(&th.theta10.pow(4)).truncate(ord);
    compare("Jacobi quartic", &lhs, &rhs, ord)
}

/// `θ₁₁′ = −π θ₀₀θ₀₁θ₁₀`.
pub fn jacobi_derivative_check(n: u32) -> SeriesCheck {
    let th = theta_constants(n);
    let prod = th.theta00.mul(&th.theta01).reencode(4).mul(&th.theta10).neg();
    compare("Jacobi derivative", &th.theta11_prime_over_pi, &prod, units(n, 4))
}

/// `θ₀₁ = ∏(1−q^{2d})(1−q^{2d−1})²`.
pub fn triple_product_check(n: u32) -> SeriesCheck {
    let prod = eta_like(n, 2, 0, 1).mul(&eta_like(n, 2, 1, 2));
    compare("triple product", &theta01(n), &prod, n as i64 + 1)
}

/// `(q^{−1/8}∏(1−q^{2d−1})³)² = −2πθ₀₁³/θ₁₁′`, both sides times `q^{1/4}`.
pub fn eta_quotient_check(n: u32) -> Result<SeriesCheck> {
    let lhs = eta_like(n, 2, 1, 6);
    let th = theta_constants(n);
    let tp = th.theta11_prime_over_pi.shift(-1).reduce_denom();
    let rhs = theta01(n).pow(3).mul(&tp.inv()?).scale(&rat(-2, 1));
    Ok(compare("eta quotient", &lhs, &rhs, n as i64 + 1))
}

/// `Θ_{E_k}(0|τ) = Σ_{n∈Z+k/2} e^{πin} q^{n²}` at rank 2; `k = 0` gives `θ₀₁`, `k = 1` gives `θ₁₁(0) = 0`.
pub fn theta_char_lattice(r: usize, sector: i64, n: u32) -> Result<GSeries> {
    if r != 2 {
        return Err(Error::Unsupported("theta characteristics are implemented for rank 2 only".into()));
    }
    if !(0..2).contains(&sector) {
        return Err(Error::InvalidInput("sector must be 0 or 1".into()));
    }
    let ord = units(n, 4);
    let mut acc = GSeries::zero("q", 4, ord);
    let bound = (n as f64).sqrt() as i64 + 2;
    for m in -bound..=bound {
        // n = m + k/2, exponent n² in quarters = (2m+k)²
        let twice = 2 * m + sector;
        let e = twice * twice;
        if e >= ord {
            continue;
        }
        // e^{πi n} = i^{2m+k}
        let phase = match twice.rem_euclid(4) {
            0 => gauss(rat(1, 1), rat(0, 1)),
            1 => gauss(rat(0, 1), rat(1, 1)),
            2 => gauss(rat(-1, 1), rat(0, 1)),
            _ => gauss(rat(0, 1), rat(-1, 1)),
        };
        acc = acc.add(&GSeries::monomial("q", 4, e, phase, ord));
    }
    Ok(acc)
}

/// `℘(z) = z^{−2} + Σ_{n≥2} c_n z^{2n−2}` coefficients from `g₂, g₃`.
pub fn weierstrass_coeffs<R: Coeff>(g2: &R, g3: &R, top: usize) -> Vec<R> {
    let mut c = vec![R::zero_elt(); top.max(3) + 1];
    c[2] = g2.scale(&rat(1, 20));
    c[3] = g3.scale(&rat(1, 28));
    for n in 4..=top {
        let mut acc = R::zero_elt();
        for m in 2..=n - 2 {
            acc = acc.plus(&c[m].times(&c[n - m]));
        }
        c[n] = acc.scale(&rat(3, ((2 * n + 1) * (n - 3)) as i64));
    }
    c.truncate(top + 1);
    c
}

type TSeries = Series<QSeries>;

fn t_series(coeffs: Vec<QSeries>, t_order: i64) -> TSeries {
    TSeries::new("t", 1, 0, coeffs, t_order)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FsReport {
    pub q_order: u32,
    pub t_order: u32,
    pub weierstrass: Vec<SeriesCheck>,
    pub identities: Vec<SeriesCheck>,
    pub pass: bool,
}

/// Both Fintushel–Stern identities as `(q, t)`-series through `t^{t_order}`.
pub fn fintushel_stern_check(q_order: u32, t_order: u32) -> Result<FsReport> {
    let m_top = t_order as usize / 2 + 1;
    // every t² costs up to q^{−1/2}
    let n = q_order + t_order + 4;
    let ord = units(n, 4);
    let sw = sw_data(n);
    let u = sw.u.clone();
    let e2 = sw.e2.reencode(4);
    let d = sw.d_red.reencode(4);
    let p = theta00(n).reencode(4);
    let t10 = theta_constants(n).theta10;
    let th01 = theta01(n).reencode(4);
    let th01_inv = th01.inv()?;
    let one = QSeries::one("q", 4, ord);

    // Weierstrass data against the theta forms
    let p4 = p.pow(4).truncate(ord);
    let t4 = t10.pow(4).truncate(ord);
    let s = p4.add(&t4);
    let pt4_inv = p.mul(&t10).pow(4).inv()?;
    let g2_theta = s.mul(&s).scale(&rat(1, 3)).sub(&p4.mul(&t4)).mul(&pt4_inv).scale(&rat(4, 1));
    let g2 = u.mul(&u).scale(&rat(1, 3)).sub(&one).scale(&rat(4, 1));
    let pt6_inv = p.mul(&t10).pow(6).inv()?;
    let g3_theta = s.mul(&s.mul(&s).scale(&rat(8, 1)).sub(&p4.mul(&t4).scale(&rat(36, 1)))).mul(&pt6_inv).scale(&rat(1, 27));
    let g3 = u.mul(&u.mul(&u).scale(&rat(8, 1)).sub(&one.scale(&rat(36, 1)))).scale(&rat(-1, 27));
    let e3_theta = s.mul(&p.mul(&t10).pow(2).inv()?).scale(&rat(-1, 3));
    let e3 = u.scale(&rat(1, 3));
    let cmp_to = units(q_order, 4);
    let weierstrass = vec![
        compare("g2", &g2_theta, &g2, cmp_to),
        compare("g3", &g3_theta, &g3, cmp_to),
        compare("e3", &e3_theta, &e3, cmp_to),
    ];

    let t_ord = t_order as i64 + 1;
    // exp(−(T + u/6)t²) with T = E₂(du/da)²/24 − u/6 = −E₂D²q^{−1/2}/24 − u/6
    let tt = u.scale(&rat(-1, 6)).sub(&e2.mul(&d.mul(&d)).shift(-2).scale(&rat(1, 24)));
    let mut gauge = vec![QSeries::zero("q", 4, ord); 3];
    gauge[2] = u.scale(&rat(1, 6)).add(&tt).neg();
    let gauge = t_series(gauge, t_ord).exp()?;

    // sigma side: log σ(t)/t = −Σ c_n t^{2n}/((2n−1)2n)
    let c = weierstrass_coeffs(&g2, &g3, m_top + 1);
    let mut ls = vec![QSeries::zero("q", 4, ord); 2 * m_top + 3];
    let mut pe = vec![QSeries::zero("q", 4, ord); 2 * m_top + 3];
    pe[0] = one.clone();
    pe[2] = e3.neg();
    for k in 2..=m_top + 1 {
        ls[2 * k] = c[k].scale(&rat(-1, (2 * k as i64 - 1) * 2 * k as i64));
        pe[2 * k] = c[k].clone();
    }
    let sig_over_t = t_series(ls, t_ord).exp()?;
    let root = t_series(pe, t_ord).pow_rat(&rat(1, 2))?;
    let sigma3 = sig_over_t.mul(&root);
    let sigma = sig_over_t.shift(1).truncate(t_ord);

    // theta side: θ₀₁(z)/θ₀₁ and θ₁₁(z)/θ₀₁ with z = −t/(πθ₀₀θ₁₀)
    let mut th_even = vec![QSeries::zero("q", 4, ord); t_ord as usize];
    let mut th_odd = vec![QSeries::zero("q", 4, ord); t_ord as usize];
    let mut fact = rat(1, 1);
    for k in 0..t_ord {
        if k > 0 {
            fact *= rat(k, 1);
        }
        let sign = if (k / 2) % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        if k % 2 == 0 {
            let m = k / 2;
            let sum = lattice_series(n, |j| j * j, |j| {
                let w = if j == 0 { rat(if m == 0 { 1 } else { 0 }, 1) } else { rat(2, 1) };
                let sg = if j % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                w * sg * rat(j.pow(2 * m as u32), 1)
            });
            let coeff = sum.reencode(4).mul(&d.pow(k as u32)).mul(&th01_inv).shift(-k).scale(&(sign / &fact));
            th_even[k as usize] = coeff;
        } else {
            let sum = lattice_series(n, |j| j * j + j, |j| {
                let sg = if j % 2 == 0 { rat(2, 1) } else { rat(-2, 1) };
                sg * rat((2 * j + 1).pow(k as u32), 1)
            });
            let half = d.pow(k as u32).scale(&(rat(1, 1) / rat(2i64.pow(k as u32), 1)));
            // q^{1/4} · q^{−k/4}
            let coeff = sum.reencode(4).mul(&half).mul(&th01_inv).shift(1 - k).scale(&(sign / &fact));
            th_odd[k as usize] = coeff;
        }
    }
    let lhs1 = gauge.mul(&t_series(th_even, t_ord));
    let lhs2 = gauge.mul(&t_series(th_odd, t_ord));
    let lhs1 = lhs1.truncate(t_ord);
    let lhs2 = lhs2.truncate(t_ord);
    let mut identities = Vec::new();
    for k in 0..t_ord {
        let (l, r, name) = if k % 2 == 0 {
            (lhs1.coeff(k), sigma3.coeff(k), format!("theta01 identity t^{}", k))
        } else {
            (lhs2.coeff(k), sigma.coeff(k), format!("theta11 identity t^{}", k))
        };
        let z = QSeries::zero("q", 4, ord);
        identities.push(compare(&name, &l.unwrap_or_else(|| z.clone()), &r.unwrap_or(z), cmp_to));
    }
    let pass = weierstrass.iter().chain(&identities).all(|c| c.pass);
    Ok(FsReport { q_order, t_order, weierstrass, identities, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        assert_eq!(theta00(9), QSeries::from_ints("q", &[1, 2, 0, 0, 2, 0, 0, 0, 0, 2], 10));
        assert_eq!(theta01(4), QSeries::from_ints("q", &[1, -2, 0, 0, 2], 5));
        assert_eq!(eisenstein_e2(6), QSeries::from_ints("q", &[1, 0, -24, 0, -72, 0, -96], 7));
    }

    #[test]
    fn leading_terms() {
        let sw = sw_data(4);
        assert_eq!(sw.u.valuation(), -2);
        assert_eq!(sw.u.coeff(-2).unwrap(), rat(-1, 4));
        assert_eq!(sw.du_da.coeff(-1).unwrap(), gauss_i());
        assert_eq!(sw.a.coeff(-1).unwrap(), gauss(rat(0, 1), rat(1, 2)));
    }

    #[test]
    fn identities_low_order() {
        assert!(jacobi_quartic_check(12).pass);
        assert!(jacobi_derivative_check(12).pass);
        assert!(triple_product_check(12).pass);
        assert!(eta_quotient_check(12).unwrap().pass);
        assert!(contact_identity_check(3).pass);
        assert!(discriminant_check(8).pass);
    }

    #[test]
    fn mirror_round_trip() {
        let sw = sw_data(6);
        let mm = mirror_map(&sw).unwrap();
        let back = mm.v_of_q.compose(&mm.q_of_v).unwrap();
        assert_eq!(back.truncate(6), QSeries::monomial("v", 1, 1, rat(1, 1), 6));
        // q = v/16 + …
        assert_eq!(mm.q_of_v.coeff(1).unwrap(), rat(1, 16));
    }

    #[test]
    fn char_lattice() {
        assert!(theta_char_lattice(2, 1, 10).unwrap().is_zero());
        let t0 = theta_char_lattice(2, 0, 10).unwrap();
        let want = theta01(10).reencode(4).map_into(|c| gauss(c.clone(), rat(0, 1)));
        assert_eq!(t0, want);
        assert!(theta_char_lattice(3, 0, 2).is_err());
    }

    #[test]
    fn genus_one_low_order() {
        let s: Vec<_> = (0..2)
            .map(|k| crate::exactalg::rational_sample(7 + k, &crate::exactalg::SampleConstraints::new(2)).unwrap())
            .collect();
        let rep = genus_one_check(2, &s).unwrap();
        assert!(rep.pass, "{:#?}", rep);
    }

    #[test]
    fn fintushel_stern_small() {
        let rep = fintushel_stern_check(3, 6).unwrap();
        assert!(rep.pass, "{:#?}", rep);
    }
}
