//! The acceptance suite: ten criteria, each a bundle of exact checks.
//!
//! Shared by the `acceptance` integration test and `instanton all`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::betti;
use crate::blowup::{check_blowup_gap, GapReport};
use crate::exactalg::{rat, rational_sample, QSeries, SampleConstraints, SamplePoint};
use crate::ktheory;
use crate::localization::{shift_law_check, zinst_plain, Evaluated, OmegaParams};
use crate::perturb;
use crate::prepotential::{expand_f, f0_from_curve, matone_check, ExpansionSpec, IdentityReport};
use crate::swcurve;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, pass: bool, detail: Option<String>) -> Self {
        CheckLine { name: name.into(), pass, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: String,
    pub title: String,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
    pub budget_seconds: Option<u64>,
    /// Kept out of reports so they stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Criterion {
    fn finish(id: &str, title: &str, mut checks: Vec<CheckLine>, budget: Option<u64>, start: Instant) -> Self {
        let elapsed = start.elapsed();
        if let Some(b) = budget {
            checks.push(CheckLine::new(format!("runtime under {} s", b), elapsed.as_secs_f64() < b as f64, None));
        }
        let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
        Criterion { id: id.into(), title: title.into(), pass, checks, budget_seconds: budget, elapsed }
    }

    /// One line per criterion, as printed by the test and the CLI.
    pub fn summary(&self) -> String {
        let mut s = format!("{} {}: {}", self.id, if self.pass { "PASS" } else { "FAIL" }, self.title);
        if let Some(c) = self.checks.iter().find(|c| !c.pass) {
            s.push_str(&format!(" [first failure: {}{}]", c.name, c.detail.as_ref().map(|d| format!(": {}", d)).unwrap_or_default()));
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AcceptanceConfig {
    pub seed: u64,
    pub samples: usize,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig { seed: 1, samples: 3 }
    }
}

impl AcceptanceConfig {
    pub fn sample_points(&self, r: usize) -> Result<Vec<SamplePoint>> {
        if self.samples == 0 {
            return Err(Error::InvalidInput("at least one sample is needed".into()));
        }
        (0..self.samples as u64).map(|i| rational_sample(self.seed.wrapping_add(i), &SampleConstraints::new(r))).collect()
    }
}

fn identity(r: &IdentityReport) -> CheckLine {
    let detail = r.mismatches.first().map(|m| format!("sample {} q^{} {}: {} vs {}", m.sample, m.q_exponent, m.what, m.left, m.right));
    CheckLine::new(format!("{} ({} comparisons)", r.name, r.checked), r.pass && r.checked > 0, detail)
}

fn series(c: &swcurve::SeriesCheck) -> CheckLine {
    CheckLine::new(format!("{} through {}", c.name, c.through), c.pass, c.first_mismatch.clone())
}

fn gap(g: &GapReport) -> CheckLine {
    let detail = g.violations.first().map(|v| format!("sample {} q^{} {} = {}", v.sample, v.q_exponent, v.monomial, v.value));
    CheckLine::new(
        format!("r={} k={} through q^{}, degree < {} ({} coefficients)", g.rank, g.sector, g.q_order, g.degree_bound, g.checked_coefficients),
        g.pass && g.checked_coefficients > 0,
        detail,
    )
}

fn betti_line(c: &betti::BettiCheck) -> CheckLine {
    CheckLine::new(format!("{} r={} k={} through q^{}", c.name, c.rank, c.sector, c.q_order), c.pass, c.first_mismatch.clone())
}

fn k_line(c: &ktheory::KCheck) -> CheckLine {
    CheckLine::new(format!("{} ({} comparisons)", c.name, c.checked), c.pass && c.checked > 0, c.first_mismatch.clone())
}

fn pert_line(c: &perturb::PerturbCheck) -> CheckLine {
    CheckLine::new(format!("{} through eps-degree {}", c.name, c.eps_order), c.pass, c.residual.clone())
}

/// Rank 2 prepotential coefficients `f₁, f₂, f₃` against the curve.
pub fn a1(cfg: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let n = 3;
    let samples = cfg.sample_points(2)?;
    let e = expand_f(2, &samples, n, &ExpansionSpec::plain())?;
    let forms = e.rank_two.ok_or_else(|| Error::Internal("rank-2 forms missing".into()))?;
    let curve = f0_from_curve(n)?;
    let mut checks = vec![CheckLine::new(
        format!("{} samples give one set of a-monomial coefficients", samples.len()),
        forms.agree || samples.len() == 1,
        None,
    )];
    for k in 1..=n as usize {
        let (l, c) = (&forms.f0_exact[k], &curve[k]);
        checks.push(CheckLine::new(
            format!("f{} = {}", k, crate::exactalg::ring::fmt_rat(c)),
            l == c,
            (l != c).then(|| format!("localization {}", crate::exactalg::ring::fmt_rat(l))),
        ));
    }
    Ok(Criterion::finish("A1", "F0 instanton coefficients match the curve", checks, Some(60), start))
}

/// Sector-0 blowup equations below the gap degree.
pub fn a2(cfg: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let checks = vec![
        gap(&check_blowup_gap(2, 0, &cfg.sample_points(2)?, 3, 2)?),
        gap(&check_blowup_gap(3, 0, &cfg.sample_points(3)?, 2, 2)?),
    ];
    Ok(Criterion::finish("A2", "blowup equations, sector 0", checks, Some(300), start))
}

/// Vanishing of `Ẑ` in sectors `0 < k < r` below degree `k(r−k)`.
pub fn a3(cfg: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let s2 = cfg.sample_points(2)?;
    let s3 = cfg.sample_points(3)?;
    let checks = vec![
        gap(&check_blowup_gap(2, 1, &s2, 3, 2)?),
        gap(&check_blowup_gap(3, 1, &s3, 2, 2)?),
        gap(&check_blowup_gap(3, 2, &s3, 2, 2)?),
    ];
    Ok(Criterion::finish("A3", "gap lemma for k != 0", checks, None, start))
}

pub fn a4(_: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let checks = vec![series(&swcurve::contact_identity_check(20))];
    Ok(Criterion::finish("A4", "contact-term identity as a q-series", checks, Some(1), start))
}

pub fn a5(cfg: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let rep = swcurve::genus_one_check(3, &cfg.sample_points(2)?)?;
    let checks = rep.checks.iter().map(series).collect();
    Ok(Criterion::finish("A5", "genus-one corrections F1, G, A, B", checks, None, start))
}

pub fn a6(cfg: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let rep = matone_check(2, &cfg.sample_points(2)?, 3)?;
    let checks = vec![identity(&rep.lambda_derivative), identity(&rep.tau1_derivative)];
    Ok(Criterion::finish("A6", "Matone relation and dF0/dtau1 = u", checks, None, start))
}

pub fn a7(_: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for r in 1..=3 {
        checks.push(betti_line(&betti::poincare_quot_gen(r, 5)));
    }
    for k in 0..2 {
        checks.push(betti_line(&betti::poincare_blowup_gen(2, k, 4)?));
        checks.extend(betti::alt_sum_checks(2, k, 4)?.iter().map(betti_line));
        checks.push(betti_line(&betti::virtual_hodge_check(2, k, 4)?));
    }
    checks.push(betti_line(&betti::ochiai_check(8)));
    Ok(Criterion::finish("A7", "Betti number identities", checks, None, start))
}

pub fn a8(_: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let mut checks = vec![k_line(&ktheory::hilbert_series_check(6, 8))];
    checks.extend(ktheory::gw_check(4, 6)?.iter().map(k_line));
    Ok(Criterion::finish("A8", "symmetric product character and conifold GW", checks, None, start))
}

pub fn a9(cfg: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let mut checks: Vec<CheckLine> = perturb::all_checks(8, 3)?.iter().map(pert_line).collect();
    let samples = cfg.sample_points(2)?;
    for k in -3..=3 {
        let ok = perturb::pert_shift_at_samples(k, 8, &samples)?;
        checks.push(CheckLine::new(format!("shift identity k={} at blowup sample points", k), ok, None));
    }
    Ok(Criterion::finish("A9", "perturbation term identities", checks, None, start))
}

pub fn a10(cfg: &AcceptanceConfig) -> Result<Criterion> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for (i, sp) in cfg.sample_points(1)?.iter().enumerate() {
        let n = 8;
        let ev = Evaluated::at(sp);
        let z = zinst_plain(&OmegaParams::base(&sp.a), &ev, n)?;
        let want = QSeries::monomial("q", 1, 1, rat(1, 1) / (&sp.e1 * &sp.e2), n as i64 + 1).exp()?;
        let bad = (0..=n as i64).find(|&k| z.coeff(k) != want.coeff(k));
        checks.push(CheckLine::new(
            format!("r=1 closed form through q^{} at sample {}", n, i),
            bad.is_none(),
            bad.map(|k| format!("q^{}", k)),
        ));
    }
    for r in 1..=2 {
        for (i, sp) in cfg.sample_points(r)?.iter().enumerate() {
            let rep = shift_law_check(&OmegaParams::base(&sp.a), &Evaluated::at(sp), 3, 3, 2, 2)?;
            checks.push(CheckLine::new(
                format!("tau1 shift law r={} through q^3, tau-degree 2, sample {}", r, i),
                rep.pass,
                rep.first_mismatch.map(|(n, m)| format!("q^{} {}", n, m)),
            ));
        }
    }
    Ok(Criterion::finish("A10", "rank-1 closed form and tau1 shift law", checks, None, start))
}

pub type CriterionFn = fn(&AcceptanceConfig) -> Result<Criterion>;

pub const CRITERIA: [(&str, CriterionFn); 10] = [
    ("A1", a1),
    ("A2", a2),
    ("A3", a3),
    ("A4", a4),
    ("A5", a5),
    ("A6", a6),
    ("A7", a7),
    ("A8", a8),
    ("A9", a9),
    ("A10", a10),
];

/// Runs one criterion; an error becomes a failed criterion carrying the message.
pub fn run(id: &str, cfg: &AcceptanceConfig) -> Criterion {
    let start = Instant::now();
    match CRITERIA.iter().find(|(k, _)| *k == id) {
        Some((_, f)) => f(cfg).unwrap_or_else(|e| Criterion::finish(id, "error", vec![CheckLine::new("evaluation", false, Some(e.to_string()))], None, start)),
        None => Criterion::finish(id, "unknown criterion", vec![], None, start),
    }
}

pub fn run_all(cfg: &AcceptanceConfig) -> Vec<Criterion> {
    CRITERIA.iter().map(|(id, _)| run(id, cfg)).collect()
}
