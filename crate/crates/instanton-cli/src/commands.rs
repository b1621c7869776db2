use serde_json::{json, Value};

use instanton::acceptance::{self, AcceptanceConfig, CheckLine};
use instanton::exactalg::ring::fmt_rat;
use instanton::exactalg::{rat, QSeries, SamplePoint};
use instanton::localization::{shift_law_check, zinst_plain, Evaluated, OmegaParams};
use instanton::prepotential::{self, ExpansionSpec, IdentityReport, Taylor};
use instanton::swcurve::{self, SeriesCheck};
use instanton::{betti, blowup, ktheory, perturb, Error, Result};

use crate::{Command, Common, Outcome};

pub fn dispatch(cmd: Command) -> (&'static str, Common, Result<Outcome>) {
    match cmd {
        Command::Zinst { rank, q_order, tau_degree, common } => {
            let r = zinst(rank, q_order, tau_degree, &common);
            ("zinst", common, r)
        }
        Command::BlowupCheck { rank, sector, q_order, tau1_cap, recursion, common } => {
            let r = blowup_check(rank, sector, q_order, tau1_cap, recursion, &common);
            ("blowup-check", common, r)
        }
        Command::Prepotential { rank, q_order, eps_order, tau_degree, common } => {
            let r = prepotential(rank, q_order, eps_order, tau_degree, &common);
            ("prepotential", common, r)
        }
        Command::Sw { q_order, t_order, common } => {
            let r = sw(q_order, t_order, &common);
            ("sw", common, r)
        }
        Command::Betti { rank, sector, q_order, ochiai, common } => {
            let r = betti_cmd(rank, sector, q_order, ochiai);
            ("betti", common, r)
        }
        Command::Ktheory { q_order, hbar_order, t_degree, common } => {
            let r = ktheory_cmd(q_order, hbar_order, t_degree);
            ("ktheory", common, r)
        }
        Command::PerturbCheck { eps_order, k_range, common } => {
            let r = perturb_check(eps_order, k_range, &common);
            ("perturb-check", common, r)
        }
        Command::All { common } => {
            let r = all(&common);
            ("all", common, r)
        }
    }
}

fn samples(common: &Common, r: usize) -> Result<Vec<SamplePoint>> {
    if r == 0 {
        return Err(Error::InvalidInput("rank must be at least 1".into()));
    }
    AcceptanceConfig { seed: common.seed, samples: common.samples }.sample_points(r)
}

fn series_line(c: &SeriesCheck) -> CheckLine {
    CheckLine::new(format!("{} through {}", c.name, c.through), c.pass, c.first_mismatch.clone())
}

fn identity_line(r: &IdentityReport) -> CheckLine {
    let detail = r.mismatches.first().map(|m| format!("sample {} q^{} {}: {} vs {}", m.sample, m.q_exponent, m.what, m.left, m.right));
    CheckLine::new(r.name.clone(), r.pass && r.checked > 0, detail)
}

fn taylor_json(t: &Taylor) -> Value {
    let m: serde_json::Map<String, Value> =
        t.coeffs.iter().map(|(&(i, j), c)| (format!("e1^{} e2^{}", i, j), Value::String(fmt_rat(c)))).collect();
    Value::Object(m)
}

fn zinst(rank: usize, q_order: u32, tau_degree: u32, common: &Common) -> Result<Outcome> {
    let pts = samples(common, rank)?;
    let mut checks = Vec::new();
    let mut data = Vec::new();
    for (i, sp) in pts.iter().enumerate() {
        let ev = Evaluated::at(sp);
        let base = OmegaParams::base(&sp.a);
        let z = zinst_plain(&base, &ev, q_order)?;
        if rank == 1 {
            let want = QSeries::monomial("q", 1, 1, rat(1, 1) / (&sp.e1 * &sp.e2), q_order as i64 + 1).exp()?;
            let bad = (0..=q_order as i64).find(|&k| z.coeff(k) != want.coeff(k));
            checks.push(CheckLine::new(
                format!("exp(q/(e1 e2)) through q^{} at sample {}", q_order, i),
                bad.is_none(),
                bad.map(|k| format!("q^{}: {:?} vs {:?}", k, z.coeff(k).map(|c| fmt_rat(&c)), want.coeff(k).map(|c| fmt_rat(&c)))),
            ));
        }
        let max_p = (tau_degree as usize + 1).min(instanton::exactalg::graded::MAX_P);
        let rep = shift_law_check(&base, &ev, q_order, max_p, tau_degree, 2)?;
        checks.push(CheckLine::new(
            format!("tau1 shift law through q^{}, tau-degree {} at sample {}", q_order, tau_degree, i),
            rep.pass,
            rep.first_mismatch.map(|(n, m)| format!("q^{} {}", n, m)),
        ));
        data.push(json!({ "sample": sp.describe(), "zinst": z.to_json() }));
    }
    Ok(Outcome {
        parameters: json!({ "rank": rank, "q_order": q_order, "tau_degree": tau_degree, "samples": common.samples }),
        checks,
        data: Value::Array(data),
        notes: vec![],
    })
}

fn blowup_check(rank: usize, sector: i64, q_order: u32, tau1_cap: u8, recursion: bool, common: &Common) -> Result<Outcome> {
    let pts = samples(common, rank)?;
    let g = blowup::check_blowup_gap(rank, sector, &pts, q_order, tau1_cap)?;
    let detail = g.violations.first().map(|v| format!("sample {} q^{} {} = {}", v.sample, v.q_exponent, v.monomial, v.value));
    let mut checks = vec![CheckLine::new(
        format!("degree < {} part vanishes through q^{} ({} coefficients)", g.degree_bound, q_order, g.checked_coefficients),
        g.pass,
        detail,
    )];
    let mut data = json!({ "gap": g });
    if recursion {
        let rec = blowup::recursive_solve(&pts[0], q_order)?;
        checks.push(CheckLine::new(format!("recursion reproduces F^inst through q^{}", q_order), rec.pass, None));
        data["recursion"] = serde_json::to_value(&rec).expect("serializes");
    }
    Ok(Outcome {
        parameters: json!({ "rank": rank, "sector": sector, "q_order": q_order, "tau1_cap": tau1_cap, "recursion": recursion, "samples": common.samples }),
        checks,
        data,
        notes: vec![],
    })
}

fn prepotential(rank: usize, q_order: u32, eps_order: u32, tau_degree: u32, common: &Common) -> Result<Outcome> {
    let pts = samples(common, rank)?;
    let spec = ExpansionSpec { tau_degree, tau1_cap: if tau_degree > 0 { 1 } else { 0 }, eps_degree: eps_order };
    let e = prepotential::expand_f(rank, &pts, q_order, &spec)?;
    let mut checks = vec![
        identity_line(&prepotential::tau1_contact_check(rank, &pts, q_order)?),
        identity_line(&prepotential::h_vanishing_check(rank, &pts, q_order)?),
    ];
    let mut notes = Vec::new();
    let mut data = json!({
        "samples": e.samples.iter().zip(&pts).map(|(s, p)| json!({
            "sample": p.describe(),
            "plain": (0..=q_order).map(|n| taylor_json(&s.plain(n))).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    if let Some(f) = &e.rank_two {
        checks.push(CheckLine::new("samples agree on the a-monomial forms", f.agree || pts.len() == 1, None));
        let curve = prepotential::f0_from_curve(q_order)?;
        let bad = (0..=q_order as usize).find(|&n| f.f0_exact[n] != curve[n]);
        checks.push(CheckLine::new(
            format!("F0 coefficients equal the curve through q^{}", q_order),
            bad.is_none(),
            bad.map(|n| format!("f{}: {} vs {}", n, fmt_rat(&f.f0_exact[n]), fmt_rat(&curve[n]))),
        ));
        notes.push(format!("f_n: {}", f.f0.join(", ")));
        notes.push(format!("F1_n: {}", f.f1.join(", ")));
        notes.push(format!("G_n: {}", f.g.join(", ")));
        data["rank_two"] = serde_json::to_value(f).expect("serializes");
    }
    if rank == 2 {
        let m = prepotential::matone_check(rank, &pts, q_order)?;
        checks.push(identity_line(&m.lambda_derivative));
        checks.push(identity_line(&m.tau1_derivative));
        data["u_coefficients"] = json!(m.u_coefficients);
    }
    Ok(Outcome {
        parameters: json!({ "rank": rank, "q_order": q_order, "eps_order": eps_order, "tau_degree": tau_degree, "samples": common.samples }),
        checks,
        data,
        notes,
    })
}

fn sw(q_order: u32, t_order: u32, common: &Common) -> Result<Outcome> {
    let mut checks: Vec<CheckLine> = [
        swcurve::contact_identity_check(q_order),
        swcurve::discriminant_check(q_order),
        swcurve::jacobi_quartic_check(q_order),
        swcurve::jacobi_derivative_check(q_order),
        swcurve::triple_product_check(q_order),
        swcurve::eta_quotient_check(q_order)?,
    ]
    .iter()
    .map(series_line)
    .collect();
    // the genus-one comparison runs localization, so it is capped
    let g_order = q_order.min(3);
    let g = swcurve::genus_one_check(g_order, &samples(common, 2)?)?;
    checks.extend(g.checks.iter().map(series_line));
    let fs = swcurve::fintushel_stern_check(q_order.min(4), t_order)?;
    checks.extend(fs.weierstrass.iter().chain(&fs.identities).map(series_line));
    let uv = swcurve::u_over_a2(q_order)?;
    Ok(Outcome {
        parameters: json!({ "q_order": q_order, "t_order": t_order, "genus_one_order": g_order, "fs_q_order": q_order.min(4), "samples": common.samples }),
        checks,
        data: json!({ "u_over_a2": uv.to_json(), "genus_one_v0": g.v0_term }),
        notes: vec![format!("u/a^2 = {}", uv)],
    })
}

fn betti_cmd(rank: usize, sector: i64, q_order: u32, ochiai: bool) -> Result<Outcome> {
    let line = |c: &betti::BettiCheck| CheckLine::new(format!("{} r={} k={} through q^{}", c.name, c.rank, c.sector, c.q_order), c.pass, c.first_mismatch.clone());
    let mut checks = Vec::new();
    if ochiai {
        checks.push(line(&betti::ochiai_check(q_order)));
    } else {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be at least 1".into()));
        }
        checks.push(line(&betti::poincare_quot_gen(rank, q_order)));
        checks.push(line(&betti::poincare_blowup_gen(rank, sector, q_order)?));
        checks.extend(betti::alt_sum_checks(rank, sector, q_order)?.iter().map(line));
        checks.push(line(&betti::virtual_hodge_check(rank, sector, q_order)?));
    }
    let quot: Vec<String> = (0..=q_order).map(|n| betti::poincare_quot(rank.max(1), n).to_string()).collect();
    Ok(Outcome {
        parameters: json!({ "rank": rank, "sector": sector, "q_order": q_order, "ochiai": ochiai }),
        checks,
        data: json!({ "quot_poincare": quot }),
        notes: vec![],
    })
}

fn ktheory_cmd(q_order: u32, hbar_order: u32, t_degree: u32) -> Result<Outcome> {
    let line = |c: &ktheory::KCheck| CheckLine::new(c.name.clone(), c.pass && c.checked > 0, c.first_mismatch.clone());
    let mut checks = vec![line(&ktheory::hilbert_series_check(q_order, t_degree))];
    checks.extend(ktheory::gw_check(hbar_order, q_order)?.iter().map(line));
    let h = ktheory::hbar_expansion(q_order, hbar_order)?;
    let coeffs: Vec<Value> = h.iter().map(|(&(g, d), c)| json!({ "g": g, "d": d, "coefficient": fmt_rat(c) })).collect();
    Ok(Outcome {
        parameters: json!({ "q_order": q_order, "hbar_order": hbar_order, "t_degree": t_degree }),
        checks,
        data: json!({ "hbar_expansion": coeffs }),
        notes: vec![],
    })
}

fn perturb_check(eps_order: u32, k_range: i64, common: &Common) -> Result<Outcome> {
    if eps_order < 2 {
        return Err(Error::InvalidInput("eps-order must be at least 2".into()));
    }
    if k_range < 0 {
        return Err(Error::InvalidInput("k-range must be nonnegative".into()));
    }
    let mut checks: Vec<CheckLine> = perturb::all_checks(eps_order, k_range)?
        .iter()
        .map(|c| CheckLine::new(format!("{} through eps-degree {}", c.name, c.eps_order), c.pass, c.residual.clone()))
        .collect();
    let pts = samples(common, 2)?;
    for k in -k_range..=k_range {
        checks.push(CheckLine::new(format!("shift identity k={} at sample points", k), perturb::pert_shift_at_samples(k, eps_order, &pts)?, None));
    }
    let c: Vec<String> = perturb::c_coefficients(eps_order)?.iter().map(|p| p.to_string()).collect();
    Ok(Outcome {
        parameters: json!({ "eps_order": eps_order, "k_range": k_range, "samples": common.samples }),
        checks,
        data: json!({ "e1e2_c_n_over_n_factorial": c }),
        notes: vec![],
    })
}

fn all(common: &Common) -> Result<Outcome> {
    let cfg = AcceptanceConfig { seed: common.seed, samples: common.samples };
    if cfg.samples == 0 {
        return Err(Error::InvalidInput("at least one sample is needed".into()));
    }
    let report = acceptance::run_all(&cfg);
    for c in &report {
        eprintln!("{} took {:.2?}", c.id, c.elapsed);
    }
    let checks = report
        .iter()
        .map(|c| {
            let first = c.checks.iter().find(|x| !x.pass).map(|x| match &x.detail {
                Some(d) => format!("{}: {}", x.name, d),
                None => x.name.clone(),
            });
            CheckLine::new(format!("{} {}", c.id, c.title), c.pass, first)
        })
        .collect();
    Ok(Outcome {
        parameters: json!({ "samples": common.samples }),
        checks,
        data: serde_json::to_value(&report).expect("serializes"),
        notes: vec![],
    })
}
