use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::json;

use ptlandau::biortho::{completeness_check, gram_with, GramReport};
use ptlandau::finite::{build_system, verify_intertwining};
use ptlandau::lattice::{band_surface, dimer_eigen, dimer_pt_check, k_point, k_prime_point, BlochParams, DimerParams, KGrid};
use ptlandau::linalg::sine_angle;
use ptlandau::spectrum::flow_at;
use ptlandau::symmetry::{p_only_residual, t_only_residual, verify_pt_identity, verify_t_identity};
use ptlandau::{AnalyticSpectrum, Branch, DiracModel, FieldSign, RegionClass, TruncationSpec};

use crate::config::RunConfig;
use crate::output::{ccol, col, Cell, Check, Report, Table};

pub type CmdResult = Result<Report, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn model(cfg: &RunConfig, v: f64) -> Result<DiracModel, String> {
    DiracModel::new(cfg.cone, cfg.field_sign, v, cfg.epsilon).map_err(err)
}

/// The level cap applies to the active mode; for field `-` that is mode 1,
/// and the spectator cap is raised to the minimum of 1.
fn level_truncation(cfg: &RunConfig) -> Result<TruncationSpec, String> {
    match cfg.field_sign {
        FieldSign::Plus => TruncationSpec::new(cfg.n1_max, cfg.n2_max),
        FieldSign::Minus => TruncationSpec::new(cfg.n2_max, cfg.n1_max.max(1)),
    }
    .map_err(err)
}

fn class_name(c: RegionClass) -> &'static str {
    c.as_str()
}

/// Maps over the V grid in parallel and concatenates results in grid order.
fn per_v<T: Send>(cfg: &RunConfig, f: impl Fn(f64) -> Result<T, String> + Sync) -> Result<Vec<T>, String> {
    cfg.v_grid.par_iter().map(|&v| f(v)).collect()
}

pub fn cmd_spectrum(cfg: &RunConfig) -> CmdResult {
    let template = model(cfg, 0.0)?;
    let chunks = per_v(cfg, |v| Ok(flow_at(&template, v, cfg.n2_max, cfg.tol_ep)))?;
    let mut t = Table::new(vec![
        col("V"),
        col("n2"),
        ccol("E_plus"),
        ccol("E_minus"),
        col("class"),
        col("exists_plus"),
        col("exists_minus"),
    ]);
    for r in chunks.into_iter().flatten() {
        t.push(vec![
            r.v.into(),
            r.n2.into(),
            r.e_plus.into(),
            r.e_minus.into(),
            class_name(r.class).into(),
            r.exists_plus.into(),
            r.exists_minus.into(),
        ]);
    }
    Ok(Report::new("spectrum", cfg.to_json(), t))
}

pub fn cmd_ep_scan(cfg: &RunConfig) -> CmdResult {
    let trunc = level_truncation(cfg)?;
    let reports = per_v(cfg, |v| {
        let analytic = AnalyticSpectrum::new(model(cfg, v)?).with_tolerance(cfg.tol_ep);
        completeness_check(&analytic, trunc, None).map_err(err)
    })?;
    let mut t = Table::new(vec![
        col("V"),
        col("complete"),
        col("dim"),
        col("rank"),
        col("deficiency"),
        col("deficient_n2"),
        col("smallest_singular_value"),
        col("witness_overlap"),
    ]);
    let mut checks = Vec::new();
    for (&v, rep) in cfg.v_grid.iter().zip(&reports) {
        let levels: Vec<String> = rep.deficient_levels.iter().map(|n| n.to_string()).collect();
        let witness = (!rep.complete).then_some(rep.max_overlap);
        t.push(vec![
            v.into(),
            rep.complete.into(),
            rep.dim.into(),
            rep.rank.into(),
            rep.rank_deficiency().into(),
            levels.join(";").into(),
            rep.smallest_singular_value.into(),
            witness.into(),
        ]);
        checks.push(Check::holds(
            format!("V={v}: rank loss matches exceptional levels"),
            rep.complete == rep.deficient_levels.is_empty(),
        ));
        if let Some(w) = witness {
            checks.push(Check::at_most(format!("V={v}: witness overlap"), w, cfg.tol_zero));
        }
    }
    let mut r = Report::new("ep-scan", cfg.to_json(), t);
    r.checks = checks;
    Ok(r)
}

fn gram_entry(g: &GramReport, a: Branch, b: Branch) -> Cell {
    g.get(a, b).into()
}

pub fn cmd_gram(cfg: &RunConfig, n2: Option<usize>, n1: usize) -> CmdResult {
    let levels: Vec<usize> = match n2 {
        Some(0) => return Err("gram needs an excited level (n2 >= 1)".into()),
        Some(n) => vec![n],
        None => (1..=cfg.n2_max).collect(),
    };
    let grams = per_v(cfg, |v| {
        let m = model(cfg, v)?;
        let analytic = AnalyticSpectrum::new(m).with_tolerance(cfg.tol_ep);
        levels
            .iter()
            .map(|&n| {
                let label = m.sector_label(n1, n);
                gram_with(&analytic, label.n1, label.n2).map_err(err)
            })
            .collect::<Result<Vec<_>, String>>()
    })?;
    let mut t = Table::new(vec![
        col("V"),
        col("n2"),
        col("class"),
        ccol("phi_plus_psi_plus"),
        ccol("phi_plus_psi_minus"),
        ccol("phi_minus_psi_plus"),
        ccol("phi_minus_psi_minus"),
        col("vanishing_max"),
    ]);
    let mut checks = Vec::new();
    for g in grams.into_iter().flatten() {
        let vanishing = match g.class {
            RegionClass::Symmetric => Some(g.max_cross()),
            RegionClass::Broken => Some(g.max_same()),
            RegionClass::Exceptional => None,
        };
        if let Some(x) = vanishing {
            checks.push(Check::at_most(format!("V={} n2={}: vanishing overlaps", g.v, g.level), x, cfg.tol_zero));
        }
        t.push(vec![
            g.v.into(),
            g.level.into(),
            class_name(g.class).into(),
            gram_entry(&g, Branch::Plus, Branch::Plus),
            gram_entry(&g, Branch::Plus, Branch::Minus),
            gram_entry(&g, Branch::Minus, Branch::Plus),
            gram_entry(&g, Branch::Minus, Branch::Minus),
            vanishing.into(),
        ]);
    }
    let mut r = Report::new("gram", cfg.to_json(), t);
    r.config.insert("n1".into(), json!(n1));
    r.checks = checks;
    Ok(r)
}

pub fn cmd_completeness(cfg: &RunConfig) -> CmdResult {
    let trunc = level_truncation(cfg)?;
    let spectators = trunc.fock_dim() / (cfg.n2_max + 1);
    let per = per_v(cfg, |v| {
        let analytic = AnalyticSpectrum::new(model(cfg, v)?).with_tolerance(cfg.tol_ep);
        let rows: Vec<(usize, RegionClass, f64)> = (1..=cfg.n2_max)
            .map(|n| {
                let s = analytic.level(0, n);
                let sine = sine_angle(s.phi_plus.as_ref().unwrap(), s.phi_minus.as_ref().unwrap());
                (n, s.class, sine)
            })
            .collect();
        let rep = completeness_check(&analytic, trunc, None).map_err(err)?;
        Ok((rows, rep))
    })?;
    let mut t = Table::new(vec![col("V"), col("n2"), col("class"), col("phi_sine_angle"), col("coalesced")]);
    let mut checks = Vec::new();
    for (&v, (rows, rep)) in cfg.v_grid.iter().zip(&per) {
        let mut coalesced_levels = 0;
        for &(n, class, sine) in rows {
            let coalesced = class == RegionClass::Exceptional;
            if coalesced {
                coalesced_levels += 1;
                checks.push(Check::at_most(format!("V={v} n2={n}: Phi(+) - Phi(-) angle"), sine, cfg.tol_zero));
            }
            t.push(vec![v.into(), n.into(), class_name(class).into(), sine.into(), coalesced.into()]);
        }
        checks.push(Check::holds(
            format!("V={v}: rank deficiency {} equals {} coalesced levels x {spectators}", rep.rank_deficiency(), coalesced_levels),
            rep.rank_deficiency() == coalesced_levels * spectators,
        ));
        if !rep.complete {
            checks.push(Check::at_most(format!("V={v}: witness overlap"), rep.max_overlap, cfg.tol_zero));
        }
    }
    let mut r = Report::new("completeness", cfg.to_json(), t);
    r.checks = checks;
    Ok(r)
}

pub fn cmd_symmetry(cfg: &RunConfig) -> CmdResult {
    let trunc = TruncationSpec::square(cfg.n2_max).map_err(err)?;
    let eps = cfg.epsilon;
    let zero = cfg.tol_zero * eps.max(1.0);
    let rows = per_v(cfg, |v| {
        let t_id = verify_t_identity(v, eps, trunc).map_err(err)?;
        let pt = verify_pt_identity(v, eps, trunc).map_err(err)?;
        let t_only = t_only_residual(v, eps, trunc).map_err(err)?;
        let p_only = p_only_residual(v, eps, trunc).map_err(err)?;
        let broken = |x: f64| if v > 0.0 { Check::at_least("", x, eps * v) } else { Check::at_most("", x, zero) };
        Ok(vec![
            ("T_identity", Check::at_most("", t_id.residual, zero)),
            ("PT_identity", Check::at_most("", pt.residual, zero)),
            ("T_only", broken(t_only.residual)),
            ("P_only", broken(p_only.residual)),
        ])
    })?;
    let mut t = Table::new(vec![col("V"), col("check"), col("residual"), col("bound"), col("limit"), col("pass")]);
    let mut checks = Vec::new();
    for (&v, list) in cfg.v_grid.iter().zip(rows) {
        for (name, mut c) in list {
            c.name = format!("V={v}: {name}");
            t.push(vec![
                v.into(),
                name.into(),
                c.value.into(),
                c.bound.as_str().into(),
                c.limit.into(),
                c.pass().into(),
            ]);
            checks.push(c);
        }
    }
    let mut r = Report::new("symmetry", cfg.to_json(), t);
    r.config.insert("truncation".into(), json!([cfg.n2_max, cfg.n2_max]));
    r.checks = checks;
    Ok(r)
}

pub fn cmd_bands(cfg: &RunConfig, t1: f64, k_min: f64, k_max: f64, k_points: usize) -> CmdResult {
    if k_max < k_min {
        return Err(format!("k-max {k_max} is below k-min {k_min}"));
    }
    let grid = KGrid::new((k_min, k_max, k_points), (k_min, k_max, k_points)).map_err(err)?;
    let per = per_v(cfg, |v| {
        let p = BlochParams::balanced(t1, v).map_err(err)?;
        let dirac = p.f(k_point()).norm().max(p.f(k_prime_point()).norm());
        Ok((band_surface(&p, &grid), dirac))
    })?;
    let mut t = Table::new(vec![col("V"), col("kx"), col("ky"), ccol("E_plus"), ccol("E_minus")]);
    let mut checks = Vec::new();
    for (&v, (rows, dirac)) in cfg.v_grid.iter().zip(per) {
        checks.push(Check::at_most(format!("V={v}: |f| at the Dirac points"), dirac, cfg.tol_zero * t1.abs().max(1.0)));
        let asym = rows.iter().map(|r| (r.e_plus + r.e_minus).norm()).fold(0.0, f64::max);
        checks.push(Check::at_most(format!("V={v}: E_plus + E_minus"), asym, cfg.tol_zero * t1.abs().max(1.0)));
        for r in rows {
            t.push(vec![v.into(), r.k[0].into(), r.k[1].into(), r.e_plus.into(), r.e_minus.into()]);
        }
    }
    let mut r = Report::new("bands", cfg.to_json(), t);
    r.config.insert("t1".into(), json!(t1));
    r.config.insert("k_grid".into(), json!([k_min, k_max, k_points]));
    r.checks = checks;
    Ok(r)
}

pub fn cmd_dimer(cfg: &RunConfig, g: f64) -> CmdResult {
    let mut t = Table::new(vec![
        col("g"),
        col("V"),
        ccol("E_plus"),
        ccol("E_minus"),
        col("class"),
        col("exceptional"),
        col("eigenvectors"),
        col("pt_residual"),
    ]);
    let mut checks = Vec::new();
    for &v in &cfg.v_grid {
        let p = DimerParams::new(g, v).map_err(err)?;
        let e = dimer_eigen(&p);
        let pt = dimer_pt_check(&p);
        let scale = g.max(v).max(1.0);
        checks.push(Check::at_most(format!("g={g} V={v}: PT residual"), pt.max_residual(), cfg.tol_zero * scale));
        let want = Complex64::new(g * g - v * v, 0.0).sqrt();
        let dev = if e.exceptional { e.e_plus.norm() } else { (e.e_plus - want).norm() };
        checks.push(Check::at_most(format!("g={g} V={v}: E_plus against sqrt(g^2 - V^2)"), dev, 1e-12 * scale));
        t.push(vec![
            g.into(),
            v.into(),
            e.e_plus.into(),
            e.e_minus.into(),
            class_name(pt.class).into(),
            e.exceptional.into(),
            (1 + usize::from(e.v_minus.is_some())).into(),
            pt.max_residual().into(),
        ]);
    }
    let mut r = Report::new("dimer", cfg.to_json(), t);
    r.config.insert("g".into(), json!(g));
    r.checks = checks;
    Ok(r)
}

fn eigen_residual(cfg: &RunConfig, v: f64, levels: usize) -> Result<f64, String> {
    let m = model(cfg, v)?;
    let analytic = AnalyticSpectrum::new(m).with_tolerance(cfg.tol_ep);
    let mut worst: f64 = 0.0;
    for n in 0..=levels {
        let s = analytic.level(0, n);
        for (_, e, phi) in s.right_vectors() {
            worst = worst.max((&m.apply(phi).map_err(err)? - &phi.scale(e)).norm());
        }
        for (_, e, psi) in s.left_vectors() {
            worst = worst.max((&m.adjoint().apply(psi).map_err(err)? - &psi.scale(e)).norm());
        }
    }
    Ok(worst)
}

pub fn cmd_selftest(cfg: &RunConfig) -> CmdResult {
    let eps = cfg.epsilon;
    let zero = cfg.tol_zero * eps.max(1.0);
    let mut checks = Vec::new();
    let levels = cfg.n2_max.min(16);
    for &v in &cfg.v_grid {
        checks.push(Check::at_most(format!("V={v}: eigen-residual"), eigen_residual(cfg, v, levels)?, zero));
    }
    let sq = TruncationSpec::square(6).map_err(err)?;
    checks.push(Check::at_most("PT identity at V=0.9", verify_pt_identity(0.9, eps, sq).map_err(err)?.residual, zero));
    checks.push(Check::at_least("T-only residual at V=0.9", t_only_residual(0.9, eps, sq).map_err(err)?.residual, 0.9 * eps));

    let analytic = AnalyticSpectrum::new(model(cfg, 1.0)?).with_tolerance(cfg.tol_ep);
    let tr = level_truncation(&RunConfig { n2_max: 8, ..cfg.clone() })?;
    let rep = completeness_check(&analytic, tr, None).map_err(err)?;
    checks.push(Check::holds("V=1 loses rank at n2=1", !rep.complete && rep.deficient_levels == vec![1]));
    checks.push(Check::at_most("V=1 witness overlap", rep.max_overlap, cfg.tol_zero));

    let p = BlochParams::balanced(1.0, 0.0).map_err(err)?;
    checks.push(Check::at_most("|f(K)|", p.f(k_point()).norm(), cfg.tol_zero));
    checks.push(Check::holds("dimer g=V is exceptional", dimer_eigen(&DimerParams::new(1.0, 1.0).map_err(err)?).exceptional));

    let h = DimerParams::new(2.0, 1.0).map_err(err)?.matrix();
    let sys = build_system(&h).map_err(err)?;
    checks.push(Check::at_most("dimer biorthonormality", sys.biorthonormality_defect(), 1e-10));
    checks.push(Check::at_most("dimer intertwining", verify_intertwining(&sys).max(), 1e-12));

    let mut t = Table::new(vec![col("check"), col("value"), col("bound"), col("limit"), col("pass")]);
    for c in &checks {
        t.push(vec![c.name.clone().into(), c.value.into(), c.bound.as_str().into(), c.limit.into(), c.pass().into()]);
    }
    let mut r = Report::new("selftest", cfg.to_json(), t);
    r.checks = checks;
    Ok(r)
}
