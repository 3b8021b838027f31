use std::collections::BTreeMap;

use sccore::arith::{conjecture45_witness, sc7_zero_set, sc9, sc9_zero_set};
use sccore::circle::{c11_certificate, deviation_bound, main_term, singular_series};
use sccore::combinatorics::oracle_count;
use sccore::qseries::{sct_series, TruncatedIntSeries};
use sccore::quadforms::{exceptional_search, sc4, sc6, sc7, sc8};
use sccore::table::{CoreCountTable, Method};
use sccore::Limits;
use serde_json::{json, Value};

use crate::config::{CommandKind, RunConfig, Suite};
use crate::report::{Cell, Report};
use crate::CliError;

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match (cfg.command, cfg.suite) {
        (CommandKind::Table, _) => table(cfg),
        (CommandKind::Asymptotics, _) => asymptotics(cfg),
        (CommandKind::Verify, Some(s)) => match s {
            Suite::Monotonicity => monotonicity(cfg),
            Suite::ZeroSets => zero_sets(cfg),
            Suite::SevenVsNine => seven_vs_nine(cfg),
            Suite::Conjecture45 => conjecture45(cfg),
            Suite::Bounds => bounds(cfg),
            Suite::Proportion => proportion(cfg),
            Suite::Exceptional => exceptional(cfg),
        },
        (CommandKind::Verify, None) => Err(CliError::Usage("verify needs a suite".into())),
    }
}

fn series(t: u32, n_max: u64) -> Result<TruncatedIntSeries, CliError> {
    Ok(sct_series(t, n_max as usize + 1)?)
}

fn t_value(t: u64) -> Result<u32, CliError> {
    u32::try_from(t)
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| CliError::Usage(format!("t = {t} out of range")))
}

/// Closed-form evaluator for `sc_t(n)` where one exists.
pub fn formula(t: u32, n: u64, limits: &Limits) -> Option<sccore::Result<u64>> {
    match t {
        4 => Some(sc4(n, limits)),
        6 => Some(sc6(n)),
        7 => Some(sc7(n)),
        8 => Some(Ok(sc8(n))),
        9 => Some(sc9(n, limits)),
        _ => None,
    }
}

fn table(cfg: &RunConfig) -> Result<Report, CliError> {
    let limits = cfg.limits();
    let mut columns = vec!["t", "n"];
    columns.extend(cfg.method_list.iter().map(|m| m.name()));
    columns.push("agree");
    let mut report = Report::new(cfg, &columns);
    let mut compared = 0u64;
    for t in cfg.t.iter() {
        let t = t_value(t)?;
        let mut tables: BTreeMap<Method, CoreCountTable> = BTreeMap::new();
        let mut circle = BTreeMap::new();
        for &m in &cfg.method_list {
            let mut tab = CoreCountTable::new(t, m);
            match m {
                Method::Oracle => {
                    for n in cfg.n.iter() {
                        tab.insert(n, oracle_count(n, Some(t), true, &limits)?);
                    }
                }
                Method::Series => {
                    let s = series(t, cfg.n.end)?;
                    for n in cfg.n.iter() {
                        tab.insert(n, s.coeff_u64(n as usize));
                    }
                }
                Method::Formula => {
                    for n in cfg.n.iter() {
                        if let Some(v) = formula(t, n, &limits) {
                            tab.insert(n, v?);
                        }
                    }
                }
                Method::Circle => {
                    if t >= 10 {
                        for n in cfg.n.iter() {
                            let m = main_term(t, n, cfg.k_max)?;
                            tab.insert(n, m.value.round().max(0.0) as u64);
                            circle.insert(n, m.value);
                        }
                    }
                }
            }
            tables.insert(m, tab);
        }
        for n in cfg.n.iter() {
            let mut row: Vec<Cell> = vec![t.into(), n.into()];
            let mut exact = BTreeMap::new();
            for &m in &cfg.method_list {
                if m == Method::Circle {
                    row.push(circle.get(&n).copied().into());
                    continue;
                }
                let v = tables[&m].get(n);
                if let Some(v) = v {
                    exact.insert(m.name(), v);
                }
                row.push(v.into());
            }
            let mut values = exact.values();
            let agree = match values.next() {
                Some(first) => values.all(|v| v == first),
                None => true,
            };
            if exact.len() > 1 {
                compared += 1;
            }
            if !agree {
                report.disagree(json!({ "t": t, "n": n, "values": exact }));
            }
            row.push(agree.into());
            report.push(row);
        }
    }
    report.summarize("compared", compared);
    report.summarize("all_agree", report.disagreements.is_empty());
    Ok(report)
}

fn monotonicity(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new(cfg, &["t", "n", "sc_t", "sc_t_plus_2", "holds"]);
    let ts: Vec<u32> = cfg
        .t
        .iter()
        .map(t_value)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|&t| cfg.t_explicit || t != 7)
        .collect();
    let mut cache: BTreeMap<u32, TruncatedIntSeries> = BTreeMap::new();
    for &t in &ts {
        for s in [t, t + 2] {
            if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(s) {
                e.insert(series(s, cfg.n.end)?);
            }
        }
    }
    for &t in &ts {
        for n in cfg.n.iter() {
            let a = cache[&t].coeff_u64(n as usize);
            let b = cache[&(t + 2)].coeff_u64(n as usize);
            let holds = b > a;
            if !holds {
                report.disagree(json!({ "t": t, "n": n, "sc_t": a, "sc_t_plus_2": b }));
            }
            report.push(vec![t.into(), n.into(), a.into(), b.into(), holds.into()]);
        }
    }
    report.summarize("t_values", ts);
    report.summarize("violations", report.disagreements.len());
    Ok(report)
}

fn zero_sets(cfg: &RunConfig) -> Result<Report, CliError> {
    let limits = cfg.limits();
    let mut report = Report::new(cfg, &["n", "sc7", "sc7_zero_set", "sc9", "sc9_zero_set", "ok"]);
    let s7 = series(7, cfg.n.end)?;
    let s9 = series(9, cfg.n.end)?;
    let (mut zeros7, mut zeros9) = (0u64, 0u64);
    for n in cfg.n.iter() {
        let (a, b) = (sc7(n)?, sc9(n, &limits)?);
        let (p7, p9) = (sc7_zero_set(n), sc9_zero_set(n));
        let ok = a == s7.coeff_u64(n as usize) && b == s9.coeff_u64(n as usize) && (a == 0) == p7 && (b == 0) == p9;
        zeros7 += (a == 0) as u64;
        zeros9 += (b == 0) as u64;
        if !ok {
            report.disagree(json!({
                "n": n,
                "sc7": a, "sc7_series": s7.coeff_u64(n as usize), "sc7_zero_set": p7,
                "sc9": b, "sc9_series": s9.coeff_u64(n as usize), "sc9_zero_set": p9,
            }));
        }
        report.push(vec![n.into(), a.into(), p7.into(), b.into(), p9.into(), ok.into()]);
    }
    report.summarize("sc7_zeros", zeros7);
    report.summarize("sc9_zeros", zeros9);
    Ok(report)
}

fn seven_vs_nine(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new(cfg, &["n", "sc7", "sc9", "sc9_zero_set"]);
    let s7 = series(7, cfg.n.end)?;
    let s9 = series(9, cfg.n.end)?;
    let mut set = vec![];
    for n in cfg.n.iter() {
        let (a, b) = (s7.coeff_u64(n as usize), s9.coeff_u64(n as usize));
        if b < a {
            set.push(n);
            report.push(vec![n.into(), a.into(), b.into(), sc9_zero_set(n).into()]);
        }
    }
    let mut witnesses = vec![];
    let mut pow = 64u64;
    while pow - 10 <= 3 * cfg.n.end {
        let n = (pow - 10) / 3;
        if n >= cfg.n.start {
            let (a, b) = (s7.coeff_u64(n as usize), s9.coeff_u64(n as usize));
            witnesses.push(n);
            if !(b == 0 && a > 0) {
                report.disagree(json!({ "n": n, "sc7": a, "sc9": b }));
            }
        }
        pow *= 4;
    }
    report.summarize("set", set);
    report.summarize("witnesses", witnesses);
    Ok(report)
}

fn conjecture45(cfg: &RunConfig) -> Result<Report, CliError> {
    let limits = cfg.limits();
    let w = conjecture45_witness(cfg.x, &limits)?;
    let mut report = Report::new(cfg, &["k", "n", "sc9", "ratio", "exceeds_one"]);
    for r in &w.ratios {
        let exceeds = r.ratio > 1.0;
        if !exceeds {
            report.disagree(json!({ "k": r.k, "n": r.denominator_n, "ratio": r.ratio }));
        }
        report.push(vec![r.k.into(), r.denominator_n.into(), r.sc9_denominator.into(), r.ratio.into(), exceeds.into()]);
    }
    report.summarize("X", w.x);
    report.summarize("N_prime", w.n_prime);
    report.summarize("doubled", w.doubled);
    report.summarize("N_X", w.big_n);
    report.summarize("n_X", w.n_x);
    report.summarize("sc9_n_X", w.sc9_n_x);
    report.summarize(
        "sigma_ratio",
        json!([w.sigma_ratio.numer().to_string(), w.sigma_ratio.denom().to_string()]),
    );
    report.summarize("all_exceed_one", w.all_ratios_exceed_one());
    Ok(report)
}

fn bounds(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new(cfg, &["t", "n", "C_re", "C_im", "deviation", "bound", "tail", "ok"]);
    let mut worst = serde_json::Map::new();
    for t in cfg.t.iter() {
        let t = t_value(t)?;
        let bound = deviation_bound(t).ok_or_else(|| CliError::Usage(format!("no certified bound for t = {t}; need t >= 10")))?;
        let mut max_dev = 0.0f64;
        for n in cfg.n.iter() {
            let s = singular_series(t, n, cfg.k_max)?;
            let dev = (s.value - 1.0).norm();
            max_dev = max_dev.max(dev);
            let ok = dev <= bound + s.tail_bound;
            if !ok {
                report.disagree(json!({ "t": t, "n": n, "deviation": dev, "bound": bound, "tail": s.tail_bound }));
            }
            report.push(vec![
                t.into(),
                n.into(),
                s.value.re.into(),
                s.value.im.into(),
                dev.into(),
                bound.into(),
                s.tail_bound.into(),
                ok.into(),
            ]);
        }
        worst.insert(t.to_string(), json!({ "max_deviation": max_dev, "bound": bound }));
    }
    report.summarize("by_t", Value::Object(worst));
    Ok(report)
}

fn proportion(cfg: &RunConfig) -> Result<Report, CliError> {
    let limits = cfg.limits();
    let mut report = Report::new(cfg, &["alpha", "n", "t", "sc_t", "sc", "ratio"]);
    let mut trends = serde_json::Map::new();
    for &alpha in &cfg.alpha {
        let mut prev: Option<(u64, u64, u64)> = None;
        let mut ratios = vec![];
        for n in cfg.n.iter().step_by(cfg.step as usize) {
            let t = (alpha * n as f64).floor() as u64;
            if t < 2 {
                continue;
            }
            let t32 = t_value(t)?;
            let a = oracle_count(n, Some(t32), true, &limits)?;
            let b = oracle_count(n, None, true, &limits)?;
            if let Some((pn, pa, pb)) = prev {
                if (a as u128) * (pb as u128) < (pa as u128) * (b as u128) {
                    report.disagree(json!({ "alpha": alpha, "n": n, "previous_n": pn, "ratio": [a, b], "previous_ratio": [pa, pb] }));
                }
            }
            prev = Some((n, a, b));
            let r = a as f64 / b as f64;
            ratios.push(r);
            report.push(vec![alpha.into(), n.into(), t.into(), a.into(), b.into(), r.into()]);
        }
        trends.insert(alpha.to_string(), json!(ratios));
    }
    report.summarize("ratios", Value::Object(trends));
    Ok(report)
}

fn exceptional(cfg: &RunConfig) -> Result<Report, CliError> {
    let limits = cfg.limits();
    let found: Vec<u64> = exceptional_search(cfg.n.end, &limits)?
        .into_iter()
        .filter(|&m| m >= cfg.n.start)
        .collect();
    let mut report = Report::new(cfg, &["N"]);
    for &m in &found {
        report.push(vec![m.into()]);
    }
    report.summarize("count", found.len());
    report.summarize("values", found);
    Ok(report)
}

fn asymptotics(cfg: &RunConfig) -> Result<Report, CliError> {
    let limits = cfg.limits();
    let mut report = Report::new(
        cfg,
        &[
            "t",
            "n",
            "sc_t",
            "main_term",
            "ratio",
            "residual",
            "C_re",
            "C_im",
            "c11_bound",
            "c11_deviation",
            "c11_within",
        ],
    );
    let mut quartiles = serde_json::Map::new();
    for t in cfg.t.iter() {
        let t = t_value(t)?;
        if t < 10 {
            return Err(CliError::Usage(format!("asymptotics needs t >= 10, got {t}")));
        }
        let s = series(t, cfg.n.end)?;
        let mut ratios = vec![];
        for n in cfg.n.iter() {
            let exact = s.coeff_u64(n as usize);
            let m = main_term(t, n, cfg.k_max)?;
            let ratio = exact as f64 / m.value;
            let residual = (exact as f64 - m.value) / (n.max(1) as f64).powf(t as f64 / 8.0);
            ratios.push(ratio);
            let (mut bound, mut dev, mut within) = (None, None, None);
            if t == 11 {
                let c = c11_certificate(n, cfg.k_max, &limits)?;
                if !c.series_within_bound {
                    report.disagree(json!({ "t": t, "n": n, "c11_deviation": c.deviation, "c11_bound": c.bound }));
                }
                bound = Some(c.bound);
                dev = Some(c.deviation);
                within = Some(c.series_within_bound);
            }
            report.push(vec![
                t.into(),
                n.into(),
                exact.into(),
                m.value.into(),
                ratio.into(),
                residual.into(),
                m.singular.value.re.into(),
                m.singular.value.im.into(),
                bound.into(),
                dev.into(),
                within.into(),
            ]);
        }
        let top = &ratios[ratios.len() - ratios.len().div_ceil(4)..];
        let max_dev = top.iter().map(|r| (r - 1.0).abs()).fold(0.0, f64::max);
        let (lo, hi) = ratios.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &r| (lo.min(r), hi.max(r)));
        quartiles.insert(
            t.to_string(),
            json!({ "top_quartile_max_abs_ratio_minus_one": max_dev, "ratio_min": lo, "ratio_max": hi }),
        );
    }
    report.summarize("by_t", Value::Object(quartiles));
    Ok(report)
}
