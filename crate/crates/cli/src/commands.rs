use std::fmt;
use std::io::Write;

use serde_json::{json, Value};

use osp_core::characters::{
    sl3_character, unitary_character, verma_character, weyl_character, UnitaryCase, UnitaryParams,
};
use osp_core::enveloping::{gram_psd_check, verify_singular, PrintedId, VermaModule};
use osp_core::rational::{parse_int_list, parse_labels, parse_rational, q};
use osp_core::root_system::simple_to_delta_int;
use osp_core::unitarity::{classify, d_grid, grid_to_csv, subsingular_points, unitarity_grid};
use osp_core::weights::{labels_of_weight, reduction_points, weight_from_labels, PointId, Signature};
use osp_core::weyl::{find_w_lambda, generate, multiplet_orbit, parse_word, WeylElement};
use osp_core::Error;

use crate::{Cli, Command, Format, SigArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Anomaly(_)) => 3,
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn format(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(format!("format {f:?} is not available for this command")))
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(CliError::Io),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn labels_or_zero(n: usize, a: &Option<String>) -> Result<Vec<u32>> {
    match a {
        Some(s) => Ok(parse_labels(s)?),
        None => Ok(vec![0; n.saturating_sub(1)]),
    }
}

fn signature(s: &SigArgs) -> Result<Signature> {
    Ok(Signature::new(s.n, parse_rational(&s.d)?, labels_or_zero(s.n, &s.a)?)?)
}

fn dynkin_weight(n: usize, labels: &str) -> Result<osp_core::root_system::Weight> {
    let xs = parse_int_list(labels)?;
    if xs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: xs.len() }.into());
    }
    Ok(weight_from_labels(&xs.into_iter().map(q).collect::<Vec<_>>()))
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Classify(s) => cmd_classify(cli, s),
        Command::Grid { n, a_max, kmax, den } => cmd_grid(cli, *n, *a_max, *kmax, *den),
        Command::ReductionPoints { n, a } => cmd_reduction_points(cli, *n, a),
        Command::Character { case, n, maxdeg, m1, m2, labels } => cmd_character(cli, case, *n, *maxdeg, *m1, *m2, labels),
        Command::Verify { all, id, n, a, d } => cmd_verify(cli, *all, id, *n, a, d),
        Command::Gram { sig, max_level, offset } => cmd_gram(cli, sig, *max_level, offset),
        Command::Multiplet { n, labels } => cmd_multiplet(cli, *n, labels),
        Command::Weyl { n, word, labels } => cmd_weyl(cli, *n, word, labels),
    }
}

fn cmd_classify(cli: &Cli, s: &SigArgs) -> Result<()> {
    let sig = signature(s)?;
    let v = classify(&sig);
    let out = match format(cli, Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => {
            let point = v.governing_point.as_ref().map(|g| format!(" at {}", g.label)).unwrap_or_default();
            let verdict = if v.unitary { "unitary" } else { "not unitary" };
            format!("{sig}: {verdict}, {}{point} ({})\n", v.branch.as_str(), v.row)
        }
        _ => pretty(&json!({ "signature": sig, "verdict": v })),
    };
    emit(cli, &out)
}

fn cmd_grid(cli: &Cli, n: usize, a_max: u32, kmax: i64, den: i64) -> Result<()> {
    if den <= 0 || kmax < 0 {
        return Err(CliError::Usage("grid needs kmax >= 0 and den > 0".into()));
    }
    let ranges = vec![0..=a_max; n.saturating_sub(1)];
    let rows = unitarity_grid(n, &ranges, &d_grid(kmax, den))?;
    let out = match format(cli, Format::Json, &[Format::Json, Format::Csv])? {
        Format::Csv => grid_to_csv(&rows),
        _ => pretty(&to_json(&rows)),
    };
    emit(cli, &out)
}

fn cmd_reduction_points(cli: &Cli, n: usize, a: &Option<String>) -> Result<()> {
    let sig = Signature::new(n, q(0), labels_or_zero(n, a)?)?;
    let points = reduction_points(&sig);
    let out = match format(cli, Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => {
            let mut s = String::new();
            for (i, j, v) in &points.d_ij {
                s.push_str(&format!("{} = {v}\n", PointId::Pair(*i, *j).label()));
            }
            for (i, v) in points.d_i.iter().enumerate() {
                s.push_str(&format!("{} = {v}\n", PointId::Single(i + 1).label()));
            }
            for (i, v) in points.d_ii.iter().enumerate() {
                s.push_str(&format!("{} = {v}\n", PointId::Double(i + 1).label()));
            }
            s
        }
        _ => pretty(&json!({
            "n": n,
            "a": sig.a,
            "points": points,
            "ordering_violations": points.ordering_violations(),
            "subsingular_points": subsingular_points(&sig),
        })),
    };
    emit(cli, &out)
}

fn cmd_character(cli: &Cli, case: &str, n: usize, maxdeg: u32, m1: u32, m2: u32, labels: &Option<String>) -> Result<()> {
    let ch = match case {
        "verma" => verma_character(n, maxdeg)?,
        "sl3" => osp_core::characters::NormalizedCharacter { prefix: None, series: sl3_character(m1, m2)? },
        "weyl" => {
            let labels = labels.as_ref().ok_or_else(|| CliError::Usage("--case weyl needs --labels".into()))?;
            weyl_character(&dynkin_weight(n, labels)?, maxdeg)?
        }
        other => {
            let c = UnitaryCase::parse(other).map_err(|_| CliError::Usage(format!("unknown character case `{other}`")))?;
            if n != 3 {
                return Err(CliError::Usage(format!("case {other} is defined for n = 3 only")));
            }
            unitary_character(c, UnitaryParams { m1, m2 }, maxdeg)?
        }
    };
    let out = match format(cli, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => pretty(&to_json(&ch)),
        _ => ch.series.to_text(),
    };
    emit(cli, &out)
}

fn cmd_verify(cli: &Cli, all: bool, id: &Option<String>, n: usize, a: &Option<String>, d: &Option<String>) -> Result<()> {
    let ids: Vec<PrintedId> = match (all, id) {
        (true, None) => PrintedId::PRINTED.to_vec(),
        (false, Some(s)) => vec![s.parse().map_err(|_| CliError::Usage(format!("unknown vector id `{s}`")))?],
        _ => return Err(CliError::Usage("give exactly one of --all or --id".into())),
    };
    let explicit = match d {
        Some(d) => Some(Signature::new(n, parse_rational(d)?, labels_or_zero(n, a)?)?),
        None if a.is_some() => return Err(CliError::Usage("--a needs --d".into())),
        None => None,
    };
    if all && explicit.is_some() {
        return Err(CliError::Usage("--all runs every printed regime; drop --a/--d".into()));
    }
    let mut rows = Vec::new();
    for id in ids {
        let samples = explicit.clone().map(|s| vec![s]).unwrap_or_else(|| id.regime_samples());
        let mut checks = Vec::new();
        for s in samples {
            checks.push((s.clone(), verify_singular(id, &s)?));
        }
        rows.push((id, checks));
    }
    let out = match format(cli, Format::Json, &[Format::Text, Format::Json])? {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(id, checks)| {
                    json!({
                        "id": id.name(),
                        "regime": id.regime(),
                        "normalization": id.normalization(),
                        "pass": checks.iter().all(|c| c.1),
                        "samples": checks.iter().map(|(s, ok)| json!({ "signature": s.to_string(), "pass": ok })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(&Value::Array(v))
        }
        _ => {
            let mut s = String::new();
            for (id, checks) in &rows {
                let passed = checks.iter().filter(|c| c.1).count();
                let status = if passed == checks.len() { "PASS" } else { "FAIL" };
                let at: Vec<String> = checks.iter().map(|c| c.0.to_string()).collect();
                s.push_str(&format!("{:<12} {status} {passed}/{} at {}\n", id.name(), checks.len(), at.join(" ")));
            }
            s
        }
    };
    emit(cli, &out)
}

fn cmd_gram(cli: &Cli, s: &SigArgs, max_level: usize, offset: &Option<String>) -> Result<()> {
    let sig = signature(s)?;
    if let Some(off) = offset {
        let c = parse_int_list(off)?;
        if c.len() != sig.n || c.iter().any(|&x| x < 0) {
            return Err(CliError::Usage(format!("offset needs {} non-negative coefficients", sig.n)));
        }
        let verma = VermaModule::new(&sig)?;
        let g = verma.gram(&simple_to_delta_int(&c));
        let out = match format(cli, Format::Csv, &[Format::Csv, Format::Json])? {
            Format::Json => {
                let basis: Vec<String> = g
                    .basis
                    .iter()
                    .map(|m| {
                        let v = osp_core::enveloping::ModuleVector::from_coordinates(g.offset.clone(), std::slice::from_ref(m), &[q(1)]);
                        v.to_text(&verma.alg).trim_start_matches("1 * ").trim_end().to_string()
                    })
                    .collect();
                let entries: Vec<Vec<String>> = g.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                pretty(&json!({ "signature": sig, "weight_offset": g.weight_offset(), "basis": basis, "entries": entries }))
            }
            _ => g.to_csv(&verma.alg),
        };
        return emit(cli, &out);
    }
    let report = gram_psd_check(&sig, max_level)?;
    let out = match format(cli, Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => {
            let mut t = String::new();
            for l in &report.levels {
                let verdict = if l.psd { "psd" } else { "not_psd" };
                t.push_str(&format!("level {}: {verdict} ({} weight spaces, max dim {})\n", l.level, l.offsets.len(), l.max_dim));
            }
            if let Some(w) = &report.witness {
                t.push_str(&format!("witness at offset {:?}, norm {}:\n{}", w.offset, w.norm, w.text));
            }
            t
        }
        _ => {
            let verdict = if report.psd { "psd" } else { "not_psd" };
            pretty(&json!({ "signature": sig, "verdict": verdict, "report": report }))
        }
    };
    emit(cli, &out)
}

fn cmd_multiplet(cli: &Cli, n: usize, labels: &str) -> Result<()> {
    let graph = multiplet_orbit(&dynkin_weight(n, labels)?)?;
    let out = match format(cli, Format::Dot, &[Format::Dot, Format::Json])? {
        Format::Json => pretty(&to_json(&graph)),
        _ => graph.to_dot(),
    };
    emit(cli, &out)
}

fn element_json(w: &WeylElement) -> Value {
    json!({ "word": w.word_string(), "length": w.length, "perm": w.perm, "signs": w.signs })
}

fn cmd_weyl(cli: &Cli, n: usize, word: &Option<String>, labels: &Option<String>) -> Result<()> {
    let fmt = format(cli, Format::Json, &[Format::Json, Format::Text])?;
    let out = match (word, labels) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give at most one of --word and --labels".into())),
        (Some(wd), None) => {
            let w = WeylElement::from_word(n, &parse_word(wd)?)?;
            match fmt {
                Format::Text => format!("{}\n", w.word_string()),
                _ => pretty(&element_json(&w)),
            }
        }
        (None, Some(ls)) => {
            let (w, l0) = find_w_lambda(&dynkin_weight(n, ls)?)?;
            let l0: Vec<String> = labels_of_weight(&l0).iter().map(|x| x.to_string()).collect();
            match fmt {
                Format::Text => format!("w = {}, dominant labels ({})\n", w.word_string(), l0.join(",")),
                _ => pretty(&json!({ "w": element_json(&w), "dominant_labels": l0 })),
            }
        }
        (None, None) => {
            let all = generate(n)?;
            match fmt {
                Format::Text => all.iter().map(|w| format!("{}\n", w.word_string())).collect(),
                _ => pretty(&json!({ "n": n, "order": all.len(), "elements": all.iter().map(element_json).collect::<Vec<_>>() })),
            }
        }
    };
    emit(cli, &out)
}
