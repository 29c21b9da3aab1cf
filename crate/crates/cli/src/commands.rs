use std::io::Write;
use std::path::{Path, PathBuf};

use cytrans::golden::{list_golden, run_golden};
use cytrans::hodge::{ci_euler, cy_betti, euler_from_betti, griffiths_h21};
use cytrans::milnor::{icis_milnor, milnor_oracle, milnor_orlik, IcisKind};
use cytrans::polyring::{parse_poly, parse_poly_infer, parse_rational};
use cytrans::report::{parse_records, render_table};
use cytrans::scenario::{evaluate, parse_scenario};
use cytrans::{
    CISpec, CY3Hodge, CompleteIntersectionGerm, Error, Format, HypersurfaceGerm, ReportRecord, WPSHypersurfaceSpec,
    WeightSystem, WeightedPoly,
};
use serde_json::json;

use crate::{HodgeArgs, MilnorArgs};

pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_parse() { 2 } else { 3 },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CmdResult = Result<Output, Failure>;

pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn poly_from(text: &str, vars: Option<&str>) -> Result<(WeightedPoly, Vec<String>), Error> {
    match vars {
        Some(v) => {
            let names: Vec<String> = split_list(v).map(String::from).collect();
            Ok((parse_poly(text, &names)?, names))
        }
        None => parse_poly_infer(text),
    }
}

fn joined<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn milnor_report(label: String, formula: u64, oracle: Option<u64>, format: Format) -> Output {
    let passed = oracle.is_none_or(|o| o == formula);
    let text = match format {
        Format::Records => json_line(json!({
            "germ": label,
            "weight_formula": formula,
            "jacobian_algebra": oracle,
            "agree": passed,
        })),
        Format::Text => {
            let mut s = format!("{label}\nweight formula:   {formula}\n");
            if let Some(o) = oracle {
                s.push_str(&format!("Jacobian algebra: {o}\n"));
                if !passed {
                    s.push_str("FAILED: the two computations disagree\n");
                }
            }
            s
        }
    };
    Output { text, passed }
}

pub fn milnor(a: &MilnorArgs, format: Format) -> CmdResult {
    if let Some(bp) = &a.bp {
        let exps = split_list(bp)
            .map(|t| t.parse::<u32>().map_err(|_| usage(format!("`{t}` is not an exponent"))))
            .collect::<Result<Vec<_>, _>>()?;
        let g = HypersurfaceGerm::brieskorn_pham(&exps)?;
        let formula = milnor_orlik(g.weight_system())?;
        let oracle = milnor_oracle(&g)?;
        return Ok(milnor_report(format!("{}", g.polynomial()), formula, Some(oracle), format));
    }
    if let Some(name) = &a.icis {
        let g = CompleteIntersectionGerm::from_kind(IcisKind::from_name(name)?)?;
        return Ok(milnor_report(name.clone(), icis_milnor(&g), None, format));
    }
    let (Some(weights), Some(degree)) = (&a.weights, &a.degree) else {
        return Err(usage("give --weights and --degree, --bp, or --icis"));
    };
    let w = split_list(weights).map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    let w = WeightSystem::new(w, parse_rational(degree)?)?;
    let formula = milnor_orlik(&w)?;
    match &a.poly {
        None => Ok(milnor_report(format!("{w}"), formula, None, format)),
        Some(text) => {
            let (f, names) = poly_from(text, a.vars.as_deref())?;
            let g = HypersurfaceGerm::new(f, w.clone())?;
            let oracle = milnor_oracle(&g)?;
            let label = format!("{} with {w}", g.polynomial().display_with(&names));
            Ok(milnor_report(label, formula, Some(oracle), format))
        }
    }
}

pub fn hodge(a: &HodgeArgs, format: Format) -> CmdResult {
    let (label, h) = if let Some(ws) = &a.wps {
        let weights = split_list(ws)
            .map(|t| t.parse::<u64>().map_err(|_| usage(format!("`{t}` is not a weight"))))
            .collect::<Result<Vec<_>, _>>()?;
        let weights: [u64; 5] = weights
            .try_into()
            .map_err(|_| usage("--wps needs exactly five weights"))?;
        let poly = a.poly.as_deref().map(|p| poly_from(p, a.vars.as_deref())).transpose()?.map(|(f, _)| f);
        let degree = a.degree.unwrap_or_else(|| weights.iter().sum());
        let spec = WPSHypersurfaceSpec::new(weights, degree, poly)?;
        let h21 = griffiths_h21(&spec)?;
        (format!("P({})[{degree}]", joined(&weights)), CY3Hodge { h11: a.h11, h21 })
    } else if let Some(ci) = &a.ci {
        let spec: CISpec = ci.parse()?;
        let chi = ci_euler(&spec);
        (format!("P{}[{}]", spec.ambient_dim(), joined(spec.degrees())), CY3Hodge::from_euler(a.h11, chi)?)
    } else if let Some(nums) = &a.numbers {
        let v = split_list(nums)
            .map(|t| t.parse::<u64>().map_err(|_| usage(format!("`{t}` is not a Hodge number"))))
            .collect::<Result<Vec<_>, _>>()?;
        let [h11, h21] = v[..] else {
            return Err(usage("--numbers needs h11,h21"));
        };
        ("given".to_string(), CY3Hodge { h11, h21 })
    } else {
        return Err(usage("give --wps, --ci, or --numbers"));
    };
    let betti = cy_betti(&h);
    let euler = euler_from_betti(&betti);
    let text = match format {
        Format::Records => json_line(json!({
            "variety": label,
            "h11": h.h11,
            "h21": h.h21,
            "euler": euler,
            "betti": betti,
        })),
        Format::Text => format!(
            "{label}\nh11 = {}, h21 = {}, euler = {euler}\nbetti = {betti}\n",
            h.h11, h.h21
        ),
    };
    Ok(Output::ok(text))
}

fn render_all(mut records: Vec<ReportRecord>, format: Format) -> Output {
    records.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = records.iter().all(ReportRecord::all_passed);
    let parts: Vec<String> = records.iter().map(|r| render_table(r, format)).collect();
    let sep = if format == Format::Text { "\n" } else { "" };
    Output {
        text: parts.join(sep),
        passed,
    }
}

pub fn transition(files: &[PathBuf], format: Format) -> CmdResult {
    let mut records = Vec::new();
    for path in files {
        let text = read(path)?;
        let located = |e: Error| Failure {
            message: format!("{}: {e}", path.display()),
            ..Failure::from(e)
        };
        let scenario = parse_scenario(&text).map_err(located)?;
        records.push(evaluate(&scenario).map_err(located)?);
    }
    Ok(render_all(records, format))
}

pub fn check(file: &PathBuf, format: Format) -> CmdResult {
    let stored = parse_records(&read(file)?)?;
    if stored.is_empty() {
        return Err(usage(format!("{} holds no records", file.display())));
    }
    let mut fresh = Vec::new();
    for mut r in stored {
        let rechecked = r.recheck();
        for c in &r.checks {
            if let Some(n) = rechecked.iter().find(|n| n.name == c.name) {
                if n.passed != c.passed {
                    r.notes.push(format!("stored result for {} was {}", c.name, c.passed));
                }
            }
        }
        r.checks = rechecked;
        r.trivial = r.htype.is_trivial();
        fresh.push(r);
    }
    Ok(render_all(fresh, format))
}

pub fn golden(name: Option<&str>, all: bool, list: bool, format: Format) -> CmdResult {
    if list {
        let names = list_golden();
        let text = match format {
            Format::Text => names.iter().map(|n| format!("{n}\n")).collect(),
            Format::Records => json_line(json!(names)),
        };
        return Ok(Output::ok(text));
    }
    let names: Vec<&str> = match (name, all) {
        (Some(n), false) => vec![n],
        (None, true) => list_golden(),
        _ => return Err(usage("give a scenario name, --all, or --list")),
    };
    let records = names
        .into_iter()
        .map(run_golden)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| match e {
            Error::MissingInput(m) => usage(m),
            other => other.into(),
        })?;
    Ok(render_all(records, format))
}
