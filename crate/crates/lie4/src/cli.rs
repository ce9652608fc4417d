//! Command-line front door: catalog inspection, single computations, and
//! the verification harness with golden-file comparison.
//!
//! Rationals cross the boundary as "p/q" strings so everything stays
//! exact. Exit codes: 0 success, 1 verification mismatches, 2 bad
//! arguments, 3 stabilizer label mismatch.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::{
    get_algebra, list_metric_families, AlgebraId, AlgebraName, Catalog, MetricFamily,
};
use crate::lietheory::is_type_r;
use crate::linalg::{parse_rat, rat_to_string, Rat};
use crate::realization::{make_point, verify_bracket_match, RealizationError};
use crate::sample;
use crate::stabilizer::{isometry_report, Completeness};

#[derive(Parser, Debug)]
#[command(name = "lie4", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Dump the algebra/template/metric-family catalog as JSON.
    Catalog {
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Classify an algebra: are all adjoint maps real-rooted?
    CheckTypeR {
        #[arg(long)]
        algebra: Option<String>,
        #[command(flatten)]
        params: ParamFlags,
    },
    /// Compute the stabilizer report for one (algebra, case, params).
    Stabilizer {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        case: String,
        #[command(flatten)]
        params: ParamFlags,
    },
    /// Assemble a group element from named coordinates.
    Realize {
        #[arg(long)]
        algebra: String,
        /// repeated name=value pairs, e.g. --coord z=1.5
        #[arg(long = "coord")]
        coords: Vec<String>,
        #[command(flatten)]
        params: ParamFlags,
    },
    /// Run the whole pipeline over every (algebra, family) and compare
    /// against expectations and the golden file.
    VerifyAll {
        #[arg(long, default_value_t = 2)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long)]
        write_golden: bool,
    },
}

/// Every rational parameter the catalog uses, as optional "p/q" flags.
/// The algebra-* variants disambiguate when an algebra parameter shares
/// its name with a metric parameter.
#[derive(Args, Debug, Default)]
struct ParamFlags {
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    algebra_alpha: Option<String>,
    #[arg(long)]
    algebra_beta: Option<String>,
}

impl ParamFlags {
    fn get(&self, name: &str) -> Option<&String> {
        match name {
            "alpha" => self.alpha.as_ref(),
            "beta" => self.beta.as_ref(),
            "gamma" => self.gamma.as_ref(),
            "delta" => self.delta.as_ref(),
            "lambda" => self.lambda.as_ref(),
            "mu" => self.mu.as_ref(),
            "nu" => self.nu.as_ref(),
            "eta" => self.eta.as_ref(),
            _ => None,
        }
    }

    fn get_algebra(&self, name: &str) -> Option<&String> {
        match name {
            "alpha" => self.algebra_alpha.as_ref(),
            "beta" => self.algebra_beta.as_ref(),
            _ => None,
        }
    }
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

fn bad_args(msg: impl Into<String>) -> CliError {
    CliError { code: 2, message: msg.into() }
}

fn parse_algebra(s: &str) -> Result<AlgebraName, CliError> {
    AlgebraName::parse(s).ok_or_else(|| bad_args(format!("unknown group {s:?}")))
}

fn parse_param(name: &str, raw: &str) -> Result<Rat, CliError> {
    parse_rat(raw).ok_or_else(|| bad_args(format!("parameter {name}: cannot parse {raw:?} as p/q")))
}

/// Algebra parameters: --algebra-<name> wins, then --<name> unless the
/// metric case also declares that name, then the canonical default.
fn algebra_id(
    cat: &Catalog,
    name: AlgebraName,
    flags: &ParamFlags,
    family: Option<&MetricFamily>,
) -> Result<AlgebraId, CliError> {
    let mut params = BTreeMap::new();
    for pname in &cat.algebra(name).param_names {
        let metric_owns = family
            .map(|f| f.params.iter().any(|p| &p.name == pname))
            .unwrap_or(false);
        let raw = flags
            .get_algebra(pname)
            .or_else(|| if metric_owns { None } else { flags.get(pname) });
        match raw {
            Some(raw) => {
                params.insert(pname.clone(), parse_param(pname, raw)?);
            }
            None => {
                let canon = crate::catalog::canonical_params(name);
                params.insert(pname.clone(), canon[pname].clone());
            }
        }
    }
    AlgebraId::new(name, params).map_err(|e| bad_args(e.to_string()))
}

fn metric_params(family: &MetricFamily, flags: &ParamFlags) -> Result<BTreeMap<String, Rat>, CliError> {
    let mut out = BTreeMap::new();
    for p in &family.params {
        let raw = flags
            .get(&p.name)
            .ok_or_else(|| bad_args(format!("missing metric parameter --{}", p.name)))?;
        out.insert(p.name.clone(), parse_param(&p.name, raw)?);
    }
    Ok(out)
}

fn params_to_json(p: &BTreeMap<String, Rat>) -> Value {
    Value::Object(
        p.iter()
            .map(|(k, v)| (k.clone(), Value::String(rat_to_string(v))))
            .collect(),
    )
}

fn cmd_catalog(cat: &Catalog, algebra: Option<&str>) -> Result<Value, CliError> {
    match algebra {
        None => Ok(json!({ "algebras": cat.to_json() })),
        Some(s) => {
            let name = parse_algebra(s)?;
            let full = cat.to_json();
            let entry = full
                .as_array()
                .unwrap()
                .iter()
                .find(|a| a["name"] == name.as_str())
                .cloned()
                .unwrap();
            Ok(entry)
        }
    }
}

fn cmd_check_type_r(
    cat: &Catalog,
    algebra: Option<&str>,
    flags: &ParamFlags,
) -> Result<Value, CliError> {
    let names: Vec<AlgebraName> = match algebra {
        Some(s) => vec![parse_algebra(s)?],
        None => AlgebraName::ALL.to_vec(),
    };
    let mut entries = Vec::new();
    for name in names {
        let id = algebra_id(cat, name, flags, None)?;
        let sc = get_algebra(cat, &id).map_err(|e| bad_args(e.to_string()))?;
        entries.push(json!({
            "algebra": name.as_str(),
            "params": params_to_json(&id.params),
            "type_r": is_type_r(&sc),
        }));
    }
    Ok(if entries.len() == 1 {
        entries.pop().unwrap()
    } else {
        json!({ "algebras": entries })
    })
}

/// Returns the JSON plus the exit code (0 match, 3 mismatch).
fn cmd_stabilizer(
    cat: &Catalog,
    algebra: &str,
    case: &str,
    flags: &ParamFlags,
) -> Result<(Value, i32), CliError> {
    let name = parse_algebra(algebra)?;
    if cat.algebra(name).template.is_empty() {
        // outside the real-rooted class the semidirect decomposition is
        // not available; report the containment only
        let id = algebra_id(cat, name, flags, None)?;
        let group = &cat.algebra(name).group;
        return Ok((
            json!({
                "group": group,
                "algebra": name.as_str(),
                "case": case,
                "params": { "algebra": params_to_json(&id.params) },
                "type_r": false,
                "containment": format!("{group} x| Aut({group})_g subset-of Isom({group}, g)"),
            }),
            0,
        ));
    }
    let family = cat
        .algebra(name)
        .families
        .iter()
        .find(|f| f.case_name == case)
        .ok_or_else(|| bad_args(format!("unknown case {case:?} for {}", name.as_str())))?
        .clone();
    let id = algebra_id(cat, name, flags, Some(&family))?;
    let mparams = metric_params(&family, flags)?;
    let report = isometry_report(cat, &id, &family, &mparams)
        .map_err(|e| bad_args(e.to_string()))?;
    let code = if report.matched { 0 } else { 3 };
    Ok((report.to_json(), code))
}

fn cmd_realize(
    cat: &Catalog,
    algebra: &str,
    coords: &[String],
    flags: &ParamFlags,
) -> Result<Value, CliError> {
    let name = parse_algebra(algebra)?;
    let id = algebra_id(cat, name, flags, None)?;
    let mut map = BTreeMap::new();
    for c in coords {
        let (k, v) = c
            .split_once('=')
            .ok_or_else(|| bad_args(format!("coordinate {c:?} is not name=value")))?;
        let v: f64 = v
            .parse()
            .map_err(|_| bad_args(format!("coordinate {c:?}: bad number")))?;
        map.insert(k.to_string(), v);
    }
    let point = match make_point(&id, &map) {
        Ok(p) => p,
        Err(e @ (RealizationError::NoMatrixModel | RealizationError::MissingCoord(_))) => {
            return Err(bad_args(e.to_string()))
        }
        Err(e) => return Err(bad_args(e.to_string())),
    };
    let entries: Vec<Vec<f64>> = (0..point.matrix.rows())
        .map(|r| (0..point.matrix.cols()).map(|c| point.matrix.get(r, c)).collect())
        .collect();
    Ok(json!({
        "algebra": name.as_str(),
        "params": params_to_json(&id.params),
        "coords": point.coords,
        "matrix": entries,
    }))
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub total: usize,
    pub matched: usize,
    pub mismatched: Vec<Value>,
    pub flagged_incomplete: Vec<Value>,
    pub report: Value,
}

const NON_TYPE_R: [AlgebraName; 4] = [
    AlgebraName::A37apA1,
    AlgebraName::A46ab,
    AlgebraName::A411a,
    AlgebraName::A412,
];

const MODELED: [AlgebraName; 12] = [
    AlgebraName::A2p2A1,
    AlgebraName::TwoA2,
    AlgebraName::A32pA1,
    AlgebraName::A33pA1,
    AlgebraName::A35apA1,
    AlgebraName::A42a,
    AlgebraName::A421,
    AlgebraName::A43,
    AlgebraName::A44,
    AlgebraName::A45ab,
    AlgebraName::A47,
    AlgebraName::A49b,
];

/// The full verification pass. Failures are data, never panics: every
/// deviation lands in `mismatched`, and the structured report doubles as
/// the golden-file payload (it embeds the bracket tensors, so any catalog
/// corruption shows up as a golden difference even when all live checks
/// still pass).
pub fn verify_all(cat: &Catalog, samples: usize, seed: u64) -> VerifyOutcome {
    let mut total = 0usize;
    let mut matched = 0usize;
    let mut mismatched = Vec::new();
    let mut flagged = Vec::new();

    let mut brackets = serde_json::Map::new();
    let mut type_r_map = serde_json::Map::new();
    let mut model_map = serde_json::Map::new();
    let mut cases = Vec::new();

    for &name in &AlgebraName::ALL {
        let id = AlgebraId::canonical(name);
        total += 1;
        match get_algebra(cat, &id) {
            Ok(sc) => {
                let tensor: Vec<Vec<Vec<String>>> = (0..4)
                    .map(|k| {
                        (0..4)
                            .map(|i| (0..4).map(|j| rat_to_string(sc.c(k, i, j))).collect())
                            .collect()
                    })
                    .collect();
                brackets.insert(name.as_str().into(), json!(tensor));
                let jacobi = sc.jacobi_holds();
                let tr = is_type_r(&sc);
                let tr_want = !NON_TYPE_R.contains(&name);
                type_r_map.insert(name.as_str().into(), json!(tr));
                if jacobi && tr == tr_want {
                    matched += 1;
                } else {
                    mismatched.push(json!({
                        "algebra": name.as_str(),
                        "kind": if jacobi { "type-r" } else { "jacobi" },
                        "expected": tr_want,
                        "got": tr,
                    }));
                }
            }
            Err(e) => mismatched.push(json!({
                "algebra": name.as_str(),
                "kind": "structure",
                "error": e.to_string(),
            })),
        }
    }

    for &name in &MODELED {
        total += 1;
        let id = AlgebraId::canonical(name);
        match verify_bracket_match(cat, &id) {
            Ok(true) => {
                matched += 1;
                model_map.insert(name.as_str().into(), json!(true));
            }
            Ok(false) => {
                model_map.insert(name.as_str().into(), json!(false));
                mismatched.push(json!({
                    "algebra": name.as_str(),
                    "kind": "bracket-match",
                }));
            }
            Err(e) => mismatched.push(json!({
                "algebra": name.as_str(),
                "kind": "bracket-match",
                "error": e.to_string(),
            })),
        }
    }

    for &name in &AlgebraName::ALL {
        if cat.algebra(name).template.is_empty() {
            continue;
        }
        for f in &cat.algebra(name).families {
            for sample_idx in 0..samples {
                total += 1;
                let aparams = sample::algebra_params(name, seed, sample_idx);
                let id = match AlgebraId::new(name, aparams) {
                    Ok(id) => id,
                    Err(e) => {
                        mismatched.push(json!({
                            "algebra": name.as_str(),
                            "case": f.case_name,
                            "kind": "params",
                            "error": e.to_string(),
                        }));
                        continue;
                    }
                };
                let mparams = sample::metric_params(f, seed, sample_idx);
                let entry_base = json!({
                    "algebra": name.as_str(),
                    "case": f.case_name,
                    "sample": sample_idx,
                    "algebra_params": params_to_json(&id.params),
                    "metric_params": params_to_json(&mparams),
                });
                match isometry_report(cat, &id, f, &mparams) {
                    Ok(report) => {
                        let mut entry = entry_base.as_object().unwrap().clone();
                        entry.insert("expected".into(), json!(report.expected.as_str()));
                        entry.insert("got".into(), json!(report.stabilizer.label.as_str()));
                        entry.insert(
                            "completeness".into(),
                            json!(report.stabilizer.completeness.as_str()),
                        );
                        entry.insert("finite_order".into(), json!(report.stabilizer.finite_elements.len()));
                        entry.insert("continuous_dim".into(), json!(report.stabilizer.continuous_dim));
                        entry.insert("match".into(), json!(report.matched));
                        if report.stabilizer.completeness == Completeness::PossiblyIncomplete {
                            flagged.push(Value::Object(entry.clone()));
                        }
                        if report.matched {
                            matched += 1;
                        } else {
                            mismatched.push(Value::Object(entry.clone()));
                        }
                        cases.push(Value::Object(entry));
                    }
                    Err(e) => {
                        let mut entry = entry_base.as_object().unwrap().clone();
                        entry.insert("kind".into(), json!("pipeline"));
                        entry.insert("error".into(), json!(e.to_string()));
                        mismatched.push(Value::Object(entry.clone()));
                        cases.push(Value::Object(entry));
                    }
                }
            }
        }
    }

    let report = json!({
        "samples": samples,
        "seed": seed,
        "brackets": brackets,
        "type_r": type_r_map,
        "bracket_match": model_map,
        "cases": cases,
        "summary": {
            "total": total,
            "matched": matched,
            "mismatched": mismatched,
            "flagged_incomplete": flagged,
        },
    });
    VerifyOutcome { total, matched, mismatched, flagged_incomplete: flagged, report }
}

fn cmd_verify_all(
    cat: &Catalog,
    samples: usize,
    seed: u64,
    golden: Option<&PathBuf>,
    write_golden: bool,
) -> Result<(Value, i32), CliError> {
    if samples < 1 {
        return Err(bad_args("--samples must be at least 1"));
    }
    let outcome = verify_all(cat, samples, seed);
    let mut code = if outcome.mismatched.is_empty() { 0 } else { 1 };
    let mut golden_status = Value::Null;
    if let Some(path) = golden {
        if write_golden {
            let body = serde_json::to_string_pretty(&outcome.report).unwrap();
            std::fs::write(path, body + "\n")
                .map_err(|e| bad_args(format!("cannot write golden file: {e}")))?;
            golden_status = json!("written");
        } else {
            let body = std::fs::read_to_string(path)
                .map_err(|e| bad_args(format!("cannot read golden file: {e}")))?;
            let want: Value = serde_json::from_str(&body)
                .map_err(|e| bad_args(format!("golden file is not JSON: {e}")))?;
            if want == outcome.report {
                golden_status = json!("match");
            } else {
                golden_status = json!("mismatch");
                code = 1;
            }
        }
    }
    let mut out = outcome.report;
    out["golden"] = golden_status;
    Ok((out, code))
}

/// Parse and run; returns the process exit code. Output goes to `out`, so
/// tests can capture it.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                eprintln!("{e}");
                return 2;
            }
            // --help / --version
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let cat = Catalog::builtin();
    let result: Result<(Value, i32), CliError> = match &cli.cmd {
        Cmd::Catalog { algebra } => cmd_catalog(&cat, algebra.as_deref()).map(|v| (v, 0)),
        Cmd::CheckTypeR { algebra, params } => {
            cmd_check_type_r(&cat, algebra.as_deref(), params).map(|v| (v, 0))
        }
        Cmd::Stabilizer { algebra, case, params } => cmd_stabilizer(&cat, algebra, case, params),
        Cmd::Realize { algebra, coords, params } => {
            cmd_realize(&cat, algebra, coords, params).map(|v| (v, 0))
        }
        Cmd::VerifyAll { samples, seed, golden, write_golden } => {
            cmd_verify_all(&cat, *samples, *seed, golden.as_ref(), *write_golden)
        }
    };
    match result {
        Ok((value, code)) => {
            let body = serde_json::to_string_pretty(&value).unwrap();
            let _ = writeln!(out, "{body}");
            code
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

// keep list_metric_families linked into the public surface
#[allow(unused_imports)]
use crate::catalog::CatalogError as _CatalogError;
#[allow(dead_code)]
fn _families_surface(cat: &Catalog, id: &AlgebraId) {
    let _ = list_metric_families(cat, id);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rint;

    fn run_cli(args: &[&str]) -> (i32, Value) {
        let mut buf = Vec::new();
        let full: Vec<String> = std::iter::once("lie4".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = run(full, &mut buf);
        let text = String::from_utf8(buf).unwrap();
        let value = if text.trim().is_empty() {
            Value::Null
        } else {
            serde_json::from_str(&text).unwrap_or(Value::Null)
        };
        (code, value)
    }

    #[test]
    fn catalog_sizes_and_errors() {
        let (code, v) = run_cli(&["catalog"]);
        assert_eq!(code, 0);
        assert_eq!(v["algebras"].as_array().unwrap().len(), 16);
        let (code, v) = run_cli(&["catalog", "--algebra", "2A2"]);
        assert_eq!(code, 0);
        assert_eq!(v["name"], "2A2");
        let (code, _) = run_cli(&["catalog", "--algebra", "bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn catalog_deterministic_bytes() {
        let render = || {
            let mut buf = Vec::new();
            run(["lie4", "catalog"], &mut buf);
            buf
        };
        assert_eq!(render(), render());
    }

    #[test]
    fn check_type_r_output() {
        let (code, v) = run_cli(&["check-type-r", "--algebra", "A412"]);
        assert_eq!(code, 0);
        assert_eq!(v["type_r"], json!(false));
        let (code, v) = run_cli(&["check-type-r"]);
        assert_eq!(code, 0);
        let list = v["algebras"].as_array().unwrap();
        assert_eq!(list.len(), 16);
        let false_count = list.iter().filter(|e| e["type_r"] == json!(false)).count();
        assert_eq!(false_count, 4);
    }

    #[test]
    fn stabilizer_exit_codes_and_labels() {
        // the alias spelling of the paper-facing group, M1
        let (code, v) = run_cli(&[
            "stabilizer", "--algebra", "A48", "--case", "M1", "--alpha", "1", "--mu", "2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["label"], "Z2^2");
        assert_eq!(v["match"], json!(true));

        let (code, v) = run_cli(&[
            "stabilizer", "--algebra", "A2+2A1", "--case", "M3", "--alpha", "1", "--lambda", "1",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["label"], "Z2^2");
        assert_eq!(v["elements"].as_array().unwrap().len(), 4);

        let (code, _) = run_cli(&["stabilizer", "--algebra", "A2+2A1", "--case", "M3"]);
        assert_eq!(code, 2);
        let (code, _) = run_cli(&["stabilizer", "--algebra", "nope", "--case", "M1"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn non_type_r_is_containment_only() {
        let (code, v) = run_cli(&["stabilizer", "--algebra", "A412", "--case", "M1"]);
        assert_eq!(code, 0);
        assert_eq!(v["type_r"], json!(false));
        assert!(v["containment"].as_str().unwrap().contains("subset-of"));
        assert!(v.get("label").is_none());
        assert!(v.get("decomposition").is_none());
    }

    #[test]
    fn realize_roundtrip() {
        let (code, v) = run_cli(&[
            "realize", "--algebra", "A44", "--coord", "w=0", "--coord", "x=0", "--coord",
            "y=0", "--coord", "z=1",
        ]);
        assert_eq!(code, 0);
        let m = v["matrix"].as_array().unwrap();
        let e = std::f64::consts::E;
        assert!((m[0][1].as_f64().unwrap() + e.recip()).abs() < 1e-12);
        let (code, _) = run_cli(&["realize", "--algebra", "A412", "--coord", "x=1"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_all_clean() {
        let cat = Catalog::builtin();
        let outcome = verify_all(&cat, 1, 7);
        assert!(
            outcome.mismatched.is_empty(),
            "mismatches: {}",
            serde_json::to_string_pretty(&outcome.mismatched).unwrap()
        );
        assert!(outcome.flagged_incomplete.is_empty());
        assert_eq!(outcome.matched, outcome.total);
    }

    #[test]
    fn verify_all_deterministic() {
        let cat = Catalog::builtin();
        let a = verify_all(&cat, 2, 7);
        let b = verify_all(&cat, 2, 7);
        assert_eq!(
            serde_json::to_string(&a.report).unwrap(),
            serde_json::to_string(&b.report).unwrap()
        );
    }

    #[test]
    fn verify_all_catches_bracket_corruption() {
        let mut cat = Catalog::builtin();
        let spec = cat.algebra_mut(AlgebraName::A2p2A1);
        spec.brackets[0].coeff = crate::expr::e("2");
        let outcome = verify_all(&cat, 1, 7);
        assert!(!outcome.mismatched.is_empty());
    }

    #[test]
    fn verify_all_catches_closed_form_corruption() {
        let mut cat = Catalog::builtin();
        let spec = cat.algebra_mut(AlgebraName::A33pA1);
        spec.families[0].closed_form[0][0] = crate::expr::e("2");
        let outcome = verify_all(&cat, 1, 7);
        assert!(outcome
            .mismatched
            .iter()
            .any(|m| m["error"].as_str().unwrap_or("").contains("closed form")
                || m["kind"] == json!("pipeline")));
    }

    #[test]
    fn golden_flow() {
        let dir = std::env::temp_dir().join("lie4-golden-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("verify_all.json");
        let p = path.to_str().unwrap();
        let (code, v) = run_cli(&[
            "verify-all", "--samples", "1", "--seed", "7", "--golden", p, "--write-golden",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["golden"], "written");
        let (code, v) = run_cli(&[
            "verify-all", "--samples", "1", "--seed", "7", "--golden", p,
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["golden"], "match");
        // different seed must not match the stored golden
        let (code, v) = run_cli(&[
            "verify-all", "--samples", "1", "--seed", "8", "--golden", p,
        ]);
        assert_eq!(code, 1);
        assert_eq!(v["golden"], "mismatch");
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn exact_condition_sampler_reaches_the_dihedral_case() {
        // the conditional family must see its zero-set in sample 0
        let cat = Catalog::builtin();
        let f = cat
            .algebra(AlgebraName::TwoA2)
            .families
            .iter()
            .find(|f| f.case_name == "Mgamma")
            .unwrap();
        let p = sample::metric_params(f, 7, 0);
        let cond = crate::expr::e("mu^2 - alpha^2 - gamma^2");
        assert!(cond.eval(&p).unwrap() == rint(0) * rint(1));
        let id = AlgebraId::canonical(AlgebraName::TwoA2);
        let report = isometry_report(&cat, &id, f, &p).unwrap();
        assert_eq!(report.stabilizer.label.as_str(), "D4");
        assert!(report.matched);
    }
}
