//! Command-line front end. `run` is pure apart from reading input files
//! and stdin, and returns what the binary should print and its exit code.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::cohomology::CohomologyBasis;
use crate::decide::{decide_all, decide_properties, inertia_value, DecideOptions, Property};
use crate::error::{Error, Result};
use crate::exactla::{inertia, SymRatMatrix};
use crate::graph::LabeledGraph;
use crate::json::{labeled_graph_from_value, labeled_graph_to_value, parse_labeled_graph, rational_vec_to_value};
use crate::malpha::{build_malpha, GluingMatrix};
use crate::operators::{admissible_s_functions, build_a_lambda, build_a_plus, build_h, sign_components};
use crate::rational;

/// Environment variable overriding the weak-singularity dimension cap.
pub const SUBSET_CAP_ENV: &str = "BKN_SUBSET_CAP";

const EMBEDDED_CORPUS: &str = include_str!("selftest_corpus.json");

#[derive(Debug, Parser)]
#[command(name = "gmspectral", version, about = "Spectral decisions for labeled graphs of graph-manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a labeled graph and list its defects.
    Validate {
        /// JSON file, or `-` for stdin.
        input: PathBuf,
    },
    /// Print one operator with its inertia and kernel.
    Operators {
        input: PathBuf,
        /// `aplus`, `alambda:CLASS` or `h:S` (indices start at 0).
        #[arg(long, default_value = "aplus")]
        which: String,
        /// Also print decimal approximations.
        #[arg(long)]
        float: bool,
    },
    /// Decide a single property, or all of them without the report extras.
    Decide {
        input: PathBuf,
        /// One of I, HI, E, VE, F, VF, NPC.
        #[arg(long)]
        property: Option<String>,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        float: bool,
    },
    /// Full report: seven verdicts, witnesses, implication check.
    Report {
        input: PathBuf,
        /// Include witness vectors and solutions.
        #[arg(long)]
        witness: bool,
        /// Include spectral data for every admissible s-function.
        #[arg(long)]
        all_s: bool,
        #[arg(long)]
        float: bool,
    },
    /// Emit the labeled graph of M(α) for α = [[a, b], [c, d]].
    Malpha {
        /// `a,b,c,d`
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Run the built-in corpus of worked examples.
    Selftest {
        /// Replace the built-in corpus with a JSON file.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn json(value: &Value, code: i32) -> Self {
        Outcome {
            stdout: pretty(value),
            stderr: String::new(),
            code,
        }
    }

    fn error(err: impl std::fmt::Display, code: i32) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Parses `args` (program name first) and runs the command. `stdin` is
/// read only when an input path is `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, subset_cap: Option<usize>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let mut opts = DecideOptions::default();
    if let Some(cap) = subset_cap {
        opts.subset_cap = cap;
    }
    execute(cli.command, stdin, &opts)
}

/// Cap from [`SUBSET_CAP_ENV`], if set to a valid number.
pub fn subset_cap_from_env() -> Option<usize> {
    std::env::var(SUBSET_CAP_ENV).ok()?.trim().parse().ok()
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Schema(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::Schema(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn load(path: &PathBuf, stdin: &mut dyn Read) -> Result<LabeledGraph> {
    parse_labeled_graph(&read_input(path, stdin)?)
}

fn execute(command: Command, stdin: &mut dyn Read, opts: &DecideOptions) -> Outcome {
    let result = match command {
        Command::Validate { input } => return cmd_validate(&input, stdin),
        Command::Operators {
            input,
            which,
            float,
        } => load(&input, stdin).and_then(|g| cmd_operators(&g, &which, float)),
        Command::Decide {
            input,
            property,
            witness,
            float,
        } => load(&input, stdin).and_then(|g| cmd_decide(&g, property.as_deref(), witness, float, opts)),
        Command::Report {
            input,
            witness,
            all_s,
            float,
        } => load(&input, stdin).and_then(|g| cmd_report(&g, witness, all_s, float, opts)),
        Command::Malpha { matrix } => GluingMatrix::parse(&matrix)
            .map(|m| Outcome::json(&labeled_graph_to_value(&build_malpha(&m)), 0)),
        Command::Selftest { corpus } => {
            let text = match corpus {
                Some(path) => read_input(&path, stdin),
                None => Ok(EMBEDDED_CORPUS.to_string()),
            };
            text.and_then(|t| cmd_selftest(&t, opts))
        }
    };
    result.unwrap_or_else(|e| Outcome::error(e, 2))
}

fn cmd_validate(input: &PathBuf, stdin: &mut dyn Read) -> Outcome {
    let g = match load(input, stdin) {
        Ok(g) => g,
        Err(e) => return Outcome::json(&json!({ "valid": false, "errors": [e.to_string()] }), 2),
    };
    let diagnostics: Vec<String> = g.validate().iter().map(|d| d.to_string()).collect();
    let ok = diagnostics.is_empty();
    let mut obj = json!({
        "valid": ok,
        "errors": diagnostics,
        "vertices": g.n_vertices(),
        "edges": g.n_edges(),
        "rho": g.rho().is_some(),
    });
    if let Ok(basis) = CohomologyBasis::new(&g) {
        obj["cyclomatic"] = json!(basis.cyclomatic());
    }
    Outcome::json(&obj, if ok { 0 } else { 2 })
}

fn matrix_value(m: &SymRatMatrix, float: bool) -> Map<String, Value> {
    let rows: Vec<Value> = m.to_rows().iter().map(|r| rational_vec_to_value(r)).collect();
    let mut obj = Map::new();
    obj.insert("matrix".into(), Value::Array(rows));
    obj.insert("inertia".into(), inertia_value(&inertia(m)));
    obj.insert(
        "kernel".into(),
        Value::Array(m.kernel_basis().iter().map(|k| rational_vec_to_value(k)).collect()),
    );
    if float {
        let approx: Vec<Vec<f64>> = m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(rational::approx).collect())
            .collect();
        obj.insert(
            "float".into(),
            json!({"note": "decimal approximations, not authoritative", "matrix": approx}),
        );
    }
    obj
}

fn index_arg(which: &str, text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::Schema(format!("bad index in --which {which:?}")))
}

/// The operator named by `which`, built on the oriented graph.
pub fn cmd_operators(g: &LabeledGraph, which: &str, float: bool) -> Result<Outcome> {
    g.require_decidable()?;
    let (g, flipped) = g.normalize_orientation();
    let (name, arg) = which.split_once(':').unwrap_or((which, ""));
    let (m, mut extra) = match name {
        "aplus" => (build_a_plus(&g)?, Map::new()),
        "alambda" => {
            let basis = CohomologyBasis::new(&g)?;
            let index = if arg.is_empty() { 0 } else { index_arg(which, arg)? };
            let lambda = basis.representative(index)?;
            let mut extra = Map::new();
            extra.insert("class".into(), json!(index));
            extra.insert("classes".into(), json!(basis.class_count()?));
            extra.insert("minus_edges".into(), json!(lambda.minus_edges()));
            (build_a_lambda(&g, &lambda)?, extra)
        }
        "h" => {
            let all = admissible_s_functions(&sign_components(&g));
            let index = if arg.is_empty() { 0 } else { index_arg(which, arg)? };
            let s = all.get(index).ok_or(Error::OutOfRange {
                index,
                limit: all.len(),
            })?;
            let mut extra = Map::new();
            extra.insert("s".into(), json!(s.values()));
            extra.insert("s_index".into(), json!(index));
            extra.insert("s_count".into(), json!(all.len()));
            (build_h(&g, s)?, extra)
        }
        _ => {
            return Err(Error::Schema(format!(
                "--which must be aplus, alambda:CLASS or h:S, got {which:?}"
            )))
        }
    };
    extra.insert("operator".into(), json!(name));
    extra.insert("orientation_flipped".into(), json!(flipped));
    extra.extend(matrix_value(&m, float));
    Ok(Outcome::json(&Value::Object(extra), 0))
}

pub fn cmd_decide(
    g: &LabeledGraph,
    property: Option<&str>,
    witness: bool,
    float: bool,
    opts: &DecideOptions,
) -> Result<Outcome> {
    let props: Vec<Property> = match property {
        Some(name) => vec![Property::parse(name)
            .ok_or_else(|| Error::Schema(format!("unknown property {name:?}")))?],
        None => Property::ALL.to_vec(),
    };
    let mut out = Map::new();
    for (p, d) in decide_properties(g, &props, opts)? {
        let mut obj = Map::new();
        obj.insert("verdict".into(), json!(d.verdict.as_str()));
        obj.insert("notes".into(), json!(d.notes));
        if let Some(w) = &d.witness {
            obj.insert(
                "witness".into(),
                if witness {
                    w.to_value(g, float)
                } else {
                    json!({"source": w.source.as_str(), "exact": w.is_exact()})
                },
            );
        }
        out.insert(p.name().into(), Value::Object(obj));
    }
    Ok(Outcome::json(&Value::Object(out), 0))
}

/// Exit code 3 when the report violates the implication diagram.
pub fn cmd_report(
    g: &LabeledGraph,
    witness: bool,
    all_s: bool,
    float: bool,
    opts: &DecideOptions,
) -> Result<Outcome> {
    let report = decide_all(g, opts)?;
    let code = if report.is_consistent() { 0 } else { 3 };
    Ok(Outcome::json(&report.to_value(g, witness, all_s, float), code))
}

fn expect_matrix(case: &Value, key: &str, actual: &SymRatMatrix, failures: &mut Vec<String>) {
    let Some(want) = case.get(key) else { return };
    let got: Vec<Value> = actual.to_rows().iter().map(|r| rational_vec_to_value(r)).collect();
    let want_norm = want.as_array().map(|rows| {
        rows.iter()
            .map(|r| {
                crate::json::rational_vec_from_value(r)
                    .map(|v| rational_vec_to_value(&v))
                    .unwrap_or(Value::Null)
            })
            .collect::<Vec<_>>()
    });
    if want_norm.as_ref() != Some(&got) {
        failures.push(format!("{key}: expected {want}, got {}", Value::Array(got)));
    }
}

fn expect_inertia(case: &Value, key: &str, m: &SymRatMatrix, failures: &mut Vec<String>) {
    let Some(want) = case.get(key) else { return };
    let i = inertia(m);
    let got = json!([i.positive, i.zero, i.negative]);
    if *want != got {
        failures.push(format!("{key}: expected {want}, got {got}"));
    }
}

fn run_case(case: &Value, opts: &DecideOptions) -> Result<Vec<String>> {
    let g = match (case.get("malpha"), case.get("graph")) {
        (Some(m), _) => {
            let entries: Vec<i64> = serde_json::from_value(m.clone())
                .map_err(|e| Error::Schema(format!("malpha: {e}")))?;
            let arr: [i64; 4] = entries
                .try_into()
                .map_err(|_| Error::Schema("malpha needs four entries".into()))?;
            build_malpha(&GluingMatrix::from_array(arr)?)
        }
        (None, Some(doc)) => labeled_graph_from_value(doc.clone())?,
        (None, None) => return Err(Error::Schema("case needs \"malpha\" or \"graph\"".into())),
    };
    let (norm, _) = g.normalize_orientation();
    let mut failures = Vec::new();
    let a_plus = build_a_plus(&norm)?;
    expect_matrix(case, "aplus", &a_plus, &mut failures);
    expect_inertia(case, "aplus_inertia", &a_plus, &mut failures);
    if case.get("h").is_some() || case.get("h_inertia").is_some() {
        let s = admissible_s_functions(&sign_components(&norm)).remove(0);
        let h = build_h(&norm, &s)?;
        expect_matrix(case, "h", &h, &mut failures);
        expect_inertia(case, "h_inertia", &h, &mut failures);
    }
    if case.get("alambda").is_some() {
        let lambda = CohomologyBasis::new(&norm)?.representative(0)?;
        expect_matrix(case, "alambda", &build_a_lambda(&norm, &lambda)?, &mut failures);
    }
    let report = decide_all(&g, opts)?;
    if !report.is_consistent() {
        failures.push(format!("inconsistent: {}", report.violations.join(", ")));
    }
    if let Some(Value::Object(want)) = case.get("verdicts") {
        for (name, v) in want {
            let p = Property::parse(name)
                .ok_or_else(|| Error::Schema(format!("unknown property {name:?}")))?;
            let got = report.verdict(p).as_str();
            if v.as_str() != Some(got) {
                failures.push(format!("{name}: expected {v}, got {got:?}"));
            }
        }
    }
    Ok(failures)
}

/// One `PASS`/`FAIL` line per case; exit code 1 if any case fails.
pub fn cmd_selftest(corpus: &str, opts: &DecideOptions) -> Result<Outcome> {
    let cases: Vec<Value> =
        serde_json::from_str(corpus).map_err(|e| Error::Schema(format!("corpus: {e}")))?;
    let mut out = Outcome::default();
    if cases.is_empty() {
        out.stderr.push_str("warning: empty corpus, nothing to check\n");
    }
    let mut failed = 0;
    for (i, case) in cases.iter().enumerate() {
        let name = case
            .get("name")
            .and_then(Value::as_str)
            .map_or_else(|| format!("case {i}"), str::to_string);
        let failures = run_case(case, opts).unwrap_or_else(|e| vec![e.to_string()]);
        if failures.is_empty() {
            out.stdout.push_str(&format!("PASS {name}\n"));
        } else {
            failed += 1;
            out.stdout
                .push_str(&format!("FAIL {name}: {}\n", failures.join("; ")));
        }
    }
    out.stdout.push_str(&format!(
        "{} passed, {failed} failed\n",
        cases.len() - failed
    ));
    out.code = if failed == 0 { 0 } else { 1 };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> Outcome {
        let mut input = stdin.as_bytes();
        run(
            std::iter::once("gmspectral").chain(args.iter().copied()),
            &mut input,
            None,
        )
    }

    #[test]
    fn embedded_corpus_passes() {
        let out = run_args(&["selftest"], "");
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert_eq!(out.stdout.matches("PASS").count(), 6);
    }

    #[test]
    fn corrupted_case_fails() {
        let mut cases: Vec<Value> = serde_json::from_str(EMBEDDED_CORPUS).unwrap();
        cases[0]["aplus"][1][1] = json!("4");
        let out = cmd_selftest(&Value::Array(cases).to_string(), &DecideOptions::default()).unwrap();
        assert_eq!(out.code, 1);
        assert!(out.stdout.starts_with("FAIL"));
    }

    #[test]
    fn empty_corpus_warns() {
        let out = cmd_selftest("[]", &DecideOptions::default()).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.stderr.contains("warning"));
    }

    #[test]
    fn malpha_then_report() {
        let graph = run_args(&["malpha", "--matrix", "0,1,1,1"], "");
        assert_eq!(graph.code, 0);
        let out = run_args(&["report", "-"], &graph.stdout);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["E"], "yes");
        assert_eq!(v["VF"], "yes");
        assert_eq!(v["F"], "no");
        assert_eq!(v["NPC"], "no");
        assert_eq!(v["consistency"], "ok");
    }

    #[test]
    fn input_errors_exit_2() {
        assert_eq!(run_args(&["report", "-"], "{nope").code, 2);
        assert_eq!(run_args(&["malpha", "--matrix", "1,0,0,1"], "").code, 2);
        assert_eq!(run_args(&["frobnicate"], "").code, 2);
    }

    #[test]
    fn operators_out_of_range() {
        let graph = run_args(&["malpha", "--matrix", "1,1,4,3"], "").stdout;
        let out = run_args(&["operators", "-", "--which", "alambda:1"], &graph);
        assert_eq!(out.code, 2);
        let out = run_args(&["operators", "-", "--which", "aplus"], &graph);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["inertia"], json!({"positive": 3, "zero": 0, "negative": 0}));
    }
}
