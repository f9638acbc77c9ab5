//! Batch front end: reads JSON scenario files, evaluates them and prints
//! reports.
//!
//! Reports are JSON objects with sorted keys. Exact rationals appear as JSON
//! integers when integral and as `"p/q"` strings otherwise. Failures go to
//! standard error as one JSON object per file, carrying a `code` field, and
//! set the exit status:
//!
//! | status | meaning |
//! |--------|---------|
//! | 0 | every file evaluated |
//! | 1 | internal consistency failure |
//! | 2 | invalid input or schema |
//! | 3 | precision exhausted |
//! | 4 | non-Gorenstein model |

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::batch;
use crate::enumerative::{
    self, evaluate_class, DegreeAssignment, DivisorClass, EnumerativeError, Symbol,
};
use crate::localring::{self, BranchModel, LocalRingError, SingularPointModel};
use crate::series::{parse_polynomial, Rat, SeriesError, TruncatedSeries, MAX_DET_SIZE};
use crate::wronskian::{self, LocalLinearSystem, WronskianError};

pub const DEFAULT_PRECISION: usize = 64;
pub const MAX_PRECISION: usize = 1 << 14;
const MAX_BRANCHES: usize = 16;
const MAX_GENERATOR: u64 = 1 << 12;
const MAX_GENUS: u64 = 512;
const MAX_JET: u64 = 4096;
const MAX_DEGREE: u64 = 1_000_000;
const MAX_PENCIL_DIM: u32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "gorenstein",
    version,
    about = "Weights of singular points and Weierstrass-type divisor classes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate scenario files (or names of bundled scenarios).
    Run {
        #[arg(required = true)]
        files: Vec<String>,
        /// Series precision; overrides the scenario and disables automatic raising.
        #[arg(long)]
        precision: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List bundled scenarios, optionally filtered by a substring.
    List {
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// A scenario file.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Scenario {
    Singularity {
        r: usize,
        #[serde(default)]
        precision: Option<usize>,
        branches: Vec<BranchSpec>,
    },
    Semigroup {
        generators: Vec<u64>,
    },
    BrillSegre {
        r: i64,
        d: i64,
        g: i64,
    },
    JetChern {
        k: u64,
    },
    Pencil {
        n: u32,
        d: u64,
    },
    SwClass {
        g: u64,
    },
    #[serde(rename = "hyperflex-g3")]
    HyperflexG3 {},
}

/// One branch: its multiplier and the restrictions of the sections to it.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchSpec {
    pub name: String,
    #[serde(default = "default_variable")]
    pub variable: String,
    pub multiplier: String,
    pub sections: Vec<String>,
}

fn default_variable() -> String {
    "t".to_string()
}

/// A failed evaluation, carrying its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub exit: i32,
    pub code: &'static str,
    pub message: String,
    pub detail: Map<String, Value>,
}

impl Failure {
    fn new(exit: i32, code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            exit,
            code,
            message: message.into(),
            detail: Map::new(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self::new(2, "invalid-input", message)
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.detail.insert(key.to_string(), value);
        self
    }

    fn to_json(&self, source: &str) -> Value {
        let mut m = self.detail.clone();
        m.insert("code".into(), json!(self.code));
        m.insert("exit".into(), json!(self.exit));
        m.insert("message".into(), json!(self.message));
        m.insert("source".into(), json!(source));
        Value::Object(m)
    }
}

impl From<SeriesError> for Failure {
    fn from(e: SeriesError) -> Self {
        let f = Failure::invalid(e.to_string());
        match e {
            SeriesError::Syntax { position, .. } | SeriesError::ZeroDenominator { position } => {
                f.with("position", json!(position))
            }
            _ => f,
        }
    }
}

impl From<LocalRingError> for Failure {
    fn from(e: LocalRingError) -> Self {
        match e {
            LocalRingError::NonGorenstein(n) => {
                Failure::new(4, "non-gorenstein", e.to_string()).with("n_P", json!(n))
            }
            _ => Failure::invalid(e.to_string()),
        }
    }
}

impl From<WronskianError> for Failure {
    fn from(e: WronskianError) -> Self {
        let message = e.to_string();
        match e {
            WronskianError::Series(s) => s.into(),
            WronskianError::PrecisionExhausted {
                branch,
                precision,
                suggested,
            } => Failure::new(3, "precision-exhausted", message)
                .with("branch", json!(branch))
                .with("precision", json!(precision))
                .with("suggested_precision", json!(suggested)),
            WronskianError::RankDeficient { branch } => {
                Failure::new(2, "rank-deficient", message).with("branch", json!(branch))
            }
            WronskianError::InconsistentModel { .. } => Failure::new(1, "internal", message),
            _ => Failure::invalid(message),
        }
    }
}

impl From<EnumerativeError> for Failure {
    fn from(e: EnumerativeError) -> Self {
        match e {
            EnumerativeError::IdentityViolation { .. } => {
                Failure::new(1, "internal", e.to_string())
            }
            _ => Failure::invalid(e.to_string()),
        }
    }
}

/// A scenario shipped with the tool.
#[derive(Debug, Clone, Copy)]
pub struct Bundled {
    pub name: &'static str,
    pub provenance: &'static str,
    pub scenario: &'static str,
    /// Recorded JSON report of `run <name>` with default flags.
    pub expected: &'static str,
}

macro_rules! bundled {
    ($name:literal, $prov:literal) => {
        Bundled {
            name: $name,
            provenance: $prov,
            scenario: include_str!(concat!("../scenarios/", $name, ".json")),
            expected: include_str!(concat!("../scenarios/", $name, ".expected.json")),
        }
    };
}

/// Sorted by name.
pub const BUNDLED: &[Bundled] = &[
    bundled!("a8_cusp", "semigroup <2,9>: the A8 cusp, n_P = 8, delta 4"),
    bundled!(
        "cusp_cubic",
        "cuspidal plane cubic with its plane g^2_3: the cusp has weight 8"
    ),
    bundled!(
        "elliptic_tail_g4",
        "elliptic tail in genus 4: K(2Q) on the genus-3 side has weight g^2(g-1) = 48"
    ),
    bundled!(
        "hyperflex_g3",
        "genus-3 hyperflex class, 60 hyperflexes in a quartic pencil"
    ),
    bundled!(
        "jet_c2_3",
        "second Chern class of the third jet bundle: 11 eta^2 + 18 eta zeta + 6 zeta^2"
    ),
    bundled!(
        "node_cubic",
        "nodal plane cubic with its plane g^2_3: two branches of order 3, weight 6"
    ),
    bundled!(
        "non_gorenstein_semigroup",
        "semigroup <3,4,5>: conductor 3, delta 2, not Gorenstein"
    ),
    bundled!(
        "quartic_pencil",
        "general pencil of plane quartics: 27 singular members, 60 hyperflexes"
    ),
    bundled!(
        "quartic_semigroup",
        "semigroup <3,4>: gaps 1,2,5, the triple point of x^4 = y^3 z"
    ),
    bundled!(
        "smooth_hyperflex",
        "hyperflex on a smooth plane quartic, sections 1, t, t^4: weight 2"
    ),
    bundled!(
        "sw_class_g3",
        "special Weierstrass point class in genus 3: 452 lambda - 48 delta0 - 124 delta1"
    ),
    bundled!(
        "triple_point",
        "canonical system at the triple point of x^4 = y^3 z: weight 22, extraweight 4"
    ),
];

pub fn bundled(name: &str) -> Option<&'static Bundled> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    BUNDLED.iter().find(|b| b.name == stem)
}

/// Bundled scenarios whose name or provenance contains `filter`.
pub fn list_bundled(filter: Option<&str>) -> Vec<&'static Bundled> {
    let needle = filter.unwrap_or("").to_lowercase();
    BUNDLED
        .iter()
        .filter(|b| b.name.contains(&needle) || b.provenance.to_lowercase().contains(&needle))
        .collect()
}

/// Renders an exact rational: a JSON integer when it is integral and fits,
/// a decimal string for larger integers, `"p/q"` otherwise.
pub fn rational_json(q: &Rat) -> Value {
    if q.is_integer() {
        integer_json(q.numer())
    } else {
        json!(q.to_string())
    }
}

pub fn integer_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn symbol_key(s: Symbol) -> String {
    match s {
        Symbol::Lambda => "lambda".to_string(),
        Symbol::Delta(i) => format!("delta{i}"),
    }
}

fn class_json(c: &DivisorClass) -> Value {
    let coeffs: Map<String, Value> = c
        .symbols()
        .map(|s| {
            (
                symbol_key(s),
                rational_json(c.coefficient(s).expect("own symbol")),
            )
        })
        .collect();
    json!({ "coefficients": coeffs, "text": c.to_string(), "genus": c.genus() })
}

/// Parses scenario text, validating the schema and size limits.
pub fn parse_scenario(text: &str) -> Result<Scenario, Failure> {
    let scenario: Scenario =
        serde_json::from_str(text).map_err(|e| Failure::new(2, "invalid-schema", e.to_string()))?;
    validate(&scenario)?;
    Ok(scenario)
}

fn limit(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::invalid(format!("{what} is out of range")))
    }
}

fn validate(s: &Scenario) -> Result<(), Failure> {
    match s {
        Scenario::Singularity {
            r,
            precision,
            branches,
        } => {
            limit(*r < MAX_DET_SIZE, "r")?;
            limit(
                precision.is_none_or(|p| (1..=MAX_PRECISION).contains(&p)),
                "precision",
            )?;
            limit((1..=MAX_BRANCHES).contains(&branches.len()), "branch count")?;
            for b in branches {
                if b.sections.len() != r + 1 {
                    return Err(Failure::invalid(format!(
                        "branch '{}' has {} sections, expected r + 1 = {}",
                        b.name,
                        b.sections.len(),
                        r + 1
                    ))
                    .with("branch", json!(b.name)));
                }
            }
            Ok(())
        }
        Scenario::Semigroup { generators } => limit(
            !generators.is_empty()
                && generators.len() <= 64
                && generators.iter().all(|&g| g <= MAX_GENERATOR),
            "generators",
        ),
        Scenario::BrillSegre { r, d, g } => limit(
            *r >= 0 && [r, d, g].iter().all(|x| x.unsigned_abs() <= MAX_DEGREE),
            "(r, d, g)",
        ),
        Scenario::JetChern { k } => limit(*k <= MAX_JET, "k"),
        Scenario::Pencil { n, d } => limit(
            (1..=MAX_PENCIL_DIM).contains(n) && (1..=MAX_DEGREE).contains(d),
            "(n, d)",
        ),
        Scenario::SwClass { g } => limit((1..=MAX_GENUS).contains(g), "g"),
        Scenario::HyperflexG3 {} => Ok(()),
    }
}

/// A successful evaluation: the report and any notices for standard error.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub report: Value,
    pub notices: Vec<String>,
}

/// Evaluates a validated scenario. `precision` is the command-line override.
pub fn evaluate(s: &Scenario, precision: Option<usize>) -> Result<Evaluation, Failure> {
    let mut notices = Vec::new();
    let report = match s {
        Scenario::Singularity {
            r,
            precision: own,
            branches,
        } => singularity(*r, precision.or(*own), branches, &mut notices)?,
        Scenario::Semigroup { generators } => {
            let sg = localring::semigroup_from_generators(generators)?;
            let rep = localring::gorenstein_test_monomial(&sg);
            json!({
                "kind": "semigroup",
                "generators": sg.generators,
                "gaps": sg.gaps,
                "delta": sg.delta,
                "conductor": sg.conductor,
                "frobenius": sg.frobenius,
                "symmetric": sg.symmetric,
                "n_P": rep.n_p,
                "gorenstein": rep.gorenstein,
            })
        }
        Scenario::BrillSegre { r, d, g } => json!({
            "kind": "brill-segre",
            "r": r, "d": d, "g": g,
            "total_weight": integer_json(&wronskian::brill_segre(*r, *d, *g)),
        }),
        Scenario::JetChern { k } => {
            let (c1_zeta, c1_eta) = enumerative::jet_c1(*k);
            let (a, b, c) = enumerative::jet_c2(*k);
            json!({
                "kind": "jet-chern",
                "k": k,
                "c1": { "eta": integer_json(&c1_eta), "zeta": integer_json(&c1_zeta) },
                "c2": {
                    "eta^2": integer_json(&a),
                    "eta*zeta": integer_json(&b),
                    "zeta^2": integer_json(&c),
                },
            })
        }
        Scenario::Pencil { n, d } => {
            let mut m = Map::new();
            m.insert("kind".into(), json!("pencil"));
            m.insert("n".into(), json!(n));
            m.insert("d".into(), json!(d));
            m.insert(
                "singular_members".into(),
                integer_json(&enumerative::pencil_nodes(*n, *d)),
            );
            if *n == 2 {
                m.insert(
                    "hyperflexes".into(),
                    integer_json(&enumerative::hyperflex_count(*d)?),
                );
            }
            Value::Object(m)
        }
        Scenario::SwClass { g } => sw_class_report(*g)?,
        Scenario::HyperflexG3 {} => {
            let h = enumerative::hyperflex_class_g3()?;
            let quartic = evaluate_class(&h.class, &DegreeAssignment::quartic_pencil())?;
            let discrepancy = match &h.discrepancy {
                Some(d) => json!({
                    "symbol": symbol_key(d.symbol),
                    "computed": rational_json(&d.computed),
                    "printed": rational_json(&d.printed),
                }),
                None => Value::Null,
            };
            json!({
                "kind": "hyperflex-g3",
                "class": class_json(&h.class),
                "hyperelliptic_class": class_json(&enumerative::hyperelliptic_class_g3()),
                "quartic_pencil_degree": rational_json(&quartic),
                "discrepancy": discrepancy,
            })
        }
    };
    Ok(Evaluation { report, notices })
}

fn sw_class_report(g: u64) -> Result<Value, Failure> {
    let sw = enumerative::sw_class(g)?;
    let hm = DegreeAssignment::harris_mumford(g);
    let pencil_degree = if g >= 2 {
        rational_json(&evaluate_class(&sw.final_class, &hm)?)
    } else {
        Value::Null
    };
    Ok(json!({
        "kind": "sw-class",
        "g": g,
        "m": sw.m.values().map(integer_json).collect::<Vec<_>>(),
        "c": sw.c.values().map(rational_json).collect::<Vec<_>>(),
        "b": sw.b.values().map(rational_json).collect::<Vec<_>>(),
        "a0": rational_json(&sw.a0),
        "lambda": rational_json(&sw.lambda_coeff),
        "class": class_json(&sw.final_class),
        "elliptic_tail_degree": pencil_degree,
    }))
}

fn singularity(
    r: usize,
    explicit: Option<usize>,
    specs: &[BranchSpec],
    notices: &mut Vec<String>,
) -> Result<Value, Failure> {
    let located = |name: &str, what: String, f: Failure| {
        let message = format!("branch '{name}', {what}: {}", f.message);
        let mut f = f.with("branch", json!(name)).with("field", json!(what));
        f.message = message;
        f
    };

    // Full coefficient lists first: degrees and conductor orders fix the
    // certification bound before any truncation happens.
    let mut parsed = Vec::with_capacity(specs.len());
    for b in specs {
        let poly = |what: String, text: &str| {
            parse_polynomial(text, Some(&b.variable))
                .map(|(c, _)| c)
                .map_err(|e| located(&b.name, what, e.into()))
        };
        let multiplier = poly("multiplier".into(), &b.multiplier)?;
        let sections = b
            .sections
            .iter()
            .enumerate()
            .map(|(j, s)| poly(format!("section {j}"), s))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push((multiplier, sections));
    }
    let conductor = parsed
        .iter()
        .filter_map(|(m, _)| m.iter().position(|c| !c.is_zero()))
        .max()
        .unwrap_or(0);
    let max_degree = parsed
        .iter()
        .flat_map(|(_, s)| s)
        .map(|c| c.len().saturating_sub(1))
        .max()
        .unwrap_or(0);
    let certified = wronskian::certification_precision(r, max_degree, conductor);
    let precision = match explicit {
        Some(p) => p,
        None if certified > DEFAULT_PRECISION => {
            limit(certified <= MAX_PRECISION, "required precision")?;
            notices.push(format!(
                "precision raised from {DEFAULT_PRECISION} to {certified} to certify all orders"
            ));
            certified
        }
        None => DEFAULT_PRECISION,
    };

    let mut models = Vec::with_capacity(specs.len());
    let mut columns: Vec<Vec<TruncatedSeries>> = vec![Vec::with_capacity(specs.len()); r + 1];
    for (b, (multiplier, sections)) in specs.iter().zip(parsed) {
        let m = TruncatedSeries::from_polynomial(multiplier, precision);
        models.push(
            BranchModel::new(b.name.clone(), m)
                .map_err(|e| located(&b.name, "multiplier".into(), e.into()))?,
        );
        for (j, s) in sections.into_iter().enumerate() {
            columns[j].push(TruncatedSeries::from_polynomial(s, precision));
        }
    }
    let point = SingularPointModel::new(models)?;
    let system = LocalLinearSystem::new(columns).map_err(|e| name_branch(e, specs))?;
    let weight = wronskian::point_weight(&point, &system)?;

    let branches: Vec<Value> = specs
        .iter()
        .zip(&point.branches)
        .enumerate()
        .map(|(i, (spec, model))| {
            let profile = &weight.branch_profiles[i];
            json!({
                "name": spec.name,
                "variable": spec.variable,
                "conductor_order": model.conductor_order,
                "wronskian_order": weight.per_branch_order[i],
                "wronskian_leading_coefficient": rational_json(&weight.leading_coefficients[i]),
                "vanishing_sequence": profile.vanishing_sequence,
                "gap_sequence": profile.gap_sequence,
                "vanishing_weight": profile.weight,
            })
        })
        .collect();
    Ok(json!({
        "kind": "singularity",
        "r": r,
        "precision": precision,
        "n_P": point.n_p,
        "delta_P": point.delta_p,
        "branches": branches,
        "per_branch_orders": weight.per_branch_order,
        "total_weight": weight.total_weight,
        "lower_bound": weight.lower_bound,
        "extraweight": weight.extraweight,
    }))
}

/// Validation errors index branches by position; report their names instead.
fn name_branch(e: WronskianError, specs: &[BranchSpec]) -> WronskianError {
    let name = |b: &str| {
        b.parse::<usize>()
            .ok()
            .and_then(|i| specs.get(i))
            .map_or_else(|| b.to_string(), |s| s.name.clone())
    };
    match e {
        WronskianError::ZeroRestriction { section, branch } => WronskianError::ZeroRestriction {
            section,
            branch: name(&branch),
        },
        WronskianError::PrecisionExhausted {
            branch,
            precision,
            suggested,
        } => WronskianError::PrecisionExhausted {
            branch: name(&branch),
            precision,
            suggested,
        },
        other => other,
    }
}

/// Reads `source` as a file, falling back to a bundled scenario of that name.
pub fn load(source: &str) -> Result<String, Failure> {
    let path = Path::new(source);
    if path.exists() {
        return std::fs::read_to_string(path)
            .map_err(|e| Failure::new(2, "io", format!("cannot read {source}: {e}")));
    }
    bundled(source)
        .map(|b| b.scenario.to_string())
        .ok_or_else(|| {
            Failure::new(
                2,
                "io",
                format!("no such file or bundled scenario: {source}"),
            )
        })
}

/// Loads, validates and evaluates one source.
pub fn run_source(source: &str, precision: Option<usize>) -> Result<Evaluation, Failure> {
    let text = load(source)?;
    let scenario = parse_scenario(&text)?;
    evaluate(&scenario, precision)
}

/// Pretty JSON with a trailing newline, the format of recorded reports.
pub fn render_json(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("values always serialize");
    s.push('\n');
    s
}

/// `key: value` lines, nested keys joined with dots, arrays kept inline.
pub fn render_text(report: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, v) in m {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, v, out);
                }
            }
            Value::Array(items) if items.iter().any(Value::is_object) => {
                for (i, v) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), v, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
            other => out.push_str(&format!("{prefix}: {other}\n")),
        }
    }
    let mut out = String::new();
    walk("", report, &mut out);
    out
}

/// Runs the command line `args` (including the program name), writing
/// reports to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if status == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return status;
        }
    };
    match cli.command {
        Command::List { filter, format } => {
            let entries = list_bundled(filter.as_deref());
            let _ = match format {
                Format::Text => entries
                    .iter()
                    .try_for_each(|b| writeln!(out, "{:<26} {}", b.name, b.provenance)),
                Format::Json => {
                    let items: Vec<Value> = entries
                        .iter()
                        .map(|b| json!({ "name": b.name, "provenance": b.provenance }))
                        .collect();
                    write!(out, "{}", render_json(&Value::Array(items)))
                }
            };
            0
        }
        Command::Run {
            files,
            precision,
            format,
        } => {
            if let Some(p) = precision {
                if !(1..=MAX_PRECISION).contains(&p) {
                    let f = Failure::invalid(format!("--precision must be in 1..={MAX_PRECISION}"));
                    let _ = writeln!(err, "{}", f.to_json("--precision"));
                    return f.exit;
                }
            }
            let results = batch::map(&files, |f| run_source(f, precision));
            let mut status = 0;
            for (source, result) in files.iter().zip(results) {
                match result {
                    Ok(eval) => {
                        for n in &eval.notices {
                            let _ = writeln!(err, "{}", json!({ "notice": n, "source": source }));
                        }
                        let text = match format {
                            Format::Json => render_json(&eval.report),
                            Format::Text => render_text(&eval.report),
                        };
                        let _ = out.write_all(text.as_bytes());
                    }
                    Err(f) => {
                        let _ = writeln!(err, "{}", f.to_json(source));
                        if status == 0 {
                            status = f.exit;
                        }
                    }
                }
            }
            status
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(text: &str) -> Value {
        evaluate(&parse_scenario(text).unwrap(), None)
            .unwrap()
            .report
    }

    #[test]
    fn rationals_render_canonically() {
        assert_eq!(rational_json(&crate::series::int(-48)), json!(-48));
        assert_eq!(rational_json(&crate::series::rat(6, 4)), json!("3/2"));
        let big = BigInt::from(u64::MAX) * 4;
        assert_eq!(integer_json(&big), json!(big.to_string()));
    }

    #[test]
    fn sw_class_scenario() {
        let r = report(r#"{"kind":"sw-class","g":3}"#);
        assert_eq!(r["class"]["coefficients"]["lambda"], json!(452));
        assert_eq!(r["class"]["coefficients"]["delta0"], json!(-48));
        assert_eq!(r["class"]["coefficients"]["delta1"], json!(-124));
        assert_eq!(r["elliptic_tail_degree"], json!(0));
    }

    #[test]
    fn schema_errors() {
        for bad in [
            r#"{"kind":"sw-class"}"#,
            r#"{"kind":"sw-class","g":3,"extra":1}"#,
            r#"{"kind":"nope"}"#,
            r#"{"kind":"semigroup","generators":[100000]}"#,
            r#"{"kind":"singularity","r":9,"branches":[]}"#,
            "not json",
        ] {
            assert_eq!(parse_scenario(bad).unwrap_err().exit, 2, "{bad}");
        }
    }

    #[test]
    fn singularity_failures() {
        let odd = r#"{"kind":"singularity","r":1,"branches":[
            {"name":"P","multiplier":"t^3","sections":["1","t"]}]}"#;
        let f = evaluate(&parse_scenario(odd).unwrap(), None).unwrap_err();
        assert_eq!((f.exit, f.code), (4, "non-gorenstein"));

        let triple = bundled("triple_point").unwrap().scenario;
        let f = evaluate(&parse_scenario(triple).unwrap(), Some(12)).unwrap_err();
        assert_eq!((f.exit, f.code), (3, "precision-exhausted"));
        assert_eq!(f.detail["branch"], json!("P"));

        let typo = r#"{"kind":"singularity","r":1,"branches":[
            {"name":"P","multiplier":"t^2","sections":["1","s"]}]}"#;
        let f = evaluate(&parse_scenario(typo).unwrap(), None).unwrap_err();
        assert_eq!(f.exit, 2);
        assert_eq!(f.detail["field"], json!("section 1"));
    }

    #[test]
    fn text_format_flattens() {
        let t = render_text(&json!({"a": {"b": [1, 2]}, "c": "x"}));
        assert_eq!(t, "a.b: [1,2]\nc: x\n");
    }
}
