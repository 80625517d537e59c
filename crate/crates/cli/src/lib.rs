//! Driver behind the `lffc` binary: builds a stratification from a backend
//! description, runs the L-function algorithms and the requested checks, and
//! renders the result as JSON or as a table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use lffc_core::dirfn::{dirichlet_stratification, CharComponent, DirichletChar};
use lffc_core::ellfn::{ell_stratification, EllCurveOverFqT};
use lffc_core::ffpoly::{parse_poly, parse_ratfunc, places_up_to, FqField};
use lffc_core::strat::{
    full_product, verify_epsilon_modulus, verify_functional_equation, verify_riemann_hypothesis,
};
use lffc_core::zetafn::{places_by_degree, zeta_stratification, HyperellipticModel, ZetaCurve};
use lffc_core::{alg_epsilon, alg_funceq, CycloElem, FuncEqData, Poly, Rational, Stratification};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use thiserror::Error;

pub mod generic;
mod render;
pub mod wire;

use wire::{mentions_cyclo, poly_to_wire, WireField};

/// Relative tolerance of the `|eps|` check.
pub const MODULUS_TOL: f64 = 1e-9;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] lffc_core::Error),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Backend {
    /// `None` selects `F_q(t)` itself.
    Zeta { q: String, hyperelliptic: Option<String> },
    Ell { q: String, a: [String; 5] },
    Dirichlet { q: String, components: Vec<String> },
    Generic { input: Value },
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::Zeta { .. } => "zeta",
            Backend::Ell { .. } => "ell",
            Backend::Dirichlet { .. } => "dirichlet",
            Backend::Generic { .. } => "generic",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub enum EpsilonMode {
    /// Use the backend's value when it has one, otherwise compute it.
    #[default]
    Auto,
    /// The local sign table (elliptic curves only).
    Table,
    Compute,
    Known(String),
}

impl FromStr for EpsilonMode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "auto" => EpsilonMode::Auto,
            "table" => EpsilonMode::Table,
            "compute" => EpsilonMode::Compute,
            "" => return Err(CliError::Input("empty --epsilon".into())),
            v => EpsilonMode::Known(v.to_string()),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    FuncEq,
    Rh,
    Modulus,
    Degree,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::FuncEq, Check::Rh, Check::Modulus, Check::Degree];

    pub fn name(self) -> &'static str {
        match self {
            Check::FuncEq => "funceq",
            Check::Rh => "rh",
            Check::Modulus => "modulus",
            Check::Degree => "degree",
        }
    }

    /// Comma-separated names; `none` and the empty string select nothing.
    pub fn parse_list(s: &str) -> Result<BTreeSet<Check>, CliError> {
        let s = s.trim();
        if s.is_empty() || s == "none" {
            return Ok(BTreeSet::new());
        }
        if s == "all" {
            return Ok(Check::ALL.into_iter().collect());
        }
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Input(format!("unknown check `{s}` (funceq, rh, modulus, degree)")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "table" => Ok(OutputFormat::Table),
            _ => Err(CliError::Input(format!("unknown format `{s}` (json, table)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub backend: Backend,
    pub epsilon: EpsilonMode,
    pub checks: BTreeSet<Check>,
    pub full_product: bool,
    pub rh_tol: f64,
    pub format: OutputFormat,
    pub workers: Option<usize>,
    /// Highest place degree listed in the backend rows.
    pub list_degree: Option<usize>,
}

impl RunConfig {
    pub fn new(backend: Backend) -> Self {
        RunConfig {
            backend,
            epsilon: EpsilonMode::Auto,
            checks: Check::ALL.into_iter().collect(),
            full_product: false,
            rh_tol: 1e-8,
            format: OutputFormat::Json,
            workers: None,
            list_degree: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub report: Option<Value>,
    /// What goes to stdout.
    pub text: String,
    /// What goes to stderr.
    pub error: Option<String>,
    pub exit_code: i32,
}

/// Runs `cfg` and renders the result; never panics on bad input.
pub fn run(cfg: &RunConfig) -> RunOutput {
    match compute(cfg) {
        Ok(report) => {
            let passed = report["passed"].as_bool().unwrap_or(false);
            let text = match cfg.format {
                OutputFormat::Json => to_json_string(&report),
                OutputFormat::Table => render::table(&report),
            };
            RunOutput {
                report: Some(report),
                text,
                error: None,
                exit_code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            }
        }
        Err(e) => RunOutput {
            report: None,
            text: String::new(),
            error: Some(format!("error: {e}")),
            exit_code: EXIT_INPUT,
        },
    }
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Builds the report for `cfg`, inside a dedicated pool when `workers` is set.
pub fn compute(cfg: &RunConfig) -> Result<Value, CliError> {
    if cfg.epsilon == EpsilonMode::Table && !matches!(cfg.backend, Backend::Ell { .. }) {
        return Err(CliError::Input("--epsilon table is only available for `ell`".into()));
    }
    if !(cfg.rh_tol > 0.0) {
        return Err(CliError::Input(format!("--rh-tol must be positive, got {}", cfg.rh_tol)));
    }
    match cfg.workers {
        Some(0) => Err(CliError::Input("--workers must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Input(format!("thread pool: {e}")))?
            .install(|| dispatch(cfg)),
        None => dispatch(cfg),
    }
}

fn field(q: &str) -> Result<FqField, CliError> {
    FqField::from_size_str(q).map_err(|e| CliError::Input(format!("--q {q}: {e}")))
}

fn dispatch(cfg: &RunConfig) -> Result<Value, CliError> {
    let (solved, backend) = match &cfg.backend {
        Backend::Zeta { q, hyperelliptic } => {
            let k = field(q)?;
            let curve = match hyperelliptic {
                None => ZetaCurve::Rational(k),
                Some(f) => {
                    let f = parse_poly(&k, f).map_err(|e| CliError::Input(format!("--hyperelliptic: {e}")))?;
                    ZetaCurve::Hyperelliptic(HyperellipticModel::new(f)?)
                }
            };
            let (l, feq) = zeta_stratification::<Rational>(curve);
            let s = solve(&l, feq, cfg, "backend")?;
            let extra = zeta_extra(l.curve(), list_degree(cfg, &s))?;
            (s.report(), extra)
        }
        Backend::Ell { q, a } => {
            let k = field(q)?;
            let mut inv = Vec::with_capacity(5);
            for (name, s) in ["a1", "a2", "a3", "a4", "a6"].iter().zip(a) {
                inv.push(parse_ratfunc(&k, s).map_err(|e| CliError::Input(format!("--{name}: {e}")))?);
            }
            let curve = EllCurveOverFqT::new(&k, inv.try_into().expect("five invariants"))?;
            let (l, feq) = ell_stratification::<Rational>(curve)?;
            let s = solve(&l, feq, cfg, "table")?;
            let extra = ell_extra(l.source().curve(), list_degree(cfg, &s))?;
            (s.report(), extra)
        }
        Backend::Dirichlet { q, components } => {
            let k = field(q)?;
            let comps = components
                .iter()
                .map(|c| CharComponent::parse(&k, c).map_err(|e| CliError::Input(format!("--component {c}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let chi = DirichletChar::new(&k, comps)?;
            let (l, feq) = dirichlet_stratification(chi)?;
            let s = solve(&l, feq, cfg, "backend")?;
            let extra = dirichlet_extra(l.source().character(), components, list_degree(cfg, &s))?;
            (s.report(), extra)
        }
        Backend::Generic { input } => {
            if mentions_cyclo(input) {
                let (l, feq) = generic::parse_generic::<CycloElem>(input)?;
                let n = l.source().len();
                (solve(&l, feq, cfg, "input")?.report(), json!({ "places": n }))
            } else {
                let (l, feq) = generic::parse_generic::<Rational>(input)?;
                let n = l.source().len();
                (solve(&l, feq, cfg, "input")?.report(), json!({ "places": n }))
            }
        }
    };
    let mut out = solved;
    out.insert("command".into(), json!(cfg.backend.name()));
    out.insert("backend".into(), backend);
    Ok(Value::Object(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    FunctionalEquation,
    FullProduct,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::FunctionalEquation => "functional-equation",
            Route::FullProduct => "full-product",
        })
    }
}

struct Solved<F> {
    feq: FuncEqData<F>,
    numerator: Poly<F>,
    epsilon: F,
    epsilon_source: &'static str,
    route: Route,
    checks: BTreeMap<&'static str, Value>,
}

fn solve<F: WireField, L: Stratification<F>>(
    l: &L,
    mut feq: FuncEqData<F>,
    cfg: &RunConfig,
    given: &'static str,
) -> Result<Solved<F>, CliError> {
    let (epsilon, epsilon_source) = match (&cfg.epsilon, feq.epsilon.clone()) {
        (EpsilonMode::Known(s), _) => (F::parse_arg(s)?, "user"),
        (EpsilonMode::Auto | EpsilonMode::Table, Some(e)) => (e, given),
        _ => (alg_epsilon(l, &feq)?, "computed"),
    };
    feq.epsilon = Some(epsilon.clone());
    let route = if cfg.full_product { Route::FullProduct } else { Route::FunctionalEquation };
    let numerator = match route {
        Route::FullProduct => full_product(l, &feq)?,
        Route::FunctionalEquation => alg_funceq(l, &feq)?,
    };
    let checks = cfg
        .checks
        .iter()
        .map(|&c| (c.name(), run_check(c, &numerator, &epsilon, &feq, cfg.rh_tol)))
        .collect();
    Ok(Solved {
        feq,
        numerator,
        epsilon,
        epsilon_source,
        route,
        checks,
    })
}

fn run_check<F: WireField>(c: Check, n: &Poly<F>, eps: &F, feq: &FuncEqData<F>, rh_tol: f64) -> Value {
    match c {
        Check::FuncEq => {
            let o = verify_functional_equation(n, feq);
            json!({ "passed": o.passed, "detail": o.detail })
        }
        Check::Rh => match verify_riemann_hypothesis(n, feq.q, feq.w, rh_tol) {
            Ok(r) => json!({
                "passed": r.passed,
                "tol": rh_tol,
                "expected_modulus": r.expected_modulus,
                "max_relative_error": r.max_relative_error,
                "moduli": r.moduli,
                "detail": r.outcome().detail,
            }),
            Err(e) => json!({ "passed": false, "tol": rh_tol, "detail": e.to_string() }),
        },
        Check::Modulus => {
            let o = verify_epsilon_modulus(eps, feq, MODULUS_TOL);
            json!({
                "passed": o.passed,
                "tol": MODULUS_TOL,
                "relative_error": o.residual,
                "detail": o.detail,
            })
        }
        Check::Degree => {
            let mut problems = Vec::new();
            if let Err(e) = feq.validate() {
                problems.push(e.to_string());
            }
            if n.degree() != feq.n {
                problems.push(format!("deg N = {} but n = {}", n.degree(), feq.n));
            }
            if !n.coeff(0).is_one() {
                problems.push("N(0) != 1".into());
            }
            let detail = if problems.is_empty() {
                format!(
                    "deg N = n = {}, n - deg D = deg f + (2g - 2) dim = {}",
                    feq.n,
                    feq.expected_degree_gap()
                )
            } else {
                problems.join("; ")
            };
            json!({ "passed": problems.is_empty(), "detail": detail })
        }
    }
}

impl<F: WireField> Solved<F> {
    fn report(&self) -> Map<String, Value> {
        let passed = self.checks.values().all(|c| c["passed"] == Value::Bool(true));
        let mut m = Map::new();
        m.insert("q".into(), json!(self.feq.q));
        m.insert("n".into(), json!(self.feq.n));
        m.insert("w".into(), json!(self.feq.w));
        m.insert("c".into(), json!(self.feq.c.name()));
        m.insert("genus".into(), json!(self.feq.genus));
        m.insert("dim".into(), json!(self.feq.dim));
        m.insert("conductor_degree".into(), json!(self.feq.conductor_degree));
        m.insert("numerator".into(), poly_to_wire(&self.numerator));
        m.insert("denominator".into(), poly_to_wire(&self.feq.d_poly));
        m.insert("numerator_text".into(), json!(self.numerator.to_string()));
        m.insert("denominator_text".into(), json!(self.feq.d_poly.to_string()));
        m.insert("epsilon".into(), self.epsilon.to_wire());
        m.insert("epsilon_text".into(), json!(self.epsilon.to_string()));
        m.insert("epsilon_source".into(), json!(self.epsilon_source));
        m.insert("route".into(), json!(self.route.to_string()));
        m.insert(
            "checks".into(),
            Value::Object(self.checks.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()),
        );
        m.insert("passed".into(), json!(passed));
        m
    }
}

/// Degrees the chosen route enumerates, unless overridden.
fn list_degree<F>(cfg: &RunConfig, s: &Solved<F>) -> usize {
    cfg.list_degree.unwrap_or(match (s.route, s.epsilon_source) {
        (Route::FullProduct, _) => s.feq.n,
        (_, "computed") => s.feq.n.div_ceil(2),
        _ => s.feq.n / 2,
    })
}

fn zeta_extra(curve: &ZetaCurve, r: usize) -> Result<Value, CliError> {
    let desc = match curve {
        ZetaCurve::Rational(k) => format!("F_{}(t)", k.size()),
        ZetaCurve::Hyperelliptic(c) => format!("u^2 = {}", c.f()),
    };
    let counts = places_by_degree(curve, r)?;
    Ok(json!({ "curve": desc, "places_by_degree": counts }))
}

fn ell_extra(e: &EllCurveOverFqT, r: usize) -> Result<Value, CliError> {
    let q = e.field().size();
    let rows = places_up_to(e.field(), r, true)
        .into_par_iter()
        .map(|v| {
            let d = e.reduce_at_place(&v)?;
            Ok(json!({
                "place": v.to_string(),
                "degree": v.degree(),
                "kind": d.kind.to_string(),
                "a_v": d.a_v,
                "euler": poly_to_wire(&d.euler_factor::<Rational>(q)),
            }))
        })
        .collect::<lffc_core::Result<Vec<_>>>()?;
    let cond = e.conductor()?;
    let bad: Vec<Value> = cond
        .places
        .iter()
        .map(|d| json!({ "place": d.place.to_string(), "kind": d.kind.to_string(), "exponent": d.cond_exp }))
        .collect();
    let names = ["a1", "a2", "a3", "a4", "a6"];
    let a: Map<String, Value> = names
        .iter()
        .zip(e.a_invariants())
        .map(|(n, f)| (n.to_string(), json!(f.to_string())))
        .collect();
    Ok(json!({
        "a_invariants": a,
        "conductor": { "degree": cond.degree, "places": bad },
        "root_number": Rational::to_wire(&e.root_number()?),
        "places": rows,
    }))
}

fn dirichlet_extra(chi: &DirichletChar, components: &[String], r: usize) -> Result<Value, CliError> {
    let rows = places_up_to(chi.field(), r, true)
        .into_par_iter()
        .map(|v| {
            let x = chi.eval_place(&v)?;
            Ok(json!({
                "place": v.to_string(),
                "degree": v.degree(),
                "value": x.to_wire(),
                "value_text": x.to_string(),
            }))
        })
        .collect::<lffc_core::Result<Vec<_>>>()?;
    Ok(json!({
        "components": components,
        "modulus": chi.modulus().to_string(),
        "image_order": chi.conductor(),
        "conductor_degree": chi.conductor_degree()?,
        "trivial_on_constants": chi.trivial_on_constants()?,
        "places": rows,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta() -> RunConfig {
        RunConfig::new(Backend::Zeta {
            q: "3".into(),
            hyperelliptic: Some("t^7 - t + 1".into()),
        })
    }

    #[test]
    fn zeta_report() {
        let out = run(&zeta());
        assert_eq!(out.exit_code, EXIT_OK, "{:?}", out.error);
        let r = out.report.unwrap();
        assert_eq!(r["numerator"], json!(["1", "3", "6", "12", "18", "27", "27"]));
        assert_eq!(r["epsilon"], json!("9"));
        assert_eq!(r["backend"]["places_by_degree"], json!([7, 3, 10]));
        assert_eq!(r["checks"].as_object().unwrap().len(), 4);
    }

    #[test]
    fn wrong_epsilon_is_a_check_failure() {
        let mut cfg = zeta();
        cfg.epsilon = EpsilonMode::Known("-9".into());
        cfg.checks = Check::parse_list("funceq,degree").unwrap();
        let out = run(&cfg);
        assert_eq!(out.exit_code, EXIT_CHECK_FAILED);
        assert_eq!(out.report.unwrap()["checks"]["funceq"]["passed"], json!(false));
    }

    #[test]
    fn input_errors() {
        let mut cfg = zeta();
        cfg.epsilon = EpsilonMode::Table;
        assert_eq!(run(&cfg).exit_code, EXIT_INPUT);
        let cfg = RunConfig::new(Backend::Zeta {
            q: "6".into(),
            hyperelliptic: None,
        });
        let out = run(&cfg);
        assert_eq!(out.exit_code, EXIT_INPUT);
        assert!(out.error.unwrap().contains("--q 6"));
        let cfg = RunConfig::new(Backend::Zeta {
            q: "3".into(),
            hyperelliptic: Some("t^3 + ".into()),
        });
        assert_eq!(run(&cfg).exit_code, EXIT_INPUT);
    }

    #[test]
    fn option_parsing() {
        assert!(Check::parse_list("rh,bogus").is_err());
        assert!(Check::parse_list("none").unwrap().is_empty());
        assert_eq!(Check::parse_list("all").unwrap().len(), 4);
        assert_eq!("compute".parse::<EpsilonMode>().unwrap(), EpsilonMode::Compute);
        assert_eq!("7/2".parse::<EpsilonMode>().unwrap(), EpsilonMode::Known("7/2".into()));
        assert!("xml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn workers_pool() {
        let mut cfg = zeta();
        cfg.workers = Some(2);
        assert_eq!(run(&cfg).exit_code, EXIT_OK);
        cfg.workers = Some(0);
        assert_eq!(run(&cfg).exit_code, EXIT_INPUT);
    }
}
