//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdicts always reach stdout.
//!
//! A criterion may fail only if it appears in `KNOWN` with the exact reason
//! it fails; anything else makes the binary exit nonzero.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lffc::{run, Backend, Check, EpsilonMode, RunConfig, EXIT_OK};
use lffc_core::strat::verify_functional_equation;
use lffc_core::{
    synthetic_stratification, CycloElem, CycloFuncEq, CycloPoly, Field, FieldEndo, Poly, Rational,
};
use num_bigint::BigInt;
use num_traits::Pow;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

struct Verdict {
    passed: bool,
    detail: String,
}

type Outcome = Result<Verdict, String>;

fn pass(detail: impl Into<String>) -> Outcome {
    Ok(Verdict { passed: true, detail: detail.into() })
}

fn fail(detail: impl Into<String>) -> Outcome {
    Ok(Verdict { passed: false, detail: detail.into() })
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

/// Criteria that fail for a documented reason. The detail line must match.
const KNOWN: &[(u32, &str)] = &[(
    3,
    "printed N has -(3zeta8^3 - 3i - 3zeta8) at T^4; eps * M_1 = eps/3 gives the opposite sign",
)];

fn report(cfg: &RunConfig) -> Result<Value, String> {
    let out = run(cfg);
    ensure!(out.exit_code == EXIT_OK, "exit {} ({:?}) for {:?}", out.exit_code, out.error, cfg.backend);
    Ok(out.report.unwrap())
}

fn strs(v: &[i64]) -> Value {
    json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn timed(limit: Duration, elapsed: Duration) -> Result<String, String> {
    ensure!(elapsed < limit, "took {elapsed:.2?}, limit {limit:?}");
    Ok(format!("{elapsed:.2?}"))
}

fn zeta_fixture() -> RunConfig {
    RunConfig::new(Backend::Zeta {
        q: "3".into(),
        hyperelliptic: Some("t^7 - t + 1".into()),
    })
}

fn ell_fixture() -> RunConfig {
    RunConfig::new(Backend::Ell {
        q: "7".into(),
        a: ["t", "0", "0", "0", "t^2 + 2"].map(String::from),
    })
}

fn dirichlet_fixture() -> RunConfig {
    RunConfig::new(Backend::Dirichlet {
        q: "3".into(),
        components: ["t^2 - t - 1:t:zeta8^1", "t^2 + 1:t + 1:zeta4^1", "t^2 + t - 1:t:zeta2^1"]
            .map(String::from)
            .to_vec(),
    })
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let r = report(&zeta_fixture())?;
    let elapsed = t.elapsed();
    ensure!(r["numerator"] == strs(&[1, 3, 6, 12, 18, 27, 27]), "N = {}", r["numerator"]);
    ensure!(r["epsilon"] == json!("9"), "eps = {}", r["epsilon"]);
    ensure!(r["backend"]["places_by_degree"] == json!([7, 3, 10]), "{}", r["backend"]["places_by_degree"]);
    pass(format!("N and eps exact, places by degree 7, 3, 10, {}", timed(Duration::from_secs(1), elapsed)?))
}

/// `(place, a_v, kind)` for every row of the worked table.
const ELL_ROWS: [(&str, i64, &str); 29] = [
    ("1/t", 1, "split-multiplicative"),
    ("t", -1, "good"),
    ("t + 1", 3, "good"),
    ("t + 2", -2, "good"),
    ("t + 3", -1, "nonsplit-multiplicative"),
    ("t + 4", -1, "nonsplit-multiplicative"),
    ("t + 5", -2, "good"),
    ("t + 6", 3, "good"),
    ("t^2 + 1", -10, "good"),
    ("t^2 + 2", 1, "split-multiplicative"),
    ("t^2 + 4", -14, "good"),
    ("t^2 + t + 3", 4, "good"),
    ("t^2 + t + 4", 3, "good"),
    ("t^2 + t + 6", 5, "good"),
    ("t^2 + 2t + 2", 12, "good"),
    ("t^2 + 2t + 3", 1, "split-multiplicative"),
    ("t^2 + 2t + 5", 4, "good"),
    ("t^2 + 3t + 1", 12, "good"),
    ("t^2 + 3t + 5", 2, "good"),
    ("t^2 + 3t + 6", 3, "good"),
    ("t^2 + 4t + 1", 12, "good"),
    ("t^2 + 4t + 5", 2, "good"),
    ("t^2 + 4t + 6", 3, "good"),
    ("t^2 + 5t + 2", 12, "good"),
    ("t^2 + 5t + 3", 1, "split-multiplicative"),
    ("t^2 + 5t + 5", 4, "good"),
    ("t^2 + 6t + 3", 4, "good"),
    ("t^2 + 6t + 4", 3, "good"),
    ("t^2 + 6t + 6", 5, "good"),
];

fn rows_by_place(r: &Value) -> BTreeMap<String, Value> {
    r["backend"]["places"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| (row["place"].as_str().unwrap().replace('*', ""), row.clone()))
        .collect()
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let table = report(&ell_fixture())?;
    let mut cfg = ell_fixture();
    cfg.epsilon = EpsilonMode::Compute;
    cfg.list_degree = Some(2);
    let computed = report(&cfg)?;
    let elapsed = t.elapsed();

    let rows = rows_by_place(&table);
    ensure!(rows.len() == ELL_ROWS.len(), "{} places of degree <= 2, table has {}", rows.len(), ELL_ROWS.len());
    for (place, a, kind) in ELL_ROWS {
        let row = rows.get(place).ok_or(format!("no row for {place}"))?;
        ensure!(row["a_v"] == json!(a) && row["kind"] == json!(kind), "{place}: {row}");
    }
    let bad: Vec<&str> = table["backend"]["conductor"]["places"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["place"].as_str().unwrap())
        .collect();
    ensure!(bad.len() == 6, "conductor places {bad:?}");
    ensure!(table["backend"]["conductor"]["degree"] == json!(9), "deg f");
    ensure!(table["n"] == json!(5), "n = {}", table["n"]);
    for r in [&table, &computed] {
        ensure!(r["epsilon"] == json!("16807"), "eps = {} ({})", r["epsilon"], r["epsilon_source"]);
        ensure!(r["numerator"] == strs(&[1, 0, 49, 343, 0, 16807]), "N = {}", r["numerator"]);
    }
    ensure!(table["epsilon_source"] == json!("table") && computed["epsilon_source"] == json!("computed"), "routes");
    pass(format!(
        "all {} rows, deg f = 9, n = 5, eps = 16807 by table and by computation, N exact, {}",
        ELL_ROWS.len(),
        timed(Duration::from_secs(5), elapsed)?
    ))
}

fn z(m: u32, e: i64) -> CycloElem {
    CycloElem::root_of_unity(m, e)
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let r = report(&dirichlet_fixture())?;
    let elapsed = t.elapsed();
    let c = CycloElem::integer;
    let i = z(4, 1);
    let (z8, z83) = (z(8, 1), z(8, 3));

    // L_v = 1 - chi(v) T^deg v, read off the table; places written over F_3
    let values: [(&str, CycloElem); 15] = [
        ("1/t", c(0)),
        ("t + 2", -z8.clone()),
        ("t", z8.clone()),
        ("t + 1", c(1)),
        ("t^2 + 2t + 2", c(0)),
        ("t^2 + 1", c(0)),
        ("t^2 + t + 2", c(0)),
        ("t^3 + 2t^2 + 2t + 2", c(-1)),
        ("t^3 + 2t^2 + 1", c(-1)),
        ("t^3 + 2t^2 + t + 1", z83.clone()),
        ("t^3 + 2t + 2", z83.clone()),
        ("t^3 + 2t + 1", -z8.clone()),
        ("t^3 + t^2 + 2t + 1", z8.clone()),
        ("t^3 + t^2 + 2", -i.clone()),
        ("t^3 + t^2 + t + 2", -i.clone()),
    ];
    let rows = rows_by_place(&r);
    ensure!(rows.len() == 15, "{} places of degree <= 3", rows.len());
    for (place, v) in &values {
        let row = rows.get(*place).ok_or(format!("no row for {place}"))?;
        let got: CycloElem = serde_json::from_value(row["value"].clone()).map_err(|e| e.to_string())?;
        ensure!(&got == v, "chi({place}) = {got}, expected {v}");
    }
    ensure!(r["n"] == json!(5), "n = {}", r["n"]);
    let eps = c(9) * &z83 - c(9) * &i - c(9) * &z8;
    ensure!(r["epsilon"] == serde_json::to_value(&eps).unwrap(), "eps = {}", r["epsilon"]);

    let n4 = c(3) * &z83 - c(3) * &i - c(3) * &z8;
    let head = vec![c(1), c(1), i.clone() + c(1), c(2) * &z83 - i.clone() - c(1)];
    let printed = Poly::new([head.clone(), vec![-n4.clone(), eps.clone()]].concat());
    let verified = Poly::new([head, vec![n4, eps.clone()]].concat());
    let got: CycloPoly = Poly::new(
        r["numerator"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| serde_json::from_value(v.clone()).unwrap())
            .collect(),
    );
    ensure!(got == verified, "N = {got}");
    timed(Duration::from_secs(1), elapsed)?;
    ensure!(r["passed"] == json!(true), "checks {}", r["checks"]);

    let feq = CycloFuncEq {
        d_poly: Poly::one(),
        n: 5,
        q: 3,
        w: 0,
        c: FieldEndo::ComplexConjugation,
        epsilon: Some(eps),
        genus: 0,
        dim: 1,
        conductor_degree: 7,
    };
    ensure!(!verify_functional_equation(&printed, &feq).passed, "printed N satisfies the functional equation");
    if got == printed {
        pass("15 rows, n = 5, eps and N exact")
    } else {
        fail(KNOWN[0].1)
    }
}

fn int(n: i64) -> CycloElem {
    CycloElem::integer(n)
}

fn power(q: u64, e: u32) -> CycloElem {
    CycloElem::rational(Rational::from_integer(BigInt::from(q).pow(e)))
}

fn cyclo_pow(x: &CycloElem, n: u32) -> CycloElem {
    (0..n).fold(int(1), |acc, _| acc * x)
}

/// `sum_j X_j^c f^j T^{deg X - j}`.
fn tilde(x: &CycloPoly, f: &CycloElem, c: FieldEndo) -> CycloPoly {
    let d = x.degree();
    let mut out = vec![int(0); d + 1];
    let mut h = int(1);
    for j in 0..=d {
        out[d - j] = x.coeff(j).apply(c) * &h;
        h *= f;
    }
    Poly::new(out)
}

struct Planted {
    n: CycloPoly,
    d: CycloPoly,
    q: u64,
    w: i64,
    c: FieldEndo,
    eps: CycloElem,
    adversarial: bool,
}

impl Planted {
    fn new(factors: Vec<CycloPoly>, d: CycloPoly, q: u64, w: i64, c: FieldEndo, adversarial: bool) -> Self {
        let n = factors.iter().fold(Poly::one(), |acc, f| acc.mul(f));
        let f = CycloElem::rational(Rational::from_integer(BigInt::from(q).pow((w + 1) as u32)).recip());
        let eps = n.coeff(n.degree()).checked_div(&d.coeff(d.degree())).unwrap();
        assert_eq!(n.mul(&tilde(&d, &f, c)), d.mul(&tilde(&n, &f, c)).scale(&eps), "bad plant");
        Planted { n, d, q, w, c, eps, adversarial }
    }

    fn file(&self) -> Value {
        let order = self.n.degree();
        let target = lffc_core::trunc_mul(
            &self.n.truncate(order),
            &lffc_core::trunc_inv(&self.d.truncate(order), order).unwrap(),
            order,
        );
        let l = synthetic_stratification(&target, order);
        let places: Vec<Value> = l
            .factors()
            .iter()
            .map(|(i, p)| json!({ "degree": i, "euler": wire_poly(p) }))
            .collect();
        json!({
            "q": self.q, "w": self.w, "c": self.c.name(), "genus": 0, "dim": 1,
            "conductor_degree": self.n.degree() - self.d.degree() + 2,
            "D": wire_poly(&self.d), "n": self.n.degree(), "places": places,
        })
    }
}

fn wire_poly(p: &CycloPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|x| serde_json::to_value(x).unwrap()).collect())
}

fn random_plant(rng: &mut ChaCha8Rng) -> Planted {
    let q = [3u64, 5, 7][rng.gen_range(0..3)];
    let w = rng.gen_range(0..2i64);
    let c = if rng.gen_bool(0.5) { FieldEndo::ComplexConjugation } else { FieldEndo::Identity };
    let big_q = power(q, (w + 1) as u32);
    let mut factors = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        match c {
            FieldEndo::Identity => {
                let a = rng.gen_range(-12..=12);
                factors.push(Poly::new(vec![int(1), int(-a), big_q.clone()]));
            }
            FieldEndo::ComplexConjugation => {
                let (a, b) = (rng.gen_range(-6..=6), rng.gen_range(1..=6));
                let g = int(a) + int(b) * &z(8, 1);
                let h = big_q.checked_div(&g.conj()).unwrap();
                factors.push(Poly::new(vec![int(1), -g]));
                factors.push(Poly::new(vec![int(1), -h]));
            }
        }
    }
    if w == 1 && rng.gen_bool(0.5) {
        // Q = q^2 has a rational square root
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        factors.push(Poly::from_ints(&[1, s * q as i64]));
    }
    let d = if w == 0 && rng.gen_bool(0.5) {
        Poly::from_ints(&[1, -(q as i64 + 1), q as i64])
    } else {
        Poly::one()
    };
    Planted::new(factors, d, q, w, c, false)
}

/// `N = 1 + a T^n`, so `M_1 = ... = M_{n-1} = 0`.
fn adversarial_plants() -> Vec<Planted> {
    let mut out = Vec::new();
    for n in 2..=7u32 {
        // |1 + 2i|^2 = 5
        let a = cyclo_pow(&(int(1) + int(2) * &z(4, 1)), n);
        let mut c = vec![int(0); n as usize + 1];
        c[0] = int(1);
        c[n as usize] = a;
        out.push(Planted::new(vec![Poly::new(c)], Poly::one(), 5, 0, FieldEndo::ComplexConjugation, true));
        let mut c = vec![int(0); n as usize + 1];
        c[0] = int(1);
        c[n as usize] = -power(3, n);
        out.push(Planted::new(vec![Poly::new(c)], Poly::one(), 3, 1, FieldEndo::Identity, true));
    }
    out
}

fn synthetic_suite() -> Vec<Planted> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut suite: Vec<Planted> = (0..120).map(|_| random_plant(&mut rng)).collect();
    suite.extend(adversarial_plants());
    suite
}

fn generic(input: Value) -> RunConfig {
    let mut cfg = RunConfig::new(Backend::Generic { input });
    cfg.checks = Check::parse_list("funceq,degree").unwrap();
    cfg
}

fn numerator(r: &Value) -> CycloPoly {
    Poly::new(
        r["numerator"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| match v {
                Value::String(s) => CycloElem::rational(lffc_core::field::parse_rational(s).unwrap()),
                o => serde_json::from_value(o.clone()).unwrap(),
            })
            .collect(),
    )
}

fn criterion_4(suite: &[Planted]) -> Outcome {
    let t = Instant::now();
    let mut kinds = BTreeMap::new();
    for (k, p) in suite.iter().enumerate() {
        let mut cfg = generic(p.file());
        cfg.epsilon = EpsilonMode::Known(serde_json::to_string(&p.eps).unwrap());
        let fe = report(&cfg)?;
        cfg.full_product = true;
        let full = report(&cfg)?;
        ensure!(fe["numerator"] == full["numerator"], "case {k}: routes differ");
        ensure!(numerator(&fe) == p.n, "case {k}: N = {}, planted {}", numerator(&fe), p.n);
        *kinds.entry((p.c.name(), p.d.degree())).or_insert(0) += 1;
    }
    ensure!(kinds.len() == 4, "not every (c, D) combination appeared: {kinds:?}");
    pass(format!(
        "{} stratifications, (c, deg D) counts {kinds:?}, {}",
        suite.len(),
        timed(Duration::from_secs(10), t.elapsed())?
    ))
}

fn criterion_5(suite: &[Planted]) -> Outcome {
    let t = Instant::now();
    for (k, p) in suite.iter().enumerate() {
        let mut cfg = generic(p.file());
        cfg.epsilon = EpsilonMode::Compute;
        let r = report(&cfg)?;
        let eps: CycloElem = match &r["epsilon"] {
            Value::String(s) => CycloElem::rational(lffc_core::field::parse_rational(s).unwrap()),
            o => serde_json::from_value(o.clone()).unwrap(),
        };
        ensure!(eps == p.eps, "case {k}: eps = {eps}, planted {}", p.eps);
        ensure!(numerator(&r) == p.n, "case {k}: N differs");
    }
    let adv = suite.iter().filter(|p| p.adversarial).count();
    ensure!(adv >= 10, "{adv} adversarial cases");
    pass(format!("{} planted eps recovered, {adv} adversarial, {:.2?}", suite.len(), t.elapsed()))
}

fn fixtures() -> [(&'static str, RunConfig); 3] {
    [("zeta", zeta_fixture()), ("ell", ell_fixture()), ("dirichlet", dirichlet_fixture())]
}

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    for ((name, mut cfg), expected) in fixtures().into_iter().zip([3f64.sqrt().recip(), 1.0 / 7.0, 3f64.sqrt().recip()]) {
        cfg.checks = Check::parse_list("rh").unwrap();
        cfg.rh_tol = 1e-8;
        let r = report(&cfg)?;
        let rh = &r["checks"]["rh"];
        let m = rh["expected_modulus"].as_f64().unwrap();
        ensure!((m / expected - 1.0).abs() < 1e-12, "{name}: expected modulus {m}");
        for x in rh["moduli"].as_array().unwrap() {
            let x = x.as_f64().unwrap();
            ensure!((x / expected - 1.0).abs() <= 1e-8, "{name}: root modulus {x}");
        }
        parts.push(format!("{name} {:.1e}", rh["max_relative_error"].as_f64().unwrap()));
    }
    pass(format!("max relative error: {}", parts.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    for ((name, mut cfg), expected) in fixtures().into_iter().zip([9.0, 16807.0, 3f64.powf(2.5)]) {
        cfg.checks = Check::parse_list("modulus").unwrap();
        let r = report(&cfg)?;
        let eps: CycloElem = match &r["epsilon"] {
            Value::String(s) => CycloElem::rational(lffc_core::field::parse_rational(s).unwrap()),
            o => serde_json::from_value(o.clone()).unwrap(),
        };
        let rel = (eps.complex_embed().norm() / expected - 1.0).abs();
        ensure!(rel <= 1e-9, "{name}: |eps| off by {rel:e}");
        ensure!(r["checks"]["modulus"]["passed"] == json!(true), "{name}: {}", r["checks"]["modulus"]);
        parts.push(format!("{name} {rel:.1e}"));
    }
    pass(format!("relative error: {}", parts.join(", ")))
}

fn poly_text(coeffs: &[i64]) -> String {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| format!("{c}*t^{i}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut done = 0;
    let mut genera = BTreeMap::new();
    while done < 20 {
        let p = if done % 2 == 0 { 3 } else { 5 };
        let deg = [3usize, 5, 7][rng.gen_range(0..3)];
        let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        c.push(rng.gen_range(1..p));
        let backend = Backend::Zeta {
            q: p.to_string(),
            hyperelliptic: Some(poly_text(&c)),
        };
        let mut cfg = RunConfig::new(backend);
        cfg.checks = Check::parse_list("funceq,degree").unwrap();
        let out = run(&cfg);
        if out.exit_code == lffc::EXIT_INPUT {
            // not square-free
            continue;
        }
        let fe = report(&cfg)?;
        cfg.full_product = true;
        let full = report(&cfg)?;
        ensure!(fe["numerator"] == full["numerator"], "{:?}: routes differ", c);
        let g = (deg as u32 - 1) / 2;
        let eps = if g == 0 { format!("1/{p}") } else { (p as u64).pow(g - 1).to_string() };
        ensure!(fe["epsilon"] == json!(eps), "{:?}: eps = {}", c, fe["epsilon"]);
        for x in fe["numerator"].as_array().unwrap() {
            ensure!(!x.as_str().unwrap().contains('/'), "{:?}: non-integral coefficient {x}", c);
        }
        ensure!(fe["checks"]["funceq"]["passed"] == json!(true), "{:?}", c);
        *genera.entry(g).or_insert(0) += 1;
        done += 1;
    }
    pass(format!("20 curves, genus counts {genera:?}, {}", timed(Duration::from_secs(60), t.elapsed())?))
}

fn criterion_9() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    let mut attempts = 0;
    let mut degrees = BTreeMap::new();
    while done < 10 {
        attempts += 1;
        ensure!(attempts < 2000, "ran out of attempts after {done} curves");
        let p = if done % 2 == 0 { 5 } else { 7 };
        let a4: Vec<i64> = (0..3).map(|_| rng.gen_range(0..p)).collect();
        let a6: Vec<i64> = (0..3).map(|_| rng.gen_range(0..p)).collect();
        if a4[1..].iter().chain(&a6[1..]).all(|&x| x == 0) {
            continue;
        }
        let text = |c: &[i64]| if c.iter().all(|&x| x == 0) { "0".to_string() } else { poly_text(c) };
        let backend = Backend::Ell {
            q: p.to_string(),
            a: ["0".into(), "0".into(), "0".into(), text(&a4), text(&a6)],
        };
        let mut cfg = RunConfig::new(backend);
        cfg.checks = Check::parse_list("none").unwrap();
        cfg.list_degree = Some(0);
        let out = run(&cfg);
        let Some(table) = out.report else { continue };
        let deg = table["conductor_degree"].as_u64().unwrap();
        if deg > 7 {
            continue;
        }
        cfg.epsilon = EpsilonMode::Compute;
        let computed = report(&cfg)?;
        ensure!(
            table["epsilon"] == computed["epsilon"],
            "y^2 = x^3 + ({})x + ({}) over F_{p}: table {} computed {}",
            text(&a4),
            text(&a6),
            table["epsilon"],
            computed["epsilon"]
        );
        *degrees.entry(deg).or_insert(0) += 1;
        done += 1;
    }
    pass(format!("10 curves, conductor degree counts {degrees:?}, {:.2?}", t.elapsed()))
}

fn main() -> ExitCode {
    let suite = synthetic_suite();
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "zeta fixture", Box::new(criterion_1)),
        (2, "elliptic fixture", Box::new(criterion_2)),
        (3, "Dirichlet fixture", Box::new(criterion_3)),
        (4, "funceq route equals full product", Box::new(|| criterion_4(&suite))),
        (5, "epsilon recovery", Box::new(|| criterion_5(&suite))),
        (6, "Riemann hypothesis", Box::new(criterion_6)),
        (7, "epsilon modulus", Box::new(criterion_7)),
        (8, "hyperelliptic sweep", Box::new(criterion_8)),
        (9, "elliptic two-route epsilon", Box::new(criterion_9)),
    ];
    let mut unexpected = 0;
    for (id, name, f) in &criteria {
        let v = f().unwrap_or_else(|e| Verdict { passed: false, detail: e });
        let known = KNOWN.iter().find(|(k, _)| k == id).map(|(_, why)| *why);
        let verdict = if v.passed { "PASS" } else { "FAIL" };
        let note = match (v.passed, known) {
            (true, None) => "",
            (false, Some(why)) if why == v.detail => " (known deviation)",
            _ => {
                unexpected += 1;
                " (unexpected)"
            }
        };
        println!("criterion {id} [{name}]: {verdict}{note}: {}", v.detail);
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
