use std::fmt::Write;

use serde_json::Value;

fn s(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn table(r: &Value) -> String {
    let mut out = String::new();
    let b = &r["backend"];
    let _ = writeln!(out, "lffc {} over F_{}", s(&r["command"]), s(&r["q"]));
    if let Some(c) = b.get("curve") {
        let _ = writeln!(out, "  curve      {}", s(c));
    }
    if let Some(a) = b.get("a_invariants").and_then(Value::as_object) {
        let inv: Vec<String> = a.iter().map(|(k, v)| format!("{k} = {}", s(v))).collect();
        let _ = writeln!(out, "  curve      {}", inv.join(", "));
    }
    if let Some(m) = b.get("modulus") {
        let _ = writeln!(out, "  modulus    {}", s(m));
    }
    let _ = writeln!(
        out,
        "  n = {}, w = {}, c = {}, deg f = {}",
        s(&r["n"]),
        s(&r["w"]),
        s(&r["c"]),
        s(&r["conductor_degree"])
    );
    let _ = writeln!(out, "  N(T)       {}", s(&r["numerator_text"]));
    let _ = writeln!(out, "  D(T)       {}", s(&r["denominator_text"]));
    let _ = writeln!(out, "  eps        {}  ({})", s(&r["epsilon_text"]), s(&r["epsilon_source"]));
    let _ = writeln!(out, "  route      {}", s(&r["route"]));

    if let Some(counts) = b.get("places_by_degree").and_then(Value::as_array) {
        let c: Vec<String> = counts.iter().map(s).collect();
        let _ = writeln!(out, "  places by degree: {}", c.join(", "));
    }
    if let Some(rows) = b.get("places").and_then(Value::as_array) {
        let _ = writeln!(out);
        for row in rows {
            let place = s(&row["place"]);
            if let Some(kind) = row.get("kind") {
                let _ = writeln!(out, "  {place:<16} {:<24} a_v = {}", s(kind), s(&row["a_v"]));
            } else if let Some(v) = row.get("value_text") {
                let _ = writeln!(out, "  {place:<20} {}", s(v));
            }
        }
    }

    let _ = writeln!(out);
    if let Some(checks) = r["checks"].as_object() {
        for (name, c) in checks {
            let verdict = if c["passed"] == Value::Bool(true) { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  {name:<8} {verdict}  {}", s(&c["detail"]));
        }
    }
    let _ = writeln!(
        out,
        "{}",
        if r["passed"] == Value::Bool(true) { "all checks passed" } else { "some checks FAILED" }
    );
    out
}
