//! Report rendering: text for humans, JSON and CSV for machines.
//!
//! All output is exact and deterministic. JSON integers above 2⁵³ are
//! emitted as decimal strings so consumers that parse numbers into doubles
//! cannot silently lose precision; CSV uses RFC-style quoting; every payload
//! is UTF-8 with LF line endings and a trailing newline.

use serde_json::{json, Value};

use crate::cli::CrossCheckOutcome;
use crate::exact::is_perfect_square;
use crate::lattice::LatticeEmbedding;
use crate::oracle::{RectangleSearch, SearchReport};
use crate::parallelogram::{classify, AmicablePair, PairKind};
use crate::rhombus::{to_rhombus, StarSolution};
use crate::elliptic::CurvePoint;
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

const VERSION: &str = env!("CARGO_PKG_VERSION");
const JSON_SAFE: Int = 1 << 53;

/// Exact JSON rendering of an integer: a number while it fits in 2⁵³,
/// a decimal string beyond that.
pub fn json_int(v: Int) -> Value {
    if (-JSON_SAFE..=JSON_SAFE).contains(&v) {
        Value::from(v as i64)
    } else {
        Value::from(v.to_string())
    }
}

fn json_doc(mut value: Value) -> String {
    if let Value::Object(map) = &mut value {
        map.insert("version".into(), Value::from(VERSION));
    }
    let mut out = serde_json::to_string_pretty(&value).expect("serializable");
    out.push('\n');
    out
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

fn csv_doc(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let encoded: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&encoded.join(","));
        out.push('\n');
    }
    out
}

fn rhombus_roots(x: Int, a: Int) -> (Int, Int) {
    let s1 = is_perfect_square(x * x * x * x - 16 * a * a).expect("certified hit");
    let s2 = is_perfect_square(a * a * a * a - 16 * x * x).expect("certified hit");
    (s1, s2)
}

pub fn solutions(command: &str, sols: &[StarSolution], format: Format) -> String {
    let rows: Vec<(Int, Int, Int, Int, Int, Int)> = sols
        .iter()
        .map(|sol| {
            let r = to_rhombus(sol).expect("solver output is convertible");
            match *sol {
                StarSolution::Star { kappa, m, n, s } => (kappa, m, n, s, r.x, r.a),
                StarSolution::StarStar { k, mu, n, s } => (k, mu, n, s, r.x, r.a),
            }
        })
        .collect();
    let star = command == "solve-star";
    let (p1, p2) = if star { ("kappa", "m") } else { ("k", "mu") };
    match format {
        Format::Text => {
            let mut out = format!("{command}\nsolutions: {}\n", rows.len());
            for (k, m, n, s, x, a) in rows {
                out.push_str(&format!(
                    "  {p1}={k} {p2}={m} n={n} s={s} -> rhombus x={x} a={a}\n"
                ));
            }
            out
        }
        Format::Json => {
            let hits: Vec<Value> = rows
                .iter()
                .map(|&(k, m, n, s, x, a)| {
                    let mut map = serde_json::Map::new();
                    map.insert(p1.to_string(), json_int(k));
                    map.insert(p2.to_string(), json_int(m));
                    map.insert("n".to_string(), json_int(n));
                    map.insert("s".to_string(), json_int(s));
                    map.insert("x".to_string(), json_int(x));
                    map.insert("a".to_string(), json_int(a));
                    Value::Object(map)
                })
                .collect();
            json_doc(json!({ "command": command, "hits": hits }))
        }
        Format::Csv => {
            let header = [p1, p2, "n", "s", "x", "a"];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|&(k, m, n, s, x, a)| {
                    vec![k, m, n, s, x, a].into_iter().map(|v| v.to_string()).collect()
                })
                .collect();
            csv_doc(&header, &body)
        }
    }
}

pub fn rhombus_search(report: &SearchReport, format: Format) -> String {
    let hits: Vec<(Int, Int, Int, Int)> = report
        .hits
        .iter()
        .map(|&(x, _, a, _)| {
            let (s1, s2) = rhombus_roots(x, a);
            (x, a, s1, s2)
        })
        .collect();
    match format {
        Format::Text => {
            let mut out = format!(
                "search-rhombus bound={} complete={}\nhits: {}\n",
                report.bound,
                report.complete,
                hits.len()
            );
            for (x, a, s1, s2) in hits {
                out.push_str(&format!("  x={x} a={a} s1={s1} s2={s2}\n"));
            }
            out
        }
        Format::Json => {
            let hits: Vec<Value> = hits
                .iter()
                .map(|&(x, a, s1, s2)| {
                    json!({
                        "x": json_int(x),
                        "a": json_int(a),
                        "s1": json_int(s1),
                        "s2": json_int(s2),
                    })
                })
                .collect();
            json_doc(json!({
                "command": "search-rhombus",
                "bound": json_int(report.bound),
                "complete": report.complete,
                "hits": hits,
            }))
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = hits
                .iter()
                .map(|&(x, a, s1, s2)| {
                    vec![x, a, s1, s2].into_iter().map(|v| v.to_string()).collect()
                })
                .collect();
            csv_doc(&["x", "a", "s1", "s2"], &body)
        }
    }
}

pub fn parallelogram_search(report: &SearchReport, format: Format) -> String {
    let hits: Vec<(Int, Int, Int, Int, Int, Int)> = report
        .hits
        .iter()
        .map(|&(x, y, a, b)| {
            let pair = crate::parallelogram::amicable_condition(x, y, a, b)
                .expect("certified hit");
            (x, y, a, b, pair.s1, pair.s2)
        })
        .collect();
    match format {
        Format::Text => {
            let mut out = format!(
                "search-parallelograms bound={} complete={}\nhits: {}\n",
                report.bound,
                report.complete,
                hits.len()
            );
            for (x, y, a, b, s1, s2) in hits {
                out.push_str(&format!("  x={x} y={y} a={a} b={b} s1={s1} s2={s2}\n"));
            }
            out
        }
        Format::Json => {
            let hits: Vec<Value> = hits
                .iter()
                .map(|&(x, y, a, b, s1, s2)| {
                    json!({
                        "x": json_int(x),
                        "y": json_int(y),
                        "a": json_int(a),
                        "b": json_int(b),
                        "s1": json_int(s1),
                        "s2": json_int(s2),
                    })
                })
                .collect();
            json_doc(json!({
                "command": "search-parallelograms",
                "bound": json_int(report.bound),
                "complete": report.complete,
                "hits": hits,
            }))
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = hits
                .iter()
                .map(|&(x, y, a, b, s1, s2)| {
                    vec![x, y, a, b, s1, s2].into_iter().map(|v| v.to_string()).collect()
                })
                .collect();
            csv_doc(&["x", "y", "a", "b", "s1", "s2"], &body)
        }
    }
}

pub fn rectangle_search(search: &RectangleSearch, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!(
                "search-rectangles cap={} complete={}\nequable rectangles: {}\n",
                search.report.bound,
                search.report.complete,
                search.equables.len()
            );
            for &(x, y) in &search.equables {
                out.push_str(&format!("  {x}x{y}\n"));
            }
            out.push_str(&format!(
                "amicable pairs: {} including trivial self-pairs, {} excluding\n",
                search.total_with_trivial, search.total_nontrivial
            ));
            for &(x, y, a, b) in &search.report.hits {
                let trivial = (x, y) == (a, b);
                out.push_str(&format!(
                    "  ({x},{y})-({a},{b}){}\n",
                    if trivial { " trivial" } else { "" }
                ));
            }
            out
        }
        Format::Json => {
            let equables: Vec<Value> = search
                .equables
                .iter()
                .map(|&(x, y)| json!([json_int(x), json_int(y)]))
                .collect();
            let hits: Vec<Value> = search
                .report
                .hits
                .iter()
                .map(|&(x, y, a, b)| {
                    json!({
                        "x": json_int(x),
                        "y": json_int(y),
                        "a": json_int(a),
                        "b": json_int(b),
                        "trivial": (x, y) == (a, b),
                    })
                })
                .collect();
            json_doc(json!({
                "command": "search-rectangles",
                "bound": json_int(search.report.bound),
                "complete": search.report.complete,
                "equables": equables,
                "hits": hits,
                "totals": {
                    "with_trivial": search.total_with_trivial,
                    "nontrivial": search.total_nontrivial,
                },
            }))
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = search
                .report
                .hits
                .iter()
                .map(|&(x, y, a, b)| {
                    vec![
                        x.to_string(),
                        y.to_string(),
                        a.to_string(),
                        b.to_string(),
                        ((x, y) == (a, b)).to_string(),
                    ]
                })
                .collect();
            csv_doc(&["x", "y", "a", "b", "trivial"], &body)
        }
    }
}

fn pair_json(pair: &AmicablePair) -> Value {
    let c = classify(pair);
    let (x, y) = pair.p1.sides();
    let (a, b) = pair.p2.sides();
    json!({
        "x": json_int(x),
        "y": json_int(y),
        "a": json_int(a),
        "b": json_int(b),
        "s1": json_int(pair.s1),
        "s2": json_int(pair.s2),
        "trivial": pair.trivial,
        "kind": match c.kind {
            PairKind::EquableTrivial => "equable-trivial",
            PairKind::AmicableNontrivial => "amicable-nontrivial",
        },
        "rectangle_degenerate": c.rectangle_degenerate,
    })
}

fn pair_text(pair: &AmicablePair) -> String {
    let c = classify(pair);
    let (x, y) = pair.p1.sides();
    let (a, b) = pair.p2.sides();
    let mut out = format!(
        "amicable pair: ({x},{y})-({a},{b}) s1={} s2={}\nkind: {}{}\n",
        pair.s1,
        pair.s2,
        match c.kind {
            PairKind::EquableTrivial => "equable-trivial",
            PairKind::AmicableNontrivial => "amicable-nontrivial",
        },
        if c.rectangle_degenerate { " (rectangle-degenerate)" } else { "" },
    );
    let sines = (
        crate::parallelogram::sine_of_angle(x, y, a, b),
        crate::parallelogram::sine_of_angle(a, b, x, y),
    );
    if let (Ok(s1), Ok(s2)) = sines {
        out.push_str(&format!(
            "sin angle 1 = {}/{} (~{})\nsin angle 2 = {}/{} (~{})\n",
            s1.numerator(),
            s1.denominator(),
            s1.approx(),
            s2.numerator(),
            s2.denominator(),
            s2.approx(),
        ));
    }
    out
}

pub fn verify_pair(
    input: (Int, Int, Int, Int),
    pair: Option<&AmicablePair>,
    format: Format,
) -> String {
    let (x, y, a, b) = input;
    match format {
        Format::Text => {
            let mut out = format!("verify-pair x={x} y={y} a={a} b={b}\n");
            match pair {
                Some(p) => out.push_str(&pair_text(p)),
                None => out.push_str("not amicable\n"),
            }
            out
        }
        Format::Json => {
            let hits: Vec<Value> = pair.iter().map(|p| pair_json(p)).collect();
            json_doc(json!({
                "command": "verify-pair",
                "input": [json_int(x), json_int(y), json_int(a), json_int(b)],
                "amicable": pair.is_some(),
                "hits": hits,
            }))
        }
        Format::Csv => {
            let row = match pair {
                Some(p) => vec![
                    x.to_string(),
                    y.to_string(),
                    a.to_string(),
                    b.to_string(),
                    "true".into(),
                    p.s1.to_string(),
                    p.s2.to_string(),
                    p.trivial.to_string(),
                ],
                None => vec![
                    x.to_string(),
                    y.to_string(),
                    a.to_string(),
                    b.to_string(),
                    "false".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                ],
            };
            csv_doc(
                &["x", "y", "a", "b", "amicable", "s1", "s2", "trivial"],
                &[row],
            )
        }
    }
}

fn vertices_compact(e: &LatticeEmbedding) -> String {
    e.vertices
        .iter()
        .map(|p| format!("{} {}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(";")
}

fn embedding_json(e: &LatticeEmbedding) -> Value {
    json!({
        "vertices": e.vertices.iter().map(|p| json!([json_int(p.x), json_int(p.y)])).collect::<Vec<_>>(),
        "target_sq_sides": e.target_sq_sides.iter().map(|&s| json_int(s)).collect::<Vec<_>>(),
        "target_area2": json_int(e.target_area2),
        "verified": e.verify(),
    })
}

pub fn embed_pair(
    input: (Int, Int, Int, Int),
    pair: Option<&AmicablePair>,
    embeddings: Option<&(LatticeEmbedding, LatticeEmbedding)>,
    format: Format,
) -> String {
    let (x, y, a, b) = input;
    match format {
        Format::Text => {
            let mut out = format!("embed-pair x={x} y={y} a={a} b={b}\n");
            match (pair, embeddings) {
                (Some(p), Some((e1, e2))) => {
                    out.push_str(&pair_text(p));
                    for (i, e) in [e1, e2].into_iter().enumerate() {
                        let verts: Vec<String> =
                            e.vertices.iter().map(|p| format!("({},{})", p.x, p.y)).collect();
                        out.push_str(&format!(
                            "embedding {}: {} sides2={:?} area2={} verified={}\n",
                            i + 1,
                            verts.join(" "),
                            e.target_sq_sides,
                            e.target_area2,
                            e.verify(),
                        ));
                    }
                }
                _ => out.push_str("not amicable\n"),
            }
            out
        }
        Format::Json => {
            let hits: Vec<Value> = match (pair, embeddings) {
                (Some(p), Some((e1, e2))) => {
                    let mut hit = pair_json(p);
                    hit.as_object_mut().expect("object").insert(
                        "embeddings".into(),
                        json!([embedding_json(e1), embedding_json(e2)]),
                    );
                    vec![hit]
                }
                _ => Vec::new(),
            };
            json_doc(json!({
                "command": "embed-pair",
                "input": [json_int(x), json_int(y), json_int(a), json_int(b)],
                "amicable": pair.is_some(),
                "hits": hits,
            }))
        }
        Format::Csv => {
            let row = match (pair, embeddings) {
                (Some(p), Some((e1, e2))) => vec![
                    x.to_string(),
                    y.to_string(),
                    a.to_string(),
                    b.to_string(),
                    "true".into(),
                    p.s1.to_string(),
                    p.s2.to_string(),
                    vertices_compact(e1),
                    vertices_compact(e2),
                ],
                _ => vec![
                    x.to_string(),
                    y.to_string(),
                    a.to_string(),
                    b.to_string(),
                    "false".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                ],
            };
            csv_doc(
                &["x", "y", "a", "b", "amicable", "s1", "s2", "vertices1", "vertices2"],
                &[row],
            )
        }
    }
}

pub fn elliptic(
    input: (Int, Int, Int),
    point: Option<&CurvePoint>,
    note: Option<&str>,
    format: Format,
) -> String {
    let (kappa, m, n) = input;
    match format {
        Format::Text => {
            let mut out = format!("elliptic kappa={kappa} m={m} n={n}\n");
            match point {
                Some(pt) => {
                    // v and u as used before the affine map
                    let v = (pt.x - 3 * pt.s * pt.s) / 9;
                    let u = pt.y / 27;
                    out.push_str(&format!("s={} v={v} u={u}\n", pt.s));
                    out.push_str(&format!(
                        "point: X={} Y={} p={} q={}\non curve: {}\n",
                        pt.x,
                        pt.y,
                        pt.p,
                        pt.q,
                        crate::elliptic::on_curve(pt),
                    ));
                }
                None => out.push_str(&format!(
                    "no curve point: {}\n",
                    note.unwrap_or("not a solution")
                )),
            }
            out
        }
        Format::Json => {
            let hits: Vec<Value> = point
                .iter()
                .map(|pt| {
                    json!({
                        "x": json_int(pt.x),
                        "y": json_int(pt.y),
                        "p": json_int(pt.p),
                        "q": json_int(pt.q),
                        "s": json_int(pt.s),
                        "on_curve": crate::elliptic::on_curve(pt),
                    })
                })
                .collect();
            let mut doc = json!({
                "command": "elliptic",
                "input": [json_int(kappa), json_int(m), json_int(n)],
                "hits": hits,
            });
            if let Some(msg) = note {
                doc.as_object_mut().expect("object").insert("note".into(), Value::from(msg));
            }
            json_doc(doc)
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = point
                .iter()
                .map(|pt| {
                    vec![
                        kappa.to_string(),
                        m.to_string(),
                        n.to_string(),
                        pt.s.to_string(),
                        pt.x.to_string(),
                        pt.y.to_string(),
                        pt.p.to_string(),
                        pt.q.to_string(),
                        crate::elliptic::on_curve(pt).to_string(),
                    ]
                })
                .collect();
            csv_doc(
                &["kappa", "m", "n", "s", "x", "y", "p", "q", "on_curve"],
                &body,
            )
        }
    }
}

pub fn cross_check(outcome: &CrossCheckOutcome, format: Format) -> String {
    let status = if outcome.passed() { "PASS" } else { "FAIL" };
    match format {
        Format::Text => {
            let fmt_hits = |hits: &[(Int, Int)]| {
                if hits.is_empty() {
                    "(none)".to_string()
                } else {
                    hits.iter()
                        .map(|&(x, a)| format!("({x},{a})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            };
            let mut out = format!("cross-check bound={}\n", outcome.bound);
            out.push_str(&format!("solver hits: {}\n", fmt_hits(&outcome.solver_hits)));
            out.push_str(&format!("oracle hits: {}\n", fmt_hits(&outcome.oracle_hits)));
            out.push_str(&format!("routes agree: {}\n", outcome.routes_agree));
            out.push_str(&format!(
                "embeddings verified: {} of {}\n",
                outcome.embeddings_verified,
                outcome.oracle_hits.len()
            ));
            if !outcome.embedding_failures.is_empty() {
                out.push_str(&format!("embedding failures: {:?}\n", outcome.embedding_failures));
            }
            out.push_str(&format!("result: {status}\n"));
            out
        }
        Format::Json => {
            let hit_list = |hits: &[(Int, Int)]| -> Vec<Value> {
                hits.iter()
                    .map(|&(x, a)| json!({ "x": json_int(x), "a": json_int(a) }))
                    .collect()
            };
            json_doc(json!({
                "command": "cross-check",
                "bound": json_int(outcome.bound),
                "solver_hits": hit_list(&outcome.solver_hits),
                "oracle_hits": hit_list(&outcome.oracle_hits),
                "routes_agree": outcome.routes_agree,
                "embeddings_verified": outcome.embeddings_verified,
                "embedding_failures": hit_list(&outcome.embedding_failures),
                "status": if outcome.passed() { "pass" } else { "fail" },
            }))
        }
        Format::Csv => {
            let row = vec![
                outcome.bound.to_string(),
                outcome.routes_agree.to_string(),
                outcome.embeddings_verified.to_string(),
                outcome.embedding_failures.len().to_string(),
                if outcome.passed() { "pass".into() } else { "fail".to_string() },
            ];
            csv_doc(
                &["bound", "routes_agree", "embeddings_verified", "embedding_failures", "status"],
                &[row],
            )
        }
    }
}
