//! JSON and plain-text renderings of analysis results.
//!
//! JSON objects keep insertion order, so output is byte-for-byte stable for
//! a given input. Players are printed 1-based and permutations in cycle
//! notation.

use std::fmt::Write as _;

use serde_json::{json, Map, Number, Value};

use crate::fixtures::FixtureReport;
use crate::game::{Game, Payoff};
use crate::relations::{Diagnostics, PropertyReport, PropertyVerdict, RelationMatrix};
use crate::roles::{RelationResult, RoleClasses, RoleRef, Witness};
use crate::symmetry::{AnonymousGame, Classification, InvarianceGroup, OrbitPartition, Predicate};
use crate::verdict::{Counterexample, Verdict};

pub fn payoff_json(v: &Payoff) -> Value {
    if v.is_integer() {
        Value::Number(v.to_integer().to_string().parse::<Number>().expect("integer literal"))
    } else {
        Value::String(format!("{}/{}", v.numer(), v.denom()))
    }
}

pub fn counterexample_json(g: &Game, cx: &Counterexample) -> Value {
    json!({
        "profile": g.format_profile(&cx.left.profile),
        "permutation": cx.permutation.as_ref().map(|p| p.to_string()),
        "image": g.format_profile(&cx.right.profile),
        "players": [cx.left.player + 1, cx.right.player + 1],
        "payoffs": [payoff_json(&cx.left.value), payoff_json(&cx.right.value)],
    })
}

fn verdict_json(g: &Game, v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("holds".into(), Value::Bool(v.holds));
    if let Some(cx) = &v.counterexample {
        m.insert("counterexample".into(), counterexample_json(g, cx));
    }
    Value::Object(m)
}

pub fn classification_json(g: &Game, c: &Classification) -> Value {
    let mut m = Map::new();
    for p in Predicate::ALL {
        m.insert(p.name().into(), verdict_json(g, c.get(p)));
    }
    Value::Object(m)
}

pub fn classification_table(g: &Game, c: &Classification) -> String {
    let mut out = String::new();
    for p in Predicate::ALL {
        let v = c.get(p);
        let _ = write!(out, "{:<16}{}", p.name(), if v.holds { "yes" } else { "no" });
        if let Some(cx) = &v.counterexample {
            let _ = write!(out, "   {}", cx.describe(g));
        }
        out.push('\n');
    }
    out
}

pub fn group_json(group: &InvarianceGroup) -> Value {
    json!({
        "players": group.degree(),
        "order": group.len(),
        "full": group.is_full(),
        "elements": group.elements().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

pub fn group_table(group: &InvarianceGroup) -> String {
    let mut out = format!(
        "invariance group: {} of {} permutations{}\n",
        group.len(),
        (1..=group.degree()).product::<usize>(),
        if group.is_full() { " (full)" } else { "" }
    );
    for p in group.elements() {
        let _ = writeln!(out, "  {p}");
    }
    out
}

pub fn orbits_json(g: &Game, orbits: &OrbitPartition) -> Value {
    let classes: Vec<Value> = (0..orbits.len())
        .map(|c| {
            json!({
                "counts": orbits.image(c).counts(),
                "profiles": orbits.class_indices(c).iter().map(|&i| g.format_profile(&g.profile_at(i))).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "actions": g.actions(), "orbits": classes })
}

pub fn orbits_table(g: &Game, orbits: &OrbitPartition) -> String {
    let mut out = format!("{} orbits (counts over {})\n", orbits.len(), g.actions().join(","));
    for c in 0..orbits.len() {
        let members: Vec<String> = orbits
            .class_indices(c)
            .iter()
            .map(|&i| g.format_profile(&g.profile_at(i)))
            .collect();
        let counts: Vec<String> = orbits.image(c).counts().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  ({})  {}", counts.join(","), members.join(" "));
    }
    out
}

fn witness_json(g: &Game, w: &Witness) -> Option<Value> {
    match w {
        Witness::None => None,
        Witness::Permutation(p) => Some(Value::String(p.to_string())),
        Witness::PerProfile(v) => Some(Value::Object(
            v.iter()
                .enumerate()
                .map(|(idx, p)| (g.profile_key(&g.profile_at(idx)), Value::String(p.to_string())))
                .collect(),
        )),
        Witness::Matching(m) => Some(Value::Object(
            m.iter()
                .map(|&(k, l)| ((k + 1).to_string(), Value::from(l + 1)))
                .collect(),
        )),
    }
}

/// The first counterexample, with every refuted candidate listed under
/// `"candidates"` when there are several.
fn refutation_json(g: &Game, r: &RelationResult) -> Option<Value> {
    let first = r.counterexamples.first()?;
    let mut v = counterexample_json(g, first);
    if r.counterexamples.len() > 1 {
        v.as_object_mut().expect("object").insert(
            "candidates".into(),
            Value::Array(r.counterexamples.iter().map(|c| counterexample_json(g, c)).collect()),
        );
    }
    Some(v)
}

pub fn relation_result_json(g: &Game, r: &RelationResult) -> Value {
    let mut m = Map::new();
    m.insert("holds".into(), Value::Bool(r.holds));
    if let Some(w) = witness_json(g, &r.witness) {
        m.insert("witness".into(), w);
    }
    if let Some(cx) = refutation_json(g, r) {
        m.insert("counterexample".into(), cx);
    }
    Value::Object(m)
}

pub fn matrix_json(g: &Game, m: &RelationMatrix) -> Value {
    let n = m.players();
    let mut witnesses = Map::new();
    let mut counterexamples = Map::new();
    for i in 0..n {
        for j in 0..n {
            let key = format!("{},{}", i + 1, j + 1);
            let cell = m.cell(i, j);
            if let Some(w) = witness_json(g, &cell.witness) {
                witnesses.insert(key.clone(), w);
            }
            if let Some(cx) = refutation_json(g, cell) {
                counterexamples.insert(key, cx);
            }
        }
    }
    json!({
        "relation": m.relation().name(),
        "grid": m.grid(),
        "witnesses": witnesses,
        "counterexamples": counterexamples,
    })
}

fn describe_witness(w: &Witness) -> Option<String> {
    match w {
        Witness::None => None,
        Witness::Permutation(p) => Some(p.to_string()),
        Witness::PerProfile(v) => {
            let mut distinct: Vec<String> = v.iter().map(|p| p.to_string()).collect();
            distinct.sort();
            distinct.dedup();
            Some(format!("per profile, using {}", distinct.join(" ")))
        }
        Witness::Matching(m) => Some(
            m.iter()
                .map(|&(k, l)| format!("{}→{}", k + 1, l + 1))
                .collect::<Vec<_>>()
                .join(" "),
        ),
    }
}

pub fn matrix_table(g: &Game, m: &RelationMatrix) -> String {
    let n = m.players();
    let mut out = format!("relation {}\n    ", m.relation());
    for j in 0..n {
        let _ = write!(out, "{:>3}", j + 1);
    }
    out.push('\n');
    for i in 0..n {
        let _ = write!(out, "{:>3} ", i + 1);
        for j in 0..n {
            let _ = write!(out, "{:>3}", if m.holds(i, j) { "+" } else { "-" });
        }
        out.push('\n');
    }
    for i in 0..n {
        for j in 0..n {
            let cell = m.cell(i, j);
            if let Some(w) = describe_witness(&cell.witness) {
                let _ = writeln!(out, "  {},{} witness {}", i + 1, j + 1, w);
            }
            if let Some(cx) = cell.counterexamples.first() {
                let _ = writeln!(out, "  {},{} fails: {}", i + 1, j + 1, cx.describe(g));
            }
        }
    }
    out
}

pub fn relation_result_table(g: &Game, label: &str, r: &RelationResult) -> String {
    let mut out = format!("{label}: {}\n", if r.holds { "holds" } else { "fails" });
    if let Some(w) = describe_witness(&r.witness) {
        let _ = writeln!(out, "  witness {w}");
    }
    if let Witness::PerProfile(v) = &r.witness {
        for (idx, p) in v.iter().enumerate() {
            if !p.is_identity() {
                let _ = writeln!(out, "    {} {}", g.format_profile(&g.profile_at(idx)), p);
            }
        }
    }
    for cx in &r.counterexamples {
        let _ = writeln!(out, "  {}", cx.describe(g));
    }
    out
}

fn role_name(r: RoleRef) -> String {
    r.to_string()
}

pub fn role_classes_json(c: &RoleClasses) -> Value {
    let names = |classes: &[Vec<RoleRef>]| -> Vec<Vec<String>> {
        classes.iter().map(|cl| cl.iter().map(|r| role_name(*r)).collect()).collect()
    };
    json!({ "non_diagonal": names(&c.non_diagonal), "diagonal": names(&c.diagonal) })
}

pub fn role_classes_table(c: &RoleClasses) -> String {
    let mut out = String::from("twisted-equivalence classes of roles\n");
    for (label, classes) in [("non-diagonal", &c.non_diagonal), ("diagonal", &c.diagonal)] {
        let _ = writeln!(out, "  {label}:");
        for cl in classes {
            let names: Vec<String> = cl.iter().map(|r| role_name(*r)).collect();
            let _ = writeln!(out, "    {{{}}}", names.join(", "));
        }
    }
    out
}

fn property_json(v: &PropertyVerdict) -> Value {
    let mut m = Map::new();
    m.insert("holds".into(), Value::Bool(v.holds));
    if !v.holds {
        m.insert(
            "counterexample".into(),
            Value::Array(v.counterexample.iter().map(|s| Value::String(s.to_string())).collect()),
        );
    }
    Value::Object(m)
}

pub fn properties_json(r: &PropertyReport) -> Value {
    Value::Object(
        r.rows
            .iter()
            .map(|row| {
                (
                    row.relation.to_string(),
                    json!({
                        "reflexive": property_json(&row.reflexive),
                        "symmetric": property_json(&row.symmetric),
                        "transitive": property_json(&row.transitive),
                    }),
                )
            })
            .collect(),
    )
}

pub fn properties_table(r: &PropertyReport) -> String {
    let cell = |v: &PropertyVerdict| {
        if v.holds {
            "yes".to_string()
        } else {
            let parts: Vec<String> = v.counterexample.iter().map(|s| s.to_string()).collect();
            format!("no ({})", parts.join(" "))
        }
    };
    let mut out = format!("{:<6}{:<22}{:<22}{}\n", "", "reflexive", "symmetric", "transitive");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{:<6}{:<22}{:<22}{}",
            row.relation,
            cell(&row.reflexive),
            cell(&row.symmetric),
            cell(&row.transitive)
        );
    }
    out
}

pub fn diagnostics_json(d: &Diagnostics) -> Value {
    Value::Array(
        d.checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("check".into(), Value::String(c.name.clone()));
                m.insert("holds".into(), Value::Bool(c.holds));
                if let Some(detail) = &c.detail {
                    m.insert("detail".into(), Value::String(detail.clone()));
                }
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn diagnostics_table(d: &Diagnostics) -> String {
    let mut out = String::new();
    for c in &d.checks {
        let _ = write!(out, "  [{}] {}", if c.holds { "ok" } else { "VIOLATED" }, c.name);
        if let Some(detail) = &c.detail {
            let _ = write!(out, " at {detail}");
        }
        out.push('\n');
    }
    out
}

pub fn anonymous_json(u: &AnonymousGame) -> Value {
    let mut players = Vec::new();
    for i in 0..u.players() {
        let mut by_action = Map::new();
        for (a, name) in u.actions().iter().enumerate() {
            let values: Map<String, Value> = u
                .partitions()
                .iter()
                .map(|x| (x.to_string(), payoff_json(u.utility(i, a, x).expect("own partition"))))
                .collect();
            by_action.insert(name.clone(), Value::Object(values));
        }
        players.push(Value::Object(by_action));
    }
    json!({ "actions": u.actions(), "utilities": players })
}

pub fn anonymous_table(u: &AnonymousGame) -> String {
    let mut out = String::from("utilities u(player, own action, counts of the others)\n");
    for i in 0..u.players() {
        for (a, name) in u.actions().iter().enumerate() {
            let values: Vec<String> = u
                .partitions()
                .iter()
                .map(|x| format!("{x}={}", u.utility(i, a, x).expect("own partition")))
                .collect();
            let _ = writeln!(out, "  {} {}: {}", i + 1, name, values.join(" "));
        }
    }
    out
}

pub fn fixture_report_json(r: &FixtureReport) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("fixture".into(), Value::String(c.fixture.to_string()));
                m.insert("claim".into(), Value::String(c.claim.clone()));
                m.insert("provenance".into(), Value::String(c.provenance.to_string()));
                m.insert("passed".into(), Value::Bool(c.passed));
                if let Some(d) = &c.detail {
                    m.insert("detail".into(), Value::String(d.clone()));
                }
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn fixture_report_table(r: &FixtureReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let mark = match (c.passed, c.provenance) {
            (_, crate::fixtures::Provenance::Computed) => "info",
            (true, _) => "pass",
            (false, _) => "FAIL",
        };
        let _ = write!(out, "[{mark}] {:<10} {}", c.fixture, c.claim);
        if let Some(d) = &c.detail {
            let _ = write!(out, "  ({d})");
        }
        out.push('\n');
    }
    let passed = r.checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", r.checks.len());
    out
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serializable");
    s.push('\n');
    s
}
