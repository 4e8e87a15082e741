//! Analysis reports and their text and JSON renderings.
//!
//! JSON objects use `serde_json`'s default sorted map, so key order is
//! lexicographic and output is byte-stable for a given report.

use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::algebra::StructureConstants;
use crate::bounds::{
    best_bounds, relative_constraints, render_value, AlgebraParams, BoundReport,
    RelativeConstraint, RelativeExtras,
};
use crate::error::{Error, Result};
use crate::identity::{check_fundamental_identity, IdentityOptions, IdentityViolation};
use crate::linalg::{format_rational, QVector};
use crate::par::Execution;
use crate::series::{classify_unchecked, ClassificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::OutOfRange(format!(
                "unknown format `{s}` (text or json)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum IdentityStatus {
    Ok {
        tuples: u128,
    },
    Violated {
        count: usize,
        first: IdentityViolation,
    },
    Skipped,
}

impl IdentityStatus {
    pub fn is_violated(&self) -> bool {
        matches!(self, IdentityStatus::Violated { .. })
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub arity: usize,
    pub dim: usize,
    pub nonzero_constants: usize,
    pub identity: IdentityStatus,
    /// Absent only when the identity fails and the series cannot be formed.
    pub classification: Option<ClassificationReport>,
    /// Present only when the identity holds or its check was skipped.
    pub bounds: Option<BoundReport>,
    pub relative: Vec<RelativeConstraint>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub skip_identity: bool,
    pub force: bool,
    pub exec: Execution,
}

pub fn analyze(sc: &StructureConstants, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let identity = if opts.skip_identity {
        IdentityStatus::Skipped
    } else {
        let r = check_fundamental_identity(
            sc,
            &IdentityOptions {
                force: opts.force,
                exec: opts.exec,
                ..Default::default()
            },
        )?;
        match r.violations.first() {
            None => IdentityStatus::Ok {
                tuples: r.total_tuples,
            },
            Some(first) => IdentityStatus::Violated {
                count: r.violations.len(),
                first: first.clone(),
            },
        }
    };

    let classification = match classify_unchecked(sc) {
        Ok(c) => Some(c),
        Err(_) if identity.is_violated() => None,
        Err(e) => return Err(e),
    };

    let (bounds, relative) = match (&identity, &classification) {
        (IdentityStatus::Violated { .. }, _) | (_, None) => (None, Vec::new()),
        (_, Some(c)) => {
            let params = AlgebraParams::from_report(c)?;
            let extras = RelativeExtras::from_report(c);
            (
                Some(best_bounds(&params)),
                relative_constraints(&params, &extras, &[])?,
            )
        }
    };

    Ok(AnalysisReport {
        arity: sc.arity(),
        dim: sc.dim(),
        nonzero_constants: sc.nnz(),
        identity,
        classification,
        bounds,
        relative,
    })
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |c| c.to_string())
}

fn big_json(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn vector_json(v: &QVector) -> Value {
    Value::Array(
        v.coords()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect(),
    )
}

/// Text lines for a bound report and relative constraints.
pub fn bounds_text(report: &BoundReport, relative: &[RelativeConstraint]) -> String {
    let mut out = String::from("bounds:\n");
    for it in &report.items {
        let tag = if it.exact { " [exact]" } else { "" };
        writeln!(
            out,
            "  {}: {}{tag} ({})",
            it.id,
            render_value(it),
            it.reason
        )
        .unwrap();
    }
    match report.best_item() {
        Some(b) => writeln!(out, "best_bound: {} ({})", b.value.as_ref().unwrap(), b.id).unwrap(),
        None => out.push_str("best_bound: none\n"),
    }
    if let Some(v) = report.exact_value() {
        writeln!(out, "exact_multiplier_dim: {v}").unwrap();
    }
    out.push_str("relative:\n");
    for rc in relative {
        match rc.description() {
            Some(d) => writeln!(out, "  {}: {d} ({})", rc.id, rc.reason).unwrap(),
            None => writeln!(out, "  {}: n/a ({})", rc.id, rc.reason).unwrap(),
        }
    }
    out
}

pub fn bounds_json(report: &BoundReport, relative: &[RelativeConstraint]) -> Value {
    let items: Vec<Value> = report
        .items
        .iter()
        .map(|it| {
            json!({
                "id": it.id.as_str(),
                "applicable": it.applicable,
                "exact": it.exact,
                "reason": it.reason,
                "value": it.value.as_ref().map_or(Value::Null, big_json),
                "raw": it.raw.as_ref().map_or(Value::Null, |r| Value::String(format_rational(r))),
            })
        })
        .collect();
    let best = report.best_item().map_or(Value::Null, |b| {
        json!({
            "id": b.id.as_str(),
            "value": b.value.as_ref().map_or(Value::Null, big_json),
            "exact": b.exact,
        })
    });
    let relative: Vec<Value> = relative
        .iter()
        .map(|rc| {
            let coeffs: Map<String, Value> = rc
                .coefficients()
                .into_iter()
                .map(|(k, v)| (k.to_string(), big_json(&v)))
                .collect();
            json!({
                "id": rc.id.as_str(),
                "applicable": rc.applicable,
                "reason": rc.reason,
                "description": rc.description(),
                "coefficients": coeffs,
            })
        })
        .collect();
    json!({
        "items": items,
        "best": best,
        "exact_multiplier_dim": report.exact_value().map_or(Value::Null, big_json),
        "relative": relative,
    })
}

fn classification_text(out: &mut String, c: &ClassificationReport) {
    let f = &c.flags;
    let lines = [
        ("lie_series_dims", list(&c.lie_series_dims)),
        ("series_dims", list(&c.series_dims)),
        ("series_all_slots_dims", list(&c.series_all_slots_dims)),
        ("upper_lie_series_dims", list(&c.upper_lie_series_dims)),
        ("lie_center_dim", c.lie_center_dim.to_string()),
        ("leibnizator_dim", c.leibnizator_dim.to_string()),
        (
            "leibnizator_generators_dim",
            c.leibnizator_generators_dim.to_string(),
        ),
        ("commutator_dim", c.commutator_dim.to_string()),
        ("commutator_center_dim", c.commutator_center_dim.to_string()),
        (
            "m_central",
            c.central_quotient_abelianization_dim.to_string(),
        ),
        ("lie_class", opt(c.lie_class)),
        ("class", opt(c.class)),
        ("lie_abelian", f.lie_abelian.to_string()),
        ("lie_nilpotent", f.lie_nilpotent.to_string()),
        ("nilpotent", f.nilpotent.to_string()),
        ("lie_filiform", f.lie_filiform.to_string()),
        ("filiform", f.filiform.to_string()),
        ("lie_maximal_class", f.lie_maximal_class.to_string()),
        ("maximal_class", f.maximal_class.to_string()),
        ("n_lie", f.n_lie.to_string()),
    ];
    for (k, v) in lines {
        writeln!(out, "{k}: {v}").unwrap();
    }
}

fn classification_json(c: &ClassificationReport) -> Value {
    let f = &c.flags;
    json!({
        "lie_series_dims": c.lie_series_dims,
        "series_dims": c.series_dims,
        "series_all_slots_dims": c.series_all_slots_dims,
        "upper_lie_series_dims": c.upper_lie_series_dims,
        "lie_center_dim": c.lie_center_dim,
        "leibnizator_dim": c.leibnizator_dim,
        "leibnizator_generators_dim": c.leibnizator_generators_dim,
        "commutator_dim": c.commutator_dim,
        "commutator_center_dim": c.commutator_center_dim,
        "m_central": c.central_quotient_abelianization_dim,
        "lie_class": c.lie_class,
        "class": c.class,
        "flags": {
            "lie_abelian": f.lie_abelian,
            "lie_nilpotent": f.lie_nilpotent,
            "nilpotent": f.nilpotent,
            "lie_filiform": f.lie_filiform,
            "filiform": f.filiform,
            "lie_maximal_class": f.lie_maximal_class,
            "maximal_class": f.maximal_class,
            "n_lie": f.n_lie,
        },
    })
}

fn identity_text(s: &IdentityStatus) -> String {
    match s {
        IdentityStatus::Ok { tuples } => format!("ok ({tuples} tuples)"),
        IdentityStatus::Skipped => "skipped (bounds assume the identity holds)".into(),
        IdentityStatus::Violated { count, first } => format!(
            "violated ({count} violations; first at x = {:?}, y = {:?}, defect {first_defect})",
            one_based(&first.x_tuple),
            one_based(&first.y_tuple),
            first_defect = first.defect,
        ),
    }
}

fn identity_json(s: &IdentityStatus) -> Value {
    match s {
        IdentityStatus::Ok { tuples } => json!({
            "status": "ok",
            "tuples": big_json(&BigInt::from(*tuples)),
        }),
        IdentityStatus::Skipped => json!({ "status": "skipped" }),
        IdentityStatus::Violated { count, first } => json!({
            "status": "violated",
            "violation_count": count,
            "first_violation": {
                "x": one_based(&first.x_tuple),
                "y": one_based(&first.y_tuple),
                "defect": vector_json(&first.defect),
            },
        }),
    }
}

pub fn render_report(r: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "arity: {}", r.arity).unwrap();
            writeln!(out, "dim: {}", r.dim).unwrap();
            writeln!(out, "nonzero_constants: {}", r.nonzero_constants).unwrap();
            writeln!(out, "identity: {}", identity_text(&r.identity)).unwrap();
            if let Some(c) = &r.classification {
                classification_text(&mut out, c);
            }
            if let Some(b) = &r.bounds {
                out.push_str(&bounds_text(b, &r.relative));
            }
            out
        }
        Format::Json => {
            let mut root = json!({
                "algebra": {
                    "arity": r.arity,
                    "dim": r.dim,
                    "nonzero_constants": r.nonzero_constants,
                },
                "identity": identity_json(&r.identity),
                "classification": r.classification.as_ref().map_or(Value::Null, classification_json),
            });
            if let Some(b) = &r.bounds {
                root["bounds"] = bounds_json(b, &r.relative);
            }
            let mut s = serde_json::to_string_pretty(&root).expect("serializable");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin::builtin_algebra;

    fn text(name: &str) -> String {
        let sc = builtin_algebra(name).unwrap();
        render_report(
            &analyze(&sc, &AnalyzeOptions::default()).unwrap(),
            Format::Text,
        )
    }

    #[test]
    fn golden_lines() {
        let t = text("ex3_20");
        assert!(t.contains("lie_series_dims: [4, 2, 1, 0]\n"), "{t}");
        assert!(t.contains("best_bound: 3 (COR_FILIFORM_N2)\n"), "{t}");
        assert!(text("ex3_18").contains("best_bound: 0 (COR_HALF_N2)\n"));
        assert!(text("zero:2:2").contains("exact_multiplier_dim: 3\n"));
    }

    #[test]
    fn violated_identity_has_no_bounds() {
        let mut sc = builtin_algebra("ex3_18").unwrap();
        sc.insert(&[1, 0], 0, crate::linalg::rat(1)).unwrap();
        let r = analyze(&sc, &AnalyzeOptions::default()).unwrap();
        assert!(r.identity.is_violated());
        assert!(r.bounds.is_none());
        let t = render_report(&r, Format::Text);
        assert!(!t.contains("best_bound"));
        let j = render_report(&r, Format::Json);
        assert!(!j.contains("\"bounds\""));

        let skipped = analyze(
            &sc,
            &AnalyzeOptions {
                skip_identity: true,
                ..Default::default()
            },
        );
        if let Ok(s) = skipped {
            assert!(matches!(s.identity, IdentityStatus::Skipped));
        }
    }

    #[test]
    fn json_is_sorted_and_stable() {
        let sc = builtin_algebra("ex3_20").unwrap();
        let a = render_report(
            &analyze(&sc, &AnalyzeOptions::default()).unwrap(),
            Format::Json,
        );
        let b = render_report(
            &analyze(&sc, &AnalyzeOptions::default()).unwrap(),
            Format::Json,
        );
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v["bounds"]["best"]["id"], "COR_FILIFORM_N2");
    }
}
