//! JSON and plain-text verification reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::square::Square;
use crate::verify::{classify, expected_sums, Flags, LineFailure, LineSums, PropertyReport};

/// The `verify --json` document. Field order is the key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub order: usize,
    pub width: usize,
    pub alphabet: String,
    pub s1: Option<i128>,
    pub s2: Option<i128>,
    pub flags: Flags,
    pub expected: LineSums,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotated: Option<LineSums>,
    pub failures: Vec<LineFailure>,
}

/// Sums every line of a combination-complete square must have. Null when the
/// square does not hold all `n^k` strings or the totals do not divide.
fn expected(sq: &Square) -> LineSums {
    let none = LineSums { s1: None, s2: None };
    if !sq.is_combination_complete() {
        return none;
    }
    match expected_sums(sq.alphabet(), sq.width(), sq.order()) {
        Ok(p) => LineSums {
            s1: Some(p.s1),
            s2: Some(p.s2),
        },
        Err(_) => none,
    }
}

impl ReportJson {
    pub fn new(sq: &Square, report: &PropertyReport) -> ReportJson {
        ReportJson {
            order: sq.order(),
            width: sq.width(),
            alphabet: sq.alphabet().to_string(),
            s1: report.s1,
            s2: report.s2,
            flags: report.flags,
            expected: expected(sq),
            rotated: report.rotated,
            failures: report.failures.clone(),
        }
    }

    pub fn of(sq: &Square) -> ReportJson {
        ReportJson::new(sq, &classify(sq))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn opt(v: Option<i128>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn flag_list(flags: &Flags) -> Vec<(&'static str, bool)> {
    vec![
        ("semi_magic", flags.semi_magic),
        ("magic", flags.magic),
        ("bimagic", flags.bimagic),
        ("block_magic", flags.block_magic),
        ("pandiagonal", flags.pandiagonal),
        ("upside_down_closed", flags.upside_down_closed),
        ("universal", flags.universal),
        ("balanced", flags.balanced),
        ("pair_orthogonal", flags.pair_orthogonal),
        ("combination_complete", flags.combination_complete),
    ]
}

/// Plain-text form of a report.
pub fn render_text(json: &ReportJson, report: &PropertyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "order {} width {} alphabet {}",
        json.order, json.width, json.alphabet
    );
    let _ = writeln!(out, "S1={} S2={}", opt(json.s1), opt(json.s2));
    let _ = writeln!(
        out,
        "expected S1={} S2={}",
        opt(json.expected.s1),
        opt(json.expected.s2)
    );
    for (name, on) in flag_list(&json.flags) {
        let _ = writeln!(out, "{name:<22}{}", if on { "yes" } else { "no" });
    }
    match (&json.rotated, &report.rotation_note) {
        (Some(r), _) => {
            let _ = writeln!(out, "rotated S1={} S2={}", opt(r.s1), opt(r.s2));
        }
        (None, Some(note)) => {
            let _ = writeln!(out, "rotated: {note}");
        }
        (None, None) => {}
    }
    if json.failures.is_empty() {
        let _ = writeln!(out, "failures: none");
    } else {
        let _ = writeln!(out, "failures:");
        for f in &json.failures {
            let _ = writeln!(out, "  {} {}: S1={} S2={}", f.family, f.index, f.s1, f.s2);
        }
    }
    out
}
