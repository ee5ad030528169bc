//! Machine-readable reports and their table rendering.
//!
//! The JSON form is canonical; the table is derived from the same DTOs.
//! Nothing run-dependent (timings, thread counts) enters a report, so equal
//! inputs give byte-identical output.

use std::fmt::Write as _;

use hitbox_core::galois::{GaloisId, Match};
use hitbox_core::hit::{EquivalenceReport, GroupRef, HitData, SpecializationRecord};
use hitbox_core::perm::Partition;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupDto {
    pub order: usize,
    pub label: Option<String>,
    pub derived: bool,
}

impl From<&GroupRef> for GroupDto {
    fn from(r: &GroupRef) -> Self {
        GroupDto {
            order: r.order,
            label: r.label.clone(),
            derived: r.derived,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDto {
    /// 0-based index into `S`.
    pub index: usize,
    pub root: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaloisDto {
    pub mode: String,
    pub transitive: bool,
    pub candidates: Vec<String>,
    pub order: Option<usize>,
    pub primes_used: usize,
}

impl From<&GaloisId> for GaloisDto {
    fn from(id: &GaloisId) -> Self {
        GaloisDto {
            mode: id.mode.to_string(),
            transitive: id.transitive,
            candidates: id.candidates.iter().map(|c| c.label.clone()).collect(),
            order: id.order,
            primes_used: id.evidence.primes.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecordDto {
    pub t: String,
    pub in_d: bool,
    pub verdict: String,
    pub root_witness: Option<WitnessDto>,
    pub factorization_type: Vec<usize>,
    pub galois: Option<GaloisDto>,
    pub reference_match: Option<String>,
    pub violation: bool,
}

pub fn match_str(m: Match) -> &'static str {
    match m {
        Match::Yes => "yes",
        Match::No => "no",
        Match::Indeterminate => "indeterminate",
    }
}

pub fn record_dto(r: &SpecializationRecord, violation: bool) -> RecordDto {
    RecordDto {
        t: r.t.to_string(),
        in_d: r.in_d,
        verdict: r.verdict.to_string(),
        root_witness: r.root_witness.as_ref().map(|w| WitnessDto {
            index: w.index,
            root: w.root.to_string(),
        }),
        factorization_type: r.factorization_type.parts().to_vec(),
        galois: r.galois.as_ref().map(GaloisDto::from),
        reference_match: r.reference_match.map(|m| match_str(m).to_string()),
        violation,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub excluded: usize,
    pub exceptional: usize,
    pub generic: usize,
    pub indeterminate: usize,
    pub violations: usize,
    /// Fraction of records outside `D` with a determinate comparison.
    pub determinacy: f64,
    pub invalid_configuration: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub fixture: String,
    pub kind: String,
    pub height_bound: u64,
    pub prime_budget: usize,
    #[serde(rename = "D")]
    pub d: Vec<String>,
    pub reference: GroupDto,
    pub generic_factorization_type: Vec<usize>,
    pub warnings: Vec<String>,
    pub summary: Summary,
    pub records: Vec<RecordDto>,
}

impl VerifyReport {
    pub fn new(
        fixture: &str,
        data: &HitData,
        reference: &GroupRef,
        generic_type: &Partition,
        budget: usize,
        warnings: Vec<String>,
        rep: &EquivalenceReport,
    ) -> Self {
        let records = rep
            .records
            .iter()
            .enumerate()
            .map(|(i, r)| record_dto(r, rep.violations.binary_search(&i).is_ok()))
            .collect();
        VerifyReport {
            fixture: fixture.to_string(),
            kind: rep.kind.to_string(),
            height_bound: rep.height_bound,
            prime_budget: budget,
            d: data.d.iter().map(|q| q.to_string()).collect(),
            reference: reference.into(),
            generic_factorization_type: generic_type.parts().to_vec(),
            warnings,
            summary: Summary {
                records: rep.records.len(),
                excluded: rep.counts.excluded,
                exceptional: rep.counts.exceptional,
                generic: rep.counts.generic,
                indeterminate: rep.counts.indeterminate,
                violations: rep.violations.len(),
                determinacy: rep.determinacy(),
                invalid_configuration: rep.invalid_configuration.clone(),
                passed: rep.passed(),
            },
            records,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    /// Exceptional `t` the parametrization does not reach.
    pub unexplained: Vec<String>,
    /// Parametrized `t` (outside `D`) missing from the enumeration.
    pub missed: Vec<String>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub fixture: String,
    pub height_bound: u64,
    #[serde(rename = "D")]
    pub d: Vec<String>,
    pub count: usize,
    pub records: Vec<RecordDto>,
    pub cross_check: Option<CrossCheck>,
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report DTOs serialize");
    s.push('\n');
    s
}

fn witness_cell(r: &RecordDto) -> String {
    r.root_witness
        .as_ref()
        .map(|w| format!("S[{}] @ {}", w.index, w.root))
        .unwrap_or_else(|| "-".into())
}

fn group_cell(r: &RecordDto) -> String {
    match &r.galois {
        None => "-".into(),
        Some(g) if g.candidates.is_empty() => "reducible".into(),
        Some(g) if g.candidates.len() == 1 => g.candidates[0].clone(),
        Some(g) => format!("{{{}}}", g.candidates.join(",")),
    }
}

fn type_cell(r: &RecordDto) -> String {
    let parts: Vec<String> = r.factorization_type.iter().map(|d| d.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn render_rows(out: &mut String, records: &[RecordDto]) {
    let rows: Vec<[String; 7]> = records
        .iter()
        .map(|r| {
            [
                r.t.clone(),
                r.verdict.clone(),
                witness_cell(r),
                type_cell(r),
                group_cell(r),
                r.reference_match.clone().unwrap_or_else(|| "-".into()),
                if r.violation { "VIOLATION".into() } else { String::new() },
            ]
        })
        .collect();
    let header = ["t", "verdict", "witness", "type", "group", "match", ""];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut line = |cells: &[&str]| {
        let mut l = String::new();
        for (i, (c, w)) in cells.iter().zip(widths).enumerate() {
            if i > 0 {
                l.push_str("  ");
            }
            let _ = write!(l, "{c:<w$}");
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&header);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&cells);
    }
}

pub fn render_verify_table(r: &VerifyReport) -> String {
    let mut out = String::new();
    let label = r.reference.label.as_deref().unwrap_or("?");
    let _ = writeln!(
        out,
        "{} check on {} up to height {} (reference {label}, order {}{})",
        r.kind,
        r.fixture,
        r.height_bound,
        r.reference.order,
        if r.reference.derived { ", sampled" } else { "" }
    );
    let _ = writeln!(out, "D = {{{}}}", r.d.join(", "));
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out.push('\n');
    render_rows(&mut out, &r.records);
    let s = &r.summary;
    out.push('\n');
    let _ = writeln!(
        out,
        "records {}: excluded {}, exceptional {}, generic {}, indeterminate {}",
        s.records, s.excluded, s.exceptional, s.generic, s.indeterminate
    );
    let _ = writeln!(out, "violations {}, determinacy {:.4}", s.violations, s.determinacy);
    if let Some(msg) = &s.invalid_configuration {
        let _ = writeln!(out, "invalid configuration: {msg}");
    }
    let _ = writeln!(out, "{}", if s.passed { "PASS" } else { "FAIL" });
    out
}

pub fn render_enumerate_table(r: &EnumerateReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} exceptional parameters of {} up to height {} (D = {{{}}})",
        r.count,
        r.fixture,
        r.height_bound,
        r.d.join(", ")
    );
    out.push('\n');
    render_rows(&mut out, &r.records);
    if let Some(c) = &r.cross_check {
        out.push('\n');
        let _ = writeln!(
            out,
            "parametrization cross-check: {}",
            if c.agrees { "agrees" } else { "DISAGREES" }
        );
        if !c.unexplained.is_empty() {
            let _ = writeln!(out, "  not in the image: {}", c.unexplained.join(", "));
        }
        if !c.missed.is_empty() {
            let _ = writeln!(out, "  image values not enumerated: {}", c.missed.join(", "));
        }
    }
    out
}
