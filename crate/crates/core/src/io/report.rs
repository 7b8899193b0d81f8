//! Verdict reports: an aligned text table with embedded witness documents,
//! and a JSON document carrying the same verdicts.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::profile::{Ballot, Profile};
use crate::set::{Alternative, ChoiceSet};
use crate::verify::{AxiomVerdict, Outcome, TheoremReport, Universe, Witness};

use super::profile_doc::serialize_profile;

pub const PROFILE_BEGIN: &str = "--- profile ---";
pub const PROFILE_END: &str = "--- end ---";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub json: String,
}

#[derive(Serialize, Deserialize)]
struct ReportDocument {
    verdicts: Vec<AxiomVerdict>,
}

pub fn describe_universe(u: &Universe) -> String {
    let mut s = format!("m={} n<={}", u.m, u.n_max);
    if u.k_hom != 2 {
        write!(s, " k<={}", u.k_hom).unwrap();
    }
    if let Some(cap) = u.margin_cap {
        write!(s, " |g|<={cap}").unwrap();
    }
    if u.odd_only {
        s.push_str(" odd");
    }
    if u.canonical {
        s.push_str(" canonical");
    }
    s
}

fn ballot_text(b: &Ballot) -> String {
    let names: Vec<String> = b.ranking().map(|x| Alternative::from(x).name(b.m())).collect();
    names.join(" ")
}

fn set_text(s: ChoiceSet, m: usize) -> String {
    s.display(m)
}

fn names(xs: &[usize], m: usize) -> String {
    let v: Vec<String> = xs.iter().map(|&x| Alternative::from(x).name(m)).collect();
    v.join(",")
}

/// One-line summary of a witness; voters are numbered from 1.
pub fn describe_witness(w: &Witness, m: usize) -> String {
    match w {
        Witness::Manipulation(x) | Witness::UnsafeDeviation(x) => format!(
            "voter {} ({}) reports {}: {} -> {} [{}]",
            x.voter + 1,
            ballot_text(&x.true_ballot),
            ballot_text(&x.misreport),
            set_text(x.honest_set, m),
            set_text(x.manipulated_set, m),
            x.extension.name()
        ),
        Witness::GroupManipulation(g) => {
            let parts: Vec<String> =
                g.voters.iter().zip(&g.misreports).map(|(v, b)| format!("voter {} reports {}", v + 1, ballot_text(b))).collect();
            format!("{}: {} -> {}", parts.join(", "), set_text(g.honest_set, m), set_text(g.manipulated_set, m))
        }
        Witness::ProfilePair { first_set, second_set, .. } => {
            format!("two profiles: {} vs {}", set_text(*first_set, m), set_text(*second_set, m))
        }
        Witness::Relabeling { permutation, set, relabeled_set, .. } => {
            let renames: Vec<String> = permutation
                .iter()
                .enumerate()
                .filter(|(x, y)| x != *y)
                .map(|(x, &y)| format!("{}->{}", Alternative::from(x).name(m), Alternative::from(y).name(m)))
                .collect();
            format!("relabel {}: {} -> {}", renames.join(" "), set_text(*set, m), set_text(*relabeled_set, m))
        }
        Witness::Replication { k, set, replicated_set, .. } => {
            format!("{k} copies: {} -> {}", set_text(*set, m), set_text(*replicated_set, m))
        }
        Witness::Modification { voter, focus, before_set, after_set, .. } => format!(
            "voter {} modifies [{}]: {} -> {}",
            voter + 1,
            names(focus, m),
            set_text(*before_set, m),
            set_text(*after_set, m)
        ),
        Witness::SingleProfile { set, alternatives, better_set, .. } => {
            let mut s = format!("outcome {}", set_text(*set, m));
            if !alternatives.is_empty() {
                write!(s, ", culprit {}", names(alternatives, m)).unwrap();
            }
            if let Some(b) = better_set {
                write!(s, ", unanimously preferred {}", set_text(*b, m)).unwrap();
            }
            s
        }
        Witness::Missing { sets } => {
            let v: Vec<String> = sets.iter().map(|s| set_text(*s, m)).collect();
            format!("never returned: {}", v.join(" "))
        }
    }
}

fn table_row(cols: [&str; 5]) -> String {
    format!("{:<20} {:<22} {:<18} {:<14} {}", cols[0], cols[1], cols[2], cols[3], cols[4]).trim_end().to_string()
}

/// Renders `verdicts` as text and JSON. Deterministic for identical input.
pub fn serialize_report(verdicts: &[AxiomVerdict]) -> Report {
    let mut text = format!("# sccheck report: {} verdict(s)\n", verdicts.len());
    text.push_str(&table_row(["axiom", "rule", "universe", "outcome", "checked"]));
    text.push('\n');
    for v in verdicts {
        let rule = v.rule.to_string();
        let universe = describe_universe(&v.universe);
        let checked = v.checked.to_string();
        text.push_str(&table_row([v.axiom.name(), &rule, &universe, v.outcome.name(), &checked]));
        text.push('\n');
    }
    for (i, v) in verdicts.iter().enumerate() {
        let Some(w) = &v.witness else { continue };
        writeln!(text, "\n## witness {} ({}, {})", i + 1, v.axiom, v.rule).unwrap();
        writeln!(text, "{}", describe_witness(w, v.universe.m)).unwrap();
        for p in w.profiles() {
            embed_profile(&mut text, &p);
        }
    }
    let json = serde_json::to_string_pretty(&ReportDocument { verdicts: verdicts.to_vec() }).expect("plain data serializes");
    Report { text, json }
}

fn embed_profile(text: &mut String, p: &Profile) {
    text.push_str(PROFILE_BEGIN);
    text.push('\n');
    text.push_str(&serialize_profile(p));
    text.push_str(PROFILE_END);
    text.push('\n');
}

/// Profile documents embedded in a text report, in order.
pub fn embedded_profiles(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut current: Option<String> = None;
    for line in text.lines() {
        match (line, current.as_mut()) {
            (PROFILE_BEGIN, None) => current = Some(String::new()),
            (PROFILE_END, Some(_)) => out.push(current.take().unwrap()),
            (l, Some(doc)) => {
                doc.push_str(l);
                doc.push('\n');
            }
            _ => {}
        }
    }
    out
}

/// Reads the verdicts back from a JSON report.
pub fn parse_report(json: &str) -> Result<Vec<AxiomVerdict>, ParseError> {
    let doc: ReportDocument = serde_json::from_str(json).map_err(|e| ParseError::Json(e.to_string()))?;
    Ok(doc.verdicts)
}

/// JSON rendering of a catalog sweep.
pub fn theorem_report_json(report: &TheoremReport) -> String {
    serde_json::to_string_pretty(report).expect("plain data serializes")
}

fn cell(o: Option<&Outcome>) -> &'static str {
    match o {
        Some(Outcome::HoldsOnUniverse) => "+",
        Some(Outcome::ViolatedWithWitness) => "x",
        Some(Outcome::NotWitnessedInUniverse) => "?",
        None => "",
    }
}

/// Rule-by-axiom matrix (`+` holds, `x` violated, `?` not witnessed) and the
/// consistency checks.
pub fn render_theorem_report(report: &TheoremReport) -> String {
    let mut out = format!("# catalog sweep on {}\n", describe_universe(&report.universe));
    let width = report.rows.iter().map(|r| r.rule.to_string().len()).max().unwrap_or(4).max(4);
    write!(out, "{:<width$}", "rule").unwrap();
    for a in &report.axioms {
        write!(out, " {}", a.name()).unwrap();
    }
    out.push('\n');
    for row in &report.rows {
        write!(out, "{:<width$}", row.rule.to_string()).unwrap();
        for a in &report.axioms {
            write!(out, " {:^w$}", cell(row.outcomes.get(a)), w = a.name().len()).unwrap();
        }
        out.push('\n');
    }
    out.push('\n');
    for c in &report.checks {
        writeln!(out, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail).unwrap();
    }
    out
}
