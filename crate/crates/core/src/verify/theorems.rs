//! Desk-scale corroboration of the characterization results: the full axiom
//! suite over the rule catalog, plus consistency checks on the verdict matrix.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::rules::Rule;

use super::axioms::{check_axiom, Axiom};
use super::{AxiomVerdict, Outcome, SweepConfig, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub rule: Rule,
    /// Universe the row was checked on (tournament-only rules use its odd part).
    pub universe: Universe,
    pub outcomes: BTreeMap<Axiom, Outcome>,
}

impl TheoremRow {
    pub fn holds(&self, axiom: Axiom) -> bool {
        self.outcomes.get(&axiom).is_some_and(|o| o.holds())
    }

    pub fn holds_all(&self, axioms: &[Axiom]) -> bool {
        axioms.iter().all(|&a| self.holds(a))
    }

    /// Members of `axioms` that do not hold.
    pub fn failing(&self, axioms: &[Axiom]) -> Vec<Axiom> {
        axioms.iter().copied().filter(|&a| !self.holds(a)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub universe: Universe,
    pub axioms: Vec<Axiom>,
    pub rows: Vec<TheoremRow>,
    pub checks: Vec<TheoremCheck>,
    /// Every verdict, witnesses included, row by row.
    pub verdicts: Vec<AxiomVerdict>,
}

impl TheoremReport {
    pub fn row(&self, rule: Rule) -> Option<&TheoremRow> {
        self.rows.iter().find(|r| r.rule == rule)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// The four properties of the top-cycle characterization.
pub const CHARACTERIZATION: [Axiom; 4] =
    [Axiom::Pairwiseness, Axiom::Strategyproofness, Axiom::Homogeneity, Axiom::SetNonImposition];

fn names(rules: &[Rule]) -> String {
    let v: Vec<String> = rules.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn axiom_names(axioms: &[Axiom]) -> String {
    let v: Vec<&str> = axioms.iter().map(|a| a.name()).collect();
    format!("{{{}}}", v.join(", "))
}

/// Runs `axioms` on every catalog rule and evaluates the consistency checks.
pub fn corroborate_theorems(
    universe: &Universe,
    axioms: &[Axiom],
    config: &SweepConfig,
) -> Result<TheoremReport, VerifyError> {
    universe.validate()?;
    let mut rows = Vec::new();
    let mut verdicts = Vec::new();
    for rule in Rule::catalog() {
        let u = if rule == Rule::UncoveredSet { universe.odd_only() } else { *universe };
        let mut outcomes = BTreeMap::new();
        for &axiom in axioms {
            let v = check_axiom(axiom, rule, &u, config)?;
            outcomes.insert(axiom, v.outcome);
            verdicts.push(v);
        }
        rows.push(TheoremRow { rule, universe: u, outcomes });
    }
    let checks = consistency_checks(&rows, axioms);
    Ok(TheoremReport { universe: *universe, axioms: axioms.to_vec(), rows, checks, verdicts })
}

fn consistency_checks(rows: &[TheoremRow], axioms: &[Axiom]) -> Vec<TheoremCheck> {
    let has = |a: &[Axiom]| a.iter().all(|x| axioms.contains(x));
    let mut checks = Vec::new();

    if has(&CHARACTERIZATION) {
        let passing: Vec<Rule> = rows.iter().filter(|r| r.holds_all(&CHARACTERIZATION)).map(|r| r.rule).collect();
        checks.push(TheoremCheck {
            name: "characterization".into(),
            passed: passing == [Rule::TopCycle],
            detail: format!("rules with {}: {}", axiom_names(&CHARACTERIZATION), names(&passing)),
        });
        for (rule, expected) in [
            (Rule::CondorcetRule, Axiom::SetNonImposition),
            (Rule::Omninomination, Axiom::Pairwiseness),
            (Rule::TcStar, Axiom::Homogeneity),
            (Rule::Borda, Axiom::Strategyproofness),
        ] {
            let failing = rows.iter().find(|r| r.rule == rule).map(|r| r.failing(&CHARACTERIZATION)).unwrap_or_default();
            checks.push(TheoremCheck {
                name: format!("independence/{rule}"),
                passed: failing == [expected],
                detail: format!("fails {}", axiom_names(&failing)),
            });
        }
    }

    let hypotheses = [Axiom::Pairwiseness, Axiom::Homogeneity, Axiom::Neutrality, Axiom::NonImposition];
    if has(&hypotheses) && has(&[Axiom::Strategyproofness, Axiom::RobustDominant]) {
        let mismatched: Vec<Rule> = rows
            .iter()
            .filter(|r| r.holds_all(&hypotheses))
            .filter(|r| r.holds(Axiom::Strategyproofness) != r.holds(Axiom::RobustDominant))
            .map(|r| r.rule)
            .collect();
        checks.push(TheoremCheck {
            name: "sp-iff-robust-dominant".into(),
            passed: mismatched.is_empty(),
            detail: format!("rules meeting {} where sp and robust-dominant disagree: {}", axiom_names(&hypotheses), names(&mismatched)),
        });
    }

    if has(&[Axiom::RobustDominant, Axiom::SetNonImposition]) {
        let passing: Vec<Rule> = rows
            .iter()
            .filter(|r| r.holds_all(&[Axiom::RobustDominant, Axiom::SetNonImposition]))
            .map(|r| r.rule)
            .collect();
        checks.push(TheoremCheck {
            name: "robust-dominant-set-non-imposition".into(),
            passed: passing == [Rule::TopCycle],
            detail: format!("robust dominant rules with set-non-imposition: {}", names(&passing)),
        });
    }

    let derived = [Axiom::Wmon, Axiom::Wsmon, Axiom::Iua, Axiom::Wloc];
    if has(&derived) && has(&[Axiom::Strategyproofness, Axiom::Pairwiseness]) {
        let broken: Vec<Rule> = rows
            .iter()
            .filter(|r| r.holds_all(&[Axiom::Strategyproofness, Axiom::Pairwiseness]) && !r.holds_all(&derived))
            .map(|r| r.rule)
            .collect();
        checks.push(TheoremCheck {
            name: "sp-pairwise-implies-derived".into(),
            passed: broken.is_empty(),
            detail: format!("sp and pairwise rules failing {}: {}", axiom_names(&derived), names(&broken)),
        });
    }

    if has(&[Axiom::Strategyproofness, Axiom::StrongCondorcetConsistency, Axiom::Cos]) {
        let broken: Vec<Rule> = rows
            .iter()
            .filter(|r| r.holds_all(&[Axiom::Strategyproofness, Axiom::StrongCondorcetConsistency]) && !r.holds(Axiom::Cos))
            .map(|r| r.rule)
            .collect();
        checks.push(TheoremCheck {
            name: "sp-condorcet-implies-cos".into(),
            passed: broken.is_empty(),
            detail: format!("sp and strongly Condorcet-consistent rules failing cos: {}", names(&broken)),
        });
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_characterization() {
        let report = corroborate_theorems(&Universe::new(3, 2), &CHARACTERIZATION, &SweepConfig::default()).unwrap();
        assert_eq!(report.rows.len(), Rule::catalog().len());
        assert!(report.row(Rule::TopCycle).unwrap().holds_all(&CHARACTERIZATION));
        assert_eq!(report.verdicts.len(), 4 * Rule::catalog().len());
    }

    #[test]
    fn checks_skip_missing_axioms() {
        let report = corroborate_theorems(&Universe::new(2, 1), &[Axiom::Cos], &SweepConfig::default()).unwrap();
        assert!(report.checks.is_empty());
    }
}
