use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::catalog::PropositionId;
use super::witness::{Verdict, Witness};
use super::{search, CheckConfig, SearchBudget};
use crate::document::{Sections, SpaceDocument};
use crate::topology::{Conventions, Separation};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub confirmed: usize,
    pub vacuous: usize,
    pub counterexamples: usize,
    pub found: usize,
    pub not_found: usize,
    /// Universal checks or searches cut short by `max_checks`.
    pub incomplete: usize,
}

/// Results for a list of catalog ids, in the order requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub budget: SearchBudget,
    pub conventions: Conventions,
    pub separation: Separation,
    pub entries: Vec<Witness>,
    pub summary: Summary,
}

/// Every catalog id.
pub fn run_report(budget: &SearchBudget, config: &CheckConfig) -> Report {
    run_ids(PropositionId::ALL, budget, config)
}

pub fn run_ids(ids: &[PropositionId], budget: &SearchBudget, config: &CheckConfig) -> Report {
    let entries: Vec<Witness> = ids.iter().map(|&id| search::evaluate(id, budget, config)).collect();
    let mut summary = Summary {
        total: entries.len(),
        ..Summary::default()
    };
    for w in &entries {
        match &w.verdict {
            Verdict::Confirmed { incomplete, .. } => {
                summary.confirmed += 1;
                summary.incomplete += usize::from(*incomplete);
            }
            Verdict::Vacuous { .. } => summary.vacuous += 1,
            Verdict::Counterexample => summary.counterexamples += 1,
            Verdict::Found { .. } => summary.found += 1,
            Verdict::NotFound { incomplete, .. } => {
                summary.not_found += 1;
                summary.incomplete += usize::from(*incomplete);
            }
        }
    }
    Report {
        budget: *budget,
        conventions: config.conventions,
        separation: config.separation,
        entries,
        summary,
    }
}

impl Report {
    /// A counterexample to a universal statement was found.
    pub fn has_counterexample(&self) -> bool {
        self.summary.counterexamples > 0
    }

    /// The report as one JSON document. Wall times are dropped unless asked
    /// for, so equal inputs give equal bytes.
    pub fn to_machine(&self, timings: bool) -> String {
        let mut report = self.clone();
        if !timings {
            report.entries = report.entries.into_iter().map(Witness::without_timing).collect();
        }
        serde_json::to_string_pretty(&report).expect("reports always serialize")
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for w in &self.entries {
            let status = match &w.verdict {
                Verdict::Confirmed { incomplete: true, .. } => "confirmed (incomplete)",
                Verdict::Confirmed { .. } => "confirmed",
                Verdict::Vacuous { .. } => "vacuous",
                Verdict::Counterexample => "COUNTEREXAMPLE",
                Verdict::Found { .. } => "found",
                Verdict::NotFound { .. } => "not found within budget",
            };
            let _ = write!(out, "{:<26} {status}", w.id.as_str());
            if let (true, Some(ms)) = (timings, w.elapsed_ms) {
                let _ = write!(out, "  [{ms} ms]");
            }
            let _ = writeln!(out, "\n    {}", w.statement);
            let _ = writeln!(out, "    {}", w.trace);
            for (i, space) in w.spaces.iter().enumerate() {
                let _ = writeln!(out, "    space {i}: {}", describe_space(space));
            }
            for set in &w.sets {
                let _ = writeln!(out, "    {} = {} in space {}", set.name, render(&set.sections), set.space);
            }
            if let Some(f) = &w.function {
                let u: Vec<String> = f.points.iter().map(|(a, b)| format!("{a}↦{b}")).collect();
                let p: Vec<String> = f.parameters.iter().map(|(a, b)| format!("{a}↦{b}")).collect();
                let _ = writeln!(out, "    f: u = {{{}}}, p = {{{}}}", u.join(", "), p.join(", "));
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} ids: {} confirmed, {} vacuous, {} counterexamples, {} witnesses found, {} not found, {} incomplete",
            s.total, s.confirmed, s.vacuous, s.counterexamples, s.found, s.not_found, s.incomplete
        );
        out
    }
}

fn render(sections: &Sections) -> String {
    let parts: Vec<String> = sections
        .iter()
        .map(|(e, xs)| match xs.is_empty() {
            true => format!("({e},∅)"),
            false => format!("({e},{{{}}})", xs.join(",")),
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn describe_space(doc: &SpaceDocument) -> String {
    let opens: Vec<String> = doc.opens.iter().map(|(n, s)| format!("{n} = {}", render(s))).collect();
    format!(
        "X = {{{}}}, E = {{{}}}, opens besides Φ_E and X_E: [{}]",
        doc.universe.points.join(","),
        doc.universe.parameters.join(","),
        opens.join("; ")
    )
}
