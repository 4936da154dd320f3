use serde::{Deserialize, Serialize};

use super::catalog::{Kind, PropositionId};
use super::props::{self, Ctx, Failure, Outcome};
use super::{strict, CheckConfig};
use crate::document::{sections_of, MapRecord, Sections, SpaceDocument};
use crate::error::{Error, Result};
use crate::function::SoftFunction;
use crate::topology::SoftTopology;

/// Outcome of one catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    /// No counterexample among `instances`; `non_vacuous` of them met the
    /// hypothesis.
    Confirmed {
        instances: u64,
        non_vacuous: u64,
        exhaustive_cells: usize,
        samples: u64,
        incomplete: bool,
    },
    /// Nothing examined met the hypothesis.
    Vacuous { instances: u64, reason: String },
    /// The first failing instance in canonical order; see the witness body.
    Counterexample,
    /// A strictness witness on a universe with `cells` cells.
    Found { cells: usize },
    NotFound {
        searched_cells: usize,
        checks: u64,
        incomplete: bool,
    },
}

/// A soft set named in a witness, over `spaces[space]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSet {
    pub name: String,
    pub space: usize,
    pub sections: Sections,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub id: PropositionId,
    pub statement: String,
    pub verdict: Verdict,
    /// Spaces involved; a function maps `spaces[0]` to `spaces[1]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spaces: Vec<SpaceDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<MapRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<NamedSet>,
    pub trace: String,
    /// Wall time. Left out of reports meant for comparison.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Witness {
    pub(crate) fn bare(id: PropositionId, verdict: Verdict, trace: String) -> Self {
        Witness {
            id,
            statement: id.statement().to_string(),
            verdict,
            spaces: Vec::new(),
            function: None,
            sets: Vec::new(),
            trace,
            elapsed_ms: None,
        }
    }

    /// Records an instance: its spaces, the optional function and named sets.
    pub(crate) fn instance(
        id: PropositionId,
        verdict: Verdict,
        spaces: &[&SoftTopology],
        function: Option<&SoftFunction>,
        sets: &[(&str, usize, u32)],
        trace: String,
    ) -> Self {
        Witness {
            spaces: spaces.iter().map(|t| SpaceDocument::from_topology(t)).collect(),
            function: function.map(|f| MapRecord::of(f, 0, spaces.len() - 1)),
            sets: sets
                .iter()
                .map(|&(name, space, bits)| NamedSet {
                    name: name.to_string(),
                    space,
                    sections: sections_of(spaces[space].universe(), bits),
                })
                .collect(),
            ..Witness::bare(id, verdict, trace)
        }
    }

    pub(crate) fn counterexample(
        id: PropositionId,
        spaces: &[&SoftTopology],
        function: Option<&SoftFunction>,
        failure: &Failure,
    ) -> Self {
        let sets: Vec<_> = failure.sets.iter().map(|s| (s.name, s.space, s.bits)).collect();
        Witness::instance(id, Verdict::Counterexample, spaces, function, &sets, failure.trace.clone())
    }

    pub fn is_counterexample(&self) -> bool {
        self.verdict == Verdict::Counterexample
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// Rebuilds the instance a witness records from its documents alone and
/// evaluates it again. `None` when the verdict names no instance.
pub fn replay(witness: &Witness, config: &CheckConfig) -> Result<Option<Witness>> {
    let ctx = Ctx {
        conv: config.conventions,
        sep: config.separation,
    };
    let found_cells = match witness.verdict {
        Verdict::Counterexample => None,
        Verdict::Found { cells } => Some(cells),
        _ => return Ok(None),
    };
    let spaces = witness
        .spaces
        .iter()
        .map(|doc| doc.build().map(|space| space.topology))
        .collect::<Result<Vec<_>>>()?;
    let function = match &witness.function {
        Some(record) => Some(record.build(
            spaces[record.domain].universe(),
            spaces[record.codomain].universe(),
        )?),
        None => None,
    };
    let id = witness.id;
    let refuted = |outcome: Outcome| match outcome {
        Outcome::Vacuous => Witness::bare(
            id,
            Verdict::Vacuous {
                instances: 1,
                reason: "the recorded instance does not meet the hypothesis".into(),
            },
            "the recorded instance no longer fails".into(),
        ),
        _ => Witness::bare(
            id,
            Verdict::Confirmed {
                instances: 1,
                non_vacuous: 1,
                exhaustive_cells: 0,
                samples: 0,
                incomplete: false,
            },
            "the recorded instance no longer fails".into(),
        ),
    };
    let vanished = |cells: usize| {
        Witness::bare(
            id,
            Verdict::NotFound {
                searched_cells: cells,
                checks: 1,
                incomplete: false,
            },
            "the recorded instance no longer separates the two classes".into(),
        )
    };
    let rebuilt = match (id.kind(), found_cells) {
        (Kind::SetLevel, None) => match props::check_set(id, ctx, &spaces[0]) {
            Outcome::Fails(failure) => Witness::counterexample(id, &[&spaces[0]], None, &failure),
            other => refuted(other),
        },
        (Kind::MapLevel, None) => {
            let f = function.as_ref().ok_or(Error::PartialMap("the witness records no function".into()))?;
            match props::check_map(id, ctx, &spaces[0], f, &spaces[1]) {
                Outcome::Fails(failure) => Witness::counterexample(id, &[&spaces[0], &spaces[1]], Some(f), &failure),
                other => refuted(other),
            }
        }
        (Kind::SetWitness, Some(cells)) => match strict::set_witness(id, ctx, &spaces[0]) {
            Some((sets, trace)) => Witness::instance(id, Verdict::Found { cells }, &[&spaces[0]], None, &sets, trace),
            None => vanished(cells),
        },
        (Kind::MapWitness, Some(cells)) => {
            let f = function.as_ref().ok_or(Error::PartialMap("the witness records no function".into()))?;
            match strict::map_witness(id, ctx, &spaces[0], f, &spaces[1]) {
                Some(trace) => {
                    Witness::instance(id, Verdict::Found { cells }, &[&spaces[0], &spaces[1]], Some(f), &[], trace)
                }
                None => vanished(cells),
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(rebuilt))
}
