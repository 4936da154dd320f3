//! The proposition catalog as executable checks.
//!
//! Universal statements are quantified over every soft topology (and, for
//! map-level statements, every soft function between two such spaces) up to
//! `exhaustive_cells` cells, then over seeded random instances up to
//! `max_cells`. Strictness searches walk spaces in canonical order and stop
//! at the first witness.

mod catalog;
mod props;
mod report;
mod search;
mod strict;
mod witness;

use serde::{Deserialize, Serialize};

use crate::enumerate::MAX_ENUMERATION_CELLS;
use crate::topology::{Conventions, Separation};

pub use catalog::{Kind, PropositionId};
pub use report::{run_ids, run_report, Report, Summary};
pub use witness::{replay, NamedSet, Verdict, Witness};

/// Limits for one check or search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchBudget {
    /// Largest `|E|·|X|` examined on either side of a map.
    pub max_cells: usize,
    /// Cell counts up to here are enumerated exhaustively; the rest up to
    /// `max_cells` are sampled.
    pub exhaustive_cells: usize,
    /// Random instances per sampled cell count.
    pub sample_count: usize,
    pub seed: u64,
    /// Instances examined per id before the run is marked incomplete.
    pub max_checks: u64,
    /// Quantify over one representative per isomorphism class.
    pub symmetry: bool,
    /// Largest cell count a strictness search reaches.
    pub witness_cells: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_cells: 4,
            exhaustive_cells: 4,
            sample_count: 1000,
            seed: 0,
            max_checks: 10_000_000,
            symmetry: true,
            witness_cells: MAX_ENUMERATION_CELLS,
        }
    }
}

impl SearchBudget {
    /// Exhaustive up to `cells`, nothing sampled.
    pub fn exhaustive(cells: usize) -> Self {
        SearchBudget {
            max_cells: cells,
            exhaustive_cells: cells,
            ..Self::default()
        }
    }

    /// Cell counts enumerated exhaustively.
    pub(crate) fn exhaustive_range(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.exhaustive_cells.min(self.max_cells).min(MAX_ENUMERATION_CELLS)
    }

    /// Cell counts sampled at random.
    pub(crate) fn sampled_range(&self) -> std::ops::RangeInclusive<usize> {
        let low = *self.exhaustive_range().end() + 1;
        low..=self.max_cells.min(crate::universe::DEFAULT_CELL_CAP)
    }
}

/// How the classifiers and the search behave.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CheckConfig {
    pub conventions: Conventions,
    pub separation: Separation,
    /// Evaluate instances on the rayon pool. Results are identical either way.
    #[serde(skip)]
    pub serial: bool,
}

/// Runs one catalog entry: a universal check or a strictness search.
pub fn check_proposition(id: PropositionId, budget: &SearchBudget, config: &CheckConfig) -> Witness {
    search::evaluate(id, budget, config)
}

/// Searches for the smallest space (or pair of spaces) separating the two
/// classes named by `id`. Universal ids are checked instead.
pub fn find_strictness_witness(id: PropositionId, budget: &SearchBudget, config: &CheckConfig) -> Witness {
    search::evaluate(id, budget, config)
}
