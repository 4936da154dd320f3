//! Finite soft topological spaces: soft sets, soft topologies, soft functions,
//! the somewhat-open classifiers, and a bounded-exhaustive proposition checker.

pub mod checker;
pub mod document;
pub mod enumerate;
pub mod error;
pub mod function;
pub mod soft_set;
pub mod topology;
pub mod universe;

pub use checker::{
    check_proposition, find_strictness_witness, replay, run_ids, run_report, CheckConfig, PropositionId, Report,
    SearchBudget, Verdict, Witness,
};
pub use error::{Error, Result};
pub use function::{classify_map, FunctionClassification, MapProperty, Restriction, SoftFunction};
pub use soft_set::{FlatSet, SoftPoint, SoftSet};
pub use topology::{
    ClassificationVector, Conventions, Separation, SetProperty, SoftTopology, SpaceProperties,
    SpaceView, Violation,
};
pub use universe::Universe;
