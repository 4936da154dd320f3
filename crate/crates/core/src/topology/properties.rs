use serde::{Deserialize, Serialize};

/// Which pairs of soft points the `T_i` axioms quantify over.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separation {
    /// Pairs `P^x_e, P^y_e` sharing a parameter, `x ≠ y`.
    #[default]
    SameParameter,
    /// All pairs of distinct soft points.
    AllPoints,
}

/// Space-level properties. With no qualifying pair of soft points every
/// separation axiom holds vacuously.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceProperties {
    pub hyperconnected: bool,
    pub connected: bool,
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub separable: bool,
    pub compact: bool,
    pub finite_note: &'static str,
}

impl SpaceProperties {
    pub const FINITE_NOTE: &'static str =
        "separable and compact hold trivially on finite models";
}
