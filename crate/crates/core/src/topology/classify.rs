use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The two conventions that make the null set behave.
///
/// Both are on in [`Conventions::STANDARD`]; switching one off is how the
/// checker's mutation tests simulate classifier drift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    /// `Φ_E` counts as somewhere dense.
    pub null_somewhere_dense: bool,
    /// `Φ_E` counts as sw-open (the first disjunct of the definition).
    pub null_sw_open: bool,
}

impl Conventions {
    pub const STANDARD: Conventions = Conventions {
        null_somewhere_dense: true,
        null_sw_open: true,
    };
}

impl Default for Conventions {
    fn default() -> Self {
        Self::STANDARD
    }
}

/// Boolean profile of a soft set relative to a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassificationVector {
    pub open: bool,
    pub closed: bool,
    pub dense: bool,
    pub co_dense: bool,
    pub semiopen: bool,
    pub semiclosed: bool,
    pub beta_open: bool,
    pub somewhere_dense: bool,
    pub sw_open: bool,
    pub sw_closed: bool,
}

impl ClassificationVector {
    pub fn get(&self, property: SetProperty) -> bool {
        match property {
            SetProperty::Open => self.open,
            SetProperty::Closed => self.closed,
            SetProperty::Dense => self.dense,
            SetProperty::CoDense => self.co_dense,
            SetProperty::Semiopen => self.semiopen,
            SetProperty::Semiclosed => self.semiclosed,
            SetProperty::BetaOpen => self.beta_open,
            SetProperty::SomewhereDense => self.somewhere_dense,
            SetProperty::SwOpen => self.sw_open,
            SetProperty::SwClosed => self.sw_closed,
        }
    }
}

impl fmt::Display for ClassificationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in SetProperty::ALL.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{:<16} {}", format!("{p}:"), self.get(*p))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetProperty {
    Open,
    Closed,
    Dense,
    CoDense,
    Semiopen,
    Semiclosed,
    BetaOpen,
    SomewhereDense,
    SwOpen,
    SwClosed,
}

impl SetProperty {
    pub const ALL: [SetProperty; 10] = [
        SetProperty::Open,
        SetProperty::Closed,
        SetProperty::Dense,
        SetProperty::CoDense,
        SetProperty::Semiopen,
        SetProperty::Semiclosed,
        SetProperty::BetaOpen,
        SetProperty::SomewhereDense,
        SetProperty::SwOpen,
        SetProperty::SwClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetProperty::Open => "open",
            SetProperty::Closed => "closed",
            SetProperty::Dense => "dense",
            SetProperty::CoDense => "co-dense",
            SetProperty::Semiopen => "semiopen",
            SetProperty::Semiclosed => "semiclosed",
            SetProperty::BetaOpen => "β-open",
            SetProperty::SomewhereDense => "somewhere dense",
            SetProperty::SwOpen => "sw-open",
            SetProperty::SwClosed => "sw-closed",
        }
    }
}

impl fmt::Display for SetProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetProperty {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SetProperty::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown set property `{s}`"))
    }
}
