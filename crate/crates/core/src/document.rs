//! JSON documents describing spaces and functions.
//!
//! `Φ_E` and `X_E` are implicit in every space document. A parameter missing
//! from a sections map has the empty section.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::SoftFunction;
use crate::soft_set::SoftSet;
use crate::topology::SoftTopology;
use crate::universe::Universe;

/// `parameter → points`.
pub type Sections = IndexMap<String, Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniverseBlock {
    pub points: Vec<String>,
    pub parameters: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub universe: UniverseBlock,
    /// Named open sets, or a generating family when `subbasis` is set.
    #[serde(default)]
    pub opens: IndexMap<String, Sections>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub subbasis: bool,
    /// Further named soft sets, for classification.
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub sets: IndexMap<String, Sections>,
}

/// A parsed space with its named sets resolved.
#[derive(Debug, Clone)]
pub struct Space {
    pub universe: Arc<Universe>,
    pub topology: SoftTopology,
    pub named: IndexMap<String, SoftSet>,
}

impl Space {
    pub fn set(&self, name: &str) -> Option<&SoftSet> {
        self.named.get(name)
    }
}

impl SpaceDocument {
    pub fn universe(&self) -> Result<Arc<Universe>> {
        Universe::new(self.universe.points.clone(), self.universe.parameters.clone())
    }

    /// The named sets, opens first. Fails on the first unknown label.
    pub fn resolve(&self, universe: &Arc<Universe>) -> Result<IndexMap<String, SoftSet>> {
        let mut named = IndexMap::new();
        for (name, sections) in self.opens.iter().chain(&self.sets) {
            named.insert(name.clone(), SoftSet::from_sections(universe, sections)?);
        }
        Ok(named)
    }

    /// The open family as listed, with `Φ_E` and `X_E` added.
    pub fn family(&self, universe: &Arc<Universe>) -> Result<Vec<SoftSet>> {
        let mut family = vec![SoftSet::null(universe), SoftSet::absolute(universe)];
        for sections in self.opens.values() {
            family.push(SoftSet::from_sections(universe, sections)?);
        }
        Ok(family)
    }

    /// Generates from the listed family when `subbasis` is set, otherwise
    /// validates it.
    pub fn build(&self) -> Result<Space> {
        let universe = self.universe()?;
        let named = self.resolve(&universe)?;
        let family = self.family(&universe)?;
        let topology = if self.subbasis {
            SoftTopology::generate(&universe, family)?
        } else {
            SoftTopology::new(&universe, family)?
        };
        Ok(Space {
            universe,
            topology,
            named,
        })
    }

    /// Lists every open set other than `Φ_E` and `X_E` as `U1, U2, ...`.
    pub fn from_topology(topology: &SoftTopology) -> Self {
        let universe = topology.universe();
        let full = universe.full_mask();
        let opens = topology
            .open_bits()
            .iter()
            .filter(|&&b| b != 0 && b != full)
            .enumerate()
            .map(|(i, &b)| (format!("U{}", i + 1), sections_of(universe, b)))
            .collect();
        SpaceDocument {
            universe: UniverseBlock {
                points: universe.points().to_vec(),
                parameters: universe.params().to_vec(),
            },
            opens,
            subbasis: false,
            sets: IndexMap::new(),
        }
    }

    pub fn with_set(mut self, name: impl Into<String>, set: &SoftSet) -> Self {
        self.sets.insert(name.into(), sections_of(set.universe(), set.bits()));
        self
    }
}

/// Every parameter in universe order, including empty sections.
pub fn sections_of(universe: &Universe, bits: u32) -> Sections {
    universe
        .params()
        .iter()
        .enumerate()
        .map(|(e, name)| {
            let points = (0..universe.point_count())
                .filter(|&x| bits & (1 << universe.cell(e, x)) != 0)
                .map(|x| universe.points()[x].clone())
                .collect();
            (name.clone(), points)
        })
        .collect()
}

/// Where a function document finds its domain or codomain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    /// A path, relative to the function document.
    Path(String),
    Inline(Box<SpaceDocument>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDocument {
    pub domain: SpaceRef,
    pub codomain: SpaceRef,
    /// `u`: domain point → codomain point. Must be total.
    pub points: IndexMap<String, String>,
    /// `p`: domain parameter → codomain parameter. Must be total.
    pub parameters: IndexMap<String, String>,
}

impl FunctionDocument {
    pub fn build(&self, domain: &Arc<Universe>, codomain: &Arc<Universe>) -> Result<SoftFunction> {
        SoftFunction::from_labels(domain, codomain, &self.points, &self.parameters)
    }
}

/// A function between two spaces listed elsewhere in the same record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub domain: usize,
    pub codomain: usize,
    pub points: IndexMap<String, String>,
    pub parameters: IndexMap<String, String>,
}

impl MapRecord {
    pub fn of(f: &SoftFunction, domain: usize, codomain: usize) -> Self {
        let (d, c) = (f.domain(), f.codomain());
        MapRecord {
            domain,
            codomain,
            points: f
                .point_map()
                .iter()
                .enumerate()
                .map(|(x, &y)| (d.points()[x].clone(), c.points()[y].clone()))
                .collect(),
            parameters: f
                .param_map()
                .iter()
                .enumerate()
                .map(|(e, &e2)| (d.params()[e].clone(), c.params()[e2].clone()))
                .collect(),
        }
    }

    pub fn build(&self, domain: &Arc<Universe>, codomain: &Arc<Universe>) -> Result<SoftFunction> {
        SoftFunction::from_labels(domain, codomain, &self.points, &self.parameters)
    }
}

/// The label an error is about, for pointing at it in a source file.
pub fn offending_label(error: &Error) -> Option<&str> {
    match error {
        Error::UnknownPoint(l) | Error::UnknownParameter(l) => Some(l),
        Error::DuplicateLabel { label, .. } => Some(label),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FOUR_POINT: &str = r#"{
        "universe": {"points": ["w", "x", "y", "z"], "parameters": ["e1", "e2"]},
        "opens": {
            "F": {"e1": ["x", "z"], "e2": ["w", "x"]},
            "G": {"e1": ["w", "x", "y", "z"], "e2": ["y", "z"]},
            "H": {"e1": ["x", "z"]}
        },
        "sets": {"Y": {"e1": ["x", "y"], "e2": ["x", "y"]}}
    }"#;

    #[test]
    fn parses_and_validates() {
        let doc: SpaceDocument = serde_json::from_str(FOUR_POINT).unwrap();
        let space = doc.build().unwrap();
        assert_eq!(space.topology.len(), 5);
        assert!(space.set("H").unwrap().section("e2").unwrap().is_empty());
        assert!(space.set("Y").is_some());
    }

    #[test]
    fn round_trip_is_stable() {
        let doc: SpaceDocument = serde_json::from_str(FOUR_POINT).unwrap();
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let again: SpaceDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc, again);

        let generated = SpaceDocument::from_topology(&doc.build().unwrap().topology);
        let text = serde_json::to_string(&generated).unwrap();
        let back: SpaceDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, generated);
        assert_eq!(back.build().unwrap().topology, doc.build().unwrap().topology);
    }

    #[test]
    fn missing_intersection_is_reported() {
        let mut doc: SpaceDocument = serde_json::from_str(FOUR_POINT).unwrap();
        doc.opens.shift_remove("H");
        assert!(matches!(doc.build(), Err(Error::NotATopology(_))));
        doc.subbasis = true;
        assert_eq!(doc.build().unwrap().topology.len(), 5);
    }

    #[test]
    fn unknown_labels_are_named() {
        let mut doc: SpaceDocument = serde_json::from_str(FOUR_POINT).unwrap();
        doc.sets.insert("bad".into(), [("e1".to_string(), vec!["q".to_string()])].into_iter().collect());
        let err = doc.build().unwrap_err();
        assert_eq!(offending_label(&err), Some("q"));
    }

    #[test]
    fn function_documents() {
        let text = r#"{
            "domain": "t.json",
            "codomain": "s.json",
            "points": {"x": "x", "y": "y", "z": "z"},
            "parameters": {"e1": "e1", "e2": "e2"}
        }"#;
        let doc: FunctionDocument = serde_json::from_str(text).unwrap();
        assert_eq!(doc.domain, SpaceRef::Path("t.json".into()));
        let u = Universe::new(["x", "y", "z"], ["e1", "e2"]).unwrap();
        assert_eq!(doc.build(&u, &u).unwrap(), SoftFunction::identity(&u));

        let f = SoftFunction::new(&u, &u, vec![1, 1, 0], vec![1, 1]).unwrap();
        let record = MapRecord::of(&f, 0, 1);
        assert_eq!(record.build(&u, &u).unwrap(), f);
    }
}
