//! Soft sets over a fixed `(X, E)`, their boolean algebra, soft points and
//! the flattening bijection onto plain subsets of `E × X`.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::universe::{same_universe, Universe};

/// A soft set `F_E = {(e, F(e)) : e ∈ E}`.
///
/// Sections are packed into one bit pattern; see [`Universe::cell`] for the
/// layout. Parameters outside a smaller parameter set `A ⊂ E` are simply
/// empty sections.
#[derive(Clone)]
pub struct SoftSet {
    universe: Arc<Universe>,
    bits: u32,
}

impl SoftSet {
    pub fn from_bits(universe: &Arc<Universe>, bits: u32) -> Result<Self> {
        if bits & !universe.full_mask() != 0 {
            return Err(Error::OutOfBounds {
                bits,
                cells: universe.cells(),
            });
        }
        Ok(SoftSet {
            universe: Arc::clone(universe),
            bits,
        })
    }

    pub(crate) fn from_bits_unchecked(universe: &Arc<Universe>, bits: u32) -> Self {
        debug_assert_eq!(bits & !universe.full_mask(), 0);
        SoftSet {
            universe: Arc::clone(universe),
            bits,
        }
    }

    /// `Φ_E`.
    pub fn null(universe: &Arc<Universe>) -> Self {
        Self::from_bits_unchecked(universe, 0)
    }

    /// `X_E`.
    pub fn absolute(universe: &Arc<Universe>) -> Self {
        Self::from_bits_unchecked(universe, universe.full_mask())
    }

    /// Builds a soft set from `parameter → points` sections. Parameters that
    /// do not appear get the empty section.
    pub fn from_sections<I, K, V, S>(universe: &Arc<Universe>, sections: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u32;
        for (param, points) in sections {
            let e = universe.param_index(param.as_ref())?;
            for point in points {
                let x = universe.point_index(point.as_ref())?;
                bits |= 1 << universe.cell(e, x);
            }
        }
        Ok(Self::from_bits_unchecked(universe, bits))
    }

    /// The soft set with section `Y` at every parameter.
    pub fn uniform<I, S>(universe: &Arc<Universe>, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut row = 0u32;
        for point in points {
            row |= 1 << universe.point_index(point.as_ref())?;
        }
        let n = universe.point_count();
        let bits = (0..universe.param_count()).fold(0, |acc, e| acc | (row << (e * n)));
        Ok(Self::from_bits_unchecked(universe, bits))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_null(&self) -> bool {
        self.bits == 0
    }

    pub fn is_absolute(&self) -> bool {
        self.bits == self.universe.full_mask()
    }

    /// Point labels of the section `F(e)`.
    pub fn section(&self, param: &str) -> Result<Vec<&str>> {
        let e = self.universe.param_index(param)?;
        Ok(self.section_at(e))
    }

    pub(crate) fn section_at(&self, e: usize) -> Vec<&str> {
        let u = &self.universe;
        (0..u.point_count())
            .filter(|&x| self.bits & (1 << u.cell(e, x)) != 0)
            .map(|x| u.points()[x].as_str())
            .collect()
    }

    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.same(other)?;
        Ok(self.with_bits(self.bits | other.bits))
    }

    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet> {
        self.same(other)?;
        Ok(self.with_bits(self.bits & other.bits))
    }

    /// `X_E \ F_E`.
    pub fn complement(&self) -> SoftSet {
        self.with_bits(!self.bits & self.universe.full_mask())
    }

    pub fn difference(&self, other: &SoftSet) -> Result<SoftSet> {
        self.same(other)?;
        Ok(self.with_bits(self.bits & !other.bits))
    }

    /// `self ⊑ other`: every section of `self` is contained in the matching
    /// section of `other`.
    pub fn is_subset(&self, other: &SoftSet) -> Result<bool> {
        self.same(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Soft equality, i.e. mutual `⊑`.
    pub fn soft_eq(&self, other: &SoftSet) -> Result<bool> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    /// `P^x_e ∈ F_E`, i.e. `x ∈ F(e)`.
    pub fn contains_point(&self, point: &SoftPoint) -> Result<bool> {
        if !same_universe(&self.universe, &point.universe) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.bits & (1 << point.cell()) != 0)
    }

    /// Soft points contained in this set, in cell order.
    pub fn soft_points(&self) -> impl Iterator<Item = SoftPoint> + '_ {
        (0..self.universe.cells())
            .filter(move |c| self.bits & (1 << c) != 0)
            .map(move |c| {
                let (param, point) = self.universe.cell_coords(c);
                SoftPoint {
                    universe: Arc::clone(&self.universe),
                    param,
                    point,
                }
            })
    }

    pub fn flatten(&self) -> FlatSet {
        FlatSet(
            self.soft_points()
                .map(|p| (p.param, p.point))
                .collect(),
        )
    }

    fn with_bits(&self, bits: u32) -> SoftSet {
        SoftSet {
            universe: Arc::clone(&self.universe),
            bits,
        }
    }

    fn same(&self, other: &SoftSet) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && same_universe(&self.universe, &other.universe)
    }
}

impl Eq for SoftSet {}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftSet({self})")
    }
}

/// Paper-style rendering, e.g. `{(e1,{x,z}), (e2,∅)}`.
impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for e in 0..self.universe.param_count() {
            if e > 0 {
                f.write_str(", ")?;
            }
            let section = self.section_at(e);
            let name = &self.universe.params()[e];
            if section.is_empty() {
                write!(f, "({name},∅)")?;
            } else {
                write!(f, "({name},{{{}}})", section.join(","))?;
            }
        }
        f.write_str("}")
    }
}

/// The soft point `P^x_e`: section `{x}` at `e`, empty elsewhere.
#[derive(Clone)]
pub struct SoftPoint {
    universe: Arc<Universe>,
    param: usize,
    point: usize,
}

impl SoftPoint {
    pub fn new(universe: &Arc<Universe>, param: &str, point: &str) -> Result<Self> {
        Ok(SoftPoint {
            universe: Arc::clone(universe),
            param: universe.param_index(param)?,
            point: universe.point_index(point)?,
        })
    }

    pub fn param(&self) -> &str {
        &self.universe.params()[self.param]
    }

    pub fn point(&self) -> &str {
        &self.universe.points()[self.point]
    }

    pub fn cell(&self) -> usize {
        self.universe.cell(self.param, self.point)
    }

    pub fn as_soft_set(&self) -> SoftSet {
        SoftSet::from_bits_unchecked(&self.universe, 1 << self.cell())
    }
}

impl PartialEq for SoftPoint {
    fn eq(&self, other: &Self) -> bool {
        self.param == other.param
            && self.point == other.point
            && same_universe(&self.universe, &other.universe)
    }
}

impl Eq for SoftPoint {}

impl fmt::Debug for SoftPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{}_{}", self.point(), self.param())
    }
}

/// A plain subset of `E × X`, stored as `(parameter index, point index)`
/// pairs. This is the classical view of a soft set used by the flattening
/// oracle; it deliberately shares no code with the bit-level operations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatSet(pub BTreeSet<(usize, usize)>);

impl FlatSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The full product `E × X`.
    pub fn product(universe: &Universe) -> Self {
        FlatSet(
            (0..universe.param_count())
                .flat_map(|e| (0..universe.point_count()).map(move |x| (e, x)))
                .collect(),
        )
    }

    pub fn contains(&self, param: usize, point: usize) -> bool {
        self.0.contains(&(param, point))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &FlatSet) -> FlatSet {
        FlatSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &FlatSet) -> FlatSet {
        FlatSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn complement_in(&self, universe: &Universe) -> FlatSet {
        FlatSet(Self::product(universe).0.difference(&self.0).copied().collect())
    }

    pub fn is_subset(&self, other: &FlatSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn unflatten(&self, universe: &Arc<Universe>) -> Result<SoftSet> {
        let mut bits = 0u32;
        for &(e, x) in &self.0 {
            if e >= universe.param_count() || x >= universe.point_count() {
                return Err(Error::OutOfBounds {
                    bits: u32::MAX,
                    cells: universe.cells(),
                });
            }
            bits |= 1 << universe.cell(e, x);
        }
        Ok(SoftSet::from_bits_unchecked(universe, bits))
    }
}
