//! Soft topological spaces over a finite universe.

mod classify;
mod properties;
mod view;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use classify::{ClassificationVector, Conventions, SetProperty};
pub use properties::{Separation, SpaceProperties};
pub use view::SpaceView;

use crate::error::{Error, Result};
use crate::soft_set::SoftSet;
use crate::universe::{same_universe, Universe};

/// Interior lookup tables are built for universes up to this many cells.
const TABLE_CELLS: usize = 12;

/// A soft topology, possibly a relative one living on a carrier `Y_E ⊑ X_E`.
///
/// The open family is kept sorted by bit pattern, which is also the
/// canonical identity of the topology.
#[derive(Clone)]
pub struct SoftTopology {
    universe: Arc<Universe>,
    carrier: u32,
    opens: Vec<u32>,
    interior: Option<Box<[u32]>>,
}

/// The first soft-topology axiom a family fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingNull,
    MissingAbsolute,
    ForeignSet(SoftSet),
    MissingIntersection {
        left: SoftSet,
        right: SoftSet,
        meet: SoftSet,
    },
    MissingUnion {
        left: SoftSet,
        right: SoftSet,
        join: SoftSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingNull => f.write_str("the null soft set Φ_E is missing"),
            Violation::MissingAbsolute => f.write_str("the absolute soft set X_E is missing"),
            Violation::ForeignSet(s) => write!(f, "{s} belongs to a different universe"),
            Violation::MissingIntersection { left, right, meet } => {
                write!(f, "intersection {left} ⊓ {right} = {meet} is missing")
            }
            Violation::MissingUnion { left, right, join } => {
                write!(f, "union {left} ⊔ {right} = {join} is missing")
            }
        }
    }
}

impl SoftTopology {
    /// Accepts `family` only if it already satisfies the three axioms.
    pub fn new<I>(universe: &Arc<Universe>, family: I) -> Result<Self>
    where
        I: IntoIterator<Item = SoftSet>,
    {
        let family: Vec<SoftSet> = family.into_iter().collect();
        Self::validate(universe, &family).map_err(Error::NotATopology)?;
        let opens = family.iter().map(SoftSet::bits).collect();
        Ok(Self::from_canonical(universe, universe.full_mask(), sorted(opens)))
    }

    /// Checks the axioms: `Φ_E, X_E ∈ T`, closure under pairwise `⊓`, and
    /// closure under pairwise `⊔` (which gives arbitrary unions on a finite
    /// family). Reports the first failure found.
    pub fn validate(universe: &Arc<Universe>, family: &[SoftSet]) -> std::result::Result<(), Violation> {
        if let Some(foreign) = family.iter().find(|s| !same_universe(s.universe(), universe)) {
            return Err(Violation::ForeignSet(foreign.clone()));
        }
        let bits: BTreeSet<u32> = family.iter().map(SoftSet::bits).collect();
        if !bits.contains(&0) {
            return Err(Violation::MissingNull);
        }
        if !bits.contains(&universe.full_mask()) {
            return Err(Violation::MissingAbsolute);
        }
        let set = |b| SoftSet::from_bits_unchecked(universe, b);
        for (i, &a) in bits.iter().enumerate() {
            for &b in bits.iter().skip(i + 1) {
                if !bits.contains(&(a & b)) {
                    return Err(Violation::MissingIntersection {
                        left: set(a),
                        right: set(b),
                        meet: set(a & b),
                    });
                }
            }
        }
        for (i, &a) in bits.iter().enumerate() {
            for &b in bits.iter().skip(i + 1) {
                if !bits.contains(&(a | b)) {
                    return Err(Violation::MissingUnion {
                        left: set(a),
                        right: set(b),
                        join: set(a | b),
                    });
                }
            }
        }
        Ok(())
    }

    /// The smallest soft topology containing `family`.
    pub fn generate<I>(universe: &Arc<Universe>, family: I) -> Result<Self>
    where
        I: IntoIterator<Item = SoftSet>,
    {
        let mut bits = Vec::new();
        for s in family {
            if !same_universe(s.universe(), universe) {
                return Err(Error::UniverseMismatch);
            }
            bits.push(s.bits());
        }
        let full = universe.full_mask();
        Ok(Self::from_canonical(universe, full, generate_bits(full, bits)))
    }

    /// The indiscrete topology `{Φ_E, X_E}`.
    pub fn indiscrete(universe: &Arc<Universe>) -> Self {
        let full = universe.full_mask();
        Self::from_canonical(universe, full, sorted(vec![0, full]))
    }

    /// Every soft set is open.
    pub fn discrete(universe: &Arc<Universe>) -> Self {
        let full = universe.full_mask();
        Self::from_canonical(universe, full, (0..=full).collect())
    }

    /// `opens` must already be sorted, deduplicated and closed.
    pub(crate) fn from_canonical(universe: &Arc<Universe>, carrier: u32, opens: Vec<u32>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        let interior = (universe.cells() <= TABLE_CELLS).then(|| {
            (0..=universe.full_mask())
                .map(|g| interior_scan(&opens, g))
                .collect::<Vec<_>>()
                .into_boxed_slice()
        });
        SoftTopology {
            universe: Arc::clone(universe),
            carrier,
            opens,
            interior,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// `X_E` for a full space, `Y_E` for a subspace.
    pub fn carrier(&self) -> SoftSet {
        SoftSet::from_bits_unchecked(&self.universe, self.carrier)
    }

    pub fn carrier_bits(&self) -> u32 {
        self.carrier
    }

    pub fn is_subspace(&self) -> bool {
        self.carrier != self.universe.full_mask()
    }

    pub fn open_bits(&self) -> &[u32] {
        &self.opens
    }

    pub fn opens(&self) -> impl Iterator<Item = SoftSet> + '_ {
        self.opens
            .iter()
            .map(|&b| SoftSet::from_bits_unchecked(&self.universe, b))
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn is_open(&self, g: &SoftSet) -> Result<bool> {
        let g = self.check(g)?;
        Ok(self.opens.binary_search(&g).is_ok())
    }

    /// The operator view over the whole carrier.
    pub fn space(&self) -> SpaceView<'_> {
        SpaceView::new(self, self.carrier)
    }

    pub(crate) fn interior_bits(&self, g: u32) -> u32 {
        match &self.interior {
            Some(table) => table[(g & self.carrier) as usize],
            None => interior_scan(&self.opens, g),
        }
    }

    pub(crate) fn closure_bits(&self, g: u32) -> u32 {
        self.carrier & !self.interior_bits(self.carrier & !g)
    }

    /// Largest open set contained in `g`.
    pub fn interior(&self, g: &SoftSet) -> Result<SoftSet> {
        let g = self.check(g)?;
        Ok(self.set(self.interior_bits(g)))
    }

    /// Smallest closed set containing `g`, computed as `(Int(gᶜ))ᶜ`.
    pub fn closure(&self, g: &SoftSet) -> Result<SoftSet> {
        let g = self.check(g)?;
        Ok(self.set(self.closure_bits(g)))
    }

    pub fn int_sw(&self, g: &SoftSet) -> Result<SoftSet> {
        let g = self.check(g)?;
        Ok(self.set(self.space().int_sw(g, Conventions::STANDARD)))
    }

    pub fn cl_sw(&self, g: &SoftSet) -> Result<SoftSet> {
        let g = self.check(g)?;
        Ok(self.set(self.space().cl_sw(g)))
    }

    pub fn classify(&self, g: &SoftSet) -> Result<ClassificationVector> {
        self.classify_with(g, Conventions::STANDARD)
    }

    pub fn classify_with(&self, g: &SoftSet, conventions: Conventions) -> Result<ClassificationVector> {
        let g = self.check(g)?;
        Ok(self.space().classify(g, conventions))
    }

    /// The relative topology `T_Y = {G ⊓ Y : G ∈ T}` on a non-null carrier.
    pub fn subspace(&self, carrier: &SoftSet) -> Result<SoftTopology> {
        let y = self.check(carrier)?;
        if y == 0 {
            return Err(Error::NullCarrier);
        }
        let opens = sorted(self.opens.iter().map(|o| o & y).collect());
        Ok(Self::from_canonical(&self.universe, y, opens))
    }

    pub fn properties(&self, separation: Separation) -> SpaceProperties {
        self.space().properties(separation)
    }

    pub(crate) fn set(&self, bits: u32) -> SoftSet {
        SoftSet::from_bits_unchecked(&self.universe, bits)
    }

    /// Bits of `g` after checking it lives inside this space.
    pub(crate) fn check(&self, g: &SoftSet) -> Result<u32> {
        if !same_universe(g.universe(), &self.universe) {
            return Err(Error::UniverseMismatch);
        }
        if g.bits() & !self.carrier != 0 {
            return Err(Error::OutsideCarrier);
        }
        Ok(g.bits())
    }
}

impl PartialEq for SoftTopology {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.opens == other.opens
            && same_universe(&self.universe, &other.universe)
    }
}

impl Eq for SoftTopology {}

impl fmt::Debug for SoftTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SoftTopology")
            .field("carrier", &format_args!("{:#x}", self.carrier))
            .field("opens", &self.opens)
            .finish()
    }
}

impl fmt::Display for SoftTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.opens().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

fn interior_scan(opens: &[u32], g: u32) -> u32 {
    opens
        .iter()
        .filter(|&&o| o & !g == 0)
        .fold(0, |acc, &o| acc | o)
}

fn sorted(mut bits: Vec<u32>) -> Vec<u32> {
    bits.sort_unstable();
    bits.dedup();
    bits
}

/// Adds `Φ` and `full`, then closes under pairwise intersection and pairwise
/// union. Unions of an intersection-closed family stay intersection-closed,
/// so one pass of each suffices.
pub(crate) fn generate_bits(full: u32, family: Vec<u32>) -> Vec<u32> {
    let mut set: BTreeSet<u32> = family.into_iter().collect();
    set.insert(0);
    set.insert(full);
    close_under(&mut set, |a, b| a & b);
    close_under(&mut set, |a, b| a | b);
    set.into_iter().collect()
}

fn close_under(set: &mut BTreeSet<u32>, op: impl Fn(u32, u32) -> u32) {
    let mut frontier: Vec<u32> = set.iter().copied().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<u32> = set.iter().copied().collect();
        let mut next = Vec::new();
        for &a in &frontier {
            for &b in &snapshot {
                let c = op(a, b);
                if set.insert(c) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
}

#[cfg(test)]
mod tests;
