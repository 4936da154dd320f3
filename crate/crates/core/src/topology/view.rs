use std::sync::Arc;

use super::{ClassificationVector, Conventions, Separation, SetProperty, SoftTopology, SpaceProperties};
use crate::universe::Universe;

/// Bit-level operators of a soft topological space, optionally relativised
/// to a carrier `A_E` without materialising the subspace.
///
/// Relative operators come from the parent tables:
/// `Int_A(g) = A ⊓ Int(g ⊔ Aᶜ)` and `Cl_A(g) = A ⊓ Cl(g)`.
/// All set arguments must lie inside the carrier.
#[derive(Clone, Copy)]
pub struct SpaceView<'a> {
    top: &'a SoftTopology,
    carrier: u32,
}

impl<'a> SpaceView<'a> {
    pub(crate) fn new(top: &'a SoftTopology, carrier: u32) -> Self {
        SpaceView { top, carrier }
    }

    /// The relative space on `carrier ⊑ self.carrier()`.
    pub fn relative(&self, carrier: u32) -> SpaceView<'a> {
        debug_assert_eq!(carrier & !self.carrier, 0);
        SpaceView {
            top: self.top,
            carrier,
        }
    }

    pub fn topology(&self) -> &'a SoftTopology {
        self.top
    }

    pub fn universe(&self) -> &'a Arc<Universe> {
        &self.top.universe
    }

    pub fn carrier(&self) -> u32 {
        self.carrier
    }

    /// Open sets of this space; a relative view may repeat some.
    pub fn opens(&self) -> impl Iterator<Item = u32> + 'a {
        let carrier = self.carrier;
        self.top.opens.iter().map(move |&o| o & carrier)
    }

    pub fn complement(&self, g: u32) -> u32 {
        self.carrier & !g
    }

    pub fn interior(&self, g: u32) -> u32 {
        debug_assert_eq!(g & !self.carrier, 0);
        if self.carrier == self.top.carrier {
            self.top.interior_bits(g)
        } else {
            self.top.interior_bits(g | (self.top.carrier & !self.carrier)) & self.carrier
        }
    }

    pub fn closure(&self, g: u32) -> u32 {
        self.top.closure_bits(g) & self.carrier
    }

    pub fn is_open(&self, g: u32) -> bool {
        self.interior(g) == g
    }

    pub fn is_closed(&self, g: u32) -> bool {
        self.is_open(self.complement(g))
    }

    /// `Cl(g) = X_E`.
    pub fn is_dense(&self, g: u32) -> bool {
        self.closure(g) == self.carrier
    }

    /// `Int(g) = Φ_E`.
    pub fn is_co_dense(&self, g: u32) -> bool {
        self.interior(g) == 0
    }

    /// `g ⊑ Cl(Int(g))`.
    pub fn is_semiopen(&self, g: u32) -> bool {
        g & !self.closure(self.interior(g)) == 0
    }

    pub fn is_semiclosed(&self, g: u32) -> bool {
        self.is_semiopen(self.complement(g))
    }

    /// `g ⊑ Cl(Int(Cl(g)))`.
    pub fn is_beta_open(&self, g: u32) -> bool {
        g & !self.closure(self.interior(self.closure(g))) == 0
    }

    /// `Int(Cl(g)) ≠ Φ_E`, with `Φ_E` admitted by convention.
    pub fn is_somewhere_dense(&self, g: u32, conv: Conventions) -> bool {
        (conv.null_somewhere_dense && g == 0) || self.interior(self.closure(g)) != 0
    }

    /// Either `g` is null or `Int(g) ≠ Φ_E`.
    pub fn is_sw_open(&self, g: u32, conv: Conventions) -> bool {
        (conv.null_sw_open && g == 0) || self.interior(g) != 0
    }

    /// `Cl(g) ≠ X_E` or `g = X_E`.
    pub fn is_sw_closed(&self, g: u32) -> bool {
        self.closure(g) != self.carrier || g == self.carrier
    }

    /// Union of all sw-open subsets of `g`.
    pub fn int_sw(&self, g: u32, conv: Conventions) -> u32 {
        let mut acc = 0;
        let mut sub = g;
        loop {
            if self.is_sw_open(sub, conv) {
                acc |= sub;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & g;
        }
        acc
    }

    /// Intersection of all sw-closed supersets of `g` inside the carrier.
    pub fn cl_sw(&self, g: u32) -> u32 {
        let free = self.carrier & !g;
        let mut acc = self.carrier;
        let mut extra = free;
        loop {
            let sup = g | extra;
            if self.is_sw_closed(sup) {
                acc &= sup;
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & free;
        }
        acc
    }

    pub fn has(&self, g: u32, property: SetProperty, conv: Conventions) -> bool {
        match property {
            SetProperty::Open => self.is_open(g),
            SetProperty::Closed => self.is_closed(g),
            SetProperty::Dense => self.is_dense(g),
            SetProperty::CoDense => self.is_co_dense(g),
            SetProperty::Semiopen => self.is_semiopen(g),
            SetProperty::Semiclosed => self.is_semiclosed(g),
            SetProperty::BetaOpen => self.is_beta_open(g),
            SetProperty::SomewhereDense => self.is_somewhere_dense(g, conv),
            SetProperty::SwOpen => self.is_sw_open(g, conv),
            SetProperty::SwClosed => self.is_sw_closed(g),
        }
    }

    pub fn classify(&self, g: u32, conv: Conventions) -> ClassificationVector {
        ClassificationVector {
            open: self.is_open(g),
            closed: self.is_closed(g),
            dense: self.is_dense(g),
            co_dense: self.is_co_dense(g),
            semiopen: self.is_semiopen(g),
            semiclosed: self.is_semiclosed(g),
            beta_open: self.is_beta_open(g),
            somewhere_dense: self.is_somewhere_dense(g, conv),
            sw_open: self.is_sw_open(g, conv),
            sw_closed: self.is_sw_closed(g),
        }
    }

    /// Every two non-null open sets meet.
    pub fn is_hyperconnected(&self) -> bool {
        let opens: Vec<u32> = self.opens().filter(|&o| o != 0).collect();
        opens
            .iter()
            .all(|&a| opens.iter().all(|&b| a & b != 0))
    }

    /// No proper non-null open set has an open complement.
    pub fn is_connected(&self) -> bool {
        !self
            .opens()
            .any(|o| o != 0 && o != self.carrier && self.is_open(self.complement(o)))
    }

    /// Smallest open set containing the cell.
    pub fn neighbourhood(&self, cell: usize) -> u32 {
        self.opens()
            .filter(|o| o & (1 << cell) != 0)
            .fold(self.carrier, |acc, o| acc & o)
    }

    pub fn properties(&self, separation: Separation) -> SpaceProperties {
        let universe = self.universe();
        let cells: Vec<usize> = (0..universe.cells())
            .filter(|c| self.carrier & (1 << c) != 0)
            .collect();
        let nbhd: Vec<u32> = (0..universe.cells())
            .map(|c| if self.carrier & (1 << c) != 0 { self.neighbourhood(c) } else { 0 })
            .collect();
        let (mut t0, mut t1, mut t2) = (true, true, true);
        for (i, &p) in cells.iter().enumerate() {
            for &q in &cells[i + 1..] {
                if separation == Separation::SameParameter
                    && universe.cell_coords(p).0 != universe.cell_coords(q).0
                {
                    continue;
                }
                let q_near_p = nbhd[p] & (1 << q) != 0;
                let p_near_q = nbhd[q] & (1 << p) != 0;
                t0 &= !(q_near_p && p_near_q);
                t1 &= !q_near_p && !p_near_q;
                t2 &= nbhd[p] & nbhd[q] == 0;
            }
        }
        SpaceProperties {
            hyperconnected: self.is_hyperconnected(),
            connected: self.is_connected(),
            t0,
            t1,
            t2,
            separable: true,
            compact: true,
            finite_note: SpaceProperties::FINITE_NOTE,
        }
    }
}
