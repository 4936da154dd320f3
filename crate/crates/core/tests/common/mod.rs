//! Independent reference computations over flat sets `E × X`, written
//! directly from the definitions with no shared code paths.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use softop::{FlatSet, SoftSet, SoftTopology, Universe};

pub type Cells = BTreeSet<(usize, usize)>;

/// A classical topology on the flat product.
pub struct Classical {
    pub product: Cells,
    pub opens: Vec<Cells>,
}

impl Classical {
    pub fn of(t: &SoftTopology) -> Self {
        Classical {
            product: FlatSet::product(t.universe()).0,
            opens: t.opens().map(|o| o.flatten().0).collect(),
        }
    }

    pub fn closed(&self) -> Vec<Cells> {
        self.opens.iter().map(|o| &self.product - o).collect()
    }

    pub fn interior(&self, g: &Cells) -> Cells {
        self.opens
            .iter()
            .filter(|o| o.is_subset(g))
            .flat_map(|o| o.iter().copied())
            .collect()
    }

    pub fn closure(&self, g: &Cells) -> Cells {
        self.closed()
            .into_iter()
            .filter(|k| g.is_subset(k))
            .fold(self.product.clone(), |acc, k| &acc & &k)
    }

    pub fn is_dense(&self, g: &Cells) -> bool {
        self.closure(g) == self.product
    }

    pub fn semiopen(&self, g: &Cells) -> bool {
        g.is_subset(&self.closure(&self.interior(g)))
    }

    pub fn semiclosed(&self, g: &Cells) -> bool {
        self.semiopen(&(&self.product - g))
    }

    pub fn beta_open(&self, g: &Cells) -> bool {
        g.is_subset(&self.closure(&self.interior(&self.closure(g))))
    }

    /// With `Φ_E` counted as somewhere dense.
    pub fn somewhere_dense(&self, g: &Cells) -> bool {
        g.is_empty() || !self.interior(&self.closure(g)).is_empty()
    }

    pub fn sw_open(&self, g: &Cells) -> bool {
        g.is_empty() || !self.interior(g).is_empty()
    }

    pub fn sw_closed(&self, g: &Cells) -> bool {
        *g == self.product || self.closure(g) != self.product
    }

    pub fn subsets(&self, of: &Cells) -> Vec<Cells> {
        let items: Vec<_> = of.iter().copied().collect();
        (0..1u32 << items.len())
            .map(|m| (0..items.len()).filter(|i| m & (1 << i) != 0).map(|i| items[i]).collect())
            .collect()
    }

    pub fn int_sw(&self, g: &Cells) -> Cells {
        self.subsets(g)
            .into_iter()
            .filter(|s| self.sw_open(s))
            .flat_map(|s| s.into_iter())
            .collect()
    }

    pub fn cl_sw(&self, g: &Cells) -> Cells {
        self.subsets(&self.product)
            .into_iter()
            .filter(|k| g.is_subset(k) && self.sw_closed(k))
            .fold(self.product.clone(), |acc, k| &acc & &k)
    }
}

/// Every soft set of `universe`, built from flat sets.
pub fn all_sets(universe: &Arc<Universe>) -> Vec<SoftSet> {
    let product: Vec<_> = FlatSet::product(universe).0.into_iter().collect();
    (0..1u32 << product.len())
        .map(|m| {
            let flat = FlatSet((0..product.len()).filter(|i| m & (1 << i) != 0).map(|i| product[i]).collect());
            flat.unflatten(universe).unwrap()
        })
        .collect()
}

/// Topologies on `cells` labeled points, found by testing every family of
/// subsets against the axioms. Each family is listed in ascending order.
pub fn family_filter(cells: usize) -> BTreeSet<Vec<u32>> {
    let subsets = 1usize << cells;
    let full = (subsets - 1) as u32;
    let mut found = BTreeSet::new();
    for family in 0u64..1 << subsets {
        let member = |s: u32| family >> s & 1 == 1;
        if !member(0) || !member(full) {
            continue;
        }
        let list: Vec<u32> = (0..subsets as u32).filter(|&s| member(s)).collect();
        let closed = list
            .iter()
            .all(|&a| list.iter().all(|&b| member(a | b) && member(a & b)));
        if closed {
            found.insert(list);
        }
    }
    found
}
