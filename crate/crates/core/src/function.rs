//! Soft functions `f = (u, p)` between soft topological spaces.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::soft_set::SoftSet;
use crate::topology::{Conventions, SoftTopology, SpaceView};
use crate::universe::{same_universe, Universe};

/// A soft function induced by a point map `u: X → Y` and a parameter map
/// `p: E → E'`. On cells it acts as `(e, x) ↦ (p(e), u(x))`.
#[derive(Clone)]
pub struct SoftFunction {
    domain: Arc<Universe>,
    codomain: Arc<Universe>,
    point_map: Vec<usize>,
    param_map: Vec<usize>,
    /// Codomain cell of each domain cell.
    cell_map: Box<[u8]>,
    /// Domain cells sent to each codomain cell.
    fibres: Box<[u32]>,
}

impl SoftFunction {
    pub fn new(
        domain: &Arc<Universe>,
        codomain: &Arc<Universe>,
        point_map: Vec<usize>,
        param_map: Vec<usize>,
    ) -> Result<Self> {
        if point_map.len() != domain.point_count() {
            return Err(Error::PartialMap(format!(
                "point map has {} entries for {} points",
                point_map.len(),
                domain.point_count()
            )));
        }
        if param_map.len() != domain.param_count() {
            return Err(Error::PartialMap(format!(
                "parameter map has {} entries for {} parameters",
                param_map.len(),
                domain.param_count()
            )));
        }
        if let Some(&y) = point_map.iter().find(|&&y| y >= codomain.point_count()) {
            return Err(Error::PartialMap(format!("point index {y} outside the codomain")));
        }
        if let Some(&e) = param_map.iter().find(|&&e| e >= codomain.param_count()) {
            return Err(Error::PartialMap(format!("parameter index {e} outside the codomain")));
        }
        Ok(Self::build(domain, codomain, point_map, param_map))
    }

    /// Builds from label pairs. Every domain label must appear exactly once.
    pub fn from_labels<P, Q, A, B, C, D>(
        domain: &Arc<Universe>,
        codomain: &Arc<Universe>,
        points: P,
        params: Q,
    ) -> Result<Self>
    where
        P: IntoIterator<Item = (A, B)>,
        Q: IntoIterator<Item = (C, D)>,
        A: AsRef<str>,
        B: AsRef<str>,
        C: AsRef<str>,
        D: AsRef<str>,
    {
        let mut point_map = vec![None; domain.point_count()];
        for (x, y) in points {
            let i = domain.point_index(x.as_ref())?;
            let j = codomain.point_index(y.as_ref())?;
            if point_map[i].replace(j).is_some() {
                return Err(Error::PartialMap(format!("point `{}` is mapped twice", x.as_ref())));
            }
        }
        let mut param_map = vec![None; domain.param_count()];
        for (e, e2) in params {
            let i = domain.param_index(e.as_ref())?;
            let j = codomain.param_index(e2.as_ref())?;
            if param_map[i].replace(j).is_some() {
                return Err(Error::PartialMap(format!(
                    "parameter `{}` is mapped twice",
                    e.as_ref()
                )));
            }
        }
        let point_map = complete(point_map, domain.points(), "point")?;
        let param_map = complete(param_map, domain.params(), "parameter")?;
        Ok(Self::build(domain, codomain, point_map, param_map))
    }

    pub fn identity(universe: &Arc<Universe>) -> Self {
        Self::build(
            universe,
            universe,
            (0..universe.point_count()).collect(),
            (0..universe.param_count()).collect(),
        )
    }

    /// Index vectors must already be in range.
    pub(crate) fn build(
        domain: &Arc<Universe>,
        codomain: &Arc<Universe>,
        point_map: Vec<usize>,
        param_map: Vec<usize>,
    ) -> Self {
        let cell_map: Box<[u8]> = (0..domain.cells())
            .map(|c| {
                let (e, x) = domain.cell_coords(c);
                codomain.cell(param_map[e], point_map[x]) as u8
            })
            .collect();
        let mut fibres = vec![0u32; codomain.cells()].into_boxed_slice();
        for (i, &j) in cell_map.iter().enumerate() {
            fibres[j as usize] |= 1 << i;
        }
        SoftFunction {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            point_map,
            param_map,
            cell_map,
            fibres,
        }
    }

    pub fn domain(&self) -> &Arc<Universe> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Universe> {
        &self.codomain
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn param_map(&self) -> &[usize] {
        &self.param_map
    }

    /// Codomain cell of a domain cell.
    pub fn cell_image(&self, cell: usize) -> usize {
        self.cell_map[cell] as usize
    }

    pub fn image_bits(&self, a: u32) -> u32 {
        let mut out = 0;
        let mut rest = a;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out |= 1 << self.cell_map[i];
            rest &= rest - 1;
        }
        out
    }

    pub fn preimage_bits(&self, b: u32) -> u32 {
        let mut out = 0;
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            out |= self.fibres[j];
            rest &= rest - 1;
        }
        out
    }

    /// `f(A)`: the section at `e'` is the union of `u(A(e))` over `p(e) = e'`.
    pub fn image(&self, a: &SoftSet) -> Result<SoftSet> {
        if !same_universe(a.universe(), &self.domain) {
            return Err(Error::UniverseMismatch);
        }
        SoftSet::from_bits(&self.codomain, self.image_bits(a.bits()))
    }

    /// `f⁻¹(B)`: the section at `e` is `u⁻¹(B(p(e)))`.
    pub fn preimage(&self, b: &SoftSet) -> Result<SoftSet> {
        if !same_universe(b.universe(), &self.codomain) {
            return Err(Error::UniverseMismatch);
        }
        SoftSet::from_bits(&self.domain, self.preimage_bits(b.bits()))
    }

    pub fn is_injective(&self) -> bool {
        all_distinct(&self.point_map) && all_distinct(&self.param_map)
    }

    pub fn is_surjective(&self) -> bool {
        covers(&self.point_map, self.codomain.point_count())
            && covers(&self.param_map, self.codomain.param_count())
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Injective on the cells of `carrier`.
    pub fn is_injective_on(&self, carrier: u32) -> bool {
        let mut seen = 0u32;
        let mut rest = carrier;
        while rest != 0 {
            let bit = 1u32 << self.cell_map[rest.trailing_zeros() as usize];
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
            rest &= rest - 1;
        }
        true
    }

    /// The inverse of a bijection.
    pub fn inverse(&self) -> Option<SoftFunction> {
        if !self.is_bijective() {
            return None;
        }
        let mut point_map = vec![0; self.point_map.len()];
        for (x, &y) in self.point_map.iter().enumerate() {
            point_map[y] = x;
        }
        let mut param_map = vec![0; self.param_map.len()];
        for (e, &e2) in self.param_map.iter().enumerate() {
            param_map[e2] = e;
        }
        Some(Self::build(&self.codomain, &self.domain, point_map, param_map))
    }

    /// `f|_A` together with the relative topology on `A`.
    pub fn restrict(&self, carrier: &SoftSet, t_dom: &SoftTopology) -> Result<Restriction> {
        if !same_universe(t_dom.universe(), &self.domain) {
            return Err(Error::UniverseMismatch);
        }
        let space = t_dom.subspace(carrier)?;
        Ok(Restriction {
            function: self.clone(),
            carrier: carrier.bits(),
            space,
        })
    }

    /// Every soft function that agrees with `self` on the soft points of
    /// `carrier`, in lexicographic order of `(u, p)`.
    pub fn extensions(&self, carrier: &SoftSet) -> Result<Vec<SoftFunction>> {
        if !same_universe(carrier.universe(), &self.domain) {
            return Err(Error::UniverseMismatch);
        }
        let (mut fixed_points, mut fixed_params) = (0u64, 0u64);
        for c in 0..self.domain.cells() {
            if carrier.bits() & (1 << c) != 0 {
                let (e, x) = self.domain.cell_coords(c);
                fixed_params |= 1 << e;
                fixed_points |= 1 << x;
            }
        }
        let point_choices: Vec<Vec<usize>> = (0..self.point_map.len())
            .map(|x| {
                if fixed_points & (1 << x) != 0 {
                    vec![self.point_map[x]]
                } else {
                    (0..self.codomain.point_count()).collect()
                }
            })
            .collect();
        let param_choices: Vec<Vec<usize>> = (0..self.param_map.len())
            .map(|e| {
                if fixed_params & (1 << e) != 0 {
                    vec![self.param_map[e]]
                } else {
                    (0..self.codomain.param_count()).collect()
                }
            })
            .collect();
        let mut out = Vec::new();
        for u in product(&point_choices) {
            for p in product(&param_choices) {
                out.push(Self::build(&self.domain, &self.codomain, u.clone(), p));
            }
        }
        Ok(out)
    }

    /// Classification between two full spaces.
    pub fn classify(&self, t_dom: &SoftTopology, t_cod: &SoftTopology) -> Result<FunctionClassification> {
        self.classify_with(t_dom, t_cod, Conventions::STANDARD)
    }

    pub fn classify_with(
        &self,
        t_dom: &SoftTopology,
        t_cod: &SoftTopology,
        conventions: Conventions,
    ) -> Result<FunctionClassification> {
        if !same_universe(t_dom.universe(), &self.domain) || !same_universe(t_cod.universe(), &self.codomain) {
            return Err(Error::UniverseMismatch);
        }
        if self.image_bits(t_dom.carrier_bits()) & !t_cod.carrier_bits() != 0 {
            return Err(Error::OutsideCarrier);
        }
        Ok(classify_map(self, t_dom.space(), t_cod.space(), conventions))
    }
}

impl PartialEq for SoftFunction {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.domain, &other.domain)
            && same_universe(&self.codomain, &other.codomain)
            && self.point_map == other.point_map
            && self.param_map == other.param_map
    }
}

impl Eq for SoftFunction {}

impl fmt::Debug for SoftFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SoftFunction")
            .field("u", &self.point_map)
            .field("p", &self.param_map)
            .finish()
    }
}

impl fmt::Display for SoftFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let points: Vec<String> = self
            .point_map
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{}↦{}", self.domain.points()[x], self.codomain.points()[y]))
            .collect();
        let params: Vec<String> = self
            .param_map
            .iter()
            .enumerate()
            .map(|(e, &e2)| format!("{}↦{}", self.domain.params()[e], self.codomain.params()[e2]))
            .collect();
        write!(f, "u = {{{}}}, p = {{{}}}", points.join(", "), params.join(", "))
    }
}

/// `f|_A` bundled with the relative topology on `A`.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub function: SoftFunction,
    pub carrier: u32,
    pub space: SoftTopology,
}

impl Restriction {
    /// `(f|_A)⁻¹(B) = f⁻¹(B) ⊓ A`.
    pub fn preimage_bits(&self, b: u32) -> u32 {
        self.function.preimage_bits(b) & self.carrier
    }

    pub fn image_bits(&self, a: u32) -> u32 {
        self.function.image_bits(a & self.carrier)
    }

    pub fn classify(&self, t_cod: &SoftTopology) -> Result<FunctionClassification> {
        self.classify_with(t_cod, Conventions::STANDARD)
    }

    pub fn classify_with(&self, t_cod: &SoftTopology, conventions: Conventions) -> Result<FunctionClassification> {
        if !same_universe(t_cod.universe(), &self.function.codomain) {
            return Err(Error::UniverseMismatch);
        }
        Ok(classify_map(&self.function, self.space.space(), t_cod.space(), conventions))
    }
}

/// The twelve continuity and openness flags of a soft function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FunctionClassification {
    pub continuous: bool,
    pub semicontinuous: bool,
    pub beta_continuous: bool,
    pub sd_continuous: bool,
    pub sw_continuous: bool,
    pub open_map: bool,
    pub semiopen_map: bool,
    pub beta_open_map: bool,
    pub sd_open_map: bool,
    pub sw_open_map: bool,
    pub homeomorphism: bool,
    pub sw_homeomorphism: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapProperty {
    Continuous,
    Semicontinuous,
    BetaContinuous,
    SdContinuous,
    SwContinuous,
    OpenMap,
    SemiopenMap,
    BetaOpenMap,
    SdOpenMap,
    SwOpenMap,
    Homeomorphism,
    SwHomeomorphism,
}

impl MapProperty {
    pub const ALL: [MapProperty; 12] = [
        MapProperty::Continuous,
        MapProperty::Semicontinuous,
        MapProperty::BetaContinuous,
        MapProperty::SdContinuous,
        MapProperty::SwContinuous,
        MapProperty::OpenMap,
        MapProperty::SemiopenMap,
        MapProperty::BetaOpenMap,
        MapProperty::SdOpenMap,
        MapProperty::SwOpenMap,
        MapProperty::Homeomorphism,
        MapProperty::SwHomeomorphism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapProperty::Continuous => "continuous",
            MapProperty::Semicontinuous => "semicontinuous",
            MapProperty::BetaContinuous => "β-continuous",
            MapProperty::SdContinuous => "SD-continuous",
            MapProperty::SwContinuous => "sw-continuous",
            MapProperty::OpenMap => "open",
            MapProperty::SemiopenMap => "semiopen",
            MapProperty::BetaOpenMap => "β-open",
            MapProperty::SdOpenMap => "SD-open",
            MapProperty::SwOpenMap => "sw-open",
            MapProperty::Homeomorphism => "homeomorphism",
            MapProperty::SwHomeomorphism => "sw-homeomorphism",
        }
    }
}

impl fmt::Display for MapProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FunctionClassification {
    pub fn get(&self, property: MapProperty) -> bool {
        match property {
            MapProperty::Continuous => self.continuous,
            MapProperty::Semicontinuous => self.semicontinuous,
            MapProperty::BetaContinuous => self.beta_continuous,
            MapProperty::SdContinuous => self.sd_continuous,
            MapProperty::SwContinuous => self.sw_continuous,
            MapProperty::OpenMap => self.open_map,
            MapProperty::SemiopenMap => self.semiopen_map,
            MapProperty::BetaOpenMap => self.beta_open_map,
            MapProperty::SdOpenMap => self.sd_open_map,
            MapProperty::SwOpenMap => self.sw_open_map,
            MapProperty::Homeomorphism => self.homeomorphism,
            MapProperty::SwHomeomorphism => self.sw_homeomorphism,
        }
    }
}

impl fmt::Display for FunctionClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in MapProperty::ALL.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let label = match p {
                MapProperty::Homeomorphism | MapProperty::SwHomeomorphism => p.name().to_string(),
                _ if i < 5 => p.name().to_string(),
                _ => format!("{} map", p.name()),
            };
            write!(f, "{:<18} {}", format!("{label}:"), self.get(*p))?;
        }
        Ok(())
    }
}

/// Classifies `f` as a map from the space `dom` to the space `cod`.
///
/// Preimages are taken inside `dom`'s carrier and images of `dom`'s opens
/// must land inside `cod`'s carrier. Bijectivity is relative to the two
/// carriers.
pub fn classify_map(f: &SoftFunction, dom: SpaceView<'_>, cod: SpaceView<'_>, conv: Conventions) -> FunctionClassification {
    let mut c = FunctionClassification {
        continuous: true,
        semicontinuous: true,
        beta_continuous: true,
        sd_continuous: true,
        sw_continuous: true,
        open_map: true,
        semiopen_map: true,
        beta_open_map: true,
        sd_open_map: true,
        sw_open_map: true,
        homeomorphism: false,
        sw_homeomorphism: false,
    };
    for v in cod.opens() {
        let g = f.preimage_bits(v) & dom.carrier();
        c.continuous &= dom.is_open(g);
        c.semicontinuous &= dom.is_semiopen(g);
        c.beta_continuous &= dom.is_beta_open(g);
        c.sd_continuous &= dom.is_somewhere_dense(g, conv);
        c.sw_continuous &= dom.is_sw_open(g, conv);
    }
    for u in dom.opens() {
        let g = f.image_bits(u);
        debug_assert_eq!(g & !cod.carrier(), 0);
        c.open_map &= cod.is_open(g);
        c.semiopen_map &= cod.is_semiopen(g);
        c.beta_open_map &= cod.is_beta_open(g);
        c.sd_open_map &= cod.is_somewhere_dense(g, conv);
        c.sw_open_map &= cod.is_sw_open(g, conv);
    }
    let bijective = f.is_injective_on(dom.carrier()) && f.image_bits(dom.carrier()) == cod.carrier();
    c.homeomorphism = bijective && c.continuous && c.open_map;
    c.sw_homeomorphism = bijective && c.sw_continuous && c.sw_open_map;
    c
}

fn complete(map: Vec<Option<usize>>, labels: &[String], kind: &str) -> Result<Vec<usize>> {
    map.into_iter()
        .zip(labels)
        .map(|(v, label)| v.ok_or_else(|| Error::PartialMap(format!("{kind} `{label}` has no image"))))
        .collect()
}

fn all_distinct(v: &[usize]) -> bool {
    let mut seen = 0u64;
    v.iter().all(|&i| {
        let fresh = seen & (1 << i) == 0;
        seen |= 1 << i;
        fresh
    })
}

fn covers(v: &[usize], n: usize) -> bool {
    let hit = v.iter().fold(0u64, |acc, &i| acc | (1 << i));
    hit.count_ones() as usize == n
}

fn product(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    choices.iter().fold(vec![Vec::new()], |acc, options| {
        acc.into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&o| {
                    let mut next = prefix.clone();
                    next.push(o);
                    next
                })
            })
            .collect()
    })
}
