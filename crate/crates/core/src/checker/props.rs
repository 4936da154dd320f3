//! The universal statements, one function per catalog entry, each judging a
//! single space or a single triple `(T, f, S)`.

use std::fmt::Write as _;

use super::catalog::PropositionId;
use crate::function::{classify_map, SoftFunction};
use crate::topology::{Conventions, Separation, SoftTopology, SpaceView};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Ctx {
    pub conv: Conventions,
    pub sep: Separation,
}

/// A set named in a failure; `space` is 0 for the domain, 1 for the codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FailSet {
    pub name: &'static str,
    pub space: usize,
    pub bits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Failure {
    pub sets: Vec<FailSet>,
    pub trace: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Holds,
    /// The hypothesis never applied.
    Vacuous,
    Fails(Failure),
}

/// Submasks of `mask` in increasing order.
pub(crate) fn subsets(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let s = next?;
        next = if s == mask { None } else { Some(s.wrapping_sub(mask) & mask) };
        Some(s)
    })
}

fn show(t: &SoftTopology, bits: u32) -> String {
    t.set(bits).to_string()
}

struct Fail<'a> {
    spaces: [&'a SoftTopology; 2],
    sets: Vec<FailSet>,
}

impl<'a> Fail<'a> {
    fn new(t: &'a SoftTopology) -> Self {
        Fail { spaces: [t, t], sets: Vec::new() }
    }

    fn pair(t: &'a SoftTopology, s: &'a SoftTopology) -> Self {
        Fail { spaces: [t, s], sets: Vec::new() }
    }

    fn set(mut self, name: &'static str, space: usize, bits: u32) -> Self {
        self.sets.push(FailSet { name, space, bits });
        self
    }

    fn because(self, reason: &str) -> Outcome {
        let mut trace = String::new();
        for s in &self.sets {
            let _ = write!(trace, "{} = {}; ", s.name, show(self.spaces[s.space], s.bits));
        }
        trace.push_str(reason);
        Outcome::Fails(Failure {
            sets: self.sets,
            trace,
        })
    }
}

/// Result of one condition in an equivalence: `None` when it holds,
/// otherwise the first set where it breaks.
type Cond = Option<(&'static str, usize, u32)>;

fn equivalence<'a>(t: &'a SoftTopology, s: &'a SoftTopology, conds: &[(&str, Cond)]) -> Outcome {
    let first = conds[0].1.is_none();
    if conds.iter().all(|(_, c)| c.is_none() == first) {
        return Outcome::Holds;
    }
    let mut fail = Fail::pair(t, s);
    let mut reason = String::from("conditions disagree:");
    for (label, c) in conds {
        match c {
            None => {
                let _ = write!(reason, " ({label}) holds;");
            }
            Some((name, side, bits)) => {
                let _ = write!(reason, " ({label}) fails at {name};");
                if !fail.sets.iter().any(|f| f.name == *name) {
                    fail = fail.set(name, *side, *bits);
                }
            }
        }
    }
    fail.because(reason.trim_end_matches(';'))
}

fn first(mask: u32, mut pred: impl FnMut(u32) -> bool) -> Option<u32> {
    subsets(mask).find(|&g| pred(g))
}

pub(crate) fn check_set(id: PropositionId, ctx: Ctx, t: &SoftTopology) -> Outcome {
    use PropositionId::*;
    let s = t.space();
    let conv = ctx.conv;
    let full = t.carrier_bits();
    let opens = t.open_bits();
    let sw = |g| s.is_sw_open(g, conv);
    let swc = |g| s.is_sw_closed(g);
    match id {
        P3_SUPERSET => {
            for g in subsets(full).filter(|&g| g != 0 && sw(g)) {
                for extra in subsets(full & !g) {
                    if !sw(g | extra) {
                        return Fail::new(t)
                            .set("G", 0, g)
                            .set("H", 0, g | extra)
                            .because("G is sw-open and G ⊑ H, but H is not sw-open");
                    }
                }
            }
            for g in subsets(full).filter(|&g| g != full && swc(g)) {
                for h in subsets(g) {
                    if !swc(h) {
                        return Fail::new(t)
                            .set("F", 0, g)
                            .set("H", 0, h)
                            .because("F is sw-closed and H ⊑ F, but H is not sw-closed");
                    }
                }
            }
            Outcome::Holds
        }
        P3_NBHD => {
            for g in subsets(full).filter(|&g| g != 0) {
                let neighbourhood = (0..32)
                    .filter(|c| g & (1 << c) != 0)
                    .any(|c| opens.iter().any(|&u| u & (1 << c) != 0 && u & !g == 0));
                let holds_open = opens.iter().any(|&u| u != 0 && u & !g == 0);
                if sw(g) != neighbourhood || sw(g) != holds_open {
                    return Fail::new(t).set("G", 0, g).because(&format!(
                        "sw-open: {}, neighbourhood of a soft point: {neighbourhood}, contains a non-null open set: {holds_open}",
                        sw(g)
                    ));
                }
            }
            for h in subsets(full).filter(|&h| h != full) {
                let in_proper_closed = opens.iter().any(|&u| u != 0 && h & u == 0);
                if swc(h) != in_proper_closed {
                    return Fail::new(t).set("H", 0, h).because(&format!(
                        "sw-closed: {}, inside a proper closed set: {in_proper_closed}",
                        swc(h)
                    ));
                }
            }
            Outcome::Holds
        }
        P3_UNION => {
            if !sw(0) {
                return Fail::new(t).because("the empty union Φ_E is not sw-open");
            }
            if !swc(full) {
                return Fail::new(t).because("the empty intersection X_E is not sw-closed");
            }
            let open: Vec<u32> = subsets(full).filter(|&g| sw(g)).collect();
            for (i, &g) in open.iter().enumerate() {
                for &h in &open[i..] {
                    if !sw(g | h) {
                        return Fail::new(t)
                            .set("G", 0, g)
                            .set("H", 0, h)
                            .because("G and H are sw-open but G ⊔ H is not");
                    }
                }
            }
            let closed: Vec<u32> = subsets(full).filter(|&g| swc(g)).collect();
            for (i, &g) in closed.iter().enumerate() {
                for &h in &closed[i..] {
                    if !swc(g & h) {
                        return Fail::new(t)
                            .set("F", 0, g)
                            .set("K", 0, h)
                            .because("F and K are sw-closed but F ⊓ K is not");
                    }
                }
            }
            Outcome::Holds
        }
        P3_HYPER_INT => {
            if !s.is_hyperconnected() {
                return Outcome::Vacuous;
            }
            let open: Vec<u32> = subsets(full).filter(|&g| sw(g)).collect();
            for (i, &g) in open.iter().enumerate() {
                for &h in &open[i..] {
                    if !sw(g & h) {
                        return Fail::new(t)
                            .set("G", 0, g)
                            .set("H", 0, h)
                            .because("G and H are sw-open in a hyperconnected space but G ⊓ H is not");
                    }
                }
                if let Some(&u) = opens.iter().find(|&&u| !sw(g & u)) {
                    return Fail::new(t)
                        .set("G", 0, g)
                        .set("U", 0, u)
                        .because("G is sw-open and U is open but G ⊓ U is not sw-open");
                }
            }
            let family: Vec<_> = open.iter().map(|&b| t.set(b)).collect();
            if let Err(v) = SoftTopology::validate(t.universe(), &family) {
                return Fail::new(t).because(&format!("the sw-open sets do not form a soft topology: {v}"));
            }
            Outcome::Holds
        }
        L3_DENSE_SUBSPACE => {
            for d in subsets(full).filter(|&d| s.is_dense(d)) {
                let over_d = s.relative(d);
                if let Some(g) = first(full, |g| sw(g) && !over_d.is_sw_open(g & d, conv)) {
                    return Fail::new(t)
                        .set("G", 0, g)
                        .set("D", 0, d)
                        .because("G is sw-open and D is dense, but G ⊓ D is not sw-open over D");
                }
            }
            Outcome::Holds
        }
        L3_OPEN_SUBSPACE => {
            let mut applied = false;
            for &y in opens.iter().filter(|&&y| y != 0) {
                applied = true;
                let over_y = s.relative(y);
                if let Some(g) = first(y, |g| over_y.is_sw_open(g, conv) != sw(g)) {
                    return Fail::new(t).set("Y", 0, y).set("G", 0, g).because(&format!(
                        "sw-open over Y: {}, sw-open over X: {}",
                        over_y.is_sw_open(g, conv),
                        sw(g)
                    ));
                }
            }
            if applied {
                Outcome::Holds
            } else {
                Outcome::Vacuous
            }
        }
        L3_SEMI_CL_IDENT => match first(full, |g| s.is_semiopen(g) != (s.closure(g) == s.closure(s.interior(g)))) {
            Some(g) => Fail::new(t)
                .set("G", 0, g)
                .because("semiopenness disagrees with Cl(G) = Cl(Int(G))"),
            None => Outcome::Holds,
        },
        L3_SEMI_NONNULL_INT => match first(full, |g| g != 0 && s.is_semiopen(g) && s.interior(g) == 0) {
            Some(g) => Fail::new(t)
                .set("G", 0, g)
                .because("G is non-null and semiopen with null interior"),
            None => Outcome::Holds,
        },
        L3_CL_OPEN_INT => {
            for &u in opens {
                if let Some(g) = first(full, |g| s.closure(g) & u & !s.closure(g & u) != 0) {
                    return Fail::new(t)
                        .set("G", 0, g)
                        .set("U", 0, u)
                        .because("Cl(G) ⊓ U is not inside Cl(G ⊓ U)");
                }
            }
            Outcome::Holds
        }
        L3_OPEN_SEMI | L3_OPEN_SEMI_REL => {
            let relative = id == L3_OPEN_SEMI_REL;
            for &g in opens.iter().filter(|&&g| !relative || g != 0) {
                let over = if relative { s.relative(g) } else { s };
                if let Some(h) = first(full, |h| s.is_semiopen(h) && !over.is_semiopen(g & h)) {
                    let place = if relative { "over G" } else { "over X" };
                    return Fail::new(t)
                        .set("G", 0, g)
                        .set("H", 0, h)
                        .because(&format!("G is open and H semiopen, but G ⊓ H is not semiopen {place}"));
                }
            }
            Outcome::Holds
        }
        L3_SEMI_IFF_SW_INT => {
            for g in subsets(full) {
                let meets = opens.iter().find(|&&u| !sw(g & u));
                if s.is_semiopen(g) != meets.is_none() {
                    let fail = Fail::new(t).set("G", 0, g);
                    return match meets {
                        Some(&u) => fail
                            .set("U", 0, u)
                            .because("G is semiopen but G ⊓ U is not sw-open"),
                        None => fail.because("G ⊓ U is sw-open for every open U but G is not semiopen"),
                    };
                }
            }
            Outcome::Holds
        }
        L3_SEMICLOSED_SD => {
            let mut applied = false;
            for g in subsets(full) {
                if s.is_semiclosed(g) && s.is_somewhere_dense(g, conv) {
                    applied = true;
                    if !sw(g) {
                        return Fail::new(t)
                            .set("G", 0, g)
                            .because("G is semiclosed and somewhere dense but not sw-open");
                    }
                }
            }
            if applied {
                Outcome::Holds
            } else {
                Outcome::Vacuous
            }
        }
        D1_DIAGRAM => {
            for g in subsets(full) {
                let v = s.classify(g, conv);
                let broken = [
                    (v.semiopen && !v.sw_open, "semiopen but not sw-open"),
                    (v.semiopen && !v.beta_open, "semiopen but not β-open"),
                    (v.sw_open && !v.somewhere_dense, "sw-open but not somewhere dense"),
                    (v.beta_open && !v.somewhere_dense, "β-open but not somewhere dense"),
                ];
                if let Some((_, why)) = broken.iter().find(|(b, _)| *b) {
                    return Fail::new(t).set("G", 0, g).because(&format!("G is {why}"));
                }
            }
            Outcome::Holds
        }
        _ => unreachable!("{id} is not a set-level statement"),
    }
}

/// `f` viewed between `dom` and `cod`: the first open `V` of `cod` whose
/// preimage is not sw-open over `dom`.
fn not_sw_continuous(ctx: Ctx, f: &SoftFunction, dom: SpaceView<'_>, cod: SpaceView<'_>) -> Option<u32> {
    cod.opens()
        .find(|&v| !dom.is_sw_open(f.preimage_bits(v) & dom.carrier(), ctx.conv))
}

/// The first open `U` of `dom` whose image is not sw-open over `cod`.
fn not_sw_open(ctx: Ctx, f: &SoftFunction, dom: SpaceView<'_>, cod: SpaceView<'_>) -> Option<u32> {
    dom.opens().find(|&u| !cod.is_sw_open(f.image_bits(u), ctx.conv))
}

/// Non-null sets whose subspace satisfies `good`; true when they cover `full`.
fn good_cover(candidates: impl Iterator<Item = u32>, full: u32, mut good: impl FnMut(u32) -> bool) -> (bool, u32) {
    let union = candidates.filter(|&a| a != 0 && good(a)).fold(0, |acc, a| acc | a);
    (union == full, union)
}

pub(crate) fn check_map(id: PropositionId, ctx: Ctx, t: &SoftTopology, f: &SoftFunction, s: &SoftTopology) -> Outcome {
    use PropositionId::*;
    let conv = ctx.conv;
    let (dv, cv) = (t.space(), s.space());
    let (dfull, cfull) = (t.carrier_bits(), s.carrier_bits());
    let pre = |b| f.preimage_bits(b);
    let img = |a| f.image_bits(a);
    let sw_cont = || not_sw_continuous(ctx, f, dv, cv);
    let sw_open = || not_sw_open(ctx, f, dv, cv);
    match id {
        P4_EQUIV => {
            let c1 = sw_cont().map(|v| ("V", 1, v));
            let c2 = s
                .open_bits()
                .iter()
                .map(|&v| cfull & !v)
                .find(|&k| !dv.is_sw_closed(pre(k)))
                .map(|k| ("F", 1, k));
            let c3 = first(dfull, |g| img(dv.cl_sw(g)) & !cv.closure(img(g)) != 0).map(|g| ("G", 0, g));
            let c4 = first(cfull, |h| dv.cl_sw(pre(h)) & !pre(cv.closure(h)) != 0).map(|h| ("H", 1, h));
            let c5 = first(cfull, |h| pre(cv.interior(h)) & !dv.int_sw(pre(h), conv) != 0).map(|h| ("H", 1, h));
            let c6 = (0..t.universe().cells())
                .find(|&p| {
                    let target = 1u32 << f.cell_image(p);
                    s.open_bits().iter().any(|&v| {
                        v & target != 0
                            && !subsets(dfull)
                                .any(|u| u & (1 << p) != 0 && dv.is_sw_open(u, conv) && img(u) & !v == 0)
                    })
                })
                .map(|p| ("P", 0, 1u32 << p));
            equivalence(t, s, &[("1", c1), ("2", c2), ("3", c3), ("4", c4), ("5", c5), ("pointwise", c6)])
        }
        T4_DENSE_RESTRICT => {
            if sw_cont().is_some() {
                return Outcome::Vacuous;
            }
            for d in subsets(dfull).filter(|&d| dv.is_dense(d)) {
                if let Some(v) = not_sw_continuous(ctx, f, dv.relative(d), cv) {
                    return Fail::pair(t, s)
                        .set("D", 0, d)
                        .set("V", 1, v)
                        .because("f is sw-continuous and D dense, but (f|D)⁻¹(V) is not sw-open over D");
                }
            }
            Outcome::Holds
        }
        T4_COVER_GLUE => {
            let (covers, union) = good_cover(t.open_bits().iter().copied(), dfull, |w| {
                not_sw_continuous(ctx, f, dv.relative(w), cv).is_none()
            });
            if !covers {
                return Outcome::Vacuous;
            }
            match sw_cont() {
                None => Outcome::Holds,
                Some(v) => Fail::pair(t, s)
                    .set("W", 0, union)
                    .set("V", 1, v)
                    .because("the open sets on which f is sw-continuous cover X, but f⁻¹(V) is not sw-open"),
            }
        }
        T4_EXTENSION => {
            let mut applied = false;
            for &w in t.open_bits().iter().filter(|&&w| w != 0) {
                if cv.is_dense(img(w)) && not_sw_continuous(ctx, f, dv.relative(w), cv).is_none() {
                    applied = true;
                    if let Some(v) = sw_cont() {
                        return Fail::pair(t, s)
                            .set("W", 0, w)
                            .set("V", 1, v)
                            .because("f|W is sw-continuous with dense image, but f⁻¹(V) is not sw-open");
                    }
                }
            }
            if applied {
                Outcome::Holds
            } else {
                Outcome::Vacuous
            }
        }
        T4_SEMI_IFF_RESTRICT => {
            let semicontinuous = s.open_bits().iter().find(|&&v| !dv.is_semiopen(pre(v)));
            let restrictions = t
                .open_bits()
                .iter()
                .filter(|&&u| u != 0)
                .find(|&&u| not_sw_continuous(ctx, f, dv.relative(u), cv).is_some());
            equivalence(
                t,
                s,
                &[
                    ("semicontinuous", semicontinuous.map(|&v| ("V", 1, v))),
                    ("restrictions to open sets sw-continuous", restrictions.map(|&u| ("U", 0, u))),
                ],
            )
        }
        T4_CHAR => {
            let c1 = sw_cont().map(|v| ("V", 1, v));
            let c2 = s
                .open_bits()
                .iter()
                .find(|&&v| {
                    let p = pre(v);
                    p != 0 && !t.open_bits().iter().any(|&u| u != 0 && u & !p == 0)
                })
                .map(|&v| ("V", 1, v));
            let c3 = s
                .open_bits()
                .iter()
                .map(|&v| cfull & !v)
                .find(|&k| {
                    let p = pre(k);
                    p != dfull && !t.open_bits().iter().any(|&u| u != 0 && p & u == 0)
                })
                .map(|k| ("F", 1, k));
            let over_image = cv.relative(img(dfull));
            let c4 = first(dfull, |d| dv.is_dense(d) && !over_image.is_dense(img(d))).map(|d| ("D", 0, d));
            equivalence(t, s, &[("1", c1), ("2", c2), ("3", c3), ("4", c4)])
        }
        C4_CODENSE => {
            if !f.is_bijective() {
                return Outcome::Vacuous;
            }
            let c2 = first(dfull, |n| dv.is_co_dense(n) && !cv.is_co_dense(img(n))).map(|n| ("N", 0, n));
            equivalence(t, s, &[("sw-continuous", sw_cont().map(|v| ("V", 1, v))), ("co-dense images", c2)])
        }
        T4_HYPER => {
            if !f.is_surjective() || !dv.is_hyperconnected() || sw_cont().is_some() {
                return Outcome::Vacuous;
            }
            if cv.is_hyperconnected() {
                Outcome::Holds
            } else {
                Fail::pair(t, s).because("f is an sw-continuous surjection from a hyperconnected space onto one that is not")
            }
        }
        D2_DIAGRAM | D3_DIAGRAM => {
            let c = classify_map(f, dv, cv, conv);
            let broken = if id == D2_DIAGRAM {
                vec![
                    (c.continuous && !c.semicontinuous, "continuous but not semicontinuous"),
                    (c.semicontinuous && !c.sw_continuous, "semicontinuous but not sw-continuous"),
                    (c.sw_continuous && !c.sd_continuous, "sw-continuous but not SD-continuous"),
                    (c.semicontinuous && !c.beta_continuous, "semicontinuous but not β-continuous"),
                    (c.beta_continuous && !c.sd_continuous, "β-continuous but not SD-continuous"),
                ]
            } else {
                vec![
                    (c.open_map && !c.semiopen_map, "open but not semiopen"),
                    (c.semiopen_map && !c.sw_open_map, "semiopen but not sw-open"),
                    (c.sw_open_map && !c.sd_open_map, "sw-open but not SD-open"),
                    (c.semiopen_map && !c.beta_open_map, "semiopen but not β-open"),
                    (c.beta_open_map && !c.sd_open_map, "β-open but not SD-open"),
                    (c.homeomorphism && !c.sw_homeomorphism, "a homeomorphism but not an sw-homeomorphism"),
                ]
            };
            match broken.iter().find(|(b, _)| *b) {
                Some((_, why)) => Fail::pair(t, s).because(&format!("f is {why}")),
                None => Outcome::Holds,
            }
        }
        P5_EQUIV => {
            let c1 = sw_open().map(|u| ("U", 0, u));
            let c2 = first(dfull, |g| img(dv.interior(g)) & !cv.int_sw(img(g), conv) != 0).map(|g| ("G", 0, g));
            let c3 = first(cfull, |h| pre(cv.cl_sw(h)) & !dv.closure(pre(h)) != 0).map(|h| ("H", 1, h));
            let c4 = t
                .open_bits()
                .iter()
                .find(|&&u| u != 0 && !subsets(img(u)).any(|v| v != 0 && cv.is_sw_open(v, conv)))
                .map(|&u| ("U", 0, u));
            let c5 = (0..t.universe().cells())
                .find(|&p| {
                    let target = 1u32 << f.cell_image(p);
                    t.open_bits().iter().any(|&u| {
                        u & (1 << p) != 0
                            && !subsets(img(u)).any(|v| v & target != 0 && cv.is_sw_open(v, conv))
                    })
                })
                .map(|p| ("P", 0, 1u32 << p));
            equivalence(t, s, &[("1", c1), ("2", c2), ("3", c3), ("non-null opens", c4), ("pointwise", c5)])
        }
        T5_OPEN_RESTRICT => {
            if sw_open().is_some() {
                return Outcome::Vacuous;
            }
            for &g in t.open_bits().iter().filter(|&&g| g != 0) {
                if let Some(u) = not_sw_open(ctx, f, dv.relative(g), cv) {
                    return Fail::pair(t, s)
                        .set("G", 0, g)
                        .set("U", 0, u)
                        .because("f is sw-open and G open, but f(U) is not sw-open for U open over G");
                }
            }
            Outcome::Holds
        }
        T5_DENSE_EXT => {
            let mut applied = false;
            for d in subsets(dfull).filter(|&d| dv.is_dense(d)) {
                if not_sw_open(ctx, f, dv.relative(d), cv).is_none() {
                    applied = true;
                    if let Some(u) = sw_open() {
                        return Fail::pair(t, s)
                            .set("D", 0, d)
                            .set("U", 0, u)
                            .because("f|D is sw-open on the dense set D, but f(U) is not sw-open");
                    }
                }
            }
            if applied {
                Outcome::Holds
            } else {
                Outcome::Vacuous
            }
        }
        T5_COVER_GLUE => {
            let (covers, union) = good_cover(subsets(dfull), dfull, |a| {
                not_sw_open(ctx, f, dv.relative(a), cv).is_none()
            });
            if !covers {
                return Outcome::Vacuous;
            }
            match sw_open() {
                None => Outcome::Holds,
                Some(u) => Fail::pair(t, s)
                    .set("A", 0, union)
                    .set("U", 0, u)
                    .because("the sets on which f is sw-open cover X, but f(U) is not sw-open"),
            }
        }
        T5_CHAR_CLOSED => {
            if !f.is_bijective() {
                return Outcome::Vacuous;
            }
            let c2 = t
                .open_bits()
                .iter()
                .map(|&u| dfull & !u)
                .find(|&k| {
                    let image = img(k);
                    image != cfull && !s.open_bits().iter().any(|&v| v != 0 && image & v == 0)
                })
                .map(|k| ("F", 0, k));
            equivalence(t, s, &[("sw-open", sw_open().map(|u| ("U", 0, u))), ("closed images", c2)])
        }
        T5_CHAR_DENSE => {
            if !f.is_surjective() {
                return Outcome::Vacuous;
            }
            let c2 = first(cfull, |d| cv.is_dense(d) && !dv.is_dense(pre(d))).map(|d| ("D", 1, d));
            equivalence(t, s, &[("sw-open", sw_open().map(|u| ("U", 0, u))), ("dense preimages", c2)])
        }
        P5_HOMEO => {
            if !f.is_bijective() || sw_cont().is_some() || sw_open().is_some() {
                return Outcome::Vacuous;
            }
            let inverse = f.inverse().expect("bijective");
            match not_sw_open(ctx, &inverse, cv, dv) {
                None => Outcome::Holds,
                Some(v) => Fail::pair(t, s)
                    .set("V", 1, v)
                    .because("f is an sw-homeomorphism but f⁻¹ maps the open V to a set that is not sw-open"),
            }
        }
        _ => unreachable!("{id} is not a map-level statement"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_ascend() {
        assert_eq!(subsets(0b101).collect::<Vec<_>>(), vec![0, 1, 4, 5]);
        assert_eq!(subsets(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets(0b111).count(), 8);
    }
}
