//! Predicates for the strictness searches: a space and sets (or a function)
//! with the weaker property but not the stronger one.

use super::catalog::PropositionId;
use super::props::{subsets, Ctx};
use crate::function::{classify_map, FunctionClassification, MapProperty, SoftFunction};
use crate::topology::{SetProperty, SoftTopology};

pub(crate) type Sets = Vec<(&'static str, usize, u32)>;

fn separating(id: PropositionId) -> Option<(SetProperty, SetProperty)> {
    use PropositionId::*;
    use SetProperty::*;
    Some(match id {
        SD_NOT_SW => (SomewhereDense, SwOpen),
        BETA_NOT_SW => (BetaOpen, SwOpen),
        SW_NOT_SEMI => (SwOpen, Semiopen),
        SW_NOT_BETA => (SwOpen, BetaOpen),
        SD_NOT_BETA => (SomewhereDense, BetaOpen),
        _ => return None,
    })
}

/// The first sets of `t` (ascending bit patterns) witnessing `id`.
pub(crate) fn set_witness(id: PropositionId, ctx: Ctx, t: &SoftTopology) -> Option<(Sets, String)> {
    use PropositionId::*;
    let s = t.space();
    let conv = ctx.conv;
    let full = t.carrier_bits();
    let show = |b| t.set(b).to_string();
    if let Some((weak, strong)) = separating(id) {
        let g = subsets(full).find(|&g| s.has(g, weak, conv) && !s.has(g, strong, conv))?;
        let trace = format!(
            "G = {}: Int(G) = {}, Cl(G) = {}; {weak}: true, {strong}: false",
            show(g),
            show(s.interior(g)),
            show(s.closure(g)),
        );
        return Some((vec![("G", 0, g)], trace));
    }
    let sw: Vec<u32> = subsets(full).filter(|&g| s.is_sw_open(g, conv)).collect();
    let (other, label, kind): (Vec<u32>, &'static str, &str) = match id {
        INTERSECT_NOT_SW => (sw.clone(), "H", "sw-open"),
        INTERSECT_OPEN_NOT_SW => (t.open_bits().to_vec(), "U", "open"),
        INTERSECT_CLOSED_NOT_SW => (subsets(full).filter(|&k| s.is_closed(k)).collect(), "F", "closed"),
        INTERSECT_DENSE_NOT_SW => (subsets(full).filter(|&d| s.is_dense(d)).collect(), "D", "dense"),
        _ => unreachable!("{id} is not a set witness search"),
    };
    for &g in &sw {
        for &h in &other {
            if !s.is_sw_open(g & h, conv) {
                let trace = format!(
                    "G = {} is sw-open, {label} = {} is {kind}, G ⊓ {label} = {} has null interior",
                    show(g),
                    show(h),
                    show(g & h)
                );
                return Some((vec![("G", 0, g), (label, 0, h)], trace));
            }
        }
    }
    None
}

fn map_pair(id: PropositionId) -> (MapProperty, MapProperty) {
    use MapProperty::*;
    use PropositionId::*;
    match id {
        SWCONT_NOT_SEMICONT => (SwContinuous, Semicontinuous),
        BETACONT_NOT_SEMICONT => (BetaContinuous, Semicontinuous),
        SDCONT_NOT_SWCONT => (SdContinuous, SwContinuous),
        SDCONT_NOT_BETACONT => (SdContinuous, BetaContinuous),
        SWCONT_NOT_BETACONT => (SwContinuous, BetaContinuous),
        SWOPEN_NOT_SEMIOPEN_MAP => (SwOpenMap, SemiopenMap),
        BETAOPEN_NOT_SEMIOPEN_MAP => (BetaOpenMap, SemiopenMap),
        SDOPEN_NOT_SWOPEN_MAP => (SdOpenMap, SwOpenMap),
        SDOPEN_NOT_BETAOPEN_MAP => (SdOpenMap, BetaOpenMap),
        SWHOMEO_NOT_HOMEO => (SwHomeomorphism, Homeomorphism),
        SWHOMEO_NOT_T0 => (SwHomeomorphism, SwHomeomorphism),
        _ => unreachable!("{id} is not a map witness search"),
    }
}

/// Whether `t` may serve as the domain of a witness for `id`.
pub(crate) fn domain_filter(id: PropositionId, ctx: Ctx, t: &SoftTopology) -> bool {
    id != PropositionId::SWHOMEO_NOT_T0 || t.space().properties(ctx.sep).t2
}

/// Whether `s` may serve as the codomain of a witness for `id`.
pub(crate) fn codomain_filter(id: PropositionId, ctx: Ctx, s: &SoftTopology) -> bool {
    id != PropositionId::SWHOMEO_NOT_T0 || !s.space().properties(ctx.sep).t0
}

fn describe(c: &FunctionClassification, weak: MapProperty, strong: MapProperty) -> String {
    format!("{weak}: {}, {strong}: {}", c.get(weak), c.get(strong))
}

/// The trace when `f: T → S` witnesses `id`.
pub(crate) fn map_witness(
    id: PropositionId,
    ctx: Ctx,
    t: &SoftTopology,
    f: &SoftFunction,
    s: &SoftTopology,
) -> Option<String> {
    let (weak, strong) = map_pair(id);
    let c = classify_map(f, t.space(), s.space(), ctx.conv);
    if id == PropositionId::SWHOMEO_NOT_T0 {
        let (dom, cod) = (t.space().properties(ctx.sep), s.space().properties(ctx.sep));
        return (c.sw_homeomorphism && dom.t2 && !cod.t0).then(|| {
            format!(
                "f is an sw-homeomorphism (homeomorphism: {}); domain soft T₂: true, codomain soft T₀: false",
                c.homeomorphism
            )
        });
    }
    (c.get(weak) && !c.get(strong)).then(|| describe(&c, weak, strong))
}
