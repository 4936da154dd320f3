//! Instance streams and the deterministic merge of their results.
//!
//! Instances come in blocks (one per universe shape, or per pair of shapes).
//! A block is evaluated serially or on the rayon pool, then folded in index
//! order, so the first failure and every count agree between the two modes.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::catalog::{Kind, PropositionId};
use super::props::{self, Ctx, Failure, Outcome};
use super::strict;
use super::witness::{Verdict, Witness};
use super::{CheckConfig, SearchBudget};
use crate::enumerate::{
    all_maps, canonical_maps, orbit_representatives, random_family, shape_topologies, shapes, topology_families,
};
use crate::function::SoftFunction;
use crate::topology::SoftTopology;
use crate::universe::Universe;

/// Totals for a run of instances, or the first failure.
struct Partial<F> {
    instances: u64,
    non_vacuous: u64,
    failure: Option<F>,
}

impl Partial<Failure> {
    fn of(outcome: Outcome) -> Self {
        match outcome {
            Outcome::Holds => Partial {
                instances: 1,
                non_vacuous: 1,
                failure: None,
            },
            Outcome::Vacuous => Partial {
                instances: 1,
                non_vacuous: 0,
                failure: None,
            },
            Outcome::Fails(f) => Partial {
                instances: 1,
                non_vacuous: 1,
                failure: Some(f),
            },
        }
    }
}

/// Evaluates `items` and folds in index order, stopping at the first
/// failure. Returns the totals and the failing index.
fn scan<T, F, G>(items: &[T], serial: bool, eval: G) -> (u64, u64, Option<(usize, F)>)
where
    T: Sync,
    F: Send,
    G: Fn(&T) -> Partial<F> + Sync,
{
    let (mut instances, mut non_vacuous) = (0, 0);
    let mut fold = |i: usize, p: Partial<F>| {
        instances += p.instances;
        non_vacuous += p.non_vacuous;
        p.failure.map(|f| (i, f))
    };
    if serial {
        for (i, item) in items.iter().enumerate() {
            if let Some(hit) = fold(i, eval(item)) {
                return (instances, non_vacuous, Some(hit));
            }
        }
    } else {
        let results: Vec<Partial<F>> = items.par_iter().map(&eval).collect();
        for (i, p) in results.into_iter().enumerate() {
            if let Some(hit) = fold(i, p) {
                return (instances, non_vacuous, Some(hit));
            }
        }
    }
    (instances, non_vacuous, None)
}

fn fnv1a(text: &str) -> u64 {
    text.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

fn rng_for(id: PropositionId, budget: &SearchBudget) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(budget.seed ^ fnv1a(id.as_str()))
}

fn random_topology(cells: usize, rng: &mut ChaCha8Rng) -> SoftTopology {
    let shapes = shapes(cells);
    let (e, x) = shapes[rng.gen_range(0..shapes.len())];
    let universe = Universe::anonymous(e, x).expect("sampled cells stay under the cap");
    let opens = random_family(cells, rng);
    SoftTopology::from_canonical(&universe, universe.full_mask(), opens)
}

fn random_map(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..m)).collect()
}

/// A map-level instance found to fail.
struct MapFailure {
    t: SoftTopology,
    f: SoftFunction,
    s: SoftTopology,
    failure: Failure,
}

#[derive(Default)]
struct Totals {
    instances: u64,
    non_vacuous: u64,
    samples: u64,
    incomplete: bool,
}

impl Totals {
    fn add(&mut self, instances: u64, non_vacuous: u64) {
        self.instances += instances;
        self.non_vacuous += non_vacuous;
    }

    /// How many of `wanted` further instances fit the budget.
    fn room(&mut self, budget: &SearchBudget, wanted: u64) -> u64 {
        let left = budget.max_checks.saturating_sub(self.instances);
        if wanted > left {
            self.incomplete = true;
        }
        wanted.min(left)
    }
}

enum Universal {
    Done(Totals),
    Failed(Box<Witness>),
}

fn set_level(id: PropositionId, ctx: Ctx, budget: &SearchBudget, serial: bool) -> Universal {
    let mut totals = Totals::default();
    for cells in budget.exhaustive_range() {
        for (e, x) in shapes(cells) {
            let tops = shape_topologies(e, x).expect("exhaustive range is within the enumerator");
            let take = totals.room(budget, tops.len() as u64) as usize;
            let (n, nv, hit) = scan(&tops[..take], serial, |t| Partial::of(props::check_set(id, ctx, t)));
            if let Some((i, failure)) = hit {
                return Universal::Failed(Box::new(Witness::counterexample(id, &[&tops[i]], None, &failure)));
            }
            totals.add(n, nv);
        }
    }
    let mut rng = rng_for(id, budget);
    for cells in budget.sampled_range() {
        let want = totals.room(budget, budget.sample_count as u64) as usize;
        let tops: Vec<SoftTopology> = (0..want).map(|_| random_topology(cells, &mut rng)).collect();
        let (n, nv, hit) = scan(&tops, serial, |t| Partial::of(props::check_set(id, ctx, t)));
        if let Some((i, failure)) = hit {
            return Universal::Failed(Box::new(Witness::counterexample(id, &[&tops[i]], None, &failure)));
        }
        totals.add(n, nv);
        totals.samples += n;
    }
    Universal::Done(totals)
}

fn map_level(id: PropositionId, ctx: Ctx, budget: &SearchBudget, serial: bool) -> Universal {
    let mut totals = Totals::default();
    let range = budget.exhaustive_range();
    let shape_list: Vec<(usize, usize)> = range.clone().flat_map(shapes).collect();
    for &(de, dx) in &shape_list {
        let doms = shape_topologies(de, dx).expect("exhaustive range is within the enumerator");
        let dom_indices: Vec<usize> = if budget.symmetry {
            orbit_representatives(de, dx).expect("exhaustive range is within the enumerator")
        } else {
            (0..doms.len()).collect()
        };
        let du = Arc::clone(doms[0].universe());
        for &(ce, cx) in &shape_list {
            let cods = shape_topologies(ce, cx).expect("exhaustive range is within the enumerator");
            let cu = Arc::clone(cods[0].universe());
            let maps = |n, m| if budget.symmetry { canonical_maps(n, m) } else { all_maps(n, m) };
            let (us, ps) = (maps(dx, cx), maps(de, ce));
            let mut items = Vec::with_capacity(dom_indices.len() * us.len() * ps.len());
            for &d in &dom_indices {
                for u in &us {
                    for p in &ps {
                        items.push((d, u, p));
                    }
                }
            }
            let per_item = cods.len() as u64;
            let fit = totals.room(budget, per_item * items.len() as u64) / per_item;
            items.truncate(fit as usize);
            let (n, nv, hit) = scan(&items, serial, |&(d, u, p)| {
                let f = SoftFunction::build(&du, &cu, u.clone(), p.clone());
                let t = &doms[d];
                let mut partial = Partial {
                    instances: 0,
                    non_vacuous: 0,
                    failure: None,
                };
                for s in cods.iter() {
                    let step = Partial::of(props::check_map(id, ctx, t, &f, s));
                    partial.instances += 1;
                    partial.non_vacuous += step.non_vacuous;
                    if let Some(failure) = step.failure {
                        partial.failure = Some(MapFailure {
                            t: t.clone(),
                            f,
                            s: s.clone(),
                            failure,
                        });
                        break;
                    }
                }
                partial
            });
            if let Some((_, m)) = hit {
                return Universal::Failed(Box::new(Witness::counterexample(id, &[&m.t, &m.s], Some(&m.f), &m.failure)));
            }
            totals.add(n, nv);
        }
    }
    let mut rng = rng_for(id, budget);
    for cells in budget.sampled_range() {
        let want = totals.room(budget, budget.sample_count as u64) as usize;
        let instances: Vec<(SoftTopology, SoftFunction, SoftTopology)> = (0..want)
            .map(|_| {
                let t = random_topology(cells, &mut rng);
                let s = random_topology(rng.gen_range(1..=cells), &mut rng);
                let (du, cu) = (t.universe(), s.universe());
                let u = random_map(du.point_count(), cu.point_count(), &mut rng);
                let p = random_map(du.param_count(), cu.param_count(), &mut rng);
                let f = SoftFunction::build(du, cu, u, p);
                (t, f, s)
            })
            .collect();
        let (n, nv, hit) = scan(&instances, serial, |(t, f, s)| {
            Partial::of(props::check_map(id, ctx, t, f, s))
        });
        if let Some((i, failure)) = hit {
            let (t, f, s) = &instances[i];
            return Universal::Failed(Box::new(Witness::counterexample(id, &[t, s], Some(f), &failure)));
        }
        totals.add(n, nv);
        totals.samples += n;
    }
    Universal::Done(totals)
}

fn universal(id: PropositionId, ctx: Ctx, budget: &SearchBudget, serial: bool) -> Witness {
    let run = if id.kind() == Kind::SetLevel {
        set_level(id, ctx, budget, serial)
    } else {
        map_level(id, ctx, budget, serial)
    };
    let totals = match run {
        Universal::Failed(witness) => return *witness,
        Universal::Done(totals) => totals,
    };
    let exhaustive_cells = *budget.exhaustive_range().end();
    if totals.non_vacuous == 0 {
        let reason = "no examined instance satisfies the hypothesis".to_string();
        let trace = format!("vacuous on {} instances", totals.instances);
        return Witness::bare(
            id,
            Verdict::Vacuous {
                instances: totals.instances,
                reason,
            },
            trace,
        );
    }
    let mut trace = format!(
        "holds on {} instances ({} non-vacuous), exhaustive to {exhaustive_cells} cells",
        totals.instances, totals.non_vacuous
    );
    if totals.samples > 0 {
        trace.push_str(&format!(", {} sampled", totals.samples));
    }
    if totals.incomplete {
        trace.push_str("; incomplete: check budget exhausted");
    }
    Witness::bare(
        id,
        Verdict::Confirmed {
            instances: totals.instances,
            non_vacuous: totals.non_vacuous,
            exhaustive_cells,
            samples: totals.samples,
            incomplete: totals.incomplete,
        },
        trace,
    )
}

/// Topologies of one shape, built from the shared family list without
/// caching the built spaces.
fn topologies_of(e: usize, x: usize, serial: bool) -> Vec<SoftTopology> {
    let universe = Universe::anonymous(e, x).expect("witness cells stay under the cap");
    let families = topology_families(e * x).expect("witness cells are within the enumerator");
    let build = |opens: &Vec<u32>| SoftTopology::from_canonical(&universe, universe.full_mask(), opens.clone());
    if serial {
        families.iter().map(build).collect()
    } else {
        families.par_iter().map(build).collect()
    }
}

fn first_hit<T, R, G>(items: &[T], serial: bool, find: G) -> Option<(usize, R)>
where
    T: Sync,
    R: Send,
    G: Fn(&T) -> Option<R> + Sync,
{
    if serial {
        items.iter().enumerate().find_map(|(i, t)| find(t).map(|r| (i, r)))
    } else {
        items.par_iter().enumerate().find_map_first(|(i, t)| find(t).map(|r| (i, r)))
    }
}

fn witness_search(id: PropositionId, ctx: Ctx, budget: &SearchBudget, serial: bool) -> Witness {
    let top_cells = budget.witness_cells.min(crate::enumerate::MAX_ENUMERATION_CELLS);
    let mut checks = 0u64;
    let mut incomplete = false;
    let mut reached = 0;
    'cells: for cells in 1..=top_cells {
        reached = cells;
        for (e, x) in shapes(cells) {
            let tops = topologies_of(e, x, serial);
            if id.kind() == Kind::SetWitness {
                let left = budget.max_checks.saturating_sub(checks) as usize;
                if tops.len() > left {
                    incomplete = true;
                }
                let tops = &tops[..tops.len().min(left)];
                if let Some((i, (sets, trace))) = first_hit(tops, serial, |t| strict::set_witness(id, ctx, t)) {
                    return Witness::instance(id, Verdict::Found { cells }, &[&tops[i]], None, &sets, trace);
                }
                checks += tops.len() as u64;
            } else {
                let keep = |pred: &(dyn Fn(&SoftTopology) -> bool + Sync)| -> Vec<usize> {
                    if serial {
                        (0..tops.len()).filter(|&i| pred(&tops[i])).collect()
                    } else {
                        (0..tops.len()).into_par_iter().filter(|&i| pred(&tops[i])).collect()
                    }
                };
                let doms = keep(&|t| strict::domain_filter(id, ctx, t));
                let cods = keep(&|s| strict::codomain_filter(id, ctx, s));
                if cods.is_empty() {
                    continue;
                }
                let left = budget.max_checks.saturating_sub(checks) / cods.len() as u64;
                if doms.len() as u64 > left {
                    incomplete = true;
                }
                let doms = &doms[..doms.len().min(left as usize)];
                let f = SoftFunction::identity(tops[0].universe());
                let hit = first_hit(doms, serial, |&d| {
                    cods.iter()
                        .find_map(|&c| strict::map_witness(id, ctx, &tops[d], &f, &tops[c]).map(|trace| (c, trace)))
                });
                if let Some((i, (c, trace))) = hit {
                    let (t, s) = (&tops[doms[i]], &tops[c]);
                    return Witness::instance(id, Verdict::Found { cells }, &[t, s], Some(&f), &[], trace);
                }
                checks += doms.len() as u64 * cods.len() as u64;
            }
            if incomplete {
                break 'cells;
            }
        }
    }
    let trace = if incomplete {
        format!("not found within budget: stopped at {reached} cells after {checks} checks")
    } else {
        format!("not found within budget: every space up to {top_cells} cells examined")
    };
    Witness::bare(
        id,
        Verdict::NotFound {
            searched_cells: reached,
            checks,
            incomplete,
        },
        trace,
    )
}

/// Runs one catalog entry and records its wall time.
pub(crate) fn evaluate(id: PropositionId, budget: &SearchBudget, config: &CheckConfig) -> Witness {
    let ctx = Ctx {
        conv: config.conventions,
        sep: config.separation,
    };
    let start = Instant::now();
    let mut witness = match id.kind() {
        Kind::Vacuous => Witness::bare(
            id,
            Verdict::Vacuous {
                instances: 0,
                reason: "finite models are separable".into(),
            },
            "vacuously confirmed (finite models are separable)".into(),
        ),
        Kind::SetLevel | Kind::MapLevel => universal(id, ctx, budget, config.serial),
        Kind::SetWitness | Kind::MapWitness => witness_search(id, ctx, budget, config.serial),
    };
    witness.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    witness
}
