//! Exhaustive enumeration of soft topologies and soft functions on small
//! universes, plus seeded random sampling for larger ones.
//!
//! Soft topologies on `(X, E)` are exactly the topologies on the flat cell
//! set `E × X`, and finite topologies are exactly preorders (`p ≤ q` iff `q`
//! lies in every open set containing `p`), so the enumerator grows labeled
//! preorders one cell at a time and reads off their up-sets.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::topology::SoftTopology;
use crate::universe::{mask_of, Universe};

/// Largest cell count the exhaustive enumerator accepts.
pub const MAX_ENUMERATION_CELLS: usize = 6;

/// Every `(|E|, |X|)` with `|E|·|X| = cells`, ordered by `|E|`.
pub fn shapes(cells: usize) -> Vec<(usize, usize)> {
    (1..=cells).filter(|e| cells.is_multiple_of(*e)).map(|e| (e, cells / e)).collect()
}

/// All topologies on `cells` labeled cells as sorted open families, in
/// lexicographic order. Cached per cell count.
pub fn topology_families(cells: usize) -> Result<&'static [Vec<u32>]> {
    static CACHE: [OnceLock<Vec<Vec<u32>>>; MAX_ENUMERATION_CELLS + 1] =
        [const { OnceLock::new() }; MAX_ENUMERATION_CELLS + 1];
    if cells > MAX_ENUMERATION_CELLS {
        return Err(Error::BudgetExceeded {
            cells,
            limit: MAX_ENUMERATION_CELLS,
        });
    }
    Ok(CACHE[cells].get_or_init(|| build_families(cells)))
}

/// Number of soft topologies on a universe with this many cells.
pub fn count_topologies(cells: usize) -> Result<usize> {
    topology_families(cells).map(<[_]>::len)
}

/// Every soft topology on `universe`, each exactly once, in canonical order.
pub fn enumerate_topologies(universe: &Arc<Universe>) -> Result<Vec<SoftTopology>> {
    let full = universe.full_mask();
    Ok(topology_families(universe.cells())?
        .iter()
        .map(|opens| SoftTopology::from_canonical(universe, full, opens.clone()))
        .collect())
}

/// Shared topology lists for anonymous universes of a given shape.
pub(crate) fn shape_topologies(params: usize, points: usize) -> Result<Arc<Vec<SoftTopology>>> {
    type Cache = Mutex<HashMap<(usize, usize), Arc<Vec<SoftTopology>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&(params, points)) {
        return Ok(Arc::clone(hit));
    }
    let universe = Universe::anonymous(params, points)?;
    let list = Arc::new(enumerate_topologies(&universe)?);
    cache
        .lock()
        .expect("cache poisoned")
        .insert((params, points), Arc::clone(&list));
    Ok(list)
}

/// Up-set closure of each cell in a preorder given as rows `up[p]`.
fn build_families(cells: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut up = vec![0u32; cells];
    extend_preorder(cells, 0, &mut up, &mut out);
    out.sort_unstable();
    out
}

/// `up[p]` is the minimal open neighbourhood of cell `p` among the first
/// `k` cells. Adding cell `k` chooses the cells below it (`down`, a down-set)
/// and the cells above it (`above`, an up-set contained in `up[d]` for every
/// `d` in `down`); these conditions are exactly transitivity.
fn extend_preorder(cells: usize, k: usize, up: &mut [u32], out: &mut Vec<Vec<u32>>) {
    if k == cells {
        out.push(opens_of(cells, up));
        return;
    }
    let old = mask_of(k);
    let mut down = 0u32;
    loop {
        if is_down_set(up, k, down) {
            let bound = (0..k)
                .filter(|&d| down & (1 << d) != 0)
                .fold(old, |acc, d| acc & up[d]);
            let mut above = bound;
            loop {
                if is_up_set(up, above) {
                    let saved: Vec<u32> = up[..k].to_vec();
                    for (d, row) in up[..k].iter_mut().enumerate() {
                        if down & (1 << d) != 0 {
                            *row |= 1 << k;
                        }
                    }
                    up[k] = above | (1 << k);
                    extend_preorder(cells, k + 1, up, out);
                    up[..k].copy_from_slice(&saved);
                }
                if above == 0 {
                    break;
                }
                above = (above - 1) & bound;
            }
        }
        if down == old {
            break;
        }
        down += 1;
    }
}

fn is_down_set(up: &[u32], k: usize, down: u32) -> bool {
    (0..k).all(|a| down & (1 << a) != 0 || up[a] & down == 0)
}

fn is_up_set(up: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let p = rest.trailing_zeros() as usize;
        if up[p] & !set != 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

fn opens_of(cells: usize, up: &[u32]) -> Vec<u32> {
    (0..=mask_of(cells)).filter(|&s| is_up_set(up, s)).collect()
}

/// Images of `perm` applied to every cell bit of `set`.
fn permute(set: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        let c = rest.trailing_zeros() as usize;
        out |= 1 << perm[c];
        rest &= rest - 1;
    }
    out
}

/// All cell permutations induced by `Sym(E) × Sym(X)`.
fn product_permutations(params: usize, points: usize) -> Vec<Vec<usize>> {
    let pe = permutations(params);
    let px = permutations(points);
    let mut out = Vec::with_capacity(pe.len() * px.len());
    for a in &pe {
        for b in &px {
            out.push(
                (0..params * points)
                    .map(|c| a[c / points] * points + b[c % points])
                    .collect(),
            );
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for i in 0..n {
            let mut p = rest.clone();
            p.insert(i, n - 1);
            out.push(p);
        }
    }
    out
}

/// Indices (into the canonical list) of one topology per orbit of
/// `Sym(E) × Sym(X)`: the lexicographically least member of each orbit.
pub fn orbit_representatives(params: usize, points: usize) -> Result<Vec<usize>> {
    let families = topology_families(params * points)?;
    let perms = product_permutations(params, points);
    let index: HashMap<&[u32], usize> = families
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut reps = Vec::new();
    let mut seen = vec![false; families.len()];
    for (i, family) in families.iter().enumerate() {
        if seen[i] {
            continue;
        }
        reps.push(i);
        for perm in &perms {
            let mut image: Vec<u32> = family.iter().map(|&o| permute(o, perm)).collect();
            image.sort_unstable();
            seen[index[image.as_slice()]] = true;
        }
    }
    Ok(reps)
}

/// Every map `{0..n} → {0..m}`, as value vectors in lexicographic order.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Maps `{0..n} → {0..m}` up to relabeling the target: each value first
/// appears as one more than the largest value before it.
pub fn canonical_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    all_maps(n, m)
        .into_iter()
        .filter(|v| {
            let mut next = 0;
            v.iter().all(|&x| {
                if x > next {
                    return false;
                }
                if x == next {
                    next += 1;
                }
                true
            })
        })
        .collect()
}

/// A random topology on `cells` cells: a random relation closed to a
/// preorder, read off as its up-sets.
pub fn random_family<R: Rng>(cells: usize, rng: &mut R) -> Vec<u32> {
    let mut up: Vec<u32> = (0..cells)
        .map(|p| {
            let mut row = 1 << p;
            for q in 0..cells {
                if q != p && rng.gen_bool(0.35) {
                    row |= 1 << q;
                }
            }
            row
        })
        .collect();
    loop {
        let mut changed = false;
        for p in 0..cells {
            let mut row = up[p];
            let mut rest = up[p];
            while rest != 0 {
                let q = rest.trailing_zeros() as usize;
                row |= up[q];
                rest &= rest - 1;
            }
            if row != up[p] {
                up[p] = row;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    opens_of(cells, &up)
}

/// Families of subsets of `cells` cells satisfying the axioms, found by
/// testing every family. Only feasible for `cells ≤ 4`.
pub fn brute_force_families(cells: usize) -> Vec<Vec<u32>> {
    assert!(cells <= 4, "2^(2^{cells}) families is too many");
    let sets = 1usize << cells;
    let full = mask_of(cells);
    let mut out = Vec::new();
    for family in 0u64..(1u64 << sets) {
        let members: BTreeSet<u32> = (0..sets as u32).filter(|&s| family & (1 << s) != 0).collect();
        if members.contains(&0)
            && members.contains(&full)
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| members.contains(&(a & b)) && members.contains(&(a | b))))
        {
            out.push(members.into_iter().collect());
        }
    }
    out.sort_unstable();
    out
}
