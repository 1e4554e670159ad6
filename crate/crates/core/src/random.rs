//! Seeded generators for randomized checks and the examples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::{BitSet, VertexSet};
use crate::complex::SimplicialComplex;
use crate::fca::FormalContext;
use crate::poset::Poset;

/// A complex on at most `max_m` vertices generated by `1..=max_facets`
/// random nonempty sets. Unused vertices are compacted away, so the result
/// has no ghost vertices.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_m: usize, max_facets: usize) -> SimplicialComplex {
    let m = rng.gen_range(1..=max_m.max(1));
    let facets = rng.gen_range(1..=max_facets.max(1));
    let density = rng.gen_range(0.25..0.75);
    let mut sets = Vec::with_capacity(facets);
    for _ in 0..facets {
        let mut s: VertexSet = (0..m).filter(|_| rng.gen_bool(density)).collect();
        if s.is_empty() {
            s.insert(rng.gen_range(0..m));
        }
        sets.push(s);
    }
    compact(m, sets)
}

fn compact(m: usize, sets: Vec<VertexSet>) -> SimplicialComplex {
    let mut used = BitSet::new();
    for s in &sets {
        used.union_with(s);
    }
    let mut new_id = vec![usize::MAX; m];
    for (i, v) in used.iter().enumerate() {
        new_id[v] = i;
    }
    let relabeled = sets.iter().map(|s| s.iter().map(|v| new_id[v]).collect());
    SimplicialComplex::from_maximal(used.len(), relabeled).expect("compacted complex is valid")
}

/// A `nv × nw` context with independent entries of the given density.
pub fn random_context<R: Rng + ?Sized>(rng: &mut R, nv: usize, nw: usize, density: f64) -> FormalContext {
    let rows: Vec<BitSet> = (0..nv)
        .map(|_| (0..nw).filter(|_| rng.gen_bool(density)).collect())
        .collect();
    FormalContext::from_rows(nw, rows).expect("rows are in range")
}

/// A random context whose incidence matrix has no constant row or column.
pub fn random_proper_context<R: Rng + ?Sized>(rng: &mut R, max_v: usize, max_w: usize) -> FormalContext {
    loop {
        let nv = rng.gen_range(2..=max_v.max(2));
        let nw = rng.gen_range(2..=max_w.max(2));
        let density = rng.gen_range(0.3..0.7);
        let ctx = random_context(rng, nv, nw, density);
        if !ctx.has_constant_line() {
            return ctx;
        }
    }
}

/// A random poset on `1..=max_n` elements: each pair `a < b` (by index) is
/// related with probability `p` before closing transitively.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, max_n: usize, p: f64) -> Poset {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    Poset::from_relation(n, &pairs).expect("index order is acyclic")
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
