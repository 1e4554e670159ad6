use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::FormalContext;
use crate::bitset::{format_one_based, BitSet};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::DEFAULT_CONCEPT_OBJECT_CAP;

/// A pair with `extent' = intent` and `intent' = extent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Concept {
    pub extent: BitSet,
    pub intent: BitSet,
}

/// All concepts of a context, ordered by extent inclusion.
///
/// Concepts are stored in graded order of their extents, so index 0 is the
/// bottom concept and the last index is the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptLattice {
    concepts: Vec<Concept>,
    order: Poset,
}

/// Enumerates all concepts by NextClosure in lectic order, then sorts them
/// graded by extent.
pub fn concepts(ctx: &FormalContext) -> Result<ConceptLattice> {
    concepts_with_cap(ctx, DEFAULT_CONCEPT_OBJECT_CAP)
}

pub fn concepts_with_cap(ctx: &FormalContext, object_cap: usize) -> Result<ConceptLattice> {
    if ctx.nv() > object_cap {
        return Err(Error::Resource {
            what: "object count for concept enumeration",
            limit: object_cap,
        });
    }
    let n = ctx.nv();
    let mut extents = Vec::new();
    let mut a = ctx.closure(&BitSet::new());
    loop {
        extents.push(a.clone());
        match next_closure(ctx, n, &a) {
            Some(next) => a = next,
            None => break,
        }
    }
    let mut concepts: Vec<Concept> = extents
        .into_iter()
        .map(|extent| Concept {
            intent: ctx.derive_attr(&extent),
            extent,
        })
        .collect();
    concepts.sort_by(|x, y| x.extent.cmp_graded(&y.extent));
    let order = Poset::from_labels_by_inclusion(concepts.iter().map(|c| c.extent.clone()).collect())?;
    Ok(ConceptLattice { concepts, order })
}

/// The lectically next closed set after `a`, if any.
fn next_closure(ctx: &FormalContext, n: usize, a: &BitSet) -> Option<BitSet> {
    for i in (0..n).rev() {
        if a.contains(i) {
            continue;
        }
        let mut seed = a.prefix(i);
        seed.insert(i);
        let b = ctx.closure(&seed);
        if b.prefix(i) == a.prefix(i) {
            return Some(b);
        }
    }
    None
}

impl ConceptLattice {
    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    /// The order on concept indices, labeled by extents.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn extents(&self) -> impl Iterator<Item = &BitSet> {
        self.concepts.iter().map(|c| &c.extent)
    }

    pub fn has_extent(&self, extent: &BitSet) -> bool {
        self.index_of(extent).is_some()
    }

    pub fn index_of(&self, extent: &BitSet) -> Option<usize> {
        self.concepts.iter().position(|c| &c.extent == extent)
    }

    pub fn bottom(&self) -> &Concept {
        &self.concepts[0]
    }

    pub fn top(&self) -> &Concept {
        &self.concepts[self.concepts.len() - 1]
    }

    /// The meet of every concept whose extent contains `objects`, found by
    /// scanning the lattice rather than by closing in the context.
    pub fn meet_closure(&self, objects: &BitSet) -> Concept {
        let mut extent = self.top().extent.clone();
        for c in &self.concepts {
            if objects.is_subset(&c.extent) {
                extent.intersect_with(&c.extent);
            }
        }
        // extents are closed under intersection, so the meet is in the list
        let i = self.index_of(&extent).expect("intersection of extents is an extent");
        self.concepts[i].clone()
    }

    /// Concepts with nonempty extent and nonempty intent, as a poset labeled
    /// by extents. For contexts without constant rows or columns this is the
    /// lattice with both bounds removed.
    pub fn proper_part(&self) -> Poset {
        let keep: BitSet = (0..self.len())
            .filter(|&i| !self.concepts[i].extent.is_empty() && !self.concepts[i].intent.is_empty())
            .collect();
        self.order.induced(&keep)
    }

    pub fn to_json(&self) -> LatticeJson {
        let one_based = |s: &BitSet| s.iter().map(|v| v + 1).collect();
        LatticeJson {
            concepts: self
                .concepts
                .iter()
                .map(|c| ConceptJson {
                    extent: one_based(&c.extent),
                    intent: one_based(&c.intent),
                })
                .collect(),
            hasse: self.order.hasse().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Graphviz diagram labeled by extents only.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, c) in self.concepts.iter().enumerate() {
            let text = if c.extent.is_empty() {
                "∅".to_string()
            } else {
                format_one_based(&c.extent)
            };
            let _ = writeln!(out, "  n{i} [label=\"{text}\"];");
        }
        for &(a, b) in self.order.hasse() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptJson {
    pub extent: Vec<usize>,
    pub intent: Vec<usize>,
}

/// JSON shape `{concepts: [{extent, intent}], hasse: [[i, j]]}` with 1-based
/// members and 0-based concept indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub concepts: Vec<ConceptJson>,
    pub hasse: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::fca::context_of_complex;
    use crate::random::random_context;
    use rand::{rngs::StdRng, Rng, SeedableRng};
    use std::collections::BTreeSet;

    fn brute_force(ctx: &FormalContext) -> BTreeSet<(BitSet, BitSet)> {
        (0u64..1 << ctx.nv())
            .map(|mask| {
                let a: BitSet = (0..ctx.nv()).filter(|i| mask & (1 << i) != 0).collect();
                (ctx.closure(&a), ctx.derive_attr(&a))
            })
            .collect()
    }

    #[test]
    fn identity_has_four_concepts() {
        let ctx = FormalContext::from_rows(2, vec![BitSet::singleton(0), BitSet::singleton(1)]).unwrap();
        let l = concepts(&ctx).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.order().hasse().len(), 4);
        assert!(l.bottom().extent.is_empty());
        assert_eq!(l.top().extent, BitSet::full(2));
    }

    #[test]
    fn triangle_has_eight_concepts() {
        let ctx = context_of_complex(&SimplicialComplex::boundary_of_simplex(3).unwrap());
        let l = concepts(&ctx).unwrap();
        assert_eq!(l.len(), 8);
        assert_eq!(l.len(), brute_force(&ctx).len());
        let sizes: Vec<usize> = l.extents().map(BitSet::len).collect();
        assert_eq!(sizes, vec![0, 1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(l.proper_part().len(), 6);
    }

    #[test]
    fn matches_brute_force() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let nv = rng.gen_range(1..=10);
            let nw = rng.gen_range(1..=8);
            let density = rng.gen_range(0.2..0.8);
            let ctx = random_context(&mut rng, nv, nw, density);
            let l = concepts(&ctx).unwrap();
            let got: BTreeSet<_> = l.concepts().iter().map(|c| (c.extent.clone(), c.intent.clone())).collect();
            assert_eq!(got.len(), l.len());
            assert_eq!(got, brute_force(&ctx));
            for c in l.concepts() {
                assert_eq!(ctx.derive_obj(&c.intent), c.extent);
            }
        }
    }

    #[test]
    fn meet_closure_agrees_with_context_closure() {
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..50 {
            let ctx = random_context(&mut rng, 7, 6, 0.5);
            let l = concepts(&ctx).unwrap();
            for mask in 0u64..1 << 7 {
                let a: BitSet = (0..7).filter(|i| mask & (1 << i) != 0).collect();
                let c = l.meet_closure(&a);
                assert_eq!(c.extent, ctx.closure(&a));
                assert_eq!(c.intent, ctx.derive_attr(&a));
            }
            for c in l.concepts() {
                assert_eq!(&l.meet_closure(&c.extent), c);
            }
        }
    }

    #[test]
    fn object_cap_is_enforced() {
        let ctx = random_context(&mut StdRng::seed_from_u64(1), 5, 3, 0.5);
        assert!(matches!(concepts_with_cap(&ctx, 4), Err(Error::Resource { .. })));
    }

    #[test]
    fn exports() {
        let ctx = FormalContext::from_rows(1, vec![BitSet::singleton(0)]).unwrap();
        let l = concepts(&ctx).unwrap();
        assert_eq!(l.len(), 1);
        let json = serde_json::to_string(&l.to_json()).unwrap();
        assert_eq!(json, r#"{"concepts":[{"extent":[1],"intent":[1]}],"hasse":[]}"#);
        assert!(l.to_dot("L").contains("label=\"{1}\""));
    }
}
