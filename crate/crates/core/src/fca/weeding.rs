use std::collections::BTreeSet;

use super::context_of_complex;
use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poset::{Beat, BeatKind, Poset};
use crate::{Limits, DEFAULT_FACE_CAP};

/// The weeding of `k`: nonempty intersections of maximal simplices ordered
/// by inclusion, labeled by their vertex sets in graded order.
pub fn weeding(k: &SimplicialComplex) -> Result<Poset> {
    Poset::from_labels_by_inclusion(intersection_closure(k.maximal()))
}

/// All nonempty intersections of nonempty subfamilies of `generators`, in
/// graded order.
fn intersection_closure(generators: &[VertexSet]) -> Vec<VertexSet> {
    let mut seen: BTreeSet<VertexSet> = generators.iter().filter(|g| !g.is_empty()).cloned().collect();
    let mut frontier: Vec<VertexSet> = seen.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for g in generators {
            let t = s.intersection(g);
            if !t.is_empty() && !seen.contains(&t) {
                seen.insert(t.clone());
                frontier.push(t);
            }
        }
    }
    let mut labels: Vec<VertexSet> = seen.into_iter().collect();
    labels.sort_by(|a, b| a.cmp_graded(b));
    labels
}

/// Intersection of the maximal simplices containing `face`.
fn closure(k: &SimplicialComplex, face: &VertexSet) -> VertexSet {
    let mut out: Option<VertexSet> = None;
    for s in k.maximal().iter().filter(|s| face.is_subset(s)) {
        match &mut out {
            None => out = Some(s.clone()),
            Some(acc) => acc.intersect_with(s),
        }
    }
    out.unwrap_or_default()
}

/// The weeding reached from the face poset by removing every non-closed
/// face as an upbeat, largest faces first.
pub fn weeding_via_stong(k: &SimplicialComplex) -> Result<Poset> {
    weeding_via_stong_trace(k, DEFAULT_FACE_CAP).map(|(p, _)| p)
}

/// Like [`weeding_via_stong`], also returning the removed faces in order.
pub fn weeding_via_stong_trace(k: &SimplicialComplex, face_cap: usize) -> Result<(Poset, Vec<VertexSet>)> {
    let faces = k.faces_with_cap(face_cap)?;
    let mut poset = Poset::from_labels_by_inclusion(faces.clone())?;
    let mut removed = Vec::new();
    for face in faces.iter().rev() {
        let cl = closure(k, face);
        if &cl == face {
            continue;
        }
        let labels = poset.labels().expect("face poset is labeled");
        let element = labels.iter().position(|l| l == face).expect("face still present");
        let witness = match poset.upper_covers(element) {
            [w] => *w,
            _ => {
                return Err(Error::domain(format!(
                    "non-closed face {} is not an upbeat",
                    crate::bitset::format_one_based(face)
                )))
            }
        };
        debug_assert_eq!(poset.label(witness), Some(&cl));
        poset = poset.remove_beat(&Beat {
            element,
            kind: BeatKind::Up,
            witness,
        })?;
        removed.push(face.clone());
    }
    Ok((poset, removed))
}

/// The nerve of the covering of `k` by its maximal simplices: vertex `i`
/// stands for `k.maximal()[i]`.
pub fn maximal_cover_nerve(k: &SimplicialComplex) -> SimplicialComplex {
    let (_, l) = context_of_complex(k)
        .complexes(false)
        .expect("membership context is consistent");
    l
}

/// Both sides of the duality between `k` and the nerve `L` of its maximal
/// simplices.
///
/// The weeding of `L` is generated by the maximal simplices of `L` only. A
/// vertex `i` of `k` whose simplex `σ_i = {w : i ∈ w}` is not maximal in `L`
/// and is not an intersection of maximal ones (an obstruction) is lost
/// there, and the weeding of `L` is then strictly smaller than the weeding of
/// `k`. Generating by every `σ_i` instead gives the intent poset, which is
/// always anti-isomorphic to the weeding of `k`.
#[derive(Clone, Debug)]
pub struct Duality {
    pub weeding: Poset,
    /// Weeding of the nerve of the maximal cover.
    pub nerve_weeding: Poset,
    /// Nonempty intersections of all vertex simplices `σ_i`.
    pub intent_poset: Poset,
    /// Vertices whose `σ_i` is not an intersection of maximal simplices of `L`.
    pub obstructions: Vec<usize>,
    /// Whether the nerve weeding is isomorphic to the opposite weeding.
    pub isomorphic: bool,
    pub intent_isomorphic: bool,
}

/// Compares the weeding of the maximal-cover nerve with the opposite of the
/// weeding of `k`.
pub fn duality(k: &SimplicialComplex, limits: &Limits) -> Result<Duality> {
    let weeding_k = weeding(k)?;
    let opposite = weeding_k.opposite();
    let l = maximal_cover_nerve(k);
    let weeding_l = weeding(&l)?;
    let ctx = context_of_complex(k);
    let intent_poset = Poset::from_labels_by_inclusion(intersection_closure(ctx.rows()))?;
    let obstructions = (0..k.m())
        .filter(|&i| {
            let sigma = &ctx.rows()[i];
            let mut cut = VertexSet::full(l.m());
            for w in l.maximal().iter().filter(|w| sigma.is_subset(w)) {
                cut.intersect_with(w);
            }
            &cut != sigma
        })
        .collect();
    let isomorphic = weeding_l.is_isomorphic_with_cap(&opposite, limits.iso_cap)?;
    let intent_isomorphic = intent_poset.is_isomorphic_with_cap(&opposite, limits.iso_cap)?;
    Ok(Duality {
        weeding: weeding_k,
        nerve_weeding: weeding_l,
        intent_poset,
        obstructions,
        isomorphic,
        intent_isomorphic,
    })
}

/// Whether the weeding of the maximal-cover nerve is anti-isomorphic to the
/// weeding of `k`. This fails exactly when [`Duality::obstructions`] is nonempty.
pub fn dual_check(k: &SimplicialComplex) -> Result<bool> {
    duality(k, &Limits::default()).map(|d| d.isomorphic)
}

/// The nonempty proper concepts of the membership context, as labels.
#[cfg(test)]
pub(crate) fn weeding_labels_via_concepts(k: &SimplicialComplex) -> Vec<VertexSet> {
    let lattice = super::concepts(&context_of_complex(k)).unwrap();
    let mut out: Vec<VertexSet> = lattice
        .concepts()
        .iter()
        .filter(|c| !c.extent.is_empty() && !c.intent.is_empty())
        .map(|c| c.extent.clone())
        .collect();
    out.sort_by(|a, b| a.cmp_graded(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti, betti_poset, Field};
    use crate::random::random_complex;
    use rand::{rngs::StdRng, SeedableRng};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    fn torus() -> SimplicialComplex {
        crate::cell::torus_grid(3).unwrap().scl().unwrap()
    }

    #[test]
    fn simplex_weeding_is_a_point() {
        let d = SimplicialComplex::simplex(3).unwrap();
        let w = weeding(&d).unwrap();
        assert_eq!(w.labels().unwrap(), &[set(&[1, 2, 3])]);
        let (s, removed) = weeding_via_stong_trace(&d, 100).unwrap();
        assert_eq!(s, w);
        assert_eq!(removed.len(), 6);
    }

    #[test]
    fn triangle_weeding_is_its_face_poset() {
        let t = SimplicialComplex::boundary_of_simplex(3).unwrap();
        let w = weeding(&t).unwrap();
        assert_eq!(w.len(), 6);
        let (s, removed) = weeding_via_stong_trace(&t, 100).unwrap();
        assert!(removed.is_empty());
        assert_eq!(s, w);
    }

    #[test]
    fn torus_weeding_counts() {
        let k = torus();
        let w = weeding(&k).unwrap();
        assert_eq!(w.len(), 36);
        assert_eq!(w.label_size_counts(), vec![0, 9, 18, 0, 9]);
        let (s, removed) = weeding_via_stong_trace(&k, 1000).unwrap();
        assert_eq!(removed.len(), 54);
        assert_eq!(s, w);
        assert_eq!(betti_poset(&w, Field::TWO, false).unwrap().betti, vec![1, 2, 1]);
    }

    #[test]
    fn agrees_with_concepts_and_stong() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..100 {
            let k = random_complex(&mut rng, 8, 6);
            let w = weeding(&k).unwrap();
            assert_eq!(w.labels().unwrap(), weeding_labels_via_concepts(&k).as_slice());
            assert_eq!(weeding_via_stong(&k).unwrap(), w);
            assert_eq!(
                betti_poset(&w, Field::TWO, false).unwrap(),
                betti(&k, Field::TWO, false).unwrap()
            );
        }
    }

    #[test]
    fn nerve_of_triangle_cover_is_a_triangle() {
        let t = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert_eq!(maximal_cover_nerve(&t), t);
        assert!(dual_check(&t).unwrap());
    }

    #[test]
    fn torus_duality() {
        let d = duality(&torus(), &Limits::default()).unwrap();
        assert!(d.isomorphic);
        let mut counts = d.nerve_weeding.label_size_counts();
        counts.retain(|&c| c > 0);
        assert_eq!(counts, vec![9, 18, 9]);
        assert_eq!(d.nerve_weeding.height_counts(), vec![9, 18, 9]);
    }

    #[test]
    fn dominated_vertex_breaks_the_nerve_duality() {
        // σ_1 = σ_2 = {123} sits inside σ_3 = {123, 34}, so L is one edge
        let k = SimplicialComplex::from_maximal(4, [set(&[1, 2, 3]), set(&[3, 4])]).unwrap();
        let d = duality(&k, &Limits::default()).unwrap();
        assert_eq!(d.weeding.len(), 3);
        assert_eq!(d.nerve_weeding.len(), 1);
        assert!(!d.isomorphic);
        assert_eq!(d.obstructions, vec![0, 1, 3]);
        assert!(d.intent_isomorphic);
    }

    #[test]
    fn duality_on_random_complexes() {
        let mut rng = StdRng::seed_from_u64(22);
        for _ in 0..100 {
            let d = duality(&random_complex(&mut rng, 8, 6), &Limits::default()).unwrap();
            assert!(d.intent_isomorphic);
            assert_eq!(d.isomorphic, d.obstructions.is_empty());
        }
    }
}
