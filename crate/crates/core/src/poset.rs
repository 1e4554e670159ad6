//! Finite posets kept as Hasse diagrams, with order complexes, beat
//! detection and Stong reduction to the core.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::{format_one_based, BitSet, VertexSet};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::DEFAULT_ISO_CAP;

/// A finite poset on `0..n`, optionally labeled by vertex sets.
///
/// The strict order is cached as up-set and down-set bit sets; the Hasse
/// diagram is always the transitive reduction of that order.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Option<Vec<VertexSet>>,
    hasse: Vec<(usize, usize)>,
    up_covers: Vec<Vec<usize>>,
    down_covers: Vec<Vec<usize>>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.hasse == other.hasse && self.len() == other.len()
    }
}

impl Eq for Poset {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BeatKind {
    /// Exactly one upper cover.
    Up,
    /// Exactly one lower cover.
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Beat {
    pub element: usize,
    pub kind: BeatKind,
    /// The unique cover of `element` in the beat's direction.
    pub witness: usize,
}

impl Poset {
    /// Builds the poset generated by the pairs `a ≤ b`. Reflexive pairs are
    /// ignored; a cycle is a domain error.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::domain(format!("pair ({a}, {b}) is outside 0..{n}")));
            }
            if a != b {
                succ[a].push(b);
                indeg[b] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() < n {
            return Err(Error::domain("the relation contains a cycle"));
        }
        let mut above = vec![BitSet::new(); n];
        for &v in order.iter().rev() {
            let mut up = BitSet::new();
            for &w in &succ[v] {
                up.insert(w);
                up.union_with(&above[w]);
            }
            above[v] = up;
        }
        Ok(Self::from_strict_up(above, None))
    }

    /// The poset of distinct sets `labels` ordered by inclusion.
    pub fn from_labels_by_inclusion(labels: Vec<VertexSet>) -> Result<Self> {
        let n = labels.len();
        let mut above = vec![BitSet::new(); n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                if labels[a] == labels[b] {
                    return Err(Error::domain("labels must be distinct"));
                }
                if labels[a].is_subset(&labels[b]) {
                    above[a].insert(b);
                }
            }
        }
        Ok(Self::from_strict_up(above, Some(labels)))
    }

    /// Builds from strict up-sets that must already be transitive.
    fn from_strict_up(above: Vec<BitSet>, labels: Option<Vec<VertexSet>>) -> Self {
        let n = above.len();
        let mut below = vec![BitSet::new(); n];
        for (a, up) in above.iter().enumerate() {
            for b in up {
                below[b].insert(a);
            }
        }
        // a < b implies |below(a)| < |below(b)|, so this is a linear extension
        let mut rank: Vec<usize> = (0..n).collect();
        rank.sort_by_key(|&v| below[v].len());
        let mut position = vec![0; n];
        for (i, &v) in rank.iter().enumerate() {
            position[v] = i;
        }
        let mut up_covers = vec![Vec::new(); n];
        let mut down_covers = vec![Vec::new(); n];
        let mut hasse = Vec::new();
        for a in 0..n {
            let mut candidates: Vec<usize> = above[a].iter().collect();
            candidates.sort_by_key(|&b| position[b]);
            let mut dominated = BitSet::new();
            for b in candidates {
                if !dominated.contains(b) {
                    up_covers[a].push(b);
                    dominated.union_with(&above[b]);
                }
            }
            up_covers[a].sort_unstable();
            for &b in &up_covers[a] {
                down_covers[b].push(a);
                hasse.push((a, b));
            }
        }
        for d in &mut down_covers {
            d.sort_unstable();
        }
        hasse.sort_unstable();
        Self {
            labels,
            hasse,
            up_covers,
            down_covers,
            above,
            below,
        }
    }

    pub fn with_labels(self, labels: Vec<VertexSet>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::domain("one label per element is required"));
        }
        Ok(Self {
            labels: Some(labels),
            ..self
        })
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn labels(&self) -> Option<&[VertexSet]> {
        self.labels.as_deref()
    }

    pub fn label(&self, s: usize) -> Option<&VertexSet> {
        self.labels.as_ref().and_then(|l| l.get(s))
    }

    /// Cover relations `(a, b)` with `a ⋖ b`, sorted.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn upper_covers(&self, s: usize) -> &[usize] {
        &self.up_covers[s]
    }

    pub fn lower_covers(&self, s: usize) -> &[usize] {
        &self.down_covers[s]
    }

    /// Strict order `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    fn check(&self, s: usize) -> Result<()> {
        if s >= self.len() {
            return Err(Error::domain(format!("element {s} is not in the poset")));
        }
        Ok(())
    }

    /// `{t : t ≤ s}`, or `t < s` when `strict`.
    pub fn down_set(&self, s: usize, strict: bool) -> Result<BitSet> {
        self.check(s)?;
        let mut set = self.below[s].clone();
        if !strict {
            set.insert(s);
        }
        Ok(set)
    }

    /// `{t : t ≥ s}`, or `t > s` when `strict`.
    pub fn up_set(&self, s: usize, strict: bool) -> Result<BitSet> {
        self.check(s)?;
        let mut set = self.above[s].clone();
        if !strict {
            set.insert(s);
        }
        Ok(set)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.below[s].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.above[s].is_empty()).collect()
    }

    /// Length of the longest chain ending at each element (minimal elements
    /// have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&v| self.below[v].len());
        let mut height = vec![0; self.len()];
        for v in order {
            height[v] = self.down_covers[v]
                .iter()
                .map(|&d| height[d] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// The same set with the order reversed.
    pub fn opposite(&self) -> Self {
        Self::from_strict_up(self.below.clone(), self.labels.clone())
    }

    /// The subposet on `keep` (in ascending order) with the restricted order.
    pub fn induced(&self, keep: &BitSet) -> Self {
        let index: Vec<usize> = keep.iter().filter(|&s| s < self.len()).collect();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &s) in index.iter().enumerate() {
            new_id[s] = i;
        }
        let above = index
            .iter()
            .map(|&s| {
                self.above[s]
                    .iter()
                    .filter(|&t| new_id[t] != usize::MAX)
                    .map(|t| new_id[t])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| index.iter().map(|&s| l[s].clone()).collect());
        Self::from_strict_up(above, labels)
    }

    /// Removes one element and keeps the restricted order.
    pub fn remove_element(&self, s: usize) -> Result<Self> {
        self.check(s)?;
        let above = (0..self.len())
            .filter(|&t| t != s)
            .map(|t| self.above[t].remove_shift(s))
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.remove(s);
            l
        });
        Ok(Self::from_strict_up(above, labels))
    }

    /// Simplicial complex whose simplices are the chains of the poset.
    pub fn order_complex(&self) -> Result<SimplicialComplex> {
        self.order_complex_with_cap(crate::DEFAULT_FACE_CAP)
    }

    /// As [`order_complex`](Self::order_complex), failing once more than
    /// `cap` maximal chains have been produced.
    pub fn order_complex_with_cap(&self, cap: usize) -> Result<SimplicialComplex> {
        if self.is_empty() {
            return Err(Error::domain("the order complex of the empty poset is undefined"));
        }
        let mut chains = Vec::new();
        let mut path = Vec::new();
        for s in self.minimal_elements() {
            self.extend_chains(s, &mut path, &mut chains, cap)?;
        }
        Ok(SimplicialComplex::from_antichain_unchecked(self.len(), chains))
    }

    fn extend_chains(
        &self,
        s: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
        cap: usize,
    ) -> Result<()> {
        path.push(s);
        if self.up_covers[s].is_empty() {
            if out.len() >= cap {
                return Err(Error::Resource { what: "maximal chain count", limit: cap });
            }
            out.push(path.iter().copied().collect());
        } else {
            for &t in &self.up_covers[s] {
                self.extend_chains(t, path, out, cap)?;
            }
        }
        path.pop();
        Ok(())
    }

    /// All beats in ascending element order, an upbeat before a downbeat.
    pub fn find_beats(&self) -> Vec<Beat> {
        let mut beats = Vec::new();
        for s in 0..self.len() {
            if let [t] = self.up_covers[s][..] {
                beats.push(Beat { element: s, kind: BeatKind::Up, witness: t });
            }
            if let [t] = self.down_covers[s][..] {
                beats.push(Beat { element: s, kind: BeatKind::Down, witness: t });
            }
        }
        beats
    }

    pub fn is_core(&self) -> bool {
        (0..self.len()).all(|s| self.up_covers[s].len() != 1 && self.down_covers[s].len() != 1)
    }

    /// Removes a beat. The Hasse diagram of the remaining elements is the
    /// transitive reduction of the restricted order, which drops the
    /// redundant arrows created by contracting the beat's cover edge.
    pub fn remove_beat(&self, beat: &Beat) -> Result<Self> {
        self.check(beat.element)?;
        let covers = match beat.kind {
            BeatKind::Up => &self.up_covers[beat.element],
            BeatKind::Down => &self.down_covers[beat.element],
        };
        if covers[..] != [beat.witness] {
            return Err(Error::domain(format!(
                "element {} is no longer a {:?}beat with witness {}",
                beat.element, beat.kind, beat.witness
            )));
        }
        self.remove_element(beat.element)
    }

    /// Repeatedly removes the first beat reported by [`find_beats`](Self::find_beats).
    pub fn core(&self) -> Self {
        self.core_by(|_| 0)
    }

    /// Stong reduction with a caller-chosen beat at each step; `choose`
    /// returns an index into the current, nonempty beat list.
    pub fn core_by<F>(&self, mut choose: F) -> Self
    where
        F: FnMut(&[Beat]) -> usize,
    {
        let mut current = self.clone();
        loop {
            let beats = current.find_beats();
            if beats.is_empty() {
                return current;
            }
            let pick = choose(&beats) % beats.len();
            current = current
                .remove_beat(&beats[pick])
                .expect("freshly computed beat is valid");
        }
    }

    /// True iff the two posets are order-isomorphic (labels are ignored).
    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        self.is_isomorphic_with_cap(other, DEFAULT_ISO_CAP)
    }

    pub fn is_isomorphic_with_cap(&self, other: &Self, cap: usize) -> Result<bool> {
        if self.len() > cap || other.len() > cap {
            return Err(Error::Resource { what: "poset size for isomorphism", limit: cap });
        }
        Ok(iso::find(self, other).is_some())
    }

    /// An order isomorphism `self → other` as an image vector, if one exists.
    pub fn isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        iso::find(self, other)
    }

    /// Graphviz rendering with edges drawn upward.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n  rankdir=BT;\n  node [shape=box];\n");
        for s in 0..self.len() {
            let text = match self.label(s) {
                Some(l) if l.is_empty() => "∅".to_string(),
                Some(l) => format_one_based(l),
                None => s.to_string(),
            };
            let _ = writeln!(out, "  n{s} [label=\"{text}\"];");
        }
        for &(a, b) in &self.hasse {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.len(),
            labels: self.labels.as_ref().map(|l| {
                l.iter()
                    .map(|s| s.iter().map(|v| v + 1).collect())
                    .collect()
            }),
            hasse: self.hasse.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = json.hasse.iter().map(|e| (e[0], e[1])).collect();
        let poset = Self::from_relation(json.n, &pairs)?;
        match &json.labels {
            None => Ok(poset),
            Some(labels) => {
                let mut sets = Vec::with_capacity(labels.len());
                for l in labels {
                    if l.contains(&0) {
                        return Err(Error::domain("labels are 1-based"));
                    }
                    sets.push(l.iter().map(|v| v - 1).collect());
                }
                poset.with_labels(sets)
            }
        }
    }

    /// Rank profile: number of elements at each height.
    pub fn height_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for h in self.heights() {
            if counts.len() <= h {
                counts.resize(h + 1, 0);
            }
            counts[h] += 1;
        }
        counts
    }

    /// Counts of labels by cardinality, indexed by size.
    pub fn label_size_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for l in self.labels().unwrap_or(&[]) {
            if counts.len() <= l.len() {
                counts.resize(l.len() + 1, 0);
            }
            counts[l.len()] += 1;
        }
        counts
    }
}

/// JSON shape `{n, labels, hasse}`; label members are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub labels: Option<Vec<Vec<usize>>>,
    pub hasse: Vec<[usize; 2]>,
}

/// Experimental homological reduction: an element whose strict up-set or
/// strict down-set has an acyclic order complex is removed. This generalizes
/// beat removal and preserves Betti numbers over the chosen field, but not
/// necessarily the homotopy type. Unstable API.
pub mod experimental {
    use super::*;
    use crate::homology::{betti_poset, Field};

    fn acyclic(poset: &Poset, set: BitSet, field: Field) -> Result<bool> {
        if set.is_empty() {
            // the empty order complex has reduced homology in degree -1
            return Ok(false);
        }
        let sub = poset.induced(&set);
        Ok(betti_poset(&sub, field, true)?.is_zero())
    }

    pub fn homological_core(poset: &Poset, field: Field) -> Result<Poset> {
        let mut current = poset.clone();
        'outer: loop {
            for s in 0..current.len() {
                let up = current.up_set(s, true)?;
                let down = current.down_set(s, true)?;
                if acyclic(&current, up, field)? || acyclic(&current, down, field)? {
                    current = current.remove_element(s)?;
                    continue 'outer;
                }
            }
            return Ok(current);
        }
    }
}

mod iso {
    use super::*;

    /// Joint colour refinement of both posets, seeded by local degree data.
    fn refine(p: &Poset, q: &Poset) -> (Vec<usize>, Vec<usize>) {
        let seed = |x: &Poset| -> Vec<(usize, usize, usize, usize)> {
            (0..x.len())
                .map(|s| {
                    (
                        x.below[s].len(),
                        x.above[s].len(),
                        x.down_covers[s].len(),
                        x.up_covers[s].len(),
                    )
                })
                .collect()
        };
        let mut dict: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
        let (sp, sq) = (seed(p), seed(q));
        for key in sp.iter().chain(sq.iter()) {
            let next = dict.len();
            dict.entry(*key).or_insert(next);
        }
        let mut cp: Vec<usize> = sp.iter().map(|k| dict[k]).collect();
        let mut cq: Vec<usize> = sq.iter().map(|k| dict[k]).collect();
        let mut classes = dict.len();
        loop {
            let sig = |x: &Poset, c: &[usize]| -> Vec<(usize, Vec<usize>, Vec<usize>)> {
                (0..x.len())
                    .map(|s| {
                        let mut up: Vec<usize> = x.up_covers[s].iter().map(|&t| c[t]).collect();
                        let mut down: Vec<usize> = x.down_covers[s].iter().map(|&t| c[t]).collect();
                        up.sort_unstable();
                        down.sort_unstable();
                        (c[s], up, down)
                    })
                    .collect()
            };
            let (gp, gq) = (sig(p, &cp), sig(q, &cq));
            let mut dict: BTreeMap<&(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
            for key in gp.iter().chain(gq.iter()) {
                let next = dict.len();
                dict.entry(key).or_insert(next);
            }
            let np: Vec<usize> = gp.iter().map(|k| dict[k]).collect();
            let nq: Vec<usize> = gq.iter().map(|k| dict[k]).collect();
            let stable = dict.len() == classes;
            classes = dict.len();
            cp = np;
            cq = nq;
            if stable {
                return (cp, cq);
            }
        }
    }

    pub(super) fn find(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
        if p.len() != q.len() || p.hasse.len() != q.hasse.len() {
            return None;
        }
        let (cp, cq) = refine(p, q);
        let histogram = |c: &[usize]| {
            let mut h: HashMap<usize, usize> = HashMap::new();
            for &x in c {
                *h.entry(x).or_default() += 1;
            }
            h
        };
        if histogram(&cp) != histogram(&cq) {
            return None;
        }
        // assign rare colours first, then follow the order structure
        let hist = histogram(&cp);
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&s| (hist[&cp[s]], p.below[s].len(), s));
        let mut image = vec![usize::MAX; p.len()];
        let mut used = vec![false; q.len()];
        if search(p, q, &cp, &cq, &order, 0, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        p: &Poset,
        q: &Poset,
        cp: &[usize],
        cq: &[usize],
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&s) = order.get(depth) else {
            return true;
        };
        for t in 0..q.len() {
            if used[t] || cq[t] != cp[s] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&a| {
                let fa = image[a];
                p.lt(a, s) == q.lt(fa, t) && p.lt(s, a) == q.lt(t, fa)
            });
            if !consistent {
                continue;
            }
            image[s] = t;
            used[t] = true;
            if search(p, q, cp, cq, order, depth + 1, image, used) {
                return true;
            }
            used[t] = false;
            image[s] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti_poset, Field};
    use proptest::prelude::*;

    fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relation(n, &pairs).unwrap()
    }

    fn diamond() -> Poset {
        Poset::from_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn antichain(n: usize) -> Poset {
        Poset::from_relation(n, &[]).unwrap()
    }

    fn boundary_face_poset() -> Poset {
        let k = SimplicialComplex::boundary_of_simplex(3).unwrap();
        Poset::from_labels_by_inclusion(k.faces().unwrap()).unwrap()
    }

    #[test]
    fn redundant_pair_dropped() {
        let p = Poset::from_relation(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.hasse(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_rejected() {
        assert!(matches!(Poset::from_relation(2, &[(0, 1), (1, 0)]), Err(Error::Domain(_))));
    }

    #[test]
    fn diamond_unchanged() {
        assert_eq!(diamond().hasse(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn opposite_basics() {
        let c = chain(3).opposite();
        assert_eq!(c.hasse(), &[(1, 0), (2, 1)]);
        assert_eq!(chain(3).opposite().opposite(), chain(3));
        assert!(diamond().is_isomorphic(&diamond().opposite()).unwrap());
    }

    #[test]
    fn up_and_down_sets() {
        let c = chain(3);
        assert_eq!(c.down_set(2, true).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(diamond().up_set(0, true).unwrap().to_vec(), vec![1, 2, 3]);
        assert!(c.down_set(1, false).unwrap().contains(1));
        assert!(c.up_set(7, false).is_err());
    }

    #[test]
    fn order_complexes() {
        let c = chain(3).order_complex().unwrap();
        assert_eq!(c, SimplicialComplex::simplex(3).unwrap());
        let a = antichain(4).order_complex().unwrap();
        assert_eq!(a.maximal().len(), 4);
        assert_eq!(a.dim(), Some(0));
        let hex = boundary_face_poset().order_complex().unwrap();
        assert_eq!(hex.f_vector().unwrap().counts, vec![6, 6]);
        assert!(antichain(0).order_complex().is_err());
    }

    #[test]
    fn beats_of_small_posets() {
        let beats = chain(3).find_beats();
        let expected = vec![
            Beat { element: 0, kind: BeatKind::Up, witness: 1 },
            Beat { element: 1, kind: BeatKind::Up, witness: 2 },
            Beat { element: 1, kind: BeatKind::Down, witness: 0 },
            Beat { element: 2, kind: BeatKind::Down, witness: 1 },
        ];
        assert_eq!(beats, expected);
        // the middle elements are beats both ways; bottom and top have two covers
        let d = diamond().find_beats();
        let elements: Vec<usize> = d.iter().map(|b| b.element).collect();
        assert_eq!(elements, vec![1, 1, 2, 2]);
        assert!(boundary_face_poset().find_beats().is_empty());
        assert!(boundary_face_poset().is_core());
    }

    #[test]
    fn removing_beats() {
        let beat = chain(3).find_beats()[0];
        assert_eq!(chain(3).remove_beat(&beat).unwrap(), chain(2));
        let stale = Beat { element: 1, kind: BeatKind::Up, witness: 0 };
        assert!(chain(3).remove_beat(&stale).is_err());
    }

    #[test]
    fn contraction_drops_redundant_arrow() {
        // 0 < 1 < 2, 0 < 3 < 2 and 4 < 1. Contracting the upbeat 1 onto 2
        // creates arrows 0 -> 2 and 4 -> 2; the first is redundant through 3.
        let p = Poset::from_relation(5, &[(0, 1), (1, 2), (0, 3), (3, 2), (4, 1)]).unwrap();
        let beat = Beat { element: 1, kind: BeatKind::Up, witness: 2 };
        assert_eq!(p.upper_covers(1), &[2]);
        let reduced = p.remove_beat(&beat).unwrap();
        // survivors 0, 2, 3, 4 are renumbered 0, 1, 2, 3
        assert_eq!(reduced.hasse(), &[(0, 2), (2, 1), (3, 1)]);
        assert!(reduced.lt(0, 1));
    }

    #[test]
    fn cores() {
        let top = Poset::from_relation(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(top.core().len(), 1);
        assert_eq!(boundary_face_poset().core(), boundary_face_poset());
        let bool_minus_empty = Poset::from_relation(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(bool_minus_empty.core().len(), 1);
    }

    #[test]
    fn isomorphism_basics() {
        assert!(!chain(3).is_isomorphic(&antichain(3)).unwrap());
        assert!(chain(4).is_isomorphic(&chain(4).opposite()).unwrap());
        let big = antichain(65);
        assert!(matches!(big.is_isomorphic(&big), Err(Error::Resource { .. })));
        let v = Poset::from_relation(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(!v.is_isomorphic(&v.opposite()).unwrap());
        let f = v.isomorphism(&v).unwrap();
        assert_eq!(f[0], 0);
    }

    #[test]
    fn dot_and_json() {
        let p = boundary_face_poset();
        let dot = p.to_dot("faces");
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("label=\"{1,2}\""));
        let json = p.to_json();
        assert_eq!(Poset::from_json(&json).unwrap(), p);
    }

    #[test]
    fn homological_core_shrinks_cone_like_posets() {
        let top = Poset::from_relation(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let reduced = experimental::homological_core(&top, Field::TWO).unwrap();
        assert_eq!(reduced.len(), 1);
        let hex = experimental::homological_core(&boundary_face_poset(), Field::TWO).unwrap();
        assert_eq!(hex.len(), 6);
    }

    fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
                let mut pairs = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[a * n + b] {
                            pairs.push((a, b));
                        }
                    }
                }
                Poset::from_relation(n, &pairs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(p in arb_poset(12)) {
            let again = Poset::from_relation(p.len(), p.hasse()).unwrap();
            prop_assert_eq!(again, p.clone());
            let closure: Vec<(usize, usize)> = (0..p.len())
                .flat_map(|a| p.up_set(a, true).unwrap().iter().map(move |b| (a, b)).collect::<Vec<_>>())
                .collect();
            prop_assert_eq!(Poset::from_relation(p.len(), &closure).unwrap(), p);
        }

        #[test]
        fn beat_removal_keeps_betti(p in arb_poset(12)) {
            for beat in p.find_beats().into_iter().take(3) {
                let q = p.remove_beat(&beat).unwrap();
                if q.is_empty() { continue; }
                prop_assert_eq!(
                    betti_poset(&p, Field::TWO, false).unwrap(),
                    betti_poset(&q, Field::TWO, false).unwrap()
                );
            }
        }

        #[test]
        fn core_is_beatless_and_stable(p in arb_poset(12)) {
            let c = p.core();
            prop_assert!(c.find_beats().is_empty());
            prop_assert_eq!(c.core(), c);
        }

        #[test]
        fn cores_agree_up_to_isomorphism(p in arb_poset(10), seed in any::<u64>()) {
            let mut state = seed;
            let other = p.core_by(|beats| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % beats.len()
            });
            prop_assert!(p.core().is_isomorphic(&other).unwrap());
        }

        #[test]
        fn bounded_posets_are_acyclic(p in arb_poset(10)) {
            let n = p.len();
            let mut pairs: Vec<(usize, usize)> = p.hasse().to_vec();
            pairs.extend((0..n).map(|s| (s, n)));
            let with_top = Poset::from_relation(n + 1, &pairs).unwrap();
            prop_assert!(betti_poset(&with_top, Field::TWO, true).unwrap().is_zero());
        }

        #[test]
        fn opposite_is_involution(p in arb_poset(12)) {
            prop_assert_eq!(p.opposite().opposite(), p);
        }
    }
}
