//! Simplicial complexes stored by their maximal simplices.
//!
//! A complex on the vertex universe `{0, .., m-1}` is the downward closure of
//! an antichain of vertex sets. Face lists are never stored; they are
//! enumerated on demand under a cap.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::DEFAULT_FACE_CAP;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    maximal: Vec<VertexSet>,
}

/// `counts[j]` is the number of `j`-dimensional faces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FVector {
    pub counts: Vec<usize>,
}

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl SimplicialComplex {
    /// Builds the complex generated by `sets`. Dominated and empty sets are
    /// discarded. Every vertex of the universe must be covered.
    pub fn from_maximal<I>(m: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let k = Self::build(m, sets)?;
        if k.maximal.is_empty() {
            return Err(Error::domain("a complex needs at least one nonempty simplex"));
        }
        let covered = k.vertices();
        if covered.len() < m {
            let ghost = (0..m).find(|&v| !covered.contains(v)).unwrap_or(0);
            return Err(Error::domain(format!(
                "vertex {} is not contained in any simplex",
                ghost + 1
            )));
        }
        Ok(k)
    }

    /// Like [`from_maximal`](Self::from_maximal) but tolerates unused vertices
    /// and an empty generating family (the complex `{∅}`).
    pub fn from_maximal_allow_ghosts<I>(m: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        Self::build(m, sets)
    }

    fn build<I>(m: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut kept: Vec<VertexSet> = Vec::new();
        for s in sets {
            if s.bound() > m {
                return Err(Error::domain(format!(
                    "simplex {} uses a vertex outside 1..={m}",
                    crate::bitset::format_one_based(&s)
                )));
            }
            if !s.is_empty() {
                kept.push(s);
            }
        }
        Ok(Self {
            m,
            maximal: antichain(kept),
        })
    }

    /// Trusted constructor for families already known to be antichains.
    pub(crate) fn from_antichain_unchecked(m: usize, mut maximal: Vec<VertexSet>) -> Self {
        maximal.sort();
        maximal.dedup();
        Self { m, maximal }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_maximal(n, [VertexSet::full(n)])
    }

    /// The boundary of the full simplex on `n >= 2` vertices.
    pub fn boundary_of_simplex(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("the boundary of a simplex needs at least 2 vertices"));
        }
        let full = VertexSet::full(n);
        Self::from_maximal(n, (0..n).map(|v| full.difference(&VertexSet::singleton(v))))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn maximal(&self) -> &[VertexSet] {
        &self.maximal
    }

    /// True for the complex `{∅}` without vertices.
    pub fn is_void(&self) -> bool {
        self.maximal.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.maximal.iter().map(|s| s.len() - 1).max()
    }

    /// Vertices that belong to at least one simplex.
    pub fn vertices(&self) -> VertexSet {
        let mut all = VertexSet::new();
        for s in &self.maximal {
            all.union_with(s);
        }
        all
    }

    pub fn has_ghosts(&self) -> bool {
        self.vertices().len() < self.m
    }

    pub fn has_simplex(&self, face: &VertexSet) -> bool {
        face.is_empty() || self.maximal.iter().any(|s| face.is_subset(s))
    }

    pub fn faces(&self) -> Result<Vec<VertexSet>> {
        self.faces_with_cap(DEFAULT_FACE_CAP)
    }

    /// All nonempty faces sorted by cardinality, then lexicographically.
    pub fn faces_with_cap(&self, cap: usize) -> Result<Vec<VertexSet>> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for s in &self.maximal {
            let verts = s.to_vec();
            if verts.len() >= usize::BITS as usize - 1 {
                return Err(Error::Resource { what: "face count", limit: cap });
            }
            for mask in 1usize..(1 << verts.len()) {
                let face: VertexSet = verts
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask & (1 << b) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                seen.insert(face);
                if seen.len() > cap {
                    return Err(Error::Resource { what: "face count", limit: cap });
                }
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.cmp_graded(b));
        Ok(faces)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        self.f_vector_with_cap(DEFAULT_FACE_CAP)
    }

    pub fn f_vector_with_cap(&self, cap: usize) -> Result<FVector> {
        let mut counts = Vec::new();
        for face in self.faces_with_cap(cap)? {
            let d = face.len() - 1;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        Ok(FVector { counts })
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self.f_vector()?.euler_characteristic())
    }

    /// `lk I = {J : I ∩ J = ∅, I ∪ J ∈ K}`, on the same vertex universe.
    pub fn link(&self, face: &VertexSet) -> Result<Self> {
        self.require_face(face)?;
        let sets = self
            .maximal
            .iter()
            .filter(|s| face.is_subset(s))
            .map(|s| s.difference(face));
        Self::build(self.m, sets)
    }

    /// `st I = {J : I ∪ J ∈ K}`, generated by the maximal simplices containing `I`.
    pub fn star(&self, face: &VertexSet) -> Result<Self> {
        self.require_face(face)?;
        let sets = self.maximal.iter().filter(|s| face.is_subset(s)).cloned();
        Self::build(self.m, sets)
    }

    fn require_face(&self, face: &VertexSet) -> Result<()> {
        if face.is_empty() {
            return Err(Error::domain("expected a nonempty simplex"));
        }
        if !self.has_simplex(face) {
            return Err(Error::domain(format!(
                "{} is not a simplex of the complex",
                crate::bitset::format_one_based(face)
            )));
        }
        Ok(())
    }

    /// Join with `other`, whose vertices are relabeled by the offset `self.m()`.
    pub fn join(&self, other: &Self) -> Self {
        let m = self.m + other.m;
        let shifted: Vec<VertexSet> = other.maximal.iter().map(|s| s.shifted(self.m)).collect();
        let maximal = match (self.maximal.is_empty(), shifted.is_empty()) {
            (true, _) => shifted,
            (_, true) => self.maximal.clone(),
            _ => self
                .maximal
                .iter()
                .flat_map(|a| shifted.iter().map(move |b| a.union(b)))
                .collect(),
        };
        Self::from_antichain_unchecked(m, maximal)
    }

    /// Join with a single new apex vertex `m`.
    pub fn cone(&self) -> Self {
        let point = Self {
            m: 1,
            maximal: vec![VertexSet::singleton(0)],
        };
        self.join(&point)
    }

    /// `K ∖ i`, the faces not containing `i`. Vertex `i` stays in the universe
    /// as an unused vertex.
    pub fn delete_vertex(&self, i: usize) -> Result<Self> {
        if i >= self.m {
            return Err(Error::domain(format!("vertex {} is outside 1..={}", i + 1, self.m)));
        }
        let gone = VertexSet::singleton(i);
        Self::build(self.m, self.maximal.iter().map(|s| s.difference(&gone)))
    }

    /// Renames vertex `v` to `perm[v]`; `perm` must be a permutation of `0..m`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = VertexSet::new();
        for &p in perm {
            seen.insert(p);
        }
        if perm.len() != self.m || seen != VertexSet::full(self.m) {
            return Err(Error::domain("relabeling must be a permutation of the vertex set"));
        }
        let sets = self.maximal.iter().map(|s| s.iter().map(|v| perm[v]).collect());
        Self::build(self.m, sets)
    }

    /// Parses the `.cplx` text format, rejecting unused vertices.
    pub fn parse_text(text: &str) -> Result<Self> {
        Self::parse_text_with(text, false)
    }

    pub fn parse_text_with(text: &str, allow_ghosts: bool) -> Result<Self> {
        let mut m: Option<usize> = None;
        let mut sets = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(m) = m else {
                let value = line
                    .strip_prefix("m=")
                    .ok_or_else(|| Error::parse(line_no, "expected header `m=<int>`"))?;
                m = Some(
                    value
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(line_no, "vertex count is not an integer"))?,
                );
                continue;
            };
            let mut set = VertexSet::new();
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("`{tok}` is not a vertex")))?;
                if v == 0 || v > m {
                    return Err(Error::parse(line_no, format!("vertex {v} is outside 1..={m}")));
                }
                set.insert(v - 1);
            }
            sets.push(set);
        }
        let m = m.ok_or_else(|| Error::parse(0, "missing header `m=<int>`"))?;
        if allow_ghosts {
            Self::from_maximal_allow_ghosts(m, sets)
        } else {
            Self::from_maximal(m, sets)
        }
    }

    /// Canonical `.cplx` text: header then one maximal simplex per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("m={}\n", self.m);
        for s in &self.maximal {
            let verts: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&verts.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for SimplicialComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

/// Keeps the inclusion-maximal members of `sets`, sorted and deduplicated.
pub(crate) fn antichain(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}
