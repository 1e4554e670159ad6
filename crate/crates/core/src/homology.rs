//! Simplicial homology with coefficients in a prime field `F_p`.
//!
//! Betti numbers are computed from ranks of boundary matrices. Matrices are
//! stored column-sparse and reduced by the standard pivot-on-lowest-row
//! column elimination, which works for every prime including 2.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::{fca, DEFAULT_FACE_CAP};

/// A prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field(u32);

impl Field {
    pub const TWO: Field = Field(2);
    pub const THREE: Field = Field(3);

    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !prime {
            return Err(Error::domain(format!("field characteristic {p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::domain("field characteristic must be below 2^31"));
        }
        Ok(Field(p))
    }

    pub fn characteristic(self) -> u32 {
        self.0
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.0 - b) % self.0
    }

    fn neg(self, a: u32) -> u32 {
        (self.0 - a) % self.0
    }

    fn inv(self, a: u32) -> u32 {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (a, self.0 - 2, 1u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::TWO
    }
}

/// Betti numbers over a field. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    #[serde(rename = "p")]
    pub field: u32,
    pub reduced: bool,
    /// `betti[j]` is the rank of `H_j`.
    pub betti: Vec<usize>,
    /// Reduced homology in degree -1; 1 exactly for the complex `{∅}`.
    #[serde(skip_serializing_if = "is_zero_usize")]
    pub degree_minus_one: usize,
}

fn is_zero_usize(x: &usize) -> bool {
    *x == 0
}

impl BettiVector {
    pub fn is_zero(&self) -> bool {
        self.degree_minus_one == 0 && self.betti.is_empty()
    }

    /// Alternating sum of the unreduced Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        let sum: i64 = self
            .betti
            .iter()
            .enumerate()
            .map(|(j, &b)| if j % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if self.reduced {
            sum + 1 - self.degree_minus_one as i64
        } else {
            sum
        }
    }

    /// True when this reduced vector equals that of the sphere `S^(j-1)`,
    /// with `S^-1` the empty space.
    pub fn is_sphere(&self, j: usize) -> bool {
        if j == 0 {
            return self.degree_minus_one == 1 && self.betti.is_empty();
        }
        self.degree_minus_one == 0 && self.betti.len() == j && self.betti[j - 1] == 1 && {
            self.betti[..j - 1].iter().all(|&b| b == 0)
        }
    }

    fn from_ranks(field: Field, reduced: bool, dims: &[usize], ranks: &[usize], rank0: usize) -> Self {
        // ranks[d] = rank of ∂_d : C_d -> C_{d-1} for d >= 1; ranks[0] = 0
        let mut betti: Vec<usize> = (0..dims.len())
            .map(|d| {
                let out = if d == 0 { rank0 } else { ranks[d] };
                let inc = ranks.get(d + 1).copied().unwrap_or(0);
                dims[d] - out - inc
            })
            .collect();
        while betti.last() == Some(&0) {
            betti.pop();
        }
        Self {
            field: field.0,
            reduced,
            betti,
            degree_minus_one: if reduced { 1 - rank0 } else { 0 },
        }
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.betti.iter().map(|b| b.to_string()).collect();
        write!(f, "betti: {}", if parts.is_empty() { "0".to_string() } else { parts.join(" ") })
    }
}

/// Boundary map `C_dim -> C_(dim-1)` as sparse columns of `(row, coefficient)`.
/// With `dim == 0` the target is the one-dimensional augmentation module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    pub columns: Vec<Vec<(usize, u32)>>,
    field: Field,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// True if `lower ∘ self` vanishes, where `lower` maps out of `self`'s target.
    pub fn composes_to_zero(&self, lower: &BoundaryMatrix) -> bool {
        let f = self.field;
        self.columns.iter().all(|col| {
            let mut acc: HashMap<usize, u32> = HashMap::new();
            for &(mid, a) in col {
                for &(row, b) in &lower.columns[mid] {
                    let e = acc.entry(row).or_insert(0);
                    *e = (*e + f.mul(a, b)) % f.0;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }

    pub fn rank(&self) -> usize {
        rank(self.columns.clone(), self.field)
    }
}

fn faces_by_dim(k: &SimplicialComplex, cap: usize) -> Result<Vec<Vec<VertexSet>>> {
    let mut by_dim: Vec<Vec<VertexSet>> = Vec::new();
    for face in k.faces_with_cap(cap)? {
        let d = face.len() - 1;
        if by_dim.len() <= d {
            by_dim.resize(d + 1, Vec::new());
        }
        by_dim[d].push(face);
    }
    Ok(by_dim)
}

/// All boundary matrices of `k`, starting at dimension 0 when `reduced`
/// (augmented complex) and at dimension 1 otherwise.
pub fn boundary_matrices(k: &SimplicialComplex, field: Field, reduced: bool) -> Result<Vec<BoundaryMatrix>> {
    let by_dim = faces_by_dim(k, DEFAULT_FACE_CAP)?;
    let mut out = Vec::new();
    if reduced {
        out.push(augmentation(by_dim.first().map_or(0, Vec::len), field));
    }
    for d in 1..by_dim.len() {
        out.push(boundary(&by_dim[d - 1], &by_dim[d], d, field));
    }
    Ok(out)
}

fn augmentation(vertices: usize, field: Field) -> BoundaryMatrix {
    BoundaryMatrix {
        dim: 0,
        rows: 1,
        columns: vec![vec![(0, 1)]; vertices],
        field,
    }
}

fn boundary(lower: &[VertexSet], upper: &[VertexSet], dim: usize, field: Field) -> BoundaryMatrix {
    let index: HashMap<&VertexSet, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let columns = upper
        .iter()
        .map(|face| {
            let mut col: Vec<(usize, u32)> = face
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let mut sub = face.clone();
                    sub.remove(v);
                    let coeff = if i % 2 == 0 { 1 } else { field.neg(1) };
                    (index[&sub], coeff)
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    BoundaryMatrix {
        dim,
        rows: lower.len(),
        columns,
        field,
    }
}

/// Rank of a column-sparse matrix over `field`; columns must be sorted by row.
fn rank(columns: Vec<Vec<(usize, u32)>>, field: Field) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u32)>> = HashMap::new();
    let mut rank = 0;
    for mut col in columns {
        while let Some(&(low, value)) = col.last() {
            match pivots.get(&low) {
                Some(pivot) => {
                    let pivot_low = pivot.last().expect("pivot columns are nonempty").1;
                    let factor = field.mul(value, field.inv(pivot_low));
                    col = axpy(&col, pivot, factor, field);
                }
                None => {
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `a - factor * b` on sorted sparse vectors.
fn axpy(a: &[(usize, u32)], b: &[(usize, u32)], factor: u32, field: Field) -> Vec<(usize, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.neg(field.mul(factor, b[j].1))));
            j += 1;
        } else {
            let v = field.sub(a[i].1, field.mul(factor, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn betti(k: &SimplicialComplex, field: Field, reduced: bool) -> Result<BettiVector> {
    betti_with_cap(k, field, reduced, DEFAULT_FACE_CAP)
}

pub fn betti_with_cap(k: &SimplicialComplex, field: Field, reduced: bool, cap: usize) -> Result<BettiVector> {
    let by_dim = faces_by_dim(k, cap)?;
    let dims: Vec<usize> = by_dim.iter().map(Vec::len).collect();
    let mut ranks = vec![0; dims.len()];
    for d in 1..by_dim.len() {
        ranks[d] = boundary(&by_dim[d - 1], &by_dim[d], d, field).rank();
    }
    let rank0 = usize::from(reduced && dims.first().is_some_and(|&n| n > 0));
    Ok(BettiVector::from_ranks(field, reduced, &dims, &ranks, rank0))
}

/// Homology of the geometric realization of a poset (its order complex).
/// The empty poset realizes the empty space.
pub fn betti_poset(poset: &Poset, field: Field, reduced: bool) -> Result<BettiVector> {
    betti_poset_with_cap(poset, field, reduced, DEFAULT_FACE_CAP)
}

pub fn betti_poset_with_cap(poset: &Poset, field: Field, reduced: bool, cap: usize) -> Result<BettiVector> {
    if poset.is_empty() {
        return Ok(BettiVector {
            field: field.0,
            reduced,
            betti: Vec::new(),
            degree_minus_one: usize::from(reduced),
        });
    }
    betti_with_cap(&poset.order_complex_with_cap(cap)?, field, reduced, cap)
}

/// Homotopy-type shadow of a link, read off its reduced homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkClass {
    /// All reduced Betti numbers vanish.
    Acyclic,
    /// Reduced homology of `S^(j-1)`; `SphereLike(0)` is the empty link.
    SphereLike(usize),
    Other(BettiVector),
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkClass::Acyclic => f.write_str("acyclic"),
            LinkClass::SphereLike(j) => write!(f, "sphere_like({j})"),
            LinkClass::Other(b) => write!(f, "other({})", b.betti.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
        }
    }
}

pub fn classify(reduced: &BettiVector) -> LinkClass {
    if reduced.is_zero() {
        return LinkClass::Acyclic;
    }
    if reduced.is_sphere(0) {
        return LinkClass::SphereLike(0);
    }
    let j = reduced.betti.len();
    if reduced.is_sphere(j) {
        LinkClass::SphereLike(j)
    } else {
        LinkClass::Other(reduced.clone())
    }
}

pub fn link_class(k: &SimplicialComplex, face: &VertexSet, field: Field) -> Result<LinkClass> {
    let link = k.link(face)?;
    Ok(classify(&betti(&link, field, true)?))
}

/// Faces selected by the link test, compared against the weeding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkWeeding {
    /// Faces whose link is not acyclic, in graded order.
    pub faces: Vec<VertexSet>,
    pub weeding: Vec<VertexSet>,
    /// Weeding faces with an acyclic link.
    pub missing: Vec<VertexSet>,
    /// Non-weeding faces with a non-acyclic link; always empty in theory.
    pub extra: Vec<VertexSet>,
}

impl LinkWeeding {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn weeding_via_links(k: &SimplicialComplex, field: Field) -> Result<LinkWeeding> {
    weeding_via_links_with_cap(k, field, DEFAULT_FACE_CAP)
}

pub fn weeding_via_links_with_cap(k: &SimplicialComplex, field: Field, cap: usize) -> Result<LinkWeeding> {
    let weeding: Vec<VertexSet> = fca::weeding(k)?.labels().unwrap_or(&[]).to_vec();
    let mut faces = Vec::new();
    for face in k.faces_with_cap(cap)? {
        let link = k.link(&face)?;
        if classify(&betti_with_cap(&link, field, true, cap)?) != LinkClass::Acyclic {
            faces.push(face);
        }
    }
    let missing = weeding.iter().filter(|w| !faces.contains(w)).cloned().collect();
    let extra = faces.iter().filter(|f| !weeding.contains(f)).cloned().collect();
    Ok(LinkWeeding {
        faces,
        weeding,
        missing,
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_complex;
    use proptest::prelude::*;
    use rand::{rngs::StdRng, SeedableRng};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn field_validation() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert_eq!(Field::new(7).unwrap().characteristic(), 7);
        let f = Field::new(7).unwrap();
        assert_eq!(f.mul(3, f.inv(3)), 1);
    }

    #[test]
    fn simplex_and_circle() {
        let d = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(betti(&d, Field::TWO, false).unwrap().betti, vec![1]);
        assert!(betti(&d, Field::TWO, true).unwrap().is_zero());
        let c = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert_eq!(betti(&c, Field::TWO, false).unwrap().betti, vec![1, 1]);
        assert_eq!(betti(&c, Field::THREE, true).unwrap().betti, vec![0, 1]);
    }

    #[test]
    fn void_complex_is_minus_one_sphere() {
        let void = SimplicialComplex::from_maximal_allow_ghosts(2, []).unwrap();
        let b = betti(&void, Field::TWO, true).unwrap();
        assert_eq!(b.degree_minus_one, 1);
        assert!(b.is_sphere(0));
    }

    #[test]
    fn projective_plane_separates_fields() {
        // 6-vertex triangulation of RP^2
        let tris = [
            [1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 5, 6],
            [2, 3, 5], [2, 3, 6], [2, 4, 5], [3, 4, 6], [4, 5, 6],
        ];
        let k = SimplicialComplex::from_maximal(6, tris.iter().map(|t| set(t))).unwrap();
        assert_eq!(betti(&k, Field::TWO, false).unwrap().betti, vec![1, 1, 1]);
        assert_eq!(betti(&k, Field::THREE, false).unwrap().betti, vec![1]);
    }

    #[test]
    fn link_classes() {
        let c = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert_eq!(link_class(&c, &set(&[1]), Field::TWO).unwrap(), LinkClass::SphereLike(1));
        assert_eq!(link_class(&c, &set(&[1, 2]), Field::TWO).unwrap(), LinkClass::SphereLike(0));
        let d = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(link_class(&d, &set(&[1]), Field::TWO).unwrap(), LinkClass::Acyclic);
        assert!(link_class(&c, &set(&[1, 2, 3]), Field::TWO).is_err());
    }

    #[test]
    fn link_test_on_triangle() {
        let c = SimplicialComplex::boundary_of_simplex(3).unwrap();
        let lw = weeding_via_links(&c, Field::TWO).unwrap();
        assert_eq!(lw.faces.len(), 6);
        assert!(lw.matches());
    }

    #[test]
    fn link_test_flags_weeding_face_with_acyclic_link() {
        // fan of three triangles: vertex 1 is an intersection of maximal
        // simplices, but its link is a path
        let k = SimplicialComplex::from_maximal(
            5,
            [set(&[1, 2, 3]), set(&[1, 3, 4]), set(&[1, 4, 5])],
        )
        .unwrap();
        let lw = weeding_via_links(&k, Field::TWO).unwrap();
        assert_eq!(lw.missing, vec![set(&[1])]);
        assert!(lw.extra.is_empty());
        assert!(!lw.matches());
    }

    #[test]
    fn boundary_squares_vanish_on_random_complexes() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..40 {
            let k = random_complex(&mut rng, 7, 5);
            for field in [Field::TWO, Field::THREE, Field::new(5).unwrap()] {
                let ms = boundary_matrices(&k, field, true).unwrap();
                for pair in ms.windows(2) {
                    assert!(pair[1].composes_to_zero(&pair[0]));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn euler_poincare(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let k = random_complex(&mut rng, 8, 6);
            let chi = k.euler_characteristic().unwrap();
            for field in [Field::TWO, Field::THREE] {
                prop_assert_eq!(betti(&k, field, false).unwrap().euler_characteristic(), chi);
                prop_assert_eq!(betti(&k, field, true).unwrap().euler_characteristic(), chi);
            }
        }

        #[test]
        fn barycentric_subdivision_keeps_betti(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let k = random_complex(&mut rng, 7, 5);
            let faces = Poset::from_labels_by_inclusion(k.faces().unwrap()).unwrap();
            prop_assert_eq!(
                betti(&k, Field::TWO, false).unwrap(),
                betti_poset(&faces, Field::TWO, false).unwrap()
            );
        }
    }
}
