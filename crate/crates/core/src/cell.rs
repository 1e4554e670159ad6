//! Combinatorial cell complexes given by the vertex sets of their closed
//! cells, with simplicial closure and reconstruction from maximal cells.

use crate::bitset::{format_one_based, BitSet, VertexSet};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::fca::{weeding, FormalContext};
use crate::poset::Poset;

/// A combinatorial cell complex as the poset of its closed cells, each
/// labeled by its vertex set. Cells are ordered by label inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    m: usize,
    cells: Poset,
    dims: Vec<usize>,
}

/// Outcome of [`CellComplex::reconstruct_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reconstruction {
    /// The cell poset is isomorphic to the weeding of the simplicial closure.
    Holds,
    Fails,
    /// Some cell is not an intersection of maximal cells, so nothing is claimed.
    HypothesisViolated { cell: VertexSet },
}

impl CellComplex {
    /// Builds a complex from distinct cell labels over vertices `0..m`.
    pub fn from_labels(labels: Vec<VertexSet>) -> Result<Self> {
        let mut labels = labels;
        labels.sort_by(|a, b| a.cmp_graded(b));
        Self::new(Poset::from_labels_by_inclusion(labels)?)
    }

    /// Validates a labeled poset as a cell complex.
    pub fn new(cells: Poset) -> Result<Self> {
        let labels = cells
            .labels()
            .ok_or_else(|| Error::domain("cells must be labeled by vertex sets"))?
            .to_vec();
        if labels.iter().any(BitSet::is_empty) {
            return Err(Error::domain("a cell needs at least one vertex"));
        }
        let by_inclusion = Poset::from_labels_by_inclusion(labels.clone())?;
        if by_inclusion.hasse() != cells.hasse() {
            return Err(Error::domain("the cell order must be inclusion of vertex sets"));
        }
        let mut vertices = VertexSet::new();
        for l in &labels {
            vertices.union_with(l);
        }
        let m = vertices.bound();
        for v in 0..m {
            if !labels.contains(&VertexSet::singleton(v)) {
                return Err(Error::domain(format!("vertex {} is not a 0-cell", v + 1)));
            }
        }
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                let common = a.intersection(b);
                if !common.is_empty() && !labels.contains(&common) {
                    return Err(Error::domain(format!(
                        "cells {} and {} meet in {}, which is not a cell",
                        format_one_based(a),
                        format_one_based(b),
                        format_one_based(&common)
                    )));
                }
            }
        }
        let dims = cells.heights();
        // with labels determining cells, the minimal cells are the vertices
        if let Some(s) = (0..cells.len()).find(|&s| dims[s] == 0 && labels[s].len() != 1) {
            return Err(Error::domain(format!("0-cell {} is not a single vertex", format_one_based(&labels[s]))));
        }
        Ok(Self { m, cells, dims })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cells(&self) -> &Poset {
        &self.cells
    }

    pub fn labels(&self) -> &[VertexSet] {
        self.cells.labels().expect("validated as labeled")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of cells in each dimension.
    pub fn f_counts(&self) -> Vec<usize> {
        self.cells.height_counts()
    }

    fn maximal_labels(&self) -> Vec<VertexSet> {
        self.cells
            .maximal_elements()
            .into_iter()
            .map(|s| self.labels()[s].clone())
            .collect()
    }

    /// Simplicial closure: every cell replaced by the full simplex on its vertices.
    pub fn scl(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_maximal(self.m, self.maximal_labels())
    }

    /// Checks that the cell poset is recovered as the weeding of the
    /// simplicial closure, provided every cell is cut out by maximal cells.
    pub fn reconstruct_check(&self) -> Result<Reconstruction> {
        let maximal = self.maximal_labels();
        for cell in self.labels() {
            let mut cut = BitSet::full(self.m);
            for w in maximal.iter().filter(|w| cell.is_subset(w)) {
                cut.intersect_with(w);
            }
            if &cut != cell {
                return Ok(Reconstruction::HypothesisViolated { cell: cell.clone() });
            }
        }
        let w = weeding(&self.scl()?)?;
        let mut mine = self.labels().to_vec();
        mine.sort_by(|a, b| a.cmp_graded(b));
        let same_labels = w.labels() == Some(mine.as_slice());
        Ok(if same_labels && w.is_isomorphic(&self.cells)? {
            Reconstruction::Holds
        } else {
            Reconstruction::Fails
        })
    }
}

/// The `k × k` periodic grid on the torus: `k²` vertices, `2k²` edges and
/// `k²` squares. Vertex `(i, j)` has index `i·k + j`.
pub fn torus_grid(k: usize) -> Result<CellComplex> {
    if k < 3 {
        return Err(Error::domain("a torus grid needs k >= 3"));
    }
    cycle_product(k, k)
}

/// The product of an `a`-cycle and a `b`-cycle.
pub fn cycle_product(a: usize, b: usize) -> Result<CellComplex> {
    if a < 3 || b < 3 {
        return Err(Error::domain("cycles in a product need length >= 3"));
    }
    let v = |i: usize, j: usize| (i % a) * b + (j % b);
    let mut labels = Vec::with_capacity(4 * a * b);
    for i in 0..a {
        for j in 0..b {
            labels.push(VertexSet::singleton(v(i, j)));
            labels.push([v(i, j), v(i, j + 1)].into_iter().collect());
            labels.push([v(i, j), v(i + 1, j)].into_iter().collect());
            labels.push([v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)].into_iter().collect());
        }
    }
    CellComplex::from_labels(labels)
}

/// A single `n`-gon with its boundary, `n >= 3`.
pub fn polygon(n: usize) -> Result<CellComplex> {
    if n < 3 {
        return Err(Error::domain("a polygon needs at least 3 vertices"));
    }
    let mut labels = cycle_labels(n, 0);
    labels.push(VertexSet::full(n));
    CellComplex::from_labels(labels)
}

fn cycle_labels(n: usize, offset: usize) -> Vec<VertexSet> {
    let mut labels = Vec::with_capacity(2 * n);
    for i in 0..n {
        labels.push(VertexSet::singleton(offset + i));
        labels.push([offset + i, offset + (i + 1) % n].into_iter().collect());
    }
    labels
}

/// The boundary of the prism over an `n`-gon: two `n`-gons and `n` squares.
pub fn prism(n: usize) -> Result<CellComplex> {
    if n < 3 {
        return Err(Error::domain("a prism needs n >= 3"));
    }
    let mut labels = cycle_labels(n, 0);
    labels.extend(cycle_labels(n, n));
    labels.push(VertexSet::full(n));
    labels.push(VertexSet::full(2 * n).difference(&VertexSet::full(n)));
    for i in 0..n {
        let j = (i + 1) % n;
        labels.push([i, n + i].into_iter().collect());
        labels.push([i, j, n + i, n + j].into_iter().collect());
    }
    CellComplex::from_labels(labels)
}

/// The boundary complex of a polytope from its vertex-facet incidence
/// (objects are vertices, attributes facets): the proper faces are the
/// nonempty intersections of facets.
pub fn polytope_boundary(ctx: &FormalContext) -> Result<CellComplex> {
    let (k, _) = ctx.complexes(true)?;
    let w = weeding(&k)?;
    CellComplex::from_labels(w.labels().expect("weeding is labeled").to_vec())
}

/// The nerve complex of a polytope: facets are vertices, and a family of
/// facets spans a simplex iff the facets share a vertex.
pub fn polytope_nerve(ctx: &FormalContext) -> Result<SimplicialComplex> {
    Ok(ctx.complexes(true)?.1)
}
