use crate::bitset::BitSet;
use crate::complex::SimplicialComplex;
use crate::error::Result;

/// A boolean matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    pub ncols: usize,
    pub rows: Vec<BitSet>,
}

impl BitMatrix {
    /// Rows are the maximal simplices of `k`, columns its vertices.
    pub fn of_complex(k: &SimplicialComplex) -> Self {
        Self {
            ncols: k.m(),
            rows: k.maximal().to_vec(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![BitSet::new(); self.ncols];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row {
                rows[j].insert(i);
            }
        }
        Self {
            ncols: self.nrows(),
            rows,
        }
    }

    /// Drops every row contained in another row; of equal rows the first is
    /// kept. Returns the removed rows.
    pub fn delete_majorized(&mut self) -> Vec<BitSet> {
        let rows = std::mem::take(&mut self.rows);
        let mut removed = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let dominated = rows.iter().enumerate().any(|(j, other)| {
                j != i && row.is_subset(other) && (row != other || j < i)
            });
            if dominated {
                removed.push(row.clone());
            } else {
                self.rows.push(row.clone());
            }
        }
        removed
    }

    /// Whether `row` is the intersection of the rows containing it.
    fn is_cut_out(&self, row: &BitSet) -> bool {
        let mut cut = BitSet::full(self.ncols);
        for r in self.rows.iter().filter(|r| row.is_subset(r)) {
            cut.intersect_with(r);
        }
        &cut == row
    }

    /// Rows as a sorted multiset, for comparison up to row order.
    fn canonical(&self) -> (usize, Vec<BitSet>) {
        let mut rows = self.rows.clone();
        rows.sort();
        (self.ncols, rows)
    }

    /// The complex generated by the rows on `ncols` vertices.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_maximal(self.ncols, self.rows.iter().cloned())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Shape after transposing and deleting.
    pub rows: usize,
    pub cols: usize,
    pub deleted: usize,
    /// False when a deleted row is not an intersection of kept rows; only
    /// then does the weeding of this step differ from the opposite of the
    /// previous one.
    pub preserves_weeding: bool,
    pub matrix: BitMatrix,
}

/// Transcript of [`bpp_reduce`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub initial: BitMatrix,
    pub steps: Vec<ReductionStep>,
    pub reduced: SimplicialComplex,
}

impl Reduction {
    pub fn deletions(&self) -> usize {
        self.steps.iter().map(|s| s.deleted).sum()
    }

    pub fn preserves_weeding(&self) -> bool {
        self.steps.iter().all(|s| s.preserves_weeding)
    }

    /// Whether the final matrix is the transpose of the input orientation,
    /// so that its weeding is the opposite of the original one.
    pub fn transposed(&self) -> bool {
        self.steps.len() % 2 == 1
    }
}

/// Alternately transposes the incidence matrix of `k` and deletes majorized
/// rows, stopping once a matrix equals the one two steps earlier.
pub fn bpp_reduce(k: &SimplicialComplex) -> Result<Reduction> {
    let initial = BitMatrix::of_complex(k);
    let mut history = vec![initial.canonical()];
    let mut current = initial.clone();
    let mut steps = Vec::new();
    loop {
        let mut next = current.transpose();
        let removed = next.delete_majorized();
        let preserves_weeding = removed.iter().all(|r| next.is_cut_out(r));
        history.push(next.canonical());
        steps.push(ReductionStep {
            rows: next.nrows(),
            cols: next.ncols,
            deleted: removed.len(),
            preserves_weeding,
            matrix: next.clone(),
        });
        current = next;
        let t = history.len() - 1;
        if t >= 2 && history[t] == history[t - 2] {
            break;
        }
    }
    let reduced = current.to_complex()?;
    Ok(Reduction {
        initial,
        steps,
        reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fca::weeding;
    use crate::homology::{betti, Field};
    use crate::random::random_complex;
    use rand::{rngs::StdRng, SeedableRng};

    fn set(v: &[usize]) -> BitSet {
        v.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn torus_is_stable() {
        let k = crate::cell::torus_grid(3).unwrap().scl().unwrap();
        let r = bpp_reduce(&k).unwrap();
        assert_eq!(r.steps.len(), 2);
        assert_eq!(r.deletions(), 0);
        assert_eq!(r.reduced, k);
    }

    #[test]
    fn cone_collapses_to_a_point() {
        let k = SimplicialComplex::boundary_of_simplex(3).unwrap().cone();
        let r = bpp_reduce(&k).unwrap();
        let shapes: Vec<(usize, usize)> = r.steps.iter().map(|s| (s.rows, s.cols)).collect();
        assert_eq!(shapes, vec![(1, 3), (1, 1), (1, 1), (1, 1)]);
        assert_eq!(r.reduced.m(), 1);
        // the 7-element weeding of the cone does not survive the first step
        assert!(!r.steps[0].preserves_weeding);
        assert_eq!(weeding(&k).unwrap().len(), 7);
    }

    #[test]
    fn pendant_edge_shrinks() {
        let k = SimplicialComplex::from_maximal(4, [set(&[1, 2, 3]), set(&[3, 4])]).unwrap();
        let r = bpp_reduce(&k).unwrap();
        assert!(r.deletions() > 0);
        assert!(r.reduced.m() * r.reduced.maximal().len() < 4 * 2);
        assert!(betti(&r.reduced, Field::TWO, true).unwrap().is_zero());
    }

    #[test]
    fn equal_rows_keep_one() {
        let mut m = BitMatrix {
            ncols: 2,
            rows: vec![set(&[1]), set(&[1]), set(&[1, 2]), set(&[2])],
        };
        assert_eq!(m.delete_majorized().len(), 3);
        assert_eq!(m.rows, vec![set(&[1, 2])]);
    }

    #[test]
    fn steps_keep_homology_and_flag_weeding_changes() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..100 {
            let k = random_complex(&mut rng, 8, 6);
            let expected = betti(&k, Field::TWO, false).unwrap();
            let mut previous = weeding(&k).unwrap();
            let r = bpp_reduce(&k).unwrap();
            for step in &r.steps {
                let kt = step.matrix.to_complex().unwrap();
                assert_eq!(betti(&kt, Field::TWO, false).unwrap(), expected);
                let wt = weeding(&kt).unwrap();
                assert_eq!(wt.is_isomorphic(&previous.opposite()).unwrap(), step.preserves_weeding);
                previous = wt;
            }
        }
    }
}
