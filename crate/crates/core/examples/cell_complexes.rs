//! Regular cell complexes are recovered from their simplicial closure by
//! weeding, provided every cell is cut out by maximal cells.

use nervelat::cell::{polytope_boundary, polytope_nerve, prism, torus_grid, Reconstruction};
use nervelat::homology::{betti, betti_poset};
use nervelat::{CellComplex, Field, FormalContext, VertexSet};

fn show(name: &str, c: &CellComplex) -> nervelat::Result<Reconstruction> {
    let r = c.reconstruct_check()?;
    let b = betti_poset(c.cells(), Field::TWO, false)?;
    println!("{name}: cells by dimension {:?}, {b}, reconstruction {r:?}", c.f_counts());
    assert_eq!(b, betti(&c.scl()?, Field::TWO, false)?);
    Ok(r)
}

pub fn run_example() -> nervelat::Result<()> {
    assert_eq!(show("square torus", &torus_grid(4)?)?, Reconstruction::Holds);
    assert_eq!(show("pentagonal prism", &prism(5)?)?, Reconstruction::Holds);

    // a lone square: its edges and vertices are not intersections of the
    // single maximal cell, so the check makes no claim
    let square: Vec<VertexSet> = vec![
        [0].into_iter().collect(),
        [1].into_iter().collect(),
        [2].into_iter().collect(),
        [3].into_iter().collect(),
        [0, 1].into_iter().collect(),
        [1, 2].into_iter().collect(),
        [2, 3].into_iter().collect(),
        [0, 3].into_iter().collect(),
        [0, 1, 2, 3].into_iter().collect(),
    ];
    let r = show("square", &CellComplex::from_labels(square)?)?;
    assert!(matches!(r, Reconstruction::HypothesisViolated { .. }));

    let cube = FormalContext::parse_cxt(include_str!("../fixtures/cube.cxt"))?;
    let boundary = polytope_boundary(&cube)?;
    show("cube from its vertex-facet incidences", &boundary)?;
    let dual = polytope_nerve(&cube)?;
    println!("nerve of the facets: f-vector {:?}", dual.f_vector()?.counts);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cell complexes");
}
