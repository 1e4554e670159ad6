//! The nerve of the cover of a complex by its maximal simplices, compared
//! with the opposite of the weeding. A vertex whose star is not cut out by
//! maximal simplices of the nerve makes the comparison fail.

use nervelat::cell::torus_grid;
use nervelat::fca::{duality, maximal_cover_nerve};
use nervelat::{Limits, SimplicialComplex, VertexSet};

fn show(name: &str, k: &SimplicialComplex) -> nervelat::Result<bool> {
    let d = duality(k, &Limits::default())?;
    let l = maximal_cover_nerve(k);
    println!(
        "{name}: weeding {} elements, nerve on {} vertices, nerve weeding {} elements",
        d.weeding.len(),
        l.m(),
        d.nerve_weeding.len()
    );
    println!(
        "  anti-isomorphic: {}, obstructions {:?}, intent poset anti-isomorphic: {}",
        d.isomorphic,
        d.obstructions.iter().map(|v| v + 1).collect::<Vec<_>>(),
        d.intent_isomorphic
    );
    Ok(d.isomorphic)
}

pub fn run_example() -> nervelat::Result<()> {
    assert!(show("torus", &torus_grid(3)?.scl()?)?);
    let sets: Vec<VertexSet> = vec![[0, 1, 2].into_iter().collect(), [2, 3].into_iter().collect()];
    let pendant = SimplicialComplex::from_maximal(4, sets)?;
    assert!(!show("triangle with a pendant edge", &pendant)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("nerve duality");
}
