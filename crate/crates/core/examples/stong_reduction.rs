//! Removing beats from the face poset one at a time reaches the same poset as
//! the weeding, and the core of a poset does not depend on the order of
//! removals.

use nervelat::fca::{weeding, weeding_via_stong_trace};
use nervelat::random::random_poset;
use nervelat::{Poset, SimplicialComplex, VertexSet, DEFAULT_FACE_CAP};
use rand::{rngs::StdRng, Rng, SeedableRng};

pub fn run_example() -> nervelat::Result<()> {
    let pendant: Vec<VertexSet> = vec![[0, 1, 2].into_iter().collect(), [2, 3].into_iter().collect()];
    let k = SimplicialComplex::from_maximal(4, pendant)?;
    let (w, removed) = weeding_via_stong_trace(&k, DEFAULT_FACE_CAP)?;
    println!("{} faces, {} upbeats removed, {} left", k.f_vector()?.total(), removed.len(), w.len());
    assert!(w.is_isomorphic(&weeding(&k)?)?);

    let mut rng = StdRng::seed_from_u64(8);
    let p: Poset = random_poset(&mut rng, 14, 0.2);
    let first = p.core();
    let shuffled = p.core_by(|beats| rng.gen_range(0..beats.len()));
    println!("poset of {} elements has a core of {}", p.len(), first.len());
    assert!(first.is_isomorphic(&shuffled)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("stong reduction");
}
