//! Weeding the 3x3 square torus: 36 simplices survive out of 90 faces and
//! the homology is unchanged.

use nervelat::cell::torus_grid;
use nervelat::fca::weeding;
use nervelat::homology::{betti, betti_poset};
use nervelat::Field;

pub fn run_example() -> nervelat::Result<()> {
    let k = torus_grid(3)?.scl()?;
    let f = k.f_vector()?;
    println!("torus: m={} f-vector {:?}", k.m(), f.counts);
    let w = weeding(&k)?;
    println!("weeding: {} elements, by label size {:?}", w.len(), w.label_size_counts());
    for field in [Field::TWO, Field::new(3)?] {
        let bk = betti(&k, field, false)?;
        let bw = betti_poset(&w, field, false)?;
        println!("over F{}: complex {bk}, weeding {bw}", field.characteristic());
        assert_eq!(bk, bw);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("torus weeding");
}
