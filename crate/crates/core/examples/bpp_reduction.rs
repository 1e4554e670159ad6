//! Alternate transposition and deletion of majorized rows. The torus is
//! already reduced; the cone over a triangle boundary collapses to a point.

use nervelat::cell::torus_grid;
use nervelat::fca::bpp_reduce;
use nervelat::homology::betti;
use nervelat::{Field, SimplicialComplex};

fn show(name: &str, k: &SimplicialComplex) -> nervelat::Result<()> {
    let r = bpp_reduce(k)?;
    println!("{name}: initial {}x{}", r.initial.nrows(), r.initial.ncols);
    for (i, s) in r.steps.iter().enumerate() {
        println!(
            "  step {}: {}x{}, deleted {}, weeding kept: {}",
            i + 1,
            s.rows,
            s.cols,
            s.deleted,
            s.preserves_weeding
        );
    }
    assert_eq!(betti(&r.reduced, Field::TWO, false)?, betti(k, Field::TWO, false)?);
    Ok(())
}

pub fn run_example() -> nervelat::Result<()> {
    show("torus", &torus_grid(3)?.scl()?)?;
    show("cone", &SimplicialComplex::boundary_of_simplex(3)?.cone())?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bpp reduction");
}
