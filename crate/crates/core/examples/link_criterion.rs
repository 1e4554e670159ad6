//! A face survives weeding exactly when its link is not acyclic.

use nervelat::homology::{link_class, weeding_via_links};
use nervelat::{Field, SimplicialComplex};

pub fn run_example() -> nervelat::Result<()> {
    let k = SimplicialComplex::parse_text("m=5\n1 2 3\n3 4\n4 5\n3 5\n")?;
    for face in k.faces()? {
        println!("{:>10}  {}", nervelat::bitset::format_one_based(&face), link_class(&k, &face, Field::TWO)?);
    }
    let lw = weeding_via_links(&k, Field::TWO)?;
    println!("{} faces with non-acyclic link, matches weeding: {}", lw.faces.len(), lw.matches());
    assert!(lw.matches());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("link criterion");
}
