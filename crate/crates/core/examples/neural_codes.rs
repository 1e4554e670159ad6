//! Codes sampled from covers of the plane. The two covers have the same nerve
//! but different concept lattices, so the lattice sees intersection patterns
//! that the nerve forgets.

use nervelat::homology::betti;
use nervelat::neural::{code_from_cover, lattice_from_code, lattice_vs_nerve_report, nerve_from_code};
use nervelat::{Field, SampledCover, SimplicialComplex};

pub fn run_example() -> nervelat::Result<()> {
    let venn = SampledCover::from_json(include_str!("../fixtures/venn.json"))?;
    let chain = SampledCover::from_json(include_str!("../fixtures/chain.json"))?;
    for (name, cover) in [("venn", &venn), ("chain", &chain)] {
        let code = code_from_cover(cover);
        println!("{name}: {} words", code.words().len());
        print!("{}", code.to_text());
        assert_eq!(nerve_from_code(&code)?, SimplicialComplex::simplex(3)?);
        println!("  lattice has {} concepts", lattice_from_code(&code)?.len());
        println!("{}", lattice_vs_nerve_report(&code, Field::TWO)?);
    }

    let torus = SampledCover::from_json(include_str!("../fixtures/torus_cover.json"))?;
    let nerve = nerve_from_code(&code_from_cover(&torus))?;
    println!("disks on the flat torus: nerve {}", betti(&nerve, Field::TWO, false)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("neural codes");
}
