//! Concept lattice of a small context read from Burmeister text, with its
//! Hasse diagram as DOT and the implication check on both sides.

use nervelat::fca::{concepts, Side};
use nervelat::{BitSet, FormalContext};

const CXT: &str = "B
animals

4
3

frog
dog
fish
cat
swims
legs
fur
XX.
.XX
X..
.XX
";

pub fn run_example() -> nervelat::Result<()> {
    let ctx = FormalContext::parse_cxt(CXT)?;
    let lattice = concepts(&ctx)?;
    println!("{} concepts", lattice.len());
    for c in lattice.concepts() {
        let names = |s: &BitSet, all: &[String]| s.iter().map(|i| all[i].clone()).collect::<Vec<_>>().join(",");
        println!(
            "  {{{}}} x {{{}}}",
            names(&c.extent, ctx.object_names()),
            names(&c.intent, ctx.attribute_names())
        );
    }
    print!("{}", lattice.to_dot("animals"));
    // fur implies legs; legs does not imply fur
    let fur = BitSet::singleton(2);
    let legs = BitSet::singleton(1);
    assert!(ctx.implication_holds(Side::Attributes, &fur, 1));
    assert!(!ctx.implication_holds(Side::Attributes, &legs, 2));
    // dog and cat are indistinguishable
    assert!(ctx.implication_holds(Side::Objects, &BitSet::singleton(1), 3));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("concept lattice");
}
