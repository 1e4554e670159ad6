macro_rules! example {
    ($module:ident, $file:literal) => {
        #[path = $file]
        mod $module;

        #[test]
        fn $module() {
            $module::run_example().expect($file);
        }
    };
}

example!(torus_weeding, "../examples/torus_weeding.rs");
example!(stong_reduction, "../examples/stong_reduction.rs");
example!(concept_lattice, "../examples/concept_lattice.rs");
example!(nerve_duality, "../examples/nerve_duality.rs");
example!(bpp_reduction, "../examples/bpp_reduction.rs");
example!(link_criterion, "../examples/link_criterion.rs");
example!(cell_complexes, "../examples/cell_complexes.rs");
example!(neural_codes, "../examples/neural_codes.rs");
