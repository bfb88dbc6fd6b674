macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(hilbert_symbol, "hilbert_symbol.rs", hilbert_symbol_example_runs);
example!(cover_invariants, "cover_invariants.rs", cover_invariants_example_runs);
example!(torus_cocycle, "torus_cocycle.rs", torus_cocycle_example_runs);
example!(
    cyclotomic_arithmetic,
    "cyclotomic_arithmetic.rs",
    cyclotomic_arithmetic_example_runs
);
example!(tadic_expansion, "tadic_expansion.rs", tadic_expansion_example_runs);
example!(
    metaplectic_classification,
    "metaplectic_classification.rs",
    metaplectic_classification_example_runs
);
example!(germ_values, "germ_values.rs", germ_values_example_runs);
example!(
    whittaker_dimensions,
    "whittaker_dimensions.rs",
    whittaker_dimensions_example_runs
);
example!(identity_checks, "identity_checks.rs", identity_checks_example_runs);
example!(cli_json, "cli_json.rs", cli_json_example_runs);
