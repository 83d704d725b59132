macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(quadrilateral_example, quadrilateral_example_runs, "quadrilateral.rs");
example!(earth_map_example, earth_map_example_runs, "earth_map.rs");
example!(flips_example, flips_example_runs, "flips.rs");
example!(counts_example, counts_example_runs, "counts.rs");
example!(vertex_types_example, vertex_types_example_runs, "vertex_types.rs");
example!(existence_example, existence_example_runs, "existence.rs");
example!(sporadic_example, sporadic_example_runs, "sporadic.rs");
example!(tiling_search_example, tiling_search_example_runs, "tiling_search.rs");
example!(exact_angles_example, exact_angles_example_runs, "exact_angles.rs");
example!(json_roundtrip_example, json_roundtrip_example_runs, "json_roundtrip.rs");
example!(moduli_example, moduli_example_runs, "moduli.rs");
example!(command_line_example, command_line_example_runs, "command_line.rs");
