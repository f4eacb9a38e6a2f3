macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(index_codec, "index_codec.rs", index_codec_example_runs);
example!(pair_cycles, "pair_cycles.rs", pair_cycles_example_runs);
example!(graph_census, "graph_census.rs", graph_census_example_runs);
example!(self_complementary, "self_complementary.rs", self_complementary_example_runs);
example!(oracle_check, "oracle_check.rs", oracle_check_example_runs);
example!(report_formats, "report_formats.rs", report_formats_example_runs);
