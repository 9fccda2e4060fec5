macro_rules! example_test {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $module;

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(singlet_correlation, "../examples/singlet_correlation.rs");
example_test!(photon_polarization, "../examples/photon_polarization.rs");
example_test!(
    two_photon_interference,
    "../examples/two_photon_interference.rs"
);
example_test!(ghz_parity, "../examples/ghz_parity.rs");
example_test!(chsh_contrast, "../examples/chsh_contrast.rs");
example_test!(
    monte_carlo_coincidences,
    "../examples/monte_carlo_coincidences.rs"
);
example_test!(oracle_cross_check, "../examples/oracle_cross_check.rs");
