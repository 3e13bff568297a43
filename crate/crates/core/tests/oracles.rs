use berger_spectra::berger::BergerParam;
use berger_spectra::jacobi::ModelSubmanifold;
use berger_spectra::oracle::{
    full_suite, harmonic_dim_bruteforce, lxi_squared_spectrum, minimality_first_variation_check, torus_fourier_index,
    SuiteConfig,
};
use berger_spectra::spectra::bidegree_dimension;
use berger_spectra::Error;

#[test]
fn full_suite_passes_and_is_reproducible() {
    let cfg = SuiteConfig::default();
    let a = full_suite(&cfg);
    for r in &a {
        assert!(r.pass, "{r:?}");
    }
    let b = full_suite(&cfg);
    assert_eq!(a, b);
}

#[test]
fn bruteforce_counts() {
    assert_eq!(harmonic_dim_bruteforce(1, 1, 1).unwrap(), 3);
    assert_eq!(harmonic_dim_bruteforce(3, 4, 4).unwrap(), bidegree_dimension(3, 4, 4));
    assert!(matches!(harmonic_dim_bruteforce(0, 9, 0), Err(Error::CapExceeded { .. })));
}

#[test]
fn lxi_spectrum_exhausts_harmonics() {
    let tau = BergerParam::from_ratio(2, 7).unwrap();
    let total: u64 = lxi_squared_spectrum(2, &tau, 4).unwrap().iter().map(|(_, m)| m).sum();
    assert_eq!(total, 105);
}

#[test]
fn torus_report_records_radius() {
    let r = torus_fourier_index(&BergerParam::from_ratio(1, 5).unwrap(), 4.0).unwrap();
    assert!(r.certificate.contains("dual-lattice box"));
    assert!(r.truncation_k >= 1);
}

#[test]
fn round_clifford_torus_is_minimal() {
    let tau = BergerParam::from_ratio(1, 1).unwrap();
    let r = minimality_first_variation_check(&ModelSubmanifold::CliffordHypersurface { m1: 0, m2: 0 }, &tau, 5, 1).unwrap();
    assert!(r.pass);
}
