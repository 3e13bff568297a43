use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use berger_spectra::berger::{
    curvature_tensor, killing_flow, killing_flow_differential, metric_eval, AmbientPoint, BergerParam, TangentVector,
};
use berger_spectra::exact::{fmt_q, parse_q, q, qi, Surd, Q};
use berger_spectra::jacobi::{enumerate_index, enumerate_with_kmax, ModelSubmanifold, TruncationPolicy};
use berger_spectra::spectra::{berger_eigenvalue, berger_multiplicity, round_eigenvalue, round_multiplicity};
use berger_spectra::stability::{
    classify_model, clifford_moduli_vector, dimension_instability, library_models, moduli_sweep, proof_polynomial_p,
    s1_bundle_stability, Verdict,
};

fn tau_sq() -> impl Strategy<Value = BergerParam> {
    (1i64..=48).prop_flat_map(|den| (1i64..=den).prop_map(move |num| BergerParam::from_ratio(num, den).unwrap()))
}

fn sphere_point(n: usize) -> impl Strategy<Value = AmbientPoint> {
    prop::collection::vec(-1.0f64..1.0, 2 * n + 2)
        .prop_filter("away from the origin", |v| v.iter().map(|x| x * x).sum::<f64>() > 0.05)
        .prop_map(|v| AmbientPoint::normalized(v).unwrap())
}

fn raw(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, 2 * n + 2)
}

fn tangent(z: &AmbientPoint, v: &[f64]) -> TangentVector {
    TangentVector::project(z, v).unwrap()
}

fn model() -> impl Strategy<Value = ModelSubmanifold> {
    let all = library_models(3);
    (0..all.len()).prop_map(move |i| all[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn metric_symmetric_and_positive(tau in tau_sq(), z in sphere_point(2), a in raw(2), b in raw(2)) {
        let (v, w) = (tangent(&z, &a), tangent(&z, &b));
        let g = |x: &TangentVector, y: &TangentVector| metric_eval(&tau, &z, x, y).unwrap();
        prop_assert!((g(&v, &w) - g(&w, &v)).abs() < 1e-14);
        let e2: f64 = v.comps().iter().map(|c| c * c).sum();
        // g(v, v) >= τ² |v|² for the Euclidean norm
        prop_assert!(g(&v, &v) >= tau.tau_sq_f64() * e2 - 1e-12);
    }

    #[test]
    fn flow_is_an_isometry(tau in tau_sq(), z in sphere_point(1), a in raw(1), b in raw(1), t in -3.0f64..3.0) {
        let (v, w) = (tangent(&z, &a), tangent(&z, &b));
        let zt = killing_flow(&tau, t, &z);
        let before = metric_eval(&tau, &z, &v, &w).unwrap();
        let after = metric_eval(&tau, &zt, &killing_flow_differential(&tau, t, &v), &killing_flow_differential(&tau, t, &w)).unwrap();
        prop_assert!((before - after).abs() < 1e-12);
    }

    #[test]
    fn curvature_symmetries(tau in tau_sq(), z in sphere_point(1), x in raw(1), y in raw(1), u in raw(1), w in raw(1)) {
        let [x, y, u, w] = [x, y, u, w].map(|r| tangent(&z, &r));
        let r = |a: &TangentVector, b: &TangentVector, c: &TangentVector, d: &TangentVector| curvature_tensor(&tau, &z, a, b, c, d).unwrap();
        let base = r(&x, &y, &u, &w);
        prop_assert!((base + r(&y, &x, &u, &w)).abs() < 1e-10);
        prop_assert!((base - r(&u, &w, &x, &y)).abs() < 1e-10);
        prop_assert!((base + r(&y, &u, &x, &w) + r(&u, &x, &y, &w)).abs() < 1e-10);
    }

    #[test]
    fn tanno_eigenvalues_dominate_round(tau in tau_sq(), n in 0u32..4, k in 0u32..12) {
        for p in 0..=k / 2 {
            let mu = berger_eigenvalue(n, &tau, k, p).unwrap();
            prop_assert!(mu >= qi(round_eigenvalue(n, k) as i64));
        }
    }

    #[test]
    fn multiplicities_partition(n in 0u32..4, k in 0u32..9) {
        let s: u64 = (0..=k / 2).map(|p| berger_multiplicity(n, k, p).unwrap()).sum();
        prop_assert_eq!(s, round_multiplicity(n, k));
    }

    #[test]
    fn surd_sign_is_exact(a in -50i64..50, b in -50i64..50, c in 0i64..50, den in 1i64..9) {
        let s = Surd::new(q(a, den), q(b, 1), qi(c)).unwrap();
        let approx = a as f64 / den as f64 + b as f64 * (c as f64).sqrt();
        if approx.abs() > 1e-9 {
            prop_assert_eq!(s.is_negative(), approx < 0.0);
        } else {
            prop_assert!(s.is_zero());
        }
    }

    #[test]
    fn rationals_roundtrip(num in -1000i64..1000, den in 1i64..1000) {
        let x = q(num, den);
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bundle_counts_even(tau in tau_sq(), n in 1u32..4, s in 1u32..4) {
        let models = [
            ModelSubmanifold::TotallyGeodesicBergerSphere { n, m: n - 1 },
            ModelSubmanifold::CircleCover { n, s },
            ModelSubmanifold::VeroneseRp3,
            ModelSubmanifold::VeroneseS3,
        ];
        for m in models {
            let r = enumerate_index(&m, &tau, &TruncationPolicy::default()).unwrap();
            prop_assert_eq!(r.index % 2, 0);
            prop_assert_eq!(r.nullity % 2, 0);
        }
    }

    #[test]
    fn hypersurfaces_unstable(tau in tau_sq(), m1 in 0u32..3, m2 in 0u32..3) {
        let r = enumerate_index(&ModelSubmanifold::CliffordHypersurface { m1, m2 }, &tau, &TruncationPolicy::default()).unwrap();
        let n = (m1 + m2 + 1) as i64;
        prop_assert!(r.index >= 1);
        let first = r.nonpositive_modes[0].value.as_rational().cloned().unwrap();
        prop_assert!(first <= -(qi(2 * n) * tau.tau_sq()));
    }

    #[test]
    fn doubled_truncation_agrees(tau in tau_sq(), m in model()) {
        let r = enumerate_index(&m, &tau, &TruncationPolicy::default()).unwrap();
        let d = enumerate_with_kmax(&m, &tau, 2 * r.truncation_k.max(1)).unwrap();
        prop_assert_eq!((r.index, r.nullity), (d.index, d.nullity));
    }

    #[test]
    fn verdicts_match_index(tau in tau_sq(), m in model()) {
        let (v, r) = classify_model(&m, &tau).unwrap();
        match v.verdict {
            Verdict::Stable => prop_assert_eq!(r.index, 0),
            Verdict::Unstable => prop_assert!(r.index > 0),
            _ => {}
        }
        if *tau.tau_sq() > q(1, m.dim() as i64 + 1) {
            prop_assert!(r.index > 0);
            prop_assert_eq!(dimension_instability(m.dim(), &tau).unwrap().verdict, Verdict::Unstable);
        }
    }

    #[test]
    fn stable_window_is_downward_closed(m in 0u32..4, s in 1u32..5, a in tau_sq(), b in tau_sq()) {
        let (lo, hi) = if a.tau_sq() <= b.tau_sq() { (a, b) } else { (b, a) };
        let stable = |t: &BergerParam| s1_bundle_stability(m, s, t).unwrap().verdict == Verdict::Stable;
        if stable(&hi) {
            prop_assert!(stable(&lo));
        }
        prop_assert_eq!(stable(&hi), *hi.tau_sq() <= q(1, s as i64 * (2 * m as i64 + 2)));
    }

    #[test]
    fn proof_polynomial_negative(d in 1u32..7, qq in 1u32..6, tau in tau_sq(), xn in 0i64..=64) {
        let x = q(xn, 64);
        let p = proof_polynomial_p(d, qq, &tau, &x).unwrap();
        let p0 = proof_polynomial_p(d, qq, &tau, &Q::zero()).unwrap();
        prop_assert!(p <= p0);
        if *tau.tau_sq() > q(1, d as i64 + 1) {
            prop_assert!(p.is_negative());
        }
    }

    #[test]
    fn moduli_in_fundamental_domain(tau in tau_sq()) {
        let v = clifford_moduli_vector(&tau);
        prop_assert!(v.y > 0.0);
        prop_assert!(v.x.abs() <= 0.5 + 1e-15);
        prop_assert!(v.x * v.x + v.y * v.y >= 1.0 - 1e-12);
    }

    #[test]
    fn moduli_curve_is_lipschitz(samples in 2usize..200) {
        let pts = moduli_sweep(samples, &q(1, 3)).unwrap();
        let step = 2.0 / 3.0 / (samples - 1) as f64;
        for w in pts.windows(2) {
            let dist = ((w[0].x - w[1].x).powi(2) + (w[0].y - w[1].y).powi(2)).sqrt();
            // |d/dτ² (x, y)| ≤ 9/8 + 1 on [1/3, 1]
            prop_assert!(dist <= 2.2 * step);
        }
        prop_assert_eq!(&pts[0].tau_sq, &Q::one());
    }
}
