use berger_spectra::berger::BergerParam;
use berger_spectra::jacobi::{enumerate_index, enumerate_with_kmax, IndexReport, ModelSubmanifold, TruncationPolicy};

const GRID: [(i64, i64); 8] = [(1, 12), (1, 8), (1, 6), (1, 4), (1, 3), (1, 2), (3, 5), (1, 1)];

fn models() -> Vec<ModelSubmanifold> {
    use ModelSubmanifold::*;
    let mut out = vec![VeroneseRp3, VeroneseS3];
    for n in 1..=3 {
        for m in 0..n {
            out.push(TotallyGeodesicBergerSphere { n, m });
        }
        for s in 1..=4 {
            out.push(CircleCover { n, s });
        }
        for d in 1..=n {
            out.push(TotallyRealSphere { n, d });
        }
        for m1 in 0..n {
            out.push(CliffordHypersurface { m1, m2: n - 1 - m1 });
        }
    }
    out
}

fn report(m: &ModelSubmanifold, num: i64, den: i64) -> IndexReport {
    let tau = BergerParam::from_ratio(num, den).unwrap();
    enumerate_index(m, &tau, &TruncationPolicy::default()).unwrap()
}

#[test]
fn grid_matches_closed_forms() {
    let mut misses = Vec::new();
    for m in models() {
        for (num, den) in GRID {
            let r = report(&m, num, den);
            if r.agrees_with_closed_form() == Some(false) {
                let t = r.closed_form.unwrap();
                misses.push(format!("{m} at {num}/{den}: got ({}, {}), table ({}, {})", r.index, r.nullity, t.index, t.nullity));
            }
        }
    }
    assert!(misses.is_empty(), "{}", misses.join("\n"));
}

#[test]
fn doubled_truncation_is_stable() {
    for m in models() {
        for (num, den) in GRID {
            let r = report(&m, num, den);
            let tau = BergerParam::from_ratio(num, den).unwrap();
            let d = enumerate_with_kmax(&m, &tau, 2 * r.truncation_k.max(1)).unwrap();
            assert_eq!((r.index, r.nullity), (d.index, d.nullity), "{m} at {num}/{den}");
            assert_eq!(r.nonpositive_modes, d.nonpositive_modes, "{m} at {num}/{den}");
        }
    }
}

#[test]
fn bundle_counts_are_even() {
    for m in models() {
        if matches!(m, ModelSubmanifold::CliffordHypersurface { .. } | ModelSubmanifold::TotallyRealSphere { .. }) {
            continue;
        }
        for (num, den) in GRID {
            let r = report(&m, num, den);
            assert!(r.index % 2 == 0 && r.nullity % 2 == 0, "{m} at {num}/{den}: ({}, {})", r.index, r.nullity);
        }
    }
}

#[test]
fn tg_boundary_jump() {
    for n in 1..=3u32 {
        for m in 0..n {
            let model = ModelSubmanifold::TotallyGeodesicBergerSphere { n, m };
            let at = report(&model, 1, 2 * m as i64 + 2).nullity;
            let generic = report(&model, 1, 2 * m as i64 + 3).nullity;
            assert_eq!(at - generic, 2 * (n - m) as u64);
        }
    }
}

#[test]
fn hypersurface_first_mode_bound() {
    for (m1, m2) in [(0, 0), (1, 0), (0, 2), (1, 1)] {
        let n = (m1 + m2 + 1) as f64;
        for (num, den) in GRID {
            let r = report(&ModelSubmanifold::CliffordHypersurface { m1, m2 }, num, den);
            let first = r.nonpositive_modes[0].value.to_f64();
            assert!(first <= -2.0 * n * num as f64 / den as f64 + 1e-12);
            assert!(r.index >= 1);
        }
    }
}

#[test]
fn veronese_tables() {
    let rp3 = [
        ((1, 12), (0, 10)), ((1, 8), (0, 10)), ((1, 4), (0, 16)), ((3, 10), (6, 10)),
        ((1, 3), (6, 10)), ((1, 2), (6, 12)), ((3, 5), (8, 10)), ((1, 1), (8, 16)),
    ];
    for ((num, den), want) in rp3 {
        let r = report(&ModelSubmanifold::VeroneseRp3, num, den);
        assert_eq!((r.index, r.nullity), want, "{num}/{den}");
    }
    let s3 = [
        ((1, 12), (0, 10)), ((1, 8), (0, 18)), ((1, 6), (8, 10)), ((1, 4), (8, 16)),
        ((3, 10), (14, 10)), ((1, 2), (18, 12)), ((1, 1), (24, 16)),
    ];
    for ((num, den), want) in s3 {
        let r = report(&ModelSubmanifold::VeroneseS3, num, den);
        assert_eq!((r.index, r.nullity), want, "{num}/{den}");
    }
}
