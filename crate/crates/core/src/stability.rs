//! Stability predicates for minimal submanifolds of Berger spheres, conformal
//! moduli of Clifford tori and phase-diagram rows.

use std::fmt;

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::berger::BergerParam;
use crate::error::{domain, Error, Result};
use crate::exact::{fmt_q, q, qi, ser_q, to_f64, Q};
use crate::jacobi::{clifford_index_nullity, enumerate_index, IndexReport, JacobiMode, ModelSubmanifold, TruncationPolicy};

/// Tags naming the result a verdict rests on.
pub mod tags {
    pub const BUNDLE_STABILITY: &str = "circle-bundle-stability";
    pub const DIMENSION_INSTABILITY: &str = "dimension-instability";
    pub const DIMENSION_BOUNDARY: &str = "dimension-boundary";
    pub const HYPERSURFACE_EIGENVALUE: &str = "hypersurface-first-eigenvalue";
    pub const JACOBI_SPECTRUM: &str = "jacobi-spectrum";
    pub const INDEX_ONE_SURFACES: &str = "index-one-surfaces";
    pub const GENUS_BOUND: &str = "genus-index-bound";
    pub const NONE: &str = "none";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Stable,
    Unstable,
    Boundary,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Stable => "stable",
            Verdict::Unstable => "unstable",
            Verdict::Boundary => "boundary",
            Verdict::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityVerdict {
    pub verdict: Verdict,
    pub reason: String,
    pub theorem: &'static str,
    /// A negative Jacobi mode, when one is known.
    pub witness: Option<JacobiMode>,
}

impl StabilityVerdict {
    fn new(verdict: Verdict, theorem: &'static str, reason: impl Into<String>) -> Self {
        StabilityVerdict { verdict, reason: reason.into(), theorem, witness: None }
    }
}

/// Circle bundle of order s over a complex m-dimensional submanifold of CP^n.
pub fn s1_bundle_stability(m: u32, s: u32, tau: &BergerParam) -> Result<StabilityVerdict> {
    if s == 0 {
        return domain("bundle order s must be >= 1");
    }
    let bound = q(1, s as i64 * (2 * m as i64 + 2));
    let t2 = tau.tau_sq();
    if *t2 <= bound {
        return Ok(StabilityVerdict::new(
            Verdict::Stable,
            tags::BUNDLE_STABILITY,
            format!("tau^2 = {} <= 1/(s(2m+2)) = {}", fmt_q(t2), fmt_q(&bound)),
        ));
    }
    let dim = dimension_instability(2 * m + 1, tau)?;
    Ok(match dim.verdict {
        Verdict::Unstable => dim,
        Verdict::Boundary => StabilityVerdict::new(
            Verdict::Boundary,
            tags::DIMENSION_BOUNDARY,
            format!("tau^2 = 1/(2m+2) with order s = {s} >= 2; only the spectrum decides"),
        ),
        _ => StabilityVerdict::new(
            Verdict::Undetermined,
            tags::NONE,
            format!("{} < tau^2 = {} < 1/(2m+2)", fmt_q(&bound), fmt_q(t2)),
        ),
    })
}

/// Compact minimal d-submanifolds are unstable once τ² > 1/(d+1).
pub fn dimension_instability(d: u32, tau: &BergerParam) -> Result<StabilityVerdict> {
    if d == 0 {
        return domain("dimension must be >= 1");
    }
    let crit = q(1, d as i64 + 1);
    let t2 = tau.tau_sq();
    Ok(if *t2 > crit {
        StabilityVerdict::new(
            Verdict::Unstable,
            tags::DIMENSION_INSTABILITY,
            format!("tau^2 = {} > 1/(d+1) = {}", fmt_q(t2), fmt_q(&crit)),
        )
    } else if *t2 == crit {
        let reason = if d % 2 == 0 {
            format!("tau^2 = 1/(d+1) with d = {d} even: stability would force a circle bundle of odd dimension, so no stable example")
        } else {
            format!("tau^2 = 1/(d+1): stable only for circle bundles over complex {}-dimensional submanifolds", (d - 1) / 2)
        };
        StabilityVerdict::new(Verdict::Boundary, tags::DIMENSION_BOUNDARY, reason)
    } else {
        StabilityVerdict::new(Verdict::Undetermined, tags::NONE, format!("tau^2 = {} < 1/(d+1)", fmt_q(t2)))
    })
}

/// Coefficients [c0, c1, c2] of P(x) = c2 x² + c1 x + c0:
/// c2 = (1−τ²)²/τ², c1 = −((1−τ²)/τ²)(1+q+τ²(d−1)), c0 = −q(d+1−1/τ²).
pub fn proof_polynomial_coefficients(d: u32, q_: u32, tau: &BergerParam) -> Result<[Q; 3]> {
    if q_ == 0 {
        return domain("q must be >= 1");
    }
    let t2 = tau.tau_sq();
    let one_minus = Q::one() - t2;
    let (d, qq) = (qi(d as i64), qi(q_ as i64));
    let c2 = &one_minus * &one_minus / t2;
    let c1 = -(&one_minus / t2 * (Q::one() + &qq + t2 * (&d - Q::one())));
    let c0 = -(&qq * (&d + Q::one() - t2.recip()));
    Ok([c0, c1, c2])
}

/// P(x) for x in [0, 1], exact.
pub fn proof_polynomial_p(d: u32, q_: u32, tau: &BergerParam, x: &Q) -> Result<Q> {
    if x.is_negative() || *x > Q::one() {
        return domain(format!("x = {} not in [0, 1]", fmt_q(x)));
    }
    let [c0, c1, c2] = proof_polynomial_coefficients(d, q_, tau)?;
    Ok((c2 * x + c1) * x + c0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum XiCase {
    XiTangent,
    XiNormal,
}

/// Lower bound on the index of a compact minimal d-submanifold of S^{2n+1}_τ.
pub fn index_lower_bound(
    n: u32,
    d: u32,
    tau: &BergerParam,
    xi_case: XiCase,
    is_hypersurface: bool,
    is_tg_berger_sphere: bool,
) -> Result<u64> {
    if d == 0 || d > 2 * n {
        return domain(format!("need 1 <= d <= 2n, got d={d}, n={n}"));
    }
    if is_hypersurface && d != 2 * n {
        return domain(format!("a hypersurface has d = 2n = {}, got {d}", 2 * n));
    }
    if is_tg_berger_sphere && (is_hypersurface || d % 2 == 0 || xi_case == XiCase::XiNormal) {
        return domain("a totally geodesic Berger sphere has odd dimension and contains the fibres");
    }
    let n = n as u64;
    match xi_case {
        XiCase::XiNormal => {
            if is_hypersurface || d as u64 > n {
                return domain(format!("horizontal submanifolds have d <= n = {n}"));
            }
            Ok(2 * (n + 1))
        }
        XiCase::XiTangent => {
            if *tau.tau_sq() <= q(1, d as i64 + 1) {
                return Err(Error::OutOfScope(format!("bound needs tau^2 > 1/(d+1) = 1/{}", d + 1)));
            }
            Ok(if is_tg_berger_sphere {
                2 * n + 1 - d as u64
            } else if is_hypersurface {
                2 * n + 3
            } else {
                2 * (n + 1)
            })
        }
    }
}

/// −2nτ²: the first Jacobi eigenvalue of a compact minimal hypersurface lies below it.
pub fn hypersurface_first_eigenvalue_bound(n: u32, tau: &BergerParam) -> Result<Q> {
    if n == 0 {
        return domain("n must be >= 1");
    }
    Ok(-(qi(2 * n as i64) * tau.tau_sq()))
}

/// Moduli vector (x, y) of a flat torus, lattice {(1, 0), (x, y)}.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModuliVector {
    pub x: f64,
    pub y: f64,
    #[serde(serialize_with = "ser_q")]
    pub tau_sq: Q,
}

pub fn clifford_moduli_vector(tau: &BergerParam) -> ModuliVector {
    let t2 = tau.tau_sq();
    let t = tau.tau();
    let (x, y) = if *t2 >= q(1, 3) {
        let den = Q::one() + t2;
        (to_f64(&((Q::one() - t2) / &den)), 2.0 * t / to_f64(&den))
    } else {
        (0.5, 0.5 / t)
    };
    ModuliVector { x, y, tau_sq: t2.clone() }
}

/// `samples` points with τ² evenly spaced from 1 down to `lowest`.
pub fn moduli_sweep(samples: usize, lowest: &Q) -> Result<Vec<ModuliVector>> {
    if samples < 2 {
        return domain("need at least 2 samples");
    }
    BergerParam::new(lowest.clone())?;
    let span = Q::one() - lowest;
    let last = qi(samples as i64 - 1);
    (0..samples)
        .map(|i| {
            let t2 = Q::one() - &span * qi(i as i64) / &last;
            Ok(clifford_moduli_vector(&BergerParam::new(t2)?))
        })
        .collect()
}

/// The arc of the unit circle swept for τ² from 1 to 1/3.
pub fn moduli_curve(samples: usize) -> Result<Vec<ModuliVector>> {
    moduli_sweep(samples, &q(1, 3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SurfaceKind {
    MinimalSphere,
    CliffordTorus,
    Other { genus: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurfaceClassification {
    pub surface: SurfaceKind,
    #[serde(serialize_with = "ser_q")]
    pub tau_sq: Q,
    pub index_one: bool,
    /// Exact index when known.
    pub index: Option<u64>,
    pub index_lower_bound: Option<u64>,
    pub theorem: &'static str,
    pub reason: String,
}

/// Index-one minimal surfaces of S³_τ for 1/3 ≤ τ² ≤ 1.
pub fn surface_index_one_classification(tau: &BergerParam, surface: SurfaceKind) -> Result<SurfaceClassification> {
    let t2 = tau.tau_sq();
    if *t2 < q(1, 3) {
        return Err(Error::OutOfScope(format!("classification needs tau^2 >= 1/3, got {}", fmt_q(t2))));
    }
    let base = SurfaceClassification {
        surface,
        tau_sq: t2.clone(),
        index_one: false,
        index: None,
        index_lower_bound: None,
        theorem: tags::INDEX_ONE_SURFACES,
        reason: String::new(),
    };
    Ok(match surface {
        SurfaceKind::MinimalSphere => SurfaceClassification {
            index_one: true,
            index: Some(1),
            reason: "minimal spheres have index one".into(),
            ..base
        },
        SurfaceKind::CliffordTorus => {
            let index = clifford_index_nullity(0, 0, tau)?.index;
            SurfaceClassification {
                index_one: index == 1,
                index: Some(index),
                reason: format!("Clifford torus index {index} at tau^2 = {}", fmt_q(t2)),
                ..base
            }
        }
        SurfaceKind::Other { genus } => {
            let bound = genus_index_bound(genus).ceil().to_integer();
            let bound = u64::try_from(bound).unwrap_or(0).max(2);
            SurfaceClassification {
                index_lower_bound: Some(bound),
                theorem: tags::GENUS_BOUND,
                reason: format!("not a sphere or the Clifford torus; index >= max(2, genus/4) with genus {genus}"),
                ..base
            }
        }
    })
}

/// g/4.
pub fn genus_index_bound(g: u32) -> Q {
    q(g as i64, 4)
}

/// Verdict for a library model: the theorem predicates first, then the
/// enumerated spectrum where they leave the answer open.
pub fn classify_model(model: &ModelSubmanifold, tau: &BergerParam) -> Result<(StabilityVerdict, IndexReport)> {
    model.validate()?;
    let report = enumerate_index(model, tau, &TruncationPolicy::default())?;
    let first_negative = report.nonpositive_modes.iter().find(|m| m.value.is_negative()).cloned();
    let mut v = match (model, model.bundle_order()) {
        (_, Some(s)) => s1_bundle_stability((model.dim() - 1) / 2, s, tau)?,
        (ModelSubmanifold::CliffordHypersurface { .. }, None) => {
            let bound = hypersurface_first_eigenvalue_bound(model.ambient_n(), tau)?;
            StabilityVerdict::new(
                Verdict::Unstable,
                tags::HYPERSURFACE_EIGENVALUE,
                format!("first Jacobi eigenvalue <= -2n tau^2 = {}", fmt_q(&bound)),
            )
        }
        _ => dimension_instability(model.dim(), tau)?,
    };
    match v.verdict {
        Verdict::Unstable => v.witness = first_negative,
        Verdict::Stable => {}
        Verdict::Boundary | Verdict::Undetermined => {
            let outcome = if report.index > 0 {
                Some(Verdict::Unstable)
            } else if !report.index_at_least {
                Some(Verdict::Stable)
            } else {
                None
            };
            if let Some(verdict) = outcome {
                v.reason = format!("{}; enumerated index {}", v.reason, report.index);
                v.verdict = verdict;
                v.theorem = tags::JACOBI_SPECTRUM;
                v.witness = first_negative;
            }
        }
    }
    Ok((v, report))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhaseRow {
    pub model: String,
    pub d: u32,
    pub tau_sq_num: String,
    pub tau_sq_den: String,
    pub index: u64,
    pub nullity: u64,
    pub verdict: Verdict,
    pub theorem: &'static str,
}

/// τ² = i/steps for i = 1..=steps.
pub fn uniform_grid(steps: u32) -> Result<Vec<BergerParam>> {
    if steps == 0 {
        return domain("grid needs at least one step");
    }
    (1..=steps as i64).map(|i| BergerParam::from_ratio(i, steps as i64)).collect()
}

/// The thresholds 1/(d+1), 1/(s(2m+2)) for small models, plus a few interior points.
pub fn standard_grid() -> Vec<BergerParam> {
    let mut pts: Vec<Q> = (2..=16).map(|k| q(1, k)).collect();
    pts.extend([q(3, 10), q(2, 5), q(3, 5), q(3, 4), qi(1)]);
    pts.sort();
    pts.dedup();
    pts.into_iter().map(|t| BergerParam::new(t).expect("in (0, 1]")).collect()
}

/// Every model of the library with ambient n ≤ `max_n`.
pub fn library_models(max_n: u32) -> Vec<ModelSubmanifold> {
    use ModelSubmanifold::*;
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend((0..n).map(|m| TotallyGeodesicBergerSphere { n, m }));
        out.extend((1..=3).map(|s| CircleCover { n, s }));
        out.extend((1..=n).map(|d| TotallyRealSphere { n, d }));
    }
    for m1 in 0..max_n {
        for m2 in 0..=m1.min(max_n - 1 - m1) {
            out.push(CliffordHypersurface { m1, m2 });
        }
    }
    if max_n >= 2 {
        out.extend([VeroneseRp3, VeroneseS3]);
    }
    out
}

/// One row per (model, τ²), in input order.
pub fn phase_rows(models: &[ModelSubmanifold], grid: &[BergerParam]) -> Result<Vec<PhaseRow>> {
    let jobs: Vec<(&ModelSubmanifold, &BergerParam)> =
        models.iter().flat_map(|m| grid.iter().map(move |t| (m, t))).collect();
    jobs.par_iter()
        .map(|(model, tau)| {
            let (v, r) = classify_model(model, tau)?;
            let t2 = tau.tau_sq();
            Ok(PhaseRow {
                model: model.slug(),
                d: model.dim(),
                tau_sq_num: t2.numer().to_string(),
                tau_sq_den: t2.denom().to_string(),
                index: r.index,
                nullity: r.nullity,
                verdict: v.verdict,
                theorem: v.theorem,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn t(num: i64, den: i64) -> BergerParam {
        BergerParam::from_ratio(num, den).unwrap()
    }

    #[test]
    fn bundle_examples() {
        assert_eq!(s1_bundle_stability(0, 1, &t(1, 2)).unwrap().verdict, Verdict::Stable);
        assert_eq!(s1_bundle_stability(1, 1, &t(1, 4)).unwrap().verdict, Verdict::Stable);
        assert_eq!(s1_bundle_stability(0, 2, &t(1, 3)).unwrap().verdict, Verdict::Undetermined);
        assert_eq!(s1_bundle_stability(0, 2, &t(1, 2)).unwrap().verdict, Verdict::Boundary);
        assert_eq!(s1_bundle_stability(0, 2, &t(3, 4)).unwrap().verdict, Verdict::Unstable);
        assert!(s1_bundle_stability(0, 0, &t(1, 2)).is_err());
    }

    #[test]
    fn circle_cover_resolved_by_spectrum() {
        let (v, r) = classify_model(&ModelSubmanifold::CircleCover { n: 1, s: 2 }, &t(1, 3)).unwrap();
        assert_eq!(v.verdict, Verdict::Unstable);
        assert_eq!(v.theorem, tags::JACOBI_SPECTRUM);
        assert!(r.index > 0);
        let w = v.witness.unwrap();
        assert!(w.value.is_negative());
        assert_eq!(w.labels, vec![1]);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension_instability(3, &t(3, 10)).unwrap().verdict, Verdict::Unstable);
        let even = dimension_instability(2, &t(1, 3)).unwrap();
        assert_eq!(even.verdict, Verdict::Boundary);
        assert!(even.reason.contains("no stable example"));
        let odd = dimension_instability(3, &t(1, 4)).unwrap();
        assert_eq!(odd.verdict, Verdict::Boundary);
        assert!(odd.reason.contains("circle bundles"));
        assert_eq!(dimension_instability(3, &t(1, 5)).unwrap().verdict, Verdict::Undetermined);
    }

    #[test]
    fn polynomial_values() {
        for d in 1..=5u32 {
            let crit = t(1, d as i64 + 1);
            assert!(proof_polynomial_p(d, 2, &crit, &Q::zero()).unwrap().is_zero());
        }
        let tau = t(1, 2);
        // d = 3, q = 1: a = 1/2, b = 1/1 * (2 + 1) = 3, P(0) = -(4 - 2) = -2
        assert_eq!(proof_polynomial_p(3, 1, &tau, &Q::zero()).unwrap(), qi(-2));
        assert_eq!(proof_polynomial_p(3, 1, &tau, &Q::one()).unwrap(), q(1, 2) - qi(3) - qi(2));
        assert!(proof_polynomial_p(3, 0, &tau, &Q::zero()).is_err());
        assert!(proof_polynomial_p(3, 1, &tau, &q(3, 2)).is_err());
    }

    #[test]
    fn index_bound_examples() {
        assert_eq!(index_lower_bound(1, 2, &t(1, 2), XiCase::XiTangent, true, false).unwrap(), 5);
        assert_eq!(index_lower_bound(2, 2, &t(1, 5), XiCase::XiNormal, false, false).unwrap(), 6);
        assert_eq!(index_lower_bound(2, 3, &t(1, 2), XiCase::XiTangent, false, true).unwrap(), 2);
        assert_eq!(index_lower_bound(2, 3, &t(1, 2), XiCase::XiTangent, false, false).unwrap(), 6);
        assert!(index_lower_bound(2, 3, &t(1, 2), XiCase::XiTangent, true, false).is_err());
        assert!(index_lower_bound(2, 2, &t(1, 2), XiCase::XiTangent, false, true).is_err());
        assert!(index_lower_bound(2, 3, &t(1, 2), XiCase::XiNormal, false, false).is_err());
        assert!(matches!(
            index_lower_bound(2, 3, &t(1, 4), XiCase::XiTangent, false, true),
            Err(Error::OutOfScope(_))
        ));
    }

    #[test]
    fn hypersurface_bound() {
        assert_eq!(hypersurface_first_eigenvalue_bound(1, &t(1, 1)).unwrap(), qi(-2));
        assert_eq!(hypersurface_first_eigenvalue_bound(2, &t(1, 5)).unwrap(), q(-4, 5));
        let r = clifford_index_nullity(0, 0, &t(1, 1)).unwrap();
        assert_eq!(r.nonpositive_modes[0].value.to_f64(), -4.0);
    }

    #[test]
    fn moduli_examples() {
        let a = clifford_moduli_vector(&t(1, 1));
        assert_eq!((a.x, a.y), (0.0, 1.0));
        let b = clifford_moduli_vector(&t(1, 3));
        assert!((b.x - 0.5).abs() < 1e-12 && (b.y - 3f64.sqrt() / 2.0).abs() < 1e-12);
        let lower_branch = 0.5 / t(1, 3).tau();
        assert!((b.y - lower_branch).abs() < 1e-12);
        let c = moduli_curve(3).unwrap();
        assert_eq!(c[1].tau_sq, q(2, 3));
        assert_eq!(c[2].tau_sq, q(1, 3));
        assert!(moduli_curve(1).is_err());
    }

    #[test]
    fn surfaces() {
        let c = surface_index_one_classification(&t(1, 3), SurfaceKind::CliffordTorus).unwrap();
        assert!(c.index_one);
        let c = surface_index_one_classification(&t(1, 2), SurfaceKind::CliffordTorus).unwrap();
        assert_eq!((c.index_one, c.index), (false, Some(5)));
        let c = surface_index_one_classification(&t(1, 2), SurfaceKind::Other { genus: 9 }).unwrap();
        assert_eq!(c.index_lower_bound, Some(3));
        assert!(surface_index_one_classification(&t(1, 2), SurfaceKind::MinimalSphere).unwrap().index_one);
        assert!(matches!(
            surface_index_one_classification(&t(1, 4), SurfaceKind::MinimalSphere),
            Err(Error::OutOfScope(_))
        ));
        assert_eq!(genus_index_bound(0), Q::zero());
        assert_eq!(genus_index_bound(4), qi(1));
        assert_eq!(genus_index_bound(20), qi(5));
    }

    #[test]
    fn phase_rows_keep_order() {
        let models = [ModelSubmanifold::VeroneseRp3, ModelSubmanifold::CircleCover { n: 1, s: 1 }];
        let grid = [t(1, 4), t(3, 10)];
        let rows = phase_rows(&models, &grid).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!((rows[0].index, rows[0].verdict), (0, Verdict::Stable));
        assert_eq!((rows[1].index, rows[1].verdict), (6, Verdict::Unstable));
        assert_eq!(rows[2].model, "circle(n=1,s=1)");
    }
}
