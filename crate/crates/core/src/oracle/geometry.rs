//! Sampling checks of the metric, the Killing field and the curvature tensor.

use super::sample::{orthonormalize, point, tangent};
use super::{stream, CheckReport};
use crate::berger::{
    berger_frame, curvature_tensor, inner, killing_field, killing_flow, killing_flow_differential, metric_eval,
    ricci, scalar_curvature, sectional_curvature, AmbientPoint, BergerParam, TangentVector,
};
use crate::error::Result;

/// Symmetry, bilinearity and positivity of the metric on random triples.
pub fn metric_check(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "metric-positivity";
    let mut rng = stream(seed, name);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let vs: Vec<TangentVector> = (0..3).map(|_| tangent(&mut rng, &z)).collect();
        let g = |a: &TangentVector, b: &TangentVector| metric_eval(tau, &z, a, b);
        worst = worst.max((g(&vs[0], &vs[1])? - g(&vs[1], &vs[0])?).abs());
        let combo = vs[0].scaled(0.7).plus(&vs[2].scaled(-1.3))?;
        let lin = g(&combo, &vs[1])? - 0.7 * g(&vs[0], &vs[1])? + 1.3 * g(&vs[2], &vs[1])?;
        worst = worst.max(lin.abs());
        // Cholesky of the 3×3 Gram matrix
        let mut l = [[0.0f64; 3]; 3];
        for i in 0..3 {
            for j in 0..=i {
                let s = g(&vs[i], &vs[j])? - (0..j).map(|k| l[i][k] * l[j][k]).sum::<f64>();
                if i == j {
                    if s <= 0.0 {
                        worst = f64::INFINITY;
                    }
                    l[i][i] = s.max(0.0).sqrt();
                } else {
                    l[i][j] = if l[j][j] > 0.0 { s / l[j][j] } else { 0.0 };
                }
            }
        }
    }
    Ok(CheckReport::new(name, worst, 1e-12, samples, seed))
}

/// |d/dt ⟨dζ_t v, dζ_t w⟩| at t = 0, central difference with h = 1e-5.
pub fn killing_check(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = if tau.is_round() { "killing-round" } else { "killing" };
    let mut rng = stream(seed, name);
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let (v, w) = (tangent(&mut rng, &z), tangent(&mut rng, &z));
        let at = |t: f64| -> Result<f64> {
            let zt = killing_flow(tau, t, &z);
            metric_eval(tau, &zt, &killing_flow_differential(tau, t, &v), &killing_flow_differential(tau, t, &w))
        };
        worst = worst.max(((at(h)? - at(-h)?) / (2.0 * h)).abs());
        // the flow is generated by ξ
        let d = killing_flow(tau, h, &z).coords().iter().zip(killing_flow(tau, -h, &z).coords()).map(|(a, b)| (a - b) / (2.0 * h)).collect::<Vec<_>>();
        let xi = killing_field(tau, &z);
        worst = worst.max(d.iter().zip(xi.comps()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
    }
    Ok(CheckReport::new(name, worst, 1e-6, samples, seed))
}

/// Antisymmetries, pair symmetry and the first Bianchi identity.
pub fn curvature_symmetry_check(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "curvature-symmetry";
    let mut rng = stream(seed, name);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let [x, y, u, w] = [(); 4].map(|_| tangent(&mut rng, &z));
        let r = |a: &TangentVector, b: &TangentVector, c: &TangentVector, d: &TangentVector| {
            curvature_tensor(tau, &z, a, b, c, d)
        };
        let base = r(&x, &y, &u, &w)?;
        let errs = [
            base + r(&y, &x, &u, &w)?,
            base + r(&x, &y, &w, &u)?,
            base - r(&u, &w, &x, &y)?,
            base + r(&y, &u, &x, &w)? + r(&u, &x, &y, &w)?,
        ];
        worst = errs.iter().fold(worst, |m, e| m.max(e.abs()));
    }
    Ok(CheckReport::new(name, worst, 1e-10, samples, seed))
}

/// At τ = 1 the tensor is ⟨Y,Z⟩⟨X,W⟩ − ⟨X,Z⟩⟨Y,W⟩.
pub fn round_degeneration_check(n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "round-degeneration";
    let tau = BergerParam::from_ratio(1, 1)?;
    let mut rng = stream(seed, name);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let [x, y, u, w] = [(); 4].map(|_| tangent(&mut rng, &z));
        let g = |a: &TangentVector, b: &TangentVector| metric_eval(&tau, &z, a, b);
        let want = g(&y, &u)? * g(&x, &w)? - g(&x, &u)? * g(&y, &w)?;
        worst = worst.max((curvature_tensor(&tau, &z, &x, &y, &u, &w)? - want).abs());
    }
    Ok(CheckReport::new(name, worst, 1e-12, samples, seed))
}

/// K(v, w) = R̄(v, w, w, v) on Berger-orthonormal pairs.
pub fn sectional_consistency_check(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "sectional-consistency";
    let mut rng = stream(seed, name);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let raw = [tangent(&mut rng, &z).comps().to_vec(), tangent(&mut rng, &z).comps().to_vec()];
        let on = orthonormalize(tau.tau(), z.coords(), &raw);
        let v = TangentVector::new(&z, on[0].clone())?;
        let w = TangentVector::new(&z, on[1].clone())?;
        let k = sectional_curvature(tau, &z, &v, &w)?;
        worst = worst.max((k - curvature_tensor(tau, &z, &v, &w, &w, &v)?).abs());
    }
    Ok(CheckReport::new(name, worst, 1e-12, samples, seed))
}

fn ricci_trace(tau: &BergerParam, z: &AmbientPoint, v: &TangentVector) -> Result<f64> {
    berger_frame(tau, z).iter().map(|e| curvature_tensor(tau, z, e, v, v, e)).sum()
}

/// Ric(ξ) = 2nτ², traced Ricci against the closed form, and scalar curvature.
pub fn ricci_check(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "ricci-xi";
    let mut rng = stream(seed, name);
    let mut worst: f64 = 0.0;
    let t2 = tau.tau_sq_f64();
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let xi = killing_field(tau, &z);
        worst = worst.max((ricci_trace(tau, &z, &xi)? - 2.0 * n as f64 * t2).abs());
        worst = worst.max((ricci(tau, &z, &xi)? - 2.0 * n as f64 * t2).abs());
        let raw = tangent(&mut rng, &z);
        let s = inner(tau.tau(), z.coords(), raw.comps(), raw.comps()).sqrt();
        let v = raw.scaled(1.0 / s);
        worst = worst.max((ricci_trace(tau, &z, &v)? - ricci(tau, &z, &v)?).abs());
        let scal: f64 = berger_frame(tau, &z).iter().map(|e| ricci_trace(tau, &z, e)).sum::<Result<f64>>()?;
        worst = worst.max((scal - scalar_curvature(tau, n)).abs());
    }
    Ok(CheckReport::new(name, worst, 1e-10, samples, seed))
}
