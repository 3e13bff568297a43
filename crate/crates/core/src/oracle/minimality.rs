//! Mean curvature from the first variation of the area density.

use nalgebra::{DMatrix, DVector};
use rand::Rng;

use super::sample::gaussian;
use super::{stream, CheckReport};
use crate::berger::{inner, mul_i, BergerParam};
use crate::error::{Error, Result};
use crate::exact::fmt_q;
use crate::jacobi::ModelSubmanifold;

const H_CHART: f64 = 1e-5;
const H_VARIATION: f64 = 1e-4;

type Map = Box<dyn Fn(&[f64]) -> Vec<f64>>;

/// Local parametrization u ↦ p(u) around u = 0, plus candidate normal
/// directions at any point of the image.
struct Chart {
    dim: usize,
    map: Map,
    candidates: Box<dyn Fn(&[f64]) -> Vec<Vec<f64>>>,
}

fn unit(v: Vec<f64>) -> Vec<f64> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.into_iter().map(|x| x / n).collect()
}

/// Orthonormal basis of the tangent space of the unit sphere at `x`.
fn sphere_tangents(x: &[f64]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for j in 0..x.len() {
        let mut v = vec![0.0; x.len()];
        v[j] = 1.0;
        for u in std::iter::once(&x.to_vec()).chain(out.iter()) {
            let g: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
            v.iter_mut().zip(u).for_each(|(a, b)| *a -= g * b);
        }
        let n = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if n > 1e-6 && out.len() + 1 < x.len() {
            out.push(v.into_iter().map(|a| a / n).collect());
        }
    }
    out
}

fn sphere_chart(centre: Vec<f64>, radius: f64) -> impl Fn(&[f64]) -> Vec<f64> {
    let basis = sphere_tangents(&centre);
    move |u: &[f64]| {
        let mut p = centre.clone();
        for (t, c) in basis.iter().zip(u) {
            p.iter_mut().zip(t).for_each(|(a, b)| *a += c * b);
        }
        unit(p).into_iter().map(|a| a * radius).collect()
    }
}

fn clifford_chart<R: Rng>(rng: &mut R, m1: u32, m2: u32) -> Chart {
    let n = (m1 + m2 + 1) as f64;
    let (d1, d2) = ((2 * m1 + 1) as f64, (2 * m2 + 1) as f64);
    let (len1, len2) = (2 * m1 as usize + 2, 2 * m2 as usize + 2);
    let first = sphere_chart(unit(gaussian(rng, len1)), (d1 / (2.0 * n)).sqrt());
    let second = sphere_chart(unit(gaussian(rng, len2)), (d2 / (2.0 * n)).sqrt());
    let (a, b) = ((d2 / d1).sqrt(), (d1 / d2).sqrt());
    Chart {
        dim: len1 + len2 - 2,
        map: Box::new(move |u: &[f64]| {
            let mut p = first(&u[..len1 - 1]);
            p.extend(second(&u[len1 - 1..]));
            p
        }),
        candidates: Box::new(move |p: &[f64]| {
            let mut v: Vec<f64> = p[..len1].iter().map(|x| a * x).collect();
            v.extend(p[len1..].iter().map(|x| -b * x));
            vec![v]
        }),
    }
}

fn totally_real_chart<R: Rng>(rng: &mut R, n: u32, d: u32) -> Chart {
    let (n, d) = (n as usize, d as usize);
    let centre = unit(gaussian(rng, d + 1));
    let tangents = sphere_tangents(&centre);
    let real = sphere_chart(centre, 1.0);
    let embed = move |x: &[f64]| {
        let mut p = vec![0.0; 2 * n + 2];
        for (j, v) in x.iter().enumerate() {
            p[2 * j] = *v;
        }
        p
    };
    let embedded: Vec<Vec<f64>> = tangents.iter().map(|t| embed(t)).collect();
    Chart {
        dim: d,
        map: Box::new(move |u: &[f64]| embed(&real(u))),
        candidates: Box::new(move |p: &[f64]| {
            let mut out = vec![mul_i(p)];
            out.extend(embedded.iter().map(|t| mul_i(t)));
            for b in d + 1..=n {
                for k in 0..2 {
                    let mut e = vec![0.0; 2 * n + 2];
                    e[2 * b + k] = 1.0;
                    out.push(e);
                }
            }
            out
        }),
    }
}

fn partials(f: &dyn Fn(&[f64]) -> Vec<f64>, u: &[f64]) -> Vec<Vec<f64>> {
    (0..u.len())
        .map(|a| {
            let mut up = u.to_vec();
            let mut dn = u.to_vec();
            up[a] += H_CHART;
            dn[a] -= H_CHART;
            f(&up).iter().zip(f(&dn)).map(|(x, y)| (x - y) / (2.0 * H_CHART)).collect()
        })
        .collect()
}

fn gram(tau: f64, p: &[f64], vs: &[Vec<f64>]) -> DMatrix<f64> {
    DMatrix::from_fn(vs.len(), vs.len(), |i, j| inner(tau, p, &vs[i], &vs[j]))
}

/// Candidate `j` at chart point u, made tangent to the sphere and then
/// Berger-orthogonal to the submanifold.
fn normal_field(tau: f64, chart: &Chart, u: &[f64], j: usize) -> Vec<f64> {
    let p = (chart.map)(u);
    let raw = &(chart.candidates)(&p)[j];
    let g: f64 = raw.iter().zip(&p).map(|(a, b)| a * b).sum();
    let mut v: Vec<f64> = raw.iter().zip(&p).map(|(a, b)| a - g * b).collect();
    let tangents = partials(&*chart.map, u);
    let rhs = DVector::from_iterator(tangents.len(), tangents.iter().map(|t| inner(tau, &p, &v, t)));
    let coeff = gram(tau, &p, &tangents).lu().solve(&rhs).expect("chart is an immersion");
    for (c, t) in coeff.iter().zip(&tangents) {
        v.iter_mut().zip(t).for_each(|(a, b)| *a -= c * b);
    }
    v
}

fn log_area_density(tau: f64, chart: &Chart, j: usize, eps: f64) -> f64 {
    let moved = |u: &[f64]| {
        let p = (chart.map)(u);
        let v = normal_field(tau, chart, u, j);
        unit(p.iter().zip(&v).map(|(a, b)| a + eps * b).collect())
    };
    let origin = vec![0.0; chart.dim];
    let q = moved(&origin);
    let tangents = partials(&moved, &origin);
    0.5 * gram(tau, &q, &tangents).determinant().ln()
}

/// |H| in the Berger metric at the chart origin: ⟨H, V⟩ = −(1/d) d/dε log√det g_ε.
fn mean_curvature_norm(tau: f64, chart: &Chart) -> f64 {
    let origin = vec![0.0; chart.dim];
    let p = (chart.map)(&origin);
    let count = (chart.candidates)(&p).len();
    let fields: Vec<Vec<f64>> = (0..count).map(|j| normal_field(tau, chart, &origin, j)).collect();
    let c = DVector::from_iterator(
        count,
        (0..count).map(|j| {
            let d = log_area_density(tau, chart, j, H_VARIATION) - log_area_density(tau, chart, j, -H_VARIATION);
            -d / (2.0 * H_VARIATION) / chart.dim as f64
        }),
    );
    let g = gram(tau, &p, &fields);
    let a = g.lu().solve(&c).expect("normal candidates are independent");
    c.dot(&a).max(0.0).sqrt()
}

/// Samples base points of an explicitly parametrized model and reports the
/// largest |H| found by first variation of area.
pub fn minimality_first_variation_check(
    model: &ModelSubmanifold,
    tau: &BergerParam,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    model.validate()?;
    let name = format!("minimality-{model}@{}", fmt_q(tau.tau_sq()));
    let mut rng = stream(seed, &name);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let chart = match *model {
            ModelSubmanifold::CliffordHypersurface { m1, m2 } => clifford_chart(&mut rng, m1, m2),
            ModelSubmanifold::TotallyRealSphere { n, d } => totally_real_chart(&mut rng, n, d),
            _ => return Err(Error::Unsupported(format!("no explicit parametrization for {model}"))),
        };
        worst = worst.max(mean_curvature_norm(tau.tau(), &chart));
    }
    Ok(CheckReport::new(name, worst, 1e-4, samples, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn models_are_minimal() {
        let tau = BergerParam::from_ratio(1, 3).unwrap();
        for m in [
            ModelSubmanifold::CliffordHypersurface { m1: 0, m2: 0 },
            ModelSubmanifold::CliffordHypersurface { m1: 1, m2: 0 },
            ModelSubmanifold::TotallyRealSphere { n: 1, d: 1 },
            ModelSubmanifold::TotallyRealSphere { n: 2, d: 2 },
        ] {
            let r = minimality_first_variation_check(&m, &tau, 3, 7).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn detects_non_minimal() {
        // a Clifford torus with unequal radii is not minimal
        let mut rng = stream(1, "x");
        let first = sphere_chart(unit(gaussian(&mut rng, 2)), 0.6);
        let second = sphere_chart(unit(gaussian(&mut rng, 2)), 0.8);
        let chart = Chart {
            dim: 2,
            map: Box::new(move |u: &[f64]| {
                let mut p = first(&u[..1]);
                p.extend(second(&u[1..]));
                p
            }),
            candidates: Box::new(|p: &[f64]| vec![vec![0.8 / 0.6 * p[0], 0.8 / 0.6 * p[1], -0.6 / 0.8 * p[2], -0.6 / 0.8 * p[3]]]),
        };
        assert!(mean_curvature_norm(0.5, &chart) > 0.1);
    }

    #[test]
    fn other_models_refused() {
        let tau = BergerParam::from_ratio(1, 3).unwrap();
        assert!(minimality_first_variation_check(&ModelSubmanifold::VeroneseRp3, &tau, 1, 0).is_err());
    }
}
