//! Finite-difference checks of the geodesic-sphere and Tai embeddings, and
//! flatness of the Clifford torus.

use num_complex::Complex64;
use rand::Rng;

use super::sample::{complex, point, tangent};
use super::{stream, CheckReport};
use crate::berger::{
    fubini_study, geodesic_sphere_embed, geodesic_sphere_normal, horizontal_part, inner, killing_field, metric_eval,
    sff_geodesic_sphere, tai_centre, tai_differential, tai_embed, tai_radius_sq, tai_sff_inner, AmbientPoint,
    BergerParam, HermitianMatrix, ProjectivePoint,
};
use crate::error::Result;

const H1: f64 = 1e-6;
/// Step of the five-point second-derivative stencil.
const H2: f64 = 1e-2;

fn diff_c(a: &[Complex64], b: &[Complex64], h: f64) -> Vec<Complex64> {
    a.iter().zip(b).map(|(x, y)| (x - y) / (2.0 * h)).collect()
}

fn second_derivative(f: impl Fn(f64) -> Result<HermitianMatrix>) -> Result<HermitianMatrix> {
    let h = H2;
    let (m2, m1, c, p1, p2) = (f(-2.0 * h)?, f(-h)?, f(0.0)?, f(h)?, f(2.0 * h)?);
    let s = 1.0 / (12.0 * h * h);
    Ok(p2
        .combine(-s, &m2, -s)
        .combine(1.0, &p1.combine(16.0 * s, &m1, 16.0 * s), 1.0)
        .combine(1.0, &c, -30.0 * s))
}

fn curve_point(z: &AmbientPoint, v: &[f64], t: f64) -> Result<AmbientPoint> {
    AmbientPoint::normalized(z.coords().iter().zip(v).map(|(a, b)| a + t * b).collect())
}

/// Pullback of Fubini-Study under z ↦ [(τ/√(1−τ²), z)] equals the Berger metric.
pub fn geodesic_sphere_isometry_check(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "geodesic-sphere-isometry";
    let mut rng = stream(seed, name);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let (v, w) = (tangent(&mut rng, &z), tangent(&mut rng, &z));
        let p = geodesic_sphere_embed(tau, &z)?;
        let push = |u: &[f64]| -> Result<Vec<Complex64>> {
            let a = geodesic_sphere_embed(tau, &curve_point(&z, u, H1)?)?;
            let b = geodesic_sphere_embed(tau, &curve_point(&z, u, -H1)?)?;
            Ok(diff_c(a.rep(), b.rep(), H1))
        };
        let (fv, fw) = (push(v.comps())?, push(w.comps())?);
        worst = worst.max((fubini_study(&p, &fv, &fw)? - metric_eval(tau, &z, &v, &w)?).abs());
    }
    Ok(CheckReport::new(name, worst, 1e-8, samples, seed))
}

/// The unit-normal component of the acceleration of T∘F∘γ, γ(t) = normalize(z + tX),
/// against the closed-form second fundamental form of F. The Tai embedding is
/// isometric and its own second fundamental form is normal to dT, so the
/// component along dT(N) is exactly that of F.
pub fn geodesic_sphere_sff_check(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "geodesic-sphere-sff";
    let mut rng = stream(seed, name);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = point(&mut rng, n);
        let x = tangent(&mut rng, &z);
        let p = geodesic_sphere_embed(tau, &z)?;
        let normal = tai_differential(tau, &p, &geodesic_sphere_normal(tau, &z)?)?;
        let acc = second_derivative(|t| tai_embed(tau, &geodesic_sphere_embed(tau, &curve_point(&z, x.comps(), t)?)?))?;
        let got = acc.inner(&normal);
        worst = worst.max((got - sff_geodesic_sphere(tau, &z, &x, &x)?).abs());
    }
    Ok(CheckReport::new(name, worst, 1e-6, samples, seed))
}

fn tai_point(rng: &mut impl Rng, tau: &BergerParam, n: usize) -> Result<ProjectivePoint> {
    ProjectivePoint::new(complex(rng, n + 1), 1.0 / (1.0 - tau.tau_sq_f64()).sqrt())
}

fn horizontal(rng: &mut impl Rng, p: &ProjectivePoint) -> Vec<Complex64> {
    let v = horizontal_part(p, &complex(rng, p.rep().len()));
    let nrm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|c| c / nrm).collect()
}

/// σ̄(x, x) as the acceleration of T along the horizontal great circle through x.
fn tai_sff_diag(tau: &BergerParam, p: &ProjectivePoint, x: &[Complex64]) -> Result<HermitianMatrix> {
    let r = p.scale();
    let len = x.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    second_derivative(|t| {
        let (s, c) = (len * t / r).sin_cos();
        let rep = p.rep().iter().zip(x).map(|(a, b)| a * c + b * (r * s / len)).collect();
        tai_embed(tau, &ProjectivePoint::new(rep, r)?)
    })
}

fn tai_sff(tau: &BergerParam, p: &ProjectivePoint, x: &[Complex64], y: &[Complex64]) -> Result<HermitianMatrix> {
    let plus: Vec<_> = x.iter().zip(y).map(|(a, b)| a + b).collect();
    let minus: Vec<_> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    Ok(tai_sff_diag(tau, p, &plus)?.combine(0.25, &tai_sff_diag(tau, p, &minus)?, -0.25))
}

/// Isometry, sphere containment, the σ̄ inner-product law, J-invariance and
/// minimality in the sphere, for the Tai embedding of CP^n(4(1−τ²)).
pub fn tai_checks(tau: &BergerParam, n: usize, samples: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let centre = tai_centre(tau, n)?;
    let r2 = tai_radius_sq(tau, n)?;
    let trace = 1.0 / (2.0 * (1.0 - tau.tau_sq_f64())).sqrt();
    let times_i = |v: &[Complex64]| v.iter().map(|c| c * Complex64::i()).collect::<Vec<_>>();

    let mut iso: f64 = 0.0;
    let mut rng = stream(seed, "tai-isometry");
    for _ in 0..samples {
        let p = tai_point(&mut rng, tau, n)?;
        let (v, w) = (horizontal(&mut rng, &p), horizontal(&mut rng, &p));
        let fd = |u: &[Complex64]| -> Result<HermitianMatrix> {
            let shift = |t: f64| ProjectivePoint::new(p.rep().iter().zip(u).map(|(a, b)| a + b * t).collect(), p.scale());
            let (a, b) = (tai_embed(tau, &shift(H1)?)?, tai_embed(tau, &shift(-H1)?)?);
            Ok(a.combine(0.5 / H1, &b, -0.5 / H1))
        };
        let (tv, tw) = (fd(&v)?, fd(&w)?);
        iso = iso.max((tv.inner(&tw) - fubini_study(&p, &v, &w)?).abs());
        let dv = tai_differential(tau, &p, &v)?;
        iso = iso.max(dv.combine(1.0, &tv, -1.0).norm_sq().sqrt());
    }

    let mut sphere: f64 = 0.0;
    let mut rng = stream(seed, "tai-sphere");
    for _ in 0..samples {
        let t = tai_embed(tau, &tai_point(&mut rng, tau, n)?)?;
        sphere = sphere.max((t.combine(1.0, &centre, -1.0).norm_sq() - r2).abs());
        sphere = sphere.max((t.trace() - trace).abs());
    }

    let mut law: f64 = 0.0;
    let mut jinv: f64 = 0.0;
    let mut rng = stream(seed, "tai-sff-law");
    for _ in 0..samples {
        let p = tai_point(&mut rng, tau, n)?;
        let [x, y, v, w] = [(); 4].map(|_| horizontal(&mut rng, &p));
        let got = tai_sff(tau, &p, &x, &y)?.inner(&tai_sff(tau, &p, &v, &w)?);
        law = law.max((got - tai_sff_inner(tau, &p, &x, &y, &v, &w)?).abs());
        let rotated = tai_sff(tau, &p, &times_i(&x), &times_i(&y))?;
        jinv = jinv.max(rotated.combine(1.0, &tai_sff(tau, &p, &x, &y)?, -1.0).norm_sq().sqrt());
    }

    let mut minimal: f64 = 0.0;
    let mut rng = stream(seed, "tai-minimality");
    for _ in 0..samples {
        let p = tai_point(&mut rng, tau, n)?;
        // complex orthonormal basis of the horizontal space, then e and ie
        let mut basis: Vec<Vec<Complex64>> = Vec::new();
        for j in 0..=n {
            let mut e = vec![Complex64::new(0.0, 0.0); n + 1];
            e[j] = Complex64::new(1.0, 0.0);
            let mut v = horizontal_part(&p, &e);
            for b in &basis {
                let c: Complex64 = v.iter().zip(b).map(|(x, y)| x * y.conj()).sum();
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
            let nrm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if nrm > 1e-6 && basis.len() < n {
                basis.push(v.into_iter().map(|c| c / nrm).collect());
            }
        }
        let mut tr = HermitianMatrix::identity_scaled(n + 1, 0.0);
        for b in &basis {
            tr = tr.combine(1.0, &tai_sff_diag(tau, &p, b)?, 1.0);
            tr = tr.combine(1.0, &tai_sff_diag(tau, &p, &times_i(b))?, 1.0);
        }
        let t = tai_embed(tau, &p)?;
        let want = t.combine(-(2.0 * n as f64) / r2, &centre, (2.0 * n as f64) / r2);
        minimal = minimal.max(tr.combine(1.0, &want, -1.0).norm_sq().sqrt());
    }

    Ok(vec![
        CheckReport::new("tai-isometry", iso, 1e-8, samples, seed),
        CheckReport::new("tai-sphere", sphere, 1e-10, samples, seed),
        CheckReport::new("tai-sff-law", law, 1e-6, samples, seed),
        CheckReport::new("tai-j-invariance", jinv, 1e-8, samples, seed),
        CheckReport::new("tai-minimality", minimal, 1e-7, samples, seed),
    ])
}

/// Gauss equation on the flat Clifford torus of S³_τ: K = −|σ|²/2 + τ² + 4(1−τ²)ν²
/// with |σ|² = 2τ² and ν the Berger angle between the unit normal and ξ.
pub fn gauss_flatness_check(tau: &BergerParam, samples: usize, seed: u64) -> Result<CheckReport> {
    let name = "gauss-flatness";
    let mut rng = stream(seed, name);
    let t = tau.tau();
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let (a, b): (f64, f64) = (rng.random_range(0.0..std::f64::consts::TAU), rng.random_range(0.0..std::f64::consts::TAU));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = AmbientPoint::new(vec![s * a.cos(), s * a.sin(), s * b.cos(), s * b.sin()])?;
        let c = p.coords();
        let normal = vec![c[0], c[1], -c[2], -c[3]];
        let xi = killing_field(tau, &p);
        let nu = inner(t, c, &normal, xi.comps());
        let unit = inner(t, c, &normal, &normal);
        let k = -(2.0 * t * t) / 2.0 + t * t + 4.0 * (1.0 - t * t) * nu * nu;
        worst = worst.max(k.abs()).max((unit - 1.0).abs());
    }
    Ok(CheckReport::new(name, worst, 1e-12, samples, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_checks_pass() {
        let tau = BergerParam::from_ratio(1, 2).unwrap();
        let mut all = vec![
            geodesic_sphere_isometry_check(&tau, 2, 30, 3).unwrap(),
            geodesic_sphere_sff_check(&tau, 2, 30, 3).unwrap(),
            gauss_flatness_check(&tau, 30, 3).unwrap(),
        ];
        all.extend(tai_checks(&tau, 2, 30, 3).unwrap());
        for r in all {
            assert!(r.pass, "{r:?}");
        }
    }
}
