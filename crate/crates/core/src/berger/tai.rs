use num_complex::Complex64;

use super::projective::{cdot, horizontal_part};
use super::{BergerParam, ProjectivePoint};
use crate::error::{domain, Error, Result};

/// Square complex matrix, row-major, equal to its conjugate transpose.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    order: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn new(order: usize, entries: Vec<Complex64>) -> Result<Self> {
        if order == 0 || entries.len() != order * order {
            return domain("entry count does not match order");
        }
        for i in 0..order {
            for j in 0..order {
                if (entries[i * order + j] - entries[j * order + i].conj()).norm() > 1e-12 {
                    return domain("matrix is not Hermitian");
                }
            }
        }
        Ok(HermitianMatrix { order, entries })
    }

    pub fn identity_scaled(order: usize, s: f64) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); order * order];
        for i in 0..order {
            entries[i * order + i] = Complex64::new(s, 0.0);
        }
        HermitianMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.entry(i, i).re).sum()
    }

    /// tr(AB), real for Hermitian arguments.
    pub fn inner(&self, other: &HermitianMatrix) -> f64 {
        let n = self.order;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self.entry(i, j) * other.entry(j, i)).re;
            }
        }
        acc
    }

    pub fn norm_sq(&self) -> f64 {
        self.inner(self)
    }

    pub fn scaled(&self, s: f64) -> HermitianMatrix {
        HermitianMatrix { order: self.order, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: f64, other: &HermitianMatrix, b: f64) -> HermitianMatrix {
        let entries = self.entries.iter().zip(&other.entries).map(|(x, y)| x * a + y * b).collect();
        HermitianMatrix { order: self.order, entries }
    }

    /// `u v* + v u*`.
    pub(crate) fn sym_outer(u: &[Complex64], v: &[Complex64]) -> HermitianMatrix {
        let n = u.len();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(u[i] * v[j].conj() + v[i] * u[j].conj());
            }
        }
        HermitianMatrix { order: n, entries }
    }
}

fn tai_scale(tau: &BergerParam) -> Result<(f64, f64)> {
    if tau.is_round() {
        return Err(Error::Unsupported("Tai embedding undefined at tau = 1".into()));
    }
    let e = 1.0 - tau.tau_sq_f64();
    Ok(((e / 2.0).sqrt(), 1.0 / e.sqrt()))
}

/// T([z]) = (√(1−τ²)/√2) z z* with |z|² = 1/(1−τ²).
pub fn tai_embed(tau: &BergerParam, p: &ProjectivePoint) -> Result<HermitianMatrix> {
    let (c, radius) = tai_scale(tau)?;
    let p = if (p.scale() - radius).abs() > 1e-12 * radius { p.rescaled(radius)? } else { p.clone() };
    let z = p.rep();
    Ok(HermitianMatrix::sym_outer(z, z).scaled(c / 2.0))
}

/// dT applied to a tangent vector at `p`, given through any lift; the
/// horizontal part is taken first.
pub fn tai_differential(tau: &BergerParam, p: &ProjectivePoint, v: &[Complex64]) -> Result<HermitianMatrix> {
    let (c, radius) = tai_scale(tau)?;
    if v.len() != p.rep().len() {
        return domain("vector length differs from projective dimension");
    }
    let p = p.rescaled(radius)?;
    let h = horizontal_part(&p, v);
    Ok(HermitianMatrix::sym_outer(&h, p.rep()).scaled(c))
}

/// Centre of the sphere containing the image of CP^n: I / ((n+1)√(2(1−τ²))).
pub fn tai_centre(tau: &BergerParam, n: usize) -> Result<HermitianMatrix> {
    tai_scale(tau)?;
    let e = 1.0 - tau.tau_sq_f64();
    Ok(HermitianMatrix::identity_scaled(n + 1, 1.0 / ((n as f64 + 1.0) * (2.0 * e).sqrt())))
}

/// Squared radius n / ((n+1) 2(1−τ²)).
pub fn tai_radius_sq(tau: &BergerParam, n: usize) -> Result<f64> {
    tai_scale(tau)?;
    let e = 1.0 - tau.tau_sq_f64();
    Ok(n as f64 / ((n as f64 + 1.0) * 2.0 * e))
}

/// ⟨σ̄(x, y), σ̄(v, w)⟩ for the Tai embedding, evaluated from Fubini-Study
/// products of the horizontal parts.
pub fn tai_sff_inner(
    tau: &BergerParam,
    p: &ProjectivePoint,
    x: &[Complex64],
    y: &[Complex64],
    v: &[Complex64],
    w: &[Complex64],
) -> Result<f64> {
    tai_scale(tau)?;
    let dim = p.rep().len();
    if [x, y, v, w].iter().any(|a| a.len() != dim) {
        return domain("vector length differs from projective dimension");
    }
    let [x, y, v, w] = [x, y, v, w].map(|a| horizontal_part(p, a));
    let ip = |a: &[Complex64], b: &[Complex64]| cdot(a, b).re;
    let j = |a: &[Complex64]| a.iter().map(|c| c * Complex64::i()).collect::<Vec<_>>();
    let (jv, jw) = (j(&v), j(&w));
    let e = 1.0 - tau.tau_sq_f64();
    Ok(e * (2.0 * ip(&x, &y) * ip(&v, &w)
        + ip(&x, &w) * ip(&y, &v)
        + ip(&x, &v) * ip(&y, &w)
        + ip(&x, &jw) * ip(&y, &jv)
        + ip(&x, &jv) * ip(&y, &jw)))
}
