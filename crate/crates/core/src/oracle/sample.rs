//! Random points and vectors for the sampling checks.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::berger::{inner, AmbientPoint, TangentVector};

pub(crate) fn gaussian<R: Rng>(rng: &mut R, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.sample(StandardNormal)).collect()
}

/// Uniform point on S^{2n+1}.
pub(crate) fn point<R: Rng>(rng: &mut R, n: usize) -> AmbientPoint {
    AmbientPoint::normalized(gaussian(rng, 2 * n + 2)).expect("gaussian sample is nonzero")
}

/// Random tangent vector at `z` with unit Euclidean length.
pub(crate) fn tangent<R: Rng>(rng: &mut R, z: &AmbientPoint) -> TangentVector {
    let v = TangentVector::project(z, &gaussian(rng, z.coords().len())).expect("matching length");
    let nrm = v.comps().iter().map(|c| c * c).sum::<f64>().sqrt();
    v.scaled(1.0 / nrm)
}

pub(crate) fn complex<R: Rng>(rng: &mut R, len: usize) -> Vec<Complex64> {
    (0..len).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect()
}

/// Gram-Schmidt in the Berger metric at `z`.
pub(crate) fn orthonormalize(tau: f64, z: &[f64], vecs: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for v in vecs {
        let mut w = v.clone();
        for u in &out {
            let g = inner(tau, z, &w, u);
            w.iter_mut().zip(u).for_each(|(a, b)| *a -= g * b);
        }
        let nrm = inner(tau, z, &w, &w).sqrt();
        w.iter_mut().for_each(|a| *a /= nrm);
        out.push(w);
    }
    out
}
