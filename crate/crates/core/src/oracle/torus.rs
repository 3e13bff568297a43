//! Flat Clifford torus: dual-lattice spectrum of Δ + V.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_traits::One;
use serde::Serialize;

use crate::berger::BergerParam;
use crate::error::{domain, Result};
use crate::exact::{from_f64, qi, Q};
use crate::jacobi::{IndexReport, JacobiMode, ModeFamily, ModelSubmanifold};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeSpec {
    pub generators: [[f64; 2]; 2],
    pub description: String,
}

/// Λ_τ generated by π(τ, 1) and π(τ, −1), in the covering coordinates of
/// the flat Clifford torus in S³_τ.
pub fn clifford_lattice(tau: &BergerParam) -> LatticeSpec {
    let t = tau.tau();
    LatticeSpec {
        generators: [[PI * t, PI], [PI * t, -PI]],
        description: "pi*(tau, 1), pi*(tau, -1); covering coordinates of the Clifford torus".into(),
    }
}

/// Gram matrix of the generators divided by π², exact in τ².
fn gram_over_pi_sq(tau: &BergerParam) -> [[Q; 2]; 2] {
    let t2 = tau.tau_sq().clone();
    let one = Q::one();
    // (τ,1)·(τ,1), (τ,1)·(τ,−1), (τ,−1)·(τ,−1)
    [[&t2 + &one, &t2 - &one], [&t2 - &one, &t2 + &one]]
}

fn inverse(g: &[[Q; 2]; 2]) -> [[Q; 2]; 2] {
    let det = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
    [
        [&g[1][1] / &det, -(&g[0][1] / &det)],
        [-(&g[1][0] / &det), &g[0][0] / &det],
    ]
}

/// Smallest singular value of a 2×2 matrix.
fn min_singular(m: [[f64; 2]; 2]) -> f64 {
    let a = m[0][0] * m[0][0] + m[0][1] * m[0][1];
    let d = m[1][0] * m[1][0] + m[1][1] * m[1][1];
    let b = m[0][0] * m[1][0] + m[0][1] * m[1][1];
    let tr = a + d;
    let disc = ((a - d) * (a - d) + 4.0 * b * b).sqrt();
    ((tr - disc) / 2.0).max(0.0).sqrt()
}

/// Dual basis: rows b*_i with b*_i · b_j = δ_ij.
fn dual_basis(g: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    [[g[1][1] / det, -g[1][0] / det], [-g[0][1] / det, g[0][0] / det]]
}

/// Index and nullity of L = Δ + V on R²/Λ_τ. Laplace eigenvalues are
/// 4π²|γ*|² = 4 kᵀ(G/π²)⁻¹k for dual-lattice points γ* with coefficients k,
/// computed exactly; ρ = 4π²|γ*|² − V.
pub fn torus_fourier_index(tau: &BergerParam, potential: f64) -> Result<IndexReport> {
    if !potential.is_finite() {
        return domain("potential must be finite");
    }
    let v = from_f64(potential).expect("finite");
    let lattice = clifford_lattice(tau);
    let sigma = min_singular(dual_basis(lattice.generators));
    let bound = potential.max(0.0).sqrt() / (2.0 * PI * sigma);
    let radius = bound.ceil() as i64 + 1;
    let ginv = inverse(&gram_over_pi_sq(tau));
    let mut shells: BTreeMap<Q, u64> = BTreeMap::new();
    for k1 in -radius..=radius {
        for k2 in -radius..=radius {
            let (a, b) = (qi(k1), qi(k2));
            let quad = &ginv[0][0] * &a * &a + &ginv[0][1] * &a * &b * qi(2) + &ginv[1][1] * &b * &b;
            let mu = quad * qi(4);
            if mu <= v {
                *shells.entry(mu).or_default() += 1;
            }
        }
    }
    let modes: Vec<JacobiMode> = shells
        .into_iter()
        .enumerate()
        .map(|(i, (mu, mult))| JacobiMode {
            family: ModeFamily::Fourier,
            labels: vec![i as u32],
            branch: None,
            value: (mu - &v).into(),
            multiplicity: mult,
        })
        .collect();
    let certificate = format!(
        "dual-lattice box |k_i| <= {radius}: |gamma*| >= sigma_min |k| with sigma_min = {sigma:.12}, \
         so rho <= 0 forces |k| <= sqrt(V)/(2 pi sigma_min) = {bound:.12}"
    );
    let mut report = IndexReport::from_modes(
        ModelSubmanifold::CliffordHypersurface { m1: 0, m2: 0 },
        tau,
        modes,
        radius as u32,
        certificate,
    );
    if v != qi(4) {
        report.closed_form = None;
        report.index_at_least = false;
        report.nullity_at_least = false;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(num: i64, den: i64) -> BergerParam {
        BergerParam::from_ratio(num, den).unwrap()
    }

    #[test]
    fn fourier_examples() {
        let r = torus_fourier_index(&t(1, 3), 4.0).unwrap();
        assert_eq!((r.index, r.nullity), (1, 6));
        assert_eq!(torus_fourier_index(&t(1, 2), 4.0).unwrap().index, 5);
        let r = torus_fourier_index(&t(1, 2), 0.0).unwrap();
        assert_eq!((r.index, r.nullity), (0, 1));
    }

    #[test]
    fn lattice_is_independent() {
        let l = clifford_lattice(&t(1, 5));
        let [a, b] = l.generators;
        assert!((a[0] * b[1] - a[1] * b[0]).abs() > 1e-9);
    }
}
