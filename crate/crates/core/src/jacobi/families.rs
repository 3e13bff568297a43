//! Mode generators, one per model family.

use num_traits::{One, Zero};

use super::{Branch, JacobiMode, ModeFamily, ModelSubmanifold};
use crate::berger::BergerParam;
use crate::error::{domain, Result};
use crate::exact::{q, qi, Surd, Q};
use crate::spectra::{berger_multiplicity, clifford_eigenvalue, clifford_multiplicity, clifford_n, sphere_harmonic_dim};

fn mode(family: ModeFamily, labels: Vec<u32>, branch: Option<Branch>, value: Surd, multiplicity: u64) -> JacobiMode {
    JacobiMode { family, labels, branch, value, multiplicity }
}

/// Pushes the ± pair built from a Hopf frequency `freq`: one value per sign
/// with multiplicity `dim` when freq > 0, a single value of multiplicity
/// 2·dim when freq = 0 (both signs coincide).
fn push_pair(out: &mut Vec<JacobiMode>, family: ModeFamily, labels: Vec<u32>, freq: u32, dim: u64, value: impl Fn(i64) -> Q) {
    if dim == 0 {
        return;
    }
    if freq == 0 {
        out.push(mode(family, labels, None, value(1).into(), 2 * dim));
    } else {
        out.push(mode(family, labels.clone(), Some(Branch::Plus), value(1).into(), dim));
        out.push(mode(family, labels, Some(Branch::Minus), value(-1).into(), dim));
    }
}

/// ρ = (2m+1+k)(k−1) + ((1−τ²)/τ²)(k−2p±1)² on each of the n−m complex
/// normal slots of S^{2m+1}_τ ⊂ S^{2n+1}_τ.
pub fn tg_berger_modes(n: u32, m: u32, tau: &BergerParam, k_max: u32) -> Result<Vec<JacobiMode>> {
    if m >= n {
        return domain(format!("need m < n, got m={m}, n={n}"));
    }
    let w = tau.fibre_weight();
    let slots = (n - m) as u64;
    let mut out = Vec::new();
    for k in 0..=k_max {
        for p in 0..=k / 2 {
            let freq = k - 2 * p;
            let base = qi((2 * m as i64 + 1 + k as i64) * (k as i64 - 1));
            let dim = berger_multiplicity(m, k, p)? * slots;
            push_pair(&mut out, ModeFamily::NormalSlot, vec![k, p], freq, dim, |s| {
                let f = freq as i64 + s;
                &base + &w * qi(f * f)
            });
        }
    }
    Ok(out)
}

/// ρ±(k) = (k²/s² − 1) + ((1−τ²)/τ²)(k/s ± 1)² on the n complex normal slots
/// of the s-fold Hopf circle.
pub fn circle_modes(n: u32, s: u32, tau: &BergerParam, k_max: u32) -> Result<Vec<JacobiMode>> {
    if n == 0 || s == 0 {
        return domain("circle cover needs n >= 1 and s >= 1");
    }
    let w = tau.fibre_weight();
    let s_q = qi(s as i64);
    let mut out = Vec::new();
    for k in 0..=k_max {
        let kk = qi(k as i64) / &s_q;
        let base = &kk * &kk - Q::one();
        let dim = if k == 0 { 1 } else { 2 } * n as u64;
        push_pair(&mut out, ModeFamily::NormalSlot, vec![k], k, dim, |sg| {
            let f = &kk + qi(sg);
            &base + &w * &f * &f
        });
    }
    Ok(out)
}

/// Stability of the s-fold Hopf circle: τ² ≤ 1/(2s).
pub fn circle_stability(s: u32, tau: &BergerParam) -> bool {
    tau.tau_sq() <= &q(1, 2 * s as i64)
}

/// ρ±(k,p) = ½(1+k(2+k)) + (1/(4τ²))(k−2p±4)² − 8 − ½(k−2p±1)², Laplace
/// data taken from S³; `quotient` keeps only even k.
pub fn veronese_modes(tau: &BergerParam, k_max: u32, quotient: bool) -> Result<Vec<JacobiMode>> {
    let inv4 = Q::one() / (qi(4) * tau.tau_sq());
    let half = q(1, 2);
    let mut out = Vec::new();
    for k in 0..=k_max {
        if quotient && k % 2 == 1 {
            continue;
        }
        for p in 0..=k / 2 {
            let freq = k - 2 * p;
            let base = &half * qi(1 + k as i64 * (2 + k as i64)) - qi(8);
            let dim = berger_multiplicity(1, k, p)?;
            push_pair(&mut out, ModeFamily::NormalSlot, vec![k, p], freq, dim, |sg| {
                let a = freq as i64 + 4 * sg;
                let b = freq as i64 + sg;
                &base + &inv4 * qi(a * a) - &half * qi(b * b)
            });
        }
    }
    Ok(out)
}

fn sphere_eigen(d: u32, k: u32) -> i64 {
    k as i64 * (k as i64 + d as i64 - 1)
}

/// Lower root λ − A − √(A² + 4τ²λ) of the gradient block, A = d+1−2τ².
pub(crate) fn gradient_root(d: u32, tau: &BergerParam, k: u32, branch: Branch) -> Surd {
    let lam = qi(sphere_eigen(d, k));
    let a = qi(d as i64 + 1) - qi(2) * tau.tau_sq();
    let rad = &a * &a + qi(4) * tau.tau_sq() * &lam;
    let sign = match branch {
        Branch::Plus => Q::one(),
        Branch::Minus => -Q::one(),
    };
    Surd::new(lam - a, sign, rad).expect("radicand is positive")
}

/// Normal spectrum of the totally real S^d ⊂ S^{2n+1}_τ, families with k ≤ k_max.
pub fn totally_real_sphere_modes(n: u32, d: u32, tau: &BergerParam, k_max: u32) -> Result<Vec<JacobiMode>> {
    if d == 0 || d > n {
        return domain(format!("need 1 <= d <= n, got d={d}, n={n}"));
    }
    let mut out = Vec::new();
    let transversal = 2 * (n - d) as u64;
    for k in 0..=k_max {
        let mult = sphere_harmonic_dim(d + 1, k);
        if transversal > 0 {
            let v = qi(sphere_eigen(d, k) - d as i64);
            out.push(mode(ModeFamily::Transversal, vec![k], None, v.into(), mult * transversal));
        }
        if k == 0 {
            // (0, a): constant multiple of ξ
            out.push(mode(ModeFamily::Gradient, vec![0], None, Q::zero().into(), 1));
        } else {
            for b in [Branch::Plus, Branch::Minus] {
                out.push(mode(ModeFamily::Gradient, vec![k], Some(b), gradient_root(d, tau, k, b), mult));
            }
        }
    }
    if k_max >= 1 {
        // Killing fields of S^d (harmonic 1-form when d = 1)
        let v = -(qi(4) * (Q::one() - tau.tau_sq()));
        out.push(mode(ModeFamily::Coexact, vec![1], None, v.into(), (d * (d + 1) / 2) as u64));
    }
    Ok(out)
}

/// L = Δ + 4n on functions of the Clifford hypersurface, k1 + k2 ≤ k_max.
pub fn clifford_jacobi_modes(m1: u32, m2: u32, tau: &BergerParam, k_max: u32) -> Result<Vec<JacobiMode>> {
    let shift = qi(4 * clifford_n(m1, m2) as i64);
    let mut out = Vec::new();
    for total in 0..=k_max {
        for k1 in (0..=total).rev() {
            let k2 = total - k1;
            for p in 0..=total / 2 {
                let mult = clifford_multiplicity(m1, m2, k1, k2, p)?;
                if mult == 0 {
                    continue;
                }
                let v = clifford_eigenvalue(m1, m2, tau, k1, k2, p)? - &shift;
                out.push(mode(ModeFamily::Hypersurface, vec![k1, k2, p], None, v.into(), mult));
            }
        }
    }
    Ok(out)
}

/// Dispatch to the family generator.
pub fn model_modes(model: &ModelSubmanifold, tau: &BergerParam, k_max: u32) -> Result<Vec<JacobiMode>> {
    use ModelSubmanifold::*;
    model.validate()?;
    let mut modes = match *model {
        TotallyGeodesicBergerSphere { n, m } => tg_berger_modes(n, m, tau, k_max)?,
        CircleCover { n, s } => circle_modes(n, s, tau, k_max)?,
        VeroneseRp3 => veronese_modes(tau, k_max, true)?,
        VeroneseS3 => veronese_modes(tau, k_max, false)?,
        TotallyRealSphere { n, d } => totally_real_sphere_modes(n, d, tau, k_max)?,
        CliffordHypersurface { m1, m2 } => clifford_jacobi_modes(m1, m2, tau, k_max)?,
    };
    modes.retain(|m| m.multiplicity > 0);
    Ok(modes)
}
