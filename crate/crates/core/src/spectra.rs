//! Laplace spectra on Berger spheres and on Clifford product hypersurfaces.
//!
//! Eigenvalue convention: Δf + μf = 0, so spectra are nonnegative.

use serde::Serialize;

use crate::berger::BergerParam;
use crate::error::{domain, Result};
use crate::exact::{binom, qi, ser_q, Q};

/// μ_{k,p} with its multiplicity (zero allowed).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaplaceMode {
    pub k: u32,
    pub p: u32,
    #[serde(serialize_with = "ser_q")]
    pub value: Q,
    pub multiplicity: u64,
}

/// Harmonic polynomials of bidegree (a, b) on C^{n+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BidegreeSpace {
    pub a: u32,
    pub b: u32,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliffordMode {
    pub k1: u32,
    pub k2: u32,
    pub p: u32,
    #[serde(serialize_with = "ser_q")]
    pub value: Q,
    pub multiplicity: u64,
}

/// Degree-k spherical harmonics on S^{dim-1} ⊂ R^dim.
pub fn sphere_harmonic_dim(dim: u32, k: u32) -> u64 {
    let (d, k) = (dim as i64, k as i64);
    binom(k + d - 1, d - 1) - binom(k + d - 3, d - 1)
}

/// λ_k = k(2n + k) on the round S^{2n+1}.
pub fn round_eigenvalue(n: u32, k: u32) -> u64 {
    k as u64 * (2 * n as u64 + k as u64)
}

pub fn round_multiplicity(n: u32, k: u32) -> u64 {
    sphere_harmonic_dim(2 * n + 2, k)
}

fn check_p(k: u32, p: u32) -> Result<()> {
    if p > k / 2 {
        return domain(format!("p = {p} outside 0..={}", k / 2));
    }
    Ok(())
}

/// μ_{k,p} = k(2n+k) + ((1−τ²)/τ²)(k−2p)².
pub fn berger_eigenvalue(n: u32, tau: &BergerParam, k: u32, p: u32) -> Result<Q> {
    check_p(k, p)?;
    let f = (k - 2 * p) as i64;
    Ok(qi(round_eigenvalue(n, k) as i64) + tau.fibre_weight() * qi(f * f))
}

/// dim of harmonic polynomials of bidegree (a, b) on C^{n+1}:
/// all bihomogeneous polynomials minus the image of multiplication by |z|².
pub fn bidegree_dimension(n: u32, a: u32, b: u32) -> u64 {
    let (n, a, b) = (n as i64, a as i64, b as i64);
    let full = |a: i64, b: i64| binom(a + n, n) * binom(b + n, n);
    if a == 0 || b == 0 {
        full(a, b)
    } else {
        full(a, b) - full(a - 1, b - 1)
    }
}

pub fn bidegree_space(n: u32, a: u32, b: u32) -> BidegreeSpace {
    BidegreeSpace { a, b, dim: bidegree_dimension(n, a, b) }
}

/// dim V(μ_{k,p}): bidegrees (k−p, p) and (p, k−p).
pub fn berger_multiplicity(n: u32, k: u32, p: u32) -> Result<u64> {
    check_p(k, p)?;
    let m = if 2 * p == k {
        bidegree_dimension(n, p, p)
    } else {
        bidegree_dimension(n, k - p, p) + bidegree_dimension(n, p, k - p)
    };
    debug_assert!(!always_nontrivial(n, k, p) || m > 0);
    Ok(m)
}

/// Eigenspaces known to be nonzero for every n ≥ 1 (and only p = 0 for n = 0).
pub fn always_nontrivial(n: u32, k: u32, p: u32) -> bool {
    if n == 0 {
        return p == 0;
    }
    if p == 0 {
        return true;
    }
    if k % 2 == 0 {
        2 * p == k || 2 * p + 2 == k
    } else {
        2 * p + 1 == k
    }
}

/// All μ_{k,p} for k ≤ k_max in (k, p) order.
pub fn berger_modes(n: u32, tau: &BergerParam, k_max: u32) -> Vec<LaplaceMode> {
    let mut out = Vec::new();
    for k in 0..=k_max {
        for p in 0..=k / 2 {
            out.push(LaplaceMode {
                k,
                p,
                value: berger_eigenvalue(n, tau, k, p).expect("p in range"),
                multiplicity: berger_multiplicity(n, k, p).expect("p in range"),
            });
        }
    }
    out
}

/// Same modes ordered by (value, k, p).
pub fn berger_modes_by_value(n: u32, tau: &BergerParam, k_max: u32) -> Vec<LaplaceMode> {
    let mut modes = berger_modes(n, tau, k_max);
    modes.sort_by(|a, b| a.value.cmp(&b.value).then(a.k.cmp(&b.k)).then(a.p.cmp(&b.p)));
    modes
}

/// Real dimension n = m1 + m2 + 1 of the ambient Berger sphere S^{2n+1}.
pub fn clifford_n(m1: u32, m2: u32) -> u32 {
    m1 + m2 + 1
}

pub fn clifford_eigenvalue(m1: u32, m2: u32, tau: &BergerParam, k1: u32, k2: u32, p: u32) -> Result<Q> {
    check_p(k1 + k2, p)?;
    let n = clifford_n(m1, m2) as i64;
    let part = |m: u32, k: u32| {
        let (m, k) = (m as i64, k as i64);
        Q::new((k * (2 * m + k)).into(), (2 * m + 1).into())
    };
    let f = (k1 + k2 - 2 * p) as i64;
    Ok(qi(2 * n) * (part(m1, k1) + part(m2, k2)) + tau.fibre_weight() * qi(f * f))
}

/// Multiplicity of μ_{k1,k2,p}: products of bidegree spaces on the two factors
/// whose total Hopf frequency |a1 + a2 − b1 − b2| equals k1 + k2 − 2p.
pub fn clifford_multiplicity(m1: u32, m2: u32, k1: u32, k2: u32, p: u32) -> Result<u64> {
    check_p(k1 + k2, p)?;
    let freq = (k1 + k2 - 2 * p) as i64;
    let mut total = 0;
    for a1 in 0..=k1 {
        for a2 in 0..=k2 {
            let (b1, b2) = (k1 - a1, k2 - a2);
            if (a1 as i64 + a2 as i64 - b1 as i64 - b2 as i64).abs() == freq {
                total += bidegree_dimension(m1, a1, b1) * bidegree_dimension(m2, a2, b2);
            }
        }
    }
    Ok(total)
}

/// All μ_{k1,k2,p} with k1 + k2 ≤ k_max, ordered by (k1 + k2, k1, p).
pub fn clifford_modes(m1: u32, m2: u32, tau: &BergerParam, k_max: u32) -> Vec<CliffordMode> {
    let mut out = Vec::new();
    for total in 0..=k_max {
        for k1 in (0..=total).rev() {
            let k2 = total - k1;
            for p in 0..=total / 2 {
                out.push(CliffordMode {
                    k1,
                    k2,
                    p,
                    value: clifford_eigenvalue(m1, m2, tau, k1, k2, p).expect("p in range"),
                    multiplicity: clifford_multiplicity(m1, m2, k1, k2, p).expect("p in range"),
                });
            }
        }
    }
    out
}

/// μ_{0,0,0}, μ_{1,0,0}, μ_{0,1,0}, μ_{1,1,1}.
pub fn clifford_low_modes(m1: u32, m2: u32, tau: &BergerParam) -> Vec<CliffordMode> {
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 1)]
        .into_iter()
        .map(|(k1, k2, p)| CliffordMode {
            k1,
            k2,
            p,
            value: clifford_eigenvalue(m1, m2, tau, k1, k2, p).expect("p in range"),
            multiplicity: clifford_multiplicity(m1, m2, k1, k2, p).expect("p in range"),
        })
        .collect()
}

/// Eigenvalue of (L_ξ)² on the (k, p) block: −(k−2p)²/τ².
pub fn lxi_squared_eigenvalue(tau: &BergerParam, k: u32, p: u32) -> Result<Q> {
    check_p(k, p)?;
    let f = (k - 2 * p) as i64;
    Ok(-qi(f * f) / tau.tau_sq())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn t(num: i64, den: i64) -> BergerParam {
        BergerParam::from_ratio(num, den).unwrap()
    }

    #[test]
    fn round_values() {
        assert_eq!((round_eigenvalue(1, 1), round_multiplicity(1, 1)), (3, 4));
        assert_eq!((round_eigenvalue(1, 0), round_multiplicity(1, 0)), (0, 1));
        assert_eq!((round_eigenvalue(1, 2), round_multiplicity(1, 2)), (8, 9));
        // S^1 and S^2
        assert_eq!(sphere_harmonic_dim(2, 3), 2);
        assert_eq!(sphere_harmonic_dim(3, 2), 5);
    }

    #[test]
    fn tanno_values() {
        let tau = t(1, 3);
        assert_eq!(berger_eigenvalue(1, &tau, 1, 0).unwrap(), qi(5));
        assert_eq!(berger_eigenvalue(1, &tau, 2, 0).unwrap(), qi(16));
        assert_eq!(berger_eigenvalue(1, &tau, 2, 1).unwrap(), qi(8));
        assert!(berger_eigenvalue(1, &tau, 2, 2).is_err());
        assert_eq!(berger_eigenvalue(3, &t(2, 7), 4, 2).unwrap(), qi(4 * 10));
    }

    #[test]
    fn bidegree_values() {
        assert_eq!(bidegree_dimension(1, 0, 0), 1);
        assert_eq!(bidegree_dimension(1, 1, 1), 3);
        assert_eq!(bidegree_dimension(1, 2, 0), 3);
        let s: u64 = (0..=2).map(|a| bidegree_dimension(1, a, 2 - a)).sum();
        assert_eq!(s, 9);
        assert_eq!(berger_multiplicity(1, 2, 1).unwrap(), 3);
        assert_eq!(berger_multiplicity(0, 3, 0).unwrap(), 2);
        assert_eq!(berger_multiplicity(0, 2, 1).unwrap(), 0);
    }

    #[test]
    fn clifford_values() {
        let tau = t(1, 3);
        let low = clifford_low_modes(0, 0, &tau);
        assert_eq!(low[0].value, qi(0));
        assert_eq!(low[1].value, qi(2) + q(2, 1));
        assert_eq!(low.iter().map(|m| m.multiplicity).collect::<Vec<_>>(), vec![1, 2, 2, 2]);
        let low = clifford_low_modes(1, 2, &t(1, 2));
        assert_eq!(low.iter().map(|m| m.multiplicity).collect::<Vec<_>>(), vec![1, 4, 6, 12]);
        assert_eq!(low[3].value, qi(16));
    }

    #[test]
    fn spectrum_example_rows() {
        let rows: Vec<_> = berger_modes(1, &t(1, 3), 2)
            .into_iter()
            .map(|m| (m.k, m.p, m.value, m.multiplicity))
            .collect();
        assert_eq!(
            rows,
            vec![(0, 0, qi(0), 1), (1, 0, qi(5), 4), (2, 0, qi(16), 6), (2, 1, qi(8), 3)]
        );
        let sorted = berger_modes_by_value(1, &t(1, 3), 2);
        assert_eq!(sorted.iter().map(|m| (m.k, m.p)).collect::<Vec<_>>(), vec![(0, 0), (1, 0), (2, 1), (2, 0)]);
    }
}
