//! Brute-force harmonic polynomial counts and the (L_ξ)² spectrum.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{kernel, rank};
use crate::berger::BergerParam;
use crate::error::{Error, Result};
use crate::exact::{qi, Q};
use crate::spectra::sphere_harmonic_dim;

/// Largest total degree the brute-force counts accept.
pub const DEGREE_CAP: u32 = 8;

/// Exponent vectors with `parts` entries summing to `total`.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// dim of harmonic polynomials z^α z̄^β, |α| = a, |β| = b, on C^{n+1}: the
/// kernel of 4Σ∂_{z_j}∂_{z̄_j} on monomials, split by the weight α − β.
pub fn harmonic_dim_bruteforce(n: u32, a: u32, b: u32) -> Result<u64> {
    if a + b > DEGREE_CAP {
        return Err(Error::CapExceeded { what: "bidegree a+b", value: (a + b) as usize, cap: DEGREE_CAP as usize });
    }
    let vars = n as usize + 1;
    let mut blocks: BTreeMap<Vec<i64>, Vec<(Vec<u32>, Vec<u32>)>> = BTreeMap::new();
    for al in compositions(a, vars) {
        for be in compositions(b, vars) {
            let w = al.iter().zip(&be).map(|(x, y)| *x as i64 - *y as i64).collect();
            blocks.entry(w).or_default().push((al.clone(), be));
        }
    }
    let mut dim = 0u64;
    for (_, cols) in blocks {
        // image monomials of this block
        let mut row_of: HashMap<(Vec<u32>, Vec<u32>), usize> = HashMap::new();
        let mut entries = Vec::new();
        for (c, (al, be)) in cols.iter().enumerate() {
            for j in 0..vars {
                if al[j] > 0 && be[j] > 0 {
                    let (mut a2, mut b2) = (al.clone(), be.clone());
                    a2[j] -= 1;
                    b2[j] -= 1;
                    let next = row_of.len();
                    let r = *row_of.entry((a2, b2)).or_insert(next);
                    entries.push((r, c, 4 * al[j] as i64 * be[j] as i64));
                }
            }
        }
        let mut m = vec![vec![BigInt::zero(); cols.len()]; row_of.len()];
        for (r, c, v) in entries {
            m[r][c] += v;
        }
        dim += (cols.len() - rank(&m)) as u64;
    }
    Ok(dim)
}

/// Real polynomial space of degree k on R^{2n+2} (coordinates x_0, y_0, x_1, y_1, ...).
struct RealPolys {
    vars: usize,
    basis: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl RealPolys {
    fn new(vars: usize, k: u32) -> Self {
        let basis = compositions(k, vars);
        let index = basis.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        RealPolys { vars, basis, index }
    }
}

/// Matrix of τL_ξ = Σ_j (x_j ∂_{y_j} − y_j ∂_{x_j}) restricted to `cols`.
fn rotation_block(cols: &[usize], space: &RealPolys) -> Vec<Vec<BigInt>> {
    let local: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut m = vec![vec![BigInt::zero(); cols.len()]; cols.len()];
    for (ci, &c) in cols.iter().enumerate() {
        let e = &space.basis[c];
        for j in 0..space.vars / 2 {
            let (x, y) = (2 * j, 2 * j + 1);
            if e[y] > 0 {
                let mut f = e.clone();
                f[y] -= 1;
                f[x] += 1;
                m[local[&space.index[&f]]][ci] += e[y] as i64;
            }
            if e[x] > 0 {
                let mut f = e.clone();
                f[x] -= 1;
                f[y] += 1;
                m[local[&space.index[&f]]][ci] -= e[x] as i64;
            }
        }
    }
    m
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum())
                .collect()
        })
        .collect()
}

/// Euclidean Laplacian of a polynomial given on `space`, as a vector on `target`.
fn laplacian(v: &[BigInt], space: &RealPolys, target: &RealPolys) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); target.basis.len()];
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = &space.basis[i];
        for j in 0..space.vars {
            if e[j] >= 2 {
                let mut f = e.clone();
                f[j] -= 2;
                out[target.index[&f]] += c * (e[j] as i64 * (e[j] as i64 - 1));
            }
        }
    }
    out
}

/// Eigenvalues of (L_ξ)² on degree-k harmonics of S^{2n+1}_τ with
/// multiplicities, from real-coordinate linear algebra. Eigenvalues are
/// searched among −q²/τ², q = 0..=k, and must exhaust the space.
pub fn lxi_squared_spectrum(n: u32, tau: &BergerParam, k: u32) -> Result<Vec<(Q, u64)>> {
    if k > DEGREE_CAP {
        return Err(Error::CapExceeded { what: "degree k", value: k as usize, cap: DEGREE_CAP as usize });
    }
    let vars = 2 * n as usize + 2;
    let space = RealPolys::new(vars, k);
    let lower = RealPolys::new(vars, k.saturating_sub(2));
    // τL_ξ keeps the degree in each (x_j, y_j) pair
    let mut blocks: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, e) in space.basis.iter().enumerate() {
        let profile = e.chunks(2).map(|p| p[0] + p[1]).collect();
        blocks.entry(profile).or_default().push(i);
    }
    let squares: Vec<(Vec<usize>, Vec<Vec<BigInt>>)> = blocks
        .into_values()
        .map(|cols| {
            let r = rotation_block(&cols, &space);
            let sq = mat_mul(&r, &r);
            (cols, sq)
        })
        .collect();
    let mut out = Vec::new();
    let mut total = 0u64;
    for q in 0..=k {
        let shift = BigInt::from(q as i64 * q as i64);
        let mut images = Vec::new();
        let mut kernel_dim = 0usize;
        for (cols, sq) in &squares {
            let mut m = sq.clone();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &shift;
            }
            for v in kernel(&m, cols.len()) {
                let mut full = vec![BigInt::zero(); space.basis.len()];
                for (local, &c) in cols.iter().enumerate() {
                    full[c] = v[local].clone();
                }
                images.push(laplacian(&full, &space, &lower));
                kernel_dim += 1;
            }
        }
        let harmonic = if k < 2 { kernel_dim } else { kernel_dim - rank(&images) };
        if harmonic > 0 {
            out.push((-qi(q as i64 * q as i64) / tau.tau_sq(), harmonic as u64));
            total += harmonic as u64;
        }
    }
    let expected = sphere_harmonic_dim(vars as u32, k);
    if total != expected {
        return Err(Error::Domain(format!(
            "(L_xi)^2 eigenspaces cover {total} of {expected} dimensions at k={k}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::bidegree_dimension;

    #[test]
    fn bruteforce_examples() {
        assert_eq!(harmonic_dim_bruteforce(0, 0, 0).unwrap(), 1);
        assert_eq!(harmonic_dim_bruteforce(1, 2, 0).unwrap(), 3);
        assert_eq!(harmonic_dim_bruteforce(1, 1, 1).unwrap(), 3);
        assert_eq!(harmonic_dim_bruteforce(2, 2, 2).unwrap(), bidegree_dimension(2, 2, 2));
        assert!(matches!(harmonic_dim_bruteforce(1, 5, 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn lxi_examples() {
        let tau = BergerParam::from_ratio(1, 3).unwrap();
        assert_eq!(lxi_squared_spectrum(1, &tau, 0).unwrap(), vec![(qi(0), 1)]);
        assert_eq!(lxi_squared_spectrum(1, &tau, 1).unwrap(), vec![(qi(-3), 4)]);
        assert_eq!(lxi_squared_spectrum(1, &tau, 2).unwrap(), vec![(qi(0), 3), (qi(-12), 6)]);
    }
}
