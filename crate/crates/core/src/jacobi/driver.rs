//! Generic index driver with a certified truncation.

use num_traits::One;

use super::families::{gradient_root, model_modes};
use super::{Branch, IndexReport, ModelSubmanifold};
use crate::berger::BergerParam;
use crate::error::{Error, Result};
use crate::exact::{q, qi, Surd, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationPolicy {
    /// Largest k_max tried before giving up.
    pub max_k: u32,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { max_k: 64 }
    }
}

/// Lower bounds, one per mode family, valid for every mode with label > k_max.
/// Each is monotone in k so it is attained at k_max + 1.
pub fn tail_bounds(model: &ModelSubmanifold, tau: &BergerParam, k_max: u32) -> Vec<(String, Surd)> {
    use ModelSubmanifold::*;
    let k1 = k_max as i64 + 1;
    match *model {
        TotallyGeodesicBergerSphere { m, .. } => {
            // (2m+1+k)(k−1) plus a nonnegative fibre term
            let b = qi((2 * m as i64 + 1 + k1) * (k1 - 1));
            vec![("slot: (2m+1+k)(k-1)".into(), b.into())]
        }
        CircleCover { s, .. } => {
            let b = q(k1 * k1, (s * s) as i64) - Q::one();
            vec![("slot: k^2/s^2 - 1".into(), b.into())]
        }
        VeroneseRp3 | VeroneseS3 => {
            // ρ ≥ 2k − 8 for every k ≥ 1
            vec![("slot: 2k - 8".into(), qi(2 * k1 - 8).into())]
        }
        TotallyRealSphere { n, d } => {
            let mut out = Vec::new();
            if n > d {
                let b = qi(k1 * (k1 + d as i64 - 1) - d as i64);
                out.push(("transversal: k(k+d-1) - d".into(), b.into()));
            }
            // the lower root is increasing in λ, the upper root exceeds it
            out.push(("gradient: lower root at lambda_k".into(), gradient_root(d, tau, k1 as u32, Branch::Minus)));
            out
        }
        CliffordHypersurface { m1, m2 } => {
            let n = (m1 + m2 + 1) as i64;
            let b = qi(2 * n * k1 - 4 * n);
            vec![("hypersurface: 2n(k1+k2) - 4n".into(), b.into())]
        }
    }
}

fn certificate(model: &ModelSubmanifold, tau: &BergerParam, k_max: u32) -> Result<String> {
    let bounds = tail_bounds(model, tau, k_max);
    if let Some((name, v)) = bounds.iter().find(|(_, v)| !v.is_positive()) {
        return Err(Error::Truncation {
            limit: k_max,
            detail: format!("{model}: tail bound `{name}` = {v} is not positive at k = {}", k_max + 1),
        });
    }
    let parts: Vec<String> = bounds.iter().map(|(name, v)| format!("{name} >= {v} > 0")).collect();
    let mut text = format!("all modes with k > {k_max}: {}", parts.join("; "));
    if matches!(model, ModelSubmanifold::TotallyRealSphere { .. }) {
        text.push_str("; coexact modes beyond the Killing fields are >= d - 2 + 4tau^2 > 0");
    }
    Ok(text)
}

/// Smallest k_max whose tail bounds are all positive, then an exact count.
pub fn enumerate_index(model: &ModelSubmanifold, tau: &BergerParam, policy: &TruncationPolicy) -> Result<IndexReport> {
    model.validate()?;
    if let ModelSubmanifold::TotallyGeodesicBergerSphere { n, m } = *model {
        if m >= n {
            return Err(Error::Domain(format!("need m < n, got m={m}, n={n}")));
        }
    }
    let k = (0..=policy.max_k)
        .find(|&k| tail_bounds(model, tau, k).iter().all(|(_, v)| v.is_positive()))
        .ok_or_else(|| Error::Truncation {
            limit: policy.max_k,
            detail: format!("{model}: no positive tail bound for k_max <= {}", policy.max_k),
        })?;
    enumerate_with_kmax(model, tau, k)
}

/// Exact count at a caller-chosen k_max; fails unless the tail is certified.
pub fn enumerate_with_kmax(model: &ModelSubmanifold, tau: &BergerParam, k_max: u32) -> Result<IndexReport> {
    model.validate()?;
    let cert = certificate(model, tau, k_max)?;
    let modes = model_modes(model, tau, k_max)?;
    Ok(IndexReport::from_modes(*model, tau, modes, k_max, cert))
}
