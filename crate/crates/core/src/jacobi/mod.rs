//! Jacobi spectra of the model minimal submanifolds and their index/nullity.
//!
//! Eigenvalue convention: Lη + ρη = 0. Index counts ρ < 0, nullity ρ = 0.

mod driver;
mod families;
mod tables;

pub use driver::{enumerate_index, enumerate_with_kmax, tail_bounds, TruncationPolicy};
pub use families::{
    circle_modes, circle_stability, clifford_jacobi_modes, model_modes, tg_berger_modes,
    totally_real_sphere_modes, veronese_modes,
};
pub use tables::{closed_form, Count, TableEntry};

use std::fmt;

use serde::Serialize;

use crate::berger::BergerParam;
use crate::error::{domain, Result};
use crate::exact::{ser_q, ser_surd, Surd, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum ModelSubmanifold {
    /// S^{2m+1}_τ ⊂ S^{2n+1}_τ, fibred over CP^m ⊂ CP^n.
    TotallyGeodesicBergerSphere { n: u32, m: u32 },
    /// Hopf circle covered s times.
    CircleCover { n: u32, s: u32 },
    /// Induced bundle RP³ over the Veronese surface in CP².
    VeroneseRp3,
    /// Its double cover S³.
    VeroneseS3,
    /// Real great sphere S^d ⊂ R^{d+1} ⊂ C^{n+1}.
    TotallyRealSphere { n: u32, d: u32 },
    /// S^{2m1+1}(r1) × S^{2m2+1}(r2) with r_j² = (2m_j+1)/(2n).
    CliffordHypersurface { m1: u32, m2: u32 },
}

impl ModelSubmanifold {
    pub fn validate(&self) -> Result<()> {
        use ModelSubmanifold::*;
        match *self {
            TotallyGeodesicBergerSphere { n, m } if m > n => domain(format!("need m <= n, got m={m}, n={n}")),
            CircleCover { n, s } if n == 0 || s == 0 => domain("circle cover needs n >= 1 and s >= 1"),
            TotallyRealSphere { n, d } if d == 0 || d > n => domain(format!("need 1 <= d <= n, got d={d}, n={n}")),
            _ => Ok(()),
        }
    }

    /// Complex dimension parameter of the ambient S^{2n+1}.
    pub fn ambient_n(&self) -> u32 {
        use ModelSubmanifold::*;
        match *self {
            TotallyGeodesicBergerSphere { n, .. } | CircleCover { n, .. } | TotallyRealSphere { n, .. } => n,
            VeroneseRp3 | VeroneseS3 => 2,
            CliffordHypersurface { m1, m2 } => m1 + m2 + 1,
        }
    }

    /// Dimension of the submanifold.
    pub fn dim(&self) -> u32 {
        use ModelSubmanifold::*;
        match *self {
            TotallyGeodesicBergerSphere { m, .. } => 2 * m + 1,
            CircleCover { .. } => 1,
            VeroneseRp3 | VeroneseS3 => 3,
            TotallyRealSphere { d, .. } => d,
            CliffordHypersurface { m1, m2 } => 2 * (m1 + m2 + 1),
        }
    }

    /// Circle bundles over complex submanifolds, with their order.
    pub fn bundle_order(&self) -> Option<u32> {
        use ModelSubmanifold::*;
        match *self {
            TotallyGeodesicBergerSphere { .. } | VeroneseRp3 => Some(1),
            CircleCover { s, .. } => Some(s),
            VeroneseS3 => Some(2),
            _ => None,
        }
    }

    pub fn slug(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ModelSubmanifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ModelSubmanifold::*;
        match *self {
            TotallyGeodesicBergerSphere { n, m } => write!(f, "tg-berger(n={n},m={m})"),
            CircleCover { n, s } => write!(f, "circle(n={n},s={s})"),
            VeroneseRp3 => write!(f, "veronese-rp3"),
            VeroneseS3 => write!(f, "veronese-s3"),
            TotallyRealSphere { n, d } => write!(f, "totally-real(n={n},d={d})"),
            CliffordHypersurface { m1, m2 } => write!(f, "clifford(m1={m1},m2={m2})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

/// Which piece of the normal spectrum a mode comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeFamily {
    /// complex normal slot of a circle bundle over a complex submanifold
    NormalSlot,
    /// functions along the normal directions orthogonal to J(TS^d) ⊕ ξ
    Transversal,
    /// exact part (dg, f) of the J(TS^d) ⊕ ξ block
    Gradient,
    /// co-exact (or harmonic) 1-forms of the J(TS^d) block
    Coexact,
    /// functions along the unit normal of a hypersurface
    Hypersurface,
    /// Fourier modes of a flat torus
    Fourier,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobiMode {
    pub family: ModeFamily,
    pub labels: Vec<u32>,
    pub branch: Option<Branch>,
    #[serde(serialize_with = "ser_surd")]
    pub value: Surd,
    pub multiplicity: u64,
}

impl JacobiMode {
    pub fn label_string(&self) -> String {
        let mut s = self.labels.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        if let Some(b) = self.branch {
            s.push_str(&format!(",{b}"));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndexReport {
    pub model: ModelSubmanifold,
    #[serde(serialize_with = "ser_q")]
    pub tau_sq: Q,
    pub index: u64,
    pub nullity: u64,
    pub nonpositive_modes: Vec<JacobiMode>,
    pub truncation_k: u32,
    pub certificate: String,
    /// Closed-form table value when one exists.
    pub closed_form: Option<TableEntry>,
    /// Set when the closed form only bounds the index from below.
    pub index_at_least: bool,
    pub nullity_at_least: bool,
}

impl IndexReport {
    pub(crate) fn from_modes(
        model: ModelSubmanifold,
        tau: &BergerParam,
        modes: Vec<JacobiMode>,
        truncation_k: u32,
        certificate: String,
    ) -> Self {
        let mut nonpositive: Vec<JacobiMode> = modes.into_iter().filter(|m| !m.value.is_positive()).collect();
        sort_modes(&mut nonpositive);
        let index = nonpositive.iter().filter(|m| m.value.is_negative()).map(|m| m.multiplicity).sum();
        let nullity = nonpositive.iter().filter(|m| m.value.is_zero()).map(|m| m.multiplicity).sum();
        let closed = closed_form(&model, tau);
        let (index_at_least, nullity_at_least) = match &closed {
            Some(t) => (t.index.is_lower_bound(), t.nullity.is_lower_bound()),
            None => (false, false),
        };
        IndexReport {
            model,
            tau_sq: tau.tau_sq().clone(),
            index,
            nullity,
            nonpositive_modes: nonpositive,
            truncation_k,
            certificate,
            closed_form: closed,
            index_at_least,
            nullity_at_least,
        }
    }

    /// Whether the enumerated counts are consistent with the closed form.
    pub fn agrees_with_closed_form(&self) -> Option<bool> {
        self.closed_form.as_ref().map(|t| t.index.admits(self.index) && t.nullity.admits(self.nullity))
    }
}

/// Order by (value, family, labels, branch).
pub(crate) fn sort_modes(modes: &mut [JacobiMode]) {
    modes.sort_by(|a, b| {
        a.value
            .to_f64()
            .total_cmp(&b.value.to_f64())
            .then(a.family.cmp(&b.family))
            .then(a.labels.cmp(&b.labels))
            .then(a.branch.cmp(&b.branch))
    });
}

/// Exact index and nullity of the totally geodesic S^{2m+1}_τ ⊂ S^{2n+1}_τ.
pub fn tg_berger_index_nullity(n: u32, m: u32, tau: &BergerParam) -> Result<IndexReport> {
    if m >= n {
        return domain(format!("need m < n, got m={m}, n={n}"));
    }
    enumerate_index(&ModelSubmanifold::TotallyGeodesicBergerSphere { n, m }, tau, &TruncationPolicy::default())
}

pub fn circle_index_nullity(n: u32, s: u32, tau: &BergerParam) -> Result<IndexReport> {
    enumerate_index(&ModelSubmanifold::CircleCover { n, s }, tau, &TruncationPolicy::default())
}

pub fn veronese_index_nullity(tau: &BergerParam, quotient: bool) -> Result<IndexReport> {
    let model = if quotient { ModelSubmanifold::VeroneseRp3 } else { ModelSubmanifold::VeroneseS3 };
    enumerate_index(&model, tau, &TruncationPolicy::default())
}

pub fn totally_real_sphere_index_nullity(n: u32, d: u32, tau: &BergerParam) -> Result<IndexReport> {
    enumerate_index(&ModelSubmanifold::TotallyRealSphere { n, d }, tau, &TruncationPolicy::default())
}

pub fn clifford_index_nullity(m1: u32, m2: u32, tau: &BergerParam) -> Result<IndexReport> {
    enumerate_index(&ModelSubmanifold::CliffordHypersurface { m1, m2 }, tau, &TruncationPolicy::default())
}
