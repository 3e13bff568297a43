//! Berger metric on S^{2n+1} ⊂ C^{n+1} in real coordinates.
//!
//! Coordinates are ordered `(Re z_1, Im z_1, Re z_2, Im z_2, ...)` and the
//! complex structure acts as `i(x + iy) = -y + ix` on each pair.

mod curvature;
mod projective;
mod tai;

pub use curvature::{curvature_tensor, ricci, scalar_curvature, sectional_curvature};
pub use projective::{
    ambient_mean_curvature, fubini_study, geodesic_sphere_embed, geodesic_sphere_normal,
    horizontal_part, sff_geodesic_sphere, ProjectivePoint,
};
pub use tai::{tai_centre, tai_differential, tai_embed, tai_radius_sq, tai_sff_inner, HermitianMatrix};

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exact::{fmt_q, ser_q, to_f64, Q};

const POINT_TOL: f64 = 1e-12;
const TANGENT_TOL: f64 = 1e-10;

/// Deformation parameter: exact τ² in (0, 1] with a float view of τ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BergerParam {
    #[serde(serialize_with = "ser_q")]
    tau_sq: Q,
    tau: f64,
}

impl BergerParam {
    pub fn new(tau_sq: Q) -> Result<Self> {
        if !tau_sq.is_positive() || tau_sq > Q::one() {
            return Err(Error::Domain(format!("tau^2 = {} not in (0, 1]", fmt_q(&tau_sq))));
        }
        let tau = to_f64(&tau_sq).sqrt();
        Ok(BergerParam { tau_sq, tau })
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return domain("zero denominator");
        }
        Self::new(crate::exact::q(num, den))
    }

    pub fn tau_sq(&self) -> &Q {
        &self.tau_sq
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn tau_sq_f64(&self) -> f64 {
        to_f64(&self.tau_sq)
    }

    /// `(1 - τ²)/τ²`, the Hopf-fibre weight in the Tanno spectrum.
    pub fn fibre_weight(&self) -> Q {
        (Q::one() - &self.tau_sq) / &self.tau_sq
    }

    pub fn is_round(&self) -> bool {
        self.tau_sq.is_one()
    }
}

/// Point of the unit sphere S^{2n+1}.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AmbientPoint {
    coords: Vec<f64>,
}

impl AmbientPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        check_len(coords.len())?;
        let nrm = dot(&coords, &coords).sqrt();
        if (nrm - 1.0).abs() > POINT_TOL {
            return domain(format!("point has norm {nrm}, expected 1"));
        }
        Ok(AmbientPoint { coords })
    }

    /// Rescales a nonzero vector onto the sphere.
    pub fn normalized(mut coords: Vec<f64>) -> Result<Self> {
        check_len(coords.len())?;
        let nrm = dot(&coords, &coords).sqrt();
        if !(nrm > 0.0) || !nrm.is_finite() {
            return domain("cannot normalize a zero or non-finite vector");
        }
        coords.iter_mut().for_each(|c| *c /= nrm);
        Ok(AmbientPoint { coords })
    }

    /// First basis point `(1, 0, ..., 0)` of S^{2n+1}.
    pub fn north(n: usize) -> Self {
        let mut coords = vec![0.0; 2 * (n + 1)];
        coords[0] = 1.0;
        AmbientPoint { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Complex dimension minus one: the point lives on S^{2n+1}.
    pub fn n(&self) -> usize {
        self.coords.len() / 2 - 1
    }
}

/// Tangent vector to the sphere at `base`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TangentVector {
    base: AmbientPoint,
    comps: Vec<f64>,
}

impl TangentVector {
    pub fn new(base: &AmbientPoint, comps: Vec<f64>) -> Result<Self> {
        if comps.len() != base.coords.len() {
            return domain("tangent vector length differs from base point");
        }
        let g = dot(&comps, &base.coords);
        if g.abs() > TANGENT_TOL * (1.0 + norm(&comps)) {
            return domain(format!("vector not tangent: g(v, z) = {g}"));
        }
        Ok(TangentVector { base: base.clone(), comps })
    }

    /// Euclidean projection of an arbitrary vector onto the tangent space.
    pub fn project(base: &AmbientPoint, raw: &[f64]) -> Result<Self> {
        if raw.len() != base.coords.len() {
            return domain("vector length differs from base point");
        }
        let comps = project_tangent(&base.coords, raw);
        Ok(TangentVector { base: base.clone(), comps })
    }

    pub fn base(&self) -> &AmbientPoint {
        &self.base
    }

    pub fn comps(&self) -> &[f64] {
        &self.comps
    }

    pub fn scaled(&self, s: f64) -> Self {
        TangentVector { base: self.base.clone(), comps: self.comps.iter().map(|c| c * s).collect() }
    }

    pub fn plus(&self, other: &TangentVector) -> Result<Self> {
        same_base(&self.base, &other.base)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        Ok(TangentVector { base: self.base.clone(), comps })
    }
}

fn check_len(len: usize) -> Result<()> {
    if len < 2 || len % 2 != 0 {
        return domain(format!("coordinate count {len} is not 2(n+1)"));
    }
    Ok(())
}

pub(crate) fn same_base(a: &AmbientPoint, b: &AmbientPoint) -> Result<()> {
    if a.coords.len() != b.coords.len() {
        return domain("vectors live on spheres of different dimension");
    }
    let gap = a.coords.iter().zip(&b.coords).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    if gap > POINT_TOL {
        return domain("vectors are based at different points");
    }
    Ok(())
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Multiplication by i in real coordinates.
pub(crate) fn mul_i(v: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; v.len()];
    for j in 0..v.len() / 2 {
        out[2 * j] = -v[2 * j + 1];
        out[2 * j + 1] = v[2 * j];
    }
    out
}

pub(crate) fn project_tangent(z: &[f64], v: &[f64]) -> Vec<f64> {
    let g = dot(v, z);
    v.iter().zip(z).map(|(a, b)| a - g * b).collect()
}

pub(crate) fn axpy(a: f64, x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(p, q)| a * p + q).collect()
}

/// Berger inner product on raw coordinates.
pub(crate) fn inner(tau: f64, z: &[f64], v: &[f64], w: &[f64]) -> f64 {
    let iz = mul_i(z);
    dot(v, w) - (1.0 - tau * tau) * dot(v, &iz) * dot(w, &iz)
}

/// ξ = (1/τ) iz on raw coordinates.
pub(crate) fn xi(tau: f64, z: &[f64]) -> Vec<f64> {
    mul_i(z).into_iter().map(|c| c / tau).collect()
}

/// J: multiplication by i followed by tangential projection.
pub(crate) fn j_op(z: &[f64], v: &[f64]) -> Vec<f64> {
    project_tangent(z, &mul_i(v))
}

pub fn metric_eval(tau: &BergerParam, z: &AmbientPoint, v: &TangentVector, w: &TangentVector) -> Result<f64> {
    same_base(z, &v.base)?;
    same_base(z, &w.base)?;
    Ok(inner(tau.tau, &z.coords, &v.comps, &w.comps))
}

pub fn killing_field(tau: &BergerParam, z: &AmbientPoint) -> TangentVector {
    TangentVector { base: z.clone(), comps: xi(tau.tau, &z.coords) }
}

pub fn killing_flow(tau: &BergerParam, t: f64, z: &AmbientPoint) -> AmbientPoint {
    let (s, c) = (t / tau.tau).sin_cos();
    let iz = mul_i(&z.coords);
    let coords = z.coords.iter().zip(&iz).map(|(a, b)| c * a + s * b).collect();
    AmbientPoint { coords }
}

/// Differential of the flow at time `t`, which is the same linear map on every fibre.
pub fn killing_flow_differential(tau: &BergerParam, t: f64, v: &TangentVector) -> TangentVector {
    let (s, c) = (t / tau.tau).sin_cos();
    let iv = mul_i(&v.comps);
    let comps = v.comps.iter().zip(&iv).map(|(a, b)| c * a + s * b).collect();
    TangentVector { base: killing_flow(tau, t, &v.base), comps }
}

/// J X at the base point of X.
pub fn complex_structure(v: &TangentVector) -> TangentVector {
    TangentVector { base: v.base.clone(), comps: j_op(&v.base.coords, &v.comps) }
}

pub(crate) fn connection_correction_raw(tau: f64, z: &[f64], x: &[f64], y: &[f64]) -> Vec<f64> {
    let xi = xi(tau, z);
    let xx = inner(tau, z, x, &xi);
    let yx = inner(tau, z, y, &xi);
    let xh = axpy(-xx, &xi, x);
    let yh = axpy(-yx, &xi, y);
    let jx = j_op(z, &xh);
    let jy = j_op(z, &yh);
    let k = (1.0 - tau * tau) / tau;
    jx.iter().zip(&jy).map(|(a, b)| k * (yx * a + xx * b)).collect()
}

/// ∇ʳ_X Y − ∇̄_X Y, the tensorial difference of the round and Berger connections.
pub fn connection_correction(
    tau: &BergerParam,
    z: &AmbientPoint,
    x: &TangentVector,
    y: &TangentVector,
) -> Result<TangentVector> {
    same_base(z, &x.base)?;
    same_base(z, &y.base)?;
    Ok(TangentVector { base: z.clone(), comps: connection_correction_raw(tau.tau, &z.coords, &x.comps, &y.comps) })
}

/// Orthonormal basis of the horizontal space {v : g(v, z) = g(v, iz) = 0}.
///
/// Convention: project the standard basis vectors in order and keep those
/// surviving Gram-Schmidt with norm above 1e-6.
pub fn horizontal_frame(z: &AmbientPoint) -> Vec<TangentVector> {
    let dim = z.coords.len();
    let iz = mul_i(&z.coords);
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(dim - 2);
    for j in 0..dim {
        let mut v = vec![0.0; dim];
        v[j] = 1.0;
        for u in [&z.coords, &iz].into_iter().chain(out.iter()) {
            let g = dot(&v, u);
            v = axpy(-g, u, &v);
        }
        let nv = norm(&v);
        if nv > 1e-6 {
            v.iter_mut().for_each(|c| *c /= nv);
            out.push(v);
        }
        if out.len() == dim - 2 {
            break;
        }
    }
    out.into_iter().map(|comps| TangentVector { base: z.clone(), comps }).collect()
}

/// ξ followed by the horizontal frame; orthonormal for the Berger metric.
pub fn berger_frame(tau: &BergerParam, z: &AmbientPoint) -> Vec<TangentVector> {
    let mut frame = vec![killing_field(tau, z)];
    frame.extend(horizontal_frame(z));
    frame
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn p(num: i64, den: i64) -> BergerParam {
        BergerParam::from_ratio(num, den).unwrap()
    }

    #[test]
    fn param_domain() {
        assert!(BergerParam::new(q(0, 1)).is_err());
        assert!(BergerParam::new(q(5, 4)).is_err());
        assert!(BergerParam::new(q(-1, 4)).is_err());
        let t = p(1, 4);
        assert_eq!(t.tau(), 0.5);
        assert_eq!(t.fibre_weight(), q(3, 1));
    }

    #[test]
    fn metric_examples() {
        let tau = p(1, 3);
        let z = AmbientPoint::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let v = TangentVector::new(&z, vec![0.0, 0.0, 1.0, 0.0]).unwrap();
        assert!((metric_eval(&tau, &z, &v, &v).unwrap() - 1.0).abs() < 1e-15);
        let xi = killing_field(&tau, &z);
        assert!((metric_eval(&tau, &z, &xi, &xi).unwrap() - 1.0).abs() < 1e-14);
        let other = AmbientPoint::new(vec![0.0, 1.0, 0.0, 0.0]).unwrap();
        let w = TangentVector::new(&other, vec![0.0, 0.0, 1.0, 0.0]).unwrap();
        assert!(metric_eval(&tau, &z, &v, &w).is_err());
    }

    #[test]
    fn killing_field_scaling() {
        let tau = p(1, 4);
        let z = AmbientPoint::new(vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(killing_field(&tau, &z).comps(), &[0.0, 0.0, 0.0, 2.0, 0.0, 0.0]);
    }

    #[test]
    fn flow_period_and_derivative() {
        let tau = p(1, 3);
        let z = AmbientPoint::normalized(vec![0.3, -0.2, 0.5, 0.7]).unwrap();
        let back = killing_flow(&tau, 2.0 * std::f64::consts::PI * tau.tau(), &z);
        for (a, b) in back.coords().iter().zip(z.coords()) {
            assert!((a - b).abs() < 1e-14);
        }
        let h = 1e-6;
        let (fp, fm) = (killing_flow(&tau, h, &z), killing_flow(&tau, -h, &z));
        let xi = killing_field(&tau, &z);
        for j in 0..4 {
            let d = (fp.coords()[j] - fm.coords()[j]) / (2.0 * h);
            assert!((d - xi.comps()[j]).abs() < 1e-6);
        }
    }

    #[test]
    fn correction_examples() {
        let tau = p(1, 2);
        let z = AmbientPoint::north(1);
        let h = TangentVector::new(&z, vec![0.0, 0.0, 0.6, 0.8]).unwrap();
        let xi = killing_field(&tau, &z);
        let c = connection_correction(&tau, &z, &h, &h).unwrap();
        assert!(c.comps().iter().all(|x| x.abs() < 1e-15));
        let c = connection_correction(&tau, &z, &xi, &h).unwrap();
        let jy = complex_structure(&h);
        let k = (1.0 - 0.5) / tau.tau();
        for (a, b) in c.comps().iter().zip(jy.comps()) {
            assert!((a - k * b).abs() < 1e-14);
        }
        let round = p(1, 1);
        let xr = killing_field(&round, &z);
        let c = connection_correction(&round, &z, &xr, &h).unwrap();
        assert!(c.comps().iter().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn frames_are_orthonormal() {
        let tau = p(2, 7);
        let z = AmbientPoint::normalized(vec![0.1, 0.9, -0.3, 0.2, 0.4, -0.5]).unwrap();
        let f = berger_frame(&tau, &z);
        assert_eq!(f.len(), 5);
        for (a, va) in f.iter().enumerate() {
            for (b, vb) in f.iter().enumerate() {
                let g = metric_eval(&tau, &z, va, vb).unwrap();
                let e = if a == b { 1.0 } else { 0.0 };
                assert!((g - e).abs() < 1e-12, "{a} {b} {g}");
            }
        }
    }

    #[test]
    fn point_validation() {
        assert!(AmbientPoint::new(vec![1.0, 0.0, 0.0]).is_err());
        assert!(AmbientPoint::new(vec![1.0, 0.1]).is_err());
        assert!(AmbientPoint::normalized(vec![0.0; 4]).is_err());
        let z = AmbientPoint::north(1);
        assert!(TangentVector::new(&z, vec![1.0, 0.0, 0.0, 0.0]).is_err());
    }
}
