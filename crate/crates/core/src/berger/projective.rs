use num_complex::Complex64;

use super::{inner, same_base, xi, AmbientPoint, BergerParam, TangentVector};
use crate::error::{domain, Error, Result};

/// Point of complex projective space, carried by a representative on the
/// sphere of radius `scale`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectivePoint {
    rep: Vec<Complex64>,
    scale: f64,
}

impl ProjectivePoint {
    pub fn new(rep: Vec<Complex64>, scale: f64) -> Result<Self> {
        if !(scale > 0.0) || !scale.is_finite() {
            return domain("projective scale must be positive");
        }
        let nrm = cnorm(&rep);
        if !(nrm > 0.0) || !nrm.is_finite() {
            return domain("projective representative must be nonzero");
        }
        let rep = rep.into_iter().map(|c| c * (scale / nrm)).collect();
        Ok(ProjectivePoint { rep, scale })
    }

    pub fn rep(&self) -> &[Complex64] {
        &self.rep
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Same point, representative moved to the sphere of radius `scale`.
    pub fn rescaled(&self, scale: f64) -> Result<Self> {
        Self::new(self.rep.clone(), scale)
    }
}

pub(crate) fn cdot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

pub(crate) fn cnorm(a: &[Complex64]) -> f64 {
    cdot(a, a).re.sqrt()
}

pub(crate) fn to_complex(v: &[f64]) -> Vec<Complex64> {
    v.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect()
}

/// Component of `v` orthogonal to the complex line through the representative.
pub fn horizontal_part(p: &ProjectivePoint, v: &[Complex64]) -> Vec<Complex64> {
    let w = &p.rep;
    let c = cdot(v, w) / (p.scale * p.scale);
    v.iter().zip(w).map(|(a, b)| a - c * b).collect()
}

/// Fubini-Study inner product of two vectors at `p`, through their horizontal lifts.
pub fn fubini_study(p: &ProjectivePoint, a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.len() != p.rep.len() || b.len() != p.rep.len() {
        return domain("vector length differs from projective dimension");
    }
    Ok(cdot(&horizontal_part(p, a), &horizontal_part(p, b)).re)
}

fn require_deformed(tau: &BergerParam) -> Result<f64> {
    if tau.is_round() {
        return Err(Error::Unsupported("embedding undefined at tau = 1".into()));
    }
    Ok(1.0 - tau.tau_sq_f64())
}

/// z ↦ [(τ/√(1−τ²), z)] into CP^{n+1}(4(1−τ²)).
pub fn geodesic_sphere_embed(tau: &BergerParam, z: &AmbientPoint) -> Result<ProjectivePoint> {
    let e = require_deformed(tau)?;
    let mut rep = vec![Complex64::new(tau.tau() / e.sqrt(), 0.0)];
    rep.extend(to_complex(z.coords()));
    ProjectivePoint::new(rep, 1.0 / e.sqrt())
}

/// Unit normal J dF(ξ) of the geodesic sphere, as a horizontal vector at the
/// representative returned by [`geodesic_sphere_embed`].
pub fn geodesic_sphere_normal(tau: &BergerParam, z: &AmbientPoint) -> Result<Vec<Complex64>> {
    let e = require_deformed(tau)?;
    let mut v = vec![Complex64::new(e.sqrt(), 0.0)];
    v.extend(to_complex(z.coords()).into_iter().map(|c| -c * tau.tau()));
    Ok(v)
}

/// Coefficient of the unit normal in the second fundamental form of the
/// geodesic-sphere embedding.
pub fn sff_geodesic_sphere(tau: &BergerParam, z: &AmbientPoint, x: &TangentVector, y: &TangentVector) -> Result<f64> {
    same_base(z, x.base())?;
    same_base(z, y.base())?;
    let t = tau.tau();
    let c = z.coords();
    let xi = xi(t, c);
    let (a, b) = (inner(t, c, x.comps(), &xi), inner(t, c, y.comps(), &xi));
    Ok(t * inner(t, c, x.comps(), y.comps()) - (1.0 - t * t) / t * a * b)
}

/// Unit-normal coefficient of the mean curvature of a d-dimensional
/// submanifold of the geodesic sphere, seen inside projective space.
pub fn ambient_mean_curvature(tau: &BergerParam, d: usize, xi_top_norm_sq: f64) -> Result<f64> {
    if d == 0 {
        return domain("dimension must be positive");
    }
    if !(0.0..=1.0).contains(&xi_top_norm_sq) {
        return domain("|xi^T|^2 must lie in [0, 1]");
    }
    let t = tau.tau();
    let d = d as f64;
    Ok((t * d - (1.0 - t * t) / t * xi_top_norm_sq) / d)
}

#[cfg(test)]
mod tests {
    use super::super::{horizontal_frame, killing_field};
    use super::*;

    #[test]
    fn embed_examples() {
        let tau = BergerParam::from_ratio(1, 2).unwrap();
        let z = AmbientPoint::normalized(vec![0.3, 0.1, -0.4, 0.2]).unwrap();
        let p = geodesic_sphere_embed(&tau, &z).unwrap();
        assert!((p.rep()[0].re - 1.0).abs() < 1e-14);
        assert!((p.rep()[1].re - 0.3 / (0.09f64 + 0.01 + 0.16 + 0.04).sqrt()).abs() < 1e-14);
        let tau = BergerParam::from_ratio(1, 5).unwrap();
        let p = geodesic_sphere_embed(&tau, &z).unwrap();
        assert!((p.rep()[0].norm_sqr() - 0.2 / 0.8).abs() < 1e-14);
        assert!(geodesic_sphere_embed(&BergerParam::from_ratio(1, 1).unwrap(), &z).is_err());
    }

    #[test]
    fn normal_is_unit_and_orthogonal() {
        let tau = BergerParam::from_ratio(2, 5).unwrap();
        let z = AmbientPoint::normalized(vec![0.3, 0.1, -0.4, 0.2, 0.5, 0.0]).unwrap();
        let p = geodesic_sphere_embed(&tau, &z).unwrap();
        let nu = geodesic_sphere_normal(&tau, &z).unwrap();
        assert!((fubini_study(&p, &nu, &nu).unwrap() - 1.0).abs() < 1e-13);
        let mut frame = horizontal_frame(&z);
        frame.push(killing_field(&tau, &z));
        for v in frame {
            let mut lift = vec![Complex64::new(0.0, 0.0)];
            lift.extend(to_complex(v.comps()));
            assert!(fubini_study(&p, &lift, &nu).unwrap().abs() < 1e-13);
        }
    }

    #[test]
    fn principal_curvatures() {
        let tau = BergerParam::from_ratio(1, 3).unwrap();
        let t = tau.tau();
        let z = AmbientPoint::north(1);
        let xi = killing_field(&tau, &z);
        let h = TangentVector::new(&z, vec![0.0, 0.0, 1.0, 0.0]).unwrap();
        let k = TangentVector::new(&z, vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!((sff_geodesic_sphere(&tau, &z, &xi, &xi).unwrap() - (2.0 * t * t - 1.0) / t).abs() < 1e-14);
        assert!((sff_geodesic_sphere(&tau, &z, &h, &h).unwrap() - t).abs() < 1e-15);
        assert!(sff_geodesic_sphere(&tau, &z, &h, &k).unwrap().abs() < 1e-15);
    }

    #[test]
    fn mean_curvature_examples() {
        let d3 = BergerParam::from_ratio(1, 4).unwrap();
        assert!(ambient_mean_curvature(&d3, 3, 1.0).unwrap().abs() < 1e-15);
        let half = BergerParam::from_ratio(1, 2).unwrap();
        assert!((ambient_mean_curvature(&half, 2, 0.0).unwrap() - half.tau()).abs() < 1e-15);
        assert!((ambient_mean_curvature(&half, 2, 1.0).unwrap() - 2f64.sqrt() / 4.0).abs() < 1e-15);
        assert!(ambient_mean_curvature(&half, 2, 1.5).is_err());
    }
}
