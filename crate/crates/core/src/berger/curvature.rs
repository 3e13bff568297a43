use super::{inner, j_op, same_base, xi, AmbientPoint, BergerParam, TangentVector};
use crate::error::{domain, Result};

const UNIT_TOL: f64 = 1e-10;

pub(crate) fn curvature_raw(tau: f64, z: &[f64], x: &[f64], y: &[f64], zz: &[f64], w: &[f64]) -> f64 {
    let ip = |a: &[f64], b: &[f64]| inner(tau, z, a, b);
    let e = 1.0 - tau * tau;
    let xi = xi(tau, z);
    let (jx, jy, jz) = (j_op(z, x), j_op(z, y), j_op(z, zz));
    let round = ip(y, zz) * ip(x, w) - ip(x, zz) * ip(y, w);
    let hol = ip(&jy, zz) * ip(&jx, w) - ip(&jx, zz) * ip(&jy, w) - 2.0 * ip(&jx, y) * ip(&jz, w);
    let (xx, yx, zx, wx) = (ip(x, &xi), ip(y, &xi), ip(zz, &xi), ip(w, &xi));
    let fib_z = zx * (xx * ip(y, w) - yx * ip(x, w));
    let fib_w = wx * (yx * ip(x, zz) - xx * ip(y, zz));
    round + e * hol + e * fib_z + e * fib_w
}

/// R̄(X, Y, Z, W) of the Berger sphere, sign convention K(v, w) = R̄(v, w, w, v).
pub fn curvature_tensor(
    tau: &BergerParam,
    z: &AmbientPoint,
    x: &TangentVector,
    y: &TangentVector,
    zv: &TangentVector,
    w: &TangentVector,
) -> Result<f64> {
    for v in [x, y, zv, w] {
        same_base(z, v.base())?;
    }
    Ok(curvature_raw(tau.tau(), z.coords(), x.comps(), y.comps(), zv.comps(), w.comps()))
}

/// Sectional curvature of the plane spanned by an orthonormal pair.
pub fn sectional_curvature(tau: &BergerParam, z: &AmbientPoint, v: &TangentVector, w: &TangentVector) -> Result<f64> {
    same_base(z, v.base())?;
    same_base(z, w.base())?;
    let t = tau.tau();
    let c = z.coords();
    let (vv, ww, vw) = (inner(t, c, v.comps(), v.comps()), inner(t, c, w.comps(), w.comps()), inner(t, c, v.comps(), w.comps()));
    if (vv - 1.0).abs() > UNIT_TOL || (ww - 1.0).abs() > UNIT_TOL || vw.abs() > UNIT_TOL {
        return domain("sectional curvature needs an orthonormal pair");
    }
    let xi = xi(t, c);
    let (a, b) = (inner(t, c, v.comps(), &xi), inner(t, c, w.comps(), &xi));
    let vjw = inner(t, c, v.comps(), &j_op(c, w.comps()));
    Ok(1.0 + (1.0 - t * t) * (3.0 * vjw * vjw - (a * a + b * b)))
}

/// Ricci curvature of a unit vector.
pub fn ricci(tau: &BergerParam, z: &AmbientPoint, v: &TangentVector) -> Result<f64> {
    same_base(z, v.base())?;
    let t = tau.tau();
    let c = z.coords();
    if (inner(t, c, v.comps(), v.comps()) - 1.0).abs() > UNIT_TOL {
        return domain("ricci curvature needs a unit vector");
    }
    let n = z.n() as f64;
    let a = inner(t, c, v.comps(), &xi(t, c));
    Ok(2.0 * n + 2.0 * (1.0 - t * t) * (1.0 - (n + 1.0) * a * a))
}

pub fn scalar_curvature(tau: &BergerParam, n: usize) -> f64 {
    let n = n as f64;
    2.0 * n * (2.0 * (n + 1.0) - tau.tau_sq_f64())
}

#[cfg(test)]
mod tests {
    use super::super::{berger_frame, killing_field};
    use super::*;

    #[test]
    fn vertical_and_holomorphic_planes() {
        let tau = BergerParam::from_ratio(1, 3).unwrap();
        let z = AmbientPoint::north(1);
        let h = TangentVector::new(&z, vec![0.0, 0.0, 1.0, 0.0]).unwrap();
        let jh = TangentVector::new(&z, vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        let xi = killing_field(&tau, &z);
        let k = sectional_curvature(&tau, &z, &xi, &h).unwrap();
        assert!((k - 1.0 / 3.0).abs() < 1e-14);
        let k = sectional_curvature(&tau, &z, &h, &jh).unwrap();
        assert!((k - (4.0 - 1.0)).abs() < 1e-14);
        let r = curvature_tensor(&tau, &z, &h, &jh, &jh, &h).unwrap();
        assert!((r - k).abs() < 1e-14);
        assert!(sectional_curvature(&tau, &z, &h, &h).is_err());
    }

    #[test]
    fn ricci_and_scalar() {
        let tau = BergerParam::from_ratio(1, 3).unwrap();
        let z = AmbientPoint::normalized(vec![0.2, 0.4, -0.1, 0.3]).unwrap();
        let xi = killing_field(&tau, &z);
        assert!((ricci(&tau, &z, &xi).unwrap() - 2.0 / 3.0).abs() < 1e-13);
        assert!((scalar_curvature(&tau, 1) - 22.0 / 3.0).abs() < 1e-14);
        // the scalar curvature is the trace of the Ricci form over a frame
        let total: f64 = berger_frame(&tau, &z).iter().map(|e| ricci(&tau, &z, e).unwrap()).sum();
        assert!((total - 22.0 / 3.0).abs() < 1e-12);
    }
}
