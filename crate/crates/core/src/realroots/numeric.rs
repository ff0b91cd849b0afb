use num::complex::Complex64;

use crate::algebra::UPoly;
use crate::error::{Error, Result};

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots (with multiplicity) by Aberth–Ehrlich iteration.
///
/// Each returned root satisfies `|p(z)| <= tol * (1 + sum |c_k| |z|^k)`.
pub fn roots_complex_numeric(p: &UPoly, tol: f64) -> Result<Vec<Complex64>> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::InvalidArgument("constant polynomial has no roots".into())),
        Some(d) => d,
    };
    let raw = p.to_c64();
    let lc = raw[deg];
    let c: Vec<Complex64> = raw.iter().map(|&x| x / lc).collect();
    let radius = 1.0 + c[..deg].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / deg as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, th)
        })
        .collect();
    let eps = tol.max(f64::EPSILON * 4.0);
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (pv, dpv) = horner(&c, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != k {
                    let d = z[k] - z[j];
                    if d.norm() > 0.0 {
                        s += d.inv();
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < eps * 1e-3 {
            break;
        }
    }
    let scale_ok = |r: Complex64| {
        let (pv, _) = horner(&c, r);
        let mag: f64 = c.iter().enumerate().map(|(k, a)| a.norm() * r.norm().powi(k as i32)).sum();
        pv.norm() <= tol * (1.0 + mag)
    };
    if let Some(bad) = z.iter().find(|r| !r.is_finite() || !scale_ok(**r)) {
        return Err(Error::NoConvergence(format!("root estimate {bad} has large residual")));
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, CRational};

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-9
    }

    #[test]
    fn examples() {
        let p = UPoly::new(vec![CRational::one(), CRational::zero(), CRational::one()]);
        let r = roots_complex_numeric(&p, 1e-12).unwrap();
        assert!(close(r[0], Complex64::new(0.0, -1.0)) && close(r[1], Complex64::new(0.0, 1.0)));

        let p = UPoly::new(vec![-CRational::new(int(2), int(3)), CRational::one()]);
        let r = roots_complex_numeric(&p, 1e-12).unwrap();
        assert!(close(r[0], Complex64::new(2.0, 3.0)));

        let p = UPoly::new(vec![CRational::one(), CRational::zero(), CRational::from_int(-1)]);
        let r = roots_complex_numeric(&p, 1e-12).unwrap();
        assert!(close(r[0], Complex64::new(-1.0, 0.0)) && close(r[1], Complex64::new(1.0, 0.0)));
    }
}
