//! Numeric search for a complex zero with prescribed imaginary part.
//!
//! The search is one-sided: finding a near-zero certifies membership up to the
//! tolerance, failing to find one proves nothing.

use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat_to_f64, MPoly, Rational};

/// `f` with `f64` coefficients, ready for repeated evaluation with gradient.
#[derive(Clone, Debug)]
pub(crate) struct FloatPoly {
    n: usize,
    terms: Vec<(Vec<u32>, Complex64)>,
}

impl FloatPoly {
    pub(crate) fn new(f: &MPoly) -> Self {
        FloatPoly { n: f.nvars(), terms: f.terms().map(|(m, c)| (m.exps().to_vec(), c.to_c64())).collect() }
    }

    /// Value, gradient and the magnitude `Σ |c| |z^α|` used for relative tolerances.
    pub(crate) fn eval_grad(&self, z: &[Complex64]) -> (Complex64, Vec<Complex64>, f64) {
        let mut val = Complex64::new(0.0, 0.0);
        let mut grad = vec![Complex64::new(0.0, 0.0); self.n];
        let mut mag = 0.0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= z[j].powu(k);
                }
            }
            val += t;
            mag += t.norm();
            for j in 0..self.n {
                if e[j] == 0 {
                    continue;
                }
                let mut g = *c * e[j] as f64;
                for (i, &k) in e.iter().enumerate() {
                    let p = if i == j { k - 1 } else { k };
                    if p > 0 {
                        g *= z[i].powu(p);
                    }
                }
                grad[j] += g;
            }
        }
        (val, grad, mag)
    }
}

pub(crate) struct SearchParams {
    pub starts: usize,
    pub tol: f64,
    pub seed: u64,
    pub iters: usize,
}

/// Try to find real `x` with `|f(x + iy)| <= tol * (1 + Σ|c||z^α|)`; returns it if found.
pub(crate) fn find_zero_with_imag(fp: &FloatPoly, y: &[Rational], p: &SearchParams) -> Option<Vec<f64>> {
    let n = fp.n;
    let yf: Vec<f64> = y.iter().map(rat_to_f64).collect();
    let ymax = yf.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let cmax = fp.terms.iter().map(|t| t.1.norm()).fold(0.0, f64::max);
    let cmin = fp.terms.iter().map(|t| t.1.norm()).fold(f64::INFINITY, f64::min);
    let deg = fp.terms.iter().map(|t| t.0.iter().sum::<u32>()).max().unwrap_or(1).max(1);
    let radius = 1.0 + ymax + (cmax / cmin).powf(1.0 / deg as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..p.starts {
        let mut x: Vec<f64> = (0..n).map(|_| rng.random_range(-radius..radius)).collect();
        let z_of = |x: &[f64]| -> Vec<Complex64> { x.iter().zip(&yf).map(|(a, b)| Complex64::new(*a, *b)).collect() };
        let (mut val, mut grad, mut mag) = fp.eval_grad(&z_of(&x));
        let mut lambda = 1e-3;
        for _ in 0..p.iters {
            if val.norm() <= p.tol * (1.0 + mag) {
                return Some(x);
            }
            // Residual r = (Re f, Im f); Jacobian rows Re g, Im g (f is holomorphic).
            let (a11, a12, a22) = grad
                .iter()
                .fold((0.0, 0.0, 0.0), |(s11, s12, s22), g| (s11 + g.re * g.re, s12 + g.re * g.im, s22 + g.im * g.im));
            let mut accepted = false;
            for _ in 0..30 {
                let (m11, m22) = (a11 + lambda, a22 + lambda);
                let det = m11 * m22 - a12 * a12;
                if det == 0.0 || !det.is_finite() {
                    lambda *= 10.0;
                    continue;
                }
                let w1 = (m22 * val.re - a12 * val.im) / det;
                let w2 = (-a12 * val.re + m11 * val.im) / det;
                let trial: Vec<f64> = x.iter().zip(&grad).map(|(xi, g)| xi - (g.re * w1 + g.im * w2)).collect();
                let (v2, g2, m2) = fp.eval_grad(&z_of(&trial));
                if v2.norm() < val.norm() && v2.is_finite() {
                    x = trial;
                    val = v2;
                    grad = g2;
                    mag = m2;
                    lambda = (lambda * 0.3).max(1e-15);
                    accepted = true;
                    break;
                }
                lambda *= 10.0;
            }
            if !accepted {
                break;
            }
        }
        if val.norm() <= p.tol * (1.0 + mag) {
            return Some(x);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::algebra::mpoly::mpoly_from_ints;

    fn params() -> SearchParams {
        SearchParams { starts: 32, tol: 1e-9, seed: 7, iters: 200 }
    }

    #[test]
    fn finds_zero_when_inside() {
        // z1 z2: y = (0, 1) is inside (x = (0, anything)).
        let f = FloatPoly::new(&mpoly_from_ints(2, &[(1, &[1, 1])]));
        assert!(find_zero_with_imag(&f, &[int(0), int(1)], &params()).is_some());
        // Lorentz: y = (1, 1, 1) has y1^2 - y2^2 - y3^2 < 0, inside.
        let f = FloatPoly::new(&mpoly_from_ints(3, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0]), (-1, &[0, 0, 2])]));
        assert!(find_zero_with_imag(&f, &[int(1), int(1), int(1)], &params()).is_some());
    }

    #[test]
    fn finds_nothing_when_outside() {
        let f = FloatPoly::new(&mpoly_from_ints(2, &[(1, &[1, 1])]));
        assert!(find_zero_with_imag(&f, &[int(1), int(1)], &params()).is_none());
    }
}
