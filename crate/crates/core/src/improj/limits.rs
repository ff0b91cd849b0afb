//! Limit directions of `I(f)` for bivariate `f`, read off the initial form.

use serde::Serialize;

use super::oracle::BivariateOracle;
use crate::algebra::{rat_from_f64, MPoly, QPoly, Rational};
use crate::error::{Error, Result};
use crate::realroots::{isolate_real_roots, squarefree_decomposition, RealAlgebraic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LimitKind {
    FiniteSet,
    FullCircle,
}

/// The directions `±(1, a)/√(1 + a²)` for a real root `a` of `init(f)(1, t)`,
/// or `±(0, 1)` for the root at infinity.
#[derive(Clone, Debug, Serialize)]
pub struct LimitDirection {
    /// Isolating interval of `a`, absent for the root at infinity.
    #[serde(serialize_with = "crate::algebra::scalar::serde_rational::option_vec::serialize")]
    pub slope_interval: Option<Vec<Rational>>,
    pub vector: [f64; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct LimitDirections {
    pub kind: LimitKind,
    pub dirs: Vec<LimitDirection>,
}

impl LimitDirections {
    /// Angles in `(-π, π]` of all directions.
    pub fn angles(&self) -> Vec<f64> {
        self.dirs.iter().map(|d| d.vector[1].atan2(d.vector[0])).collect()
    }
}

pub fn limit_directions(f: &MPoly) -> Result<LimitDirections> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedDimension(f.nvars()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let init = f.initial_form()?;
    let d = init.degree().unwrap_or(0) as usize;
    if d == 0 {
        // Constant f: I(f) is empty.
        return Ok(LimitDirections { kind: LimitKind::FiniteSet, dirs: Vec::new() });
    }
    let full = LimitDirections { kind: LimitKind::FullCircle, dirs: Vec::new() };
    // A form that is not a complex multiple of a real one has a non-real root.
    let Some(g) = init.real_multiple() else {
        return Ok(full);
    };
    let one = crate::algebra::CRational::one();
    let p: QPoly = g.eval_var(0, &one).to_qpoly(1).expect("real binary form");
    let at_infinity = d - p.deg0();
    let real_with_mult: usize = squarefree_decomposition(&p)?
        .iter()
        .map(|(q, m)| crate::realroots::count_real_roots(q, None).map(|c| c * m))
        .sum::<Result<usize>>()?;
    if real_with_mult + at_infinity < d {
        return Ok(full);
    }
    let mut dirs = Vec::new();
    if !p.is_constant() {
        let iso = isolate_real_roots(&p, &crate::realroots::default_precision())?;
        let roots = RealAlgebraic::roots_of(&p)?;
        for (iv, a) in iso.intervals.iter().zip(&roots) {
            let a = a.to_f64();
            let s = (1.0 + a * a).sqrt();
            for sgn in [1.0, -1.0] {
                dirs.push(LimitDirection {
                    slope_interval: Some(vec![iv.0.clone(), iv.1.clone()]),
                    vector: [sgn / s, sgn * a / s],
                });
            }
        }
    }
    if at_infinity > 0 {
        for sgn in [1.0, -1.0] {
            dirs.push(LimitDirection { slope_interval: None, vector: [0.0, sgn] });
        }
    }
    Ok(LimitDirections { kind: LimitKind::FiniteSet, dirs })
}

/// Arcs `(start, end)` of angles, in radians from `-π`, where the circle of the
/// given radius meets `I(f)`, sampled at `samples` equally spaced angles.
pub fn far_field_angles(f: &MPoly, radius: f64, samples: usize) -> Result<Vec<(f64, f64)>> {
    let oracle = BivariateOracle::new(f)?;
    use rayon::prelude::*;
    let step = std::f64::consts::TAU / samples as f64;
    let hits: Vec<bool> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let t = -std::f64::consts::PI + k as f64 * step;
            let y = [rat_from_f64(radius * t.cos()), rat_from_f64(radius * t.sin())];
            oracle.inside(&y).expect("bivariate")
        })
        .collect();
    let mut arcs = Vec::new();
    let mut k = 0;
    while k < samples {
        if !hits[k] {
            k += 1;
            continue;
        }
        let start = k;
        while k < samples && hits[k] {
            k += 1;
        }
        let angle = |i: usize| -std::f64::consts::PI + i as f64 * step;
        arcs.push((angle(start), angle(k - 1)));
    }
    // Merge an arc wrapping through -π.
    if arcs.len() > 1 && hits[0] && hits[samples - 1] {
        let last = arcs.pop().expect("nonempty");
        arcs[0].0 = last.0 - std::f64::consts::TAU;
    }
    Ok(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::mpoly_from_ints;

    #[test]
    fn hyperbola_has_four_directions() {
        let f = mpoly_from_ints(2, &[(1, &[2, 0]), (-1, &[0, 2]), (-1, &[0, 0])]);
        let l = limit_directions(&f).unwrap();
        assert_eq!(l.kind, LimitKind::FiniteSet);
        assert_eq!(l.dirs.len(), 4);
        for d in &l.dirs {
            assert!((d.vector[0].abs() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        }
    }

    #[test]
    fn circle_is_full() {
        let f = mpoly_from_ints(2, &[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])]);
        assert_eq!(limit_directions(&f).unwrap().kind, LimitKind::FullCircle);
    }

    #[test]
    fn cross_has_axis_directions() {
        let f = mpoly_from_ints(2, &[(1, &[1, 1])]);
        let l = limit_directions(&f).unwrap();
        let mut v: Vec<[i64; 2]> =
            l.dirs.iter().map(|d| [d.vector[0].round() as i64, d.vector[1].round() as i64]).collect();
        v.sort();
        assert_eq!(v, vec![[-1, 0], [0, -1], [0, 1], [1, 0]]);
    }
}
