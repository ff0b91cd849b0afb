//! The slice `y0 = 0` of `I(f_h)` against `±cone I(f) ∪ I(init f)`.
//!
//! The left side is tested on the homogenized polynomial alone: `(0, y)` lies in
//! `I(f_h)` iff some real line `t -> f_h(p + t(0, y))` has a non-real root. The
//! right side is decided exactly for real `f`.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::bivariate::nonreal_fibre;
use super::oracle::BivariateOracle;
use crate::algebra::{CRational, MPoly, Rational};
use crate::error::{Error, Result};
use crate::hyperbolicity::{is_hyperbolic, HyperbolicityConfig, HyperbolicityStatus};

#[derive(Clone, Debug)]
pub struct HomogenizationConfig {
    pub samples: usize,
    pub seed: u64,
    /// Sample points are drawn with coordinates in `[-box_radius, box_radius]`.
    pub box_radius: i64,
    /// Grid `λ = k / (ray_steps / 8)`, `k = 1..=ray_steps`, searched for witnesses `λ y ∈ I(f)`.
    pub ray_steps: usize,
    /// Random lines tried on the left side when no exact hyperbolicity test applies.
    pub line_samples: usize,
}

impl Default for HomogenizationConfig {
    fn default() -> Self {
        HomogenizationConfig { samples: 200, seed: 0, box_radius: 4, ray_steps: 64, line_samples: 64 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Inside,
    Outside,
    /// No certificate either way.
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SampleVerdict {
    Agree,
    Unknown,
    Contradiction,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomogenizationSample {
    #[serde(serialize_with = "crate::algebra::scalar::serde_rational::vec::serialize")]
    pub y: Vec<Rational>,
    pub lhs: Side,
    pub lhs_reason: String,
    pub rhs: Side,
    pub rhs_reason: String,
    /// Some `λ` on the grid with `λ y` or `-λ y` in `I(f)`.
    #[serde(serialize_with = "crate::algebra::scalar::serde_rational::option::serialize")]
    pub lambda_witness: Option<Rational>,
    pub verdict: SampleVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomogenizationReport {
    pub polynomial: String,
    pub samples: usize,
    pub agreements: usize,
    pub unknown: usize,
    pub contradictions: usize,
    pub details: Vec<HomogenizationSample>,
}

pub fn verify_homogenization(f: &MPoly, cfg: &HomogenizationConfig) -> Result<HomogenizationReport> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedDimension(f.nvars()));
    }
    if f.is_zero() || f.is_constant() {
        return Err(Error::InvalidArgument("homogenization check needs a nonconstant polynomial".into()));
    }
    let fh = f.homogenize()?;
    let init = f.initial_form()?;
    let f_oracle = BivariateOracle::new(f)?;
    let init_oracle = BivariateOracle::new(&init)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let den = 64i64;
    let mut details = Vec::with_capacity(cfg.samples);
    while details.len() < cfg.samples {
        let y: Vec<Rational> = (0..2)
            .map(|_| Rational::new(rng.random_range(-cfg.box_radius * den..=cfg.box_radius * den).into(), den.into()))
            .collect();
        if y.iter().all(|c| c.is_zero()) {
            continue;
        }
        let (lhs, lhs_reason) = left_side(&fh, &y, cfg, rng.random())?;
        let lambda_witness = ray_witness(&f_oracle, &y, cfg.ray_steps)?;
        let (rhs, rhs_reason) = right_side(f, &init_oracle, &y, lambda_witness.is_some())?;
        let verdict = match (lhs, rhs) {
            (Side::Inside, Side::Outside) => SampleVerdict::Contradiction,
            (Side::Inside, Side::Inside) | (Side::Outside, Side::Outside) => SampleVerdict::Agree,
            _ => SampleVerdict::Unknown,
        };
        details.push(HomogenizationSample { y, lhs, lhs_reason, rhs, rhs_reason, lambda_witness, verdict });
    }
    let count = |v| details.iter().filter(|d| d.verdict == v).count();
    Ok(HomogenizationReport {
        polynomial: f.to_string(),
        samples: details.len(),
        agreements: count(SampleVerdict::Agree),
        unknown: count(SampleVerdict::Unknown),
        contradictions: count(SampleVerdict::Contradiction),
        details,
    })
}

fn left_side(fh: &MPoly, y: &[Rational], cfg: &HomogenizationConfig, seed: u64) -> Result<(Side, String)> {
    let e: Vec<Rational> = std::iter::once(Rational::zero()).chain(y.iter().cloned()).collect();
    let hcfg = HyperbolicityConfig { samples: cfg.line_samples, seed };
    let v = match is_hyperbolic(fh, &e, &hcfg) {
        Ok(v) => v,
        Err(err) => return Ok((Side::Undecided, format!("no hyperbolicity test for f_h: {err}"))),
    };
    Ok(match v.status {
        HyperbolicityStatus::NotHyperbolic => (
            Side::Inside,
            v.reason
                .unwrap_or_else(|| "some real line in direction (0, y) meets V(f_h) at a non-real parameter".into()),
        ),
        HyperbolicityStatus::Hyperbolic => {
            (Side::Outside, format!("f_h is hyperbolic in direction (0, y) ({:?})", v.method))
        }
        HyperbolicityStatus::ProbablyHyperbolic => {
            (Side::Undecided, format!("{} random lines in direction (0, y) have only real roots", cfg.line_samples))
        }
    })
}

fn ray_witness(o: &BivariateOracle, y: &[Rational], steps: usize) -> Result<Option<Rational>> {
    let scale = Rational::new(8.into(), (steps.max(1) as i64).into());
    for k in 1..=steps {
        let lam = Rational::from_integer((k as i64).into()) * &scale;
        for s in [1i64, -1] {
            let p: Vec<Rational> = y.iter().map(|c| c * &lam * Rational::from_integer(s.into())).collect();
            if o.inside(&p)? {
                return Ok(Some(lam));
            }
        }
    }
    Ok(None)
}

fn right_side(f: &MPoly, init_oracle: &BivariateOracle, y: &[Rational], witness: bool) -> Result<(Side, String)> {
    if init_oracle.inside(y)? {
        return Ok((Side::Inside, "y lies in I(init f)".into()));
    }
    if witness {
        return Ok((Side::Inside, "grid point of the ray lies in I(f)".into()));
    }
    if !f.is_real() {
        return Ok((Side::Undecided, "no grid witness; the exact ray test needs real coefficients".into()));
    }
    // z = w y + b y⊥ with w complex, b real: some λ ≠ 0 has λ y ∈ I(f) iff for
    // some real b the polynomial w -> f(w y + b y⊥) has a non-real root.
    let var = |j: usize| MPoly::var(2, j);
    let c = |r: &Rational| MPoly::constant(2, CRational::real(r.clone()));
    // variable 0 is b, variable 1 is w
    let z1 = var(1).mul(&c(&y[0]))?.sub(&var(0).mul(&c(&y[1]))?)?;
    let z2 = var(1).mul(&c(&y[1]))?.add(&var(0).mul(&c(&y[0]))?)?;
    let g = f.substitute(&[z1, z2])?;
    if nonreal_fibre(&g) {
        Ok((Side::Inside, "some line parallel to y carries a zero of f with imaginary part on the ray".into()))
    } else {
        Ok((Side::Outside, "y is in neither ±cone I(f) nor I(init f)".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::mpoly_from_ints;

    fn cfg(samples: usize) -> HomogenizationConfig {
        HomogenizationConfig { samples, ..Default::default() }
    }

    #[test]
    fn homogeneous_input_agrees() {
        let f = mpoly_from_ints(2, &[(1, &[1, 1])]);
        let r = verify_homogenization(&f, &cfg(30)).unwrap();
        assert_eq!(r.contradictions, 0);
    }

    #[test]
    fn hyperbola_sides_agree() {
        let f = mpoly_from_ints(2, &[(1, &[2, 0]), (-1, &[0, 2]), (-1, &[0, 0])]);
        let r = verify_homogenization(&f, &cfg(40)).unwrap();
        assert_eq!(r.contradictions, 0);
        for d in &r.details {
            let inside = d.y[1].clone() * &d.y[1] >= d.y[0].clone() * &d.y[0];
            assert_eq!(d.rhs == Side::Inside, inside, "{:?}", d.y);
        }
    }
}
