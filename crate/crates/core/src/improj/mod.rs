//! Membership in the imaginary projection `I(f) = { Im z : f(z) = 0 }`, and the
//! raster, component and correspondence analyses built on it.

mod bivariate;
mod heuristic;
mod homogenization;
mod limits;
mod oracle;
mod pencil;
mod raster;
mod recession;

use num::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::linalg::{cdet, dot, inertia, mat_vec, nullspace, quadratic_form_matrix, restrict_form, solve};
use crate::algebra::{CRational, MPoly, QPoly, Rational};
use crate::arrangement::{arrangement_membership, UnionMembership};
use crate::error::{check_dim, Error, Result};
use crate::realroots::{all_roots_real, count_real_roots};
use crate::structured::{Structure, StructuredPoly};

pub use bivariate::common_real_zero;
pub use homogenization::{
    verify_homogenization, HomogenizationConfig, HomogenizationReport, HomogenizationSample, SampleVerdict, Side,
};
pub use limits::{far_field_angles, limit_directions, LimitDirection, LimitDirections, LimitKind};
pub use oracle::BivariateOracle;
pub use pencil::{HermitianPencil, PencilView, MAX_EXPANSION_SIZE};
pub use raster::{
    components, raster, raster_structured, Cell, Component, ComponentConfig, ComponentReport, GridMode, RasterBox,
    RasterGrid,
};
pub use recession::{recession_correspondence, RecessionMatch, RecessionReport, UnboundedComponent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MembershipValue {
    Inside,
    Outside,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MembershipMethod {
    ExactUnivariate,
    ExactLinear,
    ExactBivariateResultant,
    ExactQuadratic,
    ExactHermitianPencil,
    ExactDiagonalDet,
    NumericHeuristic,
}

impl MembershipMethod {
    pub fn is_exact(self) -> bool {
        self != MembershipMethod::NumericHeuristic
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub value: MembershipValue,
    pub method: MembershipMethod,
}

impl Membership {
    fn exact(inside: bool, method: MembershipMethod) -> Self {
        let value = if inside { MembershipValue::Inside } else { MembershipValue::Outside };
        Membership { value, method }
    }

    pub fn is_inside(&self) -> bool {
        self.value == MembershipValue::Inside
    }

    pub fn is_outside(&self) -> bool {
        self.value == MembershipValue::Outside
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Exact routes only; an input with no exact route is an error.
    Exact,
    /// The numeric heuristic only.
    Numeric,
    /// Exact when a route exists, otherwise the heuristic.
    Auto,
}

#[derive(Clone, Debug)]
pub struct MembershipConfig {
    pub mode: Mode,
    /// Relative residual accepted by the heuristic.
    pub tol: f64,
    pub starts: usize,
    pub seed: u64,
    /// Random real points tried when looking for a non-real root of a pencil line.
    pub pencil_samples: usize,
}

impl Default for MembershipConfig {
    fn default() -> Self {
        MembershipConfig { mode: Mode::Auto, tol: 1e-9, starts: 32, seed: 0, pencil_samples: 64 }
    }
}

impl MembershipConfig {
    pub fn with_mode(mode: Mode) -> Self {
        MembershipConfig { mode, ..Default::default() }
    }
}

/// Membership of `y` in `I(f)` for a plain polynomial.
pub fn membership(f: &MPoly, y: &[Rational], cfg: &MembershipConfig) -> Result<Membership> {
    check_dim(f.nvars(), y.len())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if cfg.mode == Mode::Numeric {
        return Ok(heuristic_membership(f, y, cfg));
    }
    match exact_membership(f, y)? {
        Some(m) => Ok(m),
        None if cfg.mode == Mode::Exact => Err(no_route(f)),
        None => Ok(heuristic_membership(f, y, cfg)),
    }
}

/// Membership using whatever structure `f` carries.
pub fn membership_structured(f: &StructuredPoly, y: &[Rational], cfg: &MembershipConfig) -> Result<Membership> {
    check_dim(f.nvars(), y.len())?;
    if cfg.mode == Mode::Numeric {
        return membership(f.poly(), y, cfg);
    }
    match f.structure() {
        Structure::Generic => membership(f.poly(), y, cfg),
        Structure::LinearForms(fs) => {
            let inside = arrangement_membership(fs, y)? == UnionMembership::InsideUnion;
            Ok(Membership::exact(inside, MembershipMethod::ExactLinear))
        }
        Structure::DiagDet(fs) => {
            let inside = arrangement_membership(fs, y)? == UnionMembership::InsideUnion;
            Ok(Membership::exact(inside, MembershipMethod::ExactDiagonalDet))
        }
        Structure::Factors(fs) => union_membership(fs, y, cfg),
        Structure::Pencil(p) => pencil_membership(p, f.poly(), y, cfg),
    }
}

/// `V(fg) = V(f) ∪ V(g)`, so `I(fg) = I(f) ∪ I(g)`.
fn union_membership(factors: &[MPoly], y: &[Rational], cfg: &MembershipConfig) -> Result<Membership> {
    let mut last = None;
    let mut unknown = false;
    for g in factors {
        if g.is_constant() {
            continue;
        }
        let m = membership(g, y, cfg)?;
        match m.value {
            MembershipValue::Inside => return Ok(m),
            MembershipValue::Unknown => unknown = true,
            MembershipValue::Outside => {}
        }
        last = Some(m);
    }
    if unknown {
        return Ok(Membership { value: MembershipValue::Unknown, method: MembershipMethod::NumericHeuristic });
    }
    Ok(last.unwrap_or(Membership::exact(false, MembershipMethod::ExactLinear)))
}

fn no_route(f: &MPoly) -> Error {
    Error::NoExactRoute(format!(
        "no exact membership procedure for a degree {} polynomial in {} variables",
        f.degree().unwrap_or(0),
        f.nvars()
    ))
}

fn heuristic_membership(f: &MPoly, y: &[Rational], cfg: &MembershipConfig) -> Membership {
    let value = if f.is_constant() {
        MembershipValue::Unknown
    } else {
        let fp = heuristic::FloatPoly::new(f);
        let params = heuristic::SearchParams { starts: cfg.starts, tol: cfg.tol, seed: cfg.seed, iters: 200 };
        match heuristic::find_zero_with_imag(&fp, y, &params) {
            Some(_) => MembershipValue::Inside,
            None => MembershipValue::Unknown,
        }
    };
    Membership { value, method: MembershipMethod::NumericHeuristic }
}

/// Exact decision when `f` falls in a class with an exact procedure.
fn exact_membership(f: &MPoly, y: &[Rational]) -> Result<Option<Membership>> {
    use MembershipMethod::*;
    if f.is_constant() {
        return Ok(Some(Membership::exact(false, ExactLinear)));
    }
    let n = f.nvars();
    if n == 1 {
        return Ok(Some(Membership::exact(univariate_inside(f, y)?, ExactUnivariate)));
    }
    if f.degree() == Some(1) {
        return Ok(Some(Membership::exact(linear_inside(f, y), ExactLinear)));
    }
    if n == 2 {
        let (u, v) = f.real_imag_split(y)?;
        return Ok(Some(Membership::exact(common_real_zero(&u, &v), ExactBivariateResultant)));
    }
    if let Some(a) = quadratic_form_matrix(f) {
        return Ok(Some(Membership::exact(quadratic_inside(&a, y), ExactQuadratic)));
    }
    Ok(None)
}

fn univariate_inside(f: &MPoly, y: &[Rational]) -> Result<bool> {
    let (u, v) = f.real_imag_split(y)?;
    let u = u.to_qpoly(0).expect("real univariate");
    let v = v.to_qpoly(0).expect("real univariate");
    let g = if u.is_zero() {
        v
    } else if v.is_zero() {
        u
    } else {
        u.gcd(&v)
    };
    if g.is_constant() {
        return Ok(g.is_zero());
    }
    Ok(count_real_roots(&g, None)? > 0)
}

/// `f = c + Σ a_j z_j`: `f(x + iy) = 0` is a real linear system in `x`.
fn linear_inside(f: &MPoly, y: &[Rational]) -> bool {
    let n = f.nvars();
    let mut re = vec![Rational::zero(); n];
    let mut im = vec![Rational::zero(); n];
    let mut c = CRational::zero();
    for (m, a) in f.terms() {
        match m.exps().iter().position(|&e| e == 1) {
            Some(j) => {
                re[j] = a.re.clone();
                im[j] = a.im.clone();
            }
            None => c = a.clone(),
        }
    }
    let rhs = vec![-&c.re + dot(&im, y), -&c.im - dot(&re, y)];
    solve(&vec![re, im], &rhs).is_some()
}

/// For `f(z) = zᵀAz` real: `f(x + iy) = 0` iff `xᵀAx = yᵀAy` and `xᵀAy = 0`.
fn quadratic_inside(a: &[Vec<Rational>], y: &[Rational]) -> bool {
    let w = mat_vec(&a.to_vec(), y);
    let c = dot(&w, y);
    if c.is_zero() || w.iter().all(|x| x.is_zero()) {
        return true;
    }
    let basis = nullspace(&vec![w], y.len());
    let (pos, neg, _) = inertia(&restrict_form(&a.to_vec(), &basis));
    if c.is_positive() {
        pos > 0
    } else {
        neg > 0
    }
}

fn pencil_membership(p: &HermitianPencil, f: &MPoly, y: &[Rational], cfg: &MembershipConfig) -> Result<Membership> {
    let m = |inside| Membership::exact(inside, MembershipMethod::ExactHermitianPencil);
    // A(y) definite: A(y)^{-1/2} A(x) A(y)^{-1/2} + iI is invertible for every real x.
    if p.is_definite_at(y)? {
        return Ok(m(false));
    }
    let ay = p.at(y)?;
    if cdet(&ay).is_zero() {
        return Ok(m(true));
    }
    if !f.is_zero() {
        if let Some(e) = exact_membership(f, y)? {
            return Ok(m(e.is_inside()));
        }
    }
    if pencil_witness(p, y, cfg)?.is_some() {
        return Ok(m(true));
    }
    match cfg.mode {
        Mode::Exact => Err(Error::NoExactRoute(format!(
            "pencil of size {} in {} variables with indefinite A(y) and no witness found",
            p.size(),
            p.n()
        ))),
        _ => {
            let h = if f.is_zero() {
                Membership { value: MembershipValue::Unknown, method: MembershipMethod::NumericHeuristic }
            } else {
                heuristic_membership(f, y, cfg)
            };
            Ok(h)
        }
    }
}

/// A real `x` for which `t -> det(A(x) + t A(y))` has a non-real root `a + ib`;
/// then `(x + a y)/b + i y` is a zero of the determinant, so `y ∈ I(f)`.
pub fn pencil_witness(p: &HermitianPencil, y: &[Rational], cfg: &MembershipConfig) -> Result<Option<Vec<Rational>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..cfg.pencil_samples {
        let x = crate::hyperbolicity::gaussian_rational_vec(&mut rng, p.n());
        let line = pencil_line(p, &x, y)?;
        if !line.is_zero() && !all_roots_real(&line)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// `t -> det(A(x) + t A(y))` by interpolation at `t = 0..=d`.
pub(crate) fn pencil_line(p: &HermitianPencil, x: &[Rational], y: &[Rational]) -> Result<QPoly> {
    let d = p.size();
    let ts: Vec<Rational> = (0..=d as i64).map(|t| Rational::from_integer(t.into())).collect();
    let mut vals = Vec::with_capacity(d + 1);
    for t in &ts {
        let pt: Vec<Rational> = x.iter().zip(y).map(|(a, b)| a + t * b).collect();
        let m = p.at(&pt)?;
        vals.push(cdet(&m).re);
    }
    Ok(interpolate(&ts, &vals))
}

/// Lagrange interpolation through `(xs[i], vs[i])`.
pub(crate) fn interpolate(xs: &[Rational], vs: &[Rational]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, xi) in xs.iter().enumerate() {
        let mut basis = QPoly::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis.mul(&QPoly::linear_root(xj));
                denom *= xi - xj;
            }
        }
        acc = acc.add(&basis.scale(&(&vs[i] / denom)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::mpoly_from_ints;
    use crate::algebra::{int, rat};

    fn exact() -> MembershipConfig {
        MembershipConfig::with_mode(Mode::Exact)
    }

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn coordinate_cross() {
        let f = mpoly_from_ints(2, &[(1, &[1, 1])]);
        let m = membership(&f, &pt(&[1, 1]), &exact()).unwrap();
        assert_eq!(m, Membership::exact(false, MembershipMethod::ExactBivariateResultant));
        assert!(membership(&f, &pt(&[0, 3]), &exact()).unwrap().is_inside());
    }

    #[test]
    fn lorentz_quadratic_route() {
        let f = mpoly_from_ints(3, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0]), (-1, &[0, 0, 2])]);
        let m = membership(&f, &pt(&[2, 1, 1]), &exact()).unwrap();
        assert_eq!(m, Membership::exact(false, MembershipMethod::ExactQuadratic));
        assert!(membership(&f, &pt(&[1, 1, 0]), &exact()).unwrap().is_inside());
        assert!(membership(&f, &pt(&[0, 1, 0]), &exact()).unwrap().is_inside());
        assert!(membership(&f, &pt(&[0, 0, 0]), &exact()).unwrap().is_inside());
    }

    #[test]
    fn univariate_route() {
        // z^2 + 1 has roots ±i.
        let f = mpoly_from_ints(1, &[(1, &[2]), (1, &[0])]);
        assert!(membership(&f, &pt(&[1]), &exact()).unwrap().is_inside());
        assert!(membership(&f, &pt(&[-1]), &exact()).unwrap().is_inside());
        assert!(membership(&f, &[rat(1, 2)], &exact()).unwrap().is_outside());
    }

    #[test]
    fn complex_linear_route() {
        // z1 + i z2: real and imaginary coefficient parts are independent, so I(f) is everything.
        let mut f = MPoly::var(2, 0);
        f.add_term(crate::algebra::Monomial::new(vec![0, 1]), CRational::i());
        assert!(membership(&f, &pt(&[3, -5]), &exact()).unwrap().is_inside());
        // z1 + z2 + 1 real: Inside exactly on y1 + y2 = 0.
        let g = mpoly_from_ints(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 0])]);
        assert!(membership(&g, &pt(&[1, -1, 7]), &exact()).unwrap().is_inside());
        assert!(membership(&g, &pt(&[1, 1, 7]), &exact()).unwrap().is_outside());
    }

    #[test]
    fn pencil_examples() {
        let c = |n| CRational::from_int(n);
        let p = HermitianPencil::new(vec![
            vec![vec![c(1), c(0)], vec![c(0), c(1)]],
            vec![vec![c(1), c(0)], vec![c(0), c(-1)]],
        ])
        .unwrap();
        let sp = StructuredPoly::pencil(p).unwrap();
        let m = membership_structured(&sp, &pt(&[2, 1]), &exact()).unwrap();
        assert_eq!(m, Membership::exact(false, MembershipMethod::ExactHermitianPencil));
        // det = (z1 + z2)(z1 - z2): (1, 2) lies on neither line.
        assert!(membership_structured(&sp, &pt(&[1, 2]), &exact()).unwrap().is_outside());
        assert!(membership_structured(&sp, &pt(&[2, -2]), &exact()).unwrap().is_inside());
    }

    #[test]
    fn pencil_witness_matches_quadratic_route() {
        let c = |n| CRational::from_int(n);
        let i = CRational::i();
        let p = HermitianPencil::new(vec![
            vec![vec![c(1), c(0)], vec![c(0), c(1)]],
            vec![vec![c(0), c(1)], vec![c(1), c(0)]],
            vec![vec![c(0), i.clone()], vec![-&i, c(0)]],
        ])
        .unwrap();
        let cfg = exact();
        assert!(pencil_witness(&p, &pt(&[1, 2, 0]), &cfg).unwrap().is_some());
        assert!(pencil_witness(&p, &pt(&[3, 1, 1]), &cfg).unwrap().is_none());
    }

    #[test]
    fn union_rule_over_factors() {
        let f = mpoly_from_ints(2, &[(1, &[2, 0]), (1, &[0, 2]), (25, &[0, 0])]);
        let g = mpoly_from_ints(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let sp = StructuredPoly::from_factors(vec![f, g]).unwrap();
        assert!(membership_structured(&sp, &pt(&[1, 1]), &exact()).unwrap().is_inside());
        assert!(membership_structured(&sp, &pt(&[1, 2]), &exact()).unwrap().is_outside());
        assert!(membership_structured(&sp, &pt(&[6, 0]), &exact()).unwrap().is_inside());
    }

    #[test]
    fn exact_mode_refuses_without_route() {
        let f = mpoly_from_ints(3, &[(1, &[3, 0, 0]), (1, &[0, 1, 2]), (1, &[0, 0, 0])]);
        assert!(matches!(membership(&f, &pt(&[1, 1, 1]), &exact()), Err(Error::NoExactRoute(_))));
        let m = membership(&f, &pt(&[1, 1, 1]), &MembershipConfig::default()).unwrap();
        assert_eq!(m.method, MembershipMethod::NumericHeuristic);
        assert_ne!(m.value, MembershipValue::Outside);
    }
}
