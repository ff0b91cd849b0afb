//! Hyperbolicity tests, hyperbolicity-cone membership and cone counts.

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::linalg::{
    congruence_diagonalize, dot, inertia, mat_vec, nullspace, quadratic_form_matrix, rank, restrict_form, solve,
    QMatrix,
};
use crate::algebra::{CRational, MPoly, QPoly, Rational};
use crate::arrangement::{chambers, strict_witness, zaslavsky_central, LinearFormSet};
use crate::error::{check_dim, Error, Result};
use crate::realroots::{all_roots_real, count_real_roots, separating_points, squarefree_decomposition, Endpoint};
use crate::structured::{linear_form_of, Structure, StructuredPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HyperbolicityStatus {
    Hyperbolic,
    NotHyperbolic,
    ProbablyHyperbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HyperbolicityMethod {
    ExactBivariate,
    ExactQuadratic,
    ExactLinearProduct,
    ExactDiagonalDet,
    ExactHermitianPencil,
    Randomized { samples: usize },
}

impl HyperbolicityMethod {
    pub fn is_exact(self) -> bool {
        !matches!(self, HyperbolicityMethod::Randomized { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperbolicityVerdict {
    pub status: HyperbolicityStatus,
    /// A real `x` for which `t -> f(x + t e)` has a non-real root.
    #[serde(serialize_with = "crate::algebra::scalar::serde_rational::option_vec::serialize")]
    pub witness: Option<Vec<Rational>>,
    pub method: HyperbolicityMethod,
    pub reason: Option<String>,
}

impl HyperbolicityVerdict {
    fn hyperbolic(method: HyperbolicityMethod) -> Self {
        HyperbolicityVerdict { status: HyperbolicityStatus::Hyperbolic, witness: None, method, reason: None }
    }

    fn not(method: HyperbolicityMethod, witness: Vec<Rational>) -> Self {
        HyperbolicityVerdict {
            status: HyperbolicityStatus::NotHyperbolic,
            witness: Some(witness),
            method,
            reason: Some("t -> f(x + t e) has a non-real root".into()),
        }
    }

    pub fn is_not_hyperbolic(&self) -> bool {
        self.status == HyperbolicityStatus::NotHyperbolic
    }
}

#[derive(Clone, Debug)]
pub struct HyperbolicityConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for HyperbolicityConfig {
    fn default() -> Self {
        HyperbolicityConfig { samples: 256, seed: 0 }
    }
}

/// Rational approximation of a standard Gaussian with denominator `2^16`.
pub fn gaussian_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let z: f64 = rng.sample(StandardNormal);
    Rational::new(((z * 65536.0).round() as i64).into(), 65536.into())
}

pub fn gaussian_rational_vec<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| gaussian_rational(rng)).collect()
}

/// `f / f(e)` if `f` is homogeneous and that quotient is real.
fn normalize(f: &MPoly, e: &[Rational]) -> Result<Option<MPoly>> {
    check_dim(f.nvars(), e.len())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let fe = f.eval_rational(e)?;
    if fe.is_zero() {
        return Ok(None);
    }
    let g = f.scale(&fe.inv());
    if !g.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    Ok(Some(g))
}

fn vanishes() -> HyperbolicityVerdict {
    HyperbolicityVerdict {
        status: HyperbolicityStatus::NotHyperbolic,
        witness: None,
        method: HyperbolicityMethod::ExactLinearProduct,
        reason: Some("vanishes at direction".into()),
    }
}

fn line_is_real_rooted(g: &MPoly, x: &[Rational], e: &[Rational]) -> Result<bool> {
    let line = g.restrict_line(x, e)?.to_real().ok_or(Error::NonRealCoefficients)?;
    if line.is_zero() {
        return Ok(true);
    }
    all_roots_real(&line)
}

pub fn is_hyperbolic(f: &MPoly, e: &[Rational], cfg: &HyperbolicityConfig) -> Result<HyperbolicityVerdict> {
    is_hyperbolic_structured(&StructuredPoly::generic(f.clone()), e, cfg)
}

pub fn is_hyperbolic_structured(
    f: &StructuredPoly,
    e: &[Rational],
    cfg: &HyperbolicityConfig,
) -> Result<HyperbolicityVerdict> {
    use HyperbolicityMethod::*;
    let Some(g) = normalize(f.poly(), e)? else {
        let mut v = vanishes();
        v.method = match f.structure() {
            Structure::DiagDet(_) => ExactDiagonalDet,
            Structure::Pencil(_) => ExactHermitianPencil,
            Structure::Generic if f.nvars() == 2 => ExactBivariate,
            _ => v.method,
        };
        return Ok(v);
    };
    match f.structure() {
        // Every linear factor is nonzero at e, so each line has real roots.
        Structure::LinearForms(_) => return Ok(HyperbolicityVerdict::hyperbolic(ExactLinearProduct)),
        Structure::DiagDet(_) => return Ok(HyperbolicityVerdict::hyperbolic(ExactDiagonalDet)),
        Structure::Pencil(p) => {
            if p.is_definite_at(e)? {
                return Ok(HyperbolicityVerdict::hyperbolic(ExactHermitianPencil));
            }
        }
        Structure::Factors(fs) => return factors_hyperbolic(fs, e, cfg),
        Structure::Generic => {}
    }
    generic_hyperbolic(&g, e, cfg)
}

fn factors_hyperbolic(fs: &[MPoly], e: &[Rational], cfg: &HyperbolicityConfig) -> Result<HyperbolicityVerdict> {
    let mut exact = true;
    let mut method = HyperbolicityMethod::ExactLinearProduct;
    for h in fs {
        let v = is_hyperbolic(h, e, cfg)?;
        match v.status {
            HyperbolicityStatus::NotHyperbolic => return Ok(v),
            HyperbolicityStatus::ProbablyHyperbolic => {
                exact = false;
                method = v.method;
            }
            HyperbolicityStatus::Hyperbolic => {
                if exact {
                    method = v.method;
                }
            }
        }
    }
    let status = if exact { HyperbolicityStatus::Hyperbolic } else { HyperbolicityStatus::ProbablyHyperbolic };
    Ok(HyperbolicityVerdict { status, witness: None, method, reason: None })
}

/// `g` real, homogeneous, `g(e) = 1`.
fn generic_hyperbolic(g: &MPoly, e: &[Rational], cfg: &HyperbolicityConfig) -> Result<HyperbolicityVerdict> {
    use HyperbolicityMethod::*;
    let n = g.nvars();
    let d = g.degree().unwrap_or(0);
    if d <= 1 {
        return Ok(HyperbolicityVerdict::hyperbolic(ExactLinearProduct));
    }
    if n == 2 {
        // All roots of a binary form real iff every linear factor is real; then
        // each line meets it in real points. Otherwise a complex factor gives a
        // non-real root on every line not parallel to e.
        if binary_form_real_rooted(g)? {
            return Ok(HyperbolicityVerdict::hyperbolic(ExactBivariate));
        }
        let x = vec![-e[1].clone(), e[0].clone()];
        debug_assert!(!line_is_real_rooted(g, &x, e)?);
        return Ok(HyperbolicityVerdict::not(ExactBivariate, x));
    }
    if d == 2 {
        let a = quadratic_form_matrix(g).expect("real homogeneous quadratic");
        return Ok(match quadratic_witness(&a, e) {
            None => HyperbolicityVerdict::hyperbolic(ExactQuadratic),
            Some(x) => HyperbolicityVerdict::not(ExactQuadratic, x),
        });
    }
    randomized(g, e, cfg)
}

/// Whether the real binary form `g(z1, z2)` splits into real linear factors.
fn binary_form_real_rooted(g: &MPoly) -> Result<bool> {
    let d = g.degree().unwrap_or(0) as usize;
    let p = g.eval_var(0, &CRational::one()).to_qpoly(1).ok_or(Error::NonRealCoefficients)?;
    let at_infinity = d - p.deg0();
    let mut real = 0;
    for (q, m) in squarefree_decomposition(&p)? {
        real += count_real_roots(&q, None)? * m;
    }
    Ok(real + at_infinity == d)
}

/// For `g = xᵀAx` with `g(e) > 0`: `None` if `A` has exactly one positive
/// eigenvalue, else a positive direction `x` that is `A`-orthogonal to `e`, so
/// that `g(x + te)` has discriminant `-4 g(x) g(e) < 0`.
fn quadratic_witness(a: &QMatrix, e: &[Rational]) -> Option<Vec<Rational>> {
    let (pos, _, _) = inertia(a);
    if pos == 1 {
        return None;
    }
    let ae = mat_vec(a, e);
    let basis = nullspace(&vec![ae], e.len());
    let (d, p) = congruence_diagonalize(&restrict_form(a, &basis));
    let k = d.iter().position(|x| x.is_positive())?;
    let coeffs: Vec<Rational> = p.iter().map(|row| row[k].clone()).collect();
    let n = e.len();
    let mut x = vec![Rational::zero(); n];
    for (c, b) in coeffs.iter().zip(&basis) {
        for j in 0..n {
            x[j] += c * &b[j];
        }
    }
    Some(x)
}

fn sample_point(seed: u64, index: usize, n: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    gaussian_rational_vec(&mut rng, n)
}

fn randomized(g: &MPoly, e: &[Rational], cfg: &HyperbolicityConfig) -> Result<HyperbolicityVerdict> {
    let n = g.nvars();
    let failing = (0..cfg.samples).into_par_iter().find_first(|&i| {
        let x = sample_point(cfg.seed, i, n);
        !line_is_real_rooted(g, &x, e).unwrap_or(true)
    });
    let method = HyperbolicityMethod::Randomized { samples: cfg.samples };
    Ok(match failing {
        Some(i) => HyperbolicityVerdict::not(method, sample_point(cfg.seed, i, n)),
        None => HyperbolicityVerdict {
            status: HyperbolicityStatus::ProbablyHyperbolic,
            witness: None,
            method,
            reason: Some(format!("{} sampled lines have only real roots", cfg.samples)),
        },
    })
}

/// Whether `v` lies in the hyperbolicity cone `C(e)`: every root of
/// `t -> f(v + t e)` is negative.
pub fn cone_membership(f: &MPoly, e: &[Rational], v: &[Rational]) -> Result<bool> {
    let v_e = is_hyperbolic(f, e, &HyperbolicityConfig::default())?;
    if v_e.is_not_hyperbolic() {
        return Err(Error::NotHyperbolicDirection(
            v_e.reason.unwrap_or_else(|| "f is not hyperbolic in direction e".into()),
        ));
    }
    cone_membership_unchecked(f, e, v)
}

/// `cone_membership` without re-testing hyperbolicity of `e`.
pub fn cone_membership_unchecked(f: &MPoly, e: &[Rational], v: &[Rational]) -> Result<bool> {
    let g = normalize(f, e)?.ok_or_else(|| Error::NotHyperbolicDirection("vanishes at direction".into()))?;
    check_dim(f.nvars(), v.len())?;
    let p: QPoly = g.restrict_line(v, e)?.to_real().ok_or(Error::NonRealCoefficients)?;
    if p.eval(&Rational::zero()).is_zero() {
        return Ok(false);
    }
    Ok(count_real_roots(&p, Some((Endpoint::Finite(Rational::zero()), Endpoint::PosInf)))? == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConeCountMethod {
    ExactBivariate,
    ExactLinearProduct,
    ExactQuadratic,
    ExactQuadricTimesLinear,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConeCountReport {
    pub count: usize,
    pub pairs: usize,
    pub method: ConeCountMethod,
    /// One direction inside each cone.
    #[serde(serialize_with = "ser_witnesses")]
    pub witnesses: Vec<Vec<Rational>>,
}

fn ser_witnesses<S: serde::Serializer>(w: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(w.len()))?;
    for v in w {
        seq.serialize_element(&v.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
    }
    seq.end()
}

impl ConeCountReport {
    fn new(method: ConeCountMethod, witnesses: Vec<Vec<Rational>>) -> Self {
        ConeCountReport { count: witnesses.len(), pairs: witnesses.len() / 2, method, witnesses }
    }
}

fn neg(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x).collect()
}

/// Cones of a real binary form: `2k` for `k` distinct real projective roots if
/// all roots are real, otherwise none.
pub fn count_cones_bivariate(f: &MPoly) -> Result<ConeCountReport> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedDimension(f.nvars()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let g = f.real_multiple().ok_or(Error::NonRealCoefficients)?;
    let method = ConeCountMethod::ExactBivariate;
    if g.is_constant() {
        return Ok(ConeCountReport::new(method, vec![vec![Rational::one(), Rational::zero()]]));
    }
    if !binary_form_real_rooted(&g)? {
        return Ok(ConeCountReport::new(method, Vec::new()));
    }
    let d = g.degree().unwrap_or(0) as usize;
    let p = g.eval_var(0, &CRational::one()).to_qpoly(1).expect("real");
    let at_infinity = d > p.deg0();
    // Directions (1, s) for s between consecutive slopes lie in distinct cones of
    // the right half-plane; without a vertical line the two outermost are one cone.
    let mut pts = separating_points(&p)?;
    if !at_infinity && pts.len() > 1 {
        pts.pop();
    }
    let mut w: Vec<Vec<Rational>> = pts.into_iter().map(|s| vec![Rational::one(), s]).collect();
    let negs: Vec<Vec<Rational>> = w.iter().map(|v| neg(v)).collect();
    w.extend(negs);
    Ok(ConeCountReport::new(method, w))
}

/// Cones of a product of real linear forms: the chambers of the arrangement.
pub fn count_cones_linear_product(fs: &LinearFormSet) -> ConeCountReport {
    let w = chambers(&fs.deduplicate()).into_iter().map(|c| c.witness).collect();
    ConeCountReport::new(ConeCountMethod::ExactLinearProduct, w)
}

/// Cones of a real quadratic form from its inertia.
pub fn count_cones_quadratic(f: &MPoly) -> Result<ConeCountReport> {
    let g = f.real_multiple().ok_or(Error::NonRealCoefficients)?;
    let a = quadratic_form_matrix(&g).ok_or_else(|| Error::InvalidArgument("not a homogeneous quadratic".into()))?;
    let (d, p) = congruence_diagonalize(&a);
    let col = |k: usize| -> Vec<Rational> { p.iter().map(|r| r[k].clone()).collect() };
    let pos: Vec<usize> = (0..d.len()).filter(|&k| d[k].is_positive()).collect();
    let negs: Vec<usize> = (0..d.len()).filter(|&k| d[k].is_negative()).collect();
    let mut w = Vec::new();
    if pos.len() == 1 && negs.len() == 1 {
        // A product of two distinct real linear forms: four sectors.
        let (x, y) = (col(pos[0]), col(negs[0]));
        w = vec![neg(&x), x, neg(&y), y];
    } else if pos.len() == 1 {
        let x = col(pos[0]);
        w = vec![x.clone(), neg(&x)];
    } else if negs.len() == 1 {
        let x = col(negs[0]);
        w = vec![x.clone(), neg(&x)];
    }
    Ok(ConeCountReport::new(ConeCountMethod::ExactQuadratic, w))
}

/// Cones of `q · Π l_k` for a real quadratic form `q` of signature `(1, n-1)` and
/// real linear forms `l_k`. Each chamber `C` of the forms contributes `C ∩ K`
/// and `C ∩ -K` for the open cone `K` of `q`, when nonempty; by symmetry the
/// count is twice the number of chambers meeting `K`.
pub fn count_cones_quadric_times_linear(q: &MPoly, fs: &LinearFormSet) -> Result<ConeCountReport> {
    let n = fs.dim();
    check_dim(n, q.nvars())?;
    let g = q.real_multiple().ok_or(Error::NonRealCoefficients)?;
    let a = quadratic_form_matrix(&g).ok_or_else(|| Error::InvalidArgument("not a homogeneous quadratic".into()))?;
    let (d, p) = congruence_diagonalize(&a);
    let pos = d.iter().filter(|x| x.is_positive()).count();
    let negc = d.iter().filter(|x| x.is_negative()).count();
    // Make the signature (1, n - 1) by flipping the sign of q if needed.
    let d: Vec<Rational> = match (pos, negc) {
        (1, m) if m == n - 1 => d,
        (m, 1) if m == n - 1 => d.iter().map(|x| -x).collect(),
        _ => {
            return Err(Error::InvalidArgument(
                "quadratic factor must be nondegenerate with one sign different from the rest".into(),
            ))
        }
    };
    let k0 = d.iter().position(|x| x.is_positive()).expect("one positive entry");
    let others: Vec<usize> = (0..n).filter(|&k| k != k0).collect();
    // Coordinates u with y = P u: q = d_0 u_0² - Σ w_k u_k² (w_k > 0 here).
    let forms_u: Vec<Vec<Rational>> = fs
        .deduplicate()
        .forms()
        .iter()
        .map(|l| (0..n).map(|k| (0..n).map(|j| &l[j] * &p[j][k]).sum()).collect())
        .collect();
    let weights: Vec<Rational> = others.iter().map(|&k| -&d[k]).collect();
    let mut w = Vec::new();
    let dedup = fs.deduplicate();
    for c in chambers(&dedup) {
        if let Some(u) = chamber_meets_cone(&forms_u, &c.signs, k0, &others, &d[k0], &weights) {
            let y: Vec<Rational> = (0..n).map(|j| (0..n).map(|k| &p[j][k] * &u[k]).sum()).collect();
            w.push(y);
        }
    }
    let negs: Vec<Vec<Rational>> = w.iter().map(|v| neg(v)).collect();
    w.extend(negs);
    Ok(ConeCountReport::new(ConeCountMethod::ExactQuadricTimesLinear, w))
}

/// A point `u` with `s_l l_l(u) > 0` for all `l`, `u_{k0} > 0` and
/// `d0 u_{k0}² > Σ w_k u_k²`, if one exists.
fn chamber_meets_cone(
    forms: &[Vec<Rational>],
    signs: &[i8],
    k0: usize,
    others: &[usize],
    d0: &Rational,
    weights: &[Rational],
) -> Option<Vec<Rational>> {
    let n = others.len() + 1;
    let mut e0 = vec![Rational::zero(); n];
    e0[k0] = Rational::one();
    let mut rows: Vec<(&[Rational], i8)> = forms.iter().zip(signs).map(|(f, &s)| (f.as_slice(), s)).collect();
    rows.push((e0.as_slice(), 1));
    strict_witness(n, &rows)?;
    // Chart u_{k0} = 1: the open polyhedron {v : a_l · v > b_l} must meet the
    // open ellipsoid Σ w_k v_k² < d0. The weighted least-norm point of the
    // closure is the least-norm solution on some face's affine hull.
    let a: Vec<Vec<Rational>> = forms
        .iter()
        .zip(signs)
        .map(|(f, &s)| others.iter().map(|&k| if s > 0 { f[k].clone() } else { -f[k].clone() }).collect())
        .collect();
    let b: Vec<Rational> =
        forms.iter().zip(signs).map(|(f, &s)| if s > 0 { -f[k0].clone() } else { f[k0].clone() }).collect();
    let m = others.len();
    let norm = |v: &[Rational]| -> Rational { v.iter().zip(weights).map(|(x, w)| x * x * w).sum() };
    let feasible = |v: &[Rational]| a.iter().zip(&b).all(|(r, bb)| dot(r, v) >= *bb);
    let mut best: Option<Vec<Rational>> = None;
    let mut consider = |v: Vec<Rational>| {
        if feasible(&v) && best.as_ref().is_none_or(|bv| norm(&v) < norm(bv)) {
            best = Some(v);
        }
    };
    consider(vec![Rational::zero(); m]);
    let rows_idx: Vec<usize> = (0..a.len()).collect();
    for size in 1..=m.min(a.len()) {
        for subset in combinations(&rows_idx, size) {
            let sub: QMatrix = subset.iter().map(|&i| a[i].clone()).collect();
            if rank(&sub) < size {
                continue;
            }
            // v = W⁻¹ Aᵀ λ with (A W⁻¹ Aᵀ) λ = b.
            let winv_at: Vec<Vec<Rational>> =
                sub.iter().map(|r| r.iter().zip(weights).map(|(x, w)| x / w).collect()).collect();
            let gram: QMatrix = sub.iter().map(|r| winv_at.iter().map(|c| dot(r, c)).collect()).collect();
            let rhs: Vec<Rational> = subset.iter().map(|&i| b[i].clone()).collect();
            let Some(lam) = solve(&gram, &rhs) else { continue };
            let mut v = vec![Rational::zero(); m];
            for (l, c) in lam.iter().zip(&winv_at) {
                for k in 0..m {
                    v[k] += l * &c[k];
                }
            }
            consider(v);
        }
    }
    let v = best?;
    if norm(&v) >= *d0 {
        return None;
    }
    // The closest point may sit on the boundary; move towards the chamber's
    // interior witness while staying inside the ellipsoid.
    let inner = strict_witness(n, &rows).expect("checked above");
    let inner_v: Vec<Rational> = others.iter().map(|&k| &inner[k] / &inner[k0]).collect();
    let mut t = Rational::new(1.into(), 2.into());
    loop {
        let cand: Vec<Rational> = v.iter().zip(&inner_v).map(|(x, y)| x + &t * (y - x)).collect();
        if norm(&cand) < *d0 && a.iter().zip(&b).all(|(r, bb)| dot(r, &cand) > *bb) {
            let mut u = vec![Rational::zero(); n];
            u[k0] = Rational::one();
            for (c, &k) in cand.iter().zip(others) {
                u[k] = c.clone();
            }
            return Some(u);
        }
        t /= Rational::from_integer(2.into());
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Count the cones of `f` by whichever exact route its structure admits.
pub fn count_cones(f: &StructuredPoly) -> Result<ConeCountReport> {
    match f.structure() {
        Structure::LinearForms(fs) | Structure::DiagDet(fs) => return Ok(count_cones_linear_product(fs)),
        Structure::Factors(gs) => {
            let (quads, lins): (Vec<&MPoly>, Vec<&MPoly>) = gs.iter().partition(|g| g.degree() == Some(2));
            if quads.len() == 1 && lins.iter().all(|g| g.degree() == Some(1) && g.is_homogeneous()) && !lins.is_empty()
            {
                let forms: Option<Vec<Vec<Rational>>> = lins.iter().map(|g| linear_form_of(g)).collect();
                if let Some(forms) = forms {
                    let fs = LinearFormSet::new(f.nvars(), forms)?;
                    if let Ok(r) = count_cones_quadric_times_linear(quads[0], &fs) {
                        return Ok(r);
                    }
                }
            }
        }
        _ => {}
    }
    let g = f.poly();
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if g.nvars() == 2 {
        return count_cones_bivariate(g);
    }
    if g.degree() == Some(2) {
        return count_cones_quadratic(g);
    }
    if g.degree() == Some(1) {
        if let Some(a) = linear_form_of(g) {
            return Ok(count_cones_linear_product(&LinearFormSet::new(g.nvars(), vec![a])?));
        }
    }
    Err(Error::NoExactRoute(format!(
        "no exact cone count for a degree {} form in {} variables",
        g.degree().unwrap_or(0),
        g.nvars()
    )))
}

/// Largest possible number of hyperbolicity cones of a degree-`d` form in `n` variables.
pub fn upper_bound(n: usize, d: usize) -> u128 {
    if d <= n {
        1u128 << d
    } else {
        zaslavsky_central(n, d)
    }
}
