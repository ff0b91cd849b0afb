//! Builders for the polynomial families used in examples, tests and the CLI.

mod catalog;

pub use catalog::{build, catalog, CatalogSpec, ParamSpec};

use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::linalg::CMatrix;
use crate::algebra::mpoly::mpoly_from_ints;
use crate::algebra::{int, rat_from_f64, CRational, MPoly, Rational};
use crate::arrangement::{general_position, LinearFormSet};
use crate::error::{Error, Result};
use crate::improj::HermitianPencil;
use crate::structured::StructuredPoly;

/// Values a construction is known to produce, each with a short justification.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cones: Option<usize>,
    /// Two-dimensional complement components of a bivariate polynomial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounded_components: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unbounded_components: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strictly_convex_at_least: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit_directions: Option<usize>,
    pub citations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(serialize_with = "ser_display")]
    pub poly: MPoly,
    #[serde(skip)]
    pub structured: StructuredPoly,
    pub expected: Expected,
}

fn ser_display<S: serde::Serializer>(p: &MPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

impl CatalogEntry {
    fn new(name: &str, params: &[(&str, String)], structured: StructuredPoly, expected: Expected) -> Self {
        CatalogEntry {
            name: name.into(),
            parameters: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            poly: structured.poly().clone(),
            structured,
            expected,
        }
    }
}

fn cite(s: &str) -> Vec<String> {
    vec![s.to_string()]
}

pub fn coordinate_product(n: usize) -> Result<CatalogEntry> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let forms: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    let sp = StructuredPoly::linear_forms(LinearFormSet::new(n, forms)?);
    let expected = Expected {
        cones: Some(1 << n),
        unbounded_components: (n == 2).then_some(4),
        bounded_components: (n == 2).then_some(0),
        citations: cite("I(f) is the union of the coordinate hyperplanes; its complement is the 2^n open orthants"),
        ..Default::default()
    };
    Ok(CatalogEntry::new("coordinate_product", &[("n", n.to_string())], sp, expected))
}

/// `z1² - z2² - ... - zn²`.
pub fn lorentz(n: usize) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let mut f = MPoly::var(n, 0).pow(2);
    for j in 1..n {
        f = f.sub(&MPoly::var(n, j).pow(2))?;
    }
    let expected = Expected {
        cones: Some(if n == 2 { 4 } else { 2 }),
        citations: cite(if n == 2 {
            "z1^2 - z2^2 splits into two real lines, four sectors"
        } else {
            "complement of I(f) is the open Lorentz cone and its negative"
        }),
        ..Default::default()
    };
    Ok(CatalogEntry::new("lorentz", &[("n", n.to_string())], StructuredPoly::generic(f), expected))
}

/// `det(Σ_j z_j diag(a_1^(j), ..., a_d^(j)))`; row `l` of `diagonals` holds the
/// `l`-th diagonal entries of all `n` matrices.
pub fn diag_det(diagonals: &[Vec<Rational>]) -> Result<CatalogEntry> {
    let n = diagonals.first().map(|r| r.len()).ok_or_else(|| Error::InvalidArgument("no rows".into()))?;
    if let Some(l) = diagonals.iter().position(|r| r.iter().all(|x| x.is_zero())) {
        return Err(Error::InvalidArgument(format!("diagonal row {} is zero", l + 1)));
    }
    let fs = LinearFormSet::new(n, diagonals.to_vec())?;
    let cones = crate::arrangement::chambers(&fs.deduplicate()).len();
    let expected = Expected {
        cones: Some(cones),
        citations: cite(
            "a diagonal pencil determinant is a product of real linear forms; I(f) is their hyperplane arrangement",
        ),
        ..Default::default()
    };
    let text = diagonals
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";");
    Ok(CatalogEntry::new("diag_det", &[("rows", text)], StructuredPoly::diag_det(fs), expected))
}

pub fn hermitian_det(mats: Vec<CMatrix>) -> Result<CatalogEntry> {
    let p = HermitianPencil::new(mats)?;
    let sp = StructuredPoly::pencil(p.clone())?;
    let params = [("n", p.n().to_string()), ("size", p.size().to_string())];
    Ok(CatalogEntry::new(
        "hermitian_det",
        &params,
        sp,
        Expected {
            citations: cite("the spectrahedral cone {A(y) positive definite} is a complement component"),
            ..Default::default()
        },
    ))
}

/// The Pauli pencil `I, σ_z, σ_x`, whose determinant is `z1² - z2² - z3²`.
pub fn pauli_pencil() -> Result<CatalogEntry> {
    let c = |a: i64, b: i64| CRational::new(int(a), int(b));
    let mats = vec![
        vec![vec![c(1, 0), c(0, 0)], vec![c(0, 0), c(1, 0)]],
        vec![vec![c(1, 0), c(0, 0)], vec![c(0, 0), c(-1, 0)]],
        vec![vec![c(0, 0), c(1, 0)], vec![c(1, 0), c(0, 0)]],
    ];
    let mut e = hermitian_det(mats)?;
    e.name = "pauli".into();
    e.expected.cones = Some(2);
    e.expected.citations.push("the determinant is the Lorentz form in three variables".into());
    Ok(e)
}

/// `(-z1² + z2² - 1)(z1² - z2² - 1)`.
pub fn quartic_g() -> CatalogEntry {
    let f = quartic_g_poly();
    let expected = Expected {
        components: Some(8),
        unbounded_components: Some(8),
        bounded_components: Some(0),
        citations: vec![
            "four convex regions bounded by hyperbolas".into(),
            "the four asymptote rays without the origin are thin components".into(),
        ],
        ..Default::default()
    };
    CatalogEntry::new("quartic_g", &[], StructuredPoly::generic(f), expected)
}

fn quartic_g_poly() -> MPoly {
    let a = mpoly_from_ints(2, &[(-1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])]);
    let b = mpoly_from_ints(2, &[(1, &[2, 0]), (-1, &[0, 2]), (-1, &[0, 0])]);
    a.mul(&b).expect("same ring")
}

/// `(cos, sin)` of `2πj/m`, exact for multiples of a quarter turn and otherwise
/// a rational point on the unit circle within `tol` of the angle.
pub fn rational_rotation(j: i64, m: u64, tol: f64) -> Result<(Rational, Rational)> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let m = m as i64;
    let j = j.rem_euclid(m);
    // Exact quarter turns, then a residual angle in [0, π/2).
    let quarter = (4 * j) / m;
    let residual = std::f64::consts::TAU * (j as f64 / m as f64) - quarter as f64 * std::f64::consts::FRAC_PI_2;
    let (mut c, mut s) = if (4 * j) % m == 0 {
        (Rational::one(), Rational::zero())
    } else {
        // (1 - t², 2t) / (1 + t²) has angle 2 atan t.
        let target = (residual / 2.0).tan();
        let mut q: i64 = 2;
        loop {
            let t = Rational::new(((target * q as f64).round() as i64).into(), q.into());
            let err = (2.0 * crate::algebra::rat_to_f64(&t).atan() - residual).abs();
            if err <= tol || q > (1 << 40) {
                let den = Rational::one() + &t * &t;
                break ((Rational::one() - &t * &t) / &den, (&t + &t) / &den);
            }
            q *= 2;
        }
    };
    for _ in 0..quarter {
        (c, s) = (-s, c);
    }
    Ok((c, s))
}

fn rotate_with(f: &MPoly, c: &Rational, s: &Rational) -> Result<MPoly> {
    let n = f.nvars();
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let k = |x: &Rational| MPoly::constant(n, CRational::real(x.clone()));
    let (z1, z2) = (MPoly::var(n, 0), MPoly::var(n, 1));
    let mut images: Vec<MPoly> = (0..n).map(|j| MPoly::var(n, j)).collect();
    images[0] = z1.mul(&k(c))?.sub(&z2.mul(&k(s))?)?;
    images[1] = z1.mul(&k(s))?.add(&z2.mul(&k(c))?)?;
    f.substitute(&images)
}

/// `f(R(z1, z2), z3, ...)` for the rotation `R` by `2πj/m`, with coefficients
/// rounded from floating point.
pub fn rotate12(f: &MPoly, j: i64, m: u64) -> Result<MPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    if j.rem_euclid(m as i64) == 0 {
        return Ok(f.clone());
    }
    let phi = std::f64::consts::TAU * j as f64 / m as f64;
    rotate_with(f, &rat_from_f64(phi.cos()), &rat_from_f64(phi.sin()))
}

/// As [`rotate12`] but through an exact rational rotation (see [`rational_rotation`]).
pub fn rotate12_rational(f: &MPoly, j: i64, m: u64, tol: f64) -> Result<MPoly> {
    let (c, s) = rational_rotation(j, m, tol)?;
    if c.is_one() {
        return Ok(f.clone());
    }
    rotate_with(f, &c, &s)
}

pub const ROTATION_TOL: f64 = 1e-9;

pub fn p_k2(k: usize, r: &Rational) -> Result<CatalogEntry> {
    if k == 0 || !r.is_positive() {
        return Err(Error::InvalidArgument("need K >= 1 and r > 0".into()));
    }
    let m = k.div_ceil(4);
    let disk =
        MPoly::var(2, 0).pow(2).add(&MPoly::var(2, 1).pow(2))?.add(&MPoly::constant(2, CRational::real(r * r)))?;
    let g = quartic_g_poly();
    let mut factors = vec![disk];
    for j in 0..m {
        factors.push(rotate12_rational(&g, j as i64, m as u64, ROTATION_TOL)?);
    }
    let expected = Expected {
        bounded_components: Some(8 * m),
        strictly_convex_at_least: Some(4 * m),
        citations: vec![
            "each rotated copy of g leaves four strictly convex pieces of the disk".into(),
            "the punctured asymptotes add 4m thin bounded components".into(),
        ],
        ..Default::default()
    };
    Ok(CatalogEntry::new(
        "p_k2",
        &[("K", k.to_string()), ("r", r.to_string()), ("m", m.to_string())],
        StructuredPoly::from_factors(factors)?,
        expected,
    ))
}

pub fn p_kn(k: usize, n: usize, r: &Rational) -> Result<CatalogEntry> {
    if k == 0 || n < 2 || !r.is_positive() {
        return Err(Error::InvalidArgument("need K >= 1, n >= 2 and r > 0".into()));
    }
    let m = k.div_ceil(2);
    let mut ball = MPoly::one(n);
    let mut g = MPoly::one(n).add(&MPoly::var(n, 0).pow(2).scale(&CRational::real(r * r)))?;
    for j in 0..n {
        ball = ball.add(&MPoly::var(n, j).pow(2))?;
        if j > 0 {
            g = g.sub(&MPoly::var(n, j).pow(2))?;
        }
    }
    let mut factors = vec![ball];
    for j in 0..m {
        factors.push(rotate12_rational(&g, j as i64, m as u64, ROTATION_TOL)?);
    }
    let expected = Expected {
        strictly_convex_at_least: Some(2 * m),
        citations: cite("each rotated hyperboloid cuts two strictly convex caps from the unit ball"),
        ..Default::default()
    };
    Ok(CatalogEntry::new(
        "p_kn",
        &[("K", k.to_string()), ("n", n.to_string()), ("r", r.to_string()), ("m", m.to_string())],
        StructuredPoly::from_factors(factors)?,
        expected,
    ))
}

/// `d` integer linear forms in `n` variables in general position, deterministic in `seed`.
pub fn random_independent_linear(n: usize, d: usize, seed: u64) -> Result<LinearFormSet> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let forms: Vec<Vec<Rational>> =
            (0..d).map(|_| (0..n).map(|_| int(rng.random_range(-9..=9))).collect()).collect();
        if forms.iter().any(|f| f.iter().all(|x| x.is_zero())) {
            continue;
        }
        let fs = LinearFormSet::new(n, forms)?;
        if general_position(&fs) && fs.duplicates().is_empty() {
            return Ok(fs);
        }
    }
}

pub fn random_linear_entry(n: usize, d: usize, seed: u64) -> Result<CatalogEntry> {
    let fs = random_independent_linear(n, d, seed)?;
    let expected = Expected {
        cones: Some(crate::hyperbolicity::upper_bound(n, d) as usize),
        citations: cite("independent linear forms attain the largest possible number of cones"),
        ..Default::default()
    };
    Ok(CatalogEntry::new(
        "random_linear",
        &[("n", n.to_string()), ("d", d.to_string()), ("seed", seed.to_string())],
        StructuredPoly::linear_forms(fs),
        expected,
    ))
}

/// `z1² + ... + zn² + c`.
pub fn sphere(n: usize, c: &Rational) -> Result<CatalogEntry> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut f = MPoly::constant(n, CRational::real(c.clone()));
    for j in 0..n {
        f = f.add(&MPoly::var(n, j).pow(2))?;
    }
    let expected = Expected {
        components: (n == 2 && c.is_positive()).then_some(1),
        bounded_components: (n == 2 && c.is_positive()).then_some(1),
        citations: cite("for c > 0 the complement of I(f) is the open ball of radius sqrt(c)"),
        ..Default::default()
    };
    Ok(CatalogEntry::new("sphere", &[("n", n.to_string()), ("c", c.to_string())], StructuredPoly::generic(f), expected))
}

/// `z1² - z2² - 1`.
pub fn hyperbola() -> CatalogEntry {
    let f = mpoly_from_ints(2, &[(1, &[2, 0]), (-1, &[0, 2]), (-1, &[0, 0])]);
    let expected = Expected {
        limit_directions: Some(4),
        citations: cite("the initial form z1^2 - z2^2 has two real lines"),
        ..Default::default()
    };
    CatalogEntry::new("hyperbola", &[], StructuredPoly::generic(f), expected)
}

/// `z1³ - 2 z1² z2 + z1 z2² + z1 + z2 + 1`, initial form `z1 (z1 - z2)²`.
pub fn cubic_six() -> CatalogEntry {
    let f = mpoly_from_ints(2, &[(1, &[3, 0]), (-2, &[2, 1]), (1, &[1, 2]), (1, &[1, 0]), (1, &[0, 1]), (1, &[0, 0])]);
    let expected = Expected {
        components: Some(6),
        cones: None,
        citations: vec![
            "the complement of I(f) has six components".into(),
            "four of them have full-dimensional recession cones, one per sector of the initial form".into(),
        ],
        ..Default::default()
    };
    CatalogEntry::new("cubic_six", &[], StructuredPoly::generic(f), expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_g_value() {
        let z = [CRational::new(int(0), int(2)), CRational::zero()];
        assert_eq!(quartic_g().poly.eval(&z).unwrap(), CRational::from_int(-15));
    }

    #[test]
    fn rotations() {
        let f = mpoly_from_ints(2, &[(1, &[1, 0]), (3, &[0, 2])]);
        assert_eq!(rotate12(&f, 0, 5).unwrap(), f);
        assert_eq!(rotate12_rational(&f, 0, 5, 1e-9).unwrap(), f);
        let quarter = rotate12_rational(&f, 1, 4, 1e-9).unwrap();
        // (z1, z2) -> (-z2, z1)
        assert_eq!(quarter, mpoly_from_ints(2, &[(-1, &[0, 1]), (3, &[2, 0])]));
        let half = rotate12_rational(&f, 1, 2, 1e-9).unwrap();
        assert_eq!(half, mpoly_from_ints(2, &[(-1, &[1, 0]), (3, &[0, 2])]));
        for (j, m) in [(1, 3), (2, 3), (1, 5), (4, 7)] {
            let (c, s) = rational_rotation(j, m, 1e-9).unwrap();
            assert_eq!(&c * &c + &s * &s, Rational::one());
            let phi = std::f64::consts::TAU * j as f64 / m as f64;
            let got = crate::algebra::rat_to_f64(&s).atan2(crate::algebra::rat_to_f64(&c));
            let diff = (got - phi).rem_euclid(std::f64::consts::TAU);
            assert!(diff.min(std::f64::consts::TAU - diff) < 1e-8, "{j}/{m}");
        }
    }

    #[test]
    fn p_k2_small_k_is_one_factor() {
        let a = p_k2(1, &int(5)).unwrap();
        let b = p_k2(4, &int(5)).unwrap();
        assert_eq!(a.poly, b.poly);
        assert_eq!(a.poly.degree(), Some(6));
        assert_eq!(b.expected.bounded_components, Some(8));
        assert_eq!(p_k2(5, &int(5)).unwrap().poly.degree(), Some(10));
    }

    #[test]
    fn p_kn_degree() {
        let e = p_kn(3, 3, &int(4)).unwrap();
        assert_eq!(e.poly.degree(), Some(6));
        assert_eq!(e.poly.nvars(), 3);
    }

    #[test]
    fn diag_det_rows() {
        let e = diag_det(&[vec![int(1), int(1)], vec![int(1), int(-1)]]).unwrap();
        assert_eq!(e.poly, mpoly_from_ints(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert_eq!(e.expected.cones, Some(4));
        assert!(diag_det(&[vec![int(0), int(0)]]).is_err());
        let single = diag_det(&[vec![int(1), int(0)]]).unwrap();
        assert_eq!(single.expected.cones, Some(2));
    }

    #[test]
    fn pencils() {
        let p = pauli_pencil().unwrap();
        assert_eq!(p.poly, lorentz(3).unwrap().poly);
        let c = |a: i64| CRational::from_int(a);
        let e =
            hermitian_det(vec![vec![vec![c(1), c(0)], vec![c(0), c(1)]], vec![vec![c(1), c(0)], vec![c(0), c(-1)]]])
                .unwrap();
        assert_eq!(e.poly, mpoly_from_ints(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
        let cube =
            hermitian_det(vec![vec![vec![c(1), c(0), c(0)], vec![c(0), c(1), c(0)], vec![c(0), c(0), c(1)]]]).unwrap();
        assert_eq!(cube.poly, mpoly_from_ints(1, &[(1, &[3])]));
        let bad = hermitian_det(vec![vec![vec![c(0), c(1)], vec![c(0), c(0)]]]);
        assert!(matches!(bad, Err(Error::NotHermitian { index: 1 })));
    }

    #[test]
    fn random_linear_is_general() {
        for (n, d) in [(2, 3), (3, 3), (2, 5)] {
            let a = random_independent_linear(n, d, 7).unwrap();
            assert!(general_position(&a));
            assert_eq!(a, random_independent_linear(n, d, 7).unwrap());
        }
        let fs = random_independent_linear(3, 3, 1).unwrap();
        assert_eq!(crate::arrangement::chambers(&fs).len(), 8);
        let fs = random_independent_linear(2, 5, 1).unwrap();
        assert_eq!(crate::arrangement::chambers(&fs).len(), 10);
    }
}
