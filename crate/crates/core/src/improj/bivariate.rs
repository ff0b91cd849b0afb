//! Exact existence of real common zeros of two real bivariate polynomials.
//!
//! Polynomials are stored densely in `x2` with coefficients in `ℚ[x1]`.
//! Elimination uses the Sylvester resultant in `x2`; fibres over irrational
//! roots of the resultant are examined with exact sign determination.

use num::Zero;

use crate::algebra::resultant::resultant_coeffs;
use crate::algebra::{CRational, MPoly, Monomial, QPoly, Rational};
use crate::realroots::zpoly::ZPoly;
use crate::realroots::{count_all_z, separating_points, RealAlgebraic};

/// Dense in `x2`: entry `k` is the coefficient of `x2^k`, a polynomial in `x1`.
pub(crate) type BiPoly = Vec<QPoly>;

pub(crate) fn trim(mut p: BiPoly) -> BiPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Convert a real polynomial in two variables.
pub(crate) fn from_mpoly(f: &MPoly) -> BiPoly {
    debug_assert_eq!(f.nvars(), 2);
    let deg2 = f.degree_in(1).unwrap_or(0) as usize;
    let deg1 = f.degree_in(0).unwrap_or(0) as usize;
    let mut out = vec![vec![Rational::zero(); deg1 + 1]; deg2 + 1];
    for (m, c) in f.terms() {
        let e = m.exps();
        out[e[1] as usize][e[0] as usize] = c.re.clone();
    }
    trim(out.into_iter().map(QPoly::new).collect())
}

pub(crate) fn to_mpoly(p: &BiPoly) -> MPoly {
    let mut f = MPoly::zero(2);
    for (k, c) in p.iter().enumerate() {
        for (j, a) in c.coeffs().iter().enumerate() {
            f.add_term(Monomial::new(vec![j as u32, k as u32]), CRational::real(a.clone()));
        }
    }
    f
}

fn is_zero(p: &BiPoly) -> bool {
    p.is_empty()
}

fn deg2(p: &BiPoly) -> usize {
    p.len().saturating_sub(1)
}

fn lc(p: &BiPoly) -> &QPoly {
    p.last().expect("nonzero")
}

fn content(p: &BiPoly) -> QPoly {
    let mut g = QPoly::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_constant() && !g.is_zero() {
            return QPoly::one();
        }
    }
    g
}

fn primitive(p: &BiPoly) -> BiPoly {
    let c = content(p);
    if c.is_constant() {
        return p.clone();
    }
    p.iter().map(|x| x.div_exact(&c).expect("content divides")).collect()
}

fn derivative2(p: &BiPoly) -> BiPoly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into()))).collect())
}

/// Pseudo-remainder in `x2` over `ℚ[x1]`.
fn prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = deg2(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&lr.mul(bc));
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Greatest common divisor in `ℚ[x1, x2]` up to a rational constant.
pub(crate) fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if is_zero(a) {
        return primitive(b);
    }
    if is_zero(b) {
        return primitive(a);
    }
    let cg = content(a).gcd(&content(b));
    let (mut x, mut y) = (primitive(a), primitive(b));
    if deg2(&x) < deg2(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if deg2(&y) == 0 {
            break vec![QPoly::one()];
        }
        let r = prem(&x, &y);
        if is_zero(&r) {
            break primitive(&y);
        }
        x = y;
        y = primitive(&r);
    };
    g.iter().map(|c| c.mul(&cg)).collect()
}

fn div_exact(a: &BiPoly, b: &BiPoly) -> BiPoly {
    from_mpoly(&to_mpoly(a).div_exact(&to_mpoly(b)).expect("exact bivariate division"))
}

fn is_constant(p: &BiPoly) -> bool {
    p.len() <= 1 && p.first().is_none_or(|c| c.is_constant())
}

/// `p(q, x2)` as a polynomial in `x2`.
pub(crate) fn eval_x1(p: &BiPoly, q: &Rational) -> QPoly {
    QPoly::new(p.iter().map(|c| c.eval(q)).collect())
}

/// `Res_{x2}(a, b)` as a polynomial in `x1`. Both must be nonzero and not both constant in `x2`.
pub(crate) fn resultant_x2(a: &BiPoly, b: &BiPoly) -> QPoly {
    resultant_coeffs(a, b, &QPoly::zero())
}

/// Whether `u = v = 0` has a real solution.
pub fn common_real_zero(u: &MPoly, v: &MPoly) -> bool {
    common_real_zero_bi(&from_mpoly(u), &from_mpoly(v))
}

pub(crate) fn common_real_zero_bi(u: &BiPoly, v: &BiPoly) -> bool {
    if is_zero(u) && is_zero(v) {
        return true;
    }
    if is_zero(u) {
        return has_real_zero(v);
    }
    if is_zero(v) {
        return has_real_zero(u);
    }
    let g = gcd(u, v);
    if !is_constant(&g) {
        if has_real_zero(&g) {
            return true;
        }
        return coprime_common_real_zero(&div_exact(u, &g), &div_exact(v, &g));
    }
    coprime_common_real_zero(u, v)
}

/// Whether the real zero set of `p` is nonempty.
pub(crate) fn has_real_zero(p: &BiPoly) -> bool {
    if is_zero(p) {
        return true;
    }
    let c = content(p);
    if !c.is_constant() && count_all_z(&ZPoly::from_qpoly(&c)) > 0 {
        return true;
    }
    let pp = primitive(p);
    if deg2(&pp) == 0 {
        return false;
    }
    let dp = derivative2(&pp);
    let g = gcd(&pp, &dp);
    let ps = if is_constant(&g) { pp } else { div_exact(&pp, &g) };
    let dps = derivative2(&ps);
    // Real fibres are constant in number between critical values.
    let crit = resultant_x2(&ps, &dps).mul(lc(&ps));
    let samples = if crit.is_zero() { vec![Rational::zero()] } else { separating_points(&crit).expect("nonzero") };
    for q in samples {
        let fib = eval_x1(&ps, &q);
        if !fib.is_zero() && count_all_z(&ZPoly::from_qpoly(&fib)) > 0 {
            return true;
        }
        if fib.is_zero() {
            return true;
        }
    }
    // A real zero over a critical value with no real zeros nearby is singular in x2.
    coprime_common_real_zero(&ps, &dps)
}

/// Whether `p(x1, ·)` has a non-real root, or vanishes identically, for some real `x1`.
pub(crate) fn nonreal_fibre(p: &MPoly) -> bool {
    let p = from_mpoly(p);
    if is_zero(&p) {
        return true;
    }
    let c = content(&p);
    if !c.is_constant() && count_all_z(&ZPoly::from_qpoly(&c)) > 0 {
        return true;
    }
    let pp = primitive(&p);
    if deg2(&pp) == 0 {
        return false;
    }
    let g = gcd(&pp, &derivative2(&pp));
    let ps = if is_constant(&g) { pp.clone() } else { div_exact(&pp, &g) };
    // Off the critical values the roots are simple and move continuously, so
    // realness of all of them is constant on each interval; a non-real root at
    // a critical value would persist nearby.
    let crit = if deg2(&ps) == 0 { lc(&ps).clone() } else { resultant_x2(&ps, &derivative2(&ps)).mul(lc(&ps)) };
    let samples = if crit.is_zero() { vec![Rational::zero()] } else { separating_points(&crit).expect("nonzero") };
    samples.iter().any(|q| {
        let fib = eval_x1(&pp, q);
        fib.is_zero() || !crate::realroots::all_roots_real(&fib).expect("nonzero")
    })
}

/// Real common zeros of `u, v` without a common factor.
fn coprime_common_real_zero(u: &BiPoly, v: &BiPoly) -> bool {
    if is_constant(u) || is_constant(v) {
        // A nonzero constant has no zeros; coprime inputs are never both zero.
        return false;
    }
    if deg2(u) == 0 && deg2(v) == 0 {
        return false;
    }
    let r = resultant_x2(u, v);
    debug_assert!(!r.is_zero());
    let z = ZPoly::from_qpoly(&r);
    if count_all_z(&z) == 0 {
        return false;
    }
    let s = z.squarefree();
    let dz = ZPoly::gcd(&z, &z.derivative());
    let l = ZPoly::from_qpoly(&lc(u).gcd(lc(v)));
    let bad = ZPoly::from_qpoly(&dz.to_qpoly().mul(&l.to_qpoly()));
    let sb = ZPoly::gcd(&s, &bad);
    if count_all_z(&s) > count_all_z(&sb) {
        // A simple root with a nonvanishing leading coefficient has a unique,
        // hence real, common root in its fibre.
        return true;
    }
    let roots = RealAlgebraic::roots_of(&sb.to_qpoly()).expect("nonzero");
    roots.iter().any(|a| fibre_has_common_real_root(u, v, a))
}

/// Polynomials in `x2` whose coefficients are residues in `ℚ[s]/(B)`,
/// interpreted at the real root `a` of `B`.
struct Fibre<'a> {
    a: &'a RealAlgebraic,
    modulus: QPoly,
}

impl Fibre<'_> {
    fn reduce(&self, c: &QPoly) -> QPoly {
        c.rem(&self.modulus)
    }

    fn is_zero_at(&self, c: &QPoly) -> bool {
        c.is_zero() || self.a.sign_of(c) == 0
    }

    fn sign(&self, c: &QPoly) -> i32 {
        self.a.sign_of(c)
    }

    fn trim(&self, mut p: Vec<QPoly>) -> Vec<QPoly> {
        while p.last().is_some_and(|c| self.is_zero_at(c)) {
            p.pop();
        }
        p
    }

    fn specialize(&self, p: &BiPoly) -> Vec<QPoly> {
        self.trim(p.iter().map(|c| self.reduce(c)).collect())
    }

    /// Pseudo-remainder; returns it with the sign of the multiplier `lc(b)^m` at `a`.
    fn prem(&self, a: &[QPoly], b: &[QPoly]) -> (Vec<QPoly>, i32) {
        let db = b.len() - 1;
        let lb = b.last().unwrap().clone();
        let slb = self.sign(&lb);
        let mut r = a.to_vec();
        let mut sign = 1;
        while !r.is_empty() && r.len() > db {
            let k = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c = self.reduce(&c.mul(&lb));
            }
            for (j, bc) in b.iter().enumerate() {
                r[k + j] = self.reduce(&r[k + j].sub(&lr.mul(bc)));
            }
            r.pop();
            r = self.trim(r);
            sign *= slb;
        }
        (r, sign)
    }

    fn derivative(&self, p: &[QPoly]) -> Vec<QPoly> {
        self.trim(
            p.iter().enumerate().skip(1).map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into()))).collect(),
        )
    }

    /// Number of distinct real roots via a Sturm sequence over `ℚ(a)`.
    fn count_real_roots(&self, p: &[QPoly]) -> usize {
        if p.len() <= 1 {
            return 0;
        }
        let mut seq: Vec<Vec<QPoly>> = vec![p.to_vec(), self.derivative(p)];
        loop {
            let k = seq.len();
            if seq[k - 1].is_empty() {
                seq.pop();
                break;
            }
            if seq[k - 1].len() == 1 {
                break;
            }
            let (r, s) = self.prem(&seq[k - 2], &seq[k - 1]);
            if r.is_empty() {
                break;
            }
            let next = if s > 0 { r.iter().map(|c| c.neg()).collect() } else { r };
            seq.push(next);
        }
        let at_pos: Vec<i32> = seq.iter().map(|q| self.sign(q.last().unwrap())).collect();
        let at_neg: Vec<i32> =
            seq.iter().zip(&at_pos).map(|(q, &s)| if (q.len() - 1) % 2 == 1 { -s } else { s }).collect();
        variations(&at_neg).saturating_sub(variations(&at_pos))
    }
}

fn variations(signs: &[i32]) -> usize {
    let mut last = 0;
    let mut v = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn fibre_has_common_real_root(u: &BiPoly, v: &BiPoly, a: &RealAlgebraic) -> bool {
    let fib = Fibre { a, modulus: a.poly() };
    let mut x = fib.specialize(u);
    let mut y = fib.specialize(v);
    if x.is_empty() && y.is_empty() {
        return true;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    // Euclid over ℚ(a) with pseudo-remainders.
    while !y.is_empty() {
        let (r, _) = fib.prem(&x, &y);
        x = y;
        y = r;
    }
    fib.count_real_roots(&x) > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::mpoly_from_ints;

    fn m(terms: &[(i64, &[u32])]) -> MPoly {
        mpoly_from_ints(2, terms)
    }

    #[test]
    fn transversal_intersection() {
        // circle and line meet
        let u = m(&[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])]);
        let v = m(&[(1, &[1, 0]), (-1, &[0, 1])]);
        assert!(common_real_zero(&u, &v));
        // circle and far line do not
        let v = m(&[(1, &[1, 0]), (1, &[0, 1]), (-3, &[0, 0])]);
        assert!(!common_real_zero(&u, &v));
    }

    #[test]
    fn tangency_needs_fibre_test() {
        // circle x^2 + y^2 = 2 and line x + y = 2 touch at (1, 1)
        let u = m(&[(1, &[2, 0]), (1, &[0, 2]), (-2, &[0, 0])]);
        let v = m(&[(1, &[1, 0]), (1, &[0, 1]), (-2, &[0, 0])]);
        assert!(common_real_zero(&u, &v));
        // irrational tangency: circle radius^2 = 2 and line x + y = 2 shifted to touch at sqrt
        // x^2 + y^2 = 1, x - y = sqrt(2)? use y^2 = x^3 - 2 style: y = 0 double root at x^2=2
        let u = m(&[(1, &[0, 1]), (-1, &[2, 0]), (2, &[0, 0])]); // y = x^2 - 2
        let v = m(&[(1, &[0, 2])]); // y^2 = 0
        assert!(common_real_zero(&u, &v));
    }

    #[test]
    fn complex_only_intersection() {
        // x^2 + y^2 = -1 has no real points; with a line.
        let u = m(&[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])]);
        let v = m(&[(1, &[1, 0])]);
        assert!(!common_real_zero(&u, &v));
        // conjugate pair of complex intersections over a real x: x^2 + y^2 = 1, x = 2
        let v = m(&[(1, &[1, 0]), (-2, &[0, 0])]);
        assert!(!common_real_zero(&u, &v));
        let u = m(&[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])]);
        assert!(!common_real_zero(&u, &v));
    }

    #[test]
    fn common_factor_cases() {
        // u = (x^2 + y^2 + 1)(x - y), v = (x^2 + y^2 + 1)(x + y + 1): share a factor without real points
        let s = m(&[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])]);
        let a = m(&[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = m(&[(1, &[1, 0]), (1, &[0, 1]), (1, &[0, 0])]);
        assert!(common_real_zero(&s.mul(&a).unwrap(), &s.mul(&b).unwrap()));
        let c = m(&[(1, &[1, 0]), (-1, &[0, 1]), (-5, &[0, 0])]);
        assert!(!common_real_zero(&s.mul(&a).unwrap(), &s.mul(&c).unwrap()));
        // a shared factor with real points
        let t = m(&[(1, &[2, 0]), (-1, &[0, 1])]);
        assert!(common_real_zero(&t.mul(&s).unwrap(), &t));
    }

    #[test]
    fn isolated_real_points() {
        // x^2 + y^2 has only the origin
        let p = from_mpoly(&m(&[(1, &[2, 0]), (1, &[0, 2])]));
        assert!(has_real_zero(&p));
        let p = from_mpoly(&m(&[(1, &[2, 0]), (1, &[0, 2]), (1, &[0, 0])]));
        assert!(!has_real_zero(&p));
        // (x^2 - 2)^2 + y^2: isolated irrational points
        let p = from_mpoly(&m(&[(1, &[4, 0]), (-4, &[2, 0]), (4, &[0, 0]), (1, &[0, 2])]));
        assert!(has_real_zero(&p));
        // (x^2 - 2)^2 + (y^2 - 3)^2 + (x y)^2 has no real points? xy = 0 forces x=0 or y=0 -> no
        let p = from_mpoly(&m(&[
            (1, &[4, 0]),
            (-4, &[2, 0]),
            (4, &[0, 0]),
            (1, &[0, 4]),
            (-6, &[0, 2]),
            (9, &[0, 0]),
            (1, &[2, 2]),
        ]));
        assert!(!has_real_zero(&p));
    }
}
