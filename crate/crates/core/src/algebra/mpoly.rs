//! Sparse multivariate polynomials with exact complex-rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{Signed, Zero};

use super::scalar::{CRational, Rational};
use super::upoly::{QPoly, UPoly};
use crate::error::{check_dim, Error, Result};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn div(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables `z1..zn` over the complex rationals.
///
/// Terms are kept in a map from exponent vectors to nonzero coefficients, so
/// the zero polynomial is the empty map and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, CRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: CRational) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, CRational::one())
    }

    /// The variable with 0-based index `i` (displayed as `z{i+1}`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.add_term(Monomial(e), CRational::one());
        p
    }

    /// Linear form `sum_j a_j z_j` with rational coefficients.
    pub fn linear_form(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = MPoly::zero(n);
        for (j, a) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[j] = 1;
            p.add_term(Monomial(e), CRational::real(a.clone()));
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, CRational)>,
    {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            check_dim(nvars, e.len())?;
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: Monomial, c: CRational) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CRational)> {
        self.terms.iter()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn constant_term(&self) -> CRational {
        self.terms.get(&Monomial::one(self.nvars)).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &CRational)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn neg(&self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn conj(&self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    pub fn scale(&self, c: &CRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn add(&self, o: &MPoly) -> Result<MPoly> {
        check_dim(self.nvars, o.nvars)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &MPoly) -> Result<MPoly> {
        check_dim(self.nvars, o.nvars)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        Ok(r)
    }

    pub fn mul(&self, o: &MPoly) -> Result<MPoly> {
        check_dim(self.nvars, o.nvars)?;
        let mut acc: BTreeMap<Monomial, CRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MPoly { nvars: self.nvars, terms: acc })
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same nvars");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same nvars");
            }
        }
        acc
    }

    pub fn product<'a, I: IntoIterator<Item = &'a MPoly>>(nvars: usize, it: I) -> Result<MPoly> {
        let mut acc = MPoly::one(nvars);
        for f in it {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// Exact value at a complex-rational point.
    pub fn eval(&self, p: &[CRational]) -> Result<CRational> {
        check_dim(self.nvars, p.len())?;
        let mut powers: Vec<Vec<CRational>> = Vec::with_capacity(self.nvars);
        for (j, x) in p.iter().enumerate() {
            let maxe = self.degree_in(j).unwrap_or(0) as usize;
            let mut pw = Vec::with_capacity(maxe + 1);
            pw.push(CRational::one());
            for k in 1..=maxe {
                let next = &pw[k - 1] * x;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = CRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[j][e as usize];
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    pub fn eval_rational(&self, p: &[Rational]) -> Result<CRational> {
        let c: Vec<CRational> = p.iter().cloned().map(CRational::real).collect();
        self.eval(&c)
    }

    /// Substitute each variable `z_j` by the polynomial `images[j]` (all in a common ring).
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        check_dim(self.nvars, images.len())?;
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        for im in images {
            check_dim(target, im.nvars)?;
        }
        let mut powers: Vec<Vec<MPoly>> = Vec::with_capacity(self.nvars);
        for (j, im) in images.iter().enumerate() {
            let maxe = self.degree_in(j).unwrap_or(0) as usize;
            let mut pw = vec![MPoly::one(target)];
            for k in 1..=maxe {
                let next = pw[k - 1].mul(im)?;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[j][e as usize])?;
                }
            }
            for (tm, tc) in t.terms {
                acc.add_term(tm, tc);
            }
        }
        Ok(acc)
    }

    /// `f_h(z0, z) = z0^deg f · f(z/z0)`, with `z0` placed at index 0.
    pub fn homogenize(&self) -> Result<MPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let mut r = MPoly::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(self.nvars + 1);
            e.push(d - m.degree());
            e.extend_from_slice(&m.0);
            r.add_term(Monomial(e), c.clone());
        }
        Ok(r)
    }

    /// Set variable 0 to one and drop it.
    pub fn dehomogenize(&self) -> Result<MPoly> {
        if self.nvars == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        let mut r = MPoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            r.add_term(Monomial(m.0[1..].to_vec()), c.clone());
        }
        Ok(r)
    }

    /// Sum of the terms of maximal total degree.
    pub fn initial_form(&self) -> Result<MPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        })
    }

    /// Fix variable `var` to `value`, keeping the variable count.
    pub fn eval_var(&self, var: usize, value: &CRational) -> MPoly {
        let maxe = self.degree_in(var).unwrap_or(0) as usize;
        let mut pw = vec![CRational::one()];
        for k in 1..=maxe {
            let next = &pw[k - 1] * value;
            pw.push(next);
        }
        let mut r = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var] as usize;
            e[var] = 0;
            r.add_term(Monomial(e), c * &pw[k]);
        }
        r
    }

    /// The univariate polynomial `t -> f(x + t e)`.
    pub fn restrict_line(&self, x: &[Rational], e: &[Rational]) -> Result<UPoly> {
        check_dim(self.nvars, x.len())?;
        check_dim(self.nvars, e.len())?;
        let mut powers: Vec<Vec<UPoly>> = Vec::with_capacity(self.nvars);
        for j in 0..self.nvars {
            let base = UPoly::new(vec![CRational::real(x[j].clone()), CRational::real(e[j].clone())]);
            let maxe = self.degree_in(j).unwrap_or(0) as usize;
            let mut pw = vec![UPoly::constant(CRational::one())];
            for k in 1..=maxe {
                let next = pw[k - 1].mul(&base);
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = UPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UPoly::constant(c.clone());
            for (j, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&powers[j][k as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Real polynomials `u, v` in the real variables `x` with `f(x + i y) = u(x) + i v(x)`.
    pub fn real_imag_split(&self, y: &[Rational]) -> Result<(MPoly, MPoly)> {
        check_dim(self.nvars, y.len())?;
        let n = self.nvars;
        let images: Vec<MPoly> = (0..n)
            .map(|j| {
                let mut p = MPoly::var(n, j);
                p.add_term(Monomial::one(n), CRational::new(Rational::zero(), y[j].clone()));
                p
            })
            .collect();
        let g = self.substitute(&images)?;
        Ok(g.split_re_im())
    }

    /// Symbolic split: real polynomials `U, V` in `2n` real variables `(x, y)` with
    /// `f(x + i y) = U + i V`.
    pub fn complexify(&self) -> (MPoly, MPoly) {
        let n = self.nvars;
        let images: Vec<MPoly> = (0..n)
            .map(|j| {
                let mut p = MPoly::var(2 * n, j);
                let mut e = vec![0; 2 * n];
                e[n + j] = 1;
                p.add_term(Monomial(e), CRational::i());
                p
            })
            .collect();
        let g = self.substitute(&images).expect("consistent images");
        g.split_re_im()
    }

    /// Coefficientwise real and imaginary parts.
    pub fn split_re_im(&self) -> (MPoly, MPoly) {
        let mut u = MPoly::zero(self.nvars);
        let mut v = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            u.add_term(m.clone(), CRational::real(c.re.clone()));
            v.add_term(m.clone(), CRational::real(c.im.clone()));
        }
        (u, v)
    }

    /// Dense view in `var`: entry `k` is the coefficient of `z_var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let deg = match self.degree_in(var) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![MPoly::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var] as usize;
            e[var] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn from_coefficients_in(nvars: usize, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut r = MPoly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0.clone();
                e[var] += k as u32;
                r.add_term(Monomial(e), a.clone());
            }
        }
        r
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            r.add_term(Monomial(e), c.scale(&Rational::from_integer(k.into())));
        }
        r
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() || d.nvars != self.nvars {
            return None;
        }
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let dc_inv = dc.inv();
        let mut rem = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&rm) {
                return None;
            }
            let tm = rm.div(&dm);
            let tc = &rc * &dc_inv;
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&tm), -(c * &tc));
            }
            q.add_term(tm, tc);
        }
        Some(q)
    }

    /// Convert to a dense rational univariate polynomial if only `var` occurs and
    /// all coefficients are real.
    pub fn to_qpoly(&self, var: usize) -> Option<QPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(var).unwrap_or(0) as usize + 1];
        for (m, c) in &self.terms {
            if !c.is_real() || m.0.iter().enumerate().any(|(j, &e)| j != var && e > 0) {
                return None;
            }
            coeffs[m.0[var] as usize] = c.re.clone();
        }
        Some(QPoly::new(coeffs))
    }

    pub fn from_qpoly(nvars: usize, var: usize, p: &QPoly) -> MPoly {
        let mut r = MPoly::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            r.add_term(Monomial(e), CRational::real(c.clone()));
        }
        r
    }

    /// Rename variables: variable `j` of `self` becomes variable `map[j]` of a
    /// polynomial with `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Result<MPoly> {
        check_dim(self.nvars, map.len())?;
        let mut r = MPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (j, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    if map[j] >= nvars {
                        return Err(Error::InvalidArgument("variable map out of range".into()));
                    }
                    e[map[j]] += k;
                }
            }
            r.add_term(Monomial(e), c.clone());
        }
        Ok(r)
    }

    /// Coefficient of largest absolute value (as an `f64` modulus).
    pub fn max_coeff_abs(&self) -> f64 {
        self.terms.values().map(|c| c.to_c64().norm()).fold(0.0, f64::max)
    }

    /// If the polynomial is a nonzero complex multiple of a real polynomial,
    /// return that real polynomial (normalized by the leading coefficient's phase).
    pub fn real_multiple(&self) -> Option<MPoly> {
        let (_, lc) = self.leading_term()?;
        let inv = lc.inv();
        let scaled = self.scale(&inv);
        if scaled.is_real() {
            Some(scaled)
        } else {
            None
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let is_const = m.degree() == 0;
            let (negative, mag) = if c.is_real() {
                (c.re.is_negative(), CRational::real(c.re.abs()))
            } else if c.re.is_zero() && c.im.is_negative() {
                (true, CRational::new(Rational::zero(), c.im.abs()))
            } else {
                (false, c.clone())
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| if e == 1 { format!("z{}", j + 1) } else { format!("z{}^{}", j + 1, e) })
                    .collect();
            if is_const {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.nvars, self)
    }
}

/// Helper used in tests and builders: `sum c * z^e` from integer data.
pub fn mpoly_from_ints(nvars: usize, terms: &[(i64, &[u32])]) -> MPoly {
    let mut p = MPoly::zero(nvars);
    for (c, e) in terms {
        assert_eq!(e.len(), nvars);
        p.add_term(Monomial(e.to_vec()), CRational::from_int(*c));
    }
    p
}
