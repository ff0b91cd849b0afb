//! Repeated exact membership for one bivariate polynomial at many points.
//!
//! The resultant of `Re f(x + iy)` and `Im f(x + iy)` in `x2` is computed once
//! with `y` symbolic, then specialized per point. Most points are settled from
//! the specialized resultant alone; the rest go through the full procedure.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use super::bivariate::common_real_zero;
use crate::algebra::{resultant, MPoly, Rational};
use crate::error::{Error, Result};
use crate::realroots::count_all_z;
use crate::realroots::zpoly::ZPoly;

/// Integer polynomial in `x1` with coefficients polynomial in `(y1, y2)`, stored
/// homogenized in the denominator so points `(n1/q, n2/q)` evaluate over ℤ.
#[derive(Clone, Debug)]
struct ParamPoly {
    /// `terms[k]` lists `(e1, e2, c)` for the coefficient of `x1^k`.
    terms: Vec<Vec<(u32, u32, BigInt)>>,
    ydeg: u32,
}

impl ParamPoly {
    /// From a polynomial in `(x1, x2, y1, y2)` not involving `x2`.
    fn new(p: &MPoly) -> Self {
        let mut l = BigInt::one();
        for (_, c) in p.terms() {
            l = l.lcm(c.re.denom());
        }
        let dx = p.degree_in(0).unwrap_or(0) as usize;
        let mut terms = vec![Vec::new(); if p.is_zero() { 0 } else { dx + 1 }];
        let mut ydeg = 0;
        for (m, c) in p.terms() {
            let e = m.exps();
            debug_assert_eq!(e[1], 0);
            ydeg = ydeg.max(e[2] + e[3]);
            terms[e[0] as usize].push((e[2], e[3], c.re.numer() * (&l / c.re.denom())));
        }
        ParamPoly { terms, ydeg }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `q^ydeg · p(x1; n1/q, n2/q)` with `q > 0`.
    fn eval(&self, pw: &Powers) -> ZPoly {
        let c = self
            .terms
            .iter()
            .map(|ts| {
                let mut acc = BigInt::zero();
                for (e1, e2, c) in ts {
                    let qe = (self.ydeg - e1 - e2) as usize;
                    acc += c * &pw.n1[*e1 as usize] * &pw.n2[*e2 as usize] * &pw.q[qe];
                }
                acc
            })
            .collect();
        ZPoly::new(c)
    }
}

struct Powers {
    n1: Vec<BigInt>,
    n2: Vec<BigInt>,
    q: Vec<BigInt>,
}

impl Powers {
    fn new(n1: &BigInt, n2: &BigInt, q: &BigInt, d: u32) -> Self {
        let tab = |b: &BigInt| {
            let mut v = vec![BigInt::one()];
            for k in 1..=d as usize {
                let next = &v[k - 1] * b;
                v.push(next);
            }
            v
        };
        Powers { n1: tab(n1), n2: tab(n2), q: tab(q) }
    }
}

#[derive(Clone, Debug)]
pub struct BivariateOracle {
    /// `f`, with variables swapped when it does not involve `z2`.
    f: MPoly,
    swapped: bool,
    res: ParamPoly,
    lc_u: ParamPoly,
    lc_v: ParamPoly,
    ydeg: u32,
}

impl BivariateOracle {
    pub fn new(f: &MPoly) -> Result<Self> {
        if f.nvars() != 2 {
            return Err(Error::UnsupportedDimension(f.nvars()));
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let swapped = f.degree_in(1).unwrap_or(0) == 0;
        let f = if swapped { f.remap(2, &[1, 0])? } else { f.clone() };
        let (u, v) = f.complexify();
        let (res, lc_u, lc_v) = if f.is_constant() {
            (MPoly::zero(4), MPoly::zero(4), MPoly::zero(4))
        } else {
            let r = resultant(&u, &v, 1)?;
            let lead = |p: &MPoly| p.coefficients_in(1).pop().unwrap_or_else(|| MPoly::zero(4));
            (r, lead(&u), lead(&v))
        };
        let (res, lc_u, lc_v) = (ParamPoly::new(&res), ParamPoly::new(&lc_u), ParamPoly::new(&lc_v));
        let ydeg = res.ydeg.max(lc_u.ydeg).max(lc_v.ydeg);
        Ok(BivariateOracle { f, swapped, res, lc_u, lc_v, ydeg })
    }

    /// Whether `y ∈ I(f)`, exactly.
    pub fn inside(&self, y: &[Rational]) -> Result<bool> {
        if y.len() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: y.len() });
        }
        let y: Vec<Rational> = if self.swapped { vec![y[1].clone(), y[0].clone()] } else { y.to_vec() };
        if self.f.is_constant() {
            return Ok(false);
        }
        if let Some(ans) = self.quick(&y) {
            return Ok(ans);
        }
        let (u, v) = self.f.real_imag_split(&y)?;
        Ok(common_real_zero(&u, &v))
    }

    /// Decide from the specialized resultant when it is conclusive.
    fn quick(&self, y: &[Rational]) -> Option<bool> {
        if self.res.is_zero() {
            return None;
        }
        let q = y[0].denom().lcm(y[1].denom());
        let n1 = y[0].numer() * (&q / y[0].denom());
        let n2 = y[1].numer() * (&q / y[1].denom());
        let pw = Powers::new(&n1, &n2, &q, self.ydeg);
        let r = self.res.eval(&pw);
        if r.is_zero() {
            return None;
        }
        if count_all_z(&r) == 0 {
            return Some(false);
        }
        let s = r.squarefree();
        let dr = ZPoly::gcd(&r, &r.derivative());
        let l = ZPoly::gcd(&self.lc_u.eval(&pw), &self.lc_v.eval(&pw));
        if l.is_zero() {
            return None;
        }
        let bad = mul(&dr, &l);
        let sb = ZPoly::gcd(&s, &bad);
        // A simple root off the common leading-coefficient locus carries exactly
        // one common complex zero in its fibre, which is therefore real.
        if count_all_z(&s) > count_all_z(&sb) {
            return Some(true);
        }
        None
    }
}

fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut c = vec![BigInt::zero(); a.c.len() + b.c.len() - 1];
    for (i, x) in a.c.iter().enumerate() {
        for (j, y) in b.c.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    ZPoly::new(c)
}
