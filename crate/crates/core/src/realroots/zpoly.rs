//! Integer polynomials used internally for fast exact sign computations.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::algebra::{QPoly, Rational};

/// Dense polynomial with integer coefficients, index = power, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct ZPoly {
    pub(crate) c: Vec<BigInt>,
}

fn sign(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl ZPoly {
    pub(crate) fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly { c }
    }

    /// Positive integer multiple of `p`, made primitive.
    pub(crate) fn from_qpoly(p: &QPoly) -> Self {
        let mut l = BigInt::one();
        for x in p.coeffs() {
            l = l.lcm(x.denom());
        }
        let c = p.coeffs().iter().map(|x| x.numer() * (&l / x.denom())).collect();
        ZPoly::new(c).primitive()
    }

    pub(crate) fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.c.iter().map(|x| Rational::from_integer(x.clone())).collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub(crate) fn lc(&self) -> &BigInt {
        self.c.last().expect("nonzero polynomial")
    }

    /// Divide by the positive gcd of the coefficients.
    pub(crate) fn primitive(self) -> Self {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                return self;
            }
        }
        if g.is_zero() || g.is_one() {
            return self;
        }
        ZPoly { c: self.c.into_iter().map(|x| x / &g).collect() }
    }

    pub(crate) fn derivative(&self) -> Self {
        ZPoly::new(self.c.iter().enumerate().skip(1).map(|(k, x)| x * BigInt::from(k)).collect())
    }

    /// Pseudo-remainder `lc(b)^m a mod b`; returns the remainder and the sign of `lc(b)^m`.
    pub(crate) fn pseudo_rem(a: &ZPoly, b: &ZPoly) -> (ZPoly, i32) {
        let db = b.degree();
        let lb = b.lc().clone();
        let mut r = a.c.clone();
        let mut mults = 0u32;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for x in r.iter_mut() {
                *x *= &lb;
            }
            for (j, bc) in b.c.iter().enumerate() {
                r[k + j] -= &lr * bc;
            }
            mults += 1;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        let s = if lb.is_negative() && mults % 2 == 1 { -1 } else { 1 };
        (ZPoly::new(r), s)
    }

    /// Greatest common divisor up to a constant (primitive, positive leading coefficient).
    pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let (mut x, mut y) = if a.degree() >= b.degree() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if y.is_zero() {
            return x.primitive().normalize_sign();
        }
        loop {
            let (r, _) = ZPoly::pseudo_rem(&x, &y);
            if r.is_zero() {
                return y.primitive().normalize_sign();
            }
            x = y;
            y = r.primitive();
        }
    }

    fn normalize_sign(self) -> ZPoly {
        if self.c.last().is_some_and(|x| x.is_negative()) {
            ZPoly { c: self.c.into_iter().map(|x| -x).collect() }
        } else {
            self
        }
    }

    /// Exact quotient (assumes divisibility up to a rational constant; result made primitive).
    pub(crate) fn div_exact(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let q = a.to_qpoly().div_exact(&b.to_qpoly()).expect("exact division");
        ZPoly::from_qpoly(&q)
    }

    pub(crate) fn squarefree(&self) -> ZPoly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = ZPoly::gcd(self, &self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        ZPoly::div_exact(self, &g)
    }

    /// Sign at `num / den` with `den > 0`.
    pub(crate) fn sign_at(&self, num: &BigInt, den: &BigInt) -> i32 {
        if self.c.is_empty() {
            return 0;
        }
        let d = self.c.len() - 1;
        let mut acc = self.c[d].clone();
        let mut dp = BigInt::one();
        for k in (0..d).rev() {
            dp *= den;
            acc = acc * num + &self.c[k] * &dp;
        }
        sign(&acc)
    }

    pub(crate) fn sign_at_rational(&self, x: &Rational) -> i32 {
        self.sign_at(x.numer(), x.denom())
    }

    pub(crate) fn sign_pos_inf(&self) -> i32 {
        self.c.last().map_or(0, sign)
    }

    pub(crate) fn sign_neg_inf(&self) -> i32 {
        let s = self.sign_pos_inf();
        if self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Cauchy-type bound: all real roots lie in `(-2^k, 2^k)`.
    pub(crate) fn root_bound_exp(&self) -> u64 {
        let lc = self.lc().abs();
        let mut best: u64 = 0;
        for x in &self.c[..self.c.len() - 1] {
            if x.is_zero() {
                continue;
            }
            // |x / lc| < 2^(bits(x) - bits(lc) + 1)
            let b = x.abs().bits() as i64 - lc.bits() as i64 + 1;
            best = best.max(b.max(0) as u64);
        }
        best + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::new(cs.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let p = z(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree(), z(&[-2, 1, 1]));
        assert_eq!(ZPoly::gcd(&z(&[1, 0, 1]), &z(&[0, 1])), z(&[1]));
    }

    #[test]
    fn signs() {
        let p = z(&[-1, 0, 1]);
        assert_eq!(p.sign_at(&BigInt::from(1), &BigInt::from(2)), -1);
        assert_eq!(p.sign_at(&BigInt::from(3), &BigInt::from(2)), 1);
        assert_eq!(p.sign_at(&BigInt::from(-1), &BigInt::from(1)), 0);
        assert_eq!(z(&[0, 1]).sign_neg_inf(), -1);
    }
}
