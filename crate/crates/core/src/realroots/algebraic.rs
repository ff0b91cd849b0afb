use num::{Signed, Zero};

use super::zpoly::ZPoly;
use super::{bisect_once, isolate_squarefree, Endpoint, SturmChain};
use crate::algebra::{rat_to_f64, QPoly, Rational};
use crate::error::{Error, Result};

/// A real algebraic number: the unique root of a squarefree polynomial in `(lo, hi]`.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    poly: ZPoly,
    chain: SturmChain,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraic {
    /// All real roots of `p`, in increasing order.
    pub fn roots_of(p: &QPoly) -> Result<Vec<RealAlgebraic>> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let z = ZPoly::from_qpoly(p).squarefree();
        if z.degree() == 0 {
            return Ok(Vec::new());
        }
        let chain = SturmChain::from_zpoly(z.clone());
        let one = Rational::from_integer(1.into());
        Ok(isolate_squarefree(&z, &one)
            .into_iter()
            .map(|(lo, hi)| RealAlgebraic { poly: z.clone(), chain: chain.clone(), lo, hi })
            .collect())
    }

    pub fn rational(x: &Rational) -> RealAlgebraic {
        let z = ZPoly::from_qpoly(&QPoly::linear_root(x));
        let chain = SturmChain::from_zpoly(z.clone());
        let one = Rational::from_integer(1.into());
        RealAlgebraic { poly: z, chain, lo: x - &one, hi: x.clone() }
    }

    /// Defining squarefree polynomial.
    pub fn poly(&self) -> QPoly {
        self.poly.to_qpoly()
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    /// The value if it is rational (the defining polynomial has degree one).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.poly.degree() == 1 {
            let q = self.poly.to_qpoly();
            Some(-q.coeff(0) / q.coeff(1))
        } else {
            None
        }
    }

    pub fn refine(&mut self) {
        if let Some(r) = self.as_rational() {
            self.lo = (&self.lo + &r) / Rational::from_integer(2.into());
            return;
        }
        let mut iv = (self.lo.clone(), self.hi.clone());
        bisect_once(&self.chain, &mut iv);
        self.lo = iv.0;
        self.hi = iv.1;
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while &self.hi - &self.lo > *width {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        a.refine_to(&Rational::new(1.into(), num::BigInt::from(1u64 << 53)));
        rat_to_f64(&a.hi)
    }

    /// A rational number at distance at most `width` from the root.
    pub fn approx(&self, width: &Rational) -> Rational {
        let mut a = self.clone();
        a.refine_to(width);
        a.hi
    }

    /// Exact sign of `q` at this number.
    pub fn sign_of(&self, q: &QPoly) -> i32 {
        if q.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            let v = q.eval(&r);
            return if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
        }
        let p = self.poly.to_qpoly();
        let red = q.rem(&p);
        if red.is_zero() {
            return 0;
        }
        let zr = ZPoly::from_qpoly(&red);
        let g = ZPoly::gcd(&self.poly, &zr);
        if g.degree() > 0 {
            let gc = SturmChain::from_zpoly(g);
            if gc.count(&Endpoint::Finite(self.lo.clone()), &Endpoint::Finite(self.hi.clone())) > 0 {
                return 0;
            }
        }
        // The root is not a zero of `red`; shrink until `red` has no root in the interval.
        let rc = SturmChain::from_zpoly(zr.squarefree());
        let mut a = self.clone();
        loop {
            let lo = Endpoint::Finite(a.lo.clone());
            let hi = Endpoint::Finite(a.hi.clone());
            if rc.count(&lo, &hi) == 0 {
                return zr.sign_at_rational(&a.hi);
            }
            a.refine();
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, x: &Rational) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        if *x > self.hi {
            return Ordering::Less;
        }
        if *x <= self.lo {
            return Ordering::Greater;
        }
        match self.sign_of(&QPoly::linear_root(x)) {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn signs_at_sqrt2() {
        let roots = RealAlgebraic::roots_of(&QPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        let s = &roots[1];
        assert!((s.to_f64() - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(s.sign_of(&QPoly::from_ints(&[-2, 0, 1])), 0);
        assert_eq!(s.sign_of(&QPoly::from_ints(&[-1, 1])), 1);
        // t^2 - 2 vanishes, t^3 - 2t vanishes too
        assert_eq!(s.sign_of(&QPoly::from_ints(&[0, -2, 0, 1])), 0);
        // t^4 - 5 = 4 - 5 < 0
        assert_eq!(s.sign_of(&QPoly::from_ints(&[-5, 0, 0, 0, 1])), -1);
        assert_eq!(roots[0].sign_of(&QPoly::from_ints(&[0, 1])), -1);
        assert_eq!(s.cmp_rational(&int(1)), std::cmp::Ordering::Greater);
        assert_eq!(s.cmp_rational(&int(2)), std::cmp::Ordering::Less);
    }
}
