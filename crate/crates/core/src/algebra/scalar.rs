//! Exact rational and complex-rational scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact conversion of a finite `f64` (every finite double is a dyadic rational).
pub fn rat_from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

pub fn rat_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Very large numerators/denominators: fall back to a scaled division.
        let n = x.numer().bits() as i64;
        let d = x.denom().bits() as i64;
        let shift = (n - d).clamp(-1000, 1000);
        let scaled = if shift > 0 {
            x / Rational::from_integer(BigInt::one() << shift as usize)
        } else {
            x * Rational::from_integer(BigInt::one() << (-shift) as usize)
        };
        let base = scaled.to_f64().unwrap_or(0.0);
        base * 2f64.powi(shift as i32)
    })
}

/// Parse "p", "-p" or "p/q".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else if let Some((ip, fp)) = s.split_once('.') {
        // Decimal literal, read exactly.
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if ip_digits.is_empty() { "0" } else { ip_digits }, fp);
        let n: BigInt = digits.parse().ok()?;
        let d = num::pow(BigInt::from(10), fp.len());
        let r = Rational::new(n, d);
        Some(if neg { -r } else { r })
    } else {
        Some(Rational::from_integer(s.parse().ok()?))
    }
}

/// Complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CRational {
    pub re: Rational,
    pub im: Rational,
}

impl CRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        CRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        CRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        CRational::real(int(n))
    }

    pub fn zero() -> Self {
        CRational::default()
    }

    pub fn one() -> Self {
        CRational::from_int(1)
    }

    pub fn i() -> Self {
        CRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        CRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero");
        CRational { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CRational { re: &self.re * r, im: &self.im * r }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = CRational::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl From<Rational> for CRational {
    fn from(r: Rational) -> Self {
        CRational::real(r)
    }
}

impl From<i64> for CRational {
    fn from(n: i64) -> Self {
        CRational::from_int(n)
    }
}

impl<'a> Add<&'a CRational> for &'a CRational {
    type Output = CRational;
    fn add(self, o: &CRational) -> CRational {
        CRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a CRational> for &'a CRational {
    type Output = CRational;
    fn sub(self, o: &CRational) -> CRational {
        CRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a CRational> for &'a CRational {
    type Output = CRational;
    fn mul(self, o: &CRational) -> CRational {
        if self.im.is_zero() && o.im.is_zero() {
            return CRational::real(&self.re * &o.re);
        }
        CRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl<'a> Div<&'a CRational> for &'a CRational {
    type Output = CRational;
    fn div(self, o: &CRational) -> CRational {
        if o.im.is_zero() {
            return CRational { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        self * &o.inv()
    }
}

impl Neg for &CRational {
    type Output = CRational;
    fn neg(self) -> CRational {
        CRational { re: -&self.re, im: -&self.im }
    }
}

impl Neg for CRational {
    type Output = CRational;
    fn neg(self) -> CRational {
        CRational { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CRational> for CRational {
            type Output = CRational;
            fn $m(self, o: CRational) -> CRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a CRational> for CRational {
            type Output = CRational;
            fn $m(self, o: &CRational) -> CRational {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&CRational> for CRational {
    fn add_assign(&mut self, o: &CRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&CRational> for CRational {
    fn sub_assign(&mut self, o: &CRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&CRational> for CRational {
    fn mul_assign(&mut self, o: &CRational) {
        *self = &*self * o;
    }
}

impl fmt::Display for CRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            if self.im.is_one() {
                write!(f, "i")
            } else if (-&self.im).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{}i", self.im)
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            let mag = self.im.abs();
            if mag.is_one() {
                write!(f, "({}{}i)", self.re, sign)
            } else {
                write!(f, "({}{}{}i)", self.re, sign, mag)
            }
        }
    }
}

impl fmt::Debug for CRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Serde adapters that write exact rationals as "p/q" strings.
pub mod serde_rational {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub mod vec {
        use super::Rational;
        use serde::ser::{SerializeSeq, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }
    }

    pub mod option {
        use super::Rational;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(r) => s.serialize_some(&r.to_string()),
                None => s.serialize_none(),
            }
        }
    }

    pub mod option_vec {
        use super::Rational;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(r) => s.serialize_some(&r.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                None => s.serialize_none(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = CRational::i();
        assert_eq!(&i * &i, CRational::from_int(-1));
    }

    #[test]
    fn division_roundtrip() {
        let a = CRational::new(rat(3, 2), rat(-7, 5));
        let b = CRational::new(rat(1, 3), rat(2, 1));
        assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn conj_is_involution() {
        let a = CRational::new(rat(3, 2), rat(-7, 5));
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-7/2"), Some(rat(-7, 2)));
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("-1.5"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("12"), Some(int(12)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn float_conversion_is_exact() {
        assert_eq!(rat_from_f64(0.375), rat(3, 8));
        assert!((rat_to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-16);
    }
}
