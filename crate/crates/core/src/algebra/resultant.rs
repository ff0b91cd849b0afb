//! Sylvester resultants by fraction-free (Bareiss) elimination.

use num::Zero;

use super::mpoly::MPoly;
use super::scalar::Rational;
use super::upoly::QPoly;
use crate::error::{check_dim, Error, Result};

/// Integral-domain operations needed by Bareiss elimination.
pub trait DomainElem: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn mul_elem(&self, o: &Self) -> Self;
    fn sub_elem(&self, o: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    /// Exact division, known to succeed.
    fn div_elem(&self, o: &Self) -> Self;
}

impl DomainElem for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MPoly::one(self.nvars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self.mul(o).expect("same ring")
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self.sub(o).expect("same ring")
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
    fn div_elem(&self, o: &Self) -> Self {
        self.div_exact(o).expect("Bareiss division is exact")
    }
}

impl DomainElem for QPoly {
    fn zero_like(&self) -> Self {
        QPoly::zero()
    }
    fn one_like(&self) -> Self {
        QPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
    fn div_elem(&self, o: &Self) -> Self {
        self.div_exact(o).expect("Bareiss division is exact")
    }
}

impl DomainElem for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        num::One::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_elem(&self, o: &Self) -> Self {
        self / o
    }
}

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
pub fn bareiss_det<T: DomainElem>(mut m: Vec<Vec<T>>, proto: &T) -> T {
    let n = m.len();
    if n == 0 {
        return proto.one_like();
    }
    let mut sign_flip = false;
    let mut prev = proto.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero_elem() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero_elem()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return proto.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].mul_elem(&m[k][k]);
                let b = m[i][k].mul_elem(&m[k][j]);
                let num = a.sub_elem(&b);
                m[i][j] = if num.is_zero_elem() { num } else { num.div_elem(&prev) };
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.neg_elem()
    } else {
        d
    }
}

/// Sylvester matrix of `a` and `b` given as coefficient lists (index = power).
pub fn sylvester<T: DomainElem>(a: &[T], b: &[T], proto: &T) -> Vec<Vec<T>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![proto.zero_like(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![proto.zero_like(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of two coefficient lists whose leading entries are nonzero.
pub fn resultant_coeffs<T: DomainElem>(a: &[T], b: &[T], proto: &T) -> T {
    debug_assert!(!a.is_empty() && !b.is_empty());
    bareiss_det(sylvester(a, b, proto), proto)
}

/// Sylvester resultant of `u` and `v` with respect to variable `var`.
///
/// The result lives in the same ring and does not involve `var`.
pub fn resultant(u: &MPoly, v: &MPoly, var: usize) -> Result<MPoly> {
    check_dim(u.nvars(), v.nvars())?;
    if var >= u.nvars() {
        return Err(Error::InvalidArgument(format!("variable index {var} out of range")));
    }
    let n = u.nvars();
    if u.is_zero() || v.is_zero() {
        return Ok(MPoly::zero(n));
    }
    let a = u.coefficients_in(var);
    let b = v.coefficients_in(var);
    if a.len() == 1 && b.len() == 1 {
        return Err(Error::ConstantInVariable(var));
    }
    Ok(resultant_coeffs(&a, &b, &MPoly::zero(n)))
}

/// Resultant of two univariate rational polynomials.
pub fn resultant_q(a: &QPoly, b: &QPoly) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    resultant_coeffs(a.coeffs(), b.coeffs(), &Rational::zero())
}
