use serde::Serialize;

use crate::algebra::linalg::{cdet, hermitian_is_pd, is_hermitian, CMatrix};
use crate::algebra::{CRational, MPoly, Rational};
use crate::error::{check_dim, Error, Result};

/// Hermitian matrices `A_1..A_n` of size `d`, defining `A(z) = Σ z_j A_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianPencil {
    d: usize,
    mats: Vec<CMatrix>,
}

/// Largest matrix size for which the determinant is expanded symbolically.
pub const MAX_EXPANSION_SIZE: usize = 6;

impl HermitianPencil {
    pub fn new(mats: Vec<CMatrix>) -> Result<Self> {
        let first = mats.first().ok_or_else(|| Error::Shape("empty pencil".into()))?;
        let d = first.len();
        if d == 0 {
            return Err(Error::Shape("zero-size matrices".into()));
        }
        for (k, m) in mats.iter().enumerate() {
            if m.len() != d || m.iter().any(|r| r.len() != d) {
                return Err(Error::Shape(format!("matrix {} is not {d}x{d}", k + 1)));
            }
            if !is_hermitian(m) {
                return Err(Error::NotHermitian { index: k + 1 });
            }
        }
        Ok(HermitianPencil { d, mats })
    }

    pub fn n(&self) -> usize {
        self.mats.len()
    }

    pub fn size(&self) -> usize {
        self.d
    }

    pub fn mats(&self) -> &[CMatrix] {
        &self.mats
    }

    /// `A(y) = Σ y_j A_j`.
    pub fn at(&self, y: &[Rational]) -> Result<CMatrix> {
        check_dim(self.n(), y.len())?;
        let mut out = vec![vec![CRational::zero(); self.d]; self.d];
        for (m, yj) in self.mats.iter().zip(y) {
            for r in 0..self.d {
                for c in 0..self.d {
                    out[r][c] += &m[r][c].scale(yj);
                }
            }
        }
        Ok(out)
    }

    /// `A(z)` at a complex point.
    pub fn at_complex(&self, z: &[CRational]) -> Result<CMatrix> {
        check_dim(self.n(), z.len())?;
        let mut out = vec![vec![CRational::zero(); self.d]; self.d];
        for (m, zj) in self.mats.iter().zip(z) {
            for r in 0..self.d {
                for c in 0..self.d {
                    out[r][c] += &(&m[r][c] * zj);
                }
            }
        }
        Ok(out)
    }

    pub fn det_at(&self, z: &[CRational]) -> Result<CRational> {
        Ok(cdet(&self.at_complex(z)?))
    }

    /// Whether `A(y)` is positive or negative definite.
    pub fn is_definite_at(&self, y: &[Rational]) -> Result<bool> {
        let a = self.at(y)?;
        if hermitian_is_pd(&a) {
            return Ok(true);
        }
        let neg: CMatrix = a.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        Ok(hermitian_is_pd(&neg))
    }

    /// `det(Σ z_j A_j)` expanded by the Leibniz formula (size at most 6).
    pub fn expand(&self) -> Result<MPoly> {
        if self.d > MAX_EXPANSION_SIZE {
            return Err(Error::InvalidArgument(format!(
                "determinant expansion supports size <= {MAX_EXPANSION_SIZE}, got {}",
                self.d
            )));
        }
        let n = self.n();
        let entry = |r: usize, c: usize| -> MPoly {
            let mut p = MPoly::zero(n);
            for (j, m) in self.mats.iter().enumerate() {
                let mut e = vec![0; n];
                e[j] = 1;
                p.add_term(crate::algebra::Monomial::new(e), m[r][c].clone());
            }
            p
        };
        let entries: Vec<Vec<MPoly>> = (0..self.d).map(|r| (0..self.d).map(|c| entry(r, c)).collect()).collect();
        let mut total = MPoly::zero(n);
        let mut perm: Vec<usize> = (0..self.d).collect();
        permutations(&mut perm, 0, &mut |p, odd| {
            let mut term = MPoly::one(n);
            for (r, &c) in p.iter().enumerate() {
                term = term.mul(&entries[r][c]).expect("same ring");
                if term.is_zero() {
                    return;
                }
            }
            total = if odd { total.sub(&term) } else { total.add(&term) }.expect("same ring");
        });
        Ok(total)
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize], bool)) {
    fn rec(p: &mut Vec<usize>, k: usize, odd: bool, f: &mut dyn FnMut(&[usize], bool)) {
        if k == p.len() {
            f(p, odd);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, odd ^ (i != k), f);
            p.swap(k, i);
        }
    }
    rec(p, k, false, f)
}

/// JSON-friendly view of a pencil.
#[derive(Serialize)]
pub struct PencilView {
    pub n: usize,
    pub size: usize,
    pub mats: Vec<Vec<Vec<String>>>,
}

impl From<&HermitianPencil> for PencilView {
    fn from(p: &HermitianPencil) -> Self {
        PencilView {
            n: p.n(),
            size: p.size(),
            mats: p
                .mats
                .iter()
                .map(|m| m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect())
                .collect(),
        }
    }
}
