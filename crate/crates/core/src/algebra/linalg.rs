//! Exact dense linear algebra over the rationals and complex rationals.

use num::{One, Signed, Zero};

use super::mpoly::MPoly;
use super::scalar::{CRational, Rational};

pub type QMatrix = Vec<Vec<Rational>>;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &QMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &QMatrix, ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[row][f].clone();
            }
            x
        })
        .collect()
}

/// Solve `m x = b`; returns one solution if consistent.
pub fn solve(m: &QMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut aug: QMatrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][ncols].clone();
    }
    Some(x)
}

pub fn det(m: &QMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        d *= &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

pub fn mat_vec(m: &QMatrix, x: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Congruence diagonalization of a symmetric matrix: returns `(d, p)` with
/// `pᵀ m p = diag(d)` and `p` invertible.
pub fn congruence_diagonalize(m: &QMatrix) -> (Vec<Rational>, QMatrix) {
    let n = m.len();
    let mut a = m.clone();
    let mut p: QMatrix =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    let swap_idx = |a: &mut QMatrix, p: &mut QMatrix, i: usize, k: usize| {
        if i == k {
            return;
        }
        a.swap(i, k);
        for row in a.iter_mut() {
            row.swap(i, k);
        }
        for row in p.iter_mut() {
            row.swap(i, k);
        }
    };
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap_idx(&mut a, &mut p, i, k);
        } else {
            let mut found = None;
            'outer: for i in k..n {
                for j in i + 1..n {
                    if !a[i][j].is_zero() {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let Some((i, j)) = found else { break };
            // Replace coordinate i by i + j so that the new diagonal entry is 2 a_ij.
            for r in 0..n {
                let t = a[r][j].clone();
                a[r][i] += t;
            }
            for c in 0..n {
                let t = a[j][c].clone();
                a[i][c] += t;
            }
            for row in p.iter_mut() {
                let t = row[j].clone();
                row[i] += t;
            }
            swap_idx(&mut a, &mut p, i, k);
        }
        let piv = a[k][k].clone();
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &piv;
            for c in k + 1..n {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
            for row in p.iter_mut() {
                let t = &f * &row[k];
                row[r] -= t;
            }
        }
        for r in k + 1..n {
            a[r][k] = Rational::zero();
            a[k][r] = Rational::zero();
        }
    }
    ((0..n).map(|i| a[i][i].clone()).collect(), p)
}

/// Numbers of positive, negative and zero eigenvalues of a symmetric matrix.
pub fn inertia(m: &QMatrix) -> (usize, usize, usize) {
    let (d, _) = congruence_diagonalize(m);
    let pos = d.iter().filter(|x| x.is_positive()).count();
    let neg = d.iter().filter(|x| x.is_negative()).count();
    (pos, neg, d.len() - pos - neg)
}

/// Congruence `bᵀ m b` for an `n × k` matrix `b` given as a list of `k` column vectors.
pub fn restrict_form(m: &QMatrix, cols: &[Vec<Rational>]) -> QMatrix {
    let mb: Vec<Vec<Rational>> = cols.iter().map(|c| mat_vec(m, c)).collect();
    cols.iter().map(|ci| mb.iter().map(|mcj| dot(ci, mcj)).collect()).collect()
}

/// Symmetric matrix `A` with `f(x) = xᵀ A x`, for a real homogeneous quadratic `f`.
pub fn quadratic_form_matrix(f: &MPoly) -> Option<QMatrix> {
    if f.degree() != Some(2) || !f.is_homogeneous() || !f.is_real() {
        return None;
    }
    let n = f.nvars();
    let mut a = vec![vec![Rational::zero(); n]; n];
    let half = Rational::new(1.into(), 2.into());
    for (m, c) in f.terms() {
        let idx: Vec<usize> =
            m.exps().iter().enumerate().flat_map(|(j, &e)| std::iter::repeat_n(j, e as usize)).collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            a[i][i] = c.re.clone();
        } else {
            a[i][j] = &c.re * &half;
            a[j][i] = &c.re * &half;
        }
    }
    Some(a)
}

pub type CMatrix = Vec<Vec<CRational>>;

pub fn is_hermitian(m: &CMatrix) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i].conj()))
}

/// Positive definiteness of a Hermitian matrix via its pivots (equivalently,
/// its leading principal minors).
pub fn hermitian_is_pd(m: &CMatrix) -> bool {
    let n = m.len();
    let mut a = m.clone();
    for k in 0..n {
        let piv = a[k][k].clone();
        if !piv.is_real() || !piv.re.is_positive() {
            return false;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= &t;
            }
        }
    }
    true
}

pub fn cdet(m: &CMatrix) -> CRational {
    let n = m.len();
    let mut a = m.clone();
    let mut d = CRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return CRational::zero();
        };
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        d = &d * &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= &t;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn q(rows: &[&[i64]]) -> QMatrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_det() {
        let m = q(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(rank(&m), 2);
        assert!(det(&m).is_zero());
        let m = q(&[&[2, 1], &[1, 3]]);
        assert_eq!(det(&m), int(5));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = q(&[&[1, 1, 1], &[1, -1, 0]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&m, &ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inertia_with_zero_diagonal() {
        let m = q(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        assert_eq!(inertia(&m), (1, 1, 1));
        let lor = q(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        assert_eq!(inertia(&lor), (1, 2, 0));
    }

    #[test]
    fn congruence_transform_is_exact() {
        let m = q(&[&[0, 2, 1], &[2, 0, 3], &[1, 3, 0]]);
        let (d, p) = congruence_diagonalize(&m);
        let cols: Vec<Vec<Rational>> = (0..3).map(|j| p.iter().map(|r| r[j].clone()).collect()).collect();
        let r = restrict_form(&m, &cols);
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { d[i].clone() } else { Rational::zero() };
                assert_eq!(r[i][j], e);
            }
        }
    }

    #[test]
    fn hermitian_pd() {
        let i = CRational::i();
        let one = CRational::one();
        let two = CRational::from_int(2);
        let m = vec![vec![two.clone(), i.clone()], vec![-&i, two.clone()]];
        assert!(is_hermitian(&m));
        assert!(hermitian_is_pd(&m));
        let m = vec![vec![one.clone(), two.clone()], vec![two, one]];
        assert!(!hermitian_is_pd(&m));
    }
}
