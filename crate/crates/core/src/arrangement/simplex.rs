//! Dense exact simplex method (Bland's rule) for small strict-feasibility problems.

use num::{One, Signed, Zero};

use crate::algebra::Rational;

/// Maximize `c·x` subject to `A x <= b`, `x >= 0`, with `b >= 0` so that the
/// origin is a feasible vertex. Returns the optimal `x`, or `None` if unbounded.
pub(crate) fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let n = c.len();
    debug_assert!(b.iter().all(|x| !x.is_negative()));
    // Tableau rows: [A | I | b]; objective row holds reduced costs -c.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for (i, row) in a.iter().enumerate() {
        let mut r = vec![Rational::zero(); width];
        r[..n].clone_from_slice(row);
        r[n + i] = Rational::one();
        r[width - 1] = b[i].clone();
        t.push(r);
    }
    let mut obj = vec![Rational::zero(); width];
    for j in 0..n {
        obj[j] = -c[j].clone();
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Bland: smallest index with negative reduced cost enters.
    while let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (row, _) = leave?;
        let piv = t[row][enter].clone();
        for x in t[row].iter_mut() {
            *x /= &piv;
        }
        let prow = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i == row || r[enter].is_zero() {
                continue;
            }
            let f = r[enter].clone();
            for (x, p) in r.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        basis[row] = enter;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn textbook_lp() {
        // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6)
        let a = vec![vec![int(1), int(0)], vec![int(0), int(2)], vec![int(3), int(2)]];
        let b = vec![int(4), int(12), int(18)];
        let x = maximize(&a, &b, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![int(2), int(6)]);
    }

    #[test]
    fn unbounded_detected() {
        let a = vec![vec![int(1), int(-1)]];
        assert!(maximize(&a, &[int(1)], &[int(0), int(1)]).is_none());
    }
}
