//! Central hyperplane arrangements: chamber enumeration, general position and
//! Zaslavsky counts.

mod simplex;

use num::{Signed, Zero};
use serde::Serialize;

use crate::algebra::linalg::{dot, rank};
use crate::algebra::Rational;
use crate::error::{check_dim, Error, Result};

/// `d` nonzero linear forms on ℝⁿ; form `l` defines the hyperplane `a_l · y = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormSet {
    n: usize,
    forms: Vec<Vec<Rational>>,
}

impl LinearFormSet {
    pub fn new(n: usize, forms: Vec<Vec<Rational>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        for (l, a) in forms.iter().enumerate() {
            check_dim(n, a.len())?;
            if a.iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidArgument(format!("form {l} is zero")));
            }
        }
        Ok(LinearFormSet { n, forms })
    }

    pub fn from_ints(n: usize, forms: &[&[i64]]) -> Result<Self> {
        LinearFormSet::new(
            n,
            forms.iter().map(|f| f.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    /// Pairs `(i, j)`, `i < j`, of forms defining the same hyperplane.
    pub fn duplicates(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.forms.len() {
            for j in i + 1..self.forms.len() {
                if proportional(&self.forms[i], &self.forms[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// One form per distinct hyperplane, first occurrence kept.
    pub fn deduplicate(&self) -> LinearFormSet {
        let mut forms: Vec<Vec<Rational>> = Vec::new();
        for a in &self.forms {
            if !forms.iter().any(|b| proportional(a, b)) {
                forms.push(a.clone());
            }
        }
        LinearFormSet { n: self.n, forms }
    }
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let m = vec![a.to_vec(), b.to_vec()];
    rank(&m) < 2
}

/// A chamber: sign vector (`+1`/`-1` per form) with a rational interior point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chamber {
    #[serde(serialize_with = "ser_signs")]
    pub signs: Vec<i8>,
    #[serde(serialize_with = "crate::algebra::scalar::serde_rational::vec::serialize")]
    pub witness: Vec<Rational>,
}

fn ser_signs<S: serde::Serializer>(v: &[i8], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&sign_string(v))
}

pub fn sign_string(v: &[i8]) -> String {
    v.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect()
}

impl Chamber {
    pub fn sign_string(&self) -> String {
        sign_string(&self.signs)
    }
}

/// Whether every `min(n, d)` of the forms are linearly independent.
pub fn general_position(fs: &LinearFormSet) -> bool {
    let k = fs.n.min(fs.forms.len());
    let mut idx: Vec<usize> = (0..k).collect();
    let d = fs.forms.len();
    loop {
        let m: Vec<Vec<Rational>> = idx.iter().map(|&i| fs.forms[i].clone()).collect();
        if rank(&m) < k {
            return false;
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] < d - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Maximize the common slack `eps` of the strict system `s_l a_l · y > 0`;
/// returns a point with every signed form positive, or `None` if infeasible.
pub(crate) fn strict_witness(n: usize, rows: &[(&[Rational], i8)]) -> Option<Vec<Rational>> {
    // variables: p (n), q (n), eps; y = p - q
    let nv = 2 * n + 1;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (form, s) in rows {
        let mut r = vec![Rational::zero(); nv];
        for j in 0..n {
            let v = if *s > 0 { form[j].clone() } else { -form[j].clone() };
            r[j] = -v.clone();
            r[n + j] = v;
        }
        r[2 * n] = Rational::from_integer(1.into());
        a.push(r);
        b.push(Rational::zero());
    }
    for j in 0..n {
        let mut r = vec![Rational::zero(); nv];
        r[j] = Rational::from_integer(1.into());
        a.push(r);
        b.push(Rational::from_integer(1.into()));
        let mut r = vec![Rational::zero(); nv];
        r[n + j] = Rational::from_integer(1.into());
        a.push(r);
        b.push(Rational::from_integer(1.into()));
    }
    let mut r = vec![Rational::zero(); nv];
    r[2 * n] = Rational::from_integer(1.into());
    a.push(r);
    b.push(Rational::from_integer(1.into()));
    let mut c = vec![Rational::zero(); nv];
    c[2 * n] = Rational::from_integer(1.into());
    let x = simplex::maximize(&a, &b, &c)?;
    if !x[2 * n].is_positive() {
        return None;
    }
    Some((0..n).map(|j| &x[j] - &x[n + j]).collect())
}

fn normalize_linf(y: Vec<Rational>) -> Vec<Rational> {
    let m = y.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero);
    if m.is_zero() {
        return y;
    }
    y.into_iter().map(|x| x / &m).collect()
}

fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// All chambers of the arrangement, by incremental insertion of hyperplanes.
pub fn chambers(fs: &LinearFormSet) -> Vec<Chamber> {
    let n = fs.n;
    let mut cells: Vec<Chamber> = vec![Chamber { signs: Vec::new(), witness: vec![Rational::zero(); n] }];
    for a in &fs.forms {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            let sigma = sign(&dot(a, &cell.witness));
            for s in [1i8, -1] {
                let witness = if sigma == s {
                    Some(cell.witness.clone())
                } else {
                    let mut rows: Vec<(&[Rational], i8)> =
                        fs.forms.iter().zip(&cell.signs).map(|(f, &t)| (f.as_slice(), t)).collect();
                    rows.push((a.as_slice(), s));
                    strict_witness(n, &rows).map(normalize_linf)
                };
                if let Some(w) = witness {
                    let mut signs = cell.signs.clone();
                    signs.push(s);
                    next.push(Chamber { signs, witness: w });
                }
            }
        }
        cells = next;
    }
    cells.sort_by(|x, y| y.signs.cmp(&x.signs));
    cells
}

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Number of chambers of a generic central arrangement of `d` hyperplanes in ℝⁿ.
pub fn zaslavsky_central(n: usize, d: usize) -> u128 {
    assert!(n >= 1 && d >= 1, "n and d must be positive");
    2 * (0..n as u64).map(|k| binom(d as u64 - 1, k)).sum::<u128>()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UnionMembership {
    InsideUnion,
    OutsideUnion,
}

/// Whether `y` lies on some hyperplane of the arrangement.
pub fn arrangement_membership(fs: &LinearFormSet, y: &[Rational]) -> Result<UnionMembership> {
    check_dim(fs.n, y.len())?;
    if fs.forms.iter().any(|a| dot(a, y).is_zero()) {
        Ok(UnionMembership::InsideUnion)
    } else {
        Ok(UnionMembership::OutsideUnion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_position_examples() {
        assert!(general_position(&LinearFormSet::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()));
        assert!(!general_position(&LinearFormSet::from_ints(2, &[&[1, 0], &[2, 0]]).unwrap()));
        assert!(general_position(
            &LinearFormSet::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
        ));
    }

    #[test]
    fn chamber_examples() {
        let fs = LinearFormSet::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        let ch = chambers(&fs);
        let signs: Vec<String> = ch.iter().map(|c| c.sign_string()).collect();
        assert_eq!(signs, vec!["++", "+-", "-+", "--"]);
        let fs = LinearFormSet::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(chambers(&fs).len(), 6);
        assert_eq!(chambers(&LinearFormSet::from_ints(1, &[&[1]]).unwrap()).len(), 2);
    }

    #[test]
    fn witnesses_are_normalized_and_valid() {
        let fs = LinearFormSet::from_ints(3, &[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1], &[1, 1, 1]]).unwrap();
        for c in chambers(&fs) {
            let m = c.witness.iter().map(|x| x.abs()).max().unwrap();
            assert_eq!(m, Rational::from_integer(1.into()));
            for (a, &s) in fs.forms().iter().zip(&c.signs) {
                assert_eq!(sign(&dot(a, &c.witness)), s);
            }
        }
    }

    #[test]
    fn zaslavsky_examples() {
        assert_eq!(zaslavsky_central(2, 3), 6);
        assert_eq!(zaslavsky_central(3, 3), 8);
        assert_eq!(zaslavsky_central(2, 5), 10);
    }

    #[test]
    fn membership_examples() {
        let fs = LinearFormSet::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        let r = |a: i64, b: i64| vec![Rational::from_integer(a.into()), Rational::from_integer(b.into())];
        assert_eq!(arrangement_membership(&fs, &r(0, 3)).unwrap(), UnionMembership::InsideUnion);
        assert_eq!(arrangement_membership(&fs, &r(1, 1)).unwrap(), UnionMembership::OutsideUnion);
        assert_eq!(arrangement_membership(&fs, &r(0, 0)).unwrap(), UnionMembership::InsideUnion);
    }

    #[test]
    fn duplicates_are_flagged_and_removed() {
        let fs = LinearFormSet::from_ints(2, &[&[1, 0], &[-2, 0], &[1, 1]]).unwrap();
        assert_eq!(fs.duplicates(), vec![(0, 1)]);
        assert_eq!(fs.deduplicate().len(), 2);
        assert_eq!(chambers(&fs).len(), chambers(&fs.deduplicate()).len());
    }
}
