//! Exact real-root machinery for univariate rational polynomials: squarefree
//! parts, Sturm chains, root counting and isolation, plus a numeric complex
//! root finder.

mod algebraic;
mod numeric;
pub(crate) mod zpoly;

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{QPoly, Rational, UPoly};
use crate::error::{Error, Result};
use zpoly::ZPoly;

pub use algebraic::RealAlgebraic;
pub use numeric::roots_complex_numeric;

/// Endpoint of a (possibly unbounded) interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl From<Rational> for Endpoint {
    fn from(r: Rational) -> Self {
        Endpoint::Finite(r)
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...`, stored with primitive integer
/// coefficients (each element is a positive multiple of the textbook one).
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<ZPoly>,
}

impl SturmChain {
    pub fn new(p: &QPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(SturmChain::from_zpoly(ZPoly::from_qpoly(p)))
    }

    pub(crate) fn from_zpoly(p: ZPoly) -> Self {
        let mut seq = vec![p];
        let d = seq[0].derivative().primitive();
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let k = seq.len();
            let (r, s) = ZPoly::pseudo_rem(&seq[k - 2], &seq[k - 1]);
            if r.is_zero() {
                break;
            }
            let r = r.primitive();
            // next = -rem up to a positive factor
            let next = if s > 0 { ZPoly::new(r.c.into_iter().map(|x| -x).collect()) } else { r };
            seq.push(next);
        }
        SturmChain { seq }
    }

    /// The chain as rational polynomials.
    pub fn seq(&self) -> Vec<QPoly> {
        self.seq.iter().map(|z| z.to_qpoly()).collect()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of sign changes at an endpoint (zeros skipped).
    pub fn variations(&self, at: &Endpoint) -> usize {
        match at {
            Endpoint::NegInf => Self::count_variations(self.seq.iter().map(|p| p.sign_neg_inf())),
            Endpoint::PosInf => Self::count_variations(self.seq.iter().map(|p| p.sign_pos_inf())),
            Endpoint::Finite(x) => Self::count_variations(self.seq.iter().map(|p| p.sign_at(x.numer(), x.denom()))),
        }
    }

    /// Distinct real roots in `(lo, hi]` (open at infinite ends).
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree(p: &QPoly) -> Result<QPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(QPoly::one());
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_exact(&g).expect("gcd divides").monic())
}

/// Squarefree decomposition `p = c * prod a_i^i`; returns `(a_i, i)` for nonconstant `a_i`.
pub fn squarefree_decomposition(p: &QPoly) -> Result<Vec<(QPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let f = p.monic();
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = fp.div_exact(&a0).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Number of distinct real roots of `p`, over all of ℝ or in `(lo, hi]`.
pub fn count_real_roots(p: &QPoly, interval: Option<(Endpoint, Endpoint)>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let z = ZPoly::from_qpoly(p);
    Ok(count_z(&z, interval))
}

pub(crate) fn count_z(z: &ZPoly, interval: Option<(Endpoint, Endpoint)>) -> usize {
    if z.degree() == 0 {
        return 0;
    }
    let chain = SturmChain::from_zpoly(z.squarefree());
    match interval {
        None => chain.count(&Endpoint::NegInf, &Endpoint::PosInf),
        Some((lo, hi)) => chain.count(&lo, &hi),
    }
}

/// Distinct real roots over ℝ without computing a squarefree part first.
pub(crate) fn count_all_z(z: &ZPoly) -> usize {
    if z.degree() == 0 {
        return 0;
    }
    SturmChain::from_zpoly(z.clone()).count(&Endpoint::NegInf, &Endpoint::PosInf)
}

/// Whether every complex root of `p` is real (multiplicities allowed).
pub fn all_roots_real(p: &QPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = ZPoly::from_qpoly(p).squarefree();
    Ok(count_all_z(&s) == s.degree())
}

/// Whether the real polynomial given as a `UPoly` has only real roots.
pub fn all_roots_real_upoly(p: &UPoly) -> Result<bool> {
    let q = p.to_real().ok_or(Error::NonRealCoefficients)?;
    all_roots_real(&q)
}

/// Disjoint half-open isolating intervals `(lo, hi]`, one per distinct real root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    #[serde(serialize_with = "ser_intervals")]
    pub intervals: Vec<(Rational, Rational)>,
    pub multiplicities: Vec<usize>,
}

fn ser_intervals<S: serde::Serializer>(v: &[(Rational, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (a, b) in v {
        seq.serialize_element(&[a.to_string(), b.to_string()])?;
    }
    seq.end()
}

pub fn default_precision() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 30)
}

/// Bisect `(lo, hi]` until each root of squarefree `z` is isolated in an interval of width ≤ `prec`.
pub(crate) fn isolate_squarefree(z: &ZPoly, prec: &Rational) -> Vec<(Rational, Rational)> {
    if z.degree() == 0 {
        return Vec::new();
    }
    let chain = SturmChain::from_zpoly(z.clone());
    let b = Rational::from_integer(BigInt::one() << z.root_bound_exp());
    let lo = -b.clone();
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), b.clone(), chain.count(&Endpoint::Finite(lo), &Endpoint::Finite(b)))];
    let two = Rational::from_integer(2.into());
    while let Some((a, c, k)) = stack.pop() {
        if k == 0 {
            continue;
        }
        if k == 1 && &c - &a <= *prec {
            out.push((a, c));
            continue;
        }
        let m = (&a + &c) / &two;
        let left = chain.count(&Endpoint::Finite(a.clone()), &Endpoint::Finite(m.clone()));
        if k - left > 0 {
            stack.push((m.clone(), c, k - left));
        }
        if left > 0 {
            stack.push((a, m, left));
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Halve an isolating interval of a root of squarefree `z`, keeping the half containing it.
pub(crate) fn bisect_once(chain: &SturmChain, iv: &mut (Rational, Rational)) {
    let m = (&iv.0 + &iv.1) / Rational::from_integer(2.into());
    if chain.count(&Endpoint::Finite(iv.0.clone()), &Endpoint::Finite(m.clone())) == 1 {
        iv.1 = m;
    } else {
        iv.0 = m;
    }
}

pub fn isolate_real_roots(p: &QPoly, precision: &Rational) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !precision.is_positive() {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    let mut items: Vec<((Rational, Rational), usize, usize)> = Vec::new();
    let mut chains = Vec::new();
    for (fi, (a, mult)) in squarefree_decomposition(p)?.into_iter().enumerate() {
        let z = ZPoly::from_qpoly(&a);
        for iv in isolate_squarefree(&z, precision) {
            items.push((iv, mult, fi));
        }
        chains.push(SturmChain::from_zpoly(z));
    }
    // Intervals of different squarefree factors may overlap; refine until disjoint.
    loop {
        items.sort_by(|x, y| x.0 .0.cmp(&y.0 .0));
        let mut clash = None;
        for k in 1..items.len() {
            if items[k].0 .0 < items[k - 1].0 .1 {
                clash = Some(k);
                break;
            }
        }
        match clash {
            None => break,
            Some(k) => {
                let (a, b) = items.split_at_mut(k);
                let ia = &mut a[k - 1];
                bisect_once(&chains[ia.2], &mut ia.0);
                let ib = &mut b[0];
                bisect_once(&chains[ib.2], &mut ib.0);
            }
        }
    }
    Ok(RootIsolation {
        intervals: items.iter().map(|x| x.0.clone()).collect(),
        multiplicities: items.iter().map(|x| x.1).collect(),
    })
}

/// Rational points separating the distinct real roots of `p`: one below all
/// roots, one strictly between each consecutive pair, and one above all roots.
/// Returns `[0]` when `p` has no real roots.
pub fn separating_points(p: &QPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let z = ZPoly::from_qpoly(p).squarefree();
    if z.degree() == 0 {
        return Ok(vec![Rational::zero()]);
    }
    let prec = Rational::one();
    let mut ivs = isolate_squarefree(&z, &prec);
    if ivs.is_empty() {
        return Ok(vec![Rational::zero()]);
    }
    let chain = SturmChain::from_zpoly(z);
    let one = Rational::one();
    let mut pts = vec![&ivs[0].0 - &one];
    for k in 1..ivs.len() {
        while ivs[k].0 <= ivs[k - 1].1 {
            let mut iv = ivs[k].clone();
            bisect_once(&chain, &mut iv);
            ivs[k] = iv;
        }
        pts.push((&ivs[k - 1].1 + &ivs[k].0) / Rational::from_integer(2.into()));
    }
    pts.push(&ivs[ivs.len() - 1].1 + &one);
    Ok(pts)
}

/// Whether `p` has a real root in the closed interval `[lo, hi]`.
pub fn has_root_in_closed(p: &QPoly, lo: &Rational, hi: &Rational) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.eval(lo).is_zero() {
        return Ok(true);
    }
    Ok(count_real_roots(p, Some((Endpoint::Finite(lo.clone()), Endpoint::Finite(hi.clone()))))? > 0)
}
