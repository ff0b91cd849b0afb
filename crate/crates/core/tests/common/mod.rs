#![allow(dead_code)]

use hypercone::algebra::{CRational, MPoly, Monomial, Rational};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub fn rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| *r != Rational::from_integer(0.into()))
}

pub fn positive_rat() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn rvec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rat(), n)
}

pub fn complex() -> impl Strategy<Value = CRational> {
    (rat(), prop_oneof![Just(Rational::from_integer(0.into())), rat()]).prop_map(|(a, b)| CRational::new(a, b))
}

pub fn cvec(n: usize) -> impl Strategy<Value = Vec<CRational>> {
    proptest::collection::vec(complex(), n)
}

fn build(n: usize, terms: Vec<(Vec<u32>, CRational)>) -> MPoly {
    let mut p = MPoly::zero(n);
    for (e, c) in terms {
        p.add_term(Monomial::new(e), c);
    }
    p
}

/// Polynomials with up to `terms` monomials of degree at most `deg` in each variable.
pub fn poly(n: usize, deg: u32, terms: usize, complex_coeffs: bool) -> impl Strategy<Value = MPoly> {
    let coeff = if complex_coeffs { complex().boxed() } else { rat().prop_map(CRational::real).boxed() };
    proptest::collection::vec((proptest::collection::vec(0..=deg, n), coeff), 1..=terms)
        .prop_map(move |t| build(n, t))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Real homogeneous polynomials of total degree `deg`.
pub fn real_form(n: usize, deg: u32, terms: usize) -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((proptest::collection::vec(0..=deg, n - 1), nonzero_rat()), 1..=terms)
        .prop_map(move |t| {
            let mut p = MPoly::zero(n);
            for (mut e, c) in t {
                let mut used = 0;
                for x in e.iter_mut() {
                    *x = (*x).min(deg - used);
                    used += *x;
                }
                e.push(deg - used);
                p.add_term(Monomial::new(e), CRational::real(c));
            }
            p
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}
