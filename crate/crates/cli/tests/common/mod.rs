#![allow(dead_code)]

use hypercone::algebra::{CRational, MPoly, Monomial, Rational};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn complex() -> impl Strategy<Value = CRational> {
    (rat(), prop_oneof![Just(Rational::from_integer(0.into())), rat()]).prop_map(|(a, b)| CRational::new(a, b))
}

pub fn rvec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rat(), n)
}

/// Up to `terms` monomials with exponents at most `deg` in each variable.
pub fn poly(n: usize, deg: u32, terms: usize) -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((proptest::collection::vec(0..=deg, n), complex()), 0..=terms).prop_map(move |t| {
        let mut p = MPoly::zero(n);
        for (e, c) in t {
            p.add_term(Monomial::new(e), c);
        }
        p
    })
}
