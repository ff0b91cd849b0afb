mod common;

use common::*;
use hypercone::algebra::{QPoly, Rational, UPoly};
use hypercone::realroots::{
    all_roots_real, count_real_roots, default_precision, isolate_real_roots, roots_complex_numeric, Endpoint,
};
use proptest::prelude::*;

fn from_roots(roots: &[Rational]) -> QPoly {
    roots.iter().fold(QPoly::one(), |p, r| p.mul(&QPoly::linear_root(r)))
}

fn real_poly() -> impl Strategy<Value = QPoly> {
    proptest::collection::vec(rat(), 2..=7).prop_map(QPoly::new).prop_filter("nonconstant", |p| !p.is_constant())
}

proptest! {
    #![proptest_config(config(256, 21))]

    #[test]
    fn planted_roots_are_counted(roots in proptest::collection::btree_set(-30i64..=30, 1..=7), den in 1i64..=4, scale in nonzero_rat()) {
        let rs: Vec<Rational> = roots.iter().map(|&r| Rational::new(r.into(), den.into())).collect();
        // repeat the first root to check that multiplicities do not count twice
        let mut with_double = rs.clone();
        with_double.push(rs[0].clone());
        let p = from_roots(&with_double).scale(&scale);
        prop_assert_eq!(count_real_roots(&p, None).unwrap(), rs.len());
        prop_assert!(all_roots_real(&p).unwrap());
        let (lo, hi) = (rs[0].clone() - Rational::new(1.into(), 8.into()), rs[0].clone());
        prop_assert_eq!(count_real_roots(&p, Some((Endpoint::Finite(lo), Endpoint::Finite(hi)))).unwrap(), 1);
    }

    #[test]
    fn real_rootedness_of_products(p in real_poly(), q in real_poly()) {
        let pq = p.mul(&q);
        prop_assert_eq!(all_roots_real(&pq).unwrap(), all_roots_real(&p).unwrap() && all_roots_real(&q).unwrap());
    }

    #[test]
    fn isolation_matches_count(p in real_poly()) {
        let iso = isolate_real_roots(&p, &default_precision()).unwrap();
        prop_assert_eq!(iso.intervals.len(), count_real_roots(&p, None).unwrap());
        for w in iso.intervals.windows(2) {
            prop_assert!(w[0].1 <= w[1].0);
        }
    }

    #[test]
    fn numeric_roots_of_real_rooted_polynomials_are_real(roots in proptest::collection::vec(-20i64..=20, 1..=6)) {
        let rs: Vec<Rational> = roots.iter().map(|&r| Rational::new(r.into(), 3.into())).collect();
        let p = from_roots(&rs);
        let tol = 1e-10;
        let z = roots_complex_numeric(&UPoly::from_real(&p), tol).unwrap();
        prop_assert_eq!(z.len(), rs.len());
        // a root of multiplicity k is only resolved to about tol^(1/k)
        let distinct = roots.iter().collect::<std::collections::BTreeSet<_>>().len() == roots.len();
        let slack = if distinct { 10.0 * tol } else { 1e-2 };
        for r in z {
            prop_assert!(r.im.abs() <= slack * (1.0 + r.norm()), "{r}");
        }
    }
}
