mod common;

use common::*;
use hypercone::arrangement::{
    arrangement_membership, chambers, general_position, zaslavsky_central, LinearFormSet, UnionMembership,
};
use hypercone::Rational;
use proptest::prelude::*;

fn form_set(n: usize, max_d: usize) -> impl Strategy<Value = LinearFormSet> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), 1..=max_d)
        .prop_filter("no zero form", |fs| fs.iter().all(|f| f.iter().any(|&x| x != 0)))
        .prop_map(move |fs| {
            let forms = fs.iter().map(|f| f.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
            LinearFormSet::new(n, forms).unwrap()
        })
}

proptest! {
    #![proptest_config(config(200, 31))]

    #[test]
    fn zaslavsky_bound_and_equality(fs in (2usize..=4).prop_flat_map(|n| form_set(n, 5))) {
        let dedup = fs.deduplicate();
        let count = chambers(&dedup).len() as u128;
        let bound = zaslavsky_central(dedup.dim(), dedup.len());
        prop_assert!(count <= bound);
        prop_assert_eq!(count == bound, general_position(&dedup));
    }

    #[test]
    fn chambers_pair_up(fs in form_set(3, 5)) {
        let ch = chambers(&fs.deduplicate());
        for c in &ch {
            let opposite: Vec<i8> = c.signs.iter().map(|s| -s).collect();
            prop_assert!(ch.iter().any(|d| d.signs == opposite));
            let neg: Vec<Rational> = c.witness.iter().map(|x| -x).collect();
            for (a, s) in fs.deduplicate().forms().iter().zip(&opposite) {
                let v: Rational = a.iter().zip(&neg).map(|(x, y)| x * y).sum();
                prop_assert_eq!(if v > Rational::from_integer(0.into()) { 1 } else { -1 }, *s);
            }
        }
    }

    #[test]
    fn witnesses_avoid_every_hyperplane(fs in form_set(3, 6)) {
        for c in chambers(&fs.deduplicate()) {
            prop_assert_eq!(arrangement_membership(&fs, &c.witness).unwrap(), UnionMembership::OutsideUnion);
        }
    }

    #[test]
    fn duplicates_do_not_add_chambers(fs in form_set(3, 4), k in 1i64..=3) {
        let mut forms = fs.forms().to_vec();
        let extra: Vec<Rational> = forms[0].iter().map(|x| x * Rational::from_integer((-k).into())).collect();
        forms.push(extra);
        let doubled = LinearFormSet::new(3, forms).unwrap();
        prop_assert_eq!(chambers(&doubled.deduplicate()).len(), chambers(&fs.deduplicate()).len());
    }
}
