mod common;

use common::*;
use hypercone::algebra::{resultant, CRational, MPoly};
use proptest::prelude::*;

fn at(p: &MPoly, x: &[CRational]) -> CRational {
    p.eval(x).unwrap()
}

proptest! {
    #![proptest_config(config(256, 11))]

    #[test]
    fn evaluation_is_multiplicative(f in poly(3, 3, 5, true), g in poly(3, 3, 5, true), x in cvec(3)) {
        let fg = f.mul(&g).unwrap();
        prop_assert_eq!(at(&fg, &x), &at(&f, &x) * &at(&g, &x));
        let s = f.add(&g).unwrap();
        prop_assert_eq!(at(&s, &x), &at(&f, &x) + &at(&g, &x));
    }

    #[test]
    fn initial_form_is_homogenization_at_zero(f in poly(2, 4, 6, true)) {
        let fh = f.homogenize().unwrap();
        let at0 = fh.eval_var(0, &CRational::zero());
        let init = f.initial_form().unwrap();
        // variable 0 no longer occurs, so it can be dropped
        prop_assert_eq!(at0.remap(2, &[usize::MAX, 0, 1]).unwrap(), init);
    }

    #[test]
    fn restriction_to_a_line(f in poly(3, 3, 5, true), x in rvec(3), e in rvec(3), t in rat()) {
        let line = f.restrict_line(&x, &e).unwrap();
        let p: Vec<CRational> = x.iter().zip(&e).map(|(a, b)| CRational::real(a + &t * b)).collect();
        prop_assert_eq!(line.eval(&CRational::real(t.clone())), at(&f, &p));
    }

    #[test]
    fn real_and_imaginary_parts(f in poly(2, 3, 5, true), x in rvec(2), y in rvec(2)) {
        let (u, v) = f.real_imag_split(&y).unwrap();
        let z: Vec<CRational> = x.iter().zip(&y).map(|(a, b)| CRational::new(a.clone(), b.clone())).collect();
        let w = at(&f, &z);
        let ux = u.eval_rational(&x).unwrap();
        let vx = v.eval_rational(&x).unwrap();
        prop_assert!(ux.is_real() && vx.is_real());
        prop_assert_eq!(CRational::new(ux.re, vx.re), w);
    }

    #[test]
    fn resultant_vanishes_at_common_zero(
        a in rat(), b in rat(),
        g1 in poly(2, 2, 3, false), h1 in poly(2, 2, 3, false),
        g2 in poly(2, 2, 3, false), h2 in poly(2, 2, 3, false),
    ) {
        let c = |r: &hypercone::Rational| MPoly::constant(2, CRational::real(r.clone()));
        let l1 = MPoly::var(2, 0).sub(&c(&a)).unwrap();
        let l2 = MPoly::var(2, 1).sub(&c(&b)).unwrap();
        let u = g1.mul(&l1).unwrap().add(&h1.mul(&l2).unwrap()).unwrap();
        let v = g2.mul(&l1).unwrap().add(&h2.mul(&l2).unwrap()).unwrap();
        prop_assume!(u.degree_in(1).unwrap_or(0) > 0 || v.degree_in(1).unwrap_or(0) > 0);
        if let Ok(r) = resultant(&u, &v, 1) {
            let val = r.eval(&[CRational::real(a.clone()), CRational::zero()]).unwrap();
            prop_assert!(val.is_zero());
        }
    }
}
