//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use hypercone::algebra::linalg::CMatrix;
use hypercone::algebra::{CRational, MPoly, QPoly, Rational, UPoly};
use hypercone::arrangement::{
    arrangement_membership, chambers, general_position, zaslavsky_central, LinearFormSet, UnionMembership,
};
use hypercone::constructions::{
    coordinate_product, cubic_six, diag_det, lorentz, p_k2, pauli_pencil, random_independent_linear,
};
use hypercone::hyperbolicity::upper_bound;
use hypercone::improj::{
    components, far_field_angles, limit_directions, membership, membership_structured, raster_structured,
    recession_correspondence, verify_homogenization, ComponentConfig, HermitianPencil, HomogenizationConfig, LimitKind,
    MembershipConfig, MembershipMethod, Mode, RasterBox, SampleVerdict,
};
use hypercone::realroots::{count_real_roots, roots_complex_numeric};
use hypercone::StructuredPoly;
use hypercone_cli::{parse_poly, parse_poly_n, run, serialize};
use num::Zero;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::new(rng.random_range(-num..=num).into(), rng.random_range(1..=den).into())
}

fn point<R: Rng>(rng: &mut R, n: usize, num: i64, den: i64) -> Vec<Rational> {
    (0..n).map(|_| rational(rng, num, den)).collect()
}

fn exact() -> MembershipConfig {
    MembershipConfig::with_mode(Mode::Exact)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    ensure(e <= limit, || format!("{what} took {e:.2?}, limit {limit:?}"))
}

fn cli_count(text: &str) -> Result<u64, String> {
    let o = run(["hypercone", "cones", "-p", text]);
    if o.code != 0 {
        return Err(format!("cones failed on {text}: {}", o.stderr));
    }
    let v: serde_json::Value = serde_json::from_str(&o.stdout).map_err(|e| e.to_string())?;
    v["count"].as_u64().ok_or_else(|| "no count".into())
}

fn linear_text(a: &Rational, b: &Rational) -> String {
    format!("(({a}) z1 + ({b}) z2)")
}

/// Both the factored text and the expanded polynomial must give `want`.
fn check_count(factored: &str, want: u64) -> Result<(), String> {
    let t = Instant::now();
    let got = cli_count(factored)?;
    ensure(got == want, || format!("{factored}: {got} cones, expected {want}"))?;
    let expanded = serialize(&parse_poly(factored).map_err(|e| e.to_string())?);
    let got = cli_count(&expanded)?;
    ensure(got == want, || format!("{expanded}: {got} cones, expected {want}"))?;
    within(t, Duration::from_secs(2), factored)
}

fn distinct_forms<R: Rng>(rng: &mut R, k: usize, with_z1: bool) -> Vec<(Rational, Rational)> {
    let mut forms: Vec<(Rational, Rational)> = Vec::new();
    if with_z1 {
        forms.push((int(1), int(0)));
    }
    while forms.len() < k {
        let (a, b) = (rational(rng, 9, 4), rational(rng, 9, 4));
        let fresh = forms.iter().all(|(c, d)| &a * d - &b * c != Rational::zero());
        if (!a.is_zero() || !b.is_zero()) && fresh {
            forms.push((a, b));
        }
    }
    forms
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for idx in 0..25 {
        let k = 1 + idx % 6;
        let forms = distinct_forms(&mut rng, k, idx % 2 == 0);
        let text: String = forms.iter().map(|(a, b)| linear_text(a, b)).collect();
        check_count(&text, 2 * k as u64)?;
    }
    for idx in 0..10 {
        // b^2 < 4c: no real roots.
        let b = rational(&mut rng, 6, 3);
        let c = &b * &b / int(4) + Rational::new(rng.random_range(1..=20).into(), 4.into());
        let forms = distinct_forms(&mut rng, idx % 4, idx % 3 == 0);
        let mut text = format!("(z1^2 + ({b}) z1 z2 + ({c}) z2^2)");
        text.extend(forms.iter().map(|(a, b)| linear_text(a, b)));
        check_count(&text, 0)?;
    }
    Ok("25 real-rooted products give 2k, 10 with a quadratic factor give 0".into())
}

fn criterion_2() -> Check {
    // The listed values are checked as given. 2 (C(4,0) + C(4,1) + C(4,2)) = 22
    // for (3,5), and no arrangement of five planes in R^3 has more chambers.
    let mut parts = Vec::new();
    let mut wrong = Vec::new();
    for ((n, d), listed) in [((2, 4), 8u128), ((3, 3), 8), ((3, 5), 26), ((4, 4), 16)] {
        let t = Instant::now();
        let fs = random_independent_linear(n, d, 7).map_err(|e| e.to_string())?;
        let got = chambers(&fs).len() as u128;
        let bound = upper_bound(n, d);
        ensure(got == bound, || format!("(n,d)=({n},{d}): {got} chambers, bound {bound}"))?;
        within(t, Duration::from_secs(10), "chamber count")?;
        parts.push(format!("({n},{d})={got}"));
        if bound != listed {
            wrong.push(format!("({n},{d}) listed as {listed} but the bound formula gives {bound}"));
        }
    }
    if !wrong.is_empty() {
        return Err(format!("counts equal upper_bound everywhere [{}]; {}", parts.join(" "), wrong.join("; ")));
    }
    Ok(parts.join(" "))
}

fn criterion_3() -> Check {
    let fs =
        LinearFormSet::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[2, -3, 5]]).map_err(|e| e.to_string())?;
    let got = chambers(&fs).len() as u128;
    let formula = zaslavsky_central(3, 4);
    ensure(got < formula && !general_position(&fs), || format!("{got} chambers vs formula {formula}"))?;
    Ok(format!("{got} chambers < {formula}, general_position = false"))
}

fn criterion_4() -> Check {
    let t = Instant::now();
    let f = lorentz(3).map_err(|e| e.to_string())?.poly;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10_000 {
        let y = point(&mut rng, 3, 192, 64);
        let m = membership(&f, &y, &exact()).map_err(|e| e.to_string())?;
        let want = &y[0] * &y[0] - &y[1] * &y[1] - &y[2] * &y[2] <= Rational::zero();
        ensure(m.method == MembershipMethod::ExactQuadratic, || format!("route {:?}", m.method))?;
        ensure(m.is_inside() == want, || format!("disagreement at {y:?}"))?;
    }
    within(t, Duration::from_secs(30), "10^4 points")?;
    Ok(format!("10000/10000 agree in {:.2?}", t.elapsed()))
}

fn random_hermitian<R: Rng>(rng: &mut R, d: usize) -> CMatrix {
    let mut m = vec![vec![CRational::zero(); d]; d];
    for i in 0..d {
        m[i][i] = CRational::real(int(rng.random_range(-3..=3)));
        for j in i + 1..d {
            let (a, b) = (int(rng.random_range(-2..=2)), int(rng.random_range(-2..=2)));
            m[i][j] = CRational::new(a.clone(), b.clone());
            m[j][i] = CRational::new(a, -b);
        }
    }
    m
}

fn pencil_agreement(p: &HermitianPencil, rng: &mut ChaCha8Rng, points: usize) -> Result<(), String> {
    let det = p.expand().map_err(|e| e.to_string())?;
    let s = StructuredPoly::pencil(p.clone()).map_err(|e| e.to_string())?;
    for _ in 0..points {
        let y = point(rng, p.n(), 6, 2);
        let a = membership_structured(&s, &y, &exact()).map_err(|e| e.to_string())?;
        let b = membership(&det, &y, &exact()).map_err(|e| e.to_string())?;
        ensure(a.is_inside() == b.is_inside(), || format!("pencil and det disagree at {y:?}"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pauli = pauli_pencil().map_err(|e| e.to_string())?;
    let hypercone::Structure::Pencil(p) = pauli.structured.structure() else {
        return Err("pauli entry is not a pencil".into());
    };
    pencil_agreement(p, &mut rng, 1000)?;
    let mut sizes = Vec::new();
    for d in [2, 3] {
        let p = loop {
            let p = HermitianPencil::new(vec![random_hermitian(&mut rng, d), random_hermitian(&mut rng, d)])
                .map_err(|e| e.to_string())?;
            if p.expand().is_ok_and(|f| f.degree() == Some(d as u32)) {
                break p;
            }
        };
        pencil_agreement(&p, &mut rng, 1000)?;
        sizes.push(d);
    }
    Ok(format!("Pauli and random pencils of size {sizes:?}: 3000/3000 agree"))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..5 {
        let d = rng.random_range(2..=5);
        let rows: Vec<Vec<Rational>> = (0..d)
            .map(|_| loop {
                let r: Vec<Rational> = (0..3).map(|_| int(rng.random_range(-3..=3))).collect();
                if r.iter().any(|x| !x.is_zero()) {
                    break r;
                }
            })
            .collect();
        let e = diag_det(&rows).map_err(|e| e.to_string())?;
        let fs = LinearFormSet::new(3, rows).map_err(|e| e.to_string())?;
        for k in 0..1000 {
            // Every other point on the integer lattice, where the hyperplanes are often hit.
            let y = if k % 2 == 0 { point(&mut rng, 3, 3, 1) } else { point(&mut rng, 3, 12, 5) };
            let m = membership_structured(&e.structured, &y, &exact()).map_err(|e| e.to_string())?;
            let want = arrangement_membership(&fs, &y).map_err(|e| e.to_string())? == UnionMembership::InsideUnion;
            ensure(m.method.is_exact() && m.is_inside() == want, || format!("disagreement at {y:?}"))?;
        }
    }
    Ok("5 instances, 5000/5000 agree".into())
}

fn criterion_7() -> Check {
    let t = Instant::now();
    let bbox = RasterBox::square(int(6)).map_err(|e| e.to_string())?;
    let p = p_k2(4, &int(5)).map_err(|e| e.to_string())?;
    let grid = raster_structured(&p.structured, &bbox, 512, &exact()).map_err(|e| e.to_string())?;
    let r = components(&grid, &ComponentConfig::default());
    let convex = r.components.iter().filter(|c| c.strictly_convex && !c.touches_boundary).count();
    ensure(r.bounded == 8 && convex >= 4, || format!("p_4,2: {} bounded, {convex} strictly convex", r.bounded))?;
    let c = coordinate_product(2).map_err(|e| e.to_string())?;
    let grid = raster_structured(&c.structured, &bbox, 512, &exact()).map_err(|e| e.to_string())?;
    let q = components(&grid, &ComponentConfig::default());
    let any_convex = q.components.iter().any(|c| c.strictly_convex);
    ensure(q.unbounded == 4 && q.bounded == 0 && !any_convex, || {
        format!("z1 z2: {} unbounded, {} bounded, strictly convex present: {any_convex}", q.unbounded, q.bounded)
    })?;
    within(t, Duration::from_secs(300), "rasters")?;
    Ok(format!("p_4,2: {} bounded, {convex} strictly convex; z1 z2: 4 unbounded; {:.1?}", r.bounded, t.elapsed()))
}

fn criterion_8() -> Check {
    let t = Instant::now();
    let f = cubic_six().poly;
    let bbox = RasterBox::square(int(4)).map_err(|e| e.to_string())?;
    let r = recession_correspondence(&f, &bbox, 512, &MembershipConfig::default(), &ComponentConfig::default())
        .map_err(|e| e.to_string())?;
    let mut sectors: Vec<usize> = r.matches.iter().map(|m| m.sector).collect();
    sectors.sort_unstable();
    sectors.dedup();
    ensure(r.components == 6, || format!("{} components", r.components))?;
    ensure(r.sectors == 4 && r.matches.len() == 4 && sectors.len() == 4, || {
        format!("{} matches over {} sectors", r.matches.len(), r.sectors)
    })?;
    within(t, Duration::from_secs(300), "raster and correspondence")?;
    Ok(format!("6 components, 4 matched to 4 sectors; {:.1?}", t.elapsed()))
}

fn criterion_9() -> Check {
    let f = parse_poly("z1^2 - z2^2 - 1").map_err(|e| e.to_string())?;
    let l = limit_directions(&f).map_err(|e| e.to_string())?;
    ensure(l.kind == LimitKind::FiniteSet && l.dirs.len() == 4, || format!("{:?} with {} dirs", l.kind, l.dirs.len()))?;
    let tol = std::f64::consts::TAU / 512.0;
    let arcs = far_field_angles(&f, 16.0, 8192).map_err(|e| e.to_string())?;
    let gap = |a: f64, (s, e): (f64, f64)| {
        let d = |x: f64| {
            let r = (a - x).rem_euclid(std::f64::consts::TAU);
            r.min(std::f64::consts::TAU - r)
        };
        if s <= a && a <= e {
            0.0
        } else {
            d(s).min(d(e))
        }
    };
    for a in l.angles() {
        let best = arcs.iter().map(|&arc| gap(a, arc)).fold(f64::INFINITY, f64::min);
        ensure(best <= tol, || format!("limit angle {a:.4} is {best:.4} rad from the far field"))?;
    }
    for &arc in &arcs {
        let best = l.angles().iter().map(|&a| gap(a, arc)).fold(f64::INFINITY, f64::min);
        ensure(best <= tol, || format!("far-field arc {arc:?} has no limit direction"))?;
    }
    let g = parse_poly("z1^2 + z2^2 + 1").map_err(|e| e.to_string())?;
    let k = limit_directions(&g).map_err(|e| e.to_string())?.kind;
    ensure(k == LimitKind::FullCircle, || format!("sphere gives {k:?}"))?;
    Ok(format!("4 directions match {} far-field arcs; z1^2+z2^2+1 is FullCircle", arcs.len()))
}

fn criterion_10() -> Check {
    let mut parts = Vec::new();
    for text in ["z1^2 - z2^2 - 1", "z1^2 + z2^2 + 25"] {
        let f = parse_poly(text).map_err(|e| e.to_string())?;
        let cfg = HomogenizationConfig { samples: 200, ..Default::default() };
        let r = verify_homogenization(&f, &cfg).map_err(|e| e.to_string())?;
        ensure(r.details.len() == 200 && r.contradictions == 0, || {
            format!("{text}: {} contradictions", r.contradictions)
        })?;
        for s in &r.details {
            let explained = match s.verdict {
                SampleVerdict::Agree => true,
                SampleVerdict::Unknown => !s.lhs_reason.is_empty() && !s.rhs_reason.is_empty(),
                SampleVerdict::Contradiction => false,
            };
            ensure(explained, || format!("{text}: unexplained sample {:?}", s.y))?;
        }
        parts.push(format!("{text}: {} agree, {} unknown", r.agreements, r.unknown));
    }
    Ok(parts.join("; "))
}

fn suite<S: Strategy>(
    name: &str,
    seed: u64,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<String, String> {
    let mut runner = TestRunner::new(common::config(200, seed));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))?;
    Ok(format!("{name} 200/200"))
}

fn inside(f: &MPoly, y: &[Rational]) -> bool {
    membership(f, y, &exact()).expect("bivariate exact route").is_inside()
}

fn binary_form(deg: u32) -> impl Strategy<Value = MPoly> {
    proptest::collection::vec(common::rat(), (deg + 1) as usize)
        .prop_map(move |c| {
            let terms = c.into_iter().enumerate().map(|(k, a)| (vec![k as u32, deg - k as u32], CRational::real(a)));
            MPoly::from_terms(2, terms).expect("two variables")
        })
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn neg(y: &[Rational]) -> Vec<Rational> {
    y.iter().map(|x| -x).collect()
}

fn criterion_11() -> Check {
    let t = Instant::now();
    let small = || common::poly(2, 1, 3).prop_filter("non-constant", |p| !p.is_constant());
    let mut parts = Vec::new();
    parts.push(suite("union", 111, (small(), small(), common::rvec(2)), |(f, g, y)| {
        prop_assert_eq!(inside(&f.mul(&g).unwrap(), &y), inside(&f, &y) || inside(&g, &y));
        Ok(())
    })?);
    parts.push(suite("symmetry", 112, ((1u32..=4).prop_flat_map(binary_form), common::rvec(2)), |(f, y)| {
        prop_assert_eq!(inside(&f, &y), inside(&f, &neg(&y)));
        Ok(())
    })?);
    let cone_case = ((1u32..=3).prop_flat_map(|d| (binary_form(d), binary_form(d))), common::rvec(2), 1i64..=40);
    parts.push(suite("cone", 113, cone_case, |((g, h), y, l)| {
        let f = g.add(&h.scale(&CRational::new(Rational::zero(), int(1)))).unwrap();
        let scaled: Vec<Rational> = y.iter().map(|x| x * Rational::new(l.into(), 8.into())).collect();
        prop_assert_eq!(inside(&f, &y), inside(&f, &scaled));
        Ok(())
    })?);
    parts.push(suite("real-variety", 114, ((1u32..=3).prop_flat_map(binary_form), common::rvec(2)), |(g, x)| {
        let l = MPoly::linear_form(&[x[1].clone(), -x[0].clone()]);
        prop_assume!(!l.is_zero());
        prop_assert!(inside(&l.mul(&g).unwrap(), &x));
        Ok(())
    })?);
    let sturm_case = (proptest::collection::btree_set(-30i64..=30, 0..=5), 1i64..=20);
    parts.push(suite("sturm-numeric", 115, sturm_case, |(roots, c)| {
        // Distinct rational roots times t^2 + c.
        let mut p = QPoly::new(vec![int(c), int(0), int(1)]);
        for &r in &roots {
            p = p.mul(&QPoly::linear_root(&Rational::new(r.into(), 3.into())));
        }
        let exact = count_real_roots(&p, None).unwrap();
        let numeric = roots_complex_numeric(&UPoly::from_real(&p), 1e-10).unwrap();
        let real = numeric.iter().filter(|z| z.im.abs() < 1e-6 * (1.0 + z.norm())).count();
        prop_assert_eq!(exact, roots.len());
        prop_assert_eq!(real, exact);
        Ok(())
    })?);
    parts.push(suite("parser", 116, (1usize..=4).prop_flat_map(|n| common::poly(n, 5, 8)), |f| {
        prop_assert_eq!(parse_poly_n(&serialize(&f), Some(f.nvars())).unwrap(), f);
        Ok(())
    })?);
    within(t, Duration::from_secs(120), "invariant suites")?;
    Ok(format!("{}; {:.1?}", parts.join(", "), t.elapsed()))
}

fn main() {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 11] = [
        ("bivariate cone counts", criterion_1),
        ("sharp bound attainment", criterion_2),
        ("degenerate arrangement", criterion_3),
        ("Lorentz closed form", criterion_4),
        ("pencil vs expansion", criterion_5),
        ("diagonal determinant", criterion_6),
        ("strictly convex construction", criterion_7),
        ("six components and recession cones", criterion_8),
        ("limit directions", criterion_9),
        ("homogenization", criterion_10),
        ("invariant suites", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match res {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{:.1?}]", k + 1, t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{:.1?}]", k + 1, t.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
