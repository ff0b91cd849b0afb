use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hypercone::algebra::{int, rat, QPoly};
use hypercone::arrangement::chambers;
use hypercone::constructions::{cubic_six, lorentz, quartic_g, random_independent_linear};
use hypercone::hyperbolicity::{is_hyperbolic, HyperbolicityConfig};
use hypercone::improj::{membership, raster_structured, MembershipConfig, RasterBox};
use hypercone::realroots::count_real_roots;

fn sturm(c: &mut Criterion) {
    let p = (1..=12).fold(QPoly::one(), |p, k| p.mul(&QPoly::linear_root(&rat(k * 7 - 40, 3))));
    c.bench_function("sturm count, degree 12", |b| b.iter(|| count_real_roots(black_box(&p), None).unwrap()));
}

fn arrangement(c: &mut Criterion) {
    let fs = random_independent_linear(4, 8, 0).unwrap();
    c.bench_function("chambers, n=4 d=8", |b| b.iter(|| chambers(black_box(&fs)).len()));
}

fn hyperbolicity(c: &mut Criterion) {
    let f = lorentz(4).unwrap().poly;
    let e = [int(1), int(0), int(0), int(0)];
    let cfg = HyperbolicityConfig::default();
    c.bench_function("hyperbolic, Lorentz n=4", |b| b.iter(|| is_hyperbolic(black_box(&f), &e, &cfg).unwrap()));
}

fn bivariate(c: &mut Criterion) {
    let f = cubic_six().poly;
    let y = [rat(3, 2), rat(-1, 3)];
    let cfg = MembershipConfig::default();
    c.bench_function("membership, bivariate cubic", |b| b.iter(|| membership(black_box(&f), &y, &cfg).unwrap()));
}

fn raster(c: &mut Criterion) {
    let g = quartic_g();
    let bbox = RasterBox::square(int(6)).unwrap();
    let cfg = MembershipConfig::default();
    let mut group = c.benchmark_group("raster");
    group.sample_size(10);
    group.bench_function("quartic_g 64x64", |b| b.iter(|| raster_structured(&g.structured, &bbox, 64, &cfg).unwrap()));
    group.finish();
}

criterion_group!(kernels, sturm, arrangement, hyperbolicity, bivariate, raster);
criterion_main!(kernels);
