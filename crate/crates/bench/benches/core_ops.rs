use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use slicereg_core::algebra::scalar::{rat, ratio};
use slicereg_core::equiv::{find_intertwiners, IntertwinerSpace};
use slicereg_core::series::SeriesKind;
use slicereg_core::{equivalent, Poly, Quat, Quaternion, Rat, StemPoly, TruncSeries};

fn q(a: i64, b: i64, c: i64, d: i64) -> Quaternion {
    Quaternion::from_ints(a, b, c, d)
}

fn sample_stem(deg: usize) -> StemPoly {
    Poly::new(
        (0..=deg as i64)
            .map(|k| Quat::new(ratio(k + 1, 3), ratio(2 - k, 5), ratio(k * k - 3, 7), rat(1 - k)))
            .collect(),
    )
}

fn worked_pair() -> (StemPoly, StemPoly) {
    let f = Poly::new(vec![q(0, 1, 0, 0), q(0, 0, 1, 0), Quat::new(rat(0), rat(0), rat(0), ratio(1, 2))]);
    let g = Poly::new(vec![q(0, 1, 0, 0), q(0, 0, 0, 0), Quat::new(rat(0), ratio(1, 2), rat(0), rat(0))]);
    (f, g)
}

fn bench_poly(c: &mut Criterion) {
    let a: Poly<Rat> = Poly::new((0..12).map(|k| ratio(k * k - 7, k + 1)).collect());
    let b: Poly<Rat> = Poly::new((0..9).map(|k| ratio(3 - k, 2 * k + 1)).collect());
    let common: Poly<Rat> = Poly::new(vec![rat(2), rat(0), rat(1)]);
    let (a, b) = (&a * &common, &b * &common);
    c.bench_function("gcd degree 13/10", |bch| bch.iter(|| black_box(&a).gcd(black_box(&b))));
}

fn bench_stem(c: &mut Criterion) {
    let (f, g) = (sample_stem(5), sample_stem(5));
    c.bench_function("star degree 5", |b| b.iter(|| black_box(&f).star(black_box(&g))));
    c.bench_function("cdiv degree 5", |b| b.iter(|| black_box(&f).cdiv()));
    c.bench_function("equivalent degree 5", |b| b.iter(|| equivalent(black_box(&f), black_box(&g))));
}

fn bench_intertwiner(c: &mut Criterion) {
    let (f, g) = worked_pair();
    c.bench_function("find_intertwiner dmax 2", |b| {
        b.iter(|| find_intertwiners(black_box(&f), black_box(&g), 2, IntertwinerSpace::All))
    });
}

fn bench_series(c: &mut Criterion) {
    let cos = TruncSeries::build(SeriesKind::Cos, 40).unwrap();
    let sin = TruncSeries::build(SeriesKind::Sin, 40).unwrap();
    let g = cos.scale_right(&q(0, 1, 0, 0)).add(&sin.scale_right(&q(0, 0, 1, 0)));
    c.bench_function("series norm N=40", |b| b.iter(|| black_box(&g).norm()));
}

criterion_group!(benches, bench_poly, bench_stem, bench_intertwiner, bench_series);
criterion_main!(benches);
