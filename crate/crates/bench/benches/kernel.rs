use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use disjoint_curves::{
    build_shift_graph, chromatic_number_exact, four_segment_family, seg_intersect,
    three_segment_family, verify_family, ParamProfile, Point, Segment, VerifyOptions,
};

fn kernel(c: &mut Criterion) {
    let s1 = Segment::new(Point::from_ints(-3, 1), Point::from_ints(7, 4)).unwrap();
    let s2 = Segment::new(Point::from_ints(0, 5), Point::from_ints(2, -6)).unwrap();
    let s3 = Segment::new(Point::from_ints(-1, 0), Point::from_ints(9, 0)).unwrap();
    let s4 = Segment::new(Point::from_ints(4, 0), Point::from_ints(12, 0)).unwrap();
    c.bench_function("seg_intersect/crossing", |b| {
        b.iter(|| seg_intersect(black_box(&s1), black_box(&s2)))
    });
    c.bench_function("seg_intersect/collinear_overlap", |b| {
        b.iter(|| seg_intersect(black_box(&s3), black_box(&s4)))
    });
}

fn verification(c: &mut Criterion) {
    let four = four_segment_family(8, &ParamProfile::canonical(8)).unwrap();
    let three = three_segment_family(6, None).unwrap();
    let opts = VerifyOptions::default();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("four_segment_m8", |b| b.iter(|| verify_family(black_box(&four), &opts)));
    group.bench_function("three_segment_m6", |b| b.iter(|| verify_family(black_box(&three), &opts)));
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let h8 = build_shift_graph(8).unwrap();
    c.bench_function("chromatic/H_8", |b| {
        b.iter(|| chromatic_number_exact(black_box(&h8.graph), 50_000_000))
    });
}

criterion_group!(benches, kernel, verification, chromatic);
criterion_main!(benches);
