use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gcf_core::check::trial_rng;
use gcf_core::group::{G48_PRESENTATION, G64C_PRESENTATION};
use gcf_core::{min_distance, preset, DistanceOptions, Field, Group, GroupAlgebra, Matrix, Presentation, Side};
use rand::Rng;

fn distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_distance");
    group.sample_size(10);
    for (name, q, expr) in
        [("d24/GF(2)", 2, "1 + r + s + r^3*s + r^5"), ("g48/GF(3)", 3, "1+2b+a^3b^2+2a^3+2a^3b^3+2c^2b^3+c^2ab^3")]
    {
        let g = preset(name.split('/').next().unwrap()).unwrap();
        let alg = GroupAlgebra::new(g, &Field::prime(q).unwrap());
        let v = alg.parse_element(expr).unwrap();
        let dual = alg.principal_ideal(&v, Side::Right).unwrap().into_space().orthogonal();
        group.bench_with_input(BenchmarkId::from_parameter(name), &dual, |b, s| {
            b.iter(|| min_distance(s, &DistanceOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for (q, n) in [(2u32, 64usize), (3, 64), (4, 48), (7, 48)] {
        let f = Field::of_order(q).unwrap();
        let mut rng = trial_rng(1, q as u64);
        let rows: Vec<Vec<u8>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..q as u8)).collect()).collect();
        let m = Matrix::from_rows(&f, n, &rows).unwrap();
        group.bench_with_input(BenchmarkId::new(format!("GF({q})"), n), &m, |b, m| b.iter(|| m.rref()));
    }
    group.finish();
}

fn todd_coxeter(c: &mut Criterion) {
    let mut group = c.benchmark_group("todd_coxeter");
    for (name, text) in
        [("d24", "<r,s | r^12=s^2=1, srs=r^11>"), ("g48", G48_PRESENTATION), ("g64c", G64C_PRESENTATION)]
    {
        let pres: Presentation = text.parse().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &pres, |b, p| {
            b.iter(|| Group::from_presentation(name, p, gcf_core::group::DEFAULT_MAX_COSETS).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, distance, rref, todd_coxeter);
criterion_main!(benches);
