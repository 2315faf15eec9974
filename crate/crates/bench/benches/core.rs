use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pointext_bench::{group, pw_fixture};
use pointext_core::cohomology::{cohomology_group, kx_class_order};
use pointext_core::metric::{enumerate_lagrangians, orthogonal_group, MetricGroup, QZ};
use pointext_core::modcat::{all_classes, bimodcat_tensor, brpic_group};
use pointext_core::obstructions::{bicharacter_from_entries, pw_cochain, tambara_yamagami};

const CAP: u128 = 1 << 20;

fn metric(c: &mut Criterion) {
    let e = MetricGroup::hyperbolic(&group(&[2, 2]));
    c.bench_function("lagrangians hyp(Z/2^2)", |b| b.iter(|| enumerate_lagrangians(black_box(&e), CAP).unwrap()));
    c.bench_function("orthogonal group hyp(Z/2^2)", |b| b.iter(|| orthogonal_group(black_box(&e), CAP).unwrap()));
    let e8 = MetricGroup::hyperbolic(&group(&[2, 4]));
    c.bench_function("orthogonal group hyp(Z/2+Z/4)", |b| b.iter(|| orthogonal_group(black_box(&e8), CAP).unwrap()));
}

fn modcat(c: &mut Criterion) {
    let a = group(&[2, 2]);
    c.bench_function("brpic Z/2^2", |b| b.iter(|| brpic_group(black_box(&a), CAP).unwrap()));
    let (a1, a2) = (group(&[2]), group(&[2, 2]));
    let n = all_classes(&a1.direct_sum(&a2));
    let np = all_classes(&a2.direct_sum(&a1));
    c.bench_function("bimodule tensor Z/2 x Z/2^2 x Z/2, all pairs", |b| {
        b.iter(|| {
            for x in &n {
                for y in &np {
                    black_box(bimodcat_tensor(&a1, &a2, &a1, x, y).unwrap());
                }
            }
        })
    });
}

fn obstructions(c: &mut Criterion) {
    let a = group(&[2]);
    let chi = bicharacter_from_entries(&a, &[(0, 0, QZ::new(1, 2))]).unwrap();
    c.bench_function("tambara-yamagami Z/2", |b| b.iter(|| tambara_yamagami(black_box(&a), &chi).unwrap()));
    let (m, q) = pw_fixture();
    let l = cohomology_group(&m, 2).unwrap().basis()[0].clone();
    c.bench_function("pw cochain Z/3^2", |b| b.iter(|| pw_cochain(&m, &q, black_box(&l), None).unwrap()));
    let nu = pw_cochain(&m, &q, &l, None).unwrap();
    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    slow.bench_function("class order in H^4(Z/3^2, k*)", |b| b.iter(|| kx_class_order(m.group(), black_box(&nu)).unwrap()));
    slow.finish();
}

criterion_group!(benches, metric, modcat, obstructions);
criterion_main!(benches);
