//! Parallel-vs-sequential benchmarks for the sampling-heavy paths:
//! convexity certification and reversibility-defect measurement.
//! Run with `cargo bench -p weylforge`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weylforge::normforge::certify::{CertifyOptions, Parallelism};
use weylforge::normforge::{
    build_absolute_norm, build_product_norm, reversibility_defect, AutoOrValue, GroupRef,
    NormExpression, NormMode, NormSpec, ProductSpec, TermSpec,
};
use weylforge::rootsys::{build_root_system, TypeLabel};
use weylforge::weylgrp::generate_weyl_group;

fn invariant_norm(label: TypeLabel, rank: usize, degree: u32) -> NormExpression {
    let group = generate_weyl_group(build_root_system(label, rank).unwrap(), 1_000_000).unwrap();
    let spec = NormSpec {
        mode: NormMode::Absolute,
        group: Some(GroupRef {
            type_label: label.to_string(),
            rank,
        }),
        terms: vec![TermSpec {
            degree,
            weight_index: Some(1),
            k: degree / 2,
            c: 1.0,
            positivity_c: AutoOrValue::default(),
        }],
        odd: None,
        gamma: AutoOrValue::default(),
        product: None,
    };
    let opts = CertifyOptions {
        per_pair: 512,
        random: 512,
        ..Default::default()
    };
    build_absolute_norm(&group, &spec, &opts).unwrap().norm
}

fn opts_for(parallelism: Parallelism, samples: usize) -> CertifyOptions {
    CertifyOptions {
        per_pair: samples,
        random: samples,
        fd_checks: 0,
        parallelism,
        ..Default::default()
    }
}

fn bench_certify(c: &mut Criterion) {
    let cases: Vec<(&str, NormExpression)> = vec![
        ("b2-quartic", invariant_norm(TypeLabel::B, 2, 4)),
        ("g2-sextic", invariant_norm(TypeLabel::G2, 2, 6)),
        (
            "product-dim6",
            build_product_norm(&ProductSpec {
                c1: 1.0,
                c2: 1.0,
                p: 2.5,
                dims: vec![2, 4],
                scales: None,
            })
            .unwrap(),
        ),
    ];
    let mut group = c.benchmark_group("certify");
    group.sample_size(10);
    for (name, norm) in &cases {
        let samples = 1 << 12;
        group.bench_with_input(
            BenchmarkId::new(format!("{name}/sequential"), samples),
            &samples,
            |b, &s| {
                let opts = opts_for(Parallelism::Sequential, s);
                b.iter(|| norm.certify(&opts));
            },
        );
        group.bench_with_input(
            BenchmarkId::new(format!("{name}/rayon"), samples),
            &samples,
            |b, &s| {
                let opts = opts_for(Parallelism::Rayon, s);
                b.iter(|| norm.certify(&opts));
            },
        );
    }
    group.finish();
}

fn bench_defect(c: &mut Criterion) {
    let norm = invariant_norm(TypeLabel::B, 2, 4);
    let mut group = c.benchmark_group("reversibility_defect");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        let opts = opts_for(Parallelism::Sequential, 1 << 10);
        b.iter(|| reversibility_defect(&norm, &opts));
    });
    group.bench_function("rayon", |b| {
        let opts = opts_for(Parallelism::Rayon, 1 << 10);
        b.iter(|| reversibility_defect(&norm, &opts));
    });
    group.finish();
}

criterion_group!(benches, bench_certify, bench_defect);
criterion_main!(benches);
