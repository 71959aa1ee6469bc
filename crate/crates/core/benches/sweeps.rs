use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polyfunc::oracle::{brute_force_tables, DEFAULT_BUDGET};
use polyfunc::polyfun::{count_with, evaluate_table, MVPoly, ProblemSpec};
use polyfunc::{BaseElement, Execution, RingInstance};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force_tables");
    group.sample_size(10);
    for (ns, m) in [(vec![6u64], 6u64), (vec![8], 8), (vec![3, 2], 6)] {
        let spec = ProblemSpec::integers(&ns, m).unwrap();
        let label = format!("{ns:?};{m}");
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, &label), &spec, |b, spec| {
                b.iter(|| brute_force_tables(black_box(spec), DEFAULT_BUDGET, exec).unwrap().len())
            });
        }
    }
    group.finish();
}

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    for (ns, m) in [(vec![64u64, 64], 720u64), (vec![100, 100, 10], 5040)] {
        let spec = ProblemSpec::integers(&ns, m).unwrap();
        let label = format!("{ns:?};{m}");
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, &label), &spec, |b, spec| {
                b.iter(|| count_with(black_box(spec), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("evaluate_table");
    let r = RingInstance::integers();
    let spec = ProblemSpec::integers(&[64, 64], 1000).unwrap();
    let x = MVPoly::variable(&r, 2, 0);
    let y = MVPoly::variable(&r, 2, 1);
    // x^5 y^3 + 7 x y + 3
    let f = x
        .pow(5)
        .mul(&y.pow(3))
        .add(&x.mul(&y).scale(&BaseElement::int(7)))
        .add(&MVPoly::constant(&r, 2, BaseElement::int(3)));
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "64x64;1000"), |b| {
            b.iter(|| evaluate_table(black_box(&f), &spec, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, brute_force, counting, evaluation);
criterion_main!(benches);
