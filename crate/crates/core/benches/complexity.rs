use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lieword::verify::{self, VerifyOptions};
use lieword::{complexity_table, Strategy, TableOptions, WordSpec};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn table(c: &mut Criterion) {
    let mut group = c.benchmark_group("table");
    group.sample_size(10);
    let words = [
        ("thue-morse", WordSpec::thue_morse()),
        ("fibonacci", WordSpec::fibonacci()),
        (
            "power-abaaabaaaaba",
            WordSpec::power("abaaabaaaaba").unwrap(),
        ),
    ];
    for (name, spec) in &words {
        for (label, strategy) in STRATEGIES {
            let options = TableOptions {
                strategy,
                ..TableOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(*name, label), spec, |b, spec| {
                b.iter(|| complexity_table(spec, 40, &options).unwrap())
            });
        }
    }
    group.finish();
}

fn corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify-corpus");
    group.sample_size(10);
    let words = verify::corpus(0, 200);
    for (label, strategy) in STRATEGIES {
        let options = VerifyOptions {
            table: TableOptions {
                strategy,
                ..TableOptions::default()
            },
            ..VerifyOptions::default()
        };
        group.bench_function(label, |b| {
            b.iter(|| verify::check_corpus(&words, 30, &options).unwrap())
        });
    }
    group.finish();
}

fn random_prefix(c: &mut Criterion) {
    let mut group = c.benchmark_group("prefix-random");
    group.sample_size(10);
    for (label, strategy) in STRATEGIES {
        group.bench_function(label, |b| {
            b.iter(|| verify::check_prefix_random(2_000, 100, 0, strategy))
        });
    }
    group.finish();
}

criterion_group!(benches, table, corpus, random_prefix);
criterion_main!(benches);
