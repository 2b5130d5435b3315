use criterion::{black_box, criterion_group, criterion_main, Criterion};
use smoothwords_core::{
    chains_of_height, gamma, height, height_class, kolakoski_prefix, stats_table, Method, Word,
};

fn bench_gamma(c: &mut Criterion) {
    c.bench_function("gamma_extension_64", |b| {
        b.iter(|| gamma(black_box(64), Method::Extension).unwrap())
    });
    c.bench_function("stats_table_128", |b| {
        b.iter(|| stats_table(black_box(128)).unwrap())
    });
}

fn bench_chains(c: &mut Criterion) {
    c.bench_function("height_class_8", |b| {
        b.iter(|| height_class(black_box(8)).unwrap())
    });
    c.bench_function("chains_of_height_8", |b| {
        b.iter(|| chains_of_height(black_box(8)).unwrap())
    });
}

fn bench_words(c: &mut Criterion) {
    let prefix = kolakoski_prefix(4096);
    c.bench_function("kolakoski_prefix_65536", |b| {
        b.iter(|| kolakoski_prefix(black_box(65536)))
    });
    c.bench_function("height_kolakoski_4096", |b| {
        let w = Word::parse(&prefix.to_string()).unwrap();
        b.iter(|| height(black_box(&w)).unwrap())
    });
}

criterion_group!(benches, bench_gamma, bench_chains, bench_words);
criterion_main!(benches);
