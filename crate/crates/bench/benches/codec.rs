use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use vtcode::{
    correct_binary, correct_binary_fast, correct_q, encode_binary, encode_q, extract_binary,
    extract_q, BinaryVtParams, BinaryWord, QaryVtParams, QaryWord,
};
use vtcode_bench::{messages, with_deletions};

fn binary(c: &mut Criterion) {
    let mut group = c.benchmark_group("binary");
    for n in [63usize, 1023] {
        let params = BinaryVtParams::new(n, n / 3).unwrap();
        let msgs = messages(params.k(), 64, 1);
        let words: Vec<BinaryWord> = msgs
            .iter()
            .map(|m| encode_binary(m, &params).unwrap())
            .collect();
        let raw: Vec<Vec<u8>> = words.iter().map(|w| w.bits().to_vec()).collect();
        let received: Vec<BinaryWord> = with_deletions(&raw, 2)
            .into_iter()
            .map(|w| BinaryWord::new(w).unwrap())
            .collect();

        group.bench_with_input(BenchmarkId::new("encode", n), &msgs, |b, msgs| {
            b.iter(|| {
                msgs.iter().for_each(|m| {
                    black_box(encode_binary(black_box(m), &params).unwrap());
                })
            })
        });
        group.bench_with_input(BenchmarkId::new("extract", n), &words, |b, words| {
            b.iter(|| {
                words.iter().for_each(|w| {
                    black_box(extract_binary(black_box(w), &params).unwrap());
                })
            })
        });
        group.bench_with_input(BenchmarkId::new("correct", n), &received, |b, rx| {
            b.iter(|| {
                rx.iter().for_each(|w| {
                    black_box(correct_binary(black_box(w), &params).unwrap());
                })
            })
        });
        group.bench_with_input(BenchmarkId::new("correct_fast", n), &received, |b, rx| {
            b.iter(|| {
                rx.iter().for_each(|w| {
                    black_box(correct_binary_fast(black_box(w), &params).unwrap());
                })
            })
        });
    }
    group.finish();
}

fn qary(c: &mut Criterion) {
    let mut group = c.benchmark_group("qary");
    for (q, n) in [(4u32, 16usize), (8, 16), (16, 64), (64, 256)] {
        let params = QaryVtParams::new(n, q, 1, 0).unwrap();
        let id = format!("q{q}_n{n}");
        let msgs = messages(params.k(), 64, 3);
        let words: Vec<QaryWord> = msgs.iter().map(|m| encode_q(m, &params).unwrap()).collect();
        let raw: Vec<Vec<u32>> = words.iter().map(|w| w.symbols().to_vec()).collect();
        let received: Vec<QaryWord> = with_deletions(&raw, 4)
            .into_iter()
            .map(|w| QaryWord::new(q, w).unwrap())
            .collect();

        group.bench_with_input(BenchmarkId::new("encode", &id), &msgs, |b, msgs| {
            b.iter(|| {
                msgs.iter().for_each(|m| {
                    black_box(encode_q(black_box(m), &params).unwrap());
                })
            })
        });
        group.bench_with_input(BenchmarkId::new("extract", &id), &words, |b, words| {
            b.iter(|| {
                words.iter().for_each(|w| {
                    black_box(extract_q(black_box(w), &params).unwrap());
                })
            })
        });
        group.bench_with_input(BenchmarkId::new("correct", &id), &received, |b, rx| {
            b.iter(|| {
                rx.iter().for_each(|w| {
                    black_box(correct_q(black_box(w), params.code()).unwrap());
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, binary, qary);
criterion_main!(benches);
