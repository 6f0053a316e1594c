use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use zchelp::arith::divisors;
use zchelp::chartab::fixtures;
use zchelp::engine::Enumerator;
use zchelp::psl2::{build, Psl2Parameters};
use zchelp::CharacterTable;

fn scan(table: &CharacterTable, parallel: bool) -> usize {
    let mut e = Enumerator::new(table, true, parallel);
    divisors(table.exponent)
        .into_iter()
        .skip(1)
        .map(|n| e.admissible(n).unwrap().len())
        .sum()
}

fn tables() -> Vec<(String, CharacterTable)> {
    let mut out = vec![("S5".to_string(), fixtures::s5())];
    for q in [7, 11, 13] {
        let par = Psl2Parameters::from_q(q).unwrap();
        out.push((format!("PSL(2,{q})"), build(&par, true).unwrap()));
    }
    out
}

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (name, table) in tables() {
        group.bench_with_input(BenchmarkId::new("sequential", &name), &table, |b, t| {
            b.iter(|| scan(t, false))
        });
        if cfg!(feature = "parallel") {
            group.bench_with_input(BenchmarkId::new("parallel", &name), &table, |b, t| {
                b.iter(|| scan(t, true))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumerate);
criterion_main!(benches);
