use criterion::{criterion_group, criterion_main, Criterion};
use pftopo::laws::{check_law, GridStep, LawId, SearchDomain};
use pftopo::InclusionMode;

fn laws(c: &mut Criterion) {
    let mut group = c.benchmark_group("laws");
    group.sample_size(10);
    let grid = SearchDomain::exhaustive(1, GridStep::Quarter);
    for law in [LawId::L02, LawId::L06, LawId::L16] {
        group.bench_function(law.code(), |b| {
            b.iter(|| check_law(law, &grid, InclusionMode::PaperLiteral).unwrap())
        });
    }
    let sampled = SearchDomain::randomized(2, GridStep::Quarter, 10_000, 1);
    group.bench_function("L06/randomized", |b| {
        b.iter(|| check_law(LawId::L06, &sampled, InclusionMode::PaperLiteral).unwrap())
    });
    group.finish();
}

criterion_group!(benches, laws);
criterion_main!(benches);
