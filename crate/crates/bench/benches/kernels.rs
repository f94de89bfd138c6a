use criterion::{black_box, criterion_group, criterion_main, Criterion};
use twisted_hodge::ainfty::bundled;
use twisted_hodge::ainfty::{deform, hh_dimensions, verify_stasheff};
use twisted_hodge::{candidate_search, diamond, les_ledger, Hypersurface, DEFAULT_BUDGET};

fn hodge(c: &mut Criterion) {
    let x = Hypersurface::new(9, 5).unwrap();
    c.bench_function("diamond n=9 d=5 twist=24", |b| b.iter(|| diamond(black_box(&x), 24)));
    let y = Hypersurface::new(5, 7).unwrap();
    c.bench_function("les_ledger n=5 d=7 p=-8", |b| b.iter(|| les_ledger(black_box(&y), -8).unwrap()));
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("candidate_search n=3..9 d=2..7 p=-40..-1", |b| {
        b.iter(|| candidate_search(3..=9, 2..=7, -40..=-1).unwrap())
    });
    group.finish();
}

fn ainfty(c: &mut Criterion) {
    let ex = bundled::example("a2-deformed").unwrap();
    let eta = ex.cochain.clone().unwrap();
    let deformed = deform(&ex.category, &ex.bimodule, &eta).unwrap();
    c.bench_function("verify_stasheff a2-deformed k<=7", |b| {
        b.iter(|| verify_stasheff(black_box(&deformed.structure), 7, DEFAULT_BUDGET).unwrap())
    });
    let dual = bundled::example("dual-numbers").unwrap();
    c.bench_function("hh_dimensions dual numbers up to 5", |b| {
        b.iter(|| hh_dimensions(&dual.category, &dual.bimodule, 5, DEFAULT_BUDGET).unwrap())
    });
}

criterion_group!(benches, hodge, search, ainfty);
criterion_main!(benches);
