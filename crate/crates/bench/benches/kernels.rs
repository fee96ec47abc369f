use criterion::{criterion_group, criterion_main, Criterion};
use liekit::chevalley::{AdjointGroup, CharacterFunctional, StructureConstants};
use liekit::heis::build_projection;
use liekit::num::q;
use liekit::realize::{ordering_a, varpi3, LeviGen};
use liekit::rootsys::{RootSystem, WeylGroup};
use liekit::unfold::double_coset_reps;
use liekit::weilrep::{apply_heisenberg, FiniteWeilContext, HeisFp};
use liekit_bench::f4;

fn bench_rootsys(c: &mut Criterion) {
    c.bench_function("build F4 + constants", |b| {
        b.iter(|| {
            let sys = RootSystem::build("F4").unwrap();
            StructureConstants::standard(&sys)
        })
    });
    c.bench_function("enumerate W(F4)", |b| {
        let sys = RootSystem::build("F4").unwrap();
        b.iter(|| WeylGroup::enumerate(&sys))
    });
}

fn bench_cosets(c: &mut Criterion) {
    let sys = RootSystem::build("F4").unwrap();
    let wg = WeylGroup::enumerate(&sys);
    c.bench_function("double cosets P3 vs P4", |b| {
        b.iter(|| double_coset_reps(&sys, &wg, &[1, 2, 4], &[1, 2, 3]))
    });
}

fn bench_collection(c: &mut Criterion) {
    let (sys, nt) = f4();
    let adj = AdjointGroup::new(&sys, &nt);
    let word: Vec<_> = sys
        .positive_ids()
        .filter(|&r| sys.root(r).0[0] >= 1)
        .map(|r| (r, q(2)))
        .collect();
    c.bench_function("collect a 15-factor word", |b| {
        b.iter(|| adj.collect(&word, None).unwrap())
    });
}

fn bench_varpi3(c: &mut Criterion) {
    let (sys, nt) = f4();
    let adj = AdjointGroup::new(&sys, &nt);
    let center = sys.id_of_str("2342").unwrap();
    let ell = CharacterFunctional::on_roots(&[(center, q(1))]);
    let target = build_projection(&adj, &ordering_a(&sys), &[center], &ell).unwrap();
    let g = sys.id_of_str("0110").unwrap();
    c.bench_function("derive varpi3 image", |b| {
        b.iter(|| varpi3(&adj, &target, &[LeviGen::Root(g, q(2))], &sys).unwrap())
    });
}

fn bench_weil(c: &mut Criterion) {
    let ctx = FiniteWeilContext::new(3, 7).unwrap();
    let phi = ctx.random_phi(1);
    let mut u = HeisFp::zero(7);
    u.x[3] = 1;
    u.y[5] = 2;
    u.z = 1;
    c.bench_function("Heisenberg operator at p=3, n=7", |b| {
        b.iter(|| apply_heisenberg(&ctx, &u, &phi))
    });
}

criterion_group!(benches, bench_rootsys, bench_cosets, bench_collection, bench_varpi3, bench_weil);
criterion_main!(benches);
