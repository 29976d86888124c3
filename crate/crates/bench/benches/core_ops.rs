use criterion::{black_box, criterion_group, criterion_main, Criterion};

use lamroot_core::characters::CharacterGroup;
use lamroot_core::psi::psi1;
use lamroot_core::sieve::{rosser_weights, DensityFn, SieveInstance, SieveItem};
use lamroot_core::unitgroup::UnitGroup;
use lamroot_core::{arith, DirichletCharacter};

fn bench_factor(c: &mut Criterion) {
    c.bench_function("factor_range_1e4", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for n in 1_000_000..1_010_000u64 {
                acc ^= arith::factor(black_box(n)).unwrap().radical();
            }
            acc
        })
    });
    c.bench_function("factor_semiprime_42bit", |b| {
        b.iter(|| arith::factor(black_box(2_147_483_647u64 * 65_537)))
    });
}

fn bench_gstar_sweep(c: &mut Criterion) {
    c.bench_function("gstar_sweep_512", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for q in 10_000..10_512u64 {
                acc += lamroot_core::g_star(black_box(q)).unwrap();
            }
            acc
        })
    });
}

fn bench_lambda_density(c: &mut Criterion) {
    c.bench_function("lambda_density_30030", |b| {
        let g = UnitGroup::decompose(30_030).unwrap();
        b.iter(|| g.lambda_density())
    });
}

fn bench_characters(c: &mut Criterion) {
    c.bench_function("phi_star_5040_with_conductors", |b| {
        b.iter(|| {
            let cg = CharacterGroup::new(black_box(5040)).unwrap();
            cg.phi_star()
                .iter()
                .map(|chi| chi.conductor())
                .sum::<u64>()
        })
    });
    c.bench_function("value_table_9973", |b| {
        let cg = CharacterGroup::new(9973).unwrap();
        let chi = cg.enumerate().into_iter().nth(1).unwrap();
        b.iter(|| chi.value_table())
    });
}

fn bench_admissible(c: &mut Criterion) {
    c.bench_function("admissible_scan_3_1440", |b| {
        b.iter(|| lamroot_core::is_admissible_multiple(black_box(3), black_box(1440)))
    });
}

fn bench_rosser(c: &mut Criterion) {
    c.bench_function("rosser_table_z30", |b| {
        b.iter(|| rosser_weights(black_box(900.0), black_box(30)))
    });
    c.bench_function("weight_sums_z30", |b| {
        let t = rosser_weights(900.0, 30).unwrap();
        b.iter(|| t.weight_sums())
    });
}

fn bench_sieve_bound(c: &mut Criterion) {
    c.bench_function("shifted_bound_1e5_upsilon2310", |b| {
        let items: Vec<SieveItem> = (1..=100_000).map(SieveItem::unit).collect();
        let inst =
            SieveInstance::new(items, 2310, 1e5, DensityFn::Identity, 1.0).unwrap();
        b.iter(|| lamroot_core::shifted_lower_bound(&inst, Some(121.0)))
    });
}

fn bench_psi1(c: &mut Criterion) {
    c.bench_function("psi1_1e5_mod7", |b| {
        let chi = CharacterGroup::new(7)
            .unwrap()
            .enumerate()
            .into_iter()
            .nth(1)
            .unwrap();
        b.iter(|| psi1(black_box(1e5), &chi))
    });
    c.bench_function("psi1_1e6_trivial", |b| {
        let chi = DirichletCharacter::modulus_one();
        b.iter(|| psi1(black_box(1e6), &chi))
    });
}

criterion_group!(
    benches,
    bench_factor,
    bench_gstar_sweep,
    bench_lambda_density,
    bench_characters,
    bench_admissible,
    bench_rosser,
    bench_sieve_bound,
    bench_psi1
);
criterion_main!(benches);
