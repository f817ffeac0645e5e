use capgame::solvers::{enumerate_pure_nash, support_enumeration_2p, SolverOptions};
use capgame::{CapitalGame, Dynamics, Execution, MixedStrategyProfile, SimulationConfig, StandardGame};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn random_game(counts: &[usize], seed: u64) -> StandardGame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size: usize = counts.iter().product();
    let payoffs = (0..counts.len())
        .map(|_| (0..size).map(|_| rng.random_range(-5.0..5.0)).collect())
        .collect();
    StandardGame::new(counts.to_vec(), payoffs).unwrap()
}

fn bench_simulation(c: &mut Criterion) {
    let coin = CapitalGame::new(
        vec![2],
        vec![vec![150.0, 60.0]],
        vec![100.0],
        vec![1.0],
        vec![Dynamics::Multiplicative],
    )
    .unwrap();
    let mut group = c.benchmark_group("simulate coin flip 1000x1000");
    group.sample_size(10);
    for (name, exec) in MODES {
        let mut cfg = SimulationConfig::new(MixedStrategyProfile::uniform(&[2]), 1000, 1000, 7);
        cfg.execution = exec;
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| capgame::simulate::run(&coin, cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_support_enumeration(c: &mut Criterion) {
    let game = random_game(&[7, 7], 3);
    let mut group = c.benchmark_group("support enumeration 7x7");
    group.sample_size(10);
    for (name, exec) in MODES {
        let opts = SolverOptions {
            execution: exec,
            ..SolverOptions::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, opts| {
            b.iter(|| support_enumeration_2p(&game, opts).unwrap())
        });
    }
    group.finish();
}

fn bench_pure_enumeration(c: &mut Criterion) {
    let game = random_game(&[6, 6, 6, 6, 6, 6], 5);
    let mut group = c.benchmark_group("pure enumeration 6^6");
    for (name, exec) in MODES {
        let opts = SolverOptions {
            execution: exec,
            ..SolverOptions::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, opts| {
            b.iter(|| enumerate_pure_nash(&game, opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_simulation, bench_support_enumeration, bench_pure_enumeration);
criterion_main!(benches);
