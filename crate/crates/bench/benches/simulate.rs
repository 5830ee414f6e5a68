use criterion::{criterion_group, criterion_main, Criterion};
use linepursuit::kinematics::scalar::{int, rat, zero};
use linepursuit::kinematics::{
    earliest_co_location, earliest_meeting, TrajectoryBuilder, UniformMotion,
};
use linepursuit::simulate;
use linepursuit_bench::fixtures;
use std::hint::black_box;

fn bench_simulate(c: &mut Criterion) {
    let mut group = c.benchmark_group("simulate");
    for (name, spec, scenario) in fixtures() {
        group.bench_function(name, |b| {
            b.iter(|| simulate(black_box(&spec), black_box(&scenario)))
        });
    }
    group.finish();
}

fn bench_meeting(c: &mut Criterion) {
    let mut zigzag = TrajectoryBuilder::at_origin();
    for k in 0..20 {
        let reach = int(1 << k);
        zigzag.move_for(&reach, &int(1)).move_for(&reach, &int(-1));
    }
    let zigzag = zigzag.build().unwrap();
    let target = UniformMotion::new(zero(), int(500_000), rat(1, 3));
    c.bench_function("earliest_meeting/zigzag-20", |b| {
        b.iter(|| earliest_meeting(black_box(&zigzag), black_box(&target), &zero()))
    });
    let mirrored = zigzag.reflected();
    c.bench_function("earliest_co_location/zigzag-20", |b| {
        b.iter(|| earliest_co_location(black_box(&zigzag), black_box(&mirrored), &int(1)))
    });
}

criterion_group!(benches, bench_simulate, bench_meeting);
criterion_main!(benches);
