use linepursuit::kinematics::scalar::{int, rat, signum, zero, Scalar};
use linepursuit::kinematics::{
    earliest_co_location, earliest_meeting, Trajectory, TrajectoryBuilder, UniformMotion,
};
use linepursuit::scenario::offline_optimal_time;
use linepursuit::strategy::default_parameter;
use linepursuit::{
    competitive_ratio, simulate, AlgorithmId, Direction, Scenario, Side, StrategySpec,
};
use proptest::prelude::*;

/// (duration in quarters, velocity in eighths) pieces plus a final ray.
fn legs() -> impl Strategy<Value = (Vec<(i64, i64)>, i64)> {
    (
        prop::collection::vec((1i64..12, -8i64..=8), 0..6),
        -8i64..=8,
    )
}

fn build(x0: i64, pieces: &[(i64, i64)], ray: i64) -> Trajectory {
    let mut b = TrajectoryBuilder::new(zero(), int(x0));
    for &(dt, v) in pieces {
        b.move_for(&rat(dt, 4), &rat(v, 8));
    }
    b.forever(&rat(ray, 8)).build().unwrap()
}

/// Position by direct accumulation over the pieces.
fn oracle_position(x0: i64, pieces: &[(i64, i64)], ray: i64, t: &Scalar) -> Scalar {
    let mut now = zero();
    let mut x = int(x0);
    for &(dt, v) in pieces {
        let end = &now + rat(dt, 4);
        if *t <= end {
            return x + rat(v, 8) * (t - &now);
        }
        x += rat(v, 8) * rat(dt, 4);
        now = end;
    }
    x + rat(ray, 8) * (t - now)
}

fn motion() -> impl Strategy<Value = UniformMotion> {
    (-16i64..=16, -8i64..=8).prop_map(|(x, w)| UniformMotion::new(zero(), int(x), rat(w, 8)))
}

proptest! {
    #[test]
    fn positions_match_accumulation((pieces, ray) in legs(), x0 in -5i64..5, tq in 0i64..80) {
        let traj = build(x0, &pieces, ray);
        let t = rat(tq, 4);
        prop_assert_eq!(traj.position_at(&t).unwrap(), oracle_position(x0, &pieces, ray, &t));
    }

    #[test]
    fn meetings_are_earliest((pieces, ray) in legs(), m in motion(), from_q in 0i64..20) {
        let traj = build(0, &pieces, ray);
        let t_from = rat(from_q, 4);
        let gap = |t: &Scalar| traj.position_at(t).unwrap() - m.position_at(t);
        // The gap is linear between breakpoints, so its signs there decide everything.
        let mut probes: Vec<Scalar> = traj.breakpoints().into_iter().filter(|t| *t > t_from).collect();
        probes.insert(0, t_from.clone());
        match earliest_meeting(&traj, &m, &t_from) {
            Some(t) => {
                prop_assert!(t >= t_from);
                prop_assert_eq!(gap(&t), zero());
                let before: Vec<i8> = probes.iter().filter(|p| **p < t).map(|p| signum(&gap(p))).collect();
                prop_assert!(before.iter().all(|s| *s == before[0] && *s != 0) || before.is_empty());
            }
            None => {
                let signs: Vec<i8> = probes.iter().map(|p| signum(&gap(p))).collect();
                prop_assert!(signs.iter().all(|s| *s == signs[0] && *s != 0));
                let last = probes.last().unwrap();
                let drift = signum(&(rat(ray, 8) - &m.velocity));
                prop_assert!(drift == 0 || drift == signum(&gap(last)));
            }
        }
    }

    #[test]
    fn reflection_preserves_meetings((pieces, ray) in legs(), m in motion()) {
        let traj = build(0, &pieces, ray);
        prop_assert_eq!(
            earliest_meeting(&traj, &m, &zero()),
            earliest_meeting(&traj.reflected(), &m.reflected(), &zero())
        );
    }

    #[test]
    fn co_location_agrees_with_meeting((pieces, ray) in legs(), m in motion()) {
        let traj = build(0, &pieces, ray);
        let other = TrajectoryBuilder::new(zero(), m.x0.clone()).forever(&m.velocity).build().unwrap();
        prop_assert_eq!(earliest_co_location(&traj, &other, &zero()), earliest_meeting(&traj, &m, &zero()));
    }

    #[test]
    fn splitting_segments_keeps_turns((pieces, ray) in legs(), at in 0usize..6) {
        let traj = build(0, &pieces, ray);
        let mut split = Vec::new();
        for (i, &(dt, v)) in pieces.iter().enumerate() {
            if i == at {
                split.push((dt, v));
                split.push((dt, v));
            } else {
                split.push((2 * dt, v));
            }
        }
        let mut b = TrajectoryBuilder::at_origin();
        for &(dt, v) in &split {
            b.move_for(&rat(dt, 8), &rat(v, 8));
        }
        let halved = b.forever(&rat(ray, 8)).build().unwrap();
        prop_assert_eq!(traj.turn_count(), halved.turn_count());
    }

    #[test]
    fn offline_optimum_is_a_direct_chase(dq in 4i64..40, vq in 0i64..16, away in any::<bool>(), pos in any::<bool>()) {
        let side = if pos { Side::Pos } else { Side::Neg };
        let dir = if away { Direction::Away } else { Direction::Toward };
        let v = if away { rat(vq % 8, 8) } else { rat(vq, 8) };
        let s = Scenario::new(rat(dq, 4), v, dir, side).unwrap();
        let ray = TrajectoryBuilder::at_origin().forever(&side.scalar()).build().unwrap();
        let target = linepursuit::scenario::target_motion(&s);
        prop_assert_eq!(earliest_meeting(&ray, &target, &zero()), Some(offline_optimal_time(&s).unwrap()));
    }
}

fn alg_for(i: usize) -> (AlgorithmId, Direction) {
    use AlgorithmId::*;
    [
        (FkAway, Direction::Away),
        (FkToward, Direction::Toward),
        (WaitAtOrigin, Direction::Toward),
        (NdAwayZigzag, Direction::Away),
        (NdAwayOpposite, Direction::Away),
        (NdTowardZigzag, Direction::Toward),
        (NdTowardOpposite, Direction::Toward),
        (NsAway, Direction::Away),
        (NsToward, Direction::Toward),
        (NkAway, Direction::Away),
    ][i]
}

fn run_case(
    i: usize,
    dq: i64,
    vq: i64,
    side: Side,
    first: Side,
) -> Option<(StrategySpec, Scenario)> {
    let (alg, dir) = alg_for(i);
    let v = match alg {
        AlgorithmId::NdTowardZigzag | AlgorithmId::NdTowardOpposite => rat(vq % 10, 32),
        AlgorithmId::WaitAtOrigin => rat(vq + 1, 8),
        _ if dir == Direction::Away => rat(vq % 14, 16),
        _ => rat(vq, 8),
    };
    if alg == AlgorithmId::FkToward && v > int(1) {
        return None;
    }
    let s = Scenario::new(rat(dq, 2), v, dir, side).ok()?;
    Some((StrategySpec::new(alg).first_direction(first), s))
}

fn sides() -> impl Strategy<Value = (Side, Side)> {
    (any::<bool>(), any::<bool>()).prop_map(|(a, b)| {
        let s = |x| if x { Side::Pos } else { Side::Neg };
        (s(a), s(b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn capture_is_valid(i in 0usize..10, dq in 2i64..30, vq in 0i64..24, (side, first) in sides()) {
        let Some((spec, s)) = run_case(i, dq, vq, side, first) else { return Ok(()) };
        let r = simulate(&spec, &s).unwrap();
        let target = linepursuit::scenario::target_motion(&s).position_at(&r.capture_time);
        prop_assert_eq!(&r.capture_position, &target);
        prop_assert_eq!(r.traj_r1.position_at(&r.capture_time).unwrap(), target.clone());
        prop_assert_eq!(r.traj_r2.position_at(&r.capture_time).unwrap(), target);
        prop_assert!(r.traj_r1.starts_at_origin() && r.traj_r2.starts_at_origin());
        prop_assert_eq!(&r.found_time + &r.fetch_time + &r.chase_time, r.capture_time.clone());
        prop_assert!(competitive_ratio(&r, &s).unwrap() >= int(1));
    }

    #[test]
    fn mirrored_runs_agree(i in 0usize..10, dq in 2i64..30, vq in 0i64..24, (side, first) in sides()) {
        let Some((spec, s)) = run_case(i, dq, vq, side, first) else { return Ok(()) };
        let flipped = spec.clone().first_direction(first.opposite());
        let a = simulate(&spec, &s).unwrap();
        let b = simulate(&flipped, &s.with_side(side.opposite())).unwrap();
        prop_assert_eq!(&a.capture_time, &b.capture_time);
        prop_assert_eq!(a.capture_position, -b.capture_position);
        prop_assert_eq!(a.traj_r1.reflected(), b.traj_r1);
    }

    #[test]
    fn opposite_ratio_is_scale_invariant(vq in 0i64..12, dq in 2i64..30, k in 2i64..6, pos in any::<bool>()) {
        let v = rat(vq, 16);
        let spec = StrategySpec::new(AlgorithmId::NdAwayOpposite)
            .cruise(default_parameter(AlgorithmId::NdAwayOpposite, &v).unwrap());
        let side = if pos { Side::Pos } else { Side::Neg };
        let s = Scenario::new(rat(dq, 2), v, Direction::Away, side).unwrap();
        let big = s.with_d(s.d() * int(k)).unwrap();
        let (a, b) = (simulate(&spec, &s).unwrap(), simulate(&spec, &big).unwrap());
        prop_assert_eq!(competitive_ratio(&a, &s).unwrap(), competitive_ratio(&b, &big).unwrap());
    }

    #[test]
    fn mirrored_strategies_are_symmetric_before_contact(i in 3usize..8, dq in 2i64..30, vq in 0i64..24, (side, first) in sides()) {
        let (alg, _) = alg_for(i);
        if alg == AlgorithmId::NsToward { return Ok(()) }
        let Some((spec, s)) = run_case(i, dq, vq, side, first) else { return Ok(()) };
        let r = simulate(&spec, &s).unwrap();
        let (a, b) = (r.traj_r1.truncated(&r.found_time).unwrap(), r.traj_r2.truncated(&r.found_time).unwrap());
        prop_assert_eq!(a.reflected(), b);
    }
}
