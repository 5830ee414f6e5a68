//! Event-driven execution: search, fetch, chase.

use super::guess::GuessEntry;
use super::plan::{append_round, Plan};
use super::StrategySpec;
use crate::error::{Error, Result};
use crate::kinematics::scalar::{fmt_pq, int, signum, Scalar};
use crate::kinematics::{earliest_co_location, earliest_meeting, Trajectory, TrajectoryBuilder};
use crate::scenario::{
    offline_optimal_time, target_motion, visible_knowledge, Knowledge, Scenario,
};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Robot {
    R1,
    R2,
}

impl Robot {
    pub fn index(self) -> usize {
        match self {
            Robot::R1 => 0,
            Robot::R2 => 1,
        }
    }

    pub fn from_index(i: usize) -> Self {
        if i == 0 {
            Robot::R1
        } else {
            Robot::R2
        }
    }
}

impl fmt::Display for Robot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Robot::R1 => "R1",
            Robot::R2 => "R2",
        })
    }
}

/// Outcome of one run. Times are absolute except the phase durations
/// `fetch_time` and `chase_time`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaptureResult {
    pub found_time: Scalar,
    pub found_by: Robot,
    pub fetch_time: Scalar,
    pub chase_time: Scalar,
    pub capture_time: Scalar,
    pub capture_position: Scalar,
    pub rendezvous_time: Scalar,
    pub turns_r1: usize,
    pub turns_r2: usize,
    /// Round during which the target was first met.
    pub iteration: usize,
    pub guess: Option<GuessEntry>,
    pub traj_r1: Trajectory,
    pub traj_r2: Trajectory,
}

impl CaptureResult {
    pub fn total_turns(&self) -> usize {
        self.turns_r1 + self.turns_r2
    }

    pub fn trajectory(&self, r: Robot) -> &Trajectory {
        match r {
            Robot::R1 => &self.traj_r1,
            Robot::R2 => &self.traj_r2,
        }
    }
}

pub fn competitive_ratio(r: &CaptureResult, s: &Scenario) -> Result<Scalar> {
    Ok(&r.capture_time / offline_optimal_time(s)?)
}

struct Search {
    plan: Plan,
    sides: [crate::scenario::Side; 2],
    robots: [TrajectoryBuilder; 2],
    rounds: usize,
    last_guess: Option<GuessEntry>,
}

impl Search {
    fn stuck(&self, reason: impl Into<String>) -> Error {
        Error::NonTermination {
            rounds: self.rounds,
            reason: reason.into(),
            last_guess: self.last_guess.clone().map(Box::new),
        }
    }

    /// Appends the next round to the given robots. `false` if the plan ended.
    fn advance(&mut self, which: &[usize]) -> Result<bool> {
        let Some(round) = self.plan.next_round()? else {
            return Ok(false);
        };
        for &i in which {
            append_round(&mut self.robots[i], &round, self.sides[i]);
        }
        if round.guess.is_some() {
            self.last_guess = round.guess;
        }
        self.rounds += 1;
        Ok(true)
    }
}

/// Unit velocity from `x` toward `toward`.
fn unit_ray(x: &Scalar, toward: &Scalar) -> Scalar {
    int(i64::from(signum(&(toward - x))))
}

/// Runs `spec` against the hidden `scenario`.
///
/// The plan is built from the visible knowledge only. The finder of the
/// target turns around at unit speed to fetch its partner, who keeps
/// following the plan (guessing strategies hold their last speed instead
/// of escalating); then both chase the target at unit speed.
pub fn simulate(spec: &StrategySpec, scenario: &Scenario) -> Result<CaptureResult> {
    if let Some(dir) = spec.alg.direction() {
        if dir != scenario.direction() {
            return Err(Error::Configuration(format!(
                "{} is designed for {dir} targets, scenario is {}",
                spec.alg,
                scenario.direction()
            )));
        }
    }
    let model = spec.alg.model();
    if spec.alg != super::AlgorithmId::WaitAtOrigin {
        scenario.validate_for(model)?;
    }
    simulate_with_knowledge(spec, &visible_knowledge(model, scenario), scenario)
}

/// Like [`simulate`], but the plan is built from `knowledge` as given,
/// whether or not it is true of `scenario`.
pub fn simulate_with_knowledge(
    spec: &StrategySpec,
    knowledge: &Knowledge,
    scenario: &Scenario,
) -> Result<CaptureResult> {
    if spec.max_iterations == 0 {
        return Err(Error::Configuration(
            "max_iterations must be positive".into(),
        ));
    }
    let plan = Plan::new(spec, knowledge)?;
    let target = target_motion(scenario);
    let mut search = Search {
        sides: plan.sides(),
        plan,
        robots: [
            TrajectoryBuilder::at_origin(),
            TrajectoryBuilder::at_origin(),
        ],
        rounds: 0,
        last_guess: None,
    };

    // Search: earliest contact of either robot.
    let (t1, finder, iteration, guess) = loop {
        if search.rounds >= spec.max_iterations {
            return Err(search.stuck("round budget exhausted before contact"));
        }
        let round_start = search.robots[0].time().clone();
        let iteration = search.rounds;
        if !search.advance(&[0, 1])? {
            return Err(search.stuck("plan ended without contact"));
        }
        let hits = [0, 1].map(|i| -> Result<Option<Scalar>> {
            Ok(earliest_meeting(
                &search.robots[i].build()?,
                &target,
                &round_start,
            ))
        });
        let [h1, h2] = hits;
        let best = match (h1?, h2?) {
            (Some(a), Some(b)) if b < a => Some((b, 1)),
            (Some(a), _) => Some((a, 0)),
            (None, Some(b)) => Some((b, 1)),
            (None, None) => None,
        };
        if let Some((t, i)) = best {
            break (t, i, iteration, search.last_guess.clone());
        }
    };
    let other = 1 - finder;
    let target_at_t1 = target.position_at(&t1);
    let plan_finder = search.robots[finder].build()?;
    let mut plan_other = search.robots[other].build()?;
    let coast = search.plan.coasts_after_contact();
    if coast && !search.robots[other].is_open() {
        let last = plan_other.segments().last().expect("non-empty plan");
        let vel = last.velocity().clone();
        search.robots[other].forever(&vel);
        plan_other = search.robots[other].build()?;
    }

    // Fetch: the finder heads for its partner.
    let finder_at_t1 = TrajectoryBuilder::extend(&plan_finder.truncated(&t1)?)?;
    let (tm, fetch_dir) = if plan_other.position_at(&t1)? == target_at_t1 {
        (t1.clone(), int(0))
    } else {
        let dir = unit_ray(&target_at_t1, &plan_other.position_at(&t1)?);
        let ray = finder_at_t1.clone().forever(&dir).build()?;
        let budget = search.rounds + spec.max_iterations;
        let tm = loop {
            if let Some(tm) = earliest_co_location(&ray, &plan_other, &t1) {
                break tm;
            }
            if coast {
                return Err(search.stuck("partner can never be reached"));
            }
            if search.rounds >= budget {
                return Err(search.stuck("partner not reached within the round budget"));
            }
            if !search.advance(&[other])? {
                return Err(search.stuck("partner can never be reached"));
            }
            plan_other = search.robots[other].build()?;
        };
        (tm, dir)
    };

    // Chase: both at unit speed toward the target.
    let mut finder_b = finder_at_t1;
    finder_b.move_for(&(&tm - &t1), &fetch_dir);
    let pm = finder_b.position().clone();
    let q = target.position_at(&tm);
    let (tc, chase_dir) = if q == pm {
        (tm.clone(), int(0))
    } else {
        let dir = unit_ray(&pm, &q);
        let ray = TrajectoryBuilder::new(tm.clone(), pm.clone())
            .forever(&dir)
            .build()?;
        match earliest_meeting(&ray, &target, &tm) {
            Some(tc) => (tc, dir),
            None => {
                return Err(search.stuck(format!(
                    "target escapes the chase from {} at time {}",
                    fmt_pq(&pm),
                    fmt_pq(&tm)
                )))
            }
        }
    };
    finder_b.move_for(&(&tc - &tm), &chase_dir);
    let mut other_b = TrajectoryBuilder::extend(&plan_other.truncated(&tm)?)?;
    other_b.move_for(&(&tc - &tm), &chase_dir);

    let mut trajs = [None, None];
    trajs[finder] = Some(finder_b.build()?);
    trajs[other] = Some(other_b.build()?);
    let [Some(traj_r1), Some(traj_r2)] = trajs else {
        unreachable!("both robots assigned")
    };
    Ok(CaptureResult {
        fetch_time: &tm - &t1,
        chase_time: &tc - &tm,
        capture_position: target.position_at(&tc),
        found_time: t1,
        found_by: Robot::from_index(finder),
        rendezvous_time: tm,
        capture_time: tc,
        turns_r1: traj_r1.turn_count(),
        turns_r2: traj_r2.turn_count(),
        iteration,
        guess,
        traj_r1,
        traj_r2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::scalar::{one, rat, zero};
    use crate::scenario::{Direction, Side};
    use crate::strategy::AlgorithmId;

    fn scen(d: Scalar, v: Scalar, dir: Direction, side: Side) -> Scenario {
        Scenario::new(d, v, dir, side).unwrap()
    }

    #[test]
    fn fk_away_right_side_is_optimal() {
        let s = scen(int(1), rat(1, 2), Direction::Away, Side::Pos);
        let r = simulate(&StrategySpec::new(AlgorithmId::FkAway), &s).unwrap();
        assert_eq!(r.capture_time, int(2));
        assert_eq!(
            (r.fetch_time.clone(), r.chase_time.clone()),
            (zero(), zero())
        );
        assert_eq!(r.total_turns(), 0);
        assert_eq!(competitive_ratio(&r, &s).unwrap(), one());
    }

    #[test]
    fn fk_away_wrong_side() {
        // out to 2 and back, target at -1 - t/2: meet at 2 + 2 + x... CR (3-v)/(1-v)
        let s = scen(int(1), rat(1, 2), Direction::Away, Side::Neg);
        let r = simulate(&StrategySpec::new(AlgorithmId::FkAway), &s).unwrap();
        assert_eq!(competitive_ratio(&r, &s).unwrap(), int(5));
        assert_eq!((r.turns_r1, r.turns_r2), (1, 1));
        assert_eq!(r.found_by, Robot::R1);
    }

    #[test]
    fn opposite_cruise_fetch_and_chase() {
        let s = scen(int(1), rat(1, 3), Direction::Away, Side::Pos);
        let spec = StrategySpec::new(AlgorithmId::NdAwayOpposite).cruise(rat(3, 5));
        let r = simulate(&spec, &s).unwrap();
        assert_eq!(r.found_time, rat(15, 4));
        assert_eq!(r.fetch_time, rat(45, 4));
        assert_eq!(r.chase_time, rat(45, 2));
        assert_eq!(r.capture_time, rat(75, 2));
        assert_eq!(competitive_ratio(&r, &s).unwrap(), int(25));
        assert_eq!(r.total_turns(), 3);
    }

    #[test]
    fn waiting_catches_incoming_target() {
        let s = scen(int(2), int(4), Direction::Toward, Side::Neg);
        let r = simulate(&StrategySpec::new(AlgorithmId::WaitAtOrigin), &s).unwrap();
        assert_eq!(r.capture_time, rat(1, 2));
        assert_eq!(r.capture_position, zero());
        assert_eq!(r.total_turns(), 0);
    }

    #[test]
    fn waiting_never_sees_receding_target() {
        let s = scen(int(1), rat(1, 2), Direction::Away, Side::Pos);
        let err = simulate(&StrategySpec::new(AlgorithmId::WaitAtOrigin), &s).unwrap_err();
        assert!(matches!(err, Error::NonTermination { .. }));
    }

    #[test]
    fn too_slow_cruise_is_rejected() {
        let s = scen(int(1), rat(1, 2), Direction::Away, Side::Pos);
        let spec = StrategySpec::new(AlgorithmId::NdAwayOpposite).cruise(rat(1, 2));
        assert!(matches!(simulate(&spec, &s), Err(Error::Configuration(_))));
    }

    #[test]
    fn direction_mismatch_is_rejected() {
        let s = scen(int(1), rat(1, 2), Direction::Toward, Side::Pos);
        assert!(simulate(&StrategySpec::new(AlgorithmId::FkAway), &s).is_err());
    }

    #[test]
    fn zigzag_round_budget() {
        let s = scen(int(1000), zero(), Direction::Away, Side::Pos);
        let spec = StrategySpec::new(AlgorithmId::NdAwayZigzag).max_iterations(3);
        assert!(matches!(
            simulate(&spec, &s),
            Err(Error::NonTermination { rounds: 3, .. })
        ));
    }

    #[test]
    fn ns_away_three_turns() {
        let s = scen(int(1), zero(), Direction::Away, Side::Pos);
        let r = simulate(&StrategySpec::new(AlgorithmId::NsAway), &s).unwrap();
        assert_eq!(r.total_turns(), 3);
        assert_eq!(r.iteration, 0);
        assert_eq!(r.found_time, rat(4, 3));
    }
}
