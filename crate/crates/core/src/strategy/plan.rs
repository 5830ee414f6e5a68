//! Knowledge-only motion plans, generated one round at a time.
//!
//! Guessing schedules grow doubly exponentially, so plans are never
//! materialised in full; the executor pulls rounds until something happens.

use super::guess::{guess_schedule, next_leg_length, GuessEntry};
use super::{resolve_parameter, AlgorithmId, StrategySpec};
use crate::error::{Error, Result};
use crate::kinematics::scalar::{int, one, powi, zero, Scalar};
use crate::kinematics::{Trajectory, TrajectoryBuilder};
use crate::scenario::{Knowledge, Side};

/// One straight piece of a round. `velocity` is signed relative to the
/// robot's own outward side; `duration == None` means forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    pub duration: Option<Scalar>,
    pub velocity: Scalar,
}

impl Leg {
    fn timed(duration: Scalar, velocity: Scalar) -> Self {
        Self {
            duration: Some(duration),
            velocity,
        }
    }

    fn forever(velocity: Scalar) -> Self {
        Self {
            duration: None,
            velocity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub index: usize,
    pub legs: Vec<Leg>,
    pub guess: Option<GuessEntry>,
}

/// Whether R2 shares R1's outward side or explores the opposite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formation {
    Together,
    Mirrored,
}

#[derive(Clone, Debug)]
enum Kind {
    TurnBack {
        turn_point: Scalar,
    },
    Wait,
    Zigzag {
        a: Scalar,
    },
    Cruise {
        u: Scalar,
    },
    Guess {
        model: crate::scenario::KnowledgeModel,
        d: Option<Scalar>,
    },
}

/// Round generator for one strategy. Built from [`Knowledge`] only.
#[derive(Clone, Debug)]
pub struct Plan {
    kind: Kind,
    formation: Formation,
    first: Side,
    next: usize,
    travelled: Scalar,
    done: bool,
}

impl Plan {
    pub fn new(spec: &StrategySpec, k: &Knowledge) -> Result<Self> {
        use AlgorithmId::*;
        let one = one();
        let kind = match spec.alg {
            FkAway => {
                let closing = &one - k.require_v()?;
                if closing <= zero() {
                    return Err(Error::Configuration(
                        "fk-away needs v < 1 to reach its turn point".into(),
                    ));
                }
                Kind::TurnBack {
                    turn_point: k.require_d()? / closing,
                }
            }
            FkToward => Kind::TurnBack {
                turn_point: k.require_d()? / (&one + k.require_v()?),
            },
            NsToward => Kind::TurnBack {
                turn_point: k.require_d()?.clone(),
            },
            WaitAtOrigin => Kind::Wait,
            NdAwayZigzag | NdTowardZigzag => Kind::Zigzag {
                a: resolve_parameter(spec, k)?.expect("zigzag ratio"),
            },
            NdAwayOpposite | NdTowardOpposite => Kind::Cruise {
                u: resolve_parameter(spec, k)?.expect("cruise speed"),
            },
            NsAway => Kind::Guess {
                model: crate::scenario::KnowledgeModel::NoSpeed,
                d: Some(k.require_d()?.clone()),
            },
            NkAway => Kind::Guess {
                model: crate::scenario::KnowledgeModel::NoKnowledge,
                d: None,
            },
        };
        let formation = match spec.alg {
            FkAway | FkToward | NsToward | WaitAtOrigin => Formation::Together,
            _ => Formation::Mirrored,
        };
        Ok(Self {
            kind,
            formation,
            first: spec.first_direction,
            next: 0,
            travelled: zero(),
            done: false,
        })
    }

    /// Guessing strategies stop escalating once the target is found: the
    /// partner keeps its current speed and heading.
    pub fn coasts_after_contact(&self) -> bool {
        matches!(self.kind, Kind::Guess { .. })
    }

    pub fn formation(&self) -> Formation {
        self.formation
    }

    /// Outward side of each robot.
    pub fn sides(&self) -> [Side; 2] {
        match self.formation {
            Formation::Together => [self.first, self.first],
            Formation::Mirrored => [self.first, self.first.opposite()],
        }
    }

    /// `None` once the plan has ended in an unbounded ray.
    pub fn next_round(&mut self) -> Result<Option<Round>> {
        if self.done {
            return Ok(None);
        }
        let index = self.next;
        self.next += 1;
        let mut guess = None;
        let legs = match &self.kind {
            Kind::TurnBack { turn_point } => {
                self.done = true;
                vec![Leg::timed(turn_point.clone(), one()), Leg::forever(int(-1))]
            }
            Kind::Wait => {
                self.done = true;
                vec![Leg::forever(zero())]
            }
            Kind::Cruise { u } => {
                self.done = true;
                vec![Leg::forever(u.clone())]
            }
            Kind::Zigzag { a } => {
                let reach = powi(a, index as u32);
                vec![Leg::timed(reach.clone(), one()), Leg::timed(reach, int(-1))]
            }
            Kind::Guess { model, d } => {
                let entry = guess_schedule(*model, index)?;
                let base = d.as_ref().or(entry.d.as_ref()).expect("distance or guess");
                let x = next_leg_length(&entry, base, &self.travelled);
                self.travelled += &x;
                let leg = Leg::timed(&x / &entry.u, entry.u.clone());
                guess = Some(entry);
                vec![leg]
            }
        };
        Ok(Some(Round { index, legs, guess }))
    }
}

/// Appends a round's legs to a robot heading out on `side`.
pub(crate) fn append_round(b: &mut TrajectoryBuilder, round: &Round, side: Side) {
    let sign = side.scalar();
    for leg in &round.legs {
        let vel = &leg.velocity * &sign;
        match &leg.duration {
            Some(dt) => b.move_for(dt, &vel),
            None => b.forever(&vel),
        };
    }
}

/// The first `rounds` rounds of both robots' plans, as trajectories.
pub fn planned_trajectories(
    spec: &StrategySpec,
    k: &Knowledge,
    rounds: usize,
) -> Result<[Trajectory; 2]> {
    let mut plan = Plan::new(spec, k)?;
    let sides = plan.sides();
    let mut robots = [
        TrajectoryBuilder::at_origin(),
        TrajectoryBuilder::at_origin(),
    ];
    for _ in 0..rounds {
        let Some(round) = plan.next_round()? else {
            break;
        };
        for (b, side) in robots.iter_mut().zip(sides) {
            append_round(b, &round, side);
        }
    }
    Ok([robots[0].build()?, robots[1].build()?])
}
