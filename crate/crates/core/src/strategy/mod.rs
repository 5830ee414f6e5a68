//! The ten search strategies, their parameters, and the event-driven
//! executor.
//!
//! Strategies are planned from [`Knowledge`] alone; the executor in
//! [`simulate`] is the only code that sees the hidden side, distance or
//! speed, and it uses them only to time found/rendezvous/capture events.

mod engine;
mod guess;
mod plan;

pub use engine::{competitive_ratio, simulate, simulate_with_knowledge, CaptureResult, Robot};
pub use guess::{guess_schedule, next_leg_length, GuessEntry, MAX_GUESS_ROUND};
pub use plan::{planned_trajectories, Formation, Leg, Plan, Round};

use crate::error::{Error, Result};
use crate::kinematics::scalar::{fmt_pq, int, one, rat, zero, Scalar};
use crate::scenario::{Direction, Knowledge, KnowledgeModel, Side};
use num_traits::Signed;
use std::fmt;
use std::str::FromStr;

/// Default round budget for zigzag and guessing strategies.
pub const DEFAULT_MAX_ITERATIONS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmId {
    /// Both robots go to `d/(1-v)` together, then reverse.
    FkAway,
    /// Both robots go to `d/(1+v)` together, then reverse.
    FkToward,
    /// Both robots wait at the origin.
    WaitAtOrigin,
    /// Each robot zigzags on its own half-line with legs `a^k`.
    NdAwayZigzag,
    /// Robots cruise apart at speed `u`, then fetch.
    NdAwayOpposite,
    NdTowardZigzag,
    NdTowardOpposite,
    /// Robots move apart at increasing guessed speeds `u_i`.
    NsAway,
    /// Both robots go to `d` together, then reverse.
    NsToward,
    /// Like [`AlgorithmId::NsAway`] with guessed distances too.
    NkAway,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 10] = [
        AlgorithmId::FkAway,
        AlgorithmId::FkToward,
        AlgorithmId::WaitAtOrigin,
        AlgorithmId::NdAwayZigzag,
        AlgorithmId::NdAwayOpposite,
        AlgorithmId::NdTowardZigzag,
        AlgorithmId::NdTowardOpposite,
        AlgorithmId::NsAway,
        AlgorithmId::NsToward,
        AlgorithmId::NkAway,
    ];

    /// The knowledge the strategy is allowed to read.
    pub fn model(self) -> KnowledgeModel {
        use AlgorithmId::*;
        match self {
            FkAway | FkToward => KnowledgeModel::FullKnowledge,
            NdAwayZigzag | NdAwayOpposite | NdTowardZigzag | NdTowardOpposite => {
                KnowledgeModel::NoDistance
            }
            NsAway | NsToward => KnowledgeModel::NoSpeed,
            WaitAtOrigin | NkAway => KnowledgeModel::NoKnowledge,
        }
    }

    /// Target heading the strategy is designed for; `None` for waiting.
    pub fn direction(self) -> Option<Direction> {
        use AlgorithmId::*;
        match self {
            FkAway | NdAwayZigzag | NdAwayOpposite | NsAway | NkAway => Some(Direction::Away),
            FkToward | NdTowardZigzag | NdTowardOpposite | NsToward => Some(Direction::Toward),
            WaitAtOrigin => None,
        }
    }

    pub fn is_zigzag(self) -> bool {
        matches!(
            self,
            AlgorithmId::NdAwayZigzag | AlgorithmId::NdTowardZigzag
        )
    }

    pub fn is_cruise(self) -> bool {
        matches!(
            self,
            AlgorithmId::NdAwayOpposite | AlgorithmId::NdTowardOpposite
        )
    }

    pub fn name(self) -> &'static str {
        use AlgorithmId::*;
        match self {
            FkAway => "fk-away",
            FkToward => "fk-toward",
            WaitAtOrigin => "wait",
            NdAwayZigzag => "nd-away-zigzag",
            NdAwayOpposite => "nd-away-opposite",
            NdTowardZigzag => "nd-toward-zigzag",
            NdTowardOpposite => "nd-toward-opposite",
            NsAway => "ns-away",
            NsToward => "ns-toward",
            NkAway => "nk-away",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown algorithm {s:?}")))
    }
}

/// An algorithm plus its tunable parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategySpec {
    pub alg: AlgorithmId,
    /// Side R1 explores first (for paired strategies, the pair's heading).
    pub first_direction: Side,
    /// Zigzag expansion ratio; defaults to the optimum for the known speed.
    pub ratio_a: Option<Scalar>,
    /// Cruise speed of the opposite-direction strategies.
    pub cruise_u: Option<Scalar>,
    /// Rounds allowed before giving up.
    pub max_iterations: usize,
}

impl StrategySpec {
    pub fn new(alg: AlgorithmId) -> Self {
        Self {
            alg,
            first_direction: Side::Pos,
            ratio_a: None,
            cruise_u: None,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }

    pub fn first_direction(mut self, side: Side) -> Self {
        self.first_direction = side;
        self
    }

    pub fn ratio(mut self, a: Scalar) -> Self {
        self.ratio_a = Some(a);
        self
    }

    pub fn cruise(mut self, u: Scalar) -> Self {
        self.cruise_u = Some(u);
        self
    }

    pub fn max_iterations(mut self, n: usize) -> Self {
        self.max_iterations = n;
        self
    }
}

/// Picks the strategy for a knowledge model and target heading.
///
/// Toward targets under no-distance knowledge cruise apart only while
/// `v < 1/3`; faster targets are awaited at the origin.
pub fn select_algorithm(
    model: KnowledgeModel,
    dir: Direction,
    k: &Knowledge,
) -> Result<StrategySpec> {
    if k.direction != dir {
        return Err(Error::Configuration(format!(
            "knowledge says {} but {} was requested",
            k.direction, dir
        )));
    }
    if k.d.is_some() != model.knows_distance() || k.v.is_some() != model.knows_speed() {
        return Err(Error::Configuration(format!(
            "knowledge does not match model {model}"
        )));
    }
    use AlgorithmId::*;
    use Direction::*;
    use KnowledgeModel::*;
    let spec = match (model, dir) {
        (FullKnowledge, Away) => {
            k.require_d()?;
            StrategySpec::new(FkAway)
        }
        (FullKnowledge, Toward) => {
            k.require_d()?;
            if *k.require_v()? < one() {
                StrategySpec::new(FkToward)
            } else {
                StrategySpec::new(WaitAtOrigin)
            }
        }
        (NoDistance, Away) => {
            let v = k.require_v()?;
            StrategySpec::new(NdAwayOpposite).cruise(default_parameter(NdAwayOpposite, v)?)
        }
        (NoDistance, Toward) => {
            let v = k.require_v()?;
            if *v < rat(1, 3) {
                StrategySpec::new(NdTowardOpposite).cruise(default_parameter(NdTowardOpposite, v)?)
            } else {
                StrategySpec::new(WaitAtOrigin)
            }
        }
        (NoSpeed, Away) => {
            k.require_d()?;
            StrategySpec::new(NsAway)
        }
        (NoSpeed, Toward) => {
            k.require_d()?;
            StrategySpec::new(NsToward)
        }
        (NoKnowledge, Away) => StrategySpec::new(NkAway),
        (NoKnowledge, Toward) => StrategySpec::new(WaitAtOrigin),
    };
    Ok(spec)
}

/// Closed-form optimal zigzag ratio `a` or cruise speed `u` for speed `v`.
pub fn default_parameter(alg: AlgorithmId, v: &Scalar) -> Result<Scalar> {
    use AlgorithmId::*;
    let one = one();
    let out_of_range = |limit: &str| {
        Error::Domain(format!(
            "{alg} has no optimal parameter at v = {} (needs {limit})",
            fmt_pq(v)
        ))
    };
    if v.is_negative() {
        return Err(out_of_range("v >= 0"));
    }
    match alg {
        NdAwayZigzag => {
            if *v >= one {
                return Err(out_of_range("v < 1"));
            }
            Ok(int(2) * (&one + v) / (&one - v))
        }
        NdAwayOpposite => {
            if *v >= one {
                return Err(out_of_range("v < 1"));
            }
            Ok((int(3) * v + &one) / (int(3) + v))
        }
        NdTowardZigzag => {
            if *v >= rat(1, 3) {
                return Err(out_of_range("v < 1/3"));
            }
            Ok(int(2) * (&one - v) / (&one + v))
        }
        NdTowardOpposite => {
            if *v >= rat(1, 3) {
                return Err(out_of_range("v < 1/3"));
            }
            Ok((&one - int(3) * v) / (int(3) - v))
        }
        _ => Err(Error::Unsupported(format!(
            "{alg} has no tunable parameter"
        ))),
    }
}

/// Cruise speed or ratio, checked against the strategy's admissible range.
pub(crate) fn resolve_parameter(spec: &StrategySpec, k: &Knowledge) -> Result<Option<Scalar>> {
    use AlgorithmId::*;
    let alg = spec.alg;
    match alg {
        NdAwayZigzag | NdTowardZigzag => {
            let a = match &spec.ratio_a {
                Some(a) => a.clone(),
                None => default_parameter(alg, k.require_v()?)?,
            };
            if a <= one() {
                return Err(Error::Configuration(format!(
                    "{alg} needs ratio a > 1, got {}",
                    fmt_pq(&a)
                )));
            }
            Ok(Some(a))
        }
        NdAwayOpposite | NdTowardOpposite => {
            let v = k.require_v()?;
            let u = match &spec.cruise_u {
                Some(u) => u.clone(),
                None => default_parameter(alg, v)?,
            };
            let lower = if alg == NdAwayOpposite {
                v.clone()
            } else {
                zero()
            };
            if u <= lower || u >= one() {
                return Err(Error::Configuration(format!(
                    "{alg} needs {} < u < 1, got u = {}",
                    fmt_pq(&lower),
                    fmt_pq(&u)
                )));
            }
            Ok(Some(u))
        }
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knowledge(model: KnowledgeModel, dir: Direction, d: Scalar, v: Scalar) -> Knowledge {
        Knowledge {
            direction: dir,
            d: model.knows_distance().then_some(d),
            v: model.knows_speed().then_some(v),
        }
    }

    #[test]
    fn dispatch_table() {
        use AlgorithmId::*;
        use Direction::*;
        use KnowledgeModel::*;
        let cases = [
            (FullKnowledge, Away, rat(1, 2), FkAway),
            (FullKnowledge, Toward, rat(1, 2), FkToward),
            (FullKnowledge, Toward, int(1), WaitAtOrigin),
            (NoDistance, Away, rat(1, 3), NdAwayOpposite),
            (NoDistance, Toward, rat(1, 5), NdTowardOpposite),
            (NoDistance, Toward, rat(1, 3), WaitAtOrigin),
            (NoDistance, Toward, int(2), WaitAtOrigin),
            (NoSpeed, Away, rat(1, 2), NsAway),
            (NoSpeed, Toward, int(3), NsToward),
            (NoKnowledge, Away, zero(), NkAway),
            (NoKnowledge, Toward, int(2), WaitAtOrigin),
        ];
        for (model, dir, v, expected) in cases {
            let k = knowledge(model, dir, int(1), v);
            assert_eq!(
                select_algorithm(model, dir, &k).unwrap().alg,
                expected,
                "{model} {dir}"
            );
        }
    }

    #[test]
    fn toward_cruise_speed_is_selected() {
        let k = knowledge(
            KnowledgeModel::NoDistance,
            Direction::Toward,
            int(1),
            rat(1, 5),
        );
        let spec = select_algorithm(KnowledgeModel::NoDistance, Direction::Toward, &k).unwrap();
        assert_eq!(spec.cruise_u, Some(rat(1, 7)));
    }

    #[test]
    fn missing_knowledge_is_a_configuration_error() {
        let k = Knowledge {
            direction: Direction::Away,
            d: None,
            v: None,
        };
        assert!(matches!(
            select_algorithm(KnowledgeModel::FullKnowledge, Direction::Away, &k),
            Err(Error::Configuration(_))
        ));
        assert!(select_algorithm(KnowledgeModel::NoKnowledge, Direction::Toward, &k).is_err());
    }

    #[test]
    fn optimal_parameters() {
        use AlgorithmId::*;
        assert_eq!(default_parameter(NdAwayZigzag, &zero()).unwrap(), int(2));
        assert_eq!(
            default_parameter(NdAwayOpposite, &rat(1, 3)).unwrap(),
            rat(3, 5)
        );
        assert_eq!(
            default_parameter(NdTowardOpposite, &rat(1, 5)).unwrap(),
            rat(1, 7)
        );
        assert_eq!(
            default_parameter(NdTowardZigzag, &rat(1, 5)).unwrap(),
            rat(4, 3)
        );
        assert!(default_parameter(NdTowardOpposite, &rat(1, 3)).is_err());
        assert!(default_parameter(NdTowardZigzag, &rat(1, 2)).is_err());
        assert!(default_parameter(NdAwayZigzag, &int(1)).is_err());
        assert!(matches!(
            default_parameter(FkAway, &zero()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn names_round_trip() {
        for alg in AlgorithmId::ALL {
            assert_eq!(alg.name().parse::<AlgorithmId>().unwrap(), alg);
        }
        assert_eq!(
            "ND_AWAY_OPPOSITE".parse::<AlgorithmId>().unwrap(),
            AlgorithmId::NdAwayOpposite
        );
    }

    #[test]
    fn parameter_ranges() {
        let k = knowledge(
            KnowledgeModel::NoDistance,
            Direction::Away,
            int(1),
            rat(1, 2),
        );
        let bad = StrategySpec::new(AlgorithmId::NdAwayOpposite).cruise(rat(1, 2));
        assert!(matches!(
            resolve_parameter(&bad, &k),
            Err(Error::Configuration(_))
        ));
        let bad = StrategySpec::new(AlgorithmId::NdAwayZigzag).ratio(int(1));
        assert!(resolve_parameter(&bad, &k).is_err());
        let ok = StrategySpec::new(AlgorithmId::NdAwayOpposite);
        assert_eq!(resolve_parameter(&ok, &k).unwrap(), Some(rat(5, 7)));
    }
}
