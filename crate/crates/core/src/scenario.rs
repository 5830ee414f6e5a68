//! Problem instances, knowledge filtering, and the offline optimum.

use crate::error::{Error, Result};
use crate::kinematics::scalar::{fmt_pq, int, one, parse_scalar, zero, Scalar};
use crate::kinematics::UniformMotion;
use num_traits::Signed;
use std::fmt;
use std::str::FromStr;

/// Whether the target moves away from or toward the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Away,
    Toward,
}

impl Direction {
    pub const ALL: [Direction; 2] = [Direction::Away, Direction::Toward];

    pub fn name(self) -> &'static str {
        match self {
            Direction::Away => "away",
            Direction::Toward => "toward",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "away" => Ok(Direction::Away),
            "toward" | "towards" => Ok(Direction::Toward),
            other => Err(Error::Parse(format!("unknown direction {other:?}"))),
        }
    }
}

/// A half-line of the real line: `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Neg,
    Pos,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Pos, Side::Neg];

    pub fn sign(self) -> i64 {
        match self {
            Side::Pos => 1,
            Side::Neg => -1,
        }
    }

    pub fn scalar(self) -> Scalar {
        int(self.sign())
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Pos => Side::Neg,
            Side::Neg => Side::Pos,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Pos => "+1",
            Side::Neg => "-1",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" | "pos" => Ok(Side::Pos),
            "-1" | "-" | "neg" => Ok(Side::Neg),
            other => Err(Error::Parse(format!(
                "side must be +1 or -1, got {other:?}"
            ))),
        }
    }
}

/// What the robots are told about the target before they start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnowledgeModel {
    FullKnowledge,
    NoDistance,
    NoSpeed,
    NoKnowledge,
}

impl KnowledgeModel {
    pub const ALL: [KnowledgeModel; 4] = [
        KnowledgeModel::FullKnowledge,
        KnowledgeModel::NoDistance,
        KnowledgeModel::NoSpeed,
        KnowledgeModel::NoKnowledge,
    ];

    pub fn knows_distance(self) -> bool {
        matches!(
            self,
            KnowledgeModel::FullKnowledge | KnowledgeModel::NoSpeed
        )
    }

    pub fn knows_speed(self) -> bool {
        matches!(
            self,
            KnowledgeModel::FullKnowledge | KnowledgeModel::NoDistance
        )
    }

    /// True if everything `other` reveals is also revealed by `self`.
    pub fn covers(self, other: KnowledgeModel) -> bool {
        (self.knows_distance() || !other.knows_distance())
            && (self.knows_speed() || !other.knows_speed())
    }

    /// Short name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            KnowledgeModel::FullKnowledge => "fk",
            KnowledgeModel::NoDistance => "nd",
            KnowledgeModel::NoSpeed => "ns",
            KnowledgeModel::NoKnowledge => "nk",
        }
    }
}

impl fmt::Display for KnowledgeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KnowledgeModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fk" | "full" | "fullknowledge" => Ok(KnowledgeModel::FullKnowledge),
            "nd" | "nodistance" => Ok(KnowledgeModel::NoDistance),
            "ns" | "nospeed" => Ok(KnowledgeModel::NoSpeed),
            "nk" | "noknowledge" => Ok(KnowledgeModel::NoKnowledge),
            other => Err(Error::Parse(format!("unknown knowledge model {other:?}"))),
        }
    }
}

/// The part of a scenario a strategy may read. The side is never included.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Knowledge {
    pub direction: Direction,
    pub d: Option<Scalar>,
    pub v: Option<Scalar>,
}

impl Knowledge {
    pub fn require_d(&self) -> Result<&Scalar> {
        self.d
            .as_ref()
            .ok_or_else(|| Error::Configuration("strategy needs the initial distance".into()))
    }

    pub fn require_v(&self) -> Result<&Scalar> {
        self.v
            .as_ref()
            .ok_or_else(|| Error::Configuration("strategy needs the target speed".into()))
    }
}

/// Ground truth for one run: start distance, speed, heading and side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scenario {
    d: Scalar,
    v: Scalar,
    direction: Direction,
    side: Side,
}

impl Scenario {
    /// Validates `d > 0`, `v >= 0`, and `v < 1` for away targets.
    pub fn new(d: Scalar, v: Scalar, direction: Direction, side: Side) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::InvalidScenario(format!(
                "distance must be positive, got {}",
                fmt_pq(&d)
            )));
        }
        if v.is_negative() {
            return Err(Error::InvalidScenario(format!(
                "speed must be non-negative, got {}",
                fmt_pq(&v)
            )));
        }
        if direction == Direction::Away && v >= one() {
            return Err(Error::InvalidScenario(format!(
                "an away target needs speed below 1, got {}",
                fmt_pq(&v)
            )));
        }
        Ok(Self {
            d,
            v,
            direction,
            side,
        })
    }

    pub fn d(&self) -> &Scalar {
        &self.d
    }

    pub fn v(&self) -> &Scalar {
        &self.v
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn with_side(&self, side: Side) -> Self {
        Self {
            side,
            ..self.clone()
        }
    }

    pub fn with_d(&self, d: Scalar) -> Result<Self> {
        Self::new(d, self.v.clone(), self.direction, self.side)
    }

    /// Extra requirements of a knowledge model: strategies that do not know
    /// `d` start their schedules at unit distance, so they need `d >= 1`.
    pub fn validate_for(&self, model: KnowledgeModel) -> Result<()> {
        if !model.knows_distance() && self.d < one() {
            return Err(Error::InvalidScenario(format!(
                "model {model} requires d >= 1, got {}",
                fmt_pq(&self.d)
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Scenario {
    /// `d,v,direction,side` with rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            fmt_pq(&self.d),
            fmt_pq(&self.v),
            self.direction,
            self.side
        )
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.trim().split(',').collect();
        let [d, v, direction, side] = fields.as_slice() else {
            return Err(Error::Parse(format!(
                "expected d,v,direction,side but got {} fields",
                fields.len()
            )));
        };
        Scenario::new(
            parse_scalar(d)?,
            parse_scalar(v)?,
            direction.parse()?,
            side.parse()?,
        )
    }
}

/// The target's motion: starts at `side * d`; away targets move outward,
/// toward targets move inward and keep going past the origin.
pub fn target_motion(s: &Scenario) -> UniformMotion {
    let sign = s.side.scalar();
    let velocity = match s.direction {
        Direction::Away => &sign * &s.v,
        Direction::Toward => -(&sign * &s.v),
    };
    UniformMotion::new(zero(), sign * &s.d, velocity)
}

pub fn visible_knowledge(model: KnowledgeModel, s: &Scenario) -> Knowledge {
    Knowledge {
        direction: s.direction,
        d: model.knows_distance().then(|| s.d.clone()),
        v: model.knows_speed().then(|| s.v.clone()),
    }
}

/// Capture time with everything known: both robots head straight for the
/// target, `d/(1-v)` when it recedes and `d/(1+v)` when it approaches.
pub fn offline_optimal_time(s: &Scenario) -> Result<Scalar> {
    match s.direction {
        Direction::Away => {
            let closing = one() - &s.v;
            if !closing.is_positive() {
                return Err(Error::InvalidScenario(
                    "an away target with v >= 1 cannot be caught".into(),
                ));
            }
            Ok(&s.d / closing)
        }
        Direction::Toward => Ok(&s.d / (one() + &s.v)),
    }
}
