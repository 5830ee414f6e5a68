//! Closed-form competitive ratios, bounds and optimal parameters.
//!
//! Exact values stay rational. Bounds that involve logarithms are `f64`
//! and use base-2 logs.

use crate::error::{Error, Result};
use crate::kinematics::scalar::{fmt_pq, int, one, rat, to_f64, zero, Scalar};
use crate::scenario::{Direction, KnowledgeModel};
use crate::strategy::{default_parameter, AlgorithmId};
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    ExactWorstCase,
    UpperBound,
    LowerBound,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Scalar),
    Float(f64),
}

impl BoundValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(x) => to_f64(x),
            BoundValue::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Scalar> {
        match self {
            BoundValue::Exact(x) => Some(x),
            BoundValue::Float(_) => None,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(x) => f.write_str(&fmt_pq(x)),
            BoundValue::Float(x) => write!(f, "{x}"),
        }
    }
}

/// A competitive-ratio value with what it means and where it comes from.
#[derive(Clone, Debug, PartialEq)]
pub struct CrBound {
    pub value: BoundValue,
    pub kind: BoundKind,
    pub source: &'static str,
}

fn domain(what: &str, v: &Scalar, need: &str) -> Error {
    Error::Domain(format!(
        "{what} undefined at v = {} (needs {need})",
        fmt_pq(v)
    ))
}

/// Worst-case competitive ratio of a strategy run with its default
/// parameter at target speed `v`.
pub fn cr_exact(alg: AlgorithmId, v: &Scalar) -> Result<Scalar> {
    use AlgorithmId::*;
    if v.is_negative() {
        return Err(domain(alg.name(), v, "v >= 0"));
    }
    let one = one();
    let three = int(3);
    match alg {
        FkAway => {
            if *v >= one {
                return Err(domain(alg.name(), v, "v < 1"));
            }
            Ok((&three - v) / (&one - v))
        }
        FkToward => {
            if *v > one {
                return Err(domain(alg.name(), v, "v <= 1"));
            }
            Ok((&three + v) / (&one + v))
        }
        WaitAtOrigin => {
            if v.is_zero() {
                return Err(domain(alg.name(), v, "v > 0"));
            }
            Ok((v + &one) / v)
        }
        NdAwayZigzag | NdAwayOpposite => {
            if *v >= one {
                return Err(domain(alg.name(), v, "v < 1"));
            }
            let num = v + &three;
            let den = &one - v;
            Ok(&num * &num / (&den * &den))
        }
        NdTowardZigzag | NdTowardOpposite => {
            if *v > rat(1, 3) {
                return Err(domain(alg.name(), v, "v <= 1/3"));
            }
            let s = &one + v;
            Ok(&one + int(8) * (&one - v) / (&s * &s))
        }
        NsToward => Ok(three),
        NsAway | NkAway => Err(Error::Unsupported(format!(
            "{alg} has only an asymptotic upper bound"
        ))),
    }
}

/// Lower bound on the competitive ratio of any strategy with the given
/// knowledge, where one is known.
pub fn cr_lower(m: KnowledgeModel, dir: Direction, v: &Scalar) -> Result<Scalar> {
    use Direction::*;
    use KnowledgeModel::*;
    let one = one();
    match (m, dir) {
        (FullKnowledge, Away) => cr_exact(AlgorithmId::FkAway, v),
        (FullKnowledge, Toward) => {
            if *v > one {
                cr_exact(AlgorithmId::WaitAtOrigin, v)
            } else {
                cr_exact(AlgorithmId::FkToward, v)
            }
        }
        (NoSpeed, Toward) => Ok(int(3)),
        (NoKnowledge, Toward) => cr_exact(AlgorithmId::WaitAtOrigin, v),
        _ => Err(Error::Unsupported(format!("no lower bound for {m}/{dir}"))),
    }
}

fn check_unit_speed(v: f64) -> Result<()> {
    if !(0.0..1.0).contains(&v) {
        return Err(Error::Domain(format!("bound needs 0 <= v < 1, got {v}")));
    }
    Ok(())
}

/// Upper bound for the no-speed away strategy.
pub fn ns_away_cr_bound(v: f64) -> Result<f64> {
    check_unit_speed(v)?;
    let w = 1.0 - v;
    let l = (1.0 / w).log2();
    Ok(5.0 / (2.0 * w.powi(6)) + 22.0 * l * l / w.powi(8))
}

/// Upper bound for the no-knowledge away strategy, with
/// `M = max(d, 1/(1-v))`.
pub fn nk_away_cr_bound(d: f64, v: f64) -> Result<f64> {
    check_unit_speed(v)?;
    if d.is_nan() || d < 1.0 {
        return Err(Error::Domain(format!("bound needs d >= 1, got {d}")));
    }
    let m = d.max(1.0 / (1.0 - v));
    let l = m.log2();
    let ll = if m > 2.0 { l.log2() } else { 0.0 };
    Ok(12.0 * m.powi(7) + 192.0 * (ll + 3.0) * m.powi(10) * l * l / d)
}

/// The bound a sweep compares a run against.
pub fn cr_bound(alg: AlgorithmId, d: &Scalar, v: &Scalar) -> Result<CrBound> {
    match alg {
        AlgorithmId::NsAway => Ok(CrBound {
            value: BoundValue::Float(ns_away_cr_bound(to_f64(v))?),
            kind: BoundKind::UpperBound,
            source: "no-speed away guessing bound",
        }),
        AlgorithmId::NkAway => Ok(CrBound {
            value: BoundValue::Float(nk_away_cr_bound(to_f64(d), to_f64(v))?),
            kind: BoundKind::UpperBound,
            source: "no-knowledge away guessing bound",
        }),
        _ => Ok(CrBound {
            value: BoundValue::Exact(cr_exact(alg, v)?),
            kind: BoundKind::ExactWorstCase,
            source: alg.name(),
        }),
    }
}

fn turn_log_argument(a: &Scalar, d: &Scalar, v: &Scalar) -> Result<f64> {
    if *a <= one() || *d < one() || *v >= one() || v.is_negative() {
        return Err(Error::Domain(format!(
            "turn bound needs a > 1, d >= 1, 0 <= v < 1 (a = {}, d = {}, v = {})",
            fmt_pq(a),
            fmt_pq(d),
            fmt_pq(v)
        )));
    }
    Ok(to_f64(&(int(2) * d / (one() - v))))
}

/// Zigzag turn bound `1 + 2 log_a(2d/(1-v))`.
pub fn zigzag_turn_bound(a: &Scalar, d: &Scalar, v: &Scalar) -> Result<f64> {
    let x = turn_log_argument(a, d, v)?;
    Ok(1.0 + 2.0 * x.ln() / to_f64(a).ln())
}

/// Same bound read with a base-2 logarithm.
pub fn zigzag_turn_bound_base2(a: &Scalar, d: &Scalar, v: &Scalar) -> Result<f64> {
    let x = turn_log_argument(a, d, v)?;
    Ok(1.0 + 2.0 * x.log2())
}

/// Competitive ratio of a tunable strategy as a function of its
/// parameter `p`, or `None` where `p` is not admissible.
pub fn parametric_cr(alg: AlgorithmId, v: f64, p: f64) -> Result<Option<f64>> {
    use AlgorithmId::*;
    let value = match alg {
        NdAwayZigzag => {
            let den = p - 1.0 - p * v - v;
            (p > 1.0 && den > 0.0).then(|| 1.0 + 2.0 * p * p / den)
        }
        NdAwayOpposite => {
            (p > v && p < 1.0).then(|| (1.0 - v + 3.0 * p + p * v) / ((p - v) * (1.0 - p)))
        }
        NdTowardZigzag => {
            let den = p + p * v + v - 1.0;
            (p > 1.0 && den > 0.0).then(|| 1.0 + 2.0 * p * p / den)
        }
        NdTowardOpposite => {
            (p > 0.0 && p < 1.0).then(|| 1.0 + (1.0 + p) * (1.0 + p) / ((1.0 - p) * (p + v)))
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "{alg} has no tunable parameter"
            )))
        }
    };
    Ok(value)
}

/// Whether the default parameter is a local minimum of [`parametric_cr`]
/// against perturbations of size `delta`.
pub fn check_local_optimality(alg: AlgorithmId, v: &Scalar, delta: f64) -> Result<bool> {
    let p = to_f64(&default_parameter(alg, v)?);
    let vf = to_f64(v);
    let f = |x: f64| parametric_cr(alg, vf, x);
    let Some(best) = f(p)? else {
        return Err(Error::Domain(format!(
            "{alg} default parameter is not admissible"
        )));
    };
    for step in [delta, delta / 10.0] {
        if let (Some(lo), Some(hi)) = (f(p - step)?, f(p + step)?) {
            return Ok(lo >= best && hi >= best);
        }
    }
    Err(Error::Domain(format!(
        "perturbation {delta} leaves the admissible range of {alg}"
    )))
}

/// `(v-3)^2/(v+1)^2`, an equivalent form of the no-distance toward ratio.
pub fn nd_toward_cr_squared_form(v: &Scalar) -> Scalar {
    let num = v - int(3);
    let den = v + one();
    &num * &num / (&den * &den)
}

/// Closed-form found, fetch and chase durations of the opposite-direction
/// strategy at cruise speed `u`.
pub fn opposite_phase_times(
    dir: Direction,
    d: &Scalar,
    v: &Scalar,
    u: &Scalar,
) -> Result<(Scalar, Scalar, Scalar)> {
    let one = one();
    let two = int(2);
    let closing = match dir {
        Direction::Away => u - v,
        Direction::Toward => u + v,
    };
    if closing <= zero() || *u >= one {
        return Err(Error::Domain(format!(
            "no closed form for u = {}, v = {}",
            fmt_pq(u),
            fmt_pq(v)
        )));
    }
    let t1 = d / &closing;
    let t2 = &two * d * u / (&closing * (&one - u));
    // Rendezvous point sits at -x_meet relative to the finder's side.
    let t12 = &t1 + &t2;
    // The pair meets on the partner's side, at -u * (t1 + t2).
    let x_meet = -(u * &t12);
    let target = match dir {
        Direction::Away => d + v * &t12,
        Direction::Toward => d - v * &t12,
    };
    let gap = &target - &x_meet;
    let t3 = if dir == Direction::Toward && !gap.is_negative() {
        gap / (&one + v)
    } else if *v < one {
        gap.abs() / (&one - v)
    } else {
        return Err(Error::Domain("target outruns the chase".into()));
    };
    Ok((t1, t2, t3))
}
