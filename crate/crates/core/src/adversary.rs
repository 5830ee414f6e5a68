//! Adversarial instance generation and worst-case estimation.

use crate::error::{Error, Result};
use crate::kinematics::scalar::{fmt_pq, int, one, powi, Scalar};
use crate::scenario::{Direction, Knowledge, KnowledgeModel, Scenario, Side};
use crate::strategy::{
    competitive_ratio, default_parameter, simulate, simulate_with_knowledge, AlgorithmId,
    StrategySpec,
};
use std::fmt;

/// Distances just past which first contact moves from zigzag round
/// `k - 1` to round `k`, for `k = 1..=k_max`, clamped to at least 1.
pub fn critical_distances(
    alg: AlgorithmId,
    v: &Scalar,
    a: &Scalar,
    k_max: usize,
) -> Result<Vec<Scalar>> {
    if !alg.is_zigzag() {
        return Err(Error::Unsupported(format!(
            "{alg} has no critical distances"
        )));
    }
    if *a <= one() {
        return Err(Error::Domain(format!(
            "ratio a = {} must exceed 1",
            fmt_pq(a)
        )));
    }
    let one = one();
    let two = int(2);
    let out = (1..=k_max)
        .map(|k| {
            let ak = powi(a, k as u32);
            let ak1 = powi(a, k as u32 - 1);
            let d = match alg {
                AlgorithmId::NdAwayZigzag => {
                    (&ak - &ak1 - v * &ak - v * &ak1 + &two * v) / (a - &one)
                }
                _ => &ak1 * (&one + v) + &two * v * (&ak1 - &one) / (a - &one),
            };
            d.max(one.clone())
        })
        .collect();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct WorstCaseRow {
    pub scenario: Scenario,
    pub cr: Scalar,
    pub turns: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WorstCaseReport {
    pub sup_cr: Scalar,
    pub witness: Scenario,
    pub eps_used: Scalar,
    pub table: Vec<WorstCaseRow>,
}

/// Direction a spec is evaluated against; waiting is only meaningful for
/// incoming targets.
pub fn spec_direction(spec: &StrategySpec) -> Direction {
    spec.alg.direction().unwrap_or(Direction::Toward)
}

/// Every instance the adversary tries: both sides of each `d`, plus the
/// zigzag critical distances inflated by `1 + eps_rel`.
pub fn adversarial_scenarios(
    spec: &StrategySpec,
    v: &Scalar,
    d_set: &[Scalar],
    eps_rel: &Scalar,
    k_max: usize,
) -> Result<Vec<Scenario>> {
    let mut ds = d_set.to_vec();
    if spec.alg.is_zigzag() {
        let a = match &spec.ratio_a {
            Some(a) => a.clone(),
            None => default_parameter(spec.alg, v)?,
        };
        let bump = one() + eps_rel;
        ds.extend(
            critical_distances(spec.alg, v, &a, k_max)?
                .into_iter()
                .map(|d| d * &bump),
        );
    }
    let dir = spec_direction(spec);
    let mut out = Vec::with_capacity(ds.len() * 2);
    for d in ds {
        for side in Side::BOTH {
            out.push(Scenario::new(d.clone(), v.clone(), dir, side)?);
        }
    }
    Ok(out)
}

/// Largest simulated competitive ratio over [`adversarial_scenarios`].
pub fn worst_case_cr(
    spec: &StrategySpec,
    v: &Scalar,
    d_set: &[Scalar],
    eps_rel: &Scalar,
    k_max: usize,
) -> Result<WorstCaseReport> {
    let mut table = Vec::new();
    for s in adversarial_scenarios(spec, v, d_set, eps_rel, k_max)? {
        let r = simulate(spec, &s)?;
        table.push(WorstCaseRow {
            cr: competitive_ratio(&r, &s)?,
            turns: r.total_turns(),
            scenario: s,
        });
    }
    let best = table
        .iter()
        .reduce(|x, y| if y.cr > x.cr { y } else { x })
        .ok_or_else(|| Error::Configuration("no instances to evaluate".into()))?;
    Ok(WorstCaseReport {
        sup_cr: best.cr.clone(),
        witness: best.scenario.clone(),
        eps_used: eps_rel.clone(),
        table,
    })
}

/// Competitive ratio the adversary forces, or `Infinite` when the
/// strategy never captures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdversaryCr {
    Finite(Scalar),
    Infinite,
}

impl AdversaryCr {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            AdversaryCr::Finite(x) => Some(x),
            AdversaryCr::Infinite => None,
        }
    }
}

impl fmt::Display for AdversaryCr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdversaryCr::Finite(x) => f.write_str(&fmt_pq(x)),
            AdversaryCr::Infinite => f.write_str("inf"),
        }
    }
}

/// Worst side for a single-turn strategy that walks to `p` and reverses,
/// with the target at distance 1.
fn turn_family(alg: AlgorithmId, knowledge: Knowledge, v: &Scalar) -> Result<AdversaryCr> {
    let spec = StrategySpec::new(alg);
    let mut worst = None::<Scalar>;
    for side in Side::BOTH {
        let s = Scenario::new(one(), v.clone(), knowledge.direction, side)?;
        match simulate_with_knowledge(&spec, &knowledge, &s) {
            Ok(r) => {
                let cr = competitive_ratio(&r, &s)?;
                if worst.as_ref().is_none_or(|w| cr > *w) {
                    worst = Some(cr);
                }
            }
            Err(Error::NonTermination { .. }) => return Ok(AdversaryCr::Infinite),
            Err(e) => return Err(e),
        }
    }
    Ok(AdversaryCr::Finite(worst.expect("two sides evaluated")))
}

/// The adversary's best response to a single-turn strategy with turn
/// point `p`, distance normalised to 1.
///
/// Full-knowledge toward uses the closed form `1 + 1/v + p(v-1)/v`
/// instead of a simulation.
pub fn single_turn_adversary(
    model: KnowledgeModel,
    dir: Direction,
    v: &Scalar,
    p: &Scalar,
) -> Result<AdversaryCr> {
    if *p <= int(0) {
        return Err(Error::Domain(format!(
            "turn point {} must be positive",
            fmt_pq(p)
        )));
    }
    let one = one();
    match (model, dir) {
        (KnowledgeModel::FullKnowledge, Direction::Away) => {
            if *v >= one {
                return Err(Error::Domain(
                    "away target must be slower than the robots".into(),
                ));
            }
            // Turning at p = d'/(1-v) is the full-knowledge plan for d'.
            let k = Knowledge {
                direction: dir,
                d: Some(p * (&one - v)),
                v: Some(v.clone()),
            };
            turn_family(AlgorithmId::FkAway, k, v)
        }
        (KnowledgeModel::FullKnowledge, Direction::Toward) => {
            if *v <= int(0) {
                return Err(Error::Domain("needs a moving target".into()));
            }
            Ok(AdversaryCr::Finite(&one + &one / v + p * (v - &one) / v))
        }
        (KnowledgeModel::NoSpeed, Direction::Toward) => {
            let k = Knowledge {
                direction: dir,
                d: Some(p.clone()),
                v: None,
            };
            turn_family(AlgorithmId::NsToward, k, v)
        }
        _ => Err(Error::Unsupported(format!(
            "no single-turn adversary for {model}/{dir}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::scalar::{rat, zero};

    #[test]
    fn away_thresholds() {
        let ds = critical_distances(AlgorithmId::NdAwayZigzag, &zero(), &int(2), 3).unwrap();
        assert_eq!(ds, vec![int(1), int(2), int(4)]);
        let ds = critical_distances(AlgorithmId::NdAwayZigzag, &rat(1, 3), &int(4), 1).unwrap();
        assert_eq!(ds, vec![int(1)]);
        assert!(critical_distances(AlgorithmId::FkAway, &zero(), &int(2), 3).is_err());
    }

    #[test]
    fn toward_thresholds() {
        // a^(k-1)(1+v) + 2v(a^(k-1)-1)/(a-1) at v=1/5, a=4/3, k=2
        let ds =
            critical_distances(AlgorithmId::NdTowardZigzag, &rat(1, 5), &rat(4, 3), 2).unwrap();
        assert_eq!(ds[1], int(2));
    }

    #[test]
    fn fk_away_worst_case() {
        let spec = StrategySpec::new(AlgorithmId::FkAway);
        let rep = worst_case_cr(&spec, &rat(1, 2), &[int(1)], &zero(), 0).unwrap();
        assert_eq!(rep.sup_cr, int(5));
        assert_eq!(rep.witness.side(), Side::Neg);
        assert_eq!(rep.table.len(), 2);
    }

    #[test]
    fn opposite_is_scale_invariant() {
        let spec = StrategySpec::new(AlgorithmId::NdAwayOpposite).cruise(rat(3, 5));
        let rep = worst_case_cr(&spec, &rat(1, 3), &[int(1), int(2), int(7)], &zero(), 0).unwrap();
        assert_eq!(rep.sup_cr, int(25));
        assert!(rep.table.iter().all(|r| r.cr == int(25)));
    }

    #[test]
    fn single_turn_demonstrators() {
        let fk = single_turn_adversary(
            KnowledgeModel::FullKnowledge,
            Direction::Away,
            &rat(1, 2),
            &int(2),
        );
        assert_eq!(fk.unwrap(), AdversaryCr::Finite(int(5)));
        let early = single_turn_adversary(
            KnowledgeModel::FullKnowledge,
            Direction::Away,
            &rat(1, 2),
            &int(1),
        );
        assert_eq!(early.unwrap(), AdversaryCr::Infinite);
        let toward = single_turn_adversary(
            KnowledgeModel::FullKnowledge,
            Direction::Toward,
            &int(2),
            &rat(1, 3),
        );
        assert_eq!(toward.unwrap(), AdversaryCr::Finite(rat(5, 3)));
        for v in [rat(1, 10), int(1), int(2)] {
            let ns = single_turn_adversary(KnowledgeModel::NoSpeed, Direction::Toward, &v, &int(1));
            assert_eq!(ns.unwrap(), AdversaryCr::Finite(int(3)));
        }
        assert!(matches!(
            single_turn_adversary(
                KnowledgeModel::NoDistance,
                Direction::Away,
                &zero(),
                &int(1)
            ),
            Err(Error::Unsupported(_))
        ));
    }
}
