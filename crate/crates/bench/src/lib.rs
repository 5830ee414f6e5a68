//! Shared fixtures for the benchmarks.

use linepursuit::kinematics::scalar::{int, rat};
use linepursuit::{AlgorithmId, Direction, Scenario, Side, StrategySpec};

/// A representative run for each strategy family.
pub fn fixtures() -> Vec<(&'static str, StrategySpec, Scenario)> {
    let away = |d, v: (i64, i64), side| {
        Scenario::new(int(d), rat(v.0, v.1), Direction::Away, side).expect("valid scenario")
    };
    let toward = |d, v: (i64, i64), side| {
        Scenario::new(int(d), rat(v.0, v.1), Direction::Toward, side).expect("valid scenario")
    };
    vec![
        (
            "fk-away",
            StrategySpec::new(AlgorithmId::FkAway),
            away(10, (1, 2), Side::Neg),
        ),
        (
            "nd-away-zigzag",
            StrategySpec::new(AlgorithmId::NdAwayZigzag),
            away(1000, (1, 3), Side::Neg),
        ),
        (
            "nd-away-opposite",
            StrategySpec::new(AlgorithmId::NdAwayOpposite),
            away(1000, (1, 3), Side::Neg),
        ),
        (
            "nd-toward-zigzag",
            StrategySpec::new(AlgorithmId::NdTowardZigzag),
            toward(1000, (1, 5), Side::Neg),
        ),
        (
            "ns-away",
            StrategySpec::new(AlgorithmId::NsAway),
            away(10, (7, 8), Side::Neg),
        ),
        (
            "ns-toward",
            StrategySpec::new(AlgorithmId::NsToward),
            toward(10, (3, 1), Side::Neg),
        ),
        (
            "nk-away",
            StrategySpec::new(AlgorithmId::NkAway),
            away(100, (3, 4), Side::Neg),
        ),
    ]
}
