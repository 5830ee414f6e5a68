//! Scenario and strategy resolution shared by `simulate`, `trace` and `sweep`.

use crate::{Failure, ScenarioArgs, StrategyArgs};
use linepursuit::kinematics::scalar::fmt_pq;
use linepursuit::scenario::visible_knowledge;
use linepursuit::{
    competitive_ratio, select_algorithm, simulate as run_sim, AlgorithmId, CaptureResult,
    Direction, KnowledgeModel, Scalar, Scenario, StrategySpec,
};

pub fn scenario_from(args: &ScenarioArgs) -> Result<Scenario, Failure> {
    if let Some(s) = &args.scenario {
        return Ok(s.clone());
    }
    let missing: Vec<&str> = [
        ("--direction", args.direction.is_none()),
        ("--d", args.d.is_none()),
        ("--v", args.v.is_none()),
        ("--side", args.side.is_none()),
    ]
    .into_iter()
    .filter_map(|(flag, absent)| absent.then_some(flag))
    .collect();
    if !missing.is_empty() {
        return Err(Failure::usage(format!(
            "missing {} (or pass --scenario d,v,direction,side)",
            missing.join(", ")
        )));
    }
    Ok(Scenario::new(
        args.d.clone().unwrap(),
        args.v.clone().unwrap(),
        args.direction.unwrap(),
        args.side.unwrap(),
    )?)
}

/// The strategy a model would run against targets with heading `dir` and
/// speed `v`, with any command-line overrides applied.
pub fn strategy_for(
    model: KnowledgeModel,
    dir: Direction,
    v: &Scalar,
    over: &StrategyArgs,
) -> Result<StrategySpec, Failure> {
    let mut spec = match over.alg {
        Some(alg) => {
            if !model.covers(alg.model()) {
                return Err(Failure::usage(format!(
                    "{alg} needs more knowledge than model {model} provides"
                )));
            }
            if alg.direction().is_some_and(|d| d != dir) {
                return Err(Failure::usage(format!(
                    "{alg} does not handle {dir} targets"
                )));
            }
            StrategySpec::new(alg)
        }
        None => {
            // Selection only looks at v; any positive distance will do.
            let probe = Scenario::new(
                linepursuit::kinematics::scalar::one(),
                v.clone(),
                dir,
                linepursuit::Side::Pos,
            )?;
            select_algorithm(model, dir, &visible_knowledge(model, &probe))?
        }
    };
    if let Some(a) = &over.a {
        if !spec.alg.is_zigzag() {
            return Err(Failure::usage(format!(
                "--a only applies to zigzag strategies, not {}",
                spec.alg
            )));
        }
        spec = spec.ratio(a.clone());
    }
    if let Some(u) = &over.u {
        if !spec.alg.is_cruise() {
            return Err(Failure::usage(format!(
                "--u only applies to opposite-direction strategies, not {}",
                spec.alg
            )));
        }
        spec = spec.cruise(u.clone());
    }
    if let Some(side) = over.first_dir {
        spec = spec.first_direction(side);
    }
    if let Some(n) = over.max_iterations {
        spec = spec.max_iterations(n);
    }
    Ok(spec)
}

pub struct Run {
    pub scenario: Scenario,
    pub spec: StrategySpec,
    pub result: CaptureResult,
    pub cr: Scalar,
}

pub fn run(args: &ScenarioArgs) -> Result<Run, Failure> {
    let scenario = scenario_from(args)?;
    scenario.validate_for(args.model).or_else(|e| {
        // Waiting needs no knowledge, so it tolerates any scenario.
        if args.strategy.alg == Some(AlgorithmId::WaitAtOrigin) {
            Ok(())
        } else {
            Err(e)
        }
    })?;
    let spec = strategy_for(
        args.model,
        scenario.direction(),
        scenario.v(),
        &args.strategy,
    )?;
    let result = run_sim(&spec, &scenario)?;
    let cr = competitive_ratio(&result, &scenario)?;
    Ok(Run {
        scenario,
        spec,
        result,
        cr,
    })
}

pub fn simulate(args: &ScenarioArgs) -> Result<(), Failure> {
    let Run {
        scenario,
        spec,
        result: r,
        cr,
    } = run(args)?;
    let lines = [
        ("model", args.model.to_string()),
        ("scenario", scenario.to_string()),
        ("alg", spec.alg.to_string()),
        ("first_dir", spec.first_direction.to_string()),
        ("capture_time", fmt_pq(&r.capture_time)),
        ("T1", fmt_pq(&r.found_time)),
        ("T2", fmt_pq(&r.fetch_time)),
        ("T3", fmt_pq(&r.chase_time)),
        ("cr", fmt_pq(&cr)),
        ("turns_r1", r.turns_r1.to_string()),
        ("turns_r2", r.turns_r2.to_string()),
        ("iteration_k", r.iteration.to_string()),
        ("capture_position", fmt_pq(&r.capture_position)),
        ("found_by", r.found_by.to_string()),
    ];
    for (k, v) in lines {
        println!("{k}={v}");
    }
    Ok(())
}
