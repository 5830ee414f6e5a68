//! Grid sweeps over models, headings, speeds and distances.

use crate::output::{q15, sig15};
use crate::run::strategy_for;
use crate::{parse_direction, parse_model, parse_q, Failure, StrategyArgs};
use clap::Args;
use linepursuit::adversary::adversarial_scenarios;
use linepursuit::kinematics::scalar::{fmt_pq, one, rat};
use linepursuit::theory::cr_bound;
use linepursuit::{
    competitive_ratio, simulate, Direction, Error, KnowledgeModel, Scalar, Scenario, StrategySpec,
};
use rayon::prelude::*;
use std::path::PathBuf;

pub const HEADER: &str = "model,direction,alg,v,d,side,eps_rel,capture_time,cr,cr_bound,turns_total,iteration_k,capture_time_pq,cr_pq";

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Knowledge models to sweep; all four by default.
    #[arg(long, value_delimiter = ',', value_parser = parse_model)]
    pub models: Vec<KnowledgeModel>,
    /// Target headings; both by default.
    #[arg(long, value_delimiter = ',', value_parser = parse_direction)]
    pub directions: Vec<Direction>,
    /// Target speeds. No speeds means an empty grid.
    #[arg(long = "v", value_delimiter = ',', value_parser = parse_q)]
    pub v_values: Vec<Scalar>,
    /// Distances; 1 is always included.
    #[arg(long = "d", value_delimiter = ',', value_parser = parse_q)]
    pub d_values: Vec<Scalar>,
    /// Relative offset past each zigzag critical distance.
    #[arg(long = "eps-rel", value_parser = parse_q, default_value = "1e-9")]
    pub eps_rel: Scalar,
    /// Number of zigzag critical distances to probe.
    #[arg(long = "k-max", default_value_t = 8)]
    pub k_max: usize,
    #[command(flatten)]
    pub strategy: StrategyArgs,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A resolved grid: one strategy per (model, heading, speed), each with
/// its adversarial instances.
pub struct SweepGrid {
    pub cells: Vec<Cell>,
    pub eps_rel: Scalar,
}

pub struct Cell {
    pub model: KnowledgeModel,
    pub spec: StrategySpec,
    pub v: Scalar,
    pub scenarios: Vec<Scenario>,
}

pub fn grid(args: &SweepArgs) -> Result<SweepGrid, Failure> {
    if args.eps_rel < rat(0, 1) {
        return Err(Failure::usage("--eps-rel must be non-negative"));
    }
    let models = if args.models.is_empty() {
        KnowledgeModel::ALL.to_vec()
    } else {
        args.models.clone()
    };
    let dirs = if args.directions.is_empty() {
        vec![Direction::Away, Direction::Toward]
    } else {
        args.directions.clone()
    };
    let mut ds = args.d_values.clone();
    if !ds.contains(&one()) {
        ds.insert(0, one());
    }
    let mut cells = Vec::new();
    for &model in &models {
        for &dir in &dirs {
            for v in &args.v_values {
                if dir == Direction::Away && *v >= one() {
                    return Err(Failure::usage(format!(
                        "speed {} is not valid for away targets; sweep directions separately",
                        fmt_pq(v)
                    )));
                }
                let spec = strategy_for(model, dir, v, &args.strategy)?;
                let scenarios = adversarial_scenarios(&spec, v, &ds, &args.eps_rel, args.k_max)?;
                for s in &scenarios {
                    s.validate_for(model)?;
                }
                cells.push(Cell {
                    model,
                    spec,
                    v: v.clone(),
                    scenarios,
                });
            }
        }
    }
    Ok(SweepGrid {
        cells,
        eps_rel: args.eps_rel.clone(),
    })
}

/// One CSV line. A strategy that never captures gets `inf` times and
/// empty exact fields rather than aborting the sweep.
fn row(cell: &Cell, s: &Scenario, eps_rel: &Scalar) -> Result<String, Failure> {
    // Some strategies have no closed-form bound; leave the field empty.
    let bound = cr_bound(cell.spec.alg, s.d(), &cell.v)
        .map(|b| sig15(b.value.as_f64()))
        .unwrap_or_default();
    let measured = match simulate(&cell.spec, s) {
        Ok(r) => {
            let cr = competitive_ratio(&r, s)?;
            [
                q15(&r.capture_time),
                q15(&cr),
                bound,
                r.total_turns().to_string(),
                r.iteration.to_string(),
                fmt_pq(&r.capture_time),
                fmt_pq(&cr),
            ]
        }
        Err(Error::NonTermination { .. }) => [
            "inf".into(),
            "inf".into(),
            bound,
            String::new(),
            String::new(),
            String::new(),
            String::new(),
        ],
        Err(e) => return Err(e.into()),
    };
    Ok(format!(
        "{},{},{},{},{},{},{},{}",
        cell.model,
        s.direction(),
        cell.spec.alg,
        q15(s.v()),
        q15(s.d()),
        s.side(),
        q15(eps_rel),
        measured.join(","),
    ))
}

/// Rows in grid order, computed in parallel.
pub fn render(g: &SweepGrid) -> Result<String, Failure> {
    let jobs: Vec<(&Cell, &Scenario)> = g
        .cells
        .iter()
        .flat_map(|c| c.scenarios.iter().map(move |s| (c, s)))
        .collect();
    let rows: Vec<String> = jobs
        .par_iter()
        .map(|(c, s)| row(c, s, &g.eps_rel))
        .collect::<Result<_, _>>()?;
    let mut csv =
        String::with_capacity(HEADER.len() + 1 + rows.iter().map(|r| r.len() + 1).sum::<usize>());
    csv.push_str(HEADER);
    csv.push('\n');
    for r in rows {
        csv.push_str(&r);
        csv.push('\n');
    }
    Ok(csv)
}

pub fn sweep(args: &SweepArgs) -> Result<(), Failure> {
    let csv = render(&grid(args)?)?;
    match &args.out {
        Some(path) => std::fs::write(path, csv).map_err(|e| Failure::io(path, e)),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(csv.as_bytes())
                .map_err(|e| Failure::io(std::path::Path::new("<stdout>"), e))
        }
    }
}
