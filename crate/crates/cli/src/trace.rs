//! Sampled positions of both robots and the target.

use crate::output::q15;
use crate::run::{run, Run};
use crate::{Failure, ScenarioArgs};
use linepursuit::scenario::target_motion;
use linepursuit::{Scalar, Scenario};
use std::io::Write;
use std::path::Path;

fn phase(r: &linepursuit::CaptureResult, t: &Scalar) -> &'static str {
    if *t < r.found_time {
        "search"
    } else if *t < r.rendezvous_time {
        "fetch"
    } else if *t < r.capture_time {
        "chase"
    } else {
        "captured"
    }
}

/// Rows `(t, label)`: `samples` evenly spaced times on `[0, capture]`
/// followed by the events, merged in time order. A rendezvous that
/// coincides with first contact is not repeated.
fn rows(r: &linepursuit::CaptureResult, samples: usize) -> Vec<(Scalar, &'static str)> {
    let mut out: Vec<(Scalar, &'static str)> = (0..samples)
        .map(|j| {
            let t = if samples == 1 {
                Scalar::from_integer(0.into())
            } else {
                &r.capture_time * Scalar::new((j as i64).into(), ((samples - 1) as i64).into())
            };
            let p = phase(r, &t);
            (t, p)
        })
        .collect();
    out.push((r.found_time.clone(), "found"));
    if r.rendezvous_time != r.found_time {
        out.push((r.rendezvous_time.clone(), "rendezvous"));
    }
    out.push((r.capture_time.clone(), "capture"));
    // Stable: samples stay ahead of events at the same instant.
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

pub fn render(
    r: &linepursuit::CaptureResult,
    s: &Scenario,
    samples: usize,
) -> Result<String, Failure> {
    let target = target_motion(s);
    let mut csv = String::from("t,x_r1,x_r2,x_target,phase\n");
    for (t, label) in rows(r, samples) {
        let x1 = r.traj_r1.position_at(&t)?;
        let x2 = r.traj_r2.position_at(&t)?;
        csv.push_str(&format!(
            "{},{},{},{},{label}\n",
            q15(&t),
            q15(&x1),
            q15(&x2),
            q15(&target.position_at(&t))
        ));
    }
    Ok(csv)
}

pub fn trace(args: &ScenarioArgs, samples: usize, out: Option<&Path>) -> Result<(), Failure> {
    let Run {
        scenario, result, ..
    } = run(args)?;
    let csv = render(&result, &scenario, samples)?;
    match out {
        Some(path) => std::fs::write(path, csv).map_err(|e| Failure::io(path, e)),
        None => std::io::stdout()
            .write_all(csv.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}
