//! Closed-form earliest-meeting solvers.
//!
//! Each solver reduces a pair of linear motions to `gap(t) = a + b*t` on a
//! closed interval and takes the first root. Meetings at interval
//! endpoints count.

use super::scalar::Scalar;
use super::trajectory::{Trajectory, TrajectorySegment, UniformMotion};
use num_traits::Zero;
use std::cmp::max;

/// First `t` in `[lo, hi]` where `a + b*t == 0`. `hi == None` is unbounded.
fn first_root(a: &Scalar, b: &Scalar, lo: &Scalar, hi: Option<&Scalar>) -> Option<Scalar> {
    if hi.is_some_and(|hi| hi < lo) {
        return None;
    }
    if b.is_zero() {
        return a.is_zero().then(|| lo.clone());
    }
    let root = -(a / b);
    if root < *lo || hi.is_some_and(|hi| root > *hi) {
        return None;
    }
    Some(root)
}

/// Earliest time `>= t_from` at which the segment meets the motion.
pub fn segment_meeting(
    seg: &TrajectorySegment,
    motion: &UniformMotion,
    t_from: &Scalar,
) -> Option<Scalar> {
    meeting_on(seg, motion, t_from, seg.t_end())
}

fn meeting_on(
    seg: &TrajectorySegment,
    motion: &UniformMotion,
    t_from: &Scalar,
    hi: Option<&Scalar>,
) -> Option<Scalar> {
    // gap(t) = (x_s - v_s t_s) - (x_m - w t_m) + (v_s - w) t
    let a = (seg.x_start() - seg.velocity() * seg.t_start())
        - (&motion.x0 - &motion.velocity * &motion.t0);
    let b = seg.velocity() - &motion.velocity;
    let lo = max(seg.t_start(), t_from);
    first_root(&a, &b, lo, hi)
}

/// Earliest `t >= t_from` at which the trajectory and the uniform motion
/// share a position, scanning segments in time order.
pub fn earliest_meeting(
    traj: &Trajectory,
    motion: &UniformMotion,
    t_from: &Scalar,
) -> Option<Scalar> {
    traj.segments()
        .iter()
        .filter(|s| s.t_end().is_none_or(|end| end >= t_from))
        .find_map(|s| segment_meeting(s, motion, t_from))
}

/// Earliest `t >= t_from` at which two trajectories are co-located.
pub fn earliest_co_location(a: &Trajectory, b: &Trajectory, t_from: &Scalar) -> Option<Scalar> {
    let (sa, sb) = (a.segments(), b.segments());
    let (mut i, mut j) = (0, 0);
    while i < sa.len() && j < sb.len() {
        let (p, q) = (&sa[i], &sb[j]);
        let lo = max(max(p.t_start(), q.t_start()), t_from);
        let hi = match (p.t_end(), q.t_end()) {
            (Some(x), Some(y)) => Some(std::cmp::min(x, y)),
            (Some(x), None) => Some(x),
            (None, Some(y)) => Some(y),
            (None, None) => None,
        };
        if let Some(t) = meeting_on(p, &q.as_motion(), lo, hi) {
            return Some(t);
        }
        // Advance whichever segment ends first.
        match (p.t_end(), q.t_end()) {
            (Some(x), Some(y)) => {
                if x <= y {
                    i += 1;
                }
                if y <= x {
                    j += 1;
                }
            }
            (Some(_), None) => i += 1,
            (None, Some(_)) => j += 1,
            (None, None) => break,
        }
    }
    None
}
