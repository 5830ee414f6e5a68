//! Exact piecewise-linear motion and earliest-meeting solvers.
//!
//! This is the only place positions evolve in time. Everything is an exact
//! rational; segments are closed intervals, so touching at an endpoint is
//! a meeting.

mod meeting;
pub mod scalar;
mod trajectory;

pub use meeting::{earliest_co_location, earliest_meeting, segment_meeting};
pub use scalar::Scalar;
pub use trajectory::{Trajectory, TrajectoryBuilder, TrajectorySegment, UniformMotion};

/// Position of `traj` at `t`; see [`Trajectory::position_at`].
pub fn position_at(traj: &Trajectory, t: &Scalar) -> crate::Result<Scalar> {
    traj.position_at(t)
}

/// See [`Trajectory::turn_count`].
pub fn turn_count(traj: &Trajectory) -> usize {
    traj.turn_count()
}
