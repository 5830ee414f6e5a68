use super::scalar::{fmt_pq, one, signum, zero, Scalar};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};
use std::fmt;

/// Constant-velocity motion defined for every `t >= t0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformMotion {
    pub t0: Scalar,
    pub x0: Scalar,
    pub velocity: Scalar,
}

impl UniformMotion {
    pub fn new(t0: Scalar, x0: Scalar, velocity: Scalar) -> Self {
        Self { t0, x0, velocity }
    }

    pub fn position_at(&self, t: &Scalar) -> Scalar {
        &self.x0 + &self.velocity * (t - &self.t0)
    }

    /// Mirror image through the origin.
    pub fn reflected(&self) -> Self {
        Self::new(self.t0.clone(), -&self.x0, -&self.velocity)
    }
}

/// One constant-velocity piece of a robot trajectory on `[t_start, t_end]`.
///
/// `t_end == None` marks an unbounded final ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrajectorySegment {
    t_start: Scalar,
    t_end: Option<Scalar>,
    x_start: Scalar,
    velocity: Scalar,
}

impl TrajectorySegment {
    pub fn new(
        t_start: Scalar,
        t_end: Option<Scalar>,
        x_start: Scalar,
        velocity: Scalar,
    ) -> Result<Self> {
        if let Some(end) = &t_end {
            if *end <= t_start {
                return Err(Error::InvalidTrajectory(format!(
                    "segment [{}, {}] has no duration",
                    fmt_pq(&t_start),
                    fmt_pq(end)
                )));
            }
        }
        if velocity.abs() > one() {
            return Err(Error::InvalidTrajectory(format!(
                "speed {} exceeds the robot speed cap of 1",
                fmt_pq(&velocity.abs())
            )));
        }
        Ok(Self {
            t_start,
            t_end,
            x_start,
            velocity,
        })
    }

    pub fn t_start(&self) -> &Scalar {
        &self.t_start
    }

    pub fn t_end(&self) -> Option<&Scalar> {
        self.t_end.as_ref()
    }

    pub fn x_start(&self) -> &Scalar {
        &self.x_start
    }

    pub fn velocity(&self) -> &Scalar {
        &self.velocity
    }

    pub fn is_unbounded(&self) -> bool {
        self.t_end.is_none()
    }

    pub fn contains(&self, t: &Scalar) -> bool {
        *t >= self.t_start && self.t_end.as_ref().is_none_or(|end| t <= end)
    }

    /// Evaluates the linear formula; does not check that `t` is in range.
    pub fn position_at(&self, t: &Scalar) -> Scalar {
        &self.x_start + &self.velocity * (t - &self.t_start)
    }

    pub fn end_position(&self) -> Option<Scalar> {
        self.t_end.as_ref().map(|t| self.position_at(t))
    }

    /// The segment viewed as an unbounded uniform motion.
    pub fn as_motion(&self) -> UniformMotion {
        UniformMotion::new(
            self.t_start.clone(),
            self.x_start.clone(),
            self.velocity.clone(),
        )
    }
}

/// Piecewise-linear, time-contiguous and position-continuous robot motion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    segments: Vec<TrajectorySegment>,
}

impl Trajectory {
    pub fn new(segments: Vec<TrajectorySegment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InvalidTrajectory("no segments".into()));
        }
        for (k, pair) in segments.windows(2).enumerate() {
            let (prev, next) = (&pair[0], &pair[1]);
            let Some(end) = prev.t_end() else {
                return Err(Error::InvalidTrajectory(format!(
                    "unbounded segment {k} is not the last one"
                )));
            };
            if end != next.t_start() {
                return Err(Error::InvalidTrajectory(format!(
                    "gap in time between segments {k} and {}",
                    k + 1
                )));
            }
            if prev.position_at(end) != *next.x_start() {
                return Err(Error::InvalidTrajectory(format!(
                    "position jump between segments {k} and {}",
                    k + 1
                )));
            }
        }
        Ok(Self { segments })
    }

    pub fn segments(&self) -> &[TrajectorySegment] {
        &self.segments
    }

    pub fn start_time(&self) -> &Scalar {
        self.segments[0].t_start()
    }

    pub fn start_position(&self) -> &Scalar {
        self.segments[0].x_start()
    }

    /// `None` when the trajectory ends with an unbounded ray.
    pub fn end_time(&self) -> Option<&Scalar> {
        self.segments.last().and_then(|s| s.t_end())
    }

    pub fn end_position(&self) -> Option<Scalar> {
        self.segments.last().and_then(|s| s.end_position())
    }

    pub fn starts_at_origin(&self) -> bool {
        self.start_time().is_zero() && self.start_position().is_zero()
    }

    pub fn contains(&self, t: &Scalar) -> bool {
        t >= self.start_time() && self.end_time().is_none_or(|end| t <= end)
    }

    /// Exact position at time `t`.
    pub fn position_at(&self, t: &Scalar) -> Result<Scalar> {
        if !self.contains(t) {
            return Err(Error::Domain(format!(
                "time {} is outside the trajectory span",
                fmt_pq(t)
            )));
        }
        let seg = self
            .segments
            .iter()
            .find(|s| s.contains(t))
            .expect("contiguous segments cover the span");
        Ok(seg.position_at(t))
    }

    /// Velocity in effect right after `t` (right-continuous).
    pub fn velocity_after(&self, t: &Scalar) -> Option<&Scalar> {
        self.segments
            .iter()
            .find(|s| s.t_start() <= t && s.t_end().is_none_or(|end| t < end))
            .map(|s| s.velocity())
    }

    /// Number of direction reversals; rests in between are ignored and
    /// speed changes in the same direction do not count.
    pub fn turn_count(&self) -> usize {
        let mut turns = 0;
        let mut heading = 0i8;
        for seg in &self.segments {
            let s = signum(seg.velocity());
            if s == 0 {
                continue;
            }
            if heading != 0 && s != heading {
                turns += 1;
            }
            heading = s;
        }
        turns
    }

    /// Prefix of the trajectory ending at `t`.
    pub fn truncated(&self, t: &Scalar) -> Result<Self> {
        if t <= self.start_time() || !self.contains(t) {
            return Err(Error::Domain(format!(
                "cannot truncate at {}, outside the open span",
                fmt_pq(t)
            )));
        }
        let mut out = Vec::new();
        for seg in &self.segments {
            if seg.t_start() >= t {
                break;
            }
            let end = match seg.t_end() {
                Some(end) if end <= t => end.clone(),
                _ => t.clone(),
            };
            out.push(TrajectorySegment::new(
                seg.t_start().clone(),
                Some(end),
                seg.x_start().clone(),
                seg.velocity().clone(),
            )?);
        }
        Self::new(out)
    }

    /// Mirror image through the origin.
    pub fn reflected(&self) -> Self {
        Self {
            segments: self
                .segments
                .iter()
                .map(|s| TrajectorySegment {
                    t_start: s.t_start.clone(),
                    t_end: s.t_end.clone(),
                    x_start: -&s.x_start,
                    velocity: -&s.velocity,
                })
                .collect(),
        }
    }

    /// Every finite breakpoint, starting with the start time.
    pub fn breakpoints(&self) -> Vec<Scalar> {
        let mut out = vec![self.start_time().clone()];
        out.extend(self.segments.iter().filter_map(|s| s.t_end().cloned()));
        out
    }
}

impl fmt::Display for Trajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.segments.iter().enumerate() {
            if k > 0 {
                write!(f, " ; ")?;
            }
            match s.t_end() {
                Some(end) => write!(
                    f,
                    "[{}, {}] x={} v={}",
                    fmt_pq(s.t_start()),
                    fmt_pq(end),
                    fmt_pq(s.x_start()),
                    fmt_pq(s.velocity())
                )?,
                None => write!(
                    f,
                    "[{}, inf) x={} v={}",
                    fmt_pq(s.t_start()),
                    fmt_pq(s.x_start()),
                    fmt_pq(s.velocity())
                )?,
            }
        }
        Ok(())
    }
}

/// Appends motion pieces end to end.
///
/// Zero-duration pieces are dropped. The first invalid piece (over-speed,
/// negative duration, anything after an unbounded ray) is remembered and
/// reported by [`TrajectoryBuilder::build`].
#[derive(Clone, Debug)]
pub struct TrajectoryBuilder {
    t: Scalar,
    x: Scalar,
    open: bool,
    segments: Vec<TrajectorySegment>,
    error: Option<Error>,
}

impl TrajectoryBuilder {
    pub fn new(t0: Scalar, x0: Scalar) -> Self {
        Self {
            t: t0,
            x: x0,
            open: false,
            segments: Vec::new(),
            error: None,
        }
    }

    /// Robots start at the origin at time zero.
    pub fn at_origin() -> Self {
        Self::new(zero(), zero())
    }

    /// Continue an existing finite trajectory.
    pub fn extend(traj: &Trajectory) -> Result<Self> {
        let (Some(t), Some(x)) = (traj.end_time(), traj.end_position()) else {
            return Err(Error::InvalidTrajectory(
                "cannot extend past an unbounded ray".into(),
            ));
        };
        Ok(Self {
            t: t.clone(),
            x,
            open: false,
            segments: traj.segments().to_vec(),
            error: None,
        })
    }

    pub fn time(&self) -> &Scalar {
        &self.t
    }

    pub fn position(&self) -> &Scalar {
        &self.x
    }

    pub fn is_open(&self) -> bool {
        self.open
    }

    fn fail(&mut self, e: Error) {
        if self.error.is_none() {
            self.error = Some(e);
        }
    }

    fn push(&mut self, end: Option<Scalar>, velocity: Scalar) {
        if self.error.is_some() {
            return;
        }
        if self.open {
            self.fail(Error::InvalidTrajectory(
                "segment appended after an unbounded ray".into(),
            ));
            return;
        }
        match TrajectorySegment::new(self.t.clone(), end, self.x.clone(), velocity) {
            Ok(seg) => {
                match seg.t_end() {
                    Some(end) => {
                        self.x = seg.position_at(end);
                        self.t = end.clone();
                    }
                    None => self.open = true,
                }
                self.segments.push(seg);
            }
            Err(e) => self.fail(e),
        }
    }

    /// Move with `velocity` for `duration`.
    pub fn move_for(&mut self, duration: &Scalar, velocity: &Scalar) -> &mut Self {
        if duration.is_negative() {
            self.fail(Error::InvalidTrajectory(format!(
                "negative duration {}",
                fmt_pq(duration)
            )));
        } else if !duration.is_zero() {
            let end = &self.t + duration;
            self.push(Some(end), velocity.clone());
        }
        self
    }

    pub fn hold(&mut self, duration: &Scalar) -> &mut Self {
        self.move_for(duration, &zero())
    }

    /// Move straight to `x` at the given (positive) speed.
    pub fn move_to(&mut self, x: &Scalar, speed: &Scalar) -> &mut Self {
        let dx = x - &self.x;
        if dx.is_zero() {
            return self;
        }
        if !speed.is_positive() {
            self.fail(Error::InvalidTrajectory(format!(
                "cannot reach {} at speed {}",
                fmt_pq(x),
                fmt_pq(speed)
            )));
            return self;
        }
        let duration = dx.abs() / speed;
        let velocity = if dx.is_positive() {
            speed.clone()
        } else {
            -speed
        };
        self.move_for(&duration, &velocity)
    }

    /// Keep moving with `velocity` forever; nothing can follow.
    pub fn forever(&mut self, velocity: &Scalar) -> &mut Self {
        self.push(None, velocity.clone());
        self
    }

    pub fn build(&self) -> Result<Trajectory> {
        if let Some(e) = &self.error {
            return Err(e.clone());
        }
        Trajectory::new(self.segments.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::scalar::{int, rat};

    fn out_and_back(turn: i64) -> Trajectory {
        TrajectoryBuilder::at_origin()
            .move_to(&int(turn), &one())
            .forever(&int(-1))
            .build()
            .unwrap()
    }

    #[test]
    fn unit_speed_line() {
        let traj = TrajectoryBuilder::at_origin()
            .forever(&one())
            .build()
            .unwrap();
        assert_eq!(traj.position_at(&int(5)).unwrap(), int(5));
    }

    #[test]
    fn reflection_at_turn_point() {
        assert_eq!(out_and_back(3).position_at(&int(4)).unwrap(), int(2));
        assert_eq!(out_and_back(3).position_at(&int(3)).unwrap(), int(3));
    }

    #[test]
    fn piecewise_evaluation() {
        // 3/4 * 4 = 3, then 3 - (6 - 4) = 1
        let traj = TrajectoryBuilder::at_origin()
            .move_for(&int(4), &rat(3, 4))
            .forever(&int(-1))
            .build()
            .unwrap();
        assert_eq!(traj.position_at(&int(6)).unwrap(), int(1));
    }

    #[test]
    fn before_start_is_a_domain_error() {
        let traj = TrajectoryBuilder::new(int(2), zero())
            .forever(&one())
            .build()
            .unwrap();
        assert!(matches!(traj.position_at(&int(1)), Err(Error::Domain(_))));
    }

    #[test]
    fn after_finite_end_is_a_domain_error() {
        let traj = TrajectoryBuilder::at_origin()
            .move_for(&int(1), &one())
            .build()
            .unwrap();
        assert!(traj.position_at(&int(2)).is_err());
    }

    #[test]
    fn rejects_overspeed_and_gaps() {
        let err = TrajectoryBuilder::at_origin().forever(&rat(3, 2)).build();
        assert!(matches!(err, Err(Error::InvalidTrajectory(_))));

        let a = TrajectorySegment::new(zero(), Some(one()), zero(), one()).unwrap();
        let b = TrajectorySegment::new(int(2), None, one(), one()).unwrap();
        assert!(Trajectory::new(vec![a.clone(), b]).is_err());
        let jump = TrajectorySegment::new(one(), None, int(5), one()).unwrap();
        assert!(Trajectory::new(vec![a, jump]).is_err());
    }

    #[test]
    fn rejects_zero_length_segment() {
        assert!(TrajectorySegment::new(one(), Some(one()), zero(), zero()).is_err());
    }

    #[test]
    fn builder_drops_zero_durations() {
        let traj = TrajectoryBuilder::at_origin()
            .hold(&zero())
            .move_to(&zero(), &one())
            .move_for(&one(), &one())
            .build()
            .unwrap();
        assert_eq!(traj.segments().len(), 1);
    }

    #[test]
    fn nothing_after_unbounded_ray() {
        let err = TrajectoryBuilder::at_origin()
            .forever(&one())
            .move_for(&one(), &one())
            .build();
        assert!(err.is_err());
    }

    #[test]
    fn turn_counts() {
        let monotone = TrajectoryBuilder::at_origin()
            .move_for(&int(2), &rat(1, 2))
            .forever(&one())
            .build()
            .unwrap();
        assert_eq!(monotone.turn_count(), 0);

        let zigzag = TrajectoryBuilder::at_origin()
            .move_to(&one(), &one())
            .move_to(&zero(), &one())
            .move_to(&int(2), &one())
            .build()
            .unwrap();
        assert_eq!(zigzag.turn_count(), 2);

        let mut b = TrajectoryBuilder::at_origin();
        for v in [rat(3, 4), rat(15, 16), int(-1), int(1)] {
            b.move_for(&one(), &v);
        }
        assert_eq!(b.build().unwrap().turn_count(), 2);

        let stop_reverse = TrajectoryBuilder::at_origin()
            .hold(&one())
            .move_for(&one(), &one())
            .hold(&one())
            .move_for(&one(), &int(-1))
            .build()
            .unwrap();
        assert_eq!(stop_reverse.turn_count(), 1);
    }

    #[test]
    fn truncation_keeps_prefix() {
        let t = out_and_back(3).truncated(&int(4)).unwrap();
        assert_eq!(t.end_time(), Some(&int(4)));
        assert_eq!(t.end_position(), Some(int(2)));
        assert_eq!(t.turn_count(), 1);
        let at_turn = out_and_back(3).truncated(&int(3)).unwrap();
        assert_eq!(at_turn.segments().len(), 1);
        assert!(out_and_back(3).truncated(&zero()).is_err());
    }

    #[test]
    fn extend_continues_from_end() {
        let base = TrajectoryBuilder::at_origin()
            .move_for(&int(2), &one())
            .build()
            .unwrap();
        let traj = TrajectoryBuilder::extend(&base)
            .unwrap()
            .forever(&int(-1))
            .build()
            .unwrap();
        assert_eq!(traj.position_at(&int(3)).unwrap(), one());
        assert!(TrajectoryBuilder::extend(&traj).is_err());
    }
}
