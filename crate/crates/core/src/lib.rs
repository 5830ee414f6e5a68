//! Two unit-speed robots capturing a constant-speed target on the line.
//!
//! Everything runs on exact rationals. Start with [`simulate`] and a
//! [`StrategySpec`], or let [`select_algorithm`] pick the strategy for a
//! knowledge model.

pub mod adversary;
pub mod error;
pub mod kinematics;
pub mod scenario;
pub mod strategy;
pub mod theory;
pub mod verify;

pub use error::{Error, Result};
pub use kinematics::{Scalar, Trajectory, TrajectoryBuilder, UniformMotion};
pub use scenario::{Direction, Knowledge, KnowledgeModel, Scenario, Side};
pub use strategy::{
    competitive_ratio, select_algorithm, simulate, AlgorithmId, CaptureResult, Robot, StrategySpec,
};
