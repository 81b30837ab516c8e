//! Hydrogen-like atoms confined in an impenetrable sphere: eigenstates,
//! momentum-space transforms and Fisher information.

pub mod config;
pub mod error;
pub mod info;
pub mod momentum;
pub mod numerics;
pub mod radial;
pub mod state;

pub use config::SolverConfig;
pub use error::{Error, Result};
pub use info::{evaluate, evaluate_m_family, Evaluation, FisherReport};
pub use momentum::{transform, MomentumConfig, MomentumSolution};

pub use radial::{solve_state, ExpectationSet, RadialSolution};
pub use state::QuantumState;
