//! Exact computation of graph pebbling parameters: the stacking number, the
//! clearing number and the classical pebbling number, together with
//! machine-checkable bound certificates and constructive move-sequence
//! witnesses for the families with known closed forms.



pub mod bounds;
pub mod config;
pub mod solver;

pub mod engine;
mod error;
pub mod graph;
pub mod graph6;


pub use config::{enumerate_almost_stacked, enumerate_configs, Configuration, VertexMap};
pub use engine::{Engine, EngineOptions, LabeledRun, Move, MoveSequence};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, OddInvariants};
pub use solver::{Goal, SolveResult};

