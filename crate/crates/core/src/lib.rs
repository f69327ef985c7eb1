//! Exact computations for positive-energy lowest-weight representations of osp(1|2n, ℝ).

pub mod characters;
pub mod enveloping;
pub mod error;
pub mod rational;
pub mod root_system;
pub mod weights;
pub mod unitarity;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Q;
