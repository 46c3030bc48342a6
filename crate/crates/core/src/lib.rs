//! Latent world models and value-guided sampling MPC for toy 2D contact tasks.
//!
//! The crate is organized around the experiment pipeline:
//!
//! - [`diffcore`] — reverse-mode autodiff tape, layers, distribution math, Adam.
//! - [`env`] — three seeded 2D contact environments (wall / ball / arch).
//! - [`dataset`] — random-delta offline data collection and binary storage.
//! - [`worldmodel`] — recurrent latent world model with value and termination heads.
//! - [`planner`] — CEM-based sampling MPC over latent rollouts.
//! - [`analysis`] — variance-bound verification and interpretability exports.

pub mod analysis;
pub mod dataset;
pub mod diffcore;
pub mod env;
pub mod planner;
pub mod util;
pub mod worldmodel;
