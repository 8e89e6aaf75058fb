//! Hybrid grey interval relation multi-attribute decision making.
//!
//! Plans are scored on attributes whose values are interval grey numbers
//! `[lo, hi]`. The pipeline:
//!
//! 1. [`model::normalize`] the raw matrix per attribute kind (cost / effect);
//! 2. [`weighting::compute_weights`]: subjective interval weights from the
//!    experts, objective weights by deviation maximization and by entropy,
//!    combined multiplicatively into final interval weights;
//! 3. [`ranking::rank_plans`]: grey TOPSIS, grey incidence and max-entropy
//!    comprehensive incidence scores, fused by a weighted Borda count.
//!
//! [`pipeline::run`] drives all three from a JSON problem file and returns a
//! [`Report`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod interval;
pub mod matrix;
pub mod model;
pub mod pipeline;
pub mod ranking;
pub mod report;
pub mod weighting;

pub use error::{Error, Result};
pub use interval::GreyInterval;
pub use matrix::Matrix;
pub use model::{Attribute, AttributeKind, DecisionProblem, MethodParams, NormalizedMatrix, ProblemFile};
pub use pipeline::{execute, run, whatif, Input, Override, RunConfig, RunOptions};
pub use ranking::{Method, Ranking, RankingResult};
pub use report::{Report, Stage};
pub use weighting::{IntervalWeightVector, WeightSet, WeightVector};
