//! Inductive thematic saturation (ITS) measurement for LLM-driven initial
//! coding of interview transcripts.
//!
//! The pipeline codes each interview with a chat model, folds the codes into
//! a cumulative unique codebook with a same-meaning judge, and reports the
//! ratio of unique to total codes. Around it sit a code-space probability
//! model, an embedding-based uniqueness check and artifact/plot output.

pub mod cli;
pub mod codebook;
pub mod corpus;
mod error;
pub mod gateway;
pub mod metrics;
pub mod probability;
pub mod reporting;
pub mod similarity;

pub use error::{Error, ExitCode};
