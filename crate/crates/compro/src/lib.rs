//! Combinatorial prompt steering of a frozen language model for
//! controllable caption generation.
//!
//! A small autoregressive language model is pretrained on a synthetic
//! caption corpus and then frozen. A trainable prompt generation network
//! (PGN) maps region features and learnable control variables through a
//! masked Transformer encoder into a sequence of continuous prompt
//! vectors. Prepending those vectors to the language model steers
//! generation toward the requested content order, length range, and
//! tense, without touching a single language-model weight.
//!
//! The crate is organized along the pipeline:
//!
//! - [`numerics`]: dense `f64` tensors plus a reverse-mode tape used by
//!   every differentiable component, with a finite-difference checker.
//! - [`scene`]: synthetic scenes, control signals, and a templated
//!   grammar that renders controllable ground-truth captions.
//! - [`lm`]: a decoder-only language model with continuous-prefix
//!   support, pretraining, and checkpointing.
//! - [`pgn`]: prompt assembly — input layouts, signal-specific attention
//!   masks, the encoder, and prompt extraction.
//! - [`trainer`]: cross-entropy training of the PGN against the frozen
//!   language model.
//! - [`decoder`]: beam search with probability decay and a hard length
//!   cap.
//! - [`metrics`]: alignment, length, tense, and BLEU-4 scoring.
//! - [`cli`]: configuration and the `compro` command-line entry points.

pub mod cli;
pub mod decoder;
pub mod error;
pub mod lm;
pub mod metrics;
pub mod numerics;
pub mod pgn;
pub mod rng;
pub mod scene;
pub mod trainer;

pub use error::{Error, Result};
pub use numerics::{Real, Tensor2D};
