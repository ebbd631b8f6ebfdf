//! Dense numeric substrate: `f64` tensors, a named parameter store, row
//! kernels (masked softmax, layer norm, cross-entropy), a reverse-mode
//! tape, an Adam optimizer, and a finite-difference gradient checker.
//!
//! All arithmetic is 64-bit; the gradient checks in this crate rely on
//! that headroom.

mod adam;
mod gradcheck;
mod kernels;
mod store;
mod tape;
mod tensor;

pub use adam::{clip_global_norm, AdamConfig, AdamState};
pub use gradcheck::grad_check;
pub use kernels::{cross_entropy, layer_norm, masked_softmax, PROB_CLAMP};
pub use store::{GradientMap, ParameterStore};
pub use tape::{NodeId, Tape};
pub use tensor::{Real, Tensor2D};
