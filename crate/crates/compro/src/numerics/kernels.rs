//! Row kernels shared by the tape ops and exposed as plain functions.

use crate::error::{Error, Result};
use crate::numerics::Real;

/// Probabilities are floored at this value before taking logs, so masked
/// vocabulary entries cannot produce infinities.
pub const PROB_CLAMP: Real = 1e-12;

/// Additive penalty that stands in for -inf on disallowed logits.
pub const MASK_PENALTY: Real = 1e9;

/// Softmax over the allowed positions; disallowed positions are exactly 0.
///
/// Realized as an additive large-negative penalty before the softmax,
/// followed by explicit zeroing of the disallowed entries and
/// renormalization over the allowed ones.
pub fn masked_softmax(logits: &[Real], allow: &[bool]) -> Result<Vec<Real>> {
    if logits.len() != allow.len() {
        return Err(Error::Shape(format!(
            "masked_softmax: {} logits vs {} mask entries",
            logits.len(),
            allow.len()
        )));
    }
    if !allow.iter().any(|&a| a) {
        return Err(Error::EmptyAttentionRow);
    }
    let mut max = Real::NEG_INFINITY;
    for (&x, &a) in logits.iter().zip(allow) {
        let shifted = if a { x } else { x - MASK_PENALTY };
        if shifted > max {
            max = shifted;
        }
    }
    let mut out: Vec<Real> = logits
        .iter()
        .zip(allow)
        .map(|(&x, &a)| {
            let shifted = if a { x } else { x - MASK_PENALTY };
            (shifted - max).exp()
        })
        .collect();
    for (y, &a) in out.iter_mut().zip(allow) {
        if !a {
            *y = 0.0;
        }
    }
    let sum: Real = out.iter().sum();
    for y in &mut out {
        *y /= sum;
    }
    Ok(out)
}

/// Layer normalization of one row: zero mean, unit variance (up to
/// `eps`), then elementwise gain and bias.
pub fn layer_norm(x: &[Real], gain: &[Real], bias: &[Real], eps: Real) -> Vec<Real> {
    assert_eq!(x.len(), gain.len());
    assert_eq!(x.len(), bias.len());
    assert!(eps > 0.0);
    let n = x.len() as Real;
    let mean = x.iter().sum::<Real>() / n;
    let var = x.iter().map(|&v| (v - mean) * (v - mean)).sum::<Real>() / n;
    let inv_std = 1.0 / (var + eps).sqrt();
    x.iter()
        .zip(gain.iter().zip(bias))
        .map(|(&v, (&g, &b))| (v - mean) * inv_std * g + b)
        .collect()
}

/// Negative log-likelihood of `target` under the distribution `pred`,
/// with the probability floored at [`PROB_CLAMP`].
pub fn cross_entropy(pred: &[Real], target: usize) -> Real {
    assert!(target < pred.len(), "target index out of range");
    -pred[target].max(PROB_CLAMP).ln()
}
