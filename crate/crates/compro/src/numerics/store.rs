//! Named parameter store with per-entry trainability and a content digest.

use std::collections::BTreeMap;

use ndarray::Array2;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::numerics::{Real, Tensor2D};

/// Gradients collected from one backward pass, keyed by parameter name.
pub type GradientMap = BTreeMap<String, Array2<Real>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Param {
    pub tensor: Tensor2D,
    pub trainable: bool,
}

/// Uniquely named parameters in deterministic (sorted) order.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ParameterStore {
    params: BTreeMap<String, Param>,
}

impl ParameterStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: &str, tensor: Tensor2D, trainable: bool) -> Result<()> {
        if self.params.contains_key(name) {
            return Err(Error::DuplicateParam(name.to_string()));
        }
        self.params.insert(name.to_string(), Param { tensor, trainable });
        Ok(())
    }

    pub fn tensor(&self, name: &str) -> Result<&Tensor2D> {
        self.params
            .get(name)
            .map(|p| &p.tensor)
            .ok_or_else(|| Error::UnknownParam(name.to_string()))
    }

    pub fn tensor_mut(&mut self, name: &str) -> Result<&mut Tensor2D> {
        self.params
            .get_mut(name)
            .map(|p| &mut p.tensor)
            .ok_or_else(|| Error::UnknownParam(name.to_string()))
    }

    pub fn is_trainable(&self, name: &str) -> bool {
        self.params.get(name).map(|p| p.trainable).unwrap_or(false)
    }

    pub fn set_trainable(&mut self, name: &str, trainable: bool) -> Result<()> {
        self.params
            .get_mut(name)
            .map(|p| p.trainable = trainable)
            .ok_or_else(|| Error::UnknownParam(name.to_string()))
    }

    pub fn freeze_all(&mut self) {
        for p in self.params.values_mut() {
            p.trainable = false;
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.params.keys().map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Param)> {
        self.params.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Number of scalar values in trainable entries.
    pub fn count_trainable(&self) -> usize {
        self.params
            .values()
            .filter(|p| p.trainable)
            .map(|p| p.tensor.len())
            .sum()
    }

    /// Deterministic SHA-256 over names, shapes, and exact value bits.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for (name, p) in &self.params {
            h.update((name.len() as u64).to_le_bytes());
            h.update(name.as_bytes());
            h.update((p.tensor.rows() as u64).to_le_bytes());
            h.update((p.tensor.cols() as u64).to_le_bytes());
            for &v in p.tensor.0.iter() {
                h.update(v.to_bits().to_le_bytes());
            }
        }
        let out = h.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store_with(name: &str, vals: Vec<Real>) -> ParameterStore {
        let mut s = ParameterStore::new();
        s.insert(name, Tensor2D::from_vec(1, vals.len(), vals).unwrap(), true)
            .unwrap();
        s
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut s = store_with("w", vec![1.0]);
        let err = s.insert("w", Tensor2D::zeros(1, 1), true);
        assert!(matches!(err, Err(Error::DuplicateParam(_))));
    }

    #[test]
    fn digest_is_stable_and_bit_sensitive() {
        let s = store_with("w", vec![1.0, 2.0]);
        let d1 = s.digest();
        assert_eq!(d1, store_with("w", vec![1.0, 2.0]).digest());
        // A 1e-12 perturbation must change the digest.
        let s2 = store_with("w", vec![1.0 + 1e-12, 2.0]);
        assert_ne!(d1, s2.digest());
    }

    #[test]
    fn trainable_count_sums_elements() {
        let mut s = ParameterStore::new();
        s.insert("a", Tensor2D::zeros(2, 3), true).unwrap();
        s.insert("b", Tensor2D::zeros(4, 4), false).unwrap();
        s.insert("c", Tensor2D::zeros(1, 5), true).unwrap();
        assert_eq!(s.count_trainable(), 6 + 5);
        s.freeze_all();
        assert_eq!(s.count_trainable(), 0);
    }
}
