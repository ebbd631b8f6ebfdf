//! Row-major 2-D tensor wrapper.

use ndarray::Array2;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Scalar type used throughout the crate.
pub type Real = f64;

/// A dense `rows x cols` matrix of finite reals, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2D(pub Array2<Real>);

impl Tensor2D {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Tensor2D(Array2::zeros((rows, cols)))
    }

    pub fn from_array(a: Array2<Real>) -> Self {
        Tensor2D(a)
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Real>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{}x{} tensor needs {} values, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        let a = Array2::from_shape_vec((rows, cols), data)
            .map_err(|e| Error::Shape(e.to_string()))?;
        Ok(Tensor2D(a))
    }

    /// Gaussian init with standard deviation `sigma`.
    pub fn randn(rng: &mut impl Rng, rows: usize, cols: usize, sigma: Real) -> Self {
        let normal = Normal::new(0.0, sigma).expect("sigma must be finite and positive");
        let data: Vec<Real> = (0..rows * cols).map(|_| normal.sample(rng)).collect();
        Tensor2D(Array2::from_shape_vec((rows, cols), data).expect("shape checked"))
    }

    pub fn identity(n: usize) -> Self {
        Tensor2D(Array2::eye(n))
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Real {
        self.0[[r, c]]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Real) {
        self.0[[r, c]] = v;
    }

    pub fn validate_finite(&self) -> Result<()> {
        if self.0.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::Shape("tensor contains non-finite values".into()))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TensorWire {
    rows: usize,
    cols: usize,
    data: Vec<Real>,
}

impl Serialize for Tensor2D {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = TensorWire {
            rows: self.rows(),
            cols: self.cols(),
            data: self.0.iter().copied().collect(),
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tensor2D {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = TensorWire::deserialize(d)?;
        Tensor2D::from_vec(wire.rows, wire.cols, wire.data)
            .map_err(serde::de::Error::custom)
    }
}
