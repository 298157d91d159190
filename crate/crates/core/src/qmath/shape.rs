use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Local dimensions of the factors of a composite system.
///
/// Factor 0 is the leftmost tensor factor and carries the most significant
/// index block: a basis index `i` decomposes as
/// `i = Σ_k i_k · stride_k` with `stride_k = Π_{m>k} dims[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SubsystemShape {
    dims: Vec<usize>,
}

impl SubsystemShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Shape("subsystem shape needs at least one factor".into()));
        }
        if let Some((k, d)) = dims.iter().enumerate().find(|(_, &d)| d < 2) {
            return Err(Error::Shape(format!("factor {k} has local dimension {d} < 2")));
        }
        Ok(Self { dims })
    }

    /// `n` copies of a `d`-dimensional factor.
    pub fn uniform(n: usize, d: usize) -> Result<Self> {
        Self::new(vec![d; n])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for k in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.dims[k + 1];
        }
        strides
    }

    /// Shape with extra factors appended on the right.
    pub fn extended(&self, extra: &[usize]) -> Result<Self> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(extra);
        Self::new(dims)
    }

    /// Per-factor digits of a flat basis index.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            out[k] = index % self.dims[k];
            index /= self.dims[k];
        }
        out
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&digit, &d)| acc * d + digit)
    }

    pub(crate) fn check_operator(&self, rows: usize, cols: usize) -> Result<()> {
        let total = self.total();
        if rows != total || cols != total {
            return Err(Error::Shape(format!(
                "operator is {rows}x{cols} but shape {:?} has total dimension {total}",
                self.dims
            )));
        }
        Ok(())
    }

    pub(crate) fn check_factor(&self, k: usize) -> Result<()> {
        if k >= self.dims.len() {
            return Err(Error::Argument(format!(
                "factor index {k} out of range for {} factors",
                self.dims.len()
            )));
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for SubsystemShape {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        Self::new(dims)
    }
}

impl From<SubsystemShape> for Vec<usize> {
    fn from(shape: SubsystemShape) -> Self {
        shape.dims
    }
}
