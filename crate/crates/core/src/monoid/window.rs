//! Analysis windows and dense membership tables over them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid;

/// The box `[0,b₁]×…×[0,b_d]`, optionally cut down to points with
/// coordinate sum at most `max_sum`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    pub bounds: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_sum: Option<i64>,
}

impl Window {
    pub fn new(bounds: Vec<i64>) -> Result<Self> {
        if bounds.is_empty() || bounds.iter().any(|&b| b < 1) {
            return Err(Error::Invalid(format!("window bounds must be at least 1, got {bounds:?}")));
        }
        Ok(Self { bounds, max_sum: None })
    }

    pub fn cube(dim: usize, side: i64) -> Result<Self> {
        Self::new(vec![side; dim])
    }

    /// Box of side `sum` cut by `x₁+…+x_d ≤ sum`.
    pub fn simplex(dim: usize, sum: i64) -> Result<Self> {
        Ok(Self::cube(dim, sum)?.with_max_sum(sum))
    }

    pub fn with_max_sum(mut self, max_sum: i64) -> Self {
        self.max_sum = Some(max_sum);
        self
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.bounds.len()
            && x.iter().zip(&self.bounds).all(|(&v, &b)| (0..=b).contains(&v))
            && self.max_sum.is_none_or(|m| x.iter().sum::<i64>() <= m)
    }

    /// Window points in graded lexicographic order.
    pub fn points(&self) -> Vec<Vec<i64>> {
        grid::graded_points(&self.bounds, self.max_sum)
    }
}

/// Dense boolean table over a box, indexed in row-major order.
#[derive(Clone, Debug)]
pub struct BoxTable<T> {
    bounds: Vec<i64>,
    strides: Vec<usize>,
    data: Vec<T>,
}

impl<T: Clone> BoxTable<T> {
    pub fn new(bounds: &[i64], fill: T) -> Self {
        let mut strides = vec![1usize; bounds.len()];
        for i in (0..bounds.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (bounds[i + 1] as usize + 1);
        }
        let size = bounds.iter().map(|&b| b as usize + 1).product();
        Self { bounds: bounds.to_vec(), strides, data: vec![fill; size] }
    }

    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    pub fn in_box(&self, x: &[i64]) -> bool {
        x.iter().zip(&self.bounds).all(|(&v, &b)| (0..=b).contains(&v))
    }

    fn index(&self, x: &[i64]) -> usize {
        x.iter().zip(&self.strides).map(|(&v, &s)| v as usize * s).sum()
    }

    pub fn get(&self, x: &[i64]) -> Option<&T> {
        self.in_box(x).then(|| &self.data[self.index(x)])
    }

    pub fn set(&mut self, x: &[i64], v: T) {
        let i = self.index(x);
        self.data[i] = v;
    }

    /// Box points in lexicographic order; every `y ≤ x` precedes `x`.
    pub fn points(&self) -> Vec<Vec<i64>> {
        grid::box_points(&self.bounds)
    }
}
