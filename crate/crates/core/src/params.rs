//! Sparsity parameters (lambda, k1, k2, l) with validation and gcd normalization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated, gcd-normalized parameter quadruple.
///
/// The quadruple must satisfy `k1 + k2 - lambda >= l` with `lambda >= 1`.
/// Construction divides all four entries by their gcd; the divided tuple
/// describes exactly the same family of sparse geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityParams {
    lambda: u32,
    k1: u32,
    k2: u32,
    l: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl SparsityParams {
    /// Validates and normalizes a raw quadruple.
    pub fn new(lambda: u32, k1: u32, k2: u32, l: u32) -> Result<Self> {
        if lambda < 1 {
            return Err(Error::NonPositiveLambda);
        }
        let g = gcd(gcd(lambda, k1), gcd(k2, l));
        let (lambda, k1, k2, l) = (lambda / g, k1 / g, k2 / g, l / g);
        let sum = k1 as i64 + k2 as i64 - lambda as i64;
        if sum < l as i64 {
            return Err(Error::ParameterConditionViolated { sum, l: l as i64 });
        }
        Ok(SparsityParams { lambda, k1, k2, l })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn k1(&self) -> u32 {
        self.k1
    }

    pub fn k2(&self) -> u32 {
        self.k2
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Pebble budget of a vertex: `k1` for points, `k2` for lines.
    pub fn capacity(&self, is_point: bool) -> u32 {
        if is_point {
            self.k1
        } else {
            self.k2
        }
    }

    pub fn as_tuple(&self) -> (u32, u32, u32, u32) {
        (self.lambda, self.k1, self.k2, self.l)
    }
}

impl std::fmt::Display for SparsityParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.lambda, self.k1, self.k2, self.l)
    }
}
