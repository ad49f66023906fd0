//! Closed-form genus values and bounds, in exact integer/rational arithmetic.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genus of a graph or surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GenusValue(pub u64);

impl GenusValue {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for GenusValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `1 + (n - 4) 2^(n-3)` for `n >= 3`.
pub fn qn_genus(n: u32) -> Result<GenusValue> {
    if n < 3 {
        return Err(Error::Domain(format!("qn_genus is defined here for n >= 3, got {n}")));
    }
    if n == 3 {
        return Ok(GenusValue(0));
    }
    let pow = 1u64
        .checked_shl(n - 3)
        .filter(|_| n - 3 < 64)
        .ok_or(Error::Overflow("qn_genus"))?;
    (n as u64 - 4)
        .checked_mul(pow)
        .and_then(|x| x.checked_add(1))
        .map(GenusValue)
        .ok_or(Error::Overflow("qn_genus"))
}

/// `(4 - 2v + e) / 4`, the Euler lower bound for a connected bipartite graph
/// (every face has length at least 4). Exact; callers round and clamp.
pub fn bipartite_lower_bound(v: u64, e: u64) -> Ratio<i128> {
    Ratio::new(4 - 2 * v as i128 + e as i128, 4)
}

/// Smallest nonnegative integer not below a rational bound.
pub fn clamp_bound(bound: Ratio<i128>) -> u64 {
    bound.ceil().to_integer().max(0) as u64
}

/// `ceil((m - 2)(n - 2) / 4)` for `2 <= m <= n`.
pub fn kmn_genus(m: u64, n: u64) -> Result<GenusValue> {
    if m < 2 || n < m {
        return Err(Error::Domain(format!("kmn_genus needs 2 <= m <= n, got m={m}, n={n}")));
    }
    Ok(GenusValue(((m - 2) * (n - 2)).div_ceil(4)))
}

/// `ceil((n - 3)(n - 4) / 12)` for `n >= 3`.
pub fn kn_genus(n: u64) -> Result<GenusValue> {
    if n < 3 {
        return Err(Error::Domain(format!("kn_genus needs n >= 3, got {n}")));
    }
    if n == 3 {
        return Ok(GenusValue(0));
    }
    Ok(GenusValue(((n - 3) * (n - 4)).div_ceil(12)))
}
