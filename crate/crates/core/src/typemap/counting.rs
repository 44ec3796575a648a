//! Closed-form counts checked against the enumerations.

pub use crate::combinatorics::catalan;

use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// Number of endomorphisms of `C_n` with a power equal to the constant `a`:
/// `C_a * C_{n-a-1}`.
pub fn nilpotent_count(n: u32, a: u32) -> Result<u128> {
    if n < 2 {
        return Err(Error::ParameterRange { what: "chain length", value: n as u64, min: 2, max: u32::MAX as u64 });
    }
    if a >= n {
        return Err(Error::ParameterRange { what: "nilpotent value", value: a as u64, min: 0, max: n as u64 - 1 });
    }
    Ok(catalan(a as u64).saturating_mul(catalan((n - a - 1) as u64)))
}

/// Number of idempotents of `C_n` whose fixed points are exactly `fixed`:
/// the product of consecutive gaps.
pub fn idempotent_count(n: u32, fixed: &[u32]) -> Result<u128> {
    if n < 3 {
        return Err(Error::ParameterRange { what: "chain length", value: n as u64, min: 3, max: u32::MAX as u64 });
    }
    if fixed.is_empty() || fixed.len() >= n as usize {
        return Err(Error::ParameterRange {
            what: "fixed point count",
            value: fixed.len() as u64,
            min: 1,
            max: n as u64 - 1,
        });
    }
    for w in fixed.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::VerticesNotIncreasing { previous: w[0], next: w[1] });
        }
    }
    if let Some(&v) = fixed.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(gap_product(fixed))
}

/// Size of the set of right identities of `s`.
pub fn right_identity_count(s: &Simplex) -> u128 {
    gap_product(s.vertices())
}

fn gap_product(points: &[u32]) -> u128 {
    points.windows(2).fold(1u128, |acc, w| acc.saturating_mul((w[1] - w[0]) as u128))
}
