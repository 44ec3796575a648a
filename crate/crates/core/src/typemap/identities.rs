//! Right identities of a simplex, and why it has no left identity.

use std::fmt;

use serde::Serialize;

use crate::chain::Endo;
use crate::error::{Error, Result};
use crate::simplex::{EndoSet, Simplex};

/// Members fixing every vertex. These are exactly the right identities.
pub fn right_identities(s: &Simplex) -> Result<EndoSet> {
    Ok(s.enumerate()?.filter(|e| s.vertices().iter().all(|&a| e.apply(a) == a)))
}

/// `beta * alpha = beta` for every `beta` of `ambient`, by direct check.
pub fn is_right_identity(alpha: &Endo, ambient: &EndoSet) -> bool {
    ambient.iter().all(|beta| beta.then(alpha) == *beta)
}

/// `alpha * beta = beta` for every `beta` of `ambient`, by direct check.
pub fn is_left_identity(alpha: &Endo, ambient: &EndoSet) -> bool {
    ambient.iter().all(|beta| alpha.then(beta) == *beta)
}

/// Evidence that a simplex has no left identity.
///
/// A left identity `omega` would equal every right identity `epsilon`,
/// since `omega = omega * epsilon = epsilon`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NoLeftIdentity {
    /// Two different right identities, which a left identity would both equal.
    TwoRightIdentities {
        #[serde(serialize_with = "ser_endo")]
        first: Endo,
        #[serde(serialize_with = "ser_endo")]
        second: Endo,
    },
    /// The unique right identity fails to act as a left identity on `alpha`.
    Separator {
        #[serde(serialize_with = "ser_endo")]
        right_identity: Endo,
        #[serde(serialize_with = "ser_endo")]
        alpha: Endo,
        #[serde(serialize_with = "ser_endo")]
        product: Endo,
    },
}

fn ser_endo<S: serde::Serializer>(e: &Endo, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

impl NoLeftIdentity {
    /// Re-checks the evidence against the members of `s`.
    pub fn holds_in(&self, ambient: &EndoSet) -> bool {
        match self {
            NoLeftIdentity::TwoRightIdentities { first, second } => {
                first != second && is_right_identity(first, ambient) && is_right_identity(second, ambient)
            }
            NoLeftIdentity::Separator { right_identity, alpha, product } => {
                is_right_identity(right_identity, ambient)
                    && ambient.iter().filter(|e| is_right_identity(e, ambient)).count() == 1
                    && ambient.contains(alpha)
                    && right_identity.then(alpha) == *product
                    && product != alpha
            }
        }
    }
}

impl fmt::Display for NoLeftIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoLeftIdentity::TwoRightIdentities { first, second } => {
                write!(f, "distinct right identities {first} and {second}")
            }
            NoLeftIdentity::Separator { right_identity, alpha, product } => {
                write!(f, "({right_identity}) * ({alpha}) = ({product}) differs from ({alpha})")
            }
        }
    }
}

/// Witness that `s` has no left identity.
///
/// Fails for a single vertex and for the full simplex, where the unique
/// right identity is two-sided.
pub fn left_identity(s: &Simplex) -> Result<NoLeftIdentity> {
    if s.dimension() < 2 {
        return Err(Error::Unsupported { reason: format!("{s} is trivial; its constant is a two-sided identity") });
    }
    let rights = right_identities(s)?;
    if let [first, second, ..] = rights.members() {
        return Ok(NoLeftIdentity::TwoRightIdentities { first: first.clone(), second: second.clone() });
    }
    let epsilon = rights.members()[0].clone();
    let Some(x) = (0..s.n()).find(|&x| epsilon.apply(x) != x) else {
        return Err(Error::Unsupported { reason: format!("the identity of {s} is two-sided") });
    };
    // threshold map sending x and epsilon(x) to different vertices
    let cut = x.max(epsilon.apply(x));
    let (low, high) = (s.vertices()[0], s.vertices()[1]);
    let alpha = Endo::from_raw((0..s.n()).map(|y| if y < cut { low } else { high }).collect());
    let product = epsilon.then(&alpha);
    Ok(NoLeftIdentity::Separator { right_identity: epsilon, alpha, product })
}
