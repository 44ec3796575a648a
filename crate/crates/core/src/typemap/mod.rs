//! Types of simplex members and the lifting construction.
//!
//! A member `alpha` of `sigma^(n){a_0, ..., a_{k-1}}` sends every vertex to a
//! vertex, so it has a *type*: the tuple of indices `m_i` with
//! `alpha(a_i) = a_{m_i}`. The type is itself an endomorphism of `C_k`, a
//! member of the *coordinate simplex*. Taking types is a surjective
//! semiring homomorphism, so any subsemiring or one-sided ideal `R` of the
//! coordinate simplex lifts to one of the simplex: all members whose type
//! lies in `R`.

mod counting;
mod identities;
mod partition;

use std::collections::HashSet;
use std::fmt;

pub use counting::{catalan, idempotent_count, nilpotent_count, right_identity_count};
pub use identities::{is_left_identity, is_right_identity, left_identity, right_identities, NoLeftIdentity};
pub use partition::{partition, partition_with, BlockCheck, PartitionReport};

use crate::chain::{Endo, NotationStyle};
use crate::error::{Error, Result};
use crate::simplex::{EndoSet, Simplex};

/// Where a member sends the vertices, as vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeSignature(Endo);

impl TypeSignature {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        Endo::from_values(values).map(TypeSignature)
    }

    pub fn from_endo(e: Endo) -> Self {
        TypeSignature(e)
    }

    pub fn as_endo(&self) -> &Endo {
        &self.0
    }

    pub fn into_endo(self) -> Endo {
        self.0
    }

    /// Number of vertices of the simplex this type belongs to.
    pub fn k(&self) -> usize {
        self.0.values().len()
    }

    pub fn values(&self) -> &[u32] {
        self.0.values()
    }

    /// Comma-separated indices, as used in block labels.
    pub fn tuple(&self) -> String {
        self.0.to_notation(NotationStyle::Tuple)
    }
}

impl fmt::Display for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<<{}>>", self.tuple())
    }
}

impl fmt::Debug for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which block of the partition a member falls in.
///
/// Ordered nilpotent blocks first (by vertex), then idempotent types,
/// idempotent closures, and the right identities last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BlockLabel {
    /// The type has a power equal to the constant `index`; `vertex` is `a_index`.
    Nilpotent { index: usize, vertex: u32 },
    /// The type is an idempotent other than a constant or the identity.
    IdempotentType(TypeSignature),
    /// The type is a non-idempotent root of this idempotent.
    IdempotentClosure(TypeSignature),
    /// The type is the identity: the member fixes every vertex.
    RightIdentity,
}

impl BlockLabel {
    /// Canonical key: `N[a_l]`, `I[sig]`, `IC[sig]` or `RI`.
    pub fn key(&self) -> String {
        match self {
            BlockLabel::Nilpotent { vertex, .. } => format!("N[{vertex}]"),
            BlockLabel::IdempotentType(sig) => format!("I[{}]", sig.tuple()),
            BlockLabel::IdempotentClosure(sig) => format!("IC[{}]", sig.tuple()),
            BlockLabel::RightIdentity => "RI".to_string(),
        }
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

pub fn type_of(s: &Simplex, e: &Endo) -> Result<TypeSignature> {
    if !s.contains(e)? {
        return Err(Error::NotAMember { endo: e.to_string() });
    }
    Ok(type_unchecked(s, e))
}

pub(crate) fn type_unchecked(s: &Simplex, e: &Endo) -> TypeSignature {
    let values = s
        .vertices()
        .iter()
        .map(|&a| s.vertex_index(e.apply(a)).expect("member maps vertices to vertices") as u32)
        .collect();
    TypeSignature(Endo::from_raw(values))
}

/// The full simplex on `k` points, home of every type.
pub fn coordinate_simplex(s: &Simplex) -> Simplex {
    Simplex::full(s.dimension() as u32).expect("a simplex has at least one vertex")
}

/// All members whose type lies in `types`.
pub fn lift(s: &Simplex, types: &[TypeSignature]) -> Result<EndoSet> {
    let k = s.dimension();
    if let Some(bad) = types.iter().find(|t| t.k() != k) {
        return Err(Error::ChainMismatch { left: k as u32, right: bad.k() as u32 });
    }
    let wanted: HashSet<&TypeSignature> = types.iter().collect();
    Ok(s.enumerate()?.filter(|e| wanted.contains(&type_unchecked(s, e))))
}

/// [`lift`] for a subset of the coordinate simplex.
pub fn lift_set(s: &Simplex, types: &EndoSet) -> Result<EndoSet> {
    if types.simplex().n() as usize != s.dimension() {
        return Err(Error::ChainMismatch { left: s.dimension() as u32, right: types.simplex().n() });
    }
    Ok(s.enumerate()?.filter(|e| types.contains(type_unchecked(s, e).as_endo())))
}

/// Block of a type of a `k`-vertex simplex with vertices `vertices`.
pub(crate) fn label_of_type(sig: &TypeSignature, vertices: &[u32]) -> BlockLabel {
    let phi = sig.as_endo();
    let (idempotent, exponent) = phi.eventual_idempotent();
    if let Some(index) = idempotent.constant_value() {
        return BlockLabel::Nilpotent { index: index as usize, vertex: vertices[index as usize] };
    }
    if phi.is_identity() {
        return BlockLabel::RightIdentity;
    }
    assert!(!idempotent.is_identity(), "{phi:?} would be a proper root of the identity");
    if exponent == 1 {
        BlockLabel::IdempotentType(sig.clone())
    } else {
        BlockLabel::IdempotentClosure(TypeSignature(idempotent))
    }
}

pub fn classify(s: &Simplex, e: &Endo) -> Result<BlockLabel> {
    Ok(label_of_type(&type_of(s, e)?, s.vertices()))
}
