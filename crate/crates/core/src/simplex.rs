//! Simplices `sigma^(n){a_0 < ... < a_{k-1}}`: every endomorphism of `C_n`
//! whose image lies inside the vertex set. The vertices of the simplex are
//! the constant maps onto each `a_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chain::{Endo, NotationStyle};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Largest carrier enumerated unless a caller raises the cap.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Simplex {
    n: u32,
    vertices: Vec<u32>,
}

impl Simplex {
    pub fn new(n: u32, vertices: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&vertex) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        if let Some(w) = vertices.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::VerticesNotIncreasing { previous: w[0], next: w[1] });
        }
        Ok(Simplex { n, vertices })
    }

    /// The whole endomorphism semiring of `C_n`, seen as the simplex on all
    /// of its constants.
    pub fn full(n: u32) -> Result<Self> {
        Self::new(n, (0..n).collect())
    }

    /// Every simplex of `C_n`, one per nonempty vertex subset, ordered by the
    /// subset's bitmask.
    pub fn all(n: u32) -> Result<Vec<Simplex>> {
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        if n > 24 {
            return Err(Error::ParameterRange {
                what: "chain length for a full sweep",
                value: n as u64,
                min: 1,
                max: 24,
            });
        }
        Ok((1u32..(1 << n))
            .map(|mask| Simplex { n, vertices: (0..n).filter(|v| mask >> v & 1 == 1).collect() })
            .collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Number of vertices `k`.
    pub fn dimension(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, index: usize) -> Result<u32> {
        self.vertices.get(index).copied().ok_or(Error::VertexIndex { index, k: self.dimension() })
    }

    /// Position of `value` in the vertex list.
    pub fn vertex_index(&self, value: u32) -> Option<usize> {
        self.vertices.binary_search(&value).ok()
    }

    pub fn vertex_constant(&self, index: usize) -> Result<Endo> {
        Endo::constant(self.n, self.vertex(index)?)
    }

    pub fn is_full(&self) -> bool {
        self.vertices.len() == self.n as usize
    }

    /// Name by vertex count: vertex, string, triangle, tetrahedron.
    pub fn shape(&self) -> &'static str {
        match self.dimension() {
            1 => "vertex",
            2 => "string",
            3 => "triangle",
            4 => "tetrahedron",
            _ => "simplex",
        }
    }

    fn check_chain(&self, e: &Endo) -> Result<()> {
        if e.n() == self.n {
            Ok(())
        } else {
            Err(Error::ChainMismatch { left: self.n, right: e.n() })
        }
    }

    pub fn contains(&self, e: &Endo) -> Result<bool> {
        self.check_chain(e)?;
        Ok(self.contains_unchecked(e))
    }

    pub(crate) fn contains_unchecked(&self, e: &Endo) -> bool {
        e.n() == self.n && e.values().iter().all(|v| self.vertices.binary_search(v).is_ok())
    }

    /// `binom(n + k - 1, n)`, the number of monotone maps into the vertices.
    pub fn cardinality(&self) -> u128 {
        binomial(self.n as u64 + self.dimension() as u64 - 1, self.n as u64)
    }

    pub fn enumerate(&self) -> Result<EndoSet> {
        self.enumerate_capped(DEFAULT_CAP)
    }

    /// All members in lexicographic order of their value tuples.
    pub fn enumerate_capped(&self, cap: usize) -> Result<EndoSet> {
        let count = self.cardinality();
        if count > cap as u128 {
            return Err(Error::TooLarge { count, cap });
        }
        let n = self.n as usize;
        let k = self.dimension();
        let mut members = Vec::with_capacity(count as usize);
        // nondecreasing index sequences in lexicographic order
        let mut idx = vec![0usize; n];
        loop {
            members.push(Endo::from_raw(idx.iter().map(|&i| self.vertices[i]).collect()));
            let Some(pos) = (0..n).rev().find(|&p| idx[p] + 1 < k) else { break };
            let next = idx[pos] + 1;
            idx[pos..].iter_mut().for_each(|slot| *slot = next);
        }
        debug_assert_eq!(members.len() as u128, count);
        Ok(EndoSet { simplex: self.clone(), members })
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.n == other.n && self.vertices.iter().all(|v| other.vertices.binary_search(v).is_ok())
    }

    /// The face spanned by `vertices`, which must be a nonempty subset of ours.
    pub fn face(&self, vertices: Vec<u32>) -> Result<Simplex> {
        let face = Simplex::new(self.n, vertices)?;
        if face.is_face_of(self) {
            Ok(face)
        } else {
            Err(Error::NotAFace { face: face.vertices, vertices: self.vertices.clone() })
        }
    }

    /// Faces on exactly `dim` vertices, or on every nonempty vertex subset
    /// when `dim` is `None` (by size, then lexicographically).
    pub fn faces(&self, dim: Option<usize>) -> Result<Vec<Simplex>> {
        let k = self.dimension();
        match dim {
            Some(d) if d == 0 || d > k => Err(Error::FaceDimension { dim: d, k }),
            Some(d) => Ok(self.faces_of_size(d)),
            None => Ok((1..=k).flat_map(|d| self.faces_of_size(d)).collect()),
        }
    }

    fn faces_of_size(&self, size: usize) -> Vec<Simplex> {
        let k = self.dimension();
        let mut out = Vec::new();
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            out.push(Simplex { n: self.n, vertices: pick.iter().map(|&i| self.vertices[i]).collect() });
            let Some(pos) = (0..size).rev().find(|&p| pick[p] < k - size + p) else { break };
            pick[pos] += 1;
            for p in pos + 1..size {
                pick[p] = pick[p - 1] + 1;
            }
        }
        out
    }

    /// Faces on strictly fewer vertices.
    pub fn proper_faces(&self) -> Vec<Simplex> {
        (1..self.dimension()).flat_map(|d| self.faces_of_size(d)).collect()
    }

    /// The face without the top vertex. Needs two or more vertices.
    pub fn least_face(&self) -> Result<Simplex> {
        self.require_two_vertices()?;
        Ok(Simplex { n: self.n, vertices: self.vertices[..self.dimension() - 1].to_vec() })
    }

    /// The face without the bottom vertex. Needs two or more vertices.
    pub fn biggest_face(&self) -> Result<Simplex> {
        self.require_two_vertices()?;
        Ok(Simplex { n: self.n, vertices: self.vertices[1..].to_vec() })
    }

    fn require_two_vertices(&self) -> Result<()> {
        if self.dimension() < 2 {
            return Err(Error::Unsupported { reason: format!("{self} has a single vertex and no facets") });
        }
        Ok(())
    }

    /// Members whose image misses some vertex: the union of the proper faces.
    pub fn boundary(&self) -> Result<EndoSet> {
        let k = self.dimension();
        Ok(self.enumerate()?.filter(|e| e.image().len() < k))
    }

    /// Members whose image is the whole vertex set.
    pub fn interior(&self) -> Result<EndoSet> {
        let k = self.dimension();
        Ok(self.enumerate()?.filter(|e| e.image().len() == k))
    }

    /// Avoids both ends `0` and `n-1` of the chain.
    pub fn is_internal(&self) -> bool {
        self.vertices[0] != 0 && *self.vertices.last().unwrap() != self.n - 1
    }

    /// `face` avoids both our extreme vertices.
    pub fn is_internal_face(&self, face: &Simplex) -> Result<bool> {
        if !face.is_face_of(self) {
            return Err(Error::NotAFace { face: face.vertices.clone(), vertices: self.vertices.clone() });
        }
        let lo = self.vertices[0];
        let hi = *self.vertices.last().unwrap();
        Ok(!face.vertices.contains(&lo) && !face.vertices.contains(&hi))
    }

    /// Members fixing the chain element `a`.
    pub fn fixed_subsemiring(&self, a: u32) -> Result<EndoSet> {
        if a >= self.n {
            return Err(Error::OutOfRange { position: 0, value: a, n: self.n });
        }
        Ok(self.enumerate()?.filter(|e| e.apply(a) == a))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(u32::to_string).collect();
        write!(f, "sigma^({}){{{}}}", self.n, vs.join(","))
    }
}

/// A set of members of one simplex, kept sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(into = "EndoSetWire", try_from = "EndoSetWire")]
pub struct EndoSet {
    simplex: Simplex,
    members: Vec<Endo>,
}

impl EndoSet {
    pub fn new(simplex: Simplex, members: impl IntoIterator<Item = Endo>) -> Result<Self> {
        let mut members: Vec<Endo> = members.into_iter().collect();
        for e in &members {
            if !simplex.contains(e)? {
                return Err(Error::NotAMember { endo: e.to_string() });
            }
        }
        members.sort();
        members.dedup();
        Ok(EndoSet { simplex, members })
    }

    pub fn empty(simplex: Simplex) -> Self {
        EndoSet { simplex, members: Vec::new() }
    }

    /// Caller guarantees sorted, deduplicated members of `simplex`.
    pub(crate) fn from_sorted(simplex: Simplex, members: Vec<Endo>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|e| simplex.contains_unchecked(e)));
        EndoSet { simplex, members }
    }

    pub fn simplex(&self) -> &Simplex {
        &self.simplex
    }

    pub fn members(&self) -> &[Endo] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Endo> {
        self.members.iter()
    }

    pub fn contains(&self, e: &Endo) -> bool {
        self.members.binary_search(e).is_ok()
    }

    pub fn index_of(&self, e: &Endo) -> Option<usize> {
        self.members.binary_search(e).ok()
    }

    pub fn filter(&self, mut keep: impl FnMut(&Endo) -> bool) -> EndoSet {
        EndoSet { simplex: self.simplex.clone(), members: self.members.iter().filter(|e| keep(e)).cloned().collect() }
    }

    /// Union, carried by the simplex of `self`.
    pub fn union(&self, other: &EndoSet) -> Result<EndoSet> {
        EndoSet::new(self.simplex.clone(), self.members.iter().chain(other.members.iter()).cloned())
    }

    pub fn difference(&self, other: &EndoSet) -> EndoSet {
        self.filter(|e| !other.contains(e))
    }

    pub fn is_subset(&self, other: &EndoSet) -> bool {
        self.members.iter().all(|e| other.contains(e))
    }

    pub fn into_members(self) -> Vec<Endo> {
        self.members
    }
}

impl<'a> IntoIterator for &'a EndoSet {
    type Item = &'a Endo;
    type IntoIter = std::slice::Iter<'a, Endo>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[derive(Serialize, Deserialize)]
struct EndoSetWire {
    n: u32,
    vertices: Vec<u32>,
    members: Vec<String>,
}

impl From<EndoSet> for EndoSetWire {
    fn from(set: EndoSet) -> Self {
        EndoSetWire {
            n: set.simplex.n,
            members: set.members.iter().map(|e| e.to_notation(NotationStyle::RunLength)).collect(),
            vertices: set.simplex.vertices,
        }
    }
}

impl TryFrom<EndoSetWire> for EndoSet {
    type Error = Error;

    fn try_from(wire: EndoSetWire) -> Result<Self> {
        let simplex = Simplex::new(wire.n, wire.vertices)?;
        let members = wire.members.iter().map(|m| Endo::parse(m, wire.n)).collect::<Result<Vec<_>>>()?;
        EndoSet::new(simplex, members)
    }
}
