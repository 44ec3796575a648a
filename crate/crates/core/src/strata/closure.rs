//! Exhaustive closure and ideal checks with counterexample witnesses.
//!
//! Pairs are scanned in lexicographic order of `(left, right)`, where each
//! side is ordered like its carrier, and the first failing pair is reported.
//! Parallel and sequential execution therefore report the same witness.

use std::fmt;

use serde::Serialize;

use crate::chain::Endo;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::simplex::{EndoSet, Simplex};

/// One closure property of a candidate subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// `x + y` stays in the candidate.
    Add,
    /// `x * y` stays in the candidate.
    Mul,
    /// `phi * x` stays in the candidate for every ambient `phi`.
    LeftIdeal,
    /// `x * phi` stays in the candidate for every ambient `phi`.
    RightIdeal,
}

impl Law {
    pub const ALL: [Law; 4] = [Law::Add, Law::Mul, Law::LeftIdeal, Law::RightIdeal];

    fn apply(self, left: &Endo, right: &Endo) -> Endo {
        match self {
            Law::Add => left.join(right),
            _ => left.then(right),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Add => "add",
            Law::Mul => "mul",
            Law::LeftIdeal => "left-ideal",
            Law::RightIdeal => "right-ideal",
        })
    }
}

/// A pair whose sum or product escapes the candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub law: Law,
    pub left: Endo,
    pub right: Endo,
    pub result: Endo,
}

impl Witness {
    /// Recomputes the offending operation and confirms the failure against
    /// the given candidate and ambient carriers.
    pub fn reproduces(&self, candidate: &EndoSet, ambient: &EndoSet) -> bool {
        let (left_home, right_home) = match self.law {
            Law::Add | Law::Mul => (candidate, candidate),
            Law::LeftIdeal => (ambient, candidate),
            Law::RightIdeal => (candidate, ambient),
        };
        left_home.contains(&self.left)
            && right_home.contains(&self.right)
            && self.law.apply(&self.left, &self.right) == self.result
            && !candidate.contains(&self.result)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.law == Law::Add { "+" } else { "*" };
        write!(f, "{}: ({}) {op} ({}) = ({}) escapes", self.law, self.left, self.right, self.result)
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Witness", 3)?;
        st.serialize_field("left", &self.left.to_string())?;
        st.serialize_field("right", &self.right.to_string())?;
        st.serialize_field("result", &self.result.to_string())?;
        st.end()
    }
}

/// Verdicts for the four laws; `None` means the law holds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClosureReport {
    pub add: Option<Witness>,
    pub mul: Option<Witness>,
    pub left_ideal: Option<Witness>,
    pub right_ideal: Option<Witness>,
}

impl ClosureReport {
    pub fn add_closed(&self) -> bool {
        self.add.is_none()
    }

    pub fn mul_closed(&self) -> bool {
        self.mul.is_none()
    }

    /// Absorbs multiplication by the ambient simplex on the left.
    pub fn left_ideal(&self) -> bool {
        self.left_ideal.is_none()
    }

    /// Absorbs multiplication by the ambient simplex on the right.
    pub fn right_ideal(&self) -> bool {
        self.right_ideal.is_none()
    }

    pub fn ideal(&self) -> bool {
        self.left_ideal() && self.right_ideal()
    }

    pub fn is_subsemiring(&self) -> bool {
        self.add_closed() && self.mul_closed()
    }

    pub fn witness(&self, law: Law) -> Option<&Witness> {
        match law {
            Law::Add => self.add.as_ref(),
            Law::Mul => self.mul.as_ref(),
            Law::LeftIdeal => self.left_ideal.as_ref(),
            Law::RightIdeal => self.right_ideal.as_ref(),
        }
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &Witness> {
        Law::ALL.into_iter().filter_map(|law| self.witness(law))
    }
}

impl Serialize for ClosureReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeStruct};

        struct Witnesses<'a>(&'a ClosureReport);
        impl Serialize for Witnesses<'_> {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(None)?;
                for w in self.0.witnesses() {
                    map.serialize_entry(&w.law, w)?;
                }
                map.end()
            }
        }

        let mut st = serializer.serialize_struct("ClosureReport", 6)?;
        st.serialize_field("add_closed", &self.add_closed())?;
        st.serialize_field("mul_closed", &self.mul_closed())?;
        st.serialize_field("left_ideal", &self.left_ideal())?;
        st.serialize_field("right_ideal", &self.right_ideal())?;
        st.serialize_field("ideal", &self.ideal())?;
        st.serialize_field("witnesses", &Witnesses(self))?;
        st.end()
    }
}

/// Full report for `candidate` inside `ambient`.
pub fn closure_check(candidate: &EndoSet, ambient: &Simplex) -> Result<ClosureReport> {
    closure_check_with(candidate, ambient, Execution::default())
}

pub fn closure_check_with(candidate: &EndoSet, ambient: &Simplex, exec: Execution) -> Result<ClosureReport> {
    let ambient_set = ambient.enumerate()?;
    closure_check_in(candidate, &ambient_set, exec)
}

/// As [`closure_check`], with the ambient carrier already enumerated.
pub fn closure_check_in(candidate: &EndoSet, ambient: &EndoSet, exec: Execution) -> Result<ClosureReport> {
    ensure_subset(candidate, ambient)?;
    Ok(ClosureReport {
        add: find_violation(Law::Add, candidate, ambient, exec),
        mul: find_violation(Law::Mul, candidate, ambient, exec),
        left_ideal: find_violation(Law::LeftIdeal, candidate, ambient, exec),
        right_ideal: find_violation(Law::RightIdeal, candidate, ambient, exec),
    })
}

pub(crate) fn ensure_subset(candidate: &EndoSet, ambient: &EndoSet) -> Result<()> {
    match candidate.iter().find(|e| !ambient.contains(e)) {
        Some(e) => Err(Error::NotAMember { endo: e.to_string() }),
        None => Ok(()),
    }
}

/// Lexicographically least pair breaking `law`, if any.
///
/// Does not check that `candidate` lies inside `ambient`.
pub fn find_violation(law: Law, candidate: &EndoSet, ambient: &EndoSet, exec: Execution) -> Option<Witness> {
    let (lefts, rights) = match law {
        Law::Add | Law::Mul => (candidate.members(), candidate.members()),
        Law::LeftIdeal => (ambient.members(), candidate.members()),
        Law::RightIdeal => (candidate.members(), ambient.members()),
    };
    let (i, j) =
        exec.find_first_pair(lefts.len(), rights.len(), |i, j| !candidate.contains(&law.apply(&lefts[i], &rights[j])))?;
    Some(Witness { law, left: lefts[i].clone(), right: rights[j].clone(), result: law.apply(&lefts[i], &rights[j]) })
}

/// First pair `(x, y)` of the set with `x * y != y * x`.
pub fn commutativity_violation(set: &EndoSet, exec: Execution) -> Option<(Endo, Endo)> {
    let m = set.members();
    exec.find_first_pair(m.len(), m.len(), |i, j| i < j && m[i].then(&m[j]) != m[j].then(&m[i]))
        .map(|(i, j)| (m[i].clone(), m[j].clone()))
}
