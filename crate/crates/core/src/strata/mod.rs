//! Layers and discrete neighborhoods of a vertex, their unions, and the
//! closure engine used to check them.
//!
//! The `s`-th layer with respect to vertex `a_m` holds the members sending
//! exactly `s` chain positions to `a_m`; layer `n` is the vertex constant
//! alone. The `t`-neighborhood `DN^t_m` is layers `n-t..=n`.

mod closure;

use serde::Serialize;

pub use closure::{
    closure_check, closure_check_in, closure_check_with, commutativity_violation, find_violation, ClosureReport, Law,
    Witness,
};

use crate::chain::Endo;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::simplex::{EndoSet, Simplex};

fn range_error(what: &'static str, value: u32, min: u32, max: u32) -> Error {
    Error::ParameterRange { what, value: value as u64, min: min as u64, max: max as u64 }
}

pub fn layer(s: &Simplex, m: usize, count: u32) -> Result<EndoSet> {
    let vertex = s.vertex(m)?;
    if count > s.n() {
        return Err(range_error("layer count", count, 0, s.n()));
    }
    Ok(s.enumerate()?.filter(|e| e.count_of(vertex) == count as usize))
}

/// `DN^t_m`: the vertex constant together with layers `n-t..n`.
pub fn neighborhood(s: &Simplex, m: usize, t: u32) -> Result<EndoSet> {
    let vertex = s.vertex(m)?;
    check_radius(s, t)?;
    let floor = (s.n() - t) as usize;
    Ok(s.enumerate()?.filter(|e| e.count_of(vertex) >= floor))
}

/// Union of `DN^t_m` over every vertex.
pub fn union_neighborhoods(s: &Simplex, t: u32) -> Result<EndoSet> {
    check_radius(s, t)?;
    let floor = (s.n() - t) as usize;
    Ok(s.enumerate()?.filter(|e| s.vertices().iter().any(|&v| e.count_of(v) >= floor)))
}

fn check_radius(s: &Simplex, t: u32) -> Result<()> {
    if t == 0 || t > s.n() {
        return Err(range_error("neighborhood radius", t, 1, s.n()));
    }
    Ok(())
}

/// Closure verdicts for one neighborhood `DN^t_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodReport {
    pub radius: u32,
    pub size: usize,
    pub closure: ClosureReport,
    /// First non-commuting pair.
    #[serde(serialize_with = "ser_pair")]
    pub noncommuting: Option<(Endo, Endo)>,
    /// First member with no power equal to the vertex constant.
    #[serde(serialize_with = "ser_opt_endo")]
    pub not_nilpotent: Option<Endo>,
}

impl NeighborhoodReport {
    pub fn is_subsemiring(&self) -> bool {
        self.closure.is_subsemiring()
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting.is_none()
    }

    /// Every member is `a_m`-nilpotent.
    pub fn all_nilpotent(&self) -> bool {
        self.not_nilpotent.is_none()
    }
}

fn ser_pair<S: serde::Serializer>(pair: &Option<(Endo, Endo)>, s: S) -> Result<S::Ok, S::Error> {
    pair.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]).serialize(s)
}

fn ser_opt_endo<S: serde::Serializer>(e: &Option<Endo>, s: S) -> Result<S::Ok, S::Error> {
    e.as_ref().map(Endo::to_string).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DnProperties {
    pub vertex_index: usize,
    pub vertex: u32,
    pub internal: bool,
    pub dn1: NeighborhoodReport,
    /// Only computed for internal simplices.
    pub dn2: Option<NeighborhoodReport>,
}

impl DnProperties {
    /// For internal simplices: `DN^1_m` commutative and `a_m`-nilpotent,
    /// `DN^2_m` a subsemiring. Everywhere: `DN^1_m` a subsemiring.
    pub fn expected_structure_holds(&self) -> bool {
        self.dn1.is_subsemiring()
            && (!self.internal
                || (self.dn1.is_commutative()
                    && self.dn1.all_nilpotent()
                    && self.dn2.as_ref().is_some_and(NeighborhoodReport::is_subsemiring)))
    }
}

pub fn dn_properties(s: &Simplex, m: usize) -> Result<DnProperties> {
    dn_properties_with(s, m, Execution::default())
}

pub fn dn_properties_with(s: &Simplex, m: usize, exec: Execution) -> Result<DnProperties> {
    let vertex = s.vertex(m)?;
    let ambient = s.enumerate()?;
    let report = |t: u32| -> Result<NeighborhoodReport> {
        let floor = s.n().saturating_sub(t) as usize;
        let set = ambient.filter(|e| e.count_of(vertex) >= floor);
        Ok(NeighborhoodReport {
            radius: t,
            size: set.len(),
            closure: closure_check_in(&set, &ambient, exec)?,
            noncommuting: commutativity_violation(&set, exec),
            not_nilpotent: set.iter().find(|e| e.nilpotency().map(|nil| nil.value) != Some(vertex)).cloned(),
        })
    };
    let internal = s.is_internal();
    Ok(DnProperties {
        vertex_index: m,
        vertex,
        internal,
        dn1: report(1)?,
        dn2: if internal { Some(report(2)?) } else { None },
    })
}
