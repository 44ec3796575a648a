//! Partition of a simplex by the block of each member's type.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::Serialize;

use super::{coordinate_simplex, label_of_type, lift_set, right_identities, type_unchecked, BlockLabel};
use crate::error::Result;
use crate::exec::Execution;
use crate::simplex::{EndoSet, Simplex};
use crate::strata::{closure_check_in, ClosureReport};

/// Closure verdicts for one block and whether its contract holds.
///
/// Contracts: nilpotent blocks are subsemirings equal to the lift of the
/// matching nilpotents of the coordinate simplex; idempotent-type blocks are
/// subsemirings; an idempotent-closure block together with the idempotent
/// block it is rooted at is a subsemiring; the right-identity block is a
/// subsemiring equal to the set of right identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCheck {
    pub size: usize,
    pub closure: ClosureReport,
    /// For an idempotent-closure block: the block joined with its idempotent block.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub union_closure: Option<ClosureReport>,
    /// Agreement with the independently built reference set, where one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_reference: Option<bool>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub simplex: Simplex,
    pub size: usize,
    pub blocks: BTreeMap<BlockLabel, EndoSet>,
    pub checks: BTreeMap<BlockLabel, BlockCheck>,
    pub disjoint: bool,
    pub covers: bool,
}

impl PartitionReport {
    pub fn block(&self, label: &BlockLabel) -> Option<&EndoSet> {
        self.blocks.get(label)
    }

    /// Block keys and sizes, in block order.
    pub fn census(&self) -> Vec<(String, usize)> {
        self.blocks.iter().map(|(label, set)| (label.key(), set.len())).collect()
    }

    pub fn checks_pass(&self) -> bool {
        self.disjoint && self.covers && self.checks.values().all(|c| c.passed)
    }

    /// First block whose contract fails.
    pub fn first_failure(&self) -> Option<(&BlockLabel, &BlockCheck)> {
        self.checks.iter().find(|(_, c)| !c.passed)
    }
}

impl Serialize for PartitionReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Census<'a>(&'a PartitionReport);
        impl Serialize for Census<'_> {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.blocks.len()))?;
                for (key, size) in self.0.census() {
                    map.serialize_entry(&key, &size)?;
                }
                map.end()
            }
        }

        struct Block<'a>(&'a EndoSet, &'a BlockCheck);
        impl Serialize for Block<'_> {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let members: Vec<String> = self.0.iter().map(ToString::to_string).collect();
                let mut st = serializer.serialize_struct("Block", 2)?;
                st.serialize_field("members", &members)?;
                st.serialize_field("check", self.1)?;
                st.end()
            }
        }

        struct Blocks<'a>(&'a PartitionReport);
        impl Serialize for Blocks<'_> {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.blocks.len()))?;
                for (label, set) in &self.0.blocks {
                    map.serialize_entry(&label.key(), &Block(set, &self.0.checks[label]))?;
                }
                map.end()
            }
        }

        let mut st = serializer.serialize_struct("PartitionReport", 8)?;
        st.serialize_field("n", &self.simplex.n())?;
        st.serialize_field("vertices", self.simplex.vertices())?;
        st.serialize_field("size", &self.size)?;
        st.serialize_field("disjoint", &self.disjoint)?;
        st.serialize_field("covers", &self.covers)?;
        st.serialize_field("pass", &self.checks_pass())?;
        st.serialize_field("census", &Census(self))?;
        st.serialize_field("blocks", &Blocks(self))?;
        st.end()
    }
}

pub fn partition(s: &Simplex) -> Result<PartitionReport> {
    partition_with(s, Execution::default())
}

pub fn partition_with(s: &Simplex, exec: Execution) -> Result<PartitionReport> {
    let all = s.enumerate()?;
    let members = all.members();
    let labels = exec.map(members.len(), |i| label_of_type(&type_unchecked(s, &members[i]), s.vertices()));

    let mut grouped: BTreeMap<BlockLabel, Vec<_>> = BTreeMap::new();
    for (e, label) in members.iter().zip(labels) {
        grouped.entry(label).or_default().push(e.clone());
    }
    let blocks: BTreeMap<BlockLabel, EndoSet> =
        grouped.into_iter().map(|(label, m)| (label, EndoSet::from_sorted(s.clone(), m))).collect();

    let total: usize = blocks.values().map(EndoSet::len).sum();
    let mut union: Vec<_> = blocks.values().flat_map(|b| b.iter().cloned()).collect();
    union.sort();
    union.dedup();
    let disjoint = union.len() == total;
    let covers = union == members;

    let coordinate = coordinate_simplex(s).enumerate()?;
    let mut checks = BTreeMap::new();
    for (label, block) in &blocks {
        let closure = closure_check_in(block, &all, exec)?;
        let mut union_closure = None;
        let mut matches_reference = None;
        let passed = match label {
            BlockLabel::Nilpotent { index, .. } => {
                let nilpotents = coordinate.filter(|t| t.nilpotency().is_some_and(|z| z.value as usize == *index));
                let reference = lift_set(s, &nilpotents)?;
                matches_reference = Some(reference == *block);
                closure.is_subsemiring() && reference == *block
            }
            BlockLabel::IdempotentType(_) => closure.is_subsemiring(),
            BlockLabel::IdempotentClosure(iota) => {
                let base = BlockLabel::IdempotentType(iota.clone());
                let joined = match blocks.get(&base) {
                    Some(b) => block.union(b)?,
                    None => block.clone(),
                };
                let report = closure_check_in(&joined, &all, exec)?;
                let ok = report.is_subsemiring();
                union_closure = Some(report);
                ok
            }
            BlockLabel::RightIdentity => {
                let reference = right_identities(s)?;
                matches_reference = Some(reference == *block);
                closure.is_subsemiring() && reference == *block
            }
        };
        checks
            .insert(label.clone(), BlockCheck { size: block.len(), closure, union_closure, matches_reference, passed });
    }

    Ok(PartitionReport { simplex: s.clone(), size: members.len(), blocks, checks, disjoint, covers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Endo;
    use crate::typemap::TypeSignature;

    fn s(n: u32, vs: &[u32]) -> Simplex {
        Simplex::new(n, vs.to_vec()).unwrap()
    }

    #[test]
    fn single_vertex() {
        let report = partition(&s(4, &[2])).unwrap();
        assert_eq!(report.census(), [("N[2]".to_string(), 1)]);
        assert!(report.checks_pass());
    }

    #[test]
    fn edge_blocks() {
        let report = partition(&s(4, &[0, 2])).unwrap();
        let keys: Vec<String> = report.census().into_iter().map(|(k, _)| k).collect();
        assert_eq!(keys, ["N[0]", "N[2]", "RI"]);
        let ri = report.block(&BlockLabel::RightIdentity).unwrap();
        assert_eq!(ri.members(), &[Endo::parse("0_2 2_2", 4).unwrap(), Endo::parse("0 2_3", 4).unwrap()]);
        assert!(report.checks_pass());
    }

    #[test]
    fn example_blocks() {
        let ex = s(10, &[0, 2, 3, 5, 8]);
        let report = partition(&ex).unwrap();
        assert_eq!(report.size, 1001);
        assert!(report.disjoint && report.covers);
        assert!(report.checks_pass(), "{:?}", report.first_failure());
        let iota = TypeSignature::new(vec![0, 0, 0, 0, 4]).unwrap();
        let block = report.block(&BlockLabel::IdempotentClosure(iota)).unwrap();
        for text in ["0_4 2_2 8_4", "0_3 2_2 3_3 8_2"] {
            assert!(block.contains(&Endo::parse(text, 10).unwrap()));
        }
        assert_eq!(report.block(&BlockLabel::RightIdentity).unwrap().len(), 12);
    }

    #[test]
    fn closure_block_alone_is_not_additive() {
        // two roots of 2,2,2,5,5,5 whose sum is the idempotent itself
        let report = partition(&Simplex::full(6).unwrap()).unwrap();
        let iota = TypeSignature::new(vec![2, 2, 2, 5, 5, 5]).unwrap();
        let check = &report.checks[&BlockLabel::IdempotentClosure(iota.clone())];
        let w = check.closure.add.as_ref().unwrap();
        assert_eq!(w.result, iota.into_endo());
        assert!(check.union_closure.as_ref().unwrap().is_subsemiring());
        assert!(check.passed && report.checks_pass());
    }

    #[test]
    fn strategies_agree() {
        let tri = s(5, &[0, 2, 4]);
        assert_eq!(
            partition_with(&tri, Execution::Sequential).unwrap(),
            partition_with(&tri, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_value(partition(&s(4, &[0, 2])).unwrap()).unwrap();
        assert_eq!(json["census"], serde_json::json!({"N[0]": 2, "N[2]": 1, "RI": 2}));
        assert_eq!(json["pass"], true);
        assert_eq!(json["blocks"]["RI"]["members"], serde_json::json!(["0_2 2_2", "0 2_3"]));
        assert_eq!(json["blocks"]["N[0]"]["check"]["matches_reference"], true);
    }
}
