//! Exhaustive enumeration of C-trees on a fixed number of nodes and the
//! rooted counts derived from the class representatives.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::blocks::{block_decomposition, is_ctree, skeleton_of};
use super::canon::{canonical_form, canonical_form_colored, CanonicalForm};
use super::graph::{pair_count, MultiGraph, MAX_NODES};
use crate::error::{Error, Result};
use crate::pipeline::VariantFlag;

/// Largest `n` enumerated when double edges are allowed (3^15 candidates).
pub const MAX_NODES_WITH_DOUBLE_EDGES: usize = 6;
/// Largest `n` enumerated for simple graphs (2^21 candidates).
pub const MAX_NODES_SIMPLE: usize = 7;

pub fn node_limit(variant: VariantFlag) -> usize {
    if variant.allow_two_cycles {
        MAX_NODES_WITH_DOUBLE_EDGES
    } else {
        MAX_NODES_SIMPLE
    }
}

pub fn check_limit(n: usize, variant: VariantFlag) -> Result<()> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "node count",
            min: 1,
            got: 0,
        });
    }
    let max = node_limit(variant);
    if n > max {
        return Err(Error::OracleLimit { n, max, variant });
    }
    Ok(())
}

fn decode(n: usize, base: u64, mut index: u64) -> MultiGraph {
    let mut mults = [0u8; MAX_NODES * (MAX_NODES - 1) / 2];
    let pairs = pair_count(n);
    for m in mults.iter_mut().take(pairs) {
        *m = (index % base) as u8;
        index /= base;
    }
    MultiGraph::from_pair_mults(n, &mults[..pairs])
}

/// Counts by marking scheme, all for the same `n` and variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCounts {
    pub ctrees: u64,
    pub planted: u64,
    pub node_rooted: u64,
    pub skeleton_rooted: u64,
    pub bridge_unoriented: u64,
    pub bridge_oriented: u64,
}

/// One representative per isomorphism class of C-trees on `n` nodes.
#[derive(Clone, Debug)]
pub struct Census {
    n: usize,
    variant: VariantFlag,
    classes: BTreeSet<CanonicalForm>,
}

impl Census {
    /// Walks every multiplicity assignment on `n` labelled nodes, keeping
    /// connected C-trees and collapsing them by canonical form.
    pub fn enumerate(n: usize, variant: VariantFlag) -> Result<Self> {
        check_limit(n, variant)?;
        let base: u64 = if variant.allow_two_cycles { 3 } else { 2 };
        let total = base.pow(pair_count(n) as u32);
        let classes = (0..total)
            .into_par_iter()
            .fold(BTreeSet::new, |mut seen, index| {
                let g = decode(n, base, index);
                if is_ctree(&g) {
                    seen.insert(canonical_form(&g));
                }
                seen
            })
            .reduce(BTreeSet::new, |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.extend(b);
                a
            });
        Ok(Self {
            n,
            variant,
            classes,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> VariantFlag {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn forms(&self) -> &BTreeSet<CanonicalForm> {
        &self.classes
    }

    /// Representatives in canonical labelling, ordered by canonical key.
    pub fn representatives(&self) -> impl Iterator<Item = MultiGraph> + '_ {
        self.classes.iter().map(CanonicalForm::to_graph)
    }

    /// `t -> number of classes whose skeleton tree has t nodes`.
    pub fn skeleton_profile(&self) -> BTreeMap<usize, u64> {
        let mut profile = BTreeMap::new();
        for g in self.representatives() {
            let t = skeleton_of(&g, &block_decomposition(&g)).node_count();
            *profile.entry(t).or_insert(0) += 1;
        }
        profile
    }

    /// Sums, over classes, the number of inequivalent markings. `marks`
    /// lists candidate markings of one representative as node colourings.
    fn count_marked(&self, marks: impl Fn(&MultiGraph) -> Vec<Vec<u8>> + Sync) -> u64 {
        self.classes
            .par_iter()
            .map(|form| {
                let g = form.to_graph();
                marks(&g)
                    .iter()
                    .map(|colors| canonical_form_colored(&g, colors))
                    .collect::<BTreeSet<_>>()
                    .len() as u64
            })
            .sum()
    }

    /// C-trees with a marked endnode (degree 0 or 1).
    pub fn count_planted(&self) -> u64 {
        self.count_marked(|g| {
            (0..g.node_count())
                .filter(|&v| g.degree(v) <= 1)
                .map(|v| single_mark(g.node_count(), &[v], 1))
                .collect()
        })
    }

    /// C-trees with one marked node.
    pub fn count_node_rooted(&self) -> u64 {
        self.count_marked(|g| {
            (0..g.node_count())
                .map(|v| single_mark(g.node_count(), &[v], 1))
                .collect()
        })
    }

    /// C-trees with one marked cycle; nodes outside every cycle count as
    /// cycles of length 1.
    pub fn count_skeleton_rooted(&self) -> u64 {
        self.count_marked(|g| {
            let n = g.node_count();
            let blocks = block_decomposition(g);
            let mut on_cycle = vec![false; n];
            let mut marks = Vec::new();
            for cycle in blocks.cycles() {
                for &v in cycle {
                    on_cycle[v] = true;
                }
                marks.push(single_mark(n, cycle, 1));
            }
            for v in (0..n).filter(|&v| !on_cycle[v]) {
                marks.push(single_mark(n, &[v], 1));
            }
            marks
        })
    }

    /// C-trees with one marked bridge, optionally oriented.
    pub fn count_bridge_rooted(&self, oriented: bool) -> u64 {
        self.count_marked(|g| {
            let n = g.node_count();
            let mut marks = Vec::new();
            for (u, v) in block_decomposition(g).bridges() {
                if oriented {
                    let mut forward = vec![0; n];
                    forward[u] = 1;
                    forward[v] = 2;
                    let mut backward = vec![0; n];
                    backward[v] = 1;
                    backward[u] = 2;
                    marks.push(forward);
                    marks.push(backward);
                } else {
                    marks.push(single_mark(n, &[u, v], 1));
                }
            }
            marks
        })
    }

    pub fn counts(&self) -> OracleCounts {
        OracleCounts {
            ctrees: self.len() as u64,
            planted: self.count_planted(),
            node_rooted: self.count_node_rooted(),
            skeleton_rooted: self.count_skeleton_rooted(),
            bridge_unoriented: self.count_bridge_rooted(false),
            bridge_oriented: self.count_bridge_rooted(true),
        }
    }
}

fn single_mark(n: usize, nodes: &[usize], color: u8) -> Vec<u8> {
    let mut colors = vec![0; n];
    for &v in nodes {
        colors[v] = color;
    }
    colors
}

pub fn enumerate_ctrees(n: usize, variant: VariantFlag) -> Result<BTreeSet<CanonicalForm>> {
    Ok(Census::enumerate(n, variant)?.classes)
}

pub fn skeleton_profile(n: usize, variant: VariantFlag) -> Result<BTreeMap<usize, u64>> {
    Ok(Census::enumerate(n, variant)?.skeleton_profile())
}

pub fn count_planted(n: usize, variant: VariantFlag) -> Result<u64> {
    Ok(Census::enumerate(n, variant)?.count_planted())
}

pub fn count_node_rooted(n: usize, variant: VariantFlag) -> Result<u64> {
    Ok(Census::enumerate(n, variant)?.count_node_rooted())
}

pub fn count_skeleton_rooted(n: usize, variant: VariantFlag) -> Result<u64> {
    Ok(Census::enumerate(n, variant)?.count_skeleton_rooted())
}

pub fn count_bridge_rooted(n: usize, variant: VariantFlag, oriented: bool) -> Result<u64> {
    Ok(Census::enumerate(n, variant)?.count_bridge_rooted(oriented))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: VariantFlag = VariantFlag::ALL;
    const SIMPLE: VariantFlag = VariantFlag::NO_TWO_CYCLES;

    #[test]
    fn limits() {
        assert!(matches!(
            Census::enumerate(7, ALL),
            Err(Error::OracleLimit { n: 7, max: 6, .. })
        ));
        assert!(matches!(
            Census::enumerate(8, SIMPLE),
            Err(Error::OracleLimit { n: 8, max: 7, .. })
        ));
        assert!(matches!(
            Census::enumerate(0, ALL),
            Err(Error::TooSmall { .. })
        ));
        let msg = check_limit(9, SIMPLE).unwrap_err().to_string();
        assert!(msg.contains("n <= 7"), "{msg}");
    }

    #[test]
    fn small_counts() {
        let expected = [1, 2, 3, 8, 18];
        for (k, &c) in expected.iter().enumerate() {
            assert_eq!(
                Census::enumerate(k + 1, ALL).unwrap().len(),
                c,
                "n = {}",
                k + 1
            );
        }
        assert_eq!(Census::enumerate(5, SIMPLE).unwrap().len(), 8);
    }

    #[test]
    fn single_node() {
        for v in [ALL, SIMPLE] {
            let c = Census::enumerate(1, v).unwrap().counts();
            assert_eq!(
                c,
                OracleCounts {
                    ctrees: 1,
                    planted: 1,
                    node_rooted: 1,
                    skeleton_rooted: 1,
                    bridge_unoriented: 0,
                    bridge_oriented: 0,
                }
            );
        }
    }

    #[test]
    fn rooted_examples() {
        let c3 = Census::enumerate(3, ALL).unwrap();
        assert_eq!(c3.count_node_rooted(), 6);
        assert_eq!(c3.count_skeleton_rooted(), 5);
        let c4 = Census::enumerate(4, ALL).unwrap();
        assert_eq!(c4.count_node_rooted(), 19);
        assert_eq!(c4.count_skeleton_rooted(), 15);
        assert_eq!(c4.count_bridge_rooted(false), 9);
        assert_eq!(c4.count_bridge_rooted(true), 16);
        let c5 = Census::enumerate(5, ALL).unwrap();
        assert_eq!(c5.count_planted(), 19);
        let c2 = Census::enumerate(2, ALL).unwrap();
        assert_eq!(c2.count_bridge_rooted(false), 1);
        assert_eq!(c2.count_bridge_rooted(true), 1);
    }

    #[test]
    fn profile_at_five() {
        let profile = skeleton_profile(5, ALL).unwrap();
        let expected: BTreeMap<usize, u64> = [(1, 1), (2, 2), (3, 6), (4, 6), (5, 3)].into();
        assert_eq!(profile, expected);
    }

    #[test]
    fn representatives_are_canonical_ctrees() {
        let census = Census::enumerate(4, ALL).unwrap();
        for (g, form) in census.representatives().zip(census.forms()) {
            assert!(is_ctree(&g));
            assert_eq!(&canonical_form(&g), form);
        }
    }
}
