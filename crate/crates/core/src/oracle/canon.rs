//! Canonical forms of small coloured multigraphs.
//!
//! Nodes are first split into an ordered partition by colour and refined
//! until every node in a cell sees the same multiset of (cell, multiplicity)
//! neighbours. Remaining ties are broken by individualising each candidate
//! node in turn; every discrete partition reached this way is an ordering of
//! the nodes, and the key is the lexicographically smallest multiplicity
//! matrix over those orderings. Cell order depends only on isomorphism-
//! invariant data, so isomorphic inputs produce identical keys.

use super::graph::{pair_count, MultiGraph, MAX_NODES};

/// Isomorphism-class key of a (possibly node-coloured) [`MultiGraph`]:
/// node count, node colours in canonical order, then the upper triangle of
/// the multiplicity matrix in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    key: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.key
    }

    pub fn node_count(&self) -> usize {
        usize::from(self.key[0])
    }

    /// Node colours of the canonical labelling.
    pub fn colors(&self) -> &[u8] {
        &self.key[1..=self.node_count()]
    }

    /// The graph in canonical labelling, colours dropped.
    pub fn to_graph(&self) -> MultiGraph {
        let n = self.node_count();
        MultiGraph::from_pair_mults(n, &self.key[1 + n..])
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &MultiGraph, mut cells: Partition) -> Partition {
    let n = g.node_count();
    let mut cell_of = [0usize; MAX_NODES];
    loop {
        for (k, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = k;
            }
        }
        let mut next = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, u8)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<(usize, u8)> = (0..n)
                        .filter_map(|u| match g.mult(v, u) {
                            0 => None,
                            m => Some((cell_of[u], m)),
                        })
                        .collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Search<'a> {
    g: &'a MultiGraph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf(&mut self, order: Vec<usize>) {
        let n = order.len();
        let mut code = Vec::with_capacity(pair_count(n));
        for a in 0..n {
            for b in a + 1..n {
                code.push(self.g.mult(order[a], order[b]));
            }
        }
        match &self.best {
            Some((best, _)) if *best <= code => {}
            _ => self.best = Some((code, order)),
        }
    }

    fn descend(&mut self, cells: Partition) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().flatten().collect());
            return;
        };
        for &v in &cells[target] {
            let mut split = Vec::with_capacity(cells.len() + 1);
            split.extend_from_slice(&cells[..target]);
            split.push(vec![v]);
            split.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            split.extend_from_slice(&cells[target + 1..]);
            self.descend(split);
        }
    }
}

/// Canonical form together with the ordering that realises it: canonical
/// node `k` is original node `order[k]`.
pub(crate) fn canonical_labeling(g: &MultiGraph, colors: &[u8]) -> (CanonicalForm, Vec<usize>) {
    let n = g.node_count();
    assert_eq!(colors.len(), n, "one colour per node");
    let mut palette: Vec<u8> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Partition = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut search = Search { g, best: None };
    search.descend(cells);
    let (code, order) = search.best.expect("search visits at least one leaf");
    let mut key = Vec::with_capacity(1 + n + code.len());
    key.push(n as u8);
    key.extend(order.iter().map(|&v| colors[v]));
    key.extend_from_slice(&code);
    (CanonicalForm { key }, order)
}

pub fn canonical_form(g: &MultiGraph) -> CanonicalForm {
    canonical_form_colored(g, &vec![0; g.node_count()])
}

/// Canonical form of `g` where isomorphisms must also preserve `colors`.
/// Marked objects (a root, a cycle, a directed edge) are encoded as colours.
pub fn canonical_form_colored(g: &MultiGraph, colors: &[u8]) -> CanonicalForm {
    canonical_labeling(g, colors).0
}
