//! Biconnected components of a multigraph and the C-tree predicate.
//!
//! Parallel edges are kept as distinct edges, so a double edge is a
//! two-node block with two edges, i.e. a cycle of length 2.

use super::graph::MultiGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// A single edge whose removal disconnects the graph.
    Bridge,
    /// A cycle through this many nodes (2 for a double edge).
    Cycle(usize),
    /// Any other biconnected block; never present in a C-tree.
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted node list.
    pub nodes: Vec<usize>,
    pub edge_count: usize,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Sorted list of articulation nodes.
    pub cut_nodes: Vec<usize>,
}

impl BlockDecomposition {
    pub fn bridges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks
            .iter()
            .filter(|b| b.kind == BlockKind::Bridge)
            .map(|b| (b.nodes[0], b.nodes[1]))
    }

    pub fn cycles(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.blocks
            .iter()
            .filter(|b| matches!(b.kind, BlockKind::Cycle(_)))
            .map(|b| b.nodes.as_slice())
    }
}

struct Tarjan<'a> {
    adj: Vec<Vec<(usize, usize)>>,
    edges: &'a [(usize, usize)],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    is_cut: Vec<bool>,
    blocks: Vec<Block>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent_edge: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for k in 0..self.adj[u].len() {
            let (w, id) = self.adj[u][k];
            if Some(id) == parent_edge {
                continue;
            }
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push(id);
                self.visit(w, Some(id));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent_edge.is_some() {
                        self.is_cut[u] = true;
                    }
                    self.pop_block(id);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push(id);
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        if parent_edge.is_none() && children > 1 {
            self.is_cut[u] = true;
        }
    }

    fn pop_block(&mut self, until: usize) {
        let mut nodes = Vec::new();
        let mut edge_count = 0;
        while let Some(id) = self.stack.pop() {
            let (a, b) = self.edges[id];
            nodes.push(a);
            nodes.push(b);
            edge_count += 1;
            if id == until {
                break;
            }
        }
        nodes.sort_unstable();
        nodes.dedup();
        // a biconnected block with as many edges as nodes is a cycle
        let kind = if edge_count == 1 {
            BlockKind::Bridge
        } else if edge_count == nodes.len() {
            BlockKind::Cycle(nodes.len())
        } else {
            BlockKind::Other
        };
        self.blocks.push(Block {
            nodes,
            edge_count,
            kind,
        });
    }
}

pub fn block_decomposition(g: &MultiGraph) -> BlockDecomposition {
    let n = g.node_count();
    let mut edges = Vec::new();
    for (u, v, m) in g.pairs() {
        for _ in 0..m {
            edges.push((u, v));
        }
    }
    let mut adj = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut t = Tarjan {
        adj,
        edges: &edges,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        is_cut: vec![false; n],
        blocks: Vec::new(),
    };
    for v in 0..n {
        if t.disc[v] == 0 {
            t.visit(v, None);
        }
    }
    let cut_nodes = (0..n).filter(|&v| t.is_cut[v]).collect();
    BlockDecomposition {
        blocks: t.blocks,
        cut_nodes,
    }
}

fn has_ctree_blocks(blocks: &BlockDecomposition) -> bool {
    let mut in_cycle = [false; super::graph::MAX_NODES];
    for block in &blocks.blocks {
        match block.kind {
            BlockKind::Bridge => {}
            BlockKind::Other => return false,
            BlockKind::Cycle(_) => {
                for &v in &block.nodes {
                    if in_cycle[v] {
                        return false;
                    }
                    in_cycle[v] = true;
                }
            }
        }
    }
    true
}

/// Connected, every block a bridge or a cycle, and no node on two cycles.
pub fn is_ctree(g: &MultiGraph) -> bool {
    if !g.is_connected() {
        return false;
    }
    // Early out: the cycle rank of a C-tree counts its cycles, which are
    // node-disjoint with at least two nodes each.
    let n = g.node_count();
    if g.edge_count() + 1 > n + n / 2 {
        return false;
    }
    has_ctree_blocks(&block_decomposition(g))
}

/// Contracts every cycle of a C-tree to one node. Nodes of the result are
/// numbered by the smallest original node they contain; the edges are the
/// bridges.
pub fn skeleton(g: &MultiGraph) -> Result<MultiGraph> {
    if !g.is_connected() {
        return Err(Error::NotCTree);
    }
    let blocks = block_decomposition(g);
    if !has_ctree_blocks(&blocks) {
        return Err(Error::NotCTree);
    }
    Ok(skeleton_of(g, &blocks))
}

pub(crate) fn skeleton_of(g: &MultiGraph, blocks: &BlockDecomposition) -> MultiGraph {
    let n = g.node_count();
    let mut cycle_of = vec![None; n];
    for (k, cycle) in blocks.cycles().enumerate() {
        for &v in cycle {
            cycle_of[v] = Some(k);
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if comp[v] != usize::MAX {
            continue;
        }
        match cycle_of[v] {
            Some(k) => {
                for u in (0..n).filter(|&u| cycle_of[u] == Some(k)) {
                    comp[u] = next;
                }
            }
            None => comp[v] = next,
        }
        next += 1;
    }
    let mut out = MultiGraph::new(next);
    for (u, v) in blocks.bridges() {
        out.set_mult(comp[u], comp[v], 1);
    }
    out
}
