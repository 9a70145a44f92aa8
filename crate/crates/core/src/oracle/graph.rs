use std::fmt;

/// Largest node count a [`MultiGraph`] can hold.
pub const MAX_NODES: usize = 8;
const MAX_PAIRS: usize = MAX_NODES * (MAX_NODES - 1) / 2;

/// Loopless undirected graph on at most [`MAX_NODES`] nodes whose edge
/// multiplicities are 0, 1 or 2. A multiplicity of 2 is a cycle of length 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiGraph {
    n: u8,
    mult: [u8; MAX_PAIRS],
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl MultiGraph {
    /// Edgeless graph on `n` nodes. Panics unless `1 <= n <= MAX_NODES`.
    pub fn new(n: usize) -> Self {
        assert!(
            (1..=MAX_NODES).contains(&n),
            "node count {n} outside 1..={MAX_NODES}"
        );
        Self {
            n: n as u8,
            mult: [0; MAX_PAIRS],
        }
    }

    /// Each listed pair adds one to the multiplicity of that edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            let m = g.mult(u, v);
            g.set_mult(u, v, m + 1);
        }
        g
    }

    /// Multiplicities in upper-triangular row-major order
    /// `(0,1), (0,2), .., (1,2), ..`.
    pub(crate) fn from_pair_mults(n: usize, mults: &[u8]) -> Self {
        let mut g = Self::new(n);
        assert_eq!(mults.len(), pair_count(n));
        assert!(mults.iter().all(|&m| m <= 2), "multiplicity above 2");
        g.mult[..mults.len()].copy_from_slice(mults);
        g
    }

    pub(crate) fn pair_mults(&self) -> &[u8] {
        &self.mult[..pair_count(self.node_count())]
    }

    pub fn node_count(&self) -> usize {
        usize::from(self.n)
    }

    pub fn mult(&self, u: usize, v: usize) -> u8 {
        match u.cmp(&v) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => self.mult[pair_index(self.node_count(), u, v)],
            std::cmp::Ordering::Greater => self.mult[pair_index(self.node_count(), v, u)],
        }
    }

    /// Panics on loops and multiplicities above 2.
    pub fn set_mult(&mut self, u: usize, v: usize, m: u8) {
        assert!(u != v, "loops are not allowed");
        assert!(m <= 2, "multiplicity {m} above 2");
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let idx = pair_index(self.node_count(), a, b);
        self.mult[idx] = m;
    }

    /// Degree counting edge multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        (0..self.node_count())
            .map(|u| usize::from(self.mult(v, u)))
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        self.pair_mults().iter().map(|&m| usize::from(m)).sum()
    }

    /// `(u, v, multiplicity)` for every adjacent pair with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        let n = self.node_count();
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| (u, v, self.mult(u, v)))
            .filter(|&(_, _, m)| m > 0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        let mut parent = [0usize; MAX_NODES];
        for (v, p) in parent.iter_mut().enumerate().take(n) {
            *p = v;
        }
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut components = n;
        for (u, v, _) in self.pairs() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                components -= 1;
            }
        }
        components == 1
    }

    /// Relabels so that new node `k` is old node `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let n = self.node_count();
        assert_eq!(order.len(), n);
        let mut g = Self::new(n);
        for a in 0..n {
            for b in a + 1..n {
                let m = self.mult(order[a], order[b]);
                if m > 0 {
                    g.set_mult(a, b, m);
                }
            }
        }
        g
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}, [", self.n)?;
        for (k, (u, v, m)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
            if m == 2 {
                f.write_str("x2")?;
            }
        }
        f.write_str("])")
    }
}
