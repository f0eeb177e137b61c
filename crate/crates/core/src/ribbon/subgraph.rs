use std::fmt;

use super::{RibbonGraph, Sign};
use crate::union_find::UnionFind;

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger(i64);

impl HalfInteger {
    pub fn from_halves(halves: i64) -> Self {
        HalfInteger(halves)
    }

    pub fn halves(self) -> i64 {
        self.0
    }

    /// The value if it is a whole number.
    pub fn as_integer(self) -> Option<i64> {
        (self.0 % 2 == 0).then_some(self.0 / 2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// Counting data of a spanning subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubgraphStats {
    pub v: usize,
    pub e: usize,
    /// connected components
    pub k: usize,
    /// rank, `v - k`
    pub r: usize,
    /// nullity, `e - r`
    pub n: usize,
    /// boundary components
    pub bc: usize,
    pub e_minus: usize,
    pub e_minus_complement: usize,
    /// `(e_minus - e_minus_complement) / 2`
    pub s: HalfInteger,
}

impl SubgraphStats {
    /// Exponent of `z` in the Bollobás-Riordan term, `k - bc + n`.
    pub fn z_exponent(&self) -> i64 {
        self.k as i64 - self.bc as i64 + self.n as i64
    }

    /// Euler characteristic `v - e + bc` of the closed surface.
    pub fn euler_characteristic(&self) -> i64 {
        self.v as i64 - self.e as i64 + self.bc as i64
    }
}

/// All vertices of a ribbon graph together with a subset of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningSubgraph<'g> {
    graph: &'g RibbonGraph,
    included: Vec<bool>,
}

impl RibbonGraph {
    /// The spanning subgraph with the given edge mask. Panics on a length mismatch.
    pub fn subgraph(&self, included: Vec<bool>) -> SpanningSubgraph<'_> {
        assert_eq!(included.len(), self.edge_count(), "edge mask length");
        SpanningSubgraph { graph: self, included }
    }

    /// Subgraph number `index`, with edge 0 as the most significant bit.
    pub fn subgraph_from_index(&self, index: u64) -> SpanningSubgraph<'_> {
        let e = self.edge_count();
        self.subgraph((0..e).map(|i| index >> (e - 1 - i) & 1 == 1).collect())
    }

    pub fn subgraph_from_edges(&self, edges: &[usize]) -> SpanningSubgraph<'_> {
        let mut mask = vec![false; self.edge_count()];
        for &i in edges {
            mask[i] = true;
        }
        self.subgraph(mask)
    }

    pub fn empty_subgraph(&self) -> SpanningSubgraph<'_> {
        self.subgraph(vec![false; self.edge_count()])
    }

    pub fn full_subgraph(&self) -> SpanningSubgraph<'_> {
        self.subgraph(vec![true; self.edge_count()])
    }
}

impl<'g> SpanningSubgraph<'g> {
    pub fn graph(&self) -> &'g RibbonGraph {
        self.graph
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.included[edge]
    }

    /// Indices of the included edges.
    pub fn edges(&self) -> Vec<usize> {
        (0..self.included.len()).filter(|&i| self.included[i]).collect()
    }

    pub fn index(&self) -> u64 {
        self.included.iter().fold(0, |acc, &b| (acc << 1) | u64::from(b))
    }

    pub fn edge_count(&self) -> usize {
        self.included.iter().filter(|&&b| b).count()
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.graph.vertex_count());
        for i in self.edges() {
            let [a, b] = self.graph.core_edges()[i];
            uf.union(a, b);
        }
        uf.sets()
    }

    /// Number of boundary circles of the ribbon surface.
    ///
    /// Every included half-edge attachment has two corners, `+` on its
    /// counterclockwise side and `-` on its clockwise side. Boundary runs
    /// along the vertex disc from the `+` corner of one attachment to the
    /// `-` corner of the next, and along the band from one end to the other:
    /// `+` to `-` on a flat band, `+` to `+` on a twisted one. Each corner
    /// then has degree two and the boundary circles are the cycles.
    pub fn boundary_components(&self) -> usize {
        let g = self.graph;
        // corner id: 4 * edge + 2 * end + (0 for +, 1 for -)
        let corner = |edge: usize, end: usize, minus: bool| 4 * edge + 2 * end + usize::from(minus);
        let mut uf = UnionFind::new(4 * g.edge_count());
        let mut bare_vertices = 0;
        for v in 0..g.vertex_count() {
            let attached: Vec<(usize, usize)> = g
                .rotation(v)
                .iter()
                .copied()
                .filter(|&(e, _)| self.included[e])
                .collect();
            if attached.is_empty() {
                bare_vertices += 1;
                continue;
            }
            for (i, &(e, end)) in attached.iter().enumerate() {
                let (ne, nend) = attached[(i + 1) % attached.len()];
                uf.union(corner(e, end, false), corner(ne, nend, true));
            }
        }
        let mut unused = 0;
        for (e, edge) in g.edges().iter().enumerate() {
            if !self.included[e] {
                unused += 4;
                continue;
            }
            if edge.twisted {
                uf.union(corner(e, 0, false), corner(e, 1, false));
                uf.union(corner(e, 0, true), corner(e, 1, true));
            } else {
                uf.union(corner(e, 0, false), corner(e, 1, true));
                uf.union(corner(e, 0, true), corner(e, 1, false));
            }
        }
        uf.sets() - unused + bare_vertices
    }

    /// Whether the ribbon surface of the subgraph is orientable.
    pub fn orientable(&self) -> bool {
        let g = self.graph;
        let n = g.vertex_count();
        // vertex v flipped <-> node v + n
        let mut uf = UnionFind::new(2 * n);
        for i in self.edges() {
            let [a, b] = g.core_edges()[i];
            if g.edges()[i].twisted {
                uf.union(a, b + n);
                uf.union(a + n, b);
            } else {
                uf.union(a, b);
                uf.union(a + n, b + n);
            }
        }
        (0..n).all(|v| !uf.same(v, v + n))
    }

    pub fn stats(&self) -> SubgraphStats {
        let v = self.graph.vertex_count();
        let e = self.edge_count();
        let k = self.components();
        let r = v - k;
        let n = e - r;
        let bc = self.boundary_components();
        let (mut e_minus, mut e_minus_complement) = (0, 0);
        for (i, edge) in self.graph.edges().iter().enumerate() {
            if edge.sign == Sign::Negative {
                if self.included[i] {
                    e_minus += 1;
                } else {
                    e_minus_complement += 1;
                }
            }
        }
        SubgraphStats {
            v,
            e,
            k,
            r,
            n,
            bc,
            e_minus,
            e_minus_complement,
            s: HalfInteger(e_minus as i64 - e_minus_complement as i64),
        }
    }
}
