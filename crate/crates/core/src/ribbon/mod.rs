//! Signed ribbon graphs as rotation systems with twist bits.
//!
//! A vertex is a disc whose boundary carries the attachment points of its
//! half-edges in counterclockwise order. An edge is a band joining two
//! half-edges; it is either flat (`twist = 0`) or carries a half-twist
//! (`twist = 1`), and it has a sign `±1`.

mod from_diagram;
mod parse;
mod polynomial;
mod random;
mod subgraph;
mod tutte;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use crate::diagram::Sign;
pub use random::random_ribbon_graph;
pub use subgraph::{HalfInteger, SpanningSubgraph, SubgraphStats};

pub type HalfEdgeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RibbonError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("half-edge {id} appears {count} times in vertex rotations, expected once")]
    VertexMultiplicity { id: HalfEdgeId, count: usize },
    #[error("half-edge {id} appears {count} times in edges, expected once")]
    EdgeMultiplicity { id: HalfEdgeId, count: usize },
    #[error("edge joins half-edge {0} to itself")]
    DegenerateEdge(HalfEdgeId),
    #[error("graph has a negative edge; the Tutte polynomial needs an all-positive graph")]
    NegativeEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RibbonEdge {
    pub ends: [HalfEdgeId; 2],
    pub twisted: bool,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    vertices: Vec<Vec<HalfEdgeId>>,
    edges: Vec<RibbonEdge>,
    /// Per vertex, the rotation as `(edge index, end index)` pairs.
    rotation: Vec<Vec<(usize, usize)>>,
    /// Per edge, the vertex holding each end.
    end_vertex: Vec<[usize; 2]>,
}

impl RibbonGraph {
    pub fn new(vertices: Vec<Vec<HalfEdgeId>>, edges: Vec<RibbonEdge>) -> Result<Self, RibbonError> {
        let mut in_vertex: HashMap<HalfEdgeId, (usize, usize)> = HashMap::new();
        let mut vertex_count: HashMap<HalfEdgeId, usize> = HashMap::new();
        for (v, rot) in vertices.iter().enumerate() {
            for (pos, &h) in rot.iter().enumerate() {
                *vertex_count.entry(h).or_default() += 1;
                in_vertex.insert(h, (v, pos));
            }
        }
        let mut edge_count: HashMap<HalfEdgeId, usize> = HashMap::new();
        for e in &edges {
            if e.ends[0] == e.ends[1] {
                return Err(RibbonError::DegenerateEdge(e.ends[0]));
            }
            for h in e.ends {
                *edge_count.entry(h).or_default() += 1;
            }
        }
        let mut ids: Vec<HalfEdgeId> = vertex_count.keys().chain(edge_count.keys()).copied().collect();
        ids.sort_unstable();
        ids.dedup();
        for id in ids {
            let vc = vertex_count.get(&id).copied().unwrap_or(0);
            if vc != 1 {
                return Err(RibbonError::VertexMultiplicity { id, count: vc });
            }
            let ec = edge_count.get(&id).copied().unwrap_or(0);
            if ec != 1 {
                return Err(RibbonError::EdgeMultiplicity { id, count: ec });
            }
        }

        let mut owner: HashMap<HalfEdgeId, (usize, usize)> = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            owner.insert(e.ends[0], (i, 0));
            owner.insert(e.ends[1], (i, 1));
        }
        let rotation = vertices
            .iter()
            .map(|rot| rot.iter().map(|h| owner[h]).collect())
            .collect();
        let end_vertex = edges.iter().map(|e| e.ends.map(|h| in_vertex[&h].0)).collect();
        Ok(RibbonGraph {
            vertices,
            edges,
            rotation,
            end_vertex,
        })
    }

    /// Parses the line-oriented `.rg` format.
    pub fn parse(text: &str) -> Result<Self, RibbonError> {
        parse::parse(text)
    }

    pub fn vertices(&self) -> &[Vec<HalfEdgeId>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[RibbonEdge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Positive)
    }

    /// Endpoints of every edge in the core graph, as vertex indices.
    pub fn core_edges(&self) -> &[[usize; 2]] {
        &self.end_vertex
    }

    pub(crate) fn rotation(&self, vertex: usize) -> &[(usize, usize)] {
        &self.rotation[vertex]
    }

    /// Serializes to the `.rg` format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for rot in &self.vertices {
            out.push('V');
            for h in rot {
                out.push_str(&format!(" {h}"));
            }
            out.push('\n');
        }
        for e in &self.edges {
            out.push_str(&format!(
                "E {} {} {} {}\n",
                e.ends[0],
                e.ends[1],
                u8::from(e.twisted),
                e.sign
            ));
        }
        out
    }
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn validation() {
        let orphan = RibbonGraph::new(vec![vec![1, 2, 3]], vec![edge(1, 2, false, Sign::Positive)]);
        assert_eq!(orphan, Err(RibbonError::EdgeMultiplicity { id: 3, count: 0 }));
        let twice = RibbonGraph::new(vec![vec![1, 2], vec![2]], vec![edge(1, 2, false, Sign::Positive)]);
        assert_eq!(twice, Err(RibbonError::VertexMultiplicity { id: 2, count: 2 }));
        let unplaced = RibbonGraph::new(vec![vec![1]], vec![edge(1, 2, false, Sign::Positive)]);
        assert_eq!(unplaced, Err(RibbonError::VertexMultiplicity { id: 2, count: 0 }));
        let degenerate = RibbonGraph::new(vec![vec![1, 1]], vec![edge(1, 1, false, Sign::Positive)]);
        assert_eq!(degenerate, Err(RibbonError::DegenerateEdge(1)));
    }

    #[test]
    fn core_edges_of_example_graph() {
        let g = example_graph();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.core_edges(), &[[0, 0], [0, 1], [0, 1]]);
        assert!(!g.is_all_positive());
    }

    #[test]
    fn text_round_trip() {
        let g = example_graph();
        assert_eq!(g.to_text(), EXAMPLE_GRAPH);
        assert_eq!(RibbonGraph::parse(&g.to_text()).unwrap(), g);
    }
}
