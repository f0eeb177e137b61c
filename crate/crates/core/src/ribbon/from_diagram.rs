use super::{HalfEdgeId, RibbonEdge, RibbonGraph};
use crate::diagram::VirtualLinkDiagram;

impl RibbonGraph {
    /// The signed ribbon graph of a diagram.
    ///
    /// Vertices are the Seifert circles, each drawn as a counterclockwise
    /// circle carrying a mark for every crossing it passes, in the order the
    /// circle's orientation visits them. Crossing `c` becomes edge `c` with
    /// half-edges `2c + 1` (the strand entering at `s0`) and `2c + 2` (the
    /// strand entering on the over-strand). Every band carries a half-twist
    /// and its sign is the crossing's local writhe. Free loops become
    /// isolated vertices.
    pub fn from_diagram(diagram: &VirtualLinkDiagram) -> RibbonGraph {
        let crossings = diagram.crossings();
        let slots = diagram.dense_slots();
        let arcs = diagram.arc_count();

        // head[a] = (crossing, slot) where arc a ends
        let mut head = vec![(0, 0); arcs];
        for (c, crossing) in crossings.iter().enumerate() {
            for (s, &arc) in slots[c].iter().enumerate() {
                if crossing.is_incoming(s) {
                    head[arc] = (c, s);
                }
            }
        }

        let mut visited = vec![false; arcs];
        let mut vertices: Vec<Vec<HalfEdgeId>> = Vec::new();
        for start in 0..arcs {
            if visited[start] {
                continue;
            }
            let mut circle = Vec::new();
            let mut arc = start;
            while !visited[arc] {
                visited[arc] = true;
                let (c, s_in) = head[arc];
                let crossing = &crossings[c];
                let s_out = crossing
                    .joined_slots(crossing.seifert_splitting())
                    .iter()
                    .find_map(|&(p, q)| match (p == s_in, q == s_in) {
                        (true, _) => Some(q),
                        (_, true) => Some(p),
                        _ => None,
                    })
                    .expect("every slot is joined");
                let end = if s_in == 0 { 1 } else { 2 };
                circle.push(2 * c as HalfEdgeId + end);
                arc = slots[c][s_out];
            }
            vertices.push(circle);
        }
        vertices.extend((0..diagram.free_loops()).map(|_| Vec::new()));

        let edges = crossings
            .iter()
            .enumerate()
            .map(|(c, crossing)| RibbonEdge {
                ends: [2 * c as HalfEdgeId + 1, 2 * c as HalfEdgeId + 2],
                twisted: true,
                sign: crossing.sign(),
            })
            .collect();
        RibbonGraph::new(vertices, edges).expect("Seifert circles form a valid rotation system")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::EXAMPLE_KNOT;
    use crate::ribbon::fixtures::EXAMPLE_GRAPH;

    #[test]
    fn example_knot_gives_example_graph() {
        let d = VirtualLinkDiagram::parse(EXAMPLE_KNOT).unwrap();
        let g = RibbonGraph::from_diagram(&d);
        assert_eq!(g.to_text(), EXAMPLE_GRAPH);
        let full = g.full_subgraph().stats();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), full.k, full.r, full.n),
            (2, 3, 1, 1, 2)
        );
    }

    #[test]
    fn unknot_is_an_isolated_vertex() {
        let g = RibbonGraph::from_diagram(&VirtualLinkDiagram::unknot());
        assert_eq!(g.vertices(), &[Vec::<HalfEdgeId>::new()]);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn positive_hopf_link() {
        // Two components, each passing over once and under once; both crossings positive.
        let d = VirtualLinkDiagram::parse("X 1 3 2 4\nX 2 4 1 3\n").unwrap();
        assert_eq!(d.writhe(), 2);
        assert_eq!(d.link_components(), 2);
        let g = RibbonGraph::from_diagram(&d);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_all_positive());
        for [a, b] in g.core_edges() {
            assert_ne!(a, b);
        }
    }
}
