use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{HalfEdgeId, RibbonEdge, RibbonGraph, Sign};

/// A pseudo-random ribbon graph with the given numbers of vertices and edges.
///
/// Half-edges land on uniformly random vertices in random cyclic order;
/// twists are random, and signs are random unless `all_positive`.
/// The same arguments always give the same graph.
pub fn random_ribbon_graph(vertices: usize, edges: usize, all_positive: bool, seed: u64) -> RibbonGraph {
    assert!(vertices > 0, "a ribbon graph with edges needs a vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<HalfEdgeId> = (1..=2 * edges as HalfEdgeId).collect();
    ids.shuffle(&mut rng);
    let mut rotation: Vec<Vec<HalfEdgeId>> = vec![Vec::new(); vertices];
    for &h in &ids {
        rotation[rng.gen_range(0..vertices)].push(h);
    }
    for rot in &mut rotation {
        rot.shuffle(&mut rng);
    }
    let edge_list = (0..edges)
        .map(|i| RibbonEdge {
            ends: [ids[2 * i], ids[2 * i + 1]],
            twisted: rng.gen_bool(0.5),
            sign: if all_positive || rng.gen_bool(0.5) {
                Sign::Positive
            } else {
                Sign::Negative
            },
        })
        .collect();
    RibbonGraph::new(rotation, edge_list).expect("random rotation system is valid")
}
