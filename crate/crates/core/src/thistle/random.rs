use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{ArcId, VirtualLinkDiagram};

/// A pseudo-random abstract diagram with `crossings` classical crossings.
///
/// Each crossing gets a random over-strand direction, which fixes its two
/// incoming and two outgoing slots; arcs then join the `2n` outgoing slots
/// to a random permutation of the `2n` incoming ones. No planarity is
/// required, so the result is always a valid virtual diagram. The code goes
/// through the same direction inference as parsed input.
pub fn random_diagram(crossings: usize, seed: u64) -> VirtualLinkDiagram {
    assert!(crossings >= 1, "need at least one crossing");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut incoming = Vec::with_capacity(2 * crossings);
    let mut outgoing = Vec::with_capacity(2 * crossings);
    for c in 0..crossings {
        incoming.push((c, 0));
        outgoing.push((c, 2));
        if rng.gen_bool(0.5) {
            incoming.push((c, 3));
            outgoing.push((c, 1));
        } else {
            incoming.push((c, 1));
            outgoing.push((c, 3));
        }
    }
    incoming.shuffle(&mut rng);
    let mut codes = vec![[0 as ArcId; 4]; crossings];
    for (arc, (&(oc, os), &(ic, is))) in outgoing.iter().zip(&incoming).enumerate() {
        codes[oc][os] = arc as ArcId + 1;
        codes[ic][is] = arc as ArcId + 1;
    }
    VirtualLinkDiagram::from_codes(&codes, 0).expect("random code is consistent")
}
