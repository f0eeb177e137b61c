//! The bracket of a diagram against the Bollobás-Riordan polynomial of its
//! ribbon graph:
//!
//! ```text
//! <D>(A, B, d) = A^n B^r d^(k-1) R_G(A d / B, B d / A, 1 / d)
//! ```
//!
//! where `G` is [`RibbonGraph::from_diagram`] and `n`, `r`, `k` are its
//! nullity, rank and number of components. Both sides are computed through
//! disjoint code paths (the diagram state sum and the ribbon subgraph sum),
//! then compared as polynomials and term by term along the bijection that
//! sends a state to the set of crossings where it differs from the Seifert
//! state.

mod random;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::diagram::{Splitting, State, VirtualLinkDiagram};
use crate::limits::{CapExceeded, Limits};
use crate::poly::{LaurentPoly, Monomial, Ring, Substitution};
use crate::ribbon::{RibbonGraph, SpanningSubgraph, SubgraphStats};

pub use random::random_diagram;

/// A diagram paired with its ribbon graph and Seifert state.
#[derive(Debug, Clone)]
pub struct Correspondence<'d> {
    diagram: &'d VirtualLinkDiagram,
    graph: RibbonGraph,
    seifert: State,
    full: SubgraphStats,
}

impl<'d> Correspondence<'d> {
    pub fn new(diagram: &'d VirtualLinkDiagram) -> Self {
        let graph = RibbonGraph::from_diagram(diagram);
        let full = graph.full_subgraph().stats();
        Correspondence {
            diagram,
            graph,
            seifert: diagram.seifert_state(),
            full,
        }
    }

    pub fn diagram(&self) -> &'d VirtualLinkDiagram {
        self.diagram
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn seifert_state(&self) -> &State {
        &self.seifert
    }

    /// The spanning subgraph whose edges are the crossings where `state`
    /// differs from the Seifert state.
    pub fn subgraph_for(&self, state: &State) -> SpanningSubgraph<'_> {
        assert_eq!(state.len(), self.seifert.len(), "state length");
        self.graph.subgraph(
            state
                .choices()
                .iter()
                .zip(self.seifert.choices())
                .map(|(a, b)| a != b)
                .collect(),
        )
    }

    /// Inverse of [`subgraph_for`](Self::subgraph_for).
    pub fn state_for(&self, subgraph: &SpanningSubgraph<'_>) -> State {
        State::new(
            self.seifert
                .choices()
                .iter()
                .enumerate()
                .map(|(c, &s)| if subgraph.contains(c) { s.other() } else { s })
                .collect(),
        )
    }

    /// `e(F) - 2s(F) = beta(S)`, `e(G) - e(F) + 2s(F) = alpha(S)` and `bc(F) = delta(S)`.
    pub fn check_counting_identities(&self, state: &State) -> bool {
        let stats = self.subgraph_for(state).stats();
        let delta = self.diagram.split_circles(state);
        counting_identities_hold(&stats, self.graph.edge_count(), state.alpha(), state.beta(), delta)
    }

    fn check_index(&self, index: u64) -> StateCheck {
        let n = self.diagram.crossing_count();
        let subgraph_index = index ^ self.seifert.index();
        let stats = self.graph.subgraph_from_index(subgraph_index).stats();
        let beta = index.count_ones() as usize;
        let alpha = n - beta;
        let delta = self.diagram.circles_for_index(index);
        let substituted = substituted_term(&self.full, &stats);
        let displayed = displayed_term(n, &stats);
        let state_term = [2 * alpha as i64, 2 * beta as i64, delta as i64 - 1];
        StateCheck {
            index,
            alpha,
            beta,
            delta,
            subgraph_index,
            stats,
            term_match: substituted == displayed
                && displayed == state_term
                && counting_identities_hold(&stats, n, alpha, beta, delta),
        }
    }
}

fn counting_identities_hold(stats: &SubgraphStats, edges: usize, alpha: usize, beta: usize, delta: usize) -> bool {
    let e_f = 2 * stats.e as i64;
    let s = stats.s.halves();
    e_f - 2 * s == 2 * beta as i64 && 2 * edges as i64 - e_f + 2 * s == 2 * alpha as i64 && stats.bc == delta
}

/// `(A, B, d)` exponents, in half-units for A and B, of
/// `A^n B^r d^(k-1) (Ad/B)^(r - r(F) + s) (Bd/A)^(n(F) - s) d^-(k(F) - bc(F) + n(F))`.
fn substituted_term(full: &SubgraphStats, f: &SubgraphStats) -> [i64; 3] {
    let s = f.s.halves();
    let x = 2 * (full.r as i64 - f.r as i64) + s;
    let y = 2 * f.n as i64 - s;
    let z = f.z_exponent();
    let a = 2 * full.n as i64 + x - y;
    let b = 2 * full.r as i64 - x + y;
    // x and y carry one d each; halves sum to a whole number
    let d = full.k as i64 - 1 + (x + y) / 2 - z;
    [a, b, d]
}

/// `A^(e(G) - e(F) + 2s) B^(e(F) - 2s) d^(bc(F) - 1)`, A and B in half-units.
fn displayed_term(edges: usize, f: &SubgraphStats) -> [i64; 3] {
    let s = f.s.halves();
    let e_f = f.e as i64;
    [2 * (edges as i64 - e_f) + 2 * s, 2 * e_f - 2 * s, f.bc as i64 - 1]
}

/// One state of the diagram next to its subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateCheck {
    /// State index; see [`State::from_index`].
    pub index: u64,
    pub alpha: usize,
    pub beta: usize,
    pub delta: usize,
    /// Subgraph index; see [`RibbonGraph::subgraph_from_index`].
    pub subgraph_index: u64,
    pub stats: SubgraphStats,
    pub term_match: bool,
}

impl StateCheck {
    pub fn state(&self, crossings: usize) -> State {
        State::from_index(crossings, self.index)
    }

    /// Included edges of the subgraph, as crossing indices.
    pub fn subgraph_edges(&self, crossings: usize) -> Vec<usize> {
        (0..crossings)
            .filter(|&c| self.subgraph_index >> (crossings - 1 - c) & 1 == 1)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// The Kauffman bracket.
    pub lhs: LaurentPoly,
    /// `A^n B^r d^(k-1) R_G(Ad/B, Bd/A, 1/d)`.
    pub rhs: LaurentPoly,
    /// Nullity, rank and component count of the ribbon graph.
    pub nullity: usize,
    pub rank: usize,
    pub components: usize,
    pub equal: bool,
    /// Every state in index order.
    pub per_state: Vec<StateCheck>,
}

impl VerificationReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &StateCheck> {
        self.per_state.iter().filter(|c| !c.term_match)
    }
}

/// `x -> Ad/B`, `y -> Bd/A`, `z -> 1/d`.
pub fn bracket_substitution() -> Substitution {
    let ring = Ring::bracket();
    let m = |a: i64, b: i64, d: i64| LaurentPoly::monomial(&ring, Monomial::new(vec![a, b, d]), 1);
    Substitution::new(&ring)
        .map("x", m(1, -1, 1))
        .map("y", m(-1, 1, 1))
        .map("z", m(0, 0, -1))
}

/// Computes both sides of the identity and checks them against each other.
pub fn verify_identity(diagram: &VirtualLinkDiagram, limits: &Limits) -> Result<VerificationReport, CapExceeded> {
    let lhs = diagram.kauffman_bracket(limits)?;
    let corr = Correspondence::new(diagram);
    let full = corr.full;
    let br = corr.graph().bollobas_riordan(limits)?;
    let prefactor = LaurentPoly::monomial(
        &Ring::bracket(),
        Monomial::new(vec![full.n as i64, full.r as i64, full.k as i64 - 1]),
        BigInt::from(1),
    );
    let rhs = prefactor
        * br.substitute(&bracket_substitution())
            .expect("half-integer exponents of x and y always pair up");

    let states = limits.check(diagram.crossing_count())?;
    let per_state: Vec<StateCheck> = (0..states)
        .into_par_iter()
        .map(|index| corr.check_index(index))
        .collect();
    let equal = lhs == rhs && per_state.iter().all(|c| c.term_match);
    Ok(VerificationReport {
        lhs,
        rhs,
        nullity: full.n,
        rank: full.r,
        components: full.k,
        equal,
        per_state,
    })
}

/// Outcome of [`fuzz`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FuzzSummary {
    pub checked: usize,
    /// `(seed, crossings)` of every diagram that failed; regenerate it with
    /// [`random_diagram`].
    pub failures: Vec<(u64, usize)>,
}

/// The `(seed, crossings)` pairs a campaign visits, in order.
pub fn fuzz_cases(count: usize, max_crossings: usize, seed: u64) -> Vec<(u64, usize)> {
    use rand::{Rng, SeedableRng};
    assert!(max_crossings >= 1, "max_crossings must be positive");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.gen::<u64>(), rng.gen_range(1..=max_crossings)))
        .collect()
}

/// Runs [`verify_identity`] on `count` random diagrams with 1 to
/// `max_crossings` crossings, in parallel.
pub fn fuzz(count: usize, max_crossings: usize, seed: u64, limits: &Limits) -> Result<FuzzSummary, CapExceeded> {
    limits.check(max_crossings)?;
    let cases = fuzz_cases(count, max_crossings, seed);
    let outcomes: Vec<Result<bool, CapExceeded>> = cases
        .par_iter()
        .map(|&(s, n)| verify_identity(&random_diagram(n, s), limits).map(|r| r.equal))
        .collect();
    let mut summary = FuzzSummary::default();
    for (case, outcome) in cases.into_iter().zip(outcomes) {
        summary.checked += 1;
        if !outcome? {
            summary.failures.push(case);
        }
    }
    Ok(summary)
}

/// Whether `state` is the Seifert state of its diagram.
pub fn is_seifert(diagram: &VirtualLinkDiagram, state: &State) -> bool {
    diagram
        .crossings()
        .iter()
        .zip(state.choices())
        .all(|(c, &s)| (s == Splitting::A) == (c.sign().value() > 0))
}
