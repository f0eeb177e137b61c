use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::VirtualLinkDiagram;
use crate::limits::{CapExceeded, Limits};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Splitting {
    A,
    B,
}

impl Splitting {
    pub fn other(self) -> Splitting {
        match self {
            Splitting::A => Splitting::B,
            Splitting::B => Splitting::A,
        }
    }
}

/// A choice of splitting at every classical crossing.
///
/// States of an `n`-crossing diagram are indexed by `0..2^n` in the order
/// `AA..A, AA..B, ..., BB..B`: the first crossing is the most significant
/// bit and `B` is a set bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State(Vec<Splitting>);

impl State {
    pub fn new(choice: Vec<Splitting>) -> Self {
        State(choice)
    }

    pub fn from_index(crossings: usize, index: u64) -> Self {
        State(
            (0..crossings)
                .map(|c| {
                    if index >> (crossings - 1 - c) & 1 == 1 {
                        Splitting::B
                    } else {
                        Splitting::A
                    }
                })
                .collect(),
        )
    }

    pub fn index(&self) -> u64 {
        self.0
            .iter()
            .fold(0, |acc, &s| (acc << 1) | u64::from(s == Splitting::B))
    }

    /// All `2^n` states in index order.
    pub fn all(crossings: usize) -> impl Iterator<Item = State> {
        assert!(crossings < 64, "too many crossings to enumerate");
        (0..1u64 << crossings).map(move |i| State::from_index(crossings, i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn choices(&self) -> &[Splitting] {
        &self.0
    }

    pub fn get(&self, crossing: usize) -> Splitting {
        self.0[crossing]
    }

    /// Number of A-splittings.
    pub fn alpha(&self) -> usize {
        self.0.iter().filter(|&&s| s == Splitting::A).count()
    }

    /// Number of B-splittings.
    pub fn beta(&self) -> usize {
        self.0.len() - self.alpha()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Splitting::A => "A",
                Splitting::B => "B",
            })?;
        }
        Ok(())
    }
}

impl FromStr for State {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'A' => Ok(Splitting::A),
                'B' => Ok(Splitting::B),
                other => Err(format!("`{other}` is not a splitting letter")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(State)
    }
}

impl VirtualLinkDiagram {
    /// Number of closed curves after splitting every crossing according to `state`.
    pub fn split_circles(&self, state: &State) -> usize {
        assert_eq!(state.len(), self.crossing_count(), "state length");
        self.circles_by(|c| state.get(c))
    }

    pub(crate) fn circles_for_index(&self, index: u64) -> usize {
        let n = self.crossing_count();
        self.circles_by(|c| {
            if index >> (n - 1 - c) & 1 == 1 {
                Splitting::B
            } else {
                Splitting::A
            }
        })
    }

    fn circles_by(&self, splitting: impl Fn(usize) -> Splitting) -> usize {
        let mut uf = UnionFind::new(self.arc_count());
        for (c, (slots, crossing)) in self.dense_slots().iter().zip(self.crossings()).enumerate() {
            for (a, b) in crossing.joined_slots(splitting(c)) {
                uf.union(slots[a], slots[b]);
            }
        }
        uf.sets() + self.free_loops()
    }

    /// The orientation-preserving state.
    pub fn seifert_state(&self) -> State {
        State(self.crossings().iter().map(|c| c.seifert_splitting()).collect())
    }

    /// Multiplicities of `(alpha, delta)` over all states.
    pub(crate) fn state_census(&self, limits: &Limits) -> Result<HashMap<(usize, usize), u64>, CapExceeded> {
        let n = self.crossing_count();
        let count = limits.check(n)?;
        let census = (0..count)
            .into_par_iter()
            .fold(HashMap::new, |mut acc: HashMap<(usize, usize), u64>, index| {
                let alpha = n - index.count_ones() as usize;
                *acc.entry((alpha, self.circles_for_index(index))).or_default() += 1;
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            });
        Ok(census)
    }
}
