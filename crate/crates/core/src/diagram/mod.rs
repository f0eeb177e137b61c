//! Virtual link diagrams as oriented 4-valent codes.
//!
//! A classical crossing is written as four arc ids `s0 s1 s2 s3`, listed
//! counterclockwise around the crossing, with `s0` the incoming and `s2` the
//! outgoing end of the under-strand. The over-strand occupies `s1` and `s3`.
//! Virtual crossings carry no data and are simply absent: a code only records
//! which arcs meet at which classical crossing.
//!
//! Conventions used throughout the crate:
//!
//! * a crossing is **positive** when the over-strand enters at `s3` and leaves
//!   at `s1`, and negative when it enters at `s1`;
//! * the **A-splitting** joins slots `(s0, s1)` and `(s2, s3)`, the
//!   **B-splitting** joins `(s0, s3)` and `(s1, s2)`.
//!
//! With these, the orientation-preserving splitting is A exactly at the
//! positive crossings.

mod invariants;
mod parse;
mod state;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::union_find::UnionFind;

pub use invariants::jones_substitution;
pub use state::{Splitting, State};

pub type ArcId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<DiagramError>,
    },
    #[error("arc ids must be positive integers")]
    ZeroArc,
    #[error("arc {arc} occurs {count} times, expected exactly 2")]
    ArcMultiplicity { arc: ArcId, count: usize },
    #[error("arc {0} has two heads (two incoming ends)")]
    TwoHeads(ArcId),
    #[error("arc {0} has two tails (two outgoing ends)")]
    TwoTails(ArcId),
    #[error("diagram has no crossings and no free loops")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// One classical crossing with its arc ids and over-strand direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    slots: [ArcId; 4],
    sign: Sign,
}

impl Crossing {
    /// A crossing whose over-strand direction is given by `sign`.
    pub fn new(slots: [ArcId; 4], sign: Sign) -> Self {
        Crossing { slots, sign }
    }

    pub fn slots(&self) -> [ArcId; 4] {
        self.slots
    }

    /// Local writhe.
    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Whether the arc end at `slot` points into the crossing.
    pub fn is_incoming(&self, slot: usize) -> bool {
        match slot {
            0 => true,
            2 => false,
            1 => self.sign == Sign::Negative,
            3 => self.sign == Sign::Positive,
            _ => panic!("slot index {slot} out of range"),
        }
    }

    /// Slot pairs joined by `splitting`.
    pub fn joined_slots(&self, splitting: Splitting) -> [(usize, usize); 2] {
        match splitting {
            Splitting::A => [(0, 1), (2, 3)],
            Splitting::B => [(0, 3), (1, 2)],
        }
    }

    /// The splitting that joins each incoming end to an outgoing end.
    pub fn seifert_splitting(&self) -> Splitting {
        match self.sign {
            Sign::Positive => Splitting::A,
            Sign::Negative => Splitting::B,
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn mirrored(&self) -> Crossing {
        let [a, b, c, d] = self.slots;
        match self.sign {
            // over-strand d -> b becomes the under-strand
            Sign::Positive => Crossing::new([d, a, b, c], Sign::Negative),
            Sign::Negative => Crossing::new([b, c, d, a], Sign::Positive),
        }
    }

    /// The same crossing with both strands reversed; the sign is unchanged.
    pub fn reversed(&self) -> Crossing {
        let [a, b, c, d] = self.slots;
        Crossing::new([c, d, a, b], self.sign)
    }
}

/// A validated virtual link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualLinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    /// Slots rewritten as dense arc indices `0..2n`.
    dense: Vec<[usize; 4]>,
}

impl VirtualLinkDiagram {
    /// Builds a diagram from bare codes, inferring the direction of every arc.
    ///
    /// Each under-strand fixes the direction of its two arcs; directions then
    /// propagate along over-strands. A component that passes over at every
    /// crossing it meets has no anchored direction; it is oriented so that
    /// its passage through the lowest-numbered such crossing enters at `s3`.
    pub fn from_codes(codes: &[[ArcId; 4]], free_loops: usize) -> Result<Self, DiagramError> {
        let occurrences = occurrences(codes)?;
        let n = codes.len();
        // Some(true) = positive, i.e. over-strand enters at s3.
        let mut positive: Vec<Option<bool>> = vec![None; n];
        let mut queue: VecDeque<(usize, usize, bool)> = VecDeque::new();
        for c in 0..n {
            queue.push_back((c, 0, true));
            queue.push_back((c, 2, false));
        }
        let mut next_free = 0;
        loop {
            while let Some((c, slot, incoming)) = queue.pop_front() {
                let arc = codes[c][slot];
                let partner = occurrences[&arc]
                    .iter()
                    .copied()
                    .find(|&o| o != (c, slot))
                    .expect("arc occurs twice");
                let (pc, ps) = partner;
                let partner_incoming = !incoming;
                match ps {
                    0 | 2 => {
                        if (ps == 0) != partner_incoming {
                            return Err(if incoming {
                                DiagramError::TwoHeads(arc)
                            } else {
                                DiagramError::TwoTails(arc)
                            });
                        }
                    }
                    _ => {
                        let want = (ps == 3) == partner_incoming;
                        match positive[pc] {
                            Some(p) if p != want => {
                                return Err(if incoming {
                                    DiagramError::TwoHeads(arc)
                                } else {
                                    DiagramError::TwoTails(arc)
                                });
                            }
                            Some(_) => {}
                            None => {
                                positive[pc] = Some(want);
                                queue.push_back((pc, 1, !want));
                                queue.push_back((pc, 3, want));
                            }
                        }
                    }
                }
            }
            while next_free < n && positive[next_free].is_some() {
                next_free += 1;
            }
            if next_free == n {
                break;
            }
            positive[next_free] = Some(true);
            queue.push_back((next_free, 1, false));
            queue.push_back((next_free, 3, true));
        }

        let crossings = codes
            .iter()
            .zip(positive)
            .map(|(&slots, p)| {
                let sign = if p == Some(true) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                Crossing::new(slots, sign)
            })
            .collect();
        Self::from_crossings(crossings, free_loops)
    }

    /// Builds a diagram from crossings with known over-strand directions.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let codes: Vec<[ArcId; 4]> = crossings.iter().map(|c| c.slots).collect();
        let occurrences = occurrences(&codes)?;
        let mut ids: Vec<ArcId> = occurrences.keys().copied().collect();
        ids.sort_unstable();
        for &arc in &ids {
            let occ = &occurrences[&arc];
            let heads = occ.iter().filter(|&&(c, s)| crossings[c].is_incoming(s)).count();
            match heads {
                1 => {}
                2 => return Err(DiagramError::TwoHeads(arc)),
                _ => return Err(DiagramError::TwoTails(arc)),
            }
        }
        let index: HashMap<ArcId, usize> = ids.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let dense = codes.iter().map(|slots| slots.map(|a| index[&a])).collect();
        Ok(VirtualLinkDiagram {
            crossings,
            free_loops,
            dense,
        })
    }

    /// A single crossing-free circle.
    pub fn unknot() -> Self {
        Self::from_crossings(Vec::new(), 1).expect("valid")
    }

    /// Parses the line-oriented `.vld` format.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        parse::parse(text)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Crossing slots as dense arc indices in `0..arc_count()`.
    pub(crate) fn dense_slots(&self) -> &[[usize; 4]] {
        &self.dense
    }

    /// Number of link components, free loops included.
    pub fn link_components(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count());
        for s in &self.dense {
            uf.union(s[0], s[2]);
            uf.union(s[1], s[3]);
        }
        uf.sets() + self.free_loops
    }

    /// Every crossing mirrored; the writhe changes sign.
    pub fn mirror(&self) -> Self {
        let crossings = self.crossings.iter().map(Crossing::mirrored).collect();
        Self::from_crossings(crossings, self.free_loops).expect("mirror of a valid diagram")
    }

    /// Every component with its orientation reversed.
    pub fn reverse(&self) -> Self {
        let crossings = self.crossings.iter().map(Crossing::reversed).collect();
        Self::from_crossings(crossings, self.free_loops).expect("reverse of a valid diagram")
    }

    /// Serializes to the `.vld` format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            let [a, b, x, d] = c.slots;
            out.push_str(&format!("X {a} {b} {x} {d}\n"));
        }
        if self.free_loops > 0 {
            out.push_str(&format!("L {}\n", self.free_loops));
        }
        out
    }
}

impl fmt::Display for VirtualLinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn occurrences(codes: &[[ArcId; 4]]) -> Result<HashMap<ArcId, Vec<(usize, usize)>>, DiagramError> {
    let mut occ: HashMap<ArcId, Vec<(usize, usize)>> = HashMap::new();
    for (c, slots) in codes.iter().enumerate() {
        for (s, &arc) in slots.iter().enumerate() {
            if arc == 0 {
                return Err(DiagramError::ZeroArc);
            }
            occ.entry(arc).or_default().push((c, s));
        }
    }
    let mut bad: Vec<(ArcId, usize)> = occ
        .iter()
        .filter(|(_, v)| v.len() != 2)
        .map(|(&a, v)| (a, v.len()))
        .collect();
    bad.sort_unstable();
    if let Some(&(arc, count)) = bad.first() {
        return Err(DiagramError::ArcMultiplicity { arc, count });
    }
    Ok(occ)
}

/// The running example: three classical crossings,
/// one positive and two negative, and a single virtual crossing.
#[cfg(test)]
pub(crate) const EXAMPLE_KNOT: &str = "X 6 4 1 3\nX 1 5 2 6\nX 4 2 5 3\n";
