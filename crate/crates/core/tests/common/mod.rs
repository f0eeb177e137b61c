//! Test-only reference implementations, written against raw crossing codes
//! and plain integer maps so they share no code with the library.

#![allow(dead_code)]

pub mod poly;

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;

use vlink::LaurentPoly;

pub fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

pub fn read_corpus(name: &str) -> String {
    std::fs::read_to_string(corpus(name)).unwrap()
}

/// `(crossings, free loops)` read straight from `.vld` text.
pub fn raw_codes(text: &str) -> (Vec<[u32; 4]>, usize) {
    let mut codes = Vec::new();
    let mut loops = 0;
    for line in text.lines() {
        let line = line.split('#').next().unwrap();
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.first() {
            Some(&"X") => codes.push([1, 2, 3, 4].map(|i| words[i].parse().unwrap())),
            Some(&"L") => loops += words[1].parse::<usize>().unwrap(),
            _ => {}
        }
    }
    (codes, loops)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Bracket as a map `(alpha, beta, delta - 1) -> count`.
///
/// Each arc is a node; a smoothing glues the arcs at the paired slots, so
/// the circles are the components. A glues slots (0,1),(2,3), B (0,3),(1,2).
pub fn oracle_bracket(codes: &[[u32; 4]], free_loops: usize) -> BTreeMap<(i64, i64, i64), i64> {
    let mut ids: Vec<u32> = codes.iter().flatten().copied().collect();
    ids.sort_unstable();
    ids.dedup();
    let index: HashMap<u32, usize> = ids.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let n = codes.len();
    let mut out = BTreeMap::new();
    for mask in 0u64..1 << n {
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        let mut beta = 0;
        for (c, code) in codes.iter().enumerate() {
            let b = mask >> c & 1 == 1;
            beta += i64::from(b);
            let pairs = if b { [(0, 3), (1, 2)] } else { [(0, 1), (2, 3)] };
            for (i, j) in pairs {
                let (ri, rj) = (find(&mut parent, index[&code[i]]), find(&mut parent, index[&code[j]]));
                parent[ri] = rj;
            }
        }
        let circles = (0..ids.len()).filter(|&i| find(&mut parent, i) == i).count() + free_loops;
        *out.entry((n as i64 - beta, beta, circles as i64 - 1)).or_insert(0) += 1;
    }
    out
}

/// Crossing signs, orienting each arc from where it leaves a crossing to
/// where it enters the next. `None` if some component never passes under,
/// since its direction is then a free choice.
pub fn oracle_signs(codes: &[[u32; 4]]) -> Option<Vec<i64>> {
    // incoming[c][slot]: Some(true) if the arc at that slot ends at crossing c
    let mut incoming: Vec<[Option<bool>; 4]> = codes.iter().map(|_| [Some(true), None, Some(false), None]).collect();
    let mut places: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (c, code) in codes.iter().enumerate() {
        for (s, &a) in code.iter().enumerate() {
            places.entry(a).or_default().push((c, s));
        }
    }
    loop {
        let mut changed = false;
        for (c, code) in codes.iter().enumerate() {
            for s in 0..4 {
                if incoming[c][s].is_some() {
                    continue;
                }
                let other_slot = (s + 2) % 4;
                let mut value = incoming[c][other_slot].map(|v| !v);
                if value.is_none() {
                    let (oc, os) = *places[&code[s]].iter().find(|&&p| p != (c, s)).unwrap();
                    value = incoming[oc][os].map(|v| !v);
                }
                if value.is_some() {
                    incoming[c][s] = value;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    incoming
        .iter()
        .map(|slots| slots[3].map(|incoming| if incoming { 1 } else { -1 }))
        .collect()
}

/// Jones polynomial as `quarter-power of t -> coefficient`, via the
/// one-variable bracket `B = A^-1`, `d = -A^2 - A^-2` and `t = A^-4`.
pub fn oracle_jones(codes: &[[u32; 4]], free_loops: usize) -> Option<BTreeMap<i64, i64>> {
    let writhe: i64 = oracle_signs(codes)?.iter().sum();
    let mut in_a: BTreeMap<i64, i64> = BTreeMap::new();
    for ((alpha, beta, loops), count) in oracle_bracket(codes, free_loops) {
        // (-A^2 - A^-2)^loops by repeated multiplication
        let mut d_pow: BTreeMap<i64, i64> = BTreeMap::from([(0, 1)]);
        for _ in 0..loops {
            let mut next = BTreeMap::new();
            for (&e, &c) in &d_pow {
                *next.entry(e + 2).or_insert(0) -= c;
                *next.entry(e - 2).or_insert(0) -= c;
            }
            d_pow = next;
        }
        for (e, c) in d_pow {
            *in_a.entry(e + alpha - beta).or_insert(0) += c * count;
        }
    }
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    Some(
        in_a.into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(e, c)| (-(e - 3 * writhe), sign * c))
            .collect(),
    )
}

/// A polynomial's terms as `units -> coefficient` with `i64` coefficients.
pub fn term_map(p: &LaurentPoly) -> BTreeMap<Vec<i64>, i64> {
    p.terms()
        .map(|(m, c)| (m.units().to_vec(), i64::try_from(c).unwrap()))
        .collect()
}

pub fn bracket_map(p: &LaurentPoly) -> BTreeMap<(i64, i64, i64), i64> {
    term_map(p).into_iter().map(|(u, c)| ((u[0], u[1], u[2]), c)).collect()
}

pub fn jones_map(p: &LaurentPoly) -> BTreeMap<i64, i64> {
    term_map(p).into_iter().map(|(u, c)| (u[0], c)).collect()
}

/// Tutte polynomial `(i, j) -> coefficient of x^i y^j` as the rank-generating
/// sum `sum_F (x-1)^(r(G)-r(F)) (y-1)^(n(F))`, expanded binomially.
pub fn oracle_tutte(vertices: usize, edges: &[[usize; 2]]) -> BTreeMap<(i64, i64), i64> {
    let rank = |mask: u64| {
        let mut parent: Vec<usize> = (0..vertices).collect();
        let mut r = 0;
        for (i, &[a, b]) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    r += 1;
                }
            }
        }
        r as i64
    };
    let full = rank((1 << edges.len()) - 1);
    let binom = |n: i64, k: i64| (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1));
    let mut out = BTreeMap::new();
    for mask in 0u64..1 << edges.len() {
        let r = rank(mask);
        let (p, q) = (full - r, mask.count_ones() as i64 - r);
        for i in 0..=p {
            for j in 0..=q {
                let sign = if (p - i + q - j) % 2 == 0 { 1 } else { -1 };
                *out.entry((i, j)).or_insert(0) += sign * binom(p, i) * binom(q, j);
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}
