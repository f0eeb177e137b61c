use super::{RibbonError, RibbonGraph};
use crate::poly::{LaurentPoly, Ring};
use crate::union_find::UnionFind;

impl RibbonGraph {
    /// Tutte polynomial `T(x, y)` of the core graph by deletion-contraction.
    ///
    /// Rotations and twists are ignored. Only all-positive graphs are accepted.
    pub fn tutte(&self) -> Result<LaurentPoly, RibbonError> {
        if !self.is_all_positive() {
            return Err(RibbonError::NegativeEdge);
        }
        let ring = Ring::tutte();
        let x = LaurentPoly::var(&ring, "x").expect("x");
        let y = LaurentPoly::var(&ring, "y").expect("y");
        let edges: Vec<(usize, usize)> = self.core_edges().iter().map(|&[a, b]| (a, b)).collect();
        Ok(delete_contract(self.vertex_count(), edges, &x, &y))
    }
}

fn delete_contract(vertices: usize, mut edges: Vec<(usize, usize)>, x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    let Some((a, b)) = edges.pop() else {
        return LaurentPoly::one(x.ring());
    };
    if a == b {
        return y * &delete_contract(vertices, edges, x, y);
    }
    let contracted: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| (if u == b { a } else { u }, if v == b { a } else { v }))
        .collect();
    let mut uf = UnionFind::new(vertices);
    for &(u, v) in &edges {
        uf.union(u, v);
    }
    if !uf.same(a, b) {
        // bridge
        return x * &delete_contract(vertices, contracted, x, y);
    }
    delete_contract(vertices, edges, x, y) + delete_contract(vertices, contracted, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::fixtures::*;
    use crate::ribbon::Sign;

    fn t(text: &str) -> LaurentPoly {
        LaurentPoly::parse(&Ring::tutte(), text).unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(single_loop(true).tutte().unwrap(), t("y"));
        let bridge = RibbonGraph::new(vec![vec![1], vec![2]], vec![edge(1, 2, false, Sign::Positive)]).unwrap();
        assert_eq!(bridge.tutte().unwrap(), t("x"));
    }

    #[test]
    fn parallel_pair() {
        let g = RibbonGraph::new(
            vec![vec![1, 3], vec![2, 4]],
            vec![edge(1, 2, false, Sign::Positive), edge(3, 4, true, Sign::Positive)],
        )
        .unwrap();
        assert_eq!(g.tutte().unwrap(), t("x + y"));
    }

    #[test]
    fn triangle() {
        let g = RibbonGraph::new(
            vec![vec![1, 6], vec![2, 3], vec![4, 5]],
            vec![
                edge(1, 2, false, Sign::Positive),
                edge(3, 4, false, Sign::Positive),
                edge(5, 6, false, Sign::Positive),
            ],
        )
        .unwrap();
        assert_eq!(g.tutte().unwrap(), t("x^2 + x + y"));
    }

    #[test]
    fn negative_edges_rejected() {
        assert_eq!(example_graph().tutte(), Err(RibbonError::NegativeEdge));
    }
}
