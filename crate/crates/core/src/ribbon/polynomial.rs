use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::RibbonGraph;
use crate::limits::{CapExceeded, Limits};
use crate::poly::{LaurentPoly, Ring};

impl RibbonGraph {
    /// The signed Bollobás-Riordan polynomial, summed over all `2^e` spanning subgraphs:
    /// `x^(r(G) - r(F) + s(F)) y^(n(F) - s(F)) z^(k(F) - bc(F) + n(F))`.
    ///
    /// Lives in [`Ring::bollobas_riordan`]; `x` and `y` take half-integer exponents.
    pub fn bollobas_riordan(&self, limits: &Limits) -> Result<LaurentPoly, CapExceeded> {
        let count = limits.check(self.edge_count())?;
        let rank = self.empty_subgraph().components() as i64 - self.full_subgraph().components() as i64;
        let census = (0..count)
            .into_par_iter()
            .fold(HashMap::new, |mut acc: HashMap<[i64; 3], u64>, index| {
                let st = self.subgraph_from_index(index).stats();
                let s = st.s.halves();
                let key = [2 * (rank - st.r as i64) + s, 2 * st.n as i64 - s, st.z_exponent()];
                *acc.entry(key).or_default() += 1;
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            });
        Ok(LaurentPoly::from_terms(
            &Ring::bollobas_riordan(),
            census.into_iter().map(|(key, c)| (key.to_vec(), BigInt::from(c))),
        ))
    }
}
