use num_bigint::BigInt;

use super::VirtualLinkDiagram;
use crate::limits::{CapExceeded, Limits};
use crate::poly::{LaurentPoly, Monomial, Ring, Substitution};

/// `A -> t^(-1/4)`, `B -> t^(1/4)`, `d -> -t^(1/2) - t^(-1/2)`.
pub fn jones_substitution() -> Substitution {
    let ring = Ring::jones();
    let t = |units: i64, c: i64| LaurentPoly::monomial(&ring, Monomial::new(vec![units]), c);
    Substitution::new(&ring)
        .map("A", t(-1, 1))
        .map("B", t(1, 1))
        .map("d", t(2, -1) + t(-2, -1))
}

impl VirtualLinkDiagram {
    /// Sum of the crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings().iter().map(|c| c.sign().value()).sum()
    }

    /// The state sum `<D>(A, B, d)` over all `2^n` states.
    ///
    /// ```
    /// use vlink::{Limits, VirtualLinkDiagram};
    ///
    /// let kink = VirtualLinkDiagram::parse("X 1 2 2 1").unwrap();
    /// let bracket = kink.kauffman_bracket(&Limits::default()).unwrap();
    /// assert_eq!(bracket.to_string(), "B*d + A");
    /// ```
    pub fn kauffman_bracket(&self, limits: &Limits) -> Result<LaurentPoly, CapExceeded> {
        let ring = Ring::bracket();
        let n = self.crossing_count() as i64;
        let census = self.state_census(limits)?;
        Ok(LaurentPoly::from_terms(
            &ring,
            census.into_iter().map(|((alpha, delta), count)| {
                let alpha = alpha as i64;
                (vec![alpha, n - alpha, delta as i64 - 1], BigInt::from(count))
            }),
        ))
    }

    /// `(-1)^w t^(3w/4) <D>(t^(-1/4), t^(1/4), -t^(1/2) - t^(-1/2))`.
    pub fn jones(&self, limits: &Limits) -> Result<LaurentPoly, CapExceeded> {
        let bracket = self.kauffman_bracket(limits)?;
        let w = self.writhe();
        let sign = if w % 2 == 0 { 1 } else { -1 };
        let normalization = LaurentPoly::monomial(&Ring::jones(), Monomial::new(vec![3 * w]), sign);
        let evaluated = bracket
            .substitute(&jones_substitution())
            .expect("bracket exponents are natural numbers");
        Ok(normalization * evaluated)
    }
}
