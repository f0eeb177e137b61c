use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{is_unit, reduced_exponent, LaurentPoly, Monomial, PolyError, Ring};

/// A ring homomorphism given by the images of the source variables.
///
/// Images that are a single term with coefficient `±1` may be raised to any
/// exponent the source ring can express, including negative and fractional
/// ones. Other images only accept non-negative integer exponents.
///
/// ```
/// use vlink::poly::{LaurentPoly, Ring, Substitution};
///
/// let bracket = Ring::bracket();
/// let jones = Ring::jones();
/// let t = |s: &str| LaurentPoly::parse(&jones, s).unwrap();
/// let subst = Substitution::new(&jones)
///     .map("A", t("t^(-1/4)"))
///     .map("B", t("t^(1/4)"))
///     .map("d", t("-t^(1/2) - t^(-1/2)"));
/// let p = LaurentPoly::parse(&bracket, "A*d^2 + B").unwrap();
/// assert_eq!(p.substitute(&subst).unwrap().to_string(), "t^(-5/4) + 2*t^(-1/4) + t^(1/4) + t^(3/4)");
/// ```
#[derive(Debug, Clone)]
pub struct Substitution {
    target: Arc<Ring>,
    images: HashMap<String, LaurentPoly>,
}

impl Substitution {
    pub fn new(target: &Arc<Ring>) -> Self {
        Substitution {
            target: Arc::clone(target),
            images: HashMap::new(),
        }
    }

    /// Sends `variable` to `image`. A later call for the same variable wins.
    pub fn map(mut self, variable: &str, image: LaurentPoly) -> Self {
        self.images.insert(variable.to_string(), image);
        self
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        let source = p.ring();
        let mut images = Vec::with_capacity(source.len());
        for var in source.variables() {
            let image = self
                .images
                .get(var.name())
                .ok_or_else(|| PolyError::MissingImage(var.name().to_string()))?;
            if image.ring() != &self.target && **image.ring() != *self.target {
                return Err(PolyError::RingMismatch);
            }
            images.push(image);
        }

        // Common denominator of all source exponents.
        let scale: i64 = source
            .variables()
            .iter()
            .map(|v| i64::from(v.granularity()))
            .fold(1, num_integer::lcm);

        let mut powers: HashMap<(usize, u32), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero(&self.target);
        for (m, c) in p.terms() {
            let mut acc = vec![0i64; self.target.len()];
            let mut coeff: BigInt = c.clone();
            let mut factors: Vec<(usize, u32)> = Vec::new();
            for (idx, (&units, var)) in m.units().iter().zip(source.variables()).enumerate() {
                if units == 0 {
                    continue;
                }
                let g = i64::from(var.granularity());
                let image = images[idx];
                match image.as_monomial() {
                    Some((im, ic)) if is_unit(ic) => {
                        if ic.is_negative() {
                            if units % g != 0 {
                                return Err(non_monomial(var.name(), units, var.granularity()));
                            }
                            if (units / g) % 2 != 0 {
                                coeff = -coeff;
                            }
                        }
                        for (a, &iu) in acc.iter_mut().zip(im.units()) {
                            *a += iu * units * (scale / g);
                        }
                    }
                    _ => {
                        if units < 0 || units % g != 0 {
                            return Err(non_monomial(var.name(), units, var.granularity()));
                        }
                        let k =
                            u32::try_from(units / g).map_err(|_| non_monomial(var.name(), units, var.granularity()))?;
                        factors.push((idx, k));
                    }
                }
            }
            let mut target_units = Vec::with_capacity(acc.len());
            for (a, var) in acc.iter().zip(self.target.variables()) {
                if a % scale != 0 {
                    return Err(PolyError::NonIntegralExponent(var.name().to_string()));
                }
                target_units.push(a / scale);
            }
            let mut term = LaurentPoly::monomial(&self.target, Monomial::new(target_units), coeff);
            for (idx, k) in factors {
                let power = powers.entry((idx, k)).or_insert_with(|| images[idx].pow(k));
                term = &term * &*power;
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }
}

fn non_monomial(name: &str, units: i64, granularity: u32) -> PolyError {
    let (n, d) = reduced_exponent(units, granularity);
    PolyError::NonMonomialPower {
        variable: name.to_string(),
        exponent: if d == 1 { n.to_string() } else { format!("{n}/{d}") },
    }
}

impl LaurentPoly {
    pub fn substitute(&self, subst: &Substitution) -> Result<LaurentPoly, PolyError> {
        subst.apply(self)
    }
}

/// Sends every variable of `ring` to itself.
#[cfg(test)]
pub(crate) fn identity_images(ring: &Arc<Ring>) -> Substitution {
    let mut s = Substitution::new(ring);
    for v in ring.variables() {
        s = s.map(v.name(), LaurentPoly::var(ring, v.name()).expect("own variable"));
    }
    s
}
