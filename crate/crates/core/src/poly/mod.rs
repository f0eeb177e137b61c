//! Exact multivariate Laurent polynomials with fractional exponents.
//!
//! Every variable of a [`Ring`] carries a *granularity* `g`: exponents are
//! stored as integers counting `1/g` steps ("quantum units"), so `t^(-1/2)`
//! in a ring where `t` has granularity 4 is stored as `-2`. Coefficients are
//! unbounded integers.
//!
//! ```
//! use vlink::poly::{LaurentPoly, Ring};
//!
//! let ring = Ring::jones();
//! let p = LaurentPoly::parse(&ring, "t^(1/2) - t^(-1/2)").unwrap();
//! let q = &p * &p;
//! assert_eq!(q.to_string(), "t^(-1) - 2 + t");
//! ```

mod parse;
mod print;
mod substitute;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use substitute::Substitution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent {exponent} of `{variable}` is not a multiple of 1/{granularity}")]
    NotRepresentable {
        variable: String,
        exponent: String,
        granularity: u32,
    },
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("cannot raise the non-monomial image of `{variable}` to the power {exponent}")]
    NonMonomialPower { variable: String, exponent: String },
    #[error("substitution produces a non-integral exponent of `{0}`")]
    NonIntegralExponent(String),
}

/// A polynomial variable: a name and the number of exponent steps per unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    name: String,
    granularity: u32,
}

impl Variable {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn granularity(&self) -> u32 {
        self.granularity
    }
}

/// An ordered set of variables. Polynomials hold their ring behind an `Arc`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    variables: Vec<Variable>,
}

impl Ring {
    /// Creates a ring from `(name, granularity)` pairs. Granularity must be 1, 2 or 4.
    pub fn new<I, S>(variables: I) -> Result<Arc<Ring>, PolyError>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut vars: Vec<Variable> = Vec::new();
        for (name, granularity) in variables {
            let name = name.into();
            let valid_name = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid_name {
                return Err(PolyError::InvalidRing(format!("bad variable name `{name}`")));
            }
            if ![1, 2, 4].contains(&granularity) {
                return Err(PolyError::InvalidRing(format!(
                    "granularity {granularity} of `{name}` not in {{1, 2, 4}}"
                )));
            }
            if vars.iter().any(|v| v.name == name) {
                return Err(PolyError::InvalidRing(format!("duplicate variable `{name}`")));
            }
            vars.push(Variable { name, granularity });
        }
        Ok(Arc::new(Ring { variables: vars }))
    }

    /// `{A, B, d}`, the home of the Kauffman bracket.
    pub fn bracket() -> Arc<Ring> {
        Ring::new([("A", 1), ("B", 1), ("d", 1)]).expect("static ring")
    }

    /// `{t}` with quarter-integer exponents, the home of the Jones polynomial.
    pub fn jones() -> Arc<Ring> {
        Ring::new([("t", 4)]).expect("static ring")
    }

    /// `{x, y, z}` with half-integer exponents on `x` and `y`.
    pub fn bollobas_riordan() -> Arc<Ring> {
        Ring::new([("x", 2), ("y", 2), ("z", 1)]).expect("static ring")
    }

    /// `{x, y}` with integer exponents, the home of the Tutte polynomial.
    pub fn tutte() -> Arc<Ring> {
        Ring::new([("x", 1), ("y", 1)]).expect("static ring")
    }

    /// The ring with no variables; polynomials here are plain integers.
    pub fn integers() -> Arc<Ring> {
        Arc::new(Ring { variables: Vec::new() })
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }
}

/// Exponent vector in quantum units, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(units: Vec<i64>) -> Self {
        Monomial(units)
    }

    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn units(&self) -> &[i64] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// A Laurent polynomial with integer coefficients over a [`Ring`].
///
/// Terms are kept in a `BTreeMap`, so iteration (and printing) follows the
/// lexicographic order of exponent vectors. Zero coefficients are never stored.
#[derive(Clone)]
pub struct LaurentPoly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        LaurentPoly {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: impl Into<BigInt>) -> Self {
        Self::monomial(ring, Monomial::one(ring.len()), c)
    }

    /// Single term `c * m`. Panics if `m` has the wrong length.
    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(m.0.len(), ring.len(), "monomial length does not match ring");
        let mut p = Self::zero(ring);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `name` to the first power.
    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        let idx = ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut units = vec![0; ring.len()];
        units[idx] = i64::from(ring.variables[idx].granularity);
        Ok(Self::monomial(ring, Monomial(units), 1))
    }

    /// Builds a polynomial from `(exponent units, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I, C>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(ring);
        for (units, c) in terms {
            assert_eq!(units.len(), ring.len(), "monomial length does not match ring");
            p.add_term(Monomial(units), c.into());
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Returns `Some((m, c))` if the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_ring(&self, other: &LaurentPoly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        let mut out = LaurentPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.ring);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        out
    }

    /// Sum of all coefficients, i.e. the value at every variable equal to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Parses `text` in the polynomial grammar, e.g. `"x + 2*y^2*z - t^(-1/2)"`.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<LaurentPoly, PolyError> {
        parse::parse(ring, text)
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_poly(self, f)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the operands live in different rings; see the `try_` variant.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

/// Reduced fraction `units / granularity` as `(numerator, denominator)`.
pub(crate) fn reduced_exponent(units: i64, granularity: u32) -> (i64, i64) {
    let g = i64::from(granularity);
    let d = num_integer::gcd(units, g);
    (units / d, g / d)
}

pub(crate) fn is_unit(c: &BigInt) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(text: &str) -> LaurentPoly {
        LaurentPoly::parse(&Ring::bracket(), text).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(br("A + B") + br("A - B"), br("2*A"));
    }

    #[test]
    fn additive_identity() {
        let p = br("A^3*d + 3*A^2*B");
        assert_eq!(&p + &LaurentPoly::zero(&Ring::bracket()), p);
    }

    #[test]
    fn example_sum() {
        let ring = Ring::bollobas_riordan();
        let p = LaurentPoly::parse(&ring, "x + 2 + y").unwrap();
        let q = LaurentPoly::parse(&ring, "x*y*z^2 + 2*y*z + y^2*z").unwrap();
        let r = LaurentPoly::parse(&ring, "x + 2 + y + x*y*z^2 + 2*y*z + y^2*z").unwrap();
        assert_eq!(p + q, r);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(br("A + B") * br("A - B"), br("A^2 - B^2"));
    }

    #[test]
    fn laurent_inverse() {
        assert_eq!(br("d^-1") * br("d"), br("1"));
    }

    #[test]
    fn identity_substitution_images_multiply() {
        assert_eq!(br("A*d*B^-1") * br("B*d*A^-1"), br("d^2"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = LaurentPoly::one(&Ring::bracket());
        let b = LaurentPoly::one(&Ring::jones());
        assert_eq!(a.try_add(&b), Err(PolyError::RingMismatch));
        assert_eq!(a.try_mul(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn equal_rings_built_separately_interoperate() {
        let a = LaurentPoly::one(&Ring::bracket());
        let b = LaurentPoly::one(&Ring::bracket());
        assert_eq!(a + b, br("2"));
    }

    #[test]
    fn ring_validation() {
        assert!(Ring::new([("x", 3)]).is_err());
        assert!(Ring::new([("x", 1), ("x", 2)]).is_err());
        assert!(Ring::new([("", 1)]).is_err());
        assert!(Ring::new([("1x", 1)]).is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let p = br("A - 2*B^-1 + d");
        let mut q = LaurentPoly::one(&Ring::bracket());
        for k in 0..6 {
            assert_eq!(p.pow(k), q);
            q = &q * &p;
        }
    }

    #[test]
    fn coefficients_do_not_overflow() {
        let p = br("2*A + 3");
        let big = p.pow(80);
        assert_eq!(big.coefficient_sum(), BigInt::from(5).pow(80));
    }
}
