//! Strategies and checks for the polynomial kernel.

use std::sync::Arc;

use proptest::prelude::*;
use vlink::{LaurentPoly, Ring, Substitution};

/// `a` integral, `b` half-integral and `c` quarter-integral.
pub fn mixed_ring() -> Arc<Ring> {
    Ring::new([("a", 1), ("b", 2), ("c", 4)]).unwrap()
}

/// Two variables with natural-number exponents only, for polynomial images.
pub fn plain_ring() -> Arc<Ring> {
    Ring::new([("a", 1), ("b", 1)]).unwrap()
}

pub fn target_ring() -> Arc<Ring> {
    Ring::new([("u", 2), ("v", 1)]).unwrap()
}

pub fn poly(ring: Arc<Ring>, exponents: std::ops::Range<i64>, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    let n = ring.len();
    prop::collection::vec((prop::collection::vec(exponents, n), -6i64..=6), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(&ring, terms))
}

pub fn mixed_poly() -> impl Strategy<Value = LaurentPoly> {
    poly(mixed_ring(), -8..9, 5)
}

/// Monomial images, with an optional sign on the integral variable.
pub fn monomial_substitution() -> impl Strategy<Value = Substitution> {
    (prop::collection::vec(-3i64..=3, 6), any::<bool>()).prop_map(|(u, negate_a)| {
        let t = target_ring();
        // Image exponents are integers times the source denominator `g`,
        // so every power lands back on whole exponents. `u` counts halves.
        let m = |i: usize, g: i64| vlink::Monomial::new(vec![2 * g * u[i], g * u[i + 1]]);
        Substitution::new(&t)
            .map("a", LaurentPoly::monomial(&t, m(0, 1), if negate_a { -1 } else { 1 }))
            .map("b", LaurentPoly::monomial(&t, m(2, 2), 1))
            .map("c", LaurentPoly::monomial(&t, m(4, 4), 1))
    })
}

pub fn polynomial_substitution() -> impl Strategy<Value = Substitution> {
    let t = target_ring();
    (poly(t.clone(), -3..4, 3), poly(t.clone(), -3..4, 3))
        .prop_map(move |(pa, pb)| Substitution::new(&t).map("a", pa).map("b", pb))
}

pub fn check_ring_axioms(p: &LaurentPoly, q: &LaurentPoly, r: &LaurentPoly) -> Result<(), String> {
    let ring = p.ring();
    let zero = LaurentPoly::zero(ring);
    let one = LaurentPoly::one(ring);
    let checks = [
        ("a+b=b+a", p + q == q + p),
        ("ab=ba", p * q == q * p),
        ("(a+b)+c=a+(b+c)", &(p + q) + r == p + &(q + r)),
        ("(ab)c=a(bc)", &(p * q) * r == p * &(q * r)),
        ("a(b+c)=ab+ac", p * &(q + r) == &(p * q) + &(p * r)),
        ("a+0=a", &(p + &zero) == p),
        ("a*1=a", &(p * &one) == p),
        ("a-a=0", (p - &p.clone()).is_zero()),
        ("a+(-a)=0", (p + &(-p.clone())).is_zero()),
        ("a*0=0", (p * &zero).is_zero()),
        ("a^2=aa", p.pow(2) == p * p),
        (
            "parse(print(a))=a",
            LaurentPoly::parse(ring, &p.to_string()).as_ref() == Ok(p),
        ),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("{name} fails for a={p}, b={q}, c={r}")),
        None => Ok(()),
    }
}

pub fn check_homomorphism(s: &Substitution, p: &LaurentPoly, q: &LaurentPoly) -> Result<(), String> {
    let f = |x: &LaurentPoly| s.apply(x).map_err(|e| format!("{x}: {e}"));
    let (fp, fq) = (f(p)?, f(q)?);
    if f(&(p + q))? != &fp + &fq {
        return Err(format!("additivity fails for {p} and {q}"));
    }
    if f(&(p * q))? != &fp * &fq {
        return Err(format!("multiplicativity fails for {p} and {q}"));
    }
    if f(&LaurentPoly::one(p.ring()))? != LaurentPoly::one(s.target()) {
        return Err("1 does not map to 1".into());
    }
    Ok(())
}
