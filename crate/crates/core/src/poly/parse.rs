//! Hand-rolled recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! poly     := ws [sign] term (sign term)*
//! term     := factor ('*' factor)*
//! factor   := INT | NAME ['^' exponent]
//! exponent := INT | '-' INT | INT '/' INT | '(' ['-'] INT ['/' INT] ')'
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{LaurentPoly, Monomial, PolyError, Ring};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits.parse().map_err(|_| self.error("bad integer"))
    }

    fn small_integer(&mut self) -> Result<i64, PolyError> {
        let n = self.integer()?;
        i64::try_from(n).map_err(|_| self.error("exponent out of range"))
    }
}

pub(super) fn parse(ring: &Arc<Ring>, text: &str) -> Result<LaurentPoly, PolyError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut poly = LaurentPoly::zero(ring);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (m, c) = term(ring, &mut cur)?;
        poly.add_term(m, if negative { -c } else { c });
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.pos += 1;
                negative = false;
            }
            Some('-') => {
                cur.pos += 1;
                negative = true;
            }
            Some(other) => return Err(cur.error(format!("unexpected `{other}`"))),
        }
    }
    Ok(poly)
}

fn term(ring: &Arc<Ring>, cur: &mut Cursor<'_>) -> Result<(Monomial, BigInt), PolyError> {
    let mut coeff = BigInt::one();
    let mut units = vec![0i64; ring.len()];
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => coeff *= cur.integer()?,
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                let idx = ring
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                let (num, den) = if cur.eat('^') { exponent(cur)? } else { (1, 1) };
                let granularity = ring.variables()[idx].granularity();
                let scaled = num * i64::from(granularity);
                if scaled % den != 0 {
                    return Err(PolyError::NotRepresentable {
                        variable: name.to_string(),
                        exponent: format!("{num}/{den}"),
                        granularity,
                    });
                }
                units[idx] += scaled / den;
            }
            _ => return Err(cur.error("expected a coefficient or a variable")),
        }
        if !cur.eat('*') {
            break;
        }
    }
    Ok((Monomial(units), coeff))
}

fn exponent(cur: &mut Cursor<'_>) -> Result<(i64, i64), PolyError> {
    let paren = cur.eat('(');
    let sign = if cur.eat('-') { -1 } else { 1 };
    let num = sign * cur.small_integer()?;
    let den = if cur.eat('/') { cur.small_integer()? } else { 1 };
    if den == 0 {
        return Err(cur.error("zero denominator"));
    }
    if paren && !cur.eat(')') {
        return Err(cur.error("expected `)`"));
    }
    Ok((num, den))
}
