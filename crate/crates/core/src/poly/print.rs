use std::fmt;

use num_traits::{One, Signed};

use super::{reduced_exponent, LaurentPoly};

pub(super) fn write_poly(p: &LaurentPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    let vars = p.ring.variables();
    for (i, (m, c)) in p.terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let magnitude = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !magnitude.is_one() || m.is_one() {
            factors.push(magnitude.to_string());
        }
        for (var, &units) in vars.iter().zip(m.units()) {
            if units == 0 {
                continue;
            }
            let (num, den) = reduced_exponent(units, var.granularity());
            let factor = match (num, den) {
                (1, 1) => var.name().to_string(),
                (n, 1) if n > 0 => format!("{}^{}", var.name(), n),
                (n, 1) => format!("{}^({})", var.name(), n),
                (n, d) => format!("{}^({}/{})", var.name(), n, d),
            };
            factors.push(factor);
        }
        f.write_str(&factors.join("*"))?;
    }
    Ok(())
}
