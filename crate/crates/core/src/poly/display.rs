//! Text rendering compatible with the parser in [`super::parse`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use super::{BiPoly, UniPoly};
use crate::arith::Rational;

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => String::from(var),
        _ => alloc::format!("{var}^{e}"),
    }
}

/// Writes `sum c * m` with terms already in display order.
fn write_terms(out: &mut impl Write, terms: &[(Rational, String)]) -> fmt::Result {
    if terms.is_empty() {
        return out.write_str("0");
    }
    for (k, (c, m)) in terms.iter().enumerate() {
        let a = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.write_str("-")?;
            }
        } else {
            out.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        if m.is_empty() {
            write!(out, "{a}")?;
        } else if a.is_one() {
            out.write_str(m)?;
        } else {
            write!(out, "{a}*{m}")?;
        }
    }
    Ok(())
}

impl UniPoly {
    pub fn to_string_in(&self, var: &str) -> String {
        let terms: Vec<(Rational, String)> = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), power(var, i)))
            .collect();
        let mut s = String::new();
        write_terms(&mut s, &terms).unwrap();
        s
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("X"))
    }
}

impl BiPoly {
    pub fn to_string_in(&self, tvar: &str, xvar: &str) -> String {
        let mut terms = Vec::new();
        for (j, cj) in self.coeffs().iter().enumerate().rev() {
            for (i, c) in cj.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let m = match (power(tvar, i), power(xvar, j)) {
                    (a, b) if a.is_empty() => b,
                    (a, b) if b.is_empty() => a,
                    (a, b) => alloc::format!("{a}*{b}"),
                };
                terms.push((c.clone(), m));
            }
        }
        let mut s = String::new();
        write_terms(&mut s, &terms).unwrap();
        s
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("T", "X"))
    }
}
