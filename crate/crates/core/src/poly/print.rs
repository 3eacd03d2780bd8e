use num_traits::{One, Signed};

use super::frame::VariableFrame;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::rational::format_rational;

fn monomial_text(m: &Monomial, frame: &VariableFrame) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(frame.name(i).to_string()),
            _ => parts.push(format!("{}^{}", frame.name(i), e)),
        }
    }
    parts.join("*")
}

/// Renders `f` with terms in descending graded-lex order, e.g.
/// `x2^3 + x1` or `3/2*x1*x2 - 1`. The output parses back to `f`.
pub fn print(f: &Polynomial, frame: &VariableFrame) -> String {
    assert_eq!(f.arity(), frame.len(), "frame does not match polynomial arity");
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms().rev().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&monomial_text(m, frame));
        } else {
            out.push_str(&format_rational(&mag));
            out.push('*');
            out.push_str(&monomial_text(m, frame));
        }
    }
    out
}
