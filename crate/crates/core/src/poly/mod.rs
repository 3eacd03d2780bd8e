//! Exact sparse multivariate polynomials over ℚ.

mod frame;
mod gcd;
mod map;
mod monomial;
mod parse;
mod polynomial;
mod print;

pub use frame::VariableFrame;
pub use gcd::{content_in, content_primitive, gcd, gcd_many, lcm};
pub use map::PolyMap;
pub use monomial::{Exponents, Monomial};
pub use parse::{identifiers, parse};
pub use polynomial::Polynomial;
pub use print::print;

/// Parses against the standard frame `x1..xn`; panics on malformed input.
/// Intended for tests and literals embedded in code.
pub fn parse_standard(text: &str, n: usize) -> Polynomial {
    parse(text, &VariableFrame::standard(n))
        .unwrap_or_else(|e| panic!("bad polynomial literal `{text}`: {e}"))
}

/// Map counterpart of [`parse_standard`].
pub fn parse_map_standard(components: &[&str], n: usize) -> PolyMap {
    PolyMap::new(
        n,
        components.iter().map(|c| parse_standard(c, n)).collect(),
    )
    .expect("components share the frame arity")
}
