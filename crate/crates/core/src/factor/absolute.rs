//! Irreducibility over ℚ and over its algebraic closure.
//!
//! Absolute irreducibility of a bivariate `f` with `deg_x f = m`,
//! `deg_y f = n` and `gcd(f, f_x) = 1` is decided by the dimension of the
//! space of pairs `(g, h)`, `deg g ≤ (m-1, n)`, `deg h ≤ (m, n-1)`, with
//! `f g_y - g f_y = f h_x - h f_x`. That dimension equals the number of
//! absolutely irreducible factors. Nullity one modulo a prime already
//! certifies it over ℚ, since reduction can only lower the rank and
//! `(f_x, f_y)` is always a solution.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::factorization::Factorization;
use super::modp::{random_prime, Fp};
use super::multivariate::factor_with;
use crate::error::{Error, Result};
use crate::linalg::ScalarMatrix;
use crate::poly::{gcd, Monomial, Polynomial};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuppertOutcome {
    AbsolutelyIrreducible,
    NotAbsolutelyIrreducible,
    Inapplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalVerdict {
    Irreducible,
    Reducible(Factorization),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbsoluteVerdict {
    Irreducible,
    Reducible,
    Undetermined,
}

impl AbsoluteVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            AbsoluteVerdict::Irreducible => "irreducible",
            AbsoluteVerdict::Reducible => "reducible",
            AbsoluteVerdict::Undetermined => "undetermined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub rational: RationalVerdict,
    pub absolute: AbsoluteVerdict,
    pub rational_method: &'static str,
    pub absolute_method: &'static str,
}

impl IrreducibilityVerdict {
    pub fn rational_irreducible(&self) -> bool {
        self.rational == RationalVerdict::Irreducible
    }
}

/// Coefficient matrix of the linear system, one column per unknown
/// coefficient of `g` then of `h`, rows indexed by monomials.
fn ruppert_columns(f: &Polynomial, x: usize, y: usize) -> Vec<Polynomial> {
    let arity = f.arity();
    let (m, n) = (f.degree_in(x), f.degree_in(y));
    let (fx, fy) = (f.derivative(x), f.derivative(y));
    let mono = |i: u32, j: u32| {
        let mut e = vec![0u32; arity];
        e[x] = i;
        e[y] = j;
        Polynomial::term(Monomial::new(e.as_slice()), Rational::one())
    };
    let mut cols = Vec::new();
    for i in 0..m {
        for j in 0..=n {
            let g = mono(i, j);
            cols.push(&(f * &g.derivative(y)) - &(&g * &fy));
        }
    }
    for i in 0..=m {
        for j in 0..n {
            let h = mono(i, j);
            cols.push(&(&h * &fx) - &(f * &h.derivative(x)));
        }
    }
    cols
}

fn row_index(cols: &[Polynomial]) -> BTreeMap<Monomial, usize> {
    let mut rows = BTreeMap::new();
    for c in cols {
        for (m, _) in c.terms() {
            let k = rows.len();
            rows.entry(m.clone()).or_insert(k);
        }
    }
    rows
}

fn nullity_mod_p(cols: &[Polynomial], fp: &Fp) -> Option<usize> {
    let rows = row_index(cols);
    let p = BigInt::from(fp.p);
    let mut m = vec![vec![0u64; cols.len()]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        for (mono, v) in c.terms() {
            let den = v.denom().mod_floor(&p);
            if den.is_zero() {
                return None;
            }
            let num: u64 = v.numer().mod_floor(&p).try_into().ok()?;
            let den: u64 = den.try_into().ok()?;
            m[rows[mono]][j] = num * fp.inv(den) % fp.p;
        }
    }
    Some(cols.len() - fp.rank(&mut m, cols.len()))
}

fn nullity_rational(cols: &[Polynomial]) -> usize {
    let rows = row_index(cols);
    let mut data = vec![Rational::zero(); rows.len() * cols.len()];
    for (j, c) in cols.iter().enumerate() {
        for (mono, v) in c.terms() {
            data[rows[mono] * cols.len() + j] = v.clone();
        }
    }
    let mat = ScalarMatrix::new(rows.len(), cols.len(), data).expect("shape");
    cols.len() - mat.rank()
}

pub fn ruppert_test(f: &Polynomial) -> RuppertOutcome {
    ruppert_with(f, &mut super::default_rng())
}

pub(crate) fn ruppert_with(f: &Polynomial, rng: &mut impl Rng) -> RuppertOutcome {
    let vars = f.variables();
    if vars.len() != 2 {
        return RuppertOutcome::Inapplicable("needs exactly two variables".into());
    }
    if !super::squarefree::is_squarefree_with(f, rng).is_ok_and(|v| v.holds) {
        return RuppertOutcome::Inapplicable("not square-free".into());
    }
    let (a, b) = (vars[0], vars[1]);
    let (x, y) = if gcd(f, &f.derivative(a)).is_constant() {
        (a, b)
    } else if gcd(f, &f.derivative(b)).is_constant() {
        (b, a)
    } else {
        // a factor free of each variable: reducible over ℚ already
        return RuppertOutcome::NotAbsolutelyIrreducible;
    };
    let cols = ruppert_columns(f, x, y);
    for _ in 0..2 {
        let fp = Fp::new(random_prime(rng));
        if nullity_mod_p(&cols, &fp) == Some(1) {
            return RuppertOutcome::AbsolutelyIrreducible;
        }
    }
    if nullity_rational(&cols) == 1 {
        RuppertOutcome::AbsolutelyIrreducible
    } else {
        RuppertOutcome::NotAbsolutelyIrreducible
    }
}

/// `f` is linear in some variable with coefficients of constant gcd.
fn linear_with_unit_content(f: &Polynomial) -> bool {
    f.variables().into_iter().any(|i| {
        f.degree_in(i) == 1 && {
            let cs = f.coefficients_in(i);
            gcd(&cs[0], &cs[1]).is_constant()
        }
    })
}

fn plane_section(f: &Polynomial, rng: &mut impl Rng) -> Option<Polynomial> {
    let d = f.degree();
    for _ in 0..10 {
        let images: Vec<Polynomial> = (0..f.arity())
            .map(|_| {
                let a = rng.random_range(-5i64..=5);
                let b = rng.random_range(-5i64..=5);
                let c = rng.random_range(-5i64..=5);
                Polynomial::from_int_terms(2, &[(a, &[1, 0]), (b, &[0, 1]), (c, &[0, 0])])
            })
            .collect();
        let g = f.substitute(&images).ok()?;
        if g.degree() == d && g.variables().len() == 2 {
            return Some(g);
        }
    }
    None
}

pub fn irreducibility(f: &Polynomial) -> Result<IrreducibilityVerdict> {
    irreducibility_with(f, &mut super::default_rng())
}

pub(crate) fn irreducibility_with(
    f: &Polynomial,
    rng: &mut impl Rng,
) -> Result<IrreducibilityVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let fact = factor_with(f, rng)?;
    if !fact.is_irreducible() {
        return Ok(IrreducibilityVerdict {
            rational: RationalVerdict::Reducible(fact),
            absolute: AbsoluteVerdict::Reducible,
            rational_method: "factorization",
            absolute_method: "rational-factorization",
        });
    }
    let verdict = |absolute, absolute_method| IrreducibilityVerdict {
        rational: RationalVerdict::Irreducible,
        absolute,
        rational_method: "factorization",
        absolute_method,
    };
    if f.degree() == 1 {
        return Ok(verdict(AbsoluteVerdict::Irreducible, "linear"));
    }
    let vars = f.variables();
    if vars.len() == 1 {
        return Ok(verdict(AbsoluteVerdict::Reducible, "univariate-splits"));
    }
    if linear_with_unit_content(f) {
        return Ok(verdict(AbsoluteVerdict::Irreducible, "linear-in-variable"));
    }
    if vars.len() == 2 {
        return Ok(match ruppert_with(f, rng) {
            RuppertOutcome::AbsolutelyIrreducible => verdict(AbsoluteVerdict::Irreducible, "ruppert"),
            RuppertOutcome::NotAbsolutelyIrreducible => verdict(AbsoluteVerdict::Reducible, "ruppert"),
            RuppertOutcome::Inapplicable(_) => verdict(AbsoluteVerdict::Undetermined, "ruppert-inapplicable"),
        });
    }
    let mut reducible = 0;
    let mut applicable = 0;
    for _ in 0..3 {
        let Some(section) = plane_section(f, rng) else {
            continue;
        };
        match ruppert_with(&section, rng) {
            RuppertOutcome::AbsolutelyIrreducible => {
                return Ok(verdict(AbsoluteVerdict::Irreducible, "ruppert-plane-section"));
            }
            RuppertOutcome::NotAbsolutelyIrreducible => {
                applicable += 1;
                reducible += 1;
            }
            RuppertOutcome::Inapplicable(_) => {}
        }
    }
    Ok(if applicable == 3 && reducible == 3 {
        verdict(AbsoluteVerdict::Reducible, "ruppert-plane-sections")
    } else {
        verdict(AbsoluteVerdict::Undetermined, "ruppert-plane-sections")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_standard as p;

    #[test]
    fn ruppert_examples() {
        assert_eq!(ruppert_test(&p("x1^2 - x2", 2)), RuppertOutcome::AbsolutelyIrreducible);
        assert_eq!(ruppert_test(&p("x1^2 - x2^2", 2)), RuppertOutcome::NotAbsolutelyIrreducible);
        assert!(matches!(ruppert_test(&p("x1^2", 2)), RuppertOutcome::Inapplicable(_)));
        assert_eq!(ruppert_test(&p("x1^2 + x2^2", 2)), RuppertOutcome::NotAbsolutelyIrreducible);
        assert_eq!(
            ruppert_test(&p("x1^3 + x2^3 + x1*x2 + 1", 2)),
            RuppertOutcome::AbsolutelyIrreducible
        );
    }

    #[test]
    fn irreducibility_examples() {
        let v = irreducibility(&p("x1*x2", 2)).unwrap();
        assert!(matches!(v.rational, RationalVerdict::Reducible(_)));
        assert_eq!(v.absolute, AbsoluteVerdict::Reducible);

        let v = irreducibility(&p("x1^2 + x2^2", 2)).unwrap();
        assert_eq!(v.rational, RationalVerdict::Irreducible);
        assert_eq!(v.absolute, AbsoluteVerdict::Reducible);

        let v = irreducibility(&p("x1 + x2^3", 2)).unwrap();
        assert_eq!(v.rational, RationalVerdict::Irreducible);
        assert_eq!(v.absolute, AbsoluteVerdict::Irreducible);

        assert_eq!(irreducibility(&p("3", 2)), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn three_variables() {
        let v = irreducibility(&p("x1^2 + x2^2 + x3^2 - 1", 3)).unwrap();
        assert_eq!(v.absolute, AbsoluteVerdict::Irreducible);
        let v = irreducibility(&p("x1^2 + x2^2 + 2*x3^2 + 2*x1*x3 + 2*x2*x3", 3));
        // (x1 + x3)^2 + (x2 + x3)^2: absolutely reducible, rationally irreducible
        let v = v.unwrap();
        assert_eq!(v.rational, RationalVerdict::Irreducible);
        assert_eq!(v.absolute, AbsoluteVerdict::Reducible);
    }
}
