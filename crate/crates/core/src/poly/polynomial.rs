use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Exponents, Monomial};
use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, numerator_gcd, Rational};

/// Sparse multivariate polynomial over ℚ in a fixed number of variables.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(arity), c);
        }
        p
    }

    pub fn from_int(arity: usize, c: i64) -> Self {
        Self::constant(arity, Rational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        Self::term(Monomial::var(arity, i, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.arity());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from `(coefficient, exponents)` pairs.
    pub fn from_int_terms(arity: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            arity,
            terms.iter().map(|(c, e)| {
                (
                    Monomial::new(Exponents::from_slice(e)),
                    Rational::from_integer(BigInt::from(*c)),
                )
            }),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.arity))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_of(&self, exps: &[u32]) -> Rational {
        self.coefficient(&Monomial::new(Exponents::from_slice(exps)))
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Total degree with the zero polynomial mapped to 0.
    pub fn degree(&self) -> u32 {
        self.total_degree().unwrap_or(0)
    }

    /// Smallest total degree of a term.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) > 0)
    }

    /// Indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.arity).filter(|&i| self.depends_on(i)).collect()
    }

    /// Degrees of the nonzero terms, ascending and deduplicated.
    pub fn term_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.term_degrees().len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Self::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to the zero-based variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.terms
                    .insert(m.with_exponent(i, e - 1), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Composition `f(images)`: variable `i` is replaced by `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.arity,
            None => 0,
        };
        if let Some(bad) = images.iter().find(|p| p.arity != target) {
            return Err(Error::ArityMismatch {
                expected: target,
                found: bad.arity,
            });
        }
        if self.arity == 0 {
            return Ok(Self::constant(0, self.constant_term()));
        }
        // powers[i][e] = images[i]^e, built lazily up to the needed degree
        let mut powers: Vec<Vec<Polynomial>> = (0..self.arity)
            .map(|_| vec![Polynomial::one(target)])
            .collect();
        for i in 0..self.arity {
            let need = self.degree_in(i) as usize;
            for e in 1..=need {
                let next = &powers[i][e - 1] * &images[i];
                powers[i].push(next);
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc: Option<Polynomial> = None;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = &powers[i][e as usize];
                acc = Some(match acc {
                    None => factor.clone(),
                    Some(a) => &a * factor,
                });
            }
            match acc {
                None => out.add_term(Monomial::one(target), c.clone()),
                Some(a) => {
                    for (k, v) in a.terms {
                        out.add_term(k, v * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity, "evaluation point has wrong length");
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += t;
        }
        sum
    }

    /// Sets variable `i` to the value `c`, keeping the arity.
    pub fn specialize(&self, i: usize, c: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        for (m, v) in &self.terms {
            let e = m.exponent(i);
            let coeff = if e == 0 {
                v.clone()
            } else {
                v * num_traits::pow(c.clone(), e as usize)
            };
            out.add_term(m.with_exponent(i, 0), coeff);
        }
        out
    }

    /// Coefficients with respect to variable `i`: `self = Σ_k out[k] x_i^k`,
    /// each `out[k]` free of `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(self.arity); self.degree_in(i) as usize + 1];
        if self.is_zero() {
            return vec![];
        }
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            out[e].terms.insert(m.with_exponent(i, 0), c.clone());
        }
        out
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(arity: usize, i: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(arity);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let e = m.exponent(i) + k as u32;
                out.add_term(m.with_exponent(i, e), v.clone());
            }
        }
        out
    }

    /// Re-homes the polynomial into `new_arity` variables, sending variable
    /// `i` to `targets[i]`.
    pub fn embed(&self, new_arity: usize, targets: &[usize]) -> Polynomial {
        assert_eq!(targets.len(), self.arity);
        let mut out = Polynomial::zero(new_arity);
        for (m, c) in &self.terms {
            let mut exps: Exponents = smallvec::smallvec![0; new_arity];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[targets[i]] += e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Embeds into a larger frame, keeping variable indices.
    pub fn widen(&self, new_arity: usize) -> Polynomial {
        assert!(new_arity >= self.arity);
        let targets: Vec<usize> = (0..self.arity).collect();
        self.embed(new_arity, &targets)
    }

    /// Drops trailing variables; panics if any of them occurs.
    pub fn narrow(&self, new_arity: usize) -> Polynomial {
        assert!(
            (new_arity..self.arity).all(|i| !self.depends_on(i)),
            "cannot narrow: polynomial uses a dropped variable"
        );
        let mut out = Polynomial::zero(new_arity);
        for (m, c) in &self.terms {
            out.terms.insert(
                Monomial::new(Exponents::from_slice(&m.exponents()[..new_arity])),
                c.clone(),
            );
        }
        out
    }

    /// Unique rational multiple with integer coefficients of gcd 1 and a
    /// positive leading coefficient. Zero stays zero.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let scale = self.normalizing_factor();
        self.scale(&scale)
    }

    /// The factor `u` with `u * self == self.normalized()`.
    pub fn normalizing_factor(&self) -> Rational {
        let lcm = denominator_lcm(self.terms.values());
        let ints: Vec<Rational> = self
            .terms
            .values()
            .map(|c| c * Rational::from_integer(lcm.clone()))
            .collect();
        let g = numerator_gcd(ints.iter());
        let mut s = Rational::new(lcm, g);
        if self.leading_coefficient().is_negative() {
            s = -s;
        }
        s
    }

    /// Integer coefficients, provided every coefficient is integral.
    pub fn integer_coefficients(&self) -> Option<Vec<(Monomial, BigInt)>> {
        self.terms
            .iter()
            .map(|(m, c)| c.denom().is_one().then(|| (m.clone(), c.numer().clone())))
            .collect()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.arity, divisor.arity, "arity mismatch in division");
        let (lm, lc) = divisor.leading_term()?;
        if self.is_zero() {
            return Some(Polynomial::zero(self.arity));
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        if divisor.degree() > self.degree() {
            return None;
        }
        for i in 0..self.arity {
            if divisor.degree_in(i) > self.degree_in(i) {
                return None;
            }
        }
        let lm = lm.clone();
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero(self.arity);
        while let Some((rm, rc)) = rem.leading_term() {
            let m = lm.quotient_of(rm)?;
            let c = rc * &lc_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&m), -(dc * &c));
            }
            quotient.terms.insert(m, c);
        }
        Some(quotient)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.arity),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let frame = super::frame::VariableFrame::standard(self.arity);
        write!(f, "{}", super::print::print(self, &frame))
    }
}

fn add_impl(a: &Polynomial, b: &Polynomial, negate: bool) -> Polynomial {
    assert_eq!(a.arity, b.arity, "arity mismatch in polynomial sum");
    let mut out = a.clone();
    for (m, c) in &b.terms {
        out.add_term(m.clone(), if negate { -c.clone() } else { c.clone() });
    }
    out
}

fn mul_impl(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert_eq!(a.arity, b.arity, "arity mismatch in polynomial product");
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.arity);
    }
    let (small, large) = if a.num_terms() <= b.num_terms() {
        (a, b)
    } else {
        (b, a)
    };
    let mut out = Polynomial::zero(a.arity);
    for (m1, c1) in &small.terms {
        for (m2, c2) in &large.terms {
            out.add_term(m1.mul(m2), c1 * c2);
        }
    }
    out
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        add_impl(self, rhs, false)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        add_impl(self, rhs, true)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        mul_impl(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_standard as p;
    use crate::rational::{rat, rat_frac};

    #[test]
    fn ring_operation_examples() {
        assert_eq!(
            p("x1 + x2", 2) * p("x1 - x2", 2),
            p("x1^2 - x2^2", 2)
        );
        assert_eq!(p("x1 + 7*x2^3", 2).pow(0), Polynomial::one(2));
        let z = p("x1", 1) + p("-x1", 1);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x1^2*x2", 2).derivative(0), p("2*x1*x2", 2));
        assert!(p("x2^3", 2).derivative(0).is_zero());
        assert_eq!(p("x1^3 - 3*x1 + 2", 1).derivative(0), p("3*x1^2 - 3", 1));
    }

    #[test]
    fn substitution_examples() {
        let f = p("x1^2", 1);
        assert_eq!(f.substitute(&[p("x1 + 1", 1)]).unwrap(), p("x1^2 + 2*x1 + 1", 1));
        let w = p("x1*x2", 2);
        let images = [p("x1 + x2^2", 2), p("x2", 2)];
        assert_eq!(w.substitute(&images).unwrap(), p("(x1 + x2^2)*x2", 2));
        let g = p("3*x1*x2^2 - x2 + 5", 2);
        let id = [p("x1", 2), p("x2", 2)];
        assert_eq!(g.substitute(&id).unwrap(), g);
        assert!(matches!(
            g.substitute(&[p("x1", 2)]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn homogeneous_part_examples() {
        let f = p("x1 + x1^3", 1);
        assert_eq!(f.homogeneous_part(3), p("x1^3", 1));
        assert!(f.homogeneous_part(2).is_zero());
        assert_eq!(p("x1 + x2^2 + 5", 2).homogeneous_part(0), p("5", 2));
    }

    #[test]
    fn exact_division() {
        let f = p("x1^3 - 3*x1 + 2", 1);
        let q = f.div_exact(&p("(x1 - 1)^2", 1)).unwrap();
        assert_eq!(q, p("x1 + 2", 1));
        assert!(p("x1", 2).div_exact(&p("x2", 2)).is_none());
        assert_eq!(p("x1^2*x2", 2).div_exact(&p("x1", 2)).unwrap(), p("x1*x2", 2));
    }

    #[test]
    fn normalization() {
        let f = p("-3/2*x1 + 3", 1);
        assert_eq!(f.normalized(), p("x1 - 2", 1));
        assert_eq!(f.normalizing_factor(), rat_frac(-2, 3));
        assert_eq!(p("6", 1).normalized(), p("1", 1));
        assert_eq!(Polynomial::from_int(1, 4).constant_term(), rat(4));
    }

    #[test]
    fn coefficient_views() {
        let f = p("x2*x1^2 + x2^2", 2);
        let c = f.coefficients_in(0);
        assert_eq!(c, vec![p("x2^2", 2), Polynomial::zero(2), p("x2", 2)]);
        assert_eq!(Polynomial::from_coefficients_in(2, 0, &c), f);
        assert_eq!(f.specialize(1, &rat(2)), p("2*x1^2 + 4", 2));
        assert_eq!(f.evaluate(&[rat(1), rat(3)]), rat(12));
    }
}
