use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u32; 8]>;

/// A power product `x^α`, ordered graded-lexicographically: first by total
/// degree, then lexicographically with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            degree: 0,
            exps: SmallVec::from_elem(0, arity),
        }
    }

    pub fn new(exps: impl Into<Exponents>) -> Self {
        let exps = exps.into();
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn var(arity: usize, i: usize, power: u32) -> Self {
        let mut m = Self::one(arity);
        m.exps[i] = power;
        m.degree = power;
        m
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            degree: other.degree - self.degree,
            exps,
        })
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        let degree = self.degree - exps[i] + e;
        exps[i] = e;
        Monomial { degree, exps }
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect::<Exponents>(),
        )
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let m = |e: &[u32]| Monomial::new(Exponents::from_slice(e));
        assert!(m(&[0, 3]) > m(&[1, 0]));
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[0, 0]) < m(&[0, 1]));
    }

    #[test]
    fn division() {
        let a = Monomial::new(Exponents::from_slice(&[1, 2]));
        let b = Monomial::new(Exponents::from_slice(&[3, 2]));
        assert_eq!(a.quotient_of(&b).unwrap().exponents(), &[2, 0]);
        assert!(b.quotient_of(&a).is_none());
    }
}
