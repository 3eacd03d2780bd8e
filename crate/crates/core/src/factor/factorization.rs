use std::cmp::Ordering;

use num_traits::One;

use crate::poly::{print, Polynomial, VariableFrame};
use crate::rational::Rational;

/// `unit · Π factor^multiplicity`, with primitive integer factors of positive
/// leading coefficient, sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Polynomial, u32)>,
}

pub(crate) fn canonical_order(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.terms().rev().cmp(b.terms().rev()))
}

impl Factorization {
    /// Merges equal factors and sorts by degree, then by terms.
    pub(crate) fn canonical(unit: Rational, raw: Vec<(Polynomial, u32)>) -> Self {
        let mut factors: Vec<(Polynomial, u32)> = Vec::new();
        for (p, e) in raw {
            let p = p.normalized();
            if p.is_constant() || e == 0 {
                continue;
            }
            match factors.iter_mut().find(|(q, _)| *q == p) {
                Some((_, m)) => *m += e,
                None => factors.push((p, e)),
            }
        }
        factors.sort_by(|a, b| canonical_order(&a.0, &b.0));
        Factorization { unit, factors }
    }

    pub fn expand(&self, arity: usize) -> Polynomial {
        self.factors.iter().fold(
            Polynomial::constant(arity, self.unit.clone()),
            |acc, (p, e)| &acc * &p.pow(*e),
        )
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn total_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.total_multiplicity() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn render(&self, frame: &VariableFrame) -> Vec<(String, u32)> {
        self.factors
            .iter()
            .map(|(p, e)| (print(p, frame), *e))
            .collect()
    }
}

impl Default for Factorization {
    fn default() -> Self {
        Factorization {
            unit: Rational::one(),
            factors: Vec::new(),
        }
    }
}
