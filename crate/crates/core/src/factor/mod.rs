//! Square-freeness, factorization over ℚ and absolute irreducibility.
//!
//! All randomness (primes, evaluation points, restriction lines) comes from a
//! fixed-seed generator, so every call is deterministic. Random choices only
//! affect which certificate is found, never the mathematical answer.

mod absolute;
mod dense;
mod factorization;
pub mod modp;
mod multivariate;
mod squarefree;
mod univariate;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use absolute::{
    irreducibility, ruppert_test, AbsoluteVerdict, IrreducibilityVerdict, RationalVerdict,
    RuppertOutcome,
};
pub use factorization::Factorization;
pub use multivariate::{factor_multivariate, factor_univariate};
pub use squarefree::{gcd_of_partials, is_squarefree, squarefree_part};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::verdict::Verdict;

const SEED: u64 = 0x6b65_6c6c_6572;

pub(crate) fn default_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact divisibility `g | f`, with the quotient as witness on success.
pub fn divides(g: &Polynomial, f: &Polynomial) -> Result<Verdict<Option<Polynomial>>> {
    if g.arity() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: g.arity(),
        });
    }
    if g.is_zero() {
        let q = f.is_zero().then(|| Polynomial::zero(f.arity()));
        return Ok(Verdict::new(f.is_zero(), q, "exact-division"));
    }
    let q = f.div_exact(g);
    Ok(Verdict::new(q.is_some(), q, "exact-division"))
}

/// Shifts `c` for which `f - c` is reducible over ℚ, with their
/// factorizations.
pub fn count_reducible_shifts(
    f: &Polynomial,
    shifts: &[Rational],
) -> Result<(usize, Vec<(Rational, Factorization)>)> {
    let mut found = Vec::new();
    for c in shifts {
        let g = f - &Polynomial::constant(f.arity(), c.clone());
        if g.is_constant() {
            continue;
        }
        let fact = factor_multivariate(&g)?;
        if fact.total_multiplicity() >= 2 {
            found.push((c.clone(), fact));
        }
    }
    Ok((found.len(), found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_standard as p;
    use crate::rational::rat;

    #[test]
    fn combinations_enumerates() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn divides_examples() {
        let v = divides(&p("x1", 2), &p("x1^2*x2", 2)).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(p("x1*x2", 2)));
        let v = divides(&p("(x1 - 1)^2", 1), &p("x1^3 - 3*x1 + 2", 1)).unwrap();
        assert_eq!(v.witness, Some(p("x1 + 2", 1)));
        assert!(!divides(&p("x2", 2), &p("x1", 2)).unwrap().holds);
    }

    #[test]
    fn shift_examples() {
        let range: Vec<Rational> = (-2..=2).map(rat).collect();
        assert_eq!(count_reducible_shifts(&p("x1*x2", 2), &range).unwrap().0, 1);
        assert_eq!(count_reducible_shifts(&p("x1", 2), &range).unwrap().0, 0);
        let (n, w) = count_reducible_shifts(&p("x1^2", 1), &[rat(0), rat(1)]).unwrap();
        assert_eq!(n, 2);
        assert_eq!(w[1].1.factors, vec![(p("x1 - 1", 1), 1), (p("x1 + 1", 1), 1)]);
    }
}
