use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::extension::{extend, ExtensionParam, ExtensionVariant};
use crate::error::{Error, Result};
use crate::factor::{factor_multivariate, Factorization};
use crate::poly::{PolyMap, Polynomial};
use crate::rational::{rat, Rational};

/// One audited candidate `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaAudit {
    pub lambda: Vec<Rational>,
    pub samples: usize,
    /// The first reducible combination found, as `(μ, factorization)`.
    pub reducible: Option<(Vec<Rational>, Factorization)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSearch {
    pub lambda: Option<Vec<Rational>>,
    pub audit: Vec<LambdaAudit>,
}

/// Random coefficients `μ` in `[-3, 3]`, the last one for the constant
/// slot, with some component coefficient nonzero.
pub fn sample_mu(len: usize, rng: &mut impl Rng) -> Vec<Rational> {
    loop {
        let mu: Vec<Rational> = (0..=len).map(|_| rat(rng.random_range(-3i64..=3))).collect();
        if mu[..len].iter().any(|c| *c != rat(0)) {
            return mu;
        }
    }
}

/// `μ_1 G_1 + … + μ_m G_m + μ_{m+1}`.
pub fn combination(g: &PolyMap, mu: &[Rational]) -> Polynomial {
    let m = g.arity();
    let mut acc = Polynomial::constant(m, mu[g.len()].clone());
    for (c, gi) in mu.iter().zip(g.components()) {
        acc = &acc + &gi.scale(c);
    }
    acc
}

fn audit(g: &PolyMap, samples: usize, rng: &mut impl Rng) -> Result<Option<(Vec<Rational>, Factorization)>> {
    for _ in 0..samples {
        let mu = sample_mu(g.len(), rng);
        let comb = combination(g, &mu);
        if comb.is_constant() {
            continue;
        }
        let fact = factor_multivariate(&comb)?;
        if !fact.is_irreducible() {
            return Ok(Some((mu, fact)));
        }
    }
    Ok(None)
}

/// Audited sampling for a `λ` making every sampled combination of the
/// extension irreducible over ℚ. Candidates are `0`, then random vectors
/// with entries in `[-2, 2]`, the range growing by one every ten tries.
pub fn find_lambda(
    map: &PolyMap,
    variant: &ExtensionVariant,
    trials: usize,
    samples: usize,
    seed: u64,
) -> Result<LambdaSearch> {
    if variant.is_block() {
        return Err(Error::InvalidParameter(format!(
            "variant {} takes d, not λ",
            variant.name()
        )));
    }
    let n = map.arity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = Vec::new();
    for k in 0..trials {
        let lambda: Vec<Rational> = if k == 0 {
            vec![rat(0); n]
        } else {
            let r = 2 + (k as i64 - 1) / 10;
            (0..n).map(|_| rat(rng.random_range(-r..=r))).collect()
        };
        let g = extend(map, variant, &ExtensionParam::Lambda(lambda.clone()))?;
        let reducible = audit(&g, samples, &mut rng)?;
        let passed = reducible.is_none();
        log.push(LambdaAudit {
            lambda: lambda.clone(),
            samples,
            reducible,
        });
        if passed {
            return Ok(LambdaSearch {
                lambda: Some(lambda),
                audit: log,
            });
        }
    }
    Ok(LambdaSearch {
        lambda: None,
        audit: log,
    })
}
