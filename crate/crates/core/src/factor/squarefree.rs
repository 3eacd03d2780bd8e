use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use super::dense::{self, to_dense};
use super::modp::{random_prime, Fp};
use super::multivariate::random_line;
use crate::error::{Error, Result};
use crate::poly::{gcd, gcd_many, Polynomial};
use crate::verdict::Verdict;

/// Gcd of all first partial derivatives; zero for constants.
pub fn gcd_of_partials(f: &Polynomial) -> Polynomial {
    let partials: Vec<Polynomial> = (0..f.arity()).map(|i| f.derivative(i)).collect();
    gcd_many(f.arity(), partials.iter().filter(|p| !p.is_zero()))
}

/// Sound fast path: a degree-preserving line restriction that stays
/// square-free modulo a prime not dividing its leading coefficient.
fn modular_line_certificate(f: &Polynomial, rng: &mut impl Rng) -> bool {
    let d = f.degree();
    for _ in 0..3 {
        let line = random_line(f.arity(), 50, rng);
        let g = f.substitute(&line).expect("line images share arity");
        if g.degree() != d {
            continue;
        }
        let z = dense::primitive_z(&to_dense(&g, 0));
        let fp = Fp::new(random_prime(rng));
        let p = BigInt::from(fp.p);
        if (z.last().unwrap() % &p).is_zero() {
            continue;
        }
        let zp: Vec<u64> = fp.trim(
            z.iter()
                .map(|c| {
                    use num_integer::Integer;
                    c.mod_floor(&p).try_into().expect("residue fits")
                })
                .collect(),
        );
        if fp.is_squarefree(&zp) {
            return true;
        }
    }
    false
}

pub fn is_squarefree(f: &Polynomial) -> Result<Verdict<Polynomial>> {
    is_squarefree_with(f, &mut super::default_rng())
}

pub(crate) fn is_squarefree_with(f: &Polynomial, rng: &mut impl Rng) -> Result<Verdict<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let one = Polynomial::one(f.arity());
    if f.is_constant() {
        return Ok(Verdict::new(true, one, "constant"));
    }
    if f.degree() == 1 {
        return Ok(Verdict::new(true, one, "linear"));
    }
    if modular_line_certificate(f, rng) {
        return Ok(Verdict::new(true, one, "line-restriction-mod-p"));
    }
    let g = gcd(f, &gcd_of_partials(f));
    Ok(Verdict::new(g.is_constant(), g, "gcd-of-partials"))
}

/// Product of the distinct irreducible factors, normalized.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Polynomial::one(f.arity()));
    }
    let g = gcd(f, &gcd_of_partials(f));
    Ok(f.div_exact(&g)
        .ok_or_else(|| Error::Internal("gcd does not divide".into()))?
        .normalized())
}
