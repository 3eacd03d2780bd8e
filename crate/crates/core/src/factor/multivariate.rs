//! Factorization over ℚ of polynomials in any number of variables.
//!
//! Contents and monomial factors are split off first. Square-free primitive
//! remainders in two or more variables go through Kronecker substitution when
//! the univariate image is small, and otherwise through evaluation at an
//! integer point followed by multivariate Hensel lifting and subset
//! recombination. Every factor is confirmed by exact division.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use super::combinations;
use super::dense::{self, from_dense, q_bezout, q_divrem, q_mul, to_dense, QPoly, ZPoly};
use super::factorization::Factorization;
use super::univariate::factor_squarefree_z;
use crate::error::{Error, Result};
use crate::poly::{content_in, content_primitive, gcd, Monomial, Polynomial};
use crate::rational::Rational;

/// Largest univariate image degree handed to Kronecker substitution.
const KRONECKER_LIMIT: u64 = 40;
const LINE_TRIALS: usize = 2;

fn z_to_poly(z: &[BigInt], arity: usize, i: usize) -> Polynomial {
    dense::z_from_dense(z, arity, i)
}

fn z_gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let g = gcd(&z_to_poly(a, 1, 0), &z_to_poly(b, 1, 0));
    dense::primitive_z(&to_dense(&g, 0))
}

/// Irreducible factors with multiplicities of a nonconstant polynomial in the
/// single variable `i`.
pub(crate) fn univariate_factors(
    f: &Polynomial,
    i: usize,
    rng: &mut impl Rng,
) -> Vec<(Polynomial, u32)> {
    let arity = f.arity();
    let mut z = dense::primitive_z(&to_dense(f, i));
    let mut out = Vec::new();
    let low = z.iter().take_while(|c| c.is_zero()).count();
    if low > 0 {
        out.push((Polynomial::var(arity, i), low as u32));
        z.drain(..low);
    }
    if z.len() <= 1 {
        return out;
    }
    let g = z_gcd(&z, &dense::z_derivative(&z));
    let sqf = dense::z_primitive(&dense::z_div_exact(&z, &g).expect("gcd divides"));
    for u in factor_squarefree_z(&sqf, rng) {
        let mut rest = z.clone();
        let mut e = 0;
        while let Some(q) = dense::z_div_exact(&rest, &u) {
            rest = q;
            e += 1;
        }
        out.push((z_to_poly(&u, arity, i), e));
    }
    out
}

/// Whether a nonconstant univariate integer polynomial is irreducible over ℚ.
pub(crate) fn univariate_irreducible(z: &[BigInt], rng: &mut impl Rng) -> bool {
    let z = dense::z_primitive(z);
    if z.len() <= 2 {
        return z.len() == 2;
    }
    if z[0].is_zero() {
        return false;
    }
    let g = z_gcd(&z, &dense::z_derivative(&z));
    g.len() == 1 && factor_squarefree_z(&z, rng).len() == 1
}

pub(crate) fn random_line(arity: usize, range: i64, rng: &mut impl Rng) -> Vec<Polynomial> {
    (0..arity)
        .map(|_| {
            let a = rng.random_range(-range..=range);
            let b = rng.random_range(-range..=range);
            Polynomial::from_int_terms(1, &[(a, &[1]), (b, &[0])])
        })
        .collect()
}

/// Irreducibility certificate: a degree-preserving restriction to a line
/// that is irreducible as a univariate polynomial.
fn line_certificate(f: &Polynomial, rng: &mut impl Rng) -> bool {
    let d = f.degree();
    for _ in 0..LINE_TRIALS {
        let line = random_line(f.arity(), 9, rng);
        let g = f.substitute(&line).expect("line images share arity");
        if g.degree() != d {
            continue;
        }
        if univariate_irreducible(&dense::primitive_z(&to_dense(&g, 0)), rng) {
            return true;
        }
    }
    false
}

pub fn factor_multivariate(f: &Polynomial) -> Result<Factorization> {
    factor_with(f, &mut super::default_rng())
}

pub(crate) fn factor_with(f: &Polynomial, rng: &mut impl Rng) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let arity = f.arity();
    let f0 = f.normalized();
    let unit = f.leading_coefficient() / f0.leading_coefficient();
    let mut raw = Vec::new();
    let m = f0.monomial_content();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            raw.push((Polynomial::var(arity, i), e));
        }
    }
    let rest = f0
        .div_exact(&Polynomial::term(m, Rational::one()))
        .expect("monomial content divides");
    split(&rest, 1, &mut raw, rng);
    let fact = Factorization::canonical(unit, raw);
    if fact.expand(arity) != *f {
        return Err(Error::Internal("factorization does not reproduce its input".into()));
    }
    Ok(fact)
}

pub fn factor_univariate(f: &Polynomial) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.variables().len() > 1 {
        return Err(Error::NotUnivariate);
    }
    factor_multivariate(f)
}

fn split(f: &Polynomial, mult: u32, out: &mut Vec<(Polynomial, u32)>, rng: &mut impl Rng) {
    if f.is_constant() {
        return;
    }
    let vars = f.variables();
    if vars.len() == 1 {
        for (g, e) in univariate_factors(f, vars[0], rng) {
            out.push((g, e * mult));
        }
        return;
    }
    for &i in &vars {
        let c = content_in(f, i);
        if !c.is_constant() {
            let p = f.div_exact(&c).expect("content divides");
            split(&c, mult, out, rng);
            split(&p, mult, out, rng);
            return;
        }
    }
    // primitive in every variable from here on
    if vars.iter().any(|&i| f.degree_in(i) == 1) || line_certificate(f, rng) {
        out.push((f.clone(), mult));
        return;
    }
    let x = *vars
        .iter()
        .min_by_key(|&&i| (f.degree_in(i), i))
        .expect("nonconstant");
    let g = gcd(f, &f.derivative(x));
    if g.is_constant() {
        for u in squarefree_factors(f, rng) {
            out.push((u, mult));
        }
        return;
    }
    let sqf = f.div_exact(&g).expect("gcd divides").normalized();
    for u in squarefree_factors(&sqf, rng) {
        let mut rest = f.clone();
        let mut e = 0;
        while let Some(q) = rest.div_exact(&u) {
            rest = q;
            e += 1;
        }
        out.push((u, e * mult));
    }
}

/// Irreducible factors of a square-free polynomial that is primitive in each
/// of its (at least two) variables.
fn squarefree_factors(f: &Polynomial, rng: &mut impl Rng) -> Vec<Polynomial> {
    let (weights, image_degree) = kronecker_weights(f);
    if image_degree <= KRONECKER_LIMIT {
        return kronecker(f, &weights, rng);
    }
    lift_factor(f, rng).unwrap_or_else(|| kronecker(f, &weights, rng))
}

fn kronecker_weights(f: &Polynomial) -> (Vec<u64>, u64) {
    let mut weights = vec![0u64; f.arity()];
    let mut w = 1u64;
    let mut deg = 0u64;
    for i in f.variables() {
        let d = f.degree_in(i) as u64;
        weights[i] = w;
        deg = deg.saturating_add(d.saturating_mul(w));
        w = w.saturating_mul(d + 1);
    }
    (weights, deg)
}

fn kronecker_image(f: &Polynomial, weights: &[u64]) -> QPoly {
    let mut out: BTreeMap<u64, Rational> = BTreeMap::new();
    for (m, c) in f.terms() {
        let k: u64 = m
            .exponents()
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum();
        *out.entry(k).or_insert_with(Rational::zero) += c;
    }
    let len = out.keys().next_back().map_or(0, |k| k + 1) as usize;
    let mut dense_image = vec![Rational::zero(); len];
    for (k, c) in out {
        dense_image[k as usize] = c;
    }
    dense::trim(dense_image)
}

fn kronecker_inverse(u: &[Rational], arity: usize, vars: &[usize], f: &Polynomial) -> Polynomial {
    let terms = u.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
        let mut exps = vec![0u32; arity];
        let mut rest = k as u64;
        for &i in vars {
            let base = f.degree_in(i) as u64 + 1;
            exps[i] = (rest % base) as u32;
            rest /= base;
        }
        (Monomial::new(exps.as_slice()), c.clone())
    });
    Polynomial::from_terms(arity, terms)
}

fn kronecker(f: &Polynomial, weights: &[u64], rng: &mut impl Rng) -> Vec<Polynomial> {
    let arity = f.arity();
    let vars = f.variables();
    let image = kronecker_image(f, weights);
    let image_poly = from_dense(&image, 1, 0);
    let mut items: Vec<QPoly> = Vec::new();
    for (g, e) in univariate_factors(&image_poly, 0, rng) {
        let d = to_dense(&g, 0);
        for _ in 0..e {
            items.push(d.clone());
        }
    }
    recombine(f.clone(), items.len(), |rest, subset| {
        let u = subset
            .iter()
            .fold(vec![Rational::one()], |acc, &i| q_mul(&acc, &items[i]));
        let g = kronecker_inverse(&u, arity, &vars, f);
        if g.is_constant() {
            return None;
        }
        rest.div_exact(&g).map(|q| (g.normalized(), q))
    })
}

/// Generic subset recombination. `test` receives the remaining cofactor and
/// a subset of the live item indices, and returns the found factor with the
/// new cofactor.
fn recombine(
    f: Polynomial,
    count: usize,
    mut test: impl FnMut(&Polynomial, &[usize]) -> Option<(Polynomial, Polynomial)>,
) -> Vec<Polynomial> {
    let mut live: Vec<usize> = (0..count).collect();
    let mut rest = f;
    let mut found = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= live.len() {
        for subset in combinations(live.len(), s) {
            let chosen: Vec<usize> = subset.iter().map(|&k| live[k]).collect();
            if let Some((g, q)) = test(&rest, &chosen) {
                found.push(g);
                rest = q;
                for &k in subset.iter().rev() {
                    live.remove(k);
                }
                continue 'outer;
            }
        }
        s += 1;
    }
    if !rest.is_constant() {
        found.push(rest.normalized());
    }
    found
}

fn y_degree(m: &Monomial, x: usize) -> u32 {
    m.degree() - m.exponent(x)
}

fn truncate(p: &Polynomial, x: usize, k: u32) -> Polynomial {
    Polynomial::from_terms(
        p.arity(),
        p.terms()
            .filter(|(m, _)| y_degree(m, x) <= k)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn max_y_degree(p: &Polynomial, x: usize) -> u32 {
    p.terms().map(|(m, _)| y_degree(m, x)).max().unwrap_or(0)
}

fn leading_in(p: &Polynomial, x: usize) -> Polynomial {
    p.coefficients_in(x)
        .pop()
        .expect("nonzero polynomial has a leading coefficient")
}

/// Evaluation at an integer point in the non-main variables, univariate
/// factorization, Hensel lifting in the ideal of the point, recombination.
/// Returns `None` when no usable point was found.
fn lift_factor(f: &Polynomial, rng: &mut impl Rng) -> Option<Vec<Polynomial>> {
    let arity = f.arity();
    let vars = f.variables();
    let x = *vars.iter().min_by_key(|&&v| {
        let lc = leading_in(f, v);
        (max_y_degree(f, v) + max_y_degree(&lc, v), f.degree_in(v), v)
    })?;
    let n = f.degree_in(x) as usize;
    let lc = leading_in(f, x);

    let mut best: Option<(Vec<Rational>, Vec<QPoly>)> = None;
    let mut good = 0;
    for attempt in 0..60 {
        if good == 3 {
            break;
        }
        let range = 2 + attempt / 4;
        let point: Vec<Rational> = (0..arity)
            .map(|i| {
                if i == x || !vars.contains(&i) {
                    Rational::zero()
                } else {
                    Rational::from_integer(rng.random_range(-range..=range).into())
                }
            })
            .collect();
        if lc.evaluate(&point).is_zero() {
            continue;
        }
        let mut images: Vec<Polynomial> = point
            .iter()
            .map(|c| Polynomial::constant(1, c.clone()))
            .collect();
        images[x] = Polynomial::var(1, 0);
        let fa = to_dense(&f.substitute(&images).ok()?, 0);
        if fa.len() != n + 1 {
            continue;
        }
        let z = dense::primitive_z(&fa);
        if z_gcd(&z, &dense::z_derivative(&z)).len() != 1 {
            continue;
        }
        good += 1;
        let facs = factor_squarefree_z(&z, rng);
        if facs.len() == 1 {
            return Some(vec![f.clone()]);
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            let monic = facs
                .iter()
                .map(|u| {
                    let l = Rational::from_integer(u.last().unwrap().clone());
                    u.iter().map(|c| Rational::from_integer(c.clone()) / &l).collect()
                })
                .collect();
            best = Some((point, monic));
        }
    }
    let (point, us) = best?;

    let shift = |p: &Polynomial, sign: i64| -> Polynomial {
        let images: Vec<Polynomial> = (0..arity)
            .map(|i| {
                let v = Polynomial::var(arity, i);
                if point[i].is_zero() {
                    v
                } else {
                    &v + &Polynomial::constant(arity, &point[i] * Rational::from_integer(sign.into()))
                }
            })
            .collect();
        p.substitute(&images).expect("shift images share arity")
    };
    let fs = shift(f, 1);
    let ls = leading_in(&fs, x);
    let bound = max_y_degree(&fs, x) + max_y_degree(&ls, x);
    let l0 = ls.constant_term();

    let r = us.len();
    let bezout: Vec<QPoly> = (0..r)
        .map(|i| {
            let others = (0..r)
                .filter(|&j| j != i)
                .fold(vec![Rational::one()], |acc, j| q_mul(&acc, &us[j]));
            let reduced = q_divrem(&others, &us[i]).1;
            q_bezout(&reduced, &us[i]).0
        })
        .collect();
    let mut lifted: Vec<Polynomial> = us.iter().map(|u| from_dense(u, arity, x)).collect();

    for k in 1..=bound {
        let prod = lifted
            .iter()
            .fold(ls.clone(), |acc, g| truncate(&(&acc * g), x, k));
        let err = &fs - &prod;
        let mut groups: BTreeMap<Monomial, QPoly> = BTreeMap::new();
        for (m, c) in err.terms() {
            if y_degree(m, x) != k {
                continue;
            }
            let e = m.exponent(x) as usize;
            let entry = groups.entry(m.with_exponent(x, 0)).or_default();
            if entry.len() <= e {
                entry.resize(e + 1, Rational::zero());
            }
            entry[e] = c / &l0;
        }
        for (ymono, e) in groups {
            let e = dense::trim(e);
            for (i, g) in lifted.iter_mut().enumerate() {
                let delta = q_divrem(&q_mul(&bezout[i], &e), &us[i]).1;
                if delta.is_empty() {
                    continue;
                }
                let d = from_dense(&delta, arity, x).mul_monomial(&ymono, &Rational::one());
                *g = &*g + &d;
            }
        }
    }

    Some(recombine(f.clone(), r, |rest, subset| {
        let lr = leading_in(&shift(rest, 1), x);
        let cand = subset
            .iter()
            .fold(lr, |acc, &i| truncate(&(&acc * &lifted[i]), x, bound));
        let cand = shift(&cand, -1);
        if cand.degree_in(x) == 0 {
            return None;
        }
        let g = content_primitive(&cand, x).1.normalized();
        rest.div_exact(&g).map(|q| (g, q))
    }))
}
