//! Factorization of univariate integer polynomials: modular factorization,
//! quadratic Hensel lifting and subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::combinations;
use super::dense::{self, z_div_exact, z_primitive, ZMod, ZPoly};
use super::modp::{random_prime, Fp, FpPoly};

const PRIME_TRIALS: usize = 3;

fn to_fp(fp: &Fp, a: &[BigInt]) -> FpPoly {
    let p = BigInt::from(fp.p);
    fp.trim(
        a.iter()
            .map(|c| c.mod_floor(&p).try_into().expect("residue fits"))
            .collect(),
    )
}

fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn hensel_step(
    zm: &ZMod<'_>,
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = zm.sub(f, &zm.mul(g, h));
    let (q, r) = zm.divrem_monic(&zm.mul(s, &e), h);
    let g2 = zm.add(&zm.add(g, &zm.mul(t, &e)), &zm.mul(&q, g));
    let h2 = zm.add(h, &r);
    let b = zm.sub(&zm.add(&zm.mul(s, &g2), &zm.mul(t, &h2)), &[BigInt::one()]);
    let (c, d) = zm.divrem_monic(&zm.mul(s, &b), &h2);
    let s2 = zm.sub(s, &d);
    let t2 = zm.sub(&zm.sub(t, &zm.mul(t, &b)), &zm.mul(&c, &g2));
    (g2, h2, s2, t2)
}

/// Lifts monic modular factors of `f` (known mod `modulus = p^(2^j)`) to
/// monic factors modulo `modulus`.
fn lift_all(f: &ZPoly, factors: &[FpPoly], fp: &Fp, modulus: &BigInt) -> Vec<ZPoly> {
    let zm = ZMod { m: modulus };
    if factors.len() == 1 {
        let inv = zm.inverse(f.last().expect("nonzero"));
        return vec![zm.scale(f, &inv)];
    }
    let (a, b) = factors.split_at(factors.len() / 2);
    let lc = to_fp(fp, &[f.last().unwrap().clone()]);
    let g0 = a.iter().fold(lc, |acc, u| fp.mul(&acc, u));
    let h0 = b.iter().fold(vec![1u64], |acc, u| fp.mul(&acc, u));
    let (_, s0, t0) = fp.ext_gcd(&g0, &h0);
    let (mut g, mut h, mut s, mut t) = (from_fp(&g0), from_fp(&h0), from_fp(&s0), from_fp(&t0));
    let mut m = BigInt::from(fp.p);
    while &m < modulus {
        m = &m * &m;
        let zm2 = ZMod { m: &m };
        let fm = zm2.reduce(f);
        (g, h, s, t) = hensel_step(&zm2, &fm, &g, &h, &s, &t);
    }
    let mut out = lift_all(&g, a, fp, modulus);
    out.extend(lift_all(&h, b, fp, modulus));
    out
}

/// Irreducible factors over ℤ of a primitive square-free `f` with positive
/// leading coefficient and degree at least one.
pub(crate) fn factor_squarefree_z(f: &ZPoly, rng: &mut impl Rng) -> Vec<ZPoly> {
    let n = dense::degree(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    let mut best: Option<(Fp, Vec<FpPoly>)> = None;
    let mut good = 0;
    let mut attempts = 0;
    while good < PRIME_TRIALS && attempts < 200 {
        attempts += 1;
        let fp = Fp::new(random_prime(rng));
        if (&lc % BigInt::from(fp.p)).is_zero() {
            continue;
        }
        let fbar = to_fp(&fp, f);
        if !fp.is_squarefree(&fbar) {
            continue;
        }
        good += 1;
        let facs = fp.factor_squarefree(&fp.monic(&fbar), rng);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
    }
    let (fp, modular) = best.expect("a lucky prime exists for a square-free input");
    // Mignotte-style bound on lc(f) * (factor) coefficients
    let bound = lc.abs() * (BigInt::one() << n) * dense::z_l2_bound(f);
    let mut modulus = BigInt::from(fp.p);
    while modulus <= &bound * 2 {
        modulus = &modulus * &modulus;
    }
    let lifted = lift_all(f, &modular, &fp, &modulus);
    recombine(f.clone(), lifted, &modulus)
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let zm = ZMod { m: modulus };
    let mut found = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        for subset in combinations(lifted.len(), s) {
            let b = f.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![b.clone()], |acc, &i| zm.mul(&acc, &lifted[i]));
            let g = z_primitive(&zm.symmetric(&prod));
            if g.len() < 2 || !(&b % g.last().unwrap()).is_zero() {
                continue;
            }
            if !f[0].is_zero() && (g[0].is_zero() || !(&f[0] % &g[0]).is_zero()) {
                continue;
            }
            if let Some(q) = z_div_exact(&f, &g) {
                found.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        s += 1;
    }
    if f.len() > 1 {
        found.push(z_primitive(&f));
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn sorted(mut v: Vec<ZPoly>) -> Vec<ZPoly> {
        v.sort();
        v
    }

    #[test]
    fn splits_and_recombines() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // (x^2 + 1)(x^2 - 2)(3x + 1)
        let f = dense::z_mul(&dense::z_mul(&z(&[1, 0, 1]), &z(&[-2, 0, 1])), &z(&[1, 3]));
        let got = sorted(factor_squarefree_z(&f, &mut rng));
        assert_eq!(got, sorted(vec![z(&[1, 0, 1]), z(&[-2, 0, 1]), z(&[1, 3])]));
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree_z(&f, &mut rng), vec![f]);
    }
}
