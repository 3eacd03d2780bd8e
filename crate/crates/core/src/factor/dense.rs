//! Dense univariate helpers over ℤ, ℤ/M and ℚ, with conversions to the sparse
//! representation along one variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;

pub type ZPoly = Vec<BigInt>;
pub type QPoly = Vec<Rational>;

pub fn trim<T: Zero>(mut a: Vec<T>) -> Vec<T> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub fn degree<T>(a: &[T]) -> usize {
    a.len().saturating_sub(1)
}

/// Coefficients of `f` along variable `i`; every other variable must be
/// absent.
pub fn to_dense(f: &Polynomial, i: usize) -> QPoly {
    let mut out = vec![Rational::zero(); f.degree_in(i) as usize + 1];
    for (m, c) in f.terms() {
        out[m.exponent(i) as usize] = c.clone();
    }
    trim(out)
}

pub fn from_dense(coeffs: &[Rational], arity: usize, i: usize) -> Polynomial {
    Polynomial::from_terms(
        arity,
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::var(arity, i, k as u32), c.clone())),
    )
}

pub fn z_from_dense(coeffs: &[BigInt], arity: usize, i: usize) -> Polynomial {
    let q: QPoly = coeffs.iter().cloned().map(Rational::from_integer).collect();
    from_dense(&q, arity, i)
}

/// Integer primitive part with positive leading coefficient.
pub fn primitive_z(q: &[Rational]) -> ZPoly {
    let den = crate::rational::denominator_lcm(q.iter());
    let z: ZPoly = q
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    z_primitive(&trim(z))
}

pub fn z_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

pub fn z_primitive(a: &[BigInt]) -> ZPoly {
    let mut g = z_content(a);
    if g.is_zero() {
        return Vec::new();
    }
    if a.last().is_some_and(|l| l.is_negative()) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

pub fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn z_derivative(a: &[BigInt]) -> ZPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// Exact quotient `a / b` over ℤ, if it exists.
pub fn z_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then(|| trim(q))
}

pub fn z_l2_bound(a: &[BigInt]) -> BigInt {
    let s: BigInt = a.iter().map(|c| c * c).sum();
    s.sqrt() + BigInt::one()
}

/// Arithmetic modulo a positive integer `m`, coefficients kept in `[0, m)`.
pub struct ZMod<'a> {
    pub m: &'a BigInt,
}

impl ZMod<'_> {
    pub fn reduce(&self, a: &[BigInt]) -> ZPoly {
        trim(a.iter().map(|c| c.mod_floor(self.m)).collect())
    }

    pub fn symmetric(&self, a: &[BigInt]) -> ZPoly {
        let half = self.m >> 1;
        trim(
            a.iter()
                .map(|c| {
                    let r = c.mod_floor(self.m);
                    if r > half {
                        r - self.m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let n = a.len().max(b.len());
        let zero = BigInt::zero();
        self.reduce(
            &(0..n)
                .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
                .collect::<Vec<_>>(),
        )
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let n = a.len().max(b.len());
        let zero = BigInt::zero();
        self.reduce(
            &(0..n)
                .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
                .collect::<Vec<_>>(),
        )
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        self.reduce(&z_mul(a, b))
    }

    pub fn scale(&self, a: &[BigInt], c: &BigInt) -> ZPoly {
        self.reduce(&a.iter().map(|v| v * c).collect::<Vec<_>>())
    }

    /// Division by a monic `b`.
    pub fn divrem_monic(&self, a: &[BigInt], b: &[BigInt]) -> (ZPoly, ZPoly) {
        debug_assert!(b.last().is_some_and(One::is_one));
        let a = self.reduce(a);
        if a.len() < b.len() {
            return (Vec::new(), a);
        }
        let db = b.len() - 1;
        let mut r = a.clone();
        let mut q = vec![BigInt::zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].mod_floor(self.m);
            if !c.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[k + j] -= &c * bj;
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        (self.reduce(&q), self.reduce(&r))
    }

    pub fn inverse(&self, a: &BigInt) -> BigInt {
        let e = a.extended_gcd(self.m);
        assert!(e.gcd.is_one(), "non-invertible residue");
        e.x.mod_floor(self.m)
    }
}

pub fn q_mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn q_sub(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

pub fn q_divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let inv = b.last().unwrap().recip();
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![Rational::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] * &inv;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

/// `(s, t)` with `s a + t b = 1`; `a` and `b` must be coprime.
pub fn q_bezout(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = q_divrem(&r0, &r1);
        let s2 = q_sub(&s0, &q_mul(&q, &s1));
        let t2 = q_sub(&t0, &q_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "bezout inputs must be coprime");
    let l = r0[0].recip();
    (
        s0.iter().map(|c| c * &l).collect(),
        t0.iter().map(|c| c * &l).collect(),
    )
}
