//! Dense univariate polynomials over a small prime field `F_p`, with
//! Berlekamp factorization of square-free monic inputs.

use std::sync::OnceLock;

use rand::Rng;

/// Coefficients low to high; no trailing zeros. The zero polynomial is empty.
pub type FpPoly = Vec<u64>;

/// Primes in `[10007, 32749]`, ascending.
pub fn prime_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (10007u64..=32749)
            .filter(|&n| n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect()
    })
}

pub fn random_prime(rng: &mut impl Rng) -> u64 {
    let t = prime_table();
    t[rng.random_range(0..t.len())]
}

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn trim(&self, mut a: FpPoly) -> FpPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % self.p)
            .collect();
        self.trim(out)
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + self.p - b.get(i).unwrap_or(&0)) % self.p)
            .collect();
        self.trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> FpPoly {
        self.trim(a.iter().map(|v| v * c % self.p).collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db] * inv % self.p;
            q[k] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[k + j] = (r[k + j] + self.p - c * bj % self.p) % self.p;
                }
            }
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> FpPoly {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let l = self.inv(*r0.last().expect("gcd of zero polynomials"));
        (self.scale(&r0, l), self.scale(&s0, l), self.scale(&t0, l))
    }

    pub fn derivative(&self, a: &[u64]) -> FpPoly {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
                .collect(),
        )
    }

    pub fn mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> FpPoly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, a: &[u64], mut e: u64, m: &[u64]) -> FpPoly {
        let mut base = self.rem(a, m);
        let mut r = self.rem(&[1], m);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulmod(&r, &base, m);
            }
            base = self.mulmod(&base, &base, m);
            e >>= 1;
        }
        r
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// Left null space of `Q - I` where row `i` of `Q` is `x^(ip) mod f`.
    fn berlekamp_basis(&self, f: &[u64]) -> Vec<FpPoly> {
        let n = f.len() - 1;
        let xp = self.powmod(&[0, 1], self.p, f);
        let mut rows = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            rows.push(row);
            cur = self.mulmod(&cur, &xp, f);
        }
        // transpose of Q - I, then right null space
        let mut m: Vec<Vec<u64>> = (0..n)
            .map(|c| {
                (0..n)
                    .map(|r| {
                        let v = rows[r][c];
                        if r == c {
                            (v + self.p - 1) % self.p
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        self.null_space(&mut m, n)
    }

    /// Right null space basis of the `rows x cols` matrix (destroyed).
    pub fn null_space(&self, m: &mut [Vec<u64>], cols: usize) -> Vec<FpPoly> {
        let rows = m.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, p);
            let inv = self.inv(m[r][c]);
            for v in m[r].iter_mut() {
                *v = *v * inv % self.p;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (v, pv) in row.iter_mut().zip(&pivot_row) {
                        *v = (*v + self.p - f * pv % self.p) % self.p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (self.p - m[i][free]) % self.p;
                }
                self.trim(v)
            })
            .collect()
    }

    /// Rank of the `rows x cols` matrix (destroyed).
    pub fn rank(&self, m: &mut [Vec<u64>], cols: usize) -> usize {
        let rows = m.len();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, p);
            let inv = self.inv(m[r][c]);
            for v in m[r].iter_mut() {
                *v = *v * inv % self.p;
            }
            let pivot_row = m[r].clone();
            for row in m.iter_mut().skip(r + 1) {
                if row[c] != 0 {
                    let f = row[c];
                    for (v, pv) in row.iter_mut().zip(&pivot_row) {
                        *v = (*v + self.p - f * pv % self.p) % self.p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Monic irreducible factors of a monic square-free `f`, sorted.
    pub fn factor_squarefree(&self, f: &[u64], rng: &mut impl Rng) -> Vec<FpPoly> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        let basis = self.berlekamp_basis(f);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        let e = (self.p - 1) / 2;
        while factors.len() < r {
            let mut g: FpPoly = Vec::new();
            for b in &basis {
                let c = rng.random_range(0..self.p);
                g = self.add(&g, &self.scale(b, c));
            }
            let mut next = Vec::with_capacity(factors.len() + 1);
            for h in factors {
                if h.len() <= 2 {
                    next.push(h);
                    continue;
                }
                let w = self.sub(&self.powmod(&g, e, &h), &[1]);
                let d = self.gcd(&w, &h);
                if d.len() > 1 && d.len() < h.len() {
                    let q = self.divrem(&h, &d).0;
                    next.push(d);
                    next.push(self.monic(&q));
                } else {
                    next.push(h);
                }
            }
            factors = next;
        }
        factors.sort();
        factors
    }
}
