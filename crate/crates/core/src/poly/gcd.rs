//! Multivariate gcd over ℚ by recursion on contents and subresultant
//! polynomial remainder sequences in a chosen main variable.

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::rational::Rational;
use num_traits::One;

type Coeffs = Vec<Polynomial>;

fn trim(mut v: Coeffs) -> Coeffs {
    while v.last().is_some_and(Polynomial::is_zero) {
        v.pop();
    }
    v
}

fn deg(v: &Coeffs) -> usize {
    v.len() - 1
}

fn exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.div_exact(b)
        .expect("subresultant sequence division must be exact")
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let db = deg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut e = deg(a) + 1 - db;
    while !r.is_empty() && r.len() > db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Coeffs = r.iter().map(|c| c * lb).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = &next[k + shift] - &(bc * &lr);
        }
        r = trim(next);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| c * &f).collect();
    }
    r
}

/// Gcd of a list of polynomials, stopping early at a constant.
pub fn gcd_many<'a>(arity: usize, items: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
    let mut acc = Polynomial::zero(arity);
    for p in items {
        acc = gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Content of `f` with respect to variable `i`: the normalized gcd of its
/// coefficients in `x_i`.
pub fn content_in(f: &Polynomial, i: usize) -> Polynomial {
    let coeffs = f.coefficients_in(i);
    gcd_many(f.arity(), coeffs.iter().filter(|c| !c.is_zero()))
}

/// Splits `f = content * primitive` with the content free of `x_i`.
///
/// A polynomial already free of `x_i` is its own content.
pub fn content_primitive(f: &Polynomial, i: usize) -> (Polynomial, Polynomial) {
    if !f.depends_on(i) {
        return (f.clone(), Polynomial::one(f.arity()));
    }
    let c = content_in(f, i);
    let p = exact(f, &c);
    (c, p)
}

fn primitive_coeffs(v: &Coeffs, arity: usize) -> Coeffs {
    let g = gcd_many(arity, v.iter().filter(|c| !c.is_zero()));
    if g.is_one() {
        v.clone()
    } else {
        v.iter().map(|c| exact(c, &g)).collect()
    }
}

fn subresultant_gcd(a: Coeffs, b: Coeffs, arity: usize) -> Coeffs {
    let (mut a, mut b) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let mut g = Polynomial::one(arity);
    let mut h = Polynomial::one(arity);
    loop {
        let delta = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if deg(&r) == 0 {
            return vec![Polynomial::one(arity)];
        }
        let divisor = &g * &h.pow(delta as u32);
        a = b;
        b = r.iter().map(|c| exact(c, &divisor)).collect();
        g = a[deg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            exact(&g.pow(delta as u32), &h.pow(delta as u32 - 1))
        };
    }
}

/// Greatest common divisor, normalized to integer coefficients with gcd 1
/// and a positive leading coefficient. `gcd(f, 0)` is `f` normalized.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert_eq!(f.arity(), g.arity(), "arity mismatch in gcd");
    let arity = f.arity();
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(arity);
    }
    if f.num_terms() == 1 || g.num_terms() == 1 {
        return monomial_gcd(f, g);
    }
    // strip common monomial factors first
    let mf = f.monomial_content();
    let mg = g.monomial_content();
    if !mf.is_one() || !mg.is_one() {
        let m = mf.gcd(&mg);
        let f1 = f.div_exact(&Polynomial::term(mf, Rational::one())).unwrap();
        let g1 = g.div_exact(&Polynomial::term(mg, Rational::one())).unwrap();
        let rest = gcd(&f1, &g1);
        return (&rest * &Polynomial::term(m, Rational::one())).normalized();
    }
    let fv = f.variables();
    let gv = g.variables();
    // a variable present in only one input cannot occur in the gcd
    if let Some(&i) = fv.iter().find(|i| !gv.contains(i)) {
        return gcd(&content_in(f, i), g);
    }
    if let Some(&i) = gv.iter().find(|i| !fv.contains(i)) {
        return gcd(f, &content_in(g, i));
    }
    let main = *fv
        .iter()
        .min_by_key(|&&i| (f.degree_in(i).max(g.degree_in(i)), i))
        .expect("non-constant polynomial has a variable");
    if f.div_exact(g).is_some() {
        return g.normalized();
    }
    if g.div_exact(f).is_some() {
        return f.normalized();
    }
    let (cf, pf) = content_primitive(f, main);
    let (cg, pg) = content_primitive(g, main);
    let c = gcd(&cf, &cg);
    let a = trim(pf.coefficients_in(main));
    let b = trim(pg.coefficients_in(main));
    let s = subresultant_gcd(a, b, arity);
    let s = primitive_coeffs(&s, arity);
    let core = Polynomial::from_coefficients_in(arity, main, &s);
    (&c * &core).normalized()
}

fn monomial_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let m: Monomial = f.monomial_content().gcd(&g.monomial_content());
    Polynomial::term(m, Rational::one())
}

/// Least common multiple, normalized.
pub fn lcm(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero(f.arity());
    }
    let d = gcd(f, g);
    exact(&(f * g), &d).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_standard as p;

    #[test]
    fn gcd_examples() {
        let f = p("x1^2 - x2^2", 2);
        let g = p("x1^2 + 2*x1*x2 + x2^2", 2);
        assert_eq!(gcd(&f, &g), p("x1 + x2", 2));
        assert_eq!(gcd(&p("-2*x1 + 4", 2), &Polynomial::zero(2)), p("x1 - 2", 2));
        assert_eq!(gcd(&p("1 + 2*x1*x2", 2), &p("x1^2", 2)), Polynomial::one(2));
    }

    #[test]
    fn gcd_with_common_factor() {
        let h = p("x1*x3 - x2^2 + 1", 3);
        let f = &p("x1 + x2 + 3", 3) * &h;
        let g = &p("x2*x3 - 2", 3) * &h;
        assert_eq!(gcd(&f, &g), h.normalized());
        let k = p("x1^2*x2 + x3", 3);
        assert_eq!(gcd(&(&f * &k), &(&g * &k)), (&h * &k).normalized());
    }

    #[test]
    fn content_primitive_examples() {
        let f = p("x2*x1^2 + x2^2", 2);
        let (c, q) = content_primitive(&f, 0);
        assert_eq!(c, p("x2", 2));
        assert_eq!(q, p("x1^2 + x2", 2));
        let k = p("7/3", 2);
        assert_eq!(content_primitive(&k, 0), (k.clone(), Polynomial::one(2)));
        let prim = p("x1^2 + x2", 2);
        assert_eq!(content_primitive(&prim, 0), (Polynomial::one(2), prim.clone()));
    }

    #[test]
    fn lcm_basic() {
        assert_eq!(lcm(&p("x1*x2", 2), &p("x2^2", 2)), p("x1*x2^2", 2));
    }
}
