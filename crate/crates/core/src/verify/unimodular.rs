//! Certificates that a list of polynomials generates the unit ideal:
//! cofactors `c_j` of bounded degree with `Σ c_j p_j = 1`, found by exact
//! linear algebra.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::ScalarMatrix;
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;

const MAX_UNKNOWNS: usize = 600;

fn monomials_up_to(arity: usize, degree: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.as_slice()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; arity], &mut out);
    out
}

/// Cofactors of degree at most `max_degree`, if such exist.
pub fn unit_ideal_certificate(polys: &[Polynomial], max_degree: u32) -> Option<Vec<Polynomial>> {
    let arity = polys.first()?.arity();
    if let Some(j) = polys.iter().position(|p| p.is_constant() && !p.is_zero()) {
        let mut out = vec![Polynomial::zero(arity); polys.len()];
        out[j] = Polynomial::constant(arity, polys[j].constant_value()?.recip());
        return Some(out);
    }
    let polys: Vec<&Polynomial> = polys.iter().collect();
    for degree in 1..=max_degree {
        let monos = monomials_up_to(arity, degree);
        if monos.len() * polys.len() > MAX_UNKNOWNS {
            break;
        }
        let cols: Vec<Polynomial> = polys
            .iter()
            .flat_map(|p| monos.iter().map(|m| p.mul_monomial(m, &Rational::one())))
            .collect();
        let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
        rows.insert(Monomial::one(arity), 0);
        for c in &cols {
            for (m, _) in c.terms() {
                let k = rows.len();
                rows.entry(m.clone()).or_insert(k);
            }
        }
        let mut data = vec![Rational::zero(); rows.len() * cols.len()];
        for (j, c) in cols.iter().enumerate() {
            for (m, v) in c.terms() {
                data[rows[m] * cols.len() + j] = v.clone();
            }
        }
        let mat = ScalarMatrix::new(rows.len(), cols.len(), data).ok()?;
        let mut rhs = vec![Rational::zero(); rows.len()];
        rhs[0] = Rational::one();
        if let Some(sol) = mat.solve(&rhs).ok()? {
            let mut out = Vec::new();
            for (k, _) in polys.iter().enumerate() {
                let terms = monos
                    .iter()
                    .zip(&sol[k * monos.len()..(k + 1) * monos.len()])
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(m, v)| (m.clone(), v.clone()));
                out.push(Polynomial::from_terms(arity, terms));
            }
            let total = out
                .iter()
                .zip(&polys)
                .fold(Polynomial::zero(arity), |acc, (c, p)| &acc + &(c * *p));
            return total.is_one().then_some(out);
        }
    }
    None
}
