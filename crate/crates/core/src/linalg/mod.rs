//! Polynomial and rational matrices and the differential operators on maps.

mod matrix;
mod scalar;

pub use matrix::PolyMatrix;
pub use scalar::ScalarMatrix;

use crate::error::{Error, Result};
use crate::poly::{gcd, PolyMap, Polynomial};
use crate::verdict::Verdict;

/// Entry `(i, j)` is `∂F_i/∂x_j`.
pub fn jacobian(f: &PolyMap) -> PolyMatrix {
    let n = f.arity();
    let data = f
        .components()
        .iter()
        .flat_map(|c| (0..n).map(move |j| c.derivative(j)))
        .collect();
    PolyMatrix::new(f.len(), n, data).expect("jacobian shape")
}

pub fn gradient(f: &Polynomial) -> PolyMap {
    let comps = (0..f.arity()).map(|j| f.derivative(j)).collect();
    PolyMap::new(f.arity(), comps).expect("gradient shares arity")
}

pub fn hessian(f: &Polynomial) -> PolyMatrix {
    jacobian(&gradient(f))
}

pub fn determinant(m: &PolyMatrix) -> Result<Polynomial> {
    m.determinant()
}

/// Keller condition: `det jac F` is a nonzero constant. The witness is the
/// determinant.
pub fn is_keller(f: &PolyMap) -> Result<Verdict<Polynomial>> {
    if !f.is_square() {
        return Err(Error::NotSquare {
            rows: f.len(),
            cols: f.arity(),
        });
    }
    let det = jacobian(f).determinant()?;
    let holds = det.is_constant() && !det.is_zero();
    Ok(Verdict::new(holds, det, "jacobian-determinant"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotencyWitness {
    /// Smallest `k` with `M^k = 0`.
    Index(usize),
    /// A nonzero entry of `M^n`.
    Entry {
        row: usize,
        col: usize,
        value: Polynomial,
    },
}

pub fn is_nilpotent(m: &PolyMatrix) -> Result<Verdict<NilpotencyWitness>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut power = m.clone();
    for k in 1..=n {
        if power.is_zero() {
            return Ok(Verdict::new(true, NilpotencyWitness::Index(k), "matrix-powers"));
        }
        if k < n {
            power = power.mul(m)?;
        }
    }
    let (row, col) = power.first_nonzero().expect("nonzero power");
    let value = power.get(row, col).clone();
    Ok(Verdict::new(
        false,
        NilpotencyWitness::Entry { row, col, value },
        "matrix-powers",
    ))
}

pub fn is_symmetric(m: &PolyMatrix) -> bool {
    m.is_symmetric()
}

pub fn scalar_inverse(t: &ScalarMatrix) -> Result<ScalarMatrix> {
    t.inverse()
}

/// `T⁻¹ · F(T·x)`.
pub fn conjugate(f: &PolyMap, t: &ScalarMatrix) -> Result<PolyMap> {
    let n = f.arity();
    if t.rows() != n || t.cols() != n || f.len() != n {
        return Err(Error::Dimension(format!(
            "conjugating a map of size {}x{} by a {}x{} matrix",
            f.len(),
            n,
            t.rows(),
            t.cols()
        )));
    }
    let inv = t.inverse()?;
    let inner = f.compose(&t.as_linear_map())?;
    inv.as_linear_map().compose(&inner)
}

/// Gcd of all 2×2 Jacobian minors `det jac_{x_i,x_j}(f, g)`; zero when
/// every minor vanishes.
pub fn minor_gcd_pair(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let n = f.arity();
    let mut acc = Polynomial::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let minor =
                &(&f.derivative(i) * &g.derivative(j)) - &(&f.derivative(j) * &g.derivative(i));
            acc = gcd(&acc, &minor);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, parse_map_standard as pm, parse_standard as p, VariableFrame};

    #[test]
    fn jacobian_examples() {
        let j = jacobian(&pm(&["x1 + x2^2", "x2"], 2));
        assert_eq!(j.entries(), &[p("1", 2), p("2*x2", 2), p("0", 2), p("1", 2)]);
        assert_eq!(jacobian(&PolyMap::identity(3)), PolyMatrix::identity(3, 3));
        let j = jacobian(&pm(&["x2^3", "0"], 2));
        assert_eq!(j.entries(), &[p("0", 2), p("3*x2^2", 2), p("0", 2), p("0", 2)]);
    }

    #[test]
    fn hessian_examples() {
        let h = hessian(&p("x1^2*x2", 2));
        assert_eq!(h.entries(), &[p("2*x2", 2), p("2*x1", 2), p("2*x1", 2), p("0", 2)]);
        let frame = VariableFrame::new(["x1", "y1"]).unwrap();
        let h = hessian(&parse("y1*x1", &frame).unwrap());
        assert_eq!(h.entries(), &[p("0", 2), p("1", 2), p("1", 2), p("0", 2)]);
        assert_eq!(h.determinant().unwrap(), p("-1", 2));
        assert!(hessian(&p("3*x1 - x2 + 4", 2)).is_zero());
    }

    #[test]
    fn keller_examples() {
        let v = is_keller(&pm(&["x1 + x2^2", "x2"], 2)).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, p("1", 2));
        let v = is_keller(&pm(&["x1^2", "x2"], 2)).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, p("2*x1", 2));
        assert!(is_keller(&PolyMap::identity(4)).unwrap().holds);
    }

    #[test]
    fn nilpotent_examples() {
        let m = jacobian(&pm(&["x2^3", "0"], 2));
        assert_eq!(is_nilpotent(&m).unwrap().witness, NilpotencyWitness::Index(2));
        let m = PolyMatrix::new(2, 2, vec![p("x2", 2), p("0", 2), p("0", 2), p("0", 2)]).unwrap();
        let v = is_nilpotent(&m).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            NilpotencyWitness::Entry { row: 0, col: 0, value: p("x2^2", 2) }
        );
        let v = is_nilpotent(&PolyMatrix::zeros(3, 3, 2)).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, NilpotencyWitness::Index(1));
    }

    #[test]
    fn conjugate_examples() {
        let t = ScalarMatrix::from_int_rows(&[&[1, 0], &[0, 2]]);
        let f = pm(&["x1 + x2^3", "x2"], 2);
        assert_eq!(conjugate(&f, &t).unwrap(), pm(&["x1 + 8*x2^3", "x2"], 2));
        let t2 = ScalarMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(conjugate(&PolyMap::identity(2), &t2).unwrap(), PolyMap::identity(2));
        let back = conjugate(&conjugate(&f, &t2).unwrap(), &t2.inverse().unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn minor_gcd_examples() {
        assert_eq!(minor_gcd_pair(&p("x1", 2), &p("x2", 2)), p("1", 2));
        assert_eq!(minor_gcd_pair(&p("x1^2", 2), &p("x2", 2)), p("x1", 2));
        assert!(minor_gcd_pair(&p("x1*x2", 2), &p("x1*x2", 2)).is_zero());
    }
}
