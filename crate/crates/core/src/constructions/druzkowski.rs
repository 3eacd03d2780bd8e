use crate::error::{Error, Result};
use crate::factor::factor_multivariate;
use crate::linalg::ScalarMatrix;
use crate::poly::{PolyMap, Polynomial};
use crate::rational::Rational;
use crate::verdict::Verdict;

/// `[[T, 0, Tλ], [0, 1, 0], [0, 0, 1]]`.
pub fn druzkowski_lift(t: &ScalarMatrix, lambda: &[Rational]) -> Result<ScalarMatrix> {
    let n = t.rows();
    if t.cols() != n {
        return Err(Error::NotSquare { rows: n, cols: t.cols() });
    }
    let tl = t.mul_vec(lambda)?;
    let mut out = ScalarMatrix::identity(n + 2);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, t.get(r, c).clone());
        }
        out.set(r, n + 1, tl[r].clone());
    }
    Ok(out)
}

fn is_power_of_linear_form(h: &Polynomial, d: u32) -> Result<bool> {
    if !h.is_homogeneous() || h.degree() != d {
        return Ok(false);
    }
    let fact = factor_multivariate(h)?;
    Ok(matches!(fact.factors.as_slice(), [(l, k)] if *k == d && l.degree() == 1))
}

/// Whether every nonzero component of `F - x` is `c·ℓ^d` for a linear form
/// `ℓ`; the witness is the first offending component.
pub fn is_druzkowski(map: &PolyMap, d: u32) -> Result<Verdict<Option<usize>>> {
    let n = map.arity();
    if map.len() != n {
        return Err(Error::NotSquare { rows: map.len(), cols: n });
    }
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    let h = map.sub(&PolyMap::identity(n))?;
    for (i, c) in h.components().iter().enumerate() {
        if !c.is_zero() && !is_power_of_linear_form(c, d)? {
            return Ok(Verdict::new(false, Some(i), "factorization"));
        }
    }
    Ok(Verdict::new(true, None, "factorization"))
}
