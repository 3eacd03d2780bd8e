use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{gradient, jacobian};
use crate::poly::{PolyMap, Polynomial};
use crate::rational::Rational;

fn check_square(f: &Polynomial, map: &PolyMap) -> Result<usize> {
    let n = map.arity();
    if map.len() != n {
        return Err(Error::NotSquare { rows: map.len(), cols: n });
    }
    if f.arity() != n {
        return Err(Error::ArityMismatch { expected: n, found: f.arity() });
    }
    Ok(n)
}

/// Gradient over `(x, y)` of `f(x + u y) + (x + u' y)ᵀ F(x + u y)`.
///
/// `u = u'` is accepted; the result then has a singular Jacobian.
pub fn symred(f: &Polynomial, map: &PolyMap, u: &Rational, uprime: &Rational) -> Result<PolyMap> {
    let n = check_square(f, map)?;
    if u.is_zero() {
        return Err(Error::InvalidParameter("u must be nonzero".into()));
    }
    let m = 2 * n;
    let shifted = |c: &Rational| -> Vec<Polynomial> {
        (0..n)
            .map(|i| &Polynomial::var(m, i) + &Polynomial::var(m, n + i).scale(c))
            .collect()
    };
    let xu = shifted(u);
    let xup = shifted(uprime);
    let fx = map
        .components()
        .iter()
        .map(|c| c.substitute(&xu))
        .collect::<Result<Vec<_>>>()?;
    let mut s = f.substitute(&xu)?;
    for (a, b) in xup.iter().zip(&fx) {
        s = &s + &(a * b);
    }
    Ok(gradient(&s))
}

/// `G = grad_{x,y}(f + yᵀF) = ((jac F)ᵀ y + grad f, F)`.
pub fn grad_reduction(f: &Polynomial, map: &PolyMap) -> Result<PolyMap> {
    let n = check_square(f, map)?;
    let m = 2 * n;
    let jac = jacobian(&map.widen(m));
    let grad_f = gradient(&f.widen(m));
    let mut comps = Vec::with_capacity(m);
    for j in 0..n {
        let mut c = grad_f.component(j).clone();
        for i in 0..n {
            c = &c + &(jac.get(i, j) * &Polynomial::var(m, n + i));
        }
        comps.push(c);
    }
    comps.extend(map.widen(m).into_components());
    PolyMap::new(m, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_symmetric;
    use crate::poly::{parse_map_standard as pm, parse_standard as p, VariableFrame};
    use crate::rational::rat;

    fn xy(n: usize) -> VariableFrame {
        VariableFrame::standard(n).extended((1..=n).map(|i| format!("y{i}"))).unwrap()
    }

    #[test]
    fn symred_examples() {
        let g = symred(&p("0", 1), &pm(&["x1"], 1), &rat(1), &rat(-1)).unwrap();
        assert_eq!(g.render(&xy(1)), vec!["2*x1", "-2*y1"]);

        let g = symred(&p("x1^3", 1), &pm(&["x1"], 1), &rat(1), &rat(-1)).unwrap();
        let want = pm(&["3*(x1 + x2)^2 + 2*x1", "3*(x1 + x2)^2 - 2*x2"], 2);
        assert_eq!(g, want);
        let j = jacobian(&g);
        assert!(is_symmetric(&j));
        assert_eq!(j.determinant().unwrap(), p("-4", 2));

        let g = symred(&p("x1^2", 1), &pm(&["x1"], 1), &rat(2), &rat(2)).unwrap();
        assert!(jacobian(&g).determinant().unwrap().is_zero());
        assert!(symred(&p("0", 1), &pm(&["x1"], 1), &rat(0), &rat(1)).is_err());
    }

    #[test]
    fn grad_reduction_examples() {
        let g = grad_reduction(&p("0", 2), &pm(&["x1 + x2^2", "x2"], 2)).unwrap();
        assert_eq!(g.render(&xy(2)), vec!["y1", "2*x2*y1 + y2", "x2^2 + x1", "x2"]);
        assert_eq!(jacobian(&g).determinant().unwrap(), p("1", 4));

        let g = grad_reduction(&p("0", 3), &PolyMap::identity(3)).unwrap();
        assert_eq!(jacobian(&g).determinant().unwrap(), p("-1", 6));

        let g = grad_reduction(&p("0", 2), &pm(&["x1^2", "x2"], 2)).unwrap();
        assert_eq!(jacobian(&g).determinant().unwrap(), p("4*x1^2", 4));
    }

    #[test]
    fn grad_reduction_matches_gradient() {
        let f = p("x1^2*x2 + x2^3", 2);
        let map = pm(&["x1 + x2^2", "x2 - x1^3"], 2);
        let g = grad_reduction(&f, &map).unwrap();
        let s = &f.widen(4) + &(&(&p("x3", 4) * &map.component(0).widen(4)) + &(&p("x4", 4) * &map.component(1).widen(4)));
        assert_eq!(g, gradient(&s));
    }
}
