use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{PolyMap, Polynomial, VariableFrame};
use crate::rational::Rational;

/// Dimension-raising reductions of a Keller map `F` in `n` variables.
///
/// Scalar forms append `x{n+1}` (and `x{n+2}`); block forms append `y1..yn`
/// (and `z1..zn`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionVariant {
    /// `(F - λ x{n+1}^3, x{n+1})`
    Ch,
    /// `(F - λ x{n+1}^3, x{n+1}, x{n+2} + x{n+1}^3)`
    Dz,
    /// `(F - λ x{n+1}^3, x{n+2} - 3 xᵀλ x{n+1}^2, x{n+1})`
    Sch,
    /// `(F - λ x{n+1}^3, x{n+1}, x{n+2} - h)` with `h` free of `x{n+2}`
    Gh(Polynomial),
    /// `(F - y^{*d}, y)`
    Chl,
    /// `(F - y^{*d}, y, z + y^{*d})`
    Dzl,
    /// `(F - y^{*d}, z - d x * y^{*(d-1)}, y)`
    Schl,
    /// `(F - y^{*d}, y, z - H)` with `H` free of `z`
    Ghl(PolyMap),
}

/// The parameter an extension needs: `λ` for scalar forms, `d` for block
/// forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionParam {
    Lambda(Vec<Rational>),
    Degree(u32),
}

impl ExtensionVariant {
    pub fn name(&self) -> &'static str {
        match self {
            ExtensionVariant::Ch => "ch",
            ExtensionVariant::Dz => "dz",
            ExtensionVariant::Sch => "sch",
            ExtensionVariant::Gh(_) => "gh",
            ExtensionVariant::Chl => "chl",
            ExtensionVariant::Dzl => "dzl",
            ExtensionVariant::Schl => "schl",
            ExtensionVariant::Ghl(_) => "ghl",
        }
    }

    pub fn is_block(&self) -> bool {
        matches!(
            self,
            ExtensionVariant::Chl | ExtensionVariant::Dzl | ExtensionVariant::Schl | ExtensionVariant::Ghl(_)
        )
    }

    pub fn is_symmetric_form(&self) -> bool {
        matches!(self, ExtensionVariant::Sch | ExtensionVariant::Schl)
    }

    /// Number of variables of the extended map for input dimension `n`.
    pub fn output_arity(&self, n: usize) -> usize {
        match self {
            ExtensionVariant::Ch => n + 1,
            ExtensionVariant::Dz | ExtensionVariant::Sch | ExtensionVariant::Gh(_) => n + 2,
            ExtensionVariant::Chl => 2 * n,
            _ => 3 * n,
        }
    }

    /// `s` with `det jac G = s · det jac F`.
    pub fn determinant_sign(&self, n: usize) -> Rational {
        let one = Rational::one();
        match self {
            ExtensionVariant::Sch => -one,
            ExtensionVariant::Schl if n % 2 == 1 => -one,
            _ => one,
        }
    }

    /// Human-readable form of the determinant relation.
    pub fn determinant_relation(&self, n: usize) -> &'static str {
        if self.determinant_sign(n).is_negative() {
            "det jac G = -det jac F"
        } else {
            "det jac G = det jac F"
        }
    }

    /// Frame of the extended map, given the frame of `F`.
    pub fn frame(&self, base: &VariableFrame) -> Result<VariableFrame> {
        let n = base.len();
        match self.output_arity(n) - n {
            1 => base.extended([format!("x{}", n + 1)]),
            2 if !self.is_block() => base.extended([format!("x{}", n + 1), format!("x{}", n + 2)]),
            k => {
                let mut names: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
                if k == 2 * n {
                    names.extend((1..=n).map(|i| format!("z{i}")));
                }
                base.extended(names)
            }
        }
    }
}

fn widen_tail(p: &Polynomial, from: usize, to: usize, forbidden: std::ops::Range<usize>) -> Result<Polynomial> {
    if p.arity() != from && p.arity() != to {
        return Err(Error::ArityMismatch {
            expected: from,
            found: p.arity(),
        });
    }
    let w = p.widen(to);
    if forbidden.clone().any(|i| w.depends_on(i)) {
        return Err(Error::InvalidParameter(
            "tail must not involve the last block of variables".into(),
        ));
    }
    Ok(w)
}

pub fn extend(f: &PolyMap, variant: &ExtensionVariant, param: &ExtensionParam) -> Result<PolyMap> {
    let n = f.arity();
    if f.len() != n {
        return Err(Error::NotSquare {
            rows: f.len(),
            cols: n,
        });
    }
    let m = variant.output_arity(n);
    let var = |i: usize| Polynomial::var(m, i);
    let fw: Vec<Polynomial> = f.components().iter().map(|c| c.widen(m)).collect();
    let comps = if variant.is_block() {
        let d = match param {
            ExtensionParam::Degree(d) if *d >= 2 => *d,
            ExtensionParam::Degree(d) => {
                return Err(Error::InvalidParameter(format!("d must be at least 2, got {d}")))
            }
            ExtensionParam::Lambda(_) => {
                return Err(Error::InvalidParameter("block variants take d, not λ".into()))
            }
        };
        let y = |i: usize| var(n + i);
        let z = |i: usize| var(2 * n + i);
        let mut out: Vec<Polynomial> = (0..n).map(|i| &fw[i] - &y(i).pow(d)).collect();
        match variant {
            ExtensionVariant::Chl => out.extend((0..n).map(y)),
            ExtensionVariant::Dzl => {
                out.extend((0..n).map(y));
                out.extend((0..n).map(|i| &z(i) + &y(i).pow(d)));
            }
            ExtensionVariant::Schl => {
                let dd = Rational::from_integer(d.into());
                out.extend((0..n).map(|i| &z(i) - &(&var(i) * &y(i).pow(d - 1)).scale(&dd)));
                out.extend((0..n).map(y));
            }
            ExtensionVariant::Ghl(h) => {
                if h.len() != n {
                    return Err(Error::Dimension(format!("tail map needs {n} components")));
                }
                out.extend((0..n).map(y));
                for (i, hi) in h.components().iter().enumerate() {
                    out.push(&z(i) - &widen_tail(hi, 2 * n, m, 2 * n..3 * n)?);
                }
            }
            _ => unreachable!(),
        }
        out
    } else {
        let lambda = match param {
            ExtensionParam::Lambda(l) if l.len() == n => l,
            ExtensionParam::Lambda(l) => {
                return Err(Error::Dimension(format!(
                    "λ has length {}, expected {n}",
                    l.len()
                )))
            }
            ExtensionParam::Degree(_) => {
                return Err(Error::InvalidParameter("scalar variants take λ, not d".into()))
            }
        };
        let s = var(n);
        let s3 = s.pow(3);
        let mut out: Vec<Polynomial> = (0..n).map(|i| &fw[i] - &s3.scale(&lambda[i])).collect();
        match variant {
            ExtensionVariant::Ch => out.push(s),
            ExtensionVariant::Dz => {
                out.push(s.clone());
                out.push(&var(n + 1) + &s3);
            }
            ExtensionVariant::Sch => {
                let xl = (0..n).fold(Polynomial::zero(m), |acc, i| &acc + &var(i).scale(&lambda[i]));
                let three = Rational::from_integer(3.into());
                out.push(&var(n + 1) - &(&xl * &s.pow(2)).scale(&three));
                out.push(s);
            }
            ExtensionVariant::Gh(h) => {
                out.push(s);
                out.push(&var(n + 1) - &widen_tail(h, n + 1, m, n + 1..n + 2)?);
            }
            _ => unreachable!(),
        }
        out
    };
    PolyMap::new(m, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{is_symmetric, jacobian};
    use crate::poly::{parse_map_standard as pm, parse_standard as p};
    use crate::rational::rat;

    fn lam(v: &[i64]) -> ExtensionParam {
        ExtensionParam::Lambda(v.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn ch_examples() {
        let f = pm(&["x1 + x2^3", "x2"], 2);
        let g = extend(&f, &ExtensionVariant::Ch, &lam(&[0, 0])).unwrap();
        assert_eq!(g, pm(&["x1 + x2^3", "x2", "x3"], 3));
        let g = extend(&f, &ExtensionVariant::Ch, &lam(&[1, 0])).unwrap();
        assert_eq!(g, pm(&["x1 + x2^3 - x3^3", "x2", "x3"], 3));
        assert_eq!(jacobian(&g).determinant().unwrap(), p("1", 3));
    }

    #[test]
    fn schl_identity() {
        let g = extend(&PolyMap::identity(2), &ExtensionVariant::Schl, &ExtensionParam::Degree(2)).unwrap();
        let frame = ExtensionVariant::Schl.frame(&VariableFrame::standard(2)).unwrap();
        assert_eq!(
            g.render(&frame),
            vec!["-y1^2 + x1", "-y2^2 + x2", "-2*x1*y1 + z1", "-2*x2*y2 + z2", "y1", "y2"]
        );
        let det = jacobian(&g).determinant().unwrap();
        assert_eq!(det, Polynomial::constant(6, ExtensionVariant::Schl.determinant_sign(2)));
        assert!(is_symmetric(&jacobian(&g)));
    }

    #[test]
    fn determinant_relations() {
        let f = pm(&["x1 + x2^3 + x3^3", "x2 - x3^3", "x3"], 3);
        let base = jacobian(&f).determinant().unwrap();
        let h = p("x1*x4 + x2^2", 4);
        let hm = pm(&["x4*x1", "x5^2", "x6 + x1"], 6);
        let variants = [
            (ExtensionVariant::Ch, lam(&[1, 2, -1])),
            (ExtensionVariant::Dz, lam(&[1, 2, -1])),
            (ExtensionVariant::Sch, lam(&[1, 2, -1])),
            (ExtensionVariant::Gh(h), lam(&[1, 2, -1])),
            (ExtensionVariant::Chl, ExtensionParam::Degree(3)),
            (ExtensionVariant::Dzl, ExtensionParam::Degree(2)),
            (ExtensionVariant::Schl, ExtensionParam::Degree(3)),
            (ExtensionVariant::Ghl(hm), ExtensionParam::Degree(2)),
        ];
        for (v, param) in variants {
            let g = extend(&f, &v, &param).unwrap();
            let m = g.arity();
            let det = jacobian(&g).determinant().unwrap();
            let want = base.widen(m).scale(&v.determinant_sign(3));
            assert_eq!(det, want, "{}", v.name());
        }
    }

    #[test]
    fn parameter_errors() {
        let f = PolyMap::identity(2);
        assert!(extend(&f, &ExtensionVariant::Dzl, &ExtensionParam::Degree(1)).is_err());
        assert!(extend(&f, &ExtensionVariant::Ch, &lam(&[1])).is_err());
        let bad = ExtensionVariant::Gh(p("x4", 4));
        assert!(extend(&f, &bad, &lam(&[0, 0])).is_err());
    }
}
