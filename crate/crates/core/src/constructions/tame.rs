use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{jacobian, ScalarMatrix};
use crate::poly::{PolyMap, Polynomial};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TameStep {
    /// `x ↦ T x + b`, `T` invertible.
    Affine { t: ScalarMatrix, b: Vec<Rational> },
    /// `x ↦ x + p e_i`, `p` free of `x_i`.
    Elementary { index: usize, p: Polynomial },
}

/// Steps applied in order: the first step acts on `x` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameSequence {
    arity: usize,
    steps: Vec<TameStep>,
}

impl TameStep {
    fn validate(&self, n: usize) -> Result<()> {
        match self {
            TameStep::Affine { t, b } => {
                if t.rows() != n || t.cols() != n || b.len() != n {
                    return Err(Error::Dimension(format!("affine step must be {n}-dimensional")));
                }
                if t.determinant()?.is_zero() {
                    return Err(Error::Singular);
                }
            }
            TameStep::Elementary { index, p } => {
                if *index >= n || p.arity() != n {
                    return Err(Error::Dimension(format!("elementary step must be {n}-dimensional")));
                }
                if p.depends_on(*index) {
                    return Err(Error::InvalidParameter(format!(
                        "elementary step on x{} must not involve it",
                        index + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn affine(t: &ScalarMatrix, b: &[Rational]) -> PolyMap {
        let lin = t.as_linear_map();
        let n = t.rows();
        let comps = lin
            .components()
            .iter()
            .zip(b)
            .map(|(c, bi)| c + &Polynomial::constant(n, bi.clone()))
            .collect();
        PolyMap::new(n, comps).expect("affine map shape")
    }

    fn elementary(n: usize, index: usize, p: &Polynomial) -> PolyMap {
        let mut comps = PolyMap::identity(n).into_components();
        comps[index] = &comps[index] + p;
        PolyMap::new(n, comps).expect("elementary map shape")
    }

    pub fn to_map(&self, n: usize) -> PolyMap {
        match self {
            TameStep::Affine { t, b } => Self::affine(t, b),
            TameStep::Elementary { index, p } => Self::elementary(n, *index, p),
        }
    }

    pub fn inverse_map(&self, n: usize) -> Result<PolyMap> {
        Ok(match self {
            TameStep::Affine { t, b } => {
                let inv = t.inverse()?;
                let shift: Vec<Rational> = inv.mul_vec(b)?.into_iter().map(|c| -c).collect();
                Self::affine(&inv, &shift)
            }
            TameStep::Elementary { index, p } => Self::elementary(n, *index, &-p),
        })
    }
}

impl TameSequence {
    pub fn new(arity: usize, steps: Vec<TameStep>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidParameter("arity must be positive".into()));
        }
        for s in &steps {
            s.validate(arity)?;
        }
        Ok(TameSequence { arity, steps })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn steps(&self) -> &[TameStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// `(F, F⁻¹)` for the composed sequence. Each step is checked to invert
/// exactly, which makes `F ∘ F⁻¹ = x` hold for the whole chain.
pub fn tame_compose(seq: &TameSequence) -> Result<(PolyMap, PolyMap)> {
    let n = seq.arity;
    let id = PolyMap::identity(n);
    let mut f = id.clone();
    let mut finv = id.clone();
    for step in &seq.steps {
        let s = step.to_map(n);
        let si = step.inverse_map(n)?;
        if s.compose(&si)? != id || si.compose(&s)? != id {
            return Err(Error::Internal("tame step does not invert".into()));
        }
        f = s.compose(&f)?;
        finv = finv.compose(&si)?;
    }
    Ok((f, finv))
}

/// `(T, c, E)` with `T` having first column `v` and
/// `f = c · E(T⁻¹x)_1`.
pub fn tame_coordinate_witness(
    f: &Polynomial,
    h: &Polynomial,
    v: &[Rational],
) -> Result<(ScalarMatrix, Rational, TameSequence)> {
    let n = f.arity();
    if h.arity() != n {
        return Err(Error::ArityMismatch { expected: n, found: h.arity() });
    }
    if v.len() != n {
        return Err(Error::Dimension(format!("v has length {}, expected {n}", v.len())));
    }
    let directional = |g: &Polynomial| {
        (0..n).fold(Polynomial::zero(n), |acc, i| &acc + &g.derivative(i).scale(&v[i]))
    };
    if (f - h).degree() != 1 || (f - h).is_constant() {
        return Err(Error::Precondition("deg(f - h) = 1".into()));
    }
    if !directional(h).is_zero() {
        return Err(Error::Precondition("jac h · v = 0".into()));
    }
    let c = match directional(f).constant_value() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(Error::Precondition("jac f · v ≠ 0".into())),
    };
    let k = v.iter().position(|x| !x.is_zero()).expect("v is nonzero");
    let mut t = ScalarMatrix::zeros(n, n);
    for (r, vr) in v.iter().enumerate() {
        t.set(r, 0, vr.clone());
    }
    for (col, j) in (0..n).filter(|&j| j != k).enumerate() {
        t.set(j, col + 1, Rational::one());
    }
    let ftx = f.substitute(t.as_linear_map().components())?;
    let p = (&ftx - &Polynomial::var(n, 0).scale(&c)).scale(&c.recip());
    if p.depends_on(0) {
        return Err(Error::Internal("x1 survives in the elementary tail".into()));
    }
    let e = TameSequence::new(n, vec![TameStep::Elementary { index: 0, p }])?;
    let (emap, _) = tame_compose(&e)?;
    let recomposed = emap.compose(&t.inverse()?.as_linear_map())?.component(0).scale(&c);
    if &recomposed != f {
        return Err(Error::Internal("tame coordinate witness does not recompose".into()));
    }
    debug_assert!(jacobian(&emap).determinant().is_ok_and(|d| d.is_one()));
    Ok((t, c, e))
}
