use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::Rng;

use super::rng;
use crate::constructions::{grad_reduction, tame_compose, TameSequence, TameStep};
use crate::error::{Error, Result};
use crate::factor::is_squarefree;
use crate::linalg::{conjugate, is_keller, is_nilpotent, is_symmetric, jacobian, ScalarMatrix};
use crate::poly::{Monomial, PolyMap, Polynomial, VariableFrame};
use crate::rational::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    TameKeller,
    SymmetricKeller,
    NilpotentCubic,
    Druzkowski,
    RandomPoly,
    RandomSquarefree,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 6] = [
        GeneratorKind::TameKeller,
        GeneratorKind::SymmetricKeller,
        GeneratorKind::NilpotentCubic,
        GeneratorKind::Druzkowski,
        GeneratorKind::RandomPoly,
        GeneratorKind::RandomSquarefree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorKind::TameKeller => "tame-keller",
            GeneratorKind::SymmetricKeller => "symmetric-keller",
            GeneratorKind::NilpotentCubic => "nilpotent-cubic",
            GeneratorKind::Druzkowski => "druzkowski",
            GeneratorKind::RandomPoly => "random-poly",
            GeneratorKind::RandomSquarefree => "random-squarefree",
        }
    }

    fn default_degree(self) -> u32 {
        match self {
            GeneratorKind::TameKeller | GeneratorKind::SymmetricKeller => 6,
            _ => 3,
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown generator kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    /// Degree bound: composed degree for tame maps, total degree for
    /// random polynomials.
    pub degree: u32,
    pub steps: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            kind,
            n,
            degree: kind.default_degree(),
            steps: 4,
            seed,
        }
    }

    pub fn with_degree(mut self, degree: u32) -> Self {
        self.degree = degree;
        self
    }

    pub fn with_steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }

    pub fn describe(&self) -> String {
        format!(
            "kind={} n={} degree={} steps={} seed={}",
            self.kind, self.n, self.degree, self.steps, self.seed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Tame {
        map: PolyMap,
        inverse: PolyMap,
        sequence: TameSequence,
    },
    /// `map = grad_reduction(f, base)`.
    Symmetric {
        map: PolyMap,
        f: Polynomial,
        base: PolyMap,
    },
    /// Cubic homogeneous `H` with nilpotent Jacobian.
    Nilpotent { h: PolyMap },
    /// `map = conjugate(normal, t)` with `normal` Družkowski.
    Druzkowski {
        map: PolyMap,
        normal: PolyMap,
        t: ScalarMatrix,
    },
    Poly(Polynomial),
}

impl Instance {
    /// The emitted map, or `None` for a single polynomial.
    pub fn map(&self) -> Option<&PolyMap> {
        match self {
            Instance::Tame { map, .. } | Instance::Symmetric { map, .. } | Instance::Druzkowski { map, .. } => {
                Some(map)
            }
            Instance::Nilpotent { h } => Some(h),
            Instance::Poly(_) => None,
        }
    }

    pub fn poly(&self) -> Option<&Polynomial> {
        match self {
            Instance::Poly(f) => Some(f),
            _ => None,
        }
    }

    pub fn frame(&self) -> VariableFrame {
        match self {
            Instance::Symmetric { base, .. } => {
                let n = base.arity();
                VariableFrame::standard(n)
                    .extended((1..=n).map(|i| format!("y{i}")))
                    .expect("fresh names")
            }
            Instance::Poly(f) => VariableFrame::standard(f.arity()),
            other => VariableFrame::standard(other.map().expect("map instance").arity()),
        }
    }

    /// Component names for map-file output.
    pub fn component_prefix(&self) -> &'static str {
        match self {
            Instance::Nilpotent { .. } => "H",
            Instance::Symmetric { .. } => "G",
            Instance::Poly(_) => "f",
            _ => "F",
        }
    }
}

fn random_coefficient(rng: &mut impl Rng) -> Rational {
    let c = rng.random_range(1i64..=3);
    rat(if rng.random_bool(0.5) { c } else { -c })
}

fn random_monomial(arity: usize, vars: &[usize], degree: u32, rng: &mut impl Rng) -> Monomial {
    let mut e = vec![0u32; arity];
    for _ in 0..degree {
        e[vars[rng.random_range(0..vars.len())]] += 1;
    }
    Monomial::new(e.as_slice())
}

/// Nonconstant polynomial in `vars` of total degree at most `degree`, with
/// at least one term of exactly that degree.
pub(crate) fn random_poly_in(
    arity: usize,
    vars: &[usize],
    degree: u32,
    rng: &mut impl Rng,
) -> Polynomial {
    loop {
        let terms = rng.random_range(1..=4usize);
        let mut f = Polynomial::term(random_monomial(arity, vars, degree, rng), random_coefficient(rng));
        for _ in 1..terms {
            let k = rng.random_range(0..=degree);
            f = &f + &Polynomial::term(random_monomial(arity, vars, k, rng), random_coefficient(rng));
        }
        if !f.is_constant() {
            return f;
        }
    }
}

pub(crate) fn random_homogeneous(arity: usize, vars: &[usize], degree: u32, rng: &mut impl Rng) -> Polynomial {
    loop {
        let terms = rng.random_range(1..=2usize);
        let f = (0..terms).fold(Polynomial::zero(arity), |acc, _| {
            &acc + &Polynomial::term(random_monomial(arity, vars, degree, rng), random_coefficient(rng))
        });
        if !f.is_zero() {
            return f;
        }
    }
}

/// Integer matrix of determinant ±1, a product of unit triangular factors.
pub(crate) fn random_unimodular(n: usize, rng: &mut impl Rng) -> ScalarMatrix {
    let mut lower = ScalarMatrix::identity(n);
    let mut upper = ScalarMatrix::identity(n);
    for r in 0..n {
        for c in 0..r {
            lower.set(r, c, rat(rng.random_range(-1i64..=1)));
            upper.set(c, r, rat(rng.random_range(-1i64..=1)));
        }
    }
    let mut m = lower.mul(&upper).expect("square factors");
    if n > 1 && rng.random_bool(0.5) {
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|r| m.row(if r == a { b } else if r == b { a } else { r }).to_vec())
            .collect();
        m = ScalarMatrix::from_rows(rows).expect("permuted rows");
    }
    m
}

fn random_invertible(n: usize, rng: &mut impl Rng) -> ScalarMatrix {
    loop {
        let data = (0..n * n).map(|_| rat(rng.random_range(-1i64..=1))).collect();
        let t = ScalarMatrix::new(n, n, data).expect("shape");
        if !t.determinant().expect("square").is_zero() {
            return t;
        }
    }
}

fn tame(n: usize, steps: usize, degree: u32, rng: &mut impl Rng) -> Result<Instance> {
    let all: Vec<usize> = (0..n).collect();
    let mut bound = 1u32;
    let mut seq = Vec::with_capacity(steps);
    for _ in 0..steps {
        if n >= 2 && rng.random_bool(0.6) {
            let index = rng.random_range(0..n);
            let others: Vec<usize> = all.iter().copied().filter(|&j| j != index).collect();
            let top = (degree / bound).max(1);
            let e = rng.random_range(1..=top);
            let p = random_poly_in(n, &others, e, rng);
            bound *= p.degree().max(1);
            seq.push(TameStep::Elementary { index, p });
        } else {
            let b = (0..n).map(|_| rat(rng.random_range(-2i64..=2))).collect();
            seq.push(TameStep::Affine {
                t: random_invertible(n, rng),
                b,
            });
        }
    }
    let sequence = TameSequence::new(n, seq)?;
    let (map, inverse) = tame_compose(&sequence)?;
    if !is_keller(&map)?.holds {
        return Err(Error::Internal("generated tame map is not Keller".into()));
    }
    Ok(Instance::Tame {
        map,
        inverse,
        sequence,
    })
}

fn nilpotent(n: usize, rng: &mut impl Rng) -> Result<PolyMap> {
    let mut comps = vec![Polynomial::zero(n); n];
    for (i, c) in comps.iter_mut().enumerate().take(n - 1) {
        let vars: Vec<usize> = (i + 1..n).collect();
        *c = random_homogeneous(n, &vars, 3, rng);
    }
    let mut h = PolyMap::new(n, comps)?;
    if n >= 3 && rng.random_bool(0.5) {
        h = conjugate(&h, &random_unimodular(n, rng))?;
    }
    if !is_nilpotent(&jacobian(&h))?.holds {
        return Err(Error::Internal("generated H has a non-nilpotent Jacobian".into()));
    }
    Ok(h)
}

fn druzkowski(n: usize, rng: &mut impl Rng) -> Result<Instance> {
    let mut comps = PolyMap::identity(n).into_components();
    for (i, c) in comps.iter_mut().enumerate().take(n - 1) {
        let vars: Vec<usize> = (i + 1..n).collect();
        let l = random_homogeneous(n, &vars, 1, rng);
        *c = &*c + &l.pow(3).scale(&random_coefficient(rng));
    }
    let normal = PolyMap::new(n, comps)?;
    let t = random_unimodular(n, rng);
    let map = conjugate(&normal, &t)?;
    if !is_keller(&map)?.holds {
        return Err(Error::Internal("generated Družkowski map is not Keller".into()));
    }
    Ok(Instance::Druzkowski { map, normal, t })
}

pub fn gen(spec: &GeneratorSpec) -> Result<Instance> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if spec.degree == 0 {
        return Err(Error::InvalidParameter("degree bound must be positive".into()));
    }
    let mut rng = rng(spec.seed);
    let all: Vec<usize> = (0..n).collect();
    match spec.kind {
        GeneratorKind::TameKeller => tame(n, spec.steps, spec.degree, &mut rng),
        GeneratorKind::SymmetricKeller => {
            let Instance::Tame { map: base, .. } = tame(n, spec.steps, spec.degree, &mut rng)? else {
                unreachable!()
            };
            let f = random_poly_in(n, &all, 3, &mut rng);
            let map = grad_reduction(&f, &base)?;
            let jac = jacobian(&map);
            let det_f = jacobian(&base).determinant()?;
            let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
            if !is_symmetric(&jac) || jac.determinant()? != det_f.pow(2).widen(2 * n).scale(&sign) {
                return Err(Error::Internal("symmetric reduction identity failed".into()));
            }
            Ok(Instance::Symmetric { map, f, base })
        }
        GeneratorKind::NilpotentCubic => Ok(Instance::Nilpotent { h: nilpotent(n, &mut rng)? }),
        GeneratorKind::Druzkowski => druzkowski(n, &mut rng),
        GeneratorKind::RandomPoly => Ok(Instance::Poly(random_poly_in(n, &all, spec.degree, &mut rng))),
        GeneratorKind::RandomSquarefree => loop {
            let f = random_poly_in(n, &all, spec.degree, &mut rng);
            if is_squarefree(&f)?.holds {
                return Ok(Instance::Poly(f));
            }
        },
    }
}
