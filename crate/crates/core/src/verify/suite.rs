use rayon::prelude::*;
use serde_json::{json, Value};

use super::checkers::*;
use super::generators::{gen, random_homogeneous, random_poly_in, random_unimodular, GeneratorKind, GeneratorSpec, Instance};
use super::report::{Outcome, PropertyReport};
use super::{derive_seed, rng};
use crate::constructions::{symred, ExtensionParam, ExtensionVariant};
use crate::error::{Error, Result};
use crate::linalg::gradient;
use crate::poly::{PolyMap, Polynomial};
use crate::rational::{rat, Rational};

use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub property: String,
    /// Generator for the main map; each property has its own default.
    pub kind: Option<GeneratorKind>,
    pub n: usize,
    pub degree: Option<u32>,
    pub steps: Option<usize>,
    pub trials: usize,
    /// Inner sample count for sampling checkers.
    pub samples: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn new(property: &str, n: usize, trials: usize, seed: u64) -> Self {
        SuiteConfig {
            property: property.to_string(),
            kind: None,
            n,
            degree: None,
            steps: None,
            trials,
            samples: 20,
            seed,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub property: String,
    pub seed: u64,
    pub outcome: Outcome,
    pub passed: usize,
    pub failed: usize,
    pub inapplicable: usize,
    pub reports: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> Value {
        json!({
            "property": self.property,
            "seed": self.seed,
            "verdict": self.outcome.as_str(),
            "trials": self.reports.len(),
            "passed": self.passed,
            "failed": self.failed,
            "inapplicable": self.inapplicable,
            "reports": self.reports.iter().map(PropertyReport::to_json).collect::<Vec<_>>(),
        })
    }
}

struct Trial<'a> {
    cfg: &'a SuiteConfig,
    index: usize,
    seed: u64,
}

impl Trial<'_> {
    fn sub_seed(&self, k: u64) -> u64 {
        derive_seed(self.seed, k)
    }

    fn spec(&self, default: GeneratorKind, n: usize, k: u64) -> GeneratorSpec {
        let kind = self.cfg.kind.unwrap_or(default);
        let mut spec = GeneratorSpec::new(kind, n, self.sub_seed(k));
        if let Some(d) = self.cfg.degree {
            spec.degree = d;
        }
        if let Some(s) = self.cfg.steps {
            spec.steps = s;
        }
        spec
    }

    fn map(&self, default: GeneratorKind) -> Result<PolyMap> {
        let inst = gen(&self.spec(default, self.cfg.n, 0))?;
        inst.map()
            .cloned()
            .ok_or_else(|| Error::InvalidParameter(format!("generator {} does not emit a map", inst_kind(&inst))))
    }

    fn poly(&self, kind: GeneratorKind, n: usize, degree: u32, k: u64) -> Result<Polynomial> {
        let spec = GeneratorSpec::new(kind, n, self.sub_seed(k)).with_degree(degree);
        Ok(gen(&spec)?.poly().expect("polynomial generator").clone())
    }

    fn nilpotent_keller(&self) -> Result<PolyMap> {
        let n = self.cfg.n;
        let h = gen(&GeneratorSpec::new(GeneratorKind::NilpotentCubic, n, self.sub_seed(7)))?;
        let h = h.map().expect("map");
        PolyMap::new(n, (0..n).map(|i| &Polynomial::var(n, i) + h.component(i)).collect())
    }
}

fn inst_kind(inst: &Instance) -> &'static str {
    match inst {
        Instance::Poly(_) => "polynomial",
        _ => "map",
    }
}

fn random_affine(n: usize, rng: &mut impl Rng) -> PolyMap {
    let t = random_unimodular(n, rng);
    let lin = t.as_linear_map();
    let comps = lin
        .components()
        .iter()
        .map(|c| c + &Polynomial::from_int(n, rng.random_range(-2i64..=2)))
        .collect();
    PolyMap::new(n, comps).expect("affine map")
}

fn nonzero(rng: &mut impl Rng) -> Rational {
    let c = rng.random_range(1i64..=3);
    rat(if rng.random_bool(0.5) { c } else { -c })
}

fn run_trial(t: &Trial<'_>) -> Result<PropertyReport> {
    let cfg = t.cfg;
    let n = cfg.n;
    let k = t.index;
    let mut rng = rng(t.sub_seed(99));
    let all: Vec<usize> = (0..n).collect();
    let report = match cfg.property.as_str() {
        ids::SQUAREFREE_PRESERVATION => {
            let f = t.map(GeneratorKind::TameKeller)?;
            let w = t.poly(GeneratorKind::RandomSquarefree, f.len(), 3, 1)?;
            check_keller_squarefree_preservation(&f, &w)?
        }
        ids::J41_DIRECTION => {
            if k % 2 == 0 {
                let f = t.map(GeneratorKind::TameKeller)?;
                let g = t.poly(GeneratorKind::RandomSquarefree, f.arity(), 2, 1)?;
                let w = t.poly(GeneratorKind::RandomSquarefree, f.len(), 2, 2)?;
                check_j41_direction(&f, &g, &w)?
            } else {
                let Instance::Tame { map, inverse, .. } =
                    gen(&GeneratorSpec::new(GeneratorKind::TameKeller, n, t.sub_seed(3)))?
                else {
                    unreachable!()
                };
                let mut fold = PolyMap::identity(n).into_components();
                fold[0] = fold[0].pow(2);
                let f = map.compose(&PolyMap::new(n, fold)?)?;
                check_j41_direction(&f, &Polynomial::var(n, 0), inverse.component(0))?
            }
        }
        ids::LINDIV => {
            let f = random_affine(n, &mut rng);
            let cs: Vec<Rational> = (0..n).map(|_| nonzero(&mut rng)).collect();
            let l = PolyMap::new(n, f.components().iter().zip(&cs).map(|(c, s)| c.scale(s)).collect())?;
            let h = PolyMap::new(n, cs.iter().map(|s| Polynomial::constant(n, s.recip())).collect())?;
            check_lindiv(&f, &l, &h)?
        }
        ids::IRREDLC_BOUND => {
            let mut t2 = t.cfg.clone();
            t2.degree = Some(cfg.degree.unwrap_or(3));
            let f = Trial { cfg: &t2, index: k, seed: t.seed }.map(GeneratorKind::TameKeller)?;
            let m = f.len();
            let i = k % (m + 1);
            let mut mu: Vec<Rational> = (0..=m).map(|_| rat(rng.random_range(-3i64..=3))).collect();
            if let Some(j) = (0..m).find(|&j| j != i) {
                if mu[j] == rat(0) {
                    mu[j] = nonzero(&mut rng);
                }
            }
            let d = f.degree() as i64;
            let values: Vec<Rational> = (-d * d..d * d).map(rat).collect();
            scan_mu_reducible(&f, i, &mu, &values)?
        }
        ids::IRREDCOR_CHAIN => {
            let d = cfg.degree.unwrap_or(3).max(2);
            let l = random_homogeneous(n, &all, 1, &mut rng);
            let f = if k % 2 == 0 {
                let c = Polynomial::from_int(n, rng.random_range(-2i64..=2));
                &(&c + &l) + &random_homogeneous(n, &all, d, &mut rng)
            } else if d == 2 {
                &l + &l.pow(2).scale(&nonzero(&mut rng))
            } else {
                &l + &(&l.pow(2) * &random_homogeneous(n, &all, d - 2, &mut rng))
            };
            check_irredcor_chain(&f)?
        }
        ids::BAKEXT_I => {
            let base = t.nilpotent_keller()?;
            let f = random_homogeneous(n, &all, 4, &mut rng);
            let g = symred(&f, &base, &rat(1), &rat(-1))?;
            check_bakext_i(&g, k % (2 * n), cfg.samples, t.sub_seed(5))?
        }
        ids::SYMDIAG => {
            let g = t.map(GeneratorKind::SymmetricKeller)?;
            check_symdiag(&g, k % g.len())?
        }
        ids::SYMM_DET_IDENTITY => {
            let f = t.map(GeneratorKind::TameKeller)?;
            let p = t.poly(GeneratorKind::RandomPoly, f.arity(), 3, 1)?;
            check_symm_lemma(&p, &f, cfg.samples, t.sub_seed(5))?
        }
        ids::IRREDTH_SAMPLING => {
            let h = gen(&GeneratorSpec::new(GeneratorKind::NilpotentCubic, n, t.sub_seed(0)))?;
            check_irredth_sampling(h.map().expect("map"), cfg.samples, t.sub_seed(5))?
        }
        ids::EXTENSION_IRREDUCIBILITY => {
            let f = t.nilpotent_keller()?;
            let (variant, param) = random_variant(n, k, &mut rng);
            check_extension_irreducibility(&f, &variant, &param, cfg.samples, t.sub_seed(5))?
        }
        ids::EXTENSION_DETERMINANT => {
            let (variant, param) = random_variant(n, k / 2, &mut rng);
            let f = if variant.is_symmetric_form() {
                let c = random_homogeneous(n, &all, 3, &mut rng);
                let half = Polynomial::from_terms(
                    n,
                    (0..n).map(|i| (crate::poly::Monomial::var(n, i, 2), crate::rational::rat_frac(1, 2))),
                );
                gradient(&(&half + &c))
            } else if k % 2 == 0 {
                t.nilpotent_keller()?
            } else {
                t.map(GeneratorKind::TameKeller)?
            };
            check_extension_determinant(&f, &variant, &param)?
        }
        ids::SYMRED_COMPONENTS => {
            let f = t.map(GeneratorKind::TameKeller)?;
            let p = t.poly(GeneratorKind::RandomPoly, n, 3, 1)?;
            check_symred_components(&p, &f, &rat(1), &rat(-1))?
        }
        other => return Err(Error::InvalidParameter(format!("unknown property `{other}`"))),
    };
    Ok(report.named(format!("{}#{k:04}", cfg.property)).seeded(t.seed))
}

/// The `k`-th of the eight variants with random `λ`, `d` and tails.
pub(crate) fn random_variant(n: usize, k: usize, rng: &mut impl Rng) -> (ExtensionVariant, ExtensionParam) {
    let lambda = ExtensionParam::Lambda((0..n).map(|_| rat(rng.random_range(-2i64..=2))).collect());
    let d = ExtensionParam::Degree(2 + ((k / 8) % 2) as u32);
    let scalar_tail: Vec<usize> = (0..=n).collect();
    let block_vars: Vec<usize> = (0..2 * n).collect();
    match k % 8 {
        0 => (ExtensionVariant::Ch, lambda),
        1 => (ExtensionVariant::Dz, lambda),
        2 => (ExtensionVariant::Sch, lambda),
        3 => (ExtensionVariant::Gh(random_homogeneous(n + 1, &scalar_tail, 3, rng)), lambda),
        4 => (ExtensionVariant::Chl, d),
        5 => (ExtensionVariant::Dzl, d),
        6 => (ExtensionVariant::Schl, d),
        _ => {
            let tail = (0..n).map(|_| random_poly_in(2 * n, &block_vars, 3, rng)).collect();
            (ExtensionVariant::Ghl(PolyMap::new(2 * n, tail).expect("tail map")), d)
        }
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if !ids::ALL.contains(&cfg.property.as_str()) {
        return Err(Error::InvalidParameter(format!("unknown property `{}`", cfg.property)));
    }
    if cfg.n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let run = || {
        (0..cfg.trials)
            .into_par_iter()
            .map(|index| {
                run_trial(&Trial {
                    cfg,
                    index,
                    seed: derive_seed(cfg.seed, index as u64),
                })
            })
            .collect::<Result<Vec<_>>>()
    };
    let mut reports = if cfg.jobs <= 1 {
        (0..cfg.trials)
            .map(|index| {
                run_trial(&Trial {
                    cfg,
                    index,
                    seed: derive_seed(cfg.seed, index as u64),
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?
    };
    reports.sort_by(|a, b| a.instance.cmp(&b.instance));
    let count = |o: Outcome| reports.iter().filter(|r| r.outcome == o).count();
    let (passed, failed, inapplicable) = (count(Outcome::Pass), count(Outcome::Fail), count(Outcome::Inapplicable));
    let outcome = if failed > 0 {
        Outcome::Fail
    } else if passed == 0 {
        Outcome::Inapplicable
    } else {
        Outcome::Pass
    };
    Ok(SuiteReport {
        property: cfg.property.clone(),
        seed: cfg.seed,
        outcome,
        passed,
        failed,
        inapplicable,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_property_runs() {
        for p in ids::ALL {
            let mut cfg = SuiteConfig::new(p, 2, 3, 11);
            cfg.samples = 5;
            let r = run_suite(&cfg).unwrap();
            assert_ne!(r.outcome, Outcome::Fail, "{p}: {:?}", r.reports);
        }
    }

    #[test]
    fn zero_trials_is_inapplicable() {
        let r = run_suite(&SuiteConfig::new(ids::IRREDLC_BOUND, 2, 0, 0)).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn parallel_matches_sequential() {
        let mut cfg = SuiteConfig::new(ids::SQUAREFREE_PRESERVATION, 3, 6, 42);
        let a = run_suite(&cfg).unwrap();
        cfg.jobs = 3;
        assert_eq!(a, run_suite(&cfg).unwrap());
    }
}
