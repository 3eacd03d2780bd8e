//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the summary is always printed.

use std::process::ExitCode;
use std::time::Instant;

use polykeller_core::constructions::{symred, ExtensionParam, ExtensionVariant};
use polykeller_core::factor::{
    factor_multivariate, factor_univariate, irreducibility, ruppert_test, AbsoluteVerdict, Factorization,
    RationalVerdict, RuppertOutcome,
};
use polykeller_core::linalg::gradient;
use polykeller_core::poly::{parse, print, Monomial};
use polykeller_core::rational::{rat, rat_frac};
use polykeller_core::verify::{
    check_extension_determinant, check_irredth_sampling, check_keller_squarefree_preservation, check_lindiv,
    check_symm_lemma, check_symred_components, derive_seed, gen, ids, run_suite, scan_mu_reducible,
    GeneratorKind, GeneratorSpec, Instance, PropertyReport, SuiteConfig,
};
use polykeller_core::{PolyMap, Polynomial, Rational, ScalarMatrix, VariableFrame};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Failure = Box<dyn std::error::Error>;
type Outcome = Result<String, Failure>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_poly(arity: usize, degree: u32, terms: usize, rng: &mut impl Rng) -> Polynomial {
    let mut f = Polynomial::zero(arity);
    for _ in 0..terms {
        let mut e = vec![0u32; arity];
        for _ in 0..rng.random_range(0..=degree) {
            e[rng.random_range(0..arity)] += 1;
        }
        let c = rng.random_range(-4i64..=4);
        f = &f + &Polynomial::term(Monomial::new(e.as_slice()), rat(c));
    }
    f
}

fn map_of(inst: &Instance) -> PolyMap {
    inst.map().expect("map instance").clone()
}

fn require(ok: bool, msg: impl Into<String>) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(msg.into().into())
    }
}

fn passed(r: &PropertyReport, what: &str) -> Result<(), Failure> {
    require(r.passed(), format!("{what}: {:?}", r.to_json()))
}

/// Product check on a factorization, counted across the whole run.
fn reconstructs(f: &Polynomial, fact: &Factorization, counter: &mut usize) -> Result<(), Failure> {
    *counter += 1;
    let back = fact.expand(f.arity());
    require(&back == f, format!("product identity fails for {f:?}"))
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for k in 0..100u64 {
        let n = 2 + (k % 3) as usize;
        let inst = gen(&GeneratorSpec::new(GeneratorKind::TameKeller, n, derive_seed(1, k)).with_degree(6))?;
        let f = map_of(&inst);
        require(f.degree() <= 6, "composed degree above 6")?;
        for j in 0..5u64 {
            let spec = GeneratorSpec::new(GeneratorKind::RandomSquarefree, n, derive_seed(2, 5 * k + j)).with_degree(3);
            let w = gen(&spec)?.poly().unwrap().clone();
            passed(&check_keller_squarefree_preservation(&f, &w)?, "square-free preservation")?;
            count += 1;
        }
    }
    Ok(format!("{count}/500 pass"))
}

fn criterion_2() -> Outcome {
    for k in 0..50u64 {
        let n = 1 + (k % 3) as usize;
        let f = map_of(&gen(&GeneratorSpec::new(GeneratorKind::TameKeller, n, derive_seed(3, k)))?);
        let p = gen(&GeneratorSpec::new(GeneratorKind::RandomPoly, n, derive_seed(4, k)).with_degree(3))?;
        let r = check_symm_lemma(p.poly().unwrap(), &f, 0, k)?;
        passed(&r, "determinant identity")?;
    }
    Ok("50/50 exact".into())
}

fn variant(k: usize, rng: &mut impl Rng) -> (ExtensionVariant, ExtensionParam) {
    let n = 2;
    let lambda = ExtensionParam::Lambda((0..n).map(|_| rat(rng.random_range(-2i64..=2))).collect());
    let cubic = |arity: usize, rng: &mut ChaCha8Rng| {
        let mut f = Polynomial::zero(arity);
        for _ in 0..2 {
            let mut e = vec![0u32; arity];
            for _ in 0..3 {
                e[rng.random_range(0..arity)] += 1;
            }
            f = &f + &Polynomial::term(Monomial::new(e.as_slice()), rat(rng.random_range(1i64..=3)));
        }
        f
    };
    let mut local = ChaCha8Rng::seed_from_u64(rng.random());
    match k {
        0 => (ExtensionVariant::Ch, lambda),
        1 => (ExtensionVariant::Dz, lambda),
        2 => (ExtensionVariant::Sch, lambda),
        3 => (ExtensionVariant::Gh(cubic(n + 1, &mut local)), lambda),
        4 => (ExtensionVariant::Chl, ExtensionParam::Degree(3)),
        5 => (ExtensionVariant::Dzl, ExtensionParam::Degree(3)),
        6 => (ExtensionVariant::Schl, ExtensionParam::Degree(2 + rng.random_range(0..2u32))),
        _ => {
            let tail = (0..n).map(|_| cubic(2 * n, &mut local)).collect();
            (ExtensionVariant::Ghl(PolyMap::new(2 * n, tail).unwrap()), ExtensionParam::Degree(3))
        }
    }
}

fn criterion_3() -> Outcome {
    let mut exact = 0;
    let mut preserved = 0;
    let mut symmetric = 0;
    let mut r = rng(5);
    for k in 0..8 {
        for j in 0..20u64 {
            let (v, param) = variant(k, &mut r);
            let f = if v.is_symmetric_form() {
                let c = random_poly(2, 3, 3, &mut r).homogeneous_part(3);
                let half = parse("1/2*x1^2 + 1/2*x2^2", &VariableFrame::standard(2)).unwrap();
                gradient(&(&half + &c))
            } else {
                let h = gen(&GeneratorSpec::new(GeneratorKind::NilpotentCubic, 2, derive_seed(6, j)))?;
                let h = map_of(&h);
                PolyMap::new(2, (0..2).map(|i| &Polynomial::var(2, i) + h.component(i)).collect()).unwrap()
            };
            let rep = check_extension_determinant(&f, &v, &param)?;
            passed(&rep, v.name())?;
            exact += 1;
            for w in &rep.witnesses {
                match w.role.as_str() {
                    "cubic without quadratic terms preserved" => preserved += 1,
                    "symmetric Jacobian preserved" => symmetric += 1,
                    _ => {}
                }
            }
        }
    }
    require(preserved == 120, format!("cubic preservation asserted on {preserved}/120"))?;
    require(symmetric == 40, format!("symmetry preservation asserted on {symmetric}/40"))?;
    Ok(format!("{exact}/160 exact, cubic preservation {preserved}/120, symmetry {symmetric}/40"))
}

fn criterion_4() -> Outcome {
    let mut maps = 0;
    let mut scans = 0;
    let mut worst = 0usize;
    let mut k = 0u64;
    while maps < 25 {
        k += 1;
        let n = 2 + (k % 2) as usize;
        let bound = 2 + (maps % 2) as u32;
        let spec = GeneratorSpec::new(GeneratorKind::TameKeller, n, derive_seed(7, k)).with_degree(bound).with_steps(3);
        let f = map_of(&gen(&spec)?);
        let d = f.degree();
        if !(2..=3).contains(&d) {
            continue;
        }
        maps += 1;
        let mut r = rng(derive_seed(8, k));
        for i in 0..=n {
            let mut mu: Vec<Rational> = (0..=n).map(|_| rat(r.random_range(-3i64..=3))).collect();
            let j = (i + 1) % n;
            if mu[j] == rat(0) {
                mu[j] = rat(1);
            }
            let dd = d as i64;
            let values: Vec<Rational> = (-dd * dd..dd * dd).map(rat).collect();
            let rep = scan_mu_reducible(&f, i, &mu, &values)?;
            passed(&rep, "reducibility bound")?;
            scans += 1;
            worst = worst.max(rep.witnesses.len());
        }
    }
    Ok(format!(
        "{maps} maps, {scans} slot scans all within d^2-1 (largest count {worst})"
    ))
}

fn criterion_5() -> Outcome {
    let mut r = rng(9);
    for k in 0..30 {
        let n = 1 + k % 4;
        let t = loop {
            let data = (0..n * n).map(|_| rat(r.random_range(-2i64..=2))).collect();
            let t = ScalarMatrix::new(n, n, data).unwrap();
            if t.determinant().unwrap() != rat(0) {
                break t;
            }
        };
        let lin = t.as_linear_map();
        let f = PolyMap::new(
            n,
            lin.components()
                .iter()
                .map(|c| c + &Polynomial::from_int(n, r.random_range(-3i64..=3)))
                .collect(),
        )
        .unwrap();
        let cs: Vec<Rational> = (0..n).map(|_| rat_frac(r.random_range(1i64..=5), r.random_range(1i64..=3))).collect();
        let l = PolyMap::new(n, f.components().iter().zip(&cs).map(|(c, s)| c.scale(s)).collect()).unwrap();
        let h = PolyMap::new(n, cs.iter().map(|s| Polynomial::constant(n, s.recip())).collect()).unwrap();
        let rep = check_lindiv(&f, &l, &h)?;
        passed(&rep, "lindiv")?;
    }
    Ok("30/30 instances with all five statements equal".into())
}

fn criterion_6(products: &mut usize) -> Outcome {
    let mut r = rng(10);
    let mut recovered = 0;
    let mut k = 0;
    while recovered < 200 {
        k += 1;
        let arity = 1 + k % 3;
        let mut expected: Vec<(Polynomial, u32)> = Vec::new();
        let mut f = Polynomial::one(arity);
        let mut budget = 8u32;
        let count = r.random_range(1..=3usize);
        for _ in 0..count {
            if budget == 0 {
                break;
            }
            let g = known_irreducible(arity, budget.min(4), &mut r);
            let e = if g.degree() * 2 <= budget && r.random_bool(0.3) { 2 } else { 1 };
            budget -= g.degree() * e;
            f = &f * &g.pow(e);
            let g = g.normalized();
            match expected.iter_mut().find(|(p, _)| *p == g) {
                Some(slot) => slot.1 += e,
                None => expected.push((g, e)),
            }
        }
        if f.is_constant() {
            continue;
        }
        let scale = rat_frac(r.random_range(1i64..=6), r.random_range(1i64..=4));
        let f = f.scale(&scale);
        let fact = factor_multivariate(&f)?;
        reconstructs(&f, &fact, products)?;
        let mut got = fact.factors.clone();
        got.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        expected.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        require(got == expected, format!("multiset mismatch for {f:?}: {got:?} vs {expected:?}"))?;
        recovered += 1;
    }
    Ok(format!("200/200 multisets recovered, {products} product identities"))
}

/// Irreducible by construction: `c x_j + g` with `g` free of `x_j`, or a
/// polynomial whose restriction to a degree-preserving line is an
/// irreducible univariate.
fn known_irreducible(arity: usize, max_degree: u32, r: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let j = r.random_range(0..arity);
        let g = random_poly(arity, max_degree, 3, r).specialize(j, &rat(0));
        let lin = Polynomial::var(arity, j).scale(&rat(r.random_range(1i64..=3)));
        if r.random_bool(0.5) && arity > 1 && !g.is_constant() {
            return &lin + &g;
        }
        let f = random_poly(arity, max_degree, 4, r);
        if f.degree() < 1 {
            continue;
        }
        let line: Vec<Polynomial> = (0..arity)
            .map(|i| {
                Polynomial::from_int_terms(1, &[(i as i64 + 2, &[1]), (3 - i as i64, &[0])])
            })
            .collect();
        let u = f.substitute(&line).unwrap();
        if u.degree() == f.degree() && factor_univariate(&u).is_ok_and(|fu| fu.is_irreducible()) {
            return f;
        }
    }
}

fn criterion_7(products: &mut usize) -> Outcome {
    let mut r = rng(11);
    let mut certified = 0;
    let mut corpus = 0;
    let mut k = 0;
    while corpus < 100 {
        k += 1;
        let f = match k % 4 {
            0 => &random_poly(2, 3, 3, &mut r) * &random_poly(2, 2, 3, &mut r),
            1 => {
                let a = random_poly(2, 2, 3, &mut r);
                let b = random_poly(2, 2, 3, &mut r);
                &a.pow(2) + &b.pow(2)
            }
            _ => random_poly(2, 5, 5, &mut r),
        };
        if f.variables().len() != 2 {
            continue;
        }
        corpus += 1;
        let fact = factor_multivariate(&f)?;
        reconstructs(&f, &fact, products)?;
        if ruppert_test(&f) == RuppertOutcome::AbsolutelyIrreducible {
            certified += 1;
            require(fact.is_irreducible(), format!("Ruppert certifies a rationally reducible {f:?}"))?;
        }
    }
    let v = irreducibility(&parse("x1^2 + x2^2", &VariableFrame::standard(2)).unwrap())?;
    require(v.rational == RationalVerdict::Irreducible, "x1^2 + x2^2 reported reducible over Q")?;
    require(v.absolute == AbsoluteVerdict::Reducible, "x1^2 + x2^2 not reported absolutely reducible")?;
    Ok(format!("{corpus} polynomials, no conflicts ({certified} certified absolutely irreducible); x1^2+x2^2 correct"))
}

fn criterion_8() -> Outcome {
    let mut instances = 0;
    for n in 2..=4usize {
        for k in 0..4u64 {
            let h = gen(&GeneratorSpec::new(GeneratorKind::NilpotentCubic, n, derive_seed(12, 10 * n as u64 + k)))?;
            let rep = check_irredth_sampling(h.map().unwrap(), 500, k)?;
            passed(&rep, "irredth sampling")?;
            require(rep.witnesses.is_empty(), "reducible combination found")?;
            instances += 1;
        }
    }
    Ok(format!("{instances} bank instances x 500 samples, 0 reducible"))
}

fn criterion_9() -> Outcome {
    for k in 0..20u64 {
        let n = 1 + (k % 2) as usize;
        let f = map_of(&gen(&GeneratorSpec::new(GeneratorKind::TameKeller, n, derive_seed(13, k)))?);
        let p = gen(&GeneratorSpec::new(GeneratorKind::RandomPoly, n, derive_seed(14, k)).with_degree(3))?;
        let g = symred(p.poly().unwrap(), &f, &rat(1), &rat(-1))?;
        require(g.len() == 2 * n, "symred dimension")?;
        passed(&check_symred_components(p.poly().unwrap(), &f, &rat(1), &rat(-1))?, "symred components")?;
    }
    Ok("20/20 instances, all components irreducible".into())
}

fn criterion_10() -> Outcome {
    let mut r = rng(15);
    let frames = [
        VariableFrame::standard(3),
        VariableFrame::new(["a", "b"]).unwrap(),
        VariableFrame::new(["y1", "z_2", "w", "x10"]).unwrap(),
    ];
    for k in 0..1000 {
        let frame = &frames[k % frames.len()];
        let n = frame.len();
        let mut f = Polynomial::zero(n);
        for _ in 0..r.random_range(0..6) {
            let mut e = vec![0u32; n];
            for _ in 0..r.random_range(0..=5) {
                e[r.random_range(0..n)] += 1;
            }
            let c = rat_frac(r.random_range(-50i64..=50), r.random_range(1i64..=12));
            f = &f + &Polynomial::term(Monomial::new(e.as_slice()), c);
        }
        let text = print(&f, frame);
        let back = parse(&text, frame).map_err(|e| format!("{text}: {e}"))?;
        require(back == f, format!("round trip changed {text}"))?;
    }
    let mut cfg = SuiteConfig::new(ids::SQUAREFREE_PRESERVATION, 3, 10, 42);
    let a = run_suite(&cfg)?.to_json().to_string();
    cfg.jobs = 4;
    let b = run_suite(&cfg)?.to_json().to_string();
    require(a == b, "suite JSON differs between runs")?;
    let mut cfg = SuiteConfig::new(ids::SYMM_DET_IDENTITY, 2, 5, 7);
    cfg.samples = 3;
    require(
        run_suite(&cfg)?.to_json() == run_suite(&cfg)?.to_json(),
        "symm-det-identity JSON differs between runs",
    )?;
    Ok("1000/1000 round trips, seeded suite JSON identical".into())
}

fn main() -> ExitCode {
    let mut products = 0usize;
    let mut failed = 0;
    let mut run = |id: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {id:>2} PASS  {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {msg} [{secs:.1}s]");
            }
        }
    };
    run(1, "square-free preservation", &mut criterion_1);
    run(2, "symmetric reduction determinant identity", &mut criterion_2);
    run(3, "extension determinant relations", &mut criterion_3);
    run(4, "reducibility bound d^2-1", &mut criterion_4);
    run(5, "linear-divisor equivalence", &mut criterion_5);
    run(6, "factorization oracle", &mut || criterion_6(&mut products));
    run(7, "Ruppert vs rational consistency", &mut || criterion_7(&mut products));
    run(8, "cubic nilpotent sampling bound", &mut criterion_8);
    run(9, "symred component irreducibility", &mut criterion_9);
    run(10, "parser round trip and report determinism", &mut criterion_10);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
