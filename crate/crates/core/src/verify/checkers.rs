use std::collections::BTreeSet;

use num_traits::Zero;
use rand::Rng;

use super::report::PropertyReport;
use super::rng;
use super::unimodular::unit_ideal_certificate;
use crate::constructions::{
    combination, extend, grad_reduction, sample_mu, symred, ExtensionParam, ExtensionVariant,
};
use crate::error::{Error, Result};
use crate::factor::{
    divides, factor_multivariate, gcd_of_partials, irreducibility, is_squarefree, AbsoluteVerdict,
};
use crate::linalg::{is_keller, is_nilpotent, is_symmetric, jacobian};
use crate::poly::{PolyMap, Polynomial};
use crate::rational::{format_rational, rat, Rational};

/// Property identifiers, as used on the command line and in reports.
pub mod ids {
    pub const SQUAREFREE_PRESERVATION: &str = "squarefree-preservation";
    pub const J41_DIRECTION: &str = "j41-direction";
    pub const LINDIV: &str = "lindiv";
    pub const IRREDLC_BOUND: &str = "irredlc-bound";
    pub const IRREDCOR_CHAIN: &str = "irredcor-chain";
    pub const BAKEXT_I: &str = "bakext-i";
    pub const SYMDIAG: &str = "symdiag";
    pub const SYMM_DET_IDENTITY: &str = "symm-det-identity";
    pub const IRREDTH_SAMPLING: &str = "irredth-sampling";
    pub const EXTENSION_IRREDUCIBILITY: &str = "extension-irreducibility";
    pub const EXTENSION_DETERMINANT: &str = "extension-determinant";
    pub const SYMRED_COMPONENTS: &str = "symred-components";

    pub const ALL: [&str; 12] = [
        SQUAREFREE_PRESERVATION,
        J41_DIRECTION,
        LINDIV,
        IRREDLC_BOUND,
        IRREDCOR_CHAIN,
        BAKEXT_I,
        SYMDIAG,
        SYMM_DET_IDENTITY,
        IRREDTH_SAMPLING,
        EXTENSION_IRREDUCIBILITY,
        EXTENSION_DETERMINANT,
        SYMRED_COMPONENTS,
    ];
}

/// Largest degree of cofactors tried when certifying a unimodular gradient.
const UNIMODULAR_DEGREE: u32 = 4;

fn keller(f: &PolyMap) -> Result<bool> {
    Ok(f.is_square() && is_keller(f)?.holds)
}

fn irreducible(f: &Polynomial) -> Result<bool> {
    Ok(!f.is_constant() && factor_multivariate(f)?.is_irreducible())
}

fn mu_text(mu: &[Rational]) -> String {
    let parts: Vec<String> = mu.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// Degree at most 3 and no homogeneous part of degree 2.
pub fn is_cubic_without_quadratic(f: &PolyMap) -> bool {
    f.degree() <= 3 && f.components().iter().all(|c| c.homogeneous_part(2).is_zero())
}

/// A square-free `w` stays square-free after substituting a Keller map.
pub fn check_keller_squarefree_preservation(f: &PolyMap, w: &Polynomial) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::SQUAREFREE_PRESERVATION);
    if w.arity() != f.len() {
        return Err(Error::ArityMismatch { expected: f.len(), found: w.arity() });
    }
    if !keller(f)? {
        return Ok(r.inapplicable("F is not a Keller map"));
    }
    if w.is_zero() || !is_squarefree(w)?.holds {
        return Ok(r.inapplicable("w is not square-free"));
    }
    let mut r = r;
    let wf = w.substitute(f.components())?;
    let v = is_squarefree(&wf)?;
    r.trial(v.holds);
    if !v.holds {
        r.poly("w", w);
        r.poly("w(F)", &wf);
        r.poly("repeated factor", &v.witness);
    }
    Ok(r.noted(v.method))
}

/// `g² | w(F)` implies `g | det jac F` for square-free `g` and `w`.
pub fn check_j41_direction(f: &PolyMap, g: &Polynomial, w: &Polynomial) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::J41_DIRECTION);
    if !f.is_square() {
        return Err(Error::NotSquare { rows: f.len(), cols: f.arity() });
    }
    if w.arity() != f.len() || g.arity() != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), found: g.arity().max(w.arity()) });
    }
    if g.is_zero() || !is_squarefree(g)?.holds {
        return Ok(r.inapplicable("g is not square-free"));
    }
    if w.is_zero() || !is_squarefree(w)?.holds {
        return Ok(r.inapplicable("w is not square-free"));
    }
    let mut r = r;
    let wf = w.substitute(f.components())?;
    let det = jacobian(f).determinant()?;
    let square_divides = divides(&g.pow(2), &wf)?.holds;
    let divides_det = divides(g, &det)?.holds;
    r.trial(!square_divides || divides_det);
    r.text("g^2 | w(F)", square_divides.to_string());
    r.text("g | det jac F", divides_det.to_string());
    if !r.passed() {
        r.poly("g", g);
        r.poly("w(F)", &wf);
        r.poly("det jac F", &det);
    }
    Ok(r)
}

/// For a Keller map with `F_i = L_i H_i`, `deg L_i = 1`, the five
/// statements of the linear-divisor theorem evaluate identically.
pub fn check_lindiv(f: &PolyMap, l: &PolyMap, h: &PolyMap) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::LINDIV);
    let n = f.arity();
    if l.len() != f.len() || h.len() != f.len() || l.arity() != n || h.arity() != n {
        return Err(Error::Dimension("F, L and H must have matching shapes".into()));
    }
    if !keller(f)? {
        return Ok(r.inapplicable("F is not a Keller map"));
    }
    for i in 0..n {
        if l.component(i).degree() != 1 || l.component(i).is_constant() {
            return Ok(r.inapplicable(format!("deg L_{} != 1", i + 1)));
        }
        if &(l.component(i) * h.component(i)) != f.component(i) {
            return Ok(r.inapplicable(format!("F_{0} != L_{0} H_{0}", i + 1)));
        }
    }
    let mut s1 = true;
    for i in 0..n {
        let l0 = l.component(i).constant_term();
        let part = h.component(i).scale(&l0).homogeneous_part(1);
        let lin = l.component(i) - &Polynomial::constant(n, l0);
        s1 &= divides(&lin, &part)?.holds;
    }
    let jl = jacobian(l)
        .constant_part()
        .ok_or_else(|| Error::Internal("jac L is not constant".into()))?;
    let l0: Vec<Rational> = l.components().iter().map(Polynomial::constant_term).collect();
    let s2 = jl.solve(&l0)?.is_some();
    let s3 = !jl.determinant()?.is_zero();
    let s4 = f.degree() == 1;
    let mut s5 = true;
    for c in f.components() {
        s5 &= irreducible(c)?;
    }
    let all = [s1, s2, s3, s4, s5];
    let mut r = r;
    r.trial(all.iter().all(|&s| s == s1));
    r.text("statements 1..5", format!("{all:?}"));
    Ok(r)
}

/// Reducible values of `μ_i` in `values` for the combination
/// `μ_1 F_1 + … + μ_n F_n + μ_{n+1}`; `i = n` is the constant slot.
pub fn scan_mu_reducible(f: &PolyMap, i: usize, mu: &[Rational], values: &[Rational]) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::IRREDLC_BOUND);
    let n = f.len();
    if i > n {
        return Err(Error::InvalidParameter(format!("slot {} out of range 1..={}", i + 1, n + 1)));
    }
    if mu.len() != n + 1 {
        return Err(Error::Dimension(format!("μ has length {}, expected {}", mu.len(), n + 1)));
    }
    if !keller(f)? {
        return Ok(r.inapplicable("F is not a Keller map"));
    }
    if !(0..n).any(|j| j != i && !mu[j].is_zero()) {
        return Ok(r.inapplicable("needs μ_j != 0 for some j != i with j <= n"));
    }
    let d = f.degree();
    let bound = (d * d).saturating_sub(1) as usize;
    let mut r = r;
    let mut count = 0usize;
    let mut fallback = false;
    for c in values {
        let mut m = mu.to_vec();
        m[i] = c.clone();
        let g = combination(f, &m);
        if g.is_constant() {
            continue;
        }
        let v = irreducibility(&g)?;
        let reducible = match v.absolute {
            AbsoluteVerdict::Reducible => true,
            AbsoluteVerdict::Irreducible => false,
            AbsoluteVerdict::Undetermined => {
                fallback = true;
                !v.rational_irreducible()
            }
        };
        if reducible {
            count += 1;
            r.poly(&format!("reducible at μ_{} = {}", i + 1, format_rational(c)), &g);
        }
    }
    r.trials = values.len();
    r.failures = count.saturating_sub(bound);
    if count > bound {
        r.fail();
    }
    let mut note = format!("{count} reducible of {} values, bound {bound}", values.len());
    if fallback {
        note.push_str("; rational verdict used where the absolute one was undetermined");
    }
    Ok(r.noted(note))
}

/// Degree-1 divisor chain for `f = f⁽⁰⁾ + f⁽¹⁾ + f⁽ᵈ⁾` with unimodular
/// gradient.
pub fn check_irredcor_chain(f: &Polynomial) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::IRREDCOR_CHAIN);
    let degrees = f.term_degrees();
    let d = degrees.last().copied().unwrap_or(0);
    if d < 2 || degrees.iter().any(|&k| k != 0 && k != 1 && k != d) {
        return Ok(r.inapplicable("f must have terms of degrees 0, 1 and d >= 2 only"));
    }
    let partials: Vec<Polynomial> = (0..f.arity()).map(|i| f.derivative(i)).collect();
    if !gcd_of_partials(f).is_constant() {
        return Ok(r.inapplicable("jac f is not unimodular"));
    }
    if unit_ideal_certificate(&partials, UNIMODULAR_DEGREE).is_none() {
        return Ok(r.inapplicable("unimodularity of jac f undetermined"));
    }
    let f0 = f.constant_term();
    let f1 = f.homogeneous_part(1);
    let fd = f.homogeneous_part(d);
    let fact = factor_multivariate(f)?;
    let reducible = !fact.is_irreducible();
    let linear = fact.factors.iter().find(|(p, _)| p.degree() == 1).map(|(p, _)| p.clone());
    let mut r = r;
    if reducible && (d <= 3 || f0.is_zero()) {
        r.trial(linear.is_some());
        if linear.is_none() {
            r.text("broken link", "1) holds but f has no divisor of degree 1");
        }
    }
    if let Some(l) = linear {
        let ok = f0.is_zero() && divides(&f1, f)?.holds && divides(&f1.pow(2), &fd)?.holds;
        r.trial(ok);
        r.poly("degree-1 divisor", &l);
        if !ok {
            r.text("broken link", "2) holds but 3) fails");
            r.poly("f1", &f1);
        }
    }
    let note = if reducible { "reducible" } else { "irreducible, chain vacuous" };
    Ok(r.noted(note))
}

fn symmetric_keller(g: &PolyMap) -> Result<Option<&'static str>> {
    if !keller(g)? {
        return Ok(Some("G is not a Keller map"));
    }
    if !is_symmetric(&jacobian(g)) {
        return Ok(Some("jac G is not symmetric"));
    }
    Ok(None)
}

/// `G_i` (and `G_i + c` for sampled `c` when the nonlinear part has degree
/// 2 or 3) is irreducible for a symmetric Keller map with homogeneous
/// nonlinear part and `∂G_i⁽¹⁾/∂x_i != 0`.
pub fn check_bakext_i(g: &PolyMap, i: usize, samples: usize, seed: u64) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::BAKEXT_I).seeded(seed);
    if i >= g.len() {
        return Err(Error::InvalidParameter(format!("component {} out of range", i + 1)));
    }
    if let Some(reason) = symmetric_keller(g)? {
        return Ok(r.inapplicable(reason));
    }
    let gi = g.component(i);
    let lin = gi.homogeneous_part(1);
    if lin.derivative(i).is_zero() {
        return Ok(r.inapplicable("∂G_i⁽¹⁾/∂x_i = 0"));
    }
    let rest = gi - &lin;
    if !rest.is_homogeneous() {
        return Ok(r.inapplicable("G_i - G_i⁽¹⁾ is not homogeneous"));
    }
    let mut r = r;
    let ok = irreducible(gi)?;
    r.trial(ok);
    if !ok {
        r.poly("reducible G_i", gi);
    }
    if !rest.is_zero() && (2..=3).contains(&rest.degree()) {
        let mut rng = rng(seed);
        for _ in 0..samples {
            let c = rat(rng.random_range(-5i64..=5));
            let shifted = gi + &Polynomial::constant(gi.arity(), c);
            let ok = irreducible(&shifted)?;
            r.trial(ok);
            if !ok {
                r.poly("reducible G_i + c", &shifted);
            }
        }
    }
    Ok(r)
}

/// `G_i = c'ℓ + ℓ²h + c` with `ℓ = G_i⁽¹⁾`, `∂ℓ/∂x_i != 0` forces `h = 0`.
pub fn check_symdiag(g: &PolyMap, i: usize) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::SYMDIAG);
    if i >= g.len() {
        return Err(Error::InvalidParameter(format!("component {} out of range", i + 1)));
    }
    if let Some(reason) = symmetric_keller(g)? {
        return Ok(r.inapplicable(reason));
    }
    let mut r = r;
    let gi = g.component(i);
    let l = gi.homogeneous_part(1);
    if l.derivative(i).is_zero() {
        r.trial(true);
        return Ok(r.noted("vacuous: ∂ℓ/∂x_i = 0"));
    }
    let c = Polynomial::constant(gi.arity(), gi.constant_term());
    let rest = &(gi - &l) - &c;
    match rest.div_exact(&l.pow(2)) {
        None => {
            r.trial(true);
            Ok(r.noted("vacuous: no decomposition"))
        }
        Some(h) => {
            r.trial(h.is_zero());
            if !h.is_zero() {
                r.poly("h", &h);
            }
            Ok(r.noted("decomposition found"))
        }
    }
}

/// `det jac G = (-1)ⁿ (det jac F)²` for `G = grad_reduction(f, F)`, and
/// irreducibility of sampled combinations with some `μ_i != 0`, `i <= n`,
/// when `F` is Keller.
pub fn check_symm_lemma(f: &Polynomial, map: &PolyMap, samples: usize, seed: u64) -> Result<PropertyReport> {
    let mut r = PropertyReport::new(ids::SYMM_DET_IDENTITY).seeded(seed);
    let n = map.arity();
    let g = grad_reduction(f, map)?;
    let det_f = jacobian(map).determinant()?;
    let det_g = jacobian(&g).determinant()?;
    let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
    let want = det_f.pow(2).widen(2 * n).scale(&sign);
    r.trial(det_g == want);
    if det_g != want {
        r.poly("det jac G", &det_g);
        r.poly("(-1)^n (det jac F)^2", &want);
    }
    if !(det_f.is_constant() && !det_f.is_zero()) {
        return Ok(r.noted("F is not Keller; irreducibility clause skipped"));
    }
    let mut rng = rng(seed);
    for _ in 0..samples {
        let mut mu = sample_mu(2 * n, &mut rng);
        if mu[..n].iter().all(Zero::is_zero) {
            let k = rng.random_range(0..n);
            mu[k] = rat(1);
        }
        let comb = combination(&g, &mu);
        let ok = irreducible(&comb)?;
        r.trial(ok);
        if !ok {
            r.text("μ", mu_text(&mu));
            r.poly("reducible combination", &comb);
        }
    }
    Ok(r)
}

/// Sampled combinations of `F = x + H` for cubic homogeneous `H` with
/// nilpotent Jacobian: distinct reducible ones, up to scalars, number at
/// most `max(n - 4, 0)`.
pub fn check_irredth_sampling(h: &PolyMap, samples: usize, seed: u64) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::IRREDTH_SAMPLING).seeded(seed);
    let n = h.arity();
    if h.len() != n {
        return Err(Error::NotSquare { rows: h.len(), cols: n });
    }
    if !h.components().iter().all(|c| c.is_zero() || (c.is_homogeneous() && c.degree() == 3)) {
        return Ok(r.inapplicable("H is not cubic homogeneous"));
    }
    if !is_nilpotent(&jacobian(h))?.holds {
        return Ok(r.inapplicable("jac H is not nilpotent"));
    }
    let f = PolyMap::new(n, (0..n).map(|i| &Polynomial::var(n, i) + h.component(i)).collect())?;
    let mut rng = rng(seed);
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut r = r;
    for _ in 0..samples {
        let mu = sample_mu(n, &mut rng);
        let comb = combination(&f, &mu);
        r.trials += 1;
        if comb.is_constant() || irreducible(&comb)? {
            continue;
        }
        let lead = mu.iter().find(|c| !c.is_zero()).expect("nonzero μ").recip();
        let normal: Vec<Rational> = mu.iter().map(|c| c * &lead).collect();
        if found.insert(normal.clone()) {
            r.text("reducible μ", mu_text(&normal));
            r.poly("reducible combination", &comb);
        }
    }
    let bound = n.saturating_sub(4);
    if found.len() > bound {
        r.fail();
        r.failures = found.len() - bound;
    }
    Ok(r.noted(format!("{} distinct reducible combinations, bound {bound}", found.len())))
}

/// Sampled combinations of an extension of a Keller map are irreducible.
pub fn check_extension_irreducibility(
    f: &PolyMap,
    variant: &ExtensionVariant,
    param: &ExtensionParam,
    samples: usize,
    seed: u64,
) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::EXTENSION_IRREDUCIBILITY).seeded(seed);
    if !keller(f)? {
        return Ok(r.inapplicable("F is not a Keller map"));
    }
    if !variant.is_block() && !is_cubic_without_quadratic(f) {
        return Ok(r.inapplicable("scalar variants need a cubic map without quadratic terms"));
    }
    if samples == 0 {
        return Ok(r.inapplicable("no combination with a nonzero component coefficient sampled"));
    }
    let g = extend(f, variant, param)?;
    let mut rng = rng(seed);
    let mut r = r;
    for _ in 0..samples {
        let mu = sample_mu(g.len(), &mut rng);
        let comb = combination(&g, &mu);
        let ok = irreducible(&comb)?;
        r.trial(ok);
        if !ok {
            r.text("μ", mu_text(&mu));
            r.poly("reducible combination", &comb);
        }
    }
    Ok(r.noted(format!("variant {}", variant.name())))
}

fn tail_is_cubic_without_quadratic(variant: &ExtensionVariant) -> bool {
    match variant {
        ExtensionVariant::Gh(h) => h.degree() <= 3 && h.homogeneous_part(2).is_zero(),
        ExtensionVariant::Ghl(h) => is_cubic_without_quadratic(h),
        _ => true,
    }
}

/// Determinant relation of an extension, plus preservation of "cubic
/// without quadratic terms" and of a symmetric Jacobian where they apply.
pub fn check_extension_determinant(
    f: &PolyMap,
    variant: &ExtensionVariant,
    param: &ExtensionParam,
) -> Result<PropertyReport> {
    let mut r = PropertyReport::new(ids::EXTENSION_DETERMINANT);
    let g = extend(f, variant, param)?;
    let n = f.arity();
    let det_f = jacobian(f).determinant()?;
    let det_g = jacobian(&g).determinant()?;
    let want = det_f.widen(g.arity()).scale(&variant.determinant_sign(n));
    r.trial(det_g == want);
    r.text("relation", variant.determinant_relation(n));
    if det_g != want {
        r.poly("det jac G", &det_g);
        r.poly("expected", &want);
    }
    let cubic_variant = !variant.is_symmetric_form()
        && (!variant.is_block() || *param == ExtensionParam::Degree(3))
        && tail_is_cubic_without_quadratic(variant);
    if cubic_variant && is_cubic_without_quadratic(f) {
        let ok = is_cubic_without_quadratic(&g);
        r.trial(ok);
        r.text("cubic without quadratic terms preserved", ok.to_string());
    }
    if variant.is_symmetric_form() && is_symmetric(&jacobian(f)) {
        let ok = is_symmetric(&jacobian(&g));
        r.trial(ok);
        r.text("symmetric Jacobian preserved", ok.to_string());
    }
    Ok(r.noted(format!("variant {}", variant.name())))
}

/// Every component of `symred(f, F, u, u')` is irreducible when the
/// result is Keller; then also `u != u'` and `F` is Keller.
pub fn check_symred_components(
    f: &Polynomial,
    map: &PolyMap,
    u: &Rational,
    uprime: &Rational,
) -> Result<PropertyReport> {
    let r = PropertyReport::new(ids::SYMRED_COMPONENTS);
    let g = symred(f, map, u, uprime)?;
    if !keller(&g)? {
        return Ok(r.inapplicable("G is not a Keller map"));
    }
    let mut r = r;
    let consequences = u != uprime && keller(map)?;
    r.trial(consequences);
    if !consequences {
        r.text("broken consequence", "u = u' or F is not Keller");
    }
    for c in g.components() {
        let ok = irreducible(c)?;
        r.trial(ok);
        if !ok {
            r.poly("reducible component", c);
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_map_standard as pm, parse_standard as p};
    use crate::rational::rat_frac;
    use crate::verify::Outcome;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn squarefree_preservation_examples() {
        let f = pm(&["x1 + x2^2", "x2"], 2);
        assert!(check_keller_squarefree_preservation(&f, &p("x1*x2", 2)).unwrap().passed());
        let id = PolyMap::identity(2);
        assert!(check_keller_squarefree_preservation(&id, &p("x1^2 - x2", 2)).unwrap().passed());
        let r = check_keller_squarefree_preservation(&pm(&["x1^2", "x2"], 2), &p("x1", 2)).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn j41_examples() {
        let f = pm(&["x1^2", "x2"], 2);
        let r = check_j41_direction(&f, &p("x1", 2), &p("x1", 2)).unwrap();
        assert!(r.passed());
        let r = check_j41_direction(&PolyMap::identity(2), &p("x1", 2), &p("x1", 2)).unwrap();
        assert!(r.passed());
        let r = check_j41_direction(&f, &p("x1^2", 2), &p("x1", 2)).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn lindiv_examples() {
        let f = pm(&["x1 + 1"], 1);
        let l = pm(&["2*x1 + 2"], 1);
        let h = PolyMap::new(1, vec![Polynomial::constant(1, rat_frac(1, 2))]).unwrap();
        let r = check_lindiv(&f, &l, &h).unwrap();
        assert!(r.passed());
        let ones = pm(&["1", "1"], 2);
        assert!(check_lindiv(&PolyMap::identity(2), &PolyMap::identity(2), &ones).unwrap().passed());
        let r = check_lindiv(&pm(&["x1^2", "x2"], 2), &pm(&["x1", "x2"], 2), &pm(&["x1", "1"], 2)).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn irredlc_examples() {
        let f = pm(&["x1 + x2^2", "x2"], 2);
        let values = ints(&[-4, -3, -2, -1, 0, 1, 2, 3, 4]);
        let r = scan_mu_reducible(&f, 2, &ints(&[1, 1, 0]), &values).unwrap();
        assert!(r.passed());
        assert!(r.witnesses.is_empty());
        let r = scan_mu_reducible(&PolyMap::identity(2), 2, &ints(&[1, 2, 0]), &values).unwrap();
        assert!(r.passed());
        let r = scan_mu_reducible(&f, 0, &ints(&[0, 0, 1]), &values).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn irredcor_examples() {
        let r = check_irredcor_chain(&p("x1 + x1^2*x2", 2)).unwrap();
        assert!(r.passed());
        assert_eq!(r.trials, 2);
        let r = check_irredcor_chain(&p("x1 + x2^3", 2)).unwrap();
        assert!(r.passed());
        assert_eq!(r.trials, 0);
        let r = check_irredcor_chain(&p("x1 + x1*x2", 2)).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
        let r = check_irredcor_chain(&p("x1 + x1*x2 + x2^3", 2)).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn bakext_examples() {
        let g = pm(&["3*(x1 + x2)^2 + 2*x1", "3*(x1 + x2)^2 - 2*x2"], 2);
        assert!(check_bakext_i(&g, 0, 5, 1).unwrap().passed());
        assert!(check_bakext_i(&PolyMap::identity(3), 1, 5, 1).unwrap().passed());
        let asym = pm(&["x1 + x2^2", "x2"], 2);
        assert_eq!(check_bakext_i(&asym, 0, 5, 1).unwrap().outcome, Outcome::Inapplicable);
    }

    #[test]
    fn symdiag_examples() {
        assert!(check_symdiag(&PolyMap::identity(2), 0).unwrap().passed());
        let r = check_symdiag(&pm(&["x2", "x1"], 2), 0).unwrap();
        assert!(r.passed());
        assert!(r.note.unwrap().starts_with("vacuous"));
    }

    #[test]
    fn symm_lemma_examples() {
        let f = pm(&["x1 + x2^2", "x2"], 2);
        assert!(check_symm_lemma(&p("0", 2), &f, 20, 3).unwrap().passed());
        assert!(check_symm_lemma(&p("0", 3), &PolyMap::identity(3), 5, 3).unwrap().passed());
        let r = check_symm_lemma(&p("0", 2), &pm(&["x1^2", "x2"], 2), 5, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.trials, 1);
    }

    #[test]
    fn irredth_examples() {
        let h = pm(&["x2^3", "0"], 2);
        let r = check_irredth_sampling(&h, 200, 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.trials, 200);
        let r = check_irredth_sampling(&pm(&["x1^3", "0"], 2), 10, 5).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn extension_irreducibility_examples() {
        let f = pm(&["x1 + x2^3", "x2"], 2);
        let gh = ExtensionVariant::Gh(p("0", 3));
        let lambda = ExtensionParam::Lambda(ints(&[0, 0]));
        assert!(check_extension_irreducibility(&f, &gh, &lambda, 100, 2).unwrap().passed());
        let id = PolyMap::identity(2);
        let r = check_extension_irreducibility(&id, &ExtensionVariant::Chl, &ExtensionParam::Degree(2), 50, 2);
        assert!(r.unwrap().passed());
        let r = check_extension_irreducibility(&f, &gh, &lambda, 0, 2).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn extension_determinant_examples() {
        let f = pm(&["x1 + x2^3", "x2"], 2);
        let r = check_extension_determinant(&f, &ExtensionVariant::Dz, &ExtensionParam::Lambda(ints(&[1, 0]))).unwrap();
        assert!(r.passed());
        assert_eq!(r.trials, 2);
        let sym = pm(&["x1 + x2^2", "2*x1*x2 + x2"], 2);
        let r = check_extension_determinant(&sym, &ExtensionVariant::Schl, &ExtensionParam::Degree(2)).unwrap();
        assert!(r.passed());
        assert_eq!(r.trials, 2);
    }

    #[test]
    fn symred_component_examples() {
        let r = check_symred_components(&p("x1^3", 1), &pm(&["x1"], 1), &rat(1), &rat(-1)).unwrap();
        assert!(r.passed());
        let r = check_symred_components(&p("x1^3", 1), &pm(&["x1"], 1), &rat(1), &rat(1)).unwrap();
        assert_eq!(r.outcome, Outcome::Inapplicable);
    }
}
