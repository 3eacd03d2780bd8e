use std::fs;

use anyhow::{bail, Context, Result};
use polykeller_core::constructions::{
    extend, grad_reduction, is_druzkowski, symred, ExtensionParam, ExtensionVariant,
};
use polykeller_core::factor::{irreducibility, is_squarefree, RationalVerdict};
use polykeller_core::linalg::{is_keller, is_nilpotent, is_symmetric, jacobian, NilpotencyWitness};
use polykeller_core::poly::{parse, print};
use polykeller_core::rational::{format_rational, parse_rational};
use polykeller_core::verify::{
    check_extension_determinant, check_symm_lemma, gen as generate, run_suite, GeneratorKind, GeneratorSpec,
    PropertyReport, SuiteConfig,
};
use polykeller_core::{MapFile, PolyMap, Polynomial, Rational, VariableFrame};
use serde_json::json;

use crate::input::{read_map_file, InputArgs, Loaded};
use crate::report::RunReport;
use crate::{CheckKind, ConstructArgs, GenArgs, VariantArg, VerifyArgs};

/// Map-file text to print instead of the report, for commands that emit a
/// map without `-o`.
pub type MapText = Option<String>;

pub fn check(kind: CheckKind, input: &InputArgs, d: u32, report: &mut RunReport) -> Result<MapText> {
    let Loaded { file, digest } = input.load()?;
    let frame = file.frame.clone();
    let source = digest.source.clone();
    report.inputs.push(digest);
    let show = |p: &Polynomial| print(p, &frame);
    match kind {
        CheckKind::Squarefree | CheckKind::Irreducible => {
            for (name, f) in &file.entries {
                let mut r = PropertyReport::new(kind_name(kind)).named(name.clone());
                if kind == CheckKind::Squarefree {
                    let v = is_squarefree(f)?;
                    r.trial(v.holds);
                    if !v.holds {
                        r.text("repeated factor", show(&v.witness));
                    }
                } else {
                    let v = irreducibility(f)?;
                    match &v.rational {
                        RationalVerdict::Irreducible => r.trial(true),
                        RationalVerdict::Reducible(fact) => {
                            r.trial(false);
                            r.text("unit", format_rational(&fact.unit));
                            for (p, e) in &fact.factors {
                                r.text(&format!("factor^{e}"), show(p));
                            }
                        }
                    }
                    r.text("absolutely irreducible", v.absolute.as_str());
                }
                report.push(&r);
            }
        }
        _ => {
            let map = file.to_map()?;
            let mut r = PropertyReport::new(kind_name(kind)).named(source);
            match kind {
                CheckKind::Keller => {
                    let v = is_keller(&map)?;
                    r.trial(v.holds);
                    r.text("det jac F", show(&v.witness));
                }
                CheckKind::Nilpotent => {
                    let v = is_nilpotent(&jacobian(&map))?;
                    r.trial(v.holds);
                    match v.witness {
                        NilpotencyWitness::Index(k) => r.text("nilpotency index", k.to_string()),
                        NilpotencyWitness::Entry { row, col, value } => {
                            r.text(&format!("(jac H)^n entry ({}, {})", row + 1, col + 1), show(&value))
                        }
                    }
                }
                CheckKind::Symmetric => {
                    if !map.is_square() {
                        bail!("map has {} components in {} variables", map.len(), map.arity());
                    }
                    r.trial(is_symmetric(&jacobian(&map)));
                }
                CheckKind::Druzkowski => {
                    let v = is_druzkowski(&map, d)?;
                    r.trial(v.holds);
                    if let Some(i) = v.witness {
                        r.text("offending component", (i + 1).to_string());
                    }
                }
                CheckKind::Squarefree | CheckKind::Irreducible => unreachable!(),
            }
            report.push(&r);
        }
    }
    Ok(None)
}

fn kind_name(kind: CheckKind) -> &'static str {
    match kind {
        CheckKind::Keller => "keller",
        CheckKind::Squarefree => "squarefree",
        CheckKind::Irreducible => "irreducible",
        CheckKind::Nilpotent => "nilpotent",
        CheckKind::Symmetric => "symmetric",
        CheckKind::Druzkowski => "druzkowski",
    }
}

fn rational_arg(name: &str, value: &Option<String>) -> Result<Rational> {
    let text = value.as_deref().with_context(|| format!("--{name} is required"))?;
    parse_rational(text).with_context(|| format!("--{name}"))
}

fn lambda_arg(value: &Option<String>, n: usize) -> Result<ExtensionParam> {
    let text = value.as_deref().context("--lambda is required for scalar variants")?;
    let lambda = text
        .split(',')
        .map(|c| parse_rational(c.trim()).with_context(|| format!("--lambda entry `{c}`")))
        .collect::<Result<Vec<_>>>()?;
    if lambda.len() != n {
        bail!("--lambda has {} entries, the map has {n} components", lambda.len());
    }
    Ok(ExtensionParam::Lambda(lambda))
}

fn with_y(frame: &VariableFrame) -> Result<VariableFrame> {
    Ok(frame.extended((1..=frame.len()).map(|i| format!("y{i}")))?)
}

pub fn construct(args: &ConstructArgs, report: &mut RunReport) -> Result<MapText> {
    let block = matches!(
        args.variant,
        VariantArg::Chl | VariantArg::Dzl | VariantArg::Schl | VariantArg::Ghl
    );
    if block {
        match args.d {
            None => bail!("--d is required for block variants"),
            Some(d) if d < 2 => bail!("d >= 2 required, got {d}"),
            _ => {}
        }
    }
    let path = args.input.as_ref().context("-i FILE is required")?;
    let loaded = read_map_file(path)?;
    report.inputs.push(loaded.digest);
    let base = loaded.file.frame.clone();
    let f = loaded.file.to_map()?;
    let n = f.arity();
    let (g, frame, relation) = match args.variant {
        VariantArg::Symred | VariantArg::Grad => {
            let poly = parse(args.f.as_deref().unwrap_or("0"), &base).context("--f")?;
            let frame = with_y(&base)?;
            let g = if args.variant == VariantArg::Symred {
                let u = rational_arg("u", &args.u)?;
                let uprime = rational_arg("uprime", &args.uprime)?;
                let g = symred(&poly, &f, &u, &uprime)?;
                let det = print(&jacobian(&g).determinant()?, &frame);
                let mut r = PropertyReport::new("construct-symred");
                r.trial(true);
                r.text("det jac G", det.clone());
                report.push(&r);
                (g, format!("det jac G = {det}"))
            } else {
                let r = check_symm_lemma(&poly, &f, 0, 0)?.named("construct-grad");
                report.push(&r);
                (grad_reduction(&poly, &f)?, verified("det jac G = (-1)^n (det jac F)^2", &r))
            };
            (g.0, frame, g.1)
        }
        _ => {
            let scalar_frame = |k: usize| base.extended((n + 1..=n + k).map(|i| format!("x{i}")));
            let tails = |frame: &VariableFrame| {
                args.tail
                    .iter()
                    .map(|t| parse(t, frame).with_context(|| format!("--tail `{t}`")))
                    .collect::<Result<Vec<_>>>()
            };
            let variant = match args.variant {
                VariantArg::Ch => ExtensionVariant::Ch,
                VariantArg::Dz => ExtensionVariant::Dz,
                VariantArg::Sch => ExtensionVariant::Sch,
                VariantArg::Chl => ExtensionVariant::Chl,
                VariantArg::Dzl => ExtensionVariant::Dzl,
                VariantArg::Schl => ExtensionVariant::Schl,
                VariantArg::Gh => {
                    let mut t = tails(&scalar_frame(2)?)?;
                    if t.len() != 1 {
                        bail!("gh needs exactly one --tail");
                    }
                    ExtensionVariant::Gh(t.remove(0))
                }
                VariantArg::Ghl => {
                    let frame = ExtensionVariant::Ghl(PolyMap::identity(0)).frame(&base)?;
                    let t = tails(&frame)?;
                    if t.len() != n {
                        bail!("ghl needs {n} --tail expressions, got {}", t.len());
                    }
                    ExtensionVariant::Ghl(PolyMap::new(frame.len(), t)?)
                }
                VariantArg::Symred | VariantArg::Grad => unreachable!(),
            };
            let param = if block {
                ExtensionParam::Degree(args.d.expect("checked above"))
            } else {
                lambda_arg(&args.lambda, n)?
            };
            let g = extend(&f, &variant, &param)?;
            let r = check_extension_determinant(&f, &variant, &param)?.named(variant.name());
            report.push(&r);
            (g, variant.frame(&base)?, verified(variant.determinant_relation(n), &r))
        }
    };
    let file = MapFile::from_map(frame.clone(), "G", &g)
        .with_comment(format!(
            "polykeller construct --variant {}",
            format!("{:?}", args.variant).to_lowercase()
        ))
        .with_comment(relation);
    report.output = Some(json!({"vars": frame.names(), "components": g.render(&frame)}));
    emit(&file, &args.output)
}

fn verified(relation: &str, r: &PropertyReport) -> String {
    if r.passed() {
        format!("{relation} (verified)")
    } else {
        format!("{relation} FAILED")
    }
}

fn emit(file: &MapFile, output: &Option<std::path::PathBuf>) -> Result<MapText> {
    let text = file.render();
    match output {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

pub fn verify(args: &VerifyArgs, report: &mut RunReport) -> Result<MapText> {
    let mut cfg = SuiteConfig::new(&args.property, args.n, args.trials, args.seed);
    cfg.kind = args.generator.as_deref().map(str::parse::<GeneratorKind>).transpose()?;
    cfg.degree = args.degree;
    cfg.steps = args.steps;
    cfg.samples = args.samples;
    cfg.jobs = args.jobs.max(1);
    let suite = run_suite(&cfg)?;
    report.seed = Some(args.seed);
    report.absorb(suite.outcome);
    report.reports.push(suite.to_json());
    Ok(None)
}

pub fn gen(args: &GenArgs, report: &mut RunReport) -> Result<MapText> {
    let mut spec = GeneratorSpec::new(args.kind.parse()?, args.n, args.seed);
    if let Some(d) = args.degree {
        spec = spec.with_degree(d);
    }
    if let Some(s) = args.steps {
        spec = spec.with_steps(s);
    }
    let inst = generate(&spec)?;
    let frame = inst.frame();
    let file = match (inst.map(), inst.poly()) {
        (Some(m), _) => MapFile::from_map(frame.clone(), inst.component_prefix(), m),
        (None, Some(p)) => MapFile::from_poly(frame.clone(), inst.component_prefix(), p),
        (None, None) => unreachable!("instances carry a map or a polynomial"),
    }
    .with_comment(format!("polykeller gen {}", spec.describe()));
    report.seed = Some(args.seed);
    report.output = Some(json!({
        "vars": frame.names(),
        "components": file.entries.iter().map(|(_, p)| print(p, &frame)).collect::<Vec<_>>(),
    }));
    emit(&file, &args.output)
}
