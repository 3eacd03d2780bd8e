use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use polykeller_core::poly::{identifiers, parse};
use polykeller_core::{MapFile, VariableFrame};

use crate::report::InputDigest;

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Map file to read.
    #[arg(short = 'i', long = "input", conflicts_with = "expr")]
    pub input: Option<PathBuf>,
    /// Inline expression; repeat for the components of a map.
    #[arg(short = 'e', long = "expr")]
    pub expr: Vec<String>,
    /// Variable names for inline expressions, separated by spaces or commas.
    #[arg(long)]
    pub vars: Option<String>,
    /// Number of variables `x1..xn` for inline expressions.
    #[arg(long)]
    pub n: Option<usize>,
}

pub struct Loaded {
    pub file: MapFile,
    pub digest: InputDigest,
}

pub fn read_map_file(path: &Path) -> Result<Loaded> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let text = String::from_utf8(bytes.clone()).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let file = MapFile::parse(&text).with_context(|| format!("in {}", path.display()))?;
    Ok(Loaded {
        file,
        digest: InputDigest::of(path.display().to_string(), &bytes),
    })
}

/// Frame for inline expressions: `--vars`, else `x1..xn` with `n` from
/// `--n`, or the largest `xk` mentioned and at least 2.
fn inline_frame(args: &InputArgs) -> Result<VariableFrame> {
    if let Some(vars) = &args.vars {
        let names = vars.split([' ', ',']).filter(|s| !s.is_empty());
        return Ok(VariableFrame::new(names)?);
    }
    if let Some(n) = args.n {
        return Ok(VariableFrame::standard(n));
    }
    let mut n = 2;
    for e in &args.expr {
        for id in identifiers(e)? {
            if let Some(k) = id.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                n = n.max(k);
            }
        }
    }
    Ok(VariableFrame::standard(n))
}

impl InputArgs {
    pub fn load(&self) -> Result<Loaded> {
        if let Some(path) = &self.input {
            return read_map_file(path);
        }
        if self.expr.is_empty() {
            bail!("no input: pass -i FILE or -e EXPR");
        }
        let frame = inline_frame(self)?;
        let entries = self
            .expr
            .iter()
            .enumerate()
            .map(|(k, e)| Ok((format!("F{}", k + 1), parse(e, &frame).with_context(|| format!("in `{e}`"))?)))
            .collect::<Result<Vec<_>>>()?;
        let joined = self.expr.join("\n");
        Ok(Loaded {
            file: MapFile { comments: Vec::new(), frame, entries },
            digest: InputDigest::of("-e", joined.as_bytes()),
        })
    }
}
