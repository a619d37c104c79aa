//! Reading inputs and resolving the ring they live in.

use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use gbfan::points::parse_points_file;
use gbfan::{FieldSpec, Ideal, MonomialIdeal, PointSet, Ring, TermOrdering};

use crate::CliError;

/// Where the main input comes from: a file, `-` for stdin, or inline text.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Input file; `-` or nothing reads stdin.
    pub file: Option<PathBuf>,
    /// Inline input instead of a file.
    #[arg(short, long, conflicts_with = "file")]
    pub expr: Option<String>,
}

impl Source {
    pub fn read(&self) -> Result<String, CliError> {
        if let Some(e) = &self.expr {
            return Ok(e.clone());
        }
        match &self.file {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
            _ => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
                Ok(s)
            }
        }
    }
}

/// An ideal given by generators, or by a points file with `--points`.
#[derive(Args, Debug, Clone)]
pub struct IdealSource {
    #[command(flatten)]
    pub source: Source,
    /// Read the input as a points file and use its vanishing ideal.
    #[arg(long)]
    pub points: bool,
}

/// Field and variables requested on the command line.
#[derive(Debug, Clone, Default)]
pub struct RingFlags {
    pub field: Option<FieldSpec>,
    pub vars: Option<String>,
}

/// `# field:` and `# vars:` comment headers.
fn headers(text: &str) -> (Option<Result<FieldSpec, CliError>>, Option<String>) {
    let mut field = None;
    let mut vars = None;
    for line in text.lines() {
        let Some(rest) = line.trim().strip_prefix('#') else {
            continue;
        };
        if let Some((key, value)) = rest.split_once(':') {
            match key.trim() {
                "field" => field = Some(value.trim().parse::<FieldSpec>().map_err(CliError::from)),
                "vars" => vars = Some(value.trim().to_string()),
                _ => {}
            }
        }
    }
    (field, vars)
}

/// Identifiers in `text` outside comments, sorted, skipping the `ideal(`
/// wrapper. Falls back to `x` when there are none.
fn identifiers(text: &str) -> String {
    let mut names = BTreeSet::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i].is_ascii_alphabetic() || chars[i] == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                if !(name == "ideal" && chars.get(i) == Some(&'(')) {
                    names.insert(name);
                }
            } else {
                i += 1;
            }
        }
    }
    if names.is_empty() {
        "x".into()
    } else {
        names.into_iter().collect::<Vec<_>>().join(",")
    }
}

impl RingFlags {
    /// Flags win over headers; variables default to `infer(text)`.
    pub fn ring_for(&self, text: &str, infer: impl Fn(&str) -> String) -> Result<Ring, CliError> {
        let (hf, hv) = headers(text);
        let field = match self.field {
            Some(f) => f,
            None => hf.transpose()?.unwrap_or(FieldSpec::Rationals),
        };
        let vars = self.vars.clone().or(hv).unwrap_or_else(|| infer(text));
        Ok(Ring::parse_vars(field, &vars)?)
    }

    pub fn polynomial_ring(&self, text: &str) -> Result<Ring, CliError> {
        self.ring_for(text, identifiers)
    }

    pub fn ideal(&self, src: &IdealSource) -> Result<Ideal, CliError> {
        let text = src.source.read()?;
        if src.points {
            return Ok(self.points(&text)?.ideal()?);
        }
        let ring = self.polynomial_ring(&text)?;
        Ok(Ideal::parse(&ring, &text)?)
    }

    pub fn monomial_ideal(&self, src: &Source) -> Result<MonomialIdeal, CliError> {
        let text = src.read()?;
        let ring = self.polynomial_ring(&text)?;
        Ok(MonomialIdeal::parse(&ring, &text)?)
    }

    pub fn points(&self, text: &str) -> Result<PointSet, CliError> {
        Ok(parse_points_file(text, self.field, self.vars.as_deref())?)
    }

    /// Grid files name their variables at the start of each line.
    pub fn grid_ring(&self, text: &str) -> Result<Ring, CliError> {
        self.ring_for(text, |t| {
            t.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .filter_map(|l| l.split_once(':').map(|(name, _)| name.trim().to_string()))
                .collect::<Vec<_>>()
                .join(",")
        })
    }
}

pub fn ordering(spec: &str, ring: &Ring) -> Result<TermOrdering, CliError> {
    Ok(TermOrdering::parse(spec, ring.nvars())?)
}
