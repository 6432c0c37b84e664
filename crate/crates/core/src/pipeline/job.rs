use std::collections::HashMap;
use std::path::Path;

use crate::error::{IndexError, Result};
use crate::poly::{parse_polynomial, PolyMatrix, Polynomial, VarContext};
use crate::scalar::Field;

/// A parsed and shape-checked index computation request.
#[derive(Clone, Debug)]
pub struct Job {
    pub vars: VarContext,
    pub f: Vec<Polynomial>,
    pub x: Vec<Polynomial>,
    pub c: Option<PolyMatrix>,
    pub field: Field,
}

impl Job {
    pub fn ambient_dim(&self) -> usize {
        self.vars.len()
    }

    pub fn codim(&self) -> usize {
        self.f.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.codim()
    }

    /// The same job with every coefficient mapped into `field`.
    pub fn to_field(&self, field: Field) -> Result<Job> {
        let conv = |ps: &[Polynomial]| -> Result<Vec<Polynomial>> {
            ps.iter().map(|p| p.to_field(field)).collect()
        };
        let c = match &self.c {
            Some(c) => Some(PolyMatrix::from_rows(
                c.nvars(),
                (0..c.rows())
                    .map(|r| conv(c.row(r)))
                    .collect::<Result<_>>()?,
            )?),
            None => None,
        };
        Ok(Job {
            vars: self.vars.clone(),
            f: conv(&self.f)?,
            x: conv(&self.x)?,
            c,
            field,
        })
    }
}

struct Entry<'a> {
    line: usize,
    column: usize,
    value: &'a str,
}

pub fn load_job_file(path: &Path) -> Result<Job> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| IndexError::Input(format!("cannot read {}: {e}", path.display())))?;
    load_job(&text)
}

/// Parses the `key = value` job format.
pub fn load_job(text: &str) -> Result<Job> {
    let mut entries: HashMap<&str, Entry> = HashMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let eq = content
            .find('=')
            .ok_or_else(|| syntax(line, 1, "expected `key = value`"))?;
        let key = content[..eq].trim();
        if !matches!(key, "vars" | "f" | "X" | "c" | "field") {
            let col = content.find(key).unwrap_or(0) + 1;
            return Err(syntax(line, col, &format!("unknown key `{key}`")));
        }
        let value = &content[eq + 1..];
        let column = eq + 2;
        if entries
            .insert(
                key,
                Entry {
                    line,
                    column,
                    value,
                },
            )
            .is_some()
        {
            return Err(syntax(line, 1, &format!("duplicate key `{key}`")));
        }
    }
    let require = |key: &str| {
        entries
            .get(key)
            .ok_or_else(|| IndexError::Input(format!("missing key `{key}`")))
    };

    let vars_entry = require("vars")?;
    let names: Vec<&str> = vars_entry.value.split(',').map(str::trim).collect();
    let vars = VarContext::new(names.iter().copied()).map_err(|e| match e {
        IndexError::Input(m) | IndexError::Syntax { message: m, .. } => {
            syntax(vars_entry.line, vars_entry.column, &m)
        }
        other => other,
    })?;

    let field = match entries.get("field") {
        None => Field::Rational,
        Some(e) => parse_field(e.value.trim()).map_err(|m| syntax(e.line, e.column, &m))?,
    };

    let f = parse_list(require("f")?, ';', &vars)?;
    let x = parse_list(require("X")?, ';', &vars)?;
    let (n_vars, k) = (vars.len(), f.len());
    if x.len() != n_vars {
        return Err(IndexError::Shape(format!(
            "X has {} components but there are {} variables",
            x.len(),
            n_vars
        )));
    }
    if n_vars <= k {
        return Err(IndexError::Input(format!(
            "n must be positive: {k} equations in {n_vars} variables"
        )));
    }
    let c = match entries.get("c") {
        None => None,
        Some(e) => {
            let mut rows = Vec::new();
            for (offset, row) in segments(e.value, ';') {
                let sub = Entry {
                    line: e.line,
                    column: e.column + offset,
                    value: row,
                };
                let row = parse_list(&sub, ',', &vars)?;
                if row.len() != k {
                    return Err(IndexError::Shape(format!(
                        "c must be {k}x{k}: a row has {} entries",
                        row.len()
                    )));
                }
                rows.push(row);
            }
            if rows.len() != k {
                return Err(IndexError::Shape(format!(
                    "c must be {k}x{k}: got {} rows",
                    rows.len()
                )));
            }
            Some(PolyMatrix::from_rows(n_vars, rows)?)
        }
    };
    Job {
        vars,
        f,
        x,
        c,
        field: Field::Rational,
    }
    .to_field(field)
}

fn syntax(line: usize, column: usize, message: &str) -> IndexError {
    IndexError::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("Fp:")
        .ok_or_else(|| format!("field must be `Q` or `Fp:<prime>`, got `{s}`"))?;
    let p: u64 = p
        .trim()
        .parse()
        .map_err(|_| format!("invalid prime `{p}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

/// Pieces of `s` split at `sep`, with their byte offsets.
fn segments(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if ch == sep {
            out.push((start, &s[start..i]));
            start = i + ch.len_utf8();
        }
    }
    out.push((start, &s[start..]));
    out
}

fn parse_list(e: &Entry, sep: char, vars: &VarContext) -> Result<Vec<Polynomial>> {
    segments(e.value, sep)
        .into_iter()
        .map(|(offset, piece)| {
            parse_polynomial(piece, vars).map_err(|err| match err {
                IndexError::Syntax {
                    column, message, ..
                } => syntax(e.line, e.column + offset + column - 1, &message),
                other => other,
            })
        })
        .collect()
}
