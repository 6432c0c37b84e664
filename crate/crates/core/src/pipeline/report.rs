use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::IndexError;
use crate::pipeline::Formula;
use crate::scalar::Field;

pub const PRIME_FIELD_CAVEAT: &str =
    "computed over a prime field: dimensions can differ from the rational answer for unlucky primes";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub dim_b: usize,
    pub tau_prime: usize,
    /// `h_0, ..., h_n`, with `h_n = tau'`.
    pub h: Vec<usize>,
    pub index_via_homology: i64,
    pub index_via_closed_form: i64,
    /// Equal to the homological index.
    pub index_gsv: i64,
    pub formula_used: Formula,
    pub field: Field,
    pub warnings: Vec<String>,
}

impl IndexReport {
    pub fn index(&self) -> i64 {
        self.index_via_homology
    }

    /// `"9 − 4 + 7 = 12"`.
    pub fn alternating_sum(&self) -> String {
        let mut s = String::new();
        for (i, h) in self.h.iter().enumerate() {
            match i {
                0 => write!(s, "{h}"),
                _ if i % 2 == 1 => write!(s, " \u{2212} {h}"),
                _ => write!(s, " + {h}"),
            }
            .expect("write to string");
        }
        write!(s, " = {}", self.index()).expect("write to string");
        s
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    #[serde(rename = "dimB")]
    dim_b: usize,
    #[serde(rename = "tauPrime")]
    tau_prime: usize,
    h: &'a [usize],
    #[serde(rename = "indexHom")]
    index_hom: i64,
    #[serde(rename = "indexGSV")]
    index_gsv: i64,
    #[serde(rename = "formulaUsed")]
    formula_used: &'static str,
    field: String,
    warnings: &'a [String],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, IndexError> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(IndexError::Input(format!("unknown output format `{s}`"))),
        }
    }
}

pub fn emit_report(r: &IndexReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(&JsonReport {
            dim_b: r.dim_b,
            tau_prime: r.tau_prime,
            h: &r.h,
            index_hom: r.index_via_homology,
            index_gsv: r.index_gsv,
            formula_used: r.formula_used.name(),
            field: r.field.to_string(),
            warnings: &r.warnings,
        })
        .expect("report serializes"),
        OutputFormat::Text => {
            let h: Vec<String> = r.h.iter().map(ToString::to_string).collect();
            let mut out = String::new();
            let _ = writeln!(out, "dim B       {}", r.dim_b);
            let _ = writeln!(out, "tau'        {}", r.tau_prime);
            let _ = writeln!(out, "h           ({})", h.join(", "));
            let _ = writeln!(out, "index       {}", r.alternating_sum());
            let _ = writeln!(out, "GSV index   {}", r.index_gsv);
            let _ = writeln!(out, "formula     {}", r.formula_used);
            let _ = writeln!(out, "field       {}", r.field);
            for w in &r.warnings {
                let _ = writeln!(out, "warning     {w}");
            }
            out
        }
    }
}
