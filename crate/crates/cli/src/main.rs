use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use icis_index::local::DegreeCap;
use icis_index::pipeline::{
    cross_check, dim_b, emit_report, load_job_file, run, CrossCheck, Formula, IndexOptions,
    IndexReport, OutputFormat,
};
use icis_index::tangency::{compute_cofactor, tau_prime, verify_tangency};
use icis_index::IndexError;

/// Homological (= GSV) index of a vector field tangent to an isolated
/// complete intersection singularity.
#[derive(Parser)]
#[command(name = "icis-index", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Cap on polynomial degrees during local reduction.
    #[arg(long, default_value_t = 64, global = true)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaArg {
    General,
    Codim1,
    Codim2,
    Curve,
    Surface,
}

impl From<FormulaArg> for Formula {
    fn from(f: FormulaArg) -> Self {
        match f {
            FormulaArg::General => Formula::General,
            FormulaArg::Codim1 => Formula::Codim1,
            FormulaArg::Codim2 => Formula::Codim2,
            FormulaArg::Curve => Formula::Curve,
            FormulaArg::Surface => Formula::Surface,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the index; several jobs run in parallel.
    Index {
        #[arg(required = true)]
        jobs: Vec<PathBuf>,
        /// Recompute with every applicable specialized formula and compare.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t = FormulaArg::General)]
        formula: FormulaArg,
        /// Write the maps of the complex, one file per map.
        #[arg(long, value_name = "DIR")]
        dump_matrices: Option<PathBuf>,
    },
    /// Check the supplied cofactor matrix, or compute one.
    Tangency { job: PathBuf },
    /// Print dim O/(X).
    Dim { job: PathBuf },
    /// Print Greuel's tau'.
    Tau { job: PathBuf },
}

struct Outcome {
    stdout: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = DegreeCap(cli.max_degree);
    let format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    let code = match &cli.command {
        Command::Index {
            jobs,
            cross_check,
            formula,
            dump_matrices,
        } => {
            let options = IndexOptions {
                cap,
                formula: (*formula).into(),
            };
            let outcomes: Vec<Outcome> = std::thread::scope(|s| {
                let handles: Vec<_> = jobs
                    .iter()
                    .map(|path| {
                        let dump = dump_matrices.as_ref().map(|d| {
                            if jobs.len() == 1 {
                                d.clone()
                            } else {
                                d.join(path.file_stem().unwrap_or_default())
                            }
                        });
                        s.spawn(move || {
                            index_job(path, &options, *cross_check, dump.as_deref(), format)
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("job thread panicked"))
                    .collect()
            });
            let many = jobs.len() > 1;
            if many && matches!(format, OutputFormat::Json) {
                let parts: Vec<&str> = outcomes
                    .iter()
                    .filter(|o| o.code == 0)
                    .map(|o| o.stdout.trim_end())
                    .collect();
                println!("[{}]", parts.join(",\n"));
            } else {
                for (path, o) in jobs.iter().zip(&outcomes) {
                    if many && o.code == 0 {
                        println!("== {} ==", path.display());
                    }
                    print!("{}", o.stdout);
                }
            }
            outcomes
                .iter()
                .map(|o| o.code)
                .find(|&c| c != 0)
                .unwrap_or(0)
        }
        Command::Tangency { job } => finish(job, tangency(job, cap, format)),
        Command::Dim { job } => finish(
            job,
            load_job_file(job)
                .and_then(|j| dim_b(&j, cap))
                .map(|d| scalar_output("dimB", d, format)),
        ),
        Command::Tau { job } => finish(
            job,
            load_job_file(job)
                .and_then(|j| tau_prime(&j.f, j.ambient_dim(), cap))
                .map(|t| scalar_output("tauPrime", t, format)),
        ),
    };
    ExitCode::from(code)
}

fn finish(path: &Path, result: Result<String, IndexError>) -> u8 {
    match result {
        Ok(s) => {
            print!("{s}");
            0
        }
        Err(e) => report_error(path, &e),
    }
}

fn report_error(path: &Path, e: &IndexError) -> u8 {
    eprintln!("error: {}: {e}", path.display());
    e.exit_code() as u8
}

fn scalar_output(key: &str, value: usize, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{{\"{key}\": {value}}}\n"),
        OutputFormat::Text => format!("{value}\n"),
    }
}

fn index_job(
    path: &Path,
    options: &IndexOptions,
    check: bool,
    dump: Option<&Path>,
    format: OutputFormat,
) -> Outcome {
    let fail = |e: IndexError| Outcome {
        stdout: String::new(),
        code: report_error(path, &e),
    };
    let job = match load_job_file(path) {
        Ok(j) => j,
        Err(e) => return fail(e),
    };
    let vars = job.vars.clone();
    let computation = match run(job.clone(), options) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    if let (Some(dir), Some(complex)) = (dump, &computation.complex) {
        let written = std::fs::create_dir_all(dir).and_then(|_| {
            complex
                .dump(&vars)
                .into_iter()
                .try_for_each(|(name, text)| std::fs::write(dir.join(name), text))
        });
        if let Err(e) = written {
            return fail(IndexError::Input(format!(
                "cannot write matrices to {}: {e}",
                dir.display()
            )));
        }
    }
    let mut stdout = emit_report(&computation.report, format);
    if !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    if check {
        match cross_check(job, options.cap) {
            Ok(cc) => {
                let summary = cross_check_summary(&cc, &computation.report);
                match format {
                    OutputFormat::Text => stdout.push_str(&summary),
                    OutputFormat::Json => eprint!("{summary}"),
                }
                if !cc.all_agree() {
                    let code = report_error(
                        path,
                        &IndexError::Inconsistency(
                            "cross-check disagrees with the general route".into(),
                        ),
                    );
                    return Outcome { stdout, code };
                }
            }
            Err(e) => {
                let code = report_error(path, &e);
                return Outcome { stdout, code };
            }
        }
    }
    Outcome { stdout, code: 0 }
}

fn cross_check_summary(cc: &CrossCheck, report: &IndexReport) -> String {
    let mut out = String::new();
    for e in &cc.entries {
        let h: Vec<String> = e.h.iter().map(ToString::to_string).collect();
        let matrices = match e.matrices_equivalent {
            Some(true) => "matrices agree up to signed permutation",
            Some(false) => "matrices differ beyond signed permutation",
            None => "matrices not compared",
        };
        out.push_str(&format!(
            "cross-check {:<8} h ({}) index {} {} (general: {}); {}\n",
            e.formula.name(),
            h.join(", "),
            e.index,
            if e.agrees { "agrees" } else { "DISAGREES" },
            report.index(),
            matrices
        ));
    }
    out
}

fn tangency(path: &Path, cap: DegreeCap, format: OutputFormat) -> Result<String, IndexError> {
    let job = load_job_file(path)?;
    if let Some(c) = &job.c {
        return if verify_tangency(&job.f, &job.x, c)? {
            Ok(match format {
                OutputFormat::Json => "{\"tangent\": true, \"supplied\": true}\n".to_string(),
                OutputFormat::Text => "tangent: the supplied c satisfies phi X = c f\n".to_string(),
            })
        } else {
            Err(IndexError::NotTangent(
                "the supplied c does not satisfy phi X = c f".into(),
            ))
        };
    }
    let cof = compute_cofactor(&job.f, &job.x, cap)?;
    let rows: Vec<Vec<String>> = (0..cof.k())
        .map(|r| {
            cof.numerators()
                .row(r)
                .iter()
                .map(|p| p.display(&job.vars).to_string())
                .collect()
        })
        .collect();
    let units: Vec<String> = cof
        .units()
        .iter()
        .map(|u| u.display(&job.vars).to_string())
        .collect();
    Ok(match format {
        OutputFormat::Json => {
            let quote = |v: &[String]| {
                v.iter()
                    .map(|s| format!("\"{s}\""))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", quote(r))).collect();
            format!(
                "{{\"tangent\": true, \"supplied\": false, \"c\": [{}], \"units\": [{}]}}\n",
                rows.join(", "),
                quote(&units)
            )
        }
        OutputFormat::Text => {
            let mut out = String::from("tangent: computed c with phi X = c f\n");
            for (row, unit) in rows.iter().zip(&units) {
                if unit == "1" {
                    out.push_str(&format!("  {}\n", row.join(", ")));
                } else {
                    out.push_str(&format!("  ({}) / ({unit})\n", row.join(", ")));
                }
            }
            out
        }
    })
}
