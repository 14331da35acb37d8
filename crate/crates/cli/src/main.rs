use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};

use girdled::liealg::{basis, killing_matrix, BasisDoc, BasisKind};
use girdled::structeq::{emit_constraints, emit_equations, generate_structure_equations, ConstraintTable, EmitFormat};
use girdled::{run_suite, Fixtures, Report, Status, Suite};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Artifact {
    StructureEquations,
    Constraints,
    Bases,
    KillingMatrix,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Latex,
    Json,
}

impl From<Format> for EmitFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Latex => EmitFormat::Latex,
            Format::Json => EmitFormat::Json,
        }
    }
}

/// Exact verification of the so(3,2) Cartan connection data for girdled CR manifolds.
#[derive(Debug, Parser)]
#[command(name = "girdled", version)]
struct Cli {
    /// Suite to run: algebra, killing, kernels, torsion, structure-equations, iz-comparison, model, all.
    #[arg(long, conflicts_with = "emit")]
    suite: Option<String>,

    /// Print the report as JSON on standard output.
    #[arg(long)]
    json: bool,

    /// Directory with replacement fixture files.
    #[arg(long, value_name = "DIR")]
    fixtures: Option<PathBuf>,

    /// Artifact to emit instead of running a suite.
    #[arg(long, value_enum)]
    emit: Option<Artifact>,

    #[arg(long, value_enum, default_value = "json", requires = "emit")]
    format: Format,

    /// Write the emitted artifact here instead of standard output.
    #[arg(long, value_name = "PATH", requires = "emit")]
    out: Option<PathBuf>,
}

fn load_fixtures(dir: Option<&Path>) -> Result<Fixtures> {
    Ok(match dir {
        Some(d) => Fixtures::load_dir(d)?,
        None => Fixtures::embedded()?,
    })
}

fn emit(what: Artifact, format: Format, fixtures: &Fixtures) -> Result<String> {
    let table = ConstraintTable::from_fixture(&fixtures.constraints)?;
    Ok(match what {
        Artifact::StructureEquations => emit_equations(&generate_structure_equations(&table)?, format.into())?,
        Artifact::Constraints => emit_constraints(&table, format.into())?,
        Artifact::Bases => {
            let docs: Vec<BasisDoc> = BasisKind::ALL.iter().map(|k| BasisDoc::from_basis(basis(*k))).collect();
            match format {
                Format::Json => serde_json::to_string_pretty(&docs)? + "\n",
                Format::Latex => bail!("bases are only available as json"),
            }
        }
        Artifact::KillingMatrix => {
            let k = killing_matrix(basis(BasisKind::F))?;
            match format {
                Format::Json => {
                    let rows: Vec<Vec<serde_json::Value>> = k
                        .to_rows()
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|x| match x.to_string().parse::<i64>() {
                                    Ok(n) => serde_json::Value::from(n),
                                    Err(_) => serde_json::Value::from(x.to_string()),
                                })
                                .collect()
                        })
                        .collect();
                    serde_json::to_string_pretty(&rows)? + "\n"
                }
                Format::Latex => {
                    let rows: Vec<String> = k
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(|x| x.to_latex()).collect::<Vec<_>>().join(" & "))
                        .collect();
                    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n", rows.join(" \\\\\n"))
                }
            }
        }
    })
}

fn print_text(report: &Report) {
    for c in &report.checks {
        if c.status != Status::Pass {
            println!("{:?} {} ({}) {}", c.status, c.id, c.locus, c.witness);
        }
    }
    println!(
        "suite {}: {} passed, {} failed, {} skipped in {} ms",
        report.suite, report.summary.pass, report.summary.fail, report.summary.skip, report.timing.elapsed_ms
    );
}

fn run(cli: Cli) -> Result<bool> {
    let fixtures = load_fixtures(cli.fixtures.as_deref())?;
    if let Some(what) = cli.emit {
        let text = emit(what, cli.format, &fixtures)?;
        match &cli.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        return Ok(true);
    }
    let suite: Suite = cli.suite.as_deref().unwrap_or("all").parse()?;
    let report = run_suite(suite, &fixtures)?;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print_text(&report);
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
