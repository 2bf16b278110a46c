//! `invpath`: map involutions to labelled Motzkin paths and back, enumerate
//! avoidance classes, check structural statements and run counting censuses.
//!
//! Exit codes: 0 success, 1 a mismatch was found, 2 bad input, 3 size guard.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use involution_paths::{
    bfile_terms, diff_bfile, gen_involutions, parse_bfile, parse_path, phi, phi_inverse,
    run_census, run_theorem, write_bfile, write_csv, BFileDiff, CensusOptions, ClassDescriptor,
    CountReport, Involution, LabelledMotzkinPath, ParsedPath, TheoremReport,
};
use serde::Serialize;
use serde_json::json;

/// Every class with a closed-form count, used by `census all`.
const FORMULA_CLASSES: &[&str] = &[
    "I:4321",
    "I:3412",
    "I:321",
    "I:312",
    "I:4321,132",
    "I:4321,213",
    "I:4321,321",
    "I:4321,312",
    "I:3412,132",
    "I:3412,213",
    "I:3412,321",
    "I:3412,312",
    "I:3412,123",
    "I:3412,4321",
    "DI:4321",
    "DI:3412",
    "DI:3412,123",
    "DI:3412,312",
    "CI:4321",
    "CI:3412",
    "CI:4321,132",
    "CI:4321,321",
    "CI:4321,312",
    "CI:3412,132",
    "CI:3412,321",
    "CI:3412,312",
    "CI:3412,123",
    "CI:3412,4321",
];

#[derive(Debug, Parser)]
#[command(
    name = "invpath",
    version,
    about = "Involutions and labelled Motzkin paths"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Allow sizes above the enumeration guard.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Image of an involution, e.g. "4 7 5 1 3 6 2 9 8".
    Map { involution: String },
    /// Involution of a labelled path, e.g. "UUD2D1".
    Unmap { path: String },
    /// List the members of a class such as "I:4321,132" at size n.
    Gen {
        class: String,
        n: usize,
        /// Print only the number of members.
        #[arg(long)]
        count_only: bool,
        /// Print images under the bijection instead of involutions.
        #[arg(long)]
        as_paths: bool,
    },
    /// Check a registered statement for every size up to n_max.
    Verify { theorem: String, n_max: usize },
    /// Count classes for every size up to n_max and compare with closed forms.
    Census {
        /// One or more descriptors separated by ';' or spaces, or "all".
        classes: String,
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reference b-file to compare the (single) class against.
        #[arg(long)]
        diff: Option<PathBuf>,
        /// Added to produced indices before matching reference indices.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        /// Also count by brute force where a path predicate was used.
        #[arg(long)]
        cross_check: bool,
    },
    /// Draw a path as SVG.
    Render {
        path: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List registered statement ids.
    Theorems,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Bfile,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] involution_paths::Error),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(involution_paths::Error::SizeGuard { .. }) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Whether the command found what it was asked to confirm.
enum Verdict {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> CliResult<Verdict> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Map { involution } => {
            let tau: Involution = involution.parse()?;
            let lp = phi(&tau);
            if cli.json {
                let value = json!({
                    "schema": "invpath.map.v1",
                    "input": tau.to_string(),
                    "output": lp.to_string(),
                    "height": lp.path().height(),
                    "components": components(&lp),
                });
                print_json(&mut out, &value)?;
            } else {
                print_line(&mut out, &lp.to_string())?;
            }
        }
        Command::Unmap { path } => {
            let lp = labelled(&path)?;
            let tau = phi_inverse(&lp)?;
            if cli.json {
                let value = json!({
                    "schema": "invpath.unmap.v1",
                    "input": lp.to_string(),
                    "output": tau.to_string(),
                    "height": lp.path().height(),
                    "components": components(&lp),
                });
                print_json(&mut out, &value)?;
            } else {
                print_line(&mut out, &tau.to_string())?;
            }
        }
        Command::Gen {
            class,
            n,
            count_only,
            as_paths,
        } => {
            let class: ClassDescriptor = class.parse()?;
            involution_paths::check_guard(class.base, n, cli.force)?;
            let members = gen_involutions(n, class.base).filter(|t| class.contains(t));
            if count_only {
                let count = members.count();
                if cli.json {
                    let value = json!({
                        "schema": "invpath.gen.v1",
                        "class": class.to_string(),
                        "n": n,
                        "count": count,
                    });
                    print_json(&mut out, &value)?;
                } else {
                    print_line(&mut out, &count.to_string())?;
                }
            } else {
                for tau in members {
                    if cli.json {
                        let value = json!({
                            "schema": "invpath.gen.v1",
                            "class": class.to_string(),
                            "n": n,
                            "involution": tau.to_string(),
                            "path": phi(&tau).to_string(),
                        });
                        print_json(&mut out, &value)?;
                    } else if as_paths {
                        print_line(&mut out, &phi(&tau).to_string())?;
                    } else {
                        print_line(&mut out, &tau.to_string())?;
                    }
                }
            }
        }
        Command::Verify { theorem, n_max } => {
            let report = run_theorem(&theorem, n_max, cli.force)?;
            if cli.json {
                #[derive(Serialize)]
                struct Envelope<'a> {
                    schema: &'static str,
                    passed: bool,
                    #[serde(flatten)]
                    report: &'a TheoremReport,
                }
                let value = Envelope {
                    schema: "invpath.verify.v1",
                    passed: report.passed(),
                    report: &report,
                };
                print_json(&mut out, &value)?;
            } else {
                print_verify(&mut out, &report)?;
            }
            return Ok(if report.passed() {
                Verdict::Ok
            } else {
                Verdict::Mismatch
            });
        }
        Command::Census {
            classes,
            n_max,
            format,
            out: target,
            diff,
            offset,
            cross_check,
        } => {
            let classes = parse_classes(&classes)?;
            if diff.is_some() && classes.len() != 1 {
                return Err(CliError::Input("--diff needs exactly one class".into()));
            }
            // Read the reference first so a bad path fails before counting.
            let reference = match &diff {
                Some(path) => Some(parse_bfile(&read(path)?)?),
                None => None,
            };
            let options = CensusOptions {
                force: cli.force,
                cross_check,
            };
            let reports = run_census(&classes, n_max, options)?;
            let diff_result = reference
                .map(|r| diff_bfile(&bfile_terms(&reports[0], classes[0].base), &r, offset));

            let mut buf = Vec::new();
            let format = if cli.json { Format::Json } else { format };
            match format {
                Format::Csv => write_csv(&reports, &mut buf)?,
                Format::Bfile => {
                    for (class, report) in classes.iter().zip(&reports) {
                        write_bfile(class, report, &mut buf)?;
                    }
                }
                Format::Json => {
                    let value = json!({
                        "schema": "invpath.census.v1",
                        "n_max": n_max,
                        "reports": reports,
                        "diff": diff_result,
                    });
                    serde_json::to_writer_pretty(&mut buf, &value)
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    buf.push(b'\n');
                }
            }
            match &target {
                Some(path) => fs::write(path, &buf).map_err(|source| CliError::File {
                    path: path.clone(),
                    source,
                })?,
                None => out.write_all(&buf).map_err(stdout_error)?,
            }
            if let Some(d) = &diff_result {
                report_diff(d);
            }
            let clean = reports.iter().all(CountReport::all_match)
                && diff_result.as_ref().is_none_or(BFileDiff::is_clean);
            return Ok(if clean {
                Verdict::Ok
            } else {
                Verdict::Mismatch
            });
        }
        Command::Render { path, out: target } => {
            let parsed = parse_path(&path)?;
            let svg = render::render_svg(&parsed);
            match &target {
                Some(p) => fs::write(p, svg).map_err(|source| CliError::File {
                    path: p.clone(),
                    source,
                })?,
                None => out.write_all(svg.as_bytes()).map_err(stdout_error)?,
            }
        }
        Command::Theorems => {
            for t in involution_paths::registry() {
                print_line(&mut out, &format!("{:<24} {}", t.id, t.statement))?;
            }
            print_line(
                &mut out,
                &format!(
                    "{:<24} {}",
                    "class:<descriptor>", "path predicate matches membership"
                ),
            )?;
        }
    }
    Ok(Verdict::Ok)
}

/// A labelled path; a plain path is accepted only when it has no down steps.
fn labelled(text: &str) -> CliResult<LabelledMotzkinPath> {
    match parse_path(text)? {
        ParsedPath::Labelled(lp) => Ok(lp),
        ParsedPath::Plain(m) => {
            let first_down = m
                .steps()
                .iter()
                .position(|s| *s == involution_paths::Step::Down);
            match first_down {
                None => Ok(LabelledMotzkinPath::new(m, Vec::new())?),
                Some(i) => Err(involution_paths::Error::MissingLabel { position: i + 1 }.into()),
            }
        }
    }
}

fn components(lp: &LabelledMotzkinPath) -> Vec<String> {
    lp.irreducible_components()
        .iter()
        .map(ToString::to_string)
        .collect()
}

fn parse_classes(text: &str) -> CliResult<Vec<ClassDescriptor>> {
    let names: Vec<&str> = if text.trim() == "all" {
        FORMULA_CLASSES.to_vec()
    } else {
        text.split(|c: char| c == ';' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect()
    };
    if names.is_empty() {
        return Err(CliError::Input("no class given".into()));
    }
    names
        .iter()
        .map(|s| s.parse().map_err(CliError::from))
        .collect()
}

fn read(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.clone(),
        source,
    })
}

fn report_diff(d: &BFileDiff) {
    match &d.first_divergence {
        None if d.compared == 0 => eprintln!("diff: no overlapping indices"),
        None => eprintln!("diff: {} terms match", d.compared),
        Some(div) => eprintln!(
            "diff: first divergence at index {}: produced {}, reference {}",
            div.index, div.produced, div.reference
        ),
    }
}

fn print_verify(out: &mut impl Write, report: &TheoremReport) -> CliResult<()> {
    print_line(out, &format!("{}: {}", report.id, report.statement))?;
    for row in &report.rows {
        let mut line = format!(
            "n={:<3} checked={:<8} mismatches={}",
            row.n, row.checked, row.mismatches
        );
        if let Some(d) = &row.detail {
            line.push_str(&format!("  first: {d}"));
        }
        print_line(out, &line)?;
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    print_line(
        out,
        &format!(
            "{verdict} ({} mismatches, n<={})",
            report.mismatches(),
            report.n_max
        ),
    )
}

fn stdout_error(e: io::Error) -> CliError {
    CliError::Input(format!("writing output: {e}"))
}

fn print_line(out: &mut impl Write, line: &str) -> CliResult<()> {
    writeln!(out, "{line}").map_err(stdout_error)
}

fn print_json(out: &mut impl Write, value: &impl Serialize) -> CliResult<()> {
    let text = serde_json::to_string(value).map_err(|e| CliError::Input(e.to_string()))?;
    print_line(out, &text)
}
