//! `twocolor`: enumerate, map, transform, render and verify.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or input error,
//! 3 exceptional partition passed to `transform`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twocolor_core::diagram::{build_diagram, merge_adjoined, render, Charset, RenderFormat};
use twocolor_core::glaisher::{overpartition_to_twocolor, twocolor_to_overpartition};
use twocolor_core::involution::transform;
use twocolor_core::partition::{classify, enumerate_odd_overpartitions, enumerate_two_color, Parity};
use twocolor_core::verify::{
    reports_pass, reports_to_csv, reports_to_markdown, verify_bijection, verify_involution, verify_series,
    verify_theorem, DEFAULT_SERIES_DEPTH,
};
use twocolor_core::{Error, Execution, OddOverpartition, TwoColorPartition};

#[derive(Parser)]
#[command(name = "twocolor", version, about = "Two-color partitions, odd overpartitions and two-modular diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the per-n count table with identity checks.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        sequential: bool,
    },
    /// Run exhaustive audits; exit 0 iff all of them pass.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Check::all())]
        checks: Vec<Check>,
        /// Truncation order of the series cross-check.
        #[arg(long, default_value_t = DEFAULT_SERIES_DEPTH)]
        series_depth: usize,
        #[arg(long)]
        sequential: bool,
    },
    /// Apply the parity-flipping transformation to a partition read as JSON.
    Transform {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a render of the input diagram here.
        #[arg(long)]
        before: Option<PathBuf>,
        /// Write a render of the output diagram here.
        #[arg(long)]
        after: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        render_format: Format,
        #[arg(long)]
        unicode: bool,
    },
    /// Map between odd overpartitions and two-color partitions.
    Map {
        #[arg(long, value_enum)]
        direction: MapDirection,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the two-modular diagram of a partition.
    Render {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Erase the diagonal between adjoined triangles.
        #[arg(long)]
        merged: bool,
        #[arg(long)]
        unicode: bool,
    },
    /// List E(n), one of its parity classes, or the odd overpartitions of n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Class::All)]
        class: Class,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Md,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Theorem,
    Involution,
    Bijection,
    Series,
}

impl Check {
    fn all() -> Vec<Check> {
        vec![Check::Theorem, Check::Involution, Check::Bijection, Check::Series]
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

impl From<Format> for RenderFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Ascii => RenderFormat::Ascii,
            Format::Svg => RenderFormat::Svg,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapDirection {
    ToTwocolor,
    ToOverpartition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    All,
    E0,
    E1,
    E2,
    E3,
    Podd,
}

enum Failure {
    Usage(String),
    Exceptional(String),
    Verification,
    Io(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidInput(_) | Error::InvalidPartition(_) => Failure::Usage(err.to_string()),
            Error::ExceptionalPartition(p) => Failure::Exceptional(format!(
                "transformation not applicable to {p}: single-color staircase {{2k-1, ..., 3, 1}} or empty partition"
            )),
            Error::MalformedDiagram { .. } | Error::Overflow(_) => Failure::Io(err.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn render_partition(p: &TwoColorPartition, format: Format, merged: bool, unicode: bool) -> Result<String, Failure> {
    let mut dia = build_diagram(p.greens(), p.blues())?;
    if merged {
        dia = merge_adjoined(&dia);
    }
    let charset = if unicode { Charset::Unicode } else { Charset::Ascii };
    Ok(render(&dia, format.into(), charset))
}

fn cmd_table(max_n: usize, format: TableFormat, exec: Execution) -> CmdResult {
    let reports = verify_theorem(max_n, exec);
    let text = match format {
        TableFormat::Csv => reports_to_csv(&reports),
        TableFormat::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        TableFormat::Md => reports_to_markdown(&reports),
    };
    write_output(None, &text)?;
    if reports_pass(&reports) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_verify(max_n: usize, checks: &[Check], series_depth: usize, exec: Execution) -> CmdResult {
    let mut all_ok = true;
    let mut line = |name: &str, ok: bool, detail: String| {
        all_ok &= ok;
        println!("{:<11} {}  {detail}", name, if ok { "pass" } else { "FAIL" });
    };

    if checks.contains(&Check::Theorem) {
        let reports = verify_theorem(max_n, exec);
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| r.pass == Some(false))
            .map(|r| format!("n={} parts {:?}", r.n, r.checks.map(|c| c.failed_parts()).unwrap_or_default()))
            .collect();
        line("theorem", failed.is_empty(), format!("n=1..={max_n} {}", failed.join(", ")));
    }
    if checks.contains(&Check::Involution) {
        let audits: Vec<_> = (1..=max_n).map(|n| verify_involution(n, exec)).collect();
        let orbits: usize = audits.iter().map(|a| a.orbits).sum();
        let exceptional: usize = audits.iter().map(|a| a.exceptional.len()).sum();
        let failed: Vec<String> = audits
            .iter()
            .filter(|a| !a.passed())
            .map(|a| match a.failures.first() {
                Some(f) => format!("n={}: {} ({})", a.n, f.partition, f.reason),
                None => format!("n={}: exceptional census {:?}", a.n, a.exceptional),
            })
            .collect();
        line(
            "involution",
            failed.is_empty(),
            format!("n=1..={max_n} orbits={orbits} exceptional={exceptional} {}", failed.join(", ")),
        );
    }
    if checks.contains(&Check::Bijection) {
        let audits: Vec<_> = (0..=max_n).map(|n| verify_bijection(n, exec)).collect();
        let pairs: usize = audits.iter().map(|a| a.two_color).sum();
        let failed: Vec<String> = audits
            .iter()
            .filter(|a| !a.passed())
            .map(|a| format!("n={}: {} ({})", a.n, a.failures[0].partition, a.failures[0].reason))
            .collect();
        line("bijection", failed.is_empty(), format!("n=0..={max_n} pairs={pairs} {}", failed.join(", ")));
    }
    if checks.contains(&Check::Series) {
        let audit = verify_series(series_depth, max_n, exec)?;
        let failed: Vec<String> = audit.mismatches.iter().map(|m| format!("n={}", m.n)).collect();
        line(
            "series",
            audit.passed(),
            format!("depth={series_depth} enumerated<={} {}", audit.enumeration_limit, failed.join(", ")),
        );
    }

    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_transform(
    input: Option<&Path>,
    out: Option<&Path>,
    before: Option<&Path>,
    after: Option<&Path>,
    format: Format,
    unicode: bool,
) -> CmdResult {
    let p = TwoColorPartition::from_json(&read_input(input)?)?;
    let outcome = transform(&p)?;
    if let Some(path) = before {
        write_output(Some(path), &render_partition(&p, format, false, unicode)?)?;
    }
    if let Some(path) = after {
        write_output(Some(path), &render_partition(&outcome.result, format, false, unicode)?)?;
    }
    write_output(out, &(serde_json::to_string(&outcome).expect("outcome serializes") + "\n"))
}

fn cmd_map(direction: MapDirection, input: Option<&Path>, out: Option<&Path>) -> CmdResult {
    let text = read_input(input)?;
    let json = match direction {
        MapDirection::ToTwocolor => overpartition_to_twocolor(&OddOverpartition::from_json(&text)?).to_json(),
        MapDirection::ToOverpartition => twocolor_to_overpartition(&TwoColorPartition::from_json(&text)?).to_json(),
    };
    write_output(out, &(json + "\n"))
}

fn cmd_enumerate(n: usize, class: Class) -> CmdResult {
    let lines: Vec<String> = match class {
        Class::Podd => enumerate_odd_overpartitions(n).iter().map(OddOverpartition::to_json).collect(),
        _ => enumerate_two_color(n)
            .into_iter()
            .filter(|p| {
                let c = classify(p);
                match class {
                    Class::E0 => c.evens_count_parity == Parity::Even,
                    Class::E1 => c.evens_count_parity == Parity::Odd,
                    Class::E2 => c.total_parts_parity == Parity::Even,
                    Class::E3 => c.total_parts_parity == Parity::Odd,
                    _ => true,
                }
            })
            .map(|p| p.to_json())
            .collect(),
    };
    let mut text = String::new();
    for l in &lines {
        text.push_str(l);
        text.push('\n');
    }
    text.push_str(&format!("count {}\n", lines.len()));
    write_output(None, &text)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Table { max_n, format, sequential } => cmd_table(max_n as usize, format, execution(sequential)),
        Command::Verify { max_n, checks, series_depth, sequential } => {
            cmd_verify(max_n as usize, &checks, series_depth, execution(sequential))
        }
        Command::Transform { input, out, before, after, render_format, unicode } => {
            cmd_transform(input.as_deref(), out.as_deref(), before.as_deref(), after.as_deref(), render_format, unicode)
        }
        Command::Map { direction, input, out } => cmd_map(direction, input.as_deref(), out.as_deref()),
        Command::Render { input, out, format, merged, unicode } => {
            let p = TwoColorPartition::from_json(&read_input(input.as_deref())?)?;
            write_output(out.as_deref(), &render_partition(&p, format, merged, unicode)?)
        }
        Command::Enumerate { n, class } => cmd_enumerate(n, class),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Exceptional(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
