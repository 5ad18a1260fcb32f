//! `broute` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use broute_core::{generate_instance, Instance, Layout, TourStorageKind};
use clap::{Parser, Subcommand};

use crate::benchmark::{Selection, Variant};
use crate::error::{HarnessError, Result};
use crate::expected::{verify, ExpectedChecksums};
use crate::output::{rows_to_csv, write_atomic};
use crate::runner::{run_benchmark, ResultRow};

/// Exit status when checksum verification fails.
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "broute",
    version,
    about = "Deterministic vehicle-routing benchmark harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance file.
    Generate {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "p")]
        p: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run benchmarks over instance files (directories are expanded).
    Run {
        /// 2-opt, Or-opt, lns, espprc, espprc-index, maxflow or all
        #[arg(long)]
        benchmark: Selection,
        #[arg(long, default_value = "flat")]
        layout: Layout,
        #[arg(long, default_value = "dynamic")]
        tour: TourStorageKind,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the observed checksums as an expectations file.
        #[arg(long)]
        emit_expected: Option<PathBuf>,
        /// Check the observed checksums against an expectations file.
        #[arg(long)]
        verify: Option<PathBuf>,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate { n, p, seed, out } => {
            let inst =
                generate_instance(n, p, seed).map_err(|e| HarnessError::Usage(e.to_string()))?;
            write_atomic(&out, &inst.write())?;
            Ok(0)
        }
        Command::Run {
            benchmark,
            layout,
            tour,
            out,
            emit_expected,
            verify: verify_path,
            paths,
        } => {
            let expected = verify_path
                .as_deref()
                .map(|path| {
                    let text =
                        std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
                    ExpectedChecksums::parse(&text, path)
                })
                .transpose()?;

            let variant = Variant { layout, tour };
            let mut rows: Vec<ResultRow> = Vec::new();
            for file in instance_files(&paths)? {
                let inst = load_instance(&file)?;
                let id = file
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| file.display().to_string());
                for b in benchmark.benchmarks() {
                    rows.push(run_benchmark(b, &inst, &id, variant)?);
                }
            }

            let csv = rows_to_csv(&rows)?;
            match &out {
                Some(path) => write_atomic(path, &csv)?,
                None => stdout
                    .write_all(&csv)
                    .map_err(|e| HarnessError::io("<stdout>", e))?,
            }
            if let Some(path) = &emit_expected {
                write_atomic(
                    path,
                    ExpectedChecksums::from_rows(&rows).to_text().as_bytes(),
                )?;
            }
            if let Some(expected) = expected {
                let report = verify(&rows, &expected);
                let _ = writeln!(stderr, "{report}");
                if !report.is_ok() {
                    return Ok(EXIT_VERIFY_FAILED);
                }
            }
            Ok(0)
        }
    }
}

/// Expands directories into their regular files, sorted by name.
fn instance_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for path in paths {
        let meta = std::fs::metadata(path).map_err(|e| HarnessError::io(path, e))?;
        if meta.is_dir() {
            let mut entries = Vec::new();
            for entry in std::fs::read_dir(path).map_err(|e| HarnessError::io(path, e))? {
                let entry = entry.map_err(|e| HarnessError::io(path, e))?;
                if entry
                    .file_type()
                    .map_err(|e| HarnessError::io(entry.path(), e))?
                    .is_file()
                {
                    entries.push(entry.path());
                }
            }
            entries.sort();
            files.extend(entries);
        } else {
            files.push(path.clone());
        }
    }
    Ok(files)
}

fn load_instance(path: &Path) -> Result<Instance> {
    let bytes = std::fs::read(path).map_err(|e| HarnessError::io(path, e))?;
    Instance::parse(&bytes).map_err(|source| HarnessError::Instance {
        path: path.to_path_buf(),
        source,
    })
}
