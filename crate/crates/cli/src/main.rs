//! `whitney`: check 2-complexes for Whitney-type uniqueness of their
//! embeddings, and inspect the pieces of the check.
//!
//! Reports are JSON on stdout. Exit status is 0 on success, 1 when the
//! input cannot be read or parsed, and 2 when a check fails.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use whitney_core::fattening::{fatten, induced_fat_rotation, verify_fat};
use whitney_core::gallery::{example, GALLERY};
use whitney_core::graph::is_in_f;
use whitney_core::io::{emit, read_file, write_file, Cx2Document};
use whitney_core::pipeline::{
    homology_section, rotation_section, run_pipeline, surfaces_section, PipelineOptions, EXIT_FAILED, EXIT_OK,
    EXIT_PARSE,
};
use whitney_core::rotation::DEFAULT_ORACLE_BUDGET;
use whitney_core::topology::DEFAULT_TIETZE_BUDGET;
use whitney_core::whitney::{check_whitney, link_graph};
use whitney_core::Complex2;

#[derive(Parser)]
#[command(name = "whitney", version, about = "Whitney 2-complexes and their planar rotation systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SearchFlags {
    /// Enumerate rotation systems by exhaustive search.
    #[arg(long)]
    oracle: bool,
    /// Node budget of the exhaustive search.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    oracle_budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and print the full report.
    Check {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
        /// Budget of Tietze moves for the simple-connectivity test.
        #[arg(long, default_value_t = DEFAULT_TIETZE_BUDGET)]
        max_tietze: usize,
    },
    /// Print the link graph of every vertex with its classification.
    Links { file: PathBuf },
    /// Enumerate planar rotation systems up to reversal.
    Rotsys {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Print the local surfaces of the file's rotation system, or of the first planar one.
    Surfaces {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Write the fattening with its induced rotation system, plus a `.prov.json` sidecar.
    Fatten {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Print H_1 and the simple-connectivity verdict.
    Homology {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TIETZE_BUDGET)]
        max_tietze: usize,
    },
    /// List the gallery, or print one example as a `.cx2` document.
    Examples {
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A failure of reading input, as opposed to a failed check.
struct InputError(anyhow::Error);

fn load(path: &Path) -> Result<Cx2Document, InputError> {
    read_file(path).map_err(|e| InputError(anyhow!(e)))
}

/// Writes to stdout, ignoring a reader that has gone away.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print(value: &Value) {
    out(&(serde_json::to_string_pretty(value).expect("json values serialize") + "\n"));
}

fn options(search: SearchFlags, tietze_budget: usize) -> PipelineOptions {
    PipelineOptions { force_oracle: search.oracle, oracle_budget: search.oracle_budget, tietze_budget }
}

fn links(x: &Complex2) -> Value {
    let vertices: Vec<Value> = (0..x.vertex_count())
        .map(|v| {
            let link = link_graph(x, v).expect("vertex in range");
            let g = &link.graph;
            let edges: Vec<Value> =
                g.edges().iter().map(|e| json!({"face": e.id, "ends": e.ends.map(|i| x.name(g.label(i)))})).collect();
            json!({
                "vertex": x.name(v),
                "neighbours": g.labels().iter().map(|&u| x.name(u)).collect::<Vec<_>>(),
                "edges": edges,
                "class": is_in_f(g).unwrap_or(None),
            })
        })
        .collect();
    json!({ "links": vertices })
}

fn run(command: Command) -> Result<i32, InputError> {
    match command {
        Command::Check { file, search, max_tietze } => {
            let doc = load(&file)?;
            let report = run_pipeline(&doc.complex, &options(search, max_tietze));
            out(&report.to_json());
            Ok(report.exit_status)
        }
        Command::Links { file } => {
            let doc = load(&file)?;
            print(&links(&doc.complex));
            Ok(EXIT_OK)
        }
        Command::Rotsys { file, search } => {
            let x = load(&file)?.complex;
            let whitney = check_whitney(&x).is_whitney;
            let (section, _) = rotation_section(&x, whitney, &options(search, DEFAULT_TIETZE_BUDGET));
            let status = if section.count.is_some() { EXIT_OK } else { EXIT_FAILED };
            print(&json!(section));
            Ok(status)
        }
        Command::Surfaces { file, search } => {
            let doc = load(&file)?;
            let systems = match doc.rotation {
                Some(sigma) => vec![sigma],
                None => {
                    let whitney = check_whitney(&doc.complex).is_whitney;
                    rotation_section(&doc.complex, whitney, &options(search, DEFAULT_TIETZE_BUDGET)).1
                }
            };
            let section = surfaces_section(&doc.complex, &systems);
            let status = if section.skipped.is_none() { EXIT_OK } else { EXIT_FAILED };
            print(&json!(section));
            Ok(status)
        }
        Command::Fatten { file, output, search } => {
            let doc = load(&file)?;
            let x = doc.complex;
            let sigma = match doc.rotation {
                Some(sigma) => sigma,
                None => {
                    let whitney = check_whitney(&x).is_whitney;
                    let (section, systems) = rotation_section(&x, whitney, &options(search, DEFAULT_TIETZE_BUDGET));
                    match systems.into_iter().next() {
                        Some(sigma) => sigma,
                        None => {
                            let reason = section.error.or(section.witness).unwrap_or_default();
                            print(
                                &json!({"status": "failed", "reason": format!("no planar rotation system: {reason}")}),
                            );
                            return Ok(EXIT_FAILED);
                        }
                    }
                }
            };
            let fat = match fatten(&x, &sigma) {
                Ok(fat) => fat,
                Err(e) => {
                    print(&json!({"status": "failed", "reason": e.to_string()}));
                    return Ok(EXIT_FAILED);
                }
            };
            let sigma_fat = match induced_fat_rotation(&fat) {
                Ok(s) => s,
                Err(e) => {
                    print(&json!({"status": "failed", "reason": e.to_string()}));
                    return Ok(EXIT_FAILED);
                }
            };
            let report = verify_fat(&fat, &sigma_fat);
            let document = Cx2Document { complex: fat.carrier.clone(), rotation: Some(sigma_fat) };
            write_file(&output, &document).map_err(|e| InputError(anyhow!(e)))?;
            let mut sidecar = output.clone().into_os_string();
            sidecar.push(".prov.json");
            let provenance = serde_json::to_string_pretty(&fat.provenance()).expect("provenance serializes") + "\n";
            std::fs::write(&sidecar, provenance)
                .with_context(|| format!("writing {}", PathBuf::from(&sidecar).display()))
                .map_err(InputError)?;
            let c = &fat.carrier;
            print(&json!({
                "status": if report.ok { "verified" } else { "failed" },
                "vertices": c.vertex_count(),
                "edges": c.edge_count(),
                "faces": c.face_count(),
                "output": output.display().to_string(),
                "provenance": PathBuf::from(sidecar).display().to_string(),
                "report": report,
            }));
            Ok(if report.ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Homology { file, max_tietze } => {
            let doc = load(&file)?;
            let section = homology_section(&doc.complex, max_tietze);
            let status = if section.error.is_none() { EXIT_OK } else { EXIT_FAILED };
            print(&json!(section));
            Ok(status)
        }
        Command::Examples { name: None, .. } => {
            out(&GALLERY.map(|name| format!("{name}\n")).concat());
            Ok(EXIT_OK)
        }
        Command::Examples { name: Some(name), output } => {
            let x = example(&name).ok_or_else(|| InputError(anyhow!("unknown example `{name}`")))?;
            let text = emit(&Cx2Document::new(x));
            match output {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))
                    .map_err(InputError)?,
                None => out(&text),
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_PARSE as u8)
        }
    }
}
