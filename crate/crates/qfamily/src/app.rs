//! Command-line front end: argument parsing and the subcommand runners.
//! All computation lives in the library; this module only wires it up and
//! formats output.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{associated_quandle, DEFAULT_CLOSURE_BOUND};
use crate::catalog::{resolve_cocycle, resolve_family, resolve_xset};
use crate::chains::check_cocycle2;
use crate::coloring::GroupMode;
use crate::diagram::{parse_diagram, Diagram};
use crate::invariants::phi;

#[derive(Parser)]
#[command(name = "qf", version, about = "Quandle cocycle invariants of handlebody-knot diagrams")]
struct Cli {
    /// Worker threads (overrides the QF_THREADS environment variable)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Plain,
    Hom,
    Conj,
}

impl From<ModeArg> for GroupMode {
    fn from(m: ModeArg) -> GroupMode {
        match m {
            ModeArg::Plain => GroupMode::Plain,
            ModeArg::Hom => GroupMode::ByHom,
            ModeArg::Conj => GroupMode::ByConj,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively check the axioms of a family, its associated quandle,
    /// and an X-set over it
    CheckAxioms {
        /// Builtin name (sl2z3-linear, dihedral-<m>) or a .gfam file
        #[arg(long)]
        family: String,
        /// X-set over the family: trivial or self
        #[arg(long, default_value = "trivial")]
        xset: String,
        /// Generator-closure size bound for matrix groups
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BOUND)]
        closure_bound: usize,
    },
    /// Verify a 2-cocycle: vanishing on degree-3 boundaries and on all
    /// degeneracy generators
    VerifyCocycle {
        #[arg(long)]
        family: String,
        /// Builtin name (nosaka-sl2z3, zero) or a .coc2 file
        #[arg(long)]
        cocycle: String,
        #[arg(long, default_value = "trivial")]
        xset: String,
        /// Coefficient modulus for the zero cocycle
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BOUND)]
        closure_bound: usize,
    },
    /// Compute the invariant of one diagram
    Invariant {
        /// Diagram file (.hkd)
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long, default_value = "sl2z3-linear")]
        family: String,
        #[arg(long, default_value = "nosaka-sl2z3")]
        cocycle: String,
        #[arg(long, default_value = "trivial")]
        xset: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Conj)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Compute on the mirror image instead
        #[arg(long)]
        mirror: bool,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BOUND)]
        closure_bound: usize,
    },
    /// Compute invariants for every .hkd file in a directory and compare
    /// against their expect headers
    Table {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value = "sl2z3-linear")]
        family: String,
        #[arg(long, default_value = "nosaka-sl2z3")]
        cocycle: String,
        #[arg(long, default_value = "trivial")]
        xset: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BOUND)]
        closure_bound: usize,
    },
    /// Write the mirror image of a diagram file
    Mirror {
        #[arg(long)]
        diagram: PathBuf,
        /// Output path; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn configure_threads(flag: Option<usize>) {
    let n = flag.or_else(|| {
        std::env::var("QF_THREADS").ok().and_then(|v| v.parse().ok())
    });
    if let Some(n) = n {
        // ignore the error when a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn load_diagram(path: &Path) -> Result<Diagram, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    parse_diagram(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Entry point for the `qf` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::CheckAxioms { family, xset, closure_bound } => {
            let f = resolve_family(&family, closure_bound).map_err(|e| e.to_string())?;
            let ys = resolve_xset(&xset, &f).map_err(|e| e.to_string())?;
            let mut ok = true;
            let group_report = f.group().check_axioms();
            println!("group axioms: {group_report}");
            ok &= group_report.is_pass();
            let family_report = f.check_axioms();
            println!("family axioms: {family_report}");
            ok &= family_report.is_pass();
            let assoc_report = associated_quandle(&f).check_axioms();
            println!("associated quandle axioms: {assoc_report}");
            ok &= assoc_report.is_pass();
            let xset_report = ys.check_axioms(&f);
            println!("x-set ({xset}) axioms: {xset_report}");
            ok &= xset_report.is_pass();
            Ok(if ok { 0 } else { 1 })
        }
        Command::VerifyCocycle { family, cocycle, xset, p, closure_bound } => {
            let f = resolve_family(&family, closure_bound).map_err(|e| e.to_string())?;
            let ys = resolve_xset(&xset, &f).map_err(|e| e.to_string())?;
            let theta = resolve_cocycle(&cocycle, &f, &ys, p).map_err(|e| e.to_string())?;
            let report = check_cocycle2(&theta, &f, &ys);
            println!("cocycle {cocycle}: {report}");
            Ok(if report.is_pass() { 0 } else { 1 })
        }
        Command::Invariant {
            diagram,
            family,
            cocycle,
            xset,
            mode,
            format,
            mirror,
            p,
            closure_bound,
        } => {
            let f = resolve_family(&family, closure_bound).map_err(|e| e.to_string())?;
            let ys = resolve_xset(&xset, &f).map_err(|e| e.to_string())?;
            let theta = resolve_cocycle(&cocycle, &f, &ys, p).map_err(|e| e.to_string())?;
            let mut d = load_diagram(&diagram)?;
            if mirror {
                d = d.mirror();
            }
            let value = phi(&d, &f, &ys, &theta, mode.into());
            match format {
                FormatArg::Text => println!("{value}"),
                FormatArg::Structured => println!("{}", value.to_json()),
            }
            Ok(0)
        }
        Command::Table { corpus, family, cocycle, xset, format, p, closure_bound } => {
            let f = resolve_family(&family, closure_bound).map_err(|e| e.to_string())?;
            let ys = resolve_xset(&xset, &f).map_err(|e| e.to_string())?;
            let theta = resolve_cocycle(&cocycle, &f, &ys, p).map_err(|e| e.to_string())?;
            let mut files: Vec<PathBuf> = std::fs::read_dir(&corpus)
                .map_err(|e| format!("{}: {e}", corpus.display()))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|path| path.extension().is_some_and(|ext| ext == "hkd"))
                .collect();
            files.sort();
            if files.is_empty() {
                return Err(format!("no .hkd files in {}", corpus.display()));
            }
            let mut rows = Vec::new();
            let mut mismatches = 0usize;
            for path in &files {
                let d = load_diagram(path)?;
                let value = phi(&d, &f, &ys, &theta, GroupMode::ByConj);
                let rendered = value.to_string();
                let name = d
                    .name()
                    .map(str::to_string)
                    .unwrap_or_else(|| {
                        path.file_stem().unwrap_or_default().to_string_lossy().into_owned()
                    });
                let status = match d.expect() {
                    None => "-".to_string(),
                    Some(expected) if expected == rendered => "ok".to_string(),
                    Some(expected) => {
                        mismatches += 1;
                        format!("MISMATCH expected {expected}")
                    }
                };
                rows.push((name, rendered, status));
            }
            match format {
                FormatArg::Text => {
                    for (name, value, status) in &rows {
                        println!("{name}\t{value}\t{status}");
                    }
                }
                FormatArg::Structured => {
                    let json: Vec<_> = rows
                        .iter()
                        .map(|(name, value, status)| {
                            serde_json::json!({
                                "name": name,
                                "value": value,
                                "status": status,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(json));
                }
            }
            Ok(if mismatches == 0 { 0 } else { 1 })
        }
        Command::Mirror { diagram, output } => {
            let d = load_diagram(&diagram)?;
            let text = d.mirror().to_text();
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}
