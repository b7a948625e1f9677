//! The `cpg` command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain failure (violations, failed
//! audit, no representation found), 2 on usage, I/O or parse errors. All
//! diagnostics go to the error stream.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::contact::{validate, CpgRepresentation, LabeledGraph};
use crate::format::{parse_graph, parse_representation, write_graph, write_representation};
use crate::gk::{audit_gk, build_representation, generate_gk, rotation_system_gk, trace_faces};
use crate::render::{render, RenderFormat, RenderOptions};
use crate::search::{
    min_bend_number, search_representation, search_representation_parallel, BendNumberStatus,
    SearchBounds, SearchOutcome, DEFAULT_NODE_BUDGET,
};

#[derive(Debug, Parser)]
#[command(name = "cpg", version, about = "Contact representations of paths on a grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the graph G_k.
    GenGraph {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the canonical (k+1)-bend representation of G_k.
    BuildRep {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List violations of a representation; exit 0 iff there are none.
    Validate {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Audit a representation of G_k; exit 0 iff every check holds.
    Audit {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Draw a representation.
    Render {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        cell_size: u32,
        #[arg(long)]
        no_markers: bool,
    },
    /// Search for a representation of a small graph within a grid of
    /// width x height points.
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        width: u32,
        #[arg(long)]
        height: u32,
        #[arg(long)]
        bends: u32,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        nodes: u64,
        #[arg(long)]
        max_edge_len: Option<u32>,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest bend budget admitting a representation within the grid.
    MinBends {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        width: u32,
        #[arg(long)]
        height: u32,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        nodes: u64,
    },
    /// Face count of the planar embedding of G_k and the Euler check.
    Faces {
        #[arg(long)]
        k: u32,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        if path == Path::new("-") {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
        }
    }

    fn emit(&mut self, out: Option<&Path>, text: &str) -> Outcome {
        match out {
            Some(p) if p != Path::new("-") => fs::write(p, text)
                .map_err(|e| Failure::Usage(format!("writing {}: {e}", p.display()))),
            _ => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("writing standard output: {e}"))),
        }
    }

    fn note(&mut self, msg: &str) {
        let _ = writeln!(self.stderr, "{msg}");
    }

    fn representation(&mut self, path: &Path) -> Result<CpgRepresentation, Failure> {
        let text = self.read(path)?;
        parse_representation(&text).map_err(|e| Failure::Usage(e.to_string()))
    }

    fn graph(&mut self, path: &Path) -> Result<LabeledGraph, Failure> {
        let text = self.read(path)?;
        parse_graph(&text).map_err(|e| Failure::Usage(e.to_string()))
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status. `color` enables ANSI color in diagnostics.
pub fn run(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    color: bool,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => 0,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Domain(m) => (1, m),
                Failure::Usage(m) => (2, m),
            };
            let prefix = if color { "\x1b[31merror:\x1b[0m" } else { "error:" };
            let _ = writeln!(io.stderr, "{prefix} {msg}");
            code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Outcome {
    match command {
        Command::GenGraph { k, out } => io.emit(out.as_deref(), &write_graph(&generate_gk(k))),
        Command::BuildRep { k, out } => {
            io.emit(out.as_deref(), &write_representation(&build_representation(k)))
        }
        Command::Validate { rep } => {
            let rep = io.representation(&rep)?;
            let violations = validate(&rep);
            let mut text = String::new();
            for v in &violations {
                text.push_str(&format!("{v}\n"));
            }
            text.push_str(&format!("{} violation(s)\n", violations.len()));
            io.emit(None, &text)?;
            if violations.is_empty() {
                Ok(())
            } else {
                Err(Failure::Domain("representation is not valid".into()))
            }
        }
        Command::Audit { rep, k } => {
            let rep = io.representation(&rep)?;
            let report = audit_gk(&rep, k).map_err(|e| Failure::Usage(e.to_string()))?;
            io.emit(None, &report.to_string())?;
            if report.all_ok() {
                Ok(())
            } else {
                Err(Failure::Domain("audit failed".into()))
            }
        }
        Command::Render {
            rep,
            format,
            out,
            cell_size,
            no_markers,
        } => {
            let rep = io.representation(&rep)?;
            let opts = RenderOptions {
                format: match format {
                    Format::Svg => RenderFormat::Svg,
                    Format::Ascii => RenderFormat::Ascii,
                },
                cell_size,
                endpoint_markers: !no_markers,
                ..RenderOptions::default()
            };
            let drawing = render(&rep, &opts).map_err(|e| Failure::Usage(e.to_string()))?;
            io.emit(out.as_deref(), &drawing)
        }
        Command::Search {
            graph,
            width,
            height,
            bends,
            nodes,
            max_edge_len,
            parallel,
            out,
        } => {
            let g = io.graph(&graph)?;
            let mut bounds = SearchBounds::new(width, height, bends);
            if let Some(len) = max_edge_len {
                bounds = bounds.with_max_edge_len(len);
            }
            let outcome = if parallel {
                search_representation_parallel(&g, bounds, nodes)
            } else {
                search_representation(&g, bounds, nodes)
            };
            match outcome {
                SearchOutcome::Found(rep) => {
                    io.note("found");
                    io.emit(out.as_deref(), &write_representation(&rep))
                }
                SearchOutcome::ExhaustedNoSolution => {
                    Err(Failure::Domain("exhausted: no representation within bounds".into()))
                }
                SearchOutcome::AbortedBudget(n) => {
                    Err(Failure::Domain(format!("aborted after {n} nodes")))
                }
            }
        }
        Command::MinBends {
            graph,
            width,
            height,
            nodes,
        } => {
            let g = io.graph(&graph)?;
            let bn = min_bend_number(&g, SearchBounds::new(width, height, 0), nodes);
            let status = match bn.status {
                BendNumberStatus::Exact => "exact",
                BendNumberStatus::LowerBoundOnly => "lower_bound_only",
            };
            match bn.value {
                Some(v) => io.emit(None, &format!("bends={v} status={status}\n")),
                None => {
                    io.emit(None, &format!("bends=none status={status}\n"))?;
                    Err(Failure::Domain("no representation within bounds".into()))
                }
            }
        }
        Command::Faces { k } => {
            let g = generate_gk(k);
            let faces = trace_faces(&g, &rotation_system_gk(k))
                .map_err(|e| Failure::Domain(e.to_string()))?;
            let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
            let euler = v - e + faces as i64;
            let verdict = if euler == 2 { "Euler OK" } else { "Euler FAILED" };
            io.emit(
                None,
                &format!("V={v} E={e} F={faces} V-E+F={euler} {verdict}\n"),
            )?;
            if euler == 2 {
                Ok(())
            } else {
                Err(Failure::Domain("embedding is not planar".into()))
            }
        }
    }
}
