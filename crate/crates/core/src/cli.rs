//! The `vlink` command-line front end.
//!
//! Exit codes: 0 success, 1 a failed verification, 2 bad usage or input,
//! 3 an enumeration larger than `--max-states`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::diagram::{DiagramError, State, VirtualLinkDiagram};
use crate::limits::{CapExceeded, Limits};
use crate::ribbon::{RibbonError, RibbonGraph};
use crate::thistle::{self, Correspondence, VerificationReport};

#[derive(Debug, Parser)]
#[command(
    name = "vlink",
    version,
    about = "Bracket, Jones and Bollobás-Riordan polynomials of virtual links"
)]
struct Cli {
    /// Largest number of states or spanning subgraphs to enumerate.
    #[arg(long, global = true, default_value_t = Limits::default().max_states)]
    max_states: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Kauffman bracket <D>(A, B, d).
    Bracket(Input),
    /// Print the Jones polynomial in t.
    Jones(Input),
    /// Print the ribbon graph of the diagram in .rg format.
    Ribbon(Input),
    /// Print the Bollobás-Riordan polynomial of the diagram's ribbon graph.
    Brpoly {
        #[command(flatten)]
        input: Input,
        /// Read a ribbon graph (.rg) instead of a diagram.
        #[arg(long)]
        graph: bool,
    },
    /// Print every state next to its spanning subgraph.
    Table {
        #[command(flatten)]
        input: Input,
        /// Tab-separated output with a header line.
        #[arg(long)]
        tsv: bool,
    },
    /// Check the bracket against the substituted Bollobás-Riordan polynomial.
    Verify(Input),
    /// Verify random diagrams.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..64))]
        max_crossings: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Input file, or `-` for stdin.
    #[arg(required_unless_present = "code", conflicts_with = "code")]
    file: Option<PathBuf>,
    /// Inline input; `;` separates lines.
    #[arg(long)]
    code: Option<String>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{origin}: {source}")]
    Diagram { origin: String, source: DiagramError },
    #[error("{origin}: {source}")]
    Ribbon { origin: String, source: RibbonError },
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error("verification failed")]
    Mismatch,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch => 1,
            CliError::Cap(_) => 3,
            _ => 2,
        }
    }
}

impl Input {
    fn read(&self) -> Result<(String, String), CliError> {
        if let Some(code) = &self.code {
            return Ok(("<code>".into(), code.replace(';', "\n")));
        }
        let path = self.file.as_ref().expect("clap requires a file or --code");
        let origin = path.display().to_string();
        let mut text = String::new();
        let res = if origin == "-" {
            io::stdin().read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|source| CliError::Io {
            path: origin.clone(),
            source,
        })?;
        Ok((origin, text))
    }

    fn diagram(&self) -> Result<VirtualLinkDiagram, CliError> {
        let (origin, text) = self.read()?;
        VirtualLinkDiagram::parse(&text).map_err(|source| CliError::Diagram { origin, source })
    }

    fn ribbon_graph(&self) -> Result<RibbonGraph, CliError> {
        let (origin, text) = self.read()?;
        RibbonGraph::parse(&text).map_err(|source| CliError::Ribbon { origin, source })
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let limits = Limits {
        max_states: cli.max_states,
    };
    let mut buf = String::new();
    let result = execute(cli.command, &limits, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(e, CliError::Mismatch) {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

fn execute(command: Command, limits: &Limits, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Bracket(input) => {
            writeln!(out, "{}", input.diagram()?.kauffman_bracket(limits)?).unwrap();
        }
        Command::Jones(input) => {
            writeln!(out, "{}", input.diagram()?.jones(limits)?).unwrap();
        }
        Command::Ribbon(input) => {
            out.push_str(&RibbonGraph::from_diagram(&input.diagram()?).to_text());
        }
        Command::Brpoly { input, graph } => {
            let g = if graph {
                input.ribbon_graph()?
            } else {
                RibbonGraph::from_diagram(&input.diagram()?)
            };
            writeln!(out, "{}", g.bollobas_riordan(limits)?).unwrap();
        }
        Command::Table { input, tsv } => {
            let d = input.diagram()?;
            limits.check(d.crossing_count())?;
            out.push_str(&table(&d, tsv));
        }
        Command::Verify(input) => {
            let report = thistle::verify_identity(&input.diagram()?, limits)?;
            if report.equal {
                out.push_str("OK\n");
            } else {
                out.push_str(&diff(&report));
                return Err(CliError::Mismatch);
            }
        }
        Command::Fuzz {
            count,
            max_crossings,
            seed,
        } => {
            let summary = thistle::fuzz(count, max_crossings as usize, seed, limits)?;
            for (s, n) in &summary.failures {
                writeln!(out, "FAIL crossings={n} seed={s}").unwrap();
            }
            writeln!(
                out,
                "{} of {} diagrams verified",
                summary.checked - summary.failures.len(),
                summary.checked
            )
            .unwrap();
            if !summary.failures.is_empty() {
                return Err(CliError::Mismatch);
            }
        }
    }
    Ok(())
}

const HEADER: [&str; 10] = ["state", "alpha", "beta", "delta", "F", "k", "r", "n", "bc", "s"];

/// One row per state. Subgraph edges are numbered by crossing, from 1.
fn table(d: &VirtualLinkDiagram, tsv: bool) -> String {
    let corr = Correspondence::new(d);
    let rows: Vec<[String; 10]> = State::all(d.crossing_count())
        .map(|state| {
            let f = corr.subgraph_for(&state);
            let st = f.stats();
            let edges: Vec<String> = f.edges().iter().map(|e| (e + 1).to_string()).collect();
            [
                state.to_string(),
                state.alpha().to_string(),
                state.beta().to_string(),
                d.split_circles(&state).to_string(),
                format!("{{{}}}", edges.join(",")),
                st.k.to_string(),
                st.r.to_string(),
                st.n.to_string(),
                st.bc.to_string(),
                st.s.to_string(),
            ]
        })
        .collect();
    let mut out = String::new();
    if tsv {
        out.push_str(&HEADER.join("\t"));
        out.push('\n');
        for row in &rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        return out;
    }
    let mut widths = HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.zip(widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            // left-align the two text columns
            if i == 0 || i == 4 {
                let _ = write!(s, "{cell:<w$}");
            } else {
                let _ = write!(s, "{cell:>w$}");
            }
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    out.push_str(&line(&mut HEADER.iter().copied()));
    for row in &rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}

fn diff(report: &VerificationReport) -> String {
    let mut out = String::new();
    let crossings = report.per_state.len().trailing_zeros() as usize;
    writeln!(out, "MISMATCH").unwrap();
    if report.lhs != report.rhs {
        writeln!(out, "bracket:     {}", report.lhs).unwrap();
        writeln!(out, "substituted: {}", report.rhs).unwrap();
        writeln!(out, "difference:  {}", report.lhs.clone() - report.rhs.clone()).unwrap();
    }
    for c in report.mismatches() {
        let edges: Vec<String> = c
            .subgraph_edges(crossings)
            .iter()
            .map(|e| (e + 1).to_string())
            .collect();
        writeln!(
            out,
            "state {} -> F {{{}}}: alpha={} beta={} delta={} but e(F)={} s={} bc={}",
            c.state(crossings),
            edges.join(","),
            c.alpha,
            c.beta,
            c.delta,
            c.stats.e,
            c.stats.s,
            c.stats.bc
        )
        .unwrap();
    }
    out
}
