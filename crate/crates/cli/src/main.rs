//! `pfg`: command-line front end for Pythagorean fuzzy graphs.
//!
//! Graph arguments are JSON documents; `-` reads stdin. Results go to stdout
//! (or `--output`), diagnostics to stderr as JSON objects. Exit status: 0 on
//! success, 1 on a domain error, 2 on a usage or input error.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use pfg_core::algebra::{OpOptions, OperationRegistry};
use pfg_core::class::{classify, is_self_complementary_with, strong_sum_identity, sum_identity, SelfComplementVariant};
use pfg_core::gen::{generate, GenConfig};
use pfg_core::io::{parse_unchecked, parse_with_warnings, render, to_dot};
use pfg_core::morph::{find_morphism_using, MorphismKind, SearchConfig, SearchRegistry, DEFAULT_CAP};
use pfg_core::{tolerance, Error, PfGraph};

#[derive(Parser)]
#[command(name = "pfg", version, about = "Pythagorean fuzzy graph toolkit")]
struct Cli {
    /// Write the result here instead of stdout (`-` for stdout).
    #[arg(short, long, global = true, default_value = "-")]
    output: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph document and print the validation report.
    Validate { graph: String },
    /// Apply an operation and print the resulting graph.
    Op {
        /// cartesian, compose, union, join, complement, strong-complement, complete-complement
        name: String,
        #[arg(num_args = 1..=2, required = true)]
        graphs: Vec<String>,
        /// Skip the strong/complete precondition of the toggle complements.
        #[arg(long)]
        force: bool,
    },
    /// Print the strength/completeness profile.
    Classify { graph: String },
    /// Print both sides of the edge-sum identities.
    Sums {
        graph: String,
        /// Use the unhalved identities for strong graphs.
        #[arg(long)]
        strong: bool,
    },
    /// Search for a morphism from the first graph to the second.
    Iso {
        g1: String,
        g2: String,
        /// homo, iso, weak or coweak
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Exit with status 1 when nothing is found.
        #[arg(long)]
        require: bool,
        /// pruned or exhaustive
        #[arg(long, default_value = "pruned")]
        search: String,
    },
    /// Check whether a graph is isomorphic to its complement.
    Selfcomp {
        graph: String,
        /// general, strong or complete
        #[arg(long, default_value = "general")]
        variant: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Generate a seeded random graph.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// general, strong, complete or half_strong
        #[arg(long, default_value = "general")]
        family: String,
        /// Round degrees to this many decimal places.
        #[arg(long)]
        quantize: Option<u32>,
    },
    /// Export a graph as Graphviz DOT.
    Dot { graph: String },
}

enum Failure {
    Lib(Error),
    Usage { kind: &'static str, message: String },
    Io { path: String, source: io::Error },
    /// Result printed, but the caller asked for a non-zero status.
    Domain { kind: &'static str, message: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) => match e {
                Error::MalformedDocument(_)
                | Error::DuplicateVertex(_)
                | Error::DuplicateEdge(_)
                | Error::DanglingEdge { .. }
                | Error::SelfLoop(_)
                | Error::InvalidLabel(_)
                | Error::UnknownName { .. }
                | Error::Arity { .. }
                | Error::InvalidConfig(_) => 2,
                _ => 1,
            },
            Failure::Usage { .. } | Failure::Io { .. } => 2,
            Failure::Domain { .. } => 1,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Failure::Lib(e) => {
                let mut obj = json!({ "error": e.kind(), "message": e.to_string() });
                if let Error::ConstraintViolation(report) = e {
                    obj["report"] = serde_json::to_value(report).expect("reports serialize");
                }
                obj
            }
            Failure::Usage { kind, message } | Failure::Domain { kind, message } => {
                json!({ "error": kind, "message": message })
            }
            Failure::Io { path, source } => {
                json!({ "error": "Io", "message": format!("{path}: {source}") })
            }
        }
    }
}

struct Inputs {
    stdin_used: bool,
}

impl Inputs {
    fn text(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            if self.stdin_used {
                return Err(Failure::Usage {
                    kind: "Usage",
                    message: "stdin (-) can be used for only one graph".into(),
                });
            }
            self.stdin_used = true;
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|source| Failure::Io {
                path: "<stdin>".into(),
                source,
            })?;
            return Ok(s);
        }
        fs::read_to_string(path).map_err(|source| Failure::Io {
            path: path.into(),
            source,
        })
    }

    fn graph(&mut self, path: &str) -> Result<PfGraph, Failure> {
        let (g, warnings) = parse_with_warnings(&self.text(path)?)?;
        for w in warnings {
            eprintln!("{}", json!({ "warning": w, "input": path }));
        }
        Ok(g)
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("results serialize");
    s.push('\n');
    s
}

/// Runs the command; `Ok` holds the text for stdout and an optional
/// post-output failure.
fn run(command: Command) -> Result<(String, Option<Failure>), Failure> {
    let mut inputs = Inputs { stdin_used: false };
    let out = match command {
        Command::Validate { graph } => {
            let (g, warnings) = parse_unchecked(&inputs.text(&graph)?)?;
            for w in warnings {
                eprintln!("{}", json!({ "warning": w, "input": graph }));
            }
            let report = g.validate();
            let failure = (!report.is_valid()).then(|| Failure::Domain {
                kind: "ConstraintViolation",
                message: format!("{} violation(s)", report.violations.len()),
            });
            return Ok((to_json(&report), failure));
        }
        Command::Op { name, graphs, force } => {
            let registry = OperationRegistry::builtin();
            let op = registry.get(&name)?;
            let parsed = graphs
                .iter()
                .map(|p| inputs.graph(p))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&PfGraph> = parsed.iter().collect();
            let result = op.apply(&refs, &OpOptions { force })?.into_validated()?;
            render(&result)
        }
        Command::Classify { graph } => to_json(&classify(&inputs.graph(&graph)?)),
        Command::Sums { graph, strong } => {
            let g = inputs.graph(&graph)?;
            let report = if strong { strong_sum_identity(&g) } else { sum_identity(&g) };
            to_json(&report)
        }
        Command::Iso {
            g1,
            g2,
            kind,
            cap,
            require,
            search,
        } => {
            let kind: MorphismKind = kind.parse()?;
            let registry = SearchRegistry::builtin();
            let strategy = registry.get(&search)?;
            let (a, b) = (inputs.graph(&g1)?, inputs.graph(&g2)?);
            let report = find_morphism_using(strategy, &a, &b, kind, &SearchConfig { cap })?;
            let failure = (require && !report.found).then(|| Failure::Domain {
                kind: "NotFound",
                message: format!("no {kind} from {g1} to {g2}"),
            });
            return Ok((to_json(&report), failure));
        }
        Command::Selfcomp { graph, variant, cap } => {
            let variant: SelfComplementVariant = variant.parse()?;
            let g = inputs.graph(&graph)?;
            to_json(&is_self_complementary_with(&g, variant, &SearchConfig { cap })?)
        }
        Command::Gen {
            seed,
            n,
            p,
            family,
            quantize,
        } => {
            let cfg = GenConfig {
                seed,
                n_vertices: n,
                edge_probability: p,
                family,
                quantize,
            };
            render(&generate(&cfg)?)
        }
        Command::Dot { graph } => to_dot(&inputs.graph(&graph)?),
    };
    Ok((out, None))
}

fn emit(path: &str, text: &str) -> Result<(), Failure> {
    let res = if path == "-" {
        io::stdout().lock().write_all(text.as_bytes())
    } else {
        fs::write(path, text)
    };
    res.map_err(|source| Failure::Io {
        path: path.into(),
        source,
    })
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("{}", f.to_json());
    ExitCode::from(f.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            return fail(&Failure::Usage {
                kind: "Usage",
                message: e.render().to_string().trim_end().to_string(),
            });
        }
    };

    if let Ok(raw) = std::env::var("PFG_EPSILON") {
        let ok = raw.trim().parse::<f64>().map(tolerance::set_epsilon).unwrap_or(false);
        if !ok {
            return fail(&Failure::Usage {
                kind: "InvalidConfig",
                message: format!("PFG_EPSILON={raw:?} is not a non-negative number"),
            });
        }
    }

    match run(cli.command) {
        Ok((text, after)) => {
            if let Err(f) = emit(&cli.output, &text) {
                return fail(&f);
            }
            match after {
                Some(f) => fail(&f),
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => fail(&f),
    }
}
