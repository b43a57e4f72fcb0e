//! Command-line front end: enumerate, check, realize, render, export and
//! self-test. All results go to stdout, diagnostics to stderr; exit code 0
//! on success, 1 when `check` rejects a diagram, 2 on usage errors.

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use alcove::classify::enumerate::{enumerate_primitive, enumerate_spherical};
use alcove::classify::{check_spherical, SphericalDiagram};
use alcove::error::Error;
use alcove::grammar::{format_diagram, parse_diagram, parse_host};
use alcove::jsonio;
use alcove::localmodels::catalog;
use alcove::realize::{realize_spherical, verify_realization};
use alcove::render::{render_dot, render_text};

#[derive(Parser)]
#[command(
    name = "alcove",
    about = "Exact classification of rank-one decorated diagrams on finite and affine root systems",
    long_about = None,
    after_help = "\
Host grammar:   <Family><rank>[~<twist>], products joined by 'x'.
                Finite: A1.., B2.., C3.., D4.., E6, E7, E8, F4, G2.
                Affine: A1~1.., B3~1.., C2~1.., D4~1.., E6~1, E7~1, E8~1,
                        F4~1, G2~1, A2~2, A4~2.., A5~2.., D3~2.., E6~2, D4~3.
Diagram grammar: HOST ; S1'={i,j}:c=<1/2|1|2|i> ; S2'={k}:c=... [; Sc={...}]
                 Node indices are 0-based; node 0 of an affine host is the
                 added node. An empty side is written {} and carries c=i."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Primitive,
    Spherical,
}

#[derive(Subcommand)]
enum Command {
    /// List the legal host families and the name grammar
    Hosts {
        /// Largest rank to spell out for the parametric families
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
    },
    /// Print the catalog of rank-one local models
    Catalog {
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate all valid diagrams on a host, up to automorphism and swap
    Enumerate {
        #[arg(long)]
        host: String,
        #[arg(long, value_enum, default_value_t = Mode::Primitive)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads for candidate checking
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the output to a file instead of stdout
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Check one diagram spec; exit 0 when valid, 1 when not
    Check {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reconstruct the weight and momentum segment of a valid diagram
    Realize {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Draw a diagram as ASCII or DOT
    Render {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the built-in consistency checks
    Selftest {
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
    },
}

fn emit(output: Option<&std::path::Path>, content: &str) -> Result<(), Error> {
    match output {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Internal(format!("cannot write {}: {e}", path.display()))),
    }
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Hosts { max_rank } => {
            println!("finite:  A1..A{max_rank}, B2..B{max_rank}, C3..C{max_rank}, D4..D{max_rank}, E6, E7, E8, F4, G2");
            println!("affine:  A1~1..A{max_rank}~1, B3~1.., C2~1.., D4~1.., E6~1, E7~1, E8~1, F4~1, G2~1");
            println!("twisted: A2~2, A4~2, A6~2.., A5~2, A7~2.., D3~2.., E6~2, D4~3");
            println!("products: factors joined by 'x' (e.g. A2xA1, A1~1xA1~1)");
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { max_rank, format } => {
            let entries = catalog(max_rank);
            match format {
                Format::Json => {
                    let v: Vec<_> = entries.iter().map(jsonio::catalog_entry_json).collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                _ => {
                    for e in &entries {
                        let omega = match &e.omega {
                            Some(w) => w.iter().map(jsonio::q_to_string).collect::<Vec<_>>().join(","),
                            None => "~pi1".to_string(),
                        };
                        println!(
                            "{:8} support={:6} c={:3} decorated={:?} nD={} omega=[{}]",
                            e.name.to_string(),
                            e.support.name(),
                            e.factor.to_string(),
                            e.decorated,
                            e.n_d,
                            omega
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { host, mode, format, jobs, output } => {
            if let Some(jobs) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            }
            let h = Arc::new(parse_host(&host)?);
            let diagrams: Vec<SphericalDiagram> = match mode {
                Mode::Primitive => enumerate_primitive(&h)?
                    .into_iter()
                    .map(|d| SphericalDiagram::new(h.clone(), vec![], d.side1, d.side2))
                    .collect(),
                Mode::Spherical => enumerate_spherical(&h)?,
            };
            let mut out = String::new();
            match format {
                Format::Text => {
                    for d in &diagrams {
                        out.push_str(&format_diagram(d));
                        out.push('\n');
                    }
                    out.push_str(&format!("total: {}\n", diagrams.len()));
                }
                Format::Json => {
                    let v: Vec<_> = diagrams.iter().map(|d| jsonio::diagram_json(d, None)).collect();
                    out = serde_json::to_string_pretty(&v).unwrap();
                    out.push('\n');
                }
                Format::Dot => {
                    for d in &diagrams {
                        out.push_str(&render_dot(d));
                    }
                }
            }
            emit(output.as_deref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { spec, format } => {
            let d = parse_diagram(&spec)?;
            let check = check_spherical(&d)?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&jsonio::diagram_json(&d, Some(&check))).unwrap());
                }
                _ => {
                    if check.verdict.valid {
                        println!("valid: {}", check.verdict.witness);
                    } else {
                        println!(
                            "invalid ({}): {}",
                            check.verdict.failed.map(|f| f.to_string()).unwrap_or_default(),
                            check.verdict.witness
                        );
                    }
                }
            }
            Ok(if check.verdict.valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Realize { spec, format, output } => {
            let d = parse_diagram(&spec)?;
            let r = realize_spherical(&d)?;
            debug_assert!(verify_realization(&d, &r).ok());
            let mut out = String::new();
            match format {
                Format::Json => {
                    out = serde_json::to_string_pretty(&jsonio::realization_json(&r)).unwrap();
                    out.push('\n');
                }
                _ => {
                    let j = jsonio::realization_json(&r);
                    out.push_str(&format!("X1 = {:?}\n", j.x1));
                    out.push_str(&format!("X2 = {:?}\n", j.x2));
                    out.push_str(&format!("c  = {}\n", j.c));
                    out.push_str(&format!("omega pairings = {:?}\n", j.omega_pairings));
                    if let Some(roots) = &j.omega_roots {
                        out.push_str(&format!("omega roots    = {roots:?}\n"));
                    }
                }
            }
            emit(output.as_deref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { spec, format } => {
            let d = parse_diagram(&spec)?;
            match format {
                Format::Dot => print!("{}", render_dot(&d)),
                _ => print!("{}", render_text(&d)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { max_rank } => {
            let mut all_ok = true;
            for (name, result) in alcove::selftest::run(max_rank) {
                match result {
                    Ok(()) => println!("ok   {name}"),
                    Err(e) => {
                        all_ok = false;
                        println!("FAIL {name}: {e}");
                    }
                }
                std::io::stdout().flush().ok();
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run with --help for the host and diagram grammar");
            ExitCode::from(2)
        }
    }
}
