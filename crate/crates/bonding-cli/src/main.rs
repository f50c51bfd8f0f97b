//! Command-line front end for the bonding grammar engine.
//!
//! Exit codes: 0 success (for `check`: generated), 1 negative result (not
//! generated, or a failed cross-check), 2 input or runtime error. Set
//! `RUST_LOG` to control log verbosity.

mod dot;

use bonding::json;
use bonding::sticker;
use bonding::triangles;
use bonding::{
    builtins, derive, grammar::sample_connected_derivation, is_generated, membership_oracle,
    BondingGrammar, MembershipCertificate,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "bonding", version, about = "Bonding grammar engine")]
struct Cli {
    /// Abort long-running searches after this many seconds (0 = no limit).
    #[arg(long, global = true, default_value_t = 0)]
    timeout: u64,
    /// Seed for randomized generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Force the exhaustive brute-force membership oracle.
    #[arg(long, global = true, default_value_t = false)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a grammar generates a hypergraph (exit 0 yes, 1 no).
    Check {
        /// Grammar file, or a builtin: pseudotori, k-regular:<k>,
        /// bounded-degree:<k>, triangles.
        #[arg(long)]
        grammar: String,
        /// Hypergraph JSON file.
        hypergraph: PathBuf,
    },
    /// Derive a hypergraph, either by replaying a trace or by sampling a
    /// connected derivation from a seed.
    Generate {
        #[arg(long)]
        grammar: String,
        /// Trace JSON file to replay.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Number of sampled bonding steps (ignored with --trace).
        #[arg(long, default_value_t = 3)]
        steps: usize,
        /// Write the derived hypergraph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the (replayed or sampled) trace here.
        #[arg(long)]
        emit_trace: Option<PathBuf>,
    },
    /// Render a hypergraph as DOT.
    ExportDot {
        hypergraph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Operations on regular sticker systems.
    Sticker {
        /// Sticker system JSON file.
        #[arg(long)]
        system: PathBuf,
        #[command(subcommand)]
        action: StickerAction,
    },
    /// Cross-check partition-into-triangles against grammar membership of
    /// the encoded graph.
    Triangles {
        /// Edge-list file (vertex-count header, one `u v` per line) or a
        /// hypergraph JSON encoding.
        graph: PathBuf,
    },
}

#[derive(Subcommand)]
enum StickerAction {
    /// List the dominoes generated within a depth bound.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Write the compiled bonding grammar.
    Compile {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the embedding: generated dominoes accepted, sampled others
    /// rejected (exit 1 on any counterexample).
    EmbedCheck {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            fail(format, err.code(), &err.to_string());
            ExitCode::from(2)
        }
    }
}

fn fail(format: Format, code: &str, message: &str) {
    match format {
        Format::Json => eprintln!(
            "{}",
            serde_json::to_string_pretty(&json!({"error": {"code": code, "message": message}}))
                .expect("serializable")
        ),
        _ => eprintln!("error[{code}]: {message}"),
    }
}

fn run(cli: Cli) -> Result<ExitCode, bonding::Error> {
    match cli.command {
        Command::Check { grammar, hypergraph } => {
            let g = load_grammar(&grammar)?;
            let h = json::hypergraph_from_str(&fs::read_to_string(&hypergraph)?)?;
            if h.is_empty() {
                eprintln!("warning: the empty hypergraph is generated with multiplicity zero");
            }
            let oracle = cli.oracle;
            let outcome = with_timeout(cli.timeout, move || {
                let result = if oracle {
                    membership_oracle(&g, &h)
                } else {
                    is_generated(&g, &h)
                };
                result.map(|cert| (cert, g, h))
            });
            let (cert, g, h) = unwrap_timeout(cli.format, outcome)?;
            match cert {
                Some(cert) => {
                    debug_assert!(bonding::verify_certificate(&g, &h, &cert));
                    print_certificate(cli.format, &cert);
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    match cli.format {
                        Format::Json => println!("{}", pretty(&json!({"generated": false}))),
                        _ => println!("not generated"),
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Generate {
            grammar,
            trace,
            steps,
            out,
            emit_trace,
        } => {
            let g = load_grammar(&grammar)?;
            let (trace, h) = match trace {
                Some(path) => {
                    let t = json::trace_from_str(&fs::read_to_string(&path)?)?;
                    let h = derive(&g, &t)?;
                    (t, h)
                }
                None => sample_connected_derivation(&g, cli.seed, steps)?,
            };
            emit(out.as_deref(), &json::hypergraph_to_string(&h))?;
            if let Some(path) = emit_trace {
                fs::write(path, json::trace_to_string(&trace))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot { hypergraph, out } => {
            let h = json::hypergraph_from_str(&fs::read_to_string(&hypergraph)?)?;
            emit(out.as_deref(), &dot::to_dot(&h))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sticker { system, action } => {
            let s = json::sticker_from_str(&fs::read_to_string(&system)?)?;
            match action {
                StickerAction::Enumerate { depth } => {
                    let outcome = with_timeout(cli.timeout, move || s.generate(depth));
                    let dominoes = unwrap_timeout(cli.format, outcome)?;
                    match cli.format {
                        Format::Json => {
                            let list: Vec<_> = dominoes
                                .iter()
                                .map(|d| {
                                    json!({
                                        "upper": d.upper_string(),
                                        "lower": d.lower_string(),
                                        "offset": d.offset(),
                                    })
                                })
                                .collect();
                            println!("{}", pretty(&json!({"count": list.len(), "dominoes": list})));
                        }
                        _ => {
                            println!("{} dominoes within depth {}", dominoes.len(), depth);
                            for d in &dominoes {
                                println!("{}", d.render());
                                println!();
                            }
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                StickerAction::Compile { out } => {
                    let g = sticker::compile(&s)?;
                    emit(out.as_deref(), &json::grammar_to_string(&g))?;
                    Ok(ExitCode::SUCCESS)
                }
                StickerAction::EmbedCheck { depth, samples } => {
                    let seed = cli.seed;
                    let outcome = with_timeout(cli.timeout, move || {
                        sticker::embedding_check(&s, depth, samples, seed)
                    });
                    let report = unwrap_timeout(cli.format, outcome)?;
                    let passed = report.passed();
                    match cli.format {
                        Format::Json => println!("{}", pretty(&serde_json::to_value(&report)?)),
                        _ => {
                            println!(
                                "generated dominoes accepted: {}/{}",
                                report.generated_accepted, report.generated_checked
                            );
                            println!(
                                "sampled non-generated rejected: {}/{}",
                                report.sampled_rejected, report.sampled_checked
                            );
                            println!("embedding check: {}", if passed { "PASS" } else { "FAIL" });
                        }
                    }
                    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
                }
            }
        }
        Command::Triangles { graph } => {
            let g = load_graph(&graph)?;
            let g = if g.is_connected() {
                g
            } else {
                log::info!("disconnected input; chaining components");
                triangles::connectify(&g)?
            };
            if g.vertex_count() % 3 != 0 {
                // No partition and no multiplicity vector can cover the
                // vertices; answer without searching.
                let report = triangles::ReductionReport {
                    partition_found: false,
                    membership: false,
                    agree: true,
                    certificate: None,
                    certificate_verified: true,
                    generic_checked: false,
                };
                print_reduction(cli.format, &report);
                return Ok(ExitCode::SUCCESS);
            }
            let oracle = cli.oracle;
            let outcome = with_timeout(cli.timeout, move || {
                if oracle {
                    let tbg = triangles::triangle_grammar();
                    let h = triangles::encode_graph(&g);
                    let partition = triangles::triangle_partition_oracle(&g);
                    let membership = membership_oracle(&tbg, &h)?;
                    let (certificate, certificate_verified) = match &partition {
                        Some(p) => {
                            let cert = triangles::certificate_from_partition(&g, p);
                            let ok = cert
                                .as_ref()
                                .map(|c| bonding::verify_certificate(&tbg, &h, c))
                                .unwrap_or(false);
                            (cert, ok)
                        }
                        None => (None, true),
                    };
                    Ok(triangles::ReductionReport {
                        partition_found: partition.is_some(),
                        membership: membership.is_some(),
                        agree: partition.is_some() == membership.is_some(),
                        certificate,
                        certificate_verified,
                        generic_checked: true,
                    })
                } else {
                    triangles::theorem2_check(&g)
                }
            });
            let report = unwrap_timeout(cli.format, outcome)?;
            print_reduction(cli.format, &report);
            Ok(if report.agree && report.certificate_verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn print_certificate(format: Format, cert: &MembershipCertificate) {
    match format {
        Format::Json => println!("{}", pretty(&json!({"generated": true, "certificate": cert}))),
        _ => {
            println!(
                "generated: {} bonds broken, {} start copies",
                cert.bondset.len(),
                cert.assignment.len()
            );
            println!("{}", pretty(&serde_json::to_value(cert).expect("serializable")));
        }
    }
}

fn print_reduction(format: Format, report: &triangles::ReductionReport) {
    match format {
        Format::Json => println!("{}", pretty(&serde_json::to_value(report).expect("serializable"))),
        _ => {
            println!("partition: {}", if report.partition_found { "YES" } else { "NO" });
            println!("membership: {}", if report.membership { "YES" } else { "NO" });
            println!("agreement: {}", if report.agree { "yes" } else { "NO" });
            if let Some(cert) = &report.certificate {
                println!(
                    "certificate ({}): {}",
                    if report.certificate_verified { "verified" } else { "INVALID" },
                    pretty(&serde_json::to_value(cert).expect("serializable"))
                );
            }
        }
    }
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), bonding::Error> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn load_grammar(spec: &str) -> Result<BondingGrammar, bonding::Error> {
    if let Some(k) = spec.strip_prefix("k-regular:") {
        let k = k
            .parse()
            .map_err(|_| bonding::Error::Parse(format!("bad regularity degree `{k}`")))?;
        return Ok(builtins::k_regular(k));
    }
    if let Some(k) = spec.strip_prefix("bounded-degree:") {
        let k = k
            .parse()
            .map_err(|_| bonding::Error::Parse(format!("bad degree bound `{k}`")))?;
        return Ok(builtins::bounded_degree(k));
    }
    match spec {
        "pseudotori" => Ok(builtins::pseudotori()),
        "triangles" => Ok(triangles::triangle_grammar()),
        path => json::grammar_from_str(&fs::read_to_string(path)?),
    }
}

fn load_graph(path: &Path) -> Result<triangles::SimpleGraph, bonding::Error> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        triangles::decode_graph(&json::hypergraph_from_str(&text)?)
    } else {
        triangles::SimpleGraph::from_edge_list(&text)
    }
}

fn with_timeout<T: Send + 'static>(secs: u64, f: impl FnOnce() -> T + Send + 'static) -> Option<T> {
    if secs == 0 {
        return Some(f());
    }
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(Duration::from_secs(secs)).ok()
}

fn unwrap_timeout<T>(format: Format, outcome: Option<T>) -> T {
    match outcome {
        Some(v) => v,
        None => {
            fail(format, "timeout", "search did not finish within --timeout");
            std::process::exit(2);
        }
    }
}
