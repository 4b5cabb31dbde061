use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use copnum::graph::{self, generate, Family, Graph};
use copnum::homotopy::{dismantle, homotopy_equivalent};
use copnum::products::{box_product, categorical_product, strong_product};
use copnum::solver::{
    cop_number_with, placement_order, simulate_trace, solve_win_table_with, winning_placements,
    RobberPolicy, SolverConfig, SolverError, Variant, DEFAULT_BUDGET,
};
use copnum::verify::{run_suite, Suite, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "copnum",
    version,
    about = "Exact cops and robbers on graphs with loops"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member (P4, I4l, C5, C5l, K6, K3l, K5_2, Q3, T, RT8_3)
    Gen {
        family: String,
        #[arg(short, long)]
        output: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compute the cop number
    Solve {
        graph: String,
        #[arg(long, default_value = "sneaky")]
        variant: Variant,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Fold until stiff and print the core with the fold sequence
    Dismantle {
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide homotopy equivalence by comparing stiff cores
    Equiv {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Categorical (x), box or strong product
    Product {
        kind: ProductKind,
        a: String,
        b: String,
        #[arg(short, long)]
        output: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Play the table strategy against a robber and print the turns as JSON
    Trace {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "sneaky")]
        variant: Variant,
        /// Comma-separated cop squares; defaults to the first winning placement
        #[arg(long, value_delimiter = ',')]
        placement: Option<Vec<usize>>,
        #[arg(long)]
        robber_start: Option<usize>,
        /// evader, shadow or random:SEED
        #[arg(long, default_value = "evader")]
        robber: String,
        #[arg(long, default_value_t = 100)]
        max_turns: usize,
    },
    /// Run the reproduction checks
    Verify {
        #[arg(long, default_value = "basic")]
        suite: Suite,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Add per-check milliseconds to the report
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    X,
    Box,
    Strong,
}

enum Failure {
    /// A check failed or the answer is negative.
    Negative(String),
    /// Bad input or I/O.
    Usage(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<graph::GraphError> for Failure {
    fn from(e: graph::GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::CapExceeded { .. } | SolverError::BudgetExceeded { .. } => {
                Failure::Negative(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// A path to a graph file, or family shorthand when no such file exists.
fn load(arg: &str) -> Result<Graph, Failure> {
    if Path::new(arg).exists() {
        let text = fs::read_to_string(arg)?;
        return graph::parse(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")));
    }
    match arg.parse::<Family>() {
        Ok(fam) => Ok(generate(&fam)?),
        Err(_) => Err(Failure::Usage(format!(
            "`{arg}` is neither a file nor a family shorthand"
        ))),
    }
}

fn emit(text: &str, output: Option<&str>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn serialize(g: &Graph, json: bool) -> String {
    if json {
        graph::to_json(g) + "\n"
    } else {
        graph::to_text(g)
    }
}

fn parse_policy(s: &str) -> Result<RobberPolicy, Failure> {
    match s {
        "evader" => Ok(RobberPolicy::Evader),
        "shadow" => Ok(RobberPolicy::Shadow),
        _ => s
            .strip_prefix("random:")
            .and_then(|seed| seed.parse().ok())
            .map(RobberPolicy::Random)
            .ok_or_else(|| Failure::Usage(format!("unknown robber policy `{s}`"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen {
            family,
            output,
            json,
        } => {
            let fam: Family = family.parse()?;
            emit(&serialize(&generate(&fam)?, json), output.as_deref())
        }
        Command::Solve {
            graph,
            variant,
            cap,
            budget,
            json,
        } => {
            let g = load(&graph)?;
            let config = SolverConfig {
                budget,
                cap,
                decompose: true,
            };
            let out = cop_number_with(&g, variant, &config)?;
            if json {
                println!("{}", out.to_json());
            } else {
                println!("{}", out.cop_number);
            }
            Ok(())
        }
        Command::Dismantle { graph, json } => {
            let g = load(&graph)?;
            let (core, seq) = dismantle(&g);
            if json {
                println!(
                    "{{\"core\":{},\"sequence\":{}}}",
                    graph::to_json(&core),
                    seq.to_json()
                );
            } else {
                println!("# {} folds, core has {} vertices", seq.folds(), core.n());
                print!("{}", graph::to_text(&core));
            }
            Ok(())
        }
        Command::Equiv { a, b, json } => {
            let (ga, gb) = (load(&a)?, load(&b)?);
            let cert = homotopy_equivalent(&ga, &gb).map_err(|e| Failure::Usage(e.to_string()))?;
            match cert {
                Some(c) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string(&c).expect("certificate serializes")
                        );
                    } else {
                        println!(
                            "equivalent: {} and {} folds reach a common core on {} vertices",
                            c.left.folds(),
                            c.right.folds(),
                            c.core_size()
                        );
                        println!("core map: {:?}", c.core_map);
                    }
                    Ok(())
                }
                None => Err(Failure::Negative(
                    "not equivalent: stiff cores differ".into(),
                )),
            }
        }
        Command::Product {
            kind,
            a,
            b,
            output,
            json,
        } => {
            let (ga, gb) = (load(&a)?, load(&b)?);
            let (p, _) = match kind {
                ProductKind::X => categorical_product(&ga, &gb)?,
                ProductKind::Box => box_product(&ga, &gb)?,
                ProductKind::Strong => strong_product(&ga, &gb)?,
            };
            emit(&serialize(&p, json), output.as_deref())
        }
        Command::Trace {
            graph,
            k,
            variant,
            placement,
            robber_start,
            robber,
            max_turns,
        } => {
            let g = load(&graph)?;
            let policy = parse_policy(&robber)?;
            let table = solve_win_table_with(&g, k, variant, DEFAULT_BUDGET)?;
            let placement = match placement {
                Some(p) if p.len() == k && p.iter().all(|&v| v < g.n()) => p,
                Some(p) => {
                    return Err(Failure::Usage(format!(
                        "placement {p:?} needs {k} vertices below {}",
                        g.n()
                    )))
                }
                None => winning_placements(&table)
                    .into_iter()
                    .next()
                    .unwrap_or_else(|| placement_order(&g, k).swap_remove(0)),
            };
            // default start: an escape if there is one, else the slowest capture
            let start = robber_start.unwrap_or_else(|| {
                table.escape(&placement).unwrap_or_else(|| {
                    g.vertices()
                        .max_by_key(|&r| (table.cop_rank(&placement, r), std::cmp::Reverse(r)))
                        .expect("nonempty graph")
                })
            });
            if start >= g.n() {
                return Err(Failure::Usage(format!("robber start {start} out of range")));
            }
            let tr = simulate_trace(&table, &placement, start, policy, max_turns);
            println!("{}", tr.to_json());
            Ok(())
        }
        Command::Verify {
            suite,
            json,
            seed,
            timings,
        } => {
            let opts = VerifyOptions {
                seed,
                timings,
                ..VerifyOptions::default()
            };
            let report = run_suite(suite, &opts);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.all_pass() {
                Ok(())
            } else {
                Err(Failure::Negative(String::new()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!(
                "usage: copnum <gen|solve|dismantle|equiv|product|trace|verify> ... (see --help)"
            );
            ExitCode::from(2)
        }
    }
}
