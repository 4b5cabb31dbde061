//! Acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use copnum::solver::Variant;
use copnum::verify::{
    bounds_corpus, box_cycle_checks, box_value_checks, example_checks, invariance_corpus,
    products_suite, split_check, strategy_check, strategy_corpus, table_checks, tree_checks, Check,
    VerifyOptions,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_checks(checks: &[Check]) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} expected {} got {}", c.id, c.expected, c.got))
        .collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            failed.join("; ")
        },
    }
}

fn criterion(n: usize, what: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = run();
    let took = start.elapsed();
    let in_time = took <= limit;
    let pass = out.pass && in_time;
    println!(
        "criterion {n:>2} {} {what}: {} ({:.2}s of {}s{})",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        took.as_secs_f64(),
        limit.as_secs(),
        if in_time { "" } else { ", over time" }
    );
    pass
}

fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let mut all = true;

    all &= criterion(1, "table of cop numbers", mins(2), || {
        from_checks(&table_checks(&opts))
    });

    all &= criterion(2, "worked examples", Duration::from_secs(5), || {
        let checks: Vec<Check> = example_checks(&opts)
            .into_iter()
            .filter(|c| c.id != "example.C4.classic")
            .collect();
        from_checks(&checks)
    });

    all &= criterion(
        3,
        "homotopy invariance and tree dismantling",
        mins(10),
        || {
            let mut checks = invariance_corpus(&opts, opts.seed, 30, 4);
            checks.extend(tree_checks(&opts, 10));
            from_checks(&checks)
        },
    );

    all &= criterion(4, "variant bounds on random graphs", mins(15), || {
        let checks = bounds_corpus(&opts, opts.seed, 50);
        let reflexive = checks
            .iter()
            .filter(|c| c.description.contains("reflexive"))
            .count();
        let mut out = from_checks(&checks);
        out.pass &= reflexive > 0;
        out.detail = format!("{}, {reflexive} reflexive", out.detail);
        out
    });

    all &= criterion(5, "categorical products", mins(10), || {
        let checks = products_suite(&opts);
        let mut out = from_checks(&checks);
        let flags: Vec<String> = checks.iter().filter_map(|c| c.flag.clone()).collect();
        if !flags.is_empty() {
            out.detail = format!("{}; flagged: {}", out.detail, flags.join("; "));
        }
        out
    });

    all &= criterion(6, "box products", mins(20), || {
        from_checks(&box_value_checks(&opts))
    });

    all &= criterion(7, "box cycle bounds", mins(120), || {
        let checks = box_cycle_checks(&opts);
        let mut out = from_checks(&checks);
        let exact: Vec<String> = checks
            .iter()
            .filter(|c| !c.id.ends_with(".tables"))
            .map(|c| format!("{} = {}", c.id, c.got))
            .collect();
        out.detail = format!("{}; exact {}", out.detail, exact.join(", "));
        out
    });

    all &= criterion(8, "bipartite split", mins(5), || {
        let checks: Vec<Check> = ["C6", "C8", "Q3", "P5"]
            .iter()
            .map(|s| split_check(&opts, s, &common::family(s)))
            .collect();
        from_checks(&checks)
    });

    all &= criterion(9, "oracle equivalence", mins(30), || {
        let graphs = common::small_connected_graphs(5);
        let mut states = 0usize;
        let mut failures = Vec::new();
        for g in &graphs {
            for variant in Variant::ALL {
                for k in 1..=2 {
                    match common::compare_with_oracle(g, k, variant) {
                        Ok(n) => states += n,
                        Err(e) => failures.push(format!("{:?}: {e}", g.edges())),
                    }
                }
            }
        }
        Outcome {
            pass: failures.is_empty() && graphs.len() >= 200,
            detail: if failures.is_empty() {
                format!("{} graphs, {states} states agree", graphs.len())
            } else {
                failures.into_iter().take(3).collect::<Vec<_>>().join("; ")
            },
        }
    });

    all &= criterion(10, "strategy soundness", mins(20), || {
        let checks: Vec<Check> = strategy_corpus()
            .iter()
            .map(|(name, g)| strategy_check(&opts, name, g, 10))
            .collect();
        let mut out = from_checks(&checks);
        let (mut captures, mut evasions) = (0, 0);
        for c in &checks {
            captures += c.got["captures"].as_u64().unwrap_or(0);
            evasions += c.got["evasions"].as_u64().unwrap_or(0);
        }
        out.detail = format!("{}, {captures} captures, {evasions} evasions", out.detail);
        out
    });

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
