//! Acceptance criteria 1–10, each reported on one line.

use std::process::ExitCode;
use std::time::Duration;

use foulis::selftest::{run_selftest, SelftestOptions, SelftestReport};

struct Criterion {
    number: usize,
    suite: &'static str,
    summary: &'static str,
    budget: Option<Duration>,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { number: 1, suite: "partial_bijections", summary: "inverse-monoid laws, meet/join laws, 𝒟 and complements in I_n, n ≤ 4", budget: None },
    Criterion { number: 2, suite: "quotient", summary: "quotient of I_n is the chain L_{n+1}, n ≤ 5", budget: Some(Duration::from_secs(1)) },
    Criterion { number: 3, suite: "coordinatize", summary: "coordinatization of L_4, L_2 × L_3 and all monoids with ≤ 6 letters", budget: Some(Duration::from_secs(10)) },
    Criterion { number: 4, suite: "semisimple", summary: "morphism existence table and injectivity vs kernel", budget: None },
    Criterion { number: 5, suite: "compose", summary: "composite matrices vs functional composition, CAR chains", budget: None },
    Criterion { number: 6, suite: "bratteli", summary: "fixture diagrams intertwine and match their interval algebras", budget: Some(Duration::from_secs(30)) },
    Criterion { number: 7, suite: "cantor_prefix", summary: "prefix-code engine", budget: None },
    Criterion { number: 8, suite: "cuntz_gauge", summary: "Cuntz/dyadic laws, CAR levels and the dyadic mean", budget: Some(Duration::from_secs(60)) },
    Criterion { number: 9, suite: "graph_inverse", summary: "commuting square and orthogonal covers", budget: None },
];

fn line(number: usize, passed: bool, summary: &str, note: String) -> bool {
    println!("criterion {number:>2}: {} {summary} {note}", if passed { "PASS" } else { "FAIL" });
    passed
}

fn evaluate(report: &SelftestReport, c: &Criterion) -> bool {
    let checks: Vec<_> = report.checks.iter().filter(|k| k.suite == c.suite).collect();
    let elapsed = report.suite_elapsed(c.suite);
    let mut note = format!("({} checks, {elapsed:.2?}", checks.len());
    if let Some(budget) = c.budget {
        note += &format!(" of {budget:?}");
    }
    note.push(')');
    for failed in checks.iter().filter(|k| !k.passed) {
        note += &format!("\n    {failed}");
    }
    let in_time = c.budget.is_none_or(|b| elapsed < b);
    line(c.number, !checks.is_empty() && checks.iter().all(|k| k.passed) && in_time, c.summary, note)
}

fn main() -> ExitCode {
    let report = run_selftest(&SelftestOptions::default()).expect("all suites are known");
    let mut all = true;
    for c in &CRITERIA {
        all &= evaluate(&report, c);
    }
    let budget = Duration::from_secs(180);
    all &= line(
        10,
        report.passed() && report.elapsed < budget,
        "full selftest with deterministic seeds",
        format!("({} checks, seed {}, {:.2?} of {budget:?})", report.checks.len(), report.seed, report.elapsed),
    );
    if all {
        ExitCode::SUCCESS
    } else {
        println!("acceptance criteria failed");
        ExitCode::FAILURE
    }
}
