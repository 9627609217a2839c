//! The acceptance run. Prints one line per criterion and exits non-zero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dendrotensor::tree::parse_tree;
use dendrotensor_cli::commands::cmd_omega;
use dendrotensor_cli::suites::{run_suites, Report, Suite, SuiteConfig, SuiteReport};

const EXAMPLE: &str =
    r#"{"levels": [[1,2,3,4],[1,2,3],[1]], "maps": [{"1":1,"2":1,"3":3,"4":3},{"1":1,"2":1,"3":"*"}]}"#;

struct Outcome {
    ok: bool,
    detail: String,
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let out = match cmd_omega(EXAMPLE) {
        Ok(o) => o,
        Err(e) => return Outcome { ok: false, detail: e.to_string() },
    };
    let forest = out.json["forest"].as_str().unwrap_or_default().to_string();
    let exact = forest == "{ℓ2:1[ℓ1:1[ℓ0:1,ℓ0:2],ℓ1:2[]];ℓ1:3[ℓ0:3,ℓ0:4]}";
    let shapes = ["ℓ2:1[ℓ1:1[ℓ0:1,ℓ0:2],ℓ1:2[]]", "ℓ1:3[ℓ0:3,ℓ0:4]"].iter().all(|t| parse_tree(t).is_ok());
    let counts = out.json["components"] == 2 && out.json["edges"] == 8 && out.json["stumps"] == 1;
    let t = start.elapsed();
    Outcome { ok: exact && shapes && counts && t < Duration::from_secs(1), detail: format!("{forest} in {t:.2?}") }
}

fn suite(report: &Report, s: Suite) -> &SuiteReport {
    report.suites.iter().find(|r| r.suite == s.name()).expect("suite ran")
}

/// Zero failures, the expected instance count and the time limit.
fn suite_outcome(
    report: &Report,
    s: Suite,
    instances: usize,
    limit_secs: u64,
    extra: impl Fn(&SuiteReport) -> bool,
) -> Outcome {
    let r = suite(report, s);
    let ok = r.passed() && r.instances == instances && r.wall_time < Duration::from_secs(limit_secs) && extra(r);
    let mut detail =
        format!("{} instances, {} checks, {} failures in {:.2?}", r.instances, r.checks, r.failures.len(), r.wall_time);
    for n in &r.notes {
        detail.push_str("; ");
        detail.push_str(n);
    }
    if let Some(f) = r.failures.first() {
        detail.push_str(&format!("; first failure: instance {} {}: {}", f.instance, f.check, f.witness));
    }
    Outcome { ok, detail }
}

fn main() -> ExitCode {
    let config = SuiteConfig { seed: 42, ..SuiteConfig::default() };
    let start = Instant::now();
    let first = run_suites(&Suite::ALL, &config);
    let second = run_suites(&Suite::ALL, &config);
    let total = start.elapsed();
    let bytes = |r: &Report| serde_json::to_string_pretty(r).expect("report serializes");
    let identical = bytes(&first) == bytes(&second);

    let has_note = |r: &SuiteReport, text: &str| r.notes.iter().any(|n| n == text);
    let criteria: Vec<(&str, Outcome)> = vec![
        ("worked example", worked_example()),
        ("omega functoriality", suite_outcome(&first, Suite::Functoriality, 200, 30, |_| true)),
        ("retract", suite_outcome(&first, Suite::Retract, 100, 30, |_| true)),
        (
            "segal decomposition",
            suite_outcome(&first, Suite::Segal, 100, 60, |r| !has_note(r, "0 instances cut directly below a stump")),
        ),
        ("forest products", suite_outcome(&first, Suite::D3, 50, 30, |_| true)),
        ("nerve bijection", suite_outcome(&first, Suite::Nerve, 100, 120, |_| true)),
        (
            "fibrous axioms",
            suite_outcome(&first, Suite::Fibrous, 25, 120, |r| {
                has_note(r, "verified up to ⟨4⟩") && has_note(r, "5 of 5 injected defects detected")
            }),
        ),
        ("shuffle calculus", {
            let mut o = suite_outcome(&first, Suite::Shuffles, 100, 120, |_| true);
            let a = suite_outcome(&first, Suite::Assoc, 50, 120, |_| true);
            let i = suite_outcome(&first, Suite::Interior, 100, 120, |_| true);
            o.ok &= a.ok && i.ok;
            o.detail = format!("shuffles: {}; assoc: {}; interior: {}", o.detail, a.detail, i.detail);
            o
        }),
        ("free algebra", suite_outcome(&first, Suite::Freealg, 100, 60, |_| true)),
        (
            "determinism",
            Outcome {
                ok: identical
                    && first.passed()
                    && total < Duration::from_secs(600)
                    && first.wall_time() < Duration::from_secs(300),
                detail: format!(
                    "reports {}, one run {:.2?}, both runs {total:.2?}",
                    if identical { "byte-identical" } else { "DIFFER" },
                    first.wall_time()
                ),
            },
        ),
    ];

    let mut failed = 0;
    for (i, (name, o)) in criteria.iter().enumerate() {
        println!("criterion {:>2} {:<20} {}  {}", i + 1, name, if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += !o.ok as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
