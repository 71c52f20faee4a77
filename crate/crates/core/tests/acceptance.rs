//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! The process fails only when a criterion's outcome differs from its pinned
//! expectation, so a known red stays visible without breaking the build.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use graded_ideals::classify;
use graded_ideals::euclid::verify_witness_facts;
use graded_ideals::theorems::corpus::{Corpus, CorpusSize};
use graded_ideals::theorems::{radical_laws, run_all, run_theorem, Status, TheoremReport};
use graded_ideals::{Elem, GradedRing, Ideal, MultSet};

const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const WITNESS_LIMIT: Duration = Duration::from_secs(1);
const LAWS_LIMIT: Duration = Duration::from_secs(60);
const SUITE_LIMIT: Duration = Duration::from_secs(300);
const MIN_NON_VACUOUS: usize = 50;

const MUST_VERIFY: &[&str] = &[
    "prop1", "prop2", "prop5", "prop6", "prop7", "prop8", "lem1", "lem2", "lem3", "thm1", "thm2", "thm3", "coro2i",
    "coro2ii", "prop13", "prop14", "prop15", "prop16", "prop17", "thm8", "prop9_corrected",
];

/// Entries of `MUST_VERIFY` that the audit falsifies, each with a replayable
/// counterexample.
const PINNED_RED: &[&str] = &["prop2", "thm2", "thm3", "prop13", "thm8", "prop9_corrected"];

/// Criteria expected to print FAIL.
const EXPECTED_FAIL: &[u32] = &[5];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn z12i() -> (std::sync::Arc<GradedRing>, Ideal, MultSet) {
    let r = GradedRing::gaussian(12).unwrap();
    let s = MultSet::closure(&r, &[r.elem(&[3, 0]).unwrap()]).unwrap();
    (r.clone(), Ideal::zero(&r), s)
}

/// `x ∈ Grad(P)` for homogeneous `x`, by powering.
fn in_radical(r: &GradedRing, p: &Ideal, x: Elem) -> bool {
    let mut y = x;
    for _ in 0..=r.order() {
        if p.contains(y) {
            return true;
        }
        y = r.mul(y, x);
    }
    false
}

/// Independent enumeration: the elements `s` of `S` satisfying the graded
/// S-primary condition for `P`.
fn s_primary_witnesses(r: &GradedRing, p: &Ideal, s: &MultSet) -> Vec<Elem> {
    let h = r.homogeneous();
    s.elements()
        .iter()
        .copied()
        .filter(|&w| {
            h.iter().all(|&x| {
                h.iter().all(|&y| {
                    !p.contains(r.mul(x, y)) || p.contains(r.mul(w, x)) || in_radical(r, p, r.mul(w, y))
                })
            })
        })
        .collect()
}

fn report<'a>(reports: &'a [TheoremReport], id: &str) -> &'a TheoremReport {
    reports.iter().find(|r| r.id == id).unwrap_or_else(|| panic!("no report for {id}"))
}

fn evidence_replays(r: &TheoremReport) -> bool {
    r.counterexample
        .iter()
        .chain(&r.example)
        .flat_map(|e| e.facts())
        .all(|f| f.replays().unwrap_or(false))
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let (r, p, s) = z12i();
    let cert = classify::is_graded_weakly_s_primary(&p, &s).unwrap();
    let disjoint = !p.meets(s.elements());
    let elapsed = start.elapsed();
    Outcome {
        id: 1,
        title: "ex2 weakly S-primary",
        pass: cert.verdict && disjoint && elapsed < EXAMPLE_LIMIT,
        detail: format!(
            "{} disjoint={disjoint} time={}ms limit={}ms",
            cert.summary(&r),
            elapsed.as_millis(),
            EXAMPLE_LIMIT.as_millis()
        ),
    }
}

fn criterion2(corpus: &Corpus) -> Outcome {
    let (r, p, s) = z12i();
    let cert = classify::is_graded_s_primary(&p, &s).unwrap();
    let oracle = s_primary_witnesses(&r, &p, &s);
    let agrees = cert.verdict == !oracle.is_empty() && cert.witness.is_none_or(|w| oracle.contains(&w));
    let replays = classify::replay(&cert, &p, &s).unwrap();
    let ex2 = run_theorem("ex2", corpus).unwrap();
    let recorded = ex2.status == Status::Falsified && evidence_replays(&ex2) && !ex2.notes.is_empty();
    let witnesses: Vec<String> = oracle.iter().map(|&w| r.format(w)).collect();
    Outcome {
        id: 2,
        title: "ex2 discrepancy audit",
        pass: agrees && replays && recorded,
        detail: format!(
            "{} oracle witnesses=[{}] replay={replays} ex2 status={}",
            cert.summary(&r),
            witnesses.join(", "),
            ex2.status.name()
        ),
    }
}

fn criterion3() -> Outcome {
    let start = Instant::now();
    let facts = verify_witness_facts();
    let elapsed = start.elapsed();
    let passing = facts.iter().filter(|f| f.holds).count();
    Outcome {
        id: 3,
        title: "witness facts",
        pass: facts.len() == 8 && passing == 8 && elapsed < WITNESS_LIMIT,
        detail: format!("{passing}/{} hold time={}ms", facts.len(), elapsed.as_millis()),
    }
}

fn criterion4(reports: &[TheoremReport]) -> Outcome {
    let start = Instant::now();
    let fresh = Corpus::build(CorpusSize::Default).unwrap();
    let mut laws = radical_laws(&fresh).unwrap();
    let elapsed = start.elapsed();
    laws.push(report(reports, "lem2").clone());
    laws.push(report(reports, "lem3").clone());
    let violations: usize = laws.iter().map(|r| r.failures).sum();
    let checks: usize = laws.iter().map(|r| r.tested).sum();
    let all_verified = laws.iter().all(|r| r.status == Status::Verified);
    Outcome {
        id: 4,
        title: "radical laws",
        pass: violations == 0 && all_verified && elapsed < LAWS_LIMIT,
        detail: format!("checks={checks} violations={violations} time={}ms", elapsed.as_millis()),
    }
}

fn criterion5(reports: &[TheoremReport], elapsed: Duration) -> (Outcome, bool) {
    let mut off = Vec::new();
    let mut red = Vec::new();
    for id in MUST_VERIFY {
        let r = report(reports, id);
        if r.status == Status::Verified && r.non_vacuous >= MIN_NON_VACUOUS {
            continue;
        }
        off.push(format!("{id}={} (non_vacuous={})", r.status.name(), r.non_vacuous));
        if r.status == Status::Falsified && r.counterexample.is_some() && evidence_replays(r) {
            red.push(*id);
        }
    }
    let literal = report(reports, "prop9_literal");
    let literal_ok = literal.status == Status::Falsified && literal.counterexample.is_some() && evidence_replays(literal);
    let timely = elapsed < SUITE_LIMIT;
    let pinned = red.len() == off.len() && red == PINNED_RED && literal_ok && timely;
    let detail = format!(
        "prop9_literal={} time={}ms off-target: {}",
        literal.status.name(),
        elapsed.as_millis(),
        if off.is_empty() { "none".to_string() } else { off.join(", ") }
    );
    (
        Outcome {
            id: 5,
            title: "theorem statuses",
            pass: off.is_empty() && literal_ok && timely,
            detail,
        },
        pinned,
    )
}

fn criterion6(reports: &[TheoremReport]) -> Outcome {
    let (p18, c4) = (report(reports, "prop18"), report(reports, "coro4"));
    let pass = [p18, c4]
        .iter()
        .all(|r| r.status == Status::Verified && r.failures == 0 && r.non_vacuous >= 1);
    Outcome {
        id: 6,
        title: "slice laws on gap instances",
        pass,
        detail: format!(
            "prop18 gaps={} failures={}; coro4 gaps={} failures={}",
            p18.non_vacuous, p18.failures, c4.non_vacuous, c4.failures
        ),
    }
}

fn criterion7(reports: &[TheoremReport]) -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for r in reports {
        for f in r.counterexample.iter().chain(&r.example).flat_map(|e| e.facts()) {
            total += 1;
            if !f.replays().unwrap_or(false) {
                bad.push(r.id.clone());
            }
        }
    }
    bad.dedup();
    Outcome {
        id: 7,
        title: "evidence replay",
        pass: bad.is_empty() && total > 0,
        detail: format!("facts={total} failed={}", bad.join(", ")),
    }
}

fn criterion8() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_graded-ideals"))
            .args(["theorems", "--json", "--no-timestamp"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    Outcome {
        id: 8,
        title: "deterministic report",
        pass: same,
        detail: format!("bytes={} identical={}", a.stdout.len(), a.stdout == b.stdout),
    }
}

fn main() -> ExitCode {
    let corpus = Corpus::build(CorpusSize::Default).unwrap();
    let start = Instant::now();
    let reports = run_all(&corpus).unwrap();
    let suite_time = start.elapsed();

    let (c5, c5_pinned) = criterion5(&reports, suite_time);
    let outcomes = [
        criterion1(),
        criterion2(&corpus),
        criterion3(),
        criterion4(&reports),
        c5,
        criterion6(&reports),
        criterion7(&reports),
        criterion8(),
    ];

    let mut unexpected = Vec::new();
    for o in &outcomes {
        println!("{} {} {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.title, o.detail);
        if o.pass == EXPECTED_FAIL.contains(&o.id) {
            unexpected.push(o.id);
        }
    }
    if !c5_pinned {
        unexpected.push(5);
    }
    if unexpected.is_empty() {
        println!("acceptance: outcomes match the pinned expectations (expected FAIL: {EXPECTED_FAIL:?}, pinned red: {PINNED_RED:?})");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: outcomes differ from the pinned expectations for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
