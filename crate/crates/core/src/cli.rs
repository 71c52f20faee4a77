//! Command-line front end.
//!
//! Exit codes: 0 success, 2 unreadable or invalid input, 3 failed
//! precondition (for example an ideal that is not proper or meets `S`),
//! 4 ring order cap exceeded.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::classify::{classify_full, CertificateRecord};
use crate::error::Error;
use crate::euclid::verify_witness_facts;
use crate::ideal::{Ideal, IdealLattice};
use crate::localization::{is_graded_domain, is_graded_field, Localization};
use crate::mult_set::MultSet;
use crate::ring::{Elem, GradedRing, RingSpec};
use crate::theorems::corpus::{Corpus, CorpusSize};
use crate::theorems::{registry, run_many, select, RunDocument, Summary, Theorem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "graded-ideals", version, about = "Graded ideals of finite graded commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every predicate for the ideal and set of a spec document.
    Classify(SpecArgs),
    /// The graded radical of the ideal.
    Radical(SpecArgs),
    /// The localization at the set, and the extension of the ideal if given.
    Localize(SpecArgs),
    /// All graded ideals of the ring.
    Enumerate(SpecArgs),
    /// Run the theorem audit over a corpus.
    Theorems(TheoremArgs),
    /// Check the fixed facts about Z[i] and Z[X].
    Witness(OutputArgs),
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long, value_name = "FILE")]
    pub spec: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    #[arg(long, default_value = "default")]
    pub corpus: CorpusSize,
    /// A theorem id, or a group prefix such as `thm4`.
    #[arg(long, value_name = "THEOREM_ID")]
    pub id: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// Leave out the generation time and per-theorem timings.
    #[arg(long)]
    pub no_timestamp: bool,
}

/// Input document: a ring, optional ideal generators and optional set
/// generators, elements given as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub ring: RingSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<Vec<i64>>>,
}

/// A failed command with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::NotProper
        | Error::NotDisjoint
        | Error::ZeroInMultSet
        | Error::SetNotInIdentityComponent
        | Error::Precondition(_) => EXIT_PRECONDITION,
        _ => EXIT_PARSE,
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Parsed spec: the ring, the ideal (zero if absent) and the set (`{1}` if absent).
pub struct Loaded {
    pub ring: Arc<GradedRing>,
    pub ideal: Option<Ideal>,
    pub set: MultSet,
}

pub fn parse_spec(text: &str) -> std::result::Result<Loaded, Failure> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| Failure::parse(format!("spec: {e}")))?;
    load(&doc)
}

pub fn load(doc: &SpecDocument) -> std::result::Result<Loaded, Failure> {
    let ring = doc.ring.build()?;
    let elems = |coords: &[Vec<i64>]| -> std::result::Result<Vec<Elem>, Failure> {
        coords.iter().map(|c| ring.elem(c).map_err(Failure::from)).collect()
    };
    let ideal = match &doc.ideal {
        Some(gens) => Some(Ideal::generated(&ring, &elems(gens)?)?),
        None => None,
    };
    let set = MultSet::closure(&ring, &elems(doc.set.as_deref().unwrap_or(&[]))?)?;
    Ok(Loaded { ring, ideal, set })
}

fn read_spec(path: &PathBuf) -> std::result::Result<Loaded, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

fn require_ideal(l: &Loaded) -> std::result::Result<&Ideal, Failure> {
    let p = l.ideal.as_ref().ok_or_else(|| Failure::parse("spec has no ideal"))?;
    if !p.is_proper() {
        return Err(Error::NotProper.into());
    }
    Ok(p)
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn lines(rows: impl IntoIterator<Item = String>) -> String {
    rows.into_iter().map(|r| r + "\n").collect()
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    ring: &'a RingSpec,
    ideal: Vec<Vec<i64>>,
    set: Vec<Vec<i64>>,
    radical: Vec<Vec<i64>>,
    rows: Vec<CertificateRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    inconsistencies: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

pub fn classify(l: &Loaded, json: bool) -> Outcome {
    let p = require_ideal(l)?;
    if p.meets(l.set.elements()) {
        return Err(Failure {
            code: EXIT_PRECONDITION,
            message: format!(
                "ideal meets the multiplicative set {}",
                l.ring.format_set(l.set.elements())
            ),
        });
    }
    let report = classify_full(p, &l.set)?;
    if json {
        return Ok(to_json(&ClassifyReport {
            ring: l.ring.spec(),
            ideal: p.generators_coords(),
            set: l.set.generators_coords(),
            radical: report.radical.generators_coords(),
            rows: report.rows.iter().map(|c| c.record(&l.ring)).collect(),
            inconsistencies: report.inconsistencies.clone(),
            note: report.note.clone(),
        }));
    }
    let mut out = vec![
        format!("ring: {}", l.ring.name()),
        format!("P = {}", p),
        format!("S = {}", l.ring.format_set(l.set.elements())),
        format!("Grad(P) = {}", report.radical),
    ];
    out.extend(report.rows.iter().map(|c| c.summary(&l.ring)));
    out.extend(report.note.iter().map(|n| format!("note: {n}")));
    out.extend(report.inconsistencies.iter().map(|n| format!("inconsistent: {n}")));
    Ok(lines(out))
}

pub fn radical(l: &Loaded, json: bool) -> Outcome {
    let p = l.ideal.as_ref().ok_or_else(|| Failure::parse("spec has no ideal"))?;
    let r = p.grad_radical();
    if json {
        #[derive(Serialize)]
        struct Report {
            ideal: Vec<Vec<i64>>,
            radical: Vec<Vec<i64>>,
        }
        return Ok(to_json(&Report {
            ideal: p.generators_coords(),
            radical: r.generators_coords(),
        }));
    }
    Ok(lines([format!("P = {p}"), format!("Grad(P) = {r}")]))
}

pub fn localize(l: &Loaded, json: bool) -> Outcome {
    let loc = Localization::new(&l.set);
    let target = loc.ring();
    let extension = l.ideal.as_ref().map(|p| loc.extend(p));
    let contraction = extension.as_ref().map(|q| loc.contract(q));
    if json {
        #[derive(Serialize)]
        struct Report<'a> {
            set: Vec<Vec<i64>>,
            kernel: Vec<Vec<i64>>,
            ring: &'a RingSpec,
            order: usize,
            graded_domain: bool,
            graded_field: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            extension: Option<Vec<Vec<i64>>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            contraction: Option<Vec<Vec<i64>>>,
        }
        return Ok(to_json(&Report {
            set: l.set.generators_coords(),
            kernel: loc.kernel().generators_coords(),
            ring: target.spec(),
            order: target.order(),
            graded_domain: is_graded_domain(target),
            graded_field: is_graded_field(target),
            extension: extension.as_ref().map(Ideal::generators_coords),
            contraction: contraction.as_ref().map(Ideal::generators_coords),
        }));
    }
    let mut out = vec![
        format!("S = {}", l.ring.format_set(l.set.elements())),
        format!("kernel = {}", loc.kernel()),
        format!("S^-1 R = {} ({} elements)", target.name(), target.order()),
        format!("graded domain: {}", is_graded_domain(target)),
        format!("graded field: {}", is_graded_field(target)),
    ];
    if let (Some(e), Some(c)) = (&extension, &contraction) {
        out.push(format!("S^-1 P = {e}"));
        out.push(format!("contraction = {c}"));
    }
    Ok(lines(out))
}

pub fn enumerate(l: &Loaded, json: bool) -> Outcome {
    let lattice = IdealLattice::new(&l.ring);
    if json {
        #[derive(Serialize)]
        struct Row {
            generators: Vec<Vec<i64>>,
            size: usize,
        }
        let rows: Vec<Row> = lattice
            .ideals()
            .iter()
            .map(|i| Row {
                generators: i.generators_coords(),
                size: i.len(),
            })
            .collect();
        return Ok(to_json(&rows));
    }
    let mut out = vec![format!("{}: {} graded ideals", l.ring.name(), lattice.len())];
    out.extend(lattice.ideals().iter().map(|i| format!("{i} size={}", i.len())));
    Ok(lines(out))
}

pub fn theorems(args: &TheoremArgs) -> Outcome {
    let chosen: Vec<&Theorem> = match &args.id {
        Some(id) => select(id)?,
        None => registry().iter().collect(),
    };
    let corpus = Corpus::build(args.corpus)?;
    let mut reports = run_many(&chosen, &corpus)?;
    if args.no_timestamp {
        for r in &mut reports {
            r.elapsed_ms = None;
        }
    }
    if args.json {
        let generated_at = (!args.no_timestamp).then(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        });
        return Ok(to_json(&RunDocument {
            corpus: args.corpus.to_string(),
            generated_at,
            instances: corpus.instances().len(),
            summary: Summary::of(&reports),
            reports,
        }));
    }
    let summary = Summary::of(&reports);
    let mut out: Vec<String> = reports.iter().map(|r| r.text()).collect();
    out.push(format!(
        "corpus={} instances={} verified={} falsified={} vacuous={}",
        args.corpus,
        corpus.instances().len(),
        summary.verified,
        summary.falsified,
        summary.vacuous
    ));
    Ok(lines(out))
}

pub fn witness(json: bool) -> Outcome {
    let facts = verify_witness_facts();
    if json {
        return Ok(to_json(&facts));
    }
    Ok(lines(facts.iter().map(|f| {
        format!("{} {}", if f.holds { "PASS" } else { "FAIL" }, f.statement)
    })))
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify(a) => classify(&read_spec(&a.spec)?, a.output.json),
        Command::Radical(a) => radical(&read_spec(&a.spec)?, a.output.json),
        Command::Localize(a) => localize(&read_spec(&a.spec)?, a.output.json),
        Command::Enumerate(a) => enumerate(&read_spec(&a.spec)?, a.output.json),
        Command::Theorems(a) => theorems(a),
        Command::Witness(a) => witness(a.json),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> Loaded {
        parse_spec(text).map_err(|f| f.message).unwrap()
    }

    const Z12I: &str = r#"{"ring": {"kind": "poly_quotient", "modulus": 12, "poly": [1, 0, 1],
        "grade_group": [2], "x_grade": [1]}, "ideal": [], "set": [[3, 0]]}"#;

    #[test]
    fn classify_gaussian_twelve() {
        let out = classify(&spec(Z12I), false).unwrap();
        assert!(out.contains("graded_weakly_S_primary: true"), "{out}");
    }

    #[test]
    fn classify_z30_counter() {
        let l = spec(r#"{"ring": {"kind": "cyclic", "modulus": 30}, "ideal": [[6]]}"#);
        let out = classify(&l, false).unwrap();
        assert!(out.contains("graded_weakly_primary: false, counter=(2,3)"), "{out}");
    }

    #[test]
    fn whole_ideal_is_rejected() {
        let l = spec(r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[1]]}"#);
        let f = classify(&l, false).unwrap_err();
        assert_eq!((f.code, f.message.as_str()), (EXIT_PRECONDITION, "ideal not proper"));
    }

    #[test]
    fn meeting_set_is_rejected() {
        let l = spec(r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[3]], "set": [[3]]}"#);
        assert_eq!(classify(&l, false).unwrap_err().code, EXIT_PRECONDITION);
    }

    #[test]
    fn exit_codes() {
        let code = |t: &str| parse_spec(t).err().map(|f| f.code);
        assert_eq!(code("{"), Some(EXIT_PARSE));
        assert_eq!(code(r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[1, 2]]}"#), Some(EXIT_PARSE));
        assert_eq!(code(r#"{"ring": {"kind": "cyclic", "modulus": 70000}}"#), Some(EXIT_CAP));
        assert_eq!(code(r#"{"ring": {"kind": "cyclic", "modulus": 12}, "set": [[6]]}"#), Some(EXIT_PRECONDITION));
    }

    #[test]
    fn radical_of_four_in_z12() {
        let l = spec(r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[4]]}"#);
        assert!(radical(&l, false).unwrap().contains("Grad(P) = (2)"));
    }

    #[test]
    fn localize_and_enumerate() {
        let l = spec(r#"{"ring": {"kind": "cyclic", "modulus": 12}, "ideal": [[2]], "set": [[3]]}"#);
        let out = localize(&l, false).unwrap();
        assert!(out.contains("(4 elements)") && out.contains("graded field: false"), "{out}");
        let out = enumerate(&l, false).unwrap();
        assert!(out.starts_with("Z_12: 6 graded ideals"), "{out}");
    }

    #[test]
    fn witness_table() {
        let out = witness(false).unwrap();
        assert_eq!(out.lines().count(), 8);
        assert!(out.lines().all(|l| l.starts_with("PASS ")));
    }

    #[test]
    fn spec_round_trip() {
        let doc: SpecDocument = serde_json::from_str(Z12I).unwrap();
        let back: SpecDocument = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(doc, back);
    }
}
