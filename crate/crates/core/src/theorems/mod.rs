//! Executable audit of the catalogue of statements about graded weakly
//! S-primary ideals.
//!
//! Each registry entry evaluates one statement over every qualifying corpus
//! instance and reports `verified`, `falsified` (with a replayable
//! counterexample made of [`Fact`]s) or `vacuous`.

pub mod corpus;
pub mod facts;
mod registry;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
pub use corpus::{Corpus, CorpusSize, Instance, RingEntry};
pub use facts::{Fact, IdealExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Falsified,
    Vacuous,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Falsified => "falsified",
            Status::Vacuous => "vacuous",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// The statement as written.
    Literal,
    /// A repaired variant of a statement whose literal form fails.
    Corrected,
    /// A finite stand-in for a statement about infinite rings.
    Exploratory,
    /// An identity checked on every ideal, outside the catalogue.
    Law,
}

/// Facts pinning down one instance of a statement.
///
/// For a failure, `hypothesis` holds what the statement assumes and
/// `conclusion` what it then fails to deliver; for an existence claim,
/// `hypothesis` carries the example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub instance: String,
    pub hypothesis: Vec<Fact>,
    pub conclusion: Vec<Fact>,
}

impl Evidence {
    pub fn facts(&self) -> impl Iterator<Item = &Fact> {
        self.hypothesis.iter().chain(&self.conclusion)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    pub kind: Kind,
    pub status: Status,
    /// Instances examined.
    pub tested: usize,
    /// Instances whose hypothesis held.
    pub non_vacuous: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<Evidence>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl TheoremReport {
    /// One line per report plus the counterexample instance, if any.
    pub fn text(&self) -> String {
        let mut s = format!(
            "{:<22} {:<9} tested={} non_vacuous={} failures={}",
            self.id,
            self.status.name(),
            self.tested,
            self.non_vacuous,
            self.failures
        );
        if let Some(ms) = self.elapsed_ms {
            s.push_str(&format!(" time={ms}ms"));
        }
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("\n    counterexample: {}", c.instance));
        }
        for n in &self.notes {
            s.push_str(&format!("\n    note: {n}"));
        }
        s
    }
}

/// A claim's truth value with the facts that establish it, built on demand.
pub(crate) struct Side<'a> {
    pub holds: bool,
    facts: Box<dyn FnOnce() -> Result<Vec<Fact>> + 'a>,
}

impl<'a> Side<'a> {
    pub fn lazy(holds: bool, facts: impl FnOnce() -> Result<Vec<Fact>> + 'a) -> Side<'a> {
        Side {
            holds,
            facts: Box::new(facts),
        }
    }

    pub fn fact(fact: Fact) -> Side<'a> {
        Side::lazy(fact.holds(), move || Ok(vec![fact]))
    }

    /// Flips the truth value and keeps the facts.
    pub fn not(self) -> Side<'a> {
        Side {
            holds: !self.holds,
            facts: self.facts,
        }
    }

    /// Conjunction: all facts when true, the first false part's otherwise.
    pub fn all(parts: Vec<Side<'a>>) -> Side<'a> {
        let holds = parts.iter().all(|p| p.holds);
        Side::lazy(holds, move || {
            let mut out = Vec::new();
            for p in parts {
                if holds || !p.holds {
                    out.extend((p.facts)()?);
                    if !holds {
                        break;
                    }
                }
            }
            Ok(out)
        })
    }

    /// Disjunction: the first true part's facts when true, all otherwise.
    pub fn any(parts: Vec<Side<'a>>) -> Side<'a> {
        let holds = parts.iter().any(|p| p.holds);
        Side::lazy(holds, move || {
            let mut out = Vec::new();
            for p in parts {
                if !holds || p.holds {
                    out.extend((p.facts)()?);
                    if holds {
                        break;
                    }
                }
            }
            Ok(out)
        })
    }

    fn into_facts(self) -> Result<Vec<Fact>> {
        (self.facts)()
    }
}

#[derive(Default)]
pub(crate) struct Tally {
    pub tested: usize,
    pub non_vacuous: usize,
    pub failures: usize,
    counterexample: Option<Evidence>,
    example: Option<Evidence>,
    pub notes: Vec<String>,
    forward: usize,
    backward: usize,
}

impl Tally {
    fn fail(&mut self, instance: impl FnOnce() -> String, hyp: Vec<Side>, concl: Vec<Side>) -> Result<()> {
        self.failures += 1;
        if self.counterexample.is_none() {
            let mut hypothesis = Vec::new();
            for h in hyp {
                hypothesis.extend(h.into_facts()?);
            }
            let mut conclusion = Vec::new();
            for c in concl {
                conclusion.extend(c.into_facts()?);
            }
            self.counterexample = Some(Evidence {
                instance: instance(),
                hypothesis,
                conclusion,
            });
        }
        Ok(())
    }

    /// An instance the statement does not constrain.
    pub fn skip(&mut self) {
        self.tested += 1;
    }

    pub fn implication(&mut self, instance: impl FnOnce() -> String, hyp: Side, concl: Side) -> Result<()> {
        self.tested += 1;
        if !hyp.holds {
            return Ok(());
        }
        self.non_vacuous += 1;
        if concl.holds {
            return Ok(());
        }
        self.fail(instance, vec![hyp], vec![concl])
    }

    /// Non-vacuous when either side holds.
    pub fn equivalence(&mut self, instance: impl FnOnce() -> String, left: Side, right: Side) -> Result<()> {
        self.tested += 1;
        if left.holds || right.holds {
            self.non_vacuous += 1;
        }
        if left.holds == right.holds {
            return Ok(());
        }
        if left.holds {
            self.forward += 1;
            self.fail(instance, vec![left], vec![right])
        } else {
            self.backward += 1;
            self.fail(instance, vec![right], vec![left])
        }
    }

    /// Several mutually equivalent statements.
    pub fn all_equal(&mut self, instance: impl FnOnce() -> String, sides: Vec<Side>) -> Result<()> {
        self.tested += 1;
        let any = sides.iter().any(|s| s.holds);
        if any {
            self.non_vacuous += 1;
        }
        if sides.iter().all(|s| s.holds == any) {
            return Ok(());
        }
        let (hyp, concl) = sides.into_iter().partition(|s| s.holds);
        self.fail(instance, hyp, concl)
    }

    /// A claim about a fixed object.
    pub fn claim(&mut self, instance: impl FnOnce() -> String, side: Side) -> Result<()> {
        self.tested += 1;
        self.non_vacuous += 1;
        if side.holds {
            return Ok(());
        }
        self.fail(instance, vec![], vec![side])
    }

    /// One candidate for an existence claim; never a failure.
    pub fn example(&mut self, instance: impl FnOnce() -> String, found: Side) -> Result<()> {
        self.tested += 1;
        if !found.holds {
            return Ok(());
        }
        self.non_vacuous += 1;
        if self.example.is_none() {
            self.example = Some(Evidence {
                instance: instance(),
                hypothesis: found.into_facts()?,
                conclusion: Vec::new(),
            });
        }
        Ok(())
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn status(&self) -> Status {
        if self.failures > 0 {
            Status::Falsified
        } else if self.non_vacuous == 0 {
            Status::Vacuous
        } else {
            Status::Verified
        }
    }
}

/// One catalogue entry.
pub struct Theorem {
    pub id: &'static str,
    /// Short statement of what is checked.
    pub statement: &'static str,
    pub kind: Kind,
    run: fn(&Corpus, &mut Tally) -> Result<()>,
}

impl Theorem {
    pub fn run(&self, corpus: &Corpus) -> Result<TheoremReport> {
        let start = Instant::now();
        let mut t = Tally::default();
        (self.run)(corpus, &mut t)?;
        if t.forward > 0 || t.backward > 0 {
            let n = format!(
                "forward direction fails on {} instances, reverse on {}",
                t.forward, t.backward
            );
            t.notes.insert(0, n);
        }
        Ok(TheoremReport {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            kind: self.kind,
            status: t.status(),
            tested: t.tested,
            non_vacuous: t.non_vacuous,
            failures: t.failures,
            counterexample: t.counterexample,
            example: t.example,
            notes: t.notes,
            elapsed_ms: Some(start.elapsed().as_millis() as u64),
        })
    }
}

pub fn registry() -> &'static [Theorem] {
    registry::REGISTRY
}

/// Entries matching `id` exactly, or all entries of the group `id`
/// (`thm4` selects `thm4i`, `thm4ii`, `thm4iii`; `prop1` does not select `prop10`).
pub fn select(id: &str) -> Result<Vec<&'static Theorem>> {
    let exact: Vec<_> = registry().iter().filter(|t| t.id == id).collect();
    if !exact.is_empty() {
        return Ok(exact);
    }
    let group: Vec<_> = registry()
        .iter()
        .filter(|t| {
            t.id.strip_prefix(id)
                .and_then(|rest| rest.chars().next())
                .is_some_and(|c| !c.is_ascii_digit())
        })
        .collect();
    if group.is_empty() || id.is_empty() {
        return Err(Error::UnknownTheorem(id.to_string()));
    }
    Ok(group)
}

pub fn run_theorem(id: &str, corpus: &Corpus) -> Result<TheoremReport> {
    registry()
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))?
        .run(corpus)
}

/// Runs `theorems` concurrently; reports come back in the given order.
pub fn run_many(theorems: &[&Theorem], corpus: &Corpus) -> Result<Vec<TheoremReport>> {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(theorems.len().max(1));
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<TheoremReport>>>> =
        Mutex::new((0..theorems.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= theorems.len() {
                    break;
                }
                let r = theorems[i].run(corpus);
                results.lock().expect("poisoned")[i] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .expect("poisoned")
        .into_iter()
        .map(|r| r.expect("every theorem ran"))
        .collect()
}

pub fn run_all(corpus: &Corpus) -> Result<Vec<TheoremReport>> {
    let all: Vec<&Theorem> = registry().iter().collect();
    run_many(&all, corpus)
}

/// Finite analogue of the valuation-domain statement on rings whose graded
/// ideals form a chain.
pub fn probe_chain_rings(corpus: &Corpus) -> Result<TheoremReport> {
    run_theorem("thm7_exploratory", corpus)
}

/// `P ⊆ Grad(P)`, idempotence, intersections and products of radicals, on
/// every graded ideal of the corpus.
pub fn radical_laws(corpus: &Corpus) -> Result<Vec<TheoremReport>> {
    let laws: Vec<&Theorem> = registry::LAWS.iter().collect();
    run_many(&laws, corpus)
}

/// The machine-readable run document.
#[derive(Debug, Serialize)]
pub struct RunDocument {
    pub corpus: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub instances: usize,
    pub summary: Summary,
    pub reports: Vec<TheoremReport>,
}

#[derive(Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub falsified: usize,
    pub vacuous: usize,
}

impl Summary {
    pub fn of(reports: &[TheoremReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Verified => s.verified += 1,
                Status::Falsified => s.falsified += 1,
                Status::Vacuous => s.vacuous += 1,
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection() {
        let ids = |q: &str| select(q).unwrap().iter().map(|t| t.id).collect::<Vec<_>>();
        assert_eq!(ids("thm4"), ["thm4i", "thm4ii", "thm4iii"]);
        assert_eq!(ids("prop1"), ["prop1"]);
        assert_eq!(ids("prop9"), ["prop9_literal", "prop9_corrected"]);
        assert_eq!(ids("prop2"), ["prop2"]);
        assert!(matches!(select("prop99"), Err(Error::UnknownTheorem(_))));
        assert!(select("").is_err());
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|t| t.id).collect();
        ids.extend(registry::LAWS.iter().map(|t| t.id));
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn empty_corpus_is_vacuous() {
        let c = Corpus::build(CorpusSize::Empty).unwrap();
        let r = run_theorem("prop2", &c).unwrap();
        assert_eq!((r.status, r.tested), (Status::Vacuous, 0));
    }

    #[test]
    fn side_combinators() {
        let t = || Side::lazy(true, || Ok(vec![Fact::Witness { statement: "t".into(), holds: true }]));
        let f = || Side::lazy(false, || Ok(vec![Fact::Witness { statement: "f".into(), holds: false }]));
        assert_eq!(Side::all(vec![t(), f(), f()]).into_facts().unwrap().len(), 1);
        assert_eq!(Side::all(vec![t(), t()]).into_facts().unwrap().len(), 2);
        assert_eq!(Side::any(vec![f(), t(), t()]).into_facts().unwrap().len(), 1);
        assert_eq!(Side::any(vec![f(), f()]).into_facts().unwrap().len(), 2);
        assert!(!Side::any(vec![]).holds);
        assert!(f().not().holds);
    }
}
