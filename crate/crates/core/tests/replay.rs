//! Every certificate and every piece of emitted evidence replays through the
//! public API.

use graded_ideals::classify::{self, Property};
use graded_ideals::theorems::corpus::{Corpus, CorpusSize};
use graded_ideals::theorems::facts::Fact;
use graded_ideals::theorems::run_all;

fn replay_corpus(size: CorpusSize, lattice: bool) -> usize {
    let corpus = Corpus::build(size).unwrap();
    let mut count = 0;
    for i in corpus.instances() {
        let (e, s) = (corpus.entry(i), corpus.set(i));
        let p = e.ideal(i.ideal);
        for property in Property::ALL.into_iter().filter(|q| q.uses_lattice() == lattice) {
            let grades: Vec<_> = if !property.per_grade() {
                vec![None]
            } else if s.in_identity_component() {
                e.ring.grade_group().elements().map(Some).collect()
            } else {
                continue;
            };
            for g in grades {
                let cert = classify::check(p, property, Some(s), g).unwrap();
                assert!(
                    classify::replay(&cert, p, s).unwrap(),
                    "{} {property} {g:?}: {}",
                    corpus.describe(i),
                    cert.summary(&e.ring)
                );
                count += 1;
            }
        }
    }
    count
}

#[test]
fn elementwise_certificates_replay_on_default_corpus() {
    assert!(replay_corpus(CorpusSize::Default, false) > 10_000);
}

#[test]
fn lattice_certificates_replay_on_small_corpus() {
    assert!(replay_corpus(CorpusSize::Small, true) > 100);
}

#[test]
fn tampered_certificates_are_rejected() {
    let corpus = Corpus::build(CorpusSize::Small).unwrap();
    let mut rejected = 0;
    for i in corpus.instances().into_iter().take(200) {
        let (e, s) = (corpus.entry(i), corpus.set(i));
        let p = e.ideal(i.ideal);
        let mut cert = classify::check(p, Property::GradedWeaklySPrimary, Some(s), None).unwrap();
        cert.verdict = !cert.verdict;
        if !classify::replay(&cert, p, s).unwrap() {
            rejected += 1;
        }
    }
    assert_eq!(rejected, 200);
}

#[test]
fn emitted_evidence_replays_after_serialization() {
    let corpus = Corpus::build(CorpusSize::Default).unwrap();
    let reports = run_all(&corpus).unwrap();
    let mut facts = 0;
    for r in &reports {
        assert_eq!(r.failures > 0, r.counterexample.is_some(), "{}", r.id);
        for f in r.counterexample.iter().chain(&r.example).flat_map(|e| e.facts()) {
            let json = serde_json::to_string(f).unwrap();
            let back: Fact = serde_json::from_str(&json).unwrap();
            assert!(back.replays().unwrap(), "{}: {json}", r.id);
            facts += 1;
        }
    }
    assert!(facts > 0);
}
