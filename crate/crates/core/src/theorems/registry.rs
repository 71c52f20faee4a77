//! The catalogue: one check per statement.

use std::collections::HashMap;
use std::sync::Arc;

use super::corpus::{describe, Corpus, Derived, Instance, RingEntry};
use super::facts::{Fact, IdealExpr};
use super::{Kind, Side, Tally, Theorem};
use crate::classify::{self, Property};
use crate::error::{Error, Result};
use crate::euclid::verify_witness_facts;
use crate::ideal::{maximal_disjoint_ideals, Ideal};
use crate::localization::{is_graded_domain, is_graded_field, Localization};
use crate::morphism::{product_projections, GradedHom};
use crate::mult_set::MultSet;
use crate::ring::{Elem, Grade, GradedRing};

use Property::*;

/// Idealwise checks are limited to rings with at most this many graded ideals.
const PAIR_LATTICE_CAP: usize = 64;
const TRIPLE_LATTICE_CAP: usize = 16;

macro_rules! theorem {
    ($id:literal, $kind:ident, $run:ident, $statement:literal) => {
        Theorem {
            id: $id,
            statement: $statement,
            kind: Kind::$kind,
            run: $run,
        }
    };
}

pub(super) static REGISTRY: &[Theorem] = &[
    theorem!("prop1", Literal, prop1, "S of units: graded weakly S-primary iff graded weakly primary"),
    theorem!("prop2", Literal, prop2, "graded weakly S-primary iff Grad(P) graded weakly S-prime"),
    theorem!("prop2_corrected", Corrected, prop2_corrected, "graded S-primary implies Grad(P) graded S-prime"),
    theorem!("thm1", Literal, thm1, "graded weakly S-primary implies S^-1 P graded weakly primary"),
    theorem!("lem1", Literal, lem1, "some s in S has Grad((P:s)) = Grad((P:s^n)) for all n"),
    theorem!("prop3", Literal, prop3, "graded weakly S-primary iff (P:s) graded weakly primary for some s"),
    theorem!("prop4", Literal, prop4, "S regular: graded weakly S-primary iff S^-1 P weakly primary and some (P:s) contains every (P:t)"),
    theorem!("thm2", Literal, thm2, "graded weakly S-primary iff S^-1 P weakly primary and its contraction is (P:s) for some s"),
    theorem!("rem1", Literal, rem1, "weakly S-primary with S^-1 P weakly primary does not force graded primary"),
    theorem!("thm3", Literal, thm3, "weakly S-primary, (P:s) weakly primary, and the localized condition agree"),
    theorem!("prop5", Literal, prop5, "graded weakly S-primary P and I meeting S: P n I graded weakly S-primary"),
    theorem!("rem2", Literal, rem2, "S1 in S2: graded weakly S1-primary implies graded weakly S2-primary"),
    theorem!("prop6", Literal, prop6, "S1 in S2 with S2 absorbed into S1: weakly S2-primary implies weakly S1-primary"),
    theorem!("prop7", Literal, prop7, "graded weakly S-primary iff graded weakly S*-primary"),
    theorem!("lem2", Literal, lem2, "weakly S-primary P1, P2: Grad(P1) n Grad(P2) = Grad(P1 n P2)"),
    theorem!("prop8", Literal, prop8, "weakly S-primary P1, P2 with equal radicals: P1 n P2 weakly S-primary"),
    theorem!("lem3", Literal, lem3, "Grad(P1 x P2) = Grad(P1) x Grad(P2)"),
    theorem!("thm4i", Literal, thm4i, "P1 weakly S1-primary iff P1 x R2 weakly (S1 x S2)-primary"),
    theorem!("thm4ii", Literal, thm4ii, "P2 weakly S2-primary iff R1 x P2 weakly (S1 x S2)-primary"),
    theorem!("thm4iii", Literal, thm4iii, "P1, P2 both weakly S-primary iff P1 x P2 weakly (S1 x S2)-primary"),
    theorem!("thm5", Literal, thm5, "P1 x P2 weakly S-primary iff one factor is whole and the other weakly S-primary, or both are"),
    theorem!("prop9_literal", Literal, prop9_literal, "graded weakly S-primary iff IJ in P forces sI in P or sJ in P"),
    theorem!("prop9_corrected", Corrected, prop9_corrected, "graded weakly S-primary iff 0 != IJ in P forces sI in P or sJ in Grad(P)"),
    theorem!("coro1", Literal, coro1, "graded weakly S-primary iff I1 I2 I3 in P forces some sIk in P"),
    theorem!("prop10i", Literal, prop10i, "epimorphism with kernel in P: f(P) graded weakly f(S)-primary"),
    theorem!("prop10ii", Literal, prop10ii, "monomorphism: preimage of a weakly f(S)-primary ideal is weakly S-primary"),
    theorem!("coro2i", Literal, coro2i, "I in P: P/I graded weakly S-primary in R/I"),
    theorem!("coro2ii", Literal, coro2ii, "S in R_e: P n R_e graded weakly S-primary in R_e"),
    theorem!("coro2iii", Literal, coro2iii, "I in P, I S-primary, P/I weakly S-primary: P graded S-primary"),
    theorem!("coro2iv", Literal, coro2iv, "I in P, I S-primary, P/I weakly S-primary: P graded weakly S-primary"),
    theorem!("prop11", Literal, prop11, "weakly S-primary I in P with P + I disjoint from S: P + I weakly S-primary"),
    theorem!("prop11_unrestricted", Exploratory, prop11_unrestricted, "weakly S-primary P, I with P + I disjoint from S: P + I weakly S-primary"),
    theorem!("lem4", Literal, lem4, "graded ideals maximal among those containing I and missing S exist and are graded primary"),
    theorem!("prop12", Literal, prop12, "{0} only weakly S-primary iff {0} only S-primary iff graded domain with S^-1 R a graded field"),
    theorem!("thm6", Literal, thm6, "every weakly S-primary is primary iff graded domain and every S-primary is primary"),
    theorem!("thm7_exploratory", Exploratory, thm7_exploratory, "graded ideals form a chain: every P missing S is graded weakly S-primary"),
    theorem!("lem5", Literal, lem5, "graded weakly S-primary implies g-weakly S-primary for every g"),
    theorem!("prop13", Literal, prop13, "g-weakly S-primary iff Grad(P) g-weakly S-prime"),
    theorem!("prop13_corrected", Corrected, prop13_corrected, "g-S-primary implies Grad(P) g-S-prime"),
    theorem!("prop14", Literal, prop14, "g-weakly S-primary P and I meeting S: P n I g-weakly S-primary"),
    theorem!("rem3", Literal, rem3, "S1 in S2 in R_e: g-weakly S1-primary implies g-weakly S2-primary"),
    theorem!("prop15", Literal, prop15, "S1 in S2 in R_e, S2 absorbed into S1: g-weakly S2-primary implies g-weakly S1-primary"),
    theorem!("prop16", Literal, prop16, "g-weakly S-primary iff g-weakly (S* n R_e)-primary"),
    theorem!("prop17", Literal, prop17, "g-weakly S-primary P1, P2 with equal radicals: P1 n P2 g-weakly S-primary"),
    theorem!("prop18", Literal, prop18, "g-weakly S-primary but not g-S-primary: P_g P_g = 0"),
    theorem!("coro3", Literal, coro3, "g-weakly primary but not g-primary: P_g P_g = 0"),
    theorem!("coro4", Literal, coro4, "g-weakly S-primary but not g-S-primary: P_g in Grad(0)"),
    theorem!("thm8", Literal, thm8, "g-weakly S-primary iff the slice colon condition iff the slice ideal condition"),
    theorem!("thm8_corrected", Corrected, thm8_corrected, "g-weakly S-primary iff the slice conditions with Grad(P) in the second alternative"),
    theorem!("prop19", Literal, prop19, "e-weakly S-primary but not e-S-primary: s P_e Grad(0)_e = 0 for some s"),
    theorem!("coro5", Literal, coro5, "e-weakly primary but not e-primary: P_e in Grad(0) and P_e Grad(0)_e = 0"),
    theorem!("coro6", Literal, coro6, "P, I e-weakly S-primary but not e-S-primary: s P_e I_e = 0 for some s"),
    theorem!("thm9i", Literal, thm9i, "epimorphism with kernel in P: f(P) g-weakly f(S)-primary"),
    theorem!("thm9ii", Literal, thm9ii, "monomorphism: preimage of a g-weakly f(S)-primary ideal is g-weakly S-primary"),
    theorem!("thm10_exploratory", Exploratory, thm10_exploratory, "graded ideals form a chain: every P missing S is g-weakly S-primary"),
    theorem!("ex1", Literal, ex1, "(10) in Z[i] with S = 2^n: a nonzero product escapes the weakly S-primary condition"),
    theorem!("ex2", Literal, ex2, "Z_12[i], P = 0, S = {1,3,9}: weakly S-primary and not S-primary"),
    theorem!("ex3", Literal, ex3, "(9X) in Z[X]: not graded weakly primary"),
    theorem!("ex4", Literal, ex4, "Z_12[i], P = 0, S = {1,3,9}: (P:1) = P graded primary while 3 is a zero divisor"),
    theorem!("ex5", Literal, ex5, "Z_12[i], P = 0, S = {1,3,9}: g-weakly S-primary for all g and not 0-S-primary"),
    theorem!("ex6", Literal, ex6, "(9X) in Z[X]: not g-weakly primary"),
];

pub(super) static LAWS: &[Theorem] = &[
    theorem!("law_inclusion", Law, law_inclusion, "P in Grad(P)"),
    theorem!("law_idempotent", Law, law_idempotent, "Grad(Grad(P)) = Grad(P)"),
    theorem!("law_intersection", Law, law_intersection, "Grad(P n Q) = Grad(P) n Grad(Q)"),
    theorem!("law_product", Law, lem3, "Grad(P1 x P2) = Grad(P1) x Grad(P2)"),
];

fn of(e: &RingEntry, p: usize) -> IdealExpr {
    IdealExpr::of(e.ideal(p))
}

fn coords(ring: &GradedRing, x: Elem) -> Vec<i64> {
    ring.coords_i64(x)
}

fn grade_coords(ring: &GradedRing, g: Grade) -> Vec<i64> {
    ring.grade_group().residues(g).into_iter().map(i64::from).collect()
}

fn property_fact(
    ring: &GradedRing,
    ideal: IdealExpr,
    set: &MultSet,
    property: Property,
    grade: Option<Grade>,
    holds: bool,
) -> Fact {
    Fact::Property {
        ring: ring.spec().clone(),
        ideal,
        set: if property.uses_set() { set.generators_coords() } else { Vec::new() },
        property,
        grade: grade.map(|g| grade_coords(ring, g)),
        holds,
    }
}

fn prop_expr<'a>(
    e: &'a RingEntry,
    p: usize,
    set: &'a MultSet,
    property: Property,
    grade: Option<Grade>,
    expr: impl FnOnce() -> IdealExpr + 'a,
) -> Result<Side<'a>> {
    let holds = e.holds(p, set, property, grade)?;
    Ok(Side::lazy(holds, move || {
        Ok(vec![property_fact(&e.ring, expr(), set, property, grade, holds)])
    }))
}

fn prop<'a>(e: &'a RingEntry, p: usize, set: &'a MultSet, property: Property, grade: Option<Grade>) -> Result<Side<'a>> {
    prop_expr(e, p, set, property, grade, move || of(e, p))
}

fn ideal_eq(ring: &GradedRing, left: IdealExpr, right: IdealExpr, holds: bool) -> Fact {
    Fact::IdealEq {
        ring: ring.spec().clone(),
        left,
        right,
        holds,
    }
}

fn ideal_subset(ring: &GradedRing, left: IdealExpr, right: IdealExpr, holds: bool) -> Fact {
    Fact::IdealSubset {
        ring: ring.spec().clone(),
        left,
        right,
        holds,
    }
}

fn disjoint(ring: &GradedRing, ideal: IdealExpr, set: &MultSet, holds: bool) -> Fact {
    Fact::Disjoint {
        ring: ring.spec().clone(),
        ideal,
        set: set.generators_coords(),
        holds,
    }
}

/// A true statement certified by `fact`, whose recorded value may differ.
fn given<'a>(fact: impl FnOnce() -> Fact + 'a) -> Side<'a> {
    Side::lazy(true, move || Ok(vec![fact()]))
}

fn zero_expr() -> IdealExpr {
    IdealExpr::Gens { gens: Vec::new() }
}

fn whole_expr(ring: &GradedRing) -> IdealExpr {
    IdealExpr::Gens {
        gens: vec![coords(ring, ring.one())],
    }
}

fn disjoint_proper(e: &RingEntry, s: &MultSet) -> Vec<usize> {
    e.proper().filter(|&p| !e.ideal(p).meets(s.elements())).collect()
}

fn describe_two(e: &RingEntry, a: usize, b: usize, s: &MultSet) -> String {
    format!(
        "{} | P={} | I={} | S={}",
        e.name(),
        e.ideal(a),
        e.ideal(b),
        e.ring.format_set(s.elements())
    )
}

fn with_grade(e: &RingEntry, text: String, g: Grade) -> String {
    format!("{text} | g={}", e.ring.grade_group().format(g))
}

/// Instances with `S ⊆ R_e`, one per grade.
fn graded_instances(c: &Corpus) -> Vec<(Instance, Grade)> {
    let mut out = Vec::new();
    for i in c.instances() {
        if c.set(i).in_identity_component() {
            for g in c.entry(i).ring.grade_group().elements() {
                out.push((i, g));
            }
        }
    }
    out
}

/// Every instance with no grade, or the graded instances with theirs.
fn cases(c: &Corpus, graded: bool) -> Vec<(Instance, Option<Grade>)> {
    if graded {
        graded_instances(c).into_iter().map(|(i, g)| (i, Some(g))).collect()
    } else {
        c.instances().into_iter().map(|i| (i, None)).collect()
    }
}

fn identity(e: &RingEntry) -> Grade {
    e.ring.grade_group().identity()
}

fn weakly_s_primary(grade: Option<Grade>) -> Property {
    if grade.is_some() {
        GWeaklySPrimary
    } else {
        GradedWeaklySPrimary
    }
}

fn prop1(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        if !s.all_units() {
            continue;
        }
        t.equivalence(
            || c.describe(i),
            prop(e, i.ideal, s, GradedWeaklySPrimary, None)?,
            prop(e, i.ideal, e.unit_set(), GradedWeaklyPrimary, None)?,
        )?;
    }
    Ok(())
}

fn radical_form(c: &Corpus, t: &mut Tally, graded: bool, weakly: bool) -> Result<()> {
    let (from, to) = match (graded, weakly) {
        (false, true) => (GradedWeaklySPrimary, GradedWeaklySPrime),
        (false, false) => (GradedSPrimary, GradedSPrime),
        (true, true) => (GWeaklySPrimary, GWeaklySPrime),
        (true, false) => (GSPrimary, GSPrime),
    };
    for (i, g) in cases(c, graded) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let r = e.radical(p);
        let left = prop(e, p, s, from, g)?;
        let right = prop_expr(e, r, s, to, g, move || of(e, p).radical())?;
        let desc = || match g {
            Some(g) => with_grade(e, c.describe(i), g),
            None => c.describe(i),
        };
        if weakly {
            t.equivalence(desc, left, right)?;
        } else {
            t.implication(desc, left, right)?;
        }
    }
    Ok(())
}

fn prop2(c: &Corpus, t: &mut Tally) -> Result<()> {
    radical_form(c, t, false, true)
}

fn prop2_corrected(c: &Corpus, t: &mut Tally) -> Result<()> {
    radical_form(c, t, false, false)
}

/// `S⁻¹P` graded weakly primary in `S⁻¹R`.
fn localized_side<'a>(d: &'a (RingEntry, Localization), p: &Ideal) -> Result<Side<'a>> {
    let (le, loc) = (&d.0, &d.1);
    let q = le.index(&loc.extend(p));
    prop(le, q, le.unit_set(), GradedWeaklyPrimary, None)
}

fn thm1(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        let hyp = prop(e, i.ideal, s, GradedWeaklySPrimary, None)?;
        if !hyp.holds {
            t.skip();
            continue;
        }
        let d = c.localization(i.ring, s);
        t.implication(|| c.describe(i), hyp, localized_side(&d, e.ideal(i.ideal))?)?;
    }
    Ok(())
}

/// Powers `s^n`, `n ≥ 1`, whose colon radical differs from that of `s`.
fn unstable_powers(e: &RingEntry, p: usize, s: Elem, bound: usize) -> Vec<Elem> {
    let ideal = e.ideal(p);
    let base = ideal.colon(s).grad_radical();
    let mut bad = Vec::new();
    let mut power = s;
    for _ in 0..bound {
        if ideal.colon(power).grad_radical() != base {
            bad.push(power);
        }
        power = e.ring.mul(power, s);
    }
    bad
}

fn lem1(c: &Corpus, t: &mut Tally) -> Result<()> {
    let mut first_unstable = 0;
    for i in c.instances() {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let cert = e.cert(p, s, GradedWeaklySPrimary, None)?;
        let w = match cert.witness {
            Some(w) if cert.verdict => w,
            _ => {
                t.skip();
                continue;
            }
        };
        // powers of an element of S take at most |S| values
        let bound = s.len() + 1;
        first_unstable += usize::from(!unstable_powers(e, p, w, bound).is_empty());
        let mut chosen = (w, unstable_powers(e, p, w, bound));
        let mut power = w;
        for _ in 0..bound {
            let bad = unstable_powers(e, p, power, bound);
            if bad.is_empty() {
                chosen = (power, bad);
                break;
            }
            power = e.ring.mul(power, w);
        }
        let (x, bad) = chosen;
        let ring = &e.ring;
        let concl = Side::lazy(bad.is_empty(), move || {
            let fact = |y: Elem, holds: bool| {
                ideal_eq(
                    ring,
                    of(e, p).colon(coords(ring, x)).radical(),
                    of(e, p).colon(coords(ring, y)).radical(),
                    holds,
                )
            };
            Ok(if bad.is_empty() {
                let mut out = Vec::new();
                let mut y = x;
                for _ in 0..bound {
                    out.push(fact(y, true));
                    y = ring.mul(y, x);
                }
                out
            } else {
                bad.iter().map(|&y| fact(y, false)).collect()
            })
        });
        t.implication(|| c.describe(i), prop(e, p, s, GradedWeaklySPrimary, None)?, concl)?;
    }
    t.note(format!(
        "s is searched among the powers of the certificate witness; the witness itself fails for some n on {first_unstable} instances"
    ));
    Ok(())
}

/// Some `(P:s)`, `s ∈ S`, graded weakly primary.
fn colon_side<'a>(e: &'a RingEntry, p: usize, s: &'a MultSet) -> Result<Side<'a>> {
    let ideal = e.ideal(p);
    let mut parts = Vec::new();
    for &x in s.elements() {
        let q = e.index(&ideal.colon(x));
        parts.push(prop_expr(e, q, e.unit_set(), GradedWeaklyPrimary, None, move || {
            of(e, p).colon(coords(&e.ring, x))
        })?);
    }
    Ok(Side::any(parts))
}

fn prop3(c: &Corpus, t: &mut Tally) -> Result<()> {
    let (mut regular, mut zero_divisor) = (0, 0);
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        let before = t.failures;
        t.equivalence(
            || c.describe(i),
            prop(e, i.ideal, s, GradedWeaklySPrimary, None)?,
            colon_side(e, i.ideal, s)?,
        )?;
        if t.failures > before {
            if s.all_regular() {
                regular += 1;
            } else {
                zero_divisor += 1;
            }
        }
    }
    if regular + zero_divisor > 0 {
        t.note(format!(
            "failures with S regular: {regular}; with a zero divisor in S: {zero_divisor}"
        ));
    }
    Ok(())
}

/// Some `(P:s)` contains every `(P:t)`, `t ∈ S`.
fn colon_chain_side<'a>(e: &'a RingEntry, p: usize, s: &'a MultSet) -> Side<'a> {
    let ideal = e.ideal(p);
    let colons: Vec<Ideal> = s.elements().iter().map(|&x| ideal.colon(x)).collect();
    let ring = &e.ring;
    let fact = move |t0: Elem, s0: Elem, holds: bool| {
        ideal_subset(
            ring,
            of(e, p).colon(coords(ring, t0)),
            of(e, p).colon(coords(ring, s0)),
            holds,
        )
    };
    let parts = s
        .elements()
        .iter()
        .enumerate()
        .map(|(a, &s0)| {
            let bad = s
                .elements()
                .iter()
                .enumerate()
                .find(|&(b, _)| !colons[b].is_subset(&colons[a]))
                .map(|(_, &t0)| t0);
            Side::lazy(bad.is_none(), move || {
                Ok(match bad {
                    None => s.elements().iter().map(|&t0| fact(t0, s0, true)).collect(),
                    Some(t0) => vec![fact(t0, s0, false)],
                })
            })
        })
        .collect();
    Side::any(parts)
}

fn prop4(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        if !s.all_regular() {
            continue;
        }
        let d = c.localization(i.ring, s);
        let right = Side::all(vec![
            localized_side(&d, e.ideal(i.ideal))?,
            colon_chain_side(e, i.ideal, s),
        ]);
        t.equivalence(|| c.describe(i), prop(e, i.ideal, s, GradedWeaklySPrimary, None)?, right)?;
    }
    t.note("in a finite ring every regular element is a unit");
    Ok(())
}

/// The contraction of `S⁻¹P` equals `(P:s)` for some `s ∈ S`.
fn contraction_side<'a>(e: &'a RingEntry, p: usize, s: &'a MultSet, loc: &Localization) -> Side<'a> {
    let ideal = e.ideal(p);
    let k = loc.contract(&loc.extend(ideal));
    let parts = s
        .elements()
        .iter()
        .map(|&x| {
            let holds = ideal.colon(x) == k;
            Side::lazy(holds, move || {
                Ok(vec![ideal_eq(
                    &e.ring,
                    of(e, p).contraction(s.generators_coords()),
                    of(e, p).colon(coords(&e.ring, x)),
                    holds,
                )])
            })
        })
        .collect();
    Side::any(parts)
}

fn localized_form<'a>(c: &Corpus, d: &'a (RingEntry, Localization), i: Instance, e: &'a RingEntry, s: &'a MultSet) -> Result<Side<'a>> {
    let _ = c;
    Ok(Side::all(vec![
        localized_side(d, e.ideal(i.ideal))?,
        contraction_side(e, i.ideal, s, &d.1),
    ]))
}

fn thm2(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        let d = c.localization(i.ring, s);
        t.equivalence(
            || c.describe(i),
            prop(e, i.ideal, s, GradedWeaklySPrimary, None)?,
            localized_form(c, &d, i, e, s)?,
        )?;
    }
    t.note("S^-1 P = (P:s) read as: the contraction of S^-1 P to R equals (P:s)");
    Ok(())
}

fn thm3(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        let d = c.localization(i.ring, s);
        t.all_equal(
            || c.describe(i),
            vec![
                prop(e, i.ideal, s, GradedWeaklySPrimary, None)?,
                colon_side(e, i.ideal, s)?,
                localized_form(c, &d, i, e, s)?,
            ],
        )?;
    }
    Ok(())
}

fn witness_claims(t: &mut Tally, statements: &[&str]) -> Result<()> {
    let table = verify_witness_facts();
    for &statement in statements {
        let row = table
            .iter()
            .find(|f| f.statement == statement)
            .ok_or_else(|| Error::Precondition(format!("no witness fact `{statement}`")))?;
        t.claim(
            || statement.to_string(),
            Side::fact(Fact::Witness {
                statement: statement.to_string(),
                holds: row.holds,
            }),
        )?;
    }
    Ok(())
}

fn rem1(c: &Corpus, t: &mut Tally) -> Result<()> {
    witness_claims(t, &["0 != 18X in (9X)", "18 not in (9X)", "X not in Grad((9X))"])?;
    let mut found = 0;
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        let weakly = prop(e, i.ideal, s, GradedWeaklySPrimary, None)?;
        let primary = prop(e, i.ideal, e.unit_set(), GradedPrimary, None)?;
        if !weakly.holds || primary.holds {
            continue;
        }
        let d = c.localization(i.ring, s);
        let side = Side::all(vec![weakly, localized_side(&d, e.ideal(i.ideal))?, primary.not()]);
        found += usize::from(side.holds);
        t.example(|| c.describe(i), side)?;
    }
    t.note(format!("finite instances exhibiting the gap: {found}"));
    Ok(())
}

fn intersect_with_meeting(c: &Corpus, t: &mut Tally, graded: bool) -> Result<()> {
    for (i, g) in cases(c, graded) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let property = weakly_s_primary(g);
        let hyp_holds = e.holds(p, s, property, g)?;
        for j in 0..e.lattice.len() {
            if !e.ideal(j).meets(s.elements()) {
                continue;
            }
            if !hyp_holds {
                t.skip();
                continue;
            }
            let k = e.intersect(p, j);
            let hyp = Side::all(vec![
                prop(e, p, s, property, g)?,
                given(move || disjoint(&e.ring, of(e, j), s, false)),
            ]);
            let concl = prop_expr(e, k, s, property, g, move || of(e, p).intersect(of(e, j)))?;
            let desc = || {
                let d = describe_two(e, p, j, s);
                match g {
                    Some(g) => with_grade(e, d, g),
                    None => d,
                }
            };
            t.implication(desc, hyp, concl)?;
        }
    }
    Ok(())
}

fn prop5(c: &Corpus, t: &mut Tally) -> Result<()> {
    intersect_with_meeting(c, t, false)
}

/// `(small, large)` index pairs with `small ⊊ large`.
fn set_pairs(sets: &[MultSet]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, small) in sets.iter().enumerate() {
        for (b, large) in sets.iter().enumerate() {
            if a != b && small.is_subset(large) {
                out.push((a, b));
            }
        }
    }
    out
}

fn absorbs(ring: &GradedRing, small: &MultSet, large: &MultSet) -> bool {
    large
        .elements()
        .iter()
        .all(|&s| large.elements().iter().any(|&t| small.contains(ring.mul(s, t))))
}

/// Widening and narrowing the set; `absorbing` selects the narrowing form.
fn set_change(c: &Corpus, t: &mut Tally, graded: bool, absorbing: bool) -> Result<()> {
    let mut converse = 0;
    for e in &c.entries {
        let sets: Vec<MultSet> = e
            .sets
            .iter()
            .filter(|s| !graded || s.in_identity_component())
            .cloned()
            .collect();
        let grades: Vec<Option<Grade>> = if graded {
            e.ring.grade_group().elements().map(Some).collect()
        } else {
            vec![None]
        };
        for (a, b) in set_pairs(&sets) {
            let (small, large) = (&sets[a], &sets[b]);
            let absorbed = absorbs(&e.ring, small, large);
            for p in disjoint_proper(e, large) {
                for &g in &grades {
                    let property = weakly_s_primary(g);
                    let subset = given(move || Fact::SetSubset {
                        ring: e.ring.spec().clone(),
                        left: small.generators_coords(),
                        right: large.generators_coords(),
                        holds: true,
                    });
                    let desc = || {
                        let d = format!(
                            "{} | P={} | S1={} | S2={}",
                            e.name(),
                            e.ideal(p),
                            e.ring.format_set(small.elements()),
                            e.ring.format_set(large.elements())
                        );
                        match g {
                            Some(g) => with_grade(e, d, g),
                            None => d,
                        }
                    };
                    let on_small = prop(e, p, small, property, g)?;
                    let on_large = prop(e, p, large, property, g)?;
                    if absorbing {
                        let absorb = Side::lazy(absorbed, move || {
                            Ok(vec![Fact::SetAbsorbs {
                                ring: e.ring.spec().clone(),
                                small: small.generators_coords(),
                                large: large.generators_coords(),
                                holds: absorbed,
                            }])
                        });
                        t.implication(desc, Side::all(vec![subset, absorb, on_large]), on_small)?;
                    } else {
                        converse += usize::from(on_large.holds && !on_small.holds);
                        t.implication(desc, Side::all(vec![subset, on_small]), on_large)?;
                    }
                }
            }
        }
    }
    if !absorbing {
        t.note(format!("the converse fails on {converse} instances"));
    }
    Ok(())
}

fn rem2(c: &Corpus, t: &mut Tally) -> Result<()> {
    set_change(c, t, false, false)
}

fn prop6(c: &Corpus, t: &mut Tally) -> Result<()> {
    set_change(c, t, false, true)
}

fn saturation_form(c: &Corpus, t: &mut Tally, graded: bool) -> Result<()> {
    for (i, g) in cases(c, graded) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let star = s.saturation_star();
        let star = if graded {
            let id = identity(e);
            let part: Vec<Elem> = star
                .elements()
                .iter()
                .copied()
                .filter(|&x| e.ring.in_component(x, id))
                .collect();
            MultSet::from_elements(&e.ring, &part)?
        } else {
            star
        };
        if e.ideal(p).meets(star.elements()) {
            return Err(Error::Precondition(format!("saturation meets P in {}", c.describe(i))));
        }
        let property = weakly_s_primary(g);
        let desc = || {
            let d = format!("{} | S*={}", c.describe(i), e.ring.format_set(star.elements()));
            match g {
                Some(g) => with_grade(e, d, g),
                None => d,
            }
        };
        t.equivalence(desc, prop(e, p, s, property, g)?, prop(e, p, &star, property, g)?)?;
    }
    Ok(())
}

fn prop7(c: &Corpus, t: &mut Tally) -> Result<()> {
    saturation_form(c, t, false)
}

/// Pairs `a < b` of proper graded ideals disjoint from a corpus set.
fn ideal_pairs(c: &Corpus, graded: bool, mut f: impl FnMut(&RingEntry, &MultSet, usize, usize, Option<Grade>) -> Result<()>) -> Result<()> {
    for e in &c.entries {
        for s in &e.sets {
            if graded && !s.in_identity_component() {
                continue;
            }
            let ps = disjoint_proper(e, s);
            let grades: Vec<Option<Grade>> = if graded {
                e.ring.grade_group().elements().map(Some).collect()
            } else {
                vec![None]
            };
            for (n, &a) in ps.iter().enumerate() {
                for &b in &ps[n + 1..] {
                    for &g in &grades {
                        f(e, s, a, b, g)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn pair_desc(e: &RingEntry, s: &MultSet, a: usize, b: usize, g: Option<Grade>) -> String {
    let d = format!(
        "{} | P1={} | P2={} | S={}",
        e.name(),
        e.ideal(a),
        e.ideal(b),
        e.ring.format_set(s.elements())
    );
    match g {
        Some(g) => with_grade(e, d, g),
        None => d,
    }
}

fn lem2(c: &Corpus, t: &mut Tally) -> Result<()> {
    ideal_pairs(c, false, |e, s, a, b, _| {
        let hyp = Side::all(vec![
            prop(e, a, s, GradedWeaklySPrimary, None)?,
            prop(e, b, s, GradedWeaklySPrimary, None)?,
        ]);
        let holds = e.intersect(e.radical(a), e.radical(b)) == e.radical(e.intersect(a, b));
        let concl = Side::lazy(holds, move || {
            Ok(vec![ideal_eq(
                &e.ring,
                of(e, a).radical().intersect(of(e, b).radical()),
                of(e, a).intersect(of(e, b)).radical(),
                holds,
            )])
        });
        t.implication(|| pair_desc(e, s, a, b, None), hyp, concl)
    })
}

fn equal_radical_intersection(c: &Corpus, t: &mut Tally, graded: bool) -> Result<()> {
    ideal_pairs(c, graded, |e, s, a, b, g| {
        let property = weakly_s_primary(g);
        let same = e.radical(a) == e.radical(b);
        let same_side = Side::lazy(same, move || {
            Ok(vec![ideal_eq(&e.ring, of(e, a).radical(), of(e, b).radical(), same)])
        });
        if !same {
            t.skip();
            return Ok(());
        }
        let hyp = Side::all(vec![prop(e, a, s, property, g)?, prop(e, b, s, property, g)?, same_side]);
        let k = e.intersect(a, b);
        let concl = prop_expr(e, k, s, property, g, move || of(e, a).intersect(of(e, b)))?;
        t.implication(|| pair_desc(e, s, a, b, g), hyp, concl)
    })
}

fn prop8(c: &Corpus, t: &mut Tally) -> Result<()> {
    equal_radical_intersection(c, t, false)
}

/// `P1 × P2` inside `R1 × R2`.
fn product_ideal(ring: &Arc<GradedRing>, left: &Ideal, right: &Ideal) -> Result<Ideal> {
    let mut gens = Vec::new();
    for &a in left.generators() {
        gens.push(ring.pair(a, Elem::ZERO).ok_or(Error::MismatchedRings)?);
    }
    for &b in right.generators() {
        gens.push(ring.pair(Elem::ZERO, b).ok_or(Error::MismatchedRings)?);
    }
    Ideal::generated(ring, &gens)
}

fn factor_entries<'a>(c: &'a Corpus, e: &RingEntry) -> Result<Option<(&'a RingEntry, &'a RingEntry)>> {
    let Some((l, r)) = e.ring.factors() else {
        return Ok(None);
    };
    let find = |ring: &GradedRing| {
        c.entry_of(ring)
            .ok_or_else(|| Error::Precondition(format!("factor {} of {} is not in the corpus", ring.name(), e.name())))
    };
    Ok(Some((find(l)?, find(r)?)))
}

fn lem3(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.entries {
        let Some((le, re)) = factor_entries(c, e)? else {
            continue;
        };
        for a in le.lattice.ideals() {
            for b in re.lattice.ideals() {
                let whole = product_ideal(&e.ring, a, b)?;
                let parts = product_ideal(&e.ring, &a.grad_radical(), &b.grad_radical())?;
                let holds = whole.grad_radical() == parts;
                let ring = &e.ring;
                t.claim(
                    || format!("{} | P1={} | P2={}", e.name(), a, b),
                    Side::lazy(holds, move || {
                        Ok(vec![ideal_eq(ring, IdealExpr::of(&whole).radical(), IdealExpr::of(&parts), holds)])
                    }),
                )?;
            }
        }
    }
    Ok(())
}

/// A product ring with its factors and the product sets `S1 × S2` that are
/// homogeneous, for singly generated factor sets.
struct ProductCase<'a> {
    e: &'a RingEntry,
    left: &'a RingEntry,
    right: &'a RingEntry,
    sets: Vec<(&'a MultSet, &'a MultSet, MultSet)>,
}

fn product_cases(c: &Corpus) -> Result<Vec<ProductCase<'_>>> {
    let mut out = Vec::new();
    for e in &c.entries {
        let Some((left, right)) = factor_entries(c, e)? else {
            continue;
        };
        let mut sets = Vec::new();
        for a in left.sets.iter().filter(|s| s.generators().len() <= 1) {
            for b in right.sets.iter().filter(|s| s.generators().len() <= 1) {
                let mut elems = Vec::new();
                for &x in a.elements() {
                    for &y in b.elements() {
                        elems.push(e.ring.pair(x, y).ok_or(Error::MismatchedRings)?);
                    }
                }
                if let Ok(s) = MultSet::from_elements(&e.ring, &elems) {
                    sets.push((a, b, s));
                }
            }
        }
        out.push(ProductCase { e, left, right, sets });
    }
    Ok(out)
}

fn product_desc(pc: &ProductCase, p1: &Ideal, p2: &Ideal, s1: &MultSet, s2: &MultSet) -> String {
    format!(
        "{} | P1={} | P2={} | S1={} | S2={}",
        pc.e.name(),
        p1,
        p2,
        pc.left.ring.format_set(s1.elements()),
        pc.right.ring.format_set(s2.elements())
    )
}

/// `P_i` weakly `S_i`-primary, or false with a fact recording `P_i = R_i`.
fn factor_side<'a>(f: &'a RingEntry, p: usize, s: &'a MultSet) -> Result<Side<'a>> {
    if f.ideal(p).is_proper() {
        prop(f, p, s, GradedWeaklySPrimary, None)
    } else {
        Ok(Side::lazy(false, move || {
            Ok(vec![ideal_eq(&f.ring, of(f, p), whole_expr(&f.ring), true)])
        }))
    }
}

fn whole_side(f: &RingEntry, p: usize) -> Side<'_> {
    let holds = f.ideal(p).is_whole();
    Side::lazy(holds, move || Ok(vec![ideal_eq(&f.ring, of(f, p), whole_expr(&f.ring), holds)]))
}

/// Which factors may be whole: `(left, right)`.
fn product_form(c: &Corpus, t: &mut Tally, left_whole: bool, right_whole: bool, both_proper: bool) -> Result<()> {
    for pc in product_cases(c)? {
        let (e, l, r) = (pc.e, pc.left, pc.right);
        for (s1, s2, s) in &pc.sets {
            for a in 0..l.lattice.len() {
                let pa = l.ideal(a);
                if (pa.is_whole() && !left_whole) || (pa.is_proper() && pa.meets(s1.elements())) {
                    continue;
                }
                for b in 0..r.lattice.len() {
                    let pb = r.ideal(b);
                    if (pb.is_whole() && !right_whole) || (pb.is_proper() && pb.meets(s2.elements())) {
                        continue;
                    }
                    if pa.is_whole() && pb.is_whole() {
                        continue;
                    }
                    if both_proper && (pa.is_whole() || pb.is_whole()) {
                        continue;
                    }
                    if !both_proper && left_whole == right_whole && !(pa.is_whole() || pb.is_whole() || left_whole) {
                        continue;
                    }
                    let q = e.index(&product_ideal(&e.ring, pa, pb)?);
                    let whole = prop(e, q, s, GradedWeaklySPrimary, None)?;
                    let desc = || product_desc(&pc, pa, pb, s1, s2);
                    let factors = if left_whole && right_whole {
                        Side::any(vec![
                            Side::all(vec![whole_side(l, a), factor_side(r, b, s2)?]),
                            Side::all(vec![whole_side(r, b), factor_side(l, a, s1)?]),
                            Side::all(vec![factor_side(l, a, s1)?, factor_side(r, b, s2)?]),
                        ])
                    } else if right_whole {
                        factor_side(l, a, s1)?
                    } else if left_whole {
                        factor_side(r, b, s2)?
                    } else {
                        Side::all(vec![factor_side(l, a, s1)?, factor_side(r, b, s2)?])
                    };
                    t.equivalence(desc, factors, whole)?;
                }
            }
        }
    }
    Ok(())
}

fn thm4i(c: &Corpus, t: &mut Tally) -> Result<()> {
    for pc in product_cases(c)? {
        let (e, l, r) = (pc.e, pc.left, pc.right);
        let top = r.lattice.len() - 1;
        for (s1, s2, s) in &pc.sets {
            for a in disjoint_proper(l, s1) {
                let q = e.index(&product_ideal(&e.ring, l.ideal(a), r.ideal(top))?);
                t.equivalence(
                    || product_desc(&pc, l.ideal(a), r.ideal(top), s1, s2),
                    prop(l, a, s1, GradedWeaklySPrimary, None)?,
                    prop(e, q, s, GradedWeaklySPrimary, None)?,
                )?;
            }
        }
    }
    Ok(())
}

fn thm4ii(c: &Corpus, t: &mut Tally) -> Result<()> {
    for pc in product_cases(c)? {
        let (e, l, r) = (pc.e, pc.left, pc.right);
        let top = l.lattice.len() - 1;
        for (s1, s2, s) in &pc.sets {
            for b in disjoint_proper(r, s2) {
                let q = e.index(&product_ideal(&e.ring, l.ideal(top), r.ideal(b))?);
                t.equivalence(
                    || product_desc(&pc, l.ideal(top), r.ideal(b), s1, s2),
                    prop(r, b, s2, GradedWeaklySPrimary, None)?,
                    prop(e, q, s, GradedWeaklySPrimary, None)?,
                )?;
            }
        }
    }
    Ok(())
}

fn thm4iii(c: &Corpus, t: &mut Tally) -> Result<()> {
    product_form(c, t, false, false, true)
}

fn thm5(c: &Corpus, t: &mut Tally) -> Result<()> {
    product_form(c, t, true, true, false)?;
    t.note("factors equal to the whole ring are allowed when the product stays proper");
    Ok(())
}

fn idealwise(c: &Corpus, t: &mut Tally, property: Property, cap: usize) -> Result<()> {
    let mut skipped = Vec::new();
    for i in c.instances() {
        let (e, s) = (c.entry(i), c.set(i));
        if e.lattice.len() > cap {
            if !skipped.contains(&e.name()) {
                skipped.push(e.name());
            }
            continue;
        }
        t.equivalence(
            || c.describe(i),
            prop(e, i.ideal, s, GradedWeaklySPrimary, None)?,
            prop(e, i.ideal, s, property, None)?,
        )?;
    }
    if !skipped.is_empty() {
        t.note(format!(
            "rings with more than {cap} graded ideals skipped: {}",
            skipped.join(", ")
        ));
    }
    Ok(())
}

fn prop9_literal(c: &Corpus, t: &mut Tally) -> Result<()> {
    idealwise(c, t, IdealPairsLiteral, PAIR_LATTICE_CAP)
}

fn prop9_corrected(c: &Corpus, t: &mut Tally) -> Result<()> {
    idealwise(c, t, IdealPairsCorrected, PAIR_LATTICE_CAP)
}

fn coro1(c: &Corpus, t: &mut Tally) -> Result<()> {
    idealwise(c, t, IdealTriplesLiteral, TRIPLE_LATTICE_CAP)?;
    t.note("checked for n = 3");
    Ok(())
}

/// `f(P)` under an epimorphism whose kernel lies in `P`.
#[allow(clippy::too_many_arguments)]
fn epi_case(
    t: &mut Tally,
    desc: impl FnOnce() -> String,
    e: &RingEntry,
    p: usize,
    s: &MultSet,
    grade: Option<Grade>,
    target: &RingEntry,
    map: &GradedHom,
) -> Result<()> {
    let property = weakly_s_primary(grade);
    let hyp = prop(e, p, s, property, grade)?;
    if !hyp.holds {
        t.skip();
        return Ok(());
    }
    let fs = map.image_set(s)?;
    let q = target.index(&map.image_ideal(e.ideal(p)));
    let kernel = map.kernel().clone();
    let hyp = Side::all(vec![
        hyp,
        given(move || ideal_subset(&e.ring, IdealExpr::of(&kernel), of(e, p), true)),
    ]);
    t.implication(desc, hyp, prop(target, q, &fs, property, grade)?)?;
    Ok(())
}

fn epimorphisms(c: &Corpus, t: &mut Tally, graded: bool, projections: bool) -> Result<()> {
    let mut proj: HashMap<usize, Option<(GradedHom, GradedHom)>> = HashMap::new();
    for (i, g) in cases(c, graded) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let ideal = e.ideal(p);
        let label = |extra: String| {
            let d = format!("{} | {extra}", c.describe(i));
            match g {
                Some(g) => with_grade(e, d, g),
                None => d,
            }
        };
        for k in 0..e.lattice.len() {
            if !e.ideal(k).is_subset(ideal) {
                continue;
            }
            let d: Arc<Derived> = c.quotient(i.ring, k)?;
            epi_case(t, || label(format!("K={}", e.ideal(k))), e, p, s, g, &d.entry, &d.map)?;
        }
        if !projections {
            continue;
        }
        let maps = proj.entry(i.ring).or_insert_with(|| product_projections(&e.ring));
        if let Some((pl, pr)) = maps {
            for (n, map) in [(1, &*pl), (2, &*pr)] {
                if !map.kernel().is_subset(ideal) {
                    continue;
                }
                let target = c
                    .entry_of(map.target())
                    .ok_or_else(|| Error::Precondition(format!("factor of {} is not in the corpus", e.name())))?;
                epi_case(t, || label(format!("f=projection {n}")), e, p, s, g, target, map)?;
            }
        }
    }
    Ok(())
}

fn prop10i(c: &Corpus, t: &mut Tally) -> Result<()> {
    epimorphisms(c, t, false, true)?;
    t.note("epimorphisms: quotient maps R -> R/K with K in P, and product projections");
    Ok(())
}

fn coro2i(c: &Corpus, t: &mut Tally) -> Result<()> {
    epimorphisms(c, t, false, false)
}

fn thm9i(c: &Corpus, t: &mut Tally) -> Result<()> {
    epimorphisms(c, t, true, true)
}

/// The inclusion `R_e → R` as a monomorphism.
fn monomorphisms(c: &Corpus, t: &mut Tally, graded: bool) -> Result<()> {
    for (r, e) in c.entries.iter().enumerate() {
        let d = c.identity_component(r)?;
        let (re, map) = (&d.entry, &d.map);
        let grades: Vec<Option<Grade>> = if graded {
            e.ring.grade_group().elements().map(Some).collect()
        } else {
            vec![None]
        };
        for s in &re.sets {
            let fs = map.image_set(s)?;
            for q in disjoint_proper(e, &fs) {
                let pre = re.index(&map.preimage_ideal(e.ideal(q)));
                for &g in &grades {
                    let property = weakly_s_primary(g);
                    let desc = || {
                        let d = format!(
                            "{} | P={} | S={} | f=inclusion of R_e",
                            e.name(),
                            e.ideal(q),
                            e.ring.format_set(fs.elements())
                        );
                        match g {
                            Some(g) => with_grade(e, d, g),
                            None => d,
                        }
                    };
                    t.implication(desc, prop(e, q, &fs, property, g)?, prop(re, pre, s, property, g)?)?;
                }
            }
        }
    }
    Ok(())
}

fn prop10ii(c: &Corpus, t: &mut Tally) -> Result<()> {
    monomorphisms(c, t, false)?;
    t.note("monomorphism: the inclusion R_e -> R");
    Ok(())
}

fn thm9ii(c: &Corpus, t: &mut Tally) -> Result<()> {
    monomorphisms(c, t, true)
}

fn coro2ii(c: &Corpus, t: &mut Tally) -> Result<()> {
    let mut back: HashMap<usize, HashMap<Elem, Elem>> = HashMap::new();
    for i in c.instances() {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        if !s.in_identity_component() {
            continue;
        }
        let hyp = prop(e, p, s, GradedWeaklySPrimary, None)?;
        if !hyp.holds {
            t.skip();
            continue;
        }
        let d = c.identity_component(i.ring)?;
        let inv = back.entry(i.ring).or_insert_with(|| {
            d.entry.ring.elements().map(|x| (d.map.apply(x), x)).collect()
        });
        let elems: Vec<Elem> = s.elements().iter().map(|x| inv[x]).collect();
        let se = MultSet::from_elements(&d.entry.ring, &elems)?;
        let q = d.entry.index(&d.map.preimage_ideal(e.ideal(p)));
        t.implication(|| c.describe(i), hyp, prop(&d.entry, q, &se, GradedWeaklySPrimary, None)?)?;
    }
    Ok(())
}

fn lift_from_quotient(c: &Corpus, t: &mut Tally, conclusion: Property) -> Result<()> {
    for i in c.instances() {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let ideal = e.ideal(p);
        for k in 0..e.lattice.len() {
            if !e.ideal(k).is_subset(ideal) {
                continue;
            }
            let base = prop(e, k, s, GradedSPrimary, None)?;
            if !base.holds {
                t.skip();
                continue;
            }
            let d = c.quotient(i.ring, k)?;
            let fs = d.map.image_set(s)?;
            let q = d.entry.index(&d.map.image_ideal(ideal));
            let hyp = Side::all(vec![
                given(move || ideal_subset(&e.ring, of(e, k), of(e, p), true)),
                base,
                prop(&d.entry, q, &fs, GradedWeaklySPrimary, None)?,
            ]);
            t.implication(
                || format!("{} | I={}", c.describe(i), e.ideal(k)),
                hyp,
                prop(e, p, s, conclusion, None)?,
            )?;
        }
    }
    Ok(())
}

fn coro2iii(c: &Corpus, t: &mut Tally) -> Result<()> {
    lift_from_quotient(c, t, GradedSPrimary)
}

fn coro2iv(c: &Corpus, t: &mut Tally) -> Result<()> {
    lift_from_quotient(c, t, GradedWeaklySPrimary)
}

fn sums(c: &Corpus, t: &mut Tally, nested: bool) -> Result<()> {
    for e in &c.entries {
        for s in &e.sets {
            let ps = disjoint_proper(e, s);
            for &a in &ps {
                for &b in &ps {
                    let contained = e.ideal(b).is_subset(e.ideal(a));
                    if (nested && !contained) || (!nested && b <= a) {
                        continue;
                    }
                    let k = e.sum(a, b);
                    if e.ideal(k).meets(s.elements()) {
                        t.skip();
                        continue;
                    }
                    let mut hyp = vec![
                        prop(e, a, s, GradedWeaklySPrimary, None)?,
                        prop(e, b, s, GradedWeaklySPrimary, None)?,
                    ];
                    if nested {
                        hyp.push(given(move || ideal_subset(&e.ring, of(e, b), of(e, a), true)));
                    }
                    let concl = prop_expr(e, k, s, GradedWeaklySPrimary, None, move || of(e, a).sum(of(e, b)))?;
                    t.implication(|| describe_two(e, a, b, s), Side::all(hyp), concl)?;
                }
            }
        }
    }
    Ok(())
}

fn prop11(c: &Corpus, t: &mut Tally) -> Result<()> {
    sums(c, t, true)?;
    t.note("with I in P the sum P + I is P itself");
    Ok(())
}

fn prop11_unrestricted(c: &Corpus, t: &mut Tally) -> Result<()> {
    sums(c, t, false)
}

fn lem4(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let maxima = maximal_disjoint_ideals(e.lattice.ideals(), e.ideal(p), s)?;
        let mut parts = vec![Side::lazy(!maxima.is_empty(), || Ok(vec![]))];
        for m in &maxima {
            parts.push(prop(e, e.index(m), e.unit_set(), GradedPrimary, None)?);
        }
        let hyp = given(move || disjoint(&e.ring, of(e, p), s, true));
        t.implication(|| c.describe(i), hyp, Side::all(parts))?;
    }
    Ok(())
}

fn only_zero(e: &RingEntry, s: &MultSet, property: Property) -> Result<bool> {
    for p in disjoint_proper(e, s) {
        if e.holds(p, s, property, None)? != e.ideal(p).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn every(e: &RingEntry, s: &MultSet, property: Property, then: Property) -> Result<bool> {
    for p in disjoint_proper(e, s) {
        if e.holds(p, s, property, None)? && !e.holds(p, s, then, None)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn set_desc(e: &RingEntry, s: &MultSet) -> String {
    format!("{} | S={}", e.name(), e.ring.format_set(s.elements()))
}

fn domain_side(e: &RingEntry) -> Side<'_> {
    let holds = is_graded_domain(&e.ring);
    Side::lazy(holds, move || {
        Ok(vec![Fact::GradedDomain {
            ring: e.ring.spec().clone(),
            holds,
        }])
    })
}

fn prop12(c: &Corpus, t: &mut Tally) -> Result<()> {
    for (r, e) in c.entries.iter().enumerate() {
        for s in &e.sets {
            let zero_side = |property: Property| -> Result<Side> {
                let holds = only_zero(e, s, property)?;
                Ok(Side::lazy(holds, move || {
                    Ok(vec![Fact::OnlyZero {
                        ring: e.ring.spec().clone(),
                        set: s.generators_coords(),
                        property,
                        holds,
                    }])
                }))
            };
            let d = c.localization(r, s);
            let field = is_graded_field(&d.0.ring);
            let loc_ring = &d.0.ring;
            let third = Side::all(vec![
                domain_side(e),
                Side::lazy(field, move || {
                    Ok(vec![Fact::GradedField {
                        ring: loc_ring.spec().clone(),
                        holds: field,
                    }])
                }),
            ]);
            t.all_equal(
                || set_desc(e, s),
                vec![zero_side(GradedWeaklySPrimary)?, zero_side(GradedSPrimary)?, third],
            )?;
        }
    }
    Ok(())
}

fn thm6(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.entries {
        for s in &e.sets {
            let every_side = |property: Property| -> Result<Side> {
                let holds = every(e, s, property, GradedPrimary)?;
                Ok(Side::lazy(holds, move || {
                    Ok(vec![Fact::Every {
                        ring: e.ring.spec().clone(),
                        set: s.generators_coords(),
                        property,
                        then: GradedPrimary,
                        holds,
                    }])
                }))
            };
            t.equivalence(
                || set_desc(e, s),
                every_side(GradedWeaklySPrimary)?,
                Side::all(vec![domain_side(e), every_side(GradedSPrimary)?]),
            )?;
        }
    }
    Ok(())
}

fn chain_probe(c: &Corpus, t: &mut Tally, graded: bool) -> Result<()> {
    let chains: Vec<&str> = c.entries.iter().filter(|e| e.is_chain()).map(|e| e.name()).collect();
    for (i, g) in cases(c, graded) {
        let e = c.entry(i);
        if !e.is_chain() {
            continue;
        }
        let desc = || match g {
            Some(g) => with_grade(e, c.describe(i), g),
            None => c.describe(i),
        };
        t.claim(desc, prop(e, i.ideal, c.set(i), weakly_s_primary(g), g)?)?;
    }
    t.note(format!(
        "finite rings whose graded ideals form a chain stand in for valuation domains: {}",
        chains.join(", ")
    ));
    Ok(())
}

fn thm7_exploratory(c: &Corpus, t: &mut Tally) -> Result<()> {
    chain_probe(c, t, false)
}

fn thm10_exploratory(c: &Corpus, t: &mut Tally) -> Result<()> {
    chain_probe(c, t, true)
}

fn lem5(c: &Corpus, t: &mut Tally) -> Result<()> {
    for (i, g) in graded_instances(c) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        t.implication(
            || with_grade(e, c.describe(i), g),
            prop(e, p, s, GradedWeaklySPrimary, None)?,
            prop(e, p, s, GWeaklySPrimary, Some(g))?,
        )?;
    }
    Ok(())
}

fn prop13(c: &Corpus, t: &mut Tally) -> Result<()> {
    radical_form(c, t, true, true)
}

fn prop13_corrected(c: &Corpus, t: &mut Tally) -> Result<()> {
    radical_form(c, t, true, false)
}

fn prop14(c: &Corpus, t: &mut Tally) -> Result<()> {
    intersect_with_meeting(c, t, true)
}

fn rem3(c: &Corpus, t: &mut Tally) -> Result<()> {
    set_change(c, t, true, false)
}

fn prop15(c: &Corpus, t: &mut Tally) -> Result<()> {
    set_change(c, t, true, true)
}

fn prop16(c: &Corpus, t: &mut Tally) -> Result<()> {
    saturation_form(c, t, true)?;
    t.note("S* taken inside R_e, as S* n R_e");
    Ok(())
}

fn prop17(c: &Corpus, t: &mut Tally) -> Result<()> {
    equal_radical_intersection(c, t, true)
}

/// `g`-weakly S-primary but not `g`-S-primary.
fn gap<'a>(e: &'a RingEntry, p: usize, s: &'a MultSet, g: Grade) -> Result<Side<'a>> {
    Ok(Side::all(vec![
        prop(e, p, s, GWeaklySPrimary, Some(g))?,
        prop(e, p, s, GSPrimary, Some(g))?.not(),
    ]))
}

/// `s · A_g · B_h = 0`.
#[allow(clippy::too_many_arguments)]
fn slice_zero<'a>(
    e: &'a RingEntry,
    s: Elem,
    a: &Ideal,
    g: Grade,
    b: &Ideal,
    h: Grade,
    left: impl FnOnce() -> IdealExpr + 'a,
    right: impl FnOnce() -> IdealExpr + 'a,
) -> Side<'a> {
    let (xs, ys) = (a.slice(g), b.slice(h));
    let ring = &e.ring;
    let holds = xs
        .iter()
        .all(|&x| ys.iter().all(|&y| ring.mul(s, ring.mul(x, y)) == Elem::ZERO));
    Side::lazy(holds, move || {
        Ok(vec![Fact::SliceProductZero {
            ring: ring.spec().clone(),
            s: coords(ring, s),
            left: left(),
            left_grade: grade_coords(ring, g),
            right: right(),
            right_grade: grade_coords(ring, h),
            holds,
        }])
    })
}

fn slice_in_nilradical<'a>(e: &'a RingEntry, p: usize, g: Grade) -> Side<'a> {
    let nil = e.ideal(e.radical(e.zero_index()));
    let holds = e.ideal(p).slice(g).iter().all(|&x| nil.contains(x));
    Side::lazy(holds, move || {
        Ok(vec![Fact::SliceSubset {
            ring: e.ring.spec().clone(),
            ideal: of(e, p),
            grade: grade_coords(&e.ring, g),
            target: zero_expr().radical(),
            holds,
        }])
    })
}

fn square_zero(c: &Corpus, t: &mut Tally, unit_only: bool) -> Result<()> {
    for (i, g) in graded_instances(c) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        if unit_only && s.len() > 1 {
            continue;
        }
        let ideal = e.ideal(p);
        let concl = slice_zero(e, e.ring.one(), ideal, g, ideal, g, move || of(e, p), move || of(e, p));
        t.implication(|| with_grade(e, c.describe(i), g), gap(e, p, s, g)?, concl)?;
    }
    Ok(())
}

fn prop18(c: &Corpus, t: &mut Tally) -> Result<()> {
    square_zero(c, t, false)
}

fn coro3(c: &Corpus, t: &mut Tally) -> Result<()> {
    square_zero(c, t, true)
}

fn coro4(c: &Corpus, t: &mut Tally) -> Result<()> {
    for (i, g) in graded_instances(c) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        t.implication(
            || with_grade(e, c.describe(i), g),
            gap(e, p, s, g)?,
            slice_in_nilradical(e, p, g),
        )?;
    }
    Ok(())
}

fn slice_forms(c: &Corpus, t: &mut Tally, colon: Property, ideals: Property) -> Result<()> {
    for (i, g) in graded_instances(c) {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        let mut sides = vec![prop(e, p, s, GWeaklySPrimary, Some(g))?, prop(e, p, s, colon, Some(g))?];
        if e.lattice.len() <= PAIR_LATTICE_CAP {
            sides.push(prop(e, p, s, ideals, Some(g))?);
        }
        t.all_equal(|| with_grade(e, c.describe(i), g), sides)?;
    }
    Ok(())
}

fn thm8(c: &Corpus, t: &mut Tally) -> Result<()> {
    slice_forms(c, t, SliceColonLiteral, SliceIdealsLiteral)
}

fn thm8_corrected(c: &Corpus, t: &mut Tally) -> Result<()> {
    slice_forms(c, t, SliceColonCorrected, SliceIdealsCorrected)
}

/// Some `s ∈ S` kills `A_e · B_e`.
fn killed_by_some<'a>(e: &'a RingEntry, s: &'a MultSet, a: usize, b: &'a Ideal, right: IdealExpr) -> Side<'a> {
    let id = identity(e);
    let parts = s
        .elements()
        .iter()
        .map(|&x| {
            let right = right.clone();
            slice_zero(e, x, e.ideal(a), id, b, id, move || of(e, a), move || right)
        })
        .collect();
    Side::any(parts)
}

fn prop19(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        if !s.in_identity_component() {
            continue;
        }
        let id = identity(e);
        let nil = e.ideal(e.radical(e.zero_index()));
        t.implication(
            || c.describe(i),
            gap(e, p, s, id)?,
            killed_by_some(e, s, p, nil, zero_expr().radical()),
        )?;
    }
    Ok(())
}

fn coro5(c: &Corpus, t: &mut Tally) -> Result<()> {
    for i in c.instances() {
        let (e, s, p) = (c.entry(i), c.set(i), i.ideal);
        if s.len() > 1 || !s.in_identity_component() {
            continue;
        }
        let id = identity(e);
        let nil = e.ideal(e.radical(e.zero_index()));
        let concl = Side::all(vec![
            slice_in_nilradical(e, p, id),
            slice_zero(e, e.ring.one(), e.ideal(p), id, nil, id, move || of(e, p), || zero_expr().radical()),
        ]);
        t.implication(|| c.describe(i), gap(e, p, s, id)?, concl)?;
    }
    t.note("S = {1} and g = e");
    Ok(())
}

fn coro6(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.entries {
        let id = identity(e);
        for s in e.sets.iter().filter(|s| s.in_identity_component()) {
            let ps = disjoint_proper(e, s);
            for (n, &a) in ps.iter().enumerate() {
                for &b in &ps[n..] {
                    let hyp = Side::all(vec![gap(e, a, s, id)?, gap(e, b, s, id)?]);
                    if !hyp.holds {
                        t.skip();
                        continue;
                    }
                    t.implication(
                        || pair_desc(e, s, a, b, None),
                        hyp,
                        killed_by_some(e, s, a, e.ideal(b), of(e, b)),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn z12i() -> Result<(Arc<GradedRing>, Ideal, MultSet)> {
    let r = GradedRing::gaussian(12)?;
    let three = r.elem(&[3, 0])?;
    let s = MultSet::closure(&r, &[three])?;
    Ok((r.clone(), Ideal::zero(&r), s))
}

/// A one-off verdict computed without the corpus caches.
fn direct(p: &Ideal, s: &MultSet, property: Property, grade: Option<Grade>) -> Result<(Side<'static>, classify::Certificate)> {
    let cert = classify::check(p, property, Some(s), grade)?;
    let fact = property_fact(p.ring(), IdealExpr::of(p), s, property, grade, cert.verdict);
    Ok((Side::fact(fact), cert))
}

fn ex1(_: &Corpus, t: &mut Tally) -> Result<()> {
    witness_claims(
        t,
        &[
            "0 != (7-i)(7+i) = 50 in (10)",
            "7-i not in ((10) : 2^inf) = (5)",
            "7+i not in (rad(10) : 2^inf) = (5)",
        ],
    )
}

fn ex2(_: &Corpus, t: &mut Tally) -> Result<()> {
    let (r, p, s) = z12i()?;
    let desc = || describe(&r, &p, &s);
    t.claim(desc, direct(&p, &s, GradedWeaklySPrimary, None)?.0)?;
    t.claim(desc, Side::fact(disjoint(&r, IdealExpr::of(&p), &s, !p.meets(s.elements()))))?;
    let (side, cert) = direct(&p, &s, GradedSPrimary, None)?;
    if let (true, Some(w)) = (cert.verdict, cert.witness) {
        t.note(format!(
            "graded_S_primary holds with witness s = {}, contrary to the claim that it fails",
            r.format(w)
        ));
    }
    t.claim(desc, side.not())
}

fn ex3(_: &Corpus, t: &mut Tally) -> Result<()> {
    witness_claims(t, &["0 != 18X in (9X)", "18 not in (9X)", "X not in Grad((9X))"])
}

fn ex4(_: &Corpus, t: &mut Tally) -> Result<()> {
    let (r, p, s) = z12i()?;
    let one = MultSet::closure(&r, &[])?;
    let desc = || describe(&r, &p, &s);
    t.claim(desc, direct(&p, &s, GradedWeaklySPrimary, None)?.0)?;
    let colon = p.colon(r.one());
    t.claim(
        desc,
        Side::fact(ideal_eq(
            &r,
            IdealExpr::of(&p).colon(coords(&r, r.one())),
            IdealExpr::of(&p),
            colon == p,
        )),
    )?;
    let three = MultSet::closure(&r, &[r.elem(&[3, 0])?])?;
    t.claim(
        desc,
        Side::fact(Fact::SetRegular {
            ring: r.spec().clone(),
            set: three.generators_coords(),
            holds: three.all_regular(),
        })
        .not(),
    )?;
    let (weak, _) = direct(&p, &one, GradedWeaklyPrimary, None)?;
    let (primary, _) = direct(&p, &one, GradedPrimary, None)?;
    t.note(format!(
        "(P:1) = P is graded weakly primary: {}; graded primary: {}",
        weak.holds, primary.holds
    ));
    t.claim(desc, primary)
}

fn ex5(_: &Corpus, t: &mut Tally) -> Result<()> {
    let (r, p, s) = z12i()?;
    let desc = || describe(&r, &p, &s);
    for g in r.grade_group().elements() {
        t.claim(desc, direct(&p, &s, GWeaklySPrimary, Some(g))?.0)?;
    }
    let e = r.grade_group().identity();
    let (side, cert) = direct(&p, &s, GSPrimary, Some(e))?;
    if let (true, Some(w)) = (cert.verdict, cert.witness) {
        t.note(format!(
            "g_S_primary at g = 0 holds with witness s = {}, contrary to the claim that it fails",
            r.format(w)
        ));
    }
    t.claim(desc, side.not())
}

fn ex6(_: &Corpus, t: &mut Tally) -> Result<()> {
    witness_claims(t, &["27X in (9X)", "27 not in (9X)", "X not in Grad((9X))"])
}

fn law_inclusion(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.entries {
        for j in 0..e.lattice.len() {
            let holds = e.ideal(j).is_subset(e.ideal(e.radical(j)));
            t.claim(
                || format!("{} | P={}", e.name(), e.ideal(j)),
                Side::lazy(holds, move || {
                    Ok(vec![ideal_subset(&e.ring, of(e, j), of(e, j).radical(), holds)])
                }),
            )?;
        }
    }
    Ok(())
}

fn law_idempotent(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.entries {
        for j in 0..e.lattice.len() {
            let r = e.radical(j);
            let holds = e.radical(r) == r;
            t.claim(
                || format!("{} | P={}", e.name(), e.ideal(j)),
                Side::lazy(holds, move || {
                    Ok(vec![ideal_eq(&e.ring, of(e, j).radical().radical(), of(e, j).radical(), holds)])
                }),
            )?;
        }
    }
    Ok(())
}

fn law_intersection(c: &Corpus, t: &mut Tally) -> Result<()> {
    for e in &c.entries {
        let n = e.lattice.len();
        for a in 0..n {
            for b in a + 1..n {
                let holds = e.radical(e.intersect(a, b)) == e.intersect(e.radical(a), e.radical(b));
                t.claim(
                    || format!("{} | P={} | Q={}", e.name(), e.ideal(a), e.ideal(b)),
                    Side::lazy(holds, move || {
                        Ok(vec![ideal_eq(
                            &e.ring,
                            of(e, a).intersect(of(e, b)).radical(),
                            of(e, a).radical().intersect(of(e, b).radical()),
                            holds,
                        )])
                    }),
                )?;
            }
        }
    }
    Ok(())
}
