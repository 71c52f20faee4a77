//! Decision procedures for graded (weakly) S-primary ideals and their relatives.
//!
//! Every predicate has the shape "there is `s` in a candidate set such that
//! every hypothesis instance satisfies the conclusion for `s`". Candidates are
//! tried in canonical element order; the first that works is the witness, and
//! a failed verdict stores one violation per candidate.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::mult_set::MultSet;
use crate::ring::{Elem, Grade, GradedRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "graded_prime")]
    GradedPrime,
    #[serde(rename = "graded_weakly_prime")]
    GradedWeaklyPrime,
    #[serde(rename = "graded_primary")]
    GradedPrimary,
    #[serde(rename = "graded_weakly_primary")]
    GradedWeaklyPrimary,
    #[serde(rename = "graded_S_prime")]
    GradedSPrime,
    #[serde(rename = "graded_weakly_S_prime")]
    GradedWeaklySPrime,
    #[serde(rename = "graded_S_primary")]
    GradedSPrimary,
    #[serde(rename = "graded_weakly_S_primary")]
    GradedWeaklySPrimary,
    #[serde(rename = "g_S_prime")]
    GSPrime,
    #[serde(rename = "g_weakly_S_prime")]
    GWeaklySPrime,
    #[serde(rename = "g_S_primary")]
    GSPrimary,
    #[serde(rename = "g_weakly_S_primary")]
    GWeaklySPrimary,
    /// `IJ ⊆ P ⇒ sI ⊆ P or sJ ⊆ P` over graded ideals.
    #[serde(rename = "ideal_pairs_literal")]
    IdealPairsLiteral,
    /// `0 ≠ IJ ⊆ P ⇒ sI ⊆ P or sJ ⊆ Grad(P)` over graded ideals.
    #[serde(rename = "ideal_pairs_corrected")]
    IdealPairsCorrected,
    /// `I₁I₂I₃ ⊆ P ⇒ sIᵢ ⊆ P` for some `i`.
    #[serde(rename = "ideal_triples_literal")]
    IdealTriplesLiteral,
    /// For `a ∈ R_g` with `sa ∉ P`: `(P :_{R_g} a) ⊆ (P :_{R_g} s)` or
    /// `(P :_{R_g} a) = (0 :_{R_g} a)`.
    #[serde(rename = "slice_colon_literal")]
    SliceColonLiteral,
    /// As above with `(Grad(P) :_{R_g} s)` in the first alternative.
    #[serde(rename = "slice_colon_corrected")]
    SliceColonCorrected,
    /// `0 ≠ I_g J_g ⊆ P ⇒ sI_g ⊆ P or sJ_g ⊆ P` over graded ideals.
    #[serde(rename = "slice_ideals_literal")]
    SliceIdealsLiteral,
    /// As above with `sJ_g ⊆ Grad(P)`.
    #[serde(rename = "slice_ideals_corrected")]
    SliceIdealsCorrected,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Elementwise,
    IdealPairs,
    IdealTriples,
    SliceColon,
    SliceIdeals,
}

impl Property {
    pub const ALL: [Property; 19] = [
        Property::GradedPrime,
        Property::GradedWeaklyPrime,
        Property::GradedPrimary,
        Property::GradedWeaklyPrimary,
        Property::GradedSPrime,
        Property::GradedWeaklySPrime,
        Property::GradedSPrimary,
        Property::GradedWeaklySPrimary,
        Property::GSPrime,
        Property::GWeaklySPrime,
        Property::GSPrimary,
        Property::GWeaklySPrimary,
        Property::IdealPairsLiteral,
        Property::IdealPairsCorrected,
        Property::IdealTriplesLiteral,
        Property::SliceColonLiteral,
        Property::SliceColonCorrected,
        Property::SliceIdealsLiteral,
        Property::SliceIdealsCorrected,
    ];

    pub fn name(self) -> &'static str {
        use Property::*;
        match self {
            GradedPrime => "graded_prime",
            GradedWeaklyPrime => "graded_weakly_prime",
            GradedPrimary => "graded_primary",
            GradedWeaklyPrimary => "graded_weakly_primary",
            GradedSPrime => "graded_S_prime",
            GradedWeaklySPrime => "graded_weakly_S_prime",
            GradedSPrimary => "graded_S_primary",
            GradedWeaklySPrimary => "graded_weakly_S_primary",
            GSPrime => "g_S_prime",
            GWeaklySPrime => "g_weakly_S_prime",
            GSPrimary => "g_S_primary",
            GWeaklySPrimary => "g_weakly_S_primary",
            IdealPairsLiteral => "ideal_pairs_literal",
            IdealPairsCorrected => "ideal_pairs_corrected",
            IdealTriplesLiteral => "ideal_triples_literal",
            SliceColonLiteral => "slice_colon_literal",
            SliceColonCorrected => "slice_colon_corrected",
            SliceIdealsLiteral => "slice_ideals_literal",
            SliceIdealsCorrected => "slice_ideals_corrected",
        }
    }

    /// Hypotheses require a nonzero product.
    pub fn is_weakly(self) -> bool {
        use Property::*;
        matches!(
            self,
            GradedWeaklyPrime
                | GradedWeaklyPrimary
                | GradedWeaklySPrime
                | GradedWeaklySPrimary
                | GWeaklySPrime
                | GWeaklySPrimary
                | IdealPairsCorrected
                | SliceColonLiteral
                | SliceColonCorrected
                | SliceIdealsLiteral
                | SliceIdealsCorrected
        )
    }

    /// The second alternative of the conclusion lands in `Grad(P)`.
    pub fn uses_radical(self) -> bool {
        use Property::*;
        matches!(
            self,
            GradedPrimary
                | GradedWeaklyPrimary
                | GradedSPrimary
                | GradedWeaklySPrimary
                | GSPrimary
                | GWeaklySPrimary
                | IdealPairsCorrected
                | SliceColonCorrected
                | SliceIdealsCorrected
        )
    }

    /// Quantifies over a multiplicative set rather than `s = 1`.
    pub fn uses_set(self) -> bool {
        use Property::*;
        !matches!(
            self,
            GradedPrime | GradedWeaklyPrime | GradedPrimary | GradedWeaklyPrimary
        )
    }

    /// Quantifies over a single component `R_g` with `S ⊆ R_e`.
    pub fn per_grade(self) -> bool {
        use Property::*;
        matches!(
            self,
            GSPrime
                | GWeaklySPrime
                | GSPrimary
                | GWeaklySPrimary
                | SliceColonLiteral
                | SliceColonCorrected
                | SliceIdealsLiteral
                | SliceIdealsCorrected
        )
    }

    fn shape(self) -> Shape {
        use Property::*;
        match self {
            IdealPairsLiteral | IdealPairsCorrected => Shape::IdealPairs,
            IdealTriplesLiteral => Shape::IdealTriples,
            SliceColonLiteral | SliceColonCorrected => Shape::SliceColon,
            SliceIdealsLiteral | SliceIdealsCorrected => Shape::SliceIdeals,
            _ => Shape::Elementwise,
        }
    }

    pub fn uses_lattice(self) -> bool {
        matches!(
            self.shape(),
            Shape::IdealPairs | Shape::IdealTriples | Shape::SliceIdeals
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown property `{s}`")))
    }
}

/// Why a particular candidate `s` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `(x, y)` meets the hypothesis but neither `sx` nor `sy` lands.
    Pair { s: Elem, x: Elem, y: Elem },
    /// Graded ideals meeting the hypothesis with no admissible conclusion.
    Ideals { s: Elem, ideals: Vec<Ideal> },
    /// An `a ∈ R_g` outside `(P :_{R_g} s)` satisfying neither alternative.
    Colon { s: Elem, a: Elem },
}

impl Violation {
    pub fn s(&self) -> Elem {
        match self {
            Violation::Pair { s, .. } | Violation::Ideals { s, .. } | Violation::Colon { s, .. } => *s,
        }
    }
}

/// Outcome of one predicate check.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub property: Property,
    pub verdict: bool,
    /// The first candidate `s` for which the predicate holds.
    pub witness: Option<Elem>,
    /// One violation per candidate, in candidate order, when the verdict is false.
    pub counters: Vec<Violation>,
    pub grade: Option<Grade>,
    /// Hypothesis instances examined.
    pub trace_size: usize,
}

/// Serializable view of a [`Certificate`] with elements as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub property: Property,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grade: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub counters: Vec<ViolationRecord>,
    pub trace_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationRecord {
    Pair {
        s: Vec<i64>,
        x: Vec<i64>,
        y: Vec<i64>,
    },
    Ideals {
        s: Vec<i64>,
        ideals: Vec<Vec<Vec<i64>>>,
    },
    Colon {
        s: Vec<i64>,
        a: Vec<i64>,
    },
}

impl Certificate {
    pub fn record(&self, ring: &GradedRing) -> CertificateRecord {
        let c = |x: Elem| ring.coords_i64(x);
        CertificateRecord {
            property: self.property,
            verdict: self.verdict,
            witness: self.witness.map(c),
            grade: self.grade.map(|g| ring.grade_group().residues(g)),
            counters: self
                .counters
                .iter()
                .map(|v| match v {
                    Violation::Pair { s, x, y } => ViolationRecord::Pair {
                        s: c(*s),
                        x: c(*x),
                        y: c(*y),
                    },
                    Violation::Ideals { s, ideals } => ViolationRecord::Ideals {
                        s: c(*s),
                        ideals: ideals.iter().map(|i| i.generators_coords()).collect(),
                    },
                    Violation::Colon { s, a } => ViolationRecord::Colon { s: c(*s), a: c(*a) },
                })
                .collect(),
            trace_size: self.trace_size,
        }
    }

    /// One-line human summary.
    pub fn summary(&self, ring: &GradedRing) -> String {
        let mut out = format!("{}: {}", self.property, self.verdict);
        if let Some(g) = self.grade {
            out = format!("{} [g={}]", out, ring.grade_group().format(g));
        }
        if let Some(w) = self.witness {
            if self.property.uses_set() {
                out.push_str(&format!(", s={}", ring.format(w)));
            }
        } else if let Some(v) = self.counters.first() {
            let text = match v {
                Violation::Pair { x, y, .. } => {
                    format!("({},{})", ring.format(*x), ring.format(*y))
                }
                Violation::Ideals { ideals, .. } => {
                    let parts: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
                    parts.join(", ")
                }
                Violation::Colon { a, .. } => format!("a={}", ring.format(*a)),
            };
            out.push_str(&format!(", counter={text}"));
            if self.property.uses_set() {
                out.push_str(&format!(" for s={}", ring.format(v.s())));
            }
        }
        out
    }
}

/// Per-ideal state shared by all predicate checks on that ideal.
pub struct Classifier {
    ideal: Ideal,
    radical: Ideal,
    /// Hypothesis pairs over `h(R)`, indexed by `[weakly]`.
    pairs: [OnceLock<Vec<(Elem, Elem)>>; 2],
    grade_pairs: Vec<[OnceLock<Vec<(Elem, Elem)>>; 2]>,
}

impl Classifier {
    pub fn new(p: &Ideal) -> Result<Classifier> {
        if !p.is_proper() {
            return Err(Error::NotProper);
        }
        if !p.is_graded() {
            return Err(Error::NotGraded);
        }
        let ng = p.ring().grade_group().order();
        Ok(Classifier {
            ideal: p.clone(),
            radical: p.grad_radical(),
            pairs: Default::default(),
            grade_pairs: (0..ng).map(|_| Default::default()).collect(),
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn radical(&self) -> &Ideal {
        &self.radical
    }

    fn ring(&self) -> &GradedRing {
        self.ideal.ring()
    }

    fn domain(&self, grade: Option<Grade>) -> &[Elem] {
        match grade {
            Some(g) => &self.ring().component(g)[1..],
            None => &self.ring().homogeneous()[1..],
        }
    }

    fn hypothesis_pairs(&self, grade: Option<Grade>, weakly: bool) -> &[(Elem, Elem)] {
        let cell = match grade {
            Some(g) => &self.grade_pairs[g.index()][usize::from(weakly)],
            None => &self.pairs[usize::from(weakly)],
        };
        cell.get_or_init(|| {
            let ring = self.ring();
            let d = self.domain(grade);
            let mut out = Vec::new();
            for &x in d {
                for &y in d {
                    let xy = ring.mul(x, y);
                    if self.ideal.contains(xy) && !(weakly && xy == Elem::ZERO) {
                        out.push((x, y));
                    }
                }
            }
            out
        })
    }

    fn candidates(&self, property: Property, set: &MultSet, grade: Option<Grade>) -> Result<Vec<Elem>> {
        let ring = self.ring();
        if !property.uses_set() {
            return Ok(vec![ring.one()]);
        }
        if !set.ring().same_ring(ring) {
            return Err(Error::MismatchedRings);
        }
        if self.ideal.meets(set.elements()) {
            return Err(Error::NotDisjoint);
        }
        if grade.is_some() && !set.in_identity_component() {
            return Err(Error::SetNotInIdentityComponent);
        }
        Ok(set.elements().to_vec())
    }

    /// Decides `property` for this ideal.
    ///
    /// `set` is ignored by the four properties without an `S`; `grade` is
    /// required exactly by the per-grade properties; a lattice is built on
    /// demand when the property quantifies over graded ideals and none is
    /// supplied.
    pub fn check(
        &self,
        property: Property,
        set: &MultSet,
        grade: Option<Grade>,
        lattice: Option<&IdealLattice>,
    ) -> Result<Certificate> {
        if property.per_grade() != grade.is_some() {
            return Err(Error::Precondition(format!(
                "{property} {} a grade",
                if property.per_grade() { "needs" } else { "does not take" }
            )));
        }
        if let Some(g) = grade {
            if !self.ring().grade_group().contains(g) {
                return Err(Error::InvalidGradeGroup("grade not in group".into()));
            }
        }
        let candidates = self.candidates(property, set, grade)?;
        let owned;
        let lattice = match lattice {
            Some(l) if property.uses_lattice() => {
                if !l.ring().same_ring(self.ring()) {
                    return Err(Error::MismatchedRings);
                }
                Some(l)
            }
            None if property.uses_lattice() => {
                owned = IdealLattice::new(self.ideal.ring());
                Some(&owned)
            }
            _ => None,
        };
        let mut cert = Certificate {
            property,
            verdict: false,
            witness: None,
            counters: Vec::new(),
            grade,
            trace_size: 0,
        };
        for &s in &candidates {
            let (violation, examined) = match property.shape() {
                Shape::Elementwise => self.elementwise(property, s, grade),
                Shape::IdealPairs => self.ideal_pairs(property, s, lattice.expect("lattice")),
                Shape::IdealTriples => self.ideal_triples(s, lattice.expect("lattice")),
                Shape::SliceColon => {
                    self.slice_colon(property, s, grade.expect("grade"))
                }
                Shape::SliceIdeals => self.slice_ideals(
                    property,
                    s,
                    grade.expect("grade"),
                    lattice.expect("lattice"),
                ),
            };
            cert.trace_size += examined;
            match violation {
                None => {
                    cert.verdict = true;
                    cert.witness = Some(s);
                    cert.counters.clear();
                    return Ok(cert);
                }
                Some(v) => cert.counters.push(v),
            }
        }
        Ok(cert)
    }

    fn second_target(&self, property: Property) -> &Ideal {
        if property.uses_radical() {
            &self.radical
        } else {
            &self.ideal
        }
    }

    fn elementwise(&self, property: Property, s: Elem, grade: Option<Grade>) -> (Option<Violation>, usize) {
        let ring = self.ring();
        let q = self.second_target(property);
        let pairs = self.hypothesis_pairs(grade, property.is_weakly());
        for (n, &(x, y)) in pairs.iter().enumerate() {
            if !self.ideal.contains(ring.mul(s, x)) && !q.contains(ring.mul(s, y)) {
                return (Some(Violation::Pair { s, x, y }), n + 1);
            }
        }
        (None, pairs.len())
    }

    fn ideal_pairs(&self, property: Property, s: Elem, lattice: &IdealLattice) -> (Option<Violation>, usize) {
        let cp = self.ideal.colon(s);
        let cq = self.second_target(property).colon(s);
        let p_idx = lattice.index_of(&self.ideal).expect("graded ideal is in the lattice");
        let n = lattice.len();
        let mut examined = 0;
        for i in 0..n {
            for j in 0..n {
                let prod = lattice.product(i, j);
                let prod_ideal = lattice.get(prod);
                if !prod_ideal.is_subset(lattice.get(p_idx)) {
                    continue;
                }
                if property.is_weakly() && prod_ideal.is_zero() {
                    continue;
                }
                examined += 1;
                if !lattice.get(i).is_subset(&cp) && !lattice.get(j).is_subset(&cq) {
                    let ideals = vec![lattice.get(i).clone(), lattice.get(j).clone()];
                    return (Some(Violation::Ideals { s, ideals }), examined);
                }
            }
        }
        (None, examined)
    }

    fn ideal_triples(&self, s: Elem, lattice: &IdealLattice) -> (Option<Violation>, usize) {
        let cp = self.ideal.colon(s);
        let n = lattice.len();
        let inside: Vec<bool> = lattice.ideals().iter().map(|i| i.is_subset(&cp)).collect();
        let mut examined = 0;
        for i in 0..n {
            for j in 0..n {
                let ij = lattice.product(i, j);
                for k in 0..n {
                    if !lattice.get(lattice.product(ij, k)).is_subset(&self.ideal) {
                        continue;
                    }
                    examined += 1;
                    if !inside[i] && !inside[j] && !inside[k] {
                        let ideals = [i, j, k].iter().map(|&t| lattice.get(t).clone()).collect();
                        return (Some(Violation::Ideals { s, ideals }), examined);
                    }
                }
            }
        }
        (None, examined)
    }

    fn slice_colon(&self, property: Property, s: Elem, g: Grade) -> (Option<Violation>, usize) {
        let ring = self.ring();
        let q = self.second_target(property);
        let comp = ring.component(g);
        let target: Vec<bool> = comp.iter().map(|&r| q.contains(ring.mul(s, r))).collect();
        let mut examined = 0;
        for &a in comp {
            if self.ideal.contains(ring.mul(s, a)) {
                continue;
            }
            examined += 1;
            let mut inside = true;
            let mut annihilated = true;
            for (r, &t) in comp.iter().zip(&target) {
                let ra = ring.mul(*r, a);
                if self.ideal.contains(ra) {
                    inside &= t;
                    annihilated &= ra == Elem::ZERO;
                }
            }
            if !inside && !annihilated {
                return (Some(Violation::Colon { s, a }), examined);
            }
        }
        (None, examined)
    }

    fn slice_ideals(
        &self,
        property: Property,
        s: Elem,
        g: Grade,
        lattice: &IdealLattice,
    ) -> (Option<Violation>, usize) {
        let ring = self.ring();
        let q = self.second_target(property);
        // distinct slices, each with the first ideal realizing it
        let mut slices: Vec<(Vec<Elem>, usize)> = Vec::new();
        for (i, ideal) in lattice.ideals().iter().enumerate() {
            let sl = ideal.slice(g);
            if !slices.iter().any(|(t, _)| *t == sl) {
                slices.push((sl, i));
            }
        }
        let in_p: Vec<bool> = slices
            .iter()
            .map(|(sl, _)| sl.iter().all(|&x| self.ideal.contains(ring.mul(s, x))))
            .collect();
        let in_q: Vec<bool> = slices
            .iter()
            .map(|(sl, _)| sl.iter().all(|&x| q.contains(ring.mul(s, x))))
            .collect();
        let mut examined = 0;
        for (a, (sa, ia)) in slices.iter().enumerate() {
            for (b, (sb, ib)) in slices.iter().enumerate() {
                let mut inside = true;
                let mut nonzero = false;
                for &x in sa {
                    for &y in sb {
                        let xy = ring.mul(x, y);
                        inside &= self.ideal.contains(xy);
                        nonzero |= xy != Elem::ZERO;
                    }
                }
                if !inside || !nonzero {
                    continue;
                }
                examined += 1;
                if !in_p[a] && !in_q[b] {
                    let ideals = vec![lattice.get(*ia).clone(), lattice.get(*ib).clone()];
                    return (Some(Violation::Ideals { s, ideals }), examined);
                }
            }
        }
        (None, examined)
    }
}

/// `P` graded weakly primary (`s = 1`, nonzero products).
pub fn is_graded_weakly_primary(p: &Ideal) -> Result<Certificate> {
    check(p, Property::GradedWeaklyPrimary, None, None)
}

pub fn is_graded_weakly_s_primary(p: &Ideal, set: &MultSet) -> Result<Certificate> {
    check(p, Property::GradedWeaklySPrimary, Some(set), None)
}

pub fn is_graded_s_primary(p: &Ideal, set: &MultSet) -> Result<Certificate> {
    check(p, Property::GradedSPrimary, Some(set), None)
}

pub fn is_graded_weakly_s_prime(p: &Ideal, set: &MultSet) -> Result<Certificate> {
    check(p, Property::GradedWeaklySPrime, Some(set), None)
}

pub fn is_g_weakly_s_primary(p: &Ideal, set: &MultSet, g: Grade) -> Result<Certificate> {
    check(p, Property::GWeaklySPrimary, Some(set), Some(g))
}

pub fn idealwise_weakly_s_primary(p: &Ideal, set: &MultSet, corrected: bool) -> Result<Certificate> {
    let property = if corrected {
        Property::IdealPairsCorrected
    } else {
        Property::IdealPairsLiteral
    };
    check(p, property, Some(set), None)
}

/// One-shot check; `set` defaults to `{1}`.
pub fn check(p: &Ideal, property: Property, set: Option<&MultSet>, grade: Option<Grade>) -> Result<Certificate> {
    let c = Classifier::new(p)?;
    let trivial;
    let set = match set {
        Some(s) => s,
        None => {
            trivial = MultSet::closure(p.ring(), &[])?;
            &trivial
        }
    };
    c.check(property, set, grade, None)
}

/// Re-derives a certificate's claims by direct enumeration, without the
/// classifier's caches: the witness must satisfy the predicate, and every
/// stored violation must meet its hypothesis and miss its conclusion, with
/// one violation per candidate when the verdict is false.
pub fn replay(cert: &Certificate, p: &Ideal, set: &MultSet) -> Result<bool> {
    let ring = p.ring();
    let property = cert.property;
    let rad = p.grad_radical();
    let q = if property.uses_radical() { &rad } else { p };
    let candidates: Vec<Elem> = if property.uses_set() {
        if cert.grade.is_some() && !set.in_identity_component() {
            return Err(Error::SetNotInIdentityComponent);
        }
        set.elements().to_vec()
    } else {
        vec![ring.one()]
    };
    let domain: Vec<Elem> = match cert.grade {
        Some(g) => ring.component(g).to_vec(),
        None => ring.homogeneous().to_vec(),
    };
    let lattice = property.uses_lattice().then(|| crate::ideal::enumerate_graded_ideals(ring));
    let sub = |a: &[Elem], i: &Ideal| a.iter().all(|&x| i.contains(x));
    let times = |s: Elem, xs: &[Elem]| -> Vec<Elem> { xs.iter().map(|&x| ring.mul(s, x)).collect() };

    let violates = |v: &Violation| -> bool {
        match v {
            Violation::Pair { s, x, y } => {
                let xy = ring.mul(*x, *y);
                domain.contains(x)
                    && domain.contains(y)
                    && p.contains(xy)
                    && !(property.is_weakly() && xy == Elem::ZERO)
                    && !p.contains(ring.mul(*s, *x))
                    && !q.contains(ring.mul(*s, *y))
            }
            Violation::Ideals { s, ideals } => match property.shape() {
                Shape::IdealPairs => {
                    let prod = ideals[0].product(&ideals[1]).expect("same ring");
                    prod.is_subset(p)
                        && !(property.is_weakly() && prod.is_zero())
                        && !sub(&times(*s, ideals[0].elements()), p)
                        && !sub(&times(*s, ideals[1].elements()), q)
                }
                Shape::IdealTriples => {
                    let prod = ideals[0]
                        .product(&ideals[1])
                        .and_then(|t| t.product(&ideals[2]))
                        .expect("same ring");
                    prod.is_subset(p) && ideals.iter().all(|i| !sub(&times(*s, i.elements()), p))
                }
                Shape::SliceIdeals => {
                    let g = cert.grade.expect("per-grade");
                    let (a, b) = (ideals[0].slice(g), ideals[1].slice(g));
                    let prods: Vec<Elem> = a
                        .iter()
                        .flat_map(|&x| b.iter().map(move |&y| ring.mul(x, y)))
                        .collect();
                    sub(&prods, p)
                        && prods.iter().any(|&z| z != Elem::ZERO)
                        && !sub(&times(*s, &a), p)
                        && !sub(&times(*s, &b), q)
                }
                _ => false,
            },
            Violation::Colon { s, a } => {
                let g = cert.grade.expect("per-grade");
                let comp = ring.component(g);
                let colon_a: Vec<Elem> = comp.iter().copied().filter(|&r| p.contains(ring.mul(r, *a))).collect();
                let colon_s: Vec<Elem> = comp.iter().copied().filter(|&r| q.contains(ring.mul(r, *s))).collect();
                let ann_a: Vec<Elem> = comp.iter().copied().filter(|&r| ring.mul(r, *a) == Elem::ZERO).collect();
                comp.contains(a)
                    && !p.contains(ring.mul(*s, *a))
                    && !colon_a.iter().all(|r| colon_s.contains(r))
                    && colon_a != ann_a
            }
        }
    };

    if cert.verdict {
        let Some(w) = cert.witness else { return Ok(false) };
        if !candidates.contains(&w) {
            return Ok(false);
        }
        // exhaustive search for a violation of the witness
        let found = match property.shape() {
            Shape::Elementwise => domain.iter().any(|&x| {
                domain
                    .iter()
                    .any(|&y| violates(&Violation::Pair { s: w, x, y }))
            }),
            Shape::IdealPairs | Shape::SliceIdeals => {
                let l = lattice.as_ref().expect("lattice");
                l.iter().any(|i| {
                    l.iter().any(|j| {
                        violates(&Violation::Ideals {
                            s: w,
                            ideals: vec![i.clone(), j.clone()],
                        })
                    })
                })
            }
            Shape::IdealTriples => {
                let l = lattice.as_ref().expect("lattice");
                l.iter().any(|i| {
                    l.iter().any(|j| {
                        l.iter().any(|k| {
                            violates(&Violation::Ideals {
                                s: w,
                                ideals: vec![i.clone(), j.clone(), k.clone()],
                            })
                        })
                    })
                })
            }
            Shape::SliceColon => domain
                .iter()
                .any(|&a| violates(&Violation::Colon { s: w, a })),
        };
        Ok(!found)
    } else {
        let covered: Vec<Elem> = cert.counters.iter().map(|v| v.s()).collect();
        Ok(covered == candidates && cert.counters.iter().all(violates))
    }
}

/// All predicates on one `(P, S)` pair, with implication-chain checks.
#[derive(Debug)]
pub struct FullReport {
    pub rows: Vec<Certificate>,
    pub radical: Ideal,
    /// Implications between rows that failed to hold.
    pub inconsistencies: Vec<String>,
    /// Why per-grade rows are missing, if they are.
    pub note: Option<String>,
}

impl FullReport {
    pub fn verdict(&self, property: Property, grade: Option<Grade>) -> Option<bool> {
        self.rows
            .iter()
            .find(|c| c.property == property && c.grade == grade)
            .map(|c| c.verdict)
    }
}

pub fn classify_full(p: &Ideal, set: &MultSet) -> Result<FullReport> {
    let c = Classifier::new(p)?;
    if p.meets(set.elements()) {
        return Err(Error::NotDisjoint);
    }
    let lattice = IdealLattice::new(p.ring());
    let mut rows = Vec::new();
    for property in Property::ALL.into_iter().filter(|q| !q.per_grade()) {
        rows.push(c.check(property, set, None, Some(&lattice))?);
    }
    let mut note = None;
    if set.in_identity_component() {
        for g in p.ring().grade_group().elements() {
            for property in Property::ALL.into_iter().filter(|q| q.per_grade()) {
                rows.push(c.check(property, set, Some(g), Some(&lattice))?);
            }
        }
    } else {
        note = Some("S is not contained in R_e; per-grade predicates skipped".to_string());
    }
    let mut report = FullReport {
        rows,
        radical: c.radical().clone(),
        inconsistencies: Vec::new(),
        note,
    };
    use Property::*;
    let chain = [
        (GradedPrime, GradedPrimary),
        (GradedPrime, GradedWeaklyPrime),
        (GradedPrimary, GradedWeaklyPrimary),
        (GradedWeaklyPrime, GradedWeaklyPrimary),
        (GradedWeaklyPrimary, GradedWeaklySPrimary),
        (GradedSPrimary, GradedWeaklySPrimary),
        (GradedSPrime, GradedSPrimary),
        (GradedSPrime, GradedWeaklySPrime),
        (GradedWeaklySPrime, GradedWeaklySPrimary),
        (GradedPrime, GradedSPrime),
        (GradedPrimary, GradedSPrimary),
    ];
    for (a, b) in chain {
        if report.verdict(a, None) == Some(true) && report.verdict(b, None) == Some(false) {
            report.inconsistencies.push(format!("{a} holds but {b} does not"));
        }
    }
    for g in p.ring().grade_group().elements() {
        let g = Some(g);
        for (a, b) in [
            (GradedWeaklySPrimary, GWeaklySPrimary),
            (GradedSPrimary, GSPrimary),
        ] {
            if report.verdict(a, None) == Some(true) && report.verdict(b, g) == Some(false) {
                report.inconsistencies.push(format!("{a} holds but {b} fails in some grade"));
            }
        }
        if report.verdict(GSPrimary, g) == Some(true) && report.verdict(GWeaklySPrimary, g) == Some(false) {
            report.inconsistencies.push(format!("{GSPrimary} holds but {GWeaklySPrimary} does not"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradedRing;
    use std::sync::Arc;

    fn z(n: u32) -> Arc<GradedRing> {
        GradedRing::cyclic_trivial(n).unwrap()
    }

    /// Direct transcription of the elementwise definitions.
    fn oracle(p: &Ideal, s_cands: &[Elem], domain: &[Elem], weakly: bool, radical: bool) -> bool {
        let r = p.ring();
        let rad = p.grad_radical();
        let q = if radical { &rad } else { p };
        s_cands.iter().any(|&s| {
            domain.iter().all(|&x| {
                domain.iter().all(|&y| {
                    let xy = r.mul(x, y);
                    !p.contains(xy)
                        || (weakly && xy == Elem::ZERO)
                        || p.contains(r.mul(s, x))
                        || q.contains(r.mul(s, y))
                })
            })
        })
    }

    #[test]
    fn gaussian_twelve_zero_ideal() {
        let r = GradedRing::gaussian(12).unwrap();
        let p = Ideal::zero(&r);
        let s = MultSet::closure(&r, &[r.elem(&[3, 0]).unwrap()]).unwrap();
        let weak = is_graded_weakly_s_primary(&p, &s).unwrap();
        assert!(weak.verdict);
        assert_eq!(weak.trace_size, 0);
        let strong = is_graded_s_primary(&p, &s).unwrap();
        let h = r.homogeneous().to_vec();
        assert_eq!(strong.verdict, oracle(&p, s.elements(), &h, false, true));
        assert!(strong.verdict);
        assert_eq!(strong.witness, Some(r.elem(&[3, 0]).unwrap()));
        assert!(replay(&strong, &p, &s).unwrap());

        let e = r.grade_group().identity();
        let g0 = check(&p, Property::GSPrimary, Some(&s), Some(e)).unwrap();
        assert!(g0.verdict);
        assert_eq!(g0.witness, Some(r.elem(&[3, 0]).unwrap()));
        assert!(is_g_weakly_s_primary(&p, &s, e).unwrap().verdict);
    }

    #[test]
    fn z30_six_fails_with_two_three() {
        let r = z(30);
        let p = Ideal::principal(&r, Elem(6));
        let c = is_graded_weakly_primary(&p).unwrap();
        assert!(!c.verdict);
        assert_eq!(c.counters, vec![Violation::Pair { s: Elem(1), x: Elem(2), y: Elem(3) }]);
        assert!(replay(&c, &p, &MultSet::closure(&r, &[]).unwrap()).unwrap());
        let one = MultSet::closure(&r, &[]).unwrap();
        let c = is_graded_weakly_s_primary(&p, &one).unwrap();
        assert!(!c.verdict);
        assert_eq!(c.summary(&r), "graded_weakly_S_primary: false, counter=(2,3) for s=1");
    }

    #[test]
    fn z12_four_is_primary_not_prime() {
        let r = z(12);
        let p = Ideal::principal(&r, Elem(4));
        let one = MultSet::closure(&r, &[]).unwrap();
        assert!(is_graded_weakly_primary(&p).unwrap().verdict);
        assert!(check(&p, Property::GradedPrimary, None, None).unwrap().verdict);
        assert!(is_graded_s_primary(&p, &one).unwrap().verdict);
        let prime = is_graded_weakly_s_prime(&p, &one).unwrap();
        assert!(!prime.verdict);
        assert_eq!(prime.counters, vec![Violation::Pair { s: Elem(1), x: Elem(2), y: Elem(2) }]);
        let two = Ideal::principal(&r, Elem(2));
        assert!(is_graded_weakly_s_prime(&two, &one).unwrap().verdict);
    }

    #[test]
    fn ideal_pair_forms() {
        let r = z(12);
        let p = Ideal::principal(&r, Elem(4));
        let one = MultSet::closure(&r, &[]).unwrap();
        let lit = idealwise_weakly_s_primary(&p, &one, false).unwrap();
        assert!(!lit.verdict);
        // smallest ideals come first, so (6)(6) = 0 is found before (2)(2) = (4)
        let six = Ideal::principal(&r, Elem(6));
        assert_eq!(
            lit.counters,
            vec![Violation::Ideals { s: Elem(1), ideals: vec![six.clone(), six] }]
        );
        assert!(replay(&lit, &p, &one).unwrap());
        let two = Ideal::principal(&r, Elem(2));
        let mut alt = lit.clone();
        alt.counters = vec![Violation::Ideals { s: Elem(1), ideals: vec![two.clone(), two] }];
        assert!(replay(&alt, &p, &one).unwrap());
        let cor = idealwise_weakly_s_primary(&p, &one, true).unwrap();
        assert!(cor.verdict);
        assert!(replay(&cor, &p, &one).unwrap());
    }

    #[test]
    fn preconditions() {
        let r = z(12);
        let one = MultSet::closure(&r, &[]).unwrap();
        assert_eq!(
            is_graded_weakly_s_primary(&Ideal::whole(&r), &one).err(),
            Some(Error::NotProper)
        );
        let s = MultSet::closure(&r, &[Elem(3)]).unwrap();
        assert_eq!(
            is_graded_weakly_s_primary(&Ideal::principal(&r, Elem(3)), &s).err(),
            Some(Error::NotDisjoint)
        );
        let g = GradedRing::gaussian(4).unwrap();
        let i = g.elem(&[0, 1]).unwrap();
        let si = MultSet::closure(&g, &[i]).unwrap();
        let e = g.grade_group().identity();
        assert_eq!(
            is_g_weakly_s_primary(&Ideal::zero(&g), &si, e).err(),
            Some(Error::SetNotInIdentityComponent)
        );
    }

    #[test]
    fn field_zero_ideal_is_prime() {
        let r = z(7);
        let p = Ideal::zero(&r);
        assert!(check(&p, Property::GradedPrime, None, None).unwrap().verdict);
    }

    #[test]
    fn agreement_with_oracle_on_small_rings() {
        for r in [
            z(8),
            z(12),
            GradedRing::gaussian(4).unwrap(),
            GradedRing::dual_numbers(4).unwrap(),
        ] {
            let h = r.homogeneous().to_vec();
            let lattice = IdealLattice::new(&r);
            for p in lattice.ideals().iter().filter(|p| p.is_proper()) {
                let c = Classifier::new(p).unwrap();
                for gens in [vec![], vec![r.homogeneous()[2]], vec![r.homogeneous()[3]]] {
                    let Ok(s) = MultSet::closure(&r, &gens) else { continue };
                    if p.meets(s.elements()) {
                        continue;
                    }
                    for (prop, weakly, radical) in [
                        (Property::GradedWeaklySPrimary, true, true),
                        (Property::GradedSPrimary, false, true),
                        (Property::GradedWeaklySPrime, true, false),
                        (Property::GradedSPrime, false, false),
                    ] {
                        let cert = c.check(prop, &s, None, Some(&lattice)).unwrap();
                        assert_eq!(cert.verdict, oracle(p, s.elements(), &h, weakly, radical));
                        assert!(replay(&cert, p, &s).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn full_report_is_consistent() {
        let r = GradedRing::gaussian(12).unwrap();
        let p = Ideal::zero(&r);
        let s = MultSet::closure(&r, &[r.elem(&[3, 0]).unwrap()]).unwrap();
        let rep = classify_full(&p, &s).unwrap();
        assert!(rep.inconsistencies.is_empty(), "{:?}", rep.inconsistencies);
        assert_eq!(rep.verdict(Property::GradedWeaklySPrimary, None), Some(true));
        assert_eq!(rep.verdict(Property::GradedWeaklySPrime, None), Some(true));
        let odd = r.grade_group().grade(&[1]).unwrap();
        assert!(rep.verdict(Property::GWeaklySPrimary, Some(odd)).is_some());

        let z30 = z(30);
        let six = Ideal::principal(&z30, Elem(6));
        let one = MultSet::closure(&z30, &[]).unwrap();
        let rep = classify_full(&six, &one).unwrap();
        assert!(rep.inconsistencies.is_empty());
        for prop in [
            Property::GradedPrime,
            Property::GradedPrimary,
            Property::GradedWeaklyPrimary,
            Property::GradedWeaklySPrimary,
            Property::GradedSPrimary,
        ] {
            assert_eq!(rep.verdict(prop, None), Some(false), "{prop}");
        }
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(json, format!("\"{}\"", p.name()));
        }
    }
}
