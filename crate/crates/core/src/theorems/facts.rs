//! Self-contained, serializable claims that a counterexample is made of.
//!
//! Each [`Fact`] names its ring by [`RingSpec`] and its ideals and sets by
//! coordinate vectors, so it can be re-evaluated from scratch through the
//! public API with no state from the run that produced it.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classify::{self, Property};
use crate::error::{Error, Result};
use crate::euclid::verify_witness_facts;
use crate::ideal::{enumerate_graded_ideals, Ideal};
use crate::localization::{is_graded_domain, is_graded_field, Localization};
use crate::mult_set::MultSet;
use crate::ring::{Elem, Grade, GradedRing, RingSpec};

/// An ideal described by an expression over generator lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum IdealExpr {
    Gens { gens: Vec<Vec<i64>> },
    Radical { of: Box<IdealExpr> },
    Intersect { left: Box<IdealExpr>, right: Box<IdealExpr> },
    Sum { left: Box<IdealExpr>, right: Box<IdealExpr> },
    Colon { of: Box<IdealExpr>, s: Vec<i64> },
    ColonStable { of: Box<IdealExpr>, s: Vec<i64> },
    /// Contraction of the extension to `S⁻¹R`.
    Contraction { of: Box<IdealExpr>, set: Vec<Vec<i64>> },
}

impl IdealExpr {
    pub fn of(p: &Ideal) -> IdealExpr {
        IdealExpr::Gens {
            gens: p.generators_coords(),
        }
    }

    pub fn radical(self) -> IdealExpr {
        IdealExpr::Radical { of: Box::new(self) }
    }

    pub fn intersect(self, other: IdealExpr) -> IdealExpr {
        IdealExpr::Intersect {
            left: Box::new(self),
            right: Box::new(other),
        }
    }

    pub fn sum(self, other: IdealExpr) -> IdealExpr {
        IdealExpr::Sum {
            left: Box::new(self),
            right: Box::new(other),
        }
    }

    pub fn colon(self, s: Vec<i64>) -> IdealExpr {
        IdealExpr::Colon { of: Box::new(self), s }
    }

    pub fn colon_stable(self, s: Vec<i64>) -> IdealExpr {
        IdealExpr::ColonStable { of: Box::new(self), s }
    }

    pub fn contraction(self, set: Vec<Vec<i64>>) -> IdealExpr {
        IdealExpr::Contraction { of: Box::new(self), set }
    }

    pub fn eval(&self, ring: &Arc<GradedRing>) -> Result<Ideal> {
        Ok(match self {
            IdealExpr::Gens { gens } => {
                let elems = elems(ring, gens)?;
                Ideal::generated(ring, &elems)?
            }
            IdealExpr::Radical { of } => of.eval(ring)?.grad_radical(),
            IdealExpr::Intersect { left, right } => left.eval(ring)?.intersect(&right.eval(ring)?)?,
            IdealExpr::Sum { left, right } => left.eval(ring)?.sum(&right.eval(ring)?)?,
            IdealExpr::Colon { of, s } => of.eval(ring)?.colon(ring.elem(s)?),
            IdealExpr::ColonStable { of, s } => of.eval(ring)?.colon_stable(ring.elem(s)?),
            IdealExpr::Contraction { of, set } => {
                let set = MultSet::closure(ring, &elems(ring, set)?)?;
                let loc = Localization::new(&set);
                loc.contract(&loc.extend(&of.eval(ring)?))
            }
        })
    }
}

/// A claim with its recorded truth value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fact {
    /// A classification verdict; `set` lists generators of `S`.
    Property {
        ring: RingSpec,
        ideal: IdealExpr,
        set: Vec<Vec<i64>>,
        property: Property,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grade: Option<Vec<i64>>,
        holds: bool,
    },
    IdealEq {
        ring: RingSpec,
        left: IdealExpr,
        right: IdealExpr,
        holds: bool,
    },
    IdealSubset {
        ring: RingSpec,
        left: IdealExpr,
        right: IdealExpr,
        holds: bool,
    },
    /// `s · A_g · B_h = {0}` elementwise.
    SliceProductZero {
        ring: RingSpec,
        s: Vec<i64>,
        left: IdealExpr,
        left_grade: Vec<i64>,
        right: IdealExpr,
        right_grade: Vec<i64>,
        holds: bool,
    },
    /// `A_g ⊆ B`.
    SliceSubset {
        ring: RingSpec,
        ideal: IdealExpr,
        grade: Vec<i64>,
        target: IdealExpr,
        holds: bool,
    },
    Disjoint {
        ring: RingSpec,
        ideal: IdealExpr,
        set: Vec<Vec<i64>>,
        holds: bool,
    },
    SetUnits {
        ring: RingSpec,
        set: Vec<Vec<i64>>,
        holds: bool,
    },
    SetRegular {
        ring: RingSpec,
        set: Vec<Vec<i64>>,
        holds: bool,
    },
    SetSubset {
        ring: RingSpec,
        left: Vec<Vec<i64>>,
        right: Vec<Vec<i64>>,
        holds: bool,
    },
    /// Every `s ∈ large` has some `t ∈ large` with `st ∈ small`.
    SetAbsorbs {
        ring: RingSpec,
        small: Vec<Vec<i64>>,
        large: Vec<Vec<i64>>,
        holds: bool,
    },
    /// `{0}` has `property` and no other proper graded ideal disjoint from `S` does.
    OnlyZero {
        ring: RingSpec,
        set: Vec<Vec<i64>>,
        property: Property,
        holds: bool,
    },
    /// Every proper graded ideal disjoint from `S` with `property` also has `then`.
    Every {
        ring: RingSpec,
        set: Vec<Vec<i64>>,
        property: Property,
        then: Property,
        holds: bool,
    },
    GradedDomain {
        ring: RingSpec,
        holds: bool,
    },
    GradedField {
        ring: RingSpec,
        holds: bool,
    },
    /// A row of the exact-arithmetic witness table.
    Witness {
        statement: String,
        holds: bool,
    },
}

fn elems(ring: &GradedRing, coords: &[Vec<i64>]) -> Result<Vec<Elem>> {
    coords.iter().map(|c| ring.elem(c)).collect()
}

fn grade(ring: &GradedRing, residues: &[i64]) -> Result<Grade> {
    ring.grade_group().grade(residues)
}

fn set(ring: &Arc<GradedRing>, gens: &[Vec<i64>]) -> Result<MultSet> {
    MultSet::closure(ring, &elems(ring, gens)?)
}

fn disjoint_ideals(ring: &Arc<GradedRing>, s: &MultSet) -> Vec<Ideal> {
    enumerate_graded_ideals(ring)
        .into_iter()
        .filter(|p| p.is_proper() && !p.meets(s.elements()))
        .collect()
}

impl Fact {
    /// The truth value recorded when the fact was produced.
    pub fn holds(&self) -> bool {
        match self {
            Fact::Property { holds, .. }
            | Fact::IdealEq { holds, .. }
            | Fact::IdealSubset { holds, .. }
            | Fact::SliceProductZero { holds, .. }
            | Fact::SliceSubset { holds, .. }
            | Fact::Disjoint { holds, .. }
            | Fact::SetUnits { holds, .. }
            | Fact::SetRegular { holds, .. }
            | Fact::SetSubset { holds, .. }
            | Fact::SetAbsorbs { holds, .. }
            | Fact::OnlyZero { holds, .. }
            | Fact::Every { holds, .. }
            | Fact::GradedDomain { holds, .. }
            | Fact::GradedField { holds, .. }
            | Fact::Witness { holds, .. } => *holds,
        }
    }

    /// Recomputes the claim from its description.
    pub fn evaluate(&self) -> Result<bool> {
        match self {
            Fact::Property {
                ring,
                ideal,
                set: gens,
                property,
                grade: g,
                ..
            } => {
                let r = ring.build()?;
                let p = ideal.eval(&r)?;
                let s = set(&r, gens)?;
                let g = g.as_ref().map(|g| grade(&r, g)).transpose()?;
                let cert = classify::check(&p, *property, Some(&s), g)?;
                if !classify::replay(&cert, &p, &s)? {
                    return Err(Error::Precondition(format!("certificate for {property} does not replay")));
                }
                Ok(cert.verdict)
            }
            Fact::IdealEq { ring, left, right, .. } => {
                let r = ring.build()?;
                Ok(left.eval(&r)? == right.eval(&r)?)
            }
            Fact::IdealSubset { ring, left, right, .. } => {
                let r = ring.build()?;
                Ok(left.eval(&r)?.is_subset(&right.eval(&r)?))
            }
            Fact::SliceProductZero {
                ring,
                s,
                left,
                left_grade,
                right,
                right_grade,
                ..
            } => {
                let r = ring.build()?;
                let s = r.elem(s)?;
                let a = left.eval(&r)?.slice(grade(&r, left_grade)?);
                let b = right.eval(&r)?.slice(grade(&r, right_grade)?);
                Ok(a.iter()
                    .all(|&x| b.iter().all(|&y| r.mul(s, r.mul(x, y)) == Elem::ZERO)))
            }
            Fact::SliceSubset {
                ring,
                ideal,
                grade: g,
                target,
                ..
            } => {
                let r = ring.build()?;
                let t = target.eval(&r)?;
                Ok(ideal
                    .eval(&r)?
                    .slice(grade(&r, g)?)
                    .iter()
                    .all(|&x| t.contains(x)))
            }
            Fact::Disjoint {
                ring, ideal, set: gens, ..
            } => {
                let r = ring.build()?;
                Ok(!ideal.eval(&r)?.meets(set(&r, gens)?.elements()))
            }
            Fact::SetUnits { ring, set: gens, .. } => {
                let r = ring.build()?;
                Ok(set(&r, gens)?.all_units())
            }
            Fact::SetRegular { ring, set: gens, .. } => {
                let r = ring.build()?;
                Ok(set(&r, gens)?.all_regular())
            }
            Fact::SetSubset { ring, left, right, .. } => {
                let r = ring.build()?;
                Ok(set(&r, left)?.is_subset(&set(&r, right)?))
            }
            Fact::SetAbsorbs { ring, small, large, .. } => {
                let r = ring.build()?;
                let (small, large) = (set(&r, small)?, set(&r, large)?);
                Ok(large.elements().iter().all(|&s| {
                    large
                        .elements()
                        .iter()
                        .any(|&t| small.contains(r.mul(s, t)))
                }))
            }
            Fact::OnlyZero {
                ring, set: gens, property, ..
            } => {
                let r = ring.build()?;
                let s = set(&r, gens)?;
                for p in disjoint_ideals(&r, &s) {
                    let holds = classify::check(&p, *property, Some(&s), None)?.verdict;
                    if holds != p.is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Fact::Every {
                ring,
                set: gens,
                property,
                then,
                ..
            } => {
                let r = ring.build()?;
                let s = set(&r, gens)?;
                for p in disjoint_ideals(&r, &s) {
                    if classify::check(&p, *property, Some(&s), None)?.verdict
                        && !classify::check(&p, *then, Some(&s), None)?.verdict
                    {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Fact::GradedDomain { ring, .. } => Ok(is_graded_domain(&*ring.build()?)),
            Fact::GradedField { ring, .. } => Ok(is_graded_field(&*ring.build()?)),
            Fact::Witness { statement, .. } => verify_witness_facts()
                .into_iter()
                .find(|f| f.statement == *statement)
                .map(|f| f.holds)
                .ok_or_else(|| Error::Precondition(format!("no witness fact `{statement}`"))),
        }
    }

    /// The recomputed value agrees with the recorded one.
    pub fn replays(&self) -> Result<bool> {
        Ok(self.evaluate()? == self.holds())
    }
}
