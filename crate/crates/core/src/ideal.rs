//! Ideals of finite graded rings, stored as realized element sets.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::mult_set::MultSet;
use crate::ring::{Elem, Grade, GradedRing};

/// Incremental additive span inside a ring.
pub(crate) struct SpanBuilder<'a> {
    ring: &'a GradedRing,
    members: FixedBitSet,
    elements: Vec<Elem>,
}

impl<'a> SpanBuilder<'a> {
    pub(crate) fn new(ring: &'a GradedRing) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.order());
        members.insert(0);
        SpanBuilder {
            ring,
            members,
            elements: vec![Elem::ZERO],
        }
    }

    pub(crate) fn from_ideal(ideal: &'a Ideal) -> Self {
        SpanBuilder {
            ring: &ideal.ring,
            members: ideal.members.clone(),
            elements: ideal.elements.clone(),
        }
    }

    pub(crate) fn contains(&self, x: Elem) -> bool {
        self.members.contains(x.index())
    }

    /// Adjoins `x` to the additive subgroup, one coset of the old group at a time.
    pub(crate) fn add(&mut self, x: Elem) {
        let base = self.elements.len();
        let mut cur = x;
        while !self.members.contains(cur.index()) {
            for i in 0..base {
                let y = self.ring.add(self.elements[i], cur);
                self.members.insert(y.index());
                self.elements.push(y);
            }
            cur = self.ring.add(cur, x);
        }
    }

    /// Adjoins the principal ideal `R·g`.
    pub(crate) fn add_ideal_gen(&mut self, g: Elem) {
        for b in self.ring.basis_elems() {
            let y = self.ring.mul(b, g);
            self.add(y);
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    pub(crate) fn finish(self, ring: &Arc<GradedRing>) -> Ideal {
        Ideal::from_members(ring, self.members)
    }

    #[cfg(test)]
    pub(crate) fn into_elements(mut self) -> Vec<Elem> {
        self.elements.sort();
        self.elements
    }
}

/// An ideal of a finite graded ring.
///
/// Equality and hashing use the realized element set; generator lists are
/// derived canonically on demand.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<GradedRing>,
    members: FixedBitSet,
    elements: Vec<Elem>,
    gens: OnceLock<Vec<Elem>>,
    graded: OnceLock<bool>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.id().hash(state);
        self.members.hash(state);
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring.name())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators()
            .iter()
            .map(|&g| self.ring.format(g))
            .collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(", "))
        }
    }
}

impl Ideal {
    pub(crate) fn from_members(ring: &Arc<GradedRing>, members: FixedBitSet) -> Ideal {
        let elements = members.ones().map(Elem::from_index).collect();
        Ideal {
            ring: ring.clone(),
            members,
            elements,
            gens: OnceLock::new(),
            graded: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Arc<GradedRing>) -> Ideal {
        SpanBuilder::new(ring).finish(ring)
    }

    pub fn whole(ring: &Arc<GradedRing>) -> Ideal {
        let mut members = FixedBitSet::with_capacity(ring.order());
        members.insert_range(..);
        Ideal::from_members(ring, members)
    }

    /// The smallest ideal containing the homogeneous elements `gens`.
    pub fn generated(ring: &Arc<GradedRing>, gens: &[Elem]) -> Result<Ideal> {
        for &g in gens {
            if !ring.contains_index(g) {
                return Err(Error::InvalidElement(format!("index {} out of range", g.index())));
            }
            if !ring.is_homogeneous(g) {
                return Err(Error::NotHomogeneous(ring.format(g)));
            }
        }
        Ok(Ideal::span(ring, gens))
    }

    /// The ideal generated by arbitrary elements; graded only when the
    /// elements' components happen to lie in it.
    pub fn span(ring: &Arc<GradedRing>, gens: &[Elem]) -> Ideal {
        let mut b = SpanBuilder::new(ring);
        for &g in gens {
            b.add_ideal_gen(g);
        }
        b.finish(ring)
    }

    /// Principal ideal `(x)`.
    pub fn principal(ring: &Arc<GradedRing>, x: Elem) -> Ideal {
        Ideal::span(ring, &[x])
    }

    /// The ideal whose realized set is exactly `members`, if it is one.
    pub fn from_elements(ring: &Arc<GradedRing>, elements: &[Elem]) -> Option<Ideal> {
        let mut members = FixedBitSet::with_capacity(ring.order());
        for &x in elements {
            if !ring.contains_index(x) {
                return None;
            }
            members.insert(x.index());
        }
        let candidate = Ideal::from_members(ring, members);
        is_ideal(&candidate.ring, &candidate.elements, &candidate.members).then_some(candidate)
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x.index())
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.ring.order()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    /// Every member's homogeneous components are members.
    pub fn is_graded(&self) -> bool {
        *self.graded.get_or_init(|| {
            self.elements.iter().all(|&x| {
                self.ring.is_homogeneous(x)
                    || self
                        .ring
                        .decompose(x)
                        .iter()
                        .all(|&(_, c)| self.contains(c))
            })
        })
    }

    /// A canonical generating set: members taken greedily in canonical order,
    /// homogeneous ones only when the ideal is graded.
    pub fn generators(&self) -> &[Elem] {
        self.gens.get_or_init(|| {
            let graded = self.is_graded();
            let mut b = SpanBuilder::new(&self.ring);
            let mut gens = Vec::new();
            for &x in &self.elements {
                if b.len() == self.len() {
                    break;
                }
                if (!graded || self.ring.is_homogeneous(x)) && !b.contains(x) {
                    b.add_ideal_gen(x);
                    gens.push(x);
                }
            }
            gens
        })
    }

    pub fn generators_coords(&self) -> Vec<Vec<i64>> {
        self.generators()
            .iter()
            .map(|&g| self.ring.coords_i64(g))
            .collect()
    }

    fn check_same(&self, other: &Ideal) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::MismatchedRings)
        }
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.ring.same_ring(&other.ring) && self.members.is_subset(&other.members)
    }

    /// `P_g = P ∩ R_g`, zero included.
    pub fn slice(&self, g: Grade) -> Vec<Elem> {
        self.ring
            .component(g)
            .iter()
            .copied()
            .filter(|&x| self.contains(x))
            .collect()
    }

    pub fn meets(&self, set: &[Elem]) -> bool {
        set.iter().any(|&x| self.contains(x))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut b = SpanBuilder::from_ideal(big);
        for &g in small.generators() {
            b.add_ideal_gen(g);
        }
        Ok(b.finish(&self.ring))
    }

    /// Ideal generated by all products `xy`, `x ∈ self`, `y ∈ other`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let mut b = SpanBuilder::new(&self.ring);
        for &x in self.generators() {
            for &y in other.generators() {
                b.add_ideal_gen(self.ring.mul(x, y));
            }
        }
        Ok(b.finish(&self.ring))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Ok(Ideal::from_members(&self.ring, m))
    }

    /// `(P : s) = {x : sx ∈ P}`.
    pub fn colon(&self, s: Elem) -> Ideal {
        let mut m = FixedBitSet::with_capacity(self.ring.order());
        for x in self.ring.elements() {
            if self.contains(self.ring.mul(s, x)) {
                m.insert(x.index());
            }
        }
        Ideal::from_members(&self.ring, m)
    }

    /// `(P : J) = {x : xJ ⊆ P}`.
    pub fn colon_ideal(&self, j: &Ideal) -> Result<Ideal> {
        self.check_same(j)?;
        let mut m = FixedBitSet::with_capacity(self.ring.order());
        m.insert_range(..);
        for &g in j.generators() {
            m.intersect_with(&self.colon(g).members);
        }
        Ok(Ideal::from_members(&self.ring, m))
    }

    /// `(P : s^∞)`, the limit of `(P : s) ⊆ (P : s²) ⊆ …`.
    pub fn colon_stable(&self, s: Elem) -> Ideal {
        let mut power = s;
        let mut cur = self.colon(power);
        loop {
            power = self.ring.mul(power, s);
            let next = self.colon(power);
            if next.len() == cur.len() {
                return cur;
            }
            cur = next;
        }
    }

    /// `Grad(P)`: homogeneous elements with a power in `P`, and their span.
    ///
    /// For a graded `P` this is exactly the set of elements whose homogeneous
    /// components all have a power in `P`.
    pub fn grad_radical(&self) -> Ideal {
        let ring = &self.ring;
        let exp = ring.order().next_power_of_two() as u64;
        let mut b = SpanBuilder::new(ring);
        for &x in ring.homogeneous() {
            if !b.contains(x) && self.contains(ring.pow(x, exp)) {
                b.add_ideal_gen(x);
            }
        }
        b.finish(ring)
    }

    /// `(P :_{R_g} a) = {r ∈ R_g : ra ∈ P}`.
    pub fn colon_graded_slice(&self, a: Elem, g: Grade) -> Vec<Elem> {
        self.ring
            .component(g)
            .iter()
            .copied()
            .filter(|&r| self.contains(self.ring.mul(r, a)))
            .collect()
    }

    /// `s·P`, the ideal generated by `{sx : x ∈ P}`.
    pub fn scaled(&self, s: Elem) -> Ideal {
        let mut b = SpanBuilder::new(&self.ring);
        for &g in self.generators() {
            b.add_ideal_gen(self.ring.mul(s, g));
        }
        b.finish(&self.ring)
    }

    pub fn format_elements(&self) -> String {
        self.ring.format_set(&self.elements)
    }
}

fn is_ideal(ring: &GradedRing, elements: &[Elem], members: &FixedBitSet) -> bool {
    if !members.contains(0) {
        return false;
    }
    let closed_add = elements
        .iter()
        .all(|&x| elements.iter().all(|&y| members.contains(ring.add(x, y).index())));
    closed_add
        && elements.iter().all(|&x| {
            ring.basis_elems()
                .all(|b| members.contains(ring.mul(b, x).index()))
        })
}

/// True when `subset` is an ideal whose members decompose into members.
pub fn is_graded_ideal(ring: &Arc<GradedRing>, subset: &[Elem]) -> bool {
    Ideal::from_elements(ring, subset).is_some_and(|i| i.is_graded())
}

/// Every graded ideal exactly once, sorted by size and then by elements.
///
/// Graded ideals are exactly the sums of homogeneous principal ideals, so the
/// lattice is the join-closure of `{(x) : x ∈ h(R)}`.
pub fn enumerate_graded_ideals(ring: &Arc<GradedRing>) -> Vec<Ideal> {
    let mut principals: Vec<Ideal> = Vec::new();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    for &x in ring.homogeneous() {
        let p = Ideal::principal(ring, x);
        if !seen.contains_key(&p.members) {
            seen.insert(p.members.clone(), principals.len());
            principals.push(p);
        }
    }
    let mut all = principals.clone();
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            for p in &principals {
                if p.is_subset(&all[idx]) {
                    continue;
                }
                let s = all[idx].sum(p).expect("same ring");
                if !seen.contains_key(&s.members) {
                    seen.insert(s.members.clone(), all.len());
                    next.push(all.len());
                    all.push(s);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    all
}

/// Graded ideals containing `base` and disjoint from `set` that are maximal
/// under inclusion among such, taken from `lattice`.
pub fn maximal_disjoint_ideals(lattice: &[Ideal], base: &Ideal, set: &MultSet) -> Result<Vec<Ideal>> {
    if base.meets(set.elements()) {
        return Err(Error::NotDisjoint);
    }
    let candidates: Vec<&Ideal> = lattice
        .iter()
        .filter(|p| base.is_subset(p) && !p.meets(set.elements()))
        .collect();
    Ok(candidates
        .iter()
        .filter(|p| {
            !candidates
                .iter()
                .any(|q| q.len() > p.len() && p.is_subset(q))
        })
        .map(|p| (*p).clone())
        .collect())
}

/// The first maximal disjoint ideal in lattice order.
pub fn maximal_disjoint_ideal(ring: &Arc<GradedRing>, base: &Ideal, set: &MultSet) -> Result<Ideal> {
    let lattice = enumerate_graded_ideals(ring);
    let found = maximal_disjoint_ideals(&lattice, base, set)?;
    Ok(found.into_iter().next().expect("base itself is a candidate"))
}

/// All graded ideals of a ring with indexed lookup and a lazily filled
/// product table.
pub struct IdealLattice {
    ring: Arc<GradedRing>,
    ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    products: OnceLock<Vec<u32>>,
}

impl IdealLattice {
    pub fn new(ring: &Arc<GradedRing>) -> IdealLattice {
        let ideals = enumerate_graded_ideals(ring);
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, p)| (p.members.clone(), i))
            .collect();
        IdealLattice {
            ring: ring.clone(),
            ideals,
            index,
            products: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn index_of(&self, p: &Ideal) -> Option<usize> {
        if !p.ring.same_ring(&self.ring) {
            return None;
        }
        self.index.get(&p.members).copied()
    }

    /// Lattice position of `I_i·I_j`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        let n = self.ideals.len();
        let table = self.products.get_or_init(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in a..n {
                    let prod = self.ideals[a].product(&self.ideals[b]).expect("same ring");
                    let k = self.index[&prod.members] as u32;
                    t[a * n + b] = k;
                    t[b * n + a] = k;
                }
            }
            t
        });
        table[i * n + j] as usize
    }
}
