//! The finite rings, ideals and multiplicative sets the registry runs over.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::classify::{Certificate, Classifier, Property};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::localization::Localization;
use crate::morphism::GradedHom;
use crate::mult_set::MultSet;
use crate::ring::{identity_component_ring, quotient_ring, Elem, Grade, GradeGroup, GradedRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusSize {
    /// Empty corpus.
    Empty,
    Small,
    Default,
    Large,
}

impl FromStr for CorpusSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "empty" => Ok(CorpusSize::Empty),
            "small" => Ok(CorpusSize::Small),
            "default" => Ok(CorpusSize::Default),
            "large" => Ok(CorpusSize::Large),
            _ => Err(Error::Precondition(format!("unknown corpus size `{s}`"))),
        }
    }
}

impl fmt::Display for CorpusSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorpusSize::Empty => "empty",
            CorpusSize::Small => "small",
            CorpusSize::Default => "default",
            CorpusSize::Large => "large",
        })
    }
}

/// One ring with its lattice, its corpus sets and memoized verdicts.
pub struct RingEntry {
    pub ring: Arc<GradedRing>,
    pub lattice: IdealLattice,
    /// Closures of at most two homogeneous generators, by size then elements.
    pub sets: Vec<MultSet>,
    one: MultSet,
    classifiers: Vec<OnceLock<Classifier>>,
    radicals: Vec<OnceLock<usize>>,
    verdicts: Mutex<HashMap<(usize, Vec<Elem>, Property, Option<Grade>), Certificate>>,
}

impl RingEntry {
    pub fn new(ring: Arc<GradedRing>, with_sets: bool) -> RingEntry {
        let lattice = IdealLattice::new(&ring);
        let n = lattice.len();
        let sets = if with_sets { two_generator_sets(&ring) } else { Vec::new() };
        let one = MultSet::closure(&ring, &[]).expect("the empty closure is {1}");
        RingEntry {
            ring,
            lattice,
            sets,
            one,
            classifiers: (0..n).map(|_| OnceLock::new()).collect(),
            radicals: (0..n).map(|_| OnceLock::new()).collect(),
            verdicts: Mutex::new(HashMap::new()),
        }
    }

    pub fn name(&self) -> &str {
        self.ring.name()
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        self.lattice.get(i)
    }

    pub fn index(&self, p: &Ideal) -> usize {
        self.lattice.index_of(p).expect("graded ideal belongs to the lattice")
    }

    /// Indices of proper ideals.
    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.lattice.len()).filter(|&i| self.ideal(i).is_proper())
    }

    pub fn radical(&self, i: usize) -> usize {
        *self.radicals[i].get_or_init(|| self.index(&self.ideal(i).grad_radical()))
    }

    pub fn intersect(&self, i: usize, j: usize) -> usize {
        self.index(&self.ideal(i).intersect(self.ideal(j)).expect("same ring"))
    }

    pub fn sum(&self, i: usize, j: usize) -> usize {
        self.index(&self.ideal(i).sum(self.ideal(j)).expect("same ring"))
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    /// Certificate for a proper ideal, memoized.
    pub fn cert(&self, p: usize, set: &MultSet, property: Property, grade: Option<Grade>) -> Result<Certificate> {
        let key = (p, set.elements().to_vec(), property, grade);
        if let Some(c) = self.verdicts.lock().expect("poisoned").get(&key) {
            return Ok(c.clone());
        }
        let classifier = match self.classifiers[p].get() {
            Some(c) => c,
            None => {
                let c = Classifier::new(self.ideal(p))?;
                let _ = self.classifiers[p].set(c);
                self.classifiers[p].get().expect("just set")
            }
        };
        let cert = classifier.check(property, set, grade, Some(&self.lattice))?;
        self.verdicts
            .lock()
            .expect("poisoned")
            .insert(key, cert.clone());
        Ok(cert)
    }

    pub fn holds(&self, p: usize, set: &MultSet, property: Property, grade: Option<Grade>) -> Result<bool> {
        Ok(self.cert(p, set, property, grade)?.verdict)
    }

    /// `{1}`.
    pub fn unit_set(&self) -> &MultSet {
        &self.one
    }

    /// Graded ideals form a chain under inclusion.
    pub fn is_chain(&self) -> bool {
        let l = self.lattice.ideals();
        l.iter()
            .all(|a| l.iter().all(|b| a.is_subset(b) || b.is_subset(a)))
    }
}

/// A ring derived from a corpus ring together with the connecting map.
pub struct Derived {
    pub entry: RingEntry,
    pub map: GradedHom,
}

/// Rings, their instances, and caches of derived rings.
pub struct Corpus {
    pub size: CorpusSize,
    pub entries: Vec<RingEntry>,
    quotients: Mutex<HashMap<(usize, usize), Arc<Derived>>>,
    identity_components: Mutex<HashMap<usize, Arc<Derived>>>,
    localizations: Mutex<HashMap<(usize, Vec<Elem>), Arc<(RingEntry, Localization)>>>,
}

/// A triple `(R, P, S)` with `P` proper and `P ∩ S = ∅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Instance {
    pub ring: usize,
    pub ideal: usize,
    pub set: usize,
}

impl Corpus {
    pub fn build(size: CorpusSize) -> Result<Corpus> {
        let rings = corpus_rings(size)?;
        Ok(Corpus::from_rings(size, rings))
    }

    pub fn from_rings(size: CorpusSize, rings: Vec<Arc<GradedRing>>) -> Corpus {
        Corpus {
            size,
            entries: rings.into_iter().map(|r| RingEntry::new(r, true)).collect(),
            quotients: Mutex::new(HashMap::new()),
            identity_components: Mutex::new(HashMap::new()),
            localizations: Mutex::new(HashMap::new()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All instances in ring, ideal, set order.
    pub fn instances(&self) -> Vec<Instance> {
        let mut out = Vec::new();
        for (r, e) in self.entries.iter().enumerate() {
            for p in e.proper() {
                for (s, set) in e.sets.iter().enumerate() {
                    if !e.ideal(p).meets(set.elements()) {
                        out.push(Instance { ring: r, ideal: p, set: s });
                    }
                }
            }
        }
        out
    }

    pub fn entry(&self, i: Instance) -> &RingEntry {
        &self.entries[i.ring]
    }

    pub fn set(&self, i: Instance) -> &MultSet {
        &self.entries[i.ring].sets[i.set]
    }

    pub fn describe(&self, i: Instance) -> String {
        let e = self.entry(i);
        describe(&e.ring, e.ideal(i.ideal), self.set(i))
    }

    /// Corpus entry whose ring is `ring`, if any.
    pub fn entry_of(&self, ring: &GradedRing) -> Option<&RingEntry> {
        self.entries.iter().find(|e| e.ring.same_ring(ring))
    }

    /// `R/K` for the lattice ideal `k` of entry `r`.
    pub fn quotient(&self, r: usize, k: usize) -> Result<Arc<Derived>> {
        if let Some(d) = self.quotients.lock().expect("poisoned").get(&(r, k)) {
            return Ok(d.clone());
        }
        let (ring, map) = quotient_ring(self.entries[r].ideal(k))?;
        let d = Arc::new(Derived {
            entry: RingEntry::new(ring, false),
            map,
        });
        self.quotients
            .lock()
            .expect("poisoned")
            .insert((r, k), d.clone());
        Ok(d)
    }

    /// `R_e` with its inclusion into entry `r`; its entry carries corpus sets.
    pub fn identity_component(&self, r: usize) -> Result<Arc<Derived>> {
        if let Some(d) = self.identity_components.lock().expect("poisoned").get(&r) {
            return Ok(d.clone());
        }
        let (ring, map) = identity_component_ring(&self.entries[r].ring)?;
        let d = Arc::new(Derived {
            entry: RingEntry::new(ring, true),
            map,
        });
        self.identity_components
            .lock()
            .expect("poisoned")
            .insert(r, d.clone());
        Ok(d)
    }

    /// `S⁻¹R` for a set of entry `r`.
    pub fn localization(&self, r: usize, set: &MultSet) -> Arc<(RingEntry, Localization)> {
        let key = (r, set.elements().to_vec());
        if let Some(d) = self.localizations.lock().expect("poisoned").get(&key) {
            return d.clone();
        }
        let loc = Localization::new(set);
        let entry = RingEntry::new(loc.ring().clone(), false);
        let d = Arc::new((entry, loc));
        self.localizations
            .lock()
            .expect("poisoned")
            .insert(key, d.clone());
        d
    }
}

pub fn describe(ring: &GradedRing, p: &Ideal, s: &MultSet) -> String {
    format!("{} | P={} | S={}", ring.name(), p, ring.format_set(s.elements()))
}

/// Multiplicative closures of at most two homogeneous generators, without zero.
pub fn two_generator_sets(ring: &Arc<GradedRing>) -> Vec<MultSet> {
    let h = &ring.homogeneous()[1..];
    let mut seen: HashMap<Vec<Elem>, MultSet> = HashMap::new();
    let mut push = |gens: &[Elem]| {
        if let Ok(s) = MultSet::closure(ring, gens) {
            seen.entry(s.elements().to_vec()).or_insert(s);
        }
    };
    push(&[]);
    for (i, &a) in h.iter().enumerate() {
        push(&[a]);
        for &b in &h[i + 1..] {
            push(&[a, b]);
        }
    }
    let mut sets: Vec<MultSet> = seen.into_values().collect();
    sets.sort_by(|a, b| (a.len(), a.elements()).cmp(&(b.len(), b.elements())));
    sets
}

fn z2() -> GradeGroup {
    GradeGroup::cyclic(2).expect("Z_2")
}

/// `Z_n` concentrated in grade 0 of `Z_2`, so it can be multiplied with `Z_2`-graded rings.
fn z2_cyclic(n: u32) -> Result<Arc<GradedRing>> {
    let g = z2();
    let e = g.identity();
    GradedRing::cyclic(n, g, e)
}

pub fn corpus_rings(size: CorpusSize) -> Result<Vec<Arc<GradedRing>>> {
    let z = GradedRing::cyclic_trivial;
    let mut rings = Vec::new();
    match size {
        CorpusSize::Empty => return Ok(rings),
        CorpusSize::Small => {
            let (z4, z5, z6) = (z(4)?, z(5)?, z(6)?);
            let (g4, d4) = (GradedRing::gaussian(4)?, GradedRing::dual_numbers(4)?);
            rings.extend([z4.clone(), z6.clone(), z(12)?, z5.clone()]);
            rings.extend([g4, GradedRing::gaussian(12)?, d4]);
            rings.push(GradedRing::product(&z4, &z5)?);
            rings.push(GradedRing::product(&z4, &z6)?);
        }
        CorpusSize::Default | CorpusSize::Large => {
            let (z4, z5, z6, z7, z9) = (z(4)?, z(5)?, z(6)?, z(7)?, z(9)?);
            rings.extend([z4.clone(), z6.clone(), z(8)?, z9.clone(), z(12)?, z(30)?]);
            let g4 = GradedRing::gaussian(4)?;
            rings.extend([g4.clone(), GradedRing::gaussian(6)?, GradedRing::gaussian(12)?]);
            let d4 = GradedRing::dual_numbers(4)?;
            rings.extend([d4.clone(), GradedRing::dual_numbers(12)?]);
            rings.extend([z5.clone(), z7.clone()]);
            rings.push(GradedRing::product(&z4, &z5)?);
            rings.push(GradedRing::product(&z4, &z6)?);
            rings.push(GradedRing::product(&z6, &z9)?);
            rings.push(GradedRing::product(&z5, &z7)?);
            rings.push(GradedRing::product(&g4, &d4)?);
            if size == CorpusSize::Large {
                rings.extend([z(16)?, z(18)?, z(36)?]);
                rings.extend([GradedRing::gaussian(8)?, GradedRing::gaussian(9)?]);
                rings.extend([GradedRing::dual_numbers(8)?, GradedRing::dual_numbers(9)?]);
                let (z3, z5g) = (z2_cyclic(3)?, z2_cyclic(5)?);
                rings.extend([z3.clone(), z5g.clone()]);
                rings.push(GradedRing::product(&g4, &z3)?);
                rings.push(GradedRing::product(&d4, &z5g)?);
                // x in grade 1 of Z_3 with x^3 = 0
                let g3 = GradeGroup::cyclic(3)?;
                let x = g3.grade(&[1])?;
                rings.push(GradedRing::poly_quotient(2, &[0, 0, 0, 1], g3, x)?);
            }
        }
    }
    Ok(rings)
}
