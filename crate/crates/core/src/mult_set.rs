//! Multiplicative subsets of `h(R)`.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::localization::Localization;
use crate::ring::{Elem, GradedRing};

/// A multiplicatively closed set of homogeneous elements containing 1 and not 0.
#[derive(Clone)]
pub struct MultSet {
    ring: Arc<GradedRing>,
    gens: Vec<Elem>,
    members: FixedBitSet,
    elements: Vec<Elem>,
}

impl PartialEq for MultSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.members == other.members
    }
}

impl Eq for MultSet {}

impl fmt::Debug for MultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.format_set(&self.elements))
    }
}

impl MultSet {
    /// Multiplicative closure of `gens`, including the empty product.
    pub fn closure(ring: &Arc<GradedRing>, gens: &[Elem]) -> Result<MultSet> {
        for &g in gens {
            if !ring.contains_index(g) {
                return Err(Error::InvalidElement(format!("index {} out of range", g.index())));
            }
            if !ring.is_homogeneous(g) {
                return Err(Error::NotHomogeneous(ring.format(g)));
            }
        }
        let (members, elements) = raw_closure(ring, gens);
        if members.contains(0) {
            return Err(Error::ZeroInMultSet);
        }
        let mut set = MultSet {
            ring: ring.clone(),
            gens: Vec::new(),
            members,
            elements,
        };
        set.gens = set.minimal_gens();
        Ok(set)
    }

    /// The set itself, provided it is already multiplicatively closed.
    pub fn from_elements(ring: &Arc<GradedRing>, elements: &[Elem]) -> Result<MultSet> {
        let set = MultSet::closure(ring, elements)?;
        if set.len() != elements.len() + usize::from(!elements.contains(&ring.one())) {
            return Err(Error::Precondition("set is not multiplicatively closed".into()));
        }
        Ok(set)
    }

    /// Greedy generators in canonical order.
    fn minimal_gens(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = Vec::new();
        let mut reached = 1;
        for &x in &self.elements {
            if reached == self.len() {
                break;
            }
            if x == self.ring.one() {
                continue;
            }
            if !raw_closure(&self.ring, &gens).0.contains(x.index()) {
                gens.push(x);
                reached = raw_closure(&self.ring, &gens).1.len();
            }
        }
        gens
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn generators_coords(&self) -> Vec<Vec<i64>> {
        self.gens.iter().map(|&g| self.ring.coords_i64(g)).collect()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x.index())
    }

    pub fn is_subset(&self, other: &MultSet) -> bool {
        self.ring.same_ring(&other.ring) && self.members.is_subset(&other.members)
    }

    /// True when every element is a unit of `R`.
    pub fn all_units(&self) -> bool {
        self.elements.iter().all(|&s| self.ring.is_unit(s))
    }

    pub fn all_regular(&self) -> bool {
        self.elements.iter().all(|&s| self.ring.is_regular(s))
    }

    /// `S ⊆ R_e`.
    pub fn in_identity_component(&self) -> bool {
        let e = self.ring.grade_group().identity();
        self.elements.iter().all(|&s| self.ring.in_component(s, e))
    }

    /// Product of all elements; it annihilates into every `(P : s)`.
    pub fn product_of_all(&self) -> Elem {
        self.elements
            .iter()
            .fold(self.ring.one(), |acc, &s| self.ring.mul(acc, s))
    }

    /// `S* = {r ∈ h(R) : r/1 is a unit of S⁻¹R}`.
    pub fn saturation_star(&self) -> MultSet {
        let loc = Localization::new(self);
        let target = loc.ring();
        let elems: Vec<Elem> = self
            .ring
            .homogeneous()
            .iter()
            .copied()
            .filter(|&r| target.is_unit(loc.image(r)))
            .collect();
        MultSet::from_elements(&self.ring, &elems).expect("unit preimages form a multiplicative set")
    }

    /// `f(S)` under a map sending `S` into `ring`.
    pub fn mapped(&self, ring: &Arc<GradedRing>, f: impl Fn(Elem) -> Elem) -> Result<MultSet> {
        let images: Vec<Elem> = self.elements.iter().map(|&s| f(s)).collect();
        MultSet::closure(ring, &images)
    }
}

fn raw_closure(ring: &GradedRing, gens: &[Elem]) -> (FixedBitSet, Vec<Elem>) {
    let mut members = FixedBitSet::with_capacity(ring.order());
    let mut elements = vec![ring.one()];
    members.insert(ring.one().index());
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i];
        for &g in gens {
            let y = ring.mul(x, g);
            if !members.contains(y.index()) {
                members.insert(y.index());
                elements.push(y);
            }
        }
        i += 1;
    }
    elements.sort();
    (members, elements)
}

/// `P ∩ S = ∅`.
pub fn is_disjoint(p: &Ideal, s: &MultSet) -> bool {
    !p.meets(s.elements())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closures() {
        let g = GradedRing::gaussian(12).unwrap();
        let three = g.elem(&[3, 0]).unwrap();
        let s = MultSet::closure(&g, &[three]).unwrap();
        let expected: Vec<Elem> = [1, 3, 9].iter().map(|&a| g.elem(&[a, 0]).unwrap()).collect();
        assert_eq!(s.elements(), expected.as_slice());
        assert_eq!(s.generators(), &[three]);

        let z = GradedRing::cyclic_trivial(12).unwrap();
        assert_eq!(MultSet::closure(&z, &[]).unwrap().elements(), &[Elem(1)]);
        let twos = MultSet::closure(&z, &[Elem(2)]).unwrap();
        assert_eq!(twos.elements(), &[Elem(1), Elem(2), Elem(4), Elem(8)]);
        assert_eq!(MultSet::closure(&z, &[Elem(6)]), Err(Error::ZeroInMultSet));
        let mixed = g.elem(&[1, 1]).unwrap();
        assert!(matches!(
            MultSet::closure(&g, &[mixed]),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn disjointness() {
        let g = GradedRing::gaussian(12).unwrap();
        let s = MultSet::closure(&g, &[g.elem(&[3, 0]).unwrap()]).unwrap();
        assert!(is_disjoint(&Ideal::zero(&g), &s));
        assert!(!is_disjoint(&Ideal::whole(&g), &s));
        let z = GradedRing::cyclic_trivial(12).unwrap();
        let s = MultSet::closure(&z, &[Elem(3)]).unwrap();
        assert!(!is_disjoint(&Ideal::principal(&z, Elem(3)), &s));
    }

    #[test]
    fn saturation_in_gaussian_twelve() {
        let g = GradedRing::gaussian(12).unwrap();
        let s = MultSet::closure(&g, &[g.elem(&[3, 0]).unwrap()]).unwrap();
        let star = s.saturation_star();
        let mut oracle: Vec<Elem> = (0..12)
            .filter(|a| a % 2 == 1)
            .flat_map(|a| [g.elem(&[a, 0]).unwrap(), g.elem(&[0, a]).unwrap()])
            .collect();
        oracle.sort();
        assert_eq!(star.elements(), oracle.as_slice());
        assert!(s.is_subset(&star));
        assert_eq!(star.saturation_star(), star);
    }

    #[test]
    fn units_saturate_to_units() {
        let z = GradedRing::cyclic_trivial(12).unwrap();
        let units = MultSet::closure(&z, &[Elem(5), Elem(7)]).unwrap();
        assert_eq!(units.len(), 4);
        assert_eq!(units.saturation_star(), units);
        assert_eq!(units.generators(), &[Elem(5), Elem(7)]);
    }
}
