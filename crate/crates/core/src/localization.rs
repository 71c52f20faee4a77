//! Localization of a finite graded ring at a multiplicative set.
//!
//! In a finite ring, `S⁻¹R` is `R/K` with `K = {r : sr = 0 for some s ∈ S}`:
//! every image of `S` is regular in `R/K`, hence a unit.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::ideal::Ideal;
use crate::morphism::GradedHom;
use crate::mult_set::MultSet;
use crate::ring::{quotient_ring, Elem, GradedRing};

#[derive(Clone, Debug)]
pub struct Localization {
    set: MultSet,
    kernel: Ideal,
    map: GradedHom,
}

impl Localization {
    pub fn new(set: &MultSet) -> Localization {
        let ring = set.ring();
        let mut k = FixedBitSet::with_capacity(ring.order());
        for r in ring.elements() {
            if set.elements().iter().any(|&s| ring.mul(s, r) == Elem::ZERO) {
                k.insert(r.index());
            }
        }
        let kernel = Ideal::from_members(ring, k);
        let (_, map) = quotient_ring(&kernel).expect("annihilator of a homogeneous set is graded and proper");
        Localization {
            set: set.clone(),
            kernel,
            map,
        }
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        self.set.ring()
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.map.target()
    }

    pub fn set(&self) -> &MultSet {
        &self.set
    }

    /// `K`, the kernel of `R → S⁻¹R`.
    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn map(&self) -> &GradedHom {
        &self.map
    }

    /// `r/1`.
    pub fn image(&self, r: Elem) -> Elem {
        self.map.apply(r)
    }

    /// `r/s`.
    pub fn fraction(&self, r: Elem, s: Elem) -> Option<Elem> {
        let inv = self.ring().inverse(self.image(s))?;
        Some(self.ring().mul(self.image(r), inv))
    }

    /// `S⁻¹P`.
    pub fn extend(&self, p: &Ideal) -> Ideal {
        self.map.image_ideal(p)
    }

    /// Preimage of an ideal of `S⁻¹R`.
    pub fn contract(&self, q: &Ideal) -> Ideal {
        self.map.preimage_ideal(q)
    }
}

/// Every nonzero homogeneous element is a unit.
pub fn is_graded_field(ring: &GradedRing) -> bool {
    ring.order() > 1 && ring.homogeneous()[1..].iter().all(|&x| ring.is_unit(x))
}

/// No nonzero homogeneous element kills another nonzero homogeneous element.
pub fn is_graded_domain(ring: &GradedRing) -> bool {
    let h = &ring.homogeneous()[1..];
    ring.order() > 1 && h.iter().all(|&x| h.iter().all(|&y| ring.mul(x, y) != Elem::ZERO))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z12_at_powers_of_three() {
        let z = GradedRing::cyclic_trivial(12).unwrap();
        let s = MultSet::closure(&z, &[Elem(3)]).unwrap();
        let l = Localization::new(&s);
        assert_eq!(l.kernel(), &Ideal::principal(&z, Elem(4)));
        assert_eq!(l.ring().order(), 4);
        assert!(l.ring().is_unit(l.image(Elem(3))));
        let four = Ideal::principal(&z, Elem(4));
        let ext = l.extend(&four);
        assert!(ext.is_zero());
        assert_eq!(l.contract(&ext), four);
        assert_eq!(four.colon(Elem(9)), four);
        assert!(l.contract(&Ideal::whole(l.ring())).is_whole());
        assert_eq!(l.fraction(Elem(3), Elem(3)), Some(l.ring().one()));
    }

    #[test]
    fn trivial_and_gaussian_localizations() {
        let z = GradedRing::cyclic_trivial(12).unwrap();
        let one = MultSet::closure(&z, &[]).unwrap();
        let l = Localization::new(&one);
        assert_eq!(l.ring().order(), 12);
        assert!(l.kernel().is_zero());

        let g = GradedRing::gaussian(12).unwrap();
        let s = MultSet::closure(&g, &[g.elem(&[3, 0]).unwrap()]).unwrap();
        let l = Localization::new(&s);
        assert_eq!(l.kernel().len(), 9);
        assert_eq!(l.ring().order(), 16);
    }

    #[test]
    fn radical_commutes_with_extension() {
        let z = GradedRing::cyclic_trivial(24).unwrap();
        let s = MultSet::closure(&z, &[Elem(3)]).unwrap();
        let l = Localization::new(&s);
        for p in crate::ideal::enumerate_graded_ideals(&z) {
            if p.meets(s.elements()) {
                continue;
            }
            assert_eq!(l.extend(&p.grad_radical()), l.extend(&p).grad_radical());
        }
    }

    #[test]
    fn field_and_domain_tests() {
        let z5 = GradedRing::cyclic_trivial(5).unwrap();
        assert!(is_graded_field(&z5) && is_graded_domain(&z5));
        let z12 = GradedRing::cyclic_trivial(12).unwrap();
        assert!(!is_graded_field(&z12) && !is_graded_domain(&z12));
        let g = GradedRing::gaussian(12).unwrap();
        assert!(!is_graded_field(&g) && !is_graded_domain(&g));
        // Z_3[i] is a field; its grading is a Z_2-grading with both components nonzero
        let g3 = GradedRing::gaussian(3).unwrap();
        assert!(is_graded_field(&g3));
        // Z_5[i] is not a field but every nonzero homogeneous element is a unit
        let g5 = GradedRing::gaussian(5).unwrap();
        assert!(is_graded_field(&g5));
        assert!(!g5.is_unit(g5.elem(&[2, 1]).unwrap()));
    }
}
