//! Graded ring homomorphisms between finite graded rings.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, SpanBuilder};
use crate::mult_set::MultSet;
use crate::ring::{Elem, GradedRing};

/// A unital ring homomorphism `f: R1 → R2` with `f((R1)_g) ⊆ (R2)_g`.
#[derive(Clone)]
pub struct GradedHom {
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    values: Vec<Elem>,
    kernel: Ideal,
}

impl fmt::Debug for GradedHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source.name(), self.target.name())
    }
}

impl GradedHom {
    /// The additive map sending the `i`-th basis element of `source` to
    /// `basis_images[i]`, validated to be a graded unital ring homomorphism.
    pub fn new(
        source: &Arc<GradedRing>,
        target: &Arc<GradedRing>,
        basis_images: &[Elem],
    ) -> Result<GradedHom> {
        if source.grade_group() != target.grade_group() {
            return Err(Error::MismatchedGradeGroups);
        }
        let k = source.basis().len();
        if basis_images.len() != k {
            return Err(Error::InvalidHom(format!(
                "{} basis images given, {} expected",
                basis_images.len(),
                k
            )));
        }
        for (i, (b, &y)) in source.basis().iter().zip(basis_images).enumerate() {
            if !target.contains_index(y) {
                return Err(Error::InvalidHom(format!("image of b_{i} out of range")));
            }
            if target.scale(b.order as u64, y) != Elem::ZERO {
                return Err(Error::InvalidHom(format!(
                    "b_{i} has additive order {} but its image does not",
                    b.order
                )));
            }
            if !target.in_component(y, b.grade) {
                return Err(Error::InvalidHom(format!(
                    "image of b_{i} leaves grade {}",
                    source.grade_group().format(b.grade)
                )));
            }
        }
        let values: Vec<Elem> = source
            .elements()
            .map(|x| {
                source
                    .coords(x)
                    .iter()
                    .zip(basis_images)
                    .fold(Elem::ZERO, |acc, (&c, &y)| {
                        target.add(acc, target.scale(c as u64, y))
                    })
            })
            .collect();
        if values[source.one().index()] != target.one() {
            return Err(Error::InvalidHom("map is not unital".into()));
        }
        let basis: Vec<Elem> = source.basis_elems().collect();
        for &a in &basis {
            for &b in &basis {
                let lhs = values[source.mul(a, b).index()];
                let rhs = target.mul(values[a.index()], values[b.index()]);
                if lhs != rhs {
                    return Err(Error::InvalidHom(format!(
                        "f({}·{}) != f({})·f({})",
                        source.format(a),
                        source.format(b),
                        source.format(a),
                        source.format(b)
                    )));
                }
            }
        }
        let mut kernel = FixedBitSet::with_capacity(source.order());
        for (x, &y) in values.iter().enumerate() {
            if y == Elem::ZERO {
                kernel.insert(x);
            }
        }
        Ok(GradedHom {
            source: source.clone(),
            target: target.clone(),
            values,
            kernel: Ideal::from_members(source, kernel),
        })
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.values[x.index()]
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn is_epi(&self) -> bool {
        let mut hit = FixedBitSet::with_capacity(self.target.order());
        for &y in &self.values {
            hit.insert(y.index());
        }
        hit.is_full()
    }

    pub fn is_mono(&self) -> bool {
        self.kernel.is_zero()
    }

    /// The ideal generated by `f(P)`; equal to the set image when `f` is onto.
    pub fn image_ideal(&self, p: &Ideal) -> Ideal {
        let mut b = SpanBuilder::new(&self.target);
        for &g in p.generators() {
            b.add_ideal_gen(self.apply(g));
        }
        b.finish(&self.target)
    }

    /// `f⁻¹(Q)`.
    pub fn preimage_ideal(&self, q: &Ideal) -> Ideal {
        let mut m = FixedBitSet::with_capacity(self.source.order());
        for (x, &y) in self.values.iter().enumerate() {
            if q.contains(y) {
                m.insert(x);
            }
        }
        Ideal::from_members(&self.source, m)
    }

    /// Multiplicative closure of `f(S)`.
    pub fn image_set(&self, s: &MultSet) -> Result<MultSet> {
        s.mapped(&self.target, |x| self.apply(x))
    }

    pub fn compose(&self, next: &GradedHom) -> Result<GradedHom> {
        if !self.target.same_ring(&next.source) {
            return Err(Error::MismatchedRings);
        }
        let images: Vec<Elem> = self
            .source
            .basis_elems()
            .map(|b| next.apply(self.apply(b)))
            .collect();
        GradedHom::new(&self.source, &next.target, &images)
    }
}

/// Projections `R1 × R2 → R1` and `R1 × R2 → R2`.
pub fn product_projections(product: &Arc<GradedRing>) -> Option<(GradedHom, GradedHom)> {
    let (l, r) = product.factors()?;
    let (l, r) = (l.clone(), r.clone());
    let kl = l.basis().len();
    let basis: Vec<Elem> = product.basis_elems().collect();
    let left: Vec<Elem> = basis
        .iter()
        .enumerate()
        .map(|(i, &b)| if i < kl { product.split(b).unwrap().0 } else { Elem::ZERO })
        .collect();
    let right: Vec<Elem> = basis
        .iter()
        .enumerate()
        .map(|(i, &b)| if i >= kl { product.split(b).unwrap().1 } else { Elem::ZERO })
        .collect();
    Some((
        GradedHom::new(product, &l, &left).expect("projection is a homomorphism"),
        GradedHom::new(product, &r, &right).expect("projection is a homomorphism"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{identity_component_ring, quotient_ring};

    #[test]
    fn projection_to_quotient() {
        let z = GradedRing::cyclic_trivial(12).unwrap();
        let four = Ideal::principal(&z, Elem(4));
        let (q, f) = quotient_ring(&four).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(f.kernel(), &four);
        assert!(f.is_epi());
        assert!(!f.is_mono());
        let two = Ideal::principal(&z, Elem(2));
        let img = f.image_ideal(&two);
        assert_eq!(img.len(), 2);
        assert_eq!(f.preimage_ideal(&img), two);
        assert_eq!(f.preimage_ideal(&Ideal::zero(&q)), four);

        let s = MultSet::closure(&z, &[Elem(3)]).unwrap();
        let fs = f.image_set(&s).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(f.apply(Elem(3))));
        assert_eq!(f.apply(Elem(3)), f.apply(Elem(11)));
    }

    #[test]
    fn identity_component_inclusion() {
        let g = GradedRing::gaussian(12).unwrap();
        let (re, inc) = identity_component_ring(&g).unwrap();
        assert_eq!(re.order(), 12);
        assert!(inc.is_mono());
        assert!(!inc.is_epi());
        let e = g.grade_group().identity();
        for x in re.elements() {
            assert!(g.in_component(inc.apply(x), e));
        }
    }

    #[test]
    fn invalid_maps_are_rejected() {
        let z = GradedRing::cyclic_trivial(12).unwrap();
        let z4 = GradedRing::cyclic_trivial(4).unwrap();
        assert!(matches!(
            GradedHom::new(&z, &z4, &[Elem::ZERO]),
            Err(Error::InvalidHom(_))
        ));
        assert!(GradedHom::new(&z, &z4, &[Elem(1)]).is_ok());
        let z5 = GradedRing::cyclic_trivial(5).unwrap();
        assert!(matches!(
            GradedHom::new(&z, &z5, &[Elem(1)]),
            Err(Error::InvalidHom(_))
        ));
        let g = GradedRing::gaussian(4).unwrap();
        let d = GradedRing::dual_numbers(4).unwrap();
        // i ↦ x is additive and graded but i² = -1 while x² = 0
        assert!(matches!(
            GradedHom::new(&g, &d, &[d.one(), d.elem(&[0, 1]).unwrap()]),
            Err(Error::InvalidHom(_))
        ));
    }

    #[test]
    fn projections_of_products() {
        let a = GradedRing::cyclic_trivial(4).unwrap();
        let b = GradedRing::cyclic_trivial(6).unwrap();
        let p = GradedRing::product(&a, &b).unwrap();
        let (pl, pr) = product_projections(&p).unwrap();
        let x = p.pair(Elem(3), Elem(5)).unwrap();
        assert_eq!(pl.apply(x), Elem(3));
        assert_eq!(pr.apply(x), Elem(5));
        assert!(pl.is_epi() && pr.is_epi());
        assert_eq!(pl.kernel().len(), 6);
        let comp = pl.compose(&GradedHom::new(&a, &a, &[Elem(1)]).unwrap()).unwrap();
        assert_eq!(comp.apply(x), Elem(3));
    }
}
