//! Classifier verdicts against direct enumeration from the definitions.

use std::sync::Arc;

use proptest::prelude::*;

use graded_ideals::classify::{self, Property};
use graded_ideals::ideal::enumerate_graded_ideals;
use graded_ideals::{Elem, Grade, GradedRing, Ideal, MultSet};

fn nilpotent_mod(r: &GradedRing, p: &Ideal, x: Elem) -> bool {
    let mut y = x;
    for _ in 0..=r.order() {
        if p.contains(y) {
            return true;
        }
        y = r.mul(y, x);
    }
    false
}

/// `Grad(P)` from its definition: every homogeneous component has a power in `P`.
fn radical(r: &GradedRing, p: &Ideal) -> Vec<Elem> {
    r.elements()
        .filter(|&x| r.decompose(x).into_iter().all(|(_, c)| nilpotent_mod(r, p, c)))
        .collect()
}

/// The S-primary family: some `s` with `xy ∈ P` forcing `sx ∈ P` or `sy ∈ Grad(P)`,
/// over the given domain; `weakly` exempts `xy = 0`.
fn primary_like(r: &GradedRing, p: &Ideal, s: &[Elem], domain: &[Elem], weakly: bool) -> bool {
    let rad = radical(r, p);
    s.iter().any(|&w| {
        domain.iter().all(|&x| {
            domain.iter().all(|&y| {
                let xy = r.mul(x, y);
                !p.contains(xy)
                    || (weakly && xy == Elem::ZERO)
                    || p.contains(r.mul(w, x))
                    || rad.contains(&r.mul(w, y))
            })
        })
    })
}

/// The weakly S-prime condition on `Q`.
fn weakly_prime_like(r: &GradedRing, q: &[Elem], s: &[Elem], domain: &[Elem]) -> bool {
    s.iter().any(|&w| {
        domain.iter().all(|&x| {
            domain.iter().all(|&y| {
                let xy = r.mul(x, y);
                !q.contains(&xy) || xy == Elem::ZERO || q.contains(&r.mul(w, x)) || q.contains(&r.mul(w, y))
            })
        })
    })
}

fn ring_strategy() -> impl Strategy<Value = Arc<GradedRing>> {
    prop_oneof![
        (2u32..=36).prop_map(|n| GradedRing::cyclic_trivial(n).unwrap()),
        (2u32..=12).prop_map(|n| GradedRing::gaussian(n).unwrap()),
        (2u32..=12).prop_map(|n| GradedRing::dual_numbers(n).unwrap()),
    ]
}

/// A ring, one of its proper graded ideals and a homogeneous set missing it.
fn instance() -> impl Strategy<Value = (Arc<GradedRing>, Ideal, MultSet)> {
    (ring_strategy(), any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_filter_map(
        "no disjoint set",
        |(r, pi, si)| {
            let ideals: Vec<Ideal> = enumerate_graded_ideals(&r).into_iter().filter(|i| i.is_proper()).collect();
            let p = pi.get(&ideals).clone();
            let h = r.homogeneous().to_vec();
            let g = *si.get(&h);
            let s = MultSet::closure(&r, &[g]).ok()?;
            (!p.meets(s.elements())).then_some((r, p, s))
        },
    )
}

fn grades(r: &GradedRing) -> Vec<Grade> {
    r.grade_group().elements().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn radical_matches_definition((r, p, _s) in instance()) {
        let mut expected = radical(&r, &p);
        expected.sort();
        let mut got = p.grad_radical().elements().to_vec();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn set_level_verdicts((r, p, s) in instance()) {
        let h = r.homogeneous().to_vec();
        let one = [r.one()];
        let rad = radical(&r, &p);
        let cases = [
            (Property::GradedWeaklySPrimary, primary_like(&r, &p, s.elements(), &h, true)),
            (Property::GradedSPrimary, primary_like(&r, &p, s.elements(), &h, false)),
            (Property::GradedWeaklyPrimary, primary_like(&r, &p, &one, &h, true)),
            (Property::GradedPrimary, primary_like(&r, &p, &one, &h, false)),
            (Property::GradedWeaklySPrime, weakly_prime_like(&r, p.elements(), s.elements(), &h)),
        ];
        for (property, expected) in cases {
            let cert = classify::check(&p, property, Some(&s), None).unwrap();
            prop_assert_eq!(cert.verdict, expected, "{}", property);
        }
        let on_radical = Ideal::from_elements(&r, &rad).unwrap();
        let cert = classify::check(&on_radical, Property::GradedWeaklySPrime, Some(&s), None).unwrap();
        prop_assert_eq!(cert.verdict, weakly_prime_like(&r, &rad, s.elements(), &h));
    }

    #[test]
    fn per_grade_verdicts((r, p, s) in instance()) {
        prop_assume!(s.in_identity_component());
        for g in grades(&r) {
            let domain = r.component(g).to_vec();
            let cert = classify::check(&p, Property::GWeaklySPrimary, Some(&s), Some(g)).unwrap();
            prop_assert_eq!(cert.verdict, primary_like(&r, &p, s.elements(), &domain, true));
            let cert = classify::check(&p, Property::GSPrimary, Some(&s), Some(g)).unwrap();
            prop_assert_eq!(cert.verdict, primary_like(&r, &p, s.elements(), &domain, false));
        }
    }

    #[test]
    fn weakly_verdicts_are_monotone_in_the_set((r, p, s) in instance()) {
        // S ⊆ S' with S' still disjoint from P keeps the property
        let weakly = classify::check(&p, Property::GradedWeaklySPrimary, Some(&s), None).unwrap().verdict;
        for &extra in r.homogeneous() {
            let mut gens = s.generators().to_vec();
            gens.push(extra);
            let Ok(big) = MultSet::closure(&r, &gens) else { continue };
            if p.meets(big.elements()) {
                continue;
            }
            let wide = classify::check(&p, Property::GradedWeaklySPrimary, Some(&big), None).unwrap().verdict;
            prop_assert!(!weakly || wide);
        }
    }
}

#[test]
fn ideal_pairs_corrected_agrees_with_enumeration_on_small_rings() {
    for n in [4u32, 6, 8, 9, 12] {
        let r = GradedRing::cyclic_trivial(n).unwrap();
        let lattice = enumerate_graded_ideals(&r);
        let rad_of = |p: &Ideal| radical(&r, p);
        for p in lattice.iter().filter(|p| p.is_proper()) {
            let rad = rad_of(p);
            let one = r.one();
            let expected = lattice.iter().all(|i| {
                lattice.iter().all(|j| {
                    let ij = i.product(j).unwrap();
                    ij.is_zero()
                        || !ij.is_subset(p)
                        || i.scaled(one).is_subset(p)
                        || j.elements().iter().all(|x| rad.contains(x))
                })
            });
            let s = MultSet::closure(&r, &[]).unwrap();
            let cert = classify::check(p, Property::IdealPairsCorrected, Some(&s), None).unwrap();
            assert_eq!(cert.verdict, expected, "Z_{n} {p}");
        }
    }
}
