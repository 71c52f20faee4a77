//! Quotients by graded ideals and the identity-component subring.

use std::sync::Arc;

use super::snf::diagonalize;
use super::{BasisElem, GradedRing, RingParts, RingSpec};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, SpanBuilder};
use crate::morphism::GradedHom;
use crate::ring::Elem;

/// A new basis element of the quotient: which grade, which old basis
/// positions carry it, and the column of `V` projecting onto it.
struct NewBasis {
    positions: Vec<usize>,
    column: Vec<i64>,
    lift: Vec<i64>,
    order: u32,
}

/// `R/I` together with the projection `R → R/I`.
///
/// Each component `R_g / I_g` is presented by diagonalizing the relations
/// `m_t·b_t` and the coordinates of an additive generating set of `I_g`.
pub fn quotient_ring(ideal: &Ideal) -> Result<(Arc<GradedRing>, GradedHom)> {
    if !ideal.is_graded() {
        return Err(Error::NotGraded);
    }
    let ring = ideal.ring();
    let grades = ring.grade_group();
    let mut new_basis: Vec<(NewBasis, super::Grade)> = Vec::new();
    for g in grades.elements() {
        let positions: Vec<usize> = ring
            .basis()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.grade == g)
            .map(|(t, _)| t)
            .collect();
        if positions.is_empty() {
            continue;
        }
        let mut rows: Vec<Vec<i64>> = positions
            .iter()
            .enumerate()
            .map(|(j, &t)| {
                let mut row = vec![0i64; positions.len()];
                row[j] = ring.basis()[t].order as i64;
                row
            })
            .collect();
        let mut span = SpanBuilder::new(ring);
        for x in ideal.slice(g) {
            if !span.contains(x) {
                span.add(x);
                let c = ring.coords(x);
                rows.push(positions.iter().map(|&t| c[t] as i64).collect());
            }
        }
        let d = diagonalize(rows, positions.len());
        for j in 0..positions.len() {
            if d.diag[j] > 1 {
                new_basis.push((
                    NewBasis {
                        positions: positions.clone(),
                        column: d.transform.iter().map(|row| row[j]).collect(),
                        lift: d.inverse[j].clone(),
                        order: d.diag[j] as u32,
                    },
                    g,
                ));
            }
        }
    }

    let project = |x: Elem| -> Vec<u32> {
        let c = ring.coords(x);
        new_basis
            .iter()
            .map(|(nb, _)| {
                let v: i64 = nb
                    .positions
                    .iter()
                    .zip(&nb.column)
                    .map(|(&t, &col)| c[t] as i64 * col)
                    .sum();
                v.rem_euclid(nb.order as i64) as u32
            })
            .collect()
    };
    let lift = |nb: &NewBasis| -> Elem {
        let mut coords = vec![0i64; ring.basis().len()];
        for (&t, &v) in nb.positions.iter().zip(&nb.lift) {
            coords[t] = v;
        }
        ring.elem(&coords).expect("coordinate length matches")
    };

    let lifts: Vec<Elem> = new_basis.iter().map(|(nb, _)| lift(nb)).collect();
    let k = new_basis.len();
    let products = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| project(ring.mul(lifts[i], lifts[j])))
                .collect()
        })
        .collect();
    let basis: Vec<BasisElem> = new_basis
        .iter()
        .enumerate()
        .map(|(i, (nb, g))| BasisElem {
            order: nb.order,
            grade: *g,
            label: format!("e{i}"),
        })
        .collect();

    if k == 0 {
        return Err(Error::Precondition("quotient by the whole ring".into()));
    }
    let target = GradedRing::assemble(RingParts {
        name: format!("{}/{}", ring.name(), ideal),
        spec: RingSpec::Quotient {
            ring: Box::new(ring.spec().clone()),
            ideal: ideal.generators_coords(),
        },
        grades: grades.clone(),
        basis,
        products,
        one: project(ring.one()),
        labels: None,
        factors: None,
    })?;
    let images: Vec<Elem> = ring
        .basis_elems()
        .map(|b| {
            let c: Vec<i64> = project(b).into_iter().map(i64::from).collect();
            target.elem(&c).expect("coordinate length matches")
        })
        .collect();
    let hom = GradedHom::new(ring, &target, &images)?;
    debug_assert_eq!(hom.kernel(), ideal);
    Ok((target, hom))
}

/// `R_e` as a ring graded by the same group with everything in grade `e`,
/// and its inclusion into `R`.
pub fn identity_component_ring(ring: &Arc<GradedRing>) -> Result<(Arc<GradedRing>, GradedHom)> {
    let e = ring.grade_group().identity();
    let positions: Vec<usize> = ring
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, b)| b.grade == e)
        .map(|(t, _)| t)
        .collect();
    let k = ring.basis().len();
    let products = positions
        .iter()
        .map(|&i| {
            positions
                .iter()
                .map(|&j| {
                    let c = ring.coords(ring.mul(ring.basis_elem(i), ring.basis_elem(j)));
                    positions.iter().map(|&t| c[t]).collect()
                })
                .collect()
        })
        .collect();
    let one = ring.coords(ring.one());
    debug_assert_eq!(one.len(), k);
    let labels: Vec<String> = positions
        .iter()
        .map(|&t| ring.basis()[t].label.clone())
        .collect();
    let sub = GradedRing::assemble(RingParts {
        name: format!("({})_e", ring.name()),
        spec: RingSpec::IdentityComponent {
            ring: Box::new(ring.spec().clone()),
        },
        grades: ring.grade_group().clone(),
        basis: positions.iter().map(|&t| ring.basis()[t].clone()).collect(),
        products,
        one: positions.iter().map(|&t| one[t]).collect(),
        labels: ring.factors().is_none().then_some(labels),
        factors: None,
    })?;
    let images: Vec<Elem> = positions.iter().map(|&t| ring.basis_elem(t)).collect();
    let hom = GradedHom::new(&sub, ring, &images)?;
    Ok((sub, hom))
}
