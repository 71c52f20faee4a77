use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{identity_component_ring, quotient_ring, GradeGroup, GradedRing};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Construction recipe for a [`GradedRing`].
///
/// Grades are written as residue tuples, one entry per cyclic factor of the
/// grade group; an empty `grade_group` means the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingSpec {
    Cyclic {
        modulus: u32,
        #[serde(default)]
        grade_group: Vec<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        one_grade: Option<Vec<i64>>,
    },
    PolyQuotient {
        modulus: u32,
        /// Monic modulus polynomial, lowest coefficient first.
        poly: Vec<i64>,
        #[serde(default)]
        grade_group: Vec<u32>,
        x_grade: Vec<i64>,
    },
    Product {
        left: Box<RingSpec>,
        right: Box<RingSpec>,
    },
    Quotient {
        ring: Box<RingSpec>,
        /// Homogeneous generators of the ideal, as coordinate vectors.
        ideal: Vec<Vec<i64>>,
    },
    IdentityComponent {
        ring: Box<RingSpec>,
    },
}

impl RingSpec {
    pub fn cyclic(n: u32) -> Self {
        RingSpec::Cyclic {
            modulus: n,
            grade_group: Vec::new(),
            one_grade: None,
        }
    }

    pub fn build(&self) -> Result<Arc<GradedRing>> {
        match self {
            RingSpec::Cyclic {
                modulus,
                grade_group,
                one_grade,
            } => {
                let g = GradeGroup::new(grade_group.clone())?;
                let one = match one_grade {
                    Some(r) => g.grade(r)?,
                    None => g.identity(),
                };
                GradedRing::cyclic(*modulus, g, one)
            }
            RingSpec::PolyQuotient {
                modulus,
                poly,
                grade_group,
                x_grade,
            } => {
                let g = GradeGroup::new(grade_group.clone())?;
                let x = g.grade(x_grade)?;
                GradedRing::poly_quotient(*modulus, poly, g, x)
            }
            RingSpec::Product { left, right } => {
                GradedRing::product(&left.build()?, &right.build()?)
            }
            RingSpec::Quotient { ring, ideal } => {
                let r = ring.build()?;
                let gens = ideal
                    .iter()
                    .map(|c| r.elem(c))
                    .collect::<Result<Vec<_>>>()?;
                let i = Ideal::generated(&r, &gens)?;
                Ok(quotient_ring(&i)?.0)
            }
            RingSpec::IdentityComponent { ring } => {
                Ok(identity_component_ring(&ring.build()?)?.0)
            }
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidStructure(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"kind":"product","left":{"kind":"poly_quotient","modulus":12,"poly":[1,0,1],"grade_group":[2],"x_grade":[1]},"right":{"kind":"cyclic","modulus":4,"grade_group":[2]}}"#;
        let spec: RingSpec = text.parse().unwrap();
        let back = serde_json::to_string(&spec).unwrap();
        assert_eq!(back.parse::<RingSpec>().unwrap(), spec);
        let r = spec.build().unwrap();
        assert_eq!(r.order(), 576);
        assert_eq!(r.spec(), &spec);
    }

    #[test]
    fn bad_grade_reference() {
        let text = r#"{"kind":"poly_quotient","modulus":12,"poly":[1,0,1],"grade_group":[2],"x_grade":[1,0]}"#;
        let spec: RingSpec = text.parse().unwrap();
        assert!(spec.build().is_err());
    }
}
