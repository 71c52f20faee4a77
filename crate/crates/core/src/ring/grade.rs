use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest grade group the crate accepts.
pub const MAX_GROUP_ORDER: usize = 1 << 16;

/// A finite abelian group written as a direct product of cyclic factors.
///
/// Elements are encoded as mixed-radix indices ([`Grade`]); the identity is
/// index 0 and the group law is componentwise addition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradeGroup {
    orders: Vec<u32>,
}

/// An element of a [`GradeGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Grade(pub(crate) u32);

impl Grade {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl GradeGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidGradeGroup("cyclic orders must be at least 1".into()));
        }
        let order = orders.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m as usize));
        match order {
            Some(n) if n <= MAX_GROUP_ORDER => Ok(Self { orders }),
            _ => Err(Error::InvalidGradeGroup(format!("group order exceeds {MAX_GROUP_ORDER}"))),
        }
    }

    pub fn trivial() -> Self {
        Self { orders: Vec::new() }
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn cyclic_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&m| m as usize).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Grade {
        Grade(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Grade> {
        (0..self.order() as u32).map(Grade)
    }

    /// Builds a grade from residues, one per cyclic factor (reduced modulo each order).
    pub fn grade(&self, residues: &[i64]) -> Result<Grade> {
        if residues.len() != self.orders.len() {
            return Err(Error::InvalidGradeGroup(format!(
                "grade {residues:?} has {} components, group has {}",
                residues.len(),
                self.orders.len()
            )));
        }
        let mut index = 0u32;
        for (&r, &m) in residues.iter().zip(&self.orders).rev() {
            index = index * m + r.rem_euclid(m as i64) as u32;
        }
        Ok(Grade(index))
    }

    pub fn residues(&self, g: Grade) -> Vec<u32> {
        let mut rest = g.0;
        self.orders
            .iter()
            .map(|&m| {
                let r = rest % m;
                rest /= m;
                r
            })
            .collect()
    }

    pub fn add(&self, a: Grade, b: Grade) -> Grade {
        let (mut x, mut y) = (a.0, b.0);
        let mut index = 0u32;
        let mut place = 1u32;
        for &m in &self.orders {
            let r = (x % m + y % m) % m;
            index += r * place;
            place *= m;
            x /= m;
            y /= m;
        }
        Grade(index)
    }

    pub fn neg(&self, a: Grade) -> Grade {
        let mut x = a.0;
        let mut index = 0u32;
        let mut place = 1u32;
        for &m in &self.orders {
            let r = (m - x % m) % m;
            index += r * place;
            place *= m;
            x /= m;
        }
        Grade(index)
    }

    /// `k·g` in additive notation.
    pub fn times(&self, k: u64, g: Grade) -> Grade {
        let residues: Vec<i64> = self
            .residues(g)
            .into_iter()
            .zip(&self.orders)
            .map(|(r, &m)| ((r as u64 * (k % m as u64)) % m as u64) as i64)
            .collect();
        self.grade(&residues).expect("residue count matches")
    }

    /// Least common multiple of the cyclic orders; every element's order divides it.
    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1u64, |acc, &m| num_integer::lcm(acc, m as u64))
    }

    pub fn element_order(&self, g: Grade) -> u64 {
        let mut k = 1u64;
        let mut acc = g;
        while acc != self.identity() {
            acc = self.add(acc, g);
            k += 1;
        }
        k
    }

    pub fn contains(&self, g: Grade) -> bool {
        (g.0 as usize) < self.order()
    }

    pub fn format(&self, g: Grade) -> String {
        let r = self.residues(g);
        match r.len() {
            0 => "e".to_string(),
            1 => r[0].to_string(),
            _ => format!(
                "({})",
                r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }
}
