//! Finite graded commutative rings.
//!
//! Every ring is presented as a finite abelian group with an explicit additive
//! basis `b_0, …, b_{k-1}` (basis element `b_i` has additive order `m_i` and a
//! grade), together with structure constants `b_i·b_j = Σ c_ijt b_t`.
//! Elements are coordinate vectors, encoded as mixed-radix indices so that
//! element `0` is zero and the index order is the canonical element order.

mod grade;
mod quotient;
mod snf;
mod spec;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

pub use grade::{Grade, GradeGroup, MAX_GROUP_ORDER};
pub use quotient::{identity_component_ring, quotient_ring};
pub use spec::RingSpec;

use crate::error::{Error, Result};

/// Largest ring order any constructor accepts.
pub const MAX_RING_ORDER: usize = 1 << 16;

/// Upper bound on the basis length (every basis element has order ≥ 2).
const MAX_BASIS: usize = 16;

/// Rings up to this order get full addition and multiplication tables.
const TABLE_THRESHOLD: usize = 512;

/// Homogeneous product tables are cached up to this many homogeneous elements.
const HOMOGENEOUS_TABLE_LIMIT: usize = 1024;

const ZERO_GRADE: u32 = u32::MAX - 1;
const MIXED_GRADE: u32 = u32::MAX;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// An element of a [`GradedRing`], identified by its canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Elem {
        Elem(i as u32)
    }
}

/// One additive generator of the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub order: u32,
    pub grade: Grade,
    pub label: String,
}

#[derive(Debug)]
enum Style {
    Linear(Vec<String>),
    Pair,
    Coords,
}

type Coords = [u32; MAX_BASIS];

pub struct GradedRing {
    id: u64,
    name: String,
    spec: RingSpec,
    grades: GradeGroup,
    basis: Vec<BasisElem>,
    /// Sparse `b_i·b_j`, indexed by `i*k + j`.
    table: Vec<Vec<(u8, u32)>>,
    place: Vec<u32>,
    one: Elem,
    order: usize,
    style: Style,
    factors: Option<(Arc<GradedRing>, Arc<GradedRing>)>,
    grade_of: Vec<u32>,
    components: Vec<Vec<Elem>>,
    homogeneous: Vec<Elem>,
    h_pos: Vec<u32>,
    add_table: Option<Vec<Elem>>,
    mul_table: Option<Vec<Elem>>,
    h_products: OnceLock<Option<Vec<Elem>>>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("grades", &self.grades)
            .finish()
    }
}

pub(crate) struct RingParts {
    pub name: String,
    pub spec: RingSpec,
    pub grades: GradeGroup,
    pub basis: Vec<BasisElem>,
    /// Dense structure constants: `products[i][j][t]`.
    pub products: Vec<Vec<Vec<u32>>>,
    pub one: Vec<u32>,
    pub labels: Option<Vec<String>>,
    pub factors: Option<(Arc<GradedRing>, Arc<GradedRing>)>,
}

impl GradedRing {
    /// `Z_n` with its single additive generator `1` placed in `one_grade`.
    ///
    /// Any grade other than the identity is rejected by the grading check,
    /// since `1·1 = 1` must lie in `R_{2g}`.
    pub fn cyclic(n: u32, grades: GradeGroup, one_grade: Grade) -> Result<Arc<Self>> {
        if n < 2 {
            return Err(Error::InvalidStructure("modulus must be at least 2".into()));
        }
        if !grades.contains(one_grade) {
            return Err(Error::InvalidGradeGroup("grade not in group".into()));
        }
        let spec = RingSpec::Cyclic {
            modulus: n,
            grade_group: grades.cyclic_orders().to_vec(),
            one_grade: (one_grade != grades.identity())
                .then(|| grades.residues(one_grade).iter().map(|&r| r as i64).collect()),
        };
        Self::assemble(RingParts {
            name: format!("Z_{n}"),
            spec,
            basis: vec![BasisElem {
                order: n,
                grade: one_grade,
                label: "1".into(),
            }],
            grades,
            products: vec![vec![vec![1 % n]]],
            one: vec![1],
            labels: Some(vec!["1".into()]),
            factors: None,
        })
    }

    /// `Z_n` graded trivially by the one-element group.
    pub fn cyclic_trivial(n: u32) -> Result<Arc<Self>> {
        let g = GradeGroup::trivial();
        let e = g.identity();
        Self::cyclic(n, g, e)
    }

    /// `Z_n[x]/(f)` for a monic `f` given lowest coefficient first, with `x`
    /// placed in `x_grade`.
    pub fn poly_quotient(
        n: u32,
        modulus: &[i64],
        grades: GradeGroup,
        x_grade: Grade,
    ) -> Result<Arc<Self>> {
        if n < 2 {
            return Err(Error::InvalidStructure("modulus must be at least 2".into()));
        }
        if !grades.contains(x_grade) {
            return Err(Error::InvalidGradeGroup("grade not in group".into()));
        }
        let reduced: Vec<u32> = modulus
            .iter()
            .map(|&c| c.rem_euclid(n as i64) as u32)
            .collect();
        let d = modulus.len().saturating_sub(1);
        if d == 0 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        if reduced[d] != 1 % n {
            return Err(Error::InvalidModulus("polynomial must be monic".into()));
        }
        if d > MAX_BASIS {
            return Err(Error::CapExceeded {
                order: usize::MAX,
                cap: MAX_RING_ORDER,
            });
        }

        // powers[e] = x^e reduced, for e < 2d - 1
        let mut powers: Vec<Vec<u32>> = Vec::with_capacity(2 * d);
        for e in 0..(2 * d - 1) {
            if e < d {
                let mut v = vec![0u32; d];
                v[e] = 1 % n;
                powers.push(v);
            } else {
                let prev = &powers[e - 1];
                let top = prev[d - 1] as u64;
                let mut v = vec![0u32; d];
                for t in 1..d {
                    v[t] = prev[t - 1];
                }
                for (t, slot) in v.iter_mut().enumerate() {
                    let sub = (top * reduced[t] as u64) % n as u64;
                    *slot = ((*slot as u64 + n as u64 - sub) % n as u64) as u32;
                }
                powers.push(v);
            }
        }
        let grade_of_power = |e: usize| grades.times(e as u64, x_grade);
        for t in 0..d {
            if powers[d][t] != 0 && grade_of_power(t) != grade_of_power(d) {
                return Err(Error::InvalidGrading(format!(
                    "x^{d} reduces onto x^{t}, which has grade {} but x^{d} must have grade {}",
                    grades.format(grade_of_power(t)),
                    grades.format(grade_of_power(d))
                )));
            }
        }

        let gaussian = d == 2 && reduced == [1 % n, 0, 1 % n];
        let labels: Vec<String> = (0..d)
            .map(|e| match e {
                0 => "1".to_string(),
                1 if gaussian => "i".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        let products = (0..d)
            .map(|i| (0..d).map(|j| powers[i + j].clone()).collect())
            .collect();
        let name = if gaussian {
            format!("Z_{n}[i]")
        } else {
            format!("Z_{n}[x]/({})", format_poly(&reduced))
        };
        let mut one = vec![0u32; d];
        one[0] = 1 % n;
        Self::assemble(RingParts {
            name,
            spec: RingSpec::PolyQuotient {
                modulus: n,
                poly: modulus.to_vec(),
                grade_group: grades.cyclic_orders().to_vec(),
                x_grade: grades.residues(x_grade).iter().map(|&r| r as i64).collect(),
            },
            basis: labels
                .iter()
                .enumerate()
                .map(|(e, l)| BasisElem {
                    order: n,
                    grade: grade_of_power(e),
                    label: l.clone(),
                })
                .collect(),
            grades,
            products,
            one,
            labels: Some(labels),
            factors: None,
        })
    }

    /// `Z_n[i] = Z_n[x]/(x²+1)` with `i` in grade 1 of `Z_2`.
    pub fn gaussian(n: u32) -> Result<Arc<Self>> {
        let g = GradeGroup::cyclic(2)?;
        let one = g.grade(&[1])?;
        Self::poly_quotient(n, &[1, 0, 1], g, one)
    }

    /// `Z_n[x]/(x²)` with `x` in grade 1 of `Z_2`.
    pub fn dual_numbers(n: u32) -> Result<Arc<Self>> {
        let g = GradeGroup::cyclic(2)?;
        let one = g.grade(&[1])?;
        Self::poly_quotient(n, &[0, 0, 1], g, one)
    }

    /// `R1 × R2` with componentwise operations and `(R1×R2)_g = (R1)_g × (R2)_g`.
    pub fn product(left: &Arc<Self>, right: &Arc<Self>) -> Result<Arc<Self>> {
        if left.grades != right.grades {
            return Err(Error::MismatchedGradeGroups);
        }
        let order = left.order.checked_mul(right.order);
        if order.is_none_or(|o| o > MAX_RING_ORDER) {
            return Err(Error::CapExceeded {
                order: order.unwrap_or(usize::MAX),
                cap: MAX_RING_ORDER,
            });
        }
        let k1 = left.basis.len();
        let k = k1 + right.basis.len();
        let mut products = vec![vec![vec![0u32; k]; k]; k];
        for (off, ring) in [(0, left), (k1, right)] {
            let kr = ring.basis.len();
            for i in 0..kr {
                for j in 0..kr {
                    for &(t, c) in &ring.table[i * kr + j] {
                        products[off + i][off + j][off + t as usize] = c;
                    }
                }
            }
        }
        let mut one = left.coords(left.one);
        one.extend(right.coords(right.one));
        let wrap = |s: &str| {
            if s.contains(" x ") {
                format!("({s})")
            } else {
                s.to_string()
            }
        };
        Self::assemble(RingParts {
            name: format!("{} x {}", wrap(&left.name), wrap(&right.name)),
            spec: RingSpec::Product {
                left: Box::new(left.spec.clone()),
                right: Box::new(right.spec.clone()),
            },
            grades: left.grades.clone(),
            basis: left.basis.iter().chain(&right.basis).cloned().collect(),
            products,
            one,
            labels: None,
            factors: Some((left.clone(), right.clone())),
        })
    }

    /// Validates a presentation and precomputes the element caches.
    pub(crate) fn assemble(parts: RingParts) -> Result<Arc<Self>> {
        let RingParts {
            name,
            spec,
            grades,
            basis,
            products,
            one,
            labels,
            factors,
        } = parts;
        let k = basis.len();
        if k > MAX_BASIS {
            return Err(Error::CapExceeded {
                order: usize::MAX,
                cap: MAX_RING_ORDER,
            });
        }
        let mut order = 1usize;
        for b in &basis {
            if b.order < 2 {
                return Err(Error::InvalidStructure("basis orders must be at least 2".into()));
            }
            if !grades.contains(b.grade) {
                return Err(Error::InvalidGradeGroup("basis grade not in group".into()));
            }
            order = order.saturating_mul(b.order as usize);
        }
        if order > MAX_RING_ORDER {
            return Err(Error::CapExceeded {
                order,
                cap: MAX_RING_ORDER,
            });
        }

        // well-definedness, commutativity and grading on basis pairs
        for i in 0..k {
            for j in 0..k {
                let row = &products[i][j];
                if row != &products[j][i] {
                    return Err(Error::InvalidStructure(format!(
                        "b_{i}·b_{j} differs from b_{j}·b_{i}"
                    )));
                }
                let target = grades.add(basis[i].grade, basis[j].grade);
                for (t, &c) in row.iter().enumerate() {
                    let m = basis[t].order as u64;
                    if c as u64 >= m {
                        return Err(Error::InvalidStructure("structure constant out of range".into()));
                    }
                    if !(basis[i].order as u64 * c as u64).is_multiple_of(m) {
                        return Err(Error::InvalidStructure(format!(
                            "b_{i}·b_{j} is not compatible with the additive order of b_{i}"
                        )));
                    }
                    if c != 0 && basis[t].grade != target {
                        return Err(Error::InvalidGrading(format!(
                            "b_{i}·b_{j} has a component in grade {} instead of {}",
                            grades.format(basis[t].grade),
                            grades.format(target)
                        )));
                    }
                }
            }
        }
        for (t, &c) in one.iter().enumerate() {
            if c != 0 && basis[t].grade != grades.identity() {
                return Err(Error::InvalidGrading("identity must lie in the identity component".into()));
            }
        }

        let mut place = Vec::with_capacity(k);
        let mut p = 1u32;
        for b in &basis {
            place.push(p);
            p = p.wrapping_mul(b.order);
        }
        let table = (0..k * k)
            .map(|ij| {
                products[ij / k][ij % k]
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(t, &c)| (t as u8, c))
                    .collect()
            })
            .collect();
        let style = match (labels, &factors) {
            (_, Some(_)) => Style::Pair,
            (Some(l), None) => Style::Linear(l),
            (None, None) => Style::Coords,
        };
        let mut ring = GradedRing {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            name,
            spec,
            grades,
            basis,
            table,
            place,
            one: Elem(0),
            order,
            style,
            factors,
            grade_of: Vec::new(),
            components: Vec::new(),
            homogeneous: Vec::new(),
            h_pos: Vec::new(),
            add_table: None,
            mul_table: None,
            h_products: OnceLock::new(),
        };
        ring.one = ring.encode_u32(&one);

        // identity and associativity on basis elements
        let bs: Vec<Elem> = (0..k).map(|i| ring.basis_elem(i)).collect();
        for &b in &bs {
            if ring.mul_direct(ring.one, b) != b {
                return Err(Error::InvalidStructure("declared identity is not neutral".into()));
            }
        }
        for &a in &bs {
            for &b in &bs {
                let ab = ring.mul_direct(a, b);
                for &c in &bs {
                    if ring.mul_direct(ab, c) != ring.mul_direct(a, ring.mul_direct(b, c)) {
                        return Err(Error::InvalidStructure("multiplication is not associative".into()));
                    }
                }
            }
        }

        ring.build_caches();
        Ok(Arc::new(ring))
    }

    fn build_caches(&mut self) {
        let n = self.order;
        let ng = self.grades.order();
        let mut grade_of = vec![ZERO_GRADE; n];
        let mut components = vec![Vec::new(); ng];
        let mut buf = [0u32; MAX_BASIS];
        for (e, slot) in grade_of.iter_mut().enumerate() {
            self.decode(Elem(e as u32), &mut buf);
            let mut g: Option<Grade> = None;
            let mut mixed = false;
            for (t, &c) in buf[..self.basis.len()].iter().enumerate() {
                if c != 0 {
                    match g {
                        None => g = Some(self.basis[t].grade),
                        Some(h) if h != self.basis[t].grade => mixed = true,
                        _ => {}
                    }
                }
            }
            *slot = match (mixed, g) {
                (true, _) => MIXED_GRADE,
                (false, Some(h)) => h.0,
                (false, None) => ZERO_GRADE,
            };
            match *slot {
                ZERO_GRADE => components.iter_mut().for_each(|c| c.push(Elem(e as u32))),
                MIXED_GRADE => {}
                h => components[h as usize].push(Elem(e as u32)),
            }
        }
        let mut h_pos = vec![u32::MAX; n];
        let homogeneous: Vec<Elem> = (0..n as u32)
            .map(Elem)
            .filter(|e| grade_of[e.index()] != MIXED_GRADE)
            .collect();
        for (i, e) in homogeneous.iter().enumerate() {
            h_pos[e.index()] = i as u32;
        }
        self.grade_of = grade_of;
        self.components = components;
        self.homogeneous = homogeneous;
        self.h_pos = h_pos;

        if n <= TABLE_THRESHOLD {
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    add.push(self.add_direct(Elem(a), Elem(b)));
                    mul.push(self.mul_direct(Elem(a), Elem(b)));
                }
            }
            self.add_table = Some(add);
            self.mul_table = Some(mul);
        }
    }

    // ----- identity and metadata -----

    /// Process-unique identifier; elements and ideals of different rings never mix.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The construction recipe that rebuilds this ring with the same coordinates.
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn grade_group(&self) -> &GradeGroup {
        &self.grades
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn factors(&self) -> Option<(&Arc<GradedRing>, &Arc<GradedRing>)> {
        self.factors.as_ref().map(|(a, b)| (a, b))
    }

    pub fn same_ring(&self, other: &GradedRing) -> bool {
        self.id == other.id
    }

    // ----- coordinates -----

    fn decode(&self, e: Elem, buf: &mut Coords) {
        let mut rest = e.0;
        for (t, b) in self.basis.iter().enumerate() {
            buf[t] = rest % b.order;
            rest /= b.order;
        }
    }

    fn encode_u32(&self, coords: &[u32]) -> Elem {
        let mut index = 0u32;
        for (t, &c) in coords.iter().enumerate() {
            index += (c % self.basis[t].order) * self.place[t];
        }
        Elem(index)
    }

    pub fn coords(&self, e: Elem) -> Vec<u32> {
        let mut buf = [0u32; MAX_BASIS];
        self.decode(e, &mut buf);
        buf[..self.basis.len()].to_vec()
    }

    /// Element with the given coordinates (reduced modulo the basis orders).
    pub fn elem(&self, coords: &[i64]) -> Result<Elem> {
        if coords.len() != self.basis.len() {
            return Err(Error::InvalidElement(format!(
                "{coords:?} has {} coordinates, {} expects {}",
                coords.len(),
                self.name,
                self.basis.len()
            )));
        }
        let reduced: Vec<u32> = coords
            .iter()
            .zip(&self.basis)
            .map(|(&c, b)| c.rem_euclid(b.order as i64) as u32)
            .collect();
        Ok(self.encode_u32(&reduced))
    }

    pub fn coords_i64(&self, e: Elem) -> Vec<i64> {
        self.coords(e).into_iter().map(i64::from).collect()
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        Elem(self.place[i])
    }

    pub fn basis_elems(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.basis.len()).map(|i| self.basis_elem(i))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u32).map(Elem)
    }

    pub fn contains_index(&self, e: Elem) -> bool {
        e.index() < self.order
    }

    // ----- arithmetic -----

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    fn add_direct(&self, a: Elem, b: Elem) -> Elem {
        let (mut x, mut y) = (a.0, b.0);
        let mut index = 0u32;
        for (t, bs) in self.basis.iter().enumerate() {
            let m = bs.order;
            let r = (x % m + y % m) % m;
            index += r * self.place[t];
            x /= m;
            y /= m;
        }
        Elem(index)
    }

    fn mul_direct(&self, a: Elem, b: Elem) -> Elem {
        let k = self.basis.len();
        let mut ca = [0u32; MAX_BASIS];
        let mut cb = [0u32; MAX_BASIS];
        self.decode(a, &mut ca);
        self.decode(b, &mut cb);
        let mut acc = [0u64; MAX_BASIS];
        for i in 0..k {
            if ca[i] == 0 {
                continue;
            }
            for j in 0..k {
                if cb[j] == 0 {
                    continue;
                }
                let coef = ca[i] as u64 * cb[j] as u64;
                for &(t, c) in &self.table[i * k + j] {
                    let t = t as usize;
                    acc[t] = (acc[t] + coef * c as u64) % self.basis[t].order as u64;
                }
            }
        }
        let mut index = 0u32;
        for t in 0..k {
            index += acc[t] as u32 * self.place[t];
        }
        Elem(index)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => t[a.index() * self.order + b.index()],
            None => self.add_direct(a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let mut c = [0u32; MAX_BASIS];
        self.decode(a, &mut c);
        let k = self.basis.len();
        for t in 0..k {
            let m = self.basis[t].order;
            c[t] = (m - c[t]) % m;
        }
        self.encode_u32(&c[..k])
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => t[a.index() * self.order + b.index()],
            None => self.mul_direct(a, b),
        }
    }

    /// `k·a` (repeated addition).
    pub fn scale(&self, k: u64, a: Elem) -> Elem {
        let mut c = [0u32; MAX_BASIS];
        self.decode(a, &mut c);
        let n = self.basis.len();
        for t in 0..n {
            let m = self.basis[t].order as u64;
            c[t] = ((c[t] as u64 * (k % m)) % m) as u32;
        }
        self.encode_u32(&c[..n])
    }

    pub fn pow(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    // ----- grading -----

    /// `Some(g)` when `x` is a nonzero element of `R_g`.
    pub fn degree(&self, x: Elem) -> Option<Grade> {
        match self.grade_of[x.index()] {
            ZERO_GRADE | MIXED_GRADE => None,
            g => Some(Grade(g)),
        }
    }

    pub fn is_homogeneous(&self, x: Elem) -> bool {
        self.grade_of[x.index()] != MIXED_GRADE
    }

    pub fn in_component(&self, x: Elem, g: Grade) -> bool {
        match self.grade_of[x.index()] {
            ZERO_GRADE => true,
            MIXED_GRADE => false,
            h => h == g.0,
        }
    }

    /// Elements of `R_g`, zero included, in canonical order.
    pub fn component(&self, g: Grade) -> &[Elem] {
        &self.components[g.index()]
    }

    /// `h(R)`: union of all components, zero counted once.
    pub fn homogeneous(&self) -> &[Elem] {
        &self.homogeneous
    }

    /// Position of a homogeneous element in [`Self::homogeneous`].
    pub fn homogeneous_position(&self, x: Elem) -> Option<usize> {
        match self.h_pos[x.index()] {
            u32::MAX => None,
            p => Some(p as usize),
        }
    }

    /// Grades whose component is nonzero.
    pub fn support(&self) -> Vec<Grade> {
        self.grades
            .elements()
            .filter(|g| self.components[g.index()].len() > 1)
            .collect()
    }

    /// Homogeneous components `(g, x_g)` of `x`, nonzero ones only.
    pub fn decompose(&self, x: Elem) -> Vec<(Grade, Elem)> {
        let mut c = [0u32; MAX_BASIS];
        self.decode(x, &mut c);
        let k = self.basis.len();
        let mut out: Vec<(Grade, Elem)> = Vec::new();
        for g in self.grades.elements() {
            let mut index = 0u32;
            for t in 0..k {
                if self.basis[t].grade == g {
                    index += c[t] * self.place[t];
                }
            }
            if index != 0 {
                out.push((g, Elem(index)));
            }
        }
        out
    }

    /// Product of the `i`-th and `j`-th homogeneous elements.
    pub fn homogeneous_product(&self, i: usize, j: usize) -> Elem {
        let table = self.h_products.get_or_init(|| {
            let h = &self.homogeneous;
            (h.len() <= HOMOGENEOUS_TABLE_LIMIT).then(|| {
                let mut t = Vec::with_capacity(h.len() * h.len());
                for &a in h {
                    for &b in h {
                        t.push(self.mul(a, b));
                    }
                }
                t
            })
        });
        match table {
            Some(t) => t[i * self.homogeneous.len() + j],
            None => self.mul(self.homogeneous[i], self.homogeneous[j]),
        }
    }

    // ----- units and zero divisors -----

    /// Exhaustive inverse search.
    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        self.elements().find(|&y| self.mul(x, y) == self.one)
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.inverse(x).is_some()
    }

    /// `xy = 0` forces `y = 0`.
    pub fn is_regular(&self, x: Elem) -> bool {
        self.elements()
            .skip(1)
            .all(|y| self.mul(x, y) != Elem::ZERO)
    }

    // ----- products -----

    /// The element `(a, b)` of a product ring.
    pub fn pair(&self, a: Elem, b: Elem) -> Option<Elem> {
        let (l, _) = self.factors.as_ref()?;
        Some(Elem(a.0 + b.0 * l.order as u32))
    }

    /// Components of an element of a product ring.
    pub fn split(&self, x: Elem) -> Option<(Elem, Elem)> {
        let (l, _) = self.factors.as_ref()?;
        let n = l.order as u32;
        Some((Elem(x.0 % n), Elem(x.0 / n)))
    }

    // ----- display -----

    pub fn format(&self, x: Elem) -> String {
        match &self.style {
            Style::Pair => {
                let (l, r) = self.factors.as_ref().expect("pair style has factors");
                let (a, b) = self.split(x).expect("product ring");
                format!("({}, {})", l.format(a), r.format(b))
            }
            Style::Linear(labels) => {
                let terms: Vec<String> = self
                    .coords(x)
                    .iter()
                    .zip(labels)
                    .filter(|(&c, _)| c != 0)
                    .map(|(&c, l)| match (c, l.as_str()) {
                        (c, "1") => c.to_string(),
                        (1, l) => l.to_string(),
                        (c, l) => format!("{c}{l}"),
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
            Style::Coords => format!("{:?}", self.coords(x)),
        }
    }

    pub fn format_set(&self, xs: &[Elem]) -> String {
        let parts: Vec<String> = xs.iter().map(|&x| self.format(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match e {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{e}"),
        };
        terms.push(match (c, e) {
            (c, 0) => c.to_string(),
            (1, _) => mono,
            (c, _) => format!("{c}{mono}"),
        });
    }
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> GradeGroup {
        GradeGroup::cyclic(2).unwrap()
    }

    #[test]
    fn cyclic_trivial_has_everything_homogeneous() {
        let r = GradedRing::cyclic_trivial(12).unwrap();
        assert_eq!(r.order(), 12);
        assert_eq!(r.homogeneous().len(), 12);
        assert_eq!(r.mul(Elem(3), Elem(4)), Elem::ZERO);
        assert_eq!(r.add(Elem(7), Elem(9)), Elem(4));
    }

    #[test]
    fn cyclic_with_z2_has_degenerate_odd_component() {
        let g = z2();
        let e = g.identity();
        let r = GradedRing::cyclic(12, g.clone(), e).unwrap();
        assert_eq!(r.component(g.grade(&[1]).unwrap()), &[Elem::ZERO]);
        assert_eq!(r.component(e).len(), 12);
    }

    #[test]
    fn identity_outside_identity_component_is_rejected() {
        let g = z2();
        let odd = g.grade(&[1]).unwrap();
        assert!(matches!(
            GradedRing::cyclic(12, g, odd),
            Err(Error::InvalidGrading(_))
        ));
    }

    #[test]
    fn prime_cyclic_ring_is_a_graded_field() {
        let r = GradedRing::cyclic_trivial(5).unwrap();
        for &x in &r.homogeneous()[1..] {
            let inv = (1..5u32)
                .map(Elem)
                .find(|&y| (x.0 * y.0) % 5 == 1)
                .expect("brute force inverse");
            assert_eq!(r.inverse(x), Some(inv));
        }
    }

    #[test]
    fn gaussian_twelve() {
        let r = GradedRing::gaussian(12).unwrap();
        assert_eq!(r.name(), "Z_12[i]");
        assert_eq!(r.order(), 144);
        assert_eq!(r.homogeneous().len(), 23);
        let i = r.elem(&[0, 1]).unwrap();
        assert_eq!(r.mul(i, i), r.elem(&[-1, 0]).unwrap());
        let g = r.grade_group().clone();
        let odd = g.grade(&[1]).unwrap();
        assert_eq!(r.component(odd).len(), 12);
        assert!(r.component(odd).iter().all(|&x| r.coords(x)[0] == 0));
        assert_eq!(r.format(r.elem(&[6, 6]).unwrap()), "6+6i");
    }

    #[test]
    fn dual_numbers_and_grading_errors() {
        let r = GradedRing::dual_numbers(12).unwrap();
        assert_eq!(r.order(), 144);
        let x = r.elem(&[0, 1]).unwrap();
        assert_eq!(r.mul(x, x), Elem::ZERO);
        let z3 = GradeGroup::cyclic(3).unwrap();
        let one = z3.grade(&[1]).unwrap();
        assert!(matches!(
            GradedRing::poly_quotient(12, &[1, 0, 1], z3, one),
            Err(Error::InvalidGrading(_))
        ));
        assert!(matches!(
            GradedRing::poly_quotient(12, &[1, 0, 2], z2(), z2().grade(&[1]).unwrap()),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn product_orders_and_components() {
        let a = GradedRing::cyclic_trivial(12).unwrap();
        let b = GradedRing::cyclic_trivial(6).unwrap();
        let p = GradedRing::product(&a, &b).unwrap();
        assert_eq!(p.order(), 72);
        let x = p.pair(Elem(5), Elem(4)).unwrap();
        assert_eq!(p.split(x), Some((Elem(5), Elem(4))));
        assert_eq!(p.one(), p.pair(Elem(1), Elem(1)).unwrap());
        assert_eq!(p.format(x), "(5, 4)");

        let g = GradedRing::gaussian(12).unwrap();
        let gg = GradedRing::product(&g, &g).unwrap();
        assert_eq!(gg.order(), 144 * 144);
        let odd = gg.grade_group().grade(&[1]).unwrap();
        let expected: Vec<Elem> = {
            let c = g.component(odd);
            let mut v: Vec<Elem> = c
                .iter()
                .flat_map(|&u| c.iter().map(move |&w| (u, w)))
                .map(|(u, w)| gg.pair(u, w).unwrap())
                .collect();
            v.sort();
            v
        };
        assert_eq!(gg.component(odd), expected.as_slice());

        assert!(matches!(
            GradedRing::product(&a, &g),
            Err(Error::MismatchedGradeGroups)
        ));
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = GradedRing::gaussian(12).unwrap();
        let gg = GradedRing::product(&g, &g).unwrap();
        assert!(matches!(
            GradedRing::product(&gg, &g),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn decompose_reassembles() {
        let r = GradedRing::gaussian(6).unwrap();
        for x in r.elements() {
            let parts = r.decompose(x);
            let sum = parts.iter().fold(Elem::ZERO, |acc, &(_, c)| r.add(acc, c));
            assert_eq!(sum, x);
            for (g, c) in parts {
                assert!(r.in_component(c, g));
            }
        }
        let counts: usize = r
            .grade_group()
            .elements()
            .map(|g| r.component(g).len())
            .product();
        assert_eq!(counts, r.order());
    }

    #[test]
    fn regular_elements_are_units() {
        for r in [
            GradedRing::cyclic_trivial(12).unwrap(),
            GradedRing::gaussian(6).unwrap(),
            GradedRing::dual_numbers(4).unwrap(),
        ] {
            for x in r.elements() {
                assert_eq!(r.is_regular(x), r.is_unit(x), "{}", r.format(x));
            }
        }
        let z12 = GradedRing::cyclic_trivial(12).unwrap();
        assert!(!z12.is_regular(Elem(3)));
        assert!(z12.is_unit(z12.one()));
    }
}
