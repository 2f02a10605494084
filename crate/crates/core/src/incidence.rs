//! Incidence rings `A_n(<=, R)` and the brute-force subring closure.

use num_bigint::BigUint;
use num_traits::{Pow, ToPrimitive};
use thiserror::Error;

use crate::poset::Poset;
use crate::ring::{BaseRing, RingElem, RingError, RingOp};
use crate::span::AdditiveSpan;

/// Default bound on `|A|` for closure computations.
pub const DEFAULT_CLOSURE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("matrix shape does not match the incidence ring")]
    ShapeMismatch,
    #[error("nonzero entry at ({0}, {1}) outside the order relation")]
    OffPattern(usize, usize),
    #[error("{what} has size {size}, above the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: BigUint,
        limit: u64,
    },
    #[error("criterion needs a simple matrix ring, got {0}")]
    WrongRingKind(String),
    #[error("tuple must contain at least one matrix")]
    EmptyTuple,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// An element of an incidence ring: a dense `n x n` matrix over the base
/// ring, zero off the order relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncMatrix {
    n: usize,
    entries: Vec<RingElem>,
}

impl IncMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.n + j]
    }
}

/// `A_n(<=, R)` together with the size guard used by closure computations.
#[derive(Debug, Clone)]
pub struct IncidenceRing {
    poset: Poset,
    ring: BaseRing,
    closure_limit: u64,
}

/// Additive generators and order of a subring.
#[derive(Debug, Clone)]
pub struct SubringSpan {
    pub basis: Vec<IncMatrix>,
    pub size: BigUint,
}

impl IncidenceRing {
    pub fn new(poset: Poset, ring: BaseRing) -> Self {
        IncidenceRing {
            poset,
            ring,
            closure_limit: DEFAULT_CLOSURE_LIMIT,
        }
    }

    /// Replaces the bound on `|A|` for [`subring_closure`](Self::subring_closure).
    pub fn with_closure_limit(mut self, limit: u64) -> Self {
        self.closure_limit = limit;
        self
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.poset.size()
    }

    /// `|A| = |R|^rho`.
    pub fn order(&self) -> BigUint {
        self.ring.order().pow(self.poset.rho() as u32)
    }

    pub fn zero(&self) -> IncMatrix {
        let n = self.n();
        IncMatrix {
            n,
            entries: vec![self.ring.zero(); n * n],
        }
    }

    /// `r * I_n`.
    pub fn scalar(&self, r: &RingElem) -> IncMatrix {
        let mut out = self.zero();
        for i in 0..self.n() {
            out.entries[i * out.n + i] = r.clone();
        }
        out
    }

    pub fn identity(&self) -> IncMatrix {
        self.scalar(&self.ring.one())
    }

    /// `r * E_ij` (0-based); requires `i <= j`.
    pub fn unit(&self, i: usize, j: usize, r: &RingElem) -> Result<IncMatrix, IncidenceError> {
        if i >= self.n() || j >= self.n() {
            return Err(IncidenceError::ShapeMismatch);
        }
        if !self.poset.leq(i, j) {
            return Err(IncidenceError::OffPattern(i + 1, j + 1));
        }
        if !self.ring.contains(r) {
            return Err(RingError::RingMismatch(self.ring.to_string()).into());
        }
        let mut out = self.zero();
        out.entries[i * self.n() + j] = r.clone();
        Ok(out)
    }

    /// Builds an element from rows of base-ring entries.
    pub fn from_rows(&self, rows: Vec<Vec<RingElem>>) -> Result<IncMatrix, IncidenceError> {
        let n = self.n();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(IncidenceError::ShapeMismatch);
        }
        let m = IncMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        self.check(&m)?;
        Ok(m)
    }

    /// Builds an element from a closure giving the entry at each pair `i <= j` (0-based).
    pub fn from_fn(&self, mut f: impl FnMut(usize, usize) -> RingElem) -> IncMatrix {
        let mut out = self.zero();
        for &(i, j) in self.poset.order_pairs() {
            out.entries[i * out.n + j] = f(i, j);
        }
        out
    }

    fn check(&self, a: &IncMatrix) -> Result<(), IncidenceError> {
        if a.n != self.n() || a.entries.len() != a.n * a.n {
            return Err(IncidenceError::ShapeMismatch);
        }
        for i in 0..a.n {
            for j in 0..a.n {
                let x = a.entry(i, j);
                if !self.ring.contains(x) {
                    return Err(RingError::RingMismatch(self.ring.to_string()).into());
                }
                if !self.poset.leq(i, j) && !x.is_zero() {
                    return Err(IncidenceError::OffPattern(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, a: &IncMatrix) -> bool {
        self.check(a).is_ok()
    }

    /// Checked arithmetic.
    pub fn inc_arith(
        &self,
        a: &IncMatrix,
        b: &IncMatrix,
        op: RingOp,
    ) -> Result<IncMatrix, IncidenceError> {
        self.check(a)?;
        self.check(b)?;
        let out = match op {
            RingOp::Add => self.add(a, b),
            RingOp::Sub => self.sub(a, b),
            RingOp::Mul => self.mul(a, b),
        };
        assert!(self.contains(&out), "product left the order relation");
        Ok(out)
    }

    pub fn add(&self, a: &IncMatrix, b: &IncMatrix) -> IncMatrix {
        self.zip_entries(a, b, |x, y| self.ring.add(x, y))
    }

    pub fn sub(&self, a: &IncMatrix, b: &IncMatrix) -> IncMatrix {
        self.zip_entries(a, b, |x, y| self.ring.sub(x, y))
    }

    fn zip_entries(
        &self,
        a: &IncMatrix,
        b: &IncMatrix,
        f: impl Fn(&RingElem, &RingElem) -> RingElem,
    ) -> IncMatrix {
        let mut out = self.zero();
        for &(i, j) in self.poset.order_pairs() {
            let s = i * out.n + j;
            out.entries[s] = f(&a.entries[s], &b.entries[s]);
        }
        out
    }

    /// Matrix product; only pairs `i <= k <= j` contribute.
    pub fn mul(&self, a: &IncMatrix, b: &IncMatrix) -> IncMatrix {
        let n = self.n();
        let mut out = self.zero();
        for &(i, j) in self.poset.order_pairs() {
            let mut acc = self.ring.zero();
            for k in 0..n {
                if self.poset.leq(i, k) && self.poset.leq(k, j) {
                    let x = &a.entries[i * n + k];
                    let y = &b.entries[k * n + j];
                    if !x.is_zero() && !y.is_zero() {
                        acc = self.ring.add(&acc, &self.ring.mul(x, y));
                    }
                }
            }
            out.entries[i * n + j] = acc;
        }
        out
    }

    /// Additive generators of `R * I_n`.
    pub fn scalar_matrices(&self) -> Vec<IncMatrix> {
        self.ring
            .additive_generators()
            .iter()
            .map(|r| self.scalar(r))
            .collect()
    }

    /// Applies a map to every entry on the order relation, landing in `target`.
    pub fn map_entries(
        &self,
        a: &IncMatrix,
        target: &IncidenceRing,
        f: impl Fn(&RingElem) -> Result<RingElem, RingError>,
    ) -> Result<IncMatrix, IncidenceError> {
        let mut out = target.zero();
        for &(i, j) in self.poset.order_pairs() {
            out.entries[i * out.n + j] = f(a.entry(i, j))?;
        }
        Ok(out)
    }

    /// `(prime, modulus)` of each additive coordinate, pair by pair.
    pub fn coordinate_moduli(&self) -> Vec<(u32, u32)> {
        let per_entry = self.ring.coordinate_moduli();
        (0..self.poset.rho())
            .flat_map(|_| per_entry.iter().copied())
            .collect()
    }

    pub fn coordinates(&self, a: &IncMatrix) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.poset.rho() * self.ring.coordinate_count());
        for &(i, j) in self.poset.order_pairs() {
            self.ring.push_coordinates(a.entry(i, j), &mut out);
        }
        out
    }

    pub fn from_coordinates(&self, coords: &[u32]) -> IncMatrix {
        let width = self.ring.coordinate_count();
        let mut out = self.zero();
        for (t, &(i, j)) in self.poset.order_pairs().iter().enumerate() {
            out.entries[i * out.n + j] = self
                .ring
                .from_coordinates(&coords[t * width..(t + 1) * width]);
        }
        out
    }

    /// Every element of `A`, in coordinate order. Subject to the closure limit.
    pub fn elements(&self) -> Result<Vec<IncMatrix>, IncidenceError> {
        let order = self.order();
        if order > BigUint::from(self.closure_limit) {
            return Err(IncidenceError::TooLarge {
                what: "incidence ring",
                size: order,
                limit: self.closure_limit,
            });
        }
        let ring_elems = self.ring.elements();
        let pairs = self.poset.order_pairs();
        let total = order.to_u64().expect("bounded by limit");
        let base = ring_elems.len() as u64;
        Ok((0..total)
            .map(|mut idx| {
                let mut out = self.zero();
                for &(i, j) in pairs {
                    out.entries[i * out.n + j] = ring_elems[(idx % base) as usize].clone();
                    idx /= base;
                }
                out
            })
            .collect())
    }

    /// The subring generated by `s`, all scalar matrices and `I_n`.
    ///
    /// Keeps an additive basis of the candidate subring and adjoins products of
    /// basis pairs until a full pass adds nothing.
    pub fn subring_closure(&self, s: &[IncMatrix]) -> Result<SubringSpan, IncidenceError> {
        let order = self.order();
        if order > BigUint::from(self.closure_limit) {
            return Err(IncidenceError::TooLarge {
                what: "incidence ring",
                size: order,
                limit: self.closure_limit,
            });
        }
        for a in s {
            self.check(a)?;
        }
        let mut span = AdditiveSpan::new(&self.coordinate_moduli());
        let seeds = s
            .iter()
            .cloned()
            .chain(self.scalar_matrices())
            .chain(std::iter::once(self.identity()));
        for a in seeds {
            span.insert(&self.coordinates(&a));
        }
        'outer: while !span.is_full() {
            let basis: Vec<IncMatrix> = span
                .rows()
                .iter()
                .map(|r| self.from_coordinates(r))
                .collect();
            let mut grew = false;
            for a in &basis {
                for b in &basis {
                    if span.insert(&self.coordinates(&self.mul(a, b))) {
                        grew = true;
                        if span.is_full() {
                            break 'outer;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        Ok(SubringSpan {
            basis: span
                .rows()
                .iter()
                .map(|r| self.from_coordinates(r))
                .collect(),
            size: span.size(),
        })
    }

    /// Whether `s` with all scalars generates `A`, by explicit closure.
    pub fn generates_bruteforce(&self, s: &[IncMatrix]) -> Result<bool, IncidenceError> {
        Ok(self.subring_closure(s)?.size == self.order())
    }
}
