//! Base rings: GF(q), M_k(GF(q)), finite products of those, and Z/p^e.
//!
//! A [`RingElem`] is a flat run of slots interpreted by its [`BaseRing`]:
//! each matrix component stores its `k*k` field entries row-major, one after
//! another; `Z/p^e` stores a single residue.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde_json::Value;
use smallvec::SmallVec;
use thiserror::Error;

use crate::field::{is_prime, prime_power, Field, Fq, MAX_DEGREE, MAX_PRIME};

/// Largest supported matrix size for a simple component.
pub const MAX_MATRIX_SIZE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("unsupported ring: {0}")]
    Unsupported(String),
    #[error("cannot parse ring spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error("element does not belong to ring {0}")]
    RingMismatch(String),
    #[error("ring {0} is not a product")]
    NotAProduct(String),
    #[error("component index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("no radical reduction for this element of {0}")]
    NoRadicalReduction(String),
    #[error("bad element for {ring}: {reason}")]
    BadElement { ring: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Catalog descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    /// `M_k(GF(q))`; `k = 1` is the field itself.
    Simple { k: usize, field: Field },
    /// Product of at least two simple components.
    Product(Vec<(usize, Field)>),
    /// `Z/p^e`.
    LocalZ { p: u32, e: u32 },
}

#[derive(Debug)]
struct Component {
    k: usize,
    field: Field,
    offset: usize,
}

#[derive(Debug)]
struct RingInner {
    kind: RingKind,
    components: Vec<Component>,
    width: usize,
    /// `p^e` for `Z/p^e`, unused otherwise.
    residue_modulus: u32,
}

/// One entry of the Wedderburn data of `R/J(R)`: a factor `M_{n_i}(GF(q_i))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedderburnFactor {
    pub n: usize,
    pub q: u64,
}

/// A ring from the supported catalog. Cheap to clone.
#[derive(Clone)]
pub struct BaseRing(Arc<RingInner>);

impl PartialEq for BaseRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl Eq for BaseRing {}

impl fmt::Debug for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseRing({self})")
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let simple = |k: usize, field: &Field| {
            if k == 1 {
                format!("GF({})", field.order())
            } else {
                format!("M({k},GF({}))", field.order())
            }
        };
        match &self.0.kind {
            RingKind::Simple { k, field } => f.write_str(&simple(*k, field)),
            RingKind::Product(parts) => {
                let names: Vec<_> = parts.iter().map(|(k, fl)| simple(*k, fl)).collect();
                f.write_str(&names.join("x"))
            }
            RingKind::LocalZ { p, e } => write!(f, "Z/{}", p.pow(*e)),
        }
    }
}

/// Element of a [`BaseRing`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem(SmallVec<[u32; 8]>);

impl RingElem {
    pub fn slots(&self) -> &[u32] {
        &self.0
    }

    pub fn from_slots(slots: &[u32]) -> Self {
        RingElem(SmallVec::from_slice(slots))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }
}

impl BaseRing {
    fn build(kind: RingKind) -> Result<Self, RingError> {
        let mut components = Vec::new();
        let mut residue_modulus = 0;
        let mut offset = 0;
        let mut push = |k: usize, field: &Field| -> Result<(), RingError> {
            if k == 0 || k > MAX_MATRIX_SIZE {
                return Err(RingError::Unsupported(format!(
                    "matrix size {k} outside 1..={MAX_MATRIX_SIZE}"
                )));
            }
            components.push(Component {
                k,
                field: field.clone(),
                offset,
            });
            offset += k * k;
            Ok(())
        };
        match &kind {
            RingKind::Simple { k, field } => push(*k, field)?,
            RingKind::Product(parts) => {
                if parts.len() < 2 {
                    return Err(RingError::Unsupported(
                        "a product needs at least two factors".into(),
                    ));
                }
                for (k, field) in parts {
                    push(*k, field)?;
                }
            }
            RingKind::LocalZ { p, e } => {
                if !is_prime(*p as u64) {
                    return Err(RingError::NotPrimePower(*p as u64));
                }
                if *p > MAX_PRIME || *e == 0 || *e > MAX_DEGREE {
                    return Err(RingError::Unsupported(format!(
                        "Z/{p}^{e} outside p <= {MAX_PRIME}, 1 <= e <= {MAX_DEGREE}"
                    )));
                }
                residue_modulus = p.pow(*e);
                push(1, &Field::with_degree(*p, 1)?)?;
            }
        }
        Ok(BaseRing(Arc::new(RingInner {
            kind,
            components,
            width: offset,
            residue_modulus,
        })))
    }

    /// `M_k(GF(q))`.
    pub fn matrix(k: usize, q: u64) -> Result<Self, RingError> {
        Self::build(RingKind::Simple {
            k,
            field: Field::new(q)?,
        })
    }

    /// `GF(q)`.
    pub fn field(q: u64) -> Result<Self, RingError> {
        Self::matrix(1, q)
    }

    /// `Z/p^e`.
    pub fn local_z(p: u32, e: u32) -> Result<Self, RingError> {
        Self::build(RingKind::LocalZ { p, e })
    }

    /// Product of simple rings.
    pub fn product(factors: &[BaseRing]) -> Result<Self, RingError> {
        let mut parts = Vec::new();
        for f in factors {
            match &f.0.kind {
                RingKind::Simple { k, field } => parts.push((*k, field.clone())),
                _ => {
                    return Err(RingError::Unsupported(format!(
                        "product factor {f} is not a simple ring"
                    )))
                }
            }
        }
        Self::build(RingKind::Product(parts))
    }

    /// Parses `GF(q)`, `M(k,GF(q))`, products joined by `x`, or `Z/n`.
    pub fn parse(spec: &str) -> Result<Self, RingError> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| RingError::Parse {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        if compact.is_empty() {
            return Err(err("empty"));
        }
        if let Some(n) = compact.strip_prefix("Z/") {
            let n: u64 = n.parse().map_err(|_| err("expected integer after Z/"))?;
            let (p, e) = prime_power(n).ok_or(RingError::NotPrimePower(n))?;
            return Self::local_z(p, e);
        }
        let factors = compact
            .split('x')
            .map(|part| parse_simple(part).ok_or_else(|| err(&format!("bad factor {part:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut rings = Vec::with_capacity(factors.len());
        for (k, q) in factors {
            rings.push(Self::matrix(k, q)?);
        }
        if rings.len() == 1 {
            Ok(rings.pop().unwrap())
        } else {
            Self::product(&rings)
        }
    }

    pub fn kind(&self) -> &RingKind {
        &self.0.kind
    }

    pub fn is_local_z(&self) -> bool {
        matches!(self.0.kind, RingKind::LocalZ { .. })
    }

    /// Number of simple factors of `R/J(R)`.
    pub fn num_components(&self) -> usize {
        self.0.components.len()
    }

    pub fn wedderburn(&self) -> Vec<WedderburnFactor> {
        self.0
            .components
            .iter()
            .map(|c| WedderburnFactor {
                n: c.k,
                q: c.field.order() as u64,
            })
            .collect()
    }

    /// `|J(R)|`.
    pub fn jsize(&self) -> BigUint {
        match self.0.kind {
            RingKind::LocalZ { p, e } => BigUint::from(p).pow(e - 1),
            _ => BigUint::one(),
        }
    }

    /// `|R|`.
    pub fn order(&self) -> BigUint {
        match self.0.kind {
            RingKind::LocalZ { .. } => BigUint::from(self.0.residue_modulus),
            _ => self
                .0
                .components
                .iter()
                .map(|c| BigUint::from(c.field.order()).pow((c.k * c.k) as u32))
                .product(),
        }
    }

    /// Number of slots of an element.
    pub fn width(&self) -> usize {
        self.0.width
    }

    pub fn contains(&self, a: &RingElem) -> bool {
        if a.0.len() != self.0.width {
            return false;
        }
        match self.0.kind {
            RingKind::LocalZ { .. } => a.0[0] < self.0.residue_modulus,
            _ => self.0.components.iter().all(|c| {
                a.0[c.offset..c.offset + c.k * c.k]
                    .iter()
                    .all(|&x| c.field.contains(x))
            }),
        }
    }

    fn check(&self, a: &RingElem) -> Result<(), RingError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(RingError::RingMismatch(self.to_string()))
        }
    }

    pub fn zero(&self) -> RingElem {
        RingElem(SmallVec::from_elem(0, self.0.width))
    }

    pub fn one(&self) -> RingElem {
        let mut out = self.zero();
        for c in &self.0.components {
            for i in 0..c.k {
                out.0[c.offset + i * c.k + i] = 1;
            }
        }
        out
    }

    /// Image of an integer under `Z -> R`.
    pub fn from_int(&self, n: i64) -> RingElem {
        let mut out = self.zero();
        match self.0.kind {
            RingKind::LocalZ { .. } => {
                out.0[0] = n.rem_euclid(self.0.residue_modulus as i64) as u32;
            }
            _ => {
                for c in &self.0.components {
                    let v = c.field.from_int(n);
                    for i in 0..c.k {
                        out.0[c.offset + i * c.k + i] = v;
                    }
                }
            }
        }
        out
    }

    /// Exact ring arithmetic with membership checks.
    pub fn ring_ops(&self, a: &RingElem, b: &RingElem, op: RingOp) -> Result<RingElem, RingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            RingOp::Add => self.add(a, b),
            RingOp::Sub => self.sub(a, b),
            RingOp::Mul => self.mul(a, b),
        })
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match self.0.kind {
            RingKind::LocalZ { .. } => RingElem(SmallVec::from_elem(
                (a.0[0] + b.0[0]) % self.0.residue_modulus,
                1,
            )),
            _ => {
                let mut out = a.clone();
                for c in &self.0.components {
                    for s in c.offset..c.offset + c.k * c.k {
                        out.0[s] = c.field.add(a.0[s], b.0[s]);
                    }
                }
                out
            }
        }
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        match self.0.kind {
            RingKind::LocalZ { .. } => {
                let m = self.0.residue_modulus;
                RingElem(SmallVec::from_elem((m - a.0[0]) % m, 1))
            }
            _ => {
                let mut out = a.clone();
                for c in &self.0.components {
                    for s in c.offset..c.offset + c.k * c.k {
                        out.0[s] = c.field.neg(a.0[s]);
                    }
                }
                out
            }
        }
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match self.0.kind {
            RingKind::LocalZ { .. } => {
                let m = self.0.residue_modulus as u64;
                RingElem(SmallVec::from_elem(
                    ((a.0[0] as u64 * b.0[0] as u64) % m) as u32,
                    1,
                ))
            }
            _ => {
                let mut out = self.zero();
                for c in &self.0.components {
                    let (k, o, f) = (c.k, c.offset, &c.field);
                    for i in 0..k {
                        for j in 0..k {
                            let mut acc = 0;
                            for l in 0..k {
                                acc = f.add(acc, f.mul(a.0[o + i * k + l], b.0[o + l * k + j]));
                            }
                            out.0[o + i * k + j] = acc;
                        }
                    }
                }
                out
            }
        }
    }

    /// The `i`-th factor of a product ring (1-based).
    pub fn component_ring(&self, i: usize) -> Result<BaseRing, RingError> {
        match &self.0.kind {
            RingKind::Product(parts) => {
                let (k, field) =
                    parts
                        .get(i.wrapping_sub(1))
                        .ok_or(RingError::IndexOutOfRange {
                            index: i,
                            len: parts.len(),
                        })?;
                Self::build(RingKind::Simple {
                    k: *k,
                    field: field.clone(),
                })
            }
            _ => Err(RingError::NotAProduct(self.to_string())),
        }
    }

    /// Multiplication by the `i`-th central idempotent, read in the `i`-th factor (1-based).
    pub fn project_component(&self, a: &RingElem, i: usize) -> Result<RingElem, RingError> {
        let RingKind::Product(parts) = &self.0.kind else {
            return Err(RingError::NotAProduct(self.to_string()));
        };
        if i == 0 || i > parts.len() {
            return Err(RingError::IndexOutOfRange {
                index: i,
                len: parts.len(),
            });
        }
        self.check(a)?;
        let c = &self.0.components[i - 1];
        Ok(RingElem::from_slots(&a.0[c.offset..c.offset + c.k * c.k]))
    }

    /// Assembles a product element from one element per factor.
    pub fn from_components(&self, parts: &[RingElem]) -> Result<RingElem, RingError> {
        if parts.len() != self.0.components.len() {
            return Err(RingError::RingMismatch(self.to_string()));
        }
        let mut out = self.zero();
        for (c, part) in self.0.components.iter().zip(parts) {
            if part.0.len() != c.k * c.k {
                return Err(RingError::RingMismatch(self.to_string()));
            }
            out.0[c.offset..c.offset + c.k * c.k].copy_from_slice(&part.0);
        }
        if !self.contains(&out) {
            return Err(RingError::RingMismatch(self.to_string()));
        }
        Ok(out)
    }

    /// `R/J(R)`: `GF(p)` for `Z/p^e`, the ring itself otherwise.
    pub fn radical_quotient(&self) -> BaseRing {
        match self.0.kind {
            RingKind::LocalZ { .. } => BaseRing::build(RingKind::Simple {
                k: 1,
                field: self.0.components[0].field.clone(),
            })
            .expect("prime field of a valid Z/p^e"),
            _ => self.clone(),
        }
    }

    /// The quotient map `R -> R/J(R)`; identity on semisimple rings.
    pub fn reduce_mod_radical(&self, a: &RingElem) -> Result<RingElem, RingError> {
        if !self.contains(a) {
            return Err(RingError::NoRadicalReduction(self.to_string()));
        }
        Ok(match self.0.kind {
            RingKind::LocalZ { p, .. } => RingElem(SmallVec::from_elem(a.0[0] % p, 1)),
            _ => a.clone(),
        })
    }

    /// Generators of `(R, +)`: matrix units times the prime-field basis, or `1` for `Z/p^e`.
    pub fn additive_generators(&self) -> Vec<RingElem> {
        if self.is_local_z() {
            return vec![self.from_int(1)];
        }
        let mut out = Vec::new();
        for c in &self.0.components {
            for s in 0..c.k * c.k {
                for b in c.field.prime_basis() {
                    let mut x = self.zero();
                    x.0[c.offset + s] = b;
                    out.push(x);
                }
            }
        }
        out
    }

    /// Generators of `(J(R), +)`.
    pub fn radical_generators(&self) -> Vec<RingElem> {
        match self.0.kind {
            RingKind::LocalZ { p, e } if e > 1 => vec![self.from_int(p as i64)],
            _ => Vec::new(),
        }
    }

    /// `(prime, modulus)` of every additive coordinate of an element.
    pub fn coordinate_moduli(&self) -> Vec<(u32, u32)> {
        match self.0.kind {
            RingKind::LocalZ { p, .. } => vec![(p, self.0.residue_modulus)],
            _ => self
                .0
                .components
                .iter()
                .flat_map(|c| {
                    let p = c.field.characteristic();
                    std::iter::repeat_n((p, p), c.k * c.k * c.field.degree() as usize)
                })
                .collect(),
        }
    }

    /// Writes the additive coordinates of `a` (see [`coordinate_moduli`](Self::coordinate_moduli)).
    pub fn push_coordinates(&self, a: &RingElem, out: &mut Vec<u32>) {
        match self.0.kind {
            RingKind::LocalZ { .. } => out.push(a.0[0]),
            _ => {
                for c in &self.0.components {
                    let p = c.field.characteristic();
                    for &x in &a.0[c.offset..c.offset + c.k * c.k] {
                        let mut x = x;
                        for _ in 0..c.field.degree() {
                            out.push(x % p);
                            x /= p;
                        }
                    }
                }
            }
        }
    }

    /// Inverse of [`push_coordinates`](Self::push_coordinates); consumes `width * e` coordinates.
    pub fn from_coordinates(&self, coords: &[u32]) -> RingElem {
        match self.0.kind {
            RingKind::LocalZ { .. } => RingElem(SmallVec::from_elem(coords[0], 1)),
            _ => {
                let mut out = self.zero();
                let mut it = coords.iter();
                for c in &self.0.components {
                    let p = c.field.characteristic();
                    let e = c.field.degree();
                    for s in c.offset..c.offset + c.k * c.k {
                        let mut v = 0;
                        let mut place = 1;
                        for _ in 0..e {
                            v += it.next().expect("coordinate count") * place;
                            place *= p;
                        }
                        out.0[s] = v;
                    }
                }
                out
            }
        }
    }

    /// Number of additive coordinates.
    pub fn coordinate_count(&self) -> usize {
        match self.0.kind {
            RingKind::LocalZ { .. } => 1,
            _ => self
                .0
                .components
                .iter()
                .map(|c| c.k * c.k * c.field.degree() as usize)
                .sum(),
        }
    }

    /// Every element, in coordinate order (first coordinate fastest).
    pub fn elements(&self) -> Vec<RingElem> {
        let moduli = self.coordinate_moduli();
        let total: u64 = moduli.iter().map(|&(_, m)| m as u64).product();
        let mut coords = vec![0u32; moduli.len()];
        (0..total)
            .map(|mut idx| {
                for (slot, &(_, m)) in coords.iter_mut().zip(&moduli) {
                    *slot = (idx % m as u64) as u32;
                    idx /= m as u64;
                }
                self.from_coordinates(&coords)
            })
            .collect()
    }

    /// Field and matrix size of the single simple component, if `self` is simple.
    pub fn as_simple(&self) -> Option<(usize, &Field)> {
        match &self.0.kind {
            RingKind::Simple { k, field } => Some((*k, field)),
            _ => None,
        }
    }

    /// Serializes an element: residues as integers, field scalars as
    /// coefficient lists (low degree first), matrices as row-major nested
    /// arrays, product elements as one entry per factor.
    pub fn elem_to_json(&self, a: &RingElem) -> Value {
        let scalar = |field: &Field, x: Fq| Value::from(field.coeffs(x));
        let component = |c: &Component| {
            let data = &a.0[c.offset..c.offset + c.k * c.k];
            if c.k == 1 {
                scalar(&c.field, data[0])
            } else {
                Value::Array(
                    data.chunks(c.k)
                        .map(|row| Value::Array(row.iter().map(|&x| scalar(&c.field, x)).collect()))
                        .collect(),
                )
            }
        };
        match &self.0.kind {
            RingKind::LocalZ { .. } => Value::from(a.0[0]),
            RingKind::Simple { .. } => component(&self.0.components[0]),
            RingKind::Product(_) => Value::Array(self.0.components.iter().map(component).collect()),
        }
    }

    /// Accepts everything [`elem_to_json`](Self::elem_to_json) writes, plus
    /// plain integers for field scalars (reduced via the prime subfield) and
    /// bare scalars for 1x1 matrices.
    pub fn elem_from_json(&self, v: &Value) -> Result<RingElem, RingError> {
        let bad = |reason: String| RingError::BadElement {
            ring: self.to_string(),
            reason,
        };
        let scalar = |field: &Field, v: &Value| -> Result<Fq, RingError> {
            match v {
                Value::Number(n) => {
                    let n = n
                        .as_i64()
                        .ok_or_else(|| bad(format!("not an integer: {n}")))?;
                    Ok(field.from_int(n))
                }
                Value::Array(cs) => {
                    let coeffs = cs
                        .iter()
                        .map(|c| c.as_u64().and_then(|c| u32::try_from(c).ok()))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| bad(format!("bad coefficient list {v}")))?;
                    field
                        .from_coeffs(&coeffs)
                        .ok_or_else(|| bad(format!("coefficients {coeffs:?} not in {field}")))
                }
                _ => Err(bad(format!("expected field scalar, got {v}"))),
            }
        };
        let component = |c: &Component, v: &Value, out: &mut RingElem| -> Result<(), RingError> {
            if c.k == 1 {
                let inner = match v {
                    Value::Array(rows) if rows.len() == 1 && rows[0].is_array() => match &rows[0] {
                        Value::Array(r) if r.len() == 1 => &r[0],
                        _ => v,
                    },
                    _ => v,
                };
                out.0[c.offset] = scalar(&c.field, inner)?;
                return Ok(());
            }
            let rows = v
                .as_array()
                .filter(|r| r.len() == c.k)
                .ok_or_else(|| bad(format!("expected {0}x{0} matrix, got {v}", c.k)))?;
            for (i, row) in rows.iter().enumerate() {
                let row = row
                    .as_array()
                    .filter(|r| r.len() == c.k)
                    .ok_or_else(|| bad(format!("matrix row {row} has wrong length")))?;
                for (j, x) in row.iter().enumerate() {
                    out.0[c.offset + i * c.k + j] = scalar(&c.field, x)?;
                }
            }
            Ok(())
        };
        let mut out = self.zero();
        match &self.0.kind {
            RingKind::LocalZ { .. } => {
                let n = v
                    .as_i64()
                    .ok_or_else(|| bad(format!("expected residue, got {v}")))?;
                out.0[0] = n.rem_euclid(self.0.residue_modulus as i64) as u32;
            }
            RingKind::Simple { .. } => component(&self.0.components[0], v, &mut out)?,
            RingKind::Product(_) => {
                let parts = v
                    .as_array()
                    .filter(|p| p.len() == self.0.components.len())
                    .ok_or_else(|| {
                        bad(format!(
                            "expected {} product components, got {v}",
                            self.0.components.len()
                        ))
                    })?;
                for (c, part) in self.0.components.iter().zip(parts) {
                    component(c, part, &mut out)?;
                }
            }
        }
        Ok(out)
    }
}

fn parse_simple(s: &str) -> Option<(usize, u64)> {
    if let Some(inner) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        return Some((1, inner.parse().ok()?));
    }
    let inner = s.strip_prefix("M(")?.strip_suffix(')')?;
    let (k, rest) = inner.split_once(',')?;
    let q = rest.strip_prefix("GF(")?.strip_suffix(')')?;
    Some((k.parse().ok()?, q.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_catalog() {
        assert_eq!(BaseRing::parse("GF(4)").unwrap().to_string(), "GF(4)");
        assert_eq!(
            BaseRing::parse("M(2, GF(3))").unwrap().to_string(),
            "M(2,GF(3))"
        );
        let r = BaseRing::parse("GF(2) x GF(3)").unwrap();
        assert_eq!(r.num_components(), 2);
        assert_eq!(r.order(), BigUint::from(6u32));
        let z = BaseRing::parse("Z/8").unwrap();
        assert_eq!(z.jsize(), BigUint::from(4u32));
        assert_eq!(z.wedderburn(), vec![WedderburnFactor { n: 1, q: 2 }]);
        assert!(matches!(
            BaseRing::parse("Z/12"),
            Err(RingError::NotPrimePower(12))
        ));
        assert!(matches!(
            BaseRing::parse("GF(6)"),
            Err(RingError::NotPrimePower(6))
        ));
        assert!(BaseRing::parse("M(4,GF(2))").is_err());
        assert!(BaseRing::parse("Q").is_err());
    }

    #[test]
    fn order_is_jsize_times_semisimple_part() {
        for spec in ["GF(2)", "M(2,GF(3))", "GF(4)xM(2,GF(2))", "Z/27", "Z/5"] {
            let r = BaseRing::parse(spec).unwrap();
            let semisimple: BigUint = r
                .wedderburn()
                .iter()
                .map(|w| BigUint::from(w.q).pow((w.n * w.n) as u32))
                .product();
            assert_eq!(r.order(), r.jsize() * semisimple, "{spec}");
        }
    }

    #[test]
    fn z4_addition() {
        let r = BaseRing::parse("Z/4").unwrap();
        let three = r.from_int(3);
        assert_eq!(
            r.ring_ops(&three, &three, RingOp::Add).unwrap(),
            r.from_int(2)
        );
    }

    #[test]
    fn matrix_unit_product() {
        let r = BaseRing::matrix(2, 2).unwrap();
        let e11 = RingElem::from_slots(&[1, 0, 0, 0]);
        let e12 = RingElem::from_slots(&[0, 1, 0, 0]);
        assert_eq!(r.ring_ops(&e11, &e12, RingOp::Mul).unwrap(), e12);
        assert_eq!(r.mul(&e12, &e11), r.zero());
    }

    #[test]
    fn gf4_square_of_generator() {
        let r = BaseRing::field(4).unwrap();
        let x = r.elem_from_json(&serde_json::json!([0, 1])).unwrap();
        let xx = r.mul(&x, &x);
        assert_eq!(r.elem_to_json(&xx), serde_json::json!([1, 1]));
    }

    #[test]
    fn mismatch_is_reported() {
        let r = BaseRing::field(3).unwrap();
        let bad = RingElem::from_slots(&[5]);
        assert!(matches!(
            r.ring_ops(&bad, &r.one(), RingOp::Add),
            Err(RingError::RingMismatch(_))
        ));
        let wide = RingElem::from_slots(&[1, 0]);
        assert!(r.ring_ops(&wide, &r.one(), RingOp::Mul).is_err());
    }

    #[test]
    fn projection_of_product() {
        let r = BaseRing::parse("GF(3)xGF(5)").unwrap();
        let a = r.elem_from_json(&serde_json::json!([2, 1])).unwrap();
        assert_eq!(
            r.project_component(&a, 1).unwrap(),
            RingElem::from_slots(&[2])
        );
        assert_eq!(
            r.project_component(&r.zero(), 2).unwrap(),
            RingElem::from_slots(&[0])
        );
        assert!(matches!(
            r.project_component(&a, 3),
            Err(RingError::IndexOutOfRange { index: 3, len: 2 })
        ));
        let f = BaseRing::field(3).unwrap();
        assert!(matches!(
            f.project_component(&f.one(), 1),
            Err(RingError::NotAProduct(_))
        ));
    }

    #[test]
    fn reduction_mod_radical() {
        let r = BaseRing::parse("Z/8").unwrap();
        assert_eq!(
            r.reduce_mod_radical(&r.from_int(6)).unwrap(),
            RingElem::from_slots(&[0])
        );
        assert_eq!(
            r.reduce_mod_radical(&r.from_int(5)).unwrap(),
            RingElem::from_slots(&[1])
        );
        assert_eq!(r.radical_quotient().to_string(), "GF(2)");
        let f = BaseRing::field(5).unwrap();
        assert_eq!(f.reduce_mod_radical(&f.from_int(3)).unwrap(), f.from_int(3));
        assert!(matches!(
            r.reduce_mod_radical(&RingElem::from_slots(&[9])),
            Err(RingError::NoRadicalReduction(_))
        ));
    }

    #[test]
    fn coordinates_round_trip_and_enumerate() {
        for spec in ["GF(9)", "M(2,GF(2))", "GF(2)xGF(3)", "Z/4"] {
            let r = BaseRing::parse(spec).unwrap();
            let all = r.elements();
            assert_eq!(BigUint::from(all.len()), r.order());
            let mut seen = std::collections::HashSet::new();
            for a in &all {
                assert!(r.contains(a));
                let mut c = Vec::new();
                r.push_coordinates(a, &mut c);
                assert_eq!(c.len(), r.coordinate_count());
                assert_eq!(&r.from_coordinates(&c), a);
                assert!(seen.insert(a.clone()));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for spec in ["GF(9)", "M(2,GF(4))", "GF(2)xM(2,GF(3))", "Z/27"] {
            let r = BaseRing::parse(spec).unwrap();
            for a in r.elements().into_iter().step_by(7) {
                let v = r.elem_to_json(&a);
                assert_eq!(r.elem_from_json(&v).unwrap(), a, "{spec} {v}");
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        for spec in ["Z/4", "GF(4)", "M(2,GF(2))"] {
            let r = BaseRing::parse(spec).unwrap();
            let all = r.elements();
            let mut triples = 0;
            'outer: for a in &all {
                for b in &all {
                    for c in &all {
                        assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
                        assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
                        assert_eq!(r.mul(&r.add(a, b), c), r.add(&r.mul(a, c), &r.mul(b, c)));
                        triples += 1;
                        if triples >= 10_000 {
                            break 'outer;
                        }
                    }
                }
            }
            assert_eq!(r.mul(&r.one(), &all[all.len() - 1]), all[all.len() - 1]);
        }
    }
}
