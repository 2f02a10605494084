//! Deciding whether a tuple of matrices, together with all scalar matrices,
//! generates an incidence ring.
//!
//! Over `M_k(GF(q))` the tuple generates iff the diagonal table has pairwise
//! distinct rows and, for every covering pair `i < j`, the vector of diagonal
//! differences `v` and the vector of `(i, j)` entries `w` are linearly
//! independent over `GF(q)`. Products reduce to their factors, `Z/p^e` reduces
//! to `GF(p)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::counting::generator_count;
use crate::incidence::{IncMatrix, IncidenceError, IncidenceRing};
use crate::linalg::FieldMatrix;
use crate::poset::Poset;
use crate::ring::{BaseRing, RingElem, RingKind};

/// Verdict of a generation test with its witnesses. Pairs are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenReport {
    pub verdict: bool,
    pub ring: BaseRing,
    /// `delta[t][a]` is the diagonal entry `(A_a)_{tt}`.
    pub delta: Vec<Vec<RingElem>>,
    pub failed_row_pair: Option<(usize, usize)>,
    pub failed_cover: Option<(usize, usize)>,
    pub per_component: Option<Vec<GenReport>>,
}

impl GenReport {
    pub fn to_json(&self) -> Value {
        let delta: Vec<Vec<Value>> = self
            .delta
            .iter()
            .map(|row| row.iter().map(|x| self.ring.elem_to_json(x)).collect())
            .collect();
        json!({
            "verdict": self.verdict,
            "ring": self.ring.to_string(),
            "delta": delta,
            "failed_row_pair": self.failed_row_pair,
            "failed_cover": self.failed_cover,
            "per_component": self
                .per_component
                .as_ref()
                .map(|parts| parts.iter().map(GenReport::to_json).collect::<Vec<_>>()),
        })
    }
}

fn delta_table(a: &IncidenceRing, s: &[IncMatrix]) -> Vec<Vec<RingElem>> {
    (0..a.n())
        .map(|t| s.iter().map(|x| x.entry(t, t).clone()).collect())
        .collect()
}

/// The criterion over `M_k(GF(q))`.
pub fn check_criterion_simple(
    a: &IncidenceRing,
    s: &[IncMatrix],
) -> Result<GenReport, IncidenceError> {
    let ring = a.ring();
    let Some((_, field)) = ring.as_simple() else {
        return Err(IncidenceError::WrongRingKind(ring.to_string()));
    };
    if s.is_empty() {
        return Err(IncidenceError::EmptyTuple);
    }
    for x in s {
        if !a.contains(x) {
            return Err(IncidenceError::ShapeMismatch);
        }
    }
    let n = a.n();
    let delta = delta_table(a, s);

    let failed_row_pair = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| delta[i] == delta[j])
        .map(|(i, j)| (i + 1, j + 1));

    let failed_cover = a
        .poset()
        .covering_pairs()
        .iter()
        .find(|&&(i, j)| {
            let mut v = Vec::new();
            let mut w = Vec::new();
            for x in s {
                v.extend_from_slice(ring.sub(x.entry(i, i), x.entry(j, j)).slots());
                w.extend_from_slice(x.entry(i, j).slots());
            }
            FieldMatrix::from_rows(field, &[v, w]).rank() < 2
        })
        .map(|&(i, j)| (i + 1, j + 1));

    Ok(GenReport {
        verdict: failed_row_pair.is_none() && failed_cover.is_none(),
        ring: ring.clone(),
        delta,
        failed_row_pair,
        failed_cover,
        per_component: None,
    })
}

/// The criterion over any catalog ring.
pub fn check_generates(a: &IncidenceRing, s: &[IncMatrix]) -> Result<GenReport, IncidenceError> {
    if s.is_empty() {
        return Err(IncidenceError::EmptyTuple);
    }
    for x in s {
        if !a.contains(x) {
            return Err(crate::ring::RingError::RingMismatch(a.ring().to_string()).into());
        }
    }
    let ring = a.ring();
    let components: Vec<GenReport> = match ring.kind() {
        RingKind::Simple { .. } => return check_criterion_simple(a, s),
        RingKind::Product(parts) => (1..=parts.len())
            .map(|idx| {
                let target = IncidenceRing::new(a.poset().clone(), ring.component_ring(idx)?);
                let projected = s
                    .iter()
                    .map(|x| a.map_entries(x, &target, |r| ring.project_component(r, idx)))
                    .collect::<Result<Vec<_>, _>>()?;
                check_criterion_simple(&target, &projected)
            })
            .collect::<Result<_, _>>()?,
        RingKind::LocalZ { .. } => {
            let target = IncidenceRing::new(a.poset().clone(), ring.radical_quotient());
            let reduced = s
                .iter()
                .map(|x| a.map_entries(x, &target, |r| ring.reduce_mod_radical(r)))
                .collect::<Result<Vec<_>, _>>()?;
            vec![check_criterion_simple(&target, &reduced)?]
        }
    };
    Ok(GenReport {
        verdict: components.iter().all(|c| c.verdict),
        ring: ring.clone(),
        delta: delta_table(a, s),
        failed_row_pair: None,
        failed_cover: None,
        per_component: Some(components),
    })
}

/// `max(1, ceil(log_{|R|} n))`.
pub fn mgen_lower_bound(poset: &Poset, ring: &BaseRing) -> u32 {
    let order = ring.order();
    let n = BigUint::from(poset.size());
    let mut t = 0u32;
    let mut power = BigUint::one();
    while power < n {
        power *= &order;
        t += 1;
    }
    t.max(1)
}

/// Least `m` whose generator count is positive, searched upward from the lower bound.
pub fn mgen(poset: &Poset, ring: &BaseRing) -> u32 {
    let mut m = mgen_lower_bound(poset, ring);
    while generator_count(poset, ring, m).is_zero() {
        m += 1;
    }
    m
}
