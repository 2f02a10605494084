//! Exact counts and probabilities of generating tuples.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::generation::mgen;
use crate::incidence::{IncMatrix, IncidenceError, IncidenceRing};
use crate::poset::Poset;
use crate::ring::BaseRing;

/// Default bound on `|A|^m` for [`count_by_enumeration`].
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("invalid shape: need n >= 1, k >= 1, q >= 2, m >= 1 and rho >= n + c (n={n}, rho={rho}, c={c})")]
    InvalidShape { n: usize, rho: usize, c: usize },
}

/// Exact count and probability of generating `m`-tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub m: u32,
    pub rho: usize,
    pub c: usize,
    pub count: BigUint,
    pub total: BigUint,
    pub probability: BigRational,
    pub mgen: u32,
}

/// `{"num": "...", "den": "..."}` with decimal strings.
pub fn rational_json(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

impl CountReport {
    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "rho": self.rho,
            "c": self.c,
            "count": self.count.to_string(),
            "total": self.total.to_string(),
            "probability": rational_json(&self.probability),
            "mgen": self.mgen,
        })
    }
}

/// `Q (Q-1) ... (Q-n+1)`, zero when `Q < n`.
fn falling_factorial(big_q: &BigUint, n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for l in 0..n {
        let l = BigUint::from(l);
        if &l >= big_q {
            return BigUint::zero();
        }
        acc *= big_q - l;
    }
    acc
}

/// Generating `m`-tuples for `A_n(<=, M_k(GF(q)))` with `|<=| = rho` and `c` covering pairs:
/// `Q!/(Q-n)! * (Q-q)^c * Q^(rho-n-c)` with `Q = q^(k^2 m)` and `0^0 = 1`.
pub fn count_gen_simple(
    n: usize,
    rho: usize,
    c: usize,
    k: usize,
    q: u64,
    m: u32,
) -> Result<BigUint, CountError> {
    if n == 0 || k == 0 || q < 2 || m == 0 || rho < n + c {
        return Err(CountError::InvalidShape { n, rho, c });
    }
    let big_q = BigUint::from(q).pow((k * k) as u32 * m);
    let mut count = falling_factorial(&big_q, n);
    // Q >= q always; pow(0) is 1 even for a zero base.
    count *= (&big_q - q).pow(c as u32);
    count *= big_q.pow((rho - n - c) as u32);
    Ok(count)
}

/// `|J(R)|^(m rho) * prod_i count_gen_simple(n, rho, c, n_i, q_i, m)`.
pub fn generator_count(poset: &Poset, ring: &BaseRing, m: u32) -> BigUint {
    let (n, rho, c) = (poset.size(), poset.rho(), poset.c());
    let mut count = ring.jsize().pow(m * rho as u32);
    for w in ring.wedderburn() {
        count *= count_gen_simple(n, rho, c, w.n, w.q, m).expect("poset data is consistent");
    }
    count
}

/// Full report for `|Gen_m(A, R)|`, including `|A|^m`, the probability and `mgen`.
pub fn count_gen(poset: &Poset, ring: &BaseRing, m: u32) -> CountReport {
    assert!(m >= 1, "m must be positive");
    let count = generator_count(poset, ring, m);
    let total = ring.order().pow(m * poset.rho() as u32);
    let probability = BigRational::new(count.clone().into(), total.clone().into());
    CountReport {
        m,
        rho: poset.rho(),
        c: poset.c(),
        count,
        total,
        probability,
        mgen: mgen(poset, ring),
    }
}

/// `prod_i (1 - 1/q_i^(n_i^2 m - 1))^c prod_{l=1}^{n-1} (1 - l/q_i^(n_i^2 m))`, exactly.
pub fn probability_closed_form(poset: &Poset, ring: &BaseRing, m: u32) -> BigRational {
    assert!(m >= 1, "m must be positive");
    let one = BigRational::one();
    let mut p = BigRational::one();
    for w in ring.wedderburn() {
        let exponent = (w.n * w.n) as u32 * m;
        let big_q = BigRational::from_integer(BigUint::from(w.q).pow(exponent).into());
        let smaller = BigRational::from_integer(BigUint::from(w.q).pow(exponent - 1).into());
        let cover_factor = &one - one.clone() / smaller;
        for _ in 0..poset.c() {
            p *= &cover_factor;
        }
        for l in 1..poset.size() {
            p *= &one - BigRational::from_integer(l.into()) / &big_q;
        }
    }
    p
}

/// Counts generating tuples by closing every tuple in `A^m`.
pub fn count_by_enumeration(
    a: &IncidenceRing,
    m: u32,
    limit: u64,
) -> Result<BigUint, IncidenceError> {
    assert!(m >= 1, "m must be positive");
    let tuples = a.order().pow(m);
    if tuples > BigUint::from(limit) {
        return Err(IncidenceError::TooLarge {
            what: "tuple space",
            size: tuples,
            limit,
        });
    }
    let elements = a.elements()?;
    let base = elements.len() as u64;
    let total = tuples.to_u64().expect("bounded by limit");
    let hits = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let tuple: Vec<IncMatrix> = (0..m)
                .map(|_| {
                    let x = elements[(idx % base) as usize].clone();
                    idx /= base;
                    x
                })
                .collect();
            a.generates_bruteforce(&tuple).map(u64::from)
        })
        .try_reduce(|| 0, |x, y| Ok(x + y))?;
    Ok(BigUint::from(hits))
}

/// Jacobson radical of `A`: its order and additive generators.
#[derive(Debug, Clone)]
pub struct RadicalData {
    pub size: BigUint,
    pub basis: Vec<IncMatrix>,
}

impl RadicalData {
    pub fn to_json(&self, a: &IncidenceRing) -> Value {
        let basis: Vec<Value> = self.basis.iter().map(|x| matrix_json(a, x)).collect();
        json!({ "size": self.size.to_string(), "basis": basis })
    }
}

/// Serializes an incidence matrix as `n x n` rows of ring elements.
pub fn matrix_json(a: &IncidenceRing, x: &IncMatrix) -> Value {
    let n = a.n();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| a.ring().elem_to_json(x.entry(i, j)))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// `J(A) = sum_i E_ii J(R) + sum_{i<j} E_ij R`.
pub fn radical_data(a: &IncidenceRing) -> RadicalData {
    let poset = a.poset();
    let ring = a.ring();
    let n = poset.size();
    let size = ring.jsize().pow(n as u32) * ring.order().pow((poset.rho() - n) as u32);
    let mut basis = Vec::new();
    for i in 0..n {
        for j in ring.radical_generators() {
            basis.push(a.unit(i, i, &j).expect("diagonal is on the pattern"));
        }
    }
    for &(i, j) in poset.order_pairs() {
        if i != j {
            for r in ring.additive_generators() {
                basis.push(a.unit(i, j, &r).expect("pair is on the pattern"));
            }
        }
    }
    RadicalData { size, basis }
}
