//! Incidence algebras over the real and complex numbers.
//!
//! A tuple `(A_1, ..., A_m)` fails to generate exactly when, for some pair
//! `i != j`, all diagonal differences `(A_a)_ii - (A_a)_jj` vanish, or, for some
//! covering pair, the `2 x m` matrix of diagonal differences over `(i, j)`
//! entries has rank at most one (all its 2x2 minors vanish). In floating point
//! both conditions become thresholds, and the distance to each degenerate set
//! is reported as a margin.
//!
//! Uniform points on the sphere are normalized standard Gaussian vectors drawn
//! from ChaCha20 streams; trials are grouped in fixed chunks, each with its own
//! stream, so results do not depend on the number of worker threads.

use num_complex::Complex64;
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::poset::Poset;

/// Name of the random generator recorded in reports.
pub const RNG_NAME: &str = "ChaCha20Rng/rand_chacha-0.9";

/// Trials sharing one generator stream.
const CHUNK: u64 = 1024;

/// Histogram bins: `(-inf, 1e-15)`, `[1e-15, 1e-14)`, ..., `[1e0, inf)`.
pub const HISTOGRAM_BINS: usize = 17;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealError {
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("m must be at least 1")]
    EmptyTuple,
    #[error("coordinates must be finite")]
    NotFinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complex,
}

impl ScalarField {
    fn width(self) -> usize {
        match self {
            ScalarField::Real => 1,
            ScalarField::Complex => 2,
        }
    }
}

/// A tuple of `m` incidence matrices over R or C, stored as the coordinates
/// `(A_a)_ij` for `a = 1..m` and `i <= j` in lexicographic order (complex
/// entries as interleaved real and imaginary parts).
#[derive(Debug, Clone, PartialEq)]
pub struct RealTuple {
    poset: Poset,
    field: ScalarField,
    m: usize,
    coords: Vec<f64>,
}

impl RealTuple {
    pub fn new(
        poset: Poset,
        field: ScalarField,
        m: usize,
        coords: Vec<f64>,
    ) -> Result<Self, RealError> {
        if m == 0 {
            return Err(RealError::EmptyTuple);
        }
        let expected = m * poset.rho() * field.width();
        if coords.len() != expected {
            return Err(RealError::LengthMismatch {
                expected,
                got: coords.len(),
            });
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(RealError::NotFinite);
        }
        Ok(RealTuple {
            poset,
            field,
            m,
            coords,
        })
    }

    /// Builds a real tuple from dense `n x n` matrices, ignoring entries off the order.
    pub fn from_real_matrices(poset: Poset, mats: &[Vec<Vec<f64>>]) -> Result<Self, RealError> {
        let mut coords = Vec::new();
        for a in mats {
            for &(i, j) in poset.order_pairs() {
                coords.push(a[i][j]);
            }
        }
        Self::new(poset, ScalarField::Real, mats.len(), coords)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Self {
        self.scaled(1.0 / self.norm())
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        RealTuple {
            coords: self.coords.iter().map(|x| x * lambda).collect(),
            ..self.clone()
        }
    }

    /// `(A_a)_ij` for `i <= j` (0-based).
    pub fn entry(&self, a: usize, i: usize, j: usize) -> Complex64 {
        let t = self
            .poset
            .pair_index(i, j)
            .expect("pair on the order relation");
        let w = self.field.width();
        let base = (a * self.poset.rho() + t) * w;
        match self.field {
            ScalarField::Real => Complex64::new(self.coords[base], 0.0),
            ScalarField::Complex => Complex64::new(self.coords[base], self.coords[base + 1]),
        }
    }
}

/// Which degenerate family a failing tuple lies (numerically) on. Pairs are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "pair")]
pub enum Degeneracy {
    /// All diagonal differences at `(i, j)` vanish.
    Phi(usize, usize),
    /// All 2x2 minors of the cover matrix at `(i, j)` vanish.
    Psi(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldCheck {
    pub verdict: bool,
    /// Smallest margin over all tests; `INFINITY` when there are none (`n = 1`).
    pub margin: f64,
    pub failure: Option<Degeneracy>,
}

/// Smallest singular value of the `2 x m` matrix with rows `v`, `w`.
///
/// `det(M M^*)` is the sum of squared moduli of the 2x2 minors.
fn smallest_singular_value(v: &[Complex64], w: &[Complex64]) -> f64 {
    let a: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    let b: f64 = w.iter().map(|z| z.norm_sqr()).sum();
    let cross: Complex64 = v.iter().zip(w).map(|(x, y)| x * y.conj()).sum();
    let mut det = 0.0;
    for s in 0..v.len() {
        for t in s + 1..v.len() {
            det += (v[s] * w[t] - v[t] * w[s]).norm_sqr();
        }
    }
    let half = (a - b) / 2.0;
    let largest = (a + b) / 2.0 + (half * half + cross.norm_sqr()).sqrt();
    if largest <= 0.0 {
        0.0
    } else {
        (det / largest).sqrt()
    }
}

/// Generation test with threshold `tol` on every degeneracy margin.
pub fn check_criterion_field(t: &RealTuple, tol: f64) -> FieldCheck {
    let n = t.poset.size();
    let mut margin = f64::INFINITY;
    let mut failure = None;
    let mut record = |value: f64, kind: Degeneracy| {
        margin = margin.min(value);
        if value <= tol && failure.is_none() {
            failure = Some(kind);
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            let spread = (0..t.m)
                .map(|a| (t.entry(a, i, i) - t.entry(a, j, j)).norm())
                .fold(0.0, f64::max);
            record(spread, Degeneracy::Phi(i + 1, j + 1));
        }
    }
    for &(i, j) in t.poset.covering_pairs() {
        let v: Vec<Complex64> = (0..t.m)
            .map(|a| t.entry(a, i, i) - t.entry(a, j, j))
            .collect();
        let w: Vec<Complex64> = (0..t.m).map(|a| t.entry(a, i, j)).collect();
        record(
            smallest_singular_value(&v, &w),
            Degeneracy::Psi(i + 1, j + 1),
        );
    }
    FieldCheck {
        verdict: failure.is_none(),
        margin,
        failure,
    }
}

fn draw(rng: &mut ChaCha20Rng, poset: &Poset, field: ScalarField, m: usize) -> RealTuple {
    let dim = m * poset.rho() * field.width();
    let mut coords: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
    let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut coords {
        *x /= norm;
    }
    RealTuple {
        poset: poset.clone(),
        field,
        m,
        coords,
    }
}

/// A uniform point on the unit sphere of `A^m`.
pub fn sample_sphere(poset: &Poset, field: ScalarField, m: usize, seed: u64) -> RealTuple {
    assert!(m >= 1, "m must be positive");
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    draw(&mut rng, poset, field, m)
}

#[derive(Debug, Clone, PartialEq)]
pub struct McReport {
    pub field: ScalarField,
    pub m: usize,
    pub trials: u64,
    pub passes: u64,
    pub fraction: Ratio<u64>,
    /// Smallest per-trial margin; `None` when no test applies (`n = 1`).
    pub min_margin: Option<f64>,
    pub tol: f64,
    pub seed: u64,
    pub phi_failures: u64,
    pub psi_failures: u64,
    /// Trial counts by `floor(log10(margin))`, see [`HISTOGRAM_BINS`].
    pub histogram: [u64; HISTOGRAM_BINS],
}

fn histogram_bin(margin: f64) -> usize {
    if margin.is_nan() || margin <= 0.0 {
        return 0;
    }
    let e = margin.log10().floor();
    (e + 16.0).clamp(0.0, (HISTOGRAM_BINS - 1) as f64) as usize
}

/// Lower edge (log10) of a histogram bin; `None` for the unbounded first bin.
pub fn histogram_lower_edge(bin: usize) -> Option<i32> {
    (bin > 0).then(|| bin as i32 - 16)
}

impl McReport {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "m": self.m,
            "trials": self.trials,
            "passes": self.passes,
            "fraction": { "num": self.fraction.numer().to_string(), "den": self.fraction.denom().to_string() },
            "min_margin": self.min_margin,
            "tol": self.tol,
            "seed": self.seed,
            "rng": RNG_NAME,
            "phi_failures": self.phi_failures,
            "psi_failures": self.psi_failures,
        })
    }

    /// `bin_lower_log10,count` lines.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("bin_lower_log10,count\n");
        for (bin, count) in self.histogram.iter().enumerate() {
            let edge = histogram_lower_edge(bin).map_or("-inf".to_string(), |e| e.to_string());
            out.push_str(&format!("{edge},{count}\n"));
        }
        out
    }
}

#[derive(Clone)]
struct Tally {
    passes: u64,
    min_margin: f64,
    phi: u64,
    psi: u64,
    histogram: [u64; HISTOGRAM_BINS],
}

impl Tally {
    fn empty() -> Self {
        Tally {
            passes: 0,
            min_margin: f64::INFINITY,
            phi: 0,
            psi: 0,
            histogram: [0; HISTOGRAM_BINS],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passes += other.passes;
        self.min_margin = self.min_margin.min(other.min_margin);
        self.phi += other.phi;
        self.psi += other.psi;
        for (a, b) in self.histogram.iter_mut().zip(other.histogram) {
            *a += b;
        }
        self
    }
}

/// Samples `trials` uniform tuples and counts those passing the generation test.
pub fn monte_carlo(
    poset: &Poset,
    field: ScalarField,
    m: usize,
    trials: u64,
    seed: u64,
    tol: f64,
) -> McReport {
    assert!(m >= 1 && trials >= 1, "need m >= 1 and trials >= 1");
    let chunks = trials.div_ceil(CHUNK);
    let tally = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let count = CHUNK.min(trials - chunk * CHUNK);
            let mut tally = Tally::empty();
            for _ in 0..count {
                let t = draw(&mut rng, poset, field, m);
                let check = check_criterion_field(&t, tol);
                if check.verdict {
                    tally.passes += 1;
                }
                match check.failure {
                    Some(Degeneracy::Phi(..)) => tally.phi += 1,
                    Some(Degeneracy::Psi(..)) => tally.psi += 1,
                    None => {}
                }
                tally.min_margin = tally.min_margin.min(check.margin);
                if check.margin.is_finite() {
                    tally.histogram[histogram_bin(check.margin)] += 1;
                }
            }
            tally
        })
        .reduce(Tally::empty, Tally::merge);
    McReport {
        field,
        m,
        trials,
        passes: tally.passes,
        fraction: Ratio::new(tally.passes, trials),
        min_margin: tally.min_margin.is_finite().then_some(tally.min_margin),
        tol,
        seed,
        phi_failures: tally.phi,
        psi_failures: tally.psi,
        histogram: tally.histogram,
    }
}
