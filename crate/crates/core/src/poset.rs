//! Finite posets on `{1, ..., n}`.
//!
//! Labels are 1-based wherever they cross the API boundary (errors, the
//! poset file format, [`CoverData`]); indices taken and returned by the
//! accessor methods on [`Poset`] are 0-based.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

/// Largest ground set accepted by [`labeled_posets`].
pub const MAX_ENUMERATION_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("ground set must be non-empty")]
    Empty,
    #[error("relation matrix is not square")]
    NotSquare,
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} and {1} are mutually related")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("syntax error on line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("element {0} outside the ground set")]
    IndexOutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardPoset {
    Chain,
    Antichain,
}

/// A validated partial order with its covering relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
    pairs: Vec<(usize, usize)>,
    covers: Vec<(usize, usize)>,
}

/// Covering pairs (1-based, sorted) and the sizes `rho = |<=|`, `c = |covering|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverData {
    pub covers: Vec<(usize, usize)>,
    pub rho: usize,
    pub c: usize,
}

impl Poset {
    /// Validates `rel` (`rel[i][j]` iff `i+1 <= j+1`) as a partial order.
    #[allow(clippy::needless_range_loop)]
    pub fn from_relation(rel: &[Vec<bool>]) -> Result<Self, PosetError> {
        let n = rel.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if rel.iter().any(|row| row.len() != n) {
            return Err(PosetError::NotSquare);
        }
        for (i, row) in rel.iter().enumerate() {
            if !row[i] {
                return Err(PosetError::NotReflexive(i + 1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rel[i][j] && rel[j][i] {
                    return Err(PosetError::NotAntisymmetric(i + 1, j + 1));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !rel[i][j] {
                    continue;
                }
                for k in 0..n {
                    if rel[j][k] && !rel[i][k] {
                        return Err(PosetError::NotTransitive(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        let leq = rel.concat();
        Ok(Self::from_valid(n, leq))
    }

    fn from_valid(n: usize, leq: Vec<bool>) -> Self {
        let pairs = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| leq[i * n + j])
            .collect();
        let covers = reduce(n, &leq);
        Poset {
            n,
            leq,
            pairs,
            covers,
        }
    }

    /// Reflexive-transitive closure of the given strict pairs (1-based).
    #[allow(clippy::needless_range_loop)]
    pub fn from_strict_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in pairs {
            for x in [i, j] {
                if x == 0 || x > n {
                    return Err(PosetError::IndexOutOfRange(x));
                }
            }
            rel[i - 1][j - 1] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i][k] {
                    for j in 0..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_relation(&rel)
    }

    pub fn standard(kind: StandardPoset, n: usize) -> Result<Self, PosetError> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let leq = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| match kind {
                StandardPoset::Chain => i <= j,
                StandardPoset::Antichain => i == j,
            })
            .collect();
        Ok(Self::from_valid(n, leq))
    }

    /// The linear order `1 < 2 < ... < n`. Panics if `n == 0`.
    pub fn chain(n: usize) -> Self {
        Self::standard(StandardPoset::Chain, n).expect("n >= 1")
    }

    /// The equality order on `n` points. Panics if `n == 0`.
    pub fn antichain(n: usize) -> Self {
        Self::standard(StandardPoset::Antichain, n).expect("n >= 1")
    }

    /// Parses the line format: `n <int>`, then `rel <i> <j>` lines; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self, PosetError> {
        let mut n = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |reason: &str| PosetError::Syntax {
                line: line_no,
                reason: reason.to_string(),
            };
            let words: Vec<&str> = line.split_whitespace().collect();
            match (n, words.as_slice()) {
                (None, ["n", size]) => {
                    let size: usize = size.parse().map_err(|_| syntax("expected `n <int>`"))?;
                    if size == 0 {
                        return Err(PosetError::Empty);
                    }
                    n = Some(size);
                }
                (None, _) => return Err(syntax("first line must be `n <int>`")),
                (Some(_), ["rel", a, b]) => {
                    let a: usize = a.parse().map_err(|_| syntax("bad element label"))?;
                    let b: usize = b.parse().map_err(|_| syntax("bad element label"))?;
                    if a == b {
                        return Err(syntax("`rel i i` is not a strict pair"));
                    }
                    pairs.push((a, b));
                }
                (Some(_), _) => return Err(syntax("expected `rel <i> <j>`")),
            }
        }
        let n = n.ok_or(PosetError::Syntax {
            line: text.lines().count().max(1),
            reason: "missing `n <int>` line".into(),
        })?;
        Self::from_strict_pairs(n, &pairs)
    }

    /// `n`, then the covering pairs in lexicographic order.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(i, j) in &self.covers {
            writeln!(out, "rel {} {}", i + 1, j + 1).unwrap();
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `i <= j` (0-based).
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    /// `i < j` (0-based).
    pub fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// All pairs `i <= j`, lexicographic, 0-based.
    pub fn order_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Position of `(i, j)` in [`order_pairs`](Self::order_pairs).
    pub fn pair_index(&self, i: usize, j: usize) -> Option<usize> {
        self.pairs.binary_search(&(i, j)).ok()
    }

    /// Covering pairs, lexicographic, 0-based.
    pub fn covering_pairs(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn rho(&self) -> usize {
        self.pairs.len()
    }

    pub fn c(&self) -> usize {
        self.covers.len()
    }

    pub fn cover_data(&self) -> CoverData {
        CoverData {
            covers: self.covers.iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
            rho: self.rho(),
            c: self.c(),
        }
    }

    /// Relation matrix as rows.
    pub fn relation(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(<[bool]>::to_vec).collect()
    }
}

/// Covers of `i` are the minimal elements of its strict up-set.
fn reduce(n: usize, leq: &[bool]) -> Vec<(usize, usize)> {
    let up: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && leq[i * n + j]).collect())
        .collect();
    let mut covers = Vec::new();
    for (i, above) in up.iter().enumerate() {
        let mut shadowed = vec![false; n];
        for &k in above {
            for &j in &up[k] {
                shadowed[j] = true;
            }
        }
        covers.extend(above.iter().filter(|&&j| !shadowed[j]).map(|&j| (i, j)));
    }
    covers
}

/// Every partial order on `{1..n}`, found by filtering all reflexive relation matrices.
///
/// Panics if `n` is 0 or exceeds [`MAX_ENUMERATION_SIZE`].
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    assert!(
        (1..=MAX_ENUMERATION_SIZE).contains(&n),
        "n must be in 1..=5"
    );
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    (0u64..1 << off.len())
        .filter_map(|mask| {
            let mut rel = vec![vec![false; n]; n];
            for (i, row) in rel.iter_mut().enumerate() {
                row[i] = true;
            }
            for (bit, &(i, j)) in off.iter().enumerate() {
                rel[i][j] = mask >> bit & 1 == 1;
            }
            Poset::from_relation(&rel).ok()
        })
        .collect()
}
