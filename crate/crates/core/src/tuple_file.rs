//! JSON tuple files:
//!
//! ```json
//! { "poset": "n 2\nrel 1 2", "ring": "GF(2)", "matrices": [[[1, 1], [0, 0]]] }
//! ```
//!
//! `poset` is either the text of a poset file or an object
//! `{"n": 2, "rel": [[1, 2]]}` of strict pairs. Each matrix is an `n x n`
//! array of serialized ring elements; entries off the order must be zero.

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::counting::matrix_json;
use crate::incidence::{IncMatrix, IncidenceError, IncidenceRing};
use crate::poset::{Poset, PosetError};
use crate::ring::{BaseRing, RingError};

#[derive(Debug, Error)]
pub enum TupleFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("matrix {index}: {source}")]
    Matrix {
        index: usize,
        source: IncidenceError,
    },
    #[error("matrix {index}: {reason}")]
    Shape { index: usize, reason: String },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PosetField {
    Text(String),
    Pairs { n: usize, rel: Vec<(usize, usize)> },
}

#[derive(Deserialize)]
struct RawTupleFile {
    poset: PosetField,
    ring: String,
    matrices: Vec<Value>,
}

/// A parsed tuple file.
#[derive(Debug, Clone)]
pub struct TupleFile {
    pub ring: IncidenceRing,
    pub matrices: Vec<IncMatrix>,
}

impl TupleFile {
    pub fn parse(text: &str) -> Result<Self, TupleFileError> {
        let raw: RawTupleFile = serde_json::from_str(text)?;
        let poset = match raw.poset {
            PosetField::Text(t) => Poset::parse(&t)?,
            PosetField::Pairs { n, rel } => Poset::from_strict_pairs(n, &rel)?,
        };
        let base = BaseRing::parse(&raw.ring)?;
        let ring = IncidenceRing::new(poset, base);
        let n = ring.n();
        let matrices = raw
            .matrices
            .iter()
            .enumerate()
            .map(|(index, v)| {
                let rows =
                    v.as_array()
                        .filter(|r| r.len() == n)
                        .ok_or_else(|| TupleFileError::Shape {
                            index,
                            reason: format!("expected {n} rows"),
                        })?;
                let rows = rows
                    .iter()
                    .map(|row| {
                        let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| {
                            TupleFileError::Shape {
                                index,
                                reason: format!("expected {n} columns"),
                            }
                        })?;
                        row.iter()
                            .map(|x| ring.ring().elem_from_json(x).map_err(TupleFileError::from))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                ring.from_rows(rows)
                    .map_err(|source| TupleFileError::Matrix { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TupleFile { ring, matrices })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "poset": self.ring.poset().to_file_string(),
            "ring": self.ring.ring().to_string(),
            "matrices": self.matrices.iter().map(|x| matrix_json(&self.ring, x)).collect::<Vec<_>>(),
        })
    }
}
