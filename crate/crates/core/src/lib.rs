//! Incidence rings `A_n(<=, R)` of finite posets over finite base rings.
//!
//! The crate decides whether a tuple of matrices together with all scalar
//! matrices generates `A_n(<=, R)`, counts such tuples exactly, and checks
//! the real and complex cases by sampling the unit sphere. Every closed-form
//! answer has a brute-force counterpart ([`IncidenceRing::subring_closure`],
//! [`count_by_enumeration`]) for small rings.
//!
//! Supported base rings are `GF(q)`, `M_k(GF(q))`, finite products of those,
//! and `Z/p^e`, with `p <= 97`, `e <= 4`, `k <= 3`.

pub mod counting;
pub mod field;
pub mod generation;
pub mod incidence;
pub mod linalg;
pub mod operators;
pub mod poset;
pub mod real_complex;
pub mod ring;
pub mod span;
pub mod tuple_file;

pub use counting::{
    count_by_enumeration, count_gen, count_gen_simple, generator_count, matrix_json,
    probability_closed_form, radical_data, rational_json, CountError, CountReport, RadicalData,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use field::Field;
pub use generation::{check_criterion_simple, check_generates, mgen, mgen_lower_bound, GenReport};
pub use incidence::{IncMatrix, IncidenceError, IncidenceRing, SubringSpan, DEFAULT_CLOSURE_LIMIT};
pub use linalg::FieldMatrix;
pub use operators::{sandwich_decompose, separating_operators, LinearMap, SandwichTerm};
pub use poset::{labeled_posets, CoverData, Poset, PosetError, StandardPoset};
pub use real_complex::{
    check_criterion_field, monte_carlo, sample_sphere, Degeneracy, FieldCheck, McReport, RealTuple,
    ScalarField,
};
pub use ring::{BaseRing, RingElem, RingError, RingKind, RingOp};
pub use tuple_file::{TupleFile, TupleFileError};
