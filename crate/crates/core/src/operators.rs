//! Linear operators on `M_k(GF(q))`: decomposition into sums of `P X Q`
//! and operator systems separating two vectors of matrices.
//!
//! A linear map is stored as its `k^2 x k^2` matrix acting on row-major
//! flattened matrices, i.e. in the matrix-unit basis `E_{ab} -> a*k + b`.

use crate::field::{Field, Fq};
use crate::linalg::FieldMatrix;

/// An `F`-linear map `M_k(F) -> M_k(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    k: usize,
    matrix: FieldMatrix,
}

impl LinearMap {
    /// Wraps a `k^2 x k^2` matrix. Panics on any other shape.
    pub fn new(k: usize, matrix: FieldMatrix) -> Self {
        assert_eq!(
            matrix.shape(),
            (k * k, k * k),
            "linear map must be k^2 x k^2"
        );
        LinearMap { k, matrix }
    }

    /// Tabulates a map from its values on the matrix units.
    pub fn from_fn(field: &Field, k: usize, f: impl Fn(&FieldMatrix) -> FieldMatrix) -> Self {
        let mut m = FieldMatrix::zeros(field, k * k, k * k);
        for a in 0..k {
            for b in 0..k {
                let img = f(&FieldMatrix::unit(field, k, a, b));
                for (r, &x) in img.data().iter().enumerate() {
                    m[(r, a * k + b)] = x;
                }
            }
        }
        LinearMap { k, matrix: m }
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &FieldMatrix) -> FieldMatrix {
        assert_eq!(x.shape(), (self.k, self.k));
        FieldMatrix::from_vec(
            self.matrix.field(),
            self.k,
            self.k,
            self.matrix.apply(x.data()),
        )
    }
}

/// One summand `P X Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichTerm {
    pub left: FieldMatrix,
    pub right: FieldMatrix,
}

/// Writes `phi` as `X -> sum P_i X Q_i`.
///
/// The coordinate of `phi` sending `E_{ab}` to `c E_{gd}` contributes the term
/// `(c E_{ga}, E_{bd})`, since `E_{ga} X E_{bd} = x_{ab} E_{gd}`. The zero map
/// gives an empty list.
pub fn sandwich_decompose(phi: &LinearMap) -> Vec<SandwichTerm> {
    let k = phi.k;
    let field = phi.matrix.field();
    let mut terms = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for g in 0..k {
                for d in 0..k {
                    let c = phi.matrix[(g * k + d, a * k + b)];
                    if c == 0 {
                        continue;
                    }
                    terms.push(SandwichTerm {
                        left: FieldMatrix::unit(field, k, g, a).scale(c),
                        right: FieldMatrix::unit(field, k, b, d),
                    });
                }
            }
        }
    }
    terms
}

/// Evaluates `sum P_i X Q_i`.
pub fn apply_sandwich(terms: &[SandwichTerm], x: &FieldMatrix) -> FieldMatrix {
    let (k, _) = x.shape();
    terms
        .iter()
        .fold(FieldMatrix::zeros(x.field(), k, k), |acc, t| {
            acc.add(&t.left.mul(x).mul(&t.right))
        })
}

/// Operators `phi_1..phi_m` with `sum phi_i(v_i) = 0` and `sum phi_i(w_i) != 0`.
///
/// Returns `None` exactly when some scalar `lambda` has `w_i = lambda v_i` for
/// all `i`. Otherwise a functional `f` on `V^m` with `f(v) = 0`, `f(w) = 1` is
/// found, `Phi = f(.) w` kills `v` and fixes `w`, and `phi_i` is `Phi`
/// restricted to the `i`-th summand and read off at a summand `t` where `w_t != 0`.
///
/// Panics if `v` and `w` are empty, differ in length, or contain non-square
/// matrices of different sizes.
pub fn separating_operators(v: &[FieldMatrix], w: &[FieldMatrix]) -> Option<Vec<LinearMap>> {
    assert!(!v.is_empty() && v.len() == w.len(), "need m >= 1 pairs");
    let field = v[0].field().clone();
    let (k, k2) = v[0].shape();
    assert_eq!(k, k2, "square matrices required");
    assert!(
        v.iter()
            .chain(w)
            .all(|x| x.shape() == (k, k) && *x.field() == field),
        "all matrices must share size and field"
    );
    let block = k * k;
    let flat =
        |xs: &[FieldMatrix]| -> Vec<Fq> { xs.iter().flat_map(|x| x.data().to_vec()).collect() };
    let (vf, wf) = (flat(v), flat(w));

    let system = FieldMatrix::from_rows(&field, &[vf, wf.clone()]);
    let functional = system.solve(&[0, 1])?;

    let t = w.iter().position(|x| !x.is_zero())?;
    let target = &wf[t * block..(t + 1) * block];
    let maps = (0..v.len())
        .map(|i| {
            let f_i = &functional[i * block..(i + 1) * block];
            let mut m = FieldMatrix::zeros(&field, block, block);
            for (r, &u) in target.iter().enumerate() {
                for (s, &c) in f_i.iter().enumerate() {
                    m[(r, s)] = field.mul(u, c);
                }
            }
            LinearMap::new(k, m)
        })
        .collect();
    Some(maps)
}

/// `sum phi_i(x_i)`.
pub fn apply_system(maps: &[LinearMap], xs: &[FieldMatrix]) -> FieldMatrix {
    assert_eq!(maps.len(), xs.len());
    let k = maps[0].k;
    maps.iter()
        .zip(xs)
        .fold(FieldMatrix::zeros(xs[0].field(), k, k), |acc, (phi, x)| {
            acc.add(&phi.apply(x))
        })
}
