//! Finite fields GF(p^e).
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` where
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` is the polynomial representative modulo
//! the field's defining polynomial. The defining polynomial is the monic
//! irreducible of degree `e` with the smallest such encoding, so the model of
//! GF(q) is fixed and serialized elements are portable.

use std::fmt;
use std::sync::Arc;

use crate::ring::RingError;

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 97;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 4;
/// Fields up to this size get full multiplication and inversion tables.
const TABLE_LIMIT: u32 = 256;

/// Encoded field element.
pub type Fq = u32;

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    /// Monic defining polynomial, low degree first, length `e + 1`.
    modulus: Vec<u32>,
    mul_table: Option<Vec<Fq>>,
    inv_table: Option<Vec<Fq>>,
}

/// The finite field GF(p^e) with its fixed defining polynomial.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl Field {
    /// GF(q) for a prime power `q = p^e` with `p <= 97`, `e <= 4`.
    pub fn new(q: u64) -> Result<Self, RingError> {
        let (p, e) = prime_power(q).ok_or(RingError::NotPrimePower(q))?;
        Self::with_degree(p, e)
    }

    pub fn with_degree(p: u32, e: u32) -> Result<Self, RingError> {
        if !is_prime(p as u64) {
            return Err(RingError::NotPrimePower(p as u64));
        }
        if p > MAX_PRIME || e == 0 || e > MAX_DEGREE {
            return Err(RingError::Unsupported(format!(
                "GF({p}^{e}) outside p <= {MAX_PRIME}, 1 <= e <= {MAX_DEGREE}"
            )));
        }
        let modulus = least_irreducible(p, e);
        let q = p.pow(e);
        let mut spec = FieldSpec {
            p,
            e,
            q,
            modulus,
            mul_table: None,
            inv_table: None,
        };
        if e > 1 && q <= TABLE_LIMIT {
            let mut mul = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    mul[(a * q + b) as usize] = poly_mul_mod(&spec, a, b);
                }
            }
            let mut inv = vec![0; q as usize];
            for a in 1..q {
                inv[a as usize] = (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap();
            }
            spec.mul_table = Some(mul);
            spec.inv_table = Some(inv);
        }
        Ok(Field(Arc::new(spec)))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Defining polynomial, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn contains(&self, a: Fq) -> bool {
        a < self.0.q
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Option<Fq> {
        if coeffs.len() > self.0.e as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return None;
        }
        Some(coeffs.iter().rev().fold(0, |acc, &c| acc * self.0.p + c))
    }

    /// Coefficients low degree first, always of length `e`.
    pub fn coeffs(&self, mut a: Fq) -> Vec<u32> {
        let p = self.0.p;
        (0..self.0.e)
            .map(|_| {
                let c = a % p;
                a /= p;
                c
            })
            .collect()
    }

    /// Embeds an integer via the prime subfield.
    pub fn from_int(&self, n: i64) -> Fq {
        n.rem_euclid(self.0.p as i64) as Fq
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let p = self.0.p;
        if self.0.e == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.0.e {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.0.p;
        if self.0.e == 1 {
            return (p - a) % p;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.0.e {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if self.0.e == 1 {
            return ((a as u64 * b as u64) % self.0.p as u64) as Fq;
        }
        match &self.0.mul_table {
            Some(t) => t[(a * self.0.q + b) as usize],
            None => poly_mul_mod(&self.0, a, b),
        }
    }

    pub fn pow(&self, mut a: Fq, mut exp: u64) -> Fq {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a == 0 {
            return None;
        }
        match &self.0.inv_table {
            Some(t) => Some(t[a as usize]),
            None => Some(self.pow(a, self.0.q as u64 - 2)),
        }
    }

    /// Additive generators over the prime field: `1, x, ..., x^{e-1}`.
    pub fn prime_basis(&self) -> Vec<Fq> {
        (0..self.0.e).map(|i| self.0.p.pow(i)).collect()
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.0.q
    }
}

fn poly_mul_mod(spec: &FieldSpec, a: Fq, b: Fq) -> Fq {
    let p = spec.p as u64;
    let e = spec.e as usize;
    let digits = |mut x: u32| {
        let mut d = [0u64; MAX_DEGREE as usize];
        for slot in d.iter_mut().take(e) {
            *slot = (x % spec.p) as u64;
            x /= spec.p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = [0u64; 2 * MAX_DEGREE as usize];
    for i in 0..e {
        for j in 0..e {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for deg in (e..2 * e - 1).rev() {
        let lead = prod[deg];
        if lead == 0 {
            continue;
        }
        // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
        for (i, &m) in spec.modulus[..e].iter().enumerate() {
            let t = deg - e + i;
            prod[t] = (prod[t] + (p - lead) * m as u64) % p;
        }
        prod[deg] = 0;
    }
    prod[..e]
        .iter()
        .rev()
        .fold(0u32, |acc, &c| acc * spec.p + c as u32)
}

/// Does the monic polynomial `f` (low degree first) have a monic factor of degree `d`?
fn has_factor_of_degree(f: &[u32], d: usize, p: u32) -> bool {
    let count = (p as u64).pow(d as u32);
    (0..count).any(|code| {
        let mut g = vec![0u32; d + 1];
        let mut c = code;
        for slot in g.iter_mut().take(d) {
            *slot = (c % p as u64) as u32;
            c /= p as u64;
        }
        g[d] = 1;
        poly_rem_is_zero(f, &g, p)
    })
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    for top in (dg..r.len()).rev() {
        let lead = r[top];
        if lead == 0 {
            continue;
        }
        for (i, &gc) in g.iter().enumerate() {
            let t = top - dg + i;
            r[t] = (r[t] + (p - lead) * gc as u64 % p) % p;
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}

/// Monic irreducible of degree `e` over GF(p) with the smallest coefficient encoding.
fn least_irreducible(p: u32, e: u32) -> Vec<u32> {
    let e = e as usize;
    if e == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(e as u32);
    for code in 0..count {
        let mut f = vec![0u32; e + 1];
        let mut c = code;
        for slot in f.iter_mut().take(e) {
            *slot = (c % p as u64) as u32;
            c /= p as u64;
        }
        f[e] = 1;
        if (1..=e / 2).all(|d| !has_factor_of_degree(&f, d, p)) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
