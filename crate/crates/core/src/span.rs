//! Subgroups of finite abelian groups `Z/m_1 x ... x Z/m_D` where every
//! `m_i` is a prime power.
//!
//! A subgroup splits into its primary parts, and the `p`-part of an element
//! is just its restriction to the coordinates of `p`-power modulus. Each part
//! is kept as an echelon basis over `Z/p^a` whose pivots are powers of `p`,
//! saturated so that `p^(a-v) * row` always lies in the span of the rows with
//! later pivots. The subgroup order is then `prod p^(a - v)` over all rows.

use num_bigint::BigUint;
use num_traits::One;

#[derive(Debug, Clone)]
struct Row {
    pivot: usize,
    valuation: u32,
    data: Vec<u32>,
}

#[derive(Debug, Clone)]
struct PrimaryPart {
    p: u32,
    exponent: u32,
    modulus: u32,
    coords: Vec<usize>,
    rows: Vec<Row>,
}

/// Additive span of a set of coordinate vectors.
#[derive(Debug, Clone)]
pub struct AdditiveSpan {
    dim: usize,
    parts: Vec<PrimaryPart>,
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    let (mut r0, mut r1) = (m as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not a unit mod {m}");
    t0.rem_euclid(m as i64) as u32
}

impl PrimaryPart {
    /// Writes `x = unit * p^v`.
    fn split(&self, x: u32) -> (u32, u32) {
        let (mut unit, mut v) = (x, 0);
        while unit % self.p == 0 {
            unit /= self.p;
            v += 1;
        }
        (v, unit % self.modulus)
    }

    fn axpy(&self, x: &mut [u32], factor: u32, row: &[u32]) {
        let m = self.modulus as u64;
        let neg = (m - factor as u64 % m) % m;
        for (a, &b) in x.iter_mut().zip(row) {
            *a = ((*a as u64 + neg * b as u64) % m) as u32;
        }
    }

    fn scale(&self, x: &[u32], factor: u32) -> Vec<u32> {
        let m = self.modulus as u64;
        x.iter()
            .map(|&a| (a as u64 * factor as u64 % m) as u32)
            .collect()
    }

    /// Reduces `x` against the rows; returns the leftover leading column if any.
    fn reduce(&self, x: &mut [u32]) -> Option<(usize, u32, u32)> {
        loop {
            let c = x.iter().position(|&e| e != 0)?;
            let (v, unit) = self.split(x[c]);
            match self.rows.binary_search_by_key(&c, |r| r.pivot) {
                Ok(idx) if v >= self.rows[idx].valuation => {
                    let shift = self.p.pow(v - self.rows[idx].valuation) as u64;
                    let factor = (unit as u64 * shift % self.modulus as u64) as u32;
                    self.axpy(x, factor, &self.rows[idx].data);
                }
                _ => return Some((c, v, unit)),
            }
        }
    }

    fn insert(&mut self, x: Vec<u32>) -> bool {
        let mut grew = false;
        let mut pending = vec![x];
        while let Some(mut x) = pending.pop() {
            let Some((c, v, unit)) = self.reduce(&mut x) else {
                continue;
            };
            let x = self.scale(&x, mod_inverse(unit, self.modulus));
            let saturation = self.scale(&x, self.p.pow(self.exponent - v));
            let row = Row {
                pivot: c,
                valuation: v,
                data: x,
            };
            match self.rows.binary_search_by_key(&c, |r| r.pivot) {
                Ok(idx) => {
                    let old = std::mem::replace(&mut self.rows[idx], row);
                    pending.push(old.data);
                }
                Err(idx) => self.rows.insert(idx, row),
            }
            pending.push(saturation);
            grew = true;
        }
        grew
    }
}

impl AdditiveSpan {
    /// The zero subgroup of `prod Z/modulus_i`; `moduli[i] = (prime, modulus)`.
    ///
    /// Panics if a modulus is not a power of its prime or if the coordinates
    /// of one prime use different moduli.
    pub fn new(moduli: &[(u32, u32)]) -> Self {
        let mut parts: Vec<PrimaryPart> = Vec::new();
        for (i, &(p, m)) in moduli.iter().enumerate() {
            let mut exponent = 0;
            let mut rest = m;
            while rest % p == 0 {
                rest /= p;
                exponent += 1;
            }
            assert!(rest == 1 && exponent >= 1, "{m} is not a power of {p}");
            match parts.iter_mut().find(|part| part.p == p) {
                Some(part) => {
                    assert_eq!(part.modulus, m, "mixed moduli for prime {p}");
                    part.coords.push(i);
                }
                None => parts.push(PrimaryPart {
                    p,
                    exponent,
                    modulus: m,
                    coords: vec![i],
                    rows: Vec::new(),
                }),
            }
        }
        AdditiveSpan {
            dim: moduli.len(),
            parts,
        }
    }

    /// Adjoins `x`; returns whether the span grew.
    pub fn insert(&mut self, x: &[u32]) -> bool {
        assert_eq!(x.len(), self.dim);
        let mut grew = false;
        for part in &mut self.parts {
            let local: Vec<u32> = part.coords.iter().map(|&i| x[i] % part.modulus).collect();
            grew |= part.insert(local);
        }
        grew
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        assert_eq!(x.len(), self.dim);
        self.parts.iter().all(|part| {
            let mut local: Vec<u32> = part.coords.iter().map(|&i| x[i] % part.modulus).collect();
            part.reduce(&mut local).is_none()
        })
    }

    /// Whether the span is the whole group.
    pub fn is_full(&self) -> bool {
        self.parts.iter().all(|part| {
            part.rows.len() == part.coords.len() && part.rows.iter().all(|r| r.valuation == 0)
        })
    }

    /// Order of the subgroup.
    pub fn size(&self) -> BigUint {
        let mut size = BigUint::one();
        for part in &self.parts {
            for row in &part.rows {
                size *= BigUint::from(part.p).pow(part.exponent - row.valuation);
            }
        }
        size
    }

    /// Basis rows as full-length vectors.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.parts
            .iter()
            .flat_map(|part| {
                part.rows.iter().map(|row| {
                    let mut full = vec![0; self.dim];
                    for (&i, &x) in part.coords.iter().zip(&row.data) {
                        full[i] = x;
                    }
                    full
                })
            })
            .collect()
    }

    /// Every element, each exactly once. Intended for small spans.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; self.dim]];
        for part in &self.parts {
            for row in &part.rows {
                let order = part.p.pow(part.exponent - row.valuation);
                let mut next = Vec::with_capacity(out.len() * order as usize);
                for base in &out {
                    for t in 0..order {
                        let mut x = base.clone();
                        for (&i, &r) in part.coords.iter().zip(&row.data) {
                            let m = part.modulus as u64;
                            x[i] = ((x[i] as u64 + t as u64 * r as u64 % m) % m) as u32;
                        }
                        next.push(x);
                    }
                }
                out = next;
            }
        }
        out
    }
}
