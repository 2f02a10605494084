#![allow(dead_code)]

use std::collections::HashSet;

use incring::{BaseRing, IncMatrix, IncidenceRing, Poset};
use rand::Rng;

pub fn ring(spec: &str) -> BaseRing {
    BaseRing::parse(spec).unwrap()
}

pub fn inc(poset: Poset, spec: &str) -> IncidenceRing {
    IncidenceRing::new(poset, ring(spec))
}

/// The poset `1 < 3, 2 < 3`.
pub fn vee() -> Poset {
    Poset::from_strict_pairs(3, &[(1, 3), (2, 3)]).unwrap()
}

pub fn random_matrix(a: &IncidenceRing, rng: &mut impl Rng) -> IncMatrix {
    let coords: Vec<u32> = a
        .coordinate_moduli()
        .iter()
        .map(|&(_, modulus)| rng.random_range(0..modulus))
        .collect();
    a.from_coordinates(&coords)
}

/// Subring generated by `s`, the scalars and `I`, as an explicit set of elements.
pub fn naive_closure(a: &IncidenceRing, s: &[IncMatrix]) -> HashSet<IncMatrix> {
    let mut set: HashSet<IncMatrix> = HashSet::new();
    set.insert(a.zero());
    set.insert(a.identity());
    set.extend(s.iter().cloned());
    set.extend(a.scalar_matrices());
    loop {
        let items: Vec<IncMatrix> = set.iter().cloned().collect();
        let before = set.len();
        for x in &items {
            for y in &items {
                set.insert(a.add(x, y));
                set.insert(a.mul(x, y));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// All `m`-tuples of `elements`, as index vectors in little-endian order.
pub fn tuples(count: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = count.pow(m as u32);
    (0..total).map(move |mut idx| {
        (0..m)
            .map(|_| {
                let i = idx % count;
                idx /= count;
                i
            })
            .collect()
    })
}
