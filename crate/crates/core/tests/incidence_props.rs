mod common;

use common::{inc, vee};
use incring::{matrix_json, IncidenceRing, Poset, TupleFile};
use proptest::prelude::*;
use serde_json::json;

const SPECS: [&str; 5] = ["GF(2)", "GF(9)", "Z/8", "GF(2)xGF(3)", "M(2,GF(3))"];

fn arb_ring() -> impl Strategy<Value = IncidenceRing> {
    (0..SPECS.len(), 0..4usize).prop_map(|(r, p)| {
        let poset = match p {
            0 => Poset::chain(2),
            1 => Poset::chain(3),
            2 => vee(),
            _ => Poset::antichain(2),
        };
        inc(poset, SPECS[r])
    })
}

fn arb_coords(a: &IncidenceRing) -> impl Strategy<Value = Vec<u32>> {
    a.coordinate_moduli()
        .into_iter()
        .map(|(_, m)| 0..m)
        .collect::<Vec<_>>()
}

proptest! {
    #[test]
    fn coordinates_round_trip((a, coords) in arb_ring().prop_flat_map(|a| { let s = arb_coords(&a); (Just(a), s) })) {
        let x = a.from_coordinates(&coords);
        prop_assert!(a.contains(&x));
        prop_assert_eq!(a.coordinates(&x), coords);
    }

    #[test]
    fn tuple_files_round_trip((a, c1, c2) in arb_ring().prop_flat_map(|a| {
        let (s1, s2) = (arb_coords(&a), arb_coords(&a));
        (Just(a), s1, s2)
    })) {
        let mats = [a.from_coordinates(&c1), a.from_coordinates(&c2)];
        let text = json!({
            "poset": a.poset().to_file_string(),
            "ring": a.ring().to_string(),
            "matrices": mats.iter().map(|x| matrix_json(&a, x)).collect::<Vec<_>>(),
        })
        .to_string();
        let parsed = TupleFile::parse(&text).unwrap();
        prop_assert_eq!(parsed.matrices.as_slice(), &mats[..]);
        prop_assert_eq!(parsed.ring.poset(), a.poset());
    }

    #[test]
    fn ring_arithmetic_distributes((a, c1, c2, c3) in arb_ring().prop_flat_map(|a| {
        let (s1, s2, s3) = (arb_coords(&a), arb_coords(&a), arb_coords(&a));
        (Just(a), s1, s2, s3)
    })) {
        let (x, y, z) = (a.from_coordinates(&c1), a.from_coordinates(&c2), a.from_coordinates(&c3));
        prop_assert_eq!(a.mul(&x, &a.add(&y, &z)), a.add(&a.mul(&x, &y), &a.mul(&x, &z)));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.mul(&a.identity(), &x), x);
    }
}
