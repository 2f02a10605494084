mod common;

use common::ring;
use incring::{BaseRing, RingElem, RingOp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_elem(r: &BaseRing, rng: &mut impl Rng) -> RingElem {
    let coords: Vec<u32> = r
        .coordinate_moduli()
        .iter()
        .map(|&(_, m)| rng.random_range(0..m))
        .collect();
    r.from_coordinates(&coords)
}

fn check_axioms(r: &BaseRing, a: &RingElem, b: &RingElem, c: &RingElem) {
    assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
    assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
    assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
    assert_eq!(r.mul(&r.add(a, b), c), r.add(&r.mul(a, c), &r.mul(b, c)));
}

#[test]
fn ring_axioms_hold_exhaustively_or_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for spec in [
        "Z/4",
        "GF(4)",
        "M(2,GF(2))",
        "Z/27",
        "GF(9)",
        "GF(2)xGF(3)",
        "M(2,GF(3))",
        "GF(16)",
    ] {
        let r = ring(spec);
        let elems = r.elements();
        if elems.len().pow(3) <= 10_000 {
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        check_axioms(&r, a, b, c);
                    }
                }
            }
        } else {
            for _ in 0..10_000 {
                let (a, b, c) = (
                    random_elem(&r, &mut rng),
                    random_elem(&r, &mut rng),
                    random_elem(&r, &mut rng),
                );
                check_axioms(&r, &a, &b, &c);
            }
        }
        let one = r.one();
        for a in elems.iter().take(500) {
            assert_eq!(r.mul(a, &one), *a);
            assert_eq!(r.mul(&one, a), *a);
            assert!(r.add(a, &r.neg(a)).is_zero());
        }
    }
}

#[test]
fn small_arithmetic_examples() {
    let z4 = ring("Z/4");
    assert_eq!(
        z4.ring_ops(&z4.from_int(3), &z4.from_int(3), RingOp::Add)
            .unwrap(),
        z4.from_int(2)
    );
    let gf4 = ring("GF(4)");
    let x = gf4.from_coordinates(&[0, 1]);
    assert_eq!(gf4.mul(&x, &x), gf4.from_coordinates(&[1, 1]));
    assert!(z4
        .ring_ops(&ring("M(2,GF(2))").one(), &z4.one(), RingOp::Mul)
        .is_err());
}

#[test]
fn projection_is_additive_and_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for spec in ["GF(3)xGF(5)", "GF(2)xM(2,GF(3))xGF(4)"] {
        let r = ring(spec);
        for _ in 0..100 {
            let a = random_elem(&r, &mut rng);
            let b = random_elem(&r, &mut rng);
            let mut parts = Vec::new();
            for i in 1..=r.num_components() {
                let c = r.component_ring(i).unwrap();
                let (pa, pb) = (
                    r.project_component(&a, i).unwrap(),
                    r.project_component(&b, i).unwrap(),
                );
                assert_eq!(
                    r.project_component(&r.add(&a, &b), i).unwrap(),
                    c.add(&pa, &pb)
                );
                assert_eq!(
                    r.project_component(&r.mul(&a, &b), i).unwrap(),
                    c.mul(&pa, &pb)
                );
                parts.push(pa);
            }
            assert_eq!(r.from_components(&parts).unwrap(), a);
        }
    }
    let r = ring("GF(3)xGF(5)");
    let x = r
        .from_components(&[ring("GF(3)").from_int(2), ring("GF(5)").from_int(1)])
        .unwrap();
    assert_eq!(
        r.project_component(&x, 1).unwrap(),
        ring("GF(3)").from_int(2)
    );
    assert!(r.project_component(&r.zero(), 2).unwrap().is_zero());
}

#[test]
fn reduction_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for spec in ["Z/8", "Z/27", "Z/25", "Z/49"] {
        let r = ring(spec);
        let f = r.radical_quotient();
        for _ in 0..100 {
            let a = random_elem(&r, &mut rng);
            let b = random_elem(&r, &mut rng);
            let red = |x: &RingElem| r.reduce_mod_radical(x).unwrap();
            assert_eq!(red(&r.add(&a, &b)), f.add(&red(&a), &red(&b)));
            assert_eq!(red(&r.mul(&a, &b)), f.mul(&red(&a), &red(&b)));
        }
    }
    let z8 = ring("Z/8");
    assert!(z8.reduce_mod_radical(&z8.from_int(6)).unwrap().is_zero());
    assert_eq!(
        z8.reduce_mod_radical(&z8.from_int(5)).unwrap(),
        ring("GF(2)").one()
    );
}

#[test]
fn order_matches_wedderburn_data() {
    for spec in ["GF(7)", "Z/81", "M(3,GF(3))", "GF(2)xGF(2)xM(2,GF(4))"] {
        let r = ring(spec);
        let semisimple: num_bigint::BigUint = r
            .wedderburn()
            .iter()
            .map(|w| num_bigint::BigUint::from(w.q).pow((w.n * w.n) as u32))
            .product();
        assert_eq!(r.order(), r.jsize() * semisimple);
    }
}
