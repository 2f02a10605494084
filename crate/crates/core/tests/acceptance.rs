//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{inc, ring};
use incring::field::Field;
use incring::operators::{apply_sandwich, apply_system};
use incring::span::AdditiveSpan;
use incring::{
    check_generates, count_by_enumeration, count_gen, labeled_posets, mgen, mgen_lower_bound,
    monte_carlo, probability_closed_form, radical_data, sandwich_decompose, separating_operators,
    FieldMatrix, IncMatrix, LinearMap, Poset, ScalarField, DEFAULT_ENUMERATION_LIMIT,
};
use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {{
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    }};
}

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn enumerate(poset: &Poset, spec: &str, m: u32) -> BigUint {
    count_by_enumeration(&inc(poset.clone(), spec), m, DEFAULT_ENUMERATION_LIMIT).unwrap()
}

fn formula_vs_enumeration() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let mut cases = 0;
    pool.install(|| -> Result<(), String> {
        for n in 1..=3 {
            for poset in labeled_posets(n) {
                for m in 1..=2 {
                    let formula = count_gen(&poset, &ring("GF(2)"), m).count;
                    let enumerated = enumerate(&poset, "GF(2)", m);
                    ensure!(
                        formula == enumerated,
                        "{poset:?} m={m}: {formula} != {enumerated}"
                    );
                    cases += 1;
                }
            }
        }
        Ok(())
    })?;
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 60.0, "took {secs:.1} s");
    Ok(format!("{cases} cases agree, {secs:.1} s on one thread"))
}

fn chain2_headline() -> Outcome {
    let r = ring("GF(2)");
    let two = count_gen(&Poset::chain(2), &r, 2);
    ensure!(two.count == 24u32.into(), "m=2 count {}", two.count);
    ensure!(
        two.probability == ratio(3, 8),
        "m=2 probability {}",
        two.probability
    );
    let one = count_gen(&Poset::chain(2), &r, 1);
    ensure!(one.count.is_zero(), "m=1 count {}", one.count);
    Ok("m=2: 24, 3/8; m=1: 0".into())
}

fn matrix_base_ring() -> Outcome {
    let start = Instant::now();
    let p = Poset::chain(2);
    let spec = "M(2,GF(2))";
    let enumerated = enumerate(&p, spec, 1);
    let report = count_gen(&p, &ring(spec), 1);
    ensure!(enumerated == 3360u32.into(), "enumerated {enumerated}");
    ensure!(report.count == enumerated, "formula {}", report.count);
    let closed = probability_closed_form(&p, &ring(spec), 1);
    ensure!(closed == ratio(105, 128), "closed form {closed}");
    ensure!(
        closed == ratio(3360, 4096),
        "closed form {closed} != 3360/4096"
    );
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 300.0, "took {secs:.1} s");
    Ok(format!("3360 of 4096, 105/128, {secs:.1} s"))
}

fn radical_factor() -> Outcome {
    let anti = Poset::antichain(2);
    let formula = count_gen(&anti, &ring("Z/4"), 1).count;
    let enumerated = enumerate(&anti, "Z/4", 1);
    ensure!(
        formula == 8u32.into() && enumerated == formula,
        "formula {formula}, enumerated {enumerated}"
    );
    for poset in [Poset::chain(2), Poset::antichain(2)] {
        for m in 1..=2 {
            let base = count_gen(&poset, &ring("GF(2)"), m).probability;
            for spec in ["Z/4", "Z/8"] {
                let p = count_gen(&poset, &ring(spec), m).probability;
                ensure!(p == base, "{spec} {poset:?} m={m}: {p} != {base}");
            }
        }
    }
    Ok("count 8; Z/4, Z/8 probabilities equal GF(2)".into())
}

fn product_rings() -> Outcome {
    let anti = Poset::antichain(2);
    let spec = "GF(2)xGF(3)";
    let formula = count_gen(&anti, &ring(spec), 1).count;
    let enumerated = enumerate(&anti, spec, 1);
    ensure!(
        formula == 12u32.into() && enumerated == formula,
        "formula {formula}, enumerated {enumerated}"
    );
    let a = inc(anti, spec);
    let elements = a.elements().unwrap();
    ensure!(elements.len() == 36, "{} elements", elements.len());
    for x in &elements {
        let s = std::slice::from_ref(x);
        ensure!(
            check_generates(&a, s).unwrap().verdict == a.generates_bruteforce(s).unwrap(),
            "disagreement on {x:?}"
        );
    }
    Ok("count 12; 36 single matrices agree".into())
}

fn criterion_vs_oracle() -> Outcome {
    let mut tuples = 0u64;
    for spec in ["GF(2)", "GF(3)", "Z/4", "GF(2)xGF(3)"] {
        for n in 1..=3 {
            for poset in labeled_posets(n) {
                let a = inc(poset.clone(), spec);
                for m in 1..=2u32 {
                    if a.order().pow(m) > BigUint::from(DEFAULT_ENUMERATION_LIMIT) {
                        continue;
                    }
                    let elements = a.elements().unwrap();
                    for idx in common::tuples(elements.len(), m as usize) {
                        let s: Vec<IncMatrix> = idx.iter().map(|&i| elements[i].clone()).collect();
                        let fast = check_generates(&a, &s).unwrap().verdict;
                        ensure!(
                            fast == a.generates_bruteforce(&s).unwrap(),
                            "{spec} {poset:?}: {s:?}"
                        );
                        tuples += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{tuples} tuples, 0 disagreements"))
}

fn mgen_checks() -> Outcome {
    for (poset, expected) in [(Poset::chain(2), 2), (Poset::antichain(5), 3)] {
        let r = ring("GF(2)");
        let m = mgen(&poset, &r);
        ensure!(m == expected, "{poset:?}: mgen {m}");
        ensure!(
            enumerate(&poset, "GF(2)", m - 1).is_zero(),
            "{poset:?}: generators below mgen"
        );
        ensure!(
            !enumerate(&poset, "GF(2)", m).is_zero(),
            "{poset:?}: no generators at mgen"
        );
    }
    let mut cases = 0;
    for spec in ["GF(2)", "GF(3)", "Z/4", "GF(2)xGF(3)", "M(2,GF(2))"] {
        let r = ring(spec);
        for n in 1..=5 {
            for poset in labeled_posets(n) {
                ensure!(
                    mgen(&poset, &r) >= mgen_lower_bound(&poset, &r),
                    "{spec} {poset:?}"
                );
                cases += 1;
            }
        }
    }
    Ok(format!(
        "chain(2): 2, antichain(5): 3; lower bound holds in {cases} cases"
    ))
}

fn sandwich_reconstruction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for q in [2, 3] {
        let f = Field::new(q).unwrap();
        for trial in 0..100 {
            let data = (0..16).map(|_| rng.random_range(0..q as u32)).collect();
            let phi = LinearMap::new(2, FieldMatrix::from_vec(&f, 4, 4, data));
            let terms = sandwich_decompose(&phi);
            for s in 0..4 {
                let e = FieldMatrix::unit(&f, 2, s / 2, s % 2);
                ensure!(
                    apply_sandwich(&terms, &e) == phi.apply(&e),
                    "GF({q}) map {trial}, unit {s}"
                );
            }
        }
    }
    Ok("200 maps reconstructed on every matrix unit".into())
}

fn separating_witnesses() -> Outcome {
    let mut witnesses = 0;
    for (q, m) in [(2u64, 2usize), (3, 1)] {
        let f = Field::new(q).unwrap();
        let vectors: Vec<Vec<FieldMatrix>> = common::tuples(q as usize, m)
            .map(|idx| {
                idx.iter()
                    .map(|&x| FieldMatrix::from_vec(&f, 1, 1, vec![x as u32]))
                    .collect()
            })
            .collect();
        for v in &vectors {
            for w in &vectors {
                let proportional = f
                    .elements()
                    .any(|l| v.iter().zip(w).all(|(x, y)| x.scale(l) == *y));
                match separating_operators(v, w) {
                    Some(maps) => {
                        ensure!(!proportional, "witness for proportional {v:?} {w:?}");
                        ensure!(apply_system(&maps, v).is_zero(), "sum phi_i(v_i) != 0");
                        ensure!(!apply_system(&maps, w).is_zero(), "sum phi_i(w_i) = 0");
                        witnesses += 1;
                    }
                    None => ensure!(proportional, "no witness for {v:?} {w:?}"),
                }
            }
        }
    }
    Ok(format!("{witnesses} witnesses, all verified"))
}

fn radical_of_chain2_z4() -> Outcome {
    let a = inc(Poset::chain(2), "Z/4");
    let data = radical_data(&a);
    ensure!(data.size == 16u32.into(), "size {}", data.size);
    let mut span = AdditiveSpan::new(&a.coordinate_moduli());
    for b in &data.basis {
        span.insert(&a.coordinates(b));
    }
    let members: Vec<IncMatrix> = span
        .elements()
        .iter()
        .map(|c| a.from_coordinates(c))
        .collect();
    ensure!(members.len() == 16, "span has {} elements", members.len());
    let elements = a.elements().unwrap();
    let one = a.identity();
    for x in &members {
        for y in &elements {
            ensure!(
                span.contains(&a.coordinates(&a.mul(x, y))),
                "x*y left the radical"
            );
            ensure!(
                span.contains(&a.coordinates(&a.mul(y, x))),
                "y*x left the radical"
            );
        }
        let u = a.sub(&one, x);
        ensure!(
            elements
                .iter()
                .any(|y| a.mul(&u, y) == one && a.mul(y, &u) == one),
            "1 - x not invertible for {x:?}"
        );
    }
    Ok("16 elements, two-sided ideal, 1 - x invertible".into())
}

fn monte_carlo_checks() -> Outcome {
    let start = Instant::now();
    let mut margins = Vec::new();
    for field in [ScalarField::Real, ScalarField::Complex] {
        let r = monte_carlo(&Poset::chain(3), field, 2, 10_000, 42, 1e-9);
        ensure!(
            r.fraction == Ratio::new(1, 1),
            "{field:?}: fraction {}",
            r.fraction
        );
        let margin = r.min_margin.unwrap_or(0.0);
        ensure!(margin > 1e-6, "{field:?}: min margin {margin:e}");
        margins.push(format!("{margin:.2e}"));
        let single = monte_carlo(&Poset::chain(2), field, 1, 100, 42, 1e-9);
        ensure!(
            single.passes == 0,
            "{field:?}: m=1 passes {}",
            single.passes
        );
    }
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 30.0, "took {secs:.1} s");
    Ok(format!(
        "fraction 1, min margins {}; m=1 fraction 0; {secs:.1} s",
        margins.join(" / ")
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (
            "formula equals enumeration over GF(2), n <= 3, m <= 2",
            formula_vs_enumeration,
        ),
        ("chain(2)/GF(2) headline counts", chain2_headline),
        ("chain(2)/M_2(GF(2)), m = 1", matrix_base_ring),
        ("radical factor and radical independence", radical_factor),
        ("product ring GF(2)xGF(3)", product_rings),
        (
            "criterion agrees with closure oracle on the grid",
            criterion_vs_oracle,
        ),
        ("mgen values and lower bound", mgen_checks),
        (
            "sandwich decomposition reconstruction",
            sandwich_reconstruction,
        ),
        ("separating operator witnesses", separating_witnesses),
        ("radical of chain(2)/Z/4", radical_of_chain2_z4),
        ("Monte Carlo over R and C", monte_carlo_checks),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail})", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({detail})", idx + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
