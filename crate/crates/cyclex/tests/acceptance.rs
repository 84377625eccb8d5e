//! End-to-end acceptance checks: frozen small cases, independent oracles,
//! exhaustive equivalences, and parameter sweeps, each with a runtime budget
//! where one is stated.

use std::sync::Arc;
use std::time::{Duration, Instant};

use cyclex::{
    bch_spec_with, census_report, cyclotomic_cosets, factor_xe_minus_1, int_factorize,
    make_field, order_any, order_bruteforce, order_bruteforce_with_limit,
    partition_identity_sides, verify_lemmas, Field, FieldElement, Polynomial, PrimePower,
    DEFAULT_ENUM_CAP, DEFAULT_MAX_CARDINALITY,
};
use cyclex::{find_irreducible_modulus, parse_poly};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn prime(p: u64) -> Arc<Field> {
    Field::prime(p).unwrap()
}

fn field_q(q: u64) -> Arc<Field> {
    make_field(PrimePower::new(q).unwrap(), 1, None).unwrap()
}

fn pass(n: u32, name: &str, started: Instant) {
    println!("acceptance {n} ({name}): PASS ({:.2}s)", started.elapsed().as_secs_f64());
}

#[test]
fn acceptance_1_small_case_regression() {
    let started = Instant::now();
    let f3 = prime(3);
    let f2 = prime(2);

    // x^4 - 1 over F_3: three simple factors, orders (2, 1, 4), and exactly
    // four codes of exponent 4
    let fac = factor_xe_minus_1(&f3, 4).unwrap();
    let shape: Vec<(String, u64, u64)> = fac
        .factors
        .iter()
        .map(|f| (f.poly.to_string(), f.multiplicity, f.order))
        .collect();
    assert_eq!(
        shape,
        vec![
            ("x + 1".into(), 1, 2),
            ("x + 2".into(), 1, 1),
            ("x^2 + 1".into(), 1, 4),
        ]
    );
    let rep = census_report(&f3, 4, true, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(rep.lower_bound_formula, 4);
    assert_eq!(rep.exact_count, Some(4));

    // x^12 - 1 over F_3: the same factors cubed; k values (6, 12, 3);
    // S = {x^2 + 1} with t = 1; bound 32
    let rep = census_report(&f3, 12, true, DEFAULT_ENUM_CAP).unwrap();
    let fac = &rep.factorization;
    assert!(fac.factors.iter().all(|f| f.multiplicity == 3));
    let orders: Vec<u64> = fac.factors.iter().map(|f| f.order).collect();
    assert_eq!(orders, vec![2, 1, 4]);
    assert_eq!(rep.k_values, vec![6, 12, 3]);
    assert_eq!(rep.s_set.len(), 1);
    assert_eq!(fac.factors[rep.s_set[0]].poly.to_string(), "x^2 + 1");
    assert_eq!(rep.t_values, vec![(rep.s_set[0], 1)]);
    assert_eq!(rep.lower_bound_formula, 32);

    // BCH exponents and generators
    let spec = cyclex::bch_spec(&f2, 4, 5, 3, None).unwrap();
    assert_eq!(spec.exponent, 15);
    assert_eq!(spec.generator.to_string(), "x^6 + x^4 + x^3 + x^2 + 1");
    assert_eq!(cyclex::bch_exponent(&f2, 4, 5, 2, None).unwrap(), 3);
    let spec = cyclex::bch_spec(&f3, 2, 1, 4, None).unwrap();
    assert_eq!(spec.exponent, 8);
    assert_eq!(spec.generator, parse_poly("(2+x+x^2)(1+x^2)", &f3).unwrap());
    let spec = cyclex::bch_spec(&f3, 2, 2, 2, None).unwrap();
    assert_eq!(spec.exponent, 4);
    assert_eq!(spec.generator, parse_poly("1+x^2", &f3).unwrap());

    // cyclotomic cosets of 3 mod 8
    let table = cyclotomic_cosets(3, 8).unwrap();
    assert_eq!(
        table.cosets(),
        &[vec![0], vec![1, 3], vec![2, 6], vec![4], vec![5, 7]]
    );

    assert!(
        started.elapsed() < Duration::from_secs(1),
        "budget exceeded: {:?}",
        started.elapsed()
    );
    pass(1, "small case regression", started);
}

#[test]
fn acceptance_2_census_against_independent_oracle() {
    let started = Instant::now();
    let f3 = prime(3);
    let f2 = prime(2);

    // oracle: multiply out every (x+1)^a (x+2)^b (x^2+1)^c with hard-coded
    // factors and measure each order by direct scan, nothing shared with the
    // census path
    let parts = [
        parse_poly("x+1", &f3).unwrap(),
        parse_poly("x+2", &f3).unwrap(),
        parse_poly("x^2+1", &f3).unwrap(),
    ];
    let mut oracle_count = 0u64;
    let mut seen = 0u64;
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            for c in 0..=3u32 {
                let g = &(&parts[0].pow(a) * &parts[1].pow(b)) * &parts[2].pow(c);
                seen += 1;
                if order_bruteforce(&g).unwrap() == 12 {
                    oracle_count += 1;
                }
            }
        }
    }
    assert_eq!(seen, 64);
    assert_eq!(oracle_count, 44);
    let rep = census_report(&f3, 12, true, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(rep.exact_count, Some(44));
    assert!(rep.distinct_generators <= 44);

    // same for x^3 - 1 over F_2: four divisors, two of order 3
    let parts = [parse_poly("x+1", &f2).unwrap(), parse_poly("x^2+x+1", &f2).unwrap()];
    let mut oracle_count = 0u64;
    for a in 0..=1u32 {
        for b in 0..=1u32 {
            let g = &parts[0].pow(a) * &parts[1].pow(b);
            if order_bruteforce(&g).unwrap() == 3 {
                oracle_count += 1;
            }
        }
    }
    assert_eq!(oracle_count, 2);
    let rep = census_report(&f2, 3, true, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(rep.exact_count, Some(2));
    assert!(rep.distinct_generators <= 2);

    pass(2, "census vs independent oracle", started);
}

#[test]
fn acceptance_3_order_oracle_equivalence() {
    let started = Instant::now();

    // exhaustive: every polynomial with nonzero constant term, degree <= 4,
    // over F_2 and F_3 (non-monic included)
    for q in [2u64, 3] {
        let field = prime(q);
        for deg in 0..=4usize {
            let mut coeffs = vec![0u64; deg + 1];
            loop {
                if coeffs[0] != 0 && coeffs[deg] != 0 {
                    let g = Polynomial::from_ints(
                        &field,
                        &coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>(),
                    );
                    let scan = order_bruteforce(&g).unwrap();
                    let structured = order_any(&g).unwrap().order;
                    assert_eq!(structured, scan, "q={q} g={g}");
                }
                // odometer over coefficient vectors
                let mut i = 0;
                loop {
                    if i > deg {
                        break;
                    }
                    coeffs[i] += 1;
                    if coeffs[i] < q {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                if i > deg {
                    break;
                }
            }
        }
    }

    // randomized: 1000 samples up to degree 8 over F_2..F_5
    let mut rng = StdRng::seed_from_u64(0x00C1C1E5);
    let fields: Vec<Arc<Field>> = [2u64, 3, 4, 5].iter().map(|&q| field_q(q)).collect();
    for _ in 0..1000 {
        let field = &fields[rng.gen_range(0..fields.len())];
        let q = field.cardinality();
        let deg = rng.gen_range(1..=8usize);
        let mut idx: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..q)).collect();
        if idx[0] == 0 {
            idx[0] = rng.gen_range(1..q); // nonzero constant term: x does not divide g
        }
        if idx[deg] == 0 {
            idx[deg] = rng.gen_range(1..q);
        }
        let coeffs: Vec<FieldElement> =
            idx.iter().map(|&i| field.element_from_index(i).unwrap()).collect();
        let g = Polynomial::from_elements(field, coeffs).unwrap();
        let scan = order_bruteforce(&g).unwrap();
        let structured = order_any(&g).unwrap().order;
        assert_eq!(structured, scan, "q={q} g={g}");
    }

    assert!(
        started.elapsed() < Duration::from_secs(30),
        "budget exceeded: {:?}",
        started.elapsed()
    );
    pass(3, "order oracle equivalence", started);
}

#[test]
fn acceptance_4_partition_identity() {
    let started = Instant::now();
    for q in [2u64, 3] {
        let field = prime(q);
        for n in 1..=24u64 {
            let (lhs, rhs) = partition_identity_sides(&field, n).unwrap();
            assert_eq!(lhs, rhs, "q={q} n={n}");
        }
    }
    assert!(
        started.elapsed() < Duration::from_secs(10),
        "budget exceeded: {:?}",
        started.elapsed()
    );
    pass(4, "partition identity", started);
}

fn primitives_up_to_two(ext: &Arc<Field>) -> Vec<FieldElement> {
    let n = ext.cardinality() - 1;
    let factors = int_factorize(n);
    let mut found = Vec::new();
    for idx in 0..ext.cardinality() {
        let x = ext.element_from_index(idx).unwrap();
        if !x.is_zero() && factors.iter().all(|&(r, _)| !x.pow(n / r).is_one()) {
            found.push(x);
            if found.len() == 2 {
                break;
            }
        }
    }
    found
}

#[test]
fn acceptance_5_bch_exponent_sweep() {
    let started = Instant::now();
    for q in [2u64, 3, 4] {
        let field = field_q(q);
        for m in 1..=4u32 {
            let n = q.pow(m) - 1;
            if n < 2 {
                continue;
            }
            let modulus = if m == 1 {
                None
            } else {
                Some(find_irreducible_modulus(&field, m).unwrap())
            };
            let ext = match &modulus {
                Some(h) => Field::extension(&field, h.clone()).unwrap(),
                None => field.clone(),
            };
            let mut prims = primitives_up_to_two(&ext);
            let beta2 = if prims.len() == 2 { prims.pop() } else { None };
            let beta1 = prims.pop().expect("a primitive element exists");
            for a in 0..n {
                for delta in 2..=8u64.min(n) {
                    let spec = bch_spec_with(
                        &field,
                        m,
                        a,
                        delta,
                        modulus.clone(),
                        Some(beta1.clone()),
                        DEFAULT_MAX_CARDINALITY,
                    )
                    .unwrap();
                    // three ways to the exponent: the lcm formula (spec),
                    // the structured order computation, and a direct scan
                    let structured = order_any(&spec.generator).unwrap().order;
                    let scanned =
                        order_bruteforce_with_limit(&spec.generator, n).unwrap();
                    assert_eq!(spec.exponent, structured, "q={q} m={m} a={a} d={delta}");
                    assert_eq!(spec.exponent, scanned, "q={q} m={m} a={a} d={delta}");
                    if delta > 2 {
                        assert_eq!(spec.exponent, n, "q={q} m={m} a={a} d={delta}");
                    }
                    // a second primitive element gives the same exponent
                    if let Some(b2) = &beta2 {
                        let other = bch_spec_with(
                            &field,
                            m,
                            a,
                            delta,
                            modulus.clone(),
                            Some(b2.clone()),
                            DEFAULT_MAX_CARDINALITY,
                        )
                        .unwrap();
                        assert_eq!(
                            spec.exponent, other.exponent,
                            "q={q} m={m} a={a} d={delta}"
                        );
                    }
                }
            }
        }
    }
    assert!(
        started.elapsed() < Duration::from_secs(60),
        "budget exceeded: {:?}",
        started.elapsed()
    );
    pass(5, "bch exponent sweep", started);
}

#[test]
fn acceptance_6_factor_lemma_sweep() {
    let started = Instant::now();
    for q in [2u64, 3, 4, 5] {
        let field = field_q(q);
        for e in 1..=30u64 {
            let rep = verify_lemmas(&field, e).unwrap();
            assert!(rep.all_pass, "q={q} e={e}: {rep:?}");
        }
    }
    pass(6, "factor and lemma sweep", started);
}
