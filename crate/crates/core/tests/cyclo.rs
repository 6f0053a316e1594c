use num_rational::BigRational;
use proptest::prelude::*;

use zchelp::arith::{euler_phi, gcd, units_mod};
use zchelp::cyclo::{cyclotomic_polynomial, CyclotomicDoc};
use zchelp::oracle::{trace_bruteforce, trace_over_bruteforce};
use zchelp::CyclotomicNumber;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn cyc(n: u64, terms: &[(i64, i64, i64)]) -> CyclotomicNumber {
    CyclotomicNumber::from_terms(n, terms.iter().map(|&(a, b, e)| (q(a, b), e)))
}

prop_compose! {
    fn element(max_n: u64)(n in 1..=max_n)(
        n in Just(n),
        terms in prop::collection::vec((-6i64..=6, 1i64..=3, 0i64..60), 0..6),
    ) -> CyclotomicNumber {
        cyc(n, &terms)
    }
}

prop_compose! {
    fn same_field(max_n: u64)(n in 1..=max_n)(
        a in prop::collection::vec((-6i64..=6, 1i64..=3, 0i64..60), 0..5),
        b in prop::collection::vec((-6i64..=6, 1i64..=3, 0i64..60), 0..5),
        c in prop::collection::vec((-6i64..=6, 1i64..=3, 0i64..60), 0..5),
        n in Just(n),
    ) -> (u64, CyclotomicNumber, CyclotomicNumber, CyclotomicNumber) {
        (n, cyc(n, &a), cyc(n, &b), cyc(n, &c))
    }
}

#[test]
fn cyclotomic_polynomial_degrees() {
    for n in 1..=60 {
        assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, euler_phi(n), "n = {n}");
    }
}

#[test]
fn oracle_trace_examples() {
    assert_eq!(trace_bruteforce(&CyclotomicNumber::root_of_unity(8, 1)), q(0, 1));
    assert_eq!(trace_bruteforce(&CyclotomicNumber::root_of_unity(8, 4)), q(-4, 1));
    assert_eq!(trace_bruteforce(&CyclotomicNumber::root_of_unity(8, 0)), q(4, 1));
}

#[test]
fn sqrt_minus_seven_from_gauss_sum() {
    let a: CyclotomicNumber = [1, 2, 4].iter().map(|&k| CyclotomicNumber::root_of_unity(7, k)).sum();
    // (2a + 1)^2 = -7
    let b = &a.scale(&q(2, 1)) + &CyclotomicNumber::one();
    assert_eq!(&b * &b, CyclotomicNumber::from_integer(-7));
}

#[test]
fn trace_over_subfield_example() {
    // zeta_9^3 is a primitive cube root of unity: trace -1 over Q(zeta_3), -3 over Q(zeta_9)
    let z = CyclotomicNumber::root_of_unity(9, 3);
    assert_eq!(z.trace_over(3), q(-1, 1));
    assert_eq!(z.trace_to_q(), q(-3, 1));
    assert_eq!(trace_over_bruteforce(&z, 3).unwrap(), q(-1, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((_, a, b, c) in same_field(36)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn mixed_conductors_multiply(a in element(30), b in element(30)) {
        let l = zchelp::arith::lcm(a.conductor(), b.conductor());
        let direct = &a.embed(l).unwrap() * &b.embed(l).unwrap();
        prop_assert_eq!(&a * &b, direct);
    }

    #[test]
    fn embedding_preserves_value(a in element(20), k in 1u64..=4) {
        let b = a.embed(a.conductor() * k).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.trace_over(a.conductor()), b.trace_over(a.conductor()));
    }

    #[test]
    fn galois_is_a_homomorphism((n, a, b, _) in same_field(40), pick in 0usize..64) {
        let units = units_mod(n);
        let k = units[pick % units.len()] as i64;
        prop_assert_eq!(
            (&a * &b).galois(k).unwrap(),
            &a.galois(k).unwrap() * &b.galois(k).unwrap()
        );
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
    }

    #[test]
    fn galois_composes((n, a, _, _) in same_field(40), i in 0usize..64, j in 0usize..64) {
        let units = units_mod(n);
        let s = units[i % units.len()];
        let t = units[j % units.len()];
        let st = (s * t % n.max(1)) as i64;
        prop_assert_eq!(a.galois(s as i64).unwrap().galois(t as i64).unwrap(), a.galois(st).unwrap());
    }

    #[test]
    fn trace_matches_bruteforce(a in element(60)) {
        prop_assert_eq!(a.trace_to_q(), trace_bruteforce(&a));
    }

    #[test]
    fn subfield_traces_match_bruteforce(n in 1u64..=30, terms in prop::collection::vec((-5i64..=5, 0i64..30), 0..5), k in 1u64..=3) {
        // an element of Q(zeta_n) stored at conductor n*k
        let a = cyc(n, &terms.iter().map(|&(c, e)| (c, 1, e)).collect::<Vec<_>>()).embed(n * k).unwrap();
        prop_assert_eq!(a.trace_over(n), trace_over_bruteforce(&a, n).unwrap());
        let twisted = a.twisted_traces(n);
        for (s, t) in twisted.iter().enumerate() {
            let direct = trace_over_bruteforce(&a.mul_root(n, -(s as i64)), n).unwrap();
            prop_assert_eq!(t, &direct);
        }
    }

    #[test]
    fn prime_power_root_traces(r in prop::sample::select(vec![2u64, 3, 5, 7]), k in 1u32..=3, l in 0i64..400) {
        let n = r.pow(k);
        prop_assume!(n <= 125);
        let z = CyclotomicNumber::root_of_unity(n, l);
        let l = l.rem_euclid(n as i64) as u64;
        let want = if l == 0 {
            euler_phi(n) as i64
        } else if l.is_multiple_of(r.pow(k - 1)) {
            -(r.pow(k - 1) as i64)
        } else {
            0
        };
        prop_assert_eq!(z.trace_to_q(), q(want, 1));
    }

    #[test]
    fn conjugation_is_an_involution(a in element(40)) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        let norm = &a * &a.conj();
        prop_assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn document_round_trip(a in element(40)) {
        let doc = CyclotomicDoc::from_number(&a).unwrap();
        let json = serde_json::to_string(&doc).unwrap();
        let back: CyclotomicDoc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_number().unwrap(), a);
    }

    #[test]
    fn subfield_membership(n in 2u64..=30, d in 1u64..=30, e in 0i64..30) {
        let z = CyclotomicNumber::root_of_unity(n, e);
        let order = n / gcd(e.rem_euclid(n as i64) as u64, n);
        // Q(zeta_o) has conductor o/2 when o = 2 mod 4, and Q(zeta_d) = Q(zeta_2d) for odd d
        let conductor = if order % 4 == 2 { order / 2 } else { order };
        prop_assert_eq!(z.lies_in_subfield(d), zchelp::arith::lcm(d, 2) % conductor == 0);
    }
}
