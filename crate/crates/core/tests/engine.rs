use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use proptest::prelude::*;

use zchelp::arith::divisors;
use zchelp::chartab::fixtures;
use zchelp::engine::{
    allowed_classes, build_system, check_bovdi, coeff_a, coeff_b, congruence_rows, enumerate_admissible, multiplicity,
    verify_group, Enumerator, OrderStatus, PartialAugmentationTuple, Report, SystemBuilder, Tower, VerifyOptions,
};
use zchelp::psl2::{build, Psl2Parameters};
use zchelp::solver::{solve, variable_bounds, VariableBox};
use zchelp::{CharacterKind, CharacterTable, Error};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn psl2(q: u64) -> CharacterTable {
    let par = Psl2Parameters::from_q(q).unwrap();
    build(&par, par.f == 1).unwrap()
}

fn class(t: &CharacterTable, id: &str) -> usize {
    t.class_index(id).unwrap()
}

/// Tower of order 4 over S5 with `u^2 = 2a` and the given top.
fn s5_tower_4(t: &CharacterTable, top: &[(&str, i64)]) -> Tower {
    let classes: Vec<usize> = top.iter().map(|(id, _)| class(t, id)).collect();
    let values: Vec<i64> = top.iter().map(|&(_, e)| e).collect();
    let mut tuples = BTreeMap::new();
    tuples.insert(2, PartialAugmentationTuple::basis(t, class(t, "2a")));
    tuples.insert(
        4,
        PartialAugmentationTuple::from_assignment(4, t.classes.len(), &classes, &values),
    );
    Tower::new(4, tuples).unwrap()
}

#[test]
fn coefficient_examples() {
    let t = fixtures::s5();
    let ord = CharacterKind::Ordinary;
    let trivial = t.character("1a", ord).unwrap();
    let sign = t.character("1b", ord).unwrap();
    assert_eq!(coeff_b(&t, trivial, class(&t, "2a"), 2, 0).unwrap(), q(1, 2));
    assert_eq!(coeff_b(&t, sign, class(&t, "2b"), 2, 1).unwrap(), q(1, 2));
    assert_eq!(coeff_b(&t, sign, class(&t, "2b"), 2, 0).unwrap(), q(-1, 2));

    let standard = t.character("4a", ord).unwrap();
    let four = Tower::group_element(&t, class(&t, "4a")).unwrap();
    let mus: Vec<BigRational> = (0..4).map(|s| multiplicity(&t, standard, &four, s).unwrap()).collect();
    // a 4-cycle on the standard module has eigenvalues 1, i, -1, -i
    assert_eq!(mus, vec![q(1, 1); 4]);
}

#[test]
fn brauer_characters_refuse_singular_orders() {
    let t = psl2(7);
    let phi = t.character("phi3", CharacterKind::Brauer { prime: 7 }).unwrap();
    let seven = Tower::group_element(&t, class(&t, "pc")).unwrap();
    assert!(matches!(
        coeff_a(&t, phi, &seven, 0),
        Err(Error::PrimeDividesOrder { prime: 7, order: 7 })
    ));
}

#[test]
fn multiplicity_matches_trace_oracle_on_psl2_7() {
    let t = psl2(7);
    let four = (0..t.classes.len()).find(|&x| t.element_order(x) == 4).unwrap();
    let tower = Tower::group_element(&t, four).unwrap();
    for psi in &t.ordinary {
        let value = psi.value(four).unwrap();
        for s in 0..4 {
            let b = coeff_b(&t, psi, four, 4, s).unwrap();
            let direct = zchelp::oracle::trace_over_bruteforce(&value.mul_root(4, -(s as i64)), 4).unwrap() / q(4, 1);
            assert_eq!(b, direct);
            let mu = multiplicity(&t, psi, &tower, s).unwrap();
            assert!(mu.is_integer() && mu >= q(0, 1));
        }
    }
}

#[test]
fn empty_and_trivial_orders_of_s5() {
    let t = fixtures::s5();
    let five = enumerate_admissible(&t, 5, true).unwrap();
    assert_eq!(five, vec![Tower::group_element(&t, class(&t, "5a")).unwrap()]);
    assert!(five[0].is_trivial());
    assert!(enumerate_admissible(&t, 60, true).unwrap().is_empty());
    assert!(enumerate_admissible(&t, 8, true).unwrap().is_empty());
    assert!(matches!(
        enumerate_admissible(&t, 1, true),
        Err(Error::InvalidOrder { .. })
    ));
}

#[test]
fn group_elements_are_always_admissible() {
    for t in [fixtures::s5(), psl2(7), psl2(9), psl2(11)] {
        let mut e = Enumerator::new(&t, true, false);
        for x in 0..t.classes.len() {
            let n = t.element_order(x);
            if n == 1 {
                continue;
            }
            let g = Tower::group_element(&t, x).unwrap();
            assert!(e.admissible(n).unwrap().contains(&g), "{} {}", t.name, t.class_id(x));
            let brauer: BTreeSet<u64> = zchelp::engine::usable_brauer_primes(&t, n);
            let system = build_system(&t, &g, &brauer).unwrap();
            let point: Vec<i64> = system.variables.iter().map(|&y| g.top().entry(y)).collect();
            assert!(system.is_satisfied(&point));
        }
    }
}

#[test]
fn allowed_classes_of_s5() {
    let t = fixtures::s5();
    let ids = |n| -> Vec<String> {
        allowed_classes(&t, n)
            .iter()
            .map(|&x| t.class_id(x).to_string())
            .collect()
    };
    assert_eq!(ids(2), ["2a", "2b"]);
    assert_eq!(ids(4), ["2a", "2b", "4a"]);
    assert_eq!(ids(6), ["2a", "3a", "2b", "6a"]);
    assert_eq!(ids(5), ["5a"]);
}

#[test]
fn congruence_rows_by_level() {
    let t = fixtures::s5();
    assert!(congruence_rows(&t, 2, &allowed_classes(&t, 2)).is_empty());

    let four = congruence_rows(&t, 4, &allowed_classes(&t, 4));
    assert_eq!(four.len(), 1);
    assert_eq!(four[0].coeffs, [1, 1, 0]);
    assert_eq!(four[0].modulus, Some(2));

    let six = congruence_rows(&t, 6, &allowed_classes(&t, 6));
    let mut got: Vec<(Vec<i64>, Option<i64>)> = six.iter().map(|r| (r.coeffs.clone(), r.modulus)).collect();
    got.sort();
    assert_eq!(got, vec![(vec![0, 1, 0, 0], Some(3)), (vec![1, 0, 1, 0], Some(2))]);
}

#[test]
fn rows_are_stable_under_galois_twists() {
    for t in [psl2(7), psl2(11), psl2(13)] {
        let mut twisted = t.clone();
        let units: Vec<u64> = zchelp::arith::units_mod(t.exponent);
        let k = units[units.len() / 2] as i64;
        twisted.ordinary = t.ordinary.iter().rev().map(|c| c.galois_twist(k).unwrap()).collect();
        for n in divisors(t.exponent).into_iter().skip(1) {
            for g in enumerate_admissible(&t, n, false).unwrap() {
                let lower: BTreeMap<u64, PartialAugmentationTuple> = g
                    .tuples()
                    .iter()
                    .filter(|(&m, _)| m != n)
                    .map(|(&m, x)| (m, x.clone()))
                    .collect();
                let variables = allowed_classes(&t, n);
                let mut a = SystemBuilder::new(&t);
                let mut b = SystemBuilder::new(&twisted);
                a.prepare(n).unwrap();
                b.prepare(n).unwrap();
                let none = BTreeSet::new();
                let ra = a.build(n, &lower, &variables, &none).unwrap().row_set();
                let rb = b.build(n, &lower, &variables, &none).unwrap().row_set();
                assert_eq!(ra, rb, "{} n = {n}", t.name);
            }
        }
    }
}

#[test]
fn bovdi_violation_is_reported() {
    let t = fixtures::s5();
    let bad = s5_tower_4(&t, &[("2a", 1), ("4a", 0)]);
    let report = check_bovdi(&t, &[bad]).unwrap();
    assert_eq!(report.violations.len(), 1);
    let v = &report.violations[0];
    assert_eq!((v.order, v.power_order, v.level, v.sum), (4, 4, 2, 1));

    let good = s5_tower_4(&t, &[("4a", 1)]);
    assert!(check_bovdi(&t, &[good]).unwrap().violations.is_empty());
    assert!(check_bovdi(&t, &[Tower::group_element(&t, class(&t, "6a")).unwrap()]).is_err());
}

#[test]
fn psl2_7_order_four_passes_bovdi() {
    let t = psl2(7);
    let towers = enumerate_admissible(&t, 4, true).unwrap();
    assert!(!towers.is_empty());
    let report = check_bovdi(&t, &towers).unwrap();
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert!(report.checked > 0);
}

#[test]
fn parallel_and_sequential_agree() {
    for t in [fixtures::s5(), psl2(7), psl2(11)] {
        let mut seq = Enumerator::new(&t, true, false);
        let mut par = Enumerator::new(&t, true, true);
        for n in divisors(t.exponent).into_iter().skip(1) {
            assert_eq!(
                seq.admissible(n).unwrap(),
                par.admissible(n).unwrap(),
                "{} n = {n}",
                t.name
            );
        }
    }
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let t = psl2(7);
    let a = verify_group(&t, &VerifyOptions::default()).unwrap();
    let b = verify_group(
        &t,
        &VerifyOptions {
            parallel: false,
            ..VerifyOptions::default()
        },
    )
    .unwrap();
    assert_eq!(a, b);
    assert!(a.is_verified());
    let json = serde_json::to_string(&a).unwrap();
    let back: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(a, back);
    assert!(json.contains("\"trivial_only\""));
}

#[test]
fn partial_scans_are_undecided() {
    let t = fixtures::s5();
    let options = VerifyOptions {
        orders: Some(vec![2, 3]),
        ..VerifyOptions::default()
    };
    let report = verify_group(&t, &options).unwrap();
    assert_eq!(report.verdict, zchelp::engine::UNDECIDED);
    assert_eq!(report.order(2).unwrap().status, OrderStatus::TrivialOnly);
    let bad = VerifyOptions {
        orders: Some(vec![7]),
        ..VerifyOptions::default()
    };
    assert!(matches!(
        verify_group(&t, &bad),
        Err(Error::InvalidOrder { order: 7, .. })
    ));
}

#[test]
fn wrong_power_map_makes_the_verdict_inconsistent() {
    // 4a^2 = 2b is not realised by any unit
    let text = {
        let mut v: serde_json::Value = serde_json::from_str(fixtures::S5_JSON).unwrap();
        v["power_maps"]["2"]["4a"] = serde_json::json!("2b");
        v.to_string()
    };
    let t = zchelp::chartab::parse_table(&text).unwrap();
    let options = VerifyOptions {
        orders: Some(vec![2, 4]),
        ..VerifyOptions::default()
    };
    assert_eq!(
        verify_group(&t, &options).unwrap().verdict,
        zchelp::engine::INCONSISTENT
    );
}

#[test]
fn class_size_box_loses_nothing() {
    let t = fixtures::s5();
    let mut e = Enumerator::new(&t, true, false);
    for n in [2, 3, 4, 5, 6] {
        let variables = allowed_classes(&t, n);
        let towers: Vec<Tower> = if n == 6 {
            // u^3 = 2b, u^2 = 3a
            let mut lower = BTreeMap::new();
            lower.insert(2, PartialAugmentationTuple::basis(&t, class(&t, "2b")));
            lower.insert(3, PartialAugmentationTuple::basis(&t, class(&t, "3a")));
            vec![Tower::new(6, {
                let mut all = lower.clone();
                all.insert(6, PartialAugmentationTuple::basis(&t, class(&t, "6a")));
                all
            })
            .unwrap()]
        } else {
            e.admissible(n).unwrap().to_vec()
        };
        for g in towers {
            let lower: BTreeMap<u64, PartialAugmentationTuple> = g
                .tuples()
                .iter()
                .filter(|(&m, _)| m != n)
                .map(|(&m, x)| (m, x.clone()))
                .collect();
            let system = e.system(n, &lower, &variables).unwrap();
            let tight = variable_bounds(&t, &system);
            let wide = VariableBox::new(
                tight.lower.iter().map(|l| 3 * l).collect(),
                tight.upper.iter().map(|u| 3 * u).collect(),
            );
            assert_eq!(solve(&system, &tight), solve(&system, &wide), "n = {n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coeff_a_at_prime_order_is_degree_over_n(which in 0usize..7, n in prop::sample::select(vec![2u64, 3, 5]), s in 0u64..5) {
        let t = fixtures::s5();
        let psi = &t.ordinary[which];
        let x = allowed_classes(&t, n)[0];
        let tower = Tower::group_element(&t, x).unwrap();
        prop_assert_eq!(coeff_a(&t, psi, &tower, s % n).unwrap(), q(psi.degree() as i64, n as i64));
    }

    #[test]
    fn multiplicities_sum_to_the_degree(which in 0usize..7, e2a in -6i64..=6, e2b in -6i64..=6) {
        let t = fixtures::s5();
        let psi = &t.ordinary[which];
        let tower = s5_tower_4(&t, &[("2a", e2a), ("2b", e2b), ("4a", 1 - e2a - e2b)]);
        let total: BigRational = (0..4).map(|s| multiplicity(&t, psi, &tower, s).unwrap()).sum();
        prop_assert_eq!(total, q(psi.degree() as i64, 1));
    }

    #[test]
    fn rows_agree_with_the_rational_formula(which in 0usize..7, e2a in -4i64..=4, e2b in -4i64..=4) {
        let t = fixtures::s5();
        let psi = &t.ordinary[which];
        let tower = s5_tower_4(&t, &[("2a", e2a), ("2b", e2b), ("4a", 1 - e2a - e2b)]);
        let system = build_system(&t, &tower, &BTreeSet::new()).unwrap();
        let point: Vec<i64> = system.variables.iter().map(|&x| tower.top().entry(x)).collect();
        for row in &system.rows {
            if let zchelp::engine::RowKind::Multiplicity { character, residue, .. } = &row.kind {
                if *character == psi.name {
                    let mu = multiplicity(&t, psi, &tower, *residue).unwrap() * q(4, 1);
                    prop_assert_eq!(q(row.value(&point) as i64, 1), mu);
                }
            }
        }
    }
}
