use std::collections::BTreeMap;

use fermionic_characters::model;
use fermionic_characters::quasiparticle::*;
use fermionic_characters::rational::{int, rat, Rational};
use fermionic_characters::{LatticeVector, ModelParams};
use proptest::prelude::*;

fn params(l: usize, k: usize, trunc: i64) -> ModelParams {
    ModelParams::new(l, k, int(trunc)).unwrap()
}

fn monomial(charges: Vec<Vec<u32>>, modes: Vec<Vec<Rational>>) -> QPMonomial {
    QPMonomial::new(ChargeType::new(charges).unwrap(), modes).unwrap()
}

fn collect_bw(p: &ModelParams, cap: usize, bound: &Rational) -> Vec<QPMonomial> {
    let mut out = Vec::new();
    enumerate_bw(p, cap, bound, |m| out.push(m.clone()));
    out
}

fn partition() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=6, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

#[test]
fn transpose_examples() {
    assert_eq!(partition_transpose(&[3, 1]), vec![2, 1, 1]);
    assert_eq!(partition_transpose(&[2, 2, 1]), vec![3, 2]);
    assert_eq!(partition_transpose(&[]), Vec::<u32>::new());
}

#[test]
fn condition_examples() {
    let single = |m| monomial(vec![vec![1]], vec![vec![m]]);
    assert!(check_conditions(&single(rat(-1, 4)), EnergyOrdering::EqualChargeRuns).holds());
    let bad = check_conditions(&single(rat(-1, 2)), EnergyOrdering::EqualChargeRuns);
    assert!(!bad.holds());
    assert!(!bad.congruence.is_empty());
    let pair = |a, b| monomial(vec![vec![1, 1]], vec![vec![a, b]]);
    assert!(check_conditions(&pair(rat(-1, 4), rat(-3, 4)), EnergyOrdering::EqualChargeRuns).holds());
    assert!(!check_conditions(&pair(rat(-1, 4), rat(-1, 2)), EnergyOrdering::EqualChargeRuns).holds());
}

#[test]
fn mode_support_by_colour() {
    let p = params(3, 2, 3);
    let half = rat(1, 2);
    for m in collect_bw(&p, 2, &p.trunc) {
        for (i, (charges, modes)) in m.charge.colors.iter().zip(&m.energy).enumerate() {
            for (n, mode) in charges.iter().zip(modes) {
                if *n != 1 {
                    continue;
                }
                let shifted = if i + 1 == 3 { mode - rat(1, 4) } else { mode.clone() };
                assert!((shifted / &half).is_integer(), "colour {} mode {mode}", i + 1);
            }
        }
    }
}

#[test]
fn small_enumerations() {
    let p = params(1, 1, 2);
    let low = collect_bw(&p, 1, &rat(1, 4));
    assert_eq!(low.len(), 2);
    assert!(low.contains(&QPMonomial::empty(1)));
    assert!(low.contains(&monomial(vec![vec![1]], vec![vec![rat(-1, 4)]])));
    let all = collect_bw(&p, 1, &int(2));
    assert!(all.iter().all(|m| m.charge.max_charge() <= 1));
    let pairs: Vec<&QPMonomial> = all.iter().filter(|m| m.particle_count() == 2 && m.energy() == int(2)).collect();
    assert_eq!(pairs.len(), 2);
}

#[test]
fn enumerated_monomials_satisfy_the_conditions() {
    for (l, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)] {
        let p = params(l, k, 3);
        for m in collect_bw(&p, k, &p.trunc) {
            assert!(check_conditions(&m, EnergyOrdering::EqualChargeRuns).holds(), "{m:?}");
            assert!(m.energy() <= p.trunc);
        }
    }
}

#[test]
fn min_energy_examples() {
    let profile = |counts: Vec<Vec<u32>>| ChargeProfile::new(counts);
    assert_eq!(min_energy(&profile(vec![vec![1]])), rat(1, 4));
    assert_eq!(min_energy(&profile(vec![vec![2]])), int(1));
    assert_eq!(min_energy(&profile(vec![vec![1], vec![0]])), rat(1, 2));
}

#[test]
fn min_energy_is_the_enumerated_minimum() {
    for (l, k) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let p = params(l, k, 3);
        let mut minima: BTreeMap<ChargeProfile, Rational> = BTreeMap::new();
        for m in collect_bw(&p, k, &p.trunc) {
            let e = minima.entry(m.charge.profile(k)).or_insert_with(|| m.energy());
            if m.energy() < *e {
                *e = m.energy();
            }
        }
        for (profile, low) in &minima {
            assert_eq!(&min_energy(profile), low, "l={l} k={k} {profile:?}");
        }
        let count = minima.len();
        let mut expected = 0;
        let caps = vec![k; l];
        let mut counts = vec![vec![0u32; k]; l];
        fn walk(i: usize, s: usize, counts: &mut Vec<Vec<u32>>, caps: &[usize], expected: &mut usize) {
            if i == counts.len() {
                if min_energy(&ChargeProfile::new(counts.clone())) <= int(3) {
                    *expected += 1;
                }
                return;
            }
            if s == caps[i] {
                walk(i + 1, 0, counts, caps, expected);
                return;
            }
            for n in 0..=8 {
                counts[i][s] = n;
                walk(i, s + 1, counts, caps, expected);
            }
            counts[i][s] = 0;
        }
        walk(0, 0, &mut counts, &caps, &mut expected);
        assert_eq!(count, expected, "l={l} k={k}");
    }
}

#[test]
fn whole_colour_ordering_loses_monomials() {
    let b = monomial(vec![vec![2, 1]], vec![vec![int(-1), rat(-3, 4)]]);
    assert!(check_conditions(&b, EnergyOrdering::EqualChargeRuns).holds());
    assert!(!check_conditions(&b, EnergyOrdering::WholeColor).holds());
}

#[test]
fn parafermionic_energy_examples() {
    assert_eq!(parafermion_energy(&QPMonomial::empty(2), 3), int(0));
    let b = monomial(vec![vec![1]], vec![vec![rat(-1, 4)]]);
    assert_eq!(parafermion_energy(&b, 2), rat(1, 8));
    let p = params(2, 3, 3);
    let mut seen = 0;
    enumerate_bw_parafermionic(&p, &p.trunc, |m| {
        seen += 1;
        assert!(m.charge.max_charge() <= 2);
        assert!(parafermion_energy(m, 3) >= int(0));
        let c = model::FoldedVector::from_integers(&m.charge.color_type());
        let shift = model::folded_inner(&c, &c).unwrap() / int(6);
        assert_eq!(m.energy() - parafermion_energy(m, 3), shift);
    });
    assert!(seen > 1);
}

#[test]
fn heisenberg_enumeration() {
    let mut low = Vec::new();
    enumerate_bh(1, &rat(1, 2), |h| low.push(h.clone()));
    assert_eq!(low.len(), 2);
    let mut one = Vec::new();
    enumerate_bh(1, &int(1), |h| one.push(h.clone()));
    assert_eq!(one.len(), 4);
    let mut at_two = 0;
    enumerate_bh(1, &int(2), |h| {
        h.validate().unwrap();
        if heisenberg_energy(h) == int(2) {
            at_two += 1;
        }
    });
    assert_eq!(at_two, 5);
}

#[test]
fn standard_degree_examples() {
    let p = params(1, 1, 4);
    let element = |mu: Vec<i64>| StandardBasisElement {
        mu: LatticeVector::new(mu).unwrap(),
        h: HeisenbergMonomial::empty(1),
        b: QPMonomial::empty(1),
    };
    let degree = |mu| standard_degree(&element(mu), &p, STANDARD_CROSS_TERM).unwrap();
    assert_eq!(degree(vec![0, 0]), (int(0), vec![0]));
    assert_eq!(degree(vec![1, 0]), (rat(1, 4), vec![1]));
    assert_eq!(degree(vec![-1, 0]), (rat(1, 4), vec![-1]));
    assert!(standard_degree(&element(vec![0, 1]), &p, STANDARD_CROSS_TERM).is_err());
}

#[test]
fn cross_term_sign_is_visible_at_level_two() {
    let b = monomial(vec![vec![1, 1]], vec![vec![rat(-1, 4), rat(-3, 4)]]);
    let (plus, y) = standard_degree_parts(&[-1], &int(0), &b, 2, CrossTermSign::Plus);
    let (minus, _) = standard_degree_parts(&[-1], &int(0), &b, 2, CrossTermSign::Minus);
    assert_eq!(y, vec![0]);
    assert_eq!(plus, rat(1, 2));
    assert_eq!(minus, rat(5, 2));
}

#[test]
fn monomial_order() {
    let one = |m| monomial(vec![vec![1]], vec![vec![m]]);
    assert_eq!(compare_monomials(&one(rat(-3, 4)), &one(rat(-1, 4))), std::cmp::Ordering::Less);
    let a = one(rat(-1, 4));
    assert_eq!(compare_monomials(&a, &a), std::cmp::Ordering::Equal);
    let two = monomial(vec![vec![2]], vec![vec![rat(-1, 2)]]);
    let by_charge = compare_monomials(&a, &two);
    assert_ne!(by_charge, std::cmp::Ordering::Equal);
    let far = monomial(vec![vec![1]], vec![vec![rat(-9, 4)]]);
    assert_eq!(compare_monomials(&far, &two), compare_monomials(&a, &two));
}

proptest! {
    #[test]
    fn transpose_is_an_involution(parts in partition()) {
        prop_assert_eq!(partition_transpose(&partition_transpose(&parts)), parts);
    }

    #[test]
    fn colour_identity(colors in prop::collection::vec(partition(), 1..4)) {
        let charge = ChargeType::new(colors.clone()).unwrap();
        let dual = transpose(&charge);
        prop_assert_eq!(dual.charge_type(), charge.clone());
        let cap = charge.max_charge().max(1) as usize;
        let profile = ChargeProfile::from_dual(&dual, cap);
        prop_assert_eq!(&profile, &charge.profile(cap));
        prop_assert_eq!(profile.charge_type(), charge.clone());
        for (i, parts) in colors.iter().enumerate() {
            let total: i64 = parts.iter().map(|&n| n as i64).sum();
            let dual_total: i64 = dual.colors[i].iter().map(|&r| r as i64).sum();
            prop_assert_eq!(charge.color_type()[i], total);
            prop_assert_eq!(profile.color_type()[i], total);
            prop_assert_eq!(dual_total, total);
        }
    }
}
