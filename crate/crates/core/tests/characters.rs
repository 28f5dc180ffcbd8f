use fermionic_characters::characters::{self, FermionicKernel};
use fermionic_characters::oracle;
use fermionic_characters::qseries::{self, MultiSeries};
use fermionic_characters::quasiparticle::ChargeProfile;
use fermionic_characters::rational::{int, rat};
use fermionic_characters::ModelParams;
use num_bigint::BigInt;
use proptest::prelude::*;

fn params(l: usize, k: usize, trunc: i64) -> ModelParams {
    ModelParams::new(l, k, int(trunc)).unwrap()
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn nonnegative(s: &MultiSeries) -> bool {
    s.terms().all(|t| *t.c > BigInt::from(0))
}

#[test]
fn kernel_entries() {
    for k in 2..=6 {
        let d = FermionicKernel::new(k).unwrap();
        assert!(d.is_positive_definite());
        for s in 1..k {
            assert_eq!(d.entry(s, s), &rat((s * (k - s)) as i64, k as i64));
            for t in 1..k {
                assert_eq!(d.entry(s, t), d.entry(t, s));
            }
        }
    }
    assert!(FermionicKernel::new(1).unwrap().entries.is_empty());
    assert!(FermionicKernel::new(0).is_err());
}

#[test]
fn principal_examples() {
    let s = characters::char_principal(&params(1, 1, 4));
    for j in 0..=7 {
        assert_eq!(s.coefficient(&(rat(1, 4) + rat(j, 2)), &[1]), big(1));
    }
    assert_eq!(s.coefficient(&int(2), &[2]), big(2));
    let two = characters::char_principal(&params(2, 1, 2));
    let lowest = two.y_column(&[1, 0]);
    assert_eq!(lowest.first(), Some(&(rat(1, 2), big(1))));
}

#[test]
fn parafermionic_examples() {
    for l in 1..=3 {
        let p = params(l, 1, 3);
        assert_eq!(characters::char_parafermionic(&p), MultiSeries::one(l, int(3)));
    }
    let s = characters::char_parafermionic(&params(1, 2, 3));
    assert_eq!(s.y_column(&[1]).first(), Some(&(rat(1, 8), big(1))));
    let column = s.y_column(&[2]);
    assert_eq!(column.first(), Some(&(rat(1, 2), big(1))));
    let expected = qseries::pochhammer_inv(2, 1, &int(3));
    for t in expected.truncate(&rat(5, 2)).terms() {
        assert_eq!(s.coefficient(&(t.q + rat(1, 2)), &[2]), *t.c);
    }
}

#[test]
fn standard_examples() {
    let p = params(1, 1, 2);
    let s = characters::char_standard(&p);
    assert_eq!(s.coefficient(&int(2), &[0]), big(5));
    assert_eq!(s.coefficient(&int(0), &[0]), big(1));
    assert_eq!(s.coefficient(&rat(1, 4), &[1]), big(1));
    for l in 1..=2 {
        let p = params(l, 1, 3);
        let theta = qseries::theta_sum(l, &rat(1, 2), &p.trunc);
        let fock = qseries::pochhammer_inf_inv_pow(l, l, &p.trunc);
        assert_eq!(characters::char_standard(&p), fock.mul(&theta).unwrap());
    }
}

#[test]
fn characters_are_positive() {
    for (l, k) in [(1, 2), (2, 2), (1, 3)] {
        let p = params(l, k, 3);
        assert!(nonnegative(&characters::char_principal(&p)));
        assert!(nonnegative(&characters::char_parafermionic(&p)));
        assert!(nonnegative(&characters::char_standard(&p)));
    }
}

#[test]
fn principal_grows_with_level() {
    for l in 1..=2 {
        let lower = characters::char_principal(&params(l, 1, 3));
        for k in 2..=3 {
            let upper = characters::char_principal(&params(l, k, 3));
            for t in lower.terms() {
                assert!(upper.coefficient(t.q, t.y) >= *t.c);
            }
        }
    }
}

#[test]
fn exponents_have_bounded_denominators() {
    for (l, k) in [(1, 2), (2, 3), (1, 3)] {
        let p = params(l, k, 3);
        let den = BigInt::from(8 * k);
        for s in [characters::char_parafermionic(&p), characters::char_standard(&p)] {
            for t in s.terms() {
                assert_eq!(&den % t.q.denom(), BigInt::from(0), "{}", t.q);
            }
        }
    }
}

#[test]
fn standard_matches_enumeration_at_level_three() {
    let p = ModelParams::new(1, 3, rat(5, 2)).unwrap();
    assert_eq!(characters::char_standard(&p), oracle::oracle_standard(&p));
}

#[test]
fn identity_check_examples() {
    let p = params(1, 2, 1);
    assert!(characters::quadratic_form_identity_check(&p, &ChargeProfile::new(vec![vec![2, 0]])).unwrap());
    assert!(characters::quadratic_form_identity_check(&p, &ChargeProfile::new(vec![vec![1, 1]])).unwrap());
    assert!(characters::quadratic_form_identity_check(&p, &ChargeProfile::new(vec![vec![0, 0]])).unwrap());
    let wrong_rank = ChargeProfile::new(vec![vec![1], vec![1]]);
    assert!(characters::quadratic_form_identity_check(&p, &wrong_rank).is_err());
}

proptest! {
    #[test]
    fn identity_check_on_random_profiles(
        (l, cap, counts) in (1usize..=4, 1usize..=4).prop_flat_map(|(l, cap)| {
            (Just(l), Just(cap), prop::collection::vec(prop::collection::vec(0u32..=4, cap), l))
        })
    ) {
        let p = params(l, cap, 1);
        prop_assert!(characters::quadratic_form_identity_check(&p, &ChargeProfile::new(counts)).unwrap());
    }
}
