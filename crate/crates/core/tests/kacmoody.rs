use fermionic_characters::characters;
use fermionic_characters::kacmoody::*;
use fermionic_characters::oracle;
use fermionic_characters::rational::{int, rat};
use fermionic_characters::{Error, ModelParams};

fn params(l: usize, k: usize, trunc: i64) -> ModelParams {
    ModelParams::new(l, k, int(trunc)).unwrap()
}

fn kernel_product(g: &Gcm, v: &[i64]) -> Vec<i64> {
    g.entries.iter().map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum()).collect()
}

#[test]
fn matrices_and_null_vectors() {
    for l in 1..=6 {
        let g = build_gcm(l).unwrap();
        assert_eq!(g.size(), l + 1);
        assert_eq!(g.rank(), l);
        for i in 0..=l {
            assert_eq!(g.entries[i][i], 2);
            for j in 0..=l {
                if i != j {
                    assert!(g.entries[i][j] <= 0);
                    assert_eq!(g.entries[i][j] == 0, g.entries[j][i] == 0);
                }
            }
        }
        let (marks, comarks) = null_marks(&g).unwrap();
        assert!(marks.iter().chain(&comarks).all(|&m| m > 0));
        assert!(kernel_product(&g, &marks).iter().all(|&x| x == 0));
        assert!(kernel_product(&g.transpose(), &comarks).iter().all(|&x| x == 0));
        let mut expected = vec![2; l + 1];
        expected[l] = 1;
        assert_eq!(marks, expected);
    }
    assert!(matches!(build_gcm(0), Err(Error::InvalidRank(0))));
}

#[test]
fn orientation_is_pinned() {
    for l in 1..=4 {
        let g = build_gcm(l).unwrap();
        let flipped = g.transpose();
        assert!(matches_realization(&g, l));
        assert!(!matches_realization(&flipped, l));
        let (marks, comarks) = null_marks(&g).unwrap();
        assert_eq!(null_marks(&flipped).unwrap(), (comarks, marks));
    }
}

#[test]
fn root_multiplicities_small_box() {
    for l in 1..=3 {
        let g = build_gcm(l).unwrap();
        let form = symmetrized_form(&g).unwrap();
        let (marks, _) = null_marks(&g).unwrap();
        let maxima: Vec<i64> = marks.iter().map(|m| 3 * m).collect();
        let roots = root_multiplicities(&form, &maxima).unwrap();
        for n in 1..=3 {
            let delta: Vec<i64> = marks.iter().map(|m| n * m).collect();
            assert_eq!(roots.multiplicity(&delta), l as i64, "l={l} n={n}");
        }
        for i in 0..=l {
            let mut e = vec![0; l + 1];
            e[i] = 1;
            assert_eq!(roots.multiplicity(&e), 1);
            e[i] = 2;
            assert_eq!(roots.multiplicity(&e), 0);
        }
        for (beta, m) in &roots.roots {
            let norm: i64 = (0..=l)
                .map(|i| (0..=l).map(|j| form[i][j] * beta[i] * beta[j]).sum::<i64>())
                .sum();
            if norm > 0 {
                assert_eq!(*m, 1, "real root {beta:?}");
            }
        }
    }
}

#[test]
fn weight_multiplicity_examples() {
    let w = freudenthal(&params(1, 1, 1), 4).unwrap();
    assert_eq!(w.mults.get(&vec![0, 0]), Some(&1));
    assert_eq!(w.mults.get(&vec![1, 0]), Some(&1));
    assert!(w.mults.values().all(|&m| m > 0));
}

#[test]
fn null_direction_matches_level_one_fock_space() {
    for l in 1..=2 {
        let p = params(l, 1, 3);
        let g = build_gcm(l).unwrap();
        let (marks, _) = null_marks(&g).unwrap();
        let w = freudenthal(&p, 12).unwrap();
        let basic = oracle::oracle_basic_module(&p).unwrap();
        for n in 0..=3 {
            let beta: Vec<i64> = marks.iter().map(|m| 2 * n * m).collect();
            let expected = basic.coefficient(&int(n), &vec![0; l]);
            assert_eq!(w.mults.get(&beta).copied().unwrap_or(0), i64::try_from(expected).unwrap());
        }
    }
}

#[test]
fn dictionary_is_calibrated_uniquely() {
    for (l, k) in [(1, 1), (1, 2), (2, 1)] {
        let p = params(l, k, 2);
        let reference = characters::char_standard(&p);
        let d = calibrate_stable(&p, &reference).unwrap();
        assert_eq!(d.qexp, rat(1, 4));
        assert_eq!(d.yexp, vec![1; l]);
        assert_eq!(d.simple, fixed_simple_images(l));
        let w = freudenthal(&p, depth_for(&d, &p.trunc)).unwrap();
        assert_eq!(d.apply(&w, &p.trunc).unwrap(), reference);
    }
}

#[test]
fn calibration_rejects_shallow_weights() {
    let p = params(1, 1, 2);
    let reference = characters::char_standard(&p);
    let shallow = freudenthal(&p, 0).unwrap();
    assert!(matches!(calibrate_dictionary(&p, &reference, &shallow), Err(Error::Calibration(_))));
}
