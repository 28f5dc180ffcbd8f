//! Fermionic character formulas evaluated as truncated series.
//!
//! Each formula is a sum over charge profiles `p_i^{(s)}` of
//! `q^{½ Σ A_ij Σ K_st p_i^{(s)} p_j^{(t)}} / ∏ (q^{1/2})_{p_i^{(s)}}` with
//! `A` the folded Gram matrix and `K` either `min{s,t}` or the
//! parafermionic kernel `min{s,t} − st/k`.

use std::collections::BTreeMap;

use crate::ellipsoid::QuadraticRegion;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::model::{self, FoldedVector, ModelParams};
use crate::qseries::{self, MultiSeries};
use crate::quasiparticle::{ChargeProfile, ChargeType};
use crate::rational::{floor_i64, int, rat, Rational};

/// `D_{s,t} = min{s,t} − st/k` for `s, t ∈ 1..k−1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionicKernel {
    pub k: usize,
    pub entries: Matrix,
}

impl FermionicKernel {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidLevel(k));
        }
        let kk = k as i64;
        let entries = (1..k)
            .map(|s| {
                (1..k)
                    .map(|t| int(s.min(t) as i64) - rat((s * t) as i64, kk))
                    .collect()
            })
            .collect();
        Ok(Self { k, entries })
    }

    /// Entry `D_{s,t}` with 1-based `s`, `t`.
    pub fn entry(&self, s: usize, t: usize) -> &Rational {
        &self.entries[s - 1][t - 1]
    }

    pub fn is_positive_definite(&self) -> bool {
        self.entries.is_empty() || linalg::is_positive_definite(&self.entries)
    }
}

fn min_kernel(cap: usize) -> Matrix {
    (1..=cap)
        .map(|s| (1..=cap).map(|t| int(s.min(t) as i64)).collect())
        .collect()
}

/// Calls `visit(profile, form value)` for every profile `P ≥ 0` with
/// `½ Pᵀ(A⊗K)P ≤ bound`; profile index is `i·cap + (s−1)`.
fn for_each_profile(
    l: usize,
    kernel: &Matrix,
    bound: &Rational,
    mut visit: impl FnMut(&[i64], &Rational),
) {
    let half: Matrix = linalg::kronecker(&model::folded_gram(l), kernel)
        .into_iter()
        .map(|row| row.into_iter().map(|a| a * rat(1, 2)).collect())
        .collect();
    QuadraticRegion::homogeneous(half, bound.clone(), true)
        .for_each(|p, value| visit(p, value))
        .expect("composite form is positive definite");
}

/// Adds `q^{shift} y^{y} / ∏_{n ∈ parts}(q^{1/2})_n` to `out`.
fn add_pochhammer_term(out: &mut MultiSeries, shift: &Rational, y: &[i64], parts: &[usize]) {
    let room = out.trunc() - shift;
    let max = floor_i64(&(room * int(2)));
    if max < 0 {
        return;
    }
    let coeffs = qseries::inverse_products_coefficients(parts, max as usize);
    for (j, c) in coeffs.into_iter().enumerate() {
        out.add_term(shift + rat(j as i64, 2), y.to_vec(), c);
    }
}

fn color_type(p: &[i64], l: usize, cap: usize) -> Vec<i64> {
    (0..l)
        .map(|i| (0..cap).map(|s| (s as i64 + 1) * p[i * cap + s]).sum())
        .collect()
}

fn parts(p: &[i64]) -> Vec<usize> {
    p.iter().map(|&n| n as usize).collect()
}

/// Principal subspace character: profiles with charges `1..k`.
pub fn char_principal(params: &ModelParams) -> MultiSeries {
    let (l, cap) = (params.l, params.k);
    let mut out = MultiSeries::zero(l, params.trunc.clone());
    for_each_profile(l, &min_kernel(cap), &params.trunc, |p, value| {
        add_pochhammer_term(&mut out, value, &color_type(p, l, cap), &parts(p));
    });
    out
}

/// Parafermionic character: profiles with charges `1..k−1` and kernel `D`.
pub fn char_parafermionic(params: &ModelParams) -> MultiSeries {
    let l = params.l;
    if params.k == 1 {
        return MultiSeries::one(l, params.trunc.clone());
    }
    let cap = params.k - 1;
    let kernel = FermionicKernel::new(params.k).expect("validated level");
    let mut out = MultiSeries::zero(l, params.trunc.clone());
    for_each_profile(l, &kernel.entries, &params.trunc, |p, value| {
        add_pochhammer_term(&mut out, value, &color_type(p, l, cap), &parts(p));
    });
    out
}

/// Parafermionic sum split by the class of the colour weight modulo `kQ_0`,
/// without `y`-grading.
fn parafermionic_by_class(params: &ModelParams) -> BTreeMap<Vec<i64>, MultiSeries> {
    let (l, k) = (params.l, params.k);
    let mut classes: BTreeMap<Vec<i64>, MultiSeries> = BTreeMap::new();
    let zero_y = vec![0; l];
    if k == 1 {
        classes.insert(zero_y, MultiSeries::one(l, params.trunc.clone()));
        return classes;
    }
    let cap = k - 1;
    let kernel = FermionicKernel::new(k).expect("validated level");
    for_each_profile(l, &kernel.entries, &params.trunc, |p, value| {
        let weight = FoldedVector::from_integers(&color_type(p, l, cap));
        let class = model::coset_class(&weight, k).expect("integral colour weight");
        let entry = classes
            .entry(class)
            .or_insert_with(|| MultiSeries::zero(l, params.trunc.clone()));
        add_pochhammer_term(entry, value, &zero_y, &parts(p));
    });
    classes
}

/// Standard module character: Fock factor times the theta-weighted
/// parafermionic class sums.
pub fn char_standard(params: &ModelParams) -> MultiSeries {
    let (l, k) = (params.l, params.k);
    let trunc = &params.trunc;
    let classes = parafermionic_by_class(params);
    let theta = qseries::theta_sum(l, &rat(1, 2 * k as i64), trunc);
    let mut lattice_part = MultiSeries::zero(l, trunc.clone());
    for term in theta.terms() {
        let eta = FoldedVector::from_integers(term.y);
        let class = model::coset_class(&eta, k).expect("integral lattice vector");
        let Some(pf) = classes.get(&class) else { continue };
        for t in pf.terms() {
            lattice_part.add_term(term.q + t.q, term.y.to_vec(), t.c * term.c);
        }
    }
    qseries::pochhammer_inf_inv_pow(l, l, trunc)
        .mul(&lattice_part)
        .expect("matching ranks")
}

/// Checks both rewritings of the minimal energy of a charge type as a
/// quadratic form in its profile.
pub fn quadratic_form_identity_check(params: &ModelParams, profile: &ChargeProfile) -> Result<bool> {
    let l = params.l;
    if profile.rank() != l {
        return Err(Error::RankMismatch { left: l, right: profile.rank() });
    }
    let charge: ChargeType = profile.charge_type();
    let cap = profile.cap();
    let min_sum = |a: &[u32], b: &[u32]| -> i64 {
        let mut v = 0i64;
        for s in 0..cap {
            for t in 0..cap {
                v += (s.min(t) as i64 + 1) * a[s] as i64 * b[t] as i64;
            }
        }
        v
    };
    for i in 0..l {
        let rho = model::rho(l, i + 1)?;
        let weighted: i64 = charge.colors[i]
            .iter()
            .enumerate()
            .map(|(p, &n)| (2 * p as i64 + 1) * n as i64)
            .sum();
        if &rho * int(weighted) != &rho * int(min_sum(&profile.counts[i], &profile.counts[i])) {
            return Ok(false);
        }
        if i > 0 {
            let interaction: i64 = charge.colors[i]
                .iter()
                .flat_map(|&n| charge.colors[i - 1].iter().map(move |&m| n.min(m) as i64))
                .sum();
            if interaction != min_sum(&profile.counts[i], &profile.counts[i - 1]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
