//! Characters by direct enumeration of the combinatorial bases and of the
//! level-one lattice module.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::model::{self, FoldedVector, ModelParams};
use crate::qseries::{self, MultiSeries};
use crate::quasiparticle::{
    enumerate_bh, enumerate_bw, enumerate_bw_parafermionic, heisenberg_energy, parafermion_energy,
    standard_degree_parts, CrossTermSign, QPMonomial, STANDARD_CROSS_TERM,
};
use crate::rational::{floor_i64, int, Rational};

/// `Σ_{b ∈ B_W} q^{−Σm} y^{colour type}` with charges up to `k`.
pub fn oracle_principal(params: &ModelParams) -> MultiSeries {
    let mut out = MultiSeries::zero(params.l, params.trunc.clone());
    enumerate_bw(params, params.k, &params.trunc, |b| {
        out.add_term(b.energy(), b.charge.color_type(), BigInt::one());
    });
    out
}

/// `Σ q^{parafermionic energy} y^{colour type}` over monomials with charges
/// below `k`.
pub fn oracle_parafermionic(params: &ModelParams) -> MultiSeries {
    let mut out = MultiSeries::zero(params.l, params.trunc.clone());
    enumerate_bw_parafermionic(params, &params.trunc, |b| {
        out.add_term(parafermion_energy(b, params.k), b.charge.color_type(), BigInt::one());
    });
    out
}

/// Integer radius `R` with `x_i² ≤ limit` implying `|x_i| ≤ R`.
fn radius(limit: &Rational) -> i64 {
    let mut r = 0i64;
    while int((r + 1) * (r + 1)) <= *limit {
        r += 1;
    }
    r
}

/// Every vacuum-space pair `(μ, b)` with degree at most `trunc`, as
/// `(degree, y-weight)`.
fn vacuum_terms(params: &ModelParams, sign: CrossTermSign) -> Vec<(Rational, Vec<i64>)> {
    let (l, k) = (params.l, params.k);
    let trunc = &params.trunc;
    let mut monomials: Vec<(QPMonomial, Rational)> = Vec::new();
    enumerate_bw_parafermionic(params, trunc, |b| {
        monomials.push((b.clone(), parafermion_energy(b, k)));
    });
    let inverse = linalg::inverse(&model::folded_gram(l)).expect("folded Gram matrix is invertible");
    let kk = int(k as i64);
    let mut out = Vec::new();
    for (b, pf) in &monomials {
        let r = b.charge.color_type();
        // |kμ ± c|²/2k ≤ trunc − pf bounds each coordinate of μ ± c/k.
        let room = trunc - pf;
        let orientation = match sign {
            CrossTermSign::Plus => int(-1),
            CrossTermSign::Minus => int(1),
        };
        let ranges: Vec<(i64, i64)> = (0..l)
            .map(|i| {
                let limit = int(2) * &room * &inverse[i][i] / &kk;
                let centre = &orientation * int(r[i]) / &kk;
                let rad = radius(&limit) + 1;
                (floor_i64(&centre) - rad, floor_i64(&centre) + rad + 1)
            })
            .collect();
        let mut mu: Vec<i64> = ranges.iter().map(|(lo, _)| *lo).collect();
        'box_walk: loop {
            let (degree, y) = standard_degree_parts(&mu, &Rational::zero(), b, k, sign);
            if degree <= *trunc {
                out.push((degree, y));
            }
            for pos in 0..l {
                if mu[pos] < ranges[pos].1 {
                    mu[pos] += 1;
                    continue 'box_walk;
                }
                mu[pos] = ranges[pos].0;
            }
            break;
        }
    }
    out
}

/// `Σ_{(μ, b)} q^{deg} y^{kμ + r}`, the vacuum-space character.
pub fn vacuum_series(params: &ModelParams) -> MultiSeries {
    let mut out = MultiSeries::zero(params.l, params.trunc.clone());
    for (degree, y) in vacuum_terms(params, STANDARD_CROSS_TERM) {
        out.add_term(degree, y, BigInt::one());
    }
    out
}

/// `Σ_{e_μ h b v_0 ∈ B_L} q^{deg} y^{kμ + r}`.
pub fn oracle_standard(params: &ModelParams) -> MultiSeries {
    oracle_standard_with_sign(params, STANDARD_CROSS_TERM)
}

/// The standard-module count with an explicit cross-term convention.
pub fn oracle_standard_with_sign(params: &ModelParams, sign: CrossTermSign) -> MultiSeries {
    let l = params.l;
    let trunc = &params.trunc;
    let mut heisenberg: Vec<Rational> = Vec::new();
    enumerate_bh(l, trunc, |h| heisenberg.push(heisenberg_energy(h)));
    heisenberg.sort();
    let mut out = MultiSeries::zero(l, trunc.clone());
    for (degree, y) in vacuum_terms(params, sign) {
        for en in heisenberg.iter().take_while(|en| &degree + *en <= *trunc) {
            out.add_term(&degree + en, y.clone(), BigInt::one());
        }
    }
    out
}

/// Graded dimension of the level-one lattice module: the Fock space of the
/// twisted Heisenberg algebra times `Σ_{α ∈ Q_0} q^{⟨α,α⟩/2} y^α`.
pub fn oracle_basic_module(params: &ModelParams) -> Result<MultiSeries> {
    let (l, k) = (params.l, params.k);
    if k != 1 {
        return Err(Error::LevelOneOnly(k));
    }
    let trunc = &params.trunc;
    let inverse = linalg::inverse(&model::folded_gram(l))?;
    let ranges: Vec<i64> = (0..l)
        .map(|i| radius(&(int(2) * trunc * &inverse[i][i])))
        .collect();
    let mut lattice = MultiSeries::zero(l, trunc.clone());
    let mut alpha: Vec<i64> = ranges.iter().map(|r| -r).collect();
    'box_walk: loop {
        let ambient = model::folded_to_ambient(&FoldedVector::from_integers(&alpha));
        let weight = model::ambient_gram(&ambient, &ambient) / int(2);
        if weight <= *trunc {
            lattice.add_term(weight, alpha.clone(), BigInt::one());
        }
        for pos in 0..l {
            if alpha[pos] < ranges[pos] {
                alpha[pos] += 1;
                continue 'box_walk;
            }
            alpha[pos] = -ranges[pos];
        }
        break;
    }
    qseries::pochhammer_inf_inv_pow(l, l, trunc).mul(&lattice)
}

/// `1/(q^{1/2})_∞^l` times the vacuum-space character.
pub fn lepowsky_wilson_product(params: &ModelParams) -> MultiSeries {
    qseries::pochhammer_inf_inv_pow(params.l, params.l, &params.trunc)
        .mul(&vacuum_series(params))
        .expect("matching ranks")
}
