//! Weight multiplicities of `L(kΛ_0)` for the twisted affine algebra of
//! type A(2l)(2), computed from its generalized Cartan matrix and mapped to
//! `(q, y)` monomials.
//!
//! Nodes are ordered `0..=l`. Root multiplicities come from Peterson's
//! recursion, weight multiplicities from Freudenthal's formula, both over
//! the symmetrized invariant form scaled to integers.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ellipsoid::QuadraticRegion;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::model::{self, ModelParams};
use crate::qseries::MultiSeries;
use crate::rational::{as_integer, int, rat, Rational};

/// Generalized Cartan matrix, `entries[i][j] = ⟨a_i^∨, a_j⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    pub entries: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        Self {
            entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect(),
        }
    }

    fn rational(&self) -> Matrix {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&a| int(a)).collect())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.rational();
        let (rows, cols) = (m.len(), m.len());
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(rank, pivot);
            for r in 0..rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] / &m[rank][col];
                    for c in col..cols {
                        let v = &f * &m[rank][c];
                        m[r][c] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// The A(2l)(2) matrix. The double bonds point from node 1 to node 0 and
/// from node `l−1` to node `l`; for `l = 1` the quadruple bond points from
/// node 1 to node 0.
pub fn build_gcm(l: usize) -> Result<Gcm> {
    if l == 0 {
        return Err(Error::InvalidRank(l));
    }
    let n = l + 1;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    if l == 1 {
        a[0][1] = -4;
        a[1][0] = -1;
        return Ok(Gcm { entries: a });
    }
    for i in 0..l {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    a[0][1] = -2;
    a[l - 1][l] = -2;
    Ok(Gcm { entries: a })
}

fn primitive_positive(v: Vec<Rational>) -> Result<Vec<i64>> {
    let mut den = BigInt::one();
    for x in &v {
        den = num_integer::Integer::lcm(&den, x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from(den.clone())).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
    if g.is_zero() {
        return Err(Error::Singular);
    }
    let out: Vec<i64> = ints
        .iter()
        .map(|x| crate::rational::to_i64(&(x / &g)))
        .collect();
    if out.iter().all(|&x| x > 0) {
        Ok(out)
    } else if out.iter().all(|&x| x < 0) {
        Ok(out.iter().map(|x| -x).collect())
    } else {
        Err(Error::Recursion("null vector is not of constant sign".into()))
    }
}

/// Kernel vector with last coordinate 1, solved from the leading block.
fn right_kernel(m: &Matrix) -> Result<Vec<Rational>> {
    let n = m.len();
    let block: Matrix = (0..n - 1).map(|i| m[i][..n - 1].to_vec()).collect();
    let rhs: Vec<Rational> = (0..n - 1).map(|i| -&m[i][n - 1]).collect();
    let inv = linalg::inverse(&block)?;
    let mut v: Vec<Rational> = (0..n - 1)
        .map(|i| (0..n - 1).map(|j| &inv[i][j] * &rhs[j]).sum())
        .collect();
    v.push(int(1));
    for row in m {
        let dot: Rational = row.iter().zip(&v).map(|(a, x)| a * x).sum();
        if !dot.is_zero() {
            return Err(Error::Recursion("matrix has trivial kernel".into()));
        }
    }
    Ok(v)
}

/// Marks (right null vector) and comarks (left null vector), both primitive
/// and positive.
pub fn null_marks(g: &Gcm) -> Result<(Vec<i64>, Vec<i64>)> {
    let marks = primitive_positive(right_kernel(&g.rational())?)?;
    let comarks = primitive_positive(right_kernel(&g.transpose().rational())?)?;
    Ok((marks, comarks))
}

/// Integer invariant form `F_ij = 4(a_i|a_j)` obtained from the symmetrizer
/// `comark_i / mark_i`, normalized so that `F_00 = 2`.
pub fn symmetrized_form(g: &Gcm) -> Result<Vec<Vec<i64>>> {
    let (marks, comarks) = null_marks(g)?;
    let n = g.size();
    let raw: Matrix = (0..n)
        .map(|i| (0..n).map(|j| int(g.entries[i][j]) * rat(comarks[i], marks[i])).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            if raw[i][j] != raw[j][i] {
                return Err(Error::Recursion("matrix is not symmetrizable by its null vectors".into()));
            }
        }
    }
    let scale = int(2) / &raw[0][0];
    raw.iter()
        .map(|row| {
            row.iter()
                .map(|x| as_integer(&(x * &scale)).ok_or_else(|| Error::Recursion("non-integral form".into())))
                .collect()
        })
        .collect()
}

/// `4(a_i|a_j)` for `a_0 = −Σ(α_i)_0 + ¼δ`, `a_i = (α_i)_0` for `i < l`,
/// `a_l = 2(α_l)_0`.
pub fn realization_form(l: usize) -> Vec<Vec<i64>> {
    let gram = model::folded_gram(l);
    let mut finite: Vec<Vec<Rational>> = Vec::with_capacity(l + 1);
    finite.push(vec![int(-1); l]);
    for i in 0..l {
        let mut v = vec![Rational::zero(); l];
        v[i] = if i + 1 == l { int(2) } else { int(1) };
        finite.push(v);
    }
    finite
        .iter()
        .map(|u| {
            finite
                .iter()
                .map(|v| {
                    let value = linalg::bilinear(&gram, u, v) * int(4);
                    as_integer(&value).expect("quarter-integral form")
                })
                .collect()
        })
        .collect()
}

/// Whether `⟨a_i^∨, a_j⟩ = 2(a_i|a_j)/(a_i|a_i)` holds for the realization.
pub fn matches_realization(g: &Gcm, l: usize) -> bool {
    let form = realization_form(l);
    g.size() == l + 1
        && (0..=l).all(|i| (0..=l).all(|j| g.entries[i][j] * form[i][i] == 2 * form[i][j]))
}

fn pair(form: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut v = 0;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v += form[i][j] * x * y;
        }
    }
    v
}

/// Positive roots inside a box with their multiplicities.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub roots: Vec<(Vec<i64>, i64)>,
}

impl RootSystem {
    pub fn multiplicity(&self, beta: &[i64]) -> i64 {
        self.roots
            .iter()
            .find(|(r, _)| r == beta)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }
}

fn box_points(maxima: &[i64]) -> Vec<Vec<i64>> {
    let mut points = vec![Vec::new()];
    for &m in maxima {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=m).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    points.sort_by_key(|p| p.iter().sum::<i64>());
    points
}

fn divide(beta: &[i64], n: i64) -> Option<Vec<i64>> {
    beta.iter().all(|x| x % n == 0).then(|| beta.iter().map(|x| x / n).collect())
}

/// Peterson's recursion `(β|β−2ρ) c_β = Σ_{β'+β''=β} (β'|β'') c_{β'} c_{β''}`
/// with `c_β = Σ_n mult(β/n)/n`, over the box `0 ≤ β ≤ maxima`.
pub fn root_multiplicities(form: &[Vec<i64>], maxima: &[i64]) -> Result<RootSystem> {
    let n = form.len();
    let rho: Vec<i64> = (0..n).map(|i| form[i][i] / 2).collect();
    let mut c: HashMap<Vec<i64>, Rational> = HashMap::new();
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut nonzero: Vec<Vec<i64>> = Vec::new();
    for beta in box_points(maxima) {
        let height: i64 = beta.iter().sum();
        if height == 0 {
            continue;
        }
        let lower: Rational = (2..=height)
            .filter_map(|d| divide(&beta, d).map(|b| (d, b)))
            .map(|(d, b)| int(*mult.get(&b).unwrap_or(&0)) / int(d))
            .sum();
        let (c_beta, m) = if height == 1 {
            (int(1), 1)
        } else {
            let mut rhs = Rational::zero();
            for prev in &nonzero {
                if prev.iter().zip(&beta).all(|(a, b)| a <= b) {
                    let rest: Vec<i64> = beta.iter().zip(prev).map(|(b, a)| b - a).collect();
                    if let Some(cr) = c.get(&rest) {
                        rhs += int(pair(form, prev, &rest)) * &c[prev] * cr;
                    }
                }
            }
            let coef = pair(form, &beta, &beta) - 2 * beta.iter().zip(&rho).map(|(b, r)| b * r).sum::<i64>();
            let c_beta = if coef == 0 {
                if !rhs.is_zero() {
                    return Err(Error::Recursion(format!("inconsistent root recursion at {beta:?}")));
                }
                lower.clone()
            } else {
                rhs / int(coef)
            };
            let m = as_integer(&(&c_beta - &lower))
                .ok_or_else(|| Error::Recursion(format!("non-integral root multiplicity at {beta:?}")))?;
            (c_beta, m)
        };
        if m < 0 {
            return Err(Error::Recursion(format!("negative root multiplicity at {beta:?}")));
        }
        if m > 0 {
            mult.insert(beta.clone(), m);
        }
        if !c_beta.is_zero() {
            c.insert(beta.clone(), c_beta);
            nonzero.push(beta);
        }
    }
    let mut roots: Vec<(Vec<i64>, i64)> = mult.into_iter().collect();
    roots.sort();
    Ok(RootSystem { roots })
}

/// Multiplicities of the weights `kΛ_0 − Σ c_i a_i` with `c_0 ≤ depth`,
/// keyed by `(c_0, …, c_l)`.
#[derive(Clone, Debug)]
pub struct WeightMultiplicities {
    pub l: usize,
    pub k: usize,
    pub depth: i64,
    pub mults: BTreeMap<Vec<i64>, i64>,
}

/// Candidate weights: those with `|Λ+ρ|² − |Λ−β+ρ|² ≥ 0`.
fn candidate_weights(form: &[Vec<i64>], k: i64, depth: i64) -> Vec<Vec<i64>> {
    let n = form.len();
    let rho: Vec<i64> = (0..n).map(|i| form[i][i] / 2).collect();
    let lambda0 = k * form[0][0] / 2;
    let rest: Matrix = (1..n).map(|i| (1..n).map(|j| int(form[i][j])).collect()).collect();
    let mut out = Vec::new();
    for c0 in 0..=depth {
        let linear: Vec<Rational> = (1..n).map(|i| int(c0 * form[0][i] - rho[i])).collect();
        let constant = int(c0 * c0 * form[0][0] - 2 * c0 * (lambda0 + rho[0]));
        let region = QuadraticRegion {
            matrix: rest.clone(),
            linear,
            constant,
            bound: Rational::zero(),
            lower: vec![Some(0); n - 1],
        };
        region
            .for_each(|x, _| {
                let mut beta = vec![c0];
                beta.extend_from_slice(x);
                out.push(beta);
            })
            .expect("finite part of the form is positive definite");
    }
    out
}

/// Freudenthal's recursion
/// `[2(Λ+ρ|β) − |β|²] m(Λ−β) = 2 Σ_{α>0} mult α Σ_{j≥1} (Λ−β+jα|α) m(Λ−β+jα)`.
pub fn freudenthal(params: &ModelParams, depth: i64) -> Result<WeightMultiplicities> {
    let (l, k) = (params.l, params.k);
    let gcm = build_gcm(l)?;
    let form = symmetrized_form(&gcm)?;
    let n = l + 1;
    let rho: Vec<i64> = (0..n).map(|i| form[i][i] / 2).collect();
    let lambda: Vec<i64> = (0..n).map(|i| if i == 0 { k as i64 * form[0][0] / 2 } else { 0 }).collect();
    let mut weights = candidate_weights(&form, k as i64, depth);
    weights.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    let maxima: Vec<i64> = (0..n)
        .map(|i| weights.iter().map(|b| b[i]).max().unwrap_or(0))
        .collect();
    let roots = root_multiplicities(&form, &maxima)?;
    let mut mults: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for beta in weights {
        if beta.iter().all(|&x| x == 0) {
            mults.insert(beta, 1);
            continue;
        }
        let lam_beta: i64 = beta.iter().zip(&lambda).map(|(b, x)| b * x).sum();
        let rho_beta: i64 = beta.iter().zip(&rho).map(|(b, x)| b * x).sum();
        let coef = 2 * (lam_beta + rho_beta) - pair(&form, &beta, &beta);
        let mut rhs: i128 = 0;
        for (alpha, ma) in &roots.roots {
            let lam_alpha: i64 = alpha.iter().zip(&lambda).map(|(a, x)| a * x).sum();
            let beta_alpha = pair(&form, &beta, alpha);
            let alpha_alpha = pair(&form, alpha, alpha);
            let mut j = 1;
            loop {
                let shifted: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - j * a).collect();
                if shifted.iter().any(|&x| x < 0) {
                    break;
                }
                if let Some(m) = mults.get(&shifted) {
                    let pairing = lam_alpha - beta_alpha + j * alpha_alpha;
                    rhs += 2 * (*ma as i128) * (pairing as i128) * (*m as i128);
                }
                j += 1;
            }
        }
        if coef == 0 {
            if rhs != 0 {
                return Err(Error::Recursion(format!("inconsistent weight recursion at {beta:?}")));
            }
            continue;
        }
        if rhs % coef as i128 != 0 {
            return Err(Error::Recursion(format!("non-integral weight multiplicity at {beta:?}")));
        }
        let m = (rhs / coef as i128) as i64;
        if m < 0 {
            return Err(Error::Recursion(format!("negative weight multiplicity at {beta:?}")));
        }
        if m > 0 {
            mults.insert(beta, m);
        }
    }
    Ok(WeightMultiplicities { l, k, depth, mults })
}

/// Images of `−a_i` as `(q-exponent, y-exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dictionary {
    pub qexp: Rational,
    pub yexp: Vec<i64>,
    /// Images of `−a_1, …, −a_l`; all have `q`-exponent 0.
    pub simple: Vec<Vec<i64>>,
}

/// `−a_i ↦ −(α_i)_0` for `i < l` and `−a_l ↦ −2(α_l)_0`.
pub fn fixed_simple_images(l: usize) -> Vec<Vec<i64>> {
    (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = if i + 1 == l { -2 } else { -1 };
            v
        })
        .collect()
}

impl Dictionary {
    pub fn new(l: usize, qexp: Rational, yexp: Vec<i64>) -> Self {
        Self { qexp, yexp, simple: fixed_simple_images(l) }
    }

    /// The monomial of the weight `kΛ_0 − Σ c_i a_i`.
    pub fn monomial(&self, beta: &[i64]) -> (Rational, Vec<i64>) {
        let l = self.yexp.len();
        let q = &self.qexp * int(beta[0]);
        let y = (0..l)
            .map(|j| beta[0] * self.yexp[j] + (0..l).map(|i| beta[i + 1] * self.simple[i][j]).sum::<i64>())
            .collect();
        (q, y)
    }

    /// The character truncated at `trunc`; `None` if the weights computed
    /// do not cover every term up to `trunc`.
    pub fn apply(&self, w: &WeightMultiplicities, trunc: &Rational) -> Option<MultiSeries> {
        if self.qexp <= Rational::zero() || &self.qexp * int(w.depth + 1) <= *trunc {
            return None;
        }
        let mut out = MultiSeries::zero(w.l, trunc.clone());
        for (beta, m) in &w.mults {
            let (q, y) = self.monomial(beta);
            out.add_term(q, y, BigInt::from(*m));
        }
        Some(out)
    }
}

/// The two lowest `q`-exponents present in a series.
fn two_lowest_shells(s: &MultiSeries) -> Result<Rational> {
    let shells = s.q_shells();
    shells
        .get(1)
        .cloned()
        .ok_or_else(|| Error::Calibration("fewer than two q-shells in the reference series".into()))
}

fn candidates(l: usize) -> Vec<Dictionary> {
    let mut ys: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..l {
        ys = ys
            .into_iter()
            .flat_map(|p| {
                (-2..=2).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    (1..=8)
        .flat_map(|j| ys.iter().map(move |y| Dictionary::new(l, rat(j, 8), y.clone())))
        .collect()
}

/// Depth of `c_0` needed to cover every candidate up to `shell`.
pub fn calibration_depth(shell: &Rational) -> i64 {
    crate::rational::ceil_i64(&(shell * int(8))).max(1)
}

/// The unique candidate image of `a_0` reproducing `reference` on its two
/// lowest `q`-shells.
pub fn calibrate_dictionary(
    params: &ModelParams,
    reference: &MultiSeries,
    weights: &WeightMultiplicities,
) -> Result<Dictionary> {
    let shell = two_lowest_shells(reference)?;
    if weights.depth < calibration_depth(&shell) {
        return Err(Error::Calibration(format!(
            "depth {} does not cover q-shell {shell}",
            weights.depth
        )));
    }
    let target = reference.truncate(&shell);
    let matching: Vec<Dictionary> = candidates(params.l)
        .into_iter()
        .filter(|d| d.apply(weights, &shell).is_some_and(|s| s == target))
        .collect();
    match matching.len() {
        0 => Err(Error::Calibration("no candidate image matches".into())),
        1 => Ok(matching.into_iter().next().expect("one element")),
        n => Err(Error::Calibration(format!("{n} candidate images match"))),
    }
}

/// Calibrates at two depths and fails unless both agree.
pub fn calibrate_stable(params: &ModelParams, reference: &MultiSeries) -> Result<Dictionary> {
    let depth = calibration_depth(&two_lowest_shells(reference)?);
    let first = calibrate_dictionary(params, reference, &freudenthal(params, depth)?)?;
    let second = calibrate_dictionary(params, reference, &freudenthal(params, depth + 4)?)?;
    if first != second {
        return Err(Error::Calibration("calibration changes with depth".into()));
    }
    Ok(first)
}

/// Depth of `c_0` that covers all terms up to `trunc` under `d`.
pub fn depth_for(d: &Dictionary, trunc: &Rational) -> i64 {
    crate::rational::floor_i64(&(trunc / &d.qexp))
}
