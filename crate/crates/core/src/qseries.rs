//! Truncated series in `q` (rational exponents) and `y_1, …, y_l` (integer
//! exponents) with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ellipsoid::QuadraticRegion;
use crate::error::{Error, Result};
use crate::linalg;
use crate::model;
use crate::rational::{floor_i64, int, rat, to_fraction, Rational};

pub type Key = (Rational, Vec<i64>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    rank: usize,
    trunc: Rational,
    terms: BTreeMap<Key, BigInt>,
}

/// One stored coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<'a> {
    pub q: &'a Rational,
    pub y: &'a [i64],
    pub c: &'a BigInt,
}

/// First disagreement between two series, in term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub q: Rational,
    pub y: Vec<i64>,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q^{} y^{:?}: {} vs {}",
            to_fraction(&self.q),
            self.y,
            self.left,
            self.right
        )
    }
}

impl MultiSeries {
    pub fn zero(rank: usize, trunc: Rational) -> Self {
        Self { rank, trunc, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, trunc: Rational) -> Self {
        let mut s = Self::zero(rank, trunc);
        s.add_term(Rational::zero(), vec![0; rank], BigInt::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn trunc(&self) -> &Rational {
        &self.trunc
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c q^q y^y`; terms past the cutoff are dropped.
    pub fn add_term(&mut self, q: Rational, y: Vec<i64>, c: BigInt) {
        assert_eq!(y.len(), self.rank, "y-exponent length must equal the rank");
        if q > self.trunc || c.is_zero() {
            return;
        }
        let key = (q, y);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, q: &Rational, y: &[i64]) -> BigInt {
        self.terms
            .get(&(q.clone(), y.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms ordered by q-exponent, then y-exponent.
    pub fn terms(&self) -> impl Iterator<Item = Term<'_>> {
        self.terms.iter().map(|((q, y), c)| Term { q, y, c })
    }

    /// Restriction to a fixed y-exponent, as `(q, c)` pairs.
    pub fn y_column(&self, y: &[i64]) -> Vec<(Rational, BigInt)> {
        self.terms()
            .filter(|t| t.y == y)
            .map(|t| (t.q.clone(), t.c.clone()))
            .collect()
    }

    /// Distinct q-exponents in increasing order.
    pub fn q_shells(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        for t in self.terms() {
            if out.last() != Some(t.q) {
                out.push(t.q.clone());
            }
        }
        out
    }

    pub fn truncate(&self, trunc: &Rational) -> Self {
        let trunc = trunc.min(&self.trunc).clone();
        let terms = self
            .terms
            .iter()
            .filter(|((q, _), _)| *q <= trunc)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        Self { rank: self.rank, trunc, terms }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let trunc = self.trunc.clone().min(other.trunc.clone());
        let mut out = Self::zero(self.rank, trunc);
        for t in self.terms().chain(other.terms()) {
            out.add_term(t.q.clone(), t.y.to_vec(), t.c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let trunc = self.trunc.clone().min(other.trunc.clone());
        let mut out = Self::zero(self.rank, trunc.clone());
        for a in self.terms() {
            if *a.q > trunc {
                break;
            }
            for b in other.terms() {
                let q = a.q + b.q;
                if q > trunc {
                    break;
                }
                let y = a.y.iter().zip(b.y).map(|(u, v)| u + v).collect();
                out.add_term(q, y, a.c * b.c);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: usize) -> Result<Self> {
        let mut out = Self::one(self.rank, self.trunc.clone());
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// First term (in series order) where the coefficients differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        let keys: std::collections::BTreeSet<&Key> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|(q, y)| {
            let (a, b) = (self.coefficient(q, y), other.coefficient(q, y));
            (a != b).then(|| Mismatch { q: q.clone(), y: y.clone(), left: a, right: b })
        })
    }
}

/// Coefficients of `1/∏_{i=1}^{n}(1 − x^i)` for `x^0 … x^max`.
pub fn inverse_product_coefficients(n: usize, max: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); max + 1];
    c[0] = BigInt::one();
    for part in 1..=n.min(max) {
        for j in part..=max {
            let prev = c[j - part].clone();
            c[j] += prev;
        }
    }
    c
}

/// Coefficients of `∏_r 1/∏_{i=1}^{n_r}(1 − x^i)` for `x^0 … x^max`.
pub fn inverse_products_coefficients(ns: &[usize], max: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); max + 1];
    c[0] = BigInt::one();
    for &n in ns {
        for part in 1..=n.min(max) {
            for j in part..=max {
                let prev = c[j - part].clone();
                c[j] += prev;
            }
        }
    }
    c
}

pub fn half_units(trunc: &Rational) -> usize {
    floor_i64(&(trunc * int(2))).max(0) as usize
}

fn from_half_unit_coefficients(rank: usize, trunc: &Rational, coeffs: &[BigInt]) -> MultiSeries {
    let mut s = MultiSeries::zero(rank, trunc.clone());
    for (j, c) in coeffs.iter().enumerate() {
        s.add_term(rat(j as i64, 2), vec![0; rank], c.clone());
    }
    s
}

/// `1/(q^{1/2})_n = 1/∏_{i=1}^{n}(1 − q^{i/2})`.
pub fn pochhammer_inv(n: usize, rank: usize, trunc: &Rational) -> MultiSeries {
    let max = half_units(trunc);
    from_half_unit_coefficients(rank, trunc, &inverse_product_coefficients(n, max))
}

/// `1/(q^{1/2})_∞`.
pub fn pochhammer_inf_inv(rank: usize, trunc: &Rational) -> MultiSeries {
    let max = half_units(trunc);
    from_half_unit_coefficients(rank, trunc, &inverse_product_coefficients(max, max))
}

/// `1/(q^{1/2})_∞^l`, the graded dimension of an `l`-colour half-integer
/// Heisenberg Fock space.
pub fn pochhammer_inf_inv_pow(power: usize, rank: usize, trunc: &Rational) -> MultiSeries {
    let max = half_units(trunc);
    let mut c = vec![BigInt::zero(); max + 1];
    c[0] = BigInt::one();
    for part in 1..=max {
        for _ in 0..power {
            for j in part..=max {
                let prev = c[j - part].clone();
                c[j] += prev;
            }
        }
    }
    from_half_unit_coefficients(rank, trunc, &c)
}

/// Number of partitions of `j` into at most `n` parts.
pub fn partition_count(n: usize, j: usize) -> BigInt {
    // table[m][s]: partitions of s into at most m parts
    let mut table = vec![vec![BigInt::zero(); j + 1]; n + 1];
    table[0][0] = BigInt::one();
    for m in 1..=n {
        for s in 0..=j {
            let mut v = table[m - 1][s].clone();
            if s >= m {
                v += &table[m][s - m];
            }
            table[m][s] = v;
        }
    }
    table[n][j].clone()
}

/// `Σ_η q^{scale·⟨η,η⟩} y^η` over the folded root lattice of rank `l`.
pub fn theta_sum(l: usize, scale: &Rational, trunc: &Rational) -> MultiSeries {
    let gram = model::folded_gram(l);
    let scaled: linalg::Matrix = gram
        .iter()
        .map(|row| row.iter().map(|a| a * scale).collect())
        .collect();
    let mut s = MultiSeries::zero(l, trunc.clone());
    QuadraticRegion::homogeneous(scaled, trunc.clone(), false)
        .for_each(|eta, value| s.add_term(value.clone(), eta.to_vec(), BigInt::one()))
        .expect("folded Gram matrix is positive definite");
    s
}
