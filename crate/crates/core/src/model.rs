//! The root lattice of type A(2l), its diagram involution, the two
//! projections and the folded Gram matrix that drives every quadratic form.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{self, int, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelParams {
    pub l: usize,
    pub k: usize,
    pub trunc: Rational,
}

impl ModelParams {
    pub fn new(l: usize, k: usize, trunc: Rational) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidRank(l));
        }
        if k == 0 {
            return Err(Error::InvalidLevel(k));
        }
        if trunc.is_negative() {
            return Err(Error::InvalidTruncation(rational::to_fraction(&trunc)));
        }
        Ok(Self { l, k, trunc })
    }

    pub fn with_trunc(&self, trunc: Rational) -> Self {
        Self { trunc, ..self.clone() }
    }
}

/// Integer vector over `α_1, …, α_{2l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub coords: Vec<i64>,
}

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(2) {
            return Err(Error::InvalidRank(coords.len() / 2));
        }
        Ok(Self { coords })
    }

    pub fn zero(l: usize) -> Self {
        Self { coords: vec![0; 2 * l] }
    }

    /// The simple root `α_i`, `1 ≤ i ≤ 2l`.
    pub fn simple(l: usize, i: usize) -> Result<Self> {
        if i == 0 || i > 2 * l {
            return Err(Error::IndexOutOfRange { index: i, max: 2 * l });
        }
        let mut v = Self::zero(l);
        v.coords[i - 1] = 1;
        Ok(v)
    }

    /// The rank parameter `l` (half the ambient dimension).
    pub fn rank(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: i64) -> Self {
        Self { coords: self.coords.iter().map(|a| a * s).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

fn same_rank(a: &LatticeVector, b: &LatticeVector) -> Result<()> {
    if a.coords.len() != b.coords.len() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    Ok(())
}

/// Rational vector over the folded simple roots `(α_1)_0, …, (α_l)_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoldedVector {
    pub coords: Vec<Rational>,
}

impl FoldedVector {
    pub fn from_integers(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| int(c)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for FoldedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The root `α_i + … + α_{i+j−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootInterval {
    pub i: usize,
    pub j: usize,
}

impl RootInterval {
    pub fn new(l: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > 2 * l || j == 0 || j > 2 * l - i + 1 {
            return Err(Error::InvalidInterval { i, j, l });
        }
        Ok(Self { i, j })
    }

    pub fn vector(&self, l: usize) -> LatticeVector {
        let mut v = LatticeVector::zero(l);
        for m in self.i..self.i + self.j {
            v.coords[m - 1] = 1;
        }
        v
    }

    /// Image under the involution: another interval of the same length.
    pub fn nu(&self, l: usize) -> Self {
        Self { i: 2 * l + 2 - self.i - self.j, j: self.j }
    }

    fn contains(&self, m: usize) -> bool {
        self.i <= m && m < self.i + self.j
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootSign {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub sign: RootSign,
    pub interval: RootInterval,
}

impl SignedRoot {
    pub fn vector(&self, l: usize) -> LatticeVector {
        let v = self.interval.vector(l);
        match self.sign {
            RootSign::Positive => v,
            RootSign::Negative => v.neg(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MiddleContent {
    Neither,
    ExactlyOne,
    Both,
}

/// The A(2l) root lattice form: 2 on the diagonal, −1 for adjacent nodes.
pub fn gram(a: &LatticeVector, b: &LatticeVector) -> Result<i64> {
    same_rank(a, b)?;
    let n = a.coords.len();
    let mut acc = 0;
    for i in 0..n {
        acc += 2 * a.coords[i] * b.coords[i];
        if i + 1 < n {
            acc -= a.coords[i] * b.coords[i + 1] + a.coords[i + 1] * b.coords[i];
        }
    }
    Ok(acc)
}

/// `α_i ↦ α_{2l−i+1}`, extended linearly.
pub fn nu(a: &LatticeVector) -> LatticeVector {
    let mut coords = a.coords.clone();
    coords.reverse();
    LatticeVector { coords }
}

/// `(1+ν)/2`, expressed over the folded simple roots.
pub fn project0(a: &LatticeVector) -> FoldedVector {
    let l = a.rank();
    FoldedVector {
        coords: (0..l).map(|i| int(a.coords[i] + a.coords[2 * l - 1 - i])).collect(),
    }
}

/// `(1−ν)/2`, expressed over `(α_i)_2 = (α_i − α_{2l−i+1})/2`.
pub fn project2(a: &LatticeVector) -> FoldedVector {
    let l = a.rank();
    FoldedVector {
        coords: (0..l).map(|i| int(a.coords[i] - a.coords[2 * l - 1 - i])).collect(),
    }
}

/// Ambient coordinates of `(1±ν)a/2` over `α_1, …, α_{2l}`.
pub fn project_ambient(a: &LatticeVector, plus: bool) -> Vec<Rational> {
    let flipped = nu(a);
    a.coords
        .iter()
        .zip(&flipped.coords)
        .map(|(x, y)| if plus { rat(x + y, 2) } else { rat(x - y, 2) })
        .collect()
}

/// Ambient coordinates of a folded vector.
pub fn folded_to_ambient(f: &FoldedVector) -> Vec<Rational> {
    let l = f.rank();
    let mut out = vec![Rational::zero(); 2 * l];
    for (i, c) in f.coords.iter().enumerate() {
        let half = c / int(2);
        out[i] += &half;
        out[2 * l - 1 - i] += &half;
    }
    out
}

/// The A(2l) form on rational ambient coordinates.
pub fn ambient_gram(a: &[Rational], b: &[Rational]) -> Rational {
    let n = a.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        acc += int(2) * &a[i] * &b[i];
        if i + 1 < n {
            acc -= &a[i] * &b[i + 1] + &a[i + 1] * &b[i];
        }
    }
    acc
}

/// `A[i][j] = ⟨(α_i)_0, (α_j)_0⟩`, computed through the ambient form.
pub fn folded_gram(l: usize) -> Matrix {
    let basis: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            folded_to_ambient(&FoldedVector::from_integers(&e))
        })
        .collect();
    basis
        .iter()
        .map(|u| basis.iter().map(|v| ambient_gram(u, v)).collect())
        .collect()
}

/// Inner product of folded vectors via the folded Gram matrix.
pub fn folded_inner(a: &FoldedVector, b: &FoldedVector) -> Result<Rational> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    Ok(crate::linalg::bilinear(&folded_gram(a.rank()), &a.coords, &b.coords))
}

/// `ρ_i = ½⟨(α_i)_0, (α_i)_0⟩`.
pub fn rho(l: usize, i: usize) -> Result<Rational> {
    if i == 0 || i > l {
        return Err(Error::IndexOutOfRange { index: i, max: l });
    }
    Ok(&folded_gram(l)[i - 1][i - 1] / int(2))
}

/// All `2l(2l+1)` roots `±α_i^{(j)}`.
pub fn enumerate_roots(l: usize) -> Vec<SignedRoot> {
    let mut out = Vec::with_capacity(2 * l * (2 * l + 1));
    for sign in [RootSign::Positive, RootSign::Negative] {
        for i in 1..=2 * l {
            for j in 1..=2 * l - i + 1 {
                out.push(SignedRoot { sign, interval: RootInterval { i, j } });
            }
        }
    }
    out
}

/// How many of `α_l`, `α_{l+1}` the interval contains.
pub fn contains_middle(r: &RootInterval, l: usize) -> MiddleContent {
    match (r.contains(l), r.contains(l + 1)) {
        (true, true) => MiddleContent::Both,
        (false, false) => MiddleContent::Neither,
        _ => MiddleContent::ExactlyOne,
    }
}

/// Representative of `c + kQ_0` with coordinates reduced into `0..k`.
pub fn coset_class(c: &FoldedVector, k: usize) -> Result<Vec<i64>> {
    let k = k as i64;
    c.coords
        .iter()
        .map(|x| {
            rational::as_integer(x)
                .map(|n| n.rem_euclid(k))
                .ok_or_else(|| Error::NotInFoldedLattice(c.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folded_gram_small_ranks() {
        assert_eq!(folded_gram(1), vec![vec![rat(1, 2)]]);
        assert_eq!(
            folded_gram(2),
            vec![vec![int(1), rat(-1, 2)], vec![rat(-1, 2), rat(1, 2)]]
        );
    }

    #[test]
    fn nu_of_interval() {
        let l = 3;
        for i in 1..=2 * l {
            for j in 1..=2 * l - i + 1 {
                let r = RootInterval::new(l, i, j).unwrap();
                assert_eq!(nu(&r.vector(l)), r.nu(l).vector(l));
            }
        }
    }
}
