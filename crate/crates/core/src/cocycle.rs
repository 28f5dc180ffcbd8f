//! Commutator maps, bilinear 2-cocycles and the phases of the lifted
//! involution, all valued in the fourth roots of unity.

use std::fmt;
use std::ops::Mul;

use crate::error::Result;
use crate::model::{self, contains_middle, LatticeVector, MiddleContent, RootInterval, RootSign};

/// `ζ^exp` with `ζ` the imaginary unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourthRoot {
    exp: u8,
}

impl FourthRoot {
    pub const ONE: Self = Self { exp: 0 };
    pub const ZETA: Self = Self { exp: 1 };
    pub const MINUS_ONE: Self = Self { exp: 2 };
    pub const MINUS_ZETA: Self = Self { exp: 3 };

    pub fn from_exp(e: i64) -> Self {
        Self { exp: e.rem_euclid(4) as u8 }
    }

    pub fn exp(self) -> u8 {
        self.exp
    }

    pub fn inverse(self) -> Self {
        Self::from_exp(-(self.exp as i64))
    }

    pub fn pow(self, n: i64) -> Self {
        Self::from_exp(self.exp as i64 * n)
    }
}

impl Mul for FourthRoot {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        Self::from_exp(self.exp as i64 + rhs.exp as i64)
    }
}

impl fmt::Display for FourthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.exp as usize])
    }
}

/// `(−1)^{⟨a,b⟩}`.
pub fn c0(a: &LatticeVector, b: &LatticeVector) -> Result<FourthRoot> {
    Ok(FourthRoot::from_exp(2 * model::gram(a, b)?.rem_euclid(2)))
}

/// `∏_{j=0}^{3} (−ζ^j)^{⟨ν^j a, b⟩}`.
pub fn c(a: &LatticeVector, b: &LatticeVector) -> Result<FourthRoot> {
    let mut acc = FourthRoot::ONE;
    let mut shifted = a.clone();
    for j in 0..4 {
        let base = FourthRoot::from_exp(2 + j);
        acc = acc * base.pow(model::gram(&shifted, b)?);
        shifted = model::nu(&shifted);
    }
    Ok(acc)
}

/// Bilinear extension of `ε(α_i, α_j) = 1` for `i ≤ j` and
/// `(−1)^{⟨α_i,α_j⟩}` for `i > j`.
pub fn eps_c0(a: &LatticeVector, b: &LatticeVector) -> Result<FourthRoot> {
    model::gram(a, b)?;
    let l = a.rank();
    let mut parity = 0i64;
    for i in 0..2 * l {
        for j in 0..i {
            let (ai, bj) = (a.coords[i], b.coords[j]);
            if ai == 0 || bj == 0 {
                continue;
            }
            let g = model::gram(&LatticeVector::simple(l, i + 1)?, &LatticeVector::simple(l, j + 1)?)?;
            parity += ai * bj * g;
        }
    }
    Ok(FourthRoot::from_exp(2 * parity.rem_euclid(2)))
}

/// `ε_C(a,b) = (−ζ)^{−⟨ν^{−1}a, b⟩} ε_{C_0}(a,b)`.
pub fn eps_c(a: &LatticeVector, b: &LatticeVector) -> Result<FourthRoot> {
    let twist = model::gram(&model::nu(a), b)?;
    Ok(FourthRoot::MINUS_ZETA.pow(-twist) * eps_c0(a, b)?)
}

/// Phase `φ(j, ±α_i^{(j')})` picked up by `e_{±α}` under the `j`-th power
/// of the lifted involution.
pub fn nu_hat_phase(j: i64, sign: RootSign, r: &RootInterval, l: usize) -> FourthRoot {
    match contains_middle(r, l) {
        MiddleContent::Neither => FourthRoot::MINUS_ONE.pow(j),
        MiddleContent::ExactlyOne => match sign {
            RootSign::Positive => FourthRoot::ZETA.pow(j),
            RootSign::Negative => FourthRoot::MINUS_ZETA.pow(j),
        },
        MiddleContent::Both => FourthRoot::ONE,
    }
}
