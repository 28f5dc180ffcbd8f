use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::model::{self, LatticeVector};
use crate::rational::{int, rat, Rational};

/// Per colour, charges in weakly decreasing order (`p = 1` first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChargeType {
    pub colors: Vec<Vec<u32>>,
}

/// Per colour, the transposed partition `r^{(1)} ≥ r^{(2)} ≥ …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualChargeType {
    pub colors: Vec<Vec<u32>>,
}

/// `counts[i][s-1]` is the number of colour-`i` quasi-particles of charge `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargeProfile {
    pub counts: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPMonomial {
    pub charge: ChargeType,
    /// `energy[i][p]` is the mode of the particle with charge `charge.colors[i][p]`.
    pub energy: Vec<Vec<Rational>>,
}

/// Per colour, `(mode, multiplicity)` pairs with strictly decreasing positive
/// half-integer modes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HeisenbergMonomial {
    pub colors: Vec<Vec<(Rational, u32)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardBasisElement {
    /// Element of `Zα_1 ⊕ … ⊕ Zα_l` inside the A(2l) lattice.
    pub mu: LatticeVector,
    pub h: HeisenbergMonomial,
    pub b: QPMonomial,
}

/// How the modes of one colour are required to be ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergyOrdering {
    /// Modes weakly decrease along runs of equal charge only.
    EqualChargeRuns,
    /// Modes weakly decrease along the whole colour sequence.
    WholeColor,
}

pub fn partition_transpose(parts: &[u32]) -> Vec<u32> {
    let largest = parts.first().copied().unwrap_or(0);
    (1..=largest)
        .map(|s| parts.iter().filter(|&&n| n >= s).count() as u32)
        .collect()
}

pub fn transpose(c: &ChargeType) -> DualChargeType {
    DualChargeType { colors: c.colors.iter().map(|p| partition_transpose(p)).collect() }
}

impl DualChargeType {
    pub fn charge_type(&self) -> ChargeType {
        ChargeType { colors: self.colors.iter().map(|p| partition_transpose(p)).collect() }
    }
}

impl ChargeType {
    pub fn new(colors: Vec<Vec<u32>>) -> Result<Self> {
        for c in &colors {
            if c.contains(&0) || c.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::MalformedMonomial(format!("charges {c:?}")));
            }
        }
        Ok(Self { colors })
    }

    pub fn empty(l: usize) -> Self {
        Self { colors: vec![Vec::new(); l] }
    }

    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    /// `r_i = Σ_p n_{p,i}`.
    pub fn color_type(&self) -> Vec<i64> {
        self.colors.iter().map(|c| c.iter().map(|&n| n as i64).sum()).collect()
    }

    pub fn max_charge(&self) -> u32 {
        self.colors.iter().flat_map(|c| c.first().copied()).max().unwrap_or(0)
    }

    /// Multiplicities `p_i^{(s)}` for `s = 1..=cap`.
    pub fn profile(&self, cap: usize) -> ChargeProfile {
        let counts = self
            .colors
            .iter()
            .map(|c| (1..=cap as u32).map(|s| c.iter().filter(|&&n| n == s).count() as u32).collect())
            .collect();
        ChargeProfile { counts }
    }
}

impl ChargeProfile {
    pub fn new(counts: Vec<Vec<u32>>) -> Self {
        Self { counts }
    }

    pub fn rank(&self) -> usize {
        self.counts.len()
    }

    pub fn cap(&self) -> usize {
        self.counts.first().map_or(0, Vec::len)
    }

    /// The unique charge type with these multiplicities.
    pub fn charge_type(&self) -> ChargeType {
        let colors = self
            .counts
            .iter()
            .map(|c| {
                let mut v = Vec::new();
                for (idx, &m) in c.iter().enumerate().rev() {
                    v.extend(std::iter::repeat_n(idx as u32 + 1, m as usize));
                }
                v
            })
            .collect();
        ChargeType { colors }
    }

    /// `p_i^{(s)} = r_i^{(s)} − r_i^{(s+1)}` from a dual charge type.
    pub fn from_dual(d: &DualChargeType, cap: usize) -> Self {
        let counts = d
            .colors
            .iter()
            .map(|r| {
                (0..cap)
                    .map(|s| {
                        let cur = r.get(s).copied().unwrap_or(0);
                        let next = r.get(s + 1).copied().unwrap_or(0);
                        cur - next
                    })
                    .collect()
            })
            .collect();
        Self { counts }
    }

    /// `Σ_s s·p_i^{(s)}` per colour.
    pub fn color_type(&self) -> Vec<i64> {
        self.counts
            .iter()
            .map(|c| c.iter().enumerate().map(|(s, &p)| (s as i64 + 1) * p as i64).sum())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().flatten().all(|&p| p == 0)
    }
}

/// `½ Σ_{i,j} ⟨(α_i)_0,(α_j)_0⟩ Σ_{s,t} min{s,t} p_i^{(s)} p_j^{(t)}`.
pub fn min_energy(p: &ChargeProfile) -> Rational {
    let gram = model::folded_gram(p.rank());
    let mut acc = Rational::zero();
    for (i, pi) in p.counts.iter().enumerate() {
        for (j, pj) in p.counts.iter().enumerate() {
            if gram[i][j].is_zero() {
                continue;
            }
            let mut inner = 0i64;
            for (s, &a) in pi.iter().enumerate() {
                for (t, &b) in pj.iter().enumerate() {
                    inner += (s.min(t) as i64 + 1) * a as i64 * b as i64;
                }
            }
            acc += &gram[i][j] * int(inner);
        }
    }
    acc / int(2)
}

impl QPMonomial {
    pub fn new(charge: ChargeType, energy: Vec<Vec<Rational>>) -> Result<Self> {
        let shapes_match = charge.colors.len() == energy.len()
            && charge.colors.iter().zip(&energy).all(|(c, e)| c.len() == e.len());
        if !shapes_match {
            return Err(Error::MalformedMonomial("energy shape differs from charge shape".into()));
        }
        Ok(Self { charge, energy })
    }

    pub fn empty(l: usize) -> Self {
        Self { charge: ChargeType::empty(l), energy: vec![Vec::new(); l] }
    }

    pub fn rank(&self) -> usize {
        self.charge.rank()
    }

    pub fn particle_count(&self) -> usize {
        self.charge.colors.iter().map(Vec::len).sum()
    }

    /// `−Σ m_{p,i}`.
    pub fn energy(&self) -> Rational {
        -self.energy.iter().flatten().sum::<Rational>()
    }

    /// `Σ m_{p,i}` over all particles.
    pub fn mode_sum(&self) -> Rational {
        self.energy.iter().flatten().sum()
    }

    pub fn total_charge(&self) -> i64 {
        self.charge.color_type().iter().sum()
    }
}

impl HeisenbergMonomial {
    pub fn empty(l: usize) -> Self {
        Self { colors: vec![Vec::new(); l] }
    }

    pub fn validate(&self) -> Result<()> {
        for c in &self.colors {
            let half = rat(1, 2);
            for (m, n) in c {
                if !m.is_positive() || !(m / &half).is_integer() || *n == 0 {
                    return Err(Error::MalformedMonomial(format!("Heisenberg factor {m}^{n}")));
                }
            }
            if c.windows(2).any(|w| w[0].0 <= w[1].0) {
                return Err(Error::MalformedMonomial("Heisenberg modes must strictly decrease".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Colour index, 1-based.
    pub color: usize,
    /// Particle index, 1-based.
    pub particle: usize,
}

/// Per-condition diagnostics of [`check_conditions`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConditionReport {
    pub congruence: Vec<Violation>,
    pub boundary: Vec<Violation>,
    pub spacing: Vec<Violation>,
    pub ordering: Vec<Violation>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.congruence.is_empty()
            && self.boundary.is_empty()
            && self.spacing.is_empty()
            && self.ordering.is_empty()
    }
}

/// Checks mode congruence, the boundary bound with its interaction term,
/// and the spacing of equal neighbouring charges. `ordering` selects which
/// weak ordering of modes is imposed in addition.
pub fn check_conditions(m: &QPMonomial, ordering: EnergyOrdering) -> ConditionReport {
    let l = m.rank();
    let half = rat(1, 2);
    let mut report = ConditionReport::default();
    for i in 0..l {
        let rho = model::rho(l, i + 1).expect("colour index in range");
        let charges = &m.charge.colors[i];
        for (p, (&n, mode)) in charges.iter().zip(&m.energy[i]).enumerate() {
            let at = Violation { color: i + 1, particle: p + 1 };
            let offset = mode - &rho * int(n as i64);
            if !(&offset / &half).is_integer() {
                report.congruence.push(at);
            }
            if *mode > super::basis::mode_upper_bound(&m.charge, &rho, i, p) {
                report.boundary.push(at);
            }
            if p > 0 {
                let prev_n = charges[p - 1];
                let prev_m = &m.energy[i][p - 1];
                if prev_n == n {
                    let limit = prev_m - int(2) * &rho * int(n as i64);
                    if *mode > limit {
                        report.spacing.push(at);
                    }
                }
                let ordered = match ordering {
                    EnergyOrdering::EqualChargeRuns => prev_n != n || mode <= prev_m,
                    EnergyOrdering::WholeColor => mode <= prev_m,
                };
                if !ordered {
                    report.ordering.push(at);
                }
            }
        }
    }
    report
}

/// The linear order on monomials: charge types first, then energy types,
/// each compared colour by colour from colour 1 with a proper prefix
/// counting as smaller.
pub fn compare_monomials(a: &QPMonomial, b: &QPMonomial) -> Ordering {
    a.charge
        .colors
        .cmp(&b.charge.colors)
        .then_with(|| a.energy.cmp(&b.energy))
}

/// Multiplicity data first, then mode data, in the same scheme.
pub fn compare_heisenberg(a: &HeisenbergMonomial, b: &HeisenbergMonomial) -> Ordering {
    let mults = |h: &HeisenbergMonomial| -> Vec<Vec<u32>> {
        h.colors.iter().map(|c| c.iter().map(|(_, n)| *n).collect()).collect()
    };
    let modes = |h: &HeisenbergMonomial| -> Vec<Vec<Rational>> {
        h.colors.iter().map(|c| c.iter().map(|(m, _)| m.clone()).collect()).collect()
    };
    mults(a).cmp(&mults(b)).then_with(|| modes(a).cmp(&modes(b)))
}

/// Order on standard-module basis vectors of equal degree and weight: larger
/// total charge is smaller, then colour type, mode sum, monomial and
/// Heisenberg part.
pub fn compare_standard(a: &StandardBasisElement, b: &StandardBasisElement) -> Ordering {
    b.b.total_charge()
        .cmp(&a.b.total_charge())
        .then_with(|| a.b.charge.color_type().cmp(&b.b.charge.color_type()))
        .then_with(|| a.b.mode_sum().cmp(&b.b.mode_sum()))
        .then_with(|| compare_monomials(&a.b, &b.b))
        .then_with(|| compare_heisenberg(&a.h, &b.h))
}
