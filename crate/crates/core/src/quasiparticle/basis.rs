use num_traits::{ToPrimitive, Zero};

use super::types::{
    ChargeProfile, ChargeType, HeisenbergMonomial, QPMonomial, StandardBasisElement,
};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::model::{self, FoldedVector, ModelParams};
use crate::rational::{floor_i64, int, rat, Rational};

/// Right-hand side of the boundary condition for particle `p` (0-based) of
/// colour `i` (0-based):
/// `−(2p−1)ρ_i n_{p,i} + ½ Σ_q min{n_{p,i}, n_{q,i−1}}`.
pub fn mode_upper_bound(charge: &ChargeType, rho: &Rational, i: usize, p: usize) -> Rational {
    let n = charge.colors[i][p];
    let interaction: u32 = if i == 0 {
        0
    } else {
        charge.colors[i - 1].iter().map(|&m| m.min(n)).sum()
    };
    -(int(2 * p as i64 + 1) * rho * int(n as i64)) + rat(interaction as i64, 2)
}

/// Quarter-unit integer view of one colour's data.
struct Particle {
    color: usize,
    charge: u32,
    /// `4ρ_i`.
    rho4: i64,
    /// Boundary bound in quarter units.
    upper4: i64,
    /// Whether the previous particle of this colour has the same charge.
    tied: bool,
}

fn quarter_rhos(l: usize) -> Vec<i64> {
    (1..=l)
        .map(|i| {
            let r = model::rho(l, i).expect("colour in range") * int(4);
            r.to_integer().to_i64().filter(|_| r.is_integer()).expect("4ρ is an integer")
        })
        .collect()
}

fn particles(charge: &ChargeType, rho4: &[i64]) -> Vec<Particle> {
    let l = charge.rank();
    let mut out = Vec::new();
    for i in 0..l {
        let rho = rat(rho4[i], 4);
        for (p, &n) in charge.colors[i].iter().enumerate() {
            let upper = mode_upper_bound(charge, &rho, i, p) * int(4);
            out.push(Particle {
                color: i,
                charge: n,
                rho4: rho4[i],
                upper4: upper.to_integer().to_i64().expect("quarter-integral bound"),
                tied: p > 0 && charge.colors[i][p - 1] == n,
            });
        }
    }
    out
}

/// Walks every mode assignment of a fixed charge type with `−Σm ≤ budget4/4`.
fn walk_modes(charge: &ChargeType, rho4: &[i64], budget4: i64, visit: &mut impl FnMut(&QPMonomial)) {
    let ps = particles(charge, rho4);
    let mut rest = vec![0i64; ps.len() + 1];
    for idx in (0..ps.len()).rev() {
        rest[idx] = rest[idx + 1] - ps[idx].upper4;
    }
    if rest[0] > budget4 {
        return;
    }
    let mut modes = vec![0i64; ps.len()];
    descend(charge, &ps, &rest, budget4, 0, 0, &mut modes, visit);
}

#[allow(clippy::too_many_arguments)]
fn descend(
    charge: &ChargeType,
    ps: &[Particle],
    rest: &[i64],
    budget4: i64,
    idx: usize,
    used4: i64,
    modes: &mut Vec<i64>,
    visit: &mut impl FnMut(&QPMonomial),
) {
    if idx == ps.len() {
        let l = charge.rank();
        let mut energy = vec![Vec::new(); l];
        for (p, m) in ps.iter().zip(modes.iter()) {
            energy[p.color].push(rat(*m, 4));
        }
        visit(&QPMonomial { charge: charge.clone(), energy });
        return;
    }
    let part = &ps[idx];
    let mut upper = part.upper4;
    if part.tied {
        upper = upper.min(modes[idx - 1] - 2 * part.rho4 * part.charge as i64);
    }
    // Largest admissible mode on the lattice ρn + ½Z.
    let residue = (part.rho4 * part.charge as i64).rem_euclid(2);
    if upper.rem_euclid(2) != residue {
        upper -= 1;
    }
    let mut m = upper;
    while used4 - m + rest[idx + 1] <= budget4 {
        modes[idx] = m;
        descend(charge, ps, rest, budget4, idx + 1, used4 - m, modes, visit);
        m -= 2;
    }
}

fn min_kernel(cap: usize) -> Matrix {
    (1..=cap)
        .map(|s| (1..=cap).map(|t| int(s.min(t) as i64)).collect())
        .collect()
}

fn parafermion_kernel(k: usize) -> Matrix {
    let kk = k as i64;
    (1..k)
        .map(|s| {
            (1..k)
                .map(|t| int(s.min(t) as i64) - rat((s * t) as i64, kk))
                .collect()
        })
        .collect()
}

/// Coordinate bounds for `½xᵀMx ≤ bound`: `x_i² ≤ 2·bound·(M⁻¹)_{ii}`.
fn box_bounds(m: &Matrix, bound: &Rational) -> Vec<u32> {
    let inv = linalg::inverse(m).expect("positive definite kernel");
    (0..m.len())
        .map(|i| {
            let limit = int(2) * bound * &inv[i][i];
            let mut x: u32 = 0;
            while int(((x + 1) * (x + 1)) as i64) <= limit {
                x += 1;
            }
            x
        })
        .collect()
}

/// Calls `f` on every profile in the box `0 ≤ p ≤ bounds`.
fn for_each_profile(l: usize, cap: usize, bounds: &[u32], mut f: impl FnMut(ChargeProfile)) {
    let dims = l * cap;
    let mut x = vec![0u32; dims];
    loop {
        let counts = (0..l).map(|i| x[i * cap..(i + 1) * cap].to_vec()).collect();
        f(ChargeProfile::new(counts));
        let mut pos = 0;
        loop {
            if pos == dims {
                return;
            }
            if x[pos] < bounds[pos] {
                x[pos] += 1;
                break;
            }
            x[pos] = 0;
            pos += 1;
        }
    }
}

/// Folded colour weight `c = Σ_i r_i (α_i)_0`.
fn color_weight(r: &[i64]) -> FoldedVector {
    FoldedVector::from_integers(r)
}

fn conformal_shift(r: &[i64], k: usize) -> Rational {
    let c = color_weight(r);
    model::folded_inner(&c, &c).expect("same rank") / int(2 * k as i64)
}

/// All monomials with charges `≤ charge_cap` satisfying the three basis
/// conditions and `−Σm ≤ energy_bound`.
pub fn enumerate_bw(
    params: &ModelParams,
    charge_cap: usize,
    energy_bound: &Rational,
    mut visit: impl FnMut(&QPMonomial),
) {
    let l = params.l;
    if charge_cap == 0 {
        if *energy_bound >= Rational::zero() {
            visit(&QPMonomial::empty(l));
        }
        return;
    }
    let rho4 = quarter_rhos(l);
    let kernel = linalg::kronecker(&model::folded_gram(l), &min_kernel(charge_cap));
    let bounds = box_bounds(&kernel, energy_bound);
    let budget4 = floor_i64(&(energy_bound * int(4)));
    for_each_profile(l, charge_cap, &bounds, |profile| {
        walk_modes(&profile.charge_type(), &rho4, budget4, &mut visit);
    });
}

/// All monomials with charges `≤ k−1` satisfying the basis conditions and
/// parafermionic energy `−Σm − ⟨c,c⟩/2k ≤ bound`.
pub fn enumerate_bw_parafermionic(params: &ModelParams, bound: &Rational, mut visit: impl FnMut(&QPMonomial)) {
    let (l, k) = (params.l, params.k);
    if k == 1 {
        if *bound >= Rational::zero() {
            visit(&QPMonomial::empty(l));
        }
        return;
    }
    let cap = k - 1;
    let rho4 = quarter_rhos(l);
    let kernel = linalg::kronecker(&model::folded_gram(l), &parafermion_kernel(k));
    let bounds = box_bounds(&kernel, bound);
    for_each_profile(l, cap, &bounds, |profile| {
        let shift = conformal_shift(&profile.color_type(), k);
        let budget4 = floor_i64(&((bound + &shift) * int(4)));
        walk_modes(&profile.charge_type(), &rho4, budget4, &mut |m: &QPMonomial| {
            if parafermion_energy(m, k) <= *bound {
                visit(m);
            }
        });
    });
}

/// `−Σm − ⟨c,c⟩/2k` with `c` the folded colour weight.
pub fn parafermion_energy(m: &QPMonomial, k: usize) -> Rational {
    m.energy() - conformal_shift(&m.charge.color_type(), k)
}

/// `Σ n_t m_t` over all colours.
pub fn heisenberg_energy(h: &HeisenbergMonomial) -> Rational {
    h.colors
        .iter()
        .flatten()
        .map(|(m, n)| m * int(*n as i64))
        .sum()
}

/// Partitions of at most `max` into positive parts, as `(part, multiplicity)`
/// with decreasing parts, grouped with their totals.
fn partitions_up_to(max: i64) -> Vec<(i64, Vec<(i64, u32)>)> {
    fn rec(remaining: i64, largest: i64, cur: &mut Vec<(i64, u32)>, total: i64, out: &mut Vec<(i64, Vec<(i64, u32)>)>) {
        out.push((total, cur.clone()));
        for part in (1..=largest.min(remaining)).rev() {
            for mult in 1..=(remaining / part) {
                cur.push((part, mult as u32));
                rec(remaining - part * mult, part - 1, cur, total + part * mult, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(max, max, &mut Vec::new(), 0, &mut out);
    out
}

/// All Heisenberg monomials with `Σ n_t m_t ≤ energy_bound`.
pub fn enumerate_bh(l: usize, energy_bound: &Rational, mut visit: impl FnMut(&HeisenbergMonomial)) {
    if *energy_bound < Rational::zero() {
        return;
    }
    let max = floor_i64(&(energy_bound * int(2)));
    let parts = partitions_up_to(max);
    let mut chosen: Vec<usize> = Vec::with_capacity(l);
    fn rec(
        l: usize,
        parts: &[(i64, Vec<(i64, u32)>)],
        left: i64,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&HeisenbergMonomial),
    ) {
        if chosen.len() == l {
            let colors = chosen
                .iter()
                .map(|&idx| parts[idx].1.iter().map(|&(p, n)| (rat(p, 2), n)).collect())
                .collect();
            visit(&HeisenbergMonomial { colors });
            return;
        }
        for (idx, (total, _)) in parts.iter().enumerate() {
            if *total <= left {
                chosen.push(idx);
                rec(l, parts, left - total, chosen, visit);
                chosen.pop();
            }
        }
    }
    rec(l, &parts, max, &mut chosen, &mut visit);
}

/// Sign of the cross term `⟨μ_0, c_0(b)⟩` in the degree of `e_μ h b v_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossTermSign {
    Plus,
    Minus,
}

/// The convention that reproduces the level-one module; see the acceptance suite.
pub const STANDARD_CROSS_TERM: CrossTermSign = CrossTermSign::Plus;

/// Degree and `h_0`-weight of `e_μ h b v_0` from its parts.
pub fn standard_degree_parts(
    mu: &[i64],
    h_energy: &Rational,
    b: &QPMonomial,
    k: usize,
    sign: CrossTermSign,
) -> (Rational, Vec<i64>) {
    let r = b.charge.color_type();
    let y: Vec<i64> = mu.iter().zip(&r).map(|(m, c)| k as i64 * m + c).collect();
    let mu0 = FoldedVector::from_integers(mu);
    let c0 = color_weight(&r);
    let cross = model::folded_inner(&mu0, &c0).expect("same rank");
    let translation = model::folded_inner(&mu0, &mu0).expect("same rank") * rat(k as i64, 2);
    let cross = match sign {
        CrossTermSign::Plus => cross,
        CrossTermSign::Minus => -cross,
    };
    (h_energy + b.energy() + cross + translation, y)
}

pub fn standard_degree(
    e: &StandardBasisElement,
    params: &ModelParams,
    sign: CrossTermSign,
) -> Result<(Rational, Vec<i64>)> {
    let l = params.l;
    if e.mu.rank() != l || e.b.rank() != l || e.h.colors.len() != l {
        return Err(Error::RankMismatch { left: l, right: e.mu.rank() });
    }
    if e.mu.coords[l..].iter().any(|&c| c != 0) {
        return Err(Error::MalformedMonomial("μ must lie in Zα_1 ⊕ … ⊕ Zα_l".into()));
    }
    e.h.validate()?;
    let mu = &e.mu.coords[..l];
    Ok(standard_degree_parts(mu, &heisenberg_energy(&e.h), &e.b, params.k, sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_small() {
        let p = partitions_up_to(4);
        let at4 = p.iter().filter(|(t, _)| *t == 4).count();
        assert_eq!(at4, 5);
        assert_eq!(p.len(), 1 + 1 + 2 + 3 + 5);
    }
}
