//! Quasi-particle monomials and the combinatorial bases built from them.
//!
//! A monomial carries, for each colour `i`, charges `n_{1,i} ≥ n_{2,i} ≥ …`
//! and modes `m_{p,i}` aligned with them. The basis of the principal
//! subspace consists of the monomials satisfying the three conditions
//! checked by [`check_conditions`].

mod basis;
mod types;

pub use basis::{
    enumerate_bh, enumerate_bw, enumerate_bw_parafermionic, heisenberg_energy, mode_upper_bound,
    parafermion_energy, standard_degree, standard_degree_parts, CrossTermSign, STANDARD_CROSS_TERM,
};
pub use types::{
    check_conditions, compare_heisenberg, compare_monomials, compare_standard, min_energy,
    partition_transpose, transpose, ChargeProfile, ChargeType, ConditionReport, DualChargeType,
    EnergyOrdering, HeisenbergMonomial, QPMonomial, StandardBasisElement, Violation,
};
