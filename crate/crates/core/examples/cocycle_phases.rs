//! Commutator maps and the two cocycles on simple roots.

use fermionic_characters::cocycle;
use fermionic_characters::model::{self, LatticeVector};

fn main() {
    let l = 2;
    let simple: Vec<LatticeVector> = (1..=2 * l).map(|i| LatticeVector::simple(l, i).unwrap()).collect();
    println!("a b | C0 C | eps_C0 eps_C | eps_C0(nu a, nu b)");
    for (i, a) in simple.iter().enumerate() {
        for (j, b) in simple.iter().enumerate() {
            println!(
                "{} {} | {} {} | {} {} | {}",
                i + 1,
                j + 1,
                cocycle::c0(a, b).unwrap(),
                cocycle::c(a, b).unwrap(),
                cocycle::eps_c0(a, b).unwrap(),
                cocycle::eps_c(a, b).unwrap(),
                cocycle::eps_c0(&model::nu(a), &model::nu(b)).unwrap()
            );
        }
    }
}
