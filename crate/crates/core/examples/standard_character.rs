//! Standard module character through three independent routes.

use fermionic_characters::rational::int;
use fermionic_characters::{characters, oracle, ModelParams};

fn main() {
    let params = ModelParams::new(1, 1, int(3)).unwrap();
    let formula = characters::char_standard(&params);
    let basis = oracle::oracle_standard(&params);
    let lattice = oracle::oracle_basic_module(&params).unwrap();
    let product = oracle::lepowsky_wilson_product(&params);
    for (q, c) in formula.y_column(&[0]) {
        println!("[y^0 q^{q}] = {c}");
    }
    println!("formula = basis: {}", formula == basis);
    println!("basis = lattice module: {}", basis == lattice);
    println!("basis = Fock factor times vacuum space: {}", basis == product);
}
