//! Parafermionic character and the kernel behind it.

use fermionic_characters::characters::{self, FermionicKernel};
use fermionic_characters::rational::int;
use fermionic_characters::{cli, oracle, ModelParams};

fn main() {
    let kernel = FermionicKernel::new(3).unwrap();
    println!("kernel k=3 positive definite: {}", kernel.is_positive_definite());
    let params = ModelParams::new(1, 3, int(2)).unwrap();
    let formula = characters::char_parafermionic(&params);
    print!("{}", cli::render_text(&formula));
    println!("matches enumeration: {}", formula == oracle::oracle_parafermionic(&params));
}
