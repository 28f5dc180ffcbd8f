//! Principal subspace character from the fermionic formula.

use fermionic_characters::{characters, cli, oracle, ModelParams};
use fermionic_characters::rational::int;

fn main() {
    let params = ModelParams::new(1, 2, int(2)).unwrap();
    let formula = characters::char_principal(&params);
    print!("{}", cli::render_text(&formula));
    println!("matches enumeration: {}", formula == oracle::oracle_principal(&params));
}
