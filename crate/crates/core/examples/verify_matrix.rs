//! Runs every formula against its oracles over a small parameter grid.

use fermionic_characters::cli::{self, Which};
use fermionic_characters::rational::int;
use fermionic_characters::ModelParams;

fn main() {
    for (l, k) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)] {
        let params = ModelParams::new(l, k, int(2)).unwrap();
        for which in [Which::Principal, Which::Parafermionic, Which::Standard] {
            let (name, formula, oracles) = cli::verification_plan(which, &params).unwrap();
            for (oracle, series) in oracles {
                let verdict = match formula.first_mismatch(&series) {
                    None => "match".to_string(),
                    Some(m) => format!("mismatch {m}"),
                };
                println!("l={l} k={k} {name} vs {oracle}: {verdict}");
            }
        }
    }
}
