//! Lists principal subspace quasi-particle monomials of low energy.

use fermionic_characters::quasiparticle::{self, enumerate_bw, EnergyOrdering};
use fermionic_characters::rational::rat;
use fermionic_characters::ModelParams;

fn main() {
    let params = ModelParams::new(1, 2, rat(3, 2)).unwrap();
    let mut count = 0;
    enumerate_bw(&params, params.k, &params.trunc, |m| {
        count += 1;
        let holds = quasiparticle::check_conditions(m, EnergyOrdering::EqualChargeRuns).holds();
        println!(
            "charges {:?} modes {:?} energy {} conditions hold: {holds}",
            m.charge.colors,
            m.energy.iter().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            m.energy()
        );
    });
    println!("{count} monomials with energy at most {}", params.trunc);
}
