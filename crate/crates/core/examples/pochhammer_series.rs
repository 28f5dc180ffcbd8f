//! Inverse Pochhammer symbols in q^{1/2} against partition counts.

use fermionic_characters::qseries;
use fermionic_characters::rational::{int, rat};

fn main() {
    let trunc = int(5);
    for n in 0..=4 {
        let series = qseries::pochhammer_inv(n, 1, &trunc);
        let coeffs: Vec<String> = (0..=10)
            .map(|j| series.coefficient(&rat(j, 2), &[0]).to_string())
            .collect();
        let counts: Vec<String> = (0..=10).map(|j| qseries::partition_count(n, j).to_string()).collect();
        println!("n={n} series [{}] partitions [{}]", coeffs.join(" "), counts.join(" "));
    }
    let eta = qseries::pochhammer_inf_inv(1, &trunc);
    println!("1/(q^1/2)_inf: {} terms up to q^5", eta.len());
}
