//! Affine Cartan data, root multiplicities and the Freudenthal check.

use fermionic_characters::kacmoody;
use fermionic_characters::rational::int;
use fermionic_characters::{characters, ModelParams};

fn main() {
    let l = 2;
    let gcm = kacmoody::build_gcm(l).unwrap();
    println!("Cartan matrix {:?}", gcm.entries);
    let (marks, comarks) = kacmoody::null_marks(&gcm).unwrap();
    println!("marks {marks:?} comarks {comarks:?}");
    let form = kacmoody::symmetrized_form(&gcm).unwrap();
    let delta: Vec<i64> = marks.clone();
    let doubled: Vec<i64> = marks.iter().map(|m| 2 * m).collect();
    let roots = kacmoody::root_multiplicities(&form, &doubled).unwrap();
    println!("mult(delta) = {}", roots.multiplicity(&delta));

    let params = ModelParams::new(l, 1, int(3)).unwrap();
    let reference = characters::char_standard(&params);
    let dictionary = kacmoody::calibrate_stable(&params, &reference).unwrap();
    println!("a_0 maps to q^{} y^{:?}", dictionary.qexp, dictionary.yexp);
    let depth = kacmoody::depth_for(&dictionary, &params.trunc);
    let weights = kacmoody::freudenthal(&params, depth).unwrap();
    let mapped = dictionary.apply(&weights, &params.trunc).unwrap();
    println!("Freudenthal series equals the formula: {}", mapped == reference);
}
