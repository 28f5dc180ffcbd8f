//! Folded Gram matrix, the diagram automorphism and its projections.

use fermionic_characters::model::{self, LatticeVector};
use fermionic_characters::linalg;

fn main() {
    for l in 1..=4 {
        let a = model::folded_gram(l);
        let rows: Vec<String> = a
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        println!("l={l} folded Gram [{}] positive definite: {}", rows.join("; "), linalg::is_positive_definite(&a));
    }

    let l = 2;
    for i in 1..=2 * l {
        let alpha = LatticeVector::simple(l, i).unwrap();
        let image = model::nu(&alpha);
        println!(
            "alpha_{i} = {alpha}  nu -> {image}  fixed part {}  rho_{} = {}",
            model::project0(&alpha),
            i.min(2 * l + 1 - i),
            model::rho(l, i.min(2 * l + 1 - i)).unwrap()
        );
    }
    println!("roots of A(4): {}", model::enumerate_roots(l).len());
}
