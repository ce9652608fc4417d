//! The similarity normal form for the one family without a matrix model:
//! lambda and c, with the exact eigenvalue verification.

use lie4::linalg::rat;
use lie4::realization::{sigma_not_similar_to_i, sigma_similarity};

fn main() {
    for a in [rat(1, 2), rat(-1, 2), rat(3, 4), rat(-1, 3), rat(9, 10)] {
        let (lambda, c, verified) = sigma_similarity(&a).unwrap();
        println!(
            "alpha = {a:5}: lambda = {lambda}, c = {c}, eigenvalues verified = {verified}, \
             distinct from the scalar form = {}",
            sigma_not_similar_to_i(&a).unwrap()
        );
    }
}
