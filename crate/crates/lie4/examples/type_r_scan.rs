//! Classify every catalog algebra by whether all adjoint operators are
//! real-rooted, at several random admissible parameter draws.

use lie4::catalog::{get_algebra, AlgebraId, AlgebraName, Catalog};
use lie4::lietheory::is_type_r;
use lie4::sample;

fn main() {
    let cat = Catalog::builtin();
    for &name in &AlgebraName::ALL {
        let mut verdicts = Vec::new();
        for idx in 0..5 {
            let id = AlgebraId::new(name, sample::algebra_params(name, 41, idx)).unwrap();
            let sc = get_algebra(&cat, &id).unwrap();
            verdicts.push(is_type_r(&sc));
        }
        assert!(verdicts.windows(2).all(|w| w[0] == w[1]));
        println!(
            "{:10} real-rooted: {}",
            name.as_str(),
            if verdicts[0] { "yes" } else { "no" }
        );
    }
}
