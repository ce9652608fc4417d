//! Recompute the full table of isometric-automorphism groups: every
//! algebra, every metric case, two parameter samples each.

use lie4::catalog::{AlgebraId, AlgebraName, Catalog};
use lie4::sample;
use lie4::stabilizer::isometry_report;

fn main() {
    let cat = Catalog::builtin();
    for &name in &AlgebraName::ALL {
        let spec = cat.algebra(name);
        if spec.template.is_empty() {
            println!("{:10} outside the real-rooted class; containment only", name.as_str());
            continue;
        }
        for f in &spec.families {
            for idx in 0..2 {
                let id = AlgebraId::new(name, sample::algebra_params(name, 7, idx)).unwrap();
                let mp = sample::metric_params(f, 7, idx);
                let r = isometry_report(&cat, &id, f, &mp).unwrap();
                println!(
                    "{:10} {:7} sample {idx}: |finite| = {:2}, dim = {}, {} ({})",
                    name.as_str(),
                    f.case_name,
                    r.stabilizer.finite_elements.len(),
                    r.stabilizer.continuous_dim,
                    r.stabilizer.label.as_str(),
                    if r.matched { "matches expectation" } else { "MISMATCH" },
                );
            }
        }
    }
}
