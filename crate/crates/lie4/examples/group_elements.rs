//! Build concrete group elements from the matrix models, multiply them
//! through the coordinate charts, and cross-check the tangent brackets.

use std::collections::BTreeMap;

use lie4::catalog::{AlgebraId, AlgebraName, Catalog};
use lie4::realization::{make_point, multiply, verify_bracket_match};

fn coords(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|&(k, v)| (k.into(), v)).collect()
}

fn main() {
    let id = AlgebraId::canonical(AlgebraName::A44);
    let p = make_point(&id, &coords(&[("w", 0.2), ("x", -1.0), ("y", 0.5), ("z", 1.0)])).unwrap();
    let q = make_point(&id, &coords(&[("w", -0.4), ("x", 0.3), ("y", 0.0), ("z", -0.5)])).unwrap();
    let r = multiply(&id, &p, &q).unwrap();
    println!("product coordinates: {:?}", r.coords);
    for row in 0..4 {
        let vals: Vec<f64> = (0..4).map(|c| r.matrix.get(row, c)).collect();
        println!("  {vals:?}");
    }

    let cat = Catalog::builtin();
    for name in [
        AlgebraName::A2p2A1,
        AlgebraName::TwoA2,
        AlgebraName::A44,
        AlgebraName::A47,
        AlgebraName::A49b,
    ] {
        let id = AlgebraId::canonical(name);
        println!(
            "{:7} tangent brackets reproduce the catalog: {}",
            name.as_str(),
            verify_bracket_match(&cat, &id).unwrap()
        );
    }
}
