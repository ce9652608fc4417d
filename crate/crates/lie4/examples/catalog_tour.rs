//! Walk the built-in catalog: brackets, parameter domains, and the
//! automorphism templates where they exist.

use lie4::catalog::{get_aut_template, AlgebraId, AlgebraName, Catalog};

fn main() {
    let cat = Catalog::builtin();
    for &name in &AlgebraName::ALL {
        let spec = cat.algebra(name);
        println!("{} ({})", name.as_str(), spec.group);
        for b in &spec.brackets {
            println!("  [e{}, e{}] += ({}) e{}", b.i, b.j, b.coeff, b.k);
        }
        let id = AlgebraId::canonical(name);
        match get_aut_template(&cat, &id) {
            Ok(t) => println!("  automorphism template: {} branch(es)", t.branches.len()),
            Err(_) => println!("  no closed-form automorphism template"),
        }
        for f in &spec.families {
            let params: Vec<&str> = f.params.iter().map(|p| p.name.as_str()).collect();
            println!("  metric {} with params {:?}", f.case_name, params);
        }
    }
}
