//! The exact bijection between upper-triangular factors and inner
//! products: instantiate a catalog metric family, recover its factor, and
//! round-trip a random matrix through both directions.

use lie4::catalog::{AlgebraName, Catalog};
use lie4::expr::env;
use lie4::linalg::{rat, rint, RatMat, UpperFactor};
use lie4::metrics::{instantiate_family, phi, phi_inverse};

fn main() {
    let cat = Catalog::builtin();
    let f = &cat.algebra(AlgebraName::A33pA1).families[1];
    let m = instantiate_family(f, &env(&[("alpha", rint(2)), ("gamma", rint(1))])).unwrap();
    println!("metric {} instantiated:", f.case_name);
    for row in m.entries_to_strings() {
        println!("  {row:?}");
    }
    match phi_inverse(&m).unwrap() {
        UpperFactor::Rational(u) => println!("factor recovered exactly:\n{u:?}"),
        UpperFactor::Float(_) => println!("factor needed the float path"),
    }

    // a round trip that stays rational end to end
    let mut u = RatMat::identity(4);
    u.set(0, 0, rat(3, 2));
    u.set(0, 3, rat(-7, 5));
    u.set(1, 2, rat(1, 3));
    let m = phi(&u).unwrap();
    let back = phi_inverse(&m).unwrap();
    assert_eq!(back, UpperFactor::Rational(u));
    println!("round trip: exact");
}
