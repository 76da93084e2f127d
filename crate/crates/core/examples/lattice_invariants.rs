//! Invariants of a few classical lattices: determinant, signature, parity and
//! the discriminant quadratic form on `L*/L`.
//!
//! ```text
//! cargo run --example lattice_invariants
//! ```

use fmpartners::json::format_rational;
use fmpartners::lattice::{smith_normal_form, Lattice};

fn show(name: &str, l: &Lattice) {
    let sig = l.signature();
    let form = l.discriminant_form();
    let group: Vec<String> = form.factors().iter().map(|d| format!("Z/{d}")).collect();
    println!("{name}");
    println!(
        "  det {}  signature ({}, {})  {}",
        l.determinant(),
        sig.positive,
        sig.negative,
        if l.is_even() { "even" } else { "odd" }
    );
    println!(
        "  A_L = {}",
        if group.is_empty() {
            "0".into()
        } else {
            group.join(" + ")
        }
    );
    if let Some(q) = form.generator_quadratic().filter(|q| !q.is_empty()) {
        let q: Vec<String> = q.iter().map(format_rational).collect();
        println!("  q on generators: {}", q.join(", "));
    }
    println!("  2-elementary: {}", l.is_two_elementary());
}

fn main() {
    let a1 = Lattice::from_rows(&[[2]]).unwrap();
    let u = Lattice::hyperbolic();
    let u2 = u.rescale(2).unwrap();
    let a2 = Lattice::from_rows(&[[2, -1], [-1, 2]]).unwrap();
    let d4 = Lattice::from_rows(&[[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]])
        .unwrap();

    show("A1 = <2>", &a1);
    show("U", &u);
    show("U(2)", &u2);
    show("A2", &a2);
    show("D4", &d4);
    show("U ⊕ A1(-1)", &u.direct_sum(&a1.rescale(-1).unwrap()));

    // Smith form U·G·V = D of the D4 Gram matrix, the source of A_L.
    let snf = smith_normal_form(d4.gram());
    println!("\nSmith form of D4: {}", snf.d);
    assert_eq!(snf.u.mul(d4.gram()).mul(&snf.v), snf.d);
}
