//! Two positive definite binary forms of determinant 23 that share a genus
//! but are not isometric: the smallest nonzero norms are 2 and 4.
//!
//! This is the lattice shadow of K3 surfaces with isometric transcendental
//! lattices and different Néron-Severi lattices.

use fmpartners::lattice::{Lattice, SearchLimits};

fn main() {
    let limits = SearchLimits::default();
    let x = Lattice::from_rows(&[[2, 1], [1, 12]]).unwrap();
    let y = Lattice::from_rows(&[[4, 1], [1, 6]]).unwrap();

    println!("det {} vs {}", x.determinant(), y.determinant());
    println!("min {:?} vs {:?}", x.minimum(), y.minimum());

    let genus = x.same_genus(&y, &limits).unwrap();
    println!("genus:    {}", serde_json::to_string(&genus).unwrap());
    let iso = x.isometric(&y, &limits);
    println!("isometry: {}", serde_json::to_string(&iso).unwrap());

    // A change of basis of x is found again, with a witness.
    let z = Lattice::from_rows(&[[2, 3], [3, 16]]).unwrap();
    let found = x.isometric(&z, &limits);
    println!(
        "x ≅ [[2,3],[3,16]]: {}",
        serde_json::to_string(&found).unwrap()
    );

    // Indefinite forms fall back to a bounded search.
    let h = Lattice::hyperbolic();
    let h_other = Lattice::from_rows(&[[0, 1], [1, 0]]).unwrap();
    println!(
        "U ≅ [[0,1],[1,0]]: {}",
        serde_json::to_string(&h.isometric(&h_other, &limits)).unwrap()
    );
}
