//! Overlattices from isotropic subgroups of the discriminant group.

use fmpartners::lattice::{subgroup_count, Lattice, SearchLimits};

fn main() {
    let limits = SearchLimits::default();
    let h = Lattice::hyperbolic();
    for (name, l) in [
        ("U(2)", h.rescale(2).unwrap()),
        ("<4>", Lattice::from_rows(&[[4]]).unwrap()),
        ("U(2) ⊕ U", h.rescale(2).unwrap().direct_sum(&h)),
        (
            "A1^3",
            Lattice::from_rows(&[[2, 0, 0], [0, 2, 0], [0, 0, 2]]).unwrap(),
        ),
    ] {
        let even = l.overlattices(true, &limits).unwrap();
        let all = l.overlattices(false, &limits).unwrap();
        let subgroups = subgroup_count(&l, &limits).unwrap();
        println!(
            "{name}: {} even, {} integral, {} subgroups of A_L",
            even.len(),
            all.len(),
            subgroups
        );
        for o in &even {
            println!(
                "  index {}: {}  unimodular {}",
                o.index,
                o.lattice.gram(),
                o.lattice.is_unimodular()
            );
        }
    }
}
