//! Partner reports across the classification of minimal surfaces.

use fmpartners::lattice::{Lattice, SearchLimits};
use fmpartners::partner::{compare, fm_partner_report, SurfaceClass, SurfaceDescriptor};

fn main() {
    let limits = SearchLimits::default();
    let mut surfaces = vec![
        SurfaceDescriptor::new(SurfaceClass::GeneralType),
        SurfaceDescriptor::new(SurfaceClass::RuledNonElliptic),
        SurfaceDescriptor::new(SurfaceClass::Enriques),
    ];
    let mut b = SurfaceDescriptor::new(SurfaceClass::Bielliptic);
    b.bielliptic_type = Some((4, 2));
    surfaces.push(b);
    let mut e = SurfaceDescriptor::new(SurfaceClass::EllipticNonzeroKodaira);
    e.lambda = Some(12);
    surfaces.push(e);

    // An abelian surface with NS = U and T = U ⊕ U.
    let u = Lattice::hyperbolic();
    surfaces.push(SurfaceDescriptor::with_lattices(
        SurfaceClass::Abelian,
        u.clone(),
        u.direct_sum(&u),
    ));

    for s in &surfaces {
        println!("== {}", s.class);
        print!("{}", fm_partner_report(s, &limits).unwrap());
    }

    println!("== k3 vs abelian");
    let k3 = SurfaceDescriptor::new(SurfaceClass::K3);
    let ab = SurfaceDescriptor::new(SurfaceClass::Abelian);
    print!("{}", compare(&k3, &ab, &limits).unwrap());

    println!("\n== JSON");
    println!(
        "{}",
        serde_json::to_string_pretty(&fm_partner_report(&surfaces[4], &limits).unwrap()).unwrap()
    );
}
