//! Riemann-Roch on a K3 surface through the Mukai pairing.
//!
//! With `v = (r, c₁, ch₂ + r)` the Euler form is `χ(E, F) = −⟨v(E), v(F)⟩`.
//! Subtracting `r` instead breaks this already for `χ(𝒪, 𝒪) = 2`.

use fmpartners::lattice::Lattice;
use fmpartners::mukai::{self, IntersectionData, SignConvention, SurfaceChernData, SurfaceKind};

fn main() {
    let ns = Lattice::from_rows(&[[2, 1], [1, -2]]).unwrap();
    let kind = SurfaceKind::K3;
    let o = SurfaceChernData::structure_sheaf(2);
    let pt = SurfaceChernData::point(2);
    let line = SurfaceChernData::from_chern_classes(1, &[1, 0], 0, &ns).unwrap();
    let rank2 = SurfaceChernData::from_chern_classes(2, &[1, 1], 3, &ns).unwrap();
    let amb = IntersectionData::for_kind(ns.clone(), kind);

    for (name, e) in [("O", &o), ("pt", &pt), ("L", &line), ("E", &rank2)] {
        let v = mukai::mukai_vector(e, kind).unwrap();
        let sq = mukai::mukai_pairing(&v, &v, &ns).unwrap();
        let d: Vec<String> = v.d.iter().map(|x| x.to_string()).collect();
        println!(
            "v({name}) = ({}, [{}], {})   <v,v> = {sq}",
            v.r,
            d.join(", "),
            v.s
        );
    }

    println!();
    for (name, e, f) in [
        ("O,O", &o, &o),
        ("O,pt", &o, &pt),
        ("L,E", &line, &rank2),
        ("E,L", &rank2, &line),
    ] {
        let chi = mukai::euler_pairing(e, f, &amb).unwrap();
        let added = mukai::rr_sides(e, f, kind, &ns, SignConvention::Added).unwrap();
        let subtracted = mukai::rr_sides(e, f, kind, &ns, SignConvention::Subtracted).unwrap();
        println!(
            "chi({name}) = {chi:>3}   -<v,v'> with +r: {:>3}   with -r: {:>3}",
            added.minus_mukai, subtracted.minus_mukai
        );
    }
}
