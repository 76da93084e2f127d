//! Relative Jacobian candidates `J(b)` of an elliptic surface, for a range
//! of `λ`, together with the `SL₂(ℤ)` action on (rank, fibre degree).

use fmpartners::elliptic::{
    enumerate_partners, fm_action, normalize_jacobian, validate_transform, EllipticSurfaceData,
    RankDegree, TransformMatrix,
};

fn main() {
    for lambda in 1..=15 {
        let x = EllipticSurfaceData::new(lambda, true).unwrap();
        let p = enumerate_partners(&x).unwrap();
        let bound = if p.count_is_upper_bound { "≤" } else { "=" };
        println!(
            "λ = {lambda:>2}: count {bound} {}  residues {:?}",
            p.count, p.residues
        );
    }

    let x = EllipticSurfaceData::new(5, true).unwrap();
    println!(
        "\nJ(3, 7) on λ = 5 is J({})",
        normalize_jacobian(3, 7, &x).unwrap()
    );

    let m = TransformMatrix::new([[2, 1], [5, 3]]).unwrap();
    println!(
        "M = {:?} valid for λ = 5: {}",
        m.rows(),
        validate_transform(&m, &x).unwrap()
    );
    let point = RankDegree { r: 0, d: 1 };
    let image = fm_action(&m, point).unwrap();
    println!(
        "M·(0, 1) = ({}, {}): a point goes to a rank-{} sheaf",
        image.r, image.d, image.r
    );
    let back = fm_action(&m.inverse(), image).unwrap();
    assert_eq!(back, point);
}
