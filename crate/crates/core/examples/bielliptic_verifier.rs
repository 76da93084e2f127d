//! Rank reduction on bielliptic surfaces and the brute-force check that it
//! never runs out of shifts on admissible classes.

use fmpartners::bielliptic::{
    euler_bielliptic, is_admissible, rank_reduction, verify_divisibility_claim, BiellipticType,
    SheafClass,
};

fn main() {
    for (r, k, a) in [(2, 1, 1), (4, 2, 3), (6, 3, 1), (12, 2, 5)] {
        let m = rank_reduction(r, k, a).unwrap();
        println!(
            "r={r:>2} k={k} a={a}: M = {:?}, h = {}, M·(r, ka) = {:?}",
            m.matrix,
            m.h,
            m.apply([r, k * a])
        );
    }

    let t = BiellipticType::new(2, 2).unwrap();
    let v = SheafClass::new(4, 2, 2, 1);
    println!(
        "\n(4, 2A'+2B', 1) admissible on type (2, 2): {}",
        is_admissible(&v, &t)
    );
    println!("χ(v, v) = {}", euler_bielliptic(&v, &v));

    println!();
    for t in BiellipticType::all() {
        let rep = verify_divisibility_claim(&t, 16);
        println!(
            "type ({}, {}): {:>4} classes, {} counterexamples",
            t.n(),
            t.k(),
            rep.checked,
            rep.counterexamples.len() + rep.shift_failures.len()
        );
    }
}
