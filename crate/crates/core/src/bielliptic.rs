//! Numerical arithmetic on bielliptic surfaces.
//!
//! A bielliptic surface is `(A × B)/J` with `J = G ⊕ H`, `|G| = n` the order
//! of the canonical bundle and `|H| = k`. Its numerical lattice is
//! `ℤA' ⊕ ℤB'` with `A'² = B'² = 0`, `A'·B' = 1`, where `A = nA'` and
//! `B = kB'` are fibre classes. A pure class `dA'` lies in the image `Δ` of
//! push-forward from the canonical cover iff `n | d`, and `dB' ∈ Δ` iff
//! `k | d`.
//!
//! The image of a point under a Fourier-Mukai transform has class
//! `v = (r, aA' + bB', s)`; the constraints on such classes are collected in
//! [`is_admissible`]. When `r > 0`, [`rank_reduction`] builds the matrix
//! that moves `v` to rank zero along the fibration with fibre class `B`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BiellipticError {
    #[error("(n, k) = ({n}, {k}) is not a bielliptic type")]
    InvalidType { n: i64, k: i64 },
    #[error("rank must be positive, got {0}")]
    NonPositiveRank(i64),
    #[error("k must be positive, got {0}")]
    NonPositiveK(i64),
    #[error("no solution of x·r + y·ka = gcd(r, ka) with k | x (r = {r}, k = {k}, a = {a})")]
    NoValidShift { r: i64, k: i64, a: i64 },
    #[error("integer overflow")]
    Overflow,
}

/// The seven possible `(n, k)`.
pub const TYPES: [(i64, i64); 7] = [(2, 1), (3, 1), (4, 1), (6, 1), (2, 2), (3, 3), (4, 2)];

pub fn validate_type(n: i64, k: i64) -> bool {
    TYPES.contains(&(n, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiellipticType {
    n: i64,
    k: i64,
}

impl BiellipticType {
    pub fn new(n: i64, k: i64) -> Result<Self, BiellipticError> {
        if validate_type(n, k) {
            Ok(BiellipticType { n, k })
        } else {
            Err(BiellipticError::InvalidType { n, k })
        }
    }

    pub fn all() -> impl Iterator<Item = BiellipticType> {
        TYPES.iter().map(|&(n, k)| BiellipticType { n, k })
    }

    /// Order of `ω_X`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Order of the translation part `H`.
    pub fn k(&self) -> i64 {
        self.k
    }
}

/// `aA' + bB'` in `Num(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumClass {
    pub a: i64,
    pub b: i64,
}

impl NumClass {
    pub const A_PRIME: NumClass = NumClass { a: 1, b: 0 };
    pub const B_PRIME: NumClass = NumClass { a: 0, b: 1 };

    /// The fibre class `A = nA'`.
    pub fn fibre_a(t: &BiellipticType) -> NumClass {
        NumClass { a: t.n, b: 0 }
    }

    /// The fibre class `B = kB'`.
    pub fn fibre_b(t: &BiellipticType) -> NumClass {
        NumClass { a: 0, b: t.k }
    }
}

pub fn num_pairing(x: &NumClass, y: &NumClass) -> i64 {
    x.a * y.b + y.a * x.b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// Multiples of `A'`.
    A,
    /// Multiples of `B'`.
    B,
}

/// Membership of the pure class `d·A'` or `d·B'` in `Δ`.
pub fn delta_member_pure(d: i64, axis: Axis, t: &BiellipticType) -> bool {
    match axis {
        Axis::A => d % t.n == 0,
        Axis::B => d % t.k == 0,
    }
}

/// Numerical class `(r, c₁, s)` of a sheaf, with `s = ch₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SheafClass {
    pub r: i64,
    pub c1: NumClass,
    pub s: i64,
}

impl SheafClass {
    pub fn new(r: i64, a: i64, b: i64, s: i64) -> Self {
        SheafClass {
            r,
            c1: NumClass { a, b },
            s,
        }
    }
}

/// `χ(v, w) = r₁s₂ + r₂s₁ − c₁(v)·c₁(w)`: Riemann-Roch with `K ≡ 0` and
/// `χ(𝒪) = 0`.
pub fn euler_bielliptic(v: &SheafClass, w: &SheafClass) -> i64 {
    v.r * w.s + w.r * v.s - num_pairing(&v.c1, &w.c1)
}

/// Constraints on the class of the image of a point:
/// `r ≥ 0`, `rs = ab`, `n | r`, `gcd(r, a, b, s) = 1` and, when `k > 1`,
/// `k | a`, `k | b`, `k ∤ s`.
pub fn is_admissible(v: &SheafClass, t: &BiellipticType) -> bool {
    let (r, a, b, s) = (v.r, v.c1.a, v.c1.b, v.s);
    if r < 0 || r * s != a * b || r % t.n != 0 {
        return false;
    }
    if r.gcd(&a).gcd(&b).gcd(&s) != 1 {
        return false;
    }
    t.k == 1 || (a % t.k == 0 && b % t.k == 0 && s % t.k != 0)
}

/// `x·r + y·ka = h` with `k | x`, packaged as the matrix
/// `[[ka/h, −r/h], [x, y]]` which sends `(r, ka)` to `(0, h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReduction {
    pub matrix: [[i64; 2]; 2],
    pub h: i64,
}

impl RankReduction {
    pub fn x(&self) -> i64 {
        self.matrix[1][0]
    }

    pub fn y(&self) -> i64 {
        self.matrix[1][1]
    }

    pub fn determinant(&self) -> i64 {
        let m = self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn apply(&self, v: [i64; 2]) -> [i64; 2] {
        let m = self.matrix;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }
}

/// Extended Euclid: `(g, x, y)` with `g = gcd(p, q) ≥ 0` and `xp + yq = g`.
pub fn extended_gcd(p: i64, q: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (p, q);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Finds `x, y` with `xr + y·ka = h := gcd(r, ka)` and `k | x`.
///
/// Starting from the extended-Euclid solution, `(x, y) ↦ (x + ka/h, y − r/h)`
/// is tried at most `k` times; this reaches every residue of `x` mod `k`
/// reachable at all.
pub fn rank_reduction(r: i64, k: i64, a: i64) -> Result<RankReduction, BiellipticError> {
    if r <= 0 {
        return Err(BiellipticError::NonPositiveRank(r));
    }
    if k <= 0 {
        return Err(BiellipticError::NonPositiveK(k));
    }
    let ka = k.checked_mul(a).ok_or(BiellipticError::Overflow)?;
    let (h, mut x, mut y) = extended_gcd(r, ka);
    let (r_red, t_red) = (r / h, ka / h);
    for _ in 0..k {
        if x % k == 0 {
            return Ok(RankReduction {
                matrix: [[t_red, -r_red], [x, y]],
                h,
            });
        }
        x = x.checked_add(t_red).ok_or(BiellipticError::Overflow)?;
        y = y.checked_sub(r_red).ok_or(BiellipticError::Overflow)?;
    }
    Err(BiellipticError::NoValidShift { r, k, a })
}

/// Exponent of `k` in `x`; `None` for `x = 0`.
pub fn valuation(x: i64, k: i64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut x = x.abs();
    let mut v = 0;
    while x % k == 0 {
        x /= k;
        v += 1;
    }
    Some(v)
}

/// Outcome of checking `v_k(ka) ≤ v_k(r)` over a box of admissible classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub n: i64,
    pub k: i64,
    pub bound: i64,
    /// Admissible classes with `r > 0` in the box.
    pub checked: u64,
    /// Classes violating `v_k(ka) ≤ v_k(r)`.
    pub counterexamples: Vec<SheafClass>,
    /// Classes on which [`rank_reduction`] found no shift.
    pub shift_failures: Vec<SheafClass>,
}

impl DivisibilityReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty() && self.shift_failures.is_empty()
    }
}

/// Enumerates every admissible `(r, a, b, s)` with `0 < r ≤ bound` and
/// `|a|, |b|, |s| ≤ bound`, and checks the `k`-adic divisibility claim on
/// each. For `k = 1` the claim is vacuous, but the shift search is still
/// exercised.
pub fn verify_divisibility_claim(t: &BiellipticType, bound: i64) -> DivisibilityReport {
    let k = t.k();
    let mut report = DivisibilityReport {
        n: t.n(),
        k,
        bound,
        checked: 0,
        counterexamples: Vec::new(),
        shift_failures: Vec::new(),
    };
    for r in 1..=bound.max(0) {
        for a in -bound..=bound {
            for b in -bound..=bound {
                // rs = ab fixes s
                if (a * b) % r != 0 {
                    continue;
                }
                let s = a * b / r;
                if s.abs() > bound {
                    continue;
                }
                let v = SheafClass::new(r, a, b, s);
                if !is_admissible(&v, t) {
                    continue;
                }
                report.checked += 1;
                if k > 1 {
                    let ok = match (valuation(k * a, k), valuation(r, k)) {
                        (Some(vka), Some(vr)) => vka <= vr,
                        _ => false,
                    };
                    if !ok {
                        report.counterexamples.push(v);
                    }
                }
                if rank_reduction(r, k, a).is_err() {
                    report.shift_failures.push(v);
                }
            }
        }
    }
    report
}
