use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::matrix::IntMatrix;
use super::{GenusVerdict, Lattice, SearchLimits};
use crate::json;

/// The invariant that tells two lattices apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "invariant", rename_all = "snake_case")]
pub enum Separation {
    Rank,
    Signature,
    Parity,
    Determinant,
    DiscriminantGroup,
    DiscriminantForm,
    MinimumNorm {
        #[serde(with = "json::bigint")]
        left: BigInt,
        #[serde(with = "json::bigint")]
        right: BigInt,
    },
    /// Complete enumeration of candidate images found no isometry.
    ExhaustiveSearch,
}

impl std::fmt::Display for Separation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Separation::Rank => f.write_str("rank"),
            Separation::Signature => f.write_str("signature"),
            Separation::Parity => f.write_str("parity"),
            Separation::Determinant => f.write_str("determinant"),
            Separation::DiscriminantGroup => f.write_str("discriminant group"),
            Separation::DiscriminantForm => f.write_str("discriminant form"),
            Separation::MinimumNorm { left, right } => {
                write!(f, "minimum norm ({left} vs {right})")
            }
            Separation::ExhaustiveSearch => f.write_str("exhaustive search"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IsometryVerdict {
    /// `witnessᵀ · G₁ · witness = G₂` with `|det witness| = 1`.
    Isometric {
        witness: WitnessJson,
    },
    NotIsometric {
        separated_by: Separation,
    },
    /// No isometry with coefficients in `[-radius, radius]`.
    Inconclusive {
        radius: i64,
    },
}

/// Serializable wrapper for a witness matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessJson(pub IntMatrix);

impl Serialize for WitnessJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            self.0
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(json::BigIntJson).collect::<Vec<_>>()),
        )
    }
}

impl IsometryVerdict {
    pub fn witness(&self) -> Option<&IntMatrix> {
        match self {
            IsometryVerdict::Isometric { witness } => Some(&witness.0),
            _ => None,
        }
    }

    pub fn is_isometric(&self) -> bool {
        matches!(self, IsometryVerdict::Isometric { .. })
    }

    pub fn is_not_isometric(&self) -> bool {
        matches!(self, IsometryVerdict::NotIsometric { .. })
    }
}

/// Largest number of box vectors scanned by the indefinite search.
const BOX_LIMIT: u64 = 5_000_000;
/// Largest number of partial assignments tried by the indefinite search.
const NODE_BUDGET: u64 = 20_000_000;

pub(crate) fn isometric(a: &Lattice, b: &Lattice, limits: &SearchLimits) -> IsometryVerdict {
    let not = |s| IsometryVerdict::NotIsometric { separated_by: s };
    if a.rank() != b.rank() {
        return not(Separation::Rank);
    }
    if a == b {
        return found(IntMatrix::identity(a.rank()));
    }
    let sig = a.signature();
    if sig != b.signature() {
        return not(Separation::Signature);
    }
    if a.is_even() != b.is_even() {
        return not(Separation::Parity);
    }
    if sig.is_definite() {
        let (ma, mb) = (a.minimum(), b.minimum());
        if ma != mb {
            return not(Separation::MinimumNorm {
                left: ma.unwrap_or_default(),
                right: mb.unwrap_or_default(),
            });
        }
    }
    if a.determinant() != b.determinant() {
        return not(Separation::Determinant);
    }
    if a.discriminant_group() != b.discriminant_group() {
        return not(Separation::DiscriminantGroup);
    }
    if a.is_even() {
        if let Ok(GenusVerdict::Different { .. }) = a.same_genus(b, limits) {
            return not(Separation::DiscriminantForm);
        }
    }
    if sig.is_definite() {
        definite_search(a, b)
    } else {
        bounded_search(a, b, limits.radius)
    }
}

fn found(u: IntMatrix) -> IsometryVerdict {
    IsometryVerdict::Isometric {
        witness: WitnessJson(u),
    }
}

enum Search {
    Found(IntMatrix),
    Exhausted,
    BudgetHit,
}

/// Column `i` of the witness is the image of the `i`-th basis vector of `b`
/// in `a`; it must have norm `b[i][i]` and pair with earlier columns as
/// prescribed by `b`. Equal determinants force `det U = ±1`.
fn assign(
    a: &Lattice,
    target: &IntMatrix,
    pools: &[Vec<Vec<BigInt>>],
    mut budget: Option<u64>,
) -> Search {
    let n = target.rows();
    let mut chosen: Vec<&Vec<BigInt>> = Vec::with_capacity(n);
    fn extend<'a>(
        i: usize,
        a: &Lattice,
        target: &IntMatrix,
        pools: &'a [Vec<Vec<BigInt>>],
        chosen: &mut Vec<&'a Vec<BigInt>>,
        budget: &mut Option<u64>,
    ) -> Option<bool> {
        if i == target.rows() {
            return Some(true);
        }
        for v in &pools[i] {
            if let Some(b) = budget {
                *b = b.checked_sub(1)?;
            }
            if (0..i).all(|j| a.pair(v, chosen[j]) == target[(i, j)]) {
                chosen.push(v);
                if extend(i + 1, a, target, pools, chosen, budget)? {
                    return Some(true);
                }
                chosen.pop();
            }
        }
        Some(false)
    }
    match extend(0, a, target, pools, &mut chosen, &mut budget) {
        None => return Search::BudgetHit,
        Some(false) => return Search::Exhausted,
        Some(true) => {}
    }
    let mut u = IntMatrix::zeros(n, n);
    for (j, col) in chosen.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            u[(i, j)] = x.clone();
        }
    }
    debug_assert_eq!(u.transpose().mul(a.gram()).mul(&u), *target);
    debug_assert!(u.determinant().abs() == BigInt::from(1));
    Search::Found(u)
}

fn definite_search(a: &Lattice, b: &Lattice) -> IsometryVerdict {
    let target = b.gram();
    let n = b.rank();
    let bound = (0..n)
        .map(|i| target[(i, i)].abs())
        .max()
        .unwrap_or_default();
    let vectors = a.short_vectors(&bound).expect("definite");
    let pools: Vec<Vec<Vec<BigInt>>> = (0..n)
        .map(|i| {
            vectors
                .iter()
                .filter(|(_, norm)| *norm == target[(i, i)])
                .map(|(v, _)| v.clone())
                .collect()
        })
        .collect();
    match assign(a, target, &pools, None) {
        Search::Found(u) => found(u),
        _ => IsometryVerdict::NotIsometric {
            separated_by: Separation::ExhaustiveSearch,
        },
    }
}

fn bounded_search(a: &Lattice, b: &Lattice, radius: i64) -> IsometryVerdict {
    let inconclusive = IsometryVerdict::Inconclusive { radius };
    let n = a.rank();
    let side = (2 * radius.max(0) + 1) as u64;
    let total = (0..n).try_fold(1u64, |acc, _| {
        acc.checked_mul(side).filter(|&t| t <= BOX_LIMIT)
    });
    let Some(total) = total else {
        return inconclusive;
    };
    let gram: Option<Vec<Vec<i128>>> = a
        .gram()
        .to_rows()
        .into_iter()
        .map(|r| r.iter().map(|x| x.to_i128()).collect())
        .collect();
    let Some(gram) = gram else {
        return inconclusive;
    };
    let target = b.gram();
    let wanted: Vec<Option<i128>> = (0..n).map(|i| target[(i, i)].to_i128()).collect();

    let mut pools: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); n];
    let mut v = vec![0i64; n];
    for idx in 0..total {
        let mut rest = idx;
        for c in v.iter_mut() {
            *c = (rest % side) as i64 - radius;
            rest /= side;
        }
        let mut norm: i128 = 0;
        for i in 0..n {
            for j in 0..n {
                norm += v[i] as i128 * gram[i][j] * v[j] as i128;
            }
        }
        for (pool, want) in pools.iter_mut().zip(&wanted) {
            if *want == Some(norm) {
                pool.push(v.iter().map(|&c| BigInt::from(c)).collect());
            }
        }
    }
    // small coefficients first so witnesses stay readable
    for pool in &mut pools {
        pool.sort_by_key(|w| w.iter().map(|c| c.abs()).max());
    }
    match assign(a, target, &pools, Some(NODE_BUDGET)) {
        Search::Found(u) => found(u),
        Search::Exhausted | Search::BudgetHit => inconclusive,
    }
}
