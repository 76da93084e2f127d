//! Integral symmetric bilinear lattices.
//!
//! A [`Lattice`] is a nondegenerate symmetric Gram matrix over ℤ. Everything
//! here is exact: determinants by fraction-free elimination, signatures by
//! rational congruence diagonalisation, discriminant groups by Smith normal
//! form, discriminant forms with exact rationals.
//!
//! The finite searches (discriminant-form isomorphism, subgroup enumeration,
//! indefinite isometry) are bounded by [`SearchLimits`]; when a bound is hit
//! the answer is an explicit error or an `Inconclusive` verdict, never a
//! guess.

mod discriminant;
mod genus;
mod isometry;
pub mod matrix;
pub mod normal_form;
mod overlattice;
mod short_vectors;
mod signature;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use discriminant::{DiscriminantForm, GroupElement};
pub use genus::GenusVerdict;
pub use isometry::{IsometryVerdict, Separation};
pub use matrix::{IntMatrix, RatMatrix};
pub use normal_form::{hermite_normal_form, smith_normal_form, SmithForm};
pub use overlattice::{subgroup_count, Overlattice};

use crate::json::BigIntJson;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("gram matrix is empty")]
    Empty,
    #[error("gram matrix rows have different lengths")]
    Ragged,
    #[error("gram matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("gram matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("gram matrix is degenerate (determinant 0)")]
    Degenerate,
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("genus comparison is only implemented for even lattices")]
    OddLatticeUnsupported,
    #[error("discriminant group of order {order} exceeds the search cap {cap}")]
    GroupTooLarge { order: BigInt, cap: u64 },
    #[error("subgroup enumeration exceeded {limit} subgroups")]
    TooManySubgroups { limit: usize },
}

/// Bounds for the finite searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest discriminant group order searched exhaustively.
    pub group_cap: u64,
    /// Coefficient radius for the indefinite isometry search.
    pub radius: i64,
    /// Largest number of subgroups materialised by subgroup enumeration.
    pub max_subgroups: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            group_cap: 10_000,
            radius: 10,
            max_subgroups: 200_000,
        }
    }
}

/// Signature `(p, q)` of a nondegenerate form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
}

impl Signature {
    pub fn is_definite(&self) -> bool {
        self.positive == 0 || self.negative == 0
    }

    pub fn is_indefinite(&self) -> bool {
        !self.is_definite()
    }
}

/// A free ℤ-module of finite rank with a nondegenerate integral symmetric
/// bilinear form, given by its Gram matrix in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    gram: IntMatrix,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if gram.rows() == 0 {
            return Err(LatticeError::Empty);
        }
        if !gram.is_square() {
            return Err(LatticeError::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        for i in 0..gram.rows() {
            for j in 0..i {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(LatticeError::NotSymmetric { row: i, col: j });
                }
            }
        }
        if gram.determinant().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(Lattice { gram })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LatticeError> {
        if rows
            .iter()
            .any(|r| r.as_ref().len() != rows[0].as_ref().len())
        {
            return Err(LatticeError::Ragged);
        }
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    /// The hyperbolic plane with Gram `[[0, -1], [-1, 0]]`, the sign
    /// convention of the Mukai pairing on `H⁰ ⊕ H⁴`.
    pub fn hyperbolic() -> Self {
        Lattice {
            gram: IntMatrix::from_i64_rows(&[[0, -1], [-1, 0]]),
        }
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// Inner product of two coordinate vectors.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, y)
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.pair(x, x)
    }

    /// True iff every vector has even norm, i.e. all diagonal entries are even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % 2i32).is_zero())
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.determinant()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    pub fn signature(&self) -> Signature {
        let inertia = signature::inertia(&self.gram);
        debug_assert_eq!(inertia.zero, 0);
        Signature {
            positive: inertia.positive,
            negative: inertia.negative,
        }
    }

    /// Invariant factors of `L*/L`, each greater than one, in divisibility
    /// order. Empty for unimodular lattices.
    pub fn discriminant_group(&self) -> Vec<BigInt> {
        smith_normal_form(&self.gram)
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }

    pub fn discriminant_form(&self) -> DiscriminantForm {
        DiscriminantForm::of(self)
    }

    /// True iff `L*/L` is an elementary abelian 2-group (possibly trivial).
    pub fn is_two_elementary(&self) -> bool {
        self.discriminant_group()
            .iter()
            .all(|d| *d == BigInt::from(2))
    }

    /// Orthogonal direct sum with block-diagonal Gram matrix.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let (a, b) = (self.rank(), other.rank());
        let mut gram = IntMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                gram[(i, j)] = self.gram[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                gram[(a + i, a + j)] = other.gram[(i, j)].clone();
            }
        }
        Lattice { gram }
    }

    /// The lattice with form multiplied by `factor`.
    pub fn rescale(&self, factor: i64) -> Result<Lattice, LatticeError> {
        if factor == 0 {
            return Err(LatticeError::ZeroScale);
        }
        Ok(Lattice {
            gram: self.gram.scale(&BigInt::from(factor)),
        })
    }

    pub fn same_genus(
        &self,
        other: &Lattice,
        limits: &SearchLimits,
    ) -> Result<GenusVerdict, LatticeError> {
        genus::same_genus(self, other, limits)
    }

    pub fn isometric(&self, other: &Lattice, limits: &SearchLimits) -> IsometryVerdict {
        isometry::isometric(self, other, limits)
    }

    /// Integral overlattices of finite index, sorted by `(index, gram)`.
    pub fn overlattices(
        &self,
        even_only: bool,
        limits: &SearchLimits,
    ) -> Result<Vec<Overlattice>, LatticeError> {
        overlattice::overlattices(self, even_only, limits)
    }

    /// Minimum norm of a nonzero vector of a definite lattice, as an absolute
    /// value; `None` for indefinite lattices.
    pub fn minimum(&self) -> Option<BigInt> {
        short_vectors::minimum(self)
    }

    /// All vectors of a definite lattice with `|norm| <= bound`, including 0.
    /// `None` for indefinite lattices.
    pub fn short_vectors(&self, bound: &BigInt) -> Option<Vec<(Vec<BigInt>, BigInt)>> {
        short_vectors::enumerate(self, bound)
    }
}

impl Serialize for Lattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            gram: Vec<Vec<BigIntJson>>,
        }
        Repr {
            gram: self
                .gram
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(BigIntJson).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    /// Accepts `{"gram": [[...]]}` or the bare Gram matrix.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wrapped {
            gram: Vec<Vec<BigIntJson>>,
        }
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Wrapped(Wrapped),
            Bare(Vec<Vec<BigIntJson>>),
        }
        let gram = match Repr::deserialize(d)? {
            Repr::Wrapped(w) => w.gram,
            Repr::Bare(g) => g,
        };
        let rows: Vec<Vec<BigInt>> = gram
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.0).collect())
            .collect();
        let gram = IntMatrix::from_rows(rows)
            .ok_or_else(|| serde::de::Error::custom(LatticeError::Ragged))?;
        Lattice::new(gram).map_err(serde::de::Error::custom)
    }
}
