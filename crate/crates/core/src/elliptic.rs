//! Fourier-Mukai calculus of elliptic surfaces `X → C`.
//!
//! A relative transform acts on (rank, fibre degree) through a matrix
//! `[[c, a], [d, b]] ∈ SL₂(ℤ)`; such a matrix is realised when `λ_{X/C}`
//! divides `d` and `a > 0`. Partners of an elliptic surface of nonzero
//! Kodaira dimension are relative Jacobians `J(b)` with `b` coprime to `λ`,
//! and `J(b) ≅ J(b + λ) ≅ J(−b)`, `J(1) ≅ X`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EllipticError {
    #[error("matrix has determinant {0}, not 1")]
    NotSl2(i64),
    #[error("b = {b} is not coprime to a·λ = {a_lambda}")]
    CoprimalityViolated { b: i64, a_lambda: i64 },
    #[error("rank a = {0} must be positive")]
    NonPositiveRank(i64),
    #[error("λ = {0} must be at least 1")]
    InvalidLambda(i64),
    #[error("classification not provided for elliptic surfaces of Kodaira dimension zero")]
    HypothesisViolated,
    #[error("integer overflow")]
    Overflow,
}

/// `λ_{X/C}` and whether the Kodaira dimension is nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticSurfaceData {
    pub lambda: i64,
    pub kodaira_nonzero: bool,
}

impl EllipticSurfaceData {
    pub fn new(lambda: i64, kodaira_nonzero: bool) -> Result<Self, EllipticError> {
        if lambda < 1 {
            return Err(EllipticError::InvalidLambda(lambda));
        }
        Ok(EllipticSurfaceData {
            lambda,
            kodaira_nonzero,
        })
    }
}

/// Rank and fibre degree of an object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankDegree {
    pub r: i64,
    pub d: i64,
}

/// `[[c, a], [d, b]]` acting on column vectors `(r, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransformMatrix {
    pub c: i64,
    pub a: i64,
    pub d: i64,
    pub b: i64,
}

impl TransformMatrix {
    pub const IDENTITY: TransformMatrix = TransformMatrix {
        c: 1,
        a: 0,
        d: 0,
        b: 1,
    };

    /// From rows `[[c, a], [d, b]]`; fails unless the determinant is 1.
    pub fn new(rows: [[i64; 2]; 2]) -> Result<Self, EllipticError> {
        let m = TransformMatrix {
            c: rows[0][0],
            a: rows[0][1],
            d: rows[1][0],
            b: rows[1][1],
        };
        match m.determinant() {
            Some(1) => Ok(m),
            Some(det) => Err(EllipticError::NotSl2(det)),
            None => Err(EllipticError::Overflow),
        }
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.c, self.a], [self.d, self.b]]
    }

    pub fn determinant(&self) -> Option<i64> {
        self.c
            .checked_mul(self.b)?
            .checked_sub(self.a.checked_mul(self.d)?)
    }

    pub fn inverse(&self) -> TransformMatrix {
        TransformMatrix {
            c: self.b,
            a: -self.a,
            d: -self.d,
            b: self.c,
        }
    }

    pub fn compose(&self, other: &TransformMatrix) -> Result<TransformMatrix, EllipticError> {
        let dot = |x: i64, y: i64, z: i64, w: i64| -> Result<i64, EllipticError> {
            x.checked_mul(y)
                .and_then(|p| z.checked_mul(w).and_then(|q| p.checked_add(q)))
                .ok_or(EllipticError::Overflow)
        };
        Ok(TransformMatrix {
            c: dot(self.c, other.c, self.a, other.d)?,
            a: dot(self.c, other.a, self.a, other.b)?,
            d: dot(self.d, other.c, self.b, other.d)?,
            b: dot(self.d, other.a, self.b, other.b)?,
        })
    }
}

/// Whether `m` satisfies the hypotheses for lifting to a relative transform
/// of `x`: `λ | d` and `a > 0`.
pub fn validate_transform(
    m: &TransformMatrix,
    x: &EllipticSurfaceData,
) -> Result<bool, EllipticError> {
    match m.determinant() {
        Some(1) => {}
        Some(det) => return Err(EllipticError::NotSl2(det)),
        None => return Err(EllipticError::Overflow),
    }
    if x.lambda < 1 {
        return Err(EllipticError::InvalidLambda(x.lambda));
    }
    Ok(m.d % x.lambda == 0 && m.a > 0)
}

/// `(r, d) ↦ M·(r, d)`.
pub fn fm_action(m: &TransformMatrix, v: RankDegree) -> Result<RankDegree, EllipticError> {
    let row = |x: i64, y: i64| {
        x.checked_mul(v.r)
            .and_then(|p| y.checked_mul(v.d).and_then(|q| p.checked_add(q)))
            .ok_or(EllipticError::Overflow)
    };
    Ok(RankDegree {
        r: row(m.c, m.a)?,
        d: row(m.d, m.b)?,
    })
}

/// Canonical residue of `J(a, b) ≅ J(b)` modulo `b ~ b + λ` and `b ~ −b`:
/// the smaller of `b mod λ` and `λ − (b mod λ)`, and 1 when `λ = 1`.
pub fn normalize_jacobian(a: i64, b: i64, x: &EllipticSurfaceData) -> Result<i64, EllipticError> {
    if a <= 0 {
        return Err(EllipticError::NonPositiveRank(a));
    }
    let a_lambda = a.checked_mul(x.lambda).ok_or(EllipticError::Overflow)?;
    if b.gcd(&a_lambda) != 1 {
        return Err(EllipticError::CoprimalityViolated { b, a_lambda });
    }
    Ok(canonical_residue(b, x.lambda))
}

fn canonical_residue(b: i64, lambda: i64) -> i64 {
    if lambda == 1 {
        return 1;
    }
    let r = b.rem_euclid(lambda);
    r.min(lambda - r)
}

/// Relative Jacobians that can be FM partners, after the known
/// identifications.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartnerCandidates {
    /// Canonical residues `b`, ascending; `1` stands for `X` itself.
    pub residues: Vec<i64>,
    pub count: usize,
    /// Distinct residues are not known to give non-isomorphic surfaces, so
    /// any count above one is only an upper bound.
    pub count_is_upper_bound: bool,
}

pub fn enumerate_partners(x: &EllipticSurfaceData) -> Result<PartnerCandidates, EllipticError> {
    if !x.kodaira_nonzero {
        return Err(EllipticError::HypothesisViolated);
    }
    if x.lambda < 1 {
        return Err(EllipticError::InvalidLambda(x.lambda));
    }
    let mut residues: Vec<i64> = (1..=x.lambda)
        .filter(|b| b.gcd(&x.lambda) == 1)
        .map(|b| canonical_residue(b, x.lambda))
        .collect();
    residues.sort_unstable();
    residues.dedup();
    let count = residues.len();
    Ok(PartnerCandidates {
        residues,
        count,
        count_is_upper_bound: count > 1,
    })
}
