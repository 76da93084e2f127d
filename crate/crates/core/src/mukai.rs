//! Mukai vectors, the Mukai pairing and the Euler pairing of sheaves on a
//! surface.
//!
//! For a K3 surface (`ε = 1`) or an abelian surface (`ε = 0`) the Mukai
//! vector of a class with rank `r`, first Chern class `c₁` and
//! `ch₂ = c₁²/2 − c₂` is `(r, c₁, ch₂ + ε·r)`. With the pairing
//! `⟨(r₁,D₁,s₁),(r₂,D₂,s₂)⟩ = D₁·D₂ − r₁s₂ − r₂s₁` Riemann-Roch reads
//! `χ(E,F) = −⟨v(E), v(F)⟩`.
//!
//! [`SignConvention::Subtracted`] keeps the alternative `ch₂ − ε·r` for
//! comparison; it breaks the identity already for `(𝒪, 𝒪)` on a K3.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::json;
use crate::lattice::{IntMatrix, Lattice, LatticeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MukaiError {
    #[error("NS coordinates have length {got}, lattice rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Mukai vectors mix abelian and K3 conventions")]
    EpsilonMismatch,
    #[error("s = {0} is not an integer")]
    NonIntegralS(String),
    #[error("Euler pairing evaluates to {0}, which is not an integer")]
    NonIntegralResult(String),
    #[error("ch2 = {0} has denominator other than 1 or 2")]
    BadCh2(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// `ε` in the Mukai vector: 0 for abelian surfaces, 1 for K3 surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Abelian,
    K3,
}

impl SurfaceKind {
    pub fn epsilon(self) -> i64 {
        match self {
            SurfaceKind::Abelian => 0,
            SurfaceKind::K3 => 1,
        }
    }

    pub fn from_epsilon(eps: i64) -> Option<Self> {
        match eps {
            0 => Some(SurfaceKind::Abelian),
            1 => Some(SurfaceKind::K3),
            _ => None,
        }
    }

    /// `χ(𝒪)` of the surface: 0 for abelian, 2 for K3.
    pub fn chi_o(self) -> i64 {
        2 * self.epsilon()
    }
}

/// Sign in front of `ε·r` in the last Mukai coordinate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `s = ch₂ + ε·r`, consistent with Riemann-Roch.
    #[default]
    Added,
    /// `s = ch₂ − ε·r`.
    Subtracted,
}

/// Rank, first Chern class in NS coordinates and `ch₂` of a sheaf class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceChernData {
    #[serde(with = "json::bigint")]
    pub r: BigInt,
    #[serde(with = "json::bigint_vec")]
    pub c1: Vec<BigInt>,
    #[serde(with = "json::rational")]
    pub ch2: BigRational,
}

impl SurfaceChernData {
    pub fn new(r: i64, c1: &[i64], ch2: BigRational) -> Result<Self, MukaiError> {
        let data = SurfaceChernData {
            r: r.into(),
            c1: c1.iter().map(|&x| x.into()).collect(),
            ch2,
        };
        data.check_ch2()?;
        Ok(data)
    }

    /// Builds the class from `(r, c₁, c₂)`, with `ch₂ = c₁²/2 − c₂`.
    pub fn from_chern_classes(
        r: i64,
        c1: &[i64],
        c2: i64,
        ns: &Lattice,
    ) -> Result<Self, MukaiError> {
        let c1: Vec<BigInt> = c1.iter().map(|&x| x.into()).collect();
        check_dim(ns, &c1)?;
        let ch2 =
            BigRational::new(ns.norm(&c1), BigInt::from(2)) - BigRational::from_integer(c2.into());
        Ok(SurfaceChernData {
            r: r.into(),
            c1,
            ch2,
        })
    }

    /// Skyscraper sheaf of a point: `(0, 0, 1)`.
    pub fn point(ns_rank: usize) -> Self {
        SurfaceChernData {
            r: BigInt::zero(),
            c1: vec![BigInt::zero(); ns_rank],
            ch2: BigRational::one(),
        }
    }

    /// Structure sheaf: `(1, 0, 0)`.
    pub fn structure_sheaf(ns_rank: usize) -> Self {
        SurfaceChernData {
            r: BigInt::one(),
            c1: vec![BigInt::zero(); ns_rank],
            ch2: BigRational::zero(),
        }
    }

    /// `c₂ = c₁²/2 − ch₂`.
    pub fn c2(&self, ns: &Lattice) -> Result<BigRational, MukaiError> {
        check_dim(ns, &self.c1)?;
        Ok(BigRational::new(ns.norm(&self.c1), BigInt::from(2)) - &self.ch2)
    }

    fn check_ch2(&self) -> Result<(), MukaiError> {
        let d = self.ch2.denom();
        if d.is_one() || *d == BigInt::from(2) {
            Ok(())
        } else {
            Err(MukaiError::BadCh2(json::format_rational(&self.ch2)))
        }
    }
}

/// NS lattice, canonical class and `χ(𝒪)` of the ambient surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionData {
    pub ns: Lattice,
    pub canonical: Vec<BigInt>,
    pub chi_o: BigInt,
}

impl IntersectionData {
    pub fn new(ns: Lattice, canonical: Vec<BigInt>, chi_o: BigInt) -> Result<Self, MukaiError> {
        check_dim(&ns, &canonical)?;
        Ok(IntersectionData {
            ns,
            canonical,
            chi_o,
        })
    }

    /// K numerically trivial and `χ(𝒪) = 2ε`.
    pub fn for_kind(ns: Lattice, kind: SurfaceKind) -> Self {
        let n = ns.rank();
        IntersectionData {
            ns,
            canonical: vec![BigInt::zero(); n],
            chi_o: kind.chi_o().into(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct IntersectionRepr {
    ns_gram: Vec<Vec<json::BigIntJson>>,
    #[serde(rename = "K")]
    canonical: Vec<json::BigIntJson>,
    #[serde(rename = "chiO")]
    chi_o: json::BigIntJson,
}

impl Serialize for IntersectionData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        IntersectionRepr {
            ns_gram: self
                .ns
                .gram()
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(json::BigIntJson).collect())
                .collect(),
            canonical: self
                .canonical
                .iter()
                .cloned()
                .map(json::BigIntJson)
                .collect(),
            chi_o: json::BigIntJson(self.chi_o.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntersectionData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = IntersectionRepr::deserialize(d)?;
        let rows = repr
            .ns_gram
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.0).collect())
            .collect();
        let gram = IntMatrix::from_rows(rows).ok_or_else(|| D::Error::custom("ragged ns_gram"))?;
        let ns = Lattice::new(gram).map_err(D::Error::custom)?;
        IntersectionData::new(
            ns,
            repr.canonical.into_iter().map(|x| x.0).collect(),
            repr.chi_o.0,
        )
        .map_err(D::Error::custom)
    }
}

/// A vector `(r, D, s)` of the extended lattice `H⁰ ⊕ NS ⊕ H⁴`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MukaiVector {
    #[serde(with = "json::bigint")]
    pub r: BigInt,
    #[serde(with = "json::bigint_vec")]
    pub d: Vec<BigInt>,
    #[serde(with = "json::bigint")]
    pub s: BigInt,
    pub kind: SurfaceKind,
}

impl MukaiVector {
    pub fn new(r: i64, d: &[i64], s: i64, kind: SurfaceKind) -> Self {
        MukaiVector {
            r: r.into(),
            d: d.iter().map(|&x| x.into()).collect(),
            s: s.into(),
            kind,
        }
    }
}

fn check_dim(ns: &Lattice, v: &[BigInt]) -> Result<(), MukaiError> {
    if v.len() == ns.rank() {
        Ok(())
    } else {
        Err(MukaiError::DimensionMismatch {
            expected: ns.rank(),
            got: v.len(),
        })
    }
}

/// `⟨v₁, v₂⟩ = D₁·D₂ − r₁s₂ − r₂s₁`.
pub fn mukai_pairing(
    v1: &MukaiVector,
    v2: &MukaiVector,
    ns: &Lattice,
) -> Result<BigInt, MukaiError> {
    check_dim(ns, &v1.d)?;
    check_dim(ns, &v2.d)?;
    if v1.kind != v2.kind {
        return Err(MukaiError::EpsilonMismatch);
    }
    Ok(ns.pair(&v1.d, &v2.d) - &v1.r * &v2.s - &v2.r * &v1.s)
}

pub fn mukai_vector(cd: &SurfaceChernData, kind: SurfaceKind) -> Result<MukaiVector, MukaiError> {
    mukai_vector_with(cd, kind, SignConvention::Added)
}

pub fn mukai_vector_with(
    cd: &SurfaceChernData,
    kind: SurfaceKind,
    convention: SignConvention,
) -> Result<MukaiVector, MukaiError> {
    let eps_r = BigRational::from_integer(&cd.r * kind.epsilon());
    let s = match convention {
        SignConvention::Added => &cd.ch2 + eps_r,
        SignConvention::Subtracted => &cd.ch2 - eps_r,
    };
    if !s.is_integer() {
        return Err(MukaiError::NonIntegralS(json::format_rational(&s)));
    }
    Ok(MukaiVector {
        r: cd.r.clone(),
        d: cd.c1.clone(),
        s: s.to_integer(),
        kind,
    })
}

/// `χ(E,F)` on a surface:
///
/// `r(E)ch₂(F) − c₁(E)·c₁(F) + r(F)ch₂(E) + ½(r(F)c₁(E) − r(E)c₁(F))·K + r(E)r(F)χ(𝒪)`.
pub fn euler_pairing(
    e: &SurfaceChernData,
    f: &SurfaceChernData,
    amb: &IntersectionData,
) -> Result<BigInt, MukaiError> {
    check_dim(&amb.ns, &e.c1)?;
    check_dim(&amb.ns, &f.c1)?;
    let ns = &amb.ns;
    let int = |x: BigInt| BigRational::from_integer(x);
    let twisted: Vec<BigInt> =
        e.c1.iter()
            .zip(&f.c1)
            .map(|(ce, cf)| &f.r * ce - &e.r * cf)
            .collect();
    let chi = int(e.r.clone()) * &f.ch2 - int(ns.pair(&e.c1, &f.c1))
        + int(f.r.clone()) * &e.ch2
        + BigRational::new(ns.pair(&twisted, &amb.canonical), BigInt::from(2))
        + int(&e.r * &f.r * &amb.chi_o);
    if chi.is_integer() {
        Ok(chi.to_integer())
    } else {
        Err(MukaiError::NonIntegralResult(json::format_rational(&chi)))
    }
}

/// Both sides of `χ(E,F) = −⟨v(E), v(F)⟩` on a K3 or abelian surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consistency {
    #[serde(with = "json::bigint")]
    pub euler: BigInt,
    #[serde(with = "json::bigint")]
    pub minus_mukai: BigInt,
    pub holds: bool,
}

pub fn rr_consistency(
    e: &SurfaceChernData,
    f: &SurfaceChernData,
    kind: SurfaceKind,
    ns: &Lattice,
) -> Result<bool, MukaiError> {
    Ok(rr_sides(e, f, kind, ns, SignConvention::Added)?.holds)
}

pub fn rr_sides(
    e: &SurfaceChernData,
    f: &SurfaceChernData,
    kind: SurfaceKind,
    ns: &Lattice,
    convention: SignConvention,
) -> Result<Consistency, MukaiError> {
    let amb = IntersectionData::for_kind(ns.clone(), kind);
    let euler = euler_pairing(e, f, &amb)?;
    let ve = mukai_vector_with(e, kind, convention)?;
    let vf = mukai_vector_with(f, kind, convention)?;
    let minus_mukai = -mukai_pairing(&ve, &vf, ns)?;
    Ok(Consistency {
        holds: euler == minus_mukai,
        euler,
        minus_mukai,
    })
}
