//! Exact arithmetic for Fourier-Mukai partners of minimal complex surfaces.
//!
//! The crate is organised by the kind of surface and the invariant involved:
//!
//! * [`lattice`]: integral lattices, discriminant forms, genus and isometry
//!   tests, overlattice enumeration.
//! * [`mukai`]: Mukai vectors, the Mukai pairing and surface Riemann-Roch.
//! * [`elliptic`]: the `SL₂(ℤ)` action on (rank, fibre degree) and relative
//!   Jacobian partner candidates of elliptic surfaces.
//! * [`bielliptic`]: numerical classes on bielliptic surfaces, the rank
//!   reduction matrix and a brute-force check of its divisibility claim.
//! * [`partner`]: the case split over surface classes, producing a
//!   [`partner::PartnerReport`].
//! * [`cli`]: the `fmp` command-line front end.
//!
//! All arithmetic is exact. Finite searches are bounded by
//! [`lattice::SearchLimits`] and report `Inconclusive` or an error when a
//! bound is reached.

pub mod bielliptic;
pub mod cli;
pub mod elliptic;
pub mod json;
pub mod lattice;
pub mod mukai;
pub mod partner;

pub use lattice::{IsometryVerdict, Lattice, LatticeError, SearchLimits};
