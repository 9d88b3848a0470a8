//! Two-dimensional representation of the cyclotomic Hecke algebra of the
//! exceptional complex reflection group G7, specialized at nonzero complex
//! parameters.
//!
//! The braid group of G7 is `⟨s1, s2, s3 | s1s2s3 = s2s3s1 = s3s1s2⟩`; the
//! Hecke algebra adds `(s1 − x1)(s1 − x2) = 0`, `∏(s2 − yᵢ) = 0` and
//! `∏(s3 − zᵢ) = 0`. The crate
//!
//! * builds the generator images as complex 2×2 matrices ([`representation`]),
//! * decides irreducibility by closed-form conditions and, independently, by
//!   searching for a common eigendirection ([`irreducibility`]),
//! * checks the algebraic identities behind those conditions exactly, with
//!   integer-coefficient polynomial arithmetic over `ℤ[x, y, z][r]`
//!   ([`exact`], [`identities`]),
//! * runs seeded randomized sweeps comparing the two deciders ([`sweep`]).
//!
//! The square root `r = √(x1x2y1y2z1z2)` is taken on the principal branch by
//! default; its sign is an explicit argument throughout, since the closed-form
//! conditions only hold for one of the two roots.

pub mod cli;
pub mod error;
pub mod exact;
pub mod identities;
pub mod io;
pub mod irreducibility;
pub mod matrix2;
pub mod numerics;
pub mod params;
pub mod representation;
pub mod sweep;

pub use error::Error;
pub use matrix2::{Mat2, Vec2};
pub use numerics::ComplexValue;
pub use params::Params;
pub use representation::{GeneratorTriple, RootSign};

/// Version tag written into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;
