//! Exact curvature bounds for compact irreducible symmetric spaces.
//!
//! The pipeline goes: enumerate the root system of the underlying simple
//! type ([`root_system`]), normalize lengths by the trace form ([`exact`]
//! provides the rational linear algebra), resolve a catalog entry to its
//! involution data ([`catalog`]), project roots onto the flat directions
//! and maximize ([`restricted`]), and wrap the result with metadata,
//! criterion verdicts, and table assembly ([`report`]). Closed-form values
//! for cross-checking live in an embedded table ([`expectations`]), the
//! whole-catalog check suites in [`verify`], and the command-line surface
//! in [`cli`].
//!
//! Everything is exact: squared lengths, bounds, and margins are rational
//! numbers, and equality checks are equality of rationals — no floating
//! point anywhere.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod cli;
pub mod exact;
pub mod expectations;
pub mod report;
pub mod restricted;
pub mod root_system;
pub mod verify;

use thiserror::Error;

pub use catalog::{CaseTag, CatalogLimits, SpaceLabel, SpaceSpec};
pub use exact::Rational;
pub use report::{CurvatureReport, SampsonCriterion, SampsonVerdict};
pub use restricted::RestrictedRootResult;
pub use root_system::{Family, LieType, Root, RootSystem};

/// Any error the library can produce, for callers that don't care which
/// stage failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exact::ExactError),
    #[error(transparent)]
    RootSystem(#[from] root_system::RootSystemError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Restricted(#[from] restricted::RestrictedError),
    #[error(transparent)]
    Report(#[from] report::ReportError),
}
