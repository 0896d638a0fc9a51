//! Exact divisor-class calculus on moduli spaces of stable pointed curves.
//!
//! The crate models classes on `M̄_{g,n}` in the standard generators
//! `λ, ψ_j, δ_irr, δ_{i:S}`, builds the quadric-degeneracy divisor family
//! living on the spaces `M̄_{g(t),n(t)}`, computes first Chern classes of
//! pushforwards along the universal curve, pulls classes back along
//! forgetful and clutching maps, and solves for general-type certificates.
//! All arithmetic is exact.

pub mod algebra;
pub mod catalog;
pub mod certificate;
pub mod error;
pub mod grr;
pub mod picard;
pub mod pullback;
pub mod quad;
pub mod report;
pub mod verify;

pub use algebra::{q, Poly, Rational};
pub use error::{AlgebraError, Error, Result};
pub use picard::{
    canonical_index, intersect_test_curve, BoundaryIndex, Coefficient, DivisorClass, Generator, LabelSet,
    SizeClass, Space, TestCurve, UnmarkedClass,
};
pub use report::Check;
pub use catalog::{catalog_get, catalog_load, Catalog, CatalogClass, CatalogEntry};
pub use certificate::{canonical_class, certify, solve_certificate, Certificate, ResidualStatus};
pub use pullback::{clutch_pullback, forgetful_pullback, ClutchingMap, Preset, TailAttachment};
pub use quad::{gn_pair, quad_class};
pub use verify::{Report, Suite};
