//! Divisor classes on `M̄_{g,n}`: boundary indexing, coefficient arithmetic,
//! test-curve pairing and JSON serialization.

pub mod class;
pub mod coefficient;
pub mod index;
pub mod pairing;

pub use class::{deserialize, serialize, DivisorClass, Generator, UnmarkedClass};
pub use coefficient::Coefficient;
pub use index::{
    binomial, canonical_index, require_canonical, subsets_of_size, BoundaryIndex, LabelSet, SizeClass,
    Space, MAX_LABELS,
};
pub use pairing::{intersect_test_curve, TestCurve};
