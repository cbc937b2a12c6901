//! Group algebras KG over small finite fields, group codes as right ideals, and
//! checkability of those codes via annihilators and duality.

pub mod algebra;
pub mod check;
pub mod code;
pub mod distance;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod search;
pub mod verify;

pub use algebra::{Element, GroupAlgebra, IdealSide, IdealSubspace, Side};
pub use check::{
    checkable_test, classify_code_checkable, principality_test, reed_muller_experiment, verify_check_element,
    CheckabilityStatus, CheckabilityVerdict, PrincipalityMethod, PrincipalityOptions, PrincipalityStatus,
    PrincipalityVerdict,
};
pub use code::{dual_code, macwilliams_dual_check, CodeFile, CodeSubspace};
pub use distance::{min_distance, weight_distribution, Distance, DistanceMethod, DistanceOptions};
pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, FieldElement};
pub use group::{preset, Group, Presentation};
pub use linalg::{Matrix, Subspace};
pub use search::{
    golay_search, non_checkable_witness_search, random_checkable_search, SearchOptions, SearchOutcome, SearchRecord,
    WeightProfile,
};
pub use verify::{run_suites, Claim, Report, Scope, VerifyOptions};
