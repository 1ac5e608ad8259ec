pub mod boundary;
pub mod braid;
pub mod classification;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod free;
mod handle;
pub mod isotopy;
pub mod order;
pub mod suites;

pub use boundary::{act_point, compare_points, cusp_point, gap_point, BoundaryPoint, OrderVerdict, PointKind};
pub use braid::{full_twist, parse_braid, round_twist, BraidWord, Permutation, Sign};
pub use classification::{
    class_of, count_classes, count_classes_in, enumerate_classes, min_positive, realize, DiagramClass,
};
pub use diagram::{Anchor, Arc, CurveDiagram, Provenance, Validation};
pub use error::{Error, Result};
pub use free::FreeWord;
pub use isotopy::{loose_isotopic, standard_frame};
pub use order::{compare, dehornoy_diagram, distinguishing_witnesses, sign, DiagramOrder};

/// Exact class counts.
pub type ExactCount = num_bigint::BigUint;
/// Class counts in machine words; overflow is reported, not wrapped.
pub type MachineCount = u64;
