//! Curve families on quadric surfaces in P^3: their ideals, predicted
//! resolutions, Rao modules and classification.

mod classify;
mod minimal;
mod multiline;
mod reducible;
mod smooth;
mod spec;

pub use classify::{
    classify_curve, classify_curve_with_resolution, is_acm_curve, quadric_rank, AcmCriterion, AcmVerdict,
    ClassificationReport,
};
pub use minimal::{type_i_minimal_curve, TypeICurve};
pub use multiline::{
    build_multiline_ideal, decompose, determinantal_multiline_ideal, intersection_multiline_ideal, line_ideal,
    multiline_matrix, quadric_form, Decomposition, MultilineSpec, Ruling,
};
pub use reducible::{build_reducible_ideal, expected_rao_dims, predicted_reducible_resolution, ReducibleCurveSpec};
pub use smooth::{
    build_smooth_minimal_ideal, predicted_smooth_resolution, smooth_structure_matrices, type_ii_presentation,
    SmoothMinimalSpec, StructureMatrices,
};
pub use spec::{parse_lines, CurveSpec, LineList, SpecError};

use crate::homology::HomologyError;
use crate::ideal::IdealError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("not-regular-sequence: {0} is not a regular sequence")]
    NotRegularSequence(String),
    #[error("AB-zero-with-h-zero: A and B must both be nonzero when h = 0")]
    AbZeroWithHZero,
    #[error("wrong-variable-support: {0}")]
    WrongVariableSupport(String),
    #[error("wrong-degrees: {0}")]
    WrongDegrees(String),
    #[error("constant-form: {0} must be nonconstant")]
    ConstantForm(String),
    #[error("not-homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("field mismatch among the inputs")]
    FieldMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("repeated-line: parameter {0} occurs twice")]
    RepeatedLine(String),
    #[error("not a curve: R/I has Krull dimension {0}, expected 2")]
    NotACurve(i32),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}
