//! Graded free modules and complexes over K[x, y, z, t], their exactness
//! certificates, and finite-length modules computed degree by degree.

mod complex;
mod degreewise;
mod exactness;
mod fixture;
pub mod matrix;

pub use complex::{koszul_complex, BettiTable, FreeComplex, FreeGradedModule, GradedMap};
pub use degreewise::{
    annihilator_space, cokernel_table, default_window, duality_check, graded_piece, homology_table,
    rao_from_resolution, rao_in_window, rao_module, ModuleTable, Presentation, ScalarMatrix, COKERNEL_SCAN_CAP,
    WINDOW_MARGIN,
};
pub use exactness::{
    buchsbaum_eisenbud_check, composition_witness, is_minimal_complex, matrix_rank, verify_complex, BeCertificate,
    BeFailure, BePosition, CompositionWitness,
};
pub use fixture::{complex_from_fixture, complex_to_fixture};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("entries live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree mismatch{}: entry ({row}, {col}) = {entry} should have degree {expected}", map.map(|m| format!(" in φ{m}")).unwrap_or_default())]
    DegreeMismatch { map: Option<usize>, row: usize, col: usize, expected: i32, entry: String },
    #[error("not a complex: {0}")]
    NotAComplex(CompositionWitness),
    #[error("window [{lo}, {hi}] too small: dimension {dim} in margin degree {degree}")]
    WindowTooSmall { lo: i32, hi: i32, degree: i32, dim: usize },
    #[error("module is not of finite length (nonzero through degree {scanned_to})")]
    NotFiniteLength { scanned_to: i32 },
    #[error("resolution is not exact: {0}")]
    ResolutionNotExact(String),
    #[error("resolution is not minimal: a map has a nonzero constant entry")]
    NotMinimal,
    #[error("resolution does not match the ideal: {0}")]
    ResolutionMismatch(String),
    #[error("not a curve: R/I has Krull dimension {0}, expected 2")]
    NotACurve(i32),
    #[error("module table carries no presentation")]
    MissingPresentation,
    #[error("complex fixture: {0}")]
    Fixture(String),
}
