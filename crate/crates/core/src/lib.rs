//! Evaluation codes on norm-trace curves over F_{q^r}: exact finite-field
//! arithmetic, curve geometry, Riemann-Roch monomial spaces, the twisted code
//! families and their duals, weight-search engines, and an executable check
//! suite for the distance and count laws these codes satisfy.

pub mod checks;
pub mod code;
pub mod curve;
pub mod error;
pub mod families;
pub mod gf;
pub mod matrix;
pub mod report;
pub mod spaces;

pub use checks::{run_check, CheckOutcome, CheckRequest, Verdict};
pub use code::{
    dual, dual_weight_search, min_distance_exhaustive, scale_code, strong_isometry_witness,
    Engine, LinearCode, SearchOptions, WeightReport, Witness,
};
pub use curve::{Curve, LineClass, Point, ProjLine};
pub use error::{Error, Result};
pub use families::CodeFamilySpec;
pub use gf::{Felt, Field};
pub use matrix::FMatrix;
pub use report::{Cache, Report, RunConfig};
pub use spaces::{CurveDivisor, FunctionSpace, Monomial};
