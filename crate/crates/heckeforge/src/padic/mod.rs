//! Floating-point oracle over `Q_p`: additive characters trivial on `4o`,
//! Weil constants as stabilized Gauss sums, the unit-group integrals, the
//! finite Schrodinger model and the rank-one intertwining series.

mod character;
mod gamma;
mod model;
mod number;
mod series;

pub use character::{selfdual_measure, selfdual_measure_numeric, AdditiveCharacter};
pub use gamma::{unit_integral, unit_integral_expected, weil_gamma};
pub use model::FiniteWeilModel;
pub use number::{e_of, max_precision, ppow, PadicNum};
pub use series::{eval_f64, expected_rank1_series, gl2_gk_numeric, iwasawa_zeta_check, rank1_series, ZetaCheck};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PadicError {
    #[error("precision {have} is below the required {needed}")]
    InsufficientPrecision { needed: u32, have: u32 },
    #[error("principal value did not stabilize by radius {0}")]
    NotConverged(usize),
    #[error("finite model too small: {0}")]
    ModelTooSmall(String),
    #[error("integrand is not constant on unit cosets")]
    CosetCheck,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("zero has no valuation here")]
    Zero,
}
