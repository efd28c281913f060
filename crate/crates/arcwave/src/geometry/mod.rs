//! Arc parametrizations, affine-parametric families, admissibility radii
//! and tube-positivity sampling.

mod admissibility;
mod arc;
mod tube;

pub use admissibility::{
    check_family, complexified_surrogate_norm, delta_cross, delta_cross_grid, delta_self,
    delta_self_grid, holder_surrogate_norm, materialize, materialize_complex,
    AdmissibilityReport, PairRadius, ParametricArcFamily,
};
pub use arc::{param_grid, q_function, squared_distance, OpenArc, DEFAULT_GRID};
pub use tube::{tube_positivity_cross, tube_positivity_self, TubePositivityReport};
