//! Irreducible representations of `sl(2, C)` and the clutching degree of the
//! tautological bundle on their highest-weight orbits.

mod charts;
mod exterior;
mod irrep;
mod winding;

pub use charts::{
    clutching_value, default_sample_count, transition_samples, x_chart, y_chart, ChartVector,
    ClutchSamples, PARALLEL_TOLERANCE,
};
pub use exterior::{exterior_rep, exterior_weight, grassmann_degree, CyclicSpan, ExteriorRep};
pub use irrep::{bracket_residuals, build_irrep, IrrepN};
pub use winding::{winding_number, WINDING_RESIDUAL_TOLERANCE};
