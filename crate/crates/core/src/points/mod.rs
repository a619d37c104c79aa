//! Ideals of points, grids, staircases, distractions and complementary ideals.

mod complement;
mod distraction;
mod grid;
mod set;

pub use complement::{complementary_pair, shift_ideal, subset_complement_ideals, ComplementCertificate};
pub use distraction::{
    distraction_ideal, distraction_term, natural_distraction, order_ideal_of, staircase, DistractionSpec,
};
pub use grid::{
    field_equation_ideal, grid_ideal, grid_points, grid_primary_components, mgrid, socle_term, GridFactor,
    GridIdeal,
};
pub use set::{ideal_of_points, parse_points_file, PointSet};
