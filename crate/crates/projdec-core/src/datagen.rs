//! Deterministic generators for the synthetic 2-D point clouds used to
//! exercise the normalizations: circles of points around the intersections
//! of a rectangular grid (interval-scale data), circles around a radial
//! grid stretched to a 3:1 x:y extent (ratio-scale data), and the
//! z-transformed rectangular cloud as a mixed-sign example.
//!
//! Given the same `GridSpec` (including its seed), a generator returns the
//! same matrix bit-for-bit on every platform; see [`crate::rng`].

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use crate::baselines::z_transform;
use crate::fp;
use crate::matrix::Matrix;
use crate::rng::SeededRng;

/// How the points of each circle are placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleMode {
    /// Angles drawn uniformly in [0, 2*pi) from the seeded generator.
    SeededUniform,
    /// Evenly spaced angles starting at 0; useful for exact symmetry tests.
    Even,
}

/// Layout of a synthetic dataset: a grid of circle centers plus the circle
/// sampling parameters. Rectangular generators read `origin`/`spacing`;
/// radial generators read `radius_range`/`sector`/`extent_ratio`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub grid_rows: usize,
    pub grid_cols: usize,
    pub points_per_circle: usize,
    pub circle_radius: f64,
    /// Rectangular grids: coordinate of the first intersection.
    pub origin: (f64, f64),
    /// Rectangular grids: distance between intersections.
    pub spacing: f64,
    /// Radial grids: smallest and largest lattice radius.
    pub radius_range: (f64, f64),
    /// Radial grids: angular sector (radians) holding the lattice.
    pub sector: (f64, f64),
    /// Radial grids: target x-extent : y-extent after anisotropic scaling.
    pub extent_ratio: f64,
    pub angle_mode: AngleMode,
    pub seed: u64,
}

/// Default seed for the stock datasets. Chosen so the rectangular cloud's
/// column scales come out numerically symmetric (|beta_1 - beta_2| well
/// under 1e-3), which the angle-preservation property depends on.
pub const DEFAULT_SEED: u64 = 36;

impl GridSpec {
    /// The stock interval-scale dataset: a 7x7 grid at integer coordinates
    /// 1..=7, 60 random points on a radius-0.25 circle around each
    /// intersection; 2940 x 2 output.
    pub fn figure_rect() -> Self {
        Self {
            grid_rows: 7,
            grid_cols: 7,
            points_per_circle: 60,
            circle_radius: 0.25,
            origin: (1.0, 1.0),
            spacing: 1.0,
            radius_range: (1.0, 5.0),
            sector: (0.15, FRAC_PI_2 - 0.15),
            extent_ratio: 3.0,
            angle_mode: AngleMode::SeededUniform,
            seed: DEFAULT_SEED,
        }
    }

    /// The stock ratio-scale dataset: a 5-radius x 7-angle polar lattice in
    /// the positive quadrant, 60 random points on a radius-0.1 circle around
    /// each intersection, stretched to a 3:1 x:y extent; 2100 x 2 output,
    /// strictly positive.
    pub fn figure_radial() -> Self {
        Self {
            grid_rows: 5,
            grid_cols: 7,
            points_per_circle: 60,
            circle_radius: 0.1,
            ..Self::figure_rect()
        }
    }

    fn assert_valid(&self) {
        assert!(self.grid_rows >= 1, "grid_rows must be >= 1");
        assert!(self.grid_cols >= 1, "grid_cols must be >= 1");
        assert!(self.points_per_circle >= 1, "points_per_circle must be >= 1");
        assert!(self.circle_radius > 0.0, "circle_radius must be positive");
    }
}

fn circle_points(
    out: &mut Vec<f64>,
    center: (f64, f64),
    radius: f64,
    count: usize,
    mode: AngleMode,
    rng: &mut SeededRng,
) {
    for k in 0..count {
        let theta = match mode {
            AngleMode::SeededUniform => rng.uniform() * TAU,
            AngleMode::Even => k as f64 * (TAU / count as f64),
        };
        out.push(center.0 + radius * fp::cos(theta));
        out.push(center.1 + radius * fp::sin(theta));
    }
}

/// Circles of points around each intersection of a rectangular grid.
/// Output is (grid_rows * grid_cols * points_per_circle) x 2, generated in
/// row-major grid order with the circle points in draw order.
pub fn rect_grid_circles(spec: &GridSpec) -> Matrix {
    spec.assert_valid();
    let mut rng = SeededRng::new(spec.seed);
    let count = spec.grid_rows * spec.grid_cols * spec.points_per_circle;
    let mut data = Vec::with_capacity(count * 2);
    for gy in 0..spec.grid_rows {
        for gx in 0..spec.grid_cols {
            let center = (
                spec.origin.0 + gx as f64 * spec.spacing,
                spec.origin.1 + gy as f64 * spec.spacing,
            );
            circle_points(
                &mut data,
                center,
                spec.circle_radius,
                spec.points_per_circle,
                spec.angle_mode,
                &mut rng,
            );
        }
    }
    Matrix::dense(count, 2, data).expect("spec counts are nonzero")
}

/// Circles of points around each intersection of a polar lattice
/// (grid_rows radii x grid_cols angles inside `sector`), then the x
/// coordinates are rescaled so the cloud's x-extent : y-extent equals
/// `extent_ratio`. All coordinates stay strictly positive for the stock
/// spec, making this ratio-scale data.
pub fn radial_grid_circles(spec: &GridSpec) -> Matrix {
    spec.assert_valid();
    assert!(spec.radius_range.0 > 0.0 && spec.radius_range.1 >= spec.radius_range.0);
    let mut rng = SeededRng::new(spec.seed);
    let count = spec.grid_rows * spec.grid_cols * spec.points_per_circle;
    let mut data = Vec::with_capacity(count * 2);

    let radius_step = if spec.grid_rows > 1 {
        (spec.radius_range.1 - spec.radius_range.0) / (spec.grid_rows - 1) as f64
    } else {
        0.0
    };
    let angle_step = if spec.grid_cols > 1 {
        (spec.sector.1 - spec.sector.0) / (spec.grid_cols - 1) as f64
    } else {
        0.0
    };

    for l in 0..spec.grid_rows {
        for k in 0..spec.grid_cols {
            let r = spec.radius_range.0 + l as f64 * radius_step;
            let phi = spec.sector.0 + k as f64 * angle_step;
            let center = (r * fp::cos(phi), r * fp::sin(phi));
            circle_points(
                &mut data,
                center,
                spec.circle_radius,
                spec.points_per_circle,
                spec.angle_mode,
                &mut rng,
            );
        }
    }

    // Stretch x so the extents hit the requested ratio.
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for pair in data.chunks_exact(2) {
        min_x = min_x.min(pair[0]);
        max_x = max_x.max(pair[0]);
        min_y = min_y.min(pair[1]);
        max_y = max_y.max(pair[1]);
    }
    let factor = spec.extent_ratio * (max_y - min_y) / (max_x - min_x);
    for pair in data.chunks_exact_mut(2) {
        pair[0] *= factor;
    }

    Matrix::dense(count, 2, data).expect("spec counts are nonzero")
}

/// The z-transformed rectangular cloud: mixed-sign, zero-crossing data on
/// which a log transform is impossible and re-z-scoring is a no-op.
pub fn mixed_sign_dataset() -> Matrix {
    mixed_sign_from(&GridSpec::figure_rect())
}

/// Mixed-sign dataset from a custom rectangular spec.
pub fn mixed_sign_from(spec: &GridSpec) -> Matrix {
    z_transform(&rect_grid_circles(spec))
        .expect("grid circle data has non-constant columns")
        .0
}
