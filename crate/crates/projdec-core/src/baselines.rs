//! Reference normalizations to compare the decomposition against:
//! per-column z-transformation, log-then-z, the order-sensitive double
//! z-transform, and the polar form used for angle/radius plots.

use alloc::vec::Vec;

use crate::fp;
use crate::matrix::Matrix;
use crate::Error;

/// Column statistics recorded by [`z_transform`]: z_ij = (a_ij - mu_j)/sd_j.
///
/// `sd` is the population standard deviation (divide by m, not m-1), so a
/// z-scored column has RMS exactly 1 and re-applying the transform is a
/// no-op. This matches the RMS-style scale conventions used everywhere else
/// in the crate.
#[derive(Debug, Clone, PartialEq)]
pub struct ZParams {
    pub mu: Vec<f64>,
    pub sd: Vec<f64>,
}

/// Standardize every column to mean 0 and population SD 1. Output is dense.
///
/// Constant columns have no defined z-score and are an error, as is input
/// with fewer than two rows.
pub fn z_transform(a: &Matrix) -> Result<(Matrix, ZParams), Error> {
    let (m, n) = (a.rows(), a.cols());
    if m < 2 {
        return Err(Error::TooFewRows { needed: 2, got: m });
    }
    let dense = a.to_dense();
    let mut mu = Vec::with_capacity(n);
    let mut sd = Vec::with_capacity(n);
    for j in 0..n {
        let mut sum = 0.0;
        for i in 0..m {
            sum += dense.get(i, j);
        }
        let mean = sum / m as f64;
        let mut var_sum = 0.0;
        for i in 0..m {
            let d = dense.get(i, j) - mean;
            var_sum += d * d;
        }
        let variance = var_sum / m as f64;
        if variance == 0.0 {
            return Err(Error::ConstantColumn { col: j });
        }
        mu.push(mean);
        sd.push(fp::sqrt(variance));
    }

    let mut out = dense;
    out.map_entries_in_place(|_, j, v| (v - mu[j]) / sd[j]);
    Ok((out, ZParams { mu, sd }))
}

/// Natural log of every entry, then [`z_transform`]. Requires strictly
/// positive input; the first offending entry is named otherwise. The log
/// base is immaterial: changing base rescales each column linearly, which
/// the z-scoring cancels.
pub fn log_z_transform(a: &Matrix) -> Result<(Matrix, ZParams), Error> {
    if let Some((row, col, value)) = a.to_dense().first_entry_where(|v| v <= 0.0) {
        return Err(Error::NonPositiveEntry { row, col, value });
    }
    let mut logged = a.to_dense();
    logged.map_entries_in_place(|_, _, v| fp::ln(v));
    z_transform(&logged)
}

/// Which direction is standardized first by [`double_z`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZOrder {
    ColsThenRows,
    RowsThenCols,
}

/// Apply the z-transform along both directions in the given order. The two
/// orders generally produce different matrices, which is precisely why a
/// symmetric normalization needs something other than repeated z-scoring.
pub fn double_z(a: &Matrix, order: ZOrder) -> Result<Matrix, Error> {
    let z_cols = |m: &Matrix| -> Result<Matrix, Error> { Ok(z_transform(m)?.0) };
    let z_rows = |m: &Matrix| -> Result<Matrix, Error> {
        Ok(z_transform(&m.transpose())?.0.transpose())
    };
    match order {
        ZOrder::ColsThenRows => z_rows(&z_cols(a)?),
        ZOrder::RowsThenCols => z_cols(&z_rows(a)?),
    }
}

/// Polar form of a two-column point set.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarPoints {
    /// Columns (angle, radius): angle = atan2(y, x) in (-pi, pi], radius =
    /// the row RMS sqrt((x^2 + y^2)/2).
    pub points: Matrix,
    /// Rows equal to (0, 0), where the angle is undefined; they are emitted
    /// as (0, 0) and listed here.
    pub degenerate_rows: Vec<usize>,
}

/// Convert (x, y) rows to (angle, radius) rows. The radius is the row RMS
/// rather than the Euclidean norm, so a scale-invariant W plots at radius 1.
pub fn to_polar(points: &Matrix) -> Result<PolarPoints, Error> {
    if points.cols() != 2 {
        return Err(Error::NotTwoColumns { cols: points.cols() });
    }
    let mut data = Vec::with_capacity(points.rows() * 2);
    let mut degenerate_rows = Vec::new();
    for i in 0..points.rows() {
        let x = points.get(i, 0);
        let y = points.get(i, 1);
        if x == 0.0 && y == 0.0 {
            degenerate_rows.push(i);
            data.push(0.0);
            data.push(0.0);
        } else {
            data.push(fp::atan2(y, x));
            data.push(fp::sqrt((x * x + y * y) / 2.0));
        }
    }
    Ok(PolarPoints {
        points: Matrix::dense(points.rows(), 2, data)?,
        degenerate_rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<f64>>) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    fn col(values: Vec<f64>) -> Matrix {
        Matrix::dense(values.len(), 1, values).unwrap()
    }

    #[test]
    fn z_transform_single_column() {
        let (z, params) = z_transform(&col(vec![1.0, 2.0, 3.0])).unwrap();
        assert_eq!(params.mu, vec![2.0]);
        assert!((params.sd[0] - (2.0 / 3.0_f64).sqrt()).abs() < 1e-15);
        let expect = 1.224744871391589;
        assert!((z.get(0, 0) + expect).abs() < 1e-12);
        assert!(z.get(1, 0).abs() < 1e-15);
        assert!((z.get(2, 0) - expect).abs() < 1e-12);
    }

    #[test]
    fn z_transform_two_values() {
        let (z, params) = z_transform(&col(vec![-5.0, 5.0])).unwrap();
        assert_eq!(params.mu, vec![0.0]);
        assert_eq!(params.sd, vec![5.0]);
        assert_eq!(z.get(0, 0), -1.0);
        assert_eq!(z.get(1, 0), 1.0);
    }

    #[test]
    fn z_transform_constant_column_errors() {
        let err = z_transform(&col(vec![4.0, 4.0, 4.0])).unwrap_err();
        assert_eq!(err, Error::ConstantColumn { col: 0 });
    }

    #[test]
    fn z_transform_needs_two_rows() {
        let err = z_transform(&Matrix::ones(1, 3)).unwrap_err();
        assert_eq!(err, Error::TooFewRows { needed: 2, got: 1 });
    }

    #[test]
    fn z_output_is_standardized() {
        let a = m(vec![
            vec![1.0, 10.0, -3.0],
            vec![2.0, 14.0, 0.5],
            vec![4.0, 9.0, 2.0],
            vec![0.5, 11.0, 1.0],
        ]);
        let (z, _) = z_transform(&a).unwrap();
        for j in 0..z.cols() {
            let mut sum = 0.0;
            let mut sq = 0.0;
            for i in 0..z.rows() {
                sum += z.get(i, j);
                sq += z.get(i, j) * z.get(i, j);
            }
            let mean = sum / z.rows() as f64;
            let sd = (sq / z.rows() as f64 - mean * mean).sqrt();
            assert!(mean.abs() <= 1e-12);
            assert!((sd - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn z_transform_is_idempotent() {
        let a = m(vec![
            vec![1.0, 10.0],
            vec![2.0, 14.0],
            vec![4.0, 9.0],
        ]);
        let (z1, _) = z_transform(&a).unwrap();
        let (z2, _) = z_transform(&z1).unwrap();
        assert!(z1.max_abs_diff(&z2).unwrap() <= 1e-12);
    }

    #[test]
    fn log_z_matches_shifted_logs() {
        use core::f64::consts::E;
        let (z, _) = log_z_transform(&col(vec![1.0, E, E * E])).unwrap();
        let expect = 1.224744871391589;
        assert!((z.get(0, 0) + expect).abs() < 1e-12);
        assert!(z.get(1, 0).abs() < 1e-12);
        assert!((z.get(2, 0) - expect).abs() < 1e-12);
    }

    #[test]
    fn log_z_rejects_non_positive() {
        let err = log_z_transform(&m(vec![vec![1.0, -2.0], vec![3.0, 4.0]])).unwrap_err();
        assert_eq!(
            err,
            Error::NonPositiveEntry { row: 0, col: 1, value: -2.0 }
        );
        let err = log_z_transform(&m(vec![vec![1.0, 0.0], vec![3.0, 4.0]])).unwrap_err();
        assert!(matches!(err, Error::NonPositiveEntry { row: 0, col: 1, .. }));
    }

    #[test]
    fn log_z_of_ones_is_degenerate() {
        let err = log_z_transform(&Matrix::ones(3, 2)).unwrap_err();
        assert_eq!(err, Error::ConstantColumn { col: 0 });
    }

    #[test]
    fn log_base_cancels() {
        let a = m(vec![vec![1.0, 8.0], vec![2.0, 3.0], vec![5.0, 1.5]]);
        let (z_nat, _) = log_z_transform(&a).unwrap();
        // base-2 logs are ln(x)/ln(2); the column-wise rescale cancels in z
        let mut log2 = a.clone();
        log2.map_entries_in_place(|_, _, v| v.log2());
        let (z_base2, _) = z_transform(&log2).unwrap();
        assert!(z_nat.max_abs_diff(&z_base2).unwrap() <= 1e-12);
    }

    #[test]
    fn double_z_orders_differ_generically() {
        let mut rng = crate::rng::SeededRng::new(3);
        let a = m((0..4)
            .map(|_| (0..5).map(|_| rng.range(-2.0, 2.0)).collect())
            .collect());
        let cr = double_z(&a, ZOrder::ColsThenRows).unwrap();
        let rc = double_z(&a, ZOrder::RowsThenCols).unwrap();
        assert!(cr.max_abs_diff(&rc).unwrap() > 1e-3);
    }

    #[test]
    fn double_z_fixed_point_maps_to_itself() {
        // Rows and columns of this matrix are already standardized in both
        // directions, so either order returns it unchanged.
        let a = m(vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        for order in [ZOrder::ColsThenRows, ZOrder::RowsThenCols] {
            let z = double_z(&a, order).unwrap();
            assert!(z.max_abs_diff(&a).unwrap() <= 1e-15);
        }
    }

    #[test]
    fn polar_examples() {
        use core::f64::consts::{FRAC_PI_4, PI};
        let p = to_polar(&m(vec![vec![1.0, 1.0], vec![3.0, 4.0], vec![-1.0, 0.0]])).unwrap();
        assert!(p.degenerate_rows.is_empty());
        assert!((p.points.get(0, 0) - FRAC_PI_4).abs() < 1e-15);
        assert!((p.points.get(0, 1) - 1.0).abs() < 1e-15);
        assert!((p.points.get(1, 0) - 4.0_f64.atan2(3.0)).abs() < 1e-15);
        assert!((p.points.get(1, 1) - 12.5_f64.sqrt()).abs() < 1e-15);
        assert_eq!(p.points.get(2, 0), PI);
        assert!((p.points.get(2, 1) - 0.5_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn polar_flags_origin_rows() {
        let p = to_polar(&m(vec![vec![0.0, 0.0], vec![1.0, 2.0]])).unwrap();
        assert_eq!(p.degenerate_rows, vec![0]);
        assert_eq!(p.points.get(0, 0), 0.0);
        assert_eq!(p.points.get(0, 1), 0.0);
    }

    #[test]
    fn polar_round_trips() {
        let pts = m(vec![vec![0.3, -1.7], vec![-2.5, 0.4], vec![1.0, 1.0]]);
        let polar = to_polar(&pts).unwrap();
        for i in 0..pts.rows() {
            let angle = polar.points.get(i, 0);
            let radius = polar.points.get(i, 1);
            let x = radius * 2.0_f64.sqrt() * angle.cos();
            let y = radius * 2.0_f64.sqrt() * angle.sin();
            assert!((x - pts.get(i, 0)).abs() <= 1e-12);
            assert!((y - pts.get(i, 1)).abs() <= 1e-12);
        }
    }

    #[test]
    fn polar_needs_two_columns() {
        let err = to_polar(&Matrix::ones(3, 3)).unwrap_err();
        assert_eq!(err, Error::NotTwoColumns { cols: 3 });
    }
}
