//! Projective decomposition by iterative proportional scaling.
//!
//! `decompose` factors A = sigma * D_alpha * W * D_beta by alternately
//! rescaling rows and columns of W until every row and column RMS is 1.
//! `sinkhorn_decompose` reaches the same factorization along an independent
//! route: classic sum-targeting Sinkhorn-Knopp iteration on the elementwise
//! square of A, whose row/column sums are the squared row/column L2 norms.

use alloc::vec;
use alloc::vec::Vec;

use crate::fp;
use crate::matrix::{Matrix, ScalingVector};
use crate::Error;

/// How the free constant shared between alpha and beta is pinned down.
/// `D_alpha W D_beta` is unchanged by (alpha, beta) -> (g*alpha, beta/g)
/// for any g > 0, so some convention is needed for unique factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugePolicy {
    /// Choose g so that RMS(alpha) = RMS(beta). Always feasible.
    Balanced,
    /// Choose g so the concatenation of alpha and beta has unit RMS, i.e.
    /// g^2*sum(alpha^2) + sum(beta^2)/g^2 = m + n. This has no real solution
    /// when sum(alpha^2)*sum(beta^2) > ((m+n)/2)^2; the balanced gauge is
    /// used instead and the fallback is flagged.
    UnitConcatIfFeasible,
    /// Leave alpha and beta as produced by the iteration.
    None,
}

/// Solver settings.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Max allowed deviation of any row/column RMS of W from 1.
    pub tol: f64,
    /// Iteration cap; one iteration is a full row pass plus column pass.
    pub max_iter: usize,
    /// Number of iterations over which a residual improvement smaller than
    /// `stall_factor * tol` is reported as a stall.
    pub stall_window: usize,
    /// See `stall_window`.
    pub stall_factor: f64,
    pub gauge: GaugePolicy,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 10_000,
            stall_window: 100,
            stall_factor: 1e-3,
            gauge: GaugePolicy::Balanced,
        }
    }
}

/// Why the iteration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Converged,
    MaxIterations,
    Stalled,
    /// Never produced by `decompose` (an all-zero row or column is an error
    /// before iterating); kept in the status vocabulary so reports written
    /// by other layers can name the condition.
    InfeasibleZeroLine,
}

/// Iteration diagnostics attached to every decomposition.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    /// Full (row + column) passes performed.
    pub iterations: usize,
    /// Final max |row/column RMS of W - 1|.
    pub residual: f64,
    pub status: SolveStatus,
    /// True when `UnitConcatIfFeasible` had no real solution and the
    /// balanced gauge was applied instead.
    pub gauge_fallback: bool,
    /// Residual after 0, 1, 2, ... iterations (index 0 is the starting
    /// matrix A/sigma before any pass).
    pub residual_history: Vec<f64>,
}

/// The factorization A = sigma * D_alpha * W * D_beta.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Global scale, equal to rms(A) by construction.
    pub sigma: f64,
    /// Strictly positive row factors, length m.
    pub alpha: ScalingVector,
    /// Strictly positive column factors, length n.
    pub beta: ScalingVector,
    /// Scale-invariant form: unit row/column RMS within `report.residual`,
    /// same sign pattern as A.
    pub w: Matrix,
    pub report: ConvergenceReport,
}

/// A structural problem that rules out (or trivializes) the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    ZeroRow(usize),
    ZeroColumn(usize),
    AllZero,
}

/// Scan for all-zero rows/columns and the all-zero matrix. Pure diagnostic;
/// `decompose` turns these into errors.
pub fn precheck(a: &Matrix) -> Vec<Defect> {
    let mut defects = Vec::new();
    let mut row_seen = vec![false; a.rows()];
    let mut col_seen = vec![false; a.cols()];
    for (i, j, _) in a.nonzero_entries() {
        row_seen[i] = true;
        col_seen[j] = true;
    }
    if !row_seen.iter().any(|&s| s) {
        defects.push(Defect::AllZero);
    }
    defects.extend(
        row_seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| !s)
            .map(|(i, _)| Defect::ZeroRow(i)),
    );
    defects.extend(
        col_seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| !s)
            .map(|(j, _)| Defect::ZeroColumn(j)),
    );
    defects
}

/// Max over all rows and columns of |RMS - 1|: how far W is from
/// scale-invariant form.
pub fn residual(w: &Matrix) -> f64 {
    let mut max = 0.0;
    for &r in w.rms_rows().as_slice() {
        let d = fp::abs(r - 1.0);
        if d > max {
            max = d;
        }
    }
    for &c in w.rms_cols().as_slice() {
        let d = fp::abs(c - 1.0);
        if d > max {
            max = d;
        }
    }
    max
}

/// Result of a gauge fix: rescaled factors plus whether the unit-concat
/// policy had to fall back to balanced.
#[derive(Debug, Clone)]
pub struct GaugeFix {
    pub alpha: ScalingVector,
    pub beta: ScalingVector,
    pub fell_back: bool,
}

/// Rescale (alpha, beta) -> (g*alpha, beta/g) with g > 0 chosen by `policy`.
/// The reconstruction sigma * D_alpha W D_beta is unchanged.
pub fn gauge_fix(
    alpha: &ScalingVector,
    beta: &ScalingVector,
    policy: GaugePolicy,
) -> Result<GaugeFix, Error> {
    for v in [alpha, beta] {
        if let Some((index, value)) = v.first_non_positive() {
            return Err(Error::NonPositiveScalingFactor { index, value });
        }
    }
    let balanced_g = fp::sqrt(beta.rms() / alpha.rms());
    let (g, fell_back) = match policy {
        GaugePolicy::None => (1.0, false),
        GaugePolicy::Balanced => (balanced_g, false),
        GaugePolicy::UnitConcatIfFeasible => {
            // g^2*Sa + Sb/g^2 = m+n, a quadratic in t = g^2:
            // Sa*t^2 - (m+n)*t + Sb = 0.
            let sa = alpha.sum_squares();
            let sb = beta.sum_squares();
            let total = (alpha.len() + beta.len()) as f64;
            let disc = total * total - 4.0 * sa * sb;
            if disc < 0.0 {
                (balanced_g, true)
            } else {
                let root = fp::sqrt(disc);
                let t_lo = (total - root) / (2.0 * sa);
                let t_hi = (total + root) / (2.0 * sa);
                let target = balanced_g * balanced_g;
                let t = if fp::abs(t_lo - target) <= fp::abs(t_hi - target) {
                    t_lo
                } else {
                    t_hi
                };
                (fp::sqrt(t), false)
            }
        }
    };
    Ok(GaugeFix {
        alpha: alpha.scaled(g),
        beta: beta.scaled(1.0 / g),
        fell_back,
    })
}

/// sigma * D_alpha * W * D_beta, computed entrywise as
/// ((sigma * alpha_i) * w_ij) * beta_j.
pub fn reconstruct(d: &Decomposition) -> Matrix {
    let sigma = d.sigma;
    let alpha = d.alpha.as_slice();
    let beta = d.beta.as_slice();
    let mut out = d.w.clone();
    out.map_entries_in_place(|i, j, v| ((sigma * alpha[i]) * v) * beta[j]);
    out
}

fn reject_infeasible(a: &Matrix) -> Result<(), Error> {
    let defects = precheck(a);
    if defects.contains(&Defect::AllZero) {
        return Err(Error::AllZeroMatrix);
    }
    if !defects.is_empty() {
        let mut zero_rows = Vec::new();
        let mut zero_cols = Vec::new();
        for d in defects {
            match d {
                Defect::ZeroRow(i) => zero_rows.push(i),
                Defect::ZeroColumn(j) => zero_cols.push(j),
                Defect::AllZero => {}
            }
        }
        return Err(Error::InfeasibleZeroLines { zero_rows, zero_cols });
    }
    Ok(())
}

/// W rebuilt from the factors: w_ij = a_ij / ((sigma * alpha_i) * beta_j).
/// Rebuilding after each pass keeps the factorization exact to a few ulps
/// regardless of how many iterations ran, and zero entries of A stay
/// exactly zero in W.
fn rebuild_w(a: &Matrix, sigma: f64, alpha: &ScalingVector, beta: &ScalingVector) -> Matrix {
    let alpha = alpha.as_slice();
    let beta = beta.as_slice();
    let mut w = a.clone();
    w.map_entries_in_place(|i, j, v| v / ((sigma * alpha[i]) * beta[j]));
    w
}

struct IterationOutcome {
    alpha: Vec<f64>,
    beta: Vec<f64>,
    w: Matrix,
    iterations: usize,
    residual: f64,
    status: SolveStatus,
    history: Vec<f64>,
}

/// Shared termination logic for both solver routes. `step` performs one full
/// pass updating (alpha, beta) and returns nothing; `measure` produces the
/// current (W, residual) from the factors.
fn run_iteration(
    a: &Matrix,
    sigma: f64,
    cfg: &SolverConfig,
    mut step: impl FnMut(&mut Vec<f64>, &mut Vec<f64>),
) -> IterationOutcome {
    let mut alpha = vec![1.0; a.rows()];
    let mut beta = vec![1.0; a.cols()];

    let measure = |alpha: &Vec<f64>, beta: &Vec<f64>| {
        let w = rebuild_w(
            a,
            sigma,
            &ScalingVector::new(alpha.clone()),
            &ScalingVector::new(beta.clone()),
        );
        let res = residual(&w);
        (w, res)
    };

    let (mut w, mut res) = measure(&alpha, &beta);
    let mut history = vec![res];
    if res <= cfg.tol {
        return IterationOutcome {
            alpha,
            beta,
            w,
            iterations: 0,
            residual: res,
            status: SolveStatus::Converged,
            history,
        };
    }

    let mut status = SolveStatus::MaxIterations;
    let mut iterations = cfg.max_iter;
    for k in 1..=cfg.max_iter {
        step(&mut alpha, &mut beta);
        let (w_k, res_k) = measure(&alpha, &beta);
        w = w_k;
        res = res_k;
        history.push(res);
        if res <= cfg.tol {
            status = SolveStatus::Converged;
            iterations = k;
            break;
        }
        if k >= cfg.stall_window && history[k - cfg.stall_window] - res < cfg.stall_factor * cfg.tol
        {
            status = SolveStatus::Stalled;
            iterations = k;
            break;
        }
    }

    IterationOutcome {
        alpha,
        beta,
        w,
        iterations,
        residual: res,
        status,
        history,
    }
}

fn finish(
    outcome: IterationOutcome,
    sigma: f64,
    cfg: &SolverConfig,
) -> Result<Decomposition, Error> {
    let fixed = gauge_fix(
        &ScalingVector::new(outcome.alpha),
        &ScalingVector::new(outcome.beta),
        cfg.gauge,
    )?;
    Ok(Decomposition {
        sigma,
        alpha: fixed.alpha,
        beta: fixed.beta,
        w: outcome.w,
        report: ConvergenceReport {
            iterations: outcome.iterations,
            residual: outcome.residual,
            status: outcome.status,
            gauge_fallback: fixed.fell_back,
            residual_history: outcome.history,
        },
    })
}

/// Compute the projective decomposition of A.
///
/// sigma is rms(A); W starts at A/sigma and is rescaled by alternating
/// row and column RMS normalization (rows first) until the residual drops
/// to `cfg.tol`, the iteration cap is hit, or progress stalls.
/// Non-convergence is not an error: the best-effort factors are returned
/// with the status recorded in the report. All-zero rows or columns are
/// rejected up front (unit RMS is unattainable for them), as is the
/// all-zero matrix.
pub fn decompose(a: &Matrix, cfg: &SolverConfig) -> Result<Decomposition, Error> {
    reject_infeasible(a)?;
    let sigma = a.rms();
    let mut w_work = rebuild_w(a, sigma, &ScalingVector::ones(a.rows()), &ScalingVector::ones(a.cols()));

    let outcome = run_iteration(a, sigma, cfg, |alpha, beta| {
        let r = w_work.rms_rows();
        for (ai, ri) in alpha.iter_mut().zip(r.as_slice()) {
            *ai *= ri;
        }
        w_work.div_rows_in_place(r.as_slice());
        let c = w_work.rms_cols();
        for (bj, cj) in beta.iter_mut().zip(c.as_slice()) {
            *bj *= cj;
        }
        // The column division is folded into the rebuild done by the
        // residual measurement; dividing w_work here as well would apply
        // it twice on the next pass.
        w_work = rebuild_w(
            a,
            sigma,
            &ScalingVector::new(alpha.clone()),
            &ScalingVector::new(beta.clone()),
        );
    });

    finish(outcome, sigma, cfg)
}

/// Independent route to the same factorization: square every entry, run
/// classic sum-targeting Sinkhorn-Knopp driving row sums to n and column
/// sums to m, then take square roots of the accumulated factors and restore
/// the signs of A. Agreement with `decompose` is a strong end-to-end check,
/// since this path balances sums rather than RMS values.
pub fn sinkhorn_decompose(a: &Matrix, cfg: &SolverConfig) -> Result<Decomposition, Error> {
    reject_infeasible(a)?;
    let sigma = a.rms();
    let squared = a.hadamard_power(2.0).expect("exponent 2 is integer");
    let row_target = a.cols() as f64;
    let col_target = a.rows() as f64;

    // Accumulated sum-balancing factors: scaled = D_r * squared * D_c.
    let mut r = vec![1.0; a.rows()];
    let mut c = vec![1.0; a.cols()];
    let mut b_work = squared.clone();

    let outcome = run_iteration(a, sigma, cfg, |alpha, beta| {
        let row_sums = b_work.row_sums();
        for (ri, s) in r.iter_mut().zip(&row_sums) {
            *ri *= row_target / s;
        }
        let mut b_rows = squared.clone();
        b_rows.map_entries_in_place(|i, j, v| (r[i] * v) * c[j]);
        let col_sums = b_rows.col_sums();
        for (cj, s) in c.iter_mut().zip(&col_sums) {
            *cj *= col_target / s;
        }
        let mut b_next = squared.clone();
        b_next.map_entries_in_place(|i, j, v| (r[i] * v) * c[j]);
        b_work = b_next;

        // Translate sum factors into decomposition factors:
        // w_ij = a_ij * sqrt(r_i) * sqrt(c_j), so alpha_i = 1/(sigma*sqrt(r_i))
        // and beta_j = 1/sqrt(c_j).
        for (ai, ri) in alpha.iter_mut().zip(&r) {
            *ai = 1.0 / (sigma * fp::sqrt(*ri));
        }
        for (bj, cj) in beta.iter_mut().zip(&c) {
            *bj = 1.0 / fp::sqrt(*cj);
        }
    });

    finish(outcome, sigma, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn m(rows: Vec<Vec<f64>>) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn all_ones_is_already_decomposed() {
        let d = decompose(&Matrix::ones(2, 3), &cfg()).unwrap();
        assert_eq!(d.sigma, 1.0);
        assert_eq!(d.report.status, SolveStatus::Converged);
        assert!(d.report.iterations <= 1);
        assert_eq!(d.w, Matrix::ones(2, 3));
        for a in &d.alpha {
            assert_eq!(*a, 1.0);
        }
        for b in &d.beta {
            assert_eq!(*b, 1.0);
        }
    }

    #[test]
    fn rank_one_matrix_gives_all_ones_w() {
        // [[1,3],[2,6]] = (1,2)^T (1,3); W must be the all-ones matrix with
        // alpha proportional to (1,2) and beta to (1,3).
        let a = m(vec![vec![1.0, 3.0], vec![2.0, 6.0]]);
        let d = decompose(&a, &cfg()).unwrap();
        assert_eq!(d.report.status, SolveStatus::Converged);
        assert!((d.sigma - 5.0 / 2.0_f64.sqrt()).abs() < 1e-14);
        assert!(d.w.max_abs_diff(&Matrix::ones(2, 2)).unwrap() <= 1e-12);
        assert!((d.alpha[1] / d.alpha[0] - 2.0).abs() < 1e-10);
        assert!((d.beta[1] / d.beta[0] - 3.0).abs() < 1e-10);

        let back = reconstruct(&d);
        assert!(back.max_abs_diff(&a).unwrap() <= 1e-12);
    }

    #[test]
    fn diagonal_matrix_closed_form() {
        // diag(2, -3): each row/column holds one nonzero, so |w_ii| = sqrt(2)
        // makes the length-2 rows and columns unit RMS.
        let a = m(vec![vec![2.0, 0.0], vec![0.0, -3.0]]);
        let d = decompose(&a, &cfg()).unwrap();
        assert_eq!(d.report.status, SolveStatus::Converged);
        assert!((d.sigma - 13.0_f64.sqrt() / 2.0).abs() < 1e-14);
        let expect = m(vec![vec![2.0_f64.sqrt(), 0.0], vec![0.0, -(2.0_f64.sqrt())]]);
        assert!(d.w.max_abs_diff(&expect).unwrap() <= 1e-12);
        assert!(reconstruct(&d).max_abs_diff(&a).unwrap() <= 1e-12);
        // magnitudes recovered through the positive factors
        assert!((d.sigma * d.alpha[0] * 2.0_f64.sqrt() * d.beta[0] - 2.0).abs() < 1e-12);
        assert!((d.sigma * d.alpha[1] * 2.0_f64.sqrt() * d.beta[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn sigma_is_rms_bitwise() {
        let a = m(vec![vec![0.3, 2.0, 1.7], vec![5.0, 0.2, 0.9]]);
        let d = decompose(&a, &cfg()).unwrap();
        assert_eq!(d.sigma.to_bits(), a.rms().to_bits());
    }

    #[test]
    fn precheck_reports_zero_lines() {
        let defects = precheck(&m(vec![vec![1.0, 0.0], vec![0.0, 0.0]]));
        assert_eq!(defects, vec![Defect::ZeroRow(1), Defect::ZeroColumn(1)]);

        assert!(precheck(&Matrix::identity(3)).is_empty());

        let defects = precheck(&m(vec![vec![0.0, 0.0]]));
        assert!(defects.contains(&Defect::AllZero));
    }

    #[test]
    fn zero_lines_are_rejected_before_iterating() {
        let err = decompose(&m(vec![vec![1.0, 0.0], vec![2.0, 0.0]]), &cfg()).unwrap_err();
        assert_eq!(
            err,
            Error::InfeasibleZeroLines {
                zero_rows: vec![],
                zero_cols: vec![1],
            }
        );
        let err = decompose(&m(vec![vec![0.0, 0.0]]), &cfg()).unwrap_err();
        assert_eq!(err, Error::AllZeroMatrix);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual(&Matrix::ones(3, 4)), 0.0);
        let s = 2.0_f64.sqrt();
        assert!(residual(&m(vec![vec![s, 0.0], vec![0.0, s]])) <= 1e-15);
        let doubled = m(vec![vec![2.0, 2.0], vec![2.0, 2.0]]);
        assert_eq!(residual(&doubled), 1.0);
    }

    #[test]
    fn gauge_balanced_example() {
        let fix = gauge_fix(
            &ScalingVector::new(vec![2.0, 2.0]),
            &ScalingVector::new(vec![0.5, 0.5]),
            GaugePolicy::Balanced,
        )
        .unwrap();
        assert_eq!(fix.alpha.as_slice(), &[1.0, 1.0]);
        assert_eq!(fix.beta.as_slice(), &[1.0, 1.0]);
        assert!(!fix.fell_back);
        // concatenation RMS is exactly 1
        let concat = fix.alpha.sum_squares() + fix.beta.sum_squares();
        assert_eq!((concat / 4.0).sqrt(), 1.0);
    }

    #[test]
    fn gauge_identity_on_unit_vectors() {
        for policy in [
            GaugePolicy::Balanced,
            GaugePolicy::UnitConcatIfFeasible,
            GaugePolicy::None,
        ] {
            let fix = gauge_fix(
                &ScalingVector::ones(3),
                &ScalingVector::ones(5),
                policy,
            )
            .unwrap();
            for v in fix.alpha.as_slice().iter().chain(fix.beta.as_slice()) {
                assert!((v - 1.0).abs() < 1e-15);
            }
            assert!(!fix.fell_back);
        }
    }

    #[test]
    fn gauge_unit_concat_solves_the_quadratic() {
        let alpha = ScalingVector::new(vec![0.5, 0.7]);
        let beta = ScalingVector::new(vec![0.9, 1.1, 0.6]);
        let fix = gauge_fix(&alpha, &beta, GaugePolicy::UnitConcatIfFeasible).unwrap();
        assert!(!fix.fell_back);
        let concat_rms = ((fix.alpha.sum_squares() + fix.beta.sum_squares()) / 5.0).sqrt();
        assert!((concat_rms - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gauge_unit_concat_falls_back_when_infeasible() {
        // sum(alpha^2)*sum(beta^2) = 32*32 > ((2+2)/2)^2
        let alpha = ScalingVector::new(vec![4.0; 2]);
        let beta = ScalingVector::new(vec![4.0; 2]);
        let fix = gauge_fix(&alpha, &beta, GaugePolicy::UnitConcatIfFeasible).unwrap();
        assert!(fix.fell_back);
        // fell back to balanced: RMS match
        assert!((fix.alpha.rms() - fix.beta.rms()).abs() < 1e-12);
    }

    #[test]
    fn gauge_rejects_non_positive() {
        let err = gauge_fix(
            &ScalingVector::new(vec![1.0, -2.0]),
            &ScalingVector::ones(2),
            GaugePolicy::Balanced,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonPositiveScalingFactor { index: 1, .. }));
    }

    #[test]
    fn reconstruct_identity_decomposition() {
        let w = m(vec![vec![1.0, -2.0], vec![3.0, 4.0]]);
        let d = Decomposition {
            sigma: 1.0,
            alpha: ScalingVector::ones(2),
            beta: ScalingVector::ones(2),
            w: w.clone(),
            report: ConvergenceReport {
                iterations: 0,
                residual: 0.0,
                status: SolveStatus::Converged,
                gauge_fallback: false,
                residual_history: vec![0.0],
            },
        };
        assert_eq!(reconstruct(&d), w);
    }

    #[test]
    fn gauge_shift_leaves_reconstruction_unchanged() {
        let a = m(vec![vec![1.0, 3.0], vec![2.0, 6.0]]);
        let d = decompose(&a, &cfg()).unwrap();
        // power-of-two gauge constants rescale exactly
        for g in [0.5, 2.0, 4.0] {
            let shifted = Decomposition {
                alpha: d.alpha.scaled(g),
                beta: d.beta.scaled(1.0 / g),
                ..d.clone()
            };
            assert_eq!(reconstruct(&shifted), reconstruct(&d));
        }
        // general constants agree to round-off
        let shifted = Decomposition {
            alpha: d.alpha.scaled(3.7),
            beta: d.beta.scaled(1.0 / 3.7),
            ..d.clone()
        };
        let diff = reconstruct(&shifted).max_abs_diff(&reconstruct(&d)).unwrap();
        assert!(diff <= 1e-14);
    }

    #[test]
    fn oracle_matches_decompose_on_rank_one() {
        let a = m(vec![vec![1.0, 3.0], vec![2.0, 6.0]]);
        let d = decompose(&a, &cfg()).unwrap();
        let o = sinkhorn_decompose(&a, &cfg()).unwrap();
        assert_eq!(o.report.status, SolveStatus::Converged);
        assert!(d.w.max_abs_diff(&o.w).unwrap() <= 1e-9);
        assert!(o.w.max_abs_diff(&Matrix::ones(2, 2)).unwrap() <= 1e-9);
    }

    #[test]
    fn oracle_identical_on_all_ones() {
        let a = Matrix::ones(3, 5);
        let d = decompose(&a, &cfg()).unwrap();
        let o = sinkhorn_decompose(&a, &cfg()).unwrap();
        assert!(d.report.iterations <= 1 && o.report.iterations <= 1);
        assert_eq!(d.w, o.w);
        assert_eq!(d.alpha, o.alpha);
        assert_eq!(d.beta, o.beta);
    }

    #[test]
    fn support_only_pattern_does_not_claim_convergence() {
        let a = m(vec![vec![1.0, 1.0], vec![1.0, 0.0]]);
        let d = decompose(&a, &cfg()).unwrap();
        assert_ne!(d.report.status, SolveStatus::Converged);
        assert!(d.report.residual > 1e-10);
    }

    #[test]
    fn mixed_sign_entries_converge() {
        let a = m(vec![vec![1.0, -2.0, 0.5], vec![-3.0, 4.0, -1.5], vec![2.0, 0.25, 7.0]]);
        let d = decompose(&a, &cfg()).unwrap();
        assert_eq!(d.report.status, SolveStatus::Converged);
        // signs preserved exactly
        for i in 0..3 {
            for j in 0..3 {
                let (aij, wij) = (a.get(i, j), d.w.get(i, j));
                assert_eq!(aij > 0.0, wij > 0.0);
                assert_eq!(aij < 0.0, wij < 0.0);
            }
        }
    }

    #[test]
    fn dense_and_sparse_inputs_agree_bitwise() {
        let dense = m(vec![vec![1.5, 0.0, 2.5], vec![0.0, 3.5, 0.0], vec![4.5, 0.0, 0.5]]);
        let sparse = dense.to_sparse();
        let d1 = decompose(&dense, &cfg()).unwrap();
        let d2 = decompose(&sparse, &cfg()).unwrap();
        assert_eq!(d1.sigma.to_bits(), d2.sigma.to_bits());
        assert_eq!(d1.w, d2.w);
        assert_eq!(d1.alpha, d2.alpha);
        assert_eq!(d1.beta, d2.beta);
        assert_eq!(d1.report.iterations, d2.report.iterations);
        assert!(d2.w.is_sparse());
    }
}
