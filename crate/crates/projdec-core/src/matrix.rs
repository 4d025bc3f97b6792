//! Real m×n matrices, dense or sparse, with the RMS scale measures and
//! diagonal scalings the decomposition is built from.
//!
//! Determinism contract: every reduction (RMS, sums) accumulates left to
//! right over entries in row-major order. Zero entries contribute an exact
//! `+0.0` to a sum of squares, so the dense and sparse representations of
//! the same values produce bit-identical results. Sparse storage is kept
//! sorted row-major to preserve this order.

use alloc::vec;
use alloc::vec::Vec;

use crate::fp;
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
enum Storage {
    /// Row-major, length = rows * cols.
    Dense(Vec<f64>),
    /// Sorted row-major, no explicit zeros, no duplicate positions.
    Sparse(Vec<(usize, usize, f64)>),
}

/// A real m×n matrix. Immutable after construction; all operations return
/// new values and preserve the representation (dense stays dense, sparse
/// stays sparse) unless documented otherwise.
#[derive(Debug, Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl Matrix {
    /// Dense matrix from row-major data.
    pub fn dense(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::DenseLengthMismatch {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            storage: Storage::Dense(data),
        })
    }

    /// Dense matrix from a list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRow {
                    row: i,
                    len: row.len(),
                    expected: cols,
                });
            }
            data.extend_from_slice(row);
        }
        Self::dense(rows.len(), cols, data)
    }

    /// Sparse matrix from coordinate triples. Entries are sorted row-major;
    /// explicit zeros and duplicate positions are rejected.
    pub fn sparse(rows: usize, cols: usize, entries: Vec<(usize, usize, f64)>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = entries;
        for &(i, j, v) in &entries {
            if i >= rows || j >= cols {
                return Err(Error::EntryOutOfBounds {
                    row: i,
                    col: j,
                    rows,
                    cols,
                });
            }
            if v == 0.0 {
                return Err(Error::ExplicitZero { row: i, col: j });
            }
        }
        entries.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                return Err(Error::DuplicateEntry {
                    row: pair[0].0,
                    col: pair[0].1,
                });
            }
        }
        Ok(Self {
            rows,
            cols,
            storage: Storage::Sparse(entries),
        })
    }

    /// Dense all-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::dense(rows, cols, vec![1.0; rows * cols]).expect("rows and cols are nonzero")
    }

    /// Sparse n×n identity.
    pub fn identity(n: usize) -> Self {
        Self::sparse(n, n, (0..n).map(|i| (i, i, 1.0)).collect()).expect("valid identity")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    /// Number of stored nonzero entries (counts actual nonzeros for dense).
    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(d) => d.iter().filter(|&&v| v != 0.0).count(),
            Storage::Sparse(e) => e.len(),
        }
    }

    /// Entry at (row, col). Panics if out of range.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        assert!(row < self.rows && col < self.cols, "index out of range");
        match &self.storage {
            Storage::Dense(d) => d[row * self.cols + col],
            Storage::Sparse(e) => match e.binary_search_by(|probe| (probe.0, probe.1).cmp(&(row, col))) {
                Ok(k) => e[k].2,
                Err(_) => 0.0,
            },
        }
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, f64)> {
        match &self.storage {
            Storage::Dense(d) => {
                let mut out = Vec::new();
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let v = d[i * self.cols + j];
                        if v != 0.0 {
                            out.push((i, j, v));
                        }
                    }
                }
                out
            }
            Storage::Sparse(e) => e.clone(),
        }
    }

    /// Same values, dense representation.
    pub fn to_dense(&self) -> Matrix {
        match &self.storage {
            Storage::Dense(_) => self.clone(),
            Storage::Sparse(e) => {
                let mut data = vec![0.0; self.rows * self.cols];
                for &(i, j, v) in e {
                    data[i * self.cols + j] = v;
                }
                Matrix {
                    rows: self.rows,
                    cols: self.cols,
                    storage: Storage::Dense(data),
                }
            }
        }
    }

    /// Same values, sparse representation (drops zeros).
    pub fn to_sparse(&self) -> Matrix {
        match &self.storage {
            Storage::Sparse(_) => self.clone(),
            Storage::Dense(_) => Matrix {
                rows: self.rows,
                cols: self.cols,
                storage: Storage::Sparse(self.nonzero_entries()),
            },
        }
    }

    /// Root-mean-square of all entries: sqrt(sum a_ij^2 / (m*n)).
    /// Zero iff the matrix is entirely zero.
    pub fn rms(&self) -> f64 {
        let mut sum = 0.0;
        match &self.storage {
            Storage::Dense(d) => {
                for &v in d {
                    sum += v * v;
                }
            }
            Storage::Sparse(e) => {
                for &(_, _, v) in e {
                    sum += v * v;
                }
            }
        }
        fp::sqrt(sum / (self.rows * self.cols) as f64)
    }

    /// Per-row RMS: element i is sqrt(sum_j a_ij^2 / n). Zero rows yield 0.
    pub fn rms_rows(&self) -> ScalingVector {
        let mut sums = vec![0.0; self.rows];
        match &self.storage {
            Storage::Dense(d) => {
                for i in 0..self.rows {
                    let mut s = 0.0;
                    for &v in &d[i * self.cols..(i + 1) * self.cols] {
                        s += v * v;
                    }
                    sums[i] = s;
                }
            }
            Storage::Sparse(e) => {
                for &(i, _, v) in e {
                    sums[i] += v * v;
                }
            }
        }
        let n = self.cols as f64;
        ScalingVector::new(sums.into_iter().map(|s| fp::sqrt(s / n)).collect())
    }

    /// Per-column RMS: element j is sqrt(sum_i a_ij^2 / m). Zero columns yield 0.
    pub fn rms_cols(&self) -> ScalingVector {
        let mut sums = vec![0.0; self.cols];
        match &self.storage {
            Storage::Dense(d) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let v = d[i * self.cols + j];
                        sums[j] += v * v;
                    }
                }
            }
            Storage::Sparse(e) => {
                for &(_, j, v) in e {
                    sums[j] += v * v;
                }
            }
        }
        let m = self.rows as f64;
        ScalingVector::new(sums.into_iter().map(|s| fp::sqrt(s / m)).collect())
    }

    /// Per-row sums in row-major order.
    pub fn row_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.rows];
        match &self.storage {
            Storage::Dense(d) => {
                for i in 0..self.rows {
                    let mut s = 0.0;
                    for &v in &d[i * self.cols..(i + 1) * self.cols] {
                        s += v;
                    }
                    sums[i] = s;
                }
            }
            Storage::Sparse(e) => {
                for &(i, _, v) in e {
                    sums[i] += v;
                }
            }
        }
        sums
    }

    /// Per-column sums, accumulated in row-major order.
    pub fn col_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.cols];
        match &self.storage {
            Storage::Dense(d) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        sums[j] += d[i * self.cols + j];
                    }
                }
            }
            Storage::Sparse(e) => {
                for &(_, j, v) in e {
                    sums[j] += v;
                }
            }
        }
        sums
    }

    fn check_scaling(&self, s: &ScalingVector, expected: usize) -> Result<(), Error> {
        if s.len() != expected {
            return Err(Error::ScalingLengthMismatch {
                expected,
                got: s.len(),
            });
        }
        if let Some(index) = s.as_slice().iter().position(|&v| v == 0.0) {
            return Err(Error::ZeroScalingFactor { index });
        }
        Ok(())
    }

    /// D_s * M: multiply row i by s[i]. Factors must be nonzero so the
    /// sparsity pattern is unchanged.
    pub fn scale_rows(&self, s: &ScalingVector) -> Result<Matrix, Error> {
        self.check_scaling(s, self.rows)?;
        let mut out = self.clone();
        out.map_entries_in_place(|i, _, v| v * s[i]);
        Ok(out)
    }

    /// M * D_s: multiply column j by s[j]. Factors must be nonzero.
    pub fn scale_cols(&self, s: &ScalingVector) -> Result<Matrix, Error> {
        self.check_scaling(s, self.cols)?;
        let mut out = self.clone();
        out.map_entries_in_place(|_, j, v| v * s[j]);
        Ok(out)
    }

    /// Elementwise |a_ij|^p. Signs are discarded; non-integer exponents
    /// require all entries nonnegative.
    pub fn hadamard_power(&self, p: f64) -> Result<Matrix, Error> {
        let integer_p = p.is_finite() && fp::trunc(p) == p;
        if !integer_p {
            if let Some((i, j, v)) = self.first_entry_where(|v| v < 0.0) {
                return Err(Error::NegativeBaseFractionalExponent {
                    row: i,
                    col: j,
                    value: v,
                    exponent: p,
                });
            }
        }
        let mut out = self.clone();
        out.map_entries_in_place(|_, _, v| {
            let a = fp::abs(v);
            if p == 2.0 {
                a * a
            } else if p == 1.0 {
                a
            } else if p == 0.5 {
                fp::sqrt(a)
            } else {
                fp::powf(a, p)
            }
        });
        Ok(out)
    }

    /// The transpose. Sparse stays sparse (entries re-sorted row-major).
    pub fn transpose(&self) -> Matrix {
        match &self.storage {
            Storage::Dense(d) => {
                let mut data = vec![0.0; self.rows * self.cols];
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        data[j * self.rows + i] = d[i * self.cols + j];
                    }
                }
                Matrix {
                    rows: self.cols,
                    cols: self.rows,
                    storage: Storage::Dense(data),
                }
            }
            Storage::Sparse(e) => {
                let mut entries: Vec<(usize, usize, f64)> =
                    e.iter().map(|&(i, j, v)| (j, i, v)).collect();
                entries.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
                Matrix {
                    rows: self.cols,
                    cols: self.rows,
                    storage: Storage::Sparse(entries),
                }
            }
        }
    }

    /// Largest elementwise absolute difference between two matrices of the
    /// same shape.
    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                a_rows: self.rows,
                a_cols: self.cols,
                b_rows: other.rows,
                b_cols: other.cols,
            });
        }
        let mut max = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = fp::abs(self.get(i, j) - other.get(i, j));
                if d > max {
                    max = d;
                }
            }
        }
        Ok(max)
    }

    /// First stored entry (row-major) whose value satisfies the predicate.
    pub(crate) fn first_entry_where(&self, pred: impl Fn(f64) -> bool) -> Option<(usize, usize, f64)> {
        match &self.storage {
            Storage::Dense(d) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let v = d[i * self.cols + j];
                        if pred(v) {
                            return Some((i, j, v));
                        }
                    }
                }
                None
            }
            Storage::Sparse(e) => e.iter().copied().find(|&(_, _, v)| pred(v)),
        }
    }

    /// Apply a position-aware map to every stored entry. For sparse storage
    /// only the nonzeros are visited, which is exactly the set of entries a
    /// nonzero-factor scaling can change.
    pub(crate) fn map_entries_in_place(&mut self, f: impl Fn(usize, usize, f64) -> f64) {
        let cols = self.cols;
        match &mut self.storage {
            Storage::Dense(d) => {
                for (k, v) in d.iter_mut().enumerate() {
                    *v = f(k / cols, k % cols, *v);
                }
            }
            Storage::Sparse(e) => {
                for entry in e.iter_mut() {
                    entry.2 = f(entry.0, entry.1, entry.2);
                }
            }
        }
    }

    /// Divide row i by div[i] in place (solver hot path).
    pub(crate) fn div_rows_in_place(&mut self, div: &[f64]) {
        debug_assert_eq!(div.len(), self.rows);
        self.map_entries_in_place(|i, _, v| v / div[i]);
    }
}

/// Value equality: same shape and bitwise-equal entries, regardless of
/// representation.
impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        match (&self.storage, &other.storage) {
            (Storage::Dense(a), Storage::Dense(b)) => {
                a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits())
            }
            _ => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        if self.get(i, j).to_bits() != other.get(i, j).to_bits() {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

/// A vector of per-row or per-column scale factors. Positivity is required
/// by the decomposition (and validated there); the general scaling
/// operations only require factors to be nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingVector(Vec<f64>);

impl ScalingVector {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn ones(len: usize) -> Self {
        Self(vec![1.0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|&v| v > 0.0)
    }

    /// First index whose value is not strictly positive, if any.
    pub fn first_non_positive(&self) -> Option<(usize, f64)> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &v)| !(v > 0.0))
            .map(|(i, &v)| (i, v))
    }

    /// RMS of the factors: sqrt(sum v_i^2 / len).
    pub fn rms(&self) -> f64 {
        let mut sum = 0.0;
        for &v in &self.0 {
            sum += v * v;
        }
        fp::sqrt(sum / self.0.len() as f64)
    }

    /// Sum of squared factors.
    pub fn sum_squares(&self) -> f64 {
        let mut sum = 0.0;
        for &v in &self.0 {
            sum += v * v;
        }
        sum
    }

    /// Elementwise reciprocal.
    pub fn recip(&self) -> Self {
        Self(self.0.iter().map(|&v| 1.0 / v).collect())
    }

    /// Elementwise product.
    pub fn mul_elementwise(&self, other: &Self) -> Result<Self, Error> {
        if self.len() != other.len() {
            return Err(Error::ScalingLengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect(),
        ))
    }

    /// Multiply every factor by a scalar.
    pub fn scaled(&self, g: f64) -> Self {
        Self(self.0.iter().map(|&v| v * g).collect())
    }
}

impl core::ops::Index<usize> for ScalingVector {
    type Output = f64;
    fn index(&self, index: usize) -> &f64 {
        &self.0[index]
    }
}

impl From<Vec<f64>> for ScalingVector {
    fn from(values: Vec<f64>) -> Self {
        Self(values)
    }
}

impl<'a> IntoIterator for &'a ScalingVector {
    type Item = &'a f64;
    type IntoIter = core::slice::Iter<'a, f64>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
