//! Compressed sparse-row matrices over `f64`.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SparseError {
    #[error("dimension mismatch: matrix is {n}x{n}, vector has length {len}")]
    DimensionMismatch { n: usize, len: usize },
    #[error("invalid CSR structure: {0}")]
    InvalidStructure(String),
}

/// Square CSR matrix. Entry `(i, j)` nonzero means edge `i -> j` in the
/// underlying digraph; `matvec` computes `y = A x` with `A_ij` as stored,
/// so paths of length `k` correspond to entries of `A^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    n: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<f64>,
}

impl SparseMatrix {
    /// Build from raw CSR arrays, validating every structural invariant.
    pub fn from_csr(
        n: usize,
        row_offsets: Vec<usize>,
        col_indices: Vec<usize>,
        values: Vec<f64>,
    ) -> Result<Self, SparseError> {
        let m = SparseMatrix { n, row_offsets, col_indices, values };
        m.validate()?;
        Ok(m)
    }

    /// Build from (row, col, value) triplets; triplets must be unique but
    /// may come in any order.
    pub fn from_triplets(
        n: usize,
        mut triplets: Vec<(usize, usize, f64)>,
    ) -> Result<Self, SparseError> {
        triplets.sort_unstable_by_key(|&(i, j, _)| (i, j));
        for w in triplets.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(SparseError::InvalidStructure(format!(
                    "duplicate entry at ({}, {})",
                    w[0].0, w[0].1
                )));
            }
        }
        let mut row_offsets = vec![0usize; n + 1];
        for &(i, _, _) in &triplets {
            if i >= n {
                return Err(SparseError::InvalidStructure(format!(
                    "row index {i} out of range for n = {n}"
                )));
            }
            row_offsets[i + 1] += 1;
        }
        for i in 0..n {
            row_offsets[i + 1] += row_offsets[i];
        }
        let col_indices = triplets.iter().map(|&(_, j, _)| j).collect();
        let values = triplets.iter().map(|&(_, _, v)| v).collect();
        Self::from_csr(n, row_offsets, col_indices, values)
    }

    /// Empty n x n matrix.
    pub fn zero(n: usize) -> Self {
        SparseMatrix {
            n,
            row_offsets: vec![0; n + 1],
            col_indices: Vec::new(),
            values: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), SparseError> {
        let nnz = self.col_indices.len();
        if self.row_offsets.len() != self.n + 1 {
            return Err(SparseError::InvalidStructure(format!(
                "row_offsets has length {}, expected {}",
                self.row_offsets.len(),
                self.n + 1
            )));
        }
        if self.values.len() != nnz {
            return Err(SparseError::InvalidStructure(
                "values and col_indices lengths differ".into(),
            ));
        }
        if self.row_offsets[0] != 0 || self.row_offsets[self.n] != nnz {
            return Err(SparseError::InvalidStructure(
                "row_offsets must start at 0 and end at nnz".into(),
            ));
        }
        for i in 0..self.n {
            let (lo, hi) = (self.row_offsets[i], self.row_offsets[i + 1]);
            if lo > hi {
                return Err(SparseError::InvalidStructure(format!(
                    "row_offsets decreases at row {i}"
                )));
            }
            let row = &self.col_indices[lo..hi];
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(SparseError::InvalidStructure(format!(
                        "columns not strictly increasing in row {i}"
                    )));
                }
            }
            if let Some(&last) = row.last() {
                if last >= self.n {
                    return Err(SparseError::InvalidStructure(format!(
                        "column index {last} out of range in row {i}"
                    )));
                }
            }
        }
        for &v in &self.values {
            if !v.is_finite() || v == 0.0 {
                return Err(SparseError::InvalidStructure(format!(
                    "stored value {v} is not finite and nonzero"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.col_indices.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Column indices of row `i` (out-neighbors of vertex `i`).
    pub fn row(&self, i: usize) -> &[usize] {
        &self.col_indices[self.row_offsets[i]..self.row_offsets[i + 1]]
    }

    pub fn row_values(&self, i: usize) -> &[f64] {
        &self.values[self.row_offsets[i]..self.row_offsets[i + 1]]
    }

    /// Stored value at (i, j), or None for a structural zero.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        let row = self.row(i);
        row.binary_search(&j).ok().map(|pos| self.row_values(i)[pos])
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            self.row(i)
                .iter()
                .zip(self.row_values(i))
                .map(move |(&j, &v)| (i, j, v))
        })
    }

    /// y = A x, deterministic CSR row-order summation.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) -> Result<(), SparseError> {
        if x.len() != self.n || y.len() != self.n {
            return Err(SparseError::DimensionMismatch {
                n: self.n,
                len: x.len().max(y.len()),
            });
        }
        for i in 0..self.n {
            let mut acc = 0.0;
            for (&j, &v) in self.row(i).iter().zip(self.row_values(i)) {
                acc += v * x[j];
            }
            y[i] = acc;
        }
        Ok(())
    }

    /// y = Aᵀ x, same deterministic traversal order as `matvec`.
    pub fn matvec_transpose(&self, x: &[f64], y: &mut [f64]) -> Result<(), SparseError> {
        if x.len() != self.n || y.len() != self.n {
            return Err(SparseError::DimensionMismatch {
                n: self.n,
                len: x.len().max(y.len()),
            });
        }
        y.fill(0.0);
        for i in 0..self.n {
            let xi = x[i];
            for (&j, &v) in self.row(i).iter().zip(self.row_values(i)) {
                y[j] += v * xi;
            }
        }
        Ok(())
    }

    /// Keep the sparsity pattern, set every stored value to 1.
    pub fn pattern(&self) -> SparseMatrix {
        SparseMatrix {
            n: self.n,
            row_offsets: self.row_offsets.clone(),
            col_indices: self.col_indices.clone(),
            values: vec![1.0; self.col_indices.len()],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_by_two() -> SparseMatrix {
        // entries A_01 = 2, A_10 = 8 (0-based)
        SparseMatrix::from_triplets(2, vec![(0, 1, 2.0), (1, 0, 8.0)]).unwrap()
    }

    #[test]
    fn matvec_zero_matrix() {
        let a = SparseMatrix::zero(4);
        let mut y = vec![1.0; 4];
        a.matvec(&[1.0, 2.0, 3.0, 4.0], &mut y).unwrap();
        assert_eq!(y, vec![0.0; 4]);
    }

    #[test]
    fn matvec_two_by_two() {
        let a = two_by_two();
        let mut y = vec![0.0; 2];
        a.matvec(&[1.0, 1.0], &mut y).unwrap();
        assert_eq!(y, vec![2.0, 8.0]);
    }

    #[test]
    fn matvec_cycle_permutes() {
        // 3-cycle 0->1->2->0, unit weights.
        let a = SparseMatrix::from_triplets(
            3,
            vec![(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)],
        )
        .unwrap();
        let mut y = vec![0.0; 3];
        a.matvec(&[1.0, 2.0, 3.0], &mut y).unwrap();
        let mut sorted = y.clone();
        sorted.sort_by(f64::total_cmp);
        assert_eq!(sorted, vec![1.0, 2.0, 3.0]);
        assert_ne!(y, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn matvec_dimension_mismatch() {
        let a = two_by_two();
        let mut y = vec![0.0; 2];
        assert!(matches!(
            a.matvec(&[1.0], &mut y),
            Err(SparseError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn transpose_agrees_with_dense() {
        let a = SparseMatrix::from_triplets(
            3,
            vec![(0, 1, 2.0), (0, 2, -1.0), (2, 0, 3.0)],
        )
        .unwrap();
        let x = [1.0, -2.0, 0.5];
        let mut y = vec![0.0; 3];
        a.matvec_transpose(&x, &mut y).unwrap();
        // Aᵀx computed by hand: col j accumulates A_ij * x_i.
        assert_eq!(y, vec![1.5, 2.0, -1.0]);
    }

    #[test]
    fn rejects_duplicates_and_zero_values() {
        assert!(SparseMatrix::from_triplets(2, vec![(0, 1, 1.0), (0, 1, 2.0)]).is_err());
        assert!(SparseMatrix::from_triplets(2, vec![(0, 1, 0.0)]).is_err());
        assert!(SparseMatrix::from_triplets(2, vec![(0, 5, 1.0)]).is_err());
    }

    #[test]
    fn get_finds_stored_entries() {
        let a = two_by_two();
        assert_eq!(a.get(0, 1), Some(2.0));
        assert_eq!(a.get(1, 0), Some(8.0));
        assert_eq!(a.get(0, 0), None);
    }
}
