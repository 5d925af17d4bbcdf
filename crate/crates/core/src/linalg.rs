//! Dense Hermitian eigendecomposition for desk-scale operators.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ops::SparseOperator;

/// Largest dimension handed to the dense eigensolver.
pub const DENSE_LIMIT: usize = 4096;

/// Tolerance of the hermiticity predicate used before diagonalizing.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenpairs of a Hermitian operator, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `i` is the eigenvector of `values[i]`.
    pub vectors: DMatrix<Complex64>,
}

impl HermitianEigen {
    pub fn new(op: &SparseOperator) -> Result<Self> {
        if !op.is_square() {
            return Err(Error::BasisMismatch);
        }
        let dim = op.dim();
        if dim > DENSE_LIMIT {
            return Err(Error::DimensionTooLargeForDense {
                dim,
                limit: DENSE_LIMIT,
            });
        }
        if !op.is_hermitian(HERMITIAN_TOL) {
            return Err(Error::NonHermitian);
        }
        if op.is_real_diagonal() {
            return Ok(Self::from_diagonal(op));
        }
        let eig = SymmetricEigen::new(op.to_dense());
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let vectors = DMatrix::from_fn(dim, dim, |r, c| eig.eigenvectors[(r, order[c])]);
        Ok(HermitianEigen { values, vectors })
    }

    // Diagonal operators are exact in the occupation basis.
    fn from_diagonal(op: &SparseOperator) -> Self {
        let dim = op.dim();
        let diag: Vec<f64> = (0..dim).map(|i| op.get(i, i).re).collect();
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by(|&a, &b| diag[a].total_cmp(&diag[b]));
        let values = order.iter().map(|&i| diag[i]).collect();
        let vectors = DMatrix::from_fn(dim, dim, |r, c| {
            if r == order[c] {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        HermitianEigen { values, vectors }
    }

    /// `exp(-i H t)` as a dense unitary.
    pub fn propagator(&self, t: f64) -> DMatrix<Complex64> {
        let dim = self.values.len();
        let phases: Vec<Complex64> = self
            .values
            .iter()
            .map(|&e| Complex64::from_polar(1.0, -e * t))
            .collect();
        let mut scaled = self.vectors.clone();
        for c in 0..dim {
            for r in 0..dim {
                scaled[(r, c)] *= phases[c];
            }
        }
        scaled * self.vectors.adjoint()
    }
}

/// Ascending eigenvalues of a Hermitian operator.
pub fn spectrum(op: &SparseOperator) -> Result<Vec<f64>> {
    HermitianEigen::new(op).map(|e| e.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::BasisTag;

    fn tag() -> BasisTag {
        BasisTag::Qubits(vec!["a".into()])
    }

    #[test]
    fn pauli_x_spectrum_and_propagator() {
        let one = Complex64::new(1.0, 0.0);
        let x = SparseOperator::from_triplets(tag(), 2, [(0, 1, one), (1, 0, one)]);
        let eig = HermitianEigen::new(&x).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
        // exp(-i X t) = cos t - i sin t X
        let t = 0.37;
        let u = eig.propagator(t);
        assert!((u[(0, 0)] - Complex64::new(t.cos(), 0.0)).norm() < 1e-14);
        assert!((u[(1, 0)] - Complex64::new(0.0, -t.sin())).norm() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let one = Complex64::new(1.0, 0.0);
        let a = SparseOperator::from_triplets(tag(), 2, [(0, 1, one)]);
        assert_eq!(spectrum(&a).unwrap_err(), Error::NonHermitian);
    }

    #[test]
    fn diagonal_shortcut_sorts() {
        let d = SparseOperator::diagonal(tag(), &[2.0, -1.0]);
        assert_eq!(spectrum(&d).unwrap(), vec![-1.0, 2.0]);
    }
}
