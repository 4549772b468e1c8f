//! Exact linear algebra: dense matrices over exact fields, canonical
//! subspaces, and the symmetric-square functor.
//!
//! Everything here is generic over the scalar. The crate root fixes the
//! arbitrary-precision rationals as the working field.

mod matrix;
mod scalar;
mod subspace;
mod sym2;

pub mod json;

pub use matrix::Matrix;
pub use scalar::{ExactField, Scalar};
pub use subspace::Subspace;
pub use sym2::{sym2_basis, sym2_dim, sym2_index, sym2_map};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("ragged rows: expected length {expected}, found {found}")]
    Ragged { expected: usize, found: usize },
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}

/// Exact null space of `m`.
pub fn kernel<T: ExactField>(m: &Matrix<T>) -> Subspace<T> {
    m.kernel()
}

/// Exact intersection of two subspaces of the same ambient space.
pub fn intersect<T: ExactField>(
    a: &Subspace<T>,
    b: &Subspace<T>,
) -> Result<Subspace<T>, LinAlgError> {
    a.intersect(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::<Q>::identity(3)).is_zero());
        assert_eq!(kernel(&Matrix::<Q>::zeros(2, 2)), Subspace::full(2));
        let k = kernel(&Matrix::<Q>::from_int_rows(&[&[1, 1], &[1, 1]]));
        assert_eq!(
            k,
            Subspace::span(2, &[vec![Q::from_int(1), Q::from_int(-1)]])
        );
    }

    #[test]
    fn works_over_machine_rationals() {
        use num_rational::Ratio;
        let m: Matrix<Ratio<i64>> = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(kernel(&m).dim(), 2);
    }
}
