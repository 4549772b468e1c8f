use super::matrix::Matrix;
use super::scalar::Scalar;
use super::LinAlgError;

/// Dimension of the symmetric square of an `n`-dimensional space.
pub fn sym2_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Monomial basis `x_i x_j`, `i <= j`, in lexicographic order (0-based).
/// For `n = 3`: `11, 12, 13, 22, 23, 33`.
pub fn sym2_basis(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Position of the monomial `x_i x_j` (either order) in [`sym2_basis`].
pub fn sym2_index(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    a * n - a * (a + 1) / 2 + b
}

/// The induced action on degree-two polynomials: `g·(v_a v_b) = (g v_a)(g v_b)`,
/// expanded in the monomial basis. Functorial in `g`.
pub fn sym2_map<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let basis = sym2_basis(n);
    Ok(Matrix::from_fn(basis.len(), basis.len(), |row, col| {
        let (c, d) = basis[row];
        let (a, b) = basis[col];
        if c == d {
            m[(c, a)].clone() * m[(c, b)].clone()
        } else {
            m[(c, a)].clone() * m[(d, b)].clone() + m[(d, a)].clone() * m[(c, b)].clone()
        }
    }))
}
