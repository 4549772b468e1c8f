use super::matrix::Matrix;
use super::scalar::ExactField;
use super::LinAlgError;

/// A linear subspace of `T^ambient`, stored as the nonzero rows of its
/// reduced row echelon basis.
///
/// The stored basis is canonical: two equal subspaces compare equal
/// field-for-field regardless of the spanning set they were built from.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: ExactField> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<T>]) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length differs from ambient dimension"
        );
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_fn(vectors.len(), ambient, |i, j| vectors[i][j].clone());
        Self::row_space(&m)
    }

    pub fn row_space(m: &Matrix<T>) -> Self {
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn column_space(m: &Matrix<T>) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the stored echelon basis, or `None` when `v`
    /// is not in the subspace. Coordinates are read off the pivot columns.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                *r = r.clone() - c.clone() * x.clone();
            }
        }
        residual.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Self::span(self.ambient, &vs))
    }

    /// Exact intersection, via annihilators: `A ∩ B = (ann A + ann B)^⊥`.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        let mut ann = self.annihilator().basis;
        ann.extend(other.annihilator().basis);
        if ann.is_empty() {
            return Ok(Self::full(self.ambient));
        }
        let m = Matrix::from_fn(ann.len(), self.ambient, |i, j| ann[i][j].clone());
        Ok(m.kernel())
    }

    /// `{x : <b, x> = 0 for every basis row b}`.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_fn(self.basis.len(), self.ambient, |i, j| {
            self.basis[i][j].clone()
        });
        m.kernel()
    }

    /// Image `m(self)` for a square `ambient x ambient` matrix acting on columns.
    pub fn image(&self, m: &Matrix<T>) -> Result<Self, LinAlgError> {
        if m.cols() != self.ambient {
            return Err(LinAlgError::DimensionMismatch {
                left: (m.rows(), m.cols()),
                right: (self.ambient, 1),
            });
        }
        let images: Vec<Vec<T>> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Ok(Self::span(m.rows(), &images))
    }

    /// Whether `m(self) ⊆ self`.
    pub fn is_invariant_under(&self, m: &Matrix<T>) -> bool {
        self.basis.iter().all(|b| self.contains(&m.mul_vec(b)))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::Scalar;
    use num_rational::BigRational;

    type Q = BigRational;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::from_int(x)).collect()
    }

    #[test]
    fn canonical_basis_independent_of_spanning_set() {
        let a = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 3, 4]), v(&[2, 4, 6]), v(&[1, 1, 2])]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersections() {
        let full = Subspace::<Q>::full(3);
        let s = Subspace::span(3, &[v(&[1, 1, 0])]);
        assert_eq!(s.intersect(&full).unwrap(), s);
        let e1 = Subspace::span(3, &[v(&[1, 0, 0])]);
        let e2 = Subspace::span(3, &[v(&[0, 1, 0])]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b).unwrap(), e2);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::<Q>::full(2);
        let b = Subspace::<Q>::full(3);
        assert_eq!(
            a.intersect(&b),
            Err(LinAlgError::AmbientMismatch { left: 2, right: 3 })
        );
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn coordinates_read_from_pivots() {
        let s = Subspace::span(3, &[v(&[1, 0, 2]), v(&[0, 1, -1])]);
        assert_eq!(s.coordinates(&v(&[3, 4, 2])), Some(v(&[3, 4])));
        assert_eq!(s.coordinates(&v(&[0, 0, 1])), None);
    }
}
