//! Coordinates of vectors with respect to a fixed linearly independent family.

use super::field::Rationals;
use super::matrix::QMatrix;
use super::rational::Rational;
use super::sparse::rref;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpanError {
    #[error("basis vectors are linearly dependent")]
    Dependent,
    #[error("basis vectors have inconsistent lengths")]
    Length,
}

/// Expresses vectors in a basis of a subspace of ℚⁿ.
///
/// A set of coordinate positions on which the basis restricts to an invertible
/// square matrix is chosen once; each query then costs one small matrix-vector
/// product plus an exact membership check on the full vector.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    len: usize,
    basis: Vec<Vec<(usize, Rational)>>,
    positions: Vec<usize>,
    inverse: QMatrix,
}

fn sparsify(v: &[Rational]) -> Vec<(usize, Rational)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

impl SpanSolver {
    pub fn new(len: usize, basis: &[Vec<Rational>]) -> Result<Self, SpanError> {
        if basis.iter().any(|b| b.len() != len) {
            return Err(SpanError::Length);
        }
        let sparse: Vec<_> = basis.iter().map(|b| sparsify(b)).collect();
        Self::from_sparse(len, sparse)
    }

    pub fn from_sparse(len: usize, basis: Vec<Vec<(usize, Rational)>>) -> Result<Self, SpanError> {
        let k = basis.len();
        let r = rref(&Rationals, len, basis.iter().cloned());
        if r.rank() != k {
            return Err(SpanError::Dependent);
        }
        let positions = r.pivots.clone();
        let mut m = QMatrix::zeros(k, k);
        let mut slot = vec![usize::MAX; len];
        for (p, &c) in positions.iter().enumerate() {
            slot[c] = p;
        }
        for (j, b) in basis.iter().enumerate() {
            for (c, x) in b {
                if slot[*c] != usize::MAX {
                    m.set(slot[*c], j, x.clone());
                }
            }
        }
        let inverse = m.inverse().map_err(|_| SpanError::Dependent)?;
        Ok(SpanSolver { len, basis, positions, inverse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v`, or `None` when `v` lies outside the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.len);
        let rhs: Vec<Rational> = self.positions.iter().map(|&p| v[p].clone()).collect();
        let c = self.inverse.mul_vec(&rhs);
        let mut recon = vec![Rational::zero(); self.len];
        for (cj, b) in c.iter().zip(&self.basis) {
            if cj.is_zero() {
                continue;
            }
            for (i, x) in b {
                recon[*i] += cj * x;
            }
        }
        (recon.as_slice() == v).then_some(c)
    }

    /// Like [`coords`](Self::coords) for a sparse vector.
    pub fn coords_sparse(&self, v: &[(usize, Rational)]) -> Option<Vec<Rational>> {
        let mut dense = vec![Rational::zero(); self.len];
        for (i, x) in v {
            dense[*i] += x;
        }
        self.coords(&dense)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qi;

    #[test]
    fn coordinates_in_a_plane() {
        let b = vec![vec![qi(1), qi(0), qi(1)], vec![qi(0), qi(1), qi(1)]];
        let s = SpanSolver::new(3, &b).unwrap();
        assert_eq!(s.coords(&[qi(2), qi(3), qi(5)]), Some(vec![qi(2), qi(3)]));
        assert_eq!(s.coords(&[qi(1), qi(1), qi(1)]), None);
    }

    #[test]
    fn dependent_family_is_rejected() {
        let b = vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]];
        assert_eq!(SpanSolver::new(2, &b).unwrap_err(), SpanError::Dependent);
    }
}
