//! Exact rational scalars, dense matrices and linear solvers.

pub mod field;
mod matrix;
pub mod modular;
mod rational;
mod solve;
pub mod sparse;

pub use matrix::{MatrixError, QMatrix};
pub use modular::{sparse_kernel, SparseSystem};
pub use rational::{format_rational, half, parse_rational, q, qi, serde_rational, serde_rational_vec, ParseRationalError, Rational};
pub(crate) use rational::format_coefficient_prefix;
pub use solve::{SpanError, SpanSolver};

/// Kronecker product of two matrices.
pub fn kron(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.kron(b)
}

/// Canonical nullspace basis of `m` as column vectors.
pub fn nullspace(m: &QMatrix) -> Vec<QMatrix> {
    m.nullspace().into_iter().map(QMatrix::column).collect()
}

/// Inertia of a symmetric matrix.
pub fn signature(sym: &QMatrix) -> Result<(usize, usize, usize), MatrixError> {
    sym.signature()
}

/// Kernel of a sparse system as dense vectors, in the canonical basis.
pub fn kernel_dense(sys: &SparseSystem) -> Vec<Vec<Rational>> {
    sparse_kernel(sys)
        .into_iter()
        .map(|sv| {
            let mut v = vec![Rational::from_integer(0.into()); sys.ncols];
            for (j, x) in sv {
                v[j] = x;
            }
            v
        })
        .collect()
}
