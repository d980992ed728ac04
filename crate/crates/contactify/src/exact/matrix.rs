//! Dense rational matrices.

use super::modular::{sparse_kernel, SparseSystem};
use super::rational::{format_rational, parse_rational, qi, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        QMatrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| qi(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn column(v: Vec<Rational>) -> Self {
        let n = v.len();
        QMatrix { rows: n, cols: 1, data: v }
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// The elementary matrix `E_ij` (1-based indices, as in the printed tables).
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[(i - 1) * n + (j - 1)] = Rational::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Matrix product skipping zero entries of the left factor.
    pub fn matmul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        let nz_other: Vec<Vec<(usize, &Rational)>> = (0..other.rows)
            .map(|k| other.row(k).iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in &nz_other[k] {
                    orow[*j] += a * *b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Kronecker product.
    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, other: &QMatrix) -> QMatrix {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn anticommutator(&self, other: &QMatrix) -> QMatrix {
        &self.matmul(other) + &other.matmul(self)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> QMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &QMatrix) -> QMatrix {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn hstack(blocks: &[&QMatrix]) -> QMatrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        out
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>], rows: usize) -> QMatrix {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_sparse_system(&self) -> SparseSystem {
        let mut sys = SparseSystem::new(self.cols);
        for i in 0..self.rows {
            let row: Vec<(usize, Rational)> =
                self.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect();
            sys.push_row(row);
        }
        sys
    }

    /// Reduced row echelon form by fraction-free (Bareiss) elimination; returns the
    /// reduced matrix and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        // Scale each row to integers.
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // Pivot: smallest nonzero magnitude in the column.
            let Some(p) = (r..self.rows).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()))
            else {
                continue;
            };
            a.swap(r, p);
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                if i > r {
                    // Bareiss step keeps entries integral.
                    let (top, bottom) = a.split_at_mut(i);
                    let pr = &top[r];
                    let row = &mut bottom[0];
                    let f = row[c].clone();
                    for j in c..self.cols {
                        row[j] = (&pr[c] * &row[j] - &f * &pr[j]) / &prev;
                    }
                    for x in row.iter_mut().take(c) {
                        *x = BigInt::zero();
                    }
                }
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        // Back substitution over ℚ on the (now upper-triangular) integer rows.
        let mut m: Vec<Vec<Rational>> = a
            .into_iter()
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect();
        for (k, &c) in pivots.iter().enumerate().rev() {
            let inv = m[k][c].recip();
            for x in m[k].iter_mut() {
                *x *= &inv;
            }
            for i in 0..k {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].clone();
                let (top, bottom) = m.split_at_mut(k);
                for (x, y) in top[i].iter_mut().zip(&bottom[0]) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        (QMatrix::from_rows(m).with_shape(self.rows, self.cols), pivots)
    }

    fn with_shape(mut self, rows: usize, cols: usize) -> Self {
        if self.data.is_empty() {
            self.data = vec![Rational::zero(); rows * cols];
        }
        self.rows = rows;
        self.cols = cols;
        self
    }

    pub fn rank(&self) -> usize {
        if self.rows * self.cols <= 4096 {
            self.rref().1.len()
        } else {
            self.cols - self.nullspace().len()
        }
    }

    /// Canonical basis of `{v : m v = 0}`: one vector per free column of the RREF,
    /// equal to one there and zero on the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        if self.rows * self.cols <= 4096 {
            let (r, pivots) = self.rref();
            let mut is_pivot = vec![false; self.cols];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            (0..self.cols)
                .filter(|&c| !is_pivot[c])
                .map(|f| {
                    let mut v = vec![Rational::zero(); self.cols];
                    v[f] = Rational::one();
                    for (k, &p) in pivots.iter().enumerate() {
                        v[p] = -r.get(k, f);
                    }
                    v
                })
                .collect()
        } else {
            sparse_kernel(&self.to_sparse_system())
                .into_iter()
                .map(|sv| {
                    let mut v = vec![Rational::zero(); self.cols];
                    for (j, x) in sv {
                        v[j] = x;
                    }
                    v
                })
                .collect()
        }
    }

    pub fn inverse(&self) -> Result<QMatrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = QMatrix::hstack(&[self, &QMatrix::identity(n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(MatrixError::Singular);
        }
        Ok(QMatrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Inertia `(positives, negatives, zeros)` of a symmetric matrix, by exact
    /// congruence diagonalisation.
    pub fn signature(&self) -> Result<(usize, usize, usize), MatrixError> {
        if !self.is_symmetric() {
            return Err(MatrixError::NotSymmetric);
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let (mut pos, mut neg) = (0, 0);
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            let k = match active.iter().position(|&i| !a[i][i].is_zero()) {
                Some(p) => active[p],
                None => {
                    // All diagonal entries vanish: look for an off-diagonal entry a_ij and
                    // replace e_i by e_i + e_j, which makes a_ii = 2 a_ij nonzero.
                    let Some((i, j)) = active
                        .iter()
                        .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero())
                    else {
                        break;
                    };
                    for t in 0..n {
                        let v = a[j][t].clone();
                        a[i][t] += v;
                    }
                    for t in 0..n {
                        let v = a[t][j].clone();
                        a[t][i] += v;
                    }
                    i
                }
            };
            let d = a[k][k].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != k);
            for &i in &active {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &d;
                for &j in &active {
                    if !a[k][j].is_zero() {
                        let t = &f * &a[k][j];
                        a[i][j] -= t;
                    }
                }
                a[i][k] = Rational::zero();
            }
            for &j in &active {
                a[k][j] = Rational::zero();
            }
        }
        Ok((pos, neg, n - pos - neg))
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} {}", self.rows, self.cols, self)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Add<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect())
            .collect::<Result<_, _>>()?;
        let c = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != c) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(QMatrix::from_rows(rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    #[test]
    fn kron_examples() {
        let i2 = QMatrix::identity(2);
        assert_eq!(i2.kron(&i2), QMatrix::identity(4));
        let sz = QMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(sz.kron(&i2), QMatrix::diagonal(&[qi(1), qi(1), qi(-1), qi(-1)]));
        let sx = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let eps = QMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let expected = QMatrix::from_i64(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(sx.kron(&eps), expected);
    }

    #[test]
    fn nullspace_examples() {
        assert!(QMatrix::identity(3).nullspace().is_empty());
        let m = QMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.nullspace(), vec![vec![qi(-1), qi(1)]]);
    }

    #[test]
    fn signature_examples() {
        let d = QMatrix::diagonal(&[qi(1), qi(-1), qi(1)]);
        assert_eq!(d.signature(), Ok((2, 1, 0)));
        assert_eq!(QMatrix::zeros(2, 2).signature(), Ok((0, 0, 2)));
        let hyperbolic = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(hyperbolic.signature(), Ok((1, 1, 0)));
        let nonsym = QMatrix::from_i64(&[&[0, 1], &[2, 0]]);
        assert_eq!(nonsym.signature(), Err(MatrixError::NotSymmetric));
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_rows(vec![vec![qi(2), q(1, 3)], vec![qi(-1), qi(5)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(2));
        assert_eq!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn json_round_trip() {
        let m = QMatrix::from_rows(vec![vec![q(1, 2), qi(-3)]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","-3"]]"#);
        assert_eq!(serde_json::from_str::<QMatrix>(&s).unwrap(), m);
    }
}
