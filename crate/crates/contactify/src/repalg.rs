//! Matrix representations of Lie algebras and the linear algebra built on them:
//! structure constants, Killing forms, Casimir operators, exterior and tensor
//! squares, eigenspace components and intertwiners.

use crate::clifford::CliffordGenerators;
use crate::exact::{kernel_dense, q, QMatrix, Rational, SpanSolver, SparseSystem};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("bracket of generators {0} and {1} leaves the span")]
    NotClosed(usize, usize),
    #[error("representation matrices are linearly dependent")]
    NotIndependent,
    #[error("Killing form is degenerate")]
    SingularKilling,
    #[error("matrix {0} is not block diagonal")]
    NotBlockDiagonal(String),
    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),
    #[error("{0} is not an eigenvalue")]
    NotEigenvalue(String),
    #[error("spectrum is not rational")]
    IrrationalSpectrum,
    #[error("operator is not diagonalizable over the rationals")]
    NotDiagonalizable,
    #[error("matrix sizes disagree")]
    Size,
}

/// 1-based index of the pair `i < j` among all pairs ordered by `j`, then `i`.
///
/// ```
/// use contactify::repalg::pair_index;
/// assert_eq!(pair_index(1, 2), 1);
/// assert_eq!(pair_index(6, 7), 21);
/// ```
pub fn pair_index(i: usize, j: usize) -> usize {
    assert!(1 <= i && i < j, "pair_index needs 1 <= i < j");
    i + (j - 1) * (j - 2) / 2
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(index: usize) -> (usize, usize) {
    assert!(index >= 1);
    let mut j = 2;
    while j * (j - 1) / 2 < index {
        j += 1;
    }
    let i = index - (j - 1) * (j - 2) / 2;
    (i, j)
}

/// Images `ρ(A_I)` of an ordered basis of an abstract Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub labels: Vec<String>,
    pub matrices: Vec<QMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    labels: Vec<String>,
    size: usize,
    matrices: Vec<QMatrix>,
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RepresentationJson { labels: self.labels.clone(), size: self.size(), matrices: self.matrices.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RepresentationJson::deserialize(d)?;
        Representation::new(j.labels, j.matrices).map_err(serde::de::Error::custom)
    }
}

/// Labels `A1, A2, …, An`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("A{i}")).collect()
}

impl Representation {
    pub fn new(labels: Vec<String>, matrices: Vec<QMatrix>) -> Result<Self, RepError> {
        if labels.len() != matrices.len() {
            return Err(RepError::Size);
        }
        if let Some(first) = matrices.first() {
            let s = first.rows();
            if matrices.iter().any(|m| m.rows() != s || m.cols() != s) {
                return Err(RepError::Size);
            }
        }
        Ok(Representation { labels, matrices })
    }

    pub fn from_matrices(matrices: Vec<QMatrix>) -> Result<Self, RepError> {
        Self::new(default_labels(matrices.len()), matrices)
    }

    /// Number of abstract generators.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Dimension of the representation space.
    pub fn size(&self) -> usize {
        self.matrices.first().map_or(0, QMatrix::rows)
    }

    /// The representation on the first `n` generators only.
    pub fn truncate(&self, n: usize) -> Representation {
        Representation { labels: self.labels[..n].to_vec(), matrices: self.matrices[..n].to_vec() }
    }

    /// Block-diagonal sum `self ⊕ other` on the same abstract generators.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        if self.len() != other.len() {
            return Err(RepError::Size);
        }
        let m = self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Representation { labels: self.labels.clone(), matrices: m })
    }

    /// Conjugate by `p`: `A ↦ p⁻¹ A p`.
    pub fn change_basis(&self, p: &QMatrix) -> Result<Representation, RepError> {
        let inv = p.inverse().map_err(|_| RepError::Size)?;
        let m = self.matrices.iter().map(|a| &(&inv * a) * p).collect();
        Ok(Representation { labels: self.labels.clone(), matrices: m })
    }
}

fn sparse_entries(m: &QMatrix) -> Vec<(usize, Rational)> {
    m.entries().iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// `[A_I, A_J] = Σ_K c^K_{IJ} A_K`, stored sparsely for every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub dim: usize,
    table: Vec<Vec<(usize, Rational)>>,
}

impl StructureConstants {
    /// Builds constants from `(I, J, K, c)` entries with `I < J` (0-based); the
    /// entries for `J > I` are filled in by antisymmetry.
    pub fn from_triples(dim: usize, triples: impl IntoIterator<Item = (usize, usize, usize, Rational)>) -> Self {
        let mut acc: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (i, j, k, c) in triples {
            assert!(i < j && j < dim && k < dim);
            *acc.entry((i, j)).or_default().entry(k).or_insert_with(Rational::zero) += c;
        }
        let mut table = vec![Vec::new(); dim * dim];
        for ((i, j), row) in acc {
            let v: Vec<(usize, Rational)> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            table[j * dim + i] = v.iter().map(|(k, c)| (*k, -c)).collect();
            table[i * dim + j] = v;
        }
        StructureConstants { dim, table }
    }

    pub fn abelian(dim: usize) -> Self {
        StructureConstants { dim, table: vec![Vec::new(); dim * dim] }
    }

    /// Nonzero `c^K_{IJ}` as `(K, c)` pairs, 0-based.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket(i, j).iter().find(|(kk, _)| *kk == k).map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket_vectors(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (k, c) in self.bracket(i, j) {
                    out[*k] += xi * yj * c;
                }
            }
        }
        out
    }

    /// Nonzero constants with `I < J`, 1-based.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in self.bracket(i, j) {
                    out.push((i + 1, j + 1, k + 1, c.clone()));
                }
            }
        }
        out
    }

    /// Matrix of `ad(A_I)`: column `M` holds the coordinates of `[A_I, A_M]`.
    pub fn ad(&self, i: usize) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for col in 0..self.dim {
            for (k, c) in self.bracket(i, col) {
                m.set(*k, col, c.clone());
            }
        }
        m
    }

    /// First triple `(I, J, K)` (0-based) on which the Jacobi identity fails.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let triples: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k)))).collect();
        triples.into_par_iter().find_first(|&(i, j, k)| {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                for (m, x) in self.bracket(b, c) {
                    for (l, y) in self.bracket(a, *m) {
                        *acc.entry(*l).or_insert_with(Rational::zero) += x * y;
                    }
                }
            }
            acc.values().any(|v| !v.is_zero())
        })
    }

    /// Constants of the subalgebra spanned by the first `n` generators.
    pub fn restrict(&self, n: usize) -> Result<StructureConstants, RepError> {
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in self.bracket(i, j) {
                    if *k >= n {
                        return Err(RepError::NotClosed(i + 1, j + 1));
                    }
                    triples.push((i, j, *k, c.clone()));
                }
            }
        }
        Ok(StructureConstants::from_triples(n, triples))
    }
}

impl Serialize for StructureConstants {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use crate::exact::format_rational;
        #[derive(Serialize)]
        struct Json {
            dim: usize,
            constants: Vec<(usize, usize, usize, String)>,
        }
        let constants = self.triples().into_iter().map(|(i, j, k, c)| (i, j, k, format_rational(&c))).collect();
        Json { dim: self.dim, constants }.serialize(s)
    }
}

/// Expands every commutator `[ρ(A_I), ρ(A_J)]` in the basis `ρ(A_K)`.
pub fn structure_constants(rep: &Representation) -> Result<StructureConstants, RepError> {
    let n = rep.len();
    let s = rep.size();
    let basis: Vec<_> = rep.matrices.iter().map(sparse_entries).collect();
    let solver = SpanSolver::from_sparse(s * s, basis).map_err(|_| RepError::NotIndependent)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let coords: Vec<Result<Vec<(usize, usize, usize, Rational)>, RepError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let c = rep.matrices[i].commutator(&rep.matrices[j]);
            let v = solver.coords_sparse(&sparse_entries(&c)).ok_or(RepError::NotClosed(i + 1, j + 1))?;
            Ok(v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (i, j, k, x)).collect())
        })
        .collect();
    let mut triples = Vec::new();
    for c in coords {
        triples.extend(c?);
    }
    Ok(StructureConstants::from_triples(n, triples))
}

/// `K_{IJ} = c^L_{IM} c^M_{JL} = tr(ad A_I ∘ ad A_J)`.
pub fn killing_form(sc: &StructureConstants) -> QMatrix {
    let n = sc.dim;
    let rows: Vec<Vec<Rational>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut t = Rational::zero();
                    for m in 0..n {
                        for (l, a) in sc.bracket(i, m) {
                            for (k, b) in sc.bracket(j, *l) {
                                if *k == m {
                                    t += a * b;
                                }
                            }
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows)
}

/// Checks `K([A,B],C) + K(B,[A,C]) = 0` on all basis triples.
pub fn is_ad_invariant(sc: &StructureConstants, k: &QMatrix) -> bool {
    let n = sc.dim;
    (0..n).into_par_iter().all(|a| {
        let ad = sc.ad(a);
        let lhs = &ad.transpose() * k;
        (&lhs + &(k * &ad)).is_zero()
    })
}

/// Representation of `ρ` on `Λ²S`. The basis `e_α∧e_β`, `α < β`, follows the
/// pair labelling `I(α,β)` of [`pair_index`].
pub fn wedge_rep(rep: &Representation) -> Representation {
    exterior_power(rep, 2)
}

/// `k`-element subsets of `0..n`, each sorted, in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn grow(n: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(Vec::new());
            return;
        }
        for last in k - 1..n {
            let mut smaller = Vec::new();
            grow(last, k - 1, &mut smaller);
            for mut s in smaller {
                s.push(last);
                out.push(s);
            }
        }
    }
    let mut out = Vec::new();
    grow(n, k, &mut out);
    out
}

/// Representation of `ρ` on `ΛᵏS` in the basis of [`colex_subsets`].
pub fn exterior_power(rep: &Representation, k: usize) -> Representation {
    let s = rep.size();
    let subsets = colex_subsets(s, k);
    let index: HashMap<Vec<usize>, usize> = subsets.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    // Sort a word of distinct indices, returning the sign of the permutation.
    let normalize = |mut w: Vec<usize>| -> Option<(usize, bool)> {
        let mut odd = false;
        for i in 1..w.len() {
            let mut j = i;
            while j > 0 && w[j - 1] > w[j] {
                w.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if w.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some((index[&w], odd))
    };
    let matrices = rep
        .matrices
        .par_iter()
        .map(|m| {
            let mut w = QMatrix::zeros(subsets.len(), subsets.len());
            for (col, set) in subsets.iter().enumerate() {
                for t in 0..k {
                    for g in 0..s {
                        let x = m.get(g, set[t]);
                        if x.is_zero() {
                            continue;
                        }
                        let mut word = set.clone();
                        word[t] = g;
                        if let Some((row, odd)) = normalize(word) {
                            let v = w.get(row, col) + if odd { -x } else { x.clone() };
                            w.set(row, col, v);
                        }
                    }
                }
            }
            w
        })
        .collect();
    Representation { labels: rep.labels.clone(), matrices }
}

/// `ρ_a ⊗ 1 + 1 ⊗ ρ_b` on `S_a ⊗ S_b`.
pub fn tensor_rep(a: &Representation, b: &Representation) -> Result<Representation, RepError> {
    if a.len() != b.len() {
        return Err(RepError::Size);
    }
    let ia = QMatrix::identity(a.size());
    let ib = QMatrix::identity(b.size());
    let matrices = a.matrices.iter().zip(&b.matrices).map(|(x, y)| &x.kron(&ib) + &ia.kron(y)).collect();
    Ok(Representation { labels: a.labels.clone(), matrices })
}

/// `normalization · Σ K^{IJ} ρ(A_I) ρ(A_J)` over the first `sc.dim` generators.
pub fn casimir(rep: &Representation, sc: &StructureConstants, normalization: &Rational) -> Result<QMatrix, RepError> {
    let n = sc.dim;
    if n > rep.len() {
        return Err(RepError::Size);
    }
    let kinv = killing_form(sc).inverse().map_err(|_| RepError::SingularKilling)?;
    let s = rep.size();
    let terms: Vec<QMatrix> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut mi = QMatrix::zeros(s, s);
            for j in 0..n {
                let c = kinv.get(i, j);
                if !c.is_zero() {
                    mi = &mi + &rep.matrices[j].scale(c);
                }
            }
            &rep.matrices[i] * &mi
        })
        .collect();
    let sum = terms.into_iter().fold(QMatrix::zeros(s, s), |acc, t| &acc + &t);
    Ok(sum.scale(normalization))
}

/// Monic minimal polynomial of `v` under `m`, coefficients from the constant term up.
fn vector_min_poly(m: &QMatrix, v: Vec<Rational>) -> Vec<Rational> {
    let n = v.len();
    let mut krylov = vec![v];
    loop {
        let next = m.mul_vec(krylov.last().unwrap());
        let solver = SpanSolver::new(n, &krylov).expect("Krylov vectors stay independent until the first relation");
        if let Some(c) = solver.coords(&next) {
            let mut poly: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            poly.push(Rational::one());
            return poly;
        }
        krylov.push(next);
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let limit = n.to_u64().filter(|&x| x <= 1u64 << 40)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= limit {
        if limit % d == 0 {
            out.push(BigInt::from(d));
            if d * d != limit {
                out.push(BigInt::from(limit / d));
            }
        }
        d += 1;
    }
    Some(out)
}

fn eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Quotient of `poly` by `x − r`, assuming `r` is a root.
fn divide_linear(poly: &[Rational], r: &Rational) -> Vec<Rational> {
    let d = poly.len() - 1;
    let mut out = vec![Rational::zero(); d];
    let mut carry = Rational::zero();
    for k in (0..d).rev() {
        carry = &poly[k + 1] + carry * r;
        out[k] = carry.clone();
    }
    out
}

/// Rational roots of a polynomial (coefficients from the constant term up),
/// returned sorted; `None` if the coefficients are too large to search.
pub fn rational_roots(poly: &[Rational]) -> Option<Vec<Rational>> {
    let mut poly: Vec<Rational> = poly.to_vec();
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    let mut roots = Vec::new();
    if poly.len() <= 1 {
        return Some(roots);
    }
    let lead_zeros = poly.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Rational::zero());
        poly.drain(..lead_zeros);
    }
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    if ints.len() > 1 {
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().unwrap())?;
        for p in &ps {
            for qd in &qs {
                for sign in [1, -1] {
                    let x = Rational::new(p * sign, qd.clone());
                    if !roots.contains(&x) && eval(&poly, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// Eigenvalues of `m` with the dimensions of their eigenspaces, sorted by eigenvalue.
/// Fails unless `m` is diagonalizable with rational spectrum.
pub fn eigenspaces(m: &QMatrix) -> Result<Vec<(Rational, usize)>, RepError> {
    let n = m.rows();
    let mut values: Vec<Rational> = Vec::new();
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        let poly = vector_min_poly(m, e);
        let roots = rational_roots(&poly).ok_or(RepError::IrrationalSpectrum)?;
        if roots.len() + 1 != poly.len() {
            let mut rest = poly.clone();
            for r in &roots {
                while rest.len() > 1 && eval(&rest, r).is_zero() {
                    rest = divide_linear(&rest, r);
                }
            }
            return Err(if rest.len() == 1 { RepError::NotDiagonalizable } else { RepError::IrrationalSpectrum });
        }
        for r in roots {
            if !values.contains(&r) {
                values.push(r);
            }
        }
    }
    values.sort();
    let out: Vec<(Rational, usize)> = values
        .into_par_iter()
        .map(|x| {
            let shifted = m - &QMatrix::identity(n).scale(&x);
            let d = shifted.nullspace().len();
            (x, d)
        })
        .collect();
    if out.iter().map(|(_, d)| d).sum::<usize>() != n {
        return Err(RepError::NotDiagonalizable);
    }
    Ok(out)
}

/// Restriction of `rep` to the invariant subspace spanned by `basis` (column vectors),
/// expressed in that basis.
pub fn restrict(rep: &Representation, basis: &[Vec<Rational>]) -> Result<Representation, RepError> {
    let s = rep.size();
    let solver = SpanSolver::new(s, basis).map_err(|_| RepError::NotIndependent)?;
    let k = basis.len();
    let matrices: Result<Vec<QMatrix>, RepError> = rep
        .matrices
        .par_iter()
        .zip(&rep.labels)
        .map(|(m, label)| {
            let cols: Result<Vec<Vec<Rational>>, RepError> = basis
                .iter()
                .map(|b| solver.coords(&m.mul_vec(b)).ok_or_else(|| RepError::NotInvariant(label.clone())))
                .collect();
            Ok(QMatrix::from_columns(&cols?, k))
        })
        .collect();
    Ok(Representation { labels: rep.labels.clone(), matrices: matrices? })
}

/// Canonical basis of the `eigenvalue`-eigenspace of `op`.
pub fn eigenspace(op: &QMatrix, eigenvalue: &Rational) -> Vec<Vec<Rational>> {
    let n = op.rows();
    (op - &QMatrix::identity(n).scale(eigenvalue)).nullspace()
}

/// Restriction of `rep` to an eigenspace of `cas`.
pub fn extract_component(rep: &Representation, cas: &QMatrix, eigenvalue: &Rational) -> Result<Representation, RepError> {
    let basis = eigenspace(cas, eigenvalue);
    if basis.is_empty() {
        return Err(RepError::NotEigenvalue(crate::exact::format_rational(eigenvalue)));
    }
    restrict(rep, &basis)
}

/// Splits a representation whose matrices are block diagonal with two equal
/// blocks into the upper-left and lower-right pieces.
pub fn split_weyl(rep: &Representation) -> Result<(Representation, Representation), RepError> {
    let s = rep.size();
    if !s.is_multiple_of(2) {
        return Err(RepError::Size);
    }
    let h = s / 2;
    let lo: Vec<usize> = (0..h).collect();
    let hi: Vec<usize> = (h..s).collect();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (m, label) in rep.matrices.iter().zip(&rep.labels) {
        if !m.submatrix(&lo, &hi).is_zero() || !m.submatrix(&hi, &lo).is_zero() {
            return Err(RepError::NotBlockDiagonal(label.clone()));
        }
        plus.push(m.submatrix(&lo, &lo));
        minus.push(m.submatrix(&hi, &hi));
    }
    Ok((
        Representation { labels: rep.labels.clone(), matrices: plus },
        Representation { labels: rep.labels.clone(), matrices: minus },
    ))
}

/// Basis of all `M` with `M·a(A_I) = b(A_I)·M` for every generator.
pub fn intertwiners(a: &Representation, b: &Representation) -> Result<Vec<QMatrix>, RepError> {
    if a.len() != b.len() {
        return Err(RepError::Size);
    }
    let (sa, sb) = (a.size(), b.size());
    let var = |r: usize, k: usize| r * sa + k;
    let mut sys = SparseSystem::new(sa * sb);
    for (x, y) in a.matrices.iter().zip(&b.matrices) {
        for r in 0..sb {
            for c in 0..sa {
                let mut row = Vec::new();
                for k in 0..sa {
                    let v = x.get(k, c);
                    if !v.is_zero() {
                        row.push((var(r, k), v.clone()));
                    }
                }
                for k in 0..sb {
                    let v = y.get(r, k);
                    if !v.is_zero() {
                        row.push((var(k, c), -v));
                    }
                }
                sys.push_row(row);
            }
        }
    }
    Ok(kernel_dense(&sys).into_iter().map(|v| QMatrix::from_vec(sb, sa, v)).collect())
}

/// Spin representation `A_{I(i,j)} ↦ ½ γ_i γ_j`, optionally followed by the
/// scaling generator `½ Id`.
pub fn spin_representation(gens: &CliffordGenerators, add_scaling: bool) -> Result<Representation, RepError> {
    let m = gens.len();
    let mut matrices = vec![QMatrix::zeros(0, 0); m * (m - 1) / 2];
    for j in 2..=m {
        for i in 1..j {
            matrices[pair_index(i, j) - 1] = (&gens.generators[i - 1] * &gens.generators[j - 1]).scale(&q(1, 2));
        }
    }
    if add_scaling {
        matrices.push(QMatrix::identity(gens.size()).scale(&q(1, 2)));
    }
    let rep = Representation::from_matrices(matrices)?;
    structure_constants(&rep)?;
    Ok(rep)
}

/// The defining representation of `so(g)` for a diagonal metric `g` with the same
/// pair labelling as [`spin_representation`]: `A_{I(i,j)} ↦ g_{jj} E_{ij} − g_{ii} E_{ji}`.
pub fn vector_representation(metric: &[Rational]) -> Representation {
    let m = metric.len();
    let mut matrices = vec![QMatrix::zeros(0, 0); m * (m - 1) / 2];
    for j in 2..=m {
        for i in 1..j {
            let mut a = QMatrix::zeros(m, m);
            a.set(i - 1, j - 1, metric[j - 1].clone());
            a.set(j - 1, i - 1, -&metric[i - 1]);
            matrices[pair_index(i, j) - 1] = a;
        }
    }
    Representation::from_matrices(matrices).expect("consistent sizes")
}

/// Scalar matrix check used for Schur-type tests.
pub fn is_scalar(m: &QMatrix) -> bool {
    let n = m.rows();
    let d = if n == 0 { Rational::zero() } else { m.get(0, 0).clone() };
    *m == QMatrix::identity(n).scale(&d)
}
