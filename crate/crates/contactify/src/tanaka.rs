//! Graded Lie algebras built from a solution of the magical equation, and their
//! Tanaka prolongations.
//!
//! The negative part `n₋ = n₋₂ ⊕ n₋₁` has basis `e_1..e_r` (grade −2) followed by
//! `f_1..f_s` (grade −1), with `[f_μ, f_ν] = ω^i_{μν} e_i`. Every element of
//! nonnegative grade is stored through its action on `n₋`; brackets between such
//! elements are recovered from `[[A,B],Z] = [A,[B,Z]] − [B,[A,Z]]`.

use crate::exact::{sparse_kernel, QMatrix, Rational, SparseSystem, SpanSolver};
use crate::magical::OmegaMap;
use crate::repalg::{killing_form, structure_constants, RepError, Representation, StructureConstants};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

type Sparse = Vec<(usize, Rational)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TanakaError {
    #[error("ω is not surjective: rank {rank} < r = {r}")]
    NotSurjective { r: usize, rank: usize },
    #[error("prolongation truncated: n_{max_k} still has dimension {dim}")]
    Truncated { max_k: usize, dim: usize },
    #[error("bracket of basis elements {0} and {1} leaves the computed algebra")]
    NotClosed(usize, usize),
    #[error("input is not a 2-step graded nilpotent algebra")]
    NotNilpotent,
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("n_00 and the input disagree on sizes")]
    Size,
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A Lie algebra with an integer grade on each basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    pub grades: Vec<i32>,
    pub sc: StructureConstants,
    pub provenance: Vec<String>,
}

impl GradedLieAlgebra {
    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    /// `(k, dim n_k)` for every grade that occurs, in increasing order.
    pub fn grade_dims(&self) -> Vec<(i32, usize)> {
        let mut m: BTreeMap<i32, usize> = BTreeMap::new();
        for g in &self.grades {
            *m.entry(*g).or_default() += 1;
        }
        m.into_iter().collect()
    }

    /// Dimensions from the lowest to the highest grade.
    pub fn dims(&self) -> Vec<usize> {
        self.grade_dims().into_iter().map(|(_, d)| d).collect()
    }

    pub fn grade_dim(&self, k: i32) -> usize {
        self.grades.iter().filter(|g| **g == k).count()
    }

    /// Basis indices of grade `k`.
    pub fn basis_of(&self, k: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grades[i] == k).collect()
    }

    /// Basis indices of `n₋`.
    pub fn negative_part(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grades[i] < 0).collect()
    }

    /// Whether `[g_i, g_j] ⊆ g_{i+j}` holds on all basis pairs.
    pub fn respects_grading(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.sc.bracket(i, j).iter().all(|(k, _)| self.grades[*k] == self.grades[i] + self.grades[j])))
    }

    /// `dim n_k = dim n_{−k}` for every `k ≠ 0`.
    pub fn is_grading_symmetric(&self) -> bool {
        self.grade_dims().iter().all(|(k, d)| self.grade_dim(-k) == *d)
    }

    pub fn check_jacobi(&self) -> Result<(), TanakaError> {
        match self.sc.jacobi_violation() {
            Some((i, j, k)) => Err(TanakaError::Jacobi(i + 1, j + 1, k + 1)),
            None => Ok(()),
        }
    }

    /// Action of basis element `a` on `n₋`, flattened as `(position of Z in n₋) · dim + K`.
    pub fn action_vector(&self, a: usize) -> Sparse {
        let n = self.dim();
        let neg = self.negative_part();
        let mut out = Vec::new();
        for (p, z) in neg.iter().enumerate() {
            for (k, c) in self.sc.bracket(a, *z) {
                out.push((p * n + k, c.clone()));
            }
        }
        out
    }
}

impl Serialize for GradedLieAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            dim: usize,
            grades: &'a [i32],
            structure_constants: &'a StructureConstants,
            provenance: &'a [String],
        }
        Json { dim: self.dim(), grades: &self.grades, structure_constants: &self.sc, provenance: &self.provenance }.serialize(s)
    }
}

/// The 2-step nilpotent algebra `n₋₂ ⊕ n₋₁` with `[X, Y] = ω(X, Y)`.
pub fn build_nminus(omega: &OmegaMap) -> Result<GradedLieAlgebra, TanakaError> {
    let (r, s) = (omega.r, omega.s);
    let rank = omega.coefficient_matrix().rank();
    if rank < r {
        return Err(TanakaError::NotSurjective { r, rank });
    }
    let mut triples = Vec::new();
    for (i, mu, nu, c) in omega.entries() {
        triples.push((r + mu, r + nu, i, c.clone()));
    }
    let mut grades = vec![-2; r];
    grades.extend(vec![-1; s]);
    let mut provenance: Vec<String> = (1..=r).map(|i| format!("n_-2 e_{i}")).collect();
    provenance.extend((1..=s).map(|m| format!("n_-1 f_{m}")));
    Ok(GradedLieAlgebra { grades, sc: StructureConstants::from_triples(r + s, triples), provenance })
}

/// Working state of the prolongation: negative brackets plus the actions of the
/// nonnegative elements found so far.
struct Builder {
    /// Global index → grade; negative part first.
    grades: Vec<i32>,
    nneg: usize,
    neg_sc: StructureConstants,
    /// `action[a − nneg][Z] = [a, Z]` for `Z` in `n₋`, in global coordinates.
    action: Vec<Vec<Sparse>>,
}

impl Builder {
    fn bracket_with_neg(&self, b: usize, z: usize) -> &[(usize, Rational)] {
        if b < self.nneg {
            self.neg_sc.bracket(b, z)
        } else {
            &self.action[b - self.nneg][z]
        }
    }

    fn block(&self, k: i32) -> Vec<usize> {
        (0..self.grades.len()).filter(|&i| self.grades[i] == k).collect()
    }

    /// Basis of `n_k`: linear maps `D` of degree `k` on `n₋` with
    /// `D[P,Q] = [DP,Q] + [P,DQ]`.
    fn next_grade(&self, k: i32) -> Vec<Vec<Sparse>> {
        let nneg = self.nneg;
        let targets: Vec<Vec<usize>> = (0..nneg).map(|z| self.block(self.grades[z] + k)).collect();
        let mut offset = vec![0usize; nneg + 1];
        for z in 0..nneg {
            offset[z + 1] = offset[z] + targets[z].len();
        }
        let var = |z: usize, a: usize| offset[z] + a;
        let pairs: Vec<(usize, usize)> = (0..nneg).flat_map(|p| (p + 1..nneg).map(move |q| (p, q))).collect();
        let blocks: Vec<Vec<Sparse>> = pairs
            .par_iter()
            .map(|&(p, q)| {
                let mut rows: BTreeMap<usize, Sparse> = BTreeMap::new();
                for (c, x) in self.neg_sc.bracket(p, q) {
                    for (a, b) in targets[*c].iter().enumerate() {
                        rows.entry(*b).or_default().push((var(*c, a), x.clone()));
                    }
                }
                for (a, b) in targets[p].iter().enumerate() {
                    for (m, y) in self.bracket_with_neg(*b, q) {
                        rows.entry(*m).or_default().push((var(p, a), -y));
                    }
                }
                for (a, b) in targets[q].iter().enumerate() {
                    for (m, y) in self.bracket_with_neg(*b, p) {
                        rows.entry(*m).or_default().push((var(q, a), y.clone()));
                    }
                }
                rows.into_values().collect()
            })
            .collect();
        let mut sys = SparseSystem::new(offset[nneg]);
        for block in blocks {
            for row in block {
                sys.push_row(row);
            }
        }
        sparse_kernel(&sys)
            .into_iter()
            .map(|v| {
                let mut act: Vec<Sparse> = vec![Vec::new(); nneg];
                for (col, x) in v {
                    let z = offset.partition_point(|&o| o <= col) - 1;
                    act[z].push((targets[z][col - offset[z]], x));
                }
                for a in &mut act {
                    a.sort_by_key(|(i, _)| *i);
                }
                act
            })
            .collect()
    }
}

fn add_scaled(acc: &mut BTreeMap<usize, Rational>, v: &[(usize, Rational)], c: &Rational) {
    for (i, x) in v {
        *acc.entry(*i).or_insert_with(Rational::zero) += x * c;
    }
}

fn sparse_from(acc: BTreeMap<usize, Rational>) -> Sparse {
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// Tanaka prolongation `n₋ ⊕ n₀ ⊕ n₁ ⊕ …` of a 2-step graded nilpotent algebra,
/// stopping at the first vanishing `n_k`.
pub fn prolong(n: &GradedLieAlgebra, max_k: usize) -> Result<GradedLieAlgebra, TanakaError> {
    let r = n.grade_dim(-2);
    let s = n.grade_dim(-1);
    let nneg = n.dim();
    if r + s != nneg || (0..nneg).any(|i| n.grades[i] != if i < r { -2 } else { -1 }) || !n.respects_grading() {
        return Err(TanakaError::NotNilpotent);
    }
    let mut b = Builder { grades: n.grades.clone(), nneg, neg_sc: n.sc.clone(), action: Vec::new() };
    let mut provenance = n.provenance.clone();
    let mut top = -1;
    for k in 0..=max_k {
        let found = b.next_grade(k as i32);
        if found.is_empty() {
            break;
        }
        if k == max_k {
            return Err(TanakaError::Truncated { max_k, dim: found.len() });
        }
        for (j, act) in found.into_iter().enumerate() {
            b.grades.push(k as i32);
            b.action.push(act);
            provenance.push(format!("n_{k} element #{}", j + 1));
        }
        top = k as i32;
    }
    let dim = b.grades.len();
    let mut table: Vec<Option<Sparse>> = vec![None; dim * dim];
    for p in 0..nneg {
        for q in 0..nneg {
            table[p * dim + q] = Some(n.sc.bracket(p, q).to_vec());
        }
    }
    for a in nneg..dim {
        for z in 0..nneg {
            let v = b.action[a - nneg][z].clone();
            table[z * dim + a] = Some(v.iter().map(|(i, x)| (*i, -x)).collect());
            table[a * dim + z] = Some(v);
        }
    }
    let flat = |act: &[Sparse]| -> Sparse {
        act.iter().enumerate().flat_map(|(z, v)| v.iter().map(move |(i, x)| (z * dim + i, x.clone()))).collect()
    };
    for t in 0..=2 * top {
        let basis: Vec<usize> = b.block(t);
        let solver = if basis.is_empty() {
            None
        } else {
            let vecs: Vec<Sparse> = basis.iter().map(|&a| flat(&b.action[a - nneg])).collect();
            Some(SpanSolver::from_sparse(nneg * dim, vecs).map_err(|_| TanakaError::NotClosed(basis[0] + 1, basis[0] + 1))?)
        };
        let pairs: Vec<(usize, usize)> = (nneg..dim)
            .flat_map(|x| (x..dim).map(move |y| (x, y)))
            .filter(|&(x, y)| b.grades[x] + b.grades[y] == t)
            .collect();
        let known = &table;
        let results: Vec<Result<((usize, usize), Sparse), TanakaError>> = pairs
            .par_iter()
            .map(|&(x, y)| {
                let bracket = |u: usize, w: usize| known[u * dim + w].as_ref().expect("lower brackets are computed first");
                let mut act: Vec<Sparse> = Vec::with_capacity(nneg);
                for z in 0..nneg {
                    let mut acc = BTreeMap::new();
                    for (w, c) in bracket(y, z) {
                        add_scaled(&mut acc, bracket(x, *w), c);
                    }
                    for (w, c) in bracket(x, z) {
                        add_scaled(&mut acc, bracket(y, *w), &-c);
                    }
                    act.push(sparse_from(acc));
                }
                let v = flat(&act);
                if v.is_empty() {
                    return Ok(((x, y), Vec::new()));
                }
                let coords = solver.as_ref().and_then(|sv| sv.coords_sparse(&v)).ok_or(TanakaError::NotClosed(x + 1, y + 1))?;
                Ok(((x, y), coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (basis[i], c)).collect()))
            })
            .collect();
        for res in results {
            let ((x, y), v) = res?;
            table[y * dim + x] = Some(v.iter().map(|(i, c)| (*i, -c)).collect());
            table[x * dim + y] = Some(v);
        }
    }
    let mut triples = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (k, c) in table[i * dim + j].as_ref().expect("all brackets assembled") {
                triples.push((i, j, *k, c.clone()));
            }
        }
    }
    let g = GradedLieAlgebra { grades: b.grades, sc: StructureConstants::from_triples(dim, triples), provenance };
    g.check_jacobi()?;
    Ok(g)
}

/// Action vector of `σ(A) = τ(A) ⊕ ρ(A)` on `n₋`, in the flattening of
/// [`GradedLieAlgebra::action_vector`].
fn sigma_vector(rho: &QMatrix, tau: &QMatrix, r: usize, s: usize, dim: usize) -> Sparse {
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let v = tau.get(j, i);
            if !v.is_zero() {
                out.push((i * dim + j, v.clone()));
            }
        }
    }
    for mu in 0..s {
        for a in 0..s {
            let v = rho.get(a, mu);
            if !v.is_zero() {
                out.push(((r + mu) * dim + r + a, v.clone()));
            }
        }
    }
    out.sort_by_key(|(i, _)| *i);
    out
}


/// Outcome of comparing `σ(n₀₀)` with the computed `n₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbedReport {
    pub n00_dim: usize,
    pub n0_dim: usize,
    /// Generators whose `σ(A)` is not a derivation of `n₋`, 1-based.
    pub derivation_failures: Vec<usize>,
    pub injective: bool,
    pub contained: bool,
    pub equal: bool,
}

impl EmbedReport {
    pub fn passed(&self) -> bool {
        self.derivation_failures.is_empty() && self.injective && self.contained
    }

    pub fn is_proper(&self) -> bool {
        self.n00_dim < self.n0_dim
    }
}

/// Checks that `σ = τ ⊕ ρ` sends `n₀₀` injectively into `n₀` as derivations.
pub fn embed_check(rho: &Representation, tau: &Representation, g: &GradedLieAlgebra) -> Result<EmbedReport, TanakaError> {
    let r = g.grade_dim(-2);
    let s = g.grade_dim(-1);
    if rho.len() != tau.len() || rho.size() != s || tau.size() != r {
        return Err(TanakaError::Size);
    }
    let dim = g.dim();
    let sigmas: Vec<Sparse> = rho.matrices.iter().zip(&tau.matrices).map(|(a, b)| sigma_vector(a, b, r, s, dim)).collect();
    let derivation_failures = (0..rho.len()).filter(|&k| !is_derivation(g, &sigmas[k], r + s)).map(|k| k + 1).collect();
    let zero_basis = g.basis_of(0);
    let n0: Vec<Sparse> = zero_basis.iter().map(|&a| g.action_vector(a)).collect();
    let injective = SpanSolver::from_sparse((r + s) * dim, sigmas.clone()).is_ok();
    let contained = if n0.is_empty() {
        sigmas.iter().all(|v| v.is_empty())
    } else {
        let solver = SpanSolver::from_sparse((r + s) * dim, n0).map_err(|_| TanakaError::NotClosed(0, 0))?;
        sigmas.iter().all(|v| solver.coords_sparse(v).is_some())
    };
    Ok(EmbedReport {
        n00_dim: if injective { rho.len() } else { 0 },
        n0_dim: zero_basis.len(),
        derivation_failures,
        injective,
        contained,
        equal: injective && contained && rho.len() == zero_basis.len(),
    })
}

/// `D[P,Q] = [DP,Q] + [P,DQ]` on all basis pairs of `n₋` for a degree-0 map given
/// as an action vector.
fn is_derivation(g: &GradedLieAlgebra, act: &Sparse, nneg: usize) -> bool {
    let dim = g.dim();
    let mut cols: Vec<Sparse> = vec![Vec::new(); nneg];
    for (idx, x) in act {
        cols[idx / dim].push((idx % dim, x.clone()));
    }
    let apply = |v: &[(usize, Rational)]| {
        let mut acc = BTreeMap::new();
        for (i, x) in v {
            add_scaled(&mut acc, &cols[*i], x);
        }
        acc
    };
    (0..nneg).all(|p| {
        (p + 1..nneg).all(|q| {
            let mut acc = apply(g.sc.bracket(p, q));
            for (m, x) in &cols[p] {
                add_scaled(&mut acc, g.sc.bracket(*m, q), &-x);
            }
            for (m, x) in &cols[q] {
                add_scaled(&mut acc, g.sc.bracket(p, *m), &-x);
            }
            acc.values().all(|v| v.is_zero())
        })
    })
}

/// `g₀ = n₋ ⊕ n₀₀` with `[A, Z] = σ(A)Z` and the bracket of `n₀₀` read off `ρ`.
pub fn assemble_g0(rho: &Representation, tau: &Representation, omega: &OmegaMap) -> Result<GradedLieAlgebra, TanakaError> {
    let n = build_nminus(omega)?;
    let (r, s) = (omega.r, omega.s);
    if rho.len() != tau.len() || rho.size() != s || tau.size() != r {
        return Err(TanakaError::Size);
    }
    let inner = structure_constants(rho)?;
    let nneg = r + s;
    let dim = nneg + rho.len();
    let mut triples = Vec::new();
    for (i, j, k, c) in n.sc.triples() {
        triples.push((i - 1, j - 1, k - 1, c));
    }
    for (i, j, k, c) in inner.triples() {
        triples.push((nneg + i - 1, nneg + j - 1, nneg + k - 1, c));
    }
    for a in 0..rho.len() {
        for i in 0..r {
            for j in 0..r {
                let v = tau.matrices[a].get(j, i);
                if !v.is_zero() {
                    triples.push((i, nneg + a, j, -v));
                }
            }
        }
        for mu in 0..s {
            for al in 0..s {
                let v = rho.matrices[a].get(al, mu);
                if !v.is_zero() {
                    triples.push((r + mu, nneg + a, r + al, -v));
                }
            }
        }
    }
    let mut grades = n.grades.clone();
    grades.extend(vec![0; rho.len()]);
    let mut provenance = n.provenance.clone();
    provenance.extend(rho.labels.iter().map(|l| format!("n_00 {l}")));
    Ok(GradedLieAlgebra { grades, sc: StructureConstants::from_triples(dim, triples), provenance })
}

/// Killing inertia, semisimplicity and grading symmetry of a graded algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub dim: usize,
    pub grade_dims: Vec<(i32, usize)>,
    pub killing_signature: (usize, usize, usize),
    pub semisimple: bool,
    pub grading_symmetric: bool,
}

pub fn classify(g: &GradedLieAlgebra) -> Result<Classification, TanakaError> {
    let k = killing_form(&g.sc);
    let sig = k.signature().map_err(|_| TanakaError::Size)?;
    Ok(Classification {
        dim: g.dim(),
        grade_dims: g.grade_dims(),
        killing_signature: sig,
        semisimple: sig.2 == 0,
        grading_symmetric: g.is_grading_symmetric(),
    })
}

/// Derivation check for a degree-0 endomorphism of the negative part of `g`,
/// acting by `a` on `n₋₁` and by `b` on `n₋₂`.
pub fn is_strata_derivation(g: &GradedLieAlgebra, a: &QMatrix, b: &QMatrix) -> bool {
    let r = g.grade_dim(-2);
    let s = g.grade_dim(-1);
    is_derivation(g, &sigma_vector(a, b, r, s, g.dim()), r + s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use num_traits::One;

    fn heisenberg() -> GradedLieAlgebra {
        let mut w = OmegaMap::zero(1, 2);
        w.set(0, 0, 1, Rational::one());
        build_nminus(&w).unwrap()
    }

    #[test]
    fn heisenberg_bracket() {
        let h = heisenberg();
        assert_eq!(h.sc.bracket(1, 2), &[(0, qi(1))]);
        assert_eq!(h.dims(), vec![1, 2]);
    }

    #[test]
    fn heisenberg_is_not_semisimple() {
        assert!(!classify(&heisenberg()).unwrap().semisimple);
    }

    #[test]
    fn contact_prolongation_is_truncated() {
        assert!(matches!(prolong(&heisenberg(), 3), Err(TanakaError::Truncated { .. })));
    }
}
