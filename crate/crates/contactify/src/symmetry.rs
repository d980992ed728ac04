//! Infinitesimal symmetries of a contactification, found by brute force over
//! polynomial vector fields of bounded weighted degree.
//!
//! With `λ^i = du^i + ℓ^i_ν dx^ν` the distribution is spanned by
//! `X_μ = ∂_{x^μ} − ℓ^j_μ ∂_{u^j}`, and `Y` is a symmetry iff
//! `λ^i([Y, X_μ]) = 0` for all `i, μ`. The conditions are homogeneous for the
//! weights `x ↦ 1`, `u ↦ 2`, so the ansatz splits into independent blocks, one
//! for each weight `k` of the vector field.

use crate::exact::{sparse_kernel, Rational, SparseSystem, SpanSolver};
use crate::forms::{ContactSystem, PolyForm};
use crate::repalg::StructureConstants;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Default cap on the number of unknown coefficients.
pub const DEFAULT_MAX_UNKNOWNS: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("ansatz has {unknowns} unknowns, above the cap of {cap}; pass --allow-huge to run anyway")]
    AnsatzTooLarge { unknowns: usize, cap: usize },
    #[error("bracket of basis fields {0} and {1} is not in their span (wmax too small?)")]
    NotClosed(usize, usize),
    #[error("basis fields are linearly dependent")]
    Dependent,
}

type Monomial = Vec<u32>;

/// Polynomial with rational coefficients in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign_scaled(&mut self, other: &Poly, c: &Rational) {
        for (m, x) in &other.terms {
            let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *e += x * c;
            if e.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let m: Monomial = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_assign_scaled(&Poly::monomial(m, Rational::one()), &(x * y));
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::default();
        for (m, x) in &self.terms {
            if m[var] > 0 {
                let mut m2 = m.clone();
                m2[var] -= 1;
                out.add_assign_scaled(&Poly::monomial(m2, Rational::one()), &(x * Rational::from_integer(m[var].into())));
            }
        }
        out
    }

    fn to_form(&self, nvars: usize) -> PolyForm {
        let mut f = PolyForm::zero(nvars, 0);
        for (m, x) in &self.terms {
            f.add_term(m.clone(), Vec::new(), x.clone());
        }
        f
    }
}

/// A polynomial vector field `Σ_b Y^b ∂_b` on the chart of a contact system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    pub components: Vec<Poly>,
}

impl VectorField {
    pub fn zero(n: usize) -> Self {
        VectorField { components: vec![Poly::default(); n] }
    }

    /// `Y(f)`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::default();
        for (b, yb) in self.components.iter().enumerate() {
            if !yb.is_zero() {
                out.add_assign_scaled(&yb.mul(&f.derivative(b)), &Rational::one());
            }
        }
        out
    }

    /// `[Y, Z]^b = Y(Z^b) − Z(Y^b)`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        let components = (0..self.components.len())
            .map(|b| {
                let mut p = self.apply(&other.components[b]);
                p.add_assign_scaled(&other.apply(&self.components[b]), &-Rational::one());
                p
            })
            .collect();
        VectorField { components }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// Text form `(coefficient) ∂_name + …`, coefficients in the form syntax.
    pub fn to_text(&self, cs: &ContactSystem) -> String {
        let n = self.components.len();
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(b, p)| format!("({}) ∂_{}", p.to_form(n).to_text(&cs.chart), cs.chart.names[b]))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Data of the horizontal frame: `L[j][α][μ]` with `ℓ^j_μ = Σ_α L^j_{αμ} x^α`.
struct Frame {
    r: usize,
    s: usize,
    l: Vec<Vec<Vec<Rational>>>,
}

impl Frame {
    fn new(cs: &ContactSystem) -> Self {
        let (r, s) = (cs.r, cs.s);
        let mut l = vec![vec![vec![Rational::zero(); s]; s]; r];
        for (j, lam) in cs.lambdas.iter().enumerate() {
            for (m, dx, c) in lam.terms() {
                if dx[0] < r {
                    continue;
                }
                let alpha = m.iter().position(|e| *e == 1).expect("λ coefficients are linear") - r;
                l[j][alpha][dx[0] - r] = c.clone();
            }
        }
        Frame { r, s, l }
    }

    fn ell(&self, j: usize, mu: usize) -> Poly {
        let n = self.r + self.s;
        let mut p = Poly::default();
        for alpha in 0..self.s {
            let c = &self.l[j][alpha][mu];
            if !c.is_zero() {
                let mut m = vec![0; n];
                m[self.r + alpha] = 1;
                p.add_assign_scaled(&Poly::monomial(m, Rational::one()), c);
            }
        }
        p
    }

    /// `X_μ(f) = ∂_{x^μ} f − Σ_j ℓ^j_μ ∂_{u^j} f`.
    fn horizontal(&self, mu: usize, f: &Poly) -> Poly {
        let mut out = f.derivative(self.r + mu);
        for j in 0..self.r {
            let d = f.derivative(j);
            if !d.is_zero() {
                out.add_assign_scaled(&self.ell(j, mu).mul(&d), &-Rational::one());
            }
        }
        out
    }

    /// `E^i_μ(Y) = λ^i([Y, X_μ])` for `Y = m ∂_b`.
    fn conditions(&self, b: usize, m: &Monomial) -> Vec<((usize, usize), Poly)> {
        let f = Poly::monomial(m.clone(), Rational::one());
        let mut out = Vec::new();
        for mu in 0..self.s {
            let xf = self.horizontal(mu, &f);
            if b < self.r {
                let mut e = Poly::default();
                e.add_assign_scaled(&xf, &-Rational::one());
                out.push(((b, mu), e));
            } else {
                let alpha = b - self.r;
                for i in 0..self.r {
                    let mut e = Poly::default();
                    let c = &self.l[i][alpha][mu];
                    if !c.is_zero() {
                        e.add_assign_scaled(&f, &-c);
                    }
                    e.add_assign_scaled(&self.ell(i, alpha).mul(&xf), &-Rational::one());
                    out.push(((i, mu), e));
                }
            }
        }
        out
    }
}

/// Monomials in `r` weight-2 and `s` weight-1 variables of weighted degree `d`,
/// in a fixed order.
pub fn monomials(r: usize, s: usize, d: usize) -> Vec<Monomial> {
    let n = r + s;
    let weight = |v: usize| if v < r { 2 } else { 1 };
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(v: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>, n: usize, weight: &dyn Fn(usize) -> usize) {
        if v == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weight(v);
        let mut e = 0;
        while e * w <= left {
            cur[v] = e as u32;
            rec(v + 1, left - e * w, cur, out, n, weight);
            e += 1;
        }
        cur[v] = 0;
    }
    rec(0, d, &mut cur, &mut out, n, &weight);
    out
}

/// Unknowns of the weight-`k` block: `(component, monomial)` pairs.
fn block_unknowns(r: usize, s: usize, k: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for b in 0..r + s {
        let d = k + if b < r { 2 } else { 1 };
        if d >= 0 {
            for m in monomials(r, s, d as usize) {
                out.push((b, m));
            }
        }
    }
    out
}

/// Number of unknown coefficients of the ansatz with bound `wmax`.
pub fn ansatz_size(r: usize, s: usize, wmax: usize) -> usize {
    (-2..=wmax as i64 - 2).map(|k| block_unknowns(r, s, k).len()).sum()
}

/// Solution of [`symmetry_space`].
#[derive(Debug, Clone)]
pub struct SymmetrySpace {
    pub wmax: usize,
    pub unknowns: usize,
    /// `(k, dimension)` for every weight block.
    pub block_dims: Vec<(i64, usize)>,
    pub basis: Vec<VectorField>,
    /// Weight of each basis field.
    pub weights: Vec<i64>,
}

impl SymmetrySpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All polynomial symmetries with `x`-coefficients of weighted degree `< wmax`
/// and `u`-coefficients of weighted degree `≤ wmax`.
pub fn symmetry_space(cs: &ContactSystem, wmax: usize, max_unknowns: Option<usize>) -> Result<SymmetrySpace, SymmetryError> {
    let (r, s) = (cs.r, cs.s);
    let unknowns = ansatz_size(r, s, wmax);
    if let Some(cap) = max_unknowns {
        if unknowns > cap {
            return Err(SymmetryError::AnsatzTooLarge { unknowns, cap });
        }
    }
    let frame = Frame::new(cs);
    let n = r + s;
    let mut basis = Vec::new();
    let mut weights = Vec::new();
    let mut block_dims = Vec::new();
    for k in -2..=wmax as i64 - 2 {
        let vars = block_unknowns(r, s, k);
        let columns: Vec<Vec<((usize, usize, Monomial), Rational)>> = vars
            .par_iter()
            .map(|(b, m)| {
                let mut col = Vec::new();
                for ((i, mu), p) in frame.conditions(*b, m) {
                    for (mono, c) in p.terms {
                        col.push(((i, mu, mono), c));
                    }
                }
                col
            })
            .collect();
        let mut row_index: HashMap<(usize, usize, Monomial), usize> = HashMap::new();
        let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
        for (j, col) in columns.into_iter().enumerate() {
            for (key, c) in col {
                let next = row_index.len();
                let ri = *row_index.entry(key).or_insert(next);
                if ri == rows.len() {
                    rows.push(Vec::new());
                }
                rows[ri].push((j, c));
            }
        }
        let mut sys = SparseSystem::new(vars.len());
        for row in rows {
            sys.push_row(row);
        }
        let kernel = sparse_kernel(&sys);
        block_dims.push((k, kernel.len()));
        for v in kernel {
            let mut y = VectorField::zero(n);
            for (j, c) in v {
                let (b, m) = &vars[j];
                y.components[*b].add_assign_scaled(&Poly::monomial(m.clone(), Rational::one()), &c);
            }
            basis.push(y);
            weights.push(k);
        }
    }
    Ok(SymmetrySpace { wmax, unknowns, block_dims, basis, weights })
}

/// Re-checks `λ^i([Y, X_μ]) = 0` by bracketing with the frame fields.
pub fn preserves_distribution(cs: &ContactSystem, y: &VectorField) -> bool {
    let frame = Frame::new(cs);
    let n = cs.r + cs.s;
    (0..cs.s).all(|mu| {
        let mut x = VectorField::zero(n);
        x.components[cs.r + mu] = Poly::monomial(vec![0; n], Rational::one());
        for j in 0..cs.r {
            x.components[j].add_assign_scaled(&frame.ell(j, mu), &-Rational::one());
        }
        let z = y.bracket(&x);
        (0..cs.r).all(|i| {
            let mut v = z.components[i].clone();
            for nu in 0..cs.s {
                v.add_assign_scaled(&frame.ell(i, nu).mul(&z.components[cs.r + nu]), &Rational::one());
            }
            v.is_zero()
        })
    })
}

/// `L_Y λ^i ∧ λ^1 ∧ … ∧ λ^r = 0` for all `i`, evaluated with the form calculus.
pub fn satisfies_definition(cs: &ContactSystem, y: &VectorField) -> bool {
    let n = cs.r + cs.s;
    let mut all = PolyForm::constant(n, Rational::one());
    for l in &cs.lambdas {
        all = all.wedge(l);
    }
    cs.lambdas.iter().all(|l| lie_derivative_one_form(y, l, n).wedge(&all).is_zero())
}

/// `L_Y α = d(α(Y)) + ι_Y dα` for a 1-form.
fn lie_derivative_one_form(y: &VectorField, alpha: &PolyForm, n: usize) -> PolyForm {
    let yf: Vec<PolyForm> = y.components.iter().map(|p| p.to_form(n)).collect();
    let mut pairing = PolyForm::zero(n, 0);
    for (m, dx, c) in alpha.terms() {
        let coef = PolyForm::zero(n, 0).add(&monomial_form(n, m, c));
        pairing = pairing.add(&coef.wedge(&yf[dx[0]]));
    }
    let da = alpha.d();
    let mut inner = PolyForm::zero(n, 1);
    for (b, yb) in yf.iter().enumerate() {
        if !yb.is_zero() {
            inner = inner.add(&yb.wedge(&da.contract(b)));
        }
    }
    pairing.d().add(&inner)
}

fn monomial_form(n: usize, m: &[u32], c: &Rational) -> PolyForm {
    let mut f = PolyForm::zero(n, 0);
    f.add_term(m.to_vec(), Vec::new(), c.clone());
    f
}

/// Structure constants of the span of `basis`; fails if a bracket leaves the span.
pub fn closure_check(basis: &[VectorField]) -> Result<StructureConstants, SymmetryError> {
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    let flatten = |y: &VectorField, index: &mut HashMap<(usize, Monomial), usize>, grow: bool| -> Option<Vec<(usize, Rational)>> {
        let mut v = Vec::new();
        for (b, p) in y.components.iter().enumerate() {
            for (m, c) in &p.terms {
                let key = (b, m.clone());
                let next = index.len();
                let i = match index.get(&key) {
                    Some(i) => *i,
                    None if grow => *index.entry(key).or_insert(next),
                    None => return None,
                };
                v.push((i, c.clone()));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        Some(v)
    };
    let vecs: Vec<Vec<(usize, Rational)>> = basis.iter().map(|y| flatten(y, &mut index, true).expect("growing")).collect();
    let len = index.len();
    let solver = SpanSolver::from_sparse(len, vecs).map_err(|_| SymmetryError::Dependent)?;
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let results: Vec<Result<Vec<(usize, usize, usize, Rational)>, SymmetryError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let z = basis[i].bracket(&basis[j]);
            let mut idx = index.clone();
            let v = flatten(&z, &mut idx, false).ok_or(SymmetryError::NotClosed(i + 1, j + 1))?;
            let c = solver.coords_sparse(&v).ok_or(SymmetryError::NotClosed(i + 1, j + 1))?;
            Ok(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (i, j, k, x)).collect())
        })
        .collect();
    let mut triples = Vec::new();
    for r in results {
        triples.extend(r?);
    }
    Ok(StructureConstants::from_triples(n, triples))
}

/// Summary suitable for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub wmax: usize,
    pub unknowns: usize,
    pub dim: usize,
    pub block_dims: Vec<(i64, usize)>,
    pub closed: bool,
    pub killing_signature: Option<(usize, usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(1, 2, 2).len(), 4);
        assert_eq!(monomials(0, 3, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn bracket_of_coordinate_fields() {
        let x = VectorField { components: vec![Poly::monomial(vec![0, 0], Rational::one()), Poly::default()] };
        let y = VectorField { components: vec![Poly::default(), Poly::monomial(vec![1, 0], Rational::one())] };
        let z = x.bracket(&y);
        assert_eq!(z.components[1], Poly::monomial(vec![0, 0], Rational::one()));
    }
}
