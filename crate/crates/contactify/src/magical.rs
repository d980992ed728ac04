//! The magical equation
//!
//! `ρ(A)^α_μ ω^i_{αν} + ρ(A)^α_ν ω^i_{μα} = τ(A)^i_j ω^j_{μν}`
//!
//! for an equivariant map `ω: Λ²S → R`, given representations `ρ` on `S` and
//! `τ` on `R` of the same abstract Lie algebra.

use crate::exact::{format_rational, parse_rational, sparse_kernel, QMatrix, Rational, SpanSolver, SparseSystem};
use crate::repalg::{casimir, eigenspace, eigenspaces, killing_form, structure_constants, wedge_rep, RepError, Representation, StructureConstants};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MagicalError {
    #[error("ρ and τ have different generator counts ({0} vs {1})")]
    GeneratorCount(usize, usize),
    #[error("no invariant subspace of dimension {0} in Λ²S*")]
    NoInvariantSubspace(usize),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Index of the pair `(μ, ν)`, `μ < ν`, both 0-based, in the `I(i,j)` ordering.
pub fn pair_slot(mu: usize, nu: usize) -> usize {
    debug_assert!(mu < nu);
    mu + nu * (nu - 1) / 2
}

/// The tensor `ω^i_{μν}`, stored for `μ < ν` only; indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaMap {
    pub r: usize,
    pub s: usize,
    terms: BTreeMap<(usize, usize, usize), Rational>,
}

impl OmegaMap {
    pub fn zero(r: usize, s: usize) -> Self {
        OmegaMap { r, s, terms: BTreeMap::new() }
    }

    /// Number of unordered pairs `μ < ν`.
    pub fn pairs(&self) -> usize {
        self.s * (self.s.saturating_sub(1)) / 2
    }

    /// `ω^i_{μν}` with antisymmetry applied.
    pub fn get(&self, i: usize, mu: usize, nu: usize) -> Rational {
        match mu.cmp(&nu) {
            std::cmp::Ordering::Less => self.terms.get(&(i, mu, nu)).cloned().unwrap_or_else(Rational::zero),
            std::cmp::Ordering::Greater => self.terms.get(&(i, nu, mu)).map(|x| -x).unwrap_or_else(Rational::zero),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// Sets `ω^i_{μν}` (and implicitly `ω^i_{νμ} = −ω^i_{μν}`).
    pub fn set(&mut self, i: usize, mu: usize, nu: usize, value: Rational) {
        assert!(i < self.r && mu < self.s && nu < self.s && mu != nu);
        let (key, value) = if mu < nu { ((i, mu, nu), value) } else { ((i, nu, mu), -value) };
        if value.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, value);
        }
    }

    /// Nonzero entries `(i, μ, ν, ω^i_{μν})` with `μ < ν`, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.terms.iter().map(|(&(i, m, n), v)| (i, m, n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The antisymmetric `s × s` matrix of `ω^i`.
    pub fn matrix(&self, i: usize) -> QMatrix {
        QMatrix::from_fn(self.s, self.s, |m, n| self.get(i, m, n))
    }

    /// Builds `ω` from antisymmetric matrices, one per component.
    pub fn from_matrices(ms: &[QMatrix]) -> Option<Self> {
        let s = ms.first().map_or(0, |m| m.rows());
        let mut out = OmegaMap::zero(ms.len(), s);
        for (i, m) in ms.iter().enumerate() {
            if m.rows() != s || m.cols() != s || m.transpose() != m.scale(&-Rational::one()) {
                return None;
            }
            for nu in 0..s {
                for mu in 0..nu {
                    out.set(i, mu, nu, m.get(mu, nu).clone());
                }
            }
        }
        Some(out)
    }

    /// Layout used by the solver: component-major, pairs in `I(μ,ν)` order.
    fn from_solution(r: usize, s: usize, v: &[(usize, Rational)]) -> Self {
        let np = s * (s - 1) / 2;
        let mut slots = Vec::with_capacity(np);
        for nu in 0..s {
            for mu in 0..nu {
                slots.push((mu, nu));
            }
        }
        let mut out = OmegaMap::zero(r, s);
        for (c, x) in v {
            let (mu, nu) = slots[c % np];
            out.set(c / np, mu, nu, x.clone());
        }
        out
    }

    /// The `r × s(s−1)/2` coefficient matrix, rows indexed by `i`.
    pub fn coefficient_matrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.r, self.pairs());
        for (i, mu, nu, v) in self.entries() {
            m.set(i, pair_slot(mu, nu), v.clone());
        }
        m
    }

    /// Whether `ω: Λ²S → R` is onto.
    pub fn is_full(&self) -> bool {
        self.coefficient_matrix().rank() == self.r
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = OmegaMap::zero(self.r, self.s);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(*k, v * c);
            }
        }
        out
    }

    /// The first nonzero coefficient in `(i, μ, ν)` order.
    pub fn leading(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// Rescales so the leading coefficient equals `lead`.
    pub fn normalized(&self, lead: &Rational) -> Self {
        match self.leading() {
            Some(x) => self.scale(&(lead / x)),
            None => self.clone(),
        }
    }

    /// Exact check of the magical equation for every generator.
    pub fn satisfies(&self, rho: &Representation, tau: &Representation) -> bool {
        rho.len() == tau.len()
            && rho.size() == self.s
            && tau.size() == self.r
            && rho.matrices.par_iter().zip(&tau.matrices).all(|(a, t)| {
                (0..self.r).all(|i| {
                    let w = self.matrix(i);
                    let lhs = &(&a.transpose() * &w) + &(&w * a);
                    let mut rhs = QMatrix::zeros(self.s, self.s);
                    for j in 0..self.r {
                        let c = t.get(i, j);
                        if !c.is_zero() {
                            rhs = &rhs + &self.matrix(j).scale(c);
                        }
                    }
                    lhs == rhs
                })
            })
    }
}

#[derive(Serialize, Deserialize)]
struct OmegaJson {
    r: usize,
    s: usize,
    omega: Vec<(usize, usize, usize, String)>,
}

impl Serialize for OmegaMap {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let omega = self.entries().map(|(i, m, n, v)| (i + 1, m + 1, n + 1, format_rational(v))).collect();
        OmegaJson { r: self.r, s: self.s, omega }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for OmegaMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = OmegaJson::deserialize(d)?;
        let mut out = OmegaMap::zero(j.r, j.s);
        for (i, m, n, v) in j.omega {
            if i == 0 || m == 0 || n <= m || i > j.r || n > j.s {
                return Err(D::Error::custom(format!("bad ω index ({i},{m},{n})")));
            }
            out.set(i - 1, m - 1, n - 1, parse_rational(&v).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}

/// Basis of the solution space of the magical equation.
pub fn solve_omega(rho: &Representation, tau: &Representation) -> Result<Vec<OmegaMap>, MagicalError> {
    if rho.len() != tau.len() {
        return Err(MagicalError::GeneratorCount(rho.len(), tau.len()));
    }
    let (s, r) = (rho.size(), tau.size());
    let np = s * (s.saturating_sub(1)) / 2;
    let var = |i: usize, mu: usize, nu: usize| -> Option<(usize, bool)> {
        match mu.cmp(&nu) {
            std::cmp::Ordering::Less => Some((i * np + pair_slot(mu, nu), false)),
            std::cmp::Ordering::Greater => Some((i * np + pair_slot(nu, mu), true)),
            std::cmp::Ordering::Equal => None,
        }
    };
    let blocks: Vec<Vec<Vec<(usize, Rational)>>> = rho
        .matrices
        .par_iter()
        .zip(&tau.matrices)
        .map(|(a, t)| {
            let columns: Vec<Vec<(usize, &Rational)>> =
                (0..s).map(|c| (0..s).filter_map(|row| Some((row, a.get(row, c))).filter(|(_, x)| !x.is_zero())).collect()).collect();
            let mut rows = Vec::with_capacity(r * np);
            for i in 0..r {
                for nu in 0..s {
                    for mu in 0..nu {
                        let mut row = Vec::new();
                        for (alpha, x) in &columns[mu] {
                            if let Some((c, flip)) = var(i, *alpha, nu) {
                                row.push((c, if flip { -*x } else { (*x).clone() }));
                            }
                        }
                        for (alpha, x) in &columns[nu] {
                            if let Some((c, flip)) = var(i, mu, *alpha) {
                                row.push((c, if flip { -*x } else { (*x).clone() }));
                            }
                        }
                        for j in 0..r {
                            let y = t.get(i, j);
                            if !y.is_zero() {
                                row.push((j * np + pair_slot(mu, nu), -y));
                            }
                        }
                        rows.push(row);
                    }
                }
            }
            rows
        })
        .collect();
    let mut sys = SparseSystem::new(r * np);
    for row in blocks.into_iter().flatten() {
        sys.push_row(row);
    }
    let sols: Vec<OmegaMap> = sparse_kernel(&sys).iter().map(|v| OmegaMap::from_solution(r, s, v)).collect();
    debug_assert!(sols.iter().all(|w| w.satisfies(rho, tau)));
    Ok(sols)
}

/// Structure constants of the largest leading block of generators with a
/// nondegenerate Killing form: all generators, or all but a trailing scaling element.
fn semisimple_part(rho: &Representation) -> Result<StructureConstants, MagicalError> {
    let sc = structure_constants(rho)?;
    for n in [sc.dim, sc.dim.saturating_sub(1)] {
        if let Ok(sub) = sc.restrict(n) {
            if n > 0 && killing_form(&sub).rank() == n {
                return Ok(sub);
            }
        }
    }
    Err(RepError::SingularKilling.into())
}

/// Solves for `ω` and `τ` together, given only `ρ` and the target rank `r`.
///
/// Each candidate is a Casimir eigenspace of dimension `r` in `Λ²S*`, with `τ`
/// read off from the induced action.
pub fn solve_omega_joint(rho: &Representation, r: usize) -> Result<Vec<(OmegaMap, Representation)>, MagicalError> {
    let s = rho.size();
    let np = s * (s.saturating_sub(1)) / 2;
    let wedge = wedge_rep(rho);
    let functionals: Vec<Vec<Vec<Rational>>> = if r == np {
        vec![(0..np).map(|k| (0..np).map(|c| if c == k { Rational::one() } else { Rational::zero() }).collect()).collect()]
    } else {
        let sc = semisimple_part(rho)?;
        let cas = casimir(&wedge, &sc, &Rational::one())?.transpose();
        eigenspaces(&cas)?.into_iter().filter(|(_, d)| *d == r).map(|(lambda, _)| eigenspace(&cas, &lambda)).collect()
    };
    if functionals.is_empty() {
        return Err(MagicalError::NoInvariantSubspace(r));
    }
    let mut out = Vec::new();
    for basis in functionals {
        let solver = SpanSolver::new(np, &basis).map_err(|_| MagicalError::NoInvariantSubspace(r))?;
        let mut taus = Vec::with_capacity(rho.len());
        for m in &wedge.matrices {
            let mt = m.transpose();
            let mut t = QMatrix::zeros(r, r);
            for (i, w) in basis.iter().enumerate() {
                let image = mt.mul_vec(w);
                let c = solver.coords(&image).ok_or(MagicalError::NoInvariantSubspace(r))?;
                for (j, x) in c.into_iter().enumerate() {
                    t.set(i, j, x);
                }
            }
            taus.push(t);
        }
        let mut omega = OmegaMap::zero(r, s);
        for (i, w) in basis.iter().enumerate() {
            for nu in 0..s {
                for mu in 0..nu {
                    omega.set(i, mu, nu, w[pair_slot(mu, nu)].clone());
                }
            }
        }
        let tau = Representation::new(rho.labels.clone(), taus)?;
        debug_assert!(omega.satisfies(rho, &tau));
        out.push((omega, tau));
    }
    Ok(out)
}

/// Outcome of [`verify_tau_representation`]. Pairs are 1-based generator labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub pairs_checked: usize,
    /// Pairs where `(τ([A,B]) − [τ(A),τ(B)]) ω ≠ 0`.
    pub part_one_violations: Vec<(usize, usize)>,
    /// Pairs where `τ([A,B]) ≠ [τ(A),τ(B)]`.
    pub homomorphism_violations: Vec<(usize, usize)>,
}

impl TauReport {
    pub fn part_one_holds(&self) -> bool {
        self.part_one_violations.is_empty()
    }

    pub fn tau_is_representation(&self) -> bool {
        self.homomorphism_violations.is_empty()
    }
}

/// Checks `(τ([A,B]) − [τ(A),τ(B)]) ω = 0` on all generator pairs, and whether
/// `τ` is itself a representation.
pub fn verify_tau_representation(rho: &Representation, tau: &Representation, omega: &OmegaMap) -> Result<TauReport, MagicalError> {
    if rho.len() != tau.len() {
        return Err(MagicalError::GeneratorCount(rho.len(), tau.len()));
    }
    let sc = structure_constants(rho)?;
    let w = omega.coefficient_matrix();
    let n = rho.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let results: Vec<(bool, bool)> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let mut d = QMatrix::zeros(tau.size(), tau.size());
            for (k, c) in sc.bracket(a, b) {
                d = &d + &tau.matrices[*k].scale(c);
            }
            d = &d - &tau.matrices[a].commutator(&tau.matrices[b]);
            ((&d * &w).is_zero(), d.is_zero())
        })
        .collect();
    let mut report = TauReport { pairs_checked: pairs.len(), part_one_violations: Vec::new(), homomorphism_violations: Vec::new() };
    for (&(a, b), (part_one, hom)) in pairs.iter().zip(results) {
        if !part_one {
            report.part_one_violations.push((a + 1, b + 1));
        }
        if !hom {
            report.homomorphism_violations.push((a + 1, b + 1));
        }
    }
    Ok(report)
}
