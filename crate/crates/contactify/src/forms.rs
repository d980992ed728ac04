//! Differential forms with polynomial coefficients, contactification 1-forms
//! and invariant 4-forms.

use crate::exact::{format_coefficient_prefix, format_rational, parse_rational, sparse_kernel, QMatrix, Rational, SparseSystem};
use crate::magical::OmegaMap;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormsError {
    #[error("ω is not onto ℝ^{r} (rank {rank})")]
    NotSurjective { r: usize, rank: usize },
    #[error("form has non-constant coefficients")]
    NotConstant,
    #[error("expected a {expected}-form, got a {found}-form")]
    Degree { expected: usize, found: usize },
    #[error("cannot parse form: {0}")]
    Parse(String),
}

/// Named coordinates with weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chart {
    pub names: Vec<String>,
    pub weights: Vec<u32>,
}

impl Chart {
    /// `u^1, …, u^r` (weight 2) followed by `x^1, …, x^s` (weight 1).
    pub fn contact(r: usize, s: usize) -> Self {
        Self::with_vertical_names(r, s, |i| format!("u^{i}"))
    }

    /// Like [`contact`](Self::contact) but with the fibre coordinates called
    /// `x^{s+1}, …, x^{s+r}`.
    pub fn single_block(r: usize, s: usize) -> Self {
        Self::with_vertical_names(r, s, |i| format!("x^{}", s + i))
    }

    fn with_vertical_names(r: usize, s: usize, name: impl Fn(usize) -> String) -> Self {
        let mut names: Vec<String> = (1..=r).map(name).collect();
        names.extend((1..=s).map(|i| format!("x^{i}")));
        let mut weights = vec![2; r];
        weights.extend(vec![1; s]);
        Chart { names, weights }
    }

    /// `x^1, …, x^s`, all of weight 1.
    pub fn horizontal(s: usize) -> Self {
        Chart { names: (1..=s).map(|i| format!("x^{i}")).collect(), weights: vec![1; s] }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Sorts a list of distinct indices, returning the parity of the permutation;
/// `None` if an index repeats.
pub fn sort_with_sign(mut v: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, odd))
    }
}

type TermKey = (Vec<u32>, Vec<usize>);

/// A `degree`-form `Σ c · x^m dx^{i₁}∧…∧dx^{i_k}` on `nvars` coordinates.
/// Keys are (exponent vector, strictly increasing differential indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyForm {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<TermKey, Rational>,
}

impl PolyForm {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        PolyForm { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut f = Self::zero(nvars, 0);
        f.add_term(vec![0; nvars], vec![], c);
        f
    }

    /// The function `x^k`.
    pub fn coordinate(nvars: usize, k: usize) -> Self {
        Self::monomial(nvars, k, 1)
    }

    fn monomial(nvars: usize, k: usize, e: u32) -> Self {
        let mut m = vec![0; nvars];
        m[k] = e;
        let mut f = Self::zero(nvars, 0);
        f.add_term(m, vec![], Rational::one());
        f
    }

    /// The 1-form `dx^k`.
    pub fn differential(nvars: usize, k: usize) -> Self {
        let mut f = Self::zero(nvars, 1);
        f.add_term(vec![0; nvars], vec![k], Rational::one());
        f
    }

    /// The constant form `dx^{i₁}∧…∧dx^{i_k}`, indices in any order.
    pub fn basis_form(nvars: usize, indices: &[usize]) -> Self {
        let mut f = Self::zero(nvars, indices.len());
        if let Some((sorted, odd)) = sort_with_sign(indices.to_vec()) {
            f.add_term(vec![0; nvars], sorted, if odd { -Rational::one() } else { Rational::one() });
        }
        f
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · x^m dx^I`; `dx` must be strictly increasing.
    pub fn add_term(&mut self, m: Vec<u32>, dx: Vec<usize>, c: Rational) {
        debug_assert!(dx.windows(2).all(|w| w[0] < w[1]) && dx.len() == self.degree && m.len() == self.nvars);
        if c.is_zero() {
            return;
        }
        let key = (m, dx);
        let v = self.terms.remove(&key).unwrap_or_else(Rational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[usize], &Rational)> {
        self.terms.iter().map(|((m, d), c)| (m.as_slice(), d.as_slice(), c))
    }

    /// Coefficient of the constant monomial times `dx^I` (`I` strictly increasing).
    pub fn constant_coefficient(&self, dx: &[usize]) -> Rational {
        self.terms.get(&(vec![0; self.nvars], dx.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|(m, _)| m.iter().all(|&e| e == 0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    pub fn add(&self, other: &PolyForm) -> Self {
        assert_eq!((self.nvars, self.degree), (other.nvars, other.degree));
        let mut out = self.clone();
        for ((m, d), c) in &other.terms {
            out.add_term(m.clone(), d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyForm) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Exterior derivative.
    pub fn d(&self) -> Self {
        let mut out = Self::zero(self.nvars, self.degree + 1);
        for ((m, dx), c) in &self.terms {
            for k in 0..self.nvars {
                if m[k] == 0 || dx.contains(&k) {
                    continue;
                }
                let mut m2 = m.clone();
                m2[k] -= 1;
                let mut idx = vec![k];
                idx.extend_from_slice(dx);
                let (sorted, odd) = sort_with_sign(idx).expect("k not in dx");
                let v = c * Rational::from_integer(m[k].into());
                out.add_term(m2, sorted, if odd { -v } else { v });
            }
        }
        out
    }

    /// Wedge product.
    pub fn wedge(&self, other: &PolyForm) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars, self.degree + other.degree);
        for ((m1, d1), c1) in &self.terms {
            for ((m2, d2), c2) in &other.terms {
                let mut idx = d1.clone();
                idx.extend_from_slice(d2);
                if let Some((sorted, odd)) = sort_with_sign(idx) {
                    let m: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                    let v = c1 * c2;
                    out.add_term(m, sorted, if odd { -v } else { v });
                }
            }
        }
        out
    }

    /// Contraction with the coordinate vector field `∂_k`.
    pub fn contract(&self, k: usize) -> Self {
        assert!(self.degree > 0);
        let mut out = Self::zero(self.nvars, self.degree - 1);
        for ((m, dx), c) in &self.terms {
            if let Some(pos) = dx.iter().position(|&i| i == k) {
                let mut rest = dx.clone();
                rest.remove(pos);
                out.add_term(m.clone(), rest, if pos % 2 == 1 { -c } else { c.clone() });
            }
        }
        out
    }

    /// Terms in printing order: by weighted degree of the monomial, then larger
    /// exponents on earlier coordinates first, then by differential indices.
    fn ordered_terms<'a>(&'a self, chart: &Chart) -> Vec<(&'a [u32], &'a [usize], &'a Rational)> {
        let weight = |m: &[u32]| -> u64 { m.iter().zip(&chart.weights).map(|(&e, &w)| e as u64 * w as u64).sum() };
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| weight(a.0).cmp(&weight(b.0)).then_with(|| b.0.cmp(a.0)).then_with(|| a.1.cmp(b.1)));
        v
    }

    /// Canonical text syntax, e.g. `du^1 + x^1 dx^2 - 1/2 x^7 dx^8`.
    pub fn to_text(&self, chart: &Chart) -> String {
        assert_eq!(chart.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (m, dx, c)) in self.ordered_terms(chart).into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            let mut factors: Vec<String> = Vec::new();
            for (k, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(chart.names[k].clone()),
                    _ => factors.push(format!("({})^{e}", chart.names[k])),
                }
            }
            if !dx.is_empty() {
                factors.push(dx.iter().map(|&k| format!("d{}", chart.names[k])).collect::<Vec<_>>().join(" ∧ "));
            }
            let magnitude = c.abs();
            if factors.is_empty() {
                out.push_str(&format_rational(&magnitude));
            } else {
                out.push_str(&format_coefficient_prefix(&magnitude));
                out.push_str(&factors.join(" "));
            }
        }
        out
    }

    /// LaTeX rendering in the same term order as [`to_text`](Self::to_text).
    pub fn to_latex(&self, chart: &Chart) -> String {
        let tex_name = |name: &str| match name.split_once('^') {
            Some((base, idx)) => format!("{base}^{{{idx}}}"),
            None => name.to_string(),
        };
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (m, dx, c)) in self.ordered_terms(chart).into_iter().enumerate() {
            if n > 0 || c.is_negative() {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let magnitude = c.abs();
            let mut body = String::new();
            for (k, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => body.push_str(&tex_name(&chart.names[k])),
                    _ => {
                        let _ = write!(body, "({})^{{{e}}}", tex_name(&chart.names[k]));
                    }
                }
            }
            let diffs: Vec<String> = dx.iter().map(|&k| format!("\\mathrm{{d}}{}", tex_name(&chart.names[k]))).collect();
            if !diffs.is_empty() {
                if !body.is_empty() {
                    body.push_str("\\,");
                }
                body.push_str(&diffs.join("\\wedge "));
            }
            let coeff = if magnitude.is_one() && !body.is_empty() {
                String::new()
            } else if magnitude.is_integer() {
                magnitude.to_string()
            } else {
                format!("\\tfrac{{{}}}{{{}}}", magnitude.numer(), magnitude.denom())
            };
            out.push_str(&coeff);
            out.push_str(&body);
        }
        out.trim_start_matches(" + ").to_string()
    }

    /// JSON term list: `{coefficient, monomial: [[name, exponent]…], differentials: [name…]}`.
    pub fn to_json(&self, chart: &Chart) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .ordered_terms(chart)
            .into_iter()
            .map(|(m, dx, c)| {
                let mono: Vec<(String, u32)> = m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, &e)| (chart.names[k].clone(), e)).collect();
                let diffs: Vec<&str> = dx.iter().map(|&k| chart.names[k].as_str()).collect();
                serde_json::json!({ "coefficient": format_rational(c), "monomial": mono, "differentials": diffs })
            })
            .collect();
        serde_json::json!({ "degree": self.degree, "terms": terms })
    }

    /// Parses the canonical text syntax over the given chart.
    pub fn parse(text: &str, chart: &Chart) -> Result<Self, FormsError> {
        let err = |m: &str| FormsError::Parse(format!("{m} in `{text}`"));
        let text = text.trim();
        if text == "0" {
            return Err(err("degree of the zero form is ambiguous"));
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let mut pieces: Vec<(bool, Vec<&str>)> = Vec::new();
        let mut negative = false;
        let mut current: Vec<&str> = Vec::new();
        for (n, tok) in tokens.iter().enumerate() {
            match *tok {
                "+" | "-" if n > 0 => {
                    pieces.push((negative, std::mem::take(&mut current)));
                    negative = *tok == "-";
                }
                _ => current.push(tok),
            }
        }
        pieces.push((negative, current));
        let mut form: Option<PolyForm> = None;
        for (negative, mut toks) in pieces {
            if toks.is_empty() {
                return Err(err("empty term"));
            }
            let mut neg = negative;
            if let Some(stripped) = toks[0].strip_prefix('-') {
                neg = !neg;
                if stripped.is_empty() {
                    toks.remove(0);
                } else {
                    toks[0] = stripped;
                }
            }
            let mut coeff = Rational::one();
            if let Some(first) = toks.first() {
                if let Ok(c) = parse_rational(first) {
                    coeff = c;
                    toks.remove(0);
                }
            }
            let mut m = vec![0u32; chart.len()];
            let mut dx = Vec::new();
            for tok in toks {
                if tok == "∧" {
                    continue;
                }
                if let Some(name) = tok.strip_prefix('d').filter(|n| chart.index(n).is_some()) {
                    dx.push(chart.index(name).unwrap());
                } else if let Some(k) = chart.index(tok) {
                    m[k] += 1;
                } else if let Some((inner, e)) = tok.strip_prefix('(').and_then(|t| t.split_once(")^")) {
                    let k = chart.index(inner).ok_or_else(|| err("unknown coordinate"))?;
                    m[k] += e.parse::<u32>().map_err(|_| err("bad exponent"))?;
                } else {
                    return Err(err(&format!("unknown token `{tok}`")));
                }
            }
            let (sorted, odd) = sort_with_sign(dx).ok_or_else(|| err("repeated differential"))?;
            let f = form.get_or_insert_with(|| PolyForm::zero(chart.len(), sorted.len()));
            if f.degree != sorted.len() {
                return Err(err("mixed degrees"));
            }
            let c = if neg != odd { -coeff } else { coeff };
            f.add_term(m, sorted, c);
        }
        form.ok_or_else(|| err("empty form"))
    }

    /// `c` with `self = c · other`, if the two forms are proportional and nonzero.
    pub fn ratio_to(&self, other: &PolyForm) -> Option<Rational> {
        let (k, x) = self.terms.iter().next()?;
        let y = other.terms.get(k)?;
        let c = x / y;
        (other.scale(&c) == *self).then_some(c)
    }
}

/// The 2-forms `ω^i = sign · Σ_{μ<ν} ω^i_{μν} dx^μ∧dx^ν` on a chart whose last
/// `s` coordinates are the horizontal ones.
pub fn two_forms(omega: &OmegaMap, sign: i64, nvars: usize) -> Vec<PolyForm> {
    let offset = nvars - omega.s;
    let sign = Rational::from_integer(sign.into());
    let mut out = vec![PolyForm::zero(nvars, 2); omega.r];
    for (i, mu, nu, v) in omega.entries() {
        out[i].add_term(vec![0; nvars], vec![offset + mu, offset + nu], v * &sign);
    }
    out
}

/// 1-forms `λ^i = du^i + sign · Σ_{μ<ν} ω^i_{μν} x^μ dx^ν` with their context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactSystem {
    pub r: usize,
    pub s: usize,
    pub chart: Chart,
    pub lambdas: Vec<PolyForm>,
    pub omega: OmegaMap,
    pub sign: i64,
}

impl ContactSystem {
    /// The declared 2-forms `ω^i` on the full chart.
    pub fn two_forms(&self) -> Vec<PolyForm> {
        two_forms(&self.omega, self.sign, self.chart.len())
    }

    /// One λ per line in canonical syntax, newline-terminated.
    pub fn lambdas_text(&self) -> String {
        self.lambdas.iter().map(|l| l.to_text(&self.chart) + "\n").collect()
    }

    /// One ω per line in canonical syntax, newline-terminated.
    pub fn omegas_text(&self) -> String {
        let h = Chart::horizontal(self.s);
        two_forms(&self.omega, self.sign, self.s).iter().map(|w| w.to_text(&h) + "\n").collect()
    }
}

/// Contactification on the chart `(u^1, …, u^r, x^1, …, x^s)`.
pub fn contactify(omega: &OmegaMap, sign: i64) -> ContactSystem {
    contactify_on(omega, sign, Chart::contact(omega.r, omega.s))
}

/// Contactification on a chart whose first `r` coordinates are the fibre ones.
pub fn contactify_on(omega: &OmegaMap, sign: i64, chart: Chart) -> ContactSystem {
    let (r, s) = (omega.r, omega.s);
    assert_eq!(chart.len(), r + s);
    let n = r + s;
    let sgn = Rational::from_integer(sign.into());
    let mut lambdas: Vec<PolyForm> = (0..r).map(|i| PolyForm::differential(n, i)).collect();
    for (i, mu, nu, v) in omega.entries() {
        let mut m = vec![0; n];
        m[r + mu] = 1;
        lambdas[i].add_term(m, vec![r + nu], v * &sgn);
    }
    ContactSystem { r, s, chart, lambdas, omega: omega.clone(), sign }
}

/// Outcome of [`contact_checks`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContactReport {
    /// `X_i ⌟ λ^j` for the vertical frame `X_i = ∂/∂u^i` is the identity.
    pub vertical_frame_identity: bool,
    /// `dλ^i = ω^i` with `a = Id` and `μ = 0`.
    pub d_lambda_matches: bool,
    /// Rank of the distribution annihilated by the λ's.
    pub distribution_rank: usize,
    /// For `r = 1`: `(dλ)^n ∧ λ ≠ 0`.
    pub contact_condition: Option<bool>,
}

impl ContactReport {
    pub fn passed(&self) -> bool {
        self.vertical_frame_identity && self.d_lambda_matches && self.contact_condition != Some(false)
    }
}

/// Checks the defining conditions of a contactification.
pub fn contact_checks(cs: &ContactSystem) -> Result<ContactReport, FormsError> {
    let rank = cs.omega.coefficient_matrix().rank();
    if rank < cs.r {
        return Err(FormsError::NotSurjective { r: cs.r, rank });
    }
    let n = cs.chart.len();
    let vertical_frame_identity = (0..cs.r).all(|i| {
        (0..cs.r).all(|j| {
            let c = cs.lambdas[j].contract(i);
            let expected = if i == j { PolyForm::constant(n, Rational::one()) } else { PolyForm::zero(n, 0) };
            c == expected
        })
    });
    let d_lambda_matches = cs.lambdas.iter().zip(cs.two_forms()).all(|(l, w)| l.d() == w);
    let contact_condition = (cs.r == 1 && cs.s.is_multiple_of(2)).then(|| {
        let dl = cs.lambdas[0].d();
        let mut top = cs.lambdas[0].clone();
        for _ in 0..cs.s / 2 {
            top = dl.wedge(&top);
        }
        !top.is_zero()
    });
    Ok(ContactReport { vertical_frame_identity, d_lambda_matches, distribution_rank: n - cs.r, contact_condition })
}

/// `Φ = h_{ij} ω^i∧ω^j` on the horizontal chart `x^1, …, x^s`.
pub fn four_form(omega: &OmegaMap, sign: i64, h: &QMatrix) -> PolyForm {
    let w = two_forms(omega, sign, omega.s);
    let mut phi = PolyForm::zero(omega.s, 4);
    for i in 0..omega.r {
        for j in 0..omega.r {
            let c = h.get(i, j);
            if !c.is_zero() {
                phi = phi.add(&w[i].wedge(&w[j]).scale(c));
            }
        }
    }
    phi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilizerMode {
    /// `A·Φ = 0`.
    Strict,
    /// `A·Φ = S Φ` for some scalar `S`.
    Conformal,
}

/// Stabilizer of a constant form in `gl(s)`: basis matrices and their weights `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilizer {
    pub matrices: Vec<QMatrix>,
    pub weights: Vec<Rational>,
}

impl Stabilizer {
    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    /// Dimension of the subalgebra with `S = 0`.
    pub fn strict_dim(&self) -> usize {
        self.dim() - usize::from(self.weights.iter().any(|w| !w.is_zero()))
    }
}

/// `(A·Φ)(e_{i₁},…,e_{i_k}) = Σ_t Φ(…, A e_{i_t}, …)`, written as linear rows in
/// the entries of `A` (and optionally a trailing weight unknown).
fn action_rows(phi: &PolyForm, with_weight: bool) -> SparseSystem {
    let s = phi.nvars();
    let k = phi.degree();
    let coeff = |idx: Vec<usize>| -> Option<Rational> {
        let (sorted, odd) = sort_with_sign(idx)?;
        let c = phi.constant_coefficient(&sorted);
        (!c.is_zero()).then(|| if odd { -c } else { c })
    };
    let subsets = crate::repalg::colex_subsets(s, k);
    let rows: Vec<Vec<(usize, Rational)>> = subsets
        .par_iter()
        .map(|set| {
            let mut row = Vec::new();
            for t in 0..k {
                for alpha in 0..s {
                    let mut idx = set.clone();
                    idx[t] = alpha;
                    if let Some(c) = coeff(idx) {
                        row.push((alpha * s + set[t], c));
                    }
                }
            }
            if with_weight {
                let c = phi.constant_coefficient(set);
                if !c.is_zero() {
                    row.push((s * s, -c));
                }
            }
            row
        })
        .collect();
    let mut sys = SparseSystem::new(s * s + usize::from(with_weight));
    for row in rows {
        sys.push_row(row);
    }
    sys
}

/// Stabilizer of a constant-coefficient form.
pub fn stabilizer(phi: &PolyForm, mode: StabilizerMode) -> Result<Stabilizer, FormsError> {
    if !phi.is_constant() {
        return Err(FormsError::NotConstant);
    }
    let s = phi.nvars();
    let with_weight = mode == StabilizerMode::Conformal;
    let sys = action_rows(phi, with_weight);
    let mut matrices = Vec::new();
    let mut weights = Vec::new();
    for v in sparse_kernel(&sys) {
        let mut a = QMatrix::zeros(s, s);
        let mut w = Rational::zero();
        for (c, x) in v {
            if c == s * s {
                w = x;
            } else {
                a.set(c / s, c % s, x);
            }
        }
        matrices.push(a);
        weights.push(w);
    }
    Ok(Stabilizer { matrices, weights })
}

/// `A·Φ` for a single matrix, as a form (the infinitesimal action on a constant form).
pub fn act_on_constant_form(a: &QMatrix, phi: &PolyForm) -> PolyForm {
    let s = phi.nvars();
    let mut out = PolyForm::zero(s, phi.degree());
    for (_, dx, c) in phi.terms() {
        for (t, &mu) in dx.iter().enumerate() {
            for beta in 0..s {
                let x = a.get(mu, beta);
                if x.is_zero() {
                    continue;
                }
                let mut idx = dx.to_vec();
                idx[t] = beta;
                if let Some((sorted, odd)) = sort_with_sign(idx) {
                    let v = c * x;
                    out.add_term(vec![0; s], sorted, if odd { -v } else { v });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    #[test]
    fn d_of_simple_lambda() {
        let chart = Chart::contact(1, 2);
        let lambda = PolyForm::parse("du^1 + x^1 dx^2", &chart).unwrap();
        assert_eq!(lambda.d().to_text(&chart), "dx^1 ∧ dx^2");
        assert!(lambda.d().d().is_zero());
    }

    #[test]
    fn text_round_trip() {
        let chart = Chart::contact(2, 3);
        for t in ["du^1 - 1/2 x^1 dx^3 + x^2 dx^3", "-(x^1)^2 x^3 dx^1 ∧ dx^2", "3/4", "du^1 ∧ dx^2 ∧ dx^3"] {
            assert_eq!(PolyForm::parse(t, &chart).unwrap().to_text(&chart), t);
        }
    }

    #[test]
    fn contraction_sign() {
        let f = PolyForm::basis_form(3, &[0, 1, 2]);
        assert_eq!(f.contract(1), PolyForm::basis_form(3, &[0, 2]).scale(&qi(-1)));
    }

    #[test]
    fn latex_rendering() {
        let chart = Chart::contact(1, 2);
        let f = PolyForm::parse("du^1 - 1/2 x^1 dx^2", &chart).unwrap();
        assert_eq!(f.to_latex(&chart), "\\mathrm{d}u^{1} - \\tfrac{1}{2}x^{1}\\,\\mathrm{d}x^{2}");
        assert_eq!(f.ratio_to(&f.scale(&q(2, 3))), Some(q(3, 2)));
    }
}
