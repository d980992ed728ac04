//! The catalogue of worked cases: representation recipes, sign conventions and
//! the values a run is expected to reproduce.

use crate::clifford::{compact_generators, dirac_tower, pauli_tower, CompactCase};
use crate::exact::{format_rational, half, q, qi, QMatrix, Rational};
use crate::forms::Chart;
use crate::magical::OmegaMap;
use crate::repalg::{exterior_power, spin_representation, tensor_rep, wedge_rep, RepError, Representation};
use crate::tables::{self, TableError, CARTAN_F4_OMEGA, F411, TAUWEYL};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum PresetError {
    #[error("unknown preset `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Values a run must reproduce. Killing signatures were produced by the exact
/// inertia computation and frozen here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub algebra: &'static str,
    /// `dim n_k` for `k = −2..2`.
    pub grade_dims: [usize; 5],
    pub total: usize,
    pub killing_signature: (usize, usize, usize),
    /// Whether `n₀₀` fills all of `n₀`.
    pub n00_is_n0: bool,
}

/// `Φ = h_{ij} ω^i∧ω^j` data for the cases with an invariant 4-form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourFormSpec {
    /// Nonzero entries of the symmetric matrix `h`, 1-based, both orders listed.
    #[serde(serialize_with = "entries_as_text")]
    pub h: Vec<(usize, usize, Rational)>,
    /// The multiple of `Φ` whose expansion is stored as `phi.txt`, if any.
    #[serde(serialize_with = "option_as_text")]
    pub printed_factor: Option<Rational>,
    pub strict_dim: Option<usize>,
    pub conformal_dim: usize,
}

fn entries_as_text<S: serde::Serializer>(h: &[(usize, usize, Rational)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(h.iter().map(|(i, j, v)| (i, j, format_rational(v))))
}

fn option_as_text<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(format_rational).serialize(s)
}

impl FourFormSpec {
    pub fn matrix(&self, r: usize) -> QMatrix {
        let mut m = QMatrix::zeros(r, r);
        for (i, j, v) in &self.h {
            m.set(i - 1, j - 1, v.clone());
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Kind {
    /// `ω` is solved from `(ρ, τ)`.
    Magical,
    /// `ω` is a fixed list of 2-forms; only the forms and the prolongation run.
    FormsOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChartKind {
    /// `u^1..u^r, x^1..x^s`.
    Contact,
    /// `x^1..x^{s+r}` with the fibre coordinates last.
    SingleBlock,
}

/// The files under `tests/golden/<name>/` a run compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Goldens {
    pub lambda: bool,
    pub omega: bool,
    pub omega_matrices: bool,
    pub phi: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
    pub recipe: &'static str,
    pub kind: Kind,
    pub r: usize,
    pub s: usize,
    /// `ω^i = sign · Σ_{μ<ν} ω^i_{μν} dx^μ∧dx^ν`.
    pub sign: i64,
    /// Value of the first nonzero `ω^i_{μν}` in `(i, μ, ν)` order after scaling.
    pub omega_lead: i64,
    pub chart: ChartKind,
    pub expected: Expected,
    pub four_form: Option<FourFormSpec>,
    pub goldens: Goldens,
}

/// The representations feeding the magical equation, or a fixed `ω`.
#[derive(Debug, Clone)]
pub enum Recipe {
    Magical { rho: Representation, tau: Representation },
    Fixed(OmegaMap),
}

const LAMBDA_ONLY: Goldens = Goldens { lambda: true, omega: false, omega_matrices: false, phi: false };
const WITH_OMEGA: Goldens = Goldens { lambda: true, omega: true, omega_matrices: false, phi: false };
const WITH_MATRICES: Goldens = Goldens { lambda: true, omega: false, omega_matrices: true, phi: false };
const WITH_PHI: Goldens = Goldens { lambda: true, omega: true, omega_matrices: false, phi: true };

fn sym(entries: &[(usize, usize, Rational)]) -> Vec<(usize, usize, Rational)> {
    let mut out = Vec::new();
    for (i, j, v) in entries {
        out.push((*i, *j, v.clone()));
        if i != j {
            out.push((*j, *i, v.clone()));
        }
    }
    out
}

fn identity_h(r: usize, v: i64) -> Vec<(usize, usize, Rational)> {
    (1..=r).map(|i| (i, i, qi(v))).collect()
}

/// All presets, in catalogue order.
pub fn catalog() -> Vec<Preset> {
    let e78 = |algebra, grades: [usize; 5], sig, n00_is_n0| Expected { algebra, grade_dims: grades, total: 78, killing_signature: sig, n00_is_n0 };
    vec![
        Preset {
            name: "b3-flat36",
            summary: "rank 3 distribution on R^6 with symmetry so(4,3)",
            recipe: "n00 = so(3); S = R^3 defining, R = R^3 equivalent to S",
            kind: Kind::Magical,
            r: 3,
            s: 3,
            sign: -1,
            omega_lead: -1,
            chart: ChartKind::Contact,
            expected: Expected { algebra: "so(4,3)", grade_dims: [3, 3, 9, 3, 3], total: 21, killing_signature: (12, 9, 0), n00_is_n0: false },
            four_form: None,
            goldens: WITH_MATRICES,
        },
        Preset {
            name: "qc-pos",
            summary: "rank 4 distribution on R^7, quaternionic contact, epsilon = +1",
            recipe: "n00 = R + so(3); S = R^4 spinors (-1/2 s3, 1/2 s2, -1/2 s1, 1/2 Id), R = R^3 vector",
            kind: Kind::Magical,
            r: 3,
            s: 4,
            sign: 1,
            omega_lead: 1,
            chart: ChartKind::Contact,
            expected: Expected { algebra: "sp(1,2)", grade_dims: [3, 4, 7, 4, 3], total: 21, killing_signature: (8, 13, 0), n00_is_n0: false },
            four_form: None,
            goldens: WITH_MATRICES,
        },
        Preset {
            name: "qc-neg",
            summary: "rank 4 distribution on R^7, quaternionic contact, epsilon = -1",
            recipe: "n00 = R + so(2,1); S = R^4 spinors (-1/2 s3, 1/2 s2, 1/2 s1, 1/2 Id), R = R^3 vector",
            kind: Kind::Magical,
            r: 3,
            s: 4,
            sign: 1,
            omega_lead: 1,
            chart: ChartKind::Contact,
            expected: Expected { algebra: "sp(6,R)", grade_dims: [3, 4, 7, 4, 3], total: 21, killing_signature: (12, 9, 0), n00_is_n0: false },
            four_form: None,
            goldens: WITH_MATRICES,
        },
        Preset {
            name: "f4-split",
            summary: "rank 8 distribution on R^15 with symmetry the split real form f_I",
            recipe: "n00 = R + so(4,3); S = R^8 Majorana spinors from the Pauli tower, R = R^7 vector",
            kind: Kind::Magical,
            r: 7,
            s: 8,
            sign: 1,
            omega_lead: 1,
            chart: ChartKind::Contact,
            expected: Expected { algebra: "f_I", grade_dims: [7, 8, 22, 8, 7], total: 52, killing_signature: (28, 24, 0), n00_is_n0: true },
            four_form: Some(FourFormSpec {
                h: sym(&[(1, 7, half()), (2, 6, -half()), (3, 5, half()), (4, 4, q(1, 1))]),
                printed_factor: Some(q(2, 3)),
                strict_dim: Some(21),
                conformal_dim: 22,
            }),
            goldens: WITH_PHI,
        },
        Preset {
            name: "f4-fII",
            summary: "rank 8 distribution on R^15 with symmetry the real form f_II",
            recipe: "n00 = R + so(0,7); S = R^8 spinors from Cl(0,7), R = R^7 vector",
            kind: Kind::Magical,
            r: 7,
            s: 8,
            sign: -1,
            omega_lead: 1,
            chart: ChartKind::Contact,
            expected: Expected { algebra: "f_II", grade_dims: [7, 8, 22, 8, 7], total: 52, killing_signature: (16, 36, 0), n00_is_n0: true },
            four_form: Some(FourFormSpec { h: identity_h(7, -1), printed_factor: Some(q(-1, 6)), strict_dim: None, conformal_dim: 22 }),
            goldens: WITH_PHI,
        },
        Preset {
            name: "e6-I-24",
            summary: "rank 16 distribution on R^24 with symmetry the split real form e_I",
            recipe: "n00 = R + so(4,4); S = R^16 Dirac spinors S+ + S-, R = R^8 vector",
            kind: Kind::Magical,
            r: 8,
            s: 16,
            sign: 1,
            omega_lead: -1,
            chart: ChartKind::Contact,
            expected: e78("e_I", [8, 16, 30, 16, 8], (42, 36, 0), false),
            four_form: Some(FourFormSpec {
                h: sym(&[(1, 7, half()), (2, 6, -half()), (3, 5, half()), (4, 8, half())]),
                printed_factor: Some(qi(1)),
                strict_dim: None,
                conformal_dim: 30,
            }),
            goldens: WITH_PHI,
        },
        Preset {
            name: "e6-IV-24",
            summary: "rank 16 distribution on R^24 with symmetry the real form e_IV",
            recipe: "n00 = R + so(8,0); S = R^16 spinors from Cl(8,0), R = R^8 vector",
            kind: Kind::Magical,
            r: 8,
            s: 16,
            sign: 1,
            omega_lead: 1,
            chart: ChartKind::Contact,
            expected: e78("e_IV", [8, 16, 30, 16, 8], (26, 52, 0), false),
            four_form: Some(FourFormSpec { h: identity_h(8, 1), printed_factor: None, strict_dim: None, conformal_dim: 30 }),
            goldens: WITH_OMEGA,
        },
        Preset {
            name: "e6-I-25",
            summary: "rank 20 distribution on R^25 with symmetry the split real form e_I",
            recipe: "n00 = sl(2,R) + sl(5,R); S = R^2 (x) Wedge^2 R^5 from the defining representations, \
                     R = the 5-dimensional Casimir component of Wedge^2 S",
            kind: Kind::Magical,
            r: 5,
            s: 20,
            sign: 1,
            omega_lead: -1,
            chart: ChartKind::Contact,
            expected: e78("e_I", [5, 20, 28, 20, 5], (42, 36, 0), false),
            four_form: None,
            goldens: LAMBDA_ONLY,
        },
        Preset {
            name: "so76-21",
            summary: "rank 6 distribution on R^21 with symmetry so(7,6)",
            recipe: "n00 = gl(6,R); S = R^6 defining, R = Wedge^2 R^6",
            kind: Kind::Magical,
            r: 15,
            s: 6,
            sign: 1,
            omega_lead: -1,
            chart: ChartKind::Contact,
            expected: e78("so(7,6)", [15, 6, 36, 6, 15], (42, 36, 0), true),
            four_form: None,
            goldens: LAMBDA_ONLY,
        },
        Preset {
            name: "cartan-f4-original",
            summary: "Cartan's rank 8 distribution on R^15 with symmetry of type f4",
            recipe: "forms only: the seven printed 2-forms on R^8, fibre coordinates x^9..x^15",
            kind: Kind::FormsOnly,
            r: 7,
            s: 8,
            sign: 1,
            omega_lead: 1,
            chart: ChartKind::SingleBlock,
            expected: Expected { algebra: "f_II", grade_dims: [7, 8, 22, 8, 7], total: 52, killing_signature: (16, 36, 0), n00_is_n0: false },
            four_form: None,
            goldens: WITH_OMEGA,
        },
    ]
}

/// Names of the presets the magical equation runs on.
pub fn magical_names() -> Vec<&'static str> {
    catalog().into_iter().filter(|p| p.kind == Kind::Magical).map(|p| p.name).collect()
}

pub fn find(name: &str) -> Result<Preset, PresetError> {
    catalog().into_iter().find(|p| p.name == name).ok_or_else(|| PresetError::Unknown(name.to_string()))
}

impl Preset {
    pub fn chart(&self) -> Chart {
        match self.chart {
            ChartKind::Contact => Chart::contact(self.r, self.s),
            ChartKind::SingleBlock => Chart::single_block(self.r, self.s),
        }
    }

    pub fn recipe(&self) -> Result<Recipe, PresetError> {
        let rep = |m: Vec<QMatrix>| Representation::from_matrices(m);
        Ok(match self.name {
            "b3-flat36" => Recipe::Magical { rho: rep(tables::so3_rho())?, tau: rep(tables::so3_tau())? },
            "qc-pos" => Recipe::Magical { rho: rep(tables::qc_rho(1))?, tau: rep(tables::qc_tau(1))? },
            "qc-neg" => Recipe::Magical { rho: rep(tables::qc_rho(-1))?, tau: rep(tables::qc_tau(-1))? },
            "f4-split" => Recipe::Magical {
                rho: spin_representation(&pauli_tower(4), true)?,
                tau: rep(tables::elementary_table(&F411, 7)?)?,
            },
            "f4-fII" => Recipe::Magical {
                rho: spin_representation(&compact_generators(CompactCase::Cl07), true)?,
                tau: rep(tables::f421_corrected())?,
            },
            "e6-I-24" => Recipe::Magical {
                rho: spin_representation(&dirac_tower(4), true)?,
                tau: rep(tables::elementary_table(&TAUWEYL, 8)?)?,
            },
            "e6-IV-24" => Recipe::Magical {
                rho: spin_representation(&compact_generators(CompactCase::Cl80), true)?,
                tau: rep(tables::so8_with_scaling())?,
            },
            "e6-I-25" => {
                let (rho, tau) = sl2_sl5();
                Recipe::Magical { rho, tau }
            }
            "so76-21" => {
                let rho = gl_defining(6);
                let tau = wedge_rep(&rho);
                Recipe::Magical { rho, tau }
            }
            "cartan-f4-original" => Recipe::Fixed(cartan_omega()),
            other => return Err(PresetError::Unknown(other.to_string())),
        })
    }
}

/// `gl(n)` on `ℝⁿ` with basis `E_ij` in row-major order.
pub fn gl_defining(n: usize) -> Representation {
    let mut m = Vec::new();
    for i in 0..n {
        for j in 0..n {
            m.push(QMatrix::elementary(n, i + 1, j + 1));
        }
    }
    Representation::new((0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect(), m).expect("consistent sizes")
}

/// `sl(n)` on `ℝⁿ`: off-diagonal `E_ij` in row-major order, then `E_ii − E_{i+1,i+1}`.
pub fn sl_defining(n: usize) -> Vec<QMatrix> {
    let mut m = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m.push(QMatrix::elementary(n, i + 1, j + 1));
            }
        }
    }
    for i in 0..n - 1 {
        m.push(&QMatrix::elementary(n, i + 1, i + 1) - &QMatrix::elementary(n, i + 2, i + 2));
    }
    m
}

/// `sl(2)` in the order `E12, E21, E11 − E22`.
fn sl2() -> Vec<QMatrix> {
    vec![QMatrix::elementary(2, 1, 2), QMatrix::elementary(2, 2, 1), &QMatrix::elementary(2, 1, 1) - &QMatrix::elementary(2, 2, 2)]
}

/// The defining representations of `sl(2) ⊕ sl(5)`, each extended by zero on the
/// other summand.
pub fn sl2_sl5_defining() -> (Representation, Representation) {
    let a = sl2();
    let b = sl_defining(5);
    let mut t2 = a.clone();
    t2.extend(vec![QMatrix::zeros(2, 2); b.len()]);
    let mut t5 = vec![QMatrix::zeros(5, 5); a.len()];
    t5.extend(b);
    (Representation::from_matrices(t2).expect("sizes"), Representation::from_matrices(t5).expect("sizes"))
}

/// `ρ = τ₂ ⊗ Λ²τ₅` on `S = ℝ² ⊗ Λ²ℝ⁵` and the model `τ = Λ²τ₂ ⊗ Λ⁴τ₅` on
/// `R = ℝ⁵`, whose basis vector `k` is the 4-subset missing index `k`.
pub fn sl2_sl5() -> (Representation, Representation) {
    let (t2, t5) = sl2_sl5_defining();
    let rho = tensor_rep(&t2, &wedge_rep(&t5)).expect("same generators");
    let model = tensor_rep(&exterior_power(&t2, 2), &exterior_power(&t5, 4)).expect("same generators");
    let reverse = QMatrix::from_fn(5, 5, |i, j| if i + j == 4 { qi(1) } else { qi(0) });
    let tau = model.change_basis(&reverse).expect("invertible");
    (rho, tau)
}

/// The printed 2-forms of Cartan's f4 example.
pub fn cartan_omega() -> OmegaMap {
    let mut w = OmegaMap::zero(7, 8);
    for (i, mu, nu, c) in CARTAN_F4_OMEGA {
        w.set(i - 1, mu - 1, nu - 1, qi(c));
    }
    w
}
