//! End-to-end runs of a preset: `ω` from `(ρ, τ)`, the contact forms, the
//! prolongation, the optional symmetry oracle, and every comparison against the
//! expected values and golden files.

use crate::exact::{format_rational, qi, QMatrix, Rational, SpanSolver};
use crate::forms::{act_on_constant_form, contact_checks, contactify_on, four_form, stabilizer, ContactReport, ContactSystem, PolyForm, StabilizerMode};
use crate::magical::{solve_omega, verify_tau_representation, OmegaMap, TauReport};
use crate::presets::{self, Preset, Recipe};
use crate::repalg::{casimir, eigenspaces, extract_component, intertwiners, killing_form, structure_constants, wedge_rep, Representation};
use crate::symmetry::{closure_check, symmetry_space, SymmetryReport, DEFAULT_MAX_UNKNOWNS};
use crate::tanaka::{assemble_g0, build_nminus, classify, embed_check, prolong, Classification, EmbedReport, GradedLieAlgebra};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub max_k: usize,
    pub wmax: usize,
    pub oracle: bool,
    pub allow_huge: bool,
    pub golden_dir: PathBuf,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_k: 4, wmax: 4, oracle: false, allow_huge: false, golden_dir: default_golden_dir() }
    }
}

/// `tests/golden` of this crate.
pub fn default_golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Preset(#[from] presets::PresetError),
    #[error(transparent)]
    Magical(#[from] crate::magical::MagicalError),
    #[error(transparent)]
    Tanaka(#[from] crate::tanaka::TanakaError),
    #[error(transparent)]
    Forms(#[from] crate::forms::FormsError),
    #[error(transparent)]
    Rep(#[from] crate::repalg::RepError),
    #[error("the magical equation has only the zero solution")]
    NoSolution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), passed, detail: detail.into() }
}

/// `ω` together with the representations it came from.
#[derive(Debug, Clone)]
pub struct Solved {
    pub omega: OmegaMap,
    pub reps: Option<(Representation, Representation)>,
    pub solution_dim: Option<usize>,
}

/// Solves the magical equation for a preset and applies the canonical scaling.
pub fn solve_preset(p: &Preset) -> Result<Solved, PipelineError> {
    match p.recipe()? {
        Recipe::Magical { rho, tau } => {
            let sols = solve_omega(&rho, &tau)?;
            let first = sols.first().ok_or(PipelineError::NoSolution)?;
            Ok(Solved { omega: first.normalized(&qi(p.omega_lead)), solution_dim: Some(sols.len()), reps: Some((rho, tau)) })
        }
        Recipe::Fixed(omega) => Ok(Solved { omega, reps: None, solution_dim: None }),
    }
}

/// The golden file `<dir>/<preset>/<file>`, if present.
pub fn read_golden(dir: &Path, preset: &str, file: &str) -> Option<String> {
    std::fs::read_to_string(dir.join(preset).join(file)).ok()
}

fn golden_check(name: &str, dir: &Path, preset: &str, file: &str, actual: &str) -> Check {
    match read_golden(dir, preset, file) {
        None => check(name, false, format!("missing {preset}/{file}")),
        Some(g) if g == actual => check(name, true, format!("{preset}/{file} matches")),
        Some(g) => {
            let line = g.lines().zip(actual.lines()).position(|(a, b)| a != b).map_or(g.lines().count().min(actual.lines().count()), |i| i) + 1;
            check(name, false, format!("{preset}/{file} differs at line {line}"))
        }
    }
}

/// One `ω^i_{μν}` matrix per line.
pub fn omega_matrices_text(omega: &OmegaMap) -> String {
    (0..omega.r).map(|i| format!("{}\n", omega.matrix(i))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourFormReport {
    pub phi: String,
    pub printed_factor: Option<String>,
    /// `c` with `printed = c · Φ`, when the printed expansion is a multiple of `Φ`.
    pub observed_factor: Option<String>,
    pub strict_dim: usize,
    pub conformal_dim: usize,
    /// Weights `S` of the conformal stabilizer basis that are nonzero.
    pub nonzero_weights: Vec<String>,
    pub identity_weight: Option<String>,
    pub preserves_omega_span: bool,
}

/// Φ, its stabilizers and the comparison with the printed expansion.
pub fn four_form_report(p: &Preset, omega: &OmegaMap, golden_dir: &Path) -> Result<Option<FourFormReport>, PipelineError> {
    let Some(form_spec) = &p.four_form else { return Ok(None) };
    let phi = four_form(omega, p.sign, &form_spec.matrix(p.r));
    let chart = crate::forms::Chart::horizontal(p.s);
    let observed_factor = read_golden(golden_dir, p.name, "phi.txt")
        .and_then(|g| PolyForm::parse(g.trim_end(), &chart).ok())
        .and_then(|printed| printed.ratio_to(&phi))
        .map(|c| format_rational(&c));
    let strict = stabilizer(&phi, StabilizerMode::Strict)?;
    let conformal = stabilizer(&phi, StabilizerMode::Conformal)?;
    let id = QMatrix::identity(p.s);
    let id_action = act_on_constant_form(&id, &phi);
    let identity_weight = id_action.ratio_to(&phi).map(|c| format_rational(&c));
    let two: Vec<PolyForm> = crate::forms::two_forms(omega, p.sign, p.s);
    let flat = |f: &PolyForm| -> Vec<(usize, Rational)> {
        let mut v: Vec<(usize, Rational)> = f.terms().map(|(_, dx, c)| (dx[0] * p.s + dx[1], c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };
    let solver = SpanSolver::from_sparse(p.s * p.s, two.iter().map(flat).collect()).map_err(|_| PipelineError::NoSolution)?;
    let preserves_omega_span = strict.matrices.iter().all(|a| {
        two.iter().all(|w| {
            let moved = act_on_constant_form(&a.transpose(), w);
            moved.is_zero() || solver.coords_sparse(&flat(&moved)).is_some()
        })
    });
    Ok(Some(FourFormReport {
        phi: phi.to_text(&chart),
        printed_factor: form_spec.printed_factor.as_ref().map(format_rational),
        observed_factor,
        strict_dim: strict.dim(),
        conformal_dim: conformal.dim(),
        nonzero_weights: conformal.weights.iter().filter(|w| **w != qi(0)).map(format_rational).collect(),
        identity_weight,
        preserves_omega_span,
    }))
}

/// Verifies that the Casimir component of `Λ²ρ` with a 5-dimensional eigenspace
/// is equivalent to the `τ` used by the e6-I-25 preset.
pub fn casimir_component_matches(rho: &Representation, tau: &Representation) -> Result<bool, PipelineError> {
    let sc = structure_constants(rho)?;
    let wedge = wedge_rep(rho);
    let cas = casimir(&wedge, &sc, &qi(1))?;
    let Some((value, _)) = eigenspaces(&cas)?.into_iter().find(|(_, d)| *d == tau.size()) else {
        return Ok(false);
    };
    let component = extract_component(&wedge, &cas, &value)?;
    let maps = intertwiners(&component, tau)?;
    Ok(maps.len() == 1 && maps[0].inverse().is_ok())
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub preset: String,
    pub algebra: String,
    pub r: usize,
    pub s: usize,
    pub sign: i64,
    pub solution_dim: Option<usize>,
    pub omega: OmegaMap,
    pub lambdas: Vec<String>,
    pub tau: Option<TauReport>,
    pub contact: ContactReport,
    pub classification: Classification,
    pub embed: Option<EmbedReport>,
    pub four_form: Option<FourFormReport>,
    pub symmetry: Option<SymmetryReport>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Human-readable summary, one check per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("preset {} ({}), r = {}, s = {}\n", self.preset, self.algebra, self.r, self.s);
        let dims: Vec<String> = self.classification.grade_dims.iter().map(|(k, d)| format!("n_{k}: {d}")).collect();
        out += &format!("grades: {}; total {}\n", dims.join(", "), self.classification.dim);
        let (p, n, z) = self.classification.killing_signature;
        out += &format!("Killing signature: ({p}, {n}, {z})\n");
        for c in &self.checks {
            out += &format!("[{}] {}: {}\n", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        out += if self.passed() { "all checks passed\n" } else { "some checks FAILED\n" };
        out
    }
}

/// Everything a run produces.
#[derive(Debug, Clone)]
pub struct Run {
    pub report: Report,
    pub system: ContactSystem,
    pub algebra: GradedLieAlgebra,
    pub reps: Option<(Representation, Representation)>,
}

pub fn run_preset(name: &str, opts: &RunOptions) -> Result<Run, PipelineError> {
    let p = presets::find(name)?;
    let solved = solve_preset(&p)?;
    let omega = &solved.omega;
    let dir = &opts.golden_dir;
    let mut checks = Vec::new();

    if let (Some(d), Some((rho, tau))) = (solved.solution_dim, &solved.reps) {
        checks.push(check("magical/solution-dim", d == 1, format!("dimension {d}")));
        checks.push(check("magical/equation", omega.satisfies(rho, tau), "ω solves the magical equation for every generator"));
    }
    let system = contactify_on(omega, p.sign, p.chart());
    if p.goldens.omega_matrices {
        checks.push(golden_check("magical/golden-omega", dir, p.name, "omega-matrices.txt", &omega_matrices_text(omega)));
    }
    if p.goldens.omega {
        checks.push(golden_check("forms/golden-omega", dir, p.name, "omega.txt", &system.omegas_text()));
    }
    if p.goldens.lambda {
        checks.push(golden_check("forms/golden-lambda", dir, p.name, "lambda.txt", &system.lambdas_text()));
    }
    let contact = contact_checks(&system)?;
    checks.push(check("forms/contactification", contact.passed(), format!("dλ = ω, rank {} distribution", contact.distribution_rank)));

    let tau_report = match &solved.reps {
        Some((rho, tau)) => {
            let t = verify_tau_representation(rho, tau, omega)?;
            checks.push(check("tau/part-one", t.part_one_holds(), format!("{} generator pairs", t.pairs_checked)));
            checks.push(check("tau/representation", t.tau_is_representation(), "τ([A,B]) = [τ(A),τ(B)]"));
            let g0 = assemble_g0(rho, tau, omega)?;
            checks.push(check("g0/jacobi", g0.check_jacobi().is_ok(), format!("n₋ ⊕ n₀₀, dimension {}", g0.dim())));
            Some(t)
        }
        None => None,
    };

    let n = build_nminus(omega)?;
    let algebra = prolong(&n, opts.max_k)?;
    let classification = classify(&algebra)?;
    let e = &p.expected;
    let dims = algebra.dims();
    checks.push(check("tanaka/grades", dims == e.grade_dims, format!("{dims:?}")));
    checks.push(check("tanaka/total", algebra.dim() == e.total, format!("{}", algebra.dim())));
    checks.push(check("tanaka/grading", algebra.respects_grading() && classification.grading_symmetric, "graded brackets, dim n_k = dim n_-k"));
    checks.push(check("tanaka/semisimple", classification.semisimple, "Killing form nondegenerate"));
    checks.push(check(
        "tanaka/killing-signature",
        classification.killing_signature == e.killing_signature,
        format!("{:?}, expected {:?} ({})", classification.killing_signature, e.killing_signature, e.algebra),
    ));

    let embed = match &solved.reps {
        Some((rho, tau)) => {
            let rep = embed_check(rho, tau, &algebra)?;
            checks.push(check("g0/derivation", rep.derivation_failures.is_empty(), "σ(A) = τ(A) ⊕ ρ(A) is a derivation of n₋"));
            checks.push(check(
                "tanaka/embed",
                rep.passed() && rep.equal == e.n00_is_n0,
                format!("n₀₀ (dim {}) in n₀ (dim {}), equal: {}", rep.n00_dim, rep.n0_dim, rep.equal),
            ));
            Some(rep)
        }
        None => None,
    };

    if p.name == "e6-I-25" {
        if let Some((rho, tau)) = &solved.reps {
            let ok = casimir_component_matches(rho, tau)?;
            checks.push(check("tau/casimir-component", ok, "τ is equivalent to the 5-dimensional Casimir component of Λ²ρ"));
        }
    }

    let four = four_form_report(&p, omega, dir)?;
    if let (Some(f), Some(form_spec)) = (&four, &p.four_form) {
        let strict_ok = form_spec.strict_dim.is_none_or(|d| d == f.strict_dim);
        let conformal_ok = f.conformal_dim == form_spec.conformal_dim && f.conformal_dim == f.strict_dim + 1;
        checks.push(check(
            "four-form/stabilizer",
            strict_ok && conformal_ok && f.identity_weight.as_deref() == Some("4"),
            format!("strict {}, conformal {}, identity weight {:?}", f.strict_dim, f.conformal_dim, f.identity_weight),
        ));
        checks.push(check("four-form/omega-span", f.preserves_omega_span, "the stabilizer preserves span(ω^i)"));
        if p.goldens.phi {
            let agree = f.observed_factor.is_some() && f.observed_factor == f.printed_factor;
            checks.push(check(
                "four-form/golden",
                f.observed_factor.is_some(),
                format!("printed expansion = {} Φ (printed factor {}{})", f.observed_factor.clone().unwrap_or("?".into()), f.printed_factor.clone().unwrap_or("-".into()), if agree { "" } else { ", differs" }),
            ));
        }
    }

    let symmetry = if opts.oracle {
        let cap = if opts.allow_huge { None } else { Some(DEFAULT_MAX_UNKNOWNS) };
        match symmetry_space(&system, opts.wmax, cap) {
            Ok(space) => {
                let closed = closure_check(&space.basis);
                let sig = closed.as_ref().ok().and_then(|sc| killing_form(sc).signature().ok());
                checks.push(check("oracle/dimension", space.dim() == algebra.dim(), format!("{} (Tanaka total {})", space.dim(), algebra.dim())));
                checks.push(check("oracle/closure", sig == Some(classification.killing_signature), format!("Killing signature {sig:?}")));
                Some(SymmetryReport {
                    wmax: opts.wmax,
                    unknowns: space.unknowns,
                    dim: space.dim(),
                    block_dims: space.block_dims,
                    closed: closed.is_ok(),
                    killing_signature: sig,
                })
            }
            Err(err) => {
                checks.push(check("oracle/dimension", false, err.to_string()));
                None
            }
        }
    } else {
        None
    };

    let report = Report {
        preset: p.name.to_string(),
        algebra: e.algebra.to_string(),
        r: p.r,
        s: p.s,
        sign: p.sign,
        solution_dim: solved.solution_dim,
        omega: omega.clone(),
        lambdas: system.lambdas.iter().map(|l| l.to_text(&system.chart)).collect(),
        tau: tau_report,
        contact,
        classification,
        embed,
        four_form: four,
        symmetry,
        checks,
    };
    Ok(Run { report, system, algebra, reps: solved.reps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Item {
    Lambda,
    Omega,
    Rho,
    Tau,
    Algebra,
}

fn latex_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        let sign = if x < &qi(0) { "-" } else { "" };
        format!("{sign}\\tfrac{{{}}}{{{}}}", x.numer().magnitude(), x.denom())
    }
}

/// `\begin{pmatrix} … \end{pmatrix}` with exact entries.
pub fn matrix_latex(m: &QMatrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| m.row(i).iter().map(latex_rational).collect::<Vec<_>>().join("&")).collect();
    format!("\\begin{{pmatrix}}{}\\end{{pmatrix}}", rows.join("\\\\"))
}

fn rep_text(rep: &Representation, format: Format) -> String {
    rep.labels
        .iter()
        .zip(&rep.matrices)
        .map(|(l, m)| match format {
            Format::Latex => format!("\\rho({l}) = {}\n", matrix_latex(m)),
            _ => format!("{l} = {m}\n"),
        })
        .collect()
}

/// Nonzero brackets `[X_i, X_j] = Σ c X_k`, one per line, basis vectors labelled by
/// grade.
pub fn algebra_text(g: &GradedLieAlgebra, format: Format) -> String {
    let name = |i: usize| match format {
        Format::Latex => format!("X_{{{}}}^{{({})}}", i + 1, g.grades[i]),
        _ => format!("X{}[{}]", i + 1, g.grades[i]),
    };
    let mut out = String::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let terms = g.sc.bracket(i, j);
            if terms.is_empty() {
                continue;
            }
            let mut rhs = String::new();
            for (n, (k, c)) in terms.iter().enumerate() {
                let neg = c < &qi(0);
                let abs = if neg { -c.clone() } else { c.clone() };
                rhs += match (n, neg) {
                    (0, true) => "-",
                    (0, false) => "",
                    (_, true) => " - ",
                    (_, false) => " + ",
                };
                if abs != qi(1) {
                    rhs += &match format {
                        Format::Latex => latex_rational(&abs),
                        _ => format!("{} ", format_rational(&abs)),
                    };
                }
                rhs += &name(*k);
            }
            out += &format!("[{}, {}] = {}\n", name(i), name(j), rhs);
        }
    }
    out
}

/// Renders one artifact of a run. Errors when the item does not exist for the
/// preset (`ρ`, `τ` of a forms-only preset).
pub fn export(run: &Run, item: Item, format: Format) -> Result<String, String> {
    let cs = &run.system;
    let reps = || run.reps.as_ref().ok_or_else(|| format!("preset {} has no representations", run.report.preset));
    let forms_out = |forms: &[PolyForm], sym: &str| -> String {
        match format {
            Format::Json => {
                let v: Vec<serde_json::Value> = forms.iter().map(|f| f.to_json(&cs.chart)).collect();
                serde_json::to_string_pretty(&v).unwrap() + "\n"
            }
            Format::Text => forms.iter().map(|f| f.to_text(&cs.chart) + "\n").collect(),
            Format::Latex => forms.iter().enumerate().map(|(i, f)| format!("\\{sym}^{{{}}} = {}\n", i + 1, f.to_latex(&cs.chart))).collect(),
        }
    };
    let json = |v: serde_json::Value| serde_json::to_string_pretty(&v).unwrap() + "\n";
    Ok(match (item, format) {
        (Item::Lambda, _) => forms_out(&cs.lambdas, "lambda"),
        (Item::Omega, Format::Json) => json(serde_json::to_value(&cs.omega).unwrap()),
        (Item::Omega, _) => forms_out(&cs.two_forms(), "omega"),
        (Item::Rho, Format::Json) => json(serde_json::to_value(&reps()?.0).unwrap()),
        (Item::Rho, _) => rep_text(&reps()?.0, format),
        (Item::Tau, Format::Json) => json(serde_json::to_value(&reps()?.1).unwrap()),
        (Item::Tau, _) => rep_text(&reps()?.1, format).replace("\\rho(", "\\tau("),
        (Item::Algebra, Format::Json) => json(serde_json::to_value(&run.algebra).unwrap()),
        (Item::Algebra, _) => algebra_text(&run.algebra, format),
    })
}
