use contactify::exact::{qi, Rational};
use contactify::forms::{contactify, contactify_on, ContactSystem};
use contactify::magical::OmegaMap;
use contactify::pipeline::solve_preset;
use contactify::presets;
use contactify::repalg::killing_form;
use contactify::symmetry::*;

fn system(name: &str) -> ContactSystem {
    let p = presets::find(name).unwrap();
    contactify_on(&solve_preset(&p).unwrap().omega, p.sign, p.chart())
}

fn euler_field(cs: &ContactSystem) -> VectorField {
    let n = cs.chart.len();
    let components = (0..n)
        .map(|b| {
            let mut m = vec![0; n];
            m[b] = 1;
            Poly::monomial(m, qi(cs.chart.weights[b].into()))
        })
        .collect();
    VectorField { components }
}

/// Monomials `x^a y^b u^c` with `a + b + 2c = d`.
fn heisenberg_generating_functions(d: usize) -> usize {
    (0..=d / 2).map(|c| d - 2 * c + 1).sum()
}

#[test]
fn small_presets_have_the_prolongation_dimension() {
    for (name, signature) in [("b3-flat36", (12, 9, 0)), ("qc-pos", (8, 13, 0)), ("qc-neg", (12, 9, 0))] {
        let cs = system(name);
        let space = symmetry_space(&cs, 4, None).unwrap();
        assert_eq!(space.dim(), 21, "{name}");
        let blocks: Vec<usize> = space.block_dims.iter().map(|(_, d)| *d).collect();
        assert_eq!(blocks, vec![cs.r, cs.s, 21 - 2 * (cs.r + cs.s), cs.s, cs.r], "{name}");
        for y in &space.basis {
            assert!(preserves_distribution(&cs, y), "{name}");
            assert!(satisfies_definition(&cs, y), "{name}");
        }
        let sc = closure_check(&space.basis).unwrap();
        assert_eq!(killing_form(&sc).signature().unwrap(), signature, "{name}");
    }
}

#[test]
fn dimension_stabilizes_in_wmax() {
    for name in ["b3-flat36", "qc-pos"] {
        let cs = system(name);
        let dims: Vec<usize> = (2..=5).map(|w| symmetry_space(&cs, w, None).unwrap().dim()).collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{name}: {dims:?}");
        assert_eq!(dims[2], dims[3], "{name}");
    }
}

#[test]
fn euler_field_is_always_a_symmetry() {
    for p in presets::catalog() {
        let cs = system(p.name);
        let e = euler_field(&cs);
        assert!(preserves_distribution(&cs, &e), "{}", p.name);
    }
}

#[test]
fn a_shear_is_not_a_symmetry() {
    let cs = system("b3-flat36");
    let mut y = VectorField::zero(cs.chart.len());
    let mut m = vec![0; cs.chart.len()];
    m[cs.r] = 1;
    y.components[cs.r + 1] = Poly::monomial(m, qi(1));
    assert!(!preserves_distribution(&cs, &y));
}

#[test]
fn heisenberg_contact_fields_match_generating_functions() {
    let mut omega = OmegaMap::zero(1, 2);
    omega.set(0, 0, 1, qi(1));
    let cs = contactify(&omega, 1);
    for wmax in 2..=5 {
        let space = symmetry_space(&cs, wmax, None).unwrap();
        let expected: usize = (0..=wmax).map(heisenberg_generating_functions).sum();
        assert_eq!(space.dim(), expected, "wmax {wmax}");
        for (k, d) in &space.block_dims {
            assert_eq!(*d, heisenberg_generating_functions((k + 2) as usize), "weight {k}");
        }
    }
}

#[test]
fn vertical_translations_are_symmetries() {
    let cs = system("qc-neg");
    for i in 0..cs.r {
        let mut y = VectorField::zero(cs.chart.len());
        y.components[i] = Poly::monomial(vec![0; cs.chart.len()], Rational::from_integer(1.into()));
        assert!(preserves_distribution(&cs, &y));
        assert!(satisfies_definition(&cs, &y));
    }
}

#[test]
fn large_ansatz_needs_explicit_permission() {
    let cs = system("e6-I-25");
    let n = ansatz_size(cs.r, cs.s, 4);
    assert!(n > DEFAULT_MAX_UNKNOWNS);
    assert_eq!(symmetry_space(&cs, 4, Some(DEFAULT_MAX_UNKNOWNS)).unwrap_err(), SymmetryError::AnsatzTooLarge { unknowns: n, cap: DEFAULT_MAX_UNKNOWNS });
}

#[test]
fn monomial_counts_match_binomials() {
    // Degree-d monomials in n variables: C(n + d - 1, d).
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    for d in 0..5 {
        assert_eq!(monomials(0, 4, d).len(), binom(4 + d - 1, d));
    }
}
