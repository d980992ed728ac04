use contactify::exact::{qi, QMatrix};
use contactify::magical::OmegaMap;
use contactify::pipeline::solve_preset;
use contactify::presets::{self, Recipe};
use contactify::tanaka::*;
use proptest::prelude::*;

fn omega_of(name: &str) -> OmegaMap {
    solve_preset(&presets::find(name).unwrap()).unwrap().omega
}

/// Dimension of the split real form of a simple algebra by its type and rank.
fn simple_dim(kind: char, n: usize) -> usize {
    match kind {
        'A' => n * (n + 2),
        'B' | 'C' => n * (2 * n + 1),
        'D' => n * (2 * n - 1),
        _ => unreachable!(),
    }
}

#[test]
fn prolongation_dimension_table() {
    let table: [(&str, [usize; 5]); 10] = [
        ("b3-flat36", [3, 3, 9, 3, 3]),
        ("qc-pos", [3, 4, 7, 4, 3]),
        ("qc-neg", [3, 4, 7, 4, 3]),
        ("f4-split", [7, 8, 22, 8, 7]),
        ("f4-fII", [7, 8, 22, 8, 7]),
        ("e6-I-24", [8, 16, 30, 16, 8]),
        ("e6-IV-24", [8, 16, 30, 16, 8]),
        ("e6-I-25", [5, 20, 28, 20, 5]),
        ("so76-21", [15, 6, 36, 6, 15]),
        ("cartan-f4-original", [7, 8, 22, 8, 7]),
    ];
    for (name, dims) in table {
        let g = prolong(&build_nminus(&omega_of(name)).unwrap(), 4).unwrap();
        assert_eq!(g.dims(), dims.to_vec(), "{name}");
        assert!(g.respects_grading() && g.is_grading_symmetric(), "{name}");
        assert!(g.check_jacobi().is_ok(), "{name}");
        assert_eq!(g.grade_dim(3), 0, "{name}");
    }
}

#[test]
fn totals_agree_with_the_classical_dimension_formulas() {
    assert_eq!(prolong(&build_nminus(&omega_of("b3-flat36")).unwrap(), 4).unwrap().dim(), simple_dim('B', 3));
    assert_eq!(prolong(&build_nminus(&omega_of("qc-pos")).unwrap(), 4).unwrap().dim(), simple_dim('C', 3));
    assert_eq!(prolong(&build_nminus(&omega_of("so76-21")).unwrap(), 4).unwrap().dim(), simple_dim('B', 6));
}

#[test]
fn heisenberg_algebra_does_not_terminate() {
    let mut omega = OmegaMap::zero(1, 2);
    omega.set(0, 0, 1, qi(1));
    let n = build_nminus(&omega).unwrap();
    assert_eq!(n.dim(), 3);
    assert!(matches!(prolong(&n, 3), Err(TanakaError::Truncated { .. })));
}

#[test]
fn nminus_brackets_are_the_two_forms() {
    let omega = omega_of("b3-flat36");
    let n = build_nminus(&omega).unwrap();
    assert_eq!(n.grades, vec![-2, -2, -2, -1, -1, -1]);
    for mu in 0..3 {
        for nu in 0..3 {
            for i in 0..3 {
                assert_eq!(n.sc.get(3 + mu, 3 + nu, i), omega.get(i, mu, nu));
            }
        }
    }
}

#[test]
fn killing_signatures_distinguish_real_forms() {
    let sig = |name: &str| classify(&prolong(&build_nminus(&omega_of(name)).unwrap(), 4).unwrap()).unwrap().killing_signature;
    assert_ne!(sig("f4-split"), sig("f4-fII"));
    assert_ne!(sig("e6-I-24"), sig("e6-IV-24"));
    assert_eq!(sig("e6-I-24"), sig("e6-I-25"));
    assert_eq!(sig("f4-fII"), sig("cartan-f4-original"));
    // The split form has signature rank: (dim + rank) / 2 positive directions.
    assert_eq!(sig("f4-split"), ((52 + 4) / 2, (52 - 4) / 2, 0));
    assert_eq!(sig("e6-I-24"), ((78 + 6) / 2, (78 - 6) / 2, 0));
}

#[test]
fn assembled_g0_and_embedding() {
    for name in presets::magical_names() {
        let p = presets::find(name).unwrap();
        let Recipe::Magical { rho, tau } = p.recipe().unwrap() else { unreachable!() };
        let omega = omega_of(name);
        let g0 = assemble_g0(&rho, &tau, &omega).unwrap();
        assert!(g0.check_jacobi().is_ok(), "{name}");
        assert_eq!(g0.dim(), p.r + p.s + rho.len(), "{name}");
        let g = prolong(&build_nminus(&omega).unwrap(), 4).unwrap();
        let e = embed_check(&rho, &tau, &g).unwrap();
        assert!(e.passed(), "{name}");
        assert_eq!(e.equal, p.expected.n00_is_n0, "{name}");
        for (a, t) in rho.matrices.iter().zip(&tau.matrices) {
            assert!(is_strata_derivation(&g, a, t), "{name}");
        }
    }
}

#[test]
fn a_non_derivation_is_detected() {
    let g = build_nminus(&omega_of("b3-flat36")).unwrap();
    assert!(is_strata_derivation(&g, &QMatrix::identity(3), &QMatrix::identity(3).scale(&qi(2))));
    assert!(!is_strata_derivation(&g, &QMatrix::identity(3), &QMatrix::identity(3)));
}

fn unipotent(n: usize, seed: &[i64]) -> QMatrix {
    let mut it = seed.iter().cycle();
    QMatrix::from_fn(n, n, |i, j| if i == j { qi(1) } else if i < j { qi(*it.next().unwrap()) } else { qi(0) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn prolongation_is_basis_independent(
        name in prop::sample::select(vec!["b3-flat36", "qc-pos", "qc-neg"]),
        ps in prop::collection::vec(-2i64..=2, 6),
        qs in prop::collection::vec(-2i64..=2, 3),
    ) {
        let omega = omega_of(name);
        let p = unipotent(omega.s, &ps);
        let q = unipotent(omega.r, &qs);
        let pulled: Vec<QMatrix> = (0..omega.r).map(|j| &(&p.transpose() * &omega.matrix(j)) * &p).collect();
        let ms: Vec<QMatrix> = (0..omega.r)
            .map(|i| pulled.iter().enumerate().fold(QMatrix::zeros(omega.s, omega.s), |m, (j, w)| &m + &w.scale(q.get(i, j))))
            .collect();
        let moved = OmegaMap::from_matrices(&ms).unwrap();
        let a = prolong(&build_nminus(&omega).unwrap(), 4).unwrap();
        let b = prolong(&build_nminus(&moved).unwrap(), 4).unwrap();
        prop_assert_eq!(a.dims(), b.dims());
        prop_assert_eq!(classify(&a).unwrap().killing_signature, classify(&b).unwrap().killing_signature);
    }
}
