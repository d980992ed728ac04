use contactify::clifford::{
    compact_generators, dirac_tower, pauli_tower, quaternionic_generators, CompactCase, Pauli, PauliWord,
};
use contactify::exact::qi;
use proptest::prelude::*;

fn words(s: &[&str]) -> Vec<PauliWord> {
    s.iter().map(|w| w.parse().unwrap()).collect()
}

#[test]
fn towers_satisfy_clifford_relations() {
    for n in 1..=5 {
        let p = pauli_tower(n);
        p.check().unwrap();
        assert_eq!(p.label, (n, n - 1));
        assert_eq!(p.size(), 1 << (n - 1));
        let d = dirac_tower(n);
        d.check().unwrap();
        assert_eq!(d.label, (n, n));
    }
    for case in [CompactCase::Cl07, CompactCase::Cl08, CompactCase::Cl80] {
        compact_generators(case).check().unwrap();
    }
    quaternionic_generators(1).check().unwrap();
    quaternionic_generators(-1).check().unwrap();
}

#[test]
fn last_pauli_generator_is_block_diagonal() {
    for n in 2..=5 {
        let t = pauli_tower(n);
        let m = t.size() / 2;
        let last = t.generators.last().unwrap();
        for i in 0..2 * m {
            for j in 0..2 * m {
                let expected = if i != j { qi(0) } else if i < m { qi(1) } else { qi(-1) };
                assert_eq!(last.get(i, j), &expected);
            }
        }
    }
}

#[test]
fn dirac_tower_four_in_tensor_words() {
    let expected = words(&[
        "sx*sx*sx*sx",
        "sx*sx*sx*eps",
        "sx*sx*sx*sz",
        "sx*sx*eps*I",
        "sx*sx*sz*I",
        "sx*eps*I*I",
        "sx*sz*I*I",
        "eps*I*I*I",
    ]);
    let got: Vec<_> = dirac_tower(4).words().into_iter().map(Option::unwrap).collect();
    assert_eq!(got, expected);
}

#[test]
fn pauli_tower_four_in_tensor_words() {
    let expected = words(&[
        "sx*sx*sx",
        "sx*sx*eps",
        "sx*sx*sz",
        "sx*eps*I",
        "sx*sz*I",
        "eps*I*I",
        "sz*I*I",
    ]);
    let got: Vec<_> = pauli_tower(4).words().into_iter().map(Option::unwrap).collect();
    assert_eq!(got, expected);
}

#[test]
fn real_cl80_even_generators() {
    let g = compact_generators(CompactCase::Cl80);
    let d = dirac_tower(4);
    for i in [0, 2, 4, 6] {
        assert_eq!(g.generators[i], d.generators[i]);
    }
    let even = words(&["-eps*sz*eps*I", "eps*sz*sx*eps", "-eps*I*sz*eps", "sx*eps*sz*eps"]);
    for (k, w) in even.iter().enumerate() {
        assert_eq!(g.generators[2 * k + 1], w.matrix(), "generator {}", 2 * k + 2);
    }
}

#[test]
fn cl08_extends_cl07() {
    let g = compact_generators(CompactCase::Cl08);
    let c = compact_generators(CompactCase::Cl07);
    for (a, b) in g.generators.iter().zip(&c.generators) {
        assert_eq!(a, &Pauli::X.matrix().kron(b));
    }
    assert_eq!(g.label, (0, 8));
}

proptest! {
    #[test]
    fn word_matrix_squares_to_plus_or_minus_identity(code in 0usize..4096, k in 1usize..=6) {
        let factors: Vec<Pauli> = (0..k).map(|t| Pauli::ALL[(code >> (2 * t)) & 3]).collect();
        let w = PauliWord::new(qi(1), factors.clone());
        let sq = &w.matrix() * &w.matrix();
        let n_eps = factors.iter().filter(|p| **p == Pauli::E).count();
        let sign = if n_eps % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(sq, contactify::exact::QMatrix::identity(1 << k).scale(&qi(sign)));
        prop_assert_eq!(PauliWord::decompose(&w.matrix()), Some(w.clone()));
        let reparsed: PauliWord = w.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, w);
    }
}
