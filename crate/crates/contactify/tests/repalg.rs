use contactify::clifford::{compact_generators, dirac_tower, pauli_tower, CompactCase};
use contactify::exact::{qi, QMatrix};
use contactify::repalg::*;

fn so43() -> Representation {
    spin_representation(&pauli_tower(4), false).unwrap()
}

#[test]
fn so43_killing_form_is_the_printed_diagonal() {
    let sc = structure_constants(&so43()).unwrap();
    let k = killing_form(&sc);
    let d = [1, -1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1];
    let expected = QMatrix::diagonal(&d.iter().map(|x| qi(10 * x)).collect::<Vec<_>>());
    assert_eq!(k, expected);
    assert!(is_ad_invariant(&sc, &k));
    assert_eq!(sc.jacobi_violation(), None);
}

#[test]
fn so43_bispinors_split_into_21_and_7() {
    let rep = so43();
    let sc = structure_constants(&rep).unwrap();
    let w = wedge_rep(&rep);
    assert_eq!(w.size(), 28);
    let c = casimir(&w, &sc, &qi(10)).unwrap();
    for m in &w.matrices {
        assert!(c.commutator(m).is_zero());
    }
    let spaces = eigenspaces(&c).unwrap();
    assert!(spaces.contains(&(qi(6), 7)));
    let tau = extract_component(&w, &c, &qi(6)).unwrap();
    assert_eq!(tau.size(), 7);
    assert_eq!(structure_constants(&tau).unwrap(), sc);
}

fn weyl_split(gens: &contactify::clifford::CliffordGenerators) -> (Representation, Representation, StructureConstants) {
    let rep = spin_representation(gens, false).unwrap();
    let sc = structure_constants(&rep).unwrap();
    let (p, m) = split_weyl(&rep).unwrap();
    assert!(intertwiners(&p, &m).unwrap().is_empty());
    (p, m, sc)
}

#[test]
fn weyl_tensor_product_splits_56_8() {
    for gens in [dirac_tower(4), compact_generators(CompactCase::Cl80)] {
        let (p, m, sc) = weyl_split(&gens);
        let t = tensor_rep(&p, &m).unwrap();
        let c = casimir(&t, &sc, &qi(1)).unwrap();
        let dims: Vec<usize> = eigenspaces(&c).unwrap().into_iter().map(|(_, d)| d).collect();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(sorted, vec![8, 56]);
    }
}

#[test]
fn so3_killing_is_negative_definite() {
    let rep = vector_representation(&[qi(1), qi(1), qi(1)]);
    let sc = structure_constants(&rep).unwrap();
    let k = killing_form(&sc);
    assert_eq!(k, QMatrix::identity(3).scale(&qi(-2)));
}

fn so3_rho() -> Representation {
    Representation::from_matrices(contactify::tables::so3_rho()).unwrap()
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(16))]

    #[test]
    fn constructions_keep_the_structure_constants(seed in proptest::collection::vec(-2i64..=2, 6)) {
        let rep = so3_rho();
        let mut it = seed.iter().cycle();
        let p = QMatrix::from_fn(rep.size(), rep.size(), |i, j| if i == j { qi(1) } else if i < j { qi(*it.next().unwrap()) } else { qi(0) });
        let sc = structure_constants(&rep).unwrap();
        let moved = rep.change_basis(&p).unwrap();
        proptest::prop_assert_eq!(&structure_constants(&moved).unwrap(), &sc);
        let w = wedge_rep(&moved);
        proptest::prop_assert_eq!(w.size(), rep.size() * (rep.size() - 1) / 2);
        proptest::prop_assert_eq!(&structure_constants(&w).unwrap(), &sc);
        let t = tensor_rep(&moved, &rep).unwrap();
        proptest::prop_assert_eq!(t.size(), rep.size() * rep.size());
        proptest::prop_assert_eq!(&structure_constants(&t).unwrap(), &sc);
        let c = casimir(&t, &sc, &qi(1)).unwrap();
        proptest::prop_assert!(t.matrices.iter().all(|m| c.commutator(m).is_zero()));
        proptest::prop_assert!(is_ad_invariant(&sc, &killing_form(&sc)));
    }
}
