use contactify::clifford::{compact_generators, dirac_tower, pauli_tower, CompactCase};
use contactify::exact::{qi, QMatrix};
use contactify::repalg::{spin_representation, split_weyl, structure_constants, Representation};
use contactify::tables::*;

fn mismatches(computed: &[QMatrix], printed: &[QMatrix]) -> Vec<usize> {
    assert_eq!(computed.len(), printed.len());
    (0..computed.len()).filter(|&i| computed[i] != printed[i]).map(|i| i + 1).collect()
}

fn rep(m: Vec<QMatrix>) -> Representation {
    Representation::from_matrices(m).unwrap()
}

#[test]
fn f41_matches_except_the_known_misprint() {
    let computed = spin_representation(&pauli_tower(4), false).unwrap().matrices;
    let printed = word_table(&F41).unwrap();
    assert_eq!(mismatches(&computed, &printed), vec![4]);
    assert_eq!(computed, f41_corrected());
}

#[test]
fn f42_matches_cl07() {
    let computed = spin_representation(&compact_generators(CompactCase::Cl07), false).unwrap().matrices;
    assert_eq!(mismatches(&computed, &word_table(&F42).unwrap()), Vec::<usize>::new());
}

#[test]
fn dirac_tables_match() {
    let d44 = spin_representation(&dirac_tower(4), false).unwrap().matrices;
    assert!(mismatches(&d44, &word_table(&DIR44).unwrap()).is_empty());
    let d80 = spin_representation(&compact_generators(CompactCase::Cl80), false).unwrap().matrices;
    assert!(mismatches(&d80, &word_table(&DIR80).unwrap()).is_empty());
}

#[test]
fn weyl_halves_match() {
    for (gens, table) in [(dirac_tower(4), &RHOPM), (compact_generators(CompactCase::Cl80), &WEYLSO8)] {
        let (plus, minus) = split_weyl(&spin_representation(&gens, false).unwrap()).unwrap();
        let (wp, wm) = weyl_pair_words(table).unwrap();
        let wp: Vec<QMatrix> = wp.iter().map(|w| w.matrix()).collect();
        let wm: Vec<QMatrix> = wm.iter().map(|w| w.matrix()).collect();
        assert!(mismatches(&plus.matrices, &wp).is_empty());
        assert!(mismatches(&minus.matrices, &wm).is_empty());
    }
}

#[test]
fn vector_tables_share_structure_constants_with_spinors() {
    let cases: Vec<(Representation, Vec<QMatrix>)> = vec![
        (spin_representation(&pauli_tower(4), true).unwrap(), elementary_table(&F411, 7).unwrap()),
        (spin_representation(&compact_generators(CompactCase::Cl07), true).unwrap(), f421_corrected()),
        (spin_representation(&dirac_tower(4), true).unwrap(), elementary_table(&TAUWEYL, 8).unwrap()),
        (spin_representation(&compact_generators(CompactCase::Cl80), true).unwrap(), so8_with_scaling()),
    ];
    for (rho, tau) in cases {
        assert_eq!(structure_constants(&rho).unwrap(), structure_constants(&rep(tau)).unwrap());
    }
}

#[test]
fn printed_f421_misprint_breaks_the_bracket() {
    let rho = spin_representation(&compact_generators(CompactCase::Cl07), false).unwrap();
    let printed = rep(elementary_table(&F421, 7).unwrap());
    assert_ne!(structure_constants(&printed).ok(), Some(structure_constants(&rho).unwrap()));
}

#[test]
fn small_cases_share_structure_constants() {
    assert_eq!(structure_constants(&rep(so3_rho())).unwrap(), structure_constants(&rep(so3_tau())).unwrap());
    for eps in [1, -1] {
        let rho = structure_constants(&rep(qc_rho(eps))).unwrap();
        assert_eq!(rho, structure_constants(&rep(qc_tau(eps))).unwrap());
        assert_ne!(Some(rho), structure_constants(&rep(qc_tau_printed(eps))).ok());
    }
}

#[test]
fn elementary_parser_handles_factors() {
    let m = parse_elementary("1/2(2E24 - E42)", 4).unwrap();
    assert_eq!(*m.get(1, 3), qi(1));
    assert_eq!(*m.get(3, 1), contactify::exact::q(-1, 2));
    assert!(parse_elementary("E55", 4).is_err());
    assert!(parse_elementary("1/2(E12", 4).is_err());
}
