//! Generator tables as printed in the literature, kept verbatim.
//!
//! Spinor generators are stored as Pauli words (see [`crate::clifford`]).
//! Entries of a Weyl pair table carry a two-character sign prefix `+-` or `-+`:
//! the first sign belongs to the upper-left block `ρ₊`, the second to `ρ₋`.
//! Vector representations are stored in elementary-matrix notation, for
//! instance `1/2(2E24 - E42 + E46 - 2E64)`, with 1-based indices.
//!
//! Known misprints are stored as printed. [`corrections`] lists every place
//! where the printed entry disagrees with the generating rule, and the
//! `*_corrected` accessors apply them.

use crate::clifford::{PauliWord, WordError};
use crate::exact::{parse_rational, q, qi, QMatrix};
use std::str::FromStr;

/// `ρ(A_I) = ½ σ_i σ_j` for the Cl(4,3) generators, without the scaling `A22`.
pub const F41: [&str; 21] = [
    "1/2 I*I*sz",
    "1/2 I*I*eps",
    "1/2 I*I*sx",
    "1/2 I*I*sx",
    "1/2 I*sz*eps",
    "1/2 I*sz*sz",
    "1/2 I*eps*sx",
    "1/2 I*eps*eps",
    "1/2 I*eps*sz",
    "1/2 I*sx*I",
    "1/2 sz*sx*sx",
    "1/2 sz*sx*eps",
    "1/2 sz*sx*sz",
    "1/2 sz*eps*I",
    "1/2 sz*sz*I",
    "1/2 eps*sx*sx",
    "1/2 eps*sx*eps",
    "1/2 eps*sx*sz",
    "1/2 eps*eps*I",
    "1/2 eps*sz*I",
    "1/2 sx*I*I",
];

/// `ρ(A_I) = ½ σ_i σ_j` for the Cl(0,7) generators.
pub const F42: [&str; 21] = [
    "-1/2 I*eps*sz",
    "1/2 I*eps*sx",
    "-1/2 I*I*eps",
    "-1/2 eps*eps*eps",
    "1/2 eps*I*sx",
    "1/2 eps*I*sz",
    "1/2 eps*sx*I",
    "1/2 eps*sz*sz",
    "-1/2 eps*sz*sx",
    "-1/2 I*sz*eps",
    "1/2 eps*sz*I",
    "-1/2 eps*sx*sz",
    "1/2 eps*sx*sx",
    "1/2 I*sx*eps",
    "-1/2 I*eps*I",
    "-1/2 sx*I*eps",
    "-1/2 sx*eps*sx",
    "-1/2 sx*eps*sz",
    "1/2 sz*eps*I",
    "1/2 sz*sx*eps",
    "1/2 sz*sz*eps",
];

/// Dirac spinor representation of so(4,4) on ℝ¹⁶.
pub const DIR44: [&str; 28] = [
    "1/2 I*I*I*sz",
    "1/2 I*I*I*eps",
    "1/2 I*I*I*sx",
    "1/2 I*I*sz*sx",
    "1/2 I*I*sz*eps",
    "1/2 I*I*sz*sz",
    "1/2 I*I*eps*sx",
    "1/2 I*I*eps*eps",
    "1/2 I*I*eps*sz",
    "1/2 I*I*sx*I",
    "1/2 I*sz*sx*sx",
    "1/2 I*sz*sx*eps",
    "1/2 I*sz*sx*sz",
    "1/2 I*sz*eps*I",
    "1/2 I*sz*sz*I",
    "1/2 I*eps*sx*sx",
    "1/2 I*eps*sx*eps",
    "1/2 I*eps*sx*sz",
    "1/2 I*eps*eps*I",
    "1/2 I*eps*sz*I",
    "1/2 I*sx*I*I",
    "1/2 sz*sx*sx*sx",
    "1/2 sz*sx*sx*eps",
    "1/2 sz*sx*sx*sz",
    "1/2 sz*sx*eps*I",
    "1/2 sz*sx*sz*I",
    "1/2 sz*eps*I*I",
    "1/2 sz*sz*I*I",
];

/// The two Weyl halves of [`DIR44`].
pub const RHOPM: [&str; 28] = [
    "+1/2 I*I*sz",
    "+1/2 I*I*eps",
    "+1/2 I*I*sx",
    "+1/2 I*sz*sx",
    "+1/2 I*sz*eps",
    "+1/2 I*sz*sz",
    "+1/2 I*eps*sx",
    "+1/2 I*eps*eps",
    "+1/2 I*eps*sz",
    "+1/2 I*sx*I",
    "+1/2 sz*sx*sx",
    "+1/2 sz*sx*eps",
    "+1/2 sz*sx*sz",
    "+1/2 sz*eps*I",
    "+1/2 sz*sz*I",
    "+1/2 eps*sx*sx",
    "+1/2 eps*sx*eps",
    "+1/2 eps*sx*sz",
    "+1/2 eps*eps*I",
    "+1/2 eps*sz*I",
    "+1/2 sx*I*I",
    "+-1/2 sx*sx*sx",
    "+-1/2 sx*sx*eps",
    "+-1/2 sx*sx*sz",
    "+-1/2 sx*eps*I",
    "+-1/2 sx*sz*I",
    "+-1/2 eps*I*I",
    "+-1/2 sz*I*I",
];

/// Dirac spinor representation of so(8,0) on ℝ¹⁶.
pub const DIR80: [&str; 28] = [
    "-1/2 sz*eps*sz*sx",
    "1/2 I*I*I*eps",
    "1/2 sz*eps*sz*sz",
    "1/2 sz*eps*I*sz",
    "-1/2 I*I*sz*eps",
    "-1/2 sz*eps*I*sx",
    "1/2 I*I*eps*sx",
    "-1/2 sz*eps*sx*I",
    "1/2 I*I*eps*sz",
    "1/2 sz*eps*eps*eps",
    "-1/2 sz*sx*eps*sz",
    "-1/2 I*sz*sx*eps",
    "1/2 sz*sx*eps*sx",
    "-1/2 I*sz*eps*I",
    "-1/2 sz*sx*I*eps",
    "1/2 I*eps*sx*sx",
    "1/2 sz*I*eps*I",
    "1/2 I*eps*sx*sz",
    "-1/2 sz*I*sx*eps",
    "1/2 I*eps*sz*I",
    "1/2 sz*sz*sz*eps",
    "1/2 I*sz*eps*sz",
    "-1/2 sz*sx*sx*eps",
    "-1/2 I*sz*eps*sx",
    "-1/2 sz*sx*eps*I",
    "1/2 I*sz*I*eps",
    "-1/2 sz*eps*I*I",
    "-1/2 I*sx*sz*eps",
];

/// The two Weyl halves of [`DIR80`].
pub const WEYLSO8: [&str; 28] = [
    "-+1/2 eps*sz*sx",
    "+1/2 I*I*eps",
    "+-1/2 eps*sz*sz",
    "+-1/2 eps*I*sz",
    "-1/2 I*sz*eps",
    "-+1/2 eps*I*sx",
    "+1/2 I*eps*sx",
    "-+1/2 eps*sx*I",
    "+1/2 I*eps*sz",
    "+-1/2 eps*eps*eps",
    "-+1/2 sx*eps*sz",
    "-1/2 sz*sx*eps",
    "+-1/2 sx*eps*sx",
    "-1/2 sz*eps*I",
    "-+1/2 sx*I*eps",
    "+1/2 eps*sx*sx",
    "+-1/2 I*eps*I",
    "+1/2 eps*sx*sz",
    "-+1/2 I*sx*eps",
    "+1/2 eps*sz*I",
    "+-1/2 sz*sz*eps",
    "+1/2 sz*eps*sz",
    "-+1/2 sx*sx*eps",
    "-1/2 sz*eps*sx",
    "-+1/2 sx*eps*I",
    "+1/2 sz*I*eps",
    "-+1/2 eps*I*I",
    "-1/2 sx*sz*eps",
];

/// `τ` for the split real form of f4, acting on ℝ⁷.
pub const F411: [&str; 22] = [
    "E66 - E22",
    "1/2(E23 - E32 + E25 - E52 + E36 - E63 + E56 - E65)",
    "1/2(E23 + E32 + E25 + E52 + E36 + E63 + E56 + E65)",
    "1/2(E23 + E32 - E25 - E52 - E36 - E63 + E56 + E65)",
    "1/2(E23 - E32 - E25 + E52 - E36 + E63 + E56 - E65)",
    "E33 - E55",
    "1/2(E12 - E21 - E16 + E61 - E27 + E72 + E67 - E76)",
    "1/2(-E12 - E21 - E16 - E61 - E27 - E72 - E67 - E76)",
    "1/2(E13 - E31 + E15 - E51 - E37 + E73 - E57 + E75)",
    "1/2(E13 + E31 - E15 - E51 + E37 + E73 - E57 - E75)",
    "1/2(-E12 - E21 + E16 + E61 + E27 + E72 - E67 - E76)",
    "1/2(E12 - E21 + E16 - E61 + E27 - E72 + E67 - E76)",
    "1/2(-E13 - E31 - E15 - E51 + E37 + E73 + E57 + E75)",
    "1/2(-E13 + E31 + E15 - E51 - E37 + E73 + E57 - E75)",
    "E11 - E77",
    "1/2(2E24 - E42 + E46 - 2E64)",
    "1/2(2E24 + E42 + E46 + 2E64)",
    "1/2(2E34 - E43 - E45 + 2E54)",
    "1/2(-2E34 - E43 + E45 + 2E54)",
    "1/2(-2E14 + E41 + E47 - 2E74)",
    "1/2(2E14 + E41 - E47 - 2E74)",
    "E11 + E22 + E33 + E44 + E55 + E66 + E77",
];

/// `τ` for the real form f_II, acting on ℝ⁷. The scaling generator is not printed.
pub const F421: [&str; 21] = [
    "E31 - E13",
    "E12 - E21",
    "E32 - E23",
    "E61 - E16",
    "E36 - E63",
    "E62 - E26",
    "E17 - E71",
    "E37 - E73",
    "E72 - E27",
    "E76 - E67",
    "E51 - E15",
    "E53 - E35",
    "E25 - E52",
    "E65 - E56",
    "E75 - E57",
    "E14 - E41",
    "E34 - E43",
    "E42 - E24",
    "E46 - E64",
    "E47 - E74",
    "E54 - E45",
];

/// `τ` for co(4,4) acting on ℝ⁸ (one of the Weyl-type vector representations).
pub const TAUWEYL: [&str; 29] = [
    "E66 - E22",
    "1/2(E23 - E32 + E25 - E52 + E36 - E63 + E56 - E65)",
    "1/2(E23 + E32 + E25 + E52 + E36 + E63 + E56 + E65)",
    "1/2(E23 + E32 - E25 - E52 - E36 - E63 + E56 + E65)",
    "1/2(E23 - E32 - E25 + E52 - E36 + E63 + E56 - E65)",
    "E33 - E55",
    "1/2(E12 - E21 - E16 + E61 - E27 + E72 + E67 - E76)",
    "1/2(-E12 - E21 - E16 - E61 - E27 - E72 - E67 - E76)",
    "1/2(E13 - E31 + E15 - E51 - E37 + E73 - E57 + E75)",
    "1/2(E13 + E31 - E15 - E51 + E37 + E73 - E57 - E75)",
    "1/2(-E12 - E21 + E16 + E61 + E27 + E72 - E67 - E76)",
    "1/2(E12 - E21 + E16 - E61 + E27 - E72 + E67 - E76)",
    "1/2(-E13 - E31 - E15 - E51 + E37 + E73 + E57 + E75)",
    "1/2(-E13 + E31 + E15 - E51 - E37 + E73 + E57 - E75)",
    "E11 - E77",
    "1/2(E24 - E42 + E28 - E82 + E46 - E64 - E68 + E86)",
    "1/2(E24 + E42 + E28 + E82 + E46 + E64 + E68 + E86)",
    "1/2(E34 - E43 + E38 - E83 - E45 + E54 + E58 - E85)",
    "1/2(-E34 - E43 - E38 - E83 + E45 + E54 + E58 + E85)",
    "1/2(-E14 + E41 - E18 + E81 + E47 - E74 - E78 + E87)",
    "1/2(E14 + E41 + E18 + E81 - E47 - E74 - E78 - E87)",
    "1/2(-E24 - E42 + E28 + E82 + E46 + E64 - E68 - E86)",
    "1/2(-E24 + E42 + E28 - E82 + E46 - E64 + E68 - E86)",
    "1/2(-E34 - E43 + E38 + E83 - E45 - E54 + E58 + E85)",
    "1/2(E34 - E43 - E38 + E83 + E45 - E54 + E58 - E85)",
    "1/2(E14 + E41 - E18 - E81 + E47 + E74 - E78 - E87)",
    "1/2(-E14 + E41 + E18 - E81 - E47 + E74 - E78 + E87)",
    "E88 - E44",
    "E11 + E22 + E33 + E44 + E55 + E66 + E77 + E88",
];

/// `τ` for so(8,0) acting on ℝ⁸. The scaling generator is not printed.
pub const SO8: [&str; 28] = [
    "E38 - E83",
    "E78 - E87",
    "E37 - E73",
    "E84 - E48",
    "E43 - E34",
    "E47 - E74",
    "E58 - E85",
    "E35 - E53",
    "E75 - E57",
    "E54 - E45",
    "E28 - E82",
    "E32 - E23",
    "E72 - E27",
    "E24 - E42",
    "E52 - E25",
    "E18 - E81",
    "E31 - E13",
    "E71 - E17",
    "E14 - E41",
    "E51 - E15",
    "E21 - E12",
    "E68 - E86",
    "E36 - E63",
    "E76 - E67",
    "E64 - E46",
    "E56 - E65",
    "E26 - E62",
    "E16 - E61",
];

/// Parse failure for a table entry.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("bad Pauli word: {0}")]
    Word(#[from] WordError),
    #[error("bad sign prefix in `{0}`")]
    Sign(String),
    #[error("bad elementary-matrix expression `{0}`")]
    Elementary(String),
}

/// Matrices of a Pauli word table.
pub fn word_table(entries: &[&str]) -> Result<Vec<QMatrix>, TableError> {
    entries.iter().map(|e| Ok(PauliWord::from_str(e)?.matrix())).collect()
}

/// Splits a Weyl pair table into the `ρ₊` and `ρ₋` word lists.
pub fn weyl_pair_words(entries: &[&str]) -> Result<(Vec<PauliWord>, Vec<PauliWord>), TableError> {
    let mut plus = Vec::with_capacity(entries.len());
    let mut minus = Vec::with_capacity(entries.len());
    for e in entries {
        let (s_plus, s_minus, rest) = match e.get(..2) {
            Some("+-") => (1, -1, &e[2..]),
            Some("-+") => (-1, 1, &e[2..]),
            _ => match e.chars().next() {
                Some('+') => (1, 1, &e[1..]),
                Some('-') => (-1, -1, &e[1..]),
                _ => return Err(TableError::Sign(e.to_string())),
            },
        };
        let w = PauliWord::from_str(rest)?;
        plus.push(PauliWord::new(&w.coeff * qi(s_plus), w.factors.clone()));
        minus.push(PauliWord::new(&w.coeff * qi(s_minus), w.factors));
    }
    Ok((plus, minus))
}

/// Parses `c(±aEij ± bEkl …)` or `±aEij ± …` into an `n × n` matrix.
pub fn parse_elementary(expr: &str, n: usize) -> Result<QMatrix, TableError> {
    let err = || TableError::Elementary(expr.to_string());
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let (factor, body) = match compact.find('(') {
        Some(open) => {
            let body = compact[open + 1..].strip_suffix(')').ok_or_else(err)?;
            (parse_rational(&compact[..open]).map_err(|_| err())?, body.to_string())
        }
        None => (qi(1), compact),
    };
    let mut m = QMatrix::zeros(n, n);
    let mut rest = body.as_str();
    while !rest.is_empty() {
        let end = rest[1..].find(['+', '-']).map_or(rest.len(), |p| p + 1);
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let e = term.find('E').ok_or_else(err)?;
        let coeff = match &term[..e] {
            "" | "+" => qi(1),
            "-" => qi(-1),
            c => parse_rational(c.trim_start_matches('+')).map_err(|_| err())?,
        };
        let digits: Vec<usize> = term[e + 1..].chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(err)?;
        let [i, j] = digits[..] else { return Err(err()) };
        if i == 0 || j == 0 || i > n || j > n {
            return Err(err());
        }
        let v = m.get(i - 1, j - 1) + &factor * &coeff;
        m.set(i - 1, j - 1, v);
    }
    Ok(m)
}

/// Matrices of an elementary-matrix table.
pub fn elementary_table(entries: &[&str], n: usize) -> Result<Vec<QMatrix>, TableError> {
    entries.iter().map(|e| parse_elementary(e, n)).collect()
}

/// A printed entry that disagrees with the rule generating its table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correction {
    pub table: &'static str,
    pub label: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
}

/// Every misprint known to the tables in this module.
pub fn corrections() -> Vec<Correction> {
    vec![
        Correction { table: "f41", label: "A4", printed: "1/2 I*I*sx", corrected: "1/2 I*sz*sx" },
        Correction { table: "f421", label: "A4", printed: "E61 - E16", corrected: "E16 - E61" },
        Correction { table: "so3-rho", label: "A3", printed: "A1", corrected: "A3" },
        Correction { table: "qc-tau", label: "A2", printed: "[0 0 -e; 0 0 0; -1 0 0]", corrected: "[0 0 -e; 0 0 0; 1 0 0]" },
    ]
}

/// [`F41`] with its misprint fixed.
pub fn f41_corrected() -> Vec<QMatrix> {
    let mut m = word_table(&F41).expect("table parses");
    m[3] = PauliWord::from_str("1/2 I*sz*sx").expect("word parses").matrix();
    m
}

/// [`F421`] with its misprint fixed and the scaling generator `Id₇` appended.
pub fn f421_corrected() -> Vec<QMatrix> {
    let mut m = elementary_table(&F421, 7).expect("table parses");
    m[3] = m[3].scale(&qi(-1));
    m.push(QMatrix::identity(7));
    m
}

/// [`SO8`] with the scaling generator `Id₈` appended.
pub fn so8_with_scaling() -> Vec<QMatrix> {
    let mut m = elementary_table(&SO8, 8).expect("table parses");
    m.push(QMatrix::identity(8));
    m
}

/// `ρ` for so(3) on ℝ³, in the order `A1, A2, A3`.
pub fn so3_rho() -> Vec<QMatrix> {
    vec![
        QMatrix::from_i64(&[&[0, 0, -1], &[0, 0, 0], &[1, 0, 0]]),
        QMatrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]),
        QMatrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
    ]
}

/// `τ` for so(3) on ℝ³.
pub fn so3_tau() -> Vec<QMatrix> {
    vec![
        QMatrix::from_i64(&[&[0, 0, -1], &[0, 0, 0], &[1, 0, 0]]),
        QMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
        QMatrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]),
    ]
}

/// `τ` for sp(1)⊕ℝ or sl(2,ℝ)⊕ℝ on ℝ³, as printed (with the `A2` misprint).
pub fn qc_tau_printed(eps: i64) -> Vec<QMatrix> {
    vec![
        QMatrix::from_i64(&[&[0, 0, 0], &[0, 0, eps], &[0, -1, 0]]),
        QMatrix::from_i64(&[&[0, 0, -eps], &[0, 0, 0], &[-1, 0, 0]]),
        QMatrix::from_i64(&[&[0, -eps, 0], &[eps, 0, 0], &[0, 0, 0]]),
        QMatrix::identity(3),
    ]
}

/// [`qc_tau_printed`] with the `A2` entry fixed.
pub fn qc_tau(eps: i64) -> Vec<QMatrix> {
    let mut m = qc_tau_printed(eps);
    m[1].set(2, 0, qi(1));
    m
}

/// `ρ` for the quaternionic contact case: `−½σ₃, ½σ₂, −½εσ₁, ½Id`.
pub fn qc_rho(eps: i64) -> Vec<QMatrix> {
    let s = crate::clifford::quaternionic_generators(eps).generators;
    vec![
        s[2].scale(&q(-1, 2)),
        s[1].scale(&q(1, 2)),
        s[0].scale(&q(-eps, 2)),
        QMatrix::identity(4).scale(&q(1, 2)),
    ]
}

/// One printed 2-form: `(i, μ, ν, c)` means `c dx^μ∧dx^ν` in `ω^i`, all 1-based.
pub type FormTerm = (usize, usize, usize, i64);

/// The seven 2-forms on ℝ⁸ from Cartan's realization of f4.
pub const CARTAN_F4_OMEGA: [FormTerm; 28] = [
    (1, 1, 8, 1), (1, 2, 5, 1), (1, 3, 7, 1), (1, 4, 6, 1),
    (2, 1, 5, -1), (2, 2, 8, 1), (2, 3, 6, 1), (2, 4, 7, -1),
    (3, 1, 7, -1), (3, 2, 6, -1), (3, 3, 8, 1), (3, 4, 5, 1),
    (4, 1, 2, 1), (4, 3, 4, 1), (4, 5, 8, 1), (4, 6, 7, 1),
    (5, 1, 6, -1), (5, 2, 7, 1), (5, 3, 5, -1), (5, 4, 8, 1),
    (6, 1, 4, 1), (6, 2, 3, 1), (6, 5, 7, -1), (6, 6, 8, 1),
    (7, 1, 3, 1), (7, 2, 4, -1), (7, 5, 6, 1), (7, 7, 8, 1),
];
