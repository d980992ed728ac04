//! Real Clifford algebra generators built from tensor words in the 2×2 Pauli basis.
//!
//! Every generator used here is a signed rational multiple of a tensor product
//! of the four matrices `I`, `σx`, `ε = -iσy` and `σz`. [`PauliWord`] keeps that
//! symbolic form around so tables of generators can be written, printed and
//! compared in the same notation in which they are usually displayed.

use crate::exact::{format_rational, parse_rational, q, qi, QMatrix, Rational};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One of the four real 2×2 basis matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "sx")]
    X,
    #[serde(rename = "eps")]
    E,
    #[serde(rename = "sz")]
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::E, Pauli::Z];

    pub fn matrix(self) -> QMatrix {
        match self {
            Pauli::I => QMatrix::identity(2),
            Pauli::X => QMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            Pauli::E => QMatrix::from_i64(&[&[0, -1], &[1, 0]]),
            Pauli::Z => QMatrix::from_i64(&[&[1, 0], &[0, -1]]),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Pauli::I => "I",
            Pauli::X => "σx",
            Pauli::E => "ε",
            Pauli::Z => "σz",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Pauli::I => "I",
            Pauli::X => "sx",
            Pauli::E => "eps",
            Pauli::Z => "sz",
        }
    }
}

impl FromStr for Pauli {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, WordError> {
        match s.trim() {
            "I" | "1" => Ok(Pauli::I),
            "σx" | "sx" | "σ_x" => Ok(Pauli::X),
            "ε" | "eps" | "epsilon" => Ok(Pauli::E),
            "σz" | "sz" | "σ_z" => Ok(Pauli::Z),
            other => Err(WordError::Factor(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("unknown tensor factor {0:?}")]
    Factor(String),
    #[error("bad coefficient in {0:?}")]
    Coefficient(String),
    #[error("empty tensor word")]
    Empty,
}

/// `coeff · P₁⊗P₂⊗…⊗Pₖ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliWord {
    #[serde(with = "crate::exact::serde_rational")]
    pub coeff: Rational,
    pub factors: Vec<Pauli>,
}

impl PauliWord {
    pub fn new(coeff: Rational, factors: Vec<Pauli>) -> Self {
        PauliWord { coeff, factors }
    }

    pub fn matrix(&self) -> QMatrix {
        let mut m = QMatrix::identity(1);
        for f in &self.factors {
            m = m.kron(&f.matrix());
        }
        m.scale(&self.coeff)
    }

    /// Expands `m` in the tensor Pauli basis, returning every word with a nonzero
    /// coefficient in lexicographic order of the factors.
    pub fn expand(m: &QMatrix, k: usize) -> Vec<PauliWord> {
        let n = 1usize << k;
        assert!(m.rows() == n && m.cols() == n, "expected a 2^{k} square matrix");
        let mut out = Vec::new();
        expand_into(m, &mut Vec::new(), &mut out);
        out
    }

    /// The single word equal to `m`, if `m` is a multiple of one basis word.
    pub fn decompose(m: &QMatrix) -> Option<PauliWord> {
        let n = m.rows();
        if !n.is_power_of_two() || m.cols() != n {
            return None;
        }
        let k = n.trailing_zeros() as usize;
        let mut terms = Self::expand(m, k);
        (terms.len() == 1).then(|| terms.remove(0))
    }
}

/// Peels off the first tensor factor: `m = I⊗a + σx⊗b + ε⊗c + σz⊗d` with the
/// blocks of `m` equal to `[a+d, b−c; b+c, a−d]`.
fn expand_into(m: &QMatrix, prefix: &mut Vec<Pauli>, out: &mut Vec<PauliWord>) {
    if m.is_zero() {
        return;
    }
    let n = m.rows();
    if n == 1 {
        out.push(PauliWord::new(m.get(0, 0).clone(), prefix.clone()));
        return;
    }
    let h = n / 2;
    let lo: Vec<usize> = (0..h).collect();
    let hi: Vec<usize> = (h..n).collect();
    let tl = m.submatrix(&lo, &lo);
    let tr = m.submatrix(&lo, &hi);
    let bl = m.submatrix(&hi, &lo);
    let br = m.submatrix(&hi, &hi);
    let half = q(1, 2);
    let parts = [
        (Pauli::I, (&tl + &br).scale(&half)),
        (Pauli::X, (&tr + &bl).scale(&half)),
        (Pauli::E, (&bl - &tr).scale(&half)),
        (Pauli::Z, (&tl - &br).scale(&half)),
    ];
    for (p, sub) in parts {
        prefix.push(p);
        expand_into(&sub, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<&str> = self.factors.iter().map(|p| p.symbol()).collect();
        let body = body.join("⊗");
        if self.coeff.is_one() {
            write!(f, "{body}")
        } else if (-&self.coeff).is_one() {
            write!(f, "-{body}")
        } else {
            write!(f, "{} {body}", format_rational(&self.coeff))
        }
    }
}

impl FromStr for PauliWord {
    type Err = WordError;

    /// Parses `"1/2 I⊗σz⊗σx"`, `"-sz*eps*I"` and similar forms; `*` and `x` may be
    /// used instead of `⊗`.
    fn from_str(s: &str) -> Result<Self, WordError> {
        let t = s.trim();
        if t.is_empty() {
            return Err(WordError::Empty);
        }
        let (coeff, body) = match t.rsplit_once(' ') {
            Some((c, b)) => {
                let c = c.trim();
                let coeff = match c {
                    "-" => qi(-1),
                    "+" | "" => qi(1),
                    _ => parse_rational(c).map_err(|_| WordError::Coefficient(s.to_string()))?,
                };
                (coeff, b)
            }
            None => match t.strip_prefix('-') {
                Some(rest) => (qi(-1), rest),
                None => (qi(1), t),
            },
        };
        let factors = body
            .split(['⊗', '*'])
            .map(str::parse)
            .collect::<Result<Vec<Pauli>, _>>()?;
        if factors.is_empty() {
            return Err(WordError::Empty);
        }
        Ok(PauliWord { coeff, factors })
    }
}

/// An ordered family of matrices satisfying `γᵢγⱼ + γⱼγᵢ = 2 gᵢⱼ Id` for a
/// diagonal metric `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordGenerators {
    pub generators: Vec<QMatrix>,
    #[serde(with = "crate::exact::serde_rational_vec")]
    pub metric: Vec<Rational>,
    /// `(p, q)`: numbers of positive and negative metric entries.
    pub label: (usize, usize),
}

/// A failed Clifford relation, reported with 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Clifford relation fails for generators {0} and {1}")]
pub struct CliffordError(pub usize, pub usize);

impl CliffordGenerators {
    pub fn new(generators: Vec<QMatrix>, metric: Vec<Rational>) -> Self {
        let p = metric.iter().filter(|g| g.is_positive()).count();
        let label = (p, metric.len() - p);
        CliffordGenerators { generators, metric, label }
    }

    /// Builds the family from its generators alone, reading the metric off the squares.
    pub fn from_generators(generators: Vec<QMatrix>) -> Self {
        let metric = generators.iter().map(|g| (g * g).get(0, 0).clone()).collect();
        Self::new(generators, metric)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn size(&self) -> usize {
        self.generators.first().map_or(0, QMatrix::rows)
    }

    /// Checks the Clifford relation on every pair.
    pub fn check(&self) -> Result<(), CliffordError> {
        let id = QMatrix::identity(self.size());
        for i in 0..self.len() {
            for j in i..self.len() {
                let ac = self.generators[i].anticommutator(&self.generators[j]);
                let expected = if i == j { id.scale(&(qi(2) * &self.metric[i])) } else { QMatrix::zeros(id.rows(), id.cols()) };
                if ac != expected {
                    return Err(CliffordError(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    /// Tensor words of the generators (each generator is a single word for every
    /// family constructed in this module).
    pub fn words(&self) -> Vec<Option<PauliWord>> {
        self.generators.iter().map(PauliWord::decompose).collect()
    }
}

fn block(a: &QMatrix, b: &QMatrix, c: &QMatrix, d: &QMatrix) -> QMatrix {
    let n = a.rows();
    QMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let m = match (i < n, j < n) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        m.get(i % n, j % n).clone()
    })
}

/// Given Pauli-type matrices σ₁…σ₂ₙ₋₁ of size 2ⁿ⁻¹, builds the 2n Dirac-type
/// matrices of size 2ⁿ.
fn dirac_from_pauli(sigma: &[QMatrix]) -> Vec<QMatrix> {
    let n = sigma[0].rows();
    let zero = QMatrix::zeros(n, n);
    let id = QMatrix::identity(n);
    let mut out: Vec<QMatrix> = sigma.iter().map(|s| block(&zero, s, s, &zero)).collect();
    out.push(block(&zero, &(-&id), &id, &zero));
    out
}

/// Given Dirac-type matrices γ₁…γ₂ₙ, appends σ₂ₙ₊₁ = γ₁⋯γ₂ₙ.
fn pauli_from_dirac(gamma: &[QMatrix]) -> Vec<QMatrix> {
    let mut out = gamma.to_vec();
    let prod = gamma.iter().skip(1).fold(gamma[0].clone(), |acc, g| &acc * g);
    out.push(prod);
    out
}

/// Pauli matrices generating a real representation of Cl(n−1, n) in dimension 2ⁿ⁻¹:
/// 2n−1 generators with metric `(1, −1, …, −1, 1)`.
pub fn pauli_tower(n: usize) -> CliffordGenerators {
    assert!(n >= 1, "the tower starts at n = 1");
    let mut sigma = vec![QMatrix::identity(1)];
    for _ in 1..n {
        sigma = pauli_from_dirac(&dirac_from_pauli(&sigma));
    }
    let metric = (0..2 * n - 1).map(|i| if i % 2 == 0 { qi(1) } else { qi(-1) }).collect();
    CliffordGenerators::new(sigma, metric)
}

/// Dirac matrices generating a real representation of Cl(n, n) in dimension 2ⁿ:
/// 2n generators with metric `(1, −1, …, 1, −1)`.
pub fn dirac_tower(n: usize) -> CliffordGenerators {
    let gamma = dirac_from_pauli(&pauli_tower(n).generators);
    let metric = (0..2 * n).map(|i| if i % 2 == 0 { qi(1) } else { qi(-1) }).collect();
    CliffordGenerators::new(gamma, metric)
}

/// Families of generators with definite metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompactCase {
    /// Seven 8×8 generators with metric −Id.
    Cl07,
    /// Eight 16×16 generators with metric −Id.
    Cl08,
    /// Eight real 16×16 generators with metric +Id.
    Cl80,
}

impl FromStr for CompactCase {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cl07" => Ok(CompactCase::Cl07),
            "cl08" => Ok(CompactCase::Cl08),
            "cl80" => Ok(CompactCase::Cl80),
            _ => Err(format!("unknown Clifford family {s:?}")),
        }
    }
}

/// The seven words generating Cl(0,7) in ℝ⁸.
pub const CL07_WORDS: [&str; 7] = [
    "sz*I*eps",
    "sz*eps*sx",
    "sz*eps*sz",
    "sx*eps*I",
    "sx*sx*eps",
    "sx*sz*eps",
    "eps*I*I",
];

/// B = σz⊗ε⊗σz⊗ε, the real matrix intertwining the Cl(8,0) generators with their conjugates.
pub const CL80_B: &str = "sz*eps*sz*eps";

fn word(s: &str) -> QMatrix {
    s.parse::<PauliWord>().expect("built-in word").matrix()
}

/// Complex matrix stored as a pair of real parts.
#[derive(Clone)]
struct Complex {
    re: QMatrix,
    im: QMatrix,
}

impl Complex {
    fn real(re: QMatrix) -> Self {
        let im = QMatrix::zeros(re.rows(), re.cols());
        Complex { re, im }
    }

    fn imag(im: QMatrix) -> Self {
        let re = QMatrix::zeros(im.rows(), im.cols());
        Complex { re, im }
    }

    fn add(&self, o: &Complex) -> Complex {
        Complex { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn mul(&self, o: &Complex) -> Complex {
        Complex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    fn scale(&self, s: &Rational) -> Complex {
        Complex { re: self.re.scale(s), im: self.im.scale(s) }
    }
}

/// The real Cl(8,0) generators: put `i` in front of the even Cl(4,4) generators and
/// conjugate by `iB + Id`, whose inverse is `(Id − iB)/2` because `B² = Id`.
fn cl80() -> Vec<QMatrix> {
    let b = word(CL80_B);
    let id = QMatrix::identity(16);
    let left = Complex::real(id.clone()).add(&Complex::imag(b.clone()));
    let right = Complex::real(id).add(&Complex::imag(-&b)).scale(&q(1, 2));
    dirac_tower(4)
        .generators
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let tilde = if i % 2 == 0 { Complex::real(g) } else { Complex::imag(g) };
            let out = left.mul(&tilde).mul(&right);
            assert!(out.im.is_zero(), "conjugated generator must be real");
            out.re
        })
        .collect()
}

pub fn compact_generators(case: CompactCase) -> CliffordGenerators {
    match case {
        CompactCase::Cl07 => {
            let g: Vec<QMatrix> = CL07_WORDS.iter().map(|w| word(w)).collect();
            CliffordGenerators::new(g, vec![qi(-1); 7])
        }
        CompactCase::Cl08 => {
            let sx = Pauli::X.matrix();
            let mut g: Vec<QMatrix> = CL07_WORDS.iter().map(|w| sx.kron(&word(w))).collect();
            g.push(word("eps*I*I*I"));
            CliffordGenerators::new(g, vec![qi(-1); 8])
        }
        CompactCase::Cl80 => CliffordGenerators::new(cl80(), vec![qi(1); 8]),
    }
}

/// The 4×4 generators of Cl(0,3) (ε = 1) or Cl(2,1) (ε = −1) used for the
/// quaternionic contact case, with metric `(−1, −ε, −ε)`.
pub fn quaternionic_generators(eps: i64) -> CliffordGenerators {
    assert!(eps == 1 || eps == -1);
    let e = eps;
    let s1 = QMatrix::from_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let s2 = QMatrix::from_i64(&[&[0, 0, 0, -e], &[0, 0, -e, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
    let s3 = QMatrix::from_i64(&[&[0, 0, -e, 0], &[0, 0, 0, e], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
    CliffordGenerators::new(vec![s1, s2, s3], vec![qi(-1), qi(-e), qi(-e)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        for s in ["1/2 I⊗σz⊗σx", "-ε⊗σz⊗ε⊗I", "σx"] {
            let w: PauliWord = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
        }
        let w: PauliWord = "-1/2 sz*eps*I".parse().unwrap();
        assert_eq!(w.to_string(), "-1/2 σz⊗ε⊗I");
        assert!("1/2 I⊗y".parse::<PauliWord>().is_err());
    }

    #[test]
    fn decompose_recovers_word() {
        let w: PauliWord = "-3/2 eps*sx*sz".parse().unwrap();
        assert_eq!(PauliWord::decompose(&w.matrix()), Some(w));
        let sum = &Pauli::X.matrix() + &Pauli::Z.matrix();
        assert_eq!(PauliWord::decompose(&sum), None);
        assert_eq!(PauliWord::expand(&sum, 1).len(), 2);
    }

    #[test]
    fn first_towers() {
        let t1 = pauli_tower(1);
        assert_eq!(t1.generators, vec![QMatrix::identity(1)]);
        assert_eq!(t1.metric, vec![qi(1)]);
        let d1 = dirac_tower(1);
        assert_eq!(d1.generators, vec![Pauli::X.matrix(), Pauli::E.matrix()]);
        assert_eq!(d1.metric, vec![qi(1), qi(-1)]);
        let t2 = pauli_tower(2);
        assert_eq!(t2.generators[2], Pauli::Z.matrix());
        t2.check().unwrap();
    }
}
