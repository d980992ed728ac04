//! Kernels of large sparse rational systems by multi-modular elimination.
//!
//! The kernel is computed modulo several word-size primes, lifted by Chinese
//! remaindering and rational reconstruction, and then verified exactly over ℚ.
//! A candidate is accepted only when every lifted vector is annihilated by the
//! rational matrix; since the rank modulo a prime never exceeds the rational
//! rank, the verified vectors then span the whole kernel. Whenever the lift does
//! not settle the computation falls back to exact rational elimination.

use super::field::{large_primes, Field, PrimeField, Rationals};
use super::rational::Rational;
use super::sparse::{kernel_from_rref, rref, SparseRow};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Sparse rational linear system `M v = 0` given by rows.
#[derive(Debug, Clone, Default)]
pub struct SparseSystem {
    pub ncols: usize,
    pub rows: Vec<SparseRow<Rational>>,
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        SparseSystem { ncols, rows: Vec::new() }
    }

    /// Adds a row given as unsorted `(column, value)` pairs; repeated columns are
    /// summed and zeros dropped.
    pub fn push_row(&mut self, mut entries: Vec<(usize, Rational)>) {
        entries.sort_by_key(|(c, _)| *c);
        let mut row: SparseRow<Rational> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            debug_assert!(c < self.ncols);
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|(_, v)| !v.is_zero());
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    /// Checks `M v = 0` exactly for a sparse vector.
    pub fn annihilates(&self, v: &[(usize, Rational)]) -> bool {
        let mut dense: Vec<Option<&Rational>> = vec![None; self.ncols];
        for (c, x) in v {
            dense[*c] = Some(x);
        }
        self.rows.par_iter().all(|row| {
            let mut s = Rational::zero();
            for (c, a) in row {
                if let Some(x) = dense[*c] {
                    s += a * x;
                }
            }
            s.is_zero()
        })
    }
}

const MAX_PRIMES: usize = 48;

/// Canonical kernel basis of the system (see [`kernel_from_rref`]), as sparse vectors.
pub fn sparse_kernel(sys: &SparseSystem) -> Vec<SparseRow<Rational>> {
    if sys.rows.is_empty() {
        return (0..sys.ncols).map(|c| vec![(c, Rational::one())]).collect();
    }
    modular_kernel(sys).unwrap_or_else(|| exact_kernel(sys))
}

/// Exact elimination over ℚ.
pub fn exact_kernel(sys: &SparseSystem) -> Vec<SparseRow<Rational>> {
    let f = Rationals;
    let r = rref(&f, sys.ncols, sys.rows.iter().cloned());
    kernel_from_rref(&f, &r)
}

struct Modular {
    rank: usize,
    pivots: Vec<usize>,
    /// Kernel vectors as (positions, residues), one per free column.
    support: Vec<Vec<usize>>,
    residues: Vec<Vec<u64>>,
}

fn kernel_mod(sys: &SparseSystem, p: u64) -> Option<Modular> {
    let f = PrimeField::new(p);
    let mut rows = Vec::with_capacity(sys.rows.len());
    for row in &sys.rows {
        let mut r = Vec::with_capacity(row.len());
        for (c, v) in row {
            let x = f.reduce(v)?;
            if x != 0 {
                r.push((*c, x));
            }
        }
        rows.push(r);
    }
    let rr = rref(&f, sys.ncols, rows);
    let ker = kernel_from_rref(&f, &rr);
    Some(Modular {
        rank: rr.rank(),
        pivots: rr.pivots.clone(),
        support: ker.iter().map(|v| v.iter().map(|(c, _)| *c).collect()).collect(),
        residues: ker.iter().map(|v| v.iter().map(|(_, x)| *x).collect()).collect(),
    })
}

/// Rational reconstruction of `a mod m` with numerator and denominator bounded by
/// `sqrt(m/2)`.
fn reconstruct(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let qt = &r0 / &r1;
        let r2 = &r0 - &qt * &r1;
        let t2 = &t0 - &qt * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn modular_kernel(sys: &SparseSystem) -> Option<Vec<SparseRow<Rational>>> {
    let mut primes = large_primes();
    let mut best: Option<Modular> = None;
    // Residues combined so far, with the running modulus.
    let mut combined: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<Vec<SparseRow<Rational>>> = None;

    for _ in 0..MAX_PRIMES {
        let p = primes.next()?;
        let Some(m) = kernel_mod(sys, p) else { continue };
        if m.rank == sys.ncols {
            return Some(Vec::new());
        }
        let restart = match &best {
            None => true,
            Some(b) if m.rank > b.rank => true,
            Some(b) if m.rank < b.rank || m.pivots != b.pivots => continue,
            Some(b) => m.support != b.support,
        };
        let pb = BigInt::from(p);
        if restart {
            combined = m.residues.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
            modulus = pb;
            best = Some(m);
            previous = None;
            continue;
        }
        // Chinese remaindering: x ≡ c (mod M), x ≡ r (mod p).
        let inv = {
            let mm = (&modulus % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
            PrimeField::new(p).inv(&mm)
        };
        for (cv, rv) in combined.iter_mut().zip(&m.residues) {
            for (c, &r) in cv.iter_mut().zip(rv) {
                let cm = (&*c % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
                let f = PrimeField::new(p);
                let t = f.mul(&f.sub(&r, &cm), &inv);
                *c += &modulus * BigInt::from(t);
            }
        }
        modulus *= &pb;

        let bound = (&modulus / 2u32).sqrt();
        let b = best.as_ref().unwrap();
        let lifted: Option<Vec<SparseRow<Rational>>> = combined
            .iter()
            .zip(&b.support)
            .map(|(cv, sup)| {
                cv.iter()
                    .zip(sup)
                    .map(|(c, &j)| reconstruct(c, &modulus, &bound).map(|x| (j, x)))
                    .collect::<Option<Vec<_>>>()
            })
            .collect();
        let Some(lifted) = lifted else { continue };
        if previous.as_ref() == Some(&lifted) && lifted.par_iter().all(|v| sys.annihilates(v)) {
            return Some(lifted);
        }
        previous = Some(lifted);
    }
    None
}
