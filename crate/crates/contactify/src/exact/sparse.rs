//! Sparse Gauss-Jordan elimination over an arbitrary [`Field`].

use super::field::Field;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Reduced row echelon form: `rows[k]` has a leading one at `pivots[k]`, and every
/// other pivot column is zero in every row.
#[derive(Debug, Clone)]
pub struct Rref<E> {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseRow<E>>,
}

impl<E> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Dense scratch row with a record of which slots may be nonzero.
struct Accumulator<E> {
    vals: Vec<E>,
    live: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl<E: Clone> Accumulator<E> {
    fn new(ncols: usize, zero: E) -> Self {
        Accumulator { vals: vec![zero; ncols], live: vec![false; ncols], heap: BinaryHeap::new() }
    }

    fn load<F: Field<Elem = E>>(&mut self, row: &[(usize, E)], _f: &F) {
        for (c, v) in row {
            self.vals[*c] = v.clone();
            self.live[*c] = true;
            self.heap.push(Reverse(*c));
        }
    }

    /// `acc -= factor * row`
    fn axpy<F: Field<Elem = E>>(&mut self, f: &F, factor: &E, row: &[(usize, E)]) {
        for (c, v) in row {
            let t = f.mul(factor, v);
            if self.live[*c] {
                self.vals[*c] = f.sub(&self.vals[*c], &t);
            } else {
                self.vals[*c] = f.neg(&t);
                self.live[*c] = true;
                self.heap.push(Reverse(*c));
            }
        }
    }

    fn pop_min(&mut self) -> Option<usize> {
        while let Some(Reverse(c)) = self.heap.pop() {
            if self.live[c] {
                return Some(c);
            }
        }
        None
    }

    /// Drains all remaining live slots (ascending) into a sparse row, resetting them.
    fn drain<F: Field<Elem = E>>(&mut self, f: &F) -> SparseRow<E> {
        let mut out = Vec::new();
        while let Some(c) = self.pop_min() {
            self.live[c] = false;
            let v = std::mem::replace(&mut self.vals[c], f.zero());
            if !f.is_zero(&v) {
                out.push((c, v));
            }
        }
        out
    }

    fn clear_slot<F: Field<Elem = E>>(&mut self, f: &F, c: usize) -> E {
        self.live[c] = false;
        std::mem::replace(&mut self.vals[c], f.zero())
    }
}

/// Computes the reduced row echelon form of the given rows.
pub fn rref<F: Field>(f: &F, ncols: usize, rows: impl IntoIterator<Item = SparseRow<F::Elem>>) -> Rref<F::Elem> {
    let mut pivot_row: Vec<Option<usize>> = vec![None; ncols];
    let mut echelon: Vec<(usize, SparseRow<F::Elem>)> = Vec::new();
    let mut acc = Accumulator::new(ncols, f.zero());

    for row in rows {
        if row.is_empty() {
            continue;
        }
        acc.load(&row, f);
        let mut new_pivot = None;
        while let Some(c) = acc.pop_min() {
            let v = acc.clear_slot(f, c);
            if f.is_zero(&v) {
                continue;
            }
            match pivot_row[c] {
                Some(k) => {
                    let prow = &echelon[k].1;
                    acc.axpy(f, &v, &prow[1..]);
                }
                None => {
                    new_pivot = Some((c, v));
                    break;
                }
            }
        }
        let tail = acc.drain(f);
        if let Some((c, v)) = new_pivot {
            let vinv = f.inv(&v);
            let mut prow = Vec::with_capacity(tail.len() + 1);
            prow.push((c, f.one()));
            prow.extend(tail.into_iter().map(|(j, x)| (j, f.mul(&x, &vinv))));
            pivot_row[c] = Some(echelon.len());
            echelon.push((c, prow));
        }
    }

    // Back substitution, from the rightmost pivot leftwards.
    echelon.sort_by_key(|(c, _)| *c);
    for (k, &(c, _)) in echelon.iter().enumerate() {
        pivot_row[c] = Some(k);
    }
    let n = echelon.len();
    for k in (0..n).rev() {
        let row = std::mem::take(&mut echelon[k].1);
        acc.load(&row[1..], f);
        let mut reduced = vec![row[0].clone()];
        while let Some(c) = acc.pop_min() {
            let v = acc.clear_slot(f, c);
            if f.is_zero(&v) {
                continue;
            }
            match pivot_row[c] {
                Some(j) if j > k => {
                    let prow = &echelon[j].1;
                    acc.axpy(f, &v, &prow[1..]);
                }
                _ => reduced.push((c, v)),
            }
        }
        echelon[k].1 = reduced;
    }

    Rref {
        ncols,
        pivots: echelon.iter().map(|(c, _)| *c).collect(),
        rows: echelon.into_iter().map(|(_, r)| r).collect(),
    }
}

/// Canonical kernel basis read off an RREF: one vector per free column `c`, equal
/// to one at `c`, zero on the other free columns. Returned sparse.
pub fn kernel_from_rref<F: Field>(f: &F, r: &Rref<F::Elem>) -> Vec<SparseRow<F::Elem>> {
    let free = r.free_columns();
    let mut index_of_free = vec![usize::MAX; r.ncols];
    for (k, &c) in free.iter().enumerate() {
        index_of_free[c] = k;
    }
    let mut out: Vec<SparseRow<F::Elem>> = free.iter().map(|_| Vec::new()).collect();
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        for (c, v) in &row[1..] {
            let k = index_of_free[*c];
            debug_assert!(k != usize::MAX);
            out[k].push((p, f.neg(v)));
        }
    }
    for (k, &c) in free.iter().enumerate() {
        out[k].push((c, f.one()));
        out[k].sort_by_key(|(j, _)| *j);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{PrimeField, Rationals};
    use crate::exact::rational::qi;

    #[test]
    fn rank_one_kernel() {
        let f = Rationals;
        let rows = vec![vec![(0, qi(1)), (1, qi(1))], vec![(0, qi(1)), (1, qi(1))]];
        let r = rref(&f, 2, rows);
        assert_eq!(r.pivots, vec![0]);
        let k = kernel_from_rref(&f, &r);
        assert_eq!(k, vec![vec![(0, qi(-1)), (1, qi(1))]]);
    }

    #[test]
    fn modular_rref_matches_hand_reduction() {
        let f = PrimeField::new(101);
        // [[0,2,4],[1,1,1]] -> [[1,0,-1],[0,1,2]]
        let rows = vec![vec![(1, 2), (2, 4)], vec![(0, 1), (1, 1), (2, 1)]];
        let r = rref(&f, 3, rows);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rows[0], vec![(0, 1), (2, 100)]);
        assert_eq!(r.rows[1], vec![(1, 1), (2, 2)]);
    }
}
