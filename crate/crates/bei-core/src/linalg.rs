//! Sparse exact Gaussian elimination over the coefficient field.
//!
//! Used for degree-by-degree minimal generator extraction (ideals and
//! syzygy modules). Coordinates are interned `(position, monomial)` pairs;
//! ideals use position 0.

use crate::field::{CoefficientField, Scalar};
use crate::monomial::Monomial;
use std::collections::HashMap;

/// Interns `(position, monomial)` coordinates into dense ids. Insertion order
/// is deterministic, so pivot choices are reproducible.
#[derive(Debug, Default)]
pub struct CoordInterner {
    map: HashMap<(u32, Monomial), u32>,
}

impl CoordInterner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, pos: u32, mono: &Monomial) -> u32 {
        if let Some(&id) = self.map.get(&(pos, mono.clone())) {
            return id;
        }
        let id = self.map.len() as u32;
        self.map.insert((pos, mono.clone()), id);
        id
    }
}

/// A sparse row: `(coordinate id, coefficient)` sorted ascending by id.
pub type SparseRow = Vec<(u32, Scalar)>;

/// Incremental row space with exact arithmetic. `insert` reduces a row
/// against the stored pivots and keeps it when independent.
#[derive(Debug)]
pub struct RowReducer {
    field: CoefficientField,
    rows: Vec<SparseRow>,
    pivots: HashMap<u32, usize>,
}

impl RowReducer {
    pub fn new(field: CoefficientField) -> Self {
        RowReducer { field, rows: Vec::new(), pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored rows until its leading coordinate is
    /// not a pivot (or the row vanishes).
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((lead, lc)) = row.first().cloned() else {
                return row;
            };
            let Some(&pivot_idx) = self.pivots.get(&lead) else {
                return row;
            };
            let pivot = &self.rows[pivot_idx];
            let factor = self.field.div(&lc, &pivot[0].1);
            row = sub_scaled(&self.field, &row, pivot, &factor);
        }
    }

    /// Returns true when the row was independent (and is now stored).
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        let lead = reduced[0].0;
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(reduced);
        true
    }

    /// True iff the row lies in the current span.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// `a - factor * b` on sorted sparse rows.
fn sub_scaled(
    field: &CoefficientField,
    a: &SparseRow,
    b: &SparseRow,
    factor: &Scalar,
) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = field.neg(&field.mul(&b[j].1, factor));
                if !field.is_zero(&c) {
                    out.push((b[j].0, c));
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = field.sub(&a[i].1, &field.mul(&b[j].1, factor));
                if !field.is_zero(&c) {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (id, c) in &b[j..] {
        let c = field.neg(&field.mul(c, factor));
        if !field.is_zero(&c) {
            out.push((*id, c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(field: &CoefficientField, v: i64) -> Scalar {
        field.from_i64(v)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let f = CoefficientField::Rationals;
        let mut r = RowReducer::new(f);
        assert!(r.insert(vec![(0, s(&f, 1)), (1, s(&f, 2))]));
        assert!(r.insert(vec![(1, s(&f, 1)), (2, s(&f, 1))]));
        // row0 + 2*row1 is dependent
        assert!(!r.insert(vec![(0, s(&f, 1)), (1, s(&f, 4)), (2, s(&f, 2))]));
        assert_eq!(r.rank(), 2);
        assert!(r.contains(vec![(0, s(&f, 2)), (1, s(&f, 4))]));
        assert!(!r.contains(vec![(2, s(&f, 1)), (3, s(&f, 1))]));
    }
}
