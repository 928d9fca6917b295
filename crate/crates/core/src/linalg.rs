//! Dense reduced row echelon forms over `F_p`.
//!
//! Column 0 is the greatest monomial, so a row's pivot (first nonzero
//! column) is its leading monomial.

use crate::field::{Fe, PrimeField};

/// An incrementally built reduced row echelon basis of a subspace of `F_p^n`.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<Fe>>,
    /// `pivot_row[c]` is the row whose pivot is column `c`.
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Self { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.is_pivot(c)).collect()
    }

    /// The row with pivot `col`, normalized to leading coefficient one and
    /// zero in every other pivot column.
    pub fn pivot_row(&self, col: usize) -> Option<&[Fe]> {
        self.pivot_row[col].map(|r| self.rows[r].as_slice())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Fe]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    /// Reduces `v` against the basis; the result is zero in every pivot column.
    pub fn reduce(&self, v: &mut [Fe]) {
        assert_eq!(v.len(), self.ncols);
        let f = self.field;
        for c in 0..self.ncols {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let factor = v[c];
                for (x, &y) in v.iter_mut().zip(&self.rows[r]).skip(c) {
                    if !y.is_zero() {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the spanning set; returns the new pivot column if the
    /// rank grew.
    pub fn insert(&mut self, mut v: Vec<Fe>) -> Option<usize> {
        self.reduce(&mut v);
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let f = self.field;
        let inv = f.inv(v[pivot]).expect("pivot is nonzero");
        for x in v.iter_mut().skip(pivot) {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let factor = row[pivot];
            if factor.is_zero() {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&v).skip(pivot) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(v);
        Some(pivot)
    }
}
