//! Sparse exact linear algebra.
//!
//! Only rank is needed by the rest of the crate (Betti numbers and the
//! linear-algebra membership oracle both reduce to rank computations), so
//! that is all this module provides. Elimination is right-looking with
//! Markowitz-style pivoting: pick the lightest active column, then within it
//! the lightest row, preferring unit pivots so the integer path stays small.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::Field;

/// Sparse matrix with entries of type `E`, stored row-major.
///
/// Invariant: each row is sorted by column index and holds no explicit zeros.
#[derive(Clone, Debug)]
pub struct SparseMatrix<E> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(u32, E)>>,
}

impl<E> SparseMatrix<E> {
    /// Builds a matrix from per-column entry lists `(row, value)`.
    ///
    /// Duplicate positions are not allowed; callers construct each column in
    /// one pass. Panics on out-of-range indices.
    pub fn from_columns(nrows: usize, ncols: usize, cols: Vec<Vec<(usize, E)>>) -> Self {
        assert_eq!(cols.len(), ncols, "column count mismatch");
        let mut rows: Vec<Vec<(u32, E)>> = (0..nrows).map(|_| Vec::new()).collect();
        for (c, col) in cols.into_iter().enumerate() {
            for (r, e) in col {
                assert!(r < nrows, "row index out of range");
                rows[r].push((c as u32, e));
            }
        }
        // Columns were visited in increasing order, so each row is sorted.
        SparseMatrix { nrows, ncols, rows }
    }

    /// Builds a matrix from per-row entry lists `(col, value)`; rows may be
    /// unsorted but must not repeat a column.
    pub fn from_rows(nrows: usize, ncols: usize, mut rows: Vec<Vec<(u32, E)>>) -> Self {
        assert_eq!(rows.len(), nrows, "row count mismatch");
        for row in rows.iter_mut() {
            row.sort_unstable_by_key(|(c, _)| *c);
            for (c, _) in row.iter() {
                assert!((*c as usize) < ncols, "column index out of range");
            }
        }
        SparseMatrix { nrows, ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Decomposes into `(nrows, ncols, rows)`.
    pub fn into_parts(self) -> (usize, usize, Vec<Vec<(u32, E)>>) {
        (self.nrows, self.ncols, self.rows)
    }
}

/// Rank over an arbitrary [`Field`], by straightforward sparse elimination.
pub fn field_rank<F: Field>(field: &F, mat: SparseMatrix<F::Elem>) -> usize {
    let rows = mat
        .rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .filter(|(_, e)| !field.is_zero(e))
                .collect()
        })
        .collect();
    eliminate(rows, mat.ncols, |_| true, |row_k, a_kc, row_r, a_rc| {
        // row_k := row_k - (a_kc / a_rc) * row_r, which clears column c exactly.
        let factor = field.div(a_kc, a_rc);
        axpy_merge(row_k, row_r, |a, b| {
            let v = match (a, b) {
                (Some(a), None) => a.clone(),
                (None, Some(b)) => field.neg(&field.mul(&factor, b)),
                (Some(a), Some(b)) => field.sub(a, &field.mul(&factor, b)),
                (None, None) => unreachable!("merge visits occupied columns"),
            };
            if field.is_zero(&v) {
                None
            } else {
                Some(v)
            }
        })
    })
}

/// Rank of an integer matrix via fraction-free elimination.
///
/// Row updates use `row_k := a_rc * row_k - a_kc * row_r` followed by a
/// content strip (division by the gcd of the entries), so every intermediate
/// value is an exact integer and entries stay small in practice.
pub fn integer_rank(nrows: usize, ncols: usize, rows: Vec<Vec<(u32, BigInt)>>) -> usize {
    let _ = nrows;
    let rows = rows
        .into_iter()
        .map(|row| {
            let mut row: Vec<(u32, BigInt)> =
                row.into_iter().filter(|(_, e)| !e.is_zero()).collect();
            row.sort_unstable_by_key(|(c, _)| *c);
            strip_content(&mut row);
            row
        })
        .collect();
    eliminate(
        rows,
        ncols,
        |e: &BigInt| e.magnitude().is_one(),
        |row_k, a_kc, row_r, a_rc| {
            let mut out = axpy_merge(row_k, row_r, |a, b| {
                let v = match (a, b) {
                    (Some(a), None) => a * a_rc,
                    (None, Some(b)) => -(b * a_kc),
                    (Some(a), Some(b)) => a * a_rc - b * a_kc,
                    (None, None) => unreachable!("merge visits occupied columns"),
                };
                if v.is_zero() {
                    None
                } else {
                    Some(v)
                }
            });
            strip_content(&mut out);
            out
        },
    )
}

/// Divides a row by the gcd of its entries.
fn strip_content(row: &mut [(u32, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, e) in row.iter() {
        g = g.gcd(e);
        if g.is_one() {
            return;
        }
    }
    if g.is_one() || g.is_zero() {
        return;
    }
    for (_, e) in row.iter_mut() {
        *e = &*e / &g;
    }
}

/// Merges `row_k` with pivot row `row_r`: for every column present in either
/// row, `f(entry_of_k, entry_of_r)` produces the new entry (at least one of
/// the two arguments is `Some`).
fn axpy_merge<E: Clone>(
    row_k: &[(u32, E)],
    row_r: &[(u32, E)],
    mut f: impl FnMut(Option<&E>, Option<&E>) -> Option<E>,
) -> Vec<(u32, E)> {
    let mut out = Vec::with_capacity(row_k.len() + row_r.len());
    let (mut i, mut j) = (0, 0);
    while i < row_k.len() && j < row_r.len() {
        let (ck, ek) = &row_k[i];
        let (cr, er) = &row_r[j];
        if ck < cr {
            if let Some(v) = f(Some(ek), None) {
                out.push((*ck, v));
            }
            i += 1;
        } else if ck > cr {
            if let Some(v) = f(None, Some(er)) {
                out.push((*cr, v));
            }
            j += 1;
        } else {
            if let Some(v) = f(Some(ek), Some(er)) {
                out.push((*ck, v));
            }
            i += 1;
            j += 1;
        }
    }
    for (ck, ek) in &row_k[i..] {
        if let Some(v) = f(Some(ek), None) {
            out.push((*ck, v));
        }
    }
    for (cr, er) in &row_r[j..] {
        if let Some(v) = f(None, Some(er)) {
            out.push((*cr, v));
        }
    }
    out
}

/// Shared elimination driver. `combine` must return `row_k` rewritten so that
/// the pivot column is exactly cancelled; `is_unit` guides pivot choice.
fn eliminate<E: Clone>(
    mut rows: Vec<Vec<(u32, E)>>,
    ncols: usize,
    is_unit: impl Fn(&E) -> bool,
    mut combine: impl FnMut(&[(u32, E)], &E, &[(u32, E)], &E) -> Vec<(u32, E)>,
) -> usize {
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    for (ri, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c as usize].push(ri as u32);
        }
    }
    let mut row_alive = vec![true; rows.len()];
    let mut col_alive = vec![true; ncols];
    let mut rank = 0usize;

    loop {
        // Lightest active column. Memberships are pushed eagerly and never
        // removed on row updates, so compact stale ids here: dead rows and
        // rows whose current form no longer touches the column.
        let mut best: Option<(usize, usize)> = None; // (occupancy, col)
        for c in 0..ncols {
            if !col_alive[c] {
                continue;
            }
            col_rows[c].retain(|&r| {
                row_alive[r as usize] && row_entry(&rows[r as usize], c as u32).is_some()
            });
            col_rows[c].sort_unstable();
            col_rows[c].dedup();
            let occ = col_rows[c].len();
            if occ == 0 {
                col_alive[c] = false;
                continue;
            }
            if best.map_or(true, |(b, _)| occ < b) {
                best = Some((occ, c));
                if occ == 1 {
                    break;
                }
            }
        }
        let Some((_, c)) = best else {
            return rank;
        };

        // Lightest row within the column, unit entries first.
        let mut pivot: Option<(u32, (bool, usize))> = None;
        for &r in &col_rows[c] {
            let entry = row_entry(&rows[r as usize], c as u32).expect("indexed entry");
            let key = (!is_unit(entry), rows[r as usize].len());
            if pivot.as_ref().map_or(true, |(_, best)| key < *best) {
                pivot = Some((r, key));
            }
        }
        let (r, _) = pivot.expect("nonempty column");
        let r = r as usize;

        rank += 1;
        row_alive[r] = false;
        col_alive[c] = false;
        let pivot_row = core::mem::take(&mut rows[r]);
        let a_rc = row_entry(&pivot_row, c as u32).expect("pivot entry").clone();

        let victims: Vec<u32> = col_rows[c]
            .iter()
            .copied()
            .filter(|&k| row_alive[k as usize])
            .collect();
        for k in victims {
            let k = k as usize;
            let a_kc = row_entry(&rows[k], c as u32).expect("victim entry").clone();
            let new_row = combine(&rows[k], &a_kc, &pivot_row, &a_rc);
            debug_assert!(row_entry(&new_row, c as u32).is_none(), "pivot column not cleared");
            for (col, _) in &new_row {
                // Membership checks are skipped; stale duplicates are cheap
                // and the retain pass above compacts them.
                col_rows[*col as usize].push(k as u32);
            }
            rows[k] = new_row;
        }
    }
}

fn row_entry<E>(row: &[(u32, E)], c: u32) -> Option<&E> {
    row.binary_search_by_key(&c, |(col, _)| *col)
        .ok()
        .map(|i| &row[i].1)
}
