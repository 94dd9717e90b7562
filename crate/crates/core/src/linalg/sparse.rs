use std::collections::HashMap;

use super::field::Field;

/// Sparse vector: strictly increasing column indices with nonzero values.
pub type SparseRow<F> = Vec<(usize, <F as Field>::Elem)>;

/// Incremental row echelon basis for rank computations on large sparse matrices.
///
/// Rows are inserted one at a time and reduced against stored pivots by
/// their leading column only; the stored rows are never back-substituted.
pub struct SparseEchelon<F: Field> {
    field: F,
    pivots: HashMap<usize, SparseRow<F>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: &F) -> Self {
        SparseEchelon {
            field: field.clone(),
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, mut row: SparseRow<F>) -> bool {
        let f = &self.field;
        row.retain(|(_, v)| !f.is_zero(v));
        while let Some((lead, lead_val)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let factor = f.neg(&lead_val);
                    row = axpy(f, &row, &factor, pivot);
                }
                None => {
                    let inv = f.inv(&lead_val).expect("nonzero lead");
                    let normalized = row.into_iter().map(|(c, v)| (c, f.mul(&v, &inv))).collect();
                    self.pivots.insert(lead, normalized);
                    return true;
                }
            }
        }
        false
    }
}

/// `a + s * b` on sparse rows.
fn axpy<F: Field>(f: &F, a: &SparseRow<F>, s: &F::Elem, b: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.mul(s, &b[j].1)));
            j += 1;
        } else {
            let v = f.add_scaled(&a[i].1, s, &b[j].1);
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a matrix given by sparse rows (columns need not be sorted).
pub fn sparse_rank<F: Field>(field: &F, rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut ech = SparseEchelon::new(field);
    for mut row in rows {
        row.sort_by_key(|(c, _)| *c);
        ech.insert(merge_duplicates(field, row));
    }
    ech.rank()
}

/// Sums entries that share a column in a column-sorted row.
pub fn merge_duplicates<F: Field>(field: &F, row: SparseRow<F>) -> SparseRow<F> {
    let mut out: SparseRow<F> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = field.add(lv, &v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}
