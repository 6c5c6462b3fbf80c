//! Exact dense linear algebra over a number field K.
//!
//! Everything here is plain Gaussian elimination with exact scalars: no
//! floating point, no modular shortcuts. Pivots are chosen by a bit-size
//! heuristic and pivot rows are normalised, which keeps intermediate
//! entries small on the structured matrices this crate produces.

use crate::scalars::{Field, FieldScalar};

/// Reduced row echelon form, returning the pivot column of each row.
/// Zero rows are dropped.
pub fn rref(field: &Field, rows: &mut Vec<Vec<FieldScalar>>, cols: usize) -> Vec<usize> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut next_row = 0usize;
    for col in 0..cols {
        // pivot: smallest-weight nonzero entry in this column at or below next_row
        let mut best: Option<(usize, u64)> = None;
        for (i, row) in rows.iter().enumerate().skip(next_row) {
            let e = &row[col];
            if !e.is_zero() {
                let w = e.weight();
                if best.map_or(true, |(_, bw)| w < bw) {
                    best = Some((i, w));
                }
            }
        }
        let Some((pivot_row, _)) = best else { continue };
        rows.swap(next_row, pivot_row);
        // normalise
        let inv = rows[next_row][col].invert().expect("nonzero pivot");
        for j in col..cols {
            if !rows[next_row][j].is_zero() {
                rows[next_row][j] = &rows[next_row][j] * &inv;
            }
        }
        // eliminate everywhere else
        let (pre, rest) = rows.split_at_mut(next_row);
        let (pivot, post) = rest.split_first_mut().unwrap();
        for row in pre.iter_mut().chain(post.iter_mut()) {
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..cols {
                if !pivot[j].is_zero() {
                    let t = &factor * &pivot[j];
                    row[j] = &row[j] - &t;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    let _ = field;
    pivots
}

/// Rank of a matrix given as rows.
pub fn rank(field: &Field, mut rows: Vec<Vec<FieldScalar>>, cols: usize) -> usize {
    rref(field, &mut rows, cols).len()
}

/// Basis of the right nullspace of the matrix whose rows are constraints on
/// `cols` unknowns. Basis vectors are indexed by free columns in ascending
/// order, which fixes a deterministic "first" kernel element.
pub fn kernel_basis(
    field: &Field,
    mut rows: Vec<Vec<FieldScalar>>,
    cols: usize,
) -> Vec<Vec<FieldScalar>> {
    let pivots = rref(field, &mut rows, cols);
    let pivot_set: std::collections::BTreeMap<usize, usize> = pivots
        .iter()
        .enumerate()
        .map(|(row, &col)| (col, row))
        .collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains_key(&free) {
            continue;
        }
        let mut v = vec![FieldScalar::zero(field); cols];
        v[free] = FieldScalar::one(field);
        for (&pcol, &prow) in &pivot_set {
            if pcol < free {
                let e = &rows[prow][free];
                if !e.is_zero() {
                    v[pcol] = -e;
                }
            }
        }
        basis.push(v);
    }
    basis
}

/// An incrementally built row space with forward-reduced rows, used for
/// rank growth, span membership and deterministic basis completion.
pub struct Echelon {
    dim: usize,
    /// Rows sorted by pivot column; each row has a 1 at its pivot.
    rows: Vec<Vec<FieldScalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, dim: usize) -> Self {
        let _ = field;
        Echelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce_in_place(&self, v: &mut [FieldScalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let factor = v[p].clone();
            if factor.is_zero() {
                continue;
            }
            for j in p..self.dim {
                if !row[j].is_zero() {
                    let t = &factor * &row[j];
                    v[j] = &v[j] - &t;
                }
            }
        }
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<FieldScalar>) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce_in_place(&mut v);
        let Some(pivot) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = v[pivot].invert().expect("nonzero");
        for e in v.iter_mut().skip(pivot) {
            if !e.is_zero() {
                *e = &*e * &inv;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    /// True when the vector already lies in the span.
    pub fn contains(&self, v: &[FieldScalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|e| e.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::NumberFieldSpec;

    fn q() -> Field {
        NumberFieldSpec::rationals()
    }

    fn mat(field: &Field, data: &[&[i64]]) -> Vec<Vec<FieldScalar>> {
        data.iter()
            .map(|row| row.iter().map(|&v| FieldScalar::from_int(field, v)).collect())
            .collect()
    }

    #[test]
    fn rank_of_small_matrix() {
        let f = q();
        let rows = mat(&f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&f, rows, 3), 2);
    }

    #[test]
    fn kernel_of_rank_two() {
        let f = q();
        let rows = mat(&f, &[&[1, 0, 1], &[0, 1, -1]]);
        let ker = kernel_basis(&f, rows.clone(), 3);
        assert_eq!(ker.len(), 1);
        // every kernel vector annihilates every row
        for v in &ker {
            for row in &rows {
                let mut acc = FieldScalar::zero(&f);
                for (a, b) in row.iter().zip(v) {
                    acc = &acc + &(a * b);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn kernel_dimension_counts() {
        let f = q();
        // 2x4 rank-2 matrix: nullity 2
        let rows = mat(&f, &[&[1, 1, 0, 0], &[0, 0, 1, 5]]);
        let ker = kernel_basis(&f, rows, 4);
        assert_eq!(ker.len(), 2);
    }

    #[test]
    fn echelon_membership() {
        let f = q();
        let mut ech = Echelon::new(&f, 3);
        assert!(ech.insert(mat(&f, &[&[1, 2, 0]]).pop().unwrap()));
        assert!(ech.insert(mat(&f, &[&[0, 1, 1]]).pop().unwrap()));
        assert!(!ech.insert(mat(&f, &[&[1, 3, 1]]).pop().unwrap()));
        assert_eq!(ech.rank(), 2);
        assert!(ech.contains(&mat(&f, &[&[2, 5, 1]]).pop().unwrap()));
        assert!(!ech.contains(&mat(&f, &[&[0, 0, 1]]).pop().unwrap()));
    }

    #[test]
    fn kernel_over_quadratic_field() {
        let f = NumberFieldSpec::cyclotomic(3);
        let t = FieldScalar::generator(&f);
        let one = FieldScalar::one(&f);
        // row (t, 1): kernel spanned by (1, -t)
        let rows = vec![vec![t.clone(), one.clone()]];
        let ker = kernel_basis(&f, rows, 2);
        assert_eq!(ker.len(), 1);
        let acc = &(&t * &ker[0][0]) + &ker[0][1];
        assert!(acc.is_zero());
    }
}
