//! Exact linear algebra over [`Scalar`] fields.
//!
//! Rows are dense `Vec<Scalar>`. Elimination is Gauss-Jordan; the pivot row
//! for a column is the one whose entry is cheapest to divide by. Reduced row
//! echelon form is unique, so the choice does not affect results.

use crate::coeff::{FieldSpec, Scalar};

pub type Row = Vec<Scalar>;

/// Incrementally maintained reduced system. Each stored row has a 1 at its
/// pivot column and zeros at every other pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<(usize, Row)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn reduce(&self, mut row: Row) -> Row {
        for (col, prow) in &self.rows {
            if row[*col].is_zero() {
                continue;
            }
            let f = row[*col].clone();
            for (j, v) in prow.iter().enumerate() {
                if !v.is_zero() {
                    row[j] = &row[j] - &(&f * v);
                }
            }
        }
        row
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: Row) -> bool {
        assert_eq!(row.len(), self.ncols);
        let row = self.reduce(row);
        let Some(col) = (0..self.ncols)
            .filter(|&j| !row[j].is_zero())
            .min_by_key(|&j| (row[j].weight(), j))
        else {
            return false;
        };
        let inv = row[col].inv().expect("pivot is nonzero");
        let row: Row = row.iter().map(|v| if v.is_zero() { v.clone() } else { v * &inv }).collect();
        for (_, other) in self.rows.iter_mut() {
            if other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    other[j] = &other[j] - &(&f * v);
                }
            }
        }
        self.rows.push((col, row));
        true
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &Row) -> bool {
        self.reduce(row.clone()).iter().all(Scalar::is_zero)
    }

    /// Basis of `{v : row·v = 0 for every inserted row}`, in reduced echelon form
    /// with pivots at the earliest coordinates.
    pub fn null_space(&self, field: &FieldSpec) -> Vec<Row> {
        let pivots: Vec<usize> = self.rows.iter().map(|(c, _)| *c).collect();
        let mut basis = Vec::new();
        for f in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![field.zero(); self.ncols];
            v[f] = field.one();
            for (c, row) in &self.rows {
                if !row[f].is_zero() {
                    v[*c] = -&row[f];
                }
            }
            basis.push(v);
        }
        rref(basis, self.ncols)
    }

    /// The inserted span in reduced row echelon form.
    pub fn basis(&self) -> Vec<Row> {
        rref(self.rows.iter().map(|(_, r)| r.clone()).collect(), self.ncols)
    }
}

/// Reduced row echelon form with leftmost pivots; zero rows are dropped.
pub fn rref(rows: Vec<Row>, ncols: usize) -> Vec<Row> {
    let mut rows: Vec<Row> = rows.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())).collect();
    let mut out_rank = 0;
    for col in 0..ncols {
        let Some(best) = (out_rank..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| (rows[i][col].weight(), i))
        else {
            continue;
        };
        rows.swap(out_rank, best);
        let inv = rows[out_rank][col].inv().expect("pivot is nonzero");
        let prow: Row = rows[out_rank].iter().map(|v| if v.is_zero() { v.clone() } else { v * &inv }).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == out_rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (j, v) in prow.iter().enumerate() {
                if !v.is_zero() {
                    row[j] = &row[j] - &(&f * v);
                }
            }
        }
        rows[out_rank] = prow;
        out_rank += 1;
        if out_rank == rows.len() {
            break;
        }
    }
    rows.truncate(out_rank);
    rows
}

pub fn rank(rows: &[Row], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).len()
}

/// Null space of a matrix given by rows.
pub fn null_space(rows: &[Row], ncols: usize, field: &FieldSpec) -> Vec<Row> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r.clone());
    }
    e.null_space(field)
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Row], b: &[Row], ncols: usize) -> bool {
    rref(a.to_vec(), ncols) == rref(b.to_vec(), ncols)
}

/// Solves `Σ_i c_i·vectors[i] = target`; `None` if `target` is outside the span.
/// With dependent `vectors` the solution having zero free coordinates is returned.
pub fn solve_combination(vectors: &[Row], target: &Row, field: &FieldSpec) -> Option<Vec<Scalar>> {
    let k = vectors.len();
    let dim = target.len();
    // Augmented system: one row per coordinate, columns are the unknowns plus the target.
    let rows: Vec<Row> = (0..dim)
        .map(|d| {
            let mut r: Row = vectors.iter().map(|v| v[d].clone()).collect();
            r.push(target[d].clone());
            r
        })
        .collect();
    let red = rref(rows, k + 1);
    let mut sol = vec![field.zero(); k];
    for row in &red {
        let pivot = row.iter().position(|v| !v.is_zero()).expect("nonzero row");
        if pivot == k {
            return None;
        }
        sol[pivot] = row[k].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        FieldSpec::rationals().from_i64(v)
    }

    #[test]
    fn null_space_of_small_matrix() {
        let f = FieldSpec::rationals();
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = null_space(&rows, 3, &f);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot = r.iter().zip(v).fold(q(0), |acc, (a, b)| &acc + &(a * b));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(ns[0][0], q(1));
        assert_eq!(ns[1][0], q(0));
        assert_eq!(rank(&rows, 3), 1);
    }

    #[test]
    fn combination_and_span() {
        let f = FieldSpec::rationals();
        let a = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        let t = vec![q(2), q(3), q(5)];
        assert_eq!(solve_combination(&a, &t, &f), Some(vec![q(2), q(3)]));
        assert_eq!(solve_combination(&a, &vec![q(1), q(1), q(1)], &f), None);
        let b = vec![vec![q(1), q(1), q(2)], vec![q(1), q(-1), q(0)]];
        assert!(same_span(&a, &b, 3));
    }

    #[test]
    fn symbolic_elimination() {
        let f = FieldSpec::functions(crate::coeff::BaseField::Rationals, vec!["a".into(), "b".into()]);
        let a = f.symbol("a").unwrap();
        let b = f.symbol("b").unwrap();
        let rows = vec![vec![a.clone(), b.clone()], vec![&a * &a, &a * &b]];
        let ns = null_space(&rows, 2, &f);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], f.one());
        assert_eq!(ns[0][1], -&(&a / &b));
    }
}
