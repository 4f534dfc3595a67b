//! Dense matrices over F_{q^r} with exact Gauss-Jordan elimination.

use std::sync::Arc;

use crate::gf::{Felt, Field};

#[derive(Clone)]
pub struct FMatrix {
    pub field: Arc<Field>,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Felt>,
}

impl FMatrix {
    pub fn zero(field: Arc<Field>, rows: usize, cols: usize) -> FMatrix {
        FMatrix {
            field,
            rows,
            cols,
            data: vec![Felt::ZERO; rows * cols],
        }
    }

    pub fn from_rows(field: Arc<Field>, rows: Vec<Vec<Felt>>) -> FMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend_from_slice(r);
        }
        FMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn identity(field: Arc<Field>, n: usize) -> FMatrix {
        let mut m = FMatrix::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = Felt::ONE;
        }
        m
    }

    pub fn row(&self, i: usize) -> &[Felt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Felt> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Felt> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// In-place reduction to reduced row echelon form.
    /// Returns the rank and the pivot columns.
    pub fn rref(&mut self) -> (usize, Vec<usize>) {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..self.cols {
            if pr >= self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&i| !self[(i, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(pr, sel);
            let inv = f.inv(self[(pr, col)]);
            for j in col..self.cols {
                let v = f.mul(inv, self[(pr, j)]);
                self[(pr, j)] = v;
            }
            for i in 0..self.rows {
                if i == pr || self[(i, col)].is_zero() {
                    continue;
                }
                let factor = self[(i, col)];
                for j in col..self.cols {
                    let v = f.sub(self[(i, j)], f.mul(factor, self[(pr, j)]));
                    self[(i, j)] = v;
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (pr, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().0
    }

    /// Basis of { v : M v = 0 }, one row per free column, in RREF.
    pub fn nullspace(&self) -> FMatrix {
        let mut m = self.clone();
        let (_, pivots) = m.rref();
        let f = self.field.clone();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Felt::ZERO; self.cols];
            v[fc] = Felt::ONE;
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[(pr, fc)]);
            }
            rows.push(v);
        }
        let mut ns = FMatrix::from_rows(f, rows);
        if ns.rows == 0 {
            ns.cols = self.cols;
        }
        ns.rref();
        ns
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// M * v for a column vector v.
    pub fn mul_vec(&self, v: &[Felt]) -> Vec<Felt> {
        let f = &*self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = Felt::ZERO;
                for (j, &x) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(self[(i, j)], x));
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.rows);
        let f = self.field.clone();
        let mut out = FMatrix::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }
}

impl std::ops::Index<(usize, usize)> for FMatrix {
    type Output = Felt;
    fn index(&self, (i, j): (usize, usize)) -> &Felt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Felt {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
