use crate::vector::{primitive_int, rat_to_primitive_int};
use crate::{Int, Rat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MathError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must be rows*cols");
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| Int::from(x)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_int_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    /// Permutation matrix sending basis vector j to basis vector perm[j].
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = IntMatrix::zero(n, n);
        for (j, &img) in perm.iter().enumerate() {
            *m.at_mut(img, j) = Int::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * other.at(k, j);
                    *out.at_mut(i, j) += term;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| crate::dot_int(self.row(i), v)).collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    acc += Rat::from(a.clone()) * x;
                }
                acc
            })
            .collect()
    }

    /// Rank by fraction-free (Bareiss) elimination; all intermediate values
    /// stay integral.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (m, n) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * n + j;
        let mut prev = Int::one();
        let mut pivot_row = 0;
        for col in 0..n {
            if pivot_row == m {
                break;
            }
            let Some(found) = (pivot_row..m).find(|&i| !a[idx(i, col)].is_zero()) else {
                continue;
            };
            if found != pivot_row {
                for j in 0..n {
                    a.swap(idx(found, j), idx(pivot_row, j));
                }
            }
            let pivot = a[idx(pivot_row, col)].clone();
            for i in pivot_row + 1..m {
                let head = a[idx(i, col)].clone();
                for j in 0..n {
                    let v = (&a[idx(i, j)] * &pivot - &head * &a[idx(pivot_row, j)]) / &prev;
                    a[idx(i, j)] = v;
                }
            }
            prev = pivot;
            pivot_row += 1;
        }
        pivot_row
    }

    /// Reduced row echelon form over the rationals together with the pivot
    /// column list.
    pub fn rref(&self) -> (Vec<Vec<Rat>>, Vec<usize>) {
        let mut a: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        rref_in_place(&mut a, self.cols)
    }

    /// Canonical basis of the right kernel {v : M v = 0} as primitive integer
    /// vectors, one per free column in ascending column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Int>> {
        let (rr, pivots) = self.rref();
        let n = self.cols;
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rr[r][free].clone();
            }
            basis.push(rat_to_primitive_int(&v));
        }
        basis
    }

    /// Solve X * A = B exactly over the rationals. A is self. When the
    /// solution is underdetermined the free coordinates are set to zero.
    pub fn solve_right(&self, b: &IntMatrix) -> Result<RatMatrix, MathError> {
        if b.cols != self.cols {
            return Err(MathError::DimensionMismatch(format!(
                "X*A=B needs B with {} columns, got {}",
                self.cols, b.cols
            )));
        }
        // Transpose: A^T X^T = B^T, solved column by column of X^T.
        let at = self.transpose();
        let mut aug: Vec<Vec<Rat>> = (0..at.rows)
            .map(|i| at.row(i).iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        let bt = b.transpose();
        for i in 0..at.rows {
            for j in 0..bt.cols {
                aug[i].push(Rat::from(bt.at(i, j).clone()));
            }
        }
        let total = at.cols + bt.cols;
        let (rr, pivots) = rref_in_place(&mut aug, total);
        // Consistency: no pivot may sit in the augmented block.
        if pivots.iter().any(|&p| p >= at.cols) {
            return Err(MathError::NoSolution);
        }
        let mut xt = vec![vec![Rat::zero(); bt.cols]; at.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..bt.cols {
                xt[pc][j] = rr[r][at.cols + j].clone();
            }
        }
        // X = (X^T)^T, with shape rows(B) x rows(A).
        let mut x = vec![vec![Rat::zero(); self.rows]; b.rows];
        for (i, row) in xt.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                x[j][i] = v.clone();
            }
        }
        Ok(RatMatrix { data: x })
    }

    /// Canonical primitive basis of the row space: RREF rows scaled to
    /// primitive integer vectors.
    pub fn row_space_basis(&self) -> Vec<Vec<Int>> {
        let (rr, pivots) = self.rref();
        pivots
            .iter()
            .enumerate()
            .map(|(r, _)| rat_to_primitive_int(&rr[r]))
            .collect()
    }
}

fn rref_in_place(a: &mut Vec<Vec<Rat>>, width: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        if row == m {
            break;
        }
        let Some(found) = (row..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(found, row);
        let inv = a[row][col].clone();
        for v in a[row].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..m {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..a[i].len() {
                    let sub = &f * &a[row][j];
                    a[i][j] = &a[i][j] - &sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a.clone(), pivots)
}

/// Dense rational matrix; the result type of exact solves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    data: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn from_rows(data: Vec<Vec<Rat>>) -> Self {
        RatMatrix { data }
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.data.first().map_or(0, Vec::len)
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i]
    }

    /// Exact conversion to an integer matrix; None if any entry has a
    /// denominator.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let mut rows = Vec::with_capacity(self.rows());
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for v in row {
                if !v.denom().is_one() {
                    return None;
                }
                out.push(v.numer().clone());
            }
            rows.push(out);
        }
        Some(IntMatrix::from_int_rows(rows))
    }
}

/// Primitive integer generators for the kernel, filtered of zero rows.
pub fn kernel_primitive(m: &IntMatrix) -> Vec<Vec<Int>> {
    m.kernel_basis().into_iter().map(|v| primitive_int(&v)).collect()
}
