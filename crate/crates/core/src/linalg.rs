//! Dense exact matrices, fraction-free elimination, kernels and congruence
//! diagonalization.

use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).pivots.len()
    }

    /// Exact basis of `{x : M x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        Echelon::of(self).kernel()
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let ech = Echelon::of(self);
        if ech.pivots.len() < self.rows {
            return Scalar::zero();
        }
        // Bareiss: the last pivot is the determinant up to the row-swap sign,
        // divided by the row scaling applied to clear denominators.
        let last = ech.rows.len() - 1;
        let det = Scalar::from_integer(ech.rows[last][self.cols - 1].clone());
        let sign = if ech.swaps.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
        det * sign / Scalar::from_integer(ech.row_scale_product.clone())
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= t;
                    let t = &f * &inv[(col, j)];
                    inv[(r, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Integer row echelon form produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
    /// `(row, column)` of each pivot, in order.
    pivots: Vec<(usize, usize)>,
    swaps: usize,
    row_scale_product: BigInt,
}

impl Echelon {
    fn of(m: &Matrix) -> Self {
        let cols = m.cols;
        let mut row_scale_product = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| {
                let row = m.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row_scale_product *= &l;
                row.iter().map(|x| (x * Scalar::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                rows.swap(p, r);
                swaps += 1;
            }
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pv = &pivot_row[c];
            for row in tail.iter_mut() {
                let f = row[c].clone();
                for j in c + 1..cols {
                    let num = pv * &row[j] - &f * &pivot_row[j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    row[j] = q;
                }
                row[c] = BigInt::zero();
            }
            // Rows above the pivot row keep their values; only the block below is updated.
            prev = pv.clone();
            pivots.push((r, c));
            r += 1;
        }
        // Rows that received no pivot are zero by construction.
        Self { rows, cols, pivots, swaps, row_scale_product }
    }

    fn kernel(&self) -> Vec<Vec<Scalar>> {
        let pivot_cols: Vec<usize> = self.pivots.iter().map(|&(_, c)| c).collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for &(r, c) in self.pivots.iter().rev() {
                    let s = ((c + 1)..self.cols)
                        .filter(|&j| !self.rows[r][j].is_zero() && !v[j].is_zero())
                        .fold(Scalar::zero(), |acc, j| {
                            acc + Scalar::from_integer(self.rows[r][j].clone()) * &v[j]
                        });
                    v[c] = -s / Scalar::from_integer(self.rows[r][c].clone());
                }
                v
            })
            .collect()
    }
}

/// Rank of a family of vectors.
pub fn span_rank(vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// A basis (reduced row echelon form) of the span of `vectors` in dimension `dim`.
pub fn span_basis(vectors: &[Vec<Scalar>], dim: usize) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut basis = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let pv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &pv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..dim {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    basis.extend(rows.into_iter().take(r));
    basis
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span_rank(&all) == span_rank(basis)
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, by rational
/// congruence diagonalization.
pub fn inertia(sym: &Matrix) -> (usize, usize, usize) {
    assert!(sym.is_symmetric(), "inertia needs a symmetric matrix");
    let n = sym.rows;
    let mut a = sym.clone();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // a_kk = a_jj = 0, a_kj ≠ 0: replace e_k by e_k + e_j.
                for i in 0..n {
                    let t = a[(j, i)].clone();
                    a[(k, i)] += t;
                }
                for i in 0..n {
                    let t = a[(i, j)].clone();
                    a[(i, k)] += t;
                }
            }
        }
        let p = a[(k, k)].clone();
        if p.is_zero() {
            diag.push(p);
            continue;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &p;
            for j in k..n {
                let t = &f * &a[(k, j)];
                a[(i, j)] -= t;
            }
            for j in k..n {
                let t = &f * &a[(j, k)];
                a[(j, i)] -= t;
            }
        }
        diag.push(p);
    }
    let pos = diag.iter().filter(|d| d.is_positive()).count();
    let neg = diag.iter().filter(|d| d.is_negative()).count();
    (pos, neg, n - pos - neg)
}

fn swap_sym(a: &mut Matrix, i: usize, j: usize) {
    a.swap_rows(i, j);
    for r in 0..a.rows {
        a.data.swap(r * a.cols + i, r * a.cols + j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(Matrix::identity(5).kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = Matrix::zeros(4, 4).kernel_basis();
        assert_eq!(k.len(), 4);
        assert_eq!(span_rank(&k), 4);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = Matrix::from_rows(vec![
            vec![int(1), int(2), int(3), int(4)],
            vec![ratio(1, 2), int(1), ratio(3, 2), int(2)],
            vec![int(0), int(1), int(-1), ratio(1, 3)],
        ]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(−6−20) − (−1)(−2−0) + 0 = −52 − 2 = −54
        assert_eq!(a.determinant(), int(-54));
        let b = Matrix::from_rows(vec![vec![ratio(1, 2), int(1)], vec![int(3), ratio(1, 3)]]);
        assert_eq!(b.determinant(), ratio(1, 6) - int(3));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), int(0));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 0, 0], &[0, 0, -1], &[0, -1, 0]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert_eq!(inv[(0, 0)], ratio(1, 2));
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn inertia_of_split_forms() {
        assert_eq!(inertia(&m(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(inertia(&m(&[&[2, 0, 0], &[0, 0, -1], &[0, -1, 0]])), (2, 1, 0));
        assert_eq!(inertia(&m(&[&[1, 0], &[0, 0]])), (1, 0, 1));
        assert_eq!(inertia(&m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])), (2, 1, 0));
    }

    #[test]
    fn span_helpers() {
        let v = vec![vec![int(1), int(1), int(0)], vec![int(2), int(2), int(0)], vec![int(0), int(0), int(1)]];
        assert_eq!(span_rank(&v), 2);
        let b = span_basis(&v, 3);
        assert_eq!(b.len(), 2);
        assert!(in_span(&b, &[int(3), int(3), int(-7)]));
        assert!(!in_span(&b, &[int(1), int(0), int(0)]));
    }
}
