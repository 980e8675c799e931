//! Dense matrices over an exact field.

use std::fmt;

use super::field::Field;
use super::poly;

/// Row-major dense matrix. Entries are exact; there is no pivoting strategy
/// beyond "first nonzero", which is all exact arithmetic needs.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

/// Solution set of `a·x = b`.
#[derive(Clone, Debug)]
pub enum SolutionSet<F: Field> {
    Inconsistent,
    Solutions {
        /// One solution, `a.cols × b.cols`.
        particular: Matrix<F>,
        /// Basis of the kernel of `a`, each a vector of length `a.cols`.
        kernel: Vec<Vec<F::Elem>>,
    },
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows x cols");
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: &F, n: usize, c: &F::Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(field: &F, rows: &[Vec<F::Elem>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<F::Elem>> = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        if rows.is_empty() {
            return Self::zeros(field, 0, 0);
        }
        Self::from_rows(field, &rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        *o = f.add(o, &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &F::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if self.field.is_zero(c) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !self.field.is_zero(b) {
                *a = self.field.add(a, &self.field.mul(c, b));
            }
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let f = &self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diagonal(field: &F, blocks: &[Matrix<F>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend(self.row(r).iter().cloned());
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        Rref { reduced: m, pivots }
    }

    /// Row-reduce in place, choosing pivots only among the first
    /// `pivot_cols` columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..pivot_cols {
            if pr >= rows {
                break;
            }
            let Some(found) = (pr..rows).find(|&r| !f.is_zero(&self.data[r * cols + c])) else {
                continue;
            };
            if found != pr {
                for j in 0..cols {
                    self.data.swap(found * cols + j, pr * cols + j);
                }
            }
            let inv = f.inv(&self.data[pr * cols + c]).unwrap();
            if !f.is_one(&inv) {
                for j in c..cols {
                    let v = f.mul(&self.data[pr * cols + j], &inv);
                    self.data[pr * cols + j] = v;
                }
            }
            let (before, rest) = self.data.split_at_mut(pr * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for row in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = row[c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..cols {
                    if !f.is_zero(&pivot_row[j]) {
                        row[j] = f.sub(&row[j], &f.mul(&factor, &pivot_row[j]));
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Reduce whichever orientation is smaller in row count.
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        let mut m = self.clone();
        m.rref_in_place(self.cols).len()
    }

    /// Basis of the null space `{x : self·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Rref { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(reduced.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Kernel basis as column matrices.
    pub fn kernel_columns(&self) -> Vec<Matrix<F>> {
        self.kernel().into_iter().map(|v| Matrix::from_columns(&self.field, self.cols, &[v])).collect()
    }

    /// A basis of the column space, taken from the original columns.
    pub fn column_space(&self) -> Vec<Vec<F::Elem>> {
        let pivots = self.rref().pivots;
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    pub fn solve(&self, b: &Self) -> SolutionSet<F> {
        assert_eq!(self.rows, b.rows, "a.rows must equal b.rows");
        let f = &self.field;
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place(self.cols);
        for r in pivots.len()..self.rows {
            if (0..b.cols).any(|j| !f.is_zero(aug.get(r, self.cols + j))) {
                return SolutionSet::Inconsistent;
            }
        }
        let mut particular = Self::zeros(f, self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                particular.set(p, j, aug.get(r, self.cols + j).clone());
            }
        }
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(aug.get(r, free));
            }
            kernel.push(v);
        }
        SolutionSet::Solutions { particular, kernel }
    }

    /// Some `x` with `self·x = b`, if one exists.
    pub fn solve_one(&self, b: &Self) -> Option<Self> {
        match self.solve(b) {
            SolutionSet::Inconsistent => None,
            SolutionSet::Solutions { particular, .. } => Some(particular),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(&self.field, n));
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(x·I - self)`, constant term first,
    /// via reduction to Hessenberg form.
    pub fn charpoly(&self) -> Vec<F::Elem> {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        // Similarity transform to upper Hessenberg form.
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m + 1..n).chain(std::iter::once(m)).find(|&i| !f.is_zero(h.get(i, m - 1))) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let t = h.get(m, m - 1).clone();
            if f.is_zero(&t) {
                continue;
            }
            let tinv = f.inv(&t).unwrap();
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), &tinv);
                if f.is_zero(&u) {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(h.get(i, j), &f.mul(&u, h.get(m, j)));
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, m), &f.mul(&u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        // Recurrence on leading principal submatrices.
        let mut ps: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
        for m in 1..=n {
            let x_minus = vec![f.neg(h.get(m - 1, m - 1)), f.one()];
            let mut p = poly::mul(f, &x_minus, &ps[m - 1]);
            let mut t = f.one();
            for i in 1..m {
                t = f.mul(&t, h.get(m - i, m - i - 1));
                let c = f.mul(&t, h.get(m - i - 1, m - 1));
                let term: Vec<F::Elem> = ps[m - i - 1].iter().map(|x| f.mul(x, &c)).collect();
                p = poly::sub(f, &p, &term);
            }
            ps.push(p);
        }
        let mut out = ps.pop().unwrap();
        out.resize(n + 1, f.zero());
        out
    }
}

/// Rank and kernel basis in one call.
pub fn rref_rank_kernel<F: Field>(m: &Matrix<F>) -> (usize, Vec<Matrix<F>>) {
    let kernel = m.kernel_columns();
    (m.cols() - kernel.len(), kernel)
}

pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> SolutionSet<F> {
    a.solve(b)
}

pub fn kronecker<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.kronecker(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p)
    }

    #[test]
    fn identity_and_zero_ranks() {
        let f = gf(101);
        let (r, k) = rref_rank_kernel(&Matrix::identity(&f, 2));
        assert_eq!((r, k.len()), (2, 0));
        let (r, k) = rref_rank_kernel(&Matrix::zeros(&f, 2, 3));
        assert_eq!((r, k.len()), (0, 3));
    }

    #[test]
    fn rank_one_example() {
        let f = gf(101);
        let m = Matrix::from_i64(&f, &[&[1, 2], &[2, 4]]);
        let (r, k) = rref_rank_kernel(&m);
        assert_eq!((r, k.len()), (1, 1));
        assert!(m.mul(&k[0]).is_zero());
    }

    #[test]
    fn solve_examples() {
        let f = gf(5);
        let a = Matrix::from_i64(&f, &[&[1, 1]]);
        let b = Matrix::from_i64(&f, &[&[2]]);
        match a.solve(&b) {
            SolutionSet::Solutions { particular, kernel } => {
                assert_eq!(particular, Matrix::from_i64(&f, &[&[2], &[0]]));
                assert_eq!(kernel.len(), 1);
            }
            SolutionSet::Inconsistent => panic!("consistent system"),
        }
        let zero = Matrix::zeros(&f, 2, 2);
        match zero.solve(&Matrix::zeros(&f, 2, 1)) {
            SolutionSet::Solutions { kernel, .. } => assert_eq!(kernel.len(), 2),
            _ => panic!(),
        }
        let id = Matrix::identity(&f, 3);
        let b = Matrix::from_i64(&f, &[&[1], &[4], &[2]]);
        assert_eq!(id.solve_one(&b).unwrap(), b);
        let bad = Matrix::from_i64(&f, &[&[1, 1], &[1, 1]]);
        assert!(matches!(bad.solve(&Matrix::from_i64(&f, &[&[0], &[1]])), SolutionSet::Inconsistent));
    }

    #[test]
    fn kronecker_examples() {
        let f = gf(101);
        assert_eq!(Matrix::identity(&f, 2).kronecker(&Matrix::identity(&f, 3)), Matrix::identity(&f, 6));
        let a = Matrix::from_i64(&f, &[&[1, 2], &[3, 4]]);
        assert_eq!(a.kronecker(&Matrix::identity(&f, 1)), a);
        let n = Matrix::from_i64(&f, &[&[0, 1], &[0, 0]]);
        assert_eq!(n.kronecker(&n).rank(), 1);
    }

    #[test]
    fn charpoly_matches_cayley_hamilton() {
        let f = gf(101);
        let m = Matrix::from_i64(&f, &[&[2, 1, 0], &[0, 2, 5], &[7, 0, 3]]);
        let cp = m.charpoly();
        assert_eq!(cp.len(), 4);
        let mut acc = Matrix::zeros(&f, 3, 3);
        for (i, c) in cp.iter().enumerate() {
            acc.add_scaled(c, &m.pow(i));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn rational_inverse() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&q, 2));
    }
}
