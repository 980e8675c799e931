//! Subspaces of `K^n` kept in reduced row echelon form.

use super::field::Field;
use super::matrix::Matrix;

/// A subspace stored by a reduced echelon basis: `rows[i]` has a 1 in column
/// `pivots[i]` and zeros in every other pivot column.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![field.zero(); ambient];
            v[i] = field.one();
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn span<I: IntoIterator<Item = Vec<F::Elem>>>(field: &F, ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::span(m.field(), m.rows(), m.columns())
    }

    /// Null space of a matrix.
    pub fn kernel_of(m: &Matrix<F>) -> Self {
        Self::span(m.field(), m.cols(), m.kernel())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(&self.field, self.ambient, &self.rows)
    }

    /// `v` minus its projection along the pivot coordinates.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of a vector of the subspace in the echelon basis.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates without the membership check; correct only for members.
    pub fn coordinates_unchecked(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Add a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field.clone();
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in &mut self.rows {
            let c = row[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&v) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Standard basis positions spanning a complement.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in the quotient, relative to the
    /// complement from [`complement_positions`](Self::complement_positions).
    pub fn quotient_coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.reduce(v);
        self.complement_positions().into_iter().map(|i| r[i].clone()).collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        // Solve Σ a_i u_i = Σ b_j w_j.
        let f = &self.field;
        let (d1, d2) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(f, self.ambient, d1 + d2);
        for (i, u) in self.rows.iter().enumerate() {
            for (r, x) in u.iter().enumerate() {
                m.set(r, i, x.clone());
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for (r, x) in w.iter().enumerate() {
                m.set(r, d1 + j, f.neg(x));
            }
        }
        let vecs = m.kernel().into_iter().map(|k| {
            let mut v = vec![f.zero(); self.ambient];
            for (i, u) in self.rows.iter().enumerate() {
                for (x, y) in v.iter_mut().zip(u) {
                    *x = f.add(x, &f.mul(&k[i], y));
                }
            }
            v
        });
        Self::span(f, self.ambient, vecs.collect::<Vec<_>>())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }
}

/// Coordinates along a fixed family of vectors, modulo a subspace `U`.
#[derive(Clone, Debug)]
pub struct RelativeBasis<F: Field> {
    base: Subspace<F>,
    pivots: Vec<usize>,
    inverse: Matrix<F>,
}

impl<F: Field> RelativeBasis<F> {
    /// `reps` must be linearly independent modulo `base`.
    pub fn new(base: Subspace<F>, reps: &[Vec<F::Elem>]) -> Self {
        let f = base.field.clone();
        let rows: Vec<Vec<F::Elem>> = reps.iter().map(|r| base.reduce(r)).collect();
        if rows.is_empty() {
            return RelativeBasis { base, pivots: Vec::new(), inverse: Matrix::zeros(&f, 0, 0) };
        }
        let r = Matrix::from_rows(&f, &rows);
        let pivots = r.rref().pivots;
        assert_eq!(pivots.len(), rows.len(), "representatives are dependent modulo the subspace");
        let inverse = r.select_columns(&pivots).transpose().inverse().expect("pivot block is invertible");
        RelativeBasis { base, pivots, inverse }
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }
    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Coordinates of `w ∈ U + span(reps)`; meaningless for other vectors.
    pub fn coordinates(&self, w: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.base.reduce(w);
        let picked: Vec<F::Elem> = self.pivots.iter().map(|&p| r[p].clone()).collect();
        self.inverse.mul_vec(&picked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;

    #[test]
    fn insert_keeps_reduced_form() {
        let f = PrimeField::new(7);
        let mut s = Subspace::zero(&f, 3);
        assert!(s.insert(vec![0, 2, 4]));
        assert!(s.insert(vec![1, 1, 0]));
        assert!(!s.insert(vec![1, 2, 2]));
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.coordinates(&[1, 1, 0]).unwrap(), vec![1, 1]);
        assert_eq!(s.complement_positions(), vec![2]);
        assert_eq!(s.quotient_coordinates(&[0, 0, 3]), vec![3]);
    }

    #[test]
    fn intersection_of_planes() {
        let f = PrimeField::new(101);
        let a = Subspace::span(&f, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(&f, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[0, 5, 0]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn relative_coordinates() {
        let f = PrimeField::new(101);
        let u = Subspace::span(&f, 3, vec![vec![1, 1, 0]]);
        let rb = RelativeBasis::new(u, &[vec![0, 1, 0], vec![0, 0, 2]]);
        // (3, 5, 4) = 3(1,1,0) + 2(0,1,0) + 2(0,0,2)
        assert_eq!(rb.coordinates(&[3, 5, 4]), vec![2, 2]);
    }
}
