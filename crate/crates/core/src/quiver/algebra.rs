//! Finite-dimensional bound quiver algebras as explicit multiplication tables.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

use super::constructions::{lambda_k_shape, LambdaKShape};
use super::groebner::{groebner_basis, Poly, Word};
use super::presentation::{AlgebraPresentation, Quiver, Relation};

/// Default cap on the length of normal paths and Gröbner tips.
pub const DEFAULT_PATH_CAP: usize = 64;

/// Sparse vector over the path basis, sorted by index.
pub type Sparse<E> = Vec<(usize, E)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPath {
    pub word: Vec<usize>,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
}

/// `KQ/I` with a path basis and the right action of arrows on it.
///
/// The first `n` basis elements are the trivial paths `e_0 .. e_{n-1}`.
/// Every product is computed as a chain of right multiplications by
/// arrows, which is the only table stored.
pub struct BoundQuiverAlgebra<F: Field> {
    field: F,
    presentation: AlgebraPresentation,
    basis: Vec<BasisPath>,
    index: HashMap<(usize, Vec<usize>), usize>,
    right: Vec<Sparse<F::Elem>>,
    fingerprint: u64,
    opposite: OnceLock<Arc<BoundQuiverAlgebra<F>>>,
    origin: Weak<BoundQuiverAlgebra<F>>,
    structure: OnceLock<Option<(LambdaKShape, Algebra<F>)>>,
    gorenstein_dim: OnceLock<Option<usize>>,
}

pub type Algebra<F> = Arc<BoundQuiverAlgebra<F>>;

impl<F: Field> fmt::Debug for BoundQuiverAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("vertices", &self.quiver().vertices)
            .field("arrows", &self.quiver().num_arrows())
            .field("dim", &self.dim())
            .finish()
    }
}

impl<F: Field> PartialEq for BoundQuiverAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.basis == other.basis
    }
}

impl<F: Field> BoundQuiverAlgebra<F> {
    pub fn build(field: &F, presentation: &AlgebraPresentation) -> Result<Algebra<F>> {
        Self::build_with_cap(field, presentation, DEFAULT_PATH_CAP)
    }

    pub fn build_with_cap(field: &F, presentation: &AlgebraPresentation, cap: usize) -> Result<Algebra<F>> {
        presentation.validate()?;
        let q = &presentation.quiver;
        let gb = groebner_basis(field, &presentation.relations, cap)?;

        let mut basis: Vec<BasisPath> =
            (0..q.num_vertices()).map(|v| BasisPath { word: vec![], source: v, target: v, degree: 0 }).collect();
        let mut layer: Vec<usize> = (0..basis.len()).collect();
        let mut length = 0;
        while !layer.is_empty() {
            length += 1;
            if length > cap {
                return Err(Error::NonAdmissible { cap });
            }
            let mut next = Vec::new();
            for &b in &layer {
                let bp = basis[b].clone();
                for (a, arrow) in q.arrows.iter().enumerate() {
                    if arrow.source != bp.target {
                        continue;
                    }
                    let mut word = bp.word.clone();
                    word.push(a);
                    if gb.has_tip_suffix(&word) {
                        continue;
                    }
                    next.push(BasisPath { word, source: bp.source, target: arrow.target, degree: bp.degree + arrow.degree });
                }
            }
            next.sort_by(|x, y| x.word.cmp(&y.word));
            layer = (basis.len()..basis.len() + next.len()).collect();
            basis.extend(next);
        }
        let index = build_index(&basis);

        let na = q.num_arrows();
        let mut right = vec![Vec::new(); basis.len() * na];
        for (b, bp) in basis.iter().enumerate() {
            for (a, arrow) in q.arrows.iter().enumerate() {
                if arrow.source != bp.target {
                    continue;
                }
                let mut word = bp.word.clone();
                word.push(a);
                let nf = gb.reduce(Poly::from([(Word(word), field.one())]));
                let mut v: Sparse<F::Elem> = nf
                    .into_iter()
                    .map(|(w, c)| (*index.get(&(bp.source, w.0)).expect("normal word outside basis"), c))
                    .collect();
                v.sort_by_key(|t| t.0);
                right[b * na + a] = v;
            }
        }
        Ok(Arc::new(Self::assemble(field.clone(), presentation.clone(), basis, index, right, Weak::new())))
    }

    fn assemble(
        field: F,
        presentation: AlgebraPresentation,
        basis: Vec<BasisPath>,
        index: HashMap<(usize, Vec<usize>), usize>,
        right: Vec<Sparse<F::Elem>>,
        origin: Weak<Self>,
    ) -> Self {
        let mut h = DefaultHasher::new();
        presentation.quiver.hash(&mut h);
        basis.hash(&mut h);
        for entry in &right {
            entry.len().hash(&mut h);
            for (i, c) in entry {
                i.hash(&mut h);
                field.format(c).hash(&mut h);
            }
        }
        BoundQuiverAlgebra {
            field,
            presentation,
            basis,
            index,
            right,
            fingerprint: h.finish(),
            opposite: OnceLock::new(),
            origin,
            structure: OnceLock::new(),
            gorenstein_dim: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }
    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }
    pub fn num_vertices(&self) -> usize {
        self.presentation.quiver.num_vertices()
    }
    pub fn num_arrows(&self) -> usize {
        self.presentation.quiver.num_arrows()
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn basis_index(&self, source: usize, word: &[usize]) -> Option<usize> {
        self.index.get(&(source, word.to_vec())).copied()
    }

    /// Basis index of the single-arrow path.
    pub fn arrow_basis(&self, a: usize) -> usize {
        self.basis_index(self.quiver().arrows[a].source, &[a]).expect("arrows are normal words")
    }

    /// `b · a` for a basis element and an arrow.
    pub fn right_arrow(&self, b: usize, a: usize) -> &Sparse<F::Elem> {
        &self.right[b * self.num_arrows() + a]
    }

    /// Basis elements `e_u A e_v`.
    pub fn paths_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].source == u && self.basis[b].target == v).collect()
    }

    /// `x · a` for a dense element `x`.
    pub fn mul_arrow(&self, x: &[F::Elem], a: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (b, c) in x.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (i, y) in self.right_arrow(b, a) {
                out[*i] = f.add(&out[*i], &f.mul(c, y));
            }
        }
        out
    }

    pub fn unit_vector(&self, b: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[b] = self.field.one();
        v
    }

    /// The element represented by a word (which need not be normal).
    pub fn word_element(&self, source: usize, word: &[usize]) -> Vec<F::Elem> {
        let mut x = self.unit_vector(source);
        for &a in word {
            x = self.mul_arrow(&x, a);
        }
        x
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (j, c) in y.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let bp = &self.basis[j];
            let mut t: Vec<F::Elem> = x
                .iter()
                .enumerate()
                .map(|(i, xi)| if self.basis[i].target == bp.source { xi.clone() } else { f.zero() })
                .collect();
            for &a in &bp.word {
                t = self.mul_arrow(&t, a);
            }
            for (o, ti) in out.iter_mut().zip(&t) {
                if !f.is_zero(ti) {
                    *o = f.add(o, &f.mul(c, ti));
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<F::Elem> {
        self.mul(&self.unit_vector(i), &self.unit_vector(j))
    }

    /// Evaluate a relation in the algebra.
    pub fn relation_element(&self, rel: &Relation) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (c, w) in &rel.terms {
            let (s, _) = self.quiver().word_endpoints(w).expect("validated relation");
            let x = self.word_element(s, w);
            let c = f.from_i64(*c);
            for (o, xi) in out.iter_mut().zip(&x) {
                *o = f.add(o, &f.mul(&c, xi));
            }
        }
        out
    }

    /// Matrix of right multiplication by `y` in the path basis.
    pub fn right_mult_matrix(&self, y: &[F::Elem]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F::Elem>> = (0..n).map(|i| self.mul(&self.unit_vector(i), y)).collect();
        Matrix::from_columns(&self.field, n, &cols)
    }

    /// `dim e_u A e_v`, indexed `[u][v]`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for b in &self.basis {
            c[b.source][b.target] += 1;
        }
        c
    }

    pub fn max_degree(&self) -> i64 {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    /// For `Λ_k = Λ ⊗ K[X]/(X^k)`, the detected shape and the algebra `Λ`.
    pub fn lambda_k_structure(&self) -> Option<(&LambdaKShape, &Algebra<F>)> {
        self.structure
            .get_or_init(|| {
                let shape = lambda_k_shape(&self.presentation)?;
                let base = BoundQuiverAlgebra::build(&self.field, &shape.base).ok()?;
                Some((shape, base))
            })
            .as_ref()
            .map(|(s, b)| (s, b))
    }

    /// Memo slot for the Gorenstein dimension (filled by the gorenstein module).
    pub(crate) fn gorenstein_dim_cache(&self) -> &OnceLock<Option<usize>> {
        &self.gorenstein_dim
    }

    /// The opposite algebra: reversed quiver, reversed words, same basis order.
    pub fn opposite(self: &Arc<Self>) -> Algebra<F> {
        if let Some(o) = self.origin.upgrade() {
            return o;
        }
        self.opposite.get_or_init(|| Arc::new(self.build_opposite())).clone()
    }

    fn build_opposite(self: &Arc<Self>) -> Self {
        let q = self.quiver();
        let mut quiver = q.clone();
        for a in &mut quiver.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        let relations = self
            .presentation
            .relations
            .iter()
            .map(|r| Relation { terms: r.terms.iter().map(|(c, w)| (*c, w.iter().rev().copied().collect())).collect() })
            .collect();
        let presentation = AlgebraPresentation { field: self.presentation.field, quiver, relations };
        let basis: Vec<BasisPath> = self
            .basis
            .iter()
            .map(|b| BasisPath { word: b.word.iter().rev().copied().collect(), source: b.target, target: b.source, degree: b.degree })
            .collect();
        let index = build_index(&basis);
        let na = q.num_arrows();
        let mut right = vec![Vec::new(); basis.len() * na];
        for (b, bp) in self.basis.iter().enumerate() {
            for (a, arrow) in q.arrows.iter().enumerate() {
                // In the opposite algebra b·a is a·b computed in this one.
                if arrow.target != bp.source {
                    continue;
                }
                let mut x = self.unit_vector(self.arrow_basis(a));
                for &c in &bp.word {
                    x = self.mul_arrow(&x, c);
                }
                right[b * na + a] =
                    x.into_iter().enumerate().filter(|(_, c)| !self.field.is_zero(c)).collect();
            }
        }
        Self::assemble(self.field.clone(), presentation, basis, index, right, Arc::downgrade(self))
    }
}

fn build_index(basis: &[BasisPath]) -> HashMap<(usize, Vec<usize>), usize> {
    basis.iter().enumerate().map(|(i, b)| ((b.source, b.word.clone()), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::quiver::presentation::parse_quiver_spec;

    fn build(text: &str) -> Algebra<PrimeField> {
        BoundQuiverAlgebra::build(&PrimeField::new(101), &parse_quiver_spec(text).unwrap()).unwrap()
    }

    #[test]
    fn ka2_has_three_paths() {
        let a = build("vertices: 1 2\narrow a: 1 -> 2\n");
        assert_eq!(a.dim(), 3);
        assert_eq!(a.basis()[2].word, vec![0]);
    }

    #[test]
    fn truncated_polynomial_ring() {
        let a = build("vertices: v\narrow x: v -> v deg=1\nrelation x.x.x\n");
        assert_eq!(a.dim(), 3);
        assert_eq!(a.max_degree(), 2);
    }

    #[test]
    fn cyclic_quiver_without_relations_is_rejected() {
        let p = parse_quiver_spec("vertices: v\narrow x: v -> v\n").unwrap();
        let err = BoundQuiverAlgebra::build_with_cap(&PrimeField::new(101), &p, 10).unwrap_err();
        assert_eq!(err, Error::NonAdmissible { cap: 10 });
    }

    #[test]
    fn opposite_round_trip() {
        let a = build("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a.b\n");
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        assert_eq!(op.quiver().arrows[0].source, 1);
        assert!(Arc::ptr_eq(&op.opposite(), &a));
    }

    #[test]
    fn relations_vanish() {
        let a = build(
            "vertices: 1 2\narrow a: 1 -> 2\narrow x: 1 -> 1 deg=1\narrow y: 2 -> 2 deg=1\nrelation x.x\nrelation y.y\nrelation x.a -a.y\n",
        );
        assert_eq!(a.dim(), 6);
        for r in &a.presentation().relations {
            assert!(a.relation_element(r).iter().all(|c| *c == 0));
        }
    }
}
