//! Representations of bound quivers and the maps between them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Subspace};
use crate::quiver::Algebra;

use super::cover::Presentation;

/// A right module given by a space at each vertex and a matrix per arrow.
///
/// The matrix of an arrow `a: s -> t` has `dims[t]` rows and `dims[s]`
/// columns, so a path `a1 … am` acts as `M_am ⋯ M_a1`.
#[derive(Clone)]
pub struct Representation<F: Field> {
    algebra: Algebra<F>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
    actions: OnceLock<Arc<Vec<Matrix<F>>>>,
    presentation: OnceLock<Arc<Presentation<F>>>,
}

impl<F: Field> fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation{:?}", self.dims)?;
        if f.alternate() {
            for (a, m) in self.maps.iter().enumerate() {
                write!(f, "\n  {}: {:?}", self.algebra.quiver().arrows[a].label, m)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Representation<F> {
    /// Checks matrix shapes; use [`check_representation`] for the relations.
    pub fn new(algebra: Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() {
            return Err(Error::Dimension(format!("{} vertex dimensions for {} vertices", dims.len(), q.num_vertices())));
        }
        if maps.len() != q.num_arrows() {
            return Err(Error::Dimension(format!("{} matrices for {} arrows", maps.len(), q.num_arrows())));
        }
        for (a, m) in maps.iter().enumerate() {
            let arrow = &q.arrows[a];
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::Dimension(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    arrow.label,
                    dims[arrow.target],
                    dims[arrow.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self::from_parts(algebra, dims, maps))
    }

    /// Shapes and relations both checked.
    pub fn new_checked(algebra: Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let m = Self::new(algebra, dims, maps)?;
        let bad = check_representation(&m);
        if !bad.is_empty() {
            let q = m.algebra.quiver();
            let names: Vec<String> = bad
                .iter()
                .map(|&r| {
                    let rel = &m.algebra.presentation().relations[r];
                    rel.terms.iter().map(|(c, w)| format!("{:+}*{}", c, q.format_word(w))).collect::<Vec<_>>().join(" ")
                })
                .collect();
            return Err(Error::Dimension(format!("relations not satisfied: {}", names.join("; "))));
        }
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Representation { algebra, dims, maps, actions: OnceLock::new(), presentation: OnceLock::new() }
    }

    pub fn zero(algebra: &Algebra<F>) -> Self {
        let q = algebra.quiver();
        let maps = q.arrows.iter().map(|_| Matrix::zeros(algebra.field(), 0, 0)).collect();
        Self::from_parts(algebra.clone(), vec![0; q.num_vertices()], maps)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn map(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }
    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// Action of every path basis element (`dims[t] × dims[s]`).
    pub fn basis_actions(&self) -> &[Matrix<F>] {
        self.actions.get_or_init(|| {
            let alg = &self.algebra;
            let f = alg.field();
            let mut out: Vec<Matrix<F>> = Vec::with_capacity(alg.dim());
            for bp in alg.basis() {
                let m = match bp.word.split_last() {
                    None => Matrix::identity(f, self.dims[bp.source]),
                    Some((&last, init)) => {
                        let prefix = alg.basis_index(bp.source, init).expect("prefix of a normal word is normal");
                        self.maps[last].mul(&out[prefix])
                    }
                };
                out.push(m);
            }
            Arc::new(out)
        })
    }

    pub fn basis_action(&self, b: usize) -> &Matrix<F> {
        &self.basis_actions()[b]
    }

    /// Action of an arbitrary word starting at `source`.
    pub fn word_action(&self, source: usize, word: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.field(), self.dims[source]);
        for &a in word {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of the `e_s A e_t` part of a dense algebra element.
    pub fn element_action(&self, x: &[F::Elem], s: usize, t: usize) -> Matrix<F> {
        let f = self.field();
        let mut out = Matrix::zeros(f, self.dims[t], self.dims[s]);
        for (b, c) in x.iter().enumerate() {
            let bp = &self.algebra.basis()[b];
            if f.is_zero(c) || bp.source != s || bp.target != t {
                continue;
            }
            out.add_scaled(c, self.basis_action(b));
        }
        out
    }

    pub(crate) fn cached_presentation(&self) -> &OnceLock<Arc<Presentation<F>>> {
        &self.presentation
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }

    /// Submodule spanned by invariant subspaces, one per vertex.
    pub fn submodule(&self, subs: &[Subspace<F>]) -> Self {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = subs.iter().map(|s| s.dim()).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vec<F::Elem>> = subs[arrow.source]
                    .basis()
                    .iter()
                    .map(|u| subs[arrow.target].coordinates_unchecked(&self.maps[a].mul_vec(u)))
                    .collect();
                Matrix::from_columns(self.field(), dims[arrow.target], &cols)
            })
            .collect();
        Self::from_parts(self.algebra.clone(), dims, maps)
    }

    /// Quotient by invariant subspaces. The quotient basis at each vertex is
    /// the complement given by the non-pivot coordinates.
    pub fn quotient(&self, subs: &[Subspace<F>]) -> Self {
        let q = self.algebra.quiver();
        let f = self.field();
        let comps: Vec<Vec<usize>> = subs.iter().map(|s| s.complement_positions()).collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vec<F::Elem>> = comps[arrow.source]
                    .iter()
                    .map(|&i| subs[arrow.target].quotient_coordinates(&self.maps[a].column(i)))
                    .collect();
                Matrix::from_columns(f, dims[arrow.target], &cols)
            })
            .collect();
        Self::from_parts(self.algebra.clone(), dims, maps)
    }

    /// Same module transported along invertible per-vertex base changes
    /// `g_v` (new coordinates = `g_v` · old coordinates).
    pub fn base_change(&self, g: &[Matrix<F>]) -> Result<Self> {
        let inv: Vec<Matrix<F>> = g
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::Dimension("base change is not invertible".into())))
            .collect::<Result<_>>()?;
        let q = self.algebra.quiver();
        let maps = q.arrows.iter().enumerate().map(|(a, ar)| g[ar.target].mul(&self.maps[a]).mul(&inv[ar.source])).collect();
        Ok(Self::from_parts(self.algebra.clone(), self.dims.clone(), maps))
    }

    /// Same data viewed over an equal algebra object.
    pub fn with_algebra(&self, algebra: &Algebra<F>) -> Result<Self> {
        if **algebra != *self.algebra {
            return Err(Error::Shape("module belongs to a different algebra".into()));
        }
        Ok(Self::from_parts(algebra.clone(), self.dims.clone(), self.maps.clone()))
    }
}

/// Indices of relations that do not vanish on the representation.
pub fn check_representation<F: Field>(m: &Representation<F>) -> Vec<usize> {
    let alg = m.algebra();
    let q = alg.quiver();
    let f = m.field();
    let mut bad = Vec::new();
    for (r, rel) in alg.presentation().relations.iter().enumerate() {
        let (s, t) = q.word_endpoints(&rel.terms[0].1).unwrap();
        let mut acc = Matrix::zeros(f, m.dim(t), m.dim(s));
        for (c, w) in &rel.terms {
            acc.add_scaled(&f.from_i64(*c), &m.word_action(s, w));
        }
        if !acc.is_zero() {
            bad.push(r);
        }
    }
    bad
}

pub fn direct_sum<F: Field>(algebra: &Algebra<F>, parts: &[&Representation<F>]) -> Representation<F> {
    let q = algebra.quiver();
    let f = algebra.field();
    let n = q.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim(v)).sum()).collect();
    let maps = (0..q.num_arrows()).map(|a| Matrix::block_diagonal(f, &parts.iter().map(|p| p.map(a).clone()).collect::<Vec<_>>())).collect();
    Representation::from_parts(algebra.clone(), dims, maps)
}

/// A homomorphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap<F: Field> {
    pub components: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(m: &Representation<F>, n: &Representation<F>) -> Self {
        let f = m.field();
        ModuleMap { components: (0..m.dims().len()).map(|v| Matrix::zeros(f, n.dim(v), m.dim(v))).collect() }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        let f = m.field();
        ModuleMap { components: m.dims().iter().map(|&d| Matrix::identity(f, d)).collect() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        ModuleMap { components: self.components.iter().zip(&other.components).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleMap { components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        ModuleMap { components: self.components.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|m| m.rank()).sum()
    }

    pub fn is_intertwiner(&self, m: &Representation<F>, n: &Representation<F>) -> bool {
        let q = m.algebra().quiver();
        if self.components.len() != q.num_vertices() {
            return false;
        }
        for (v, c) in self.components.iter().enumerate() {
            if c.rows() != n.dim(v) || c.cols() != m.dim(v) {
                return false;
            }
        }
        q.arrows.iter().enumerate().all(|(a, ar)| {
            n.map(a).mul(&self.components[ar.source]) == self.components[ar.target].mul(m.map(a))
        })
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(|c| c.is_invertible())
    }

    pub fn inverse(&self) -> Option<Self> {
        Some(ModuleMap { components: self.components.iter().map(|c| c.inverse()).collect::<Option<_>>()? })
    }

    pub fn kernel(&self) -> Vec<Subspace<F>> {
        self.components.iter().map(Subspace::kernel_of).collect()
    }

    pub fn image(&self) -> Vec<Subspace<F>> {
        self.components.iter().map(Subspace::column_space).collect()
    }

    /// All entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<F::Elem> {
        self.components.iter().flat_map(|c| c.data().iter().cloned()).collect()
    }

    pub fn from_flat(field: &F, m: &Representation<F>, n: &Representation<F>, v: &[F::Elem]) -> Self {
        let mut at = 0;
        let components = (0..m.dims().len())
            .map(|x| {
                let (r, c) = (n.dim(x), m.dim(x));
                let data = v[at..at + r * c].to_vec();
                at += r * c;
                Matrix::new(field.clone(), r, c, data)
            })
            .collect();
        ModuleMap { components }
    }
}

/// Linear combination of maps.
pub fn combine<F: Field>(field: &F, maps: &[ModuleMap<F>], coeffs: &[F::Elem]) -> Option<ModuleMap<F>> {
    let mut it = maps.iter().zip(coeffs);
    let (m0, c0) = it.next()?;
    let mut acc = m0.scale(c0);
    for (m, c) in it {
        if !field.is_zero(c) {
            acc = acc.add(&m.scale(c));
        }
    }
    Some(acc)
}

/// Kernel of a map as a submodule of its source, with its embedding.
pub fn kernel_module<F: Field>(f: &ModuleMap<F>, source: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
    let subs = f.kernel();
    let k = source.submodule(&subs);
    let emb = ModuleMap { components: subs.iter().map(|s| s.basis_matrix()).collect() };
    (k, emb)
}

/// Cokernel of a map, with the projection from its target.
pub fn cokernel_module<F: Field>(f: &ModuleMap<F>, target: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
    let subs = f.image();
    let c = target.quotient(&subs);
    let field = target.field();
    let proj = ModuleMap {
        components: subs
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let cols: Vec<Vec<F::Elem>> = (0..target.dim(v))
                    .map(|i| {
                        let mut e = vec![field.zero(); target.dim(v)];
                        e[i] = field.one();
                        s.quotient_coordinates(&e)
                    })
                    .collect();
                Matrix::from_columns(field, c.dim(v), &cols)
            })
            .collect(),
    };
    (c, proj)
}
