//! Graded modules over algebras whose arrows carry nonnegative degrees.
//!
//! A graded module is stored as an ordinary representation whose basis at
//! every vertex consists of homogeneous vectors, sorted by degree. Graded
//! homomorphisms are computed on the covering algebra of a window of
//! degrees, where a graded module is just a representation.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{Algebra, AlgebraPresentation, BoundQuiverAlgebra, Quiver, Relation};

use super::cover::{presentation, projective_sum, sum_basis, ProjMap};
use super::decompose::{decompose, is_isomorphic};
use super::hom::{hom_space, hom_space_masked};
use super::rep::{ModuleMap, Representation};

#[derive(Clone, Debug)]
pub struct GradedRepresentation<F: Field> {
    module: Representation<F>,
    degrees: Vec<Vec<i64>>,
}

impl<F: Field> GradedRepresentation<F> {
    /// Checks that the degrees are sorted and every arrow is homogeneous.
    pub fn new(module: Representation<F>, degrees: Vec<Vec<i64>>) -> Result<Self> {
        let q = module.algebra().quiver();
        if degrees.len() != q.num_vertices() || degrees.iter().enumerate().any(|(v, d)| d.len() != module.dim(v)) {
            return Err(Error::Shape("degree labels do not match the dimension vector".into()));
        }
        if degrees.iter().any(|d| d.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::Shape("degree labels must be sorted at each vertex".into()));
        }
        let f = module.field();
        for (a, ar) in q.arrows.iter().enumerate() {
            let m = module.map(a);
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if !f.is_zero(m.get(r, c)) && degrees[ar.target][r] != degrees[ar.source][c] + ar.degree {
                        return Err(Error::Shape(format!("arrow {} is not homogeneous", ar.label)));
                    }
                }
            }
        }
        Ok(GradedRepresentation { module, degrees })
    }

    /// Attach degrees to a module whose basis vectors are homogeneous but
    /// possibly unsorted.
    pub fn from_unsorted(module: Representation<F>, degrees: Vec<Vec<i64>>) -> Result<Self> {
        let f = module.field().clone();
        let mut perms = Vec::new();
        let mut sorted = Vec::new();
        for d in &degrees {
            let idx = sort_order(d);
            sorted.push(idx.iter().map(|&i| d[i]).collect::<Vec<_>>());
            // Row i of the permutation picks old basis vector idx[i].
            let mut p = Matrix::zeros(&f, d.len(), d.len());
            for (i, &j) in idx.iter().enumerate() {
                p.set(i, j, f.one());
            }
            perms.push(p);
        }
        Self::new(module.base_change(&perms)?, sorted)
    }

    /// Reduce degrees modulo `a`; `a = 0` keeps them, `a = 1` forgets them.
    pub fn forget_mod(&self, a: i64) -> CyclicGraded<F> {
        assert!(a >= 0, "negative modulus");
        let residues =
            self.degrees.iter().map(|d| d.iter().map(|&x| if a == 0 { x } else { x.rem_euclid(a) }).collect()).collect();
        CyclicGraded { module: self.module.clone(), residues, modulus: a }
    }

    pub fn module(&self) -> &Representation<F> {
        &self.module
    }
    pub fn algebra(&self) -> &Algebra<F> {
        self.module.algebra()
    }
    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    /// The underlying ungraded module.
    pub fn forget(&self) -> Representation<F> {
        self.module.clone()
    }

    pub fn total_dim(&self) -> usize {
        self.module.total_dim()
    }

    /// Degrees occupied, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.degrees.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// Dimension of the part in degree `i` at each vertex.
    pub fn dims_in_degree(&self, i: i64) -> Vec<usize> {
        self.degrees.iter().map(|d| d.iter().filter(|&&x| x == i).count()).collect()
    }

    /// `M(j)` with `M(j)_i = M_{i+j}`.
    pub fn shift(&self, j: i64) -> Self {
        GradedRepresentation {
            module: self.module.clone(),
            degrees: self.degrees.iter().map(|d| d.iter().map(|x| x - j).collect()).collect(),
        }
    }

    /// `M_{≤n}`: the quotient by the submodule of elements of degree `> n`.
    pub fn truncate_le(&self, n: i64) -> Self {
        let keep: Vec<Vec<usize>> =
            self.degrees.iter().map(|d| (0..d.len()).filter(|&i| d[i] <= n).collect()).collect();
        let q = self.algebra().quiver();
        let maps =
            (0..q.num_arrows()).map(|a| self.module.map(a).select_rows(&keep[q.arrows[a].target]).select_columns(&keep[q.arrows[a].source])).collect();
        let dims = keep.iter().map(|k| k.len()).collect();
        GradedRepresentation {
            module: Representation::from_parts(self.algebra().clone(), dims, maps),
            degrees: self.degrees.iter().map(|d| d.iter().copied().filter(|&x| x <= n).collect()).collect(),
        }
    }

    /// `M_{≥n}`, a graded submodule since arrow degrees are nonnegative.
    pub fn truncate_ge(&self, n: i64) -> Self {
        let keep: Vec<Vec<usize>> =
            self.degrees.iter().map(|d| (0..d.len()).filter(|&i| d[i] >= n).collect()).collect();
        let q = self.algebra().quiver();
        let maps =
            (0..q.num_arrows()).map(|a| self.module.map(a).select_rows(&keep[q.arrows[a].target]).select_columns(&keep[q.arrows[a].source])).collect();
        let dims = keep.iter().map(|k| k.len()).collect();
        GradedRepresentation {
            module: Representation::from_parts(self.algebra().clone(), dims, maps),
            degrees: self.degrees.iter().map(|d| d.iter().copied().filter(|&x| x >= n).collect()).collect(),
        }
    }
}

/// Stable sort of basis positions by degree, as used for graded bases.
fn sort_order(d: &[i64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..d.len()).collect();
    idx.sort_by_key(|&i| (d[i], i));
    idx
}

fn projective_degrees<F: Field>(alg: &Algebra<F>, gens: &[usize], shifts: &[i64], w: usize) -> Vec<i64> {
    sum_basis(alg, gens, w).iter().map(|&(t, b)| shifts[t] + alg.basis()[b].degree).collect()
}

/// `⊕_t P(gens[t])(-shifts[t])`: generator `t` sits in degree `shifts[t]`.
pub fn graded_projective_sum<F: Field>(alg: &Algebra<F>, gens: &[usize], shifts: &[i64]) -> GradedRepresentation<F> {
    let p = projective_sum(alg, gens);
    let degrees = (0..alg.num_vertices()).map(|w| projective_degrees(alg, gens, shifts, w)).collect();
    GradedRepresentation::from_unsorted(p, degrees).expect("projectives are graded")
}

/// `A(i)` as a graded module over itself, `A(i)_n = A_{n+i}`.
pub fn graded_regular<F: Field>(alg: &Algebra<F>, i: i64) -> GradedRepresentation<F> {
    let n = alg.num_vertices();
    graded_projective_sum(alg, &(0..n).collect::<Vec<_>>(), &vec![-i; n])
}

pub fn graded_direct_sum<F: Field>(alg: &Algebra<F>, parts: &[&GradedRepresentation<F>]) -> GradedRepresentation<F> {
    let modules: Vec<&Representation<F>> = parts.iter().map(|p| &p.module).collect();
    let m = super::rep::direct_sum(alg, &modules);
    let degrees = (0..alg.num_vertices()).map(|v| parts.iter().flat_map(|p| p.degrees[v].iter().copied()).collect()).collect();
    GradedRepresentation::from_unsorted(m, degrees).expect("sum of graded modules")
}

/// Degrees of the top generators found by the minimal presentation.
fn generator_degrees<F: Field>(m: &GradedRepresentation<F>) -> Vec<i64> {
    let f = m.algebra().field();
    let pres = presentation(&m.module);
    pres.gens
        .iter()
        .zip(&pres.gen_vectors)
        .map(|(&v, x)| m.degrees[v][x.iter().position(|c| !f.is_zero(c)).expect("nonzero generator")])
        .collect()
}

/// Vertex and degree of each generator of the minimal graded projective cover.
pub fn graded_top<F: Field>(m: &GradedRepresentation<F>) -> Vec<(usize, i64)> {
    let pres = presentation(&m.module);
    let mut top: Vec<(usize, i64)> = pres.gens.iter().copied().zip(generator_degrees(m)).collect();
    top.sort_unstable();
    top
}

/// Minimal graded projective cover `P → M`.
pub fn graded_projective_cover<F: Field>(m: &GradedRepresentation<F>) -> (GradedRepresentation<F>, ModuleMap<F>) {
    let alg = m.algebra();
    let pres = presentation(&m.module);
    let shifts = generator_degrees(m);
    let p = graded_projective_sum(alg, &pres.gens, &shifts);
    let components = (0..alg.num_vertices())
        .map(|w| pres.cover.components[w].select_columns(&sort_order(&projective_degrees(alg, &pres.gens, &shifts, w))))
        .collect();
    (p, ModuleMap { components })
}

/// Graded syzygy: the kernel of the graded projective cover.
pub fn graded_syzygy<F: Field>(m: &GradedRepresentation<F>) -> GradedRepresentation<F> {
    let alg = m.algebra();
    let f = alg.field();
    let pres = presentation(&m.module);
    let gen_deg = generator_degrees(m);
    let degrees = (0..alg.num_vertices())
        .map(|w| {
            let p0deg = projective_degrees(alg, &pres.gens, &gen_deg, w);
            pres.kernel[w]
                .basis()
                .iter()
                .map(|row| p0deg[row.iter().position(|c| !f.is_zero(c)).expect("nonzero kernel vector")])
                .collect()
        })
        .collect();
    GradedRepresentation::from_unsorted(pres.syzygy.clone(), degrees).expect("syzygy of a graded module is graded")
}

/// A map between sums of graded projectives given by a matrix of algebra
/// elements, in the sorted bases of [`graded_projective_sum`].
pub fn graded_projective_map<F: Field>(
    alg: &Algebra<F>,
    pm: &ProjMap<F>,
    dom_shifts: &[i64],
    cod_shifts: &[i64],
) -> (GradedRepresentation<F>, GradedRepresentation<F>, ModuleMap<F>) {
    let (_, _, g) = pm.to_module_map(alg);
    let components = (0..alg.num_vertices())
        .map(|w| {
            let rows = sort_order(&projective_degrees(alg, &pm.codomain, cod_shifts, w));
            let cols = sort_order(&projective_degrees(alg, &pm.domain, dom_shifts, w));
            g.components[w].select_rows(&rows).select_columns(&cols)
        })
        .collect();
    (
        graded_projective_sum(alg, &pm.domain, dom_shifts),
        graded_projective_sum(alg, &pm.codomain, cod_shifts),
        ModuleMap { components },
    )
}

/// Whether every nonzero entry of `g: M → N` joins basis vectors of equal degree.
pub fn is_degree_preserving<F: Field>(m: &GradedRepresentation<F>, n: &GradedRepresentation<F>, g: &ModuleMap<F>) -> bool {
    let f = m.algebra().field();
    g.components.iter().enumerate().all(|(v, c)| {
        (0..c.rows()).all(|i| (0..c.cols()).all(|j| f.is_zero(c.get(i, j)) || n.degrees[v][i] == m.degrees[v][j]))
    })
}

pub fn graded_syzygy_power<F: Field>(m: &GradedRepresentation<F>, n: usize) -> GradedRepresentation<F> {
    let mut x = m.clone();
    for _ in 0..n {
        x = graded_syzygy(&x);
    }
    x
}

/// The covering algebra of a window of degrees `[lo, hi]`: vertex `(v, i)`
/// for each degree, and a copy of each arrow starting in every degree.
pub struct Covering<F: Field> {
    pub base: Algebra<F>,
    pub algebra: Algebra<F>,
    pub lo: i64,
    pub hi: i64,
}

impl<F: Field> Covering<F> {
    pub fn new(base: &Algebra<F>, lo: i64, hi: i64) -> Result<Self> {
        let q = base.quiver();
        if q.arrows.iter().any(|a| a.degree < 0) {
            return Err(Error::Domain("covering needs nonnegative arrow degrees".into()));
        }
        let n = q.num_vertices();
        let width = (hi - lo + 1).max(0) as usize;
        let mut cq = Quiver::default();
        for i in 0..width {
            for v in &q.vertices {
                cq.add_vertex(format!("{v}@{}", lo + i as i64));
            }
        }
        let mut arrow_at = vec![vec![None; width]; q.num_arrows()];
        for (a, ar) in q.arrows.iter().enumerate() {
            for i in 0..width {
                let j = i as i64 + ar.degree;
                if j < width as i64 {
                    arrow_at[a][i] = Some(cq.add_arrow(
                        format!("{}@{}", ar.label, lo + i as i64),
                        i * n + ar.source,
                        j as usize * n + ar.target,
                        0,
                    ));
                }
            }
        }
        let mut relations = Vec::new();
        for rel in &base.presentation().relations {
            'start: for i in 0..width {
                let mut terms = Vec::new();
                for (c, w) in &rel.terms {
                    let mut d = i;
                    let mut word = Vec::new();
                    for &a in w {
                        match arrow_at[a].get(d).copied().flatten() {
                            Some(x) => word.push(x),
                            None => continue 'start,
                        }
                        d += q.arrows[a].degree as usize;
                    }
                    terms.push((*c, word));
                }
                relations.push(Relation { terms });
            }
        }
        let pres = AlgebraPresentation::new(base.presentation().field, cq, relations)?;
        let algebra = BoundQuiverAlgebra::build(base.field(), &pres)?;
        Ok(Covering { base: base.clone(), algebra, lo, hi })
    }

    fn vertex(&self, v: usize, i: i64) -> usize {
        (i - self.lo) as usize * self.base.num_vertices() + v
    }

    fn positions(&self, m: &GradedRepresentation<F>) -> Vec<Vec<Vec<usize>>> {
        let width = (self.hi - self.lo + 1) as usize;
        m.degrees
            .iter()
            .map(|d| {
                (0..width).map(|i| (0..d.len()).filter(|&j| d[j] == self.lo + i as i64).collect()).collect()
            })
            .collect()
    }

    pub fn contains(&self, m: &GradedRepresentation<F>) -> bool {
        m.support().iter().all(|&d| d >= self.lo && d <= self.hi)
    }

    /// The representation of the covering attached to a graded module.
    pub fn lift(&self, m: &GradedRepresentation<F>) -> Representation<F> {
        assert!(self.contains(m), "graded module outside the covering window");
        let pos = self.positions(m);
        let cq = self.algebra.quiver();
        let n = self.base.num_vertices();
        let dims: Vec<usize> = (0..cq.num_vertices()).map(|x| pos[x % n][x / n].len()).collect();
        let bq = self.base.quiver();
        let mut maps = Vec::with_capacity(cq.num_arrows());
        for (a, ar) in bq.arrows.iter().enumerate() {
            for i in 0..pos[0].len() {
                let j = i as i64 + ar.degree;
                if (j as usize) < pos[0].len() {
                    maps.push(m.module.map(a).select_rows(&pos[ar.target][j as usize]).select_columns(&pos[ar.source][i]));
                }
            }
        }
        Representation::from_parts(self.algebra.clone(), dims, maps)
    }

    /// A graded map from a map of lifted representations.
    pub fn descend_map(
        &self,
        m: &GradedRepresentation<F>,
        n: &GradedRepresentation<F>,
        g: &ModuleMap<F>,
    ) -> ModuleMap<F> {
        let f = self.base.field();
        let (pm, pn) = (self.positions(m), self.positions(n));
        let components = (0..self.base.num_vertices())
            .map(|v| {
                let mut c = Matrix::zeros(f, n.module.dim(v), m.module.dim(v));
                for i in 0..pm[v].len() {
                    let block = &g.components[self.vertex(v, self.lo + i as i64)];
                    for (r, &gr) in pn[v][i].iter().enumerate() {
                        for (s, &gc) in pm[v][i].iter().enumerate() {
                            c.set(gr, gc, block.get(r, s).clone());
                        }
                    }
                }
                c
            })
            .collect();
        ModuleMap { components }
    }

    /// A graded module from a representation of the covering.
    pub fn descend(&self, r: &Representation<F>) -> GradedRepresentation<F> {
        let n = self.base.num_vertices();
        let width = (self.hi - self.lo + 1) as usize;
        let f = self.base.field();
        let mut offsets = vec![vec![0; width]; n];
        let mut dims = vec![0; n];
        let mut degrees = vec![Vec::new(); n];
        for i in 0..width {
            for v in 0..n {
                offsets[v][i] = dims[v];
                let d = r.dim(i * n + v);
                dims[v] += d;
                degrees[v].extend(std::iter::repeat_n(self.lo + i as i64, d));
            }
        }
        let bq = self.base.quiver();
        let mut maps: Vec<Matrix<F>> = bq.arrows.iter().map(|ar| Matrix::zeros(f, dims[ar.target], dims[ar.source])).collect();
        let mut ca = 0;
        for (a, ar) in bq.arrows.iter().enumerate() {
            for i in 0..width {
                let j = i as i64 + ar.degree;
                if (j as usize) < width {
                    maps[a].set_block(offsets[ar.target][j as usize], offsets[ar.source][i], r.map(ca));
                    ca += 1;
                }
            }
        }
        let module = Representation::from_parts(self.base.clone(), dims, maps);
        GradedRepresentation::new(module, degrees).expect("covering representations are graded")
    }
}

fn window<F: Field>(parts: &[&GradedRepresentation<F>]) -> (i64, i64) {
    let s: Vec<i64> = parts.iter().flat_map(|p| p.support()).collect();
    (s.iter().copied().min().unwrap_or(0), s.iter().copied().max().unwrap_or(0))
}

/// Basis of degree-preserving homomorphisms `M → N`.
pub fn graded_hom_space<F: Field>(m: &GradedRepresentation<F>, n: &GradedRepresentation<F>) -> Vec<ModuleMap<F>> {
    let (lo, hi) = window(&[m, n]);
    let cov = Covering::new(m.algebra(), lo, hi).expect("covering of a graded algebra");
    let (lm, ln) = (cov.lift(m), cov.lift(n));
    hom_space(&lm, &ln).iter().map(|g| cov.descend_map(m, n, g)).collect()
}

pub fn graded_hom_dim<F: Field>(m: &GradedRepresentation<F>, n: &GradedRepresentation<F>) -> usize {
    graded_hom_space(m, n).len()
}

pub fn graded_is_isomorphic<F: Field, R: Rng + ?Sized>(
    m: &GradedRepresentation<F>,
    n: &GradedRepresentation<F>,
    rng: &mut R,
) -> Option<ModuleMap<F>> {
    if m.degrees != n.degrees {
        return None;
    }
    let (lo, hi) = window(&[m, n]);
    let cov = Covering::new(m.algebra(), lo, hi).ok()?;
    let g = is_isomorphic(&cov.lift(m), &cov.lift(n), rng)?;
    Some(cov.descend_map(m, n, &g))
}

/// Indecomposable graded summands.
pub fn graded_decompose<F: Field, R: Rng + ?Sized>(
    m: &GradedRepresentation<F>,
    rng: &mut R,
) -> Vec<GradedRepresentation<F>> {
    let (lo, hi) = window(&[m]);
    let cov = Covering::new(m.algebra(), lo, hi).expect("covering of a graded algebra");
    decompose(&cov.lift(m), rng).summands.iter().map(|s| cov.descend(&s.module)).collect()
}

/// Degree-preserving maps by a masked intertwiner solve, independent of
/// the covering.
pub fn graded_hom_space_direct<F: Field>(m: &GradedRepresentation<F>, n: &GradedRepresentation<F>) -> Vec<ModuleMap<F>> {
    hom_space_masked(&m.module, &n.module, |v, i, j| n.degrees[v][i] == m.degrees[v][j])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedStableHom {
    pub dim: usize,
    pub hom_dim: usize,
    /// Degree-zero maps factoring through a graded projective.
    pub factoring_dim: usize,
}

/// Degree-zero `Hom(M, N)` modulo maps through graded projectives, all of
/// which factor through the graded projective cover of `N`.
pub fn graded_stable_hom<F: Field>(m: &GradedRepresentation<F>, n: &GradedRepresentation<F>) -> GradedStableHom {
    let f = m.algebra().field();
    let hom = graded_hom_space(m, n);
    let (p, pi) = graded_projective_cover(n);
    let len = ModuleMap::zero(&m.module, &n.module).flatten().len();
    let mut span = crate::linalg::Subspace::zero(f, len);
    for g in graded_hom_space(m, &p) {
        span.insert(pi.compose(&g).flatten());
    }
    let factoring_dim = span.dim();
    GradedStableHom { dim: hom.len() - factoring_dim, hom_dim: hom.len(), factoring_dim }
}

/// A module graded by `Z/aZ` (`modulus = a ≥ 1`), or by `Z` when `a = 0`.
#[derive(Clone, Debug)]
pub struct CyclicGraded<F: Field> {
    pub module: Representation<F>,
    pub residues: Vec<Vec<i64>>,
    pub modulus: i64,
}

/// Maps `X → Y` preserving the grading.
pub fn cyclic_hom_space<F: Field>(x: &CyclicGraded<F>, y: &CyclicGraded<F>) -> Vec<ModuleMap<F>> {
    assert_eq!(x.modulus, y.modulus, "gradings by different groups");
    hom_space_masked(&x.module, &y.module, |v, i, j| y.residues[v][i] == x.residues[v][j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::quiver::{build_lambda_k, linear_quiver};

    fn lambda(k: usize) -> Algebra<PrimeField> {
        let p = build_lambda_k(&linear_quiver(FieldSpec::default(), 2), k).unwrap();
        BoundQuiverAlgebra::build(&PrimeField::new(101), &p).unwrap()
    }

    #[test]
    fn truncated_shift_of_lambda3() {
        let a = lambda(3);
        let t = graded_regular(&a, 1).truncate_le(0);
        assert_eq!(t.support(), vec![-1, 0]);
        assert_eq!(t.total_dim(), 6);
    }

    #[test]
    fn covering_round_trip() {
        let a = lambda(3);
        let m = graded_regular(&a, 0);
        let cov = Covering::new(&a, 0, 2).unwrap();
        let back = cov.descend(&cov.lift(&m));
        assert_eq!(back.degrees(), m.degrees());
        assert_eq!(back.module().maps(), m.module().maps());
    }

    #[test]
    fn graded_syzygy_of_truncation() {
        let a = lambda(3);
        let t = graded_regular(&a, 1).truncate_le(0);
        let s = graded_syzygy(&t);
        assert_eq!(s.support(), vec![1]);
        assert_eq!(s.total_dim(), 3);
    }
}
