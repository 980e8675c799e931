//! Tops, minimal projective covers, presentations and syzygies.

use std::sync::Arc;

use crate::linalg::{Field, Matrix, Subspace};
use crate::quiver::Algebra;

use rand::Rng;

use super::rep::{cokernel_module, ModuleMap, Representation};

/// A map between direct sums of indecomposable projectives, written as a
/// matrix of algebra elements: generator `d` of the domain goes to
/// `Σ_c gen_c · entries[c][d]`, with `entries[c][d] ∈ e_{codomain[c]} A e_{domain[d]}`.
#[derive(Clone, Debug)]
pub struct ProjMap<F: Field> {
    pub domain: Vec<usize>,
    pub codomain: Vec<usize>,
    pub entries: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> ProjMap<F> {
    /// The same matrix read over the opposite algebra, after `Hom(-, A)`.
    pub fn dual(&self) -> Self {
        let entries =
            (0..self.domain.len()).map(|d| (0..self.codomain.len()).map(|c| self.entries[c][d].clone()).collect()).collect();
        ProjMap { domain: self.codomain.clone(), codomain: self.domain.clone(), entries }
    }

    /// Realise as a map of representations `⊕P(domain) → ⊕P(codomain)`.
    pub fn to_module_map(&self, alg: &Algebra<F>) -> (Representation<F>, Representation<F>, ModuleMap<F>) {
        let f = alg.field();
        let dom = projective_sum(alg, &self.domain);
        let cod = projective_sum(alg, &self.codomain);
        let mut components = Vec::new();
        for w in 0..alg.num_vertices() {
            let mut m = Matrix::zeros(f, cod.dim(w), dom.dim(w));
            let cod_index = sum_index(alg, &self.codomain, w);
            for (col, &(d, b)) in sum_basis(alg, &self.domain, w).iter().enumerate() {
                for c in 0..self.codomain.len() {
                    let x = &self.entries[c][d];
                    if x.iter().all(|e| f.is_zero(e)) {
                        continue;
                    }
                    let y = alg.mul(x, &alg.unit_vector(b));
                    for (b2, coef) in y.iter().enumerate() {
                        if !f.is_zero(coef) {
                            let row = cod_index[&(c, b2)];
                            m.set(row, col, f.add(m.get(row, col), coef));
                        }
                    }
                }
            }
            components.push(m);
        }
        (dom, cod, ModuleMap { components })
    }
}

/// Basis of `(⊕_t P(gens[t]))_w` as pairs `(t, path)`.
pub fn sum_basis<F: Field>(alg: &Algebra<F>, gens: &[usize], w: usize) -> Vec<(usize, usize)> {
    gens.iter().enumerate().flat_map(|(t, &v)| alg.paths_between(v, w).into_iter().map(move |b| (t, b))).collect()
}

fn sum_index<F: Field>(alg: &Algebra<F>, gens: &[usize], w: usize) -> std::collections::HashMap<(usize, usize), usize> {
    sum_basis(alg, gens, w).into_iter().enumerate().map(|(i, k)| (k, i)).collect()
}

/// `⊕_t P(gens[t])` with `P(v) = e_v A`.
pub fn projective_sum<F: Field>(alg: &Algebra<F>, gens: &[usize]) -> Representation<F> {
    let f = alg.field();
    let q = alg.quiver();
    let n = q.num_vertices();
    let bases: Vec<Vec<(usize, usize)>> = (0..n).map(|w| sum_basis(alg, gens, w)).collect();
    let index: Vec<_> = (0..n).map(|w| sum_index(alg, gens, w)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, ar)| {
            let mut m = Matrix::zeros(f, dims[ar.target], dims[ar.source]);
            for (col, &(t, b)) in bases[ar.source].iter().enumerate() {
                for (b2, c) in alg.right_arrow(b, a) {
                    m.set(index[ar.target][&(t, *b2)], col, c.clone());
                }
            }
            m
        })
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

/// `rad M = M·J`, the sum of the images of all arrows.
pub fn radical<F: Field>(m: &Representation<F>) -> Vec<Subspace<F>> {
    let q = m.algebra().quiver();
    let mut subs: Vec<Subspace<F>> = m.dims().iter().map(|&d| Subspace::zero(m.field(), d)).collect();
    for (a, ar) in q.arrows.iter().enumerate() {
        for col in m.map(a).columns() {
            subs[ar.target].insert(col);
        }
    }
    subs
}

/// Generators of the top: standard basis vectors completing `rad M`.
pub fn top_generators<F: Field>(m: &Representation<F>) -> Vec<(usize, Vec<F::Elem>)> {
    let f = m.field();
    let mut gens = Vec::new();
    for (v, s) in radical(m).iter().enumerate() {
        for i in s.complement_positions() {
            let mut e = vec![f.zero(); m.dim(v)];
            e[i] = f.one();
            gens.push((v, e));
        }
    }
    gens
}

/// Dimension vector of `top M`.
pub fn top_dims<F: Field>(m: &Representation<F>) -> Vec<usize> {
    radical(m).iter().enumerate().map(|(v, s)| m.dim(v) - s.dim()).collect()
}

/// Minimal projective presentation data of a module.
#[derive(Debug)]
pub struct Presentation<F: Field> {
    /// Vertex of each top generator; `P0 = ⊕ P(gens[t])`.
    pub gens: Vec<usize>,
    pub gen_vectors: Vec<Vec<F::Elem>>,
    pub p0: Representation<F>,
    /// The cover `P0 → M`.
    pub cover: ModuleMap<F>,
    /// A linear section of the cover at each vertex (`dim P0_w × dim M_w`).
    pub section: Vec<Matrix<F>>,
    /// `ΩM ⊆ P0`.
    pub kernel: Vec<Subspace<F>>,
    pub syzygy: Representation<F>,
    /// Top generators of `ΩM`, as (vertex, vector in `P0_vertex`).
    pub relations: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Presentation<F> {
    pub fn compute(m: &Representation<F>) -> Self {
        let alg = m.algebra();
        let f = m.field();
        let n = alg.num_vertices();
        let gens_full = top_generators(m);
        let gens: Vec<usize> = gens_full.iter().map(|g| g.0).collect();
        let gen_vectors: Vec<Vec<F::Elem>> = gens_full.into_iter().map(|g| g.1).collect();
        let p0 = projective_sum(alg, &gens);
        let mut cover = Vec::new();
        let mut section = Vec::new();
        let mut kernel = Vec::new();
        for w in 0..n {
            let basis = sum_basis(alg, &gens, w);
            let cols: Vec<Vec<F::Elem>> =
                basis.iter().map(|&(t, b)| m.basis_action(b).mul_vec(&gen_vectors[t])).collect();
            let pi = Matrix::from_columns(f, m.dim(w), &cols);
            let s = pi.solve_one(&Matrix::identity(f, m.dim(w))).expect("top generators generate the module");
            kernel.push(Subspace::kernel_of(&pi));
            cover.push(pi);
            section.push(s);
        }
        let syzygy = p0.submodule(&kernel);
        let relations = top_generators(&syzygy)
            .into_iter()
            .map(|(u, coords)| {
                let mut v = vec![f.zero(); p0.dim(u)];
                for (c, row) in coords.iter().zip(kernel[u].basis()) {
                    if f.is_zero(c) {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = f.add(x, &f.mul(c, y));
                    }
                }
                (u, v)
            })
            .collect();
        Presentation { gens, gen_vectors, p0, cover: ModuleMap { components: cover }, section, kernel, syzygy, relations }
    }

    /// The first map `P1 → P0` of the minimal projective resolution.
    pub fn first_map(&self) -> ProjMap<F> {
        let alg = self.p0.algebra();
        let f = alg.field();
        let domain: Vec<usize> = self.relations.iter().map(|r| r.0).collect();
        let mut entries = vec![vec![vec![f.zero(); alg.dim()]; domain.len()]; self.gens.len()];
        for (j, (u, z)) in self.relations.iter().enumerate() {
            for (coef, &(t, b)) in z.iter().zip(&sum_basis(alg, &self.gens, *u)) {
                if !f.is_zero(coef) {
                    entries[t][j][b] = f.add(&entries[t][j][b], coef);
                }
            }
        }
        ProjMap { domain, codomain: self.gens.clone(), entries }
    }

    /// Lift `g: M → N` along the covers to `P0(M) → P0(N)`.
    pub fn lift_to_cover(&self, g: &ModuleMap<F>, target: &Presentation<F>) -> ModuleMap<F> {
        let alg = self.p0.algebra();
        let f = alg.field();
        // Images of generators, pulled back through the target section.
        let images: Vec<Vec<F::Elem>> = self
            .gens
            .iter()
            .zip(&self.gen_vectors)
            .map(|(&v, x)| target.section[v].mul_vec(&g.components[v].mul_vec(x)))
            .collect();
        let components = (0..alg.num_vertices())
            .map(|w| {
                let cols: Vec<Vec<F::Elem>> = sum_basis(alg, &self.gens, w)
                    .iter()
                    .map(|&(t, b)| target.p0.basis_action(b).mul_vec(&images[t]))
                    .collect();
                Matrix::from_columns(f, target.p0.dim(w), &cols)
            })
            .collect();
        ModuleMap { components }
    }
}

/// Cached presentation of a module.
pub fn presentation<F: Field>(m: &Representation<F>) -> Arc<Presentation<F>> {
    m.cached_presentation().get_or_init(|| Arc::new(Presentation::compute(m))).clone()
}

/// `P ↠ M` with `P` the minimal projective cover.
pub fn projective_cover<F: Field>(m: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
    let p = presentation(m);
    (p.p0.clone(), p.cover.clone())
}

/// `ΩM`, the kernel of the minimal projective cover.
pub fn syzygy<F: Field>(m: &Representation<F>) -> Representation<F> {
    presentation(m).syzygy.clone()
}

pub fn syzygy_power<F: Field>(m: &Representation<F>, n: usize) -> Representation<F> {
    let mut x = m.clone();
    for _ in 0..n {
        if x.is_zero() {
            break;
        }
        x = syzygy(&x);
    }
    x
}

pub fn is_projective<F: Field>(m: &Representation<F>) -> bool {
    presentation(m).p0.total_dim() == m.total_dim()
}

/// Projective dimension, or `None` if it exceeds `cap`.
pub fn projective_dimension<F: Field>(m: &Representation<F>, cap: usize) -> Option<usize> {
    let mut x = m.clone();
    for d in 0..=cap {
        if is_projective(&x) {
            return Some(d);
        }
        x = syzygy(&x);
    }
    None
}

/// Minimal projective resolution maps `d_1, …, d_len` (`d_i: P_i → P_{i-1}`),
/// stopping early when a syzygy vanishes; `P_0` generators come first.
pub fn resolution<F: Field>(m: &Representation<F>, len: usize) -> (Vec<usize>, Vec<ProjMap<F>>) {
    let p = presentation(m);
    let p0 = p.gens.clone();
    let mut maps = Vec::new();
    let mut x = m.clone();
    for _ in 0..len {
        let pres = presentation(&x);
        if pres.relations.is_empty() {
            break;
        }
        maps.push(pres.first_map());
        x = pres.syzygy.clone();
    }
    (p0, maps)
}

/// Cokernel of a random map between sums of indecomposable projectives.
pub fn random_module<F: Field, R: Rng + ?Sized>(a: &Algebra<F>, rng: &mut R) -> Representation<F> {
    let f = a.field();
    let n = a.num_vertices();
    let cod: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..n)).collect();
    let dom: Vec<usize> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..n)).collect();
    let entries = cod
        .iter()
        .map(|&c| {
            dom.iter()
                .map(|&d| {
                    let mut x = vec![f.zero(); a.dim()];
                    for b in a.paths_between(c, d) {
                        // Sparse entries reach more of the module variety.
                        if rng.gen_bool(0.6) {
                            x[b] = f.random(rng);
                        }
                    }
                    x
                })
                .collect()
        })
        .collect();
    let pm = ProjMap { domain: dom, codomain: cod, entries };
    let (_, target, g) = pm.to_module_map(a);
    cokernel_module(&g, &target).0
}

