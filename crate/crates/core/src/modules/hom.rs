//! Homomorphism spaces.

use crate::linalg::{Field, Matrix};

use super::cover::{presentation, sum_basis};
use super::rep::{ModuleMap, Representation};

/// Basis of `Hom(M, N)`.
///
/// A map is determined by the images `n_t ∈ N` of the top generators of `M`;
/// they must kill the generators of `ΩM`. This keeps the linear system at
/// the size of `top M` rather than of `M ⊗ N`.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<ModuleMap<F>> {
    let alg = m.algebra();
    let f = m.field();
    let pres = presentation(m);
    let offsets: Vec<usize> = pres
        .gens
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += n.dim(v);
            Some(o)
        })
        .collect();
    let unknowns: usize = pres.gens.iter().map(|&v| n.dim(v)).sum();
    if unknowns == 0 {
        return Vec::new();
    }
    let rows: usize = pres.relations.iter().map(|(u, _)| n.dim(*u)).sum();
    let mut eq = Matrix::zeros(f, rows, unknowns);
    let mut r0 = 0;
    for (u, z) in &pres.relations {
        for (coef, &(t, b)) in z.iter().zip(&sum_basis(alg, &pres.gens, *u)) {
            if f.is_zero(coef) {
                continue;
            }
            let act = n.basis_action(b);
            for i in 0..act.rows() {
                for j in 0..act.cols() {
                    let x = act.get(i, j);
                    if !f.is_zero(x) {
                        let (ri, cj) = (r0 + i, offsets[t] + j);
                        eq.set(ri, cj, f.add(eq.get(ri, cj), &f.mul(coef, x)));
                    }
                }
            }
        }
        r0 += n.dim(*u);
    }
    eq.kernel().into_iter().map(|sol| map_from_generator_images(m, n, &sol, &offsets)).collect()
}

fn map_from_generator_images<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
    sol: &[F::Elem],
    offsets: &[usize],
) -> ModuleMap<F> {
    let alg = m.algebra();
    let f = m.field();
    let pres = presentation(m);
    let components = (0..alg.num_vertices())
        .map(|w| {
            let cols: Vec<Vec<F::Elem>> = sum_basis(alg, &pres.gens, w)
                .iter()
                .map(|&(t, b)| {
                    let v = pres.gens[t];
                    n.basis_action(b).mul_vec(&sol[offsets[t]..offsets[t] + n.dim(v)])
                })
                .collect();
            let phi = Matrix::from_columns(f, n.dim(w), &cols);
            phi.mul(&pres.section[w])
        })
        .collect();
    ModuleMap { components }
}

/// Basis of `Hom(M, N)` by solving the intertwiner equations
/// `N_a f_s = f_t M_a` directly. Slow; kept as an independent check.
pub fn hom_space_direct<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<ModuleMap<F>> {
    hom_space_masked(m, n, |_, _, _| true)
}

/// Intertwiners whose entry `(i, j)` at vertex `v` may be nonzero only when
/// `allowed(v, i, j)`. With a degree mask this computes graded Hom spaces
/// without passing through a covering.
pub fn hom_space_masked<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
    allowed: impl Fn(usize, usize, usize) -> bool,
) -> Vec<ModuleMap<F>> {
    let q = m.algebra().quiver();
    let f = m.field();
    let nv = q.num_vertices();
    // var[v][i * m.dim(v) + j], matching the layout of `ModuleMap::flatten`.
    let mut var: Vec<Vec<Option<usize>>> = Vec::with_capacity(nv);
    let mut flat_pos = Vec::new();
    let mut flat = 0;
    for v in 0..nv {
        let mut row = Vec::with_capacity(n.dim(v) * m.dim(v));
        for i in 0..n.dim(v) {
            for j in 0..m.dim(v) {
                if allowed(v, i, j) {
                    row.push(Some(flat_pos.len()));
                    flat_pos.push(flat);
                } else {
                    row.push(None);
                }
                flat += 1;
            }
        }
        var.push(row);
    }
    let unknowns = flat_pos.len();
    if unknowns == 0 {
        return Vec::new();
    }
    let rows: usize = q.arrows.iter().map(|a| n.dim(a.target) * m.dim(a.source)).sum();
    let mut eq = Matrix::zeros(f, rows, unknowns);
    let mut r0 = 0;
    for (a, ar) in q.arrows.iter().enumerate() {
        let (s, t) = (ar.source, ar.target);
        let (na, ma) = (n.map(a), m.map(a));
        // Entry (i, j) of N_a f_s - f_t M_a.
        for i in 0..n.dim(t) {
            for j in 0..m.dim(s) {
                let row = r0 + i * m.dim(s) + j;
                for k in 0..n.dim(s) {
                    let c = na.get(i, k);
                    if let (false, Some(col)) = (f.is_zero(c), var[s][k * m.dim(s) + j]) {
                        eq.set(row, col, f.add(eq.get(row, col), c));
                    }
                }
                for k in 0..m.dim(t) {
                    let c = ma.get(k, j);
                    if let (false, Some(col)) = (f.is_zero(c), var[t][i * m.dim(t) + k]) {
                        eq.set(row, col, f.sub(eq.get(row, col), c));
                    }
                }
            }
        }
        r0 += n.dim(t) * m.dim(s);
    }
    eq.kernel()
        .into_iter()
        .map(|sol| {
            let mut full = vec![f.zero(); flat];
            for (x, &p) in sol.into_iter().zip(&flat_pos) {
                full[p] = x;
            }
            ModuleMap::from_flat(f, m, n, &full)
        })
        .collect()
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_space(m, n).len()
}
