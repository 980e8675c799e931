//! Krull–Schmidt decomposition and isomorphism testing.
//!
//! Splitting uses Fitting's lemma on random endomorphisms. A module that
//! resists splitting is certified indecomposable by exhibiting a nilpotent
//! ideal of codimension one in its endomorphism ring.

use rand::Rng;

use crate::linalg::{poly, Field, Matrix, Subspace};

use super::hom::hom_space;
use super::rep::{combine, ModuleMap, Representation};

const SPLIT_TRIALS: usize = 48;
const ISO_TRIALS: usize = 8;
/// Enumerate all of `End(M)` when it has at most this many elements.
const EXHAUSTIVE_LIMIT: u64 = 1 << 14;

#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Representation<F>,
    /// Split inclusion into the decomposed module.
    pub embedding: ModuleMap<F>,
    pub absolutely_indecomposable: bool,
    /// `dim End/rad End`: 1 unless the residue field is a proper extension.
    pub end_top_dim: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub summands: Vec<Summand<F>>,
}

impl<F: Field> Decomposition<F> {
    pub fn len(&self) -> usize {
        self.summands.len()
    }
    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
    pub fn modules(&self) -> Vec<&Representation<F>> {
        self.summands.iter().map(|s| &s.module).collect()
    }

    /// Group summands into isomorphism classes.
    pub fn isoclasses<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'outer: for (i, s) in self.summands.iter().enumerate() {
            for c in classes.iter_mut() {
                if indecomposable_iso(&self.summands[c[0]].module, &s.module, rng).is_some() {
                    c.push(i);
                    continue 'outer;
                }
            }
            classes.push(vec![i]);
        }
        classes
    }
}

pub fn decompose<F: Field, R: Rng + ?Sized>(m: &Representation<F>, rng: &mut R) -> Decomposition<F> {
    let mut summands = Vec::new();
    split_into(m, ModuleMap::identity(m), rng, &mut summands);
    Decomposition { summands }
}

enum Outcome<F: Field> {
    Split(Vec<Subspace<F>>, Vec<Subspace<F>>),
    Indecomposable { absolute: bool, top: usize },
}

fn split_into<F: Field, R: Rng + ?Sized>(
    m: &Representation<F>,
    emb: ModuleMap<F>,
    rng: &mut R,
    out: &mut Vec<Summand<F>>,
) {
    if m.is_zero() {
        return;
    }
    match analyse(m, rng) {
        Outcome::Split(a, b) => {
            for subs in [a, b] {
                let piece = m.submodule(&subs);
                let inc = ModuleMap { components: subs.iter().map(|s| s.basis_matrix()).collect() };
                split_into(&piece, emb.compose(&inc), rng, out);
            }
        }
        Outcome::Indecomposable { absolute, top } => {
            out.push(Summand { module: m.clone(), embedding: emb, absolutely_indecomposable: absolute, end_top_dim: top })
        }
    }
}

fn analyse<F: Field, R: Rng + ?Sized>(m: &Representation<F>, rng: &mut R) -> Outcome<F> {
    let f = m.field();
    let end = hom_space(m, m);
    if end.len() <= 1 {
        return Outcome::Indecomposable { absolute: true, top: 1 };
    }
    if local_radical_of(m, &end).is_some() {
        return Outcome::Indecomposable { absolute: true, top: 1 };
    }
    let mut residue_degree = 1;
    for _ in 0..SPLIT_TRIALS {
        let coeffs: Vec<F::Elem> = end.iter().map(|_| f.random(rng)).collect();
        let phi = combine(f, &end, &coeffs).unwrap();
        match fitting_split(m, &phi) {
            Ok(s) => return s,
            Err(d) => residue_degree = residue_degree.max(d),
        }
    }
    if let Some(q) = f.order() {
        if (end.len() as f64) * (q as f64).log2() <= (EXHAUSTIVE_LIMIT as f64).log2() {
            let elems = f.elements().unwrap();
            let mut idx = vec![0usize; end.len()];
            loop {
                let coeffs: Vec<F::Elem> = idx.iter().map(|&i| elems[i].clone()).collect();
                let phi = combine(f, &end, &coeffs).unwrap();
                match fitting_split(m, &phi) {
                    Ok(s) => return s,
                    Err(d) => residue_degree = residue_degree.max(d),
                }
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] < elems.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
    }
    Outcome::Indecomposable { absolute: false, top: residue_degree }
}

/// Split along `φ` at one of its eigenvalues, or report the degree of the
/// squarefree part of `χ_φ` when `φ` gives no splitting.
fn fitting_split<F: Field>(m: &Representation<F>, phi: &ModuleMap<F>) -> Result<Outcome<F>, usize> {
    let f = m.field();
    let mut chi = vec![f.one()];
    for c in &phi.components {
        if c.rows() > 0 {
            chi = poly::mul(f, &chi, &c.charpoly());
        }
    }
    let roots = f.roots(&chi);
    let n = m.total_dim();
    if let Some(lambda) = roots.first() {
        if chi == linear_power(f, lambda, n) {
            return Err(1);
        }
        let mut ker = Vec::new();
        let mut img = Vec::new();
        for c in &phi.components {
            let d = c.rows();
            let psi = c.sub(&Matrix::scalar(f, d, lambda)).pow(d);
            ker.push(Subspace::kernel_of(&psi));
            img.push(Subspace::column_space(&psi));
        }
        return Ok(Outcome::Split(ker, img));
    }
    Err(squarefree_degree(f, &chi))
}

fn linear_power<F: Field>(f: &F, lambda: &F::Elem, n: usize) -> Vec<F::Elem> {
    let lin = vec![f.neg(lambda), f.one()];
    let mut p = vec![f.one()];
    for _ in 0..n {
        p = poly::mul(f, &p, &lin);
    }
    p
}

fn squarefree_degree<F: Field>(f: &F, p: &[F::Elem]) -> usize {
    let deriv: Vec<F::Elem> = p.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_i64(i as i64), c)).collect();
    let deriv = poly::trim(f, deriv);
    if deriv.is_empty() {
        // p-th power in characteristic p; the degree is an upper bound.
        return p.len().saturating_sub(1).max(1);
    }
    let g = poly::gcd(f, p, &deriv);
    let (q, _) = poly::divrem(f, p, &g);
    q.len().saturating_sub(1).max(1)
}

/// Basis of `rad End(M)` when `End(M)` is local with residue field `K`.
pub fn local_radical<F: Field>(m: &Representation<F>) -> Option<Vec<ModuleMap<F>>> {
    if m.is_zero() {
        return None;
    }
    local_radical_of(m, &hom_space(m, m))
}

fn local_radical_of<F: Field>(m: &Representation<F>, end: &[ModuleMap<F>]) -> Option<Vec<ModuleMap<F>>> {
    let f = m.field();
    let v0 = m.dims().iter().position(|&d| d > 0)?;
    let id = ModuleMap::identity(m);
    let flat_len = id.flatten().len();
    let mut rad = Subspace::zero(f, flat_len);
    let mut gens = Vec::new();
    for b in end {
        let c = &b.components[v0];
        let chi = c.charpoly();
        let roots = f.roots(&chi);
        if roots.len() != 1 || chi != linear_power(f, &roots[0], c.rows()) {
            return None;
        }
        let r = b.add(&id.scale(&f.neg(&roots[0])));
        if rad.insert(r.flatten()) {
            gens.push(r);
        }
    }
    if rad.dim() + 1 != end.len() {
        return None;
    }
    // The algebra generated by R is nilpotent iff M ⊋ RM ⊋ R²M ⊋ ... reaches
    // zero. A nilpotent subalgebra of codimension one misses 1, hence equals
    // R, which is then a two-sided ideal with End/R = K.
    let mut layer: Vec<Subspace<F>> = (0..m.dims().len()).map(|v| Subspace::full(f, m.dim(v))).collect();
    for _ in 0..=m.total_dim() {
        let mut next: Vec<Subspace<F>> = (0..m.dims().len()).map(|v| Subspace::zero(f, m.dim(v))).collect();
        for r in &gens {
            for (v, sub) in layer.iter().enumerate() {
                for x in sub.basis() {
                    next[v].insert(r.components[v].mul_vec(x));
                }
            }
        }
        if next.iter().all(|s| s.dim() == 0) {
            return Some(gens);
        }
        if next.iter().zip(&layer).all(|(a, b)| a.dim() == b.dim()) {
            return None;
        }
        layer = next;
    }
    None
}

/// An isomorphism `M → N` if one exists.
pub fn is_isomorphic<F: Field, R: Rng + ?Sized>(
    m: &Representation<F>,
    n: &Representation<F>,
    rng: &mut R,
) -> Option<ModuleMap<F>> {
    if m.algebra() != n.algebra() || m.dims() != n.dims() {
        return None;
    }
    if m.is_zero() {
        return Some(ModuleMap::zero(m, n));
    }
    let f = m.field();
    let hom = hom_space(m, n);
    if hom.is_empty() {
        return None;
    }
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<F::Elem> = hom.iter().map(|_| f.random(rng)).collect();
        let g = combine(f, &hom, &coeffs).unwrap();
        if g.is_isomorphism() {
            return Some(g);
        }
    }
    // Compare Krull–Schmidt decompositions.
    let dm = decompose(m, rng);
    let dn = decompose(n, rng);
    if dm.len() != dn.len() {
        return None;
    }
    let mut used = vec![false; dn.len()];
    let mut matched = Vec::new();
    for (i, p) in dm.summands.iter().enumerate() {
        let mut found = None;
        for (j, q) in dn.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(g) = indecomposable_iso(&p.module, &q.module, rng) {
                found = Some((j, g));
                break;
            }
        }
        let (j, g) = found?;
        used[j] = true;
        matched.push((i, j, g));
    }
    let components = (0..m.dims().len())
        .map(|v| {
            let mut b_cols = Vec::new();
            let mut c_cols = Vec::new();
            for (i, j, g) in &matched {
                b_cols.extend(dm.summands[*i].embedding.components[v].columns());
                c_cols.extend(dn.summands[*j].embedding.components[v].mul(&g.components[v]).columns());
            }
            let b = Matrix::from_columns(f, m.dim(v), &b_cols);
            let c = Matrix::from_columns(f, n.dim(v), &c_cols);
            c.mul(&b.inverse().expect("summand embeddings span the module"))
        })
        .collect();
    let iso = ModuleMap { components };
    debug_assert!(iso.is_intertwiner(m, n) && iso.is_isomorphism());
    Some(iso)
}

/// Isomorphism test between indecomposables: `M ≅ N` iff some element of a
/// basis of `Hom(M, N)` is invertible, since non-isomorphisms form a subspace.
fn indecomposable_iso<F: Field, R: Rng + ?Sized>(
    m: &Representation<F>,
    n: &Representation<F>,
    rng: &mut R,
) -> Option<ModuleMap<F>> {
    if m.dims() != n.dims() {
        return None;
    }
    let f = m.field();
    let hom = hom_space(m, n);
    for _ in 0..2 {
        if hom.is_empty() {
            break;
        }
        let coeffs: Vec<F::Elem> = hom.iter().map(|_| f.random(rng)).collect();
        let g = combine(f, &hom, &coeffs).unwrap();
        if g.is_isomorphism() {
            return Some(g);
        }
    }
    hom.into_iter().find(|g| g.is_isomorphism())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::modules::{projective_sum, regular_module, simple};
    use crate::quiver::{linear_quiver, truncated_polynomial, BoundQuiverAlgebra};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn regular_module_splits_into_projectives() {
        let f = PrimeField::new(101);
        let a = BoundQuiverAlgebra::build(&f, &linear_quiver(FieldSpec::default(), 3)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d = decompose(&regular_module(&a), &mut rng);
        let mut dims: Vec<Vec<usize>> = d.summands.iter().map(|s| s.module.dim_vector()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
        assert!(d.summands.iter().all(|s| s.absolutely_indecomposable));
    }

    #[test]
    fn truncated_polynomial_is_local() {
        let f = PrimeField::new(101);
        let a = BoundQuiverAlgebra::build(&f, &truncated_polynomial(FieldSpec::default(), 3)).unwrap();
        let r = local_radical(&projective_sum(&a, &[0])).unwrap();
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn isomorphism_of_sums_in_other_order() {
        let f = PrimeField::new(2);
        let a = BoundQuiverAlgebra::build(&f, &linear_quiver(FieldSpec::Prime(2), 2)).unwrap();
        let s1 = simple(&a, 0);
        let p1 = projective_sum(&a, &[0]);
        let x = crate::modules::direct_sum(&a, &[&s1, &p1, &s1]);
        let y = crate::modules::direct_sum(&a, &[&p1, &s1, &s1]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = is_isomorphic(&x, &y, &mut rng).unwrap();
        assert!(g.is_intertwiner(&x, &y) && g.is_isomorphism());
        let z = crate::modules::direct_sum(&a, &[&p1, &p1]);
        let w = crate::modules::direct_sum(&a, &[&s1, &s1, &simple(&a, 1), &simple(&a, 1)]);
        assert!(is_isomorphic(&z, &w, &mut rng).is_none());
    }
}
