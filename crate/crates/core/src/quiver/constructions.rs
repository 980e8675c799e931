//! Building new presentations from old ones: `Λ_k`, `T_m(Λ)`, tensor products.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, FieldSpec};

use super::algebra::{Algebra, BoundQuiverAlgebra};
use super::presentation::{AlgebraPresentation, Quiver, Relation};

/// `K[x]/(x^k)` with `x` in degree 1; the field itself when `k = 1`.
pub fn truncated_polynomial(field: FieldSpec, k: usize) -> AlgebraPresentation {
    assert!(k >= 1);
    let mut q = Quiver::default();
    q.add_vertex("1");
    let mut relations = Vec::new();
    if k >= 2 {
        q.add_arrow("x", 0, 0, 1);
        relations.push(Relation::monomial(vec![0; k]));
    }
    AlgebraPresentation { field, quiver: q, relations }
}

/// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`, no relations.
pub fn linear_quiver(field: FieldSpec, n: usize) -> AlgebraPresentation {
    let mut q = Quiver::default();
    for i in 1..=n {
        q.add_vertex(i.to_string());
    }
    for i in 1..n {
        q.add_arrow(format!("a{i}"), i - 1, i, 0);
    }
    AlgebraPresentation { field, quiver: q, relations: Vec::new() }
}

fn unique_label(q: &Quiver, want: String) -> String {
    let mut label = want;
    while q.arrow_index(&label).is_some() || q.vertex_index(&label).is_some() {
        label.push('\'');
    }
    label
}

/// `Λ_k = Λ ⊗ K[X]/(X^k)`: one degree-one loop per vertex, nilpotent of
/// order `k`, commuting with every arrow of `Λ`. Arrows of `Λ` get degree 0.
/// For `k = 1` the input is returned unchanged.
pub fn build_lambda_k(lambda: &AlgebraPresentation, k: usize) -> Result<AlgebraPresentation> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    if k == 1 {
        return Ok(lambda.clone());
    }
    let mut q = lambda.quiver.clone();
    for a in &mut q.arrows {
        a.degree = 0;
    }
    let na = q.num_arrows();
    let mut loops = Vec::new();
    for v in 0..q.num_vertices() {
        let label = unique_label(&q, format!("e{}", q.vertices[v]));
        loops.push(q.add_arrow(label, v, v, 1));
    }
    let mut relations = lambda.relations.clone();
    for &l in &loops {
        relations.push(Relation::monomial(vec![l; k]));
    }
    for a in 0..na {
        let (s, t) = (q.arrows[a].source, q.arrows[a].target);
        relations.push(Relation::binomial(vec![a, loops[t]], vec![loops[s], a]));
    }
    AlgebraPresentation::new(lambda.field, q, relations)
}

/// Product quiver presentation of `A ⊗ B`.
///
/// Vertices are pairs `v|w`. Arrows `α|w` and `v|β` carry the degree of
/// `α` and `β`; each pair of arrows gives a commutativity square.
pub fn tensor_presentation(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    let (qa, qb) = (&a.quiver, &b.quiver);
    let (na, nb) = (qa.num_vertices(), qb.num_vertices());
    let vid = |v: usize, w: usize| v * nb + w;
    let mut q = Quiver::default();
    for v in &qa.vertices {
        for w in &qb.vertices {
            q.add_vertex(format!("{v}|{w}"));
        }
    }
    // left[α][w], right[v][β]
    let mut left = vec![vec![0; nb]; qa.num_arrows()];
    for (i, al) in qa.arrows.iter().enumerate() {
        for w in 0..nb {
            left[i][w] = q.add_arrow(format!("{}|{}", al.label, qb.vertices[w]), vid(al.source, w), vid(al.target, w), al.degree);
        }
    }
    let mut right = vec![vec![0; qb.num_arrows()]; na];
    for (v, row) in right.iter_mut().enumerate() {
        for (j, be) in qb.arrows.iter().enumerate() {
            row[j] = q.add_arrow(format!("{}|{}", qa.vertices[v], be.label), vid(v, be.source), vid(v, be.target), be.degree);
        }
    }
    let mut relations = Vec::new();
    for rel in &a.relations {
        for w in 0..nb {
            relations.push(Relation { terms: rel.terms.iter().map(|(c, wd)| (*c, wd.iter().map(|&x| left[x][w]).collect())).collect() });
        }
    }
    for rel in &b.relations {
        for row in &right {
            relations.push(Relation { terms: rel.terms.iter().map(|(c, wd)| (*c, wd.iter().map(|&x| row[x]).collect())).collect() });
        }
    }
    for (i, al) in qa.arrows.iter().enumerate() {
        for (j, be) in qb.arrows.iter().enumerate() {
            relations.push(Relation::binomial(
                vec![left[i][be.source], right[al.target][j]],
                vec![right[al.source][j], left[i][be.target]],
            ));
        }
    }
    AlgebraPresentation::new(a.field, q, relations)
}

/// `T_m(Λ)`, realised as `Λ ⊗ KA_m`. `m = 1` returns the input.
pub fn build_triangular(lambda: &AlgebraPresentation, m: usize) -> Result<AlgebraPresentation> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    if m == 1 {
        return Ok(lambda.clone());
    }
    tensor_presentation(lambda, &linear_quiver(lambda.field, m))
}

/// Recognised `Λ_k` structure of a presentation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaKShape {
    pub k: usize,
    pub base: AlgebraPresentation,
    /// Loop arrow at each vertex (empty when `k = 1`).
    pub loops: Vec<usize>,
    /// Index in the full presentation of each arrow of `base`.
    pub base_arrows: Vec<usize>,
}

/// Detect whether a presentation has the form produced by [`build_lambda_k`]:
/// a degree-one loop at every vertex with `ε^k = 0`, commuting with all other
/// arrows (degree 0), and remaining relations in the other arrows only.
/// A presentation concentrated in degree 0 is read as `k = 1`.
pub fn lambda_k_shape(p: &AlgebraPresentation) -> Option<LambdaKShape> {
    let q = &p.quiver;
    if q.arrows.iter().all(|a| a.degree == 0) {
        return Some(LambdaKShape { k: 1, base: p.clone(), loops: Vec::new(), base_arrows: (0..q.num_arrows()).collect() });
    }
    let mut loops = vec![None; q.num_vertices()];
    let mut base_arrows = Vec::new();
    for (i, a) in q.arrows.iter().enumerate() {
        match a.degree {
            0 => base_arrows.push(i),
            1 if a.source == a.target && loops[a.source].is_none() => loops[a.source] = Some(i),
            _ => return None,
        }
    }
    let loops: Vec<usize> = loops.into_iter().collect::<Option<_>>()?;
    let is_loop = |x: usize| loops.contains(&x);
    let mut k = None;
    let mut nil_seen = vec![false; loops.len()];
    let mut comm_seen = vec![false; q.num_arrows()];
    let mut base_relations = Vec::new();
    for rel in &p.relations {
        let touches_loop = rel.terms.iter().any(|(_, w)| w.iter().any(|&x| is_loop(x)));
        if !touches_loop {
            base_relations.push(rel.clone());
            continue;
        }
        if let [(c, w)] = rel.terms.as_slice() {
            if *c != 0 && w.iter().all(|&x| x == w[0]) {
                let v = loops.iter().position(|&l| l == w[0])?;
                if *k.get_or_insert(w.len()) != w.len() || nil_seen[v] {
                    return None;
                }
                nil_seen[v] = true;
                continue;
            }
            return None;
        }
        if let [(c1, w1), (c2, w2)] = rel.terms.as_slice() {
            if *c1 + *c2 != 0 || *c1 == 0 || w1.len() != 2 || w2.len() != 2 {
                return None;
            }
            // One term is α·ε_t, the other ε_s·α.
            let (at, sa) = if is_loop(w1[1]) { (w1, w2) } else { (w2, w1) };
            let alpha = at[0];
            if is_loop(alpha) || sa[1] != alpha || !is_loop(at[1]) || !is_loop(sa[0]) {
                return None;
            }
            let arrow = &q.arrows[alpha];
            if loops[arrow.target] != at[1] || loops[arrow.source] != sa[0] || comm_seen[alpha] {
                return None;
            }
            comm_seen[alpha] = true;
            continue;
        }
        return None;
    }
    let k = k?;
    if k < 2 || nil_seen.iter().any(|s| !s) || base_arrows.iter().any(|&a| !comm_seen[a]) {
        return None;
    }
    let mut base_q = Quiver { vertices: q.vertices.clone(), arrows: Vec::new() };
    let mut remap = vec![usize::MAX; q.num_arrows()];
    for (j, &a) in base_arrows.iter().enumerate() {
        remap[a] = j;
        base_q.arrows.push(q.arrows[a].clone());
    }
    let base_relations = base_relations
        .into_iter()
        .map(|r| Relation { terms: r.terms.into_iter().map(|(c, w)| (c, w.into_iter().map(|x| remap[x]).collect())).collect() })
        .collect();
    let base = AlgebraPresentation { field: p.field, quiver: base_q, relations: base_relations };
    Some(LambdaKShape { k, base, loops, base_arrows })
}

/// Decide whether two presentations define isomorphic algebras through a
/// relabelling of vertices and arrows that respects endpoints and degrees.
///
/// Both algebras must have the same dimension; then it suffices that every
/// relation of `a`, transported along the relabelling, vanishes in `b`.
pub fn presentations_isomorphic<F: Field>(field: &F, a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<bool> {
    let (qa, qb) = (&a.quiver, &b.quiver);
    if qa.num_vertices() != qb.num_vertices() || qa.num_arrows() != qb.num_arrows() {
        return Ok(false);
    }
    let alg_a = BoundQuiverAlgebra::build(field, a)?;
    let alg_b = BoundQuiverAlgebra::build(field, b)?;
    if alg_a.dim() != alg_b.dim() {
        return Ok(false);
    }
    let n = qa.num_vertices();
    let mut vmap = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(search_vertices(0, &mut vmap, &mut used, a, &alg_b))
}

fn search_vertices<F: Field>(v: usize, vmap: &mut [usize], used: &mut [bool], a: &AlgebraPresentation, b: &Algebra<F>) -> bool {
    let n = vmap.len();
    if v == n {
        let mut amap = vec![usize::MAX; a.quiver.num_arrows()];
        let mut aused = vec![false; amap.len()];
        return search_arrows(0, vmap, &mut amap, &mut aused, a, b);
    }
    for w in 0..n {
        if used[w] {
            continue;
        }
        vmap[v] = w;
        used[w] = true;
        if search_vertices(v + 1, vmap, used, a, b) {
            return true;
        }
        used[w] = false;
    }
    false
}

fn search_arrows<F: Field>(
    i: usize,
    vmap: &[usize],
    amap: &mut [usize],
    aused: &mut [bool],
    a: &AlgebraPresentation,
    b: &Algebra<F>,
) -> bool {
    if i == amap.len() {
        return a.relations.iter().all(|rel| {
            let moved = Relation { terms: rel.terms.iter().map(|(c, w)| (*c, w.iter().map(|&x| amap[x]).collect())).collect() };
            b.relation_element(&moved).iter().all(|c| b.field().is_zero(c))
        });
    }
    let arrow = &a.quiver.arrows[i];
    for (j, cand) in b.quiver().arrows.iter().enumerate() {
        if aused[j] || cand.source != vmap[arrow.source] || cand.target != vmap[arrow.target] || cand.degree != arrow.degree {
            continue;
        }
        amap[i] = j;
        aused[j] = true;
        if search_arrows(i + 1, vmap, amap, aused, a, b) {
            return true;
        }
        aused[j] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;

    fn dim(p: &AlgebraPresentation) -> usize {
        BoundQuiverAlgebra::build(&PrimeField::new(101), p).unwrap().dim()
    }

    #[test]
    fn lambda_k_dimensions() {
        let ka2 = linear_quiver(FieldSpec::default(), 2);
        for k in 1..=5 {
            assert_eq!(dim(&build_lambda_k(&ka2, k).unwrap()), 3 * k);
        }
        let point = linear_quiver(FieldSpec::default(), 1);
        assert_eq!(dim(&build_lambda_k(&point, 4).unwrap()), 4);
    }

    #[test]
    fn lambda_3_of_ka2_shape() {
        let p = build_lambda_k(&linear_quiver(FieldSpec::default(), 2), 3).unwrap();
        assert_eq!(p.quiver.num_arrows(), 3);
        assert_eq!(p.relations.len(), 3);
        let shape = lambda_k_shape(&p).unwrap();
        assert_eq!(shape.k, 3);
        assert_eq!(shape.base, linear_quiver(FieldSpec::default(), 2));
    }

    #[test]
    fn triangular_dimensions() {
        let ka2 = linear_quiver(FieldSpec::default(), 2);
        assert_eq!(build_triangular(&ka2, 1).unwrap(), ka2);
        let t2 = build_triangular(&ka2, 2).unwrap();
        assert_eq!(t2.quiver.num_vertices(), 4);
        assert_eq!(dim(&t2), 9);
        assert_eq!(dim(&build_triangular(&ka2, 3).unwrap()), 18);
    }

    #[test]
    fn tensor_identities() {
        let f = PrimeField::new(101);
        let ka2 = linear_quiver(FieldSpec::default(), 2);
        let k = linear_quiver(FieldSpec::default(), 1);
        assert!(presentations_isomorphic(&f, &tensor_presentation(&ka2, &k).unwrap(), &ka2).unwrap());
        let sq = tensor_presentation(&ka2, &ka2).unwrap();
        assert!(presentations_isomorphic(&f, &sq, &build_triangular(&ka2, 2).unwrap()).unwrap());
        let r3 = truncated_polynomial(FieldSpec::default(), 3);
        let l3 = build_lambda_k(&ka2, 3).unwrap();
        assert!(presentations_isomorphic(&f, &tensor_presentation(&ka2, &r3).unwrap(), &l3).unwrap());
        assert!(!presentations_isomorphic(&f, &l3, &build_lambda_k(&ka2, 2).unwrap()).unwrap());
    }
}
