//! Enumeration of indecomposables by knitting along almost split sequences,
//! or by sampling when knitting does not apply.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::gorenstein::{gorenstein_dim, is_gp};
use crate::linalg::{Field, Subspace};
use crate::modules::{
    decompose, gp_cosyzygy_unchecked, hom_space, is_isomorphic, is_projective, local_radical,
    projective_sum, radical, random_module, syzygy, syzygy_power, ModuleMap, Representation,
};
use crate::quiver::Algebra;

use super::sequence::almost_split_sequence;
use super::{tau_gp_inverse, tau_inverse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KnitMode {
    /// Follow almost split sequences out of the projectives. Needs `d ≤ 1`.
    Knit,
    /// Sample random modules, push them into the category with `Ω^d`, and
    /// close what was found under `Ω`, `Ω_G^{-1}`, translates and middle
    /// terms. "Closed" means several rounds in a row found nothing new.
    Sweep,
}

impl std::str::FromStr for KnitMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "knit" => Ok(KnitMode::Knit),
            "sweep" => Ok(KnitMode::Sweep),
            _ => Err(format!("unknown mode {s}")),
        }
    }
}

/// Which category to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    GorensteinProjective,
    AllModules,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Closure {
    Closed,
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct KnitOptions {
    pub budget: usize,
    pub dim_cap: usize,
    pub mode: KnitMode,
    pub category: Category,
    pub seed: u64,
    /// Knit even when the Gorenstein dimension exceeds one.
    pub allow_higher_dimension: bool,
    /// Sweep: stop after this many consecutive rounds find nothing new.
    pub quiet_rounds: usize,
    /// Sweep: random presentations per round.
    pub samples_per_round: usize,
}

impl Default for KnitOptions {
    fn default() -> Self {
        KnitOptions {
            budget: 200,
            dim_cap: 64,
            mode: KnitMode::Knit,
            category: Category::GorensteinProjective,
            seed: 0,
            allow_higher_dimension: false,
            quiet_rounds: 6,
            samples_per_round: 32,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ArNode<F: Field> {
    pub module: Representation<F>,
    pub projective: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArEdge {
    pub from: usize,
    pub to: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct ArQuiver<F: Field> {
    pub algebra: Algebra<F>,
    pub category: Category,
    pub mode: KnitMode,
    pub nodes: Vec<ArNode<F>>,
    /// Irreducible maps read off sink maps (knitting) or from `rad/rad²` (sweep).
    pub edges: Vec<ArEdge>,
    /// Pairs `(x, z)` with `x ≅ τ z` (relative translate for Gorenstein projectives).
    pub tau: Vec<(usize, usize)>,
    pub closure: Closure,
}

impl<F: Field> ArQuiver<F> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
    pub fn is_closed(&self) -> bool {
        self.closure == Closure::Closed
    }

    pub fn dim_vectors(&self) -> Vec<Vec<usize>> {
        self.nodes.iter().map(|n| n.module.dim_vector()).collect()
    }

    /// Index of the node isomorphic to `m`.
    pub fn find<R: Rng + ?Sized>(&self, m: &Representation<F>, rng: &mut R) -> Option<usize> {
        self.nodes.iter().position(|n| n.module.dims() == m.dims() && is_isomorphic(&n.module, m, rng).is_some())
    }

    /// `τ` of node `z`, if recorded.
    pub fn tau_of(&self, z: usize) -> Option<usize> {
        self.tau.iter().find(|p| p.1 == z).map(|p| p.0)
    }

    /// Where `Ω` sends each nonprojective node, or `None` if some syzygy is
    /// not indecomposable or not among the nodes.
    pub fn syzygy_permutation<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<BTreeMap<usize, usize>> {
        let mut out = BTreeMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if n.projective {
                continue;
            }
            let s = syzygy(&n.module);
            let parts = decompose(&s, rng);
            let non_proj: Vec<_> = parts.modules().into_iter().filter(|p| !is_projective(p)).collect();
            if non_proj.len() != 1 {
                return None;
            }
            out.insert(i, self.find(non_proj[0], rng)?);
        }
        Some(out)
    }

    pub fn summary(&self) -> serde_json::Value {
        let mut dims = self.dim_vectors();
        dims.sort();
        json!({
            "nodes": self.nodes.len(),
            "closure": self.closure,
            "category": self.category,
            "mode": self.mode,
            "projectives": self.nodes.iter().filter(|n| n.projective).count(),
            "dimension_vectors": dims,
            "node_list": self.nodes.iter().enumerate().map(|(i, n)| json!({
                "id": i,
                "dims": n.module.dims(),
                "projective": n.projective,
            })).collect::<Vec<_>>(),
            "edges": self.edges,
            "tau": self.tau,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let label = n.module.dims().iter().map(|d| d.to_string()).collect::<Vec<_>>().join("");
            let shape = if n.projective { "box" } else { "ellipse" };
            let _ = writeln!(s, "  n{i} [label=\"{label}\", shape={shape}];");
        }
        for e in &self.edges {
            if e.multiplicity == 1 {
                let _ = writeln!(s, "  n{} -> n{};", e.from, e.to);
            } else {
                let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.multiplicity);
            }
        }
        for (x, z) in &self.tau {
            let _ = writeln!(s, "  n{z} -> n{x} [style=dashed, constraint=false];");
        }
        s.push_str("}\n");
        s
    }
}

struct Expansion<F: Field> {
    /// `τ` of the node (left end of its almost split sequence).
    tau: Option<Representation<F>>,
    /// `τ⁻` of the node, when it is not injective in the category.
    tau_inv: Option<Representation<F>>,
    /// Indecomposable summands of the domain of the sink map.
    sink: Vec<Representation<F>>,
}

fn node_rng(seed: u64, a: u64, b: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ a.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ b.wrapping_mul(0xc2b2_ae3d_27d4_eb4f))
}

fn expand<F: Field>(m: &Representation<F>, id: usize, opts: &KnitOptions) -> Result<Expansion<F>> {
    let mut rng = node_rng(opts.seed, 1, id as u64);
    let relative = opts.category == Category::GorensteinProjective;
    let (tau, sink) = if is_projective(m) {
        let r = m.submodule(&radical(m));
        (None, decompose(&r, &mut rng).summands.into_iter().map(|s| s.module).collect())
    } else {
        let seq = almost_split_sequence(m, relative)?;
        if !seq.is_exact() || seq.splits() {
            return Err(Error::Degenerate(format!(
                "constructed sequence ending at {:?} is not almost split (ext {}, socle {})",
                m.dims(),
                seq.ext_dim,
                seq.socle_dim
            )));
        }
        let parts = decompose(&seq.middle, &mut rng).summands.into_iter().map(|s| s.module).collect();
        (Some(seq.left), parts)
    };
    let tau_inv = if relative {
        if is_projective(m) {
            None
        } else {
            Some(tau_gp_inverse(m)?)
        }
    } else {
        tau_inverse(m).ok()
    };
    Ok(Expansion { tau, tau_inv, sink })
}

struct Admission<F: Field> {
    nodes: Vec<ArNode<F>>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
    rng: ChaCha8Rng,
    category: Category,
    dim_cap: usize,
}

enum Admit {
    Old(usize),
    New(usize),
    TooLarge,
}

impl<F: Field> Admission<F> {
    fn admit(&mut self, m: Representation<F>) -> Result<Admit> {
        if let Some(ids) = self.by_dims.get(m.dims()) {
            for &i in ids {
                if is_isomorphic(&self.nodes[i].module, &m, &mut self.rng).is_some() {
                    return Ok(Admit::Old(i));
                }
            }
        }
        if m.total_dim() > self.dim_cap {
            return Ok(Admit::TooLarge);
        }
        if decompose(&m, &mut self.rng).len() != 1 {
            return Err(Error::Degenerate(format!("produced module {:?} is decomposable", m.dims())));
        }
        if self.category == Category::GorensteinProjective && !is_gp(&m)? {
            return Err(Error::NotGorensteinProjective(format!(
                "produced module {:?} is not Gorenstein projective",
                m.dims()
            )));
        }
        let id = self.nodes.len();
        self.by_dims.entry(m.dim_vector()).or_default().push(id);
        let projective = is_projective(&m);
        self.nodes.push(ArNode { module: m, projective });
        Ok(Admit::New(id))
    }
}

/// Enumerate the indecomposable Gorenstein projectives (or all
/// indecomposables) of `a`.
pub fn knit_gproj<F: Field>(a: &Algebra<F>, opts: &KnitOptions) -> Result<ArQuiver<F>> {
    if opts.category == Category::GorensteinProjective {
        let d = gorenstein_dim(a).ok_or_else(|| Error::Domain("algebra is not Gorenstein within the cap".into()))?;
        if opts.mode == KnitMode::Knit && d > 1 && !opts.allow_higher_dimension {
            return Err(Error::Domain(format!(
                "knitting needs a 1-Gorenstein algebra, this one has Gorenstein dimension {d}; use sweep mode"
            )));
        }
    }
    let mut adm = Admission {
        nodes: Vec::new(),
        by_dims: HashMap::new(),
        rng: node_rng(opts.seed, 0, 0),
        category: opts.category,
        dim_cap: opts.dim_cap,
    };
    for v in 0..a.num_vertices() {
        adm.admit(projective_sum(a, &[v]))?;
    }
    match opts.mode {
        KnitMode::Knit => knit(a, opts, adm),
        KnitMode::Sweep => sweep(a, opts, adm),
    }
}

fn knit<F: Field>(a: &Algebra<F>, opts: &KnitOptions, mut adm: Admission<F>) -> Result<ArQuiver<F>> {
    let mut frontier: Vec<usize> = (0..adm.nodes.len()).collect();
    let mut edges = BTreeMap::new();
    let mut tau = Vec::new();
    let mut closure = Closure::Closed;
    'outer: while !frontier.is_empty() {
        let modules: Vec<Representation<F>> = frontier.iter().map(|&i| adm.nodes[i].module.clone()).collect();
        let expansions: Vec<Result<Expansion<F>>> =
            modules.par_iter().zip(frontier.par_iter()).map(|(m, &id)| expand(m, id, opts)).collect();
        let mut next = Vec::new();
        for (&id, exp) in frontier.iter().zip(expansions) {
            let exp = exp?;
            let mut produced = Vec::new();
            if let Some(t) = exp.tau {
                produced.push((t, Role::Tau));
            }
            if let Some(t) = exp.tau_inv {
                produced.push((t, Role::TauInverse));
            }
            produced.extend(exp.sink.into_iter().map(|s| (s, Role::Sink)));
            for (m, role) in produced {
                let nid = match adm.admit(m)? {
                    Admit::Old(i) => i,
                    Admit::New(i) => {
                        next.push(i);
                        i
                    }
                    Admit::TooLarge => {
                        closure = Closure::BudgetExceeded;
                        break 'outer;
                    }
                };
                match role {
                    Role::Tau => tau.push((nid, id)),
                    Role::TauInverse => tau.push((id, nid)),
                    Role::Sink => *edges.entry((nid, id)).or_insert(0) += 1,
                }
                if adm.nodes.len() > opts.budget {
                    closure = Closure::BudgetExceeded;
                    break 'outer;
                }
            }
        }
        frontier = next;
    }
    tau.sort_unstable();
    tau.dedup();
    let edges = edges.into_iter().map(|((from, to), multiplicity)| ArEdge { from, to, multiplicity }).collect();
    Ok(ArQuiver {
        algebra: a.clone(),
        category: opts.category,
        mode: KnitMode::Knit,
        nodes: adm.nodes,
        edges,
        tau,
        closure,
    })
}

#[derive(Clone, Copy)]
enum Role {
    Tau,
    TauInverse,
    Sink,
}

fn sweep<F: Field>(a: &Algebra<F>, opts: &KnitOptions, mut adm: Admission<F>) -> Result<ArQuiver<F>> {
    let relative = opts.category == Category::GorensteinProjective;
    let d = if relative { gorenstein_dim(a).unwrap_or(0) } else { 0 };
    let mut quiet = 0;
    let mut round = 0u64;
    let mut closure = Closure::Closed;
    'outer: while quiet < opts.quiet_rounds {
        round += 1;
        let found: Vec<Vec<Representation<F>>> = (0..opts.samples_per_round as u64)
            .into_par_iter()
            .map(|s| {
                let mut rng = node_rng(opts.seed, round, s + 1);
                let m = syzygy_power(&random_module(a, &mut rng), d);
                decompose(&m, &mut rng).summands.into_iter().map(|x| x.module).filter(|x| !is_projective(x)).collect()
            })
            .collect();
        let mut queue: Vec<Representation<F>> = found.into_iter().flatten().collect();
        let mut grew = false;
        while let Some(m) = queue.pop() {
            match adm.admit(m)? {
                Admit::Old(_) => {}
                Admit::TooLarge => {
                    closure = Closure::BudgetExceeded;
                    break 'outer;
                }
                Admit::New(i) => {
                    grew = true;
                    if adm.nodes.len() > opts.budget {
                        closure = Closure::BudgetExceeded;
                        break 'outer;
                    }
                    let x = adm.nodes[i].module.clone();
                    let mut rng = node_rng(opts.seed, round, 1 << 32 | i as u64);
                    let mut more = vec![syzygy(&x)];
                    if relative {
                        more.push(gp_cosyzygy_unchecked(&x));
                    }
                    // Translates and middle terms reach the τ-orbits that
                    // sampling missed.
                    if !adm.nodes[i].projective {
                        let seq = almost_split_sequence(&x, relative)?;
                        more.push(seq.left);
                        more.push(seq.middle);
                        let inv = if relative { tau_gp_inverse(&x).ok() } else { tau_inverse(&x).ok() };
                        more.extend(inv);
                    }
                    for y in more {
                        if !y.is_zero() {
                            queue.extend(
                                decompose(&y, &mut rng).summands.into_iter().map(|s| s.module).filter(|s| !is_projective(s)),
                            );
                        }
                    }
                }
            }
        }
        quiet = if grew { 0 } else { quiet + 1 };
    }
    let mut q = ArQuiver {
        algebra: a.clone(),
        category: opts.category,
        mode: KnitMode::Sweep,
        nodes: adm.nodes,
        edges: Vec::new(),
        tau: Vec::new(),
        closure,
    };
    if q.is_closed() {
        q.edges = irreducible_map_counts(&q)?;
        let mut rng = node_rng(opts.seed, 2, 0);
        for z in 0..q.nodes.len() {
            if q.nodes[z].projective {
                continue;
            }
            let t = if relative { super::tau_gp(&q.nodes[z].module)? } else { super::tau(&q.nodes[z].module)? };
            if let Some(x) = q.find(&t, &mut rng) {
                q.tau.push((x, z));
            }
        }
    }
    Ok(q)
}

/// `dim rad(M, N) / rad²(M, N)` for every pair of nodes of a closed quiver.
pub fn irreducible_map_counts<F: Field>(q: &ArQuiver<F>) -> Result<Vec<ArEdge>> {
    if !q.is_closed() {
        return Err(Error::Budget("irreducible maps need a closed quiver".into()));
    }
    let n = q.nodes.len();
    let rad: Vec<Vec<Vec<ModuleMap<F>>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (m, nn) = (&q.nodes[i].module, &q.nodes[j].module);
                    if i == j {
                        local_radical(m).unwrap_or_default()
                    } else {
                        hom_space(m, nn)
                    }
                })
                .collect()
        })
        .collect();
    let counts: Vec<Vec<ArEdge>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .filter_map(|j| {
                    if rad[i][j].is_empty() {
                        return None;
                    }
                    let len = rad[i][j][0].flatten().len();
                    let mut sq = Subspace::zero(q.algebra.field(), len);
                    for l in 0..n {
                        for g in &rad[i][l] {
                            for h in &rad[l][j] {
                                sq.insert(h.compose(g).flatten());
                            }
                        }
                    }
                    let mult = rad[i][j].len() - sq.dim();
                    (mult > 0).then_some(ArEdge { from: i, to: j, multiplicity: mult })
                })
                .collect()
        })
        .collect();
    Ok(counts.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::quiver::{build_lambda_k, linear_quiver, truncated_polynomial, BoundQuiverAlgebra};

    fn build(p: &crate::quiver::AlgebraPresentation) -> Algebra<PrimeField> {
        BoundQuiverAlgebra::build(&PrimeField::new(101), p).unwrap()
    }

    #[test]
    fn truncated_polynomial_has_k_nodes() {
        for k in 1..=4 {
            let a = build(&truncated_polynomial(FieldSpec::default(), k));
            let q = knit_gproj(&a, &KnitOptions::default()).unwrap();
            assert!(q.is_closed());
            assert_eq!(q.len(), k);
        }
    }

    #[test]
    fn module_category_of_ka2() {
        let a = build(&linear_quiver(FieldSpec::default(), 2));
        let opts = KnitOptions { category: Category::AllModules, ..Default::default() };
        let q = knit_gproj(&a, &opts).unwrap();
        assert_eq!(q.len(), 3);
        let mut e = irreducible_map_counts(&q).unwrap();
        e.sort();
        let mut k = q.edges.clone();
        k.sort();
        assert_eq!(e, k);
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn lambda2_of_ka2_has_five() {
        let a = build(&build_lambda_k(&linear_quiver(FieldSpec::default(), 2), 2).unwrap());
        let q = knit_gproj(&a, &KnitOptions::default()).unwrap();
        assert!(q.is_closed());
        assert_eq!(q.len(), 5);
    }
}
