//! Auslander–Reiten translates, almost split sequences and stable Hom,
//! both in the whole module category and relative to Gorenstein
//! projectives.

mod knit;
mod sequence;

pub use knit::{
    irreducible_map_counts, knit_gproj, ArEdge, ArNode, ArQuiver, Closure, KnitMode, KnitOptions, Category,
};
pub use sequence::{almost_split_sequence, factors_through, ArSequence};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gorenstein::{gorenstein_dim, DEFAULT_DIMENSION_CAP};
use crate::linalg::{Field, Subspace};
use crate::modules::{
    decompose, direct_sum, dualize, gp_cosyzygy_unchecked, hom_space, is_projective, projective_cover, star_dual,
    syzygy_power, transpose_tr, ModuleMap, Representation,
};

/// `τ = D Tr`.
pub fn tau<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    if is_projective(m) {
        return Err(Error::Projective("τ is zero on projectives".into()));
    }
    Ok(dualize(&transpose_tr(m)))
}

/// `τ⁻ = Tr D`.
pub fn tau_inverse<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    let d = dualize(m);
    if is_projective(&d) {
        return Err(Error::Injective("τ⁻ is zero on injectives".into()));
    }
    Ok(transpose_tr(&d))
}

/// Drop the projective indecomposable summands.
pub fn strip_projectives<F: Field>(m: &Representation<F>) -> Representation<F> {
    if m.is_zero() {
        return m.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a11);
    let d = decompose(m, &mut rng);
    let keep: Vec<&Representation<F>> = d.modules().into_iter().filter(|s| !is_projective(s)).collect();
    if keep.len() == d.len() {
        return m.clone();
    }
    direct_sum(m.algebra(), &keep)
}

fn gorenstein_dim_or_err<F: Field>(m: &Representation<F>) -> Result<usize> {
    gorenstein_dim(m.algebra())
        .ok_or_else(|| Error::Domain(format!("algebra is not Gorenstein within dimension {DEFAULT_DIMENSION_CAP}")))
}

/// The translate of the category of Gorenstein projectives,
/// `τ_G Z = Ω_G^{-d} Ω^d τ Z` with `d` the Gorenstein dimension.
///
/// Projective summands of `Ω^d τ Z` die under the first `Ω_G^{-1}`, and
/// `Ω_G^{-1}` creates none, so nothing needs stripping afterwards.
pub fn tau_gp<F: Field>(z: &Representation<F>) -> Result<Representation<F>> {
    let d = gorenstein_dim_or_err(z)?;
    let mut y = syzygy_power(&tau(z)?, d);
    for _ in 0..d {
        y = gp_cosyzygy_unchecked(&y);
    }
    Ok(y)
}

/// Inverse of [`tau_gp`], through the duality `(-)* ` with the opposite algebra.
pub fn tau_gp_inverse<F: Field>(x: &Representation<F>) -> Result<Representation<F>> {
    if is_projective(x) {
        return Err(Error::Injective("projectives are the injective objects of the Gorenstein projectives".into()));
    }
    Ok(star_dual(&tau_gp(&star_dual(x))?))
}

#[derive(Clone, Debug)]
pub struct StableHom<F: Field> {
    pub dim: usize,
    pub hom_dim: usize,
    /// Dimension of the maps factoring through a projective.
    pub factoring_dim: usize,
    /// Maps whose classes form a basis of the stable Hom space.
    pub basis: Vec<ModuleMap<F>>,
}

/// `Hom(M, N)` modulo maps factoring through projectives; such maps all
/// factor through the projective cover of `N`.
pub fn stable_hom<F: Field>(m: &Representation<F>, n: &Representation<F>) -> StableHom<F> {
    let hom = hom_space(m, n);
    let (p, pi) = projective_cover(n);
    let len = ModuleMap::zero(m, n).flatten().len();
    let mut factoring = Subspace::zero(m.field(), len);
    for g in hom_space(m, &p) {
        factoring.insert(pi.compose(&g).flatten());
    }
    let factoring_dim = factoring.dim();
    let mut all = factoring.clone();
    let basis: Vec<ModuleMap<F>> = hom.iter().filter(|h| all.insert(h.flatten())).cloned().collect();
    StableHom { dim: basis.len(), hom_dim: hom.len(), factoring_dim, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::modules::{is_isomorphic, simple};
    use crate::quiver::{linear_quiver, truncated_polynomial, Algebra, BoundQuiverAlgebra};

    fn ka2() -> Algebra<PrimeField> {
        BoundQuiverAlgebra::build(&PrimeField::new(101), &linear_quiver(FieldSpec::default(), 2)).unwrap()
    }
    fn r(k: usize) -> Algebra<PrimeField> {
        BoundQuiverAlgebra::build(&PrimeField::new(101), &truncated_polynomial(FieldSpec::default(), k)).unwrap()
    }

    #[test]
    fn tau_of_simples() {
        let a = ka2();
        let t = tau(&simple(&a, 0)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(is_isomorphic(&t, &simple(&a, 1), &mut rng).is_some());
        assert!(matches!(tau(&simple(&a, 1)), Err(Error::Projective(_))));
        let b = r(2);
        assert_eq!(tau(&simple(&b, 0)).unwrap().dims(), &[1]);
        assert_eq!(tau_gp(&simple(&b, 0)).unwrap().dims(), &[1]);
    }

    #[test]
    fn tau_inverse_undoes_tau() {
        let a = ka2();
        let s2 = simple(&a, 1);
        let back = tau_inverse(&s2).unwrap();
        assert_eq!(back.dims(), &[1, 0]);
    }

    #[test]
    fn stable_hom_examples() {
        let b = r(2);
        let k = simple(&b, 0);
        let s = stable_hom(&k, &k);
        assert_eq!((s.hom_dim, s.dim), (1, 1));
        let a = ka2();
        assert_eq!(stable_hom(&simple(&a, 0), &simple(&a, 0)).dim, 1);
        let p = crate::modules::projective_sum(&a, &[0]);
        assert_eq!(stable_hom(&p, &simple(&a, 0)).dim, 0);
    }
}
