//! Almost split sequences built from socle elements of `Ext¹`.

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, RelativeBasis, Subspace};
use crate::modules::{
    cokernel_module, direct_sum, hom_space, is_projective, local_radical, presentation, ModuleMap, Representation,
};

use super::{tau, tau_gp};

#[derive(Clone, Debug)]
pub struct ArSequence<F: Field> {
    pub left: Representation<F>,
    pub middle: Representation<F>,
    pub right: Representation<F>,
    /// `left → middle`.
    pub inclusion: ModuleMap<F>,
    /// `middle → right`.
    pub projection: ModuleMap<F>,
    pub ext_dim: usize,
    pub socle_dim: usize,
}

impl<F: Field> ArSequence<F> {
    pub fn is_exact(&self) -> bool {
        self.inclusion.is_intertwiner(&self.left, &self.middle)
            && self.projection.is_intertwiner(&self.middle, &self.right)
            && self.inclusion.is_injective()
            && self.projection.is_surjective()
            && self.projection.compose(&self.inclusion).is_zero()
            && self.middle.total_dim() == self.left.total_dim() + self.right.total_dim()
    }

    /// Whether the projection has a section.
    pub fn splits(&self) -> bool {
        factors_through(&ModuleMap::identity(&self.right), &self.projection, &self.right, &self.middle)
    }
}

/// Whether `h: Y → Z` equals `g ∘ s` for some `s: Y → E`.
pub fn factors_through<F: Field>(
    h: &ModuleMap<F>,
    g: &ModuleMap<F>,
    y: &Representation<F>,
    e: &Representation<F>,
) -> bool {
    let f = y.field();
    let cols: Vec<Vec<F::Elem>> = hom_space(y, e).iter().map(|s| g.compose(s).flatten()).collect();
    let target = h.flatten();
    if cols.is_empty() {
        return target.iter().all(|x| f.is_zero(x));
    }
    let a = Matrix::from_columns(f, target.len(), &cols);
    a.solve_one(&Matrix::from_columns(f, target.len(), &[target])).is_some()
}

/// The almost split sequence ending at an indecomposable nonprojective `Z`,
/// in `mod A` (`relative = false`) or in the Gorenstein projectives.
pub fn almost_split_sequence<F: Field>(z: &Representation<F>, relative: bool) -> Result<ArSequence<F>> {
    if is_projective(z) {
        return Err(Error::Projective("no almost split sequence ends at a projective module".into()));
    }
    let x = if relative { tau_gp(z)? } else { tau(z)? };
    sequence_with_left(z, &x)
}

/// Realise a socle element of `Ext¹(Z, X)` over `End(Z)` as an extension.
pub(crate) fn sequence_with_left<F: Field>(z: &Representation<F>, x: &Representation<F>) -> Result<ArSequence<F>> {
    let alg = z.algebra();
    let f = z.field();
    let pres = presentation(z);
    let omega = &pres.syzygy;
    let iota = ModuleMap { components: pres.kernel.iter().map(|s| s.basis_matrix()).collect() };

    // Ext¹(Z, X) = Hom(ΩZ, X) / (maps extending to P0).
    let flat = ModuleMap::zero(omega, x).flatten().len();
    let mut extendable = Subspace::zero(f, flat);
    for b in hom_space(&pres.p0, x) {
        extendable.insert(b.compose(&iota).flatten());
    }
    let mut span = extendable.clone();
    let reps: Vec<ModuleMap<F>> = hom_space(omega, x).into_iter().filter(|h| span.insert(h.flatten())).collect();
    let ext_dim = reps.len();
    if ext_dim == 0 {
        return Err(Error::Degenerate("Ext¹(Z, τZ) vanishes".into()));
    }
    let frame = RelativeBasis::new(extendable, &reps.iter().map(|r| r.flatten()).collect::<Vec<_>>());
    let ext_coords = |h: &ModuleMap<F>| frame.coordinates(&h.flatten());

    // Right action of rad End(Z) through lifts to ΩZ.
    let rad = local_radical(z)
        .ok_or_else(|| Error::Degenerate("End(Z) is not local with residue field K".into()))?;
    let mut action_rows: Vec<Vec<F::Elem>> = Vec::new();
    for r in &rad {
        let lift = pres.lift_to_cover(r, &pres);
        let restricted = ModuleMap {
            components: (0..alg.num_vertices())
                .map(|v| {
                    let cols: Vec<Vec<F::Elem>> = pres.kernel[v]
                        .basis()
                        .iter()
                        .map(|k| pres.kernel[v].coordinates_unchecked(&lift.components[v].mul_vec(k)))
                        .collect();
                    Matrix::from_columns(f, omega.dim(v), &cols)
                })
                .collect(),
        };
        let images: Vec<Vec<F::Elem>> = reps.iter().map(|h| ext_coords(&h.compose(&restricted))).collect();
        let a = Matrix::from_columns(f, ext_dim, &images);
        action_rows.extend(a.to_rows());
    }
    let socle: Vec<Vec<F::Elem>> = if action_rows.is_empty() {
        (0..ext_dim).map(|i| (0..ext_dim).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect()
    } else {
        Matrix::from_rows(f, &action_rows).kernel()
    };
    let socle_dim = socle.len();
    let eta = socle.first().ok_or_else(|| Error::Degenerate("socle of Ext¹ is zero".into()))?;
    let mut h = ModuleMap::zero(omega, x);
    for (c, r) in eta.iter().zip(&reps) {
        if !f.is_zero(c) {
            h = h.add(&r.scale(c));
        }
    }

    // Pushout: E = (X ⊕ P0) / {(h(y), -ι(y))}.
    let sum = direct_sum(alg, &[x, &pres.p0]);
    let phi = ModuleMap {
        components: (0..alg.num_vertices())
            .map(|v| h.components[v].vstack(&iota.components[v].scale(&f.neg(&f.one()))))
            .collect(),
    };
    let (e, q) = cokernel_module(&phi, &sum);
    let inclusion = ModuleMap {
        components: (0..alg.num_vertices())
            .map(|v| q.components[v].select_columns(&(0..x.dim(v)).collect::<Vec<_>>()))
            .collect(),
    };
    let image = phi.image();
    let projection = ModuleMap {
        components: (0..alg.num_vertices())
            .map(|v| {
                let full = Matrix::zeros(f, z.dim(v), x.dim(v)).hstack(&pres.cover.components[v]);
                full.select_columns(&image[v].complement_positions())
            })
            .collect(),
    };
    Ok(ArSequence { left: x.clone(), middle: e, right: z.clone(), inclusion, projection, ext_dim, socle_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::modules::{decompose, simple};
    use crate::quiver::{linear_quiver, truncated_polynomial, BoundQuiverAlgebra};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sequence_over_ka2() {
        let a = BoundQuiverAlgebra::build(&PrimeField::new(101), &linear_quiver(FieldSpec::default(), 2)).unwrap();
        let s = almost_split_sequence(&simple(&a, 0), false).unwrap();
        assert!(s.is_exact() && !s.splits());
        assert_eq!(s.left.dims(), &[0, 1]);
        assert_eq!(s.middle.dims(), &[1, 1]);
        assert!(is_projective(&s.middle));
    }

    #[test]
    fn sequences_over_truncated_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for k in [2, 3] {
            let a = BoundQuiverAlgebra::build(&PrimeField::new(101), &truncated_polynomial(FieldSpec::default(), k)).unwrap();
            let s = almost_split_sequence(&simple(&a, 0), true).unwrap();
            assert!(s.is_exact() && !s.splits());
            assert_eq!(s.middle.dims(), &[2]);
            assert_eq!(decompose(&s.middle, &mut rng).len(), 1);
        }
    }
}
