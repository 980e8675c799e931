//! Simple, projective and injective modules, duality and restriction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::Algebra;

use super::cover::{presentation, projective_sum, syzygy};
use super::rep::{cokernel_module, kernel_module, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleKind {
    Simple,
    Projective,
    Injective,
}

pub fn standard_module<F: Field>(alg: &Algebra<F>, v: usize, kind: ModuleKind) -> Representation<F> {
    match kind {
        ModuleKind::Simple => simple(alg, v),
        ModuleKind::Projective => projective_sum(alg, &[v]),
        ModuleKind::Injective => dualize(&projective_sum(&alg.opposite(), &[v])),
    }
}

pub fn simple<F: Field>(alg: &Algebra<F>, v: usize) -> Representation<F> {
    let f = alg.field();
    let mut dims = vec![0; alg.num_vertices()];
    dims[v] = 1;
    let maps = alg.quiver().arrows.iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

/// `A_A` as a module over itself.
pub fn regular_module<F: Field>(alg: &Algebra<F>) -> Representation<F> {
    projective_sum(alg, &(0..alg.num_vertices()).collect::<Vec<_>>())
}

/// `D = Hom_K(-, K)`: a module over the opposite algebra.
pub fn dualize<F: Field>(m: &Representation<F>) -> Representation<F> {
    let op = m.algebra().opposite();
    let maps = m.maps().iter().map(|a| a.transpose()).collect();
    Representation::from_parts(op, m.dims().to_vec(), maps)
}

/// `M* = Hom_A(M, A)` as a module over the opposite algebra, computed as
/// the kernel of `P0* → P1*` for a minimal presentation `P1 → P0 → M`.
pub fn star_dual<F: Field>(m: &Representation<F>) -> Representation<F> {
    let op = m.algebra().opposite();
    let d = presentation(m).first_map().dual();
    let (dom, _cod, g) = d.to_module_map(&op);
    kernel_module(&g, &dom).0
}

/// The transpose `Tr M = coker(P0* → P1*)` over the opposite algebra.
pub fn transpose_tr<F: Field>(m: &Representation<F>) -> Representation<F> {
    let op = m.algebra().opposite();
    let d = presentation(m).first_map().dual();
    let (_dom, cod, g) = d.to_module_map(&op);
    cokernel_module(&g, &cod).0
}

/// `(Ω(M*))*`, the cokernel of a left projective approximation when `M` is
/// Gorenstein projective. No membership check here.
pub fn gp_cosyzygy_unchecked<F: Field>(m: &Representation<F>) -> Representation<F> {
    star_dual(&syzygy(&star_dual(m)))
}

/// Forget the loops of a `Λ_k`-module, leaving a `Λ`-module.
pub fn restrict_to_base<F: Field>(m: &Representation<F>) -> Result<Representation<F>> {
    let (shape, base) = m
        .algebra()
        .lambda_k_structure()
        .ok_or_else(|| Error::Shape("algebra is not of the form Λ ⊗ K[X]/(X^k)".into()))?;
    let maps = shape.base_arrows.iter().map(|&a| m.map(a).clone()).collect();
    Ok(Representation::from_parts(base.clone(), m.dims().to_vec(), maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FieldSpec, PrimeField};
    use crate::quiver::{build_lambda_k, linear_quiver, BoundQuiverAlgebra};

    fn ka2() -> Algebra<PrimeField> {
        BoundQuiverAlgebra::build(&PrimeField::new(101), &linear_quiver(FieldSpec::default(), 2)).unwrap()
    }

    #[test]
    fn standard_modules_of_ka2() {
        let a = ka2();
        assert_eq!(standard_module(&a, 1, ModuleKind::Projective).dims(), &[0, 1]);
        assert_eq!(standard_module(&a, 0, ModuleKind::Projective).dims(), &[1, 1]);
        let i1 = standard_module(&a, 0, ModuleKind::Injective);
        assert_eq!(i1.dims(), &[1, 0]);
        assert!(Algebra::ptr_eq(i1.algebra(), &a));
    }

    #[test]
    fn star_of_projective_is_projective() {
        let a = ka2();
        let p1 = standard_module(&a, 0, ModuleKind::Projective);
        let s = star_dual(&p1);
        // Hom(e_1 A, A) = A e_1 has dimension 1.
        assert_eq!(s.total_dim(), 1);
        assert_eq!(transpose_tr(&p1).total_dim(), 0);
    }

    #[test]
    fn restriction_of_free_module() {
        let f = PrimeField::new(101);
        let l2 = BoundQuiverAlgebra::build(&f, &build_lambda_k(&linear_quiver(FieldSpec::default(), 2), 2).unwrap()).unwrap();
        let r = restrict_to_base(&regular_module(&l2)).unwrap();
        assert_eq!(r.total_dim(), 6);
        assert_eq!(r.algebra().dim(), 3);
    }
}
