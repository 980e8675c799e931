use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gproj_core::classify::{classify, gamma_type, orbit_count, s_count, Dynkin, Verdict};
use gproj_core::fixtures;
use gproj_core::gorenstein::{gp_cosyzygy, is_gp};
use gproj_core::linalg::{Field, Matrix, PrimeField, Subspace};
use gproj_core::modules::{
    decompose, direct_sum, dualize, graded_hom_space, graded_hom_space_direct, graded_projective_sum, graded_regular,
    graded_syzygy, hom_space, hom_space_direct, is_isomorphic, is_projective, local_radical, projective_sum,
    random_module, syzygy, ModuleFile, Representation,
};
use gproj_core::quiver::{build_lambda_k, tensor_presentation, truncated_polynomial, Algebra, BoundQuiverAlgebra};

const P: u32 = 101;

fn field() -> PrimeField {
    PrimeField::new(P)
}

fn algebra(name: &str, k: usize) -> Algebra<PrimeField> {
    let p = build_lambda_k(&fixtures::load(name).unwrap().unwrap(), k).unwrap();
    BoundQuiverAlgebra::build(&field(), &p).unwrap()
}

fn sample(name: &str, k: usize, seed: u64) -> Representation<PrimeField> {
    random_module(&algebra(name, k), &mut ChaCha8Rng::seed_from_u64(seed))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    prop::collection::vec(0..P, rows * cols).prop_map(move |data| Matrix::new(field(), rows, cols, data))
}

fn fixture_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["ka2", "ka3", "kd4", "sec5_3_tilted"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
        for v in m.kernel() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == 0));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn product_transpose((a, b) in (1usize..5, 1usize..5, 1usize..5).prop_flat_map(|(r, s, t)| (matrix(r, s), matrix(s, t)))) {
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        prop_assert!(a.mul(&b).rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..6).prop_flat_map(|n| matrix(n, n))) {
        let f = field();
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(&f, m.rows()));
            prop_assert_eq!(inv.mul(&m), Matrix::identity(&f, m.rows()));
        } else {
            prop_assert!(m.rank() < m.rows());
        }
    }

    #[test]
    fn subspace_dimension_formula(
        (u, w) in (1usize..7).prop_flat_map(|n| (prop::collection::vec(prop::collection::vec(0..P, n), 0..5),
                                                  prop::collection::vec(prop::collection::vec(0..P, n), 0..5)))
    ) {
        let f = field();
        let n = u.first().or(w.first()).map_or(1, |v| v.len());
        let su = Subspace::span(&f, n, u.clone());
        let sw = Subspace::span(&f, n, w.clone());
        prop_assert_eq!(su.sum(&sw).dim() + su.intersection(&sw).dim(), su.dim() + sw.dim());
        for v in &u {
            prop_assert!(su.contains(v));
        }
        let cols: Vec<Vec<u32>> = u.clone();
        if !cols.is_empty() {
            prop_assert_eq!(su.dim(), Matrix::from_columns(&f, n, &cols).rank());
        }
    }

    #[test]
    fn yoneda(name in fixture_name(), k in 1usize..4, seed in any::<u64>()) {
        let m = sample(name, k, seed);
        let a = m.algebra().clone();
        for v in 0..a.num_vertices() {
            prop_assert_eq!(hom_space(&projective_sum(&a, &[v]), &m).len(), m.dim(v));
        }
    }

    #[test]
    fn hom_space_is_exactly_the_intertwiners(name in fixture_name(), seed in any::<u64>(), other in any::<u64>()) {
        let m = sample(name, 2, seed);
        let n = sample(name, 2, other);
        let h = hom_space(&m, &n);
        prop_assert!(h.iter().all(|g| g.is_intertwiner(&m, &n)));
        prop_assert_eq!(h.len(), hom_space_direct(&m, &n).len());
    }

    #[test]
    fn decomposition_round_trip(name in fixture_name(), seed in any::<u64>()) {
        let m = sample(name, 2, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let d = decompose(&m, &mut rng);
        let parts = d.modules();
        for p in &parts {
            prop_assert!(local_radical(p).is_some());
        }
        let back = direct_sum(m.algebra(), &parts);
        prop_assert!(is_isomorphic(&back, &m, &mut rng).is_some());
    }

    #[test]
    fn double_dual(name in fixture_name(), seed in any::<u64>()) {
        let m = sample(name, 2, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dd = dualize(&dualize(&m));
        prop_assert!(is_isomorphic(&dd, &m, &mut rng).is_some());
    }

    #[test]
    fn frobenius_round_trip(name in prop::sample::select(vec!["ka2", "ka3"]), k in 2usize..4, seed in any::<u64>()) {
        // Ω of anything is Gorenstein projective over a 1-Gorenstein algebra.
        let m = syzygy(&sample(name, k, seed));
        prop_assert!(is_gp(&m).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for part in decompose(&m, &mut rng).modules().into_iter().filter(|p| !is_projective(p)) {
            let omega = syzygy(part);
            prop_assert!(is_gp(&omega).unwrap() && !is_projective(&omega));
            let back = syzygy(&gp_cosyzygy(part).unwrap());
            let kept: Vec<_> = decompose(&back, &mut rng).modules().into_iter().filter(|p| !is_projective(p)).cloned().collect();
            prop_assert_eq!(kept.len(), 1);
            prop_assert!(is_isomorphic(&kept[0], part, &mut rng).is_some());
        }
    }

    #[test]
    fn module_file_round_trip(name in fixture_name(), seed in any::<u64>()) {
        let m = sample(name, 2, seed);
        let file = ModuleFile::from_json(&ModuleFile::from_module(&m).to_json()).unwrap();
        let back = file.to_module(m.algebra()).unwrap();
        prop_assert_eq!(back.maps(), m.maps());
    }

    #[test]
    fn graded_hom_agrees_with_masked_solve(k in 2usize..4, shifts in prop::collection::vec(-2i64..3, 3), v in 0usize..2) {
        let a = algebra("ka2", k);
        let mods = vec![
            graded_projective_sum(&a, &[v], &[shifts[0]]),
            graded_regular(&a, shifts[1]).truncate_le(0),
            graded_syzygy(&graded_regular(&a, 1).truncate_le(shifts[2].max(0))),
        ];
        for x in &mods {
            for y in &mods {
                for s in -2..=2 {
                    let y = y.shift(s);
                    prop_assert_eq!(graded_hom_space(x, &y).len(), graded_hom_space_direct(x, &y).len());
                }
            }
        }
    }

    #[test]
    fn lambda_k_dimension(name in fixture_name(), k in 1usize..5) {
        let base = BoundQuiverAlgebra::build(&field(), &fixtures::load(name).unwrap().unwrap()).unwrap();
        prop_assert_eq!(algebra(name, k).dim(), k * base.dim());
    }

    #[test]
    fn tensor_multiplies_dimensions(name in fixture_name(), k in 1usize..4) {
        let lam = fixtures::load(name).unwrap().unwrap();
        let rk = truncated_polynomial(lam.field, k);
        let t = BoundQuiverAlgebra::build(&field(), &tensor_presentation(&lam, &rk).unwrap()).unwrap();
        let base = BoundQuiverAlgebra::build(&field(), &lam).unwrap();
        prop_assert_eq!(t.dim(), base.dim() * k);
    }

    #[test]
    fn a2_row_of_the_table(k in 1usize..12) {
        let finite = classify(Some(Dynkin::A(2)), k).verdict == Verdict::CmFinite;
        prop_assert_eq!(finite, k <= 5);
        prop_assert_eq!(finite, s_count(k).is_ok());
        if (2..=5).contains(&k) {
            let g = gamma_type(Dynkin::A(2), k).unwrap();
            prop_assert_eq!(orbit_count(g, k, 2).unwrap(), s_count(k).unwrap());
        }
    }
}

#[test]
fn field_elements_stay_canonical() {
    let f = field();
    for a in 0..P {
        for b in [0, 1, 50, 100] {
            assert!(f.mul(&a, &b) < P && f.add(&a, &b) < P && f.sub(&a, &b) < P);
        }
    }
}
