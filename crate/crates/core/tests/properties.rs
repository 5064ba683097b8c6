use exdp::dplattice::{DPLattice, LatticeVector};
use exdp::ellmoduli::{
    construct_marked_dp, effective_roots, pic_add, recover_psi, subgroup_psi_basis, EcPoint,
    EllipticCurve, PicClass, PsiHom,
};
use exdp::instability::{descend, Cocharacter};
use exdp::localsing::{brieskorn_pham, milnor_number, LocalPoly, PrimeField};
use exdp::{RootSystem, TypeTag};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn any_tag() -> impl Strategy<Value = TypeTag> {
    prop::sample::select(TypeTag::ALL.to_vec())
}

fn tag_and_vec(lo: i64, hi: i64, extra: usize) -> impl Strategy<Value = (TypeTag, Vec<i64>)> {
    any_tag().prop_flat_map(move |t| (Just(t), prop::collection::vec(lo..=hi, t.rank() + extra)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn descent_lowers_two_rho_pairing_by_two((t, v) in tag_and_vec(-5, 5, 0)) {
        let rs = RootSystem::build(t);
        let d = descend(&rs, &Cocharacter(v.clone())).unwrap();
        prop_assert!(d.result.is_nonpositive());
        let before = rs.pair(&v, rs.two_rho()).unwrap();
        let after = rs.pair(d.result.coeffs(), rs.two_rho()).unwrap();
        prop_assert_eq!((before - after) % 2, 0);
        prop_assert_eq!(d.trace.len() as i64, (before - after) / 2);
    }

    #[test]
    fn reflections_are_isometries((t, v) in tag_and_vec(-4, 4, 1), i in 1usize..=8, j in 1usize..=8) {
        let lat = DPLattice::build(&RootSystem::build(t)).unwrap();
        let (i, j) = (1 + (i - 1) % t.rank(), 1 + (j - 1) % t.rank());
        let x = LatticeVector(v);
        let y = lat.delta(j).add(&lat.gamma());
        let (di, sx, sy) = (lat.delta(i), lat.reflect(&x, &lat.delta(i)), lat.reflect(&y, &lat.delta(i)));
        prop_assert_eq!(lat.dot(&sx, &sy), lat.dot(&x, &y));
        prop_assert_eq!(lat.reflect(&sx, &di), x.clone());
        prop_assert_eq!(lat.dot(&sx, lat.kappa()), lat.dot(&x, lat.kappa()));
    }

    #[test]
    fn dominant_representative_is_dominant((t, v) in tag_and_vec(-3, 3, 1)) {
        let lat = DPLattice::build(&RootSystem::build(t)).unwrap();
        let x = LatticeVector(v);
        let (dom, word) = lat.dominant_representative(&x);
        prop_assert!(lat.delta_profile(&dom).iter().all(|&p| p >= 0));
        prop_assert_eq!(lat.dot(&dom, &dom), lat.dot(&x, &x));
        let back = word.iter().rev().fold(dom.clone(), |acc, &i| lat.reflect(&acc, &lat.delta(i)));
        prop_assert_eq!(back, x);
    }

    #[test]
    fn group_law_axioms(seed in any::<u64>(), p in prop::sample::select(vec![101u64, 10007, 65537])) {
        let c = EllipticCurve::new(p, 1, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, d) = (c.random_point(&mut rng), c.random_point(&mut rng), c.random_point(&mut rng));
        let ab = c.add(&a, &b).unwrap();
        prop_assert_eq!(ab, c.add(&b, &a).unwrap());
        prop_assert_eq!(c.add(&ab, &d).unwrap(), c.add(&a, &c.add(&b, &d).unwrap()).unwrap());
        prop_assert_eq!(c.add(&a, &c.neg(&a).unwrap()).unwrap(), EcPoint::Infinity);
        prop_assert!(c.contains(&ab));
        let k = (seed % 50) as i64 - 25;
        prop_assert_eq!(
            c.scalar_mul(k + 1, &a).unwrap(),
            c.add(&c.scalar_mul(k, &a).unwrap(), &a).unwrap()
        );
        let x = PicClass { curve: c, pt: a, deg: 1 };
        let y = PicClass { curve: c, pt: b, deg: -2 };
        prop_assert_eq!(pic_add(&x, &y).unwrap(), pic_add(&y, &x).unwrap());
    }

    #[test]
    fn recover_inverts_construct(seed in any::<u64>(), t in any_tag(), p in prop::sample::select(vec![101u64, 10007, 65537])) {
        let c = EllipticCurve::new(p, 2, 3).unwrap();
        let lat = DPLattice::build(&RootSystem::build(t)).unwrap();
        let q = subgroup_psi_basis(&lat).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = PsiHom::random(c, &lat, &q, &mut rng).unwrap();
        let m = construct_marked_dp(&psi, &lat).unwrap();
        prop_assert_eq!(m.points.len(), t.rank());
        prop_assert_eq!(recover_psi(&m).unwrap(), psi.clone());
        // arbitrary δ-images, not necessarily coming from P
        let raw: Vec<EcPoint> = (0..t.rank()).map(|_| c.random_point(&mut rng)).collect();
        let psi2 = PsiHom::new(c, t, raw).unwrap();
        prop_assert_eq!(recover_psi(&construct_marked_dp(&psi2, &lat).unwrap()).unwrap(), psi2);
    }

    #[test]
    fn kernel_roots_are_exactly_the_detected_ones(seed in any::<u64>()) {
        // small field so that kernel roots actually occur
        let c = EllipticCurve::new(101, 1, 7).unwrap();
        let lat = DPLattice::build(&RootSystem::build(TypeTag::E6)).unwrap();
        let q = subgroup_psi_basis(&lat).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = PsiHom::random(c, &lat, &q, &mut rng).unwrap();
        let found = effective_roots(&psi, &lat).unwrap();
        for r in lat.enumerate_roots().unwrap().vectors {
            let in_kernel = psi.eval(&r).unwrap().pt.is_infinity();
            prop_assert_eq!(in_kernel, found.contains(&r));
        }
        for r in &found {
            prop_assert!(found.contains(&r.neg()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn milnor_number_is_coordinate_free(entries in prop::collection::vec(-3i64..=3, 9), pick in 0usize..3) {
        let r = |n: i64| BigRational::from_integer(n.into());
        let a = [
            [r(entries[0]), r(entries[1]), r(entries[2])],
            [r(entries[3]), r(entries[4]), r(entries[5])],
            [r(entries[6]), r(entries[7]), r(entries[8])],
        ];
        let m: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        prop_assume!(exdp::intmat::det(&m) % 10007 != 0);
        let f: LocalPoly = ["x^2+y^3+z^4", "z^2+y^3+x^5", "x^2*y+y^3+z^2"][pick].parse().unwrap();
        let field = PrimeField::default();
        let before = milnor_number(&f, 16, &field).unwrap().mu();
        let after = milnor_number(&f.linear_substitution(&a), 16, &field).unwrap().mu();
        prop_assert_eq!(before, after);
    }
}

#[test]
fn brieskorn_pham_grid() {
    let field = PrimeField::default();
    for a in 2..=6u32 {
        for b in 2..=6u32 {
            for c in 2..=6u32 {
                let mu = milnor_number(&brieskorn_pham(a, b, c), 18, &field).unwrap().mu();
                assert_eq!(mu, Some(((a - 1) * (b - 1) * (c - 1)) as usize), "{a} {b} {c}");
            }
        }
    }
}
