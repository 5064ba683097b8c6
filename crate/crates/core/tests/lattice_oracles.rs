//! Lines and roots of `I_{1,l}` checked against a brute-force search in the
//! classical `(h; e_1..e_l)` coordinates, where the form is
//! `diag(1, -1, …, -1)` and `-K = 3h - Σ e_i`.

use std::collections::BTreeSet;

use exdp::dplattice::{DPLattice, LatticeVector};
use exdp::rootdata::cartan_isomorphism;
use exdp::{RootSystem, TypeTag};

/// All `(a; b)` with `a² - Σb² = norm`, `3a - Σb = degree`, `a` and `b_i`
/// in the given ranges.
fn brute(l: usize, norm: i64, degree: i64, a_range: (i64, i64), b_range: (i64, i64)) -> Vec<(i64, Vec<i64>)> {
    fn rec(
        b: &mut Vec<i64>,
        l: usize,
        sq: i64,
        sum: i64,
        target_sq: i64,
        target_sum: i64,
        r: (i64, i64),
        out: &mut Vec<Vec<i64>>,
    ) {
        if b.len() == l {
            if sq == target_sq && sum == target_sum {
                out.push(b.clone());
            }
            return;
        }
        for v in r.0..=r.1 {
            if sq + v * v > target_sq {
                continue;
            }
            b.push(v);
            rec(b, l, sq + v * v, sum + v, target_sq, target_sum, r, out);
            b.pop();
        }
    }
    let mut found = Vec::new();
    for a in a_range.0..=a_range.1 {
        let target_sq = a * a - norm;
        let target_sum = 3 * a - degree;
        if target_sq < 0 {
            continue;
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), l, 0, 0, target_sq, target_sum, b_range, &mut out);
        found.extend(out.into_iter().map(|b| (a, b)));
    }
    found
}

fn to_lattice(lat: &DPLattice, a: i64, b: &[i64]) -> LatticeVector {
    let gb = lat.geometric_basis().unwrap();
    b.iter()
        .zip(&gb.e)
        .fold(gb.h.scale(a), |acc, (bi, e)| acc.sub(&e.scale(*bi)))
}

#[test]
fn lines_match_classical_search() {
    for (t, count) in TypeTag::ALL.into_iter().zip([16, 27, 56, 240]) {
        let lat = DPLattice::build(&RootSystem::build(t)).unwrap();
        let oracle: BTreeSet<LatticeVector> = brute(t.rank(), -1, 1, (0, 6), (-1, 3))
            .iter()
            .map(|(a, b)| to_lattice(&lat, *a, b))
            .collect();
        let e = lat.enumerate_lines().unwrap();
        assert_eq!(oracle.len(), count, "{t}");
        assert_eq!(e.vectors.iter().cloned().collect::<BTreeSet<_>>(), oracle, "{t}");
        for m in &e.vectors {
            assert_eq!(lat.dot(m, m), -1);
            assert_eq!(lat.dot(m, lat.kappa()), 1);
        }
    }
}

#[test]
fn roots_match_classical_search() {
    for (t, count) in TypeTag::ALL.into_iter().zip([40, 72, 126, 240]) {
        let lat = DPLattice::build(&RootSystem::build(t)).unwrap();
        let oracle: BTreeSet<LatticeVector> = brute(t.rank(), -2, 0, (-3, 3), (-2, 2))
            .iter()
            .map(|(a, b)| to_lattice(&lat, *a, b))
            .collect();
        let e = lat.enumerate_roots().unwrap();
        assert_eq!(oracle.len(), count, "{t}");
        assert_eq!(e.vectors.iter().cloned().collect::<BTreeSet<_>>(), oracle, "{t}");
    }
}

/// Norm-2 vectors of `D8 ∪ (D8 + ½·1)`, counted in doubled coordinates.
#[test]
fn e8_root_count_from_even_coordinate_model() {
    let mut n = 0;
    for mask in 0u32..(3u32.pow(8)) {
        // integer part: entries in {-1, 0, 1}, even sum, norm 2
        let v: Vec<i32> = (0..8).map(|i| (mask / 3u32.pow(i) % 3) as i32 - 1).collect();
        if v.iter().map(|x| x * x).sum::<i32>() == 2 && v.iter().sum::<i32>() % 2 == 0 {
            n += 1;
        }
    }
    // half-integer part: all entries ±½ with an even number of minus signs
    n += (0u32..256).filter(|s| s.count_ones() % 2 == 0).count();
    let lat = DPLattice::build(&RootSystem::build(TypeTag::E8)).unwrap();
    assert_eq!(lat.enumerate_roots().unwrap().vectors.len(), n);
}

#[test]
fn lines_form_one_weyl_orbit() {
    for t in TypeTag::ALL {
        let lat = DPLattice::build(&RootSystem::build(t)).unwrap();
        let orbit = lat.orbit(&[lat.gamma()]);
        let lines: BTreeSet<_> = lat.enumerate_lines().unwrap().vectors.into_iter().collect();
        assert_eq!(orbit, lines, "{t}");
    }
}

#[test]
fn roots_are_closed_and_of_the_right_type() {
    for t in TypeTag::ALL {
        let rs = RootSystem::build(t);
        let lat = DPLattice::build(&rs).unwrap();
        let roots = lat.enumerate_roots().unwrap().vectors;
        let set: BTreeSet<_> = roots.iter().cloned().collect();
        for r in &roots {
            for i in 1..=t.rank() {
                assert!(set.contains(&lat.reflect(r, &lat.delta(i))));
            }
            assert!(set.contains(&r.neg()));
        }
        let simple = lat.simple_system(&roots);
        let perm = cartan_isomorphism(&lat.cartan_of(&simple), rs.cartan());
        assert!(perm.is_some(), "{t}");
        // δ_i realise the root-data Cartan matrix through the node map
        let deltas: Vec<_> = (1..=t.rank()).map(|i| lat.delta(i)).collect();
        let c = lat.cartan_of(&deltas);
        for a in 1..=t.rank() {
            for b in 1..=t.rank() {
                let (ra, rb) = (lat.rootdata_node(a), lat.rootdata_node(b));
                assert_eq!(c[a - 1][b - 1], rs.cartan()[ra - 1][rb - 1]);
            }
        }
    }
}

#[test]
fn certificates_cover_the_oracle() {
    for t in TypeTag::ALL {
        let lat = DPLattice::build(&RootSystem::build(t)).unwrap();
        for e in [lat.enumerate_lines().unwrap(), lat.enumerate_roots().unwrap()] {
            let c = &e.certificate;
            let scanned: u64 = c.delta_box.iter().map(|(lo, hi)| (hi - lo + 1) as u64).product();
            assert_eq!(scanned, c.candidates_scanned);
            for v in &e.vectors {
                for (x, (lo, hi)) in v.coeffs().iter().zip(&c.delta_box) {
                    assert!(lo <= x && x <= hi);
                }
                assert_eq!(v.gamma_coeff(), c.gamma_coeff);
            }
        }
    }
}

#[test]
fn quotient_by_kappa_is_the_weight_lattice() {
    for (t, order) in TypeTag::ALL.into_iter().zip([4, 3, 2, 1]) {
        let rs = RootSystem::build(t);
        let lat = DPLattice::build(&rs).unwrap();
        let q = lat.quotient_by_kappa().unwrap();
        assert_eq!(q.root_lattice_index, order, "{t}");
        assert_eq!(q.discriminant_order(), order);
        // oracle: |P/Q| = det of the Cartan matrix
        assert_eq!(exdp::intmat::det(rs.cartan()), order);
        assert_eq!(q.pairing_det.abs(), 1);
        assert!(lat.project(&q, lat.kappa()).iter().all(|&c| c == 0));
        for (a, w) in q.lifts.iter().enumerate() {
            let img = lat.project(&q, w);
            for (b, c) in img.iter().enumerate() {
                assert_eq!(*c, i64::from(a == b));
            }
        }
    }
}
