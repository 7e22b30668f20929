use isocone::duality::{algebra_from_poset, character_order, joint_spectrum_order, morphism_check, PosetMap};
use isocone::fixtures::*;
use isocone::gps::{gps_complete, gps_order, Orientation};
use isocone::hermitian::{self, func_calc, HermitianMatrix};
use isocone::isotone_cone::{
    eval_expr, is_isotone, order_from_functions, prune, reconstruct, stone_nachbin_express, upset_decomposition,
    RealFunction,
};
use isocone::m2::{self, iso_membership, vec3, PauliCoords, PureStatePoint, Relation, SphericalRegion};
use isocone::poset::{reduce_preorder, FinitePoset, FinitePreorder};
use isocone::rng::seeded;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn random_hermitian(rng: &mut impl Rng, n: usize) -> HermitianMatrix {
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        rows[i][i] = Complex64::new(rng.gen_range(-3.0..3.0), 0.0);
        for j in i + 1..n {
            let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            rows[i][j] = z;
            rows[j][i] = z.conj();
        }
    }
    HermitianMatrix::from_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn closure_is_a_preorder(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = seeded(seed);
        let rel: Vec<Vec<bool>> = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(0.2)).collect()).collect();
        let ids = (0..n).map(|i| format!("e{i}")).collect();
        let q = FinitePreorder::closure_of(ids, rel).unwrap();
        for i in 0..n {
            prop_assert!(q.leq(i, i));
            for j in 0..n {
                for k in 0..n {
                    prop_assert!(!(q.leq(i, j) && q.leq(j, k)) || q.leq(i, k));
                }
            }
        }
        // The reduction is a poset and the projection is isotone and
        // reflects the order.
        let red = reduce_preorder(&q);
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(q.leq(i, j), red.poset.leq(red.projection[i], red.projection[j]));
            }
        }
    }

    #[test]
    fn stone_nachbin_and_prune_are_exact(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = random_poset_up_to(&mut rng, 7);
        let s = random_determining_set(&mut rng, &p);
        let f = random_isotone(&mut rng, &p);
        let e = stone_nachbin_express(&p, &s, &f).unwrap();
        let v = eval_expr(&e, &s, p.len()).unwrap();
        prop_assert!(v.max_abs_diff(&f) <= 1e-9);
        let pruned = prune(&e, &s, p.len()).unwrap();
        prop_assert!(pruned.size() <= e.size());
        prop_assert_eq!(eval_expr(&pruned, &s, p.len()).unwrap(), v);
    }

    #[test]
    fn isotone_functions_respect_the_order(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = random_poset_up_to(&mut rng, 8);
        let fs: Vec<RealFunction> = (0..4).map(|_| random_isotone(&mut rng, &p)).collect();
        // ≤ is contained in ≤_S for any family of isotone functions.
        let induced = order_from_functions(p.elements().to_vec(), &fs).unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                prop_assert!(!p.leq(i, j) || induced.preorder.leq(i, j));
            }
        }
        // The cone is closed under the lattice operations, sums and
        // nonnegative scaling.
        let (f, g) = (&fs[0], &fs[1]);
        for h in [f.max(g), f.min(g), f.add(g), f.scale(rng.gen_range(0.0..4.0))] {
            prop_assert!(is_isotone(&p, &h).unwrap());
        }
    }

    #[test]
    fn upset_decomposition_terms(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = random_poset_up_to(&mut rng, 8);
        let f = random_nonneg_isotone(&mut rng, &p);
        let terms = upset_decomposition(&p, &f).unwrap();
        for t in &terms {
            prop_assert!(t.coefficient > 0.0);
            let mask: Vec<bool> = t.indicator.values.iter().map(|&v| v == 1.0).collect();
            prop_assert!(p.is_upset(&mask));
        }
        prop_assert!(reconstruct(p.len(), &terms).max_abs_diff(&f) <= 1e-9);
    }
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn spectral_reconstruction(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = seeded(seed);
        let a = random_hermitian(&mut rng, n);
        let d = hermitian::spectral(&a);
        prop_assert!(d.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(d.reconstruct().dist(&a) <= 1e-9);
        for (i, u) in d.eigenvectors.iter().enumerate() {
            for (j, w) in d.eigenvectors.iter().enumerate() {
                let ip: Complex64 = u.iter().zip(w).map(|(x, y)| x.conj() * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((ip - Complex64::new(want, 0.0)).norm() <= 1e-9);
            }
        }
    }

    #[test]
    fn two_by_two_matches_characteristic_polynomial(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random_hermitian(&mut rng, 2);
        let tr = a.trace();
        let det = (a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0)).re;
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        let ev = hermitian::spectral(&a).eigenvalues;
        prop_assert!((ev[0] - (tr - disc) / 2.0).abs() <= 1e-9);
        prop_assert!((ev[1] - (tr + disc) / 2.0).abs() <= 1e-9);
    }

    #[test]
    fn lattice_symmetry_and_shift(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = seeded(seed);
        let a = random_hermitian(&mut rng, n);
        let b = random_hermitian(&mut rng, n);
        let k: f64 = rng.gen_range(-5.0..5.0);
        let (j, m) = hermitian::lattice_ops(&a, &b).unwrap();
        let (j2, m2) = hermitian::lattice_ops(&b, &a).unwrap();
        prop_assert!(j.dist(&j2) <= 1e-9 && m.dist(&m2) <= 1e-9);
        let shift = HermitianMatrix::scalar(n, k);
        let (js, ms) = hermitian::lattice_ops(&(&a + &shift), &(&b + &shift)).unwrap();
        prop_assert!(js.dist(&(&j + &shift)) <= 1e-9);
        prop_assert!(ms.dist(&(&m + &shift)) <= 1e-9);
        // a∨b + a∧b = a + b.
        prop_assert!((&j + &m).dist(&(&a + &b)) <= 1e-9);
    }

    #[test]
    fn commuting_lattice_ops_are_pointwise(seed in any::<u64>()) {
        // Diagonal embedding of the function cone of a poset.
        let mut rng = seeded(seed);
        let p = random_poset_up_to(&mut rng, 4);
        let f = random_isotone(&mut rng, &p);
        let g = random_isotone(&mut rng, &p);
        let (j, m) = hermitian::lattice_ops(&HermitianMatrix::diag(&f.values), &HermitianMatrix::diag(&g.values)).unwrap();
        prop_assert!(j.dist(&HermitianMatrix::diag(&f.max(&g).values)) <= 1e-9);
        prop_assert!(m.dist(&HermitianMatrix::diag(&f.min(&g).values)) <= 1e-9);
    }

    #[test]
    fn func_calc_nondecreasing_keeps_entrywise_order(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = random_poset_up_to(&mut rng, 4);
        let f = random_isotone(&mut rng, &p);
        let out = func_calc(&HermitianMatrix::diag(&f.values), |x| Some(x.powi(3) + x.exp())).unwrap();
        let values: Vec<f64> = (0..p.len()).map(|i| out.get(i, i).re).collect();
        let tol = 1e-9 * values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        let g = RealFunction { values };
        prop_assert!(isocone::isotone_cone::is_isotone_tol(p.as_preorder(), &g, tol).unwrap());
    }
}

#[test]
fn join_is_not_associative_off_the_commutative_case() {
    let s1 = HermitianMatrix::pauli(1);
    let s3 = HermitianMatrix::pauli(3);
    let minus_s1 = -&s1;
    let left = hermitian::join(&hermitian::join(&s3, &s1).unwrap(), &minus_s1).unwrap();
    let right = hermitian::join(&s3, &hermitian::join(&s1, &minus_s1).unwrap()).unwrap();
    let gap = left.dist(&right);
    // Frobenius gap from an independent dense eigensolver.
    assert!((gap - 0.5638581102178467).abs() <= 1e-9, "gap {gap}");
    assert!(gap > 1e-6);
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn membership_ignores_the_scalar_part(seed in any::<u64>(), region in 0usize..10) {
        let mut rng = seeded(seed);
        let (_, k) = &region_fixtures()[region];
        let v = vec3::scale(&random_unit_vector(&mut rng), rng.gen_range(0.0..4.0));
        let in_k = iso_membership(k, &PauliCoords::new(0.0, v).to_matrix()).unwrap();
        for c in [-100.0, -1.0, 3.5, 1e3] {
            prop_assert_eq!(iso_membership(k, &PauliCoords::new(c, v).to_matrix()).unwrap(), in_k);
        }
    }

    #[test]
    fn nondecreasing_functions_stay_in_the_isocone(seed in any::<u64>(), region in 0usize..10) {
        let mut rng = seeded(seed);
        let (_, k) = &region_fixtures()[region];
        let a = random_positive_iso_member(&mut rng, k);
        for f in [f64::sqrt as fn(f64) -> f64, f64::exp, |x: f64| x.powi(3), |x: f64| x.max(1.0)] {
            let fa = func_calc(&a, |x| Some(f(x.max(0.0)))).unwrap();
            prop_assert!(iso_membership(k, &fa).unwrap());
        }
    }

    #[test]
    fn pure_state_order_is_a_partial_order(seed in any::<u64>(), region in 0usize..10) {
        let mut rng = seeded(seed);
        let (_, k) = &region_fixtures()[region];
        for _ in 0..50 {
            let pts: Vec<PureStatePoint> = (0..3)
                .map(|_| PureStatePoint::from_bloch(random_unit_vector(&mut rng)).unwrap())
                .collect();
            let (p, q, r) = (&pts[0], &pts[1], &pts[2]);
            prop_assert_eq!(m2::pure_state_order(k, p, p), Relation::Equal);
            let pq = m2::pure_state_order(k, p, q);
            let qp = m2::pure_state_order(k, q, p);
            let flipped = match pq { Relation::Less => Relation::Greater, Relation::Greater => Relation::Less, x => x };
            prop_assert_eq!(qp, flipped);
            let qr = m2::pure_state_order(k, q, r);
            if pq == Relation::Less && qr == Relation::Less {
                prop_assert_eq!(m2::pure_state_order(k, p, r), Relation::Less);
            }
        }
    }

    #[test]
    fn dual_cone_matches_sampling(seed in any::<u64>(), region in 0usize..10) {
        // d is in the dual cone iff d·m ≥ 0 on K; sample K densely and
        // compare away from the boundary.
        let mut rng = seeded(seed);
        let (_, k) = &region_fixtures()[region];
        let samples: Vec<[f64; 3]> = (0..4000).map(|_| random_in_region(&mut rng, k))
            .chain(k.extreme_vertices().iter().copied()).collect();
        for _ in 0..20 {
            let d = random_unit_vector(&mut rng);
            let min = samples.iter().map(|m| vec3::dot(&d, m)).fold(f64::INFINITY, f64::min);
            if min < -1e-2 {
                prop_assert!(!k.dual_contains(&d));
            }
            if k.dual_contains(&d) {
                prop_assert!(min >= -1e-9);
            }
        }
    }

    #[test]
    fn hull_membership_has_a_conic_certificate(seed in any::<u64>(), region in 4usize..9) {
        let mut rng = seeded(seed);
        let (_, k) = &region_fixtures()[region];
        for _ in 0..50 {
            let u = random_unit_vector(&mut rng);
            let coeffs = k.conic_coefficients(&u);
            prop_assert_eq!(coeffs.is_some(), k.contains(&u));
            if let Some(c) = coeffs {
                prop_assert!(c.iter().all(|&x| x >= 0.0));
            }
        }
    }

    #[test]
    fn spectral_data_rebuilds_hermitian(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_hermitian2(&mut rng);
        let d = hermitian::spectral(&x);
        let xi = [d.eigenvectors[1][0], d.eigenvectors[1][1]];
        let back = m2::from_spectral_data(d.eigenvalues[1], d.eigenvalues[0], &xi).unwrap();
        prop_assert!(back.dist(&x) <= 1e-9);
    }

    #[test]
    fn join_coefficients_reconstruct(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random_hermitian2(&mut rng);
        let b = random_hermitian2(&mut rng);
        let c = m2::join_coeffs(&a, &b).unwrap();
        prop_assert!((0.0..=1.0).contains(&c.alpha) && c.beta >= 0.0);
        let rebuilt = &(&a.scale(c.alpha) + &b.scale(1.0 - c.alpha)) + &HermitianMatrix::scalar(2, c.beta);
        prop_assert!(rebuilt.dist(&hermitian::join(&a, &b).unwrap()) <= 1e-9);
    }

    #[test]
    fn hopf_ignores_global_phase(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = PureStatePoint::from_bloch(random_unit_vector(&mut rng)).unwrap();
        let phase = Complex64::from_polar(1.0, rng.gen_range(0.0..6.3));
        let h = m2::hopf(&[p.xi[0] * phase, p.xi[1] * phase]).unwrap();
        prop_assert!(vec3::dist(&h, &p.bloch) <= 1e-12);
        let q = PureStatePoint::from_bloch(random_unit_vector(&mut rng)).unwrap();
        let d = m2::fubini_study(&p, &q);
        prop_assert!((m2::transition_probability(&p, &q) - d.cos().powi(2)).abs() <= 1e-9);
    }
}

#[test]
fn epsilon_disk_against_the_top_state() {
    // [ξ] ≤ [t] iff FS([t],[ξ]) ≥ 2ε, K the cap of sphere angle 2ε.
    let mut rng = seeded(5);
    let top = PureStatePoint::from_bloch([0.0, 0.0, 1.0]).unwrap();
    for eps in [0.1, 0.25] {
        let k = SphericalRegion::cap([0.0, 0.0, 1.0], 2.0 * eps).unwrap();
        for _ in 0..2000 {
            let xi = PureStatePoint::from_bloch(random_unit_vector(&mut rng)).unwrap();
            let d = m2::fubini_study(&top, &xi);
            if (d - 2.0 * eps).abs() < 1e-6 {
                continue;
            }
            let rel = m2::pure_state_order(&k, &xi, &top);
            assert_eq!(rel == Relation::Less, d >= 2.0 * eps);
            assert_ne!(rel, Relation::Greater);
        }
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn character_order_round_trip(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = random_poset_up_to(&mut rng, 8);
        prop_assert_eq!(character_order(&algebra_from_poset(&p)), p);
    }

    #[test]
    fn pullback_is_contravariant(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b, c) = (random_poset_up_to(&mut rng, 6), random_poset_up_to(&mut rng, 6), random_poset_up_to(&mut rng, 6));
        let h = PosetMap { image: (0..a.len()).map(|_| rng.gen_range(0..b.len())).collect() };
        let g = PosetMap { image: (0..b.len()).map(|_| rng.gen_range(0..c.len())).collect() };
        let f = random_isotone(&mut rng, &c);
        prop_assert_eq!(g.compose(&h).pullback(&f), h.pullback(&g.pullback(&f)));
    }

    #[test]
    fn morphism_flags_agree(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = random_poset_up_to(&mut rng, 6);
        let m = random_poset_up_to(&mut rng, 6);
        let g = PosetMap { image: (0..n.len()).map(|_| rng.gen_range(0..m.len())).collect() };
        let r = morphism_check(&n, &m, &g);
        prop_assert!(r.star_morphism);
        prop_assert_eq!(r.isotone, r.pullback_preserves_cone);
    }

    #[test]
    fn joint_spectrum_order_is_coarser_than_product(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = random_poset_up_to(&mut rng, 8);
        let k = rng.gen_range(1..4);
        let fs: Vec<RealFunction> = (0..k).map(|_| random_isotone(&mut rng, &p)).collect();
        prop_assert!(joint_spectrum_order(&p, &fs).within_product_order());
    }

    #[test]
    fn gps_orders(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let e = random_metric_space(&mut rng, 10);
        let ks = random_landmarks(&mut rng, &e);
        let o = gps_order(&e, &ks, Orientation::Remark).unwrap();
        if gps_complete(&e, &ks).unwrap() {
            prop_assert!(o.preorder.is_antisymmetric());
        }
        // Each landmark distance is isotone for ≤_K.
        for &z in &e.resolve(&ks).unwrap() {
            let f = e.distance_function(z);
            for x in 0..e.len() {
                for y in 0..e.len() {
                    prop_assert!(!o.preorder.leq(x, y) || f[x] <= f[y] + 1e-12);
                }
            }
        }
        // More landmarks relate fewer pairs.
        let mut more = ks.clone();
        more.extend(random_landmarks(&mut rng, &e));
        more.sort();
        more.dedup();
        let finer = gps_order(&e, &more, Orientation::Remark).unwrap();
        let rev = gps_order(&e, &ks, Orientation::Reversed).unwrap();
        for x in 0..e.len() {
            for y in 0..e.len() {
                prop_assert!(!finer.preorder.leq(x, y) || o.preorder.leq(x, y));
                prop_assert_eq!(rev.preorder.leq(x, y), o.preorder.leq(y, x));
            }
        }
    }
}

#[test]
fn sprinkling_is_a_causal_order() {
    let s = isocone::poset::sprinkle_minkowski(60, 11);
    let p: &FinitePoset = &s.poset;
    let t = s.time();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if i != j && p.leq(i, j) {
                assert!(t[i] < t[j]);
                let (dt, dx) = (t[j] - t[i], s.coords[j].1 - s.coords[i].1);
                assert!(dt >= dx.abs() - 1e-12);
            }
        }
    }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn reduction_classes_match_step_function_classes(seed in any::<u64>(), n in 1usize..6) {
        // x ~ y iff no up-set indicator separates them; up-sets found by
        // brute force over all subsets.
        let mut rng = seeded(seed);
        let rel: Vec<Vec<bool>> = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(0.3)).collect()).collect();
        let q = FinitePreorder::closure_of((0..n).map(|i| format!("e{i}")).collect(), rel).unwrap();
        let upsets: Vec<u32> = (0..1u32 << n)
            .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || (0..n).all(|y| !q.leq(x, y) || m >> y & 1 == 1)))
            .collect();
        let red = reduce_preorder(&q);
        for x in 0..n {
            for y in 0..n {
                let unseparated = upsets.iter().all(|m| (m >> x & 1) == (m >> y & 1));
                prop_assert_eq!(red.projection[x] == red.projection[y], unseparated);
            }
        }
    }
}
