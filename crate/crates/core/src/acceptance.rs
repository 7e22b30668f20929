//! The acceptance suite: every criterion at its stated sizes and
//! tolerances, with measured numbers and wall-clock limits.

use std::f64::consts::FRAC_PI_4;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::duality::{algebra_from_poset, character_order};
use crate::fixtures::*;
use crate::gps::{gps_order, FiniteMetricSpace, Orientation};
use crate::hermitian::{self, projection_decomposition, HermitianMatrix};
use crate::isotone_cone::{
    cobounded_commutative, eval_expr, is_isotone, is_isotone_tol, minimal_witness, order_from_functions,
    reconstruct, stone_nachbin_express, upset_decomposition, RealFunction,
};
use crate::m2::{
    cobounded_witness, iso_membership, join_coeffs, pure_state_order, transition_probability, transversality,
    PureStatePoint, Relation, SphericalRegion, Transversality,
};
use crate::poset::FinitePoset;
use crate::rng::substream;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub elapsed_ms: f64,
    /// Wall-clock limit, if the criterion has one.
    pub limit_ms: Option<f64>,
    pub seed: u64,
    pub metrics: Value,
}

impl CriterionResult {
    /// One line: `PASS [3] name (120.4 ms / 30000 ms) {...}`.
    pub fn line(&self) -> String {
        let time = match self.limit_ms {
            Some(l) => format!("{:.1} ms / {:.0} ms", self.elapsed_ms, l),
            None => format!("{:.1} ms", self.elapsed_ms),
        };
        format!(
            "{} [{}] {} ({}) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            time,
            self.metrics
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AcceptanceReport {
    pub seed: u64,
    pub all_passed: bool,
    pub criteria: Vec<CriterionResult>,
}

type Check = fn(&mut crate::rng::SeededRng) -> (bool, Value);

const CRITERIA: [(u32, &str, Option<u64>, Check); 11] = [
    (1, "stone_nachbin_exactness", Some(10), stone_nachbin),
    (2, "gelfand_naimark_round_trip", Some(5), gelfand_naimark),
    (3, "m2_classification_closure", Some(30), m2_closure),
    (4, "join_coefficients", Some(10), join_coefficients),
    (5, "epsilon_disk_thresholds", Some(20), epsilon_disk),
    (6, "transversality_cases", None, transversality_cases),
    (7, "cobounded_duality", None, cobounded_duality),
    (8, "projection_decomposition", None, projection_decompositions),
    (9, "commuting_products", None, commuting_products),
    (10, "gps_consistency", None, gps_consistency),
    (11, "minimality", None, minimality),
];

pub fn criterion_ids() -> Vec<u32> {
    CRITERIA.iter().map(|c| c.0).collect()
}

/// Runs one criterion on stream `id` of `seed`; `None` for unknown ids.
pub fn run_criterion(id: u32, seed: u64) -> Option<CriterionResult> {
    let &(id, name, limit_s, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let mut rng = substream(seed, id as u64);
    let start = Instant::now();
    let (ok, metrics) = check(&mut rng);
    let elapsed = start.elapsed();
    let limit = limit_s.map(Duration::from_secs);
    Some(CriterionResult {
        id,
        name,
        passed: ok && limit.is_none_or(|l| elapsed < l),
        elapsed_ms: elapsed.as_secs_f64() * 1e3,
        limit_ms: limit.map(|l| l.as_secs_f64() * 1e3),
        seed,
        metrics,
    })
}

pub fn run_all(seed: u64) -> AcceptanceReport {
    let criteria: Vec<CriterionResult> = CRITERIA.iter().filter_map(|c| run_criterion(c.0, seed)).collect();
    AcceptanceReport { seed, all_passed: criteria.iter().all(|c| c.passed), criteria }
}

fn same_relation(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    a == b
}

fn stone_nachbin(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let mut max_err = 0.0_f64;
    let mut failures = 0;
    for _ in 0..200 {
        let p = random_poset_up_to(rng, 7);
        let s = random_determining_set(rng, &p);
        for _ in 0..20 {
            let target = random_isotone(rng, &p);
            match stone_nachbin_express(&p, &s, &target).and_then(|e| eval_expr(&e, &s, p.len())) {
                Ok(v) => max_err = max_err.max(v.max_abs_diff(&target)),
                Err(_) => failures += 1,
            }
        }
    }
    (failures == 0 && max_err <= 1e-9, json!({"posets": 200, "targets": 4000, "max_error": max_err, "failures": failures}))
}

fn gelfand_naimark(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let mut matches = 0;
    for _ in 0..500 {
        let p = random_poset_up_to(rng, 8);
        let back = character_order(&algebra_from_poset(&p));
        if back.elements() == p.elements() && same_relation(back.relation(), p.relation()) {
            matches += 1;
        }
    }
    (matches == 500, json!({"posets": 500, "exact_round_trips": matches}))
}

fn m2_closure(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let mut failures = 0;
    let mut non_commuting = 0;
    let fixtures = region_fixtures();
    let pairs_per_region = 10_000;
    for (_, k) in &fixtures {
        for _ in 0..pairs_per_region {
            let a = random_iso_member(rng, k);
            let b = random_iso_member(rng, k);
            if a.commutator_norm(&b) > 1e-9 {
                non_commuting += 1;
            }
            let t: f64 = rand::Rng::gen_range(rng, 0.0..10.0);
            let (join, meet) = hermitian::lattice_ops(&a, &b).expect("2x2");
            let members = [&a + &b, a.scale(t), join, meet];
            if !members.iter().all(|m| iso_membership(k, m).expect("2x2")) {
                failures += 1;
            }
        }
    }
    (
        failures == 0 && non_commuting > 0,
        json!({"regions": fixtures.len(), "pairs": fixtures.len() * pairs_per_region, "non_commuting_pairs": non_commuting, "failures": failures}),
    )
}

fn join_coefficients(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let (mut min_alpha, mut max_alpha, mut min_beta, mut max_err) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, 0.0_f64);
    for _ in 0..100_000 {
        let a = random_hermitian2(rng);
        let b = random_hermitian2(rng);
        let c = join_coeffs(&a, &b).expect("2x2");
        let rebuilt = &(&a.scale(c.alpha) + &b.scale(1.0 - c.alpha)) + &HermitianMatrix::scalar(2, c.beta);
        let join = hermitian::join(&a, &b).expect("2x2");
        min_alpha = min_alpha.min(c.alpha);
        max_alpha = max_alpha.max(c.alpha);
        min_beta = min_beta.min(c.beta);
        max_err = max_err.max(rebuilt.dist(&join));
    }
    let ok = min_alpha >= -1e-9 && max_alpha <= 1.0 + 1e-9 && min_beta >= -1e-9 && max_err <= 1e-9;
    (ok, json!({"pairs": 100_000, "alpha_range": [min_alpha, max_alpha], "min_beta": min_beta, "max_reconstruction_error": max_err}))
}

/// FS distance from the overlap `|⟨ξ|η⟩|`, independent of Bloch vectors.
fn fs_from_overlap(p: &PureStatePoint, q: &PureStatePoint) -> f64 {
    transition_probability(p, q).sqrt().min(1.0).acos()
}

fn epsilon_disk(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let south = PureStatePoint::from_bloch([0.0, 0.0, -1.0]).unwrap();
    let north = PureStatePoint::from_bloch([0.0, 0.0, 1.0]).unwrap();
    let mut per_eps = Vec::new();
    let mut total_mismatch = 0;
    for eps in [0.1, 0.2, 0.3, FRAC_PI_4] {
        let k = SphericalRegion::cap([0.0, 0.0, 1.0], 2.0 * eps).expect("cap");
        let (mut mismatches, mut banded, mut comparable) = (0, 0, 0);
        for _ in 0..10_000 {
            let xi = PureStatePoint::from_bloch(random_unit_vector(rng)).unwrap();
            // Against [b]: [b] ≤ [ξ] iff FS([b],[ξ]) ≥ 2ε; against [t]: [ξ] ≤ [t] likewise.
            for (anchor, anchor_below) in [(&south, true), (&north, false)] {
                let d = fs_from_overlap(anchor, &xi);
                if (d - 2.0 * eps).abs() < 1e-6 {
                    banded += 1;
                    continue;
                }
                let rel = if anchor_below { pure_state_order(&k, anchor, &xi) } else { pure_state_order(&k, &xi, anchor) };
                let predicted = if d >= 2.0 * eps { Relation::Less } else { Relation::Incomparable };
                if rel == Relation::Less {
                    comparable += 1;
                }
                if rel != predicted {
                    mismatches += 1;
                }
            }
        }
        total_mismatch += mismatches;
        per_eps.push(json!({"eps": eps, "mismatches": mismatches, "in_band": banded, "comparable": comparable}));
    }
    (total_mismatch == 0, json!({"states_per_eps": 10_000, "per_eps": per_eps}))
}

fn transversality_cases(_: &mut crate::rng::SeededRng) -> (bool, Value) {
    let cap = SphericalRegion::cap([0.0, 0.0, 1.0], 0.3).expect("cap");
    let full = SphericalRegion::full();
    let s1 = HermitianMatrix::pauli(1);
    let s3 = HermitianMatrix::pauli(3);
    let cases = [
        ("sigma3_north_cap", &cap, s3.clone(), Transversality::Lambda2BelowLambda1),
        ("minus_sigma3_north_cap", &cap, -&s3, Transversality::Lambda1BelowLambda2),
        ("sigma3_full_sphere", &full, s3.clone(), Transversality::IncomparableSpectrum),
        ("sigma1_north_cap", &cap, s1, Transversality::NotTransverse),
    ];
    let mut ok = true;
    let mut out = serde_json::Map::new();
    for (name, k, n, want) in cases {
        let got = transversality(k, n.as_complex()).map(|r| r.case);
        ok &= got.as_ref() == Ok(&want);
        out.insert(name.into(), json!(got.map(|c| json!(c)).unwrap_or_else(|e| json!(e.kind()))));
    }
    (ok, Value::Object(out))
}

fn cobounded_duality(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let mut agree = 0;
    let mut bounded = 0;
    for _ in 0..500 {
        let p = random_poset_up_to(rng, 8);
        let b = p.bounds().is_bounded();
        bounded += b as usize;
        if cobounded_commutative(&p).cobounded == b {
            agree += 1;
        }
    }
    let mut min_slack = f64::INFINITY;
    let mut witnesses = 0;
    for (_, k) in region_fixtures() {
        if let Some(w) = cobounded_witness(&k) {
            let members = iso_membership(&k, &w.a).expect("2x2") && iso_membership(&k, &w.b).expect("2x2");
            let positive = hermitian::classify(&w.a).positive && hermitian::classify(&w.b).positive;
            if members && positive {
                witnesses += 1;
                min_slack = min_slack.min(w.slack);
            }
        }
    }
    (
        agree == 500 && witnesses == 10 && min_slack >= 1e-6,
        json!({"posets": 500, "agreements": agree, "bounded_posets": bounded, "region_witnesses": witnesses, "min_slack": min_slack}),
    )
}

fn projection_decompositions(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let (mut min_coeff, mut max_err, mut bad_members) = (f64::INFINITY, 0.0_f64, 0);
    for _ in 0..10_000 {
        let p = random_poset_up_to(rng, 8);
        let f = random_nonneg_isotone(rng, &p);
        let terms = upset_decomposition(&p, &f).expect("nonneg isotone");
        for t in &terms {
            min_coeff = min_coeff.min(t.coefficient);
            if !is_isotone(&p, &t.indicator).expect("dims") {
                bad_members += 1;
            }
        }
        max_err = max_err.max(reconstruct(p.len(), &terms).max_abs_diff(&f));
    }
    let (mut m_min_coeff, mut m_max_err, mut m_bad) = (f64::INFINITY, 0.0_f64, 0);
    let fixtures = region_fixtures();
    for i in 0..10_000 {
        let k = &fixtures[i % fixtures.len()].1;
        let a = random_positive_iso_member(rng, k);
        let terms = projection_decomposition(&a);
        let mut back = HermitianMatrix::scalar(2, 0.0);
        for t in &terms {
            m_min_coeff = m_min_coeff.min(t.coefficient);
            if !iso_membership(k, &t.projection).expect("2x2") {
                m_bad += 1;
            }
            back = &back + &t.projection.scale(t.coefficient);
        }
        m_max_err = m_max_err.max(back.dist(&a));
    }
    let ok = min_coeff >= -1e-12 && max_err <= 1e-9 && bad_members == 0 && m_min_coeff >= -1e-12 && m_max_err <= 1e-9 && m_bad == 0;
    (
        ok,
        json!({
            "commutative": {"functions": 10_000, "min_coefficient": min_coeff, "max_reconstruction_error": max_err, "non_member_projections": bad_members},
            "m2": {"matrices": 10_000, "min_coefficient": m_min_coeff, "max_reconstruction_error": m_max_err, "non_member_projections": m_bad}
        }),
    )
}

fn commuting_products(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let mut failures = 0;
    for _ in 0..10_000 {
        let p = random_poset_up_to(rng, 8);
        let f = random_nonneg_isotone(rng, &p);
        let g = random_nonneg_isotone(rng, &p);
        let prod = f.zip_with(&g, |a, b| a * b);
        if !is_isotone_tol(p.as_preorder(), &prod, 0.0).expect("dims") {
            failures += 1;
        }
    }
    (failures == 0, json!({"pairs": 10_000, "failures": failures}))
}

fn gps_consistency(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let (mut equal, mut equality_orders) = (0, 0);
    for _ in 0..200 {
        let e: FiniteMetricSpace = random_metric_space(rng, 10);
        let ks = random_landmarks(rng, &e);
        let order = gps_order(&e, &ks, Orientation::Remark).expect("known ids");
        let idx = e.resolve(&ks).expect("known ids");
        let fs: Vec<RealFunction> = idx.iter().map(|&z| RealFunction { values: e.distance_function(z) }).collect();
        let induced = order_from_functions(e.points().to_vec(), &fs).expect("dims");
        if same_relation(order.preorder.relation(), induced.preorder.relation()) {
            equal += 1;
        }
        let all = gps_order(&e, e.points(), Orientation::Remark).expect("known ids");
        let n = e.len();
        if (0..n).all(|i| (0..n).all(|j| all.preorder.leq(i, j) == (i == j))) {
            equality_orders += 1;
        }
    }
    (equal == 200 && equality_orders == 200, json!({"spaces": 200, "equal_relations": equal, "equality_orders_for_k_eq_e": equality_orders}))
}

fn minimality(rng: &mut crate::rng::SeededRng) -> (bool, Value) {
    let mut total_ok = 0;
    for _ in 0..100 {
        let n = rand::Rng::gen_range(rng, 1..=7);
        let p = random_total_order(rng, n);
        let s = random_spanning_isotone_set(rng, &p);
        let induced = order_from_functions(p.elements().to_vec(), &s).expect("dims");
        if same_relation(induced.preorder.relation(), p.relation()) {
            total_ok += 1;
        }
    }
    let mut verified = 0;
    for _ in 0..100 {
        let p: FinitePoset = random_non_total_poset(rng, 7);
        if minimal_witness(&p).is_some_and(|w| w.verify(&p)) {
            verified += 1;
        }
    }
    (total_ok == 100 && verified == 100, json!({"total_orders": 100, "order_recovered": total_ok, "non_total_posets": 100, "verified_witnesses": verified}))
}
