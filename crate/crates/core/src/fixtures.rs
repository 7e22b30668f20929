//! Seeded random instances: posets, isotone functions, generator families,
//! metric spaces, regions of the sphere and their isocone members.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gps::FiniteMetricSpace;
use crate::hermitian::HermitianMatrix;
use crate::isotone_cone::{spans_everything, RealFunction};
use crate::m2::{vec3, PauliCoords, RegionSpec, SphericalRegion, Vec3};
use crate::poset::{FinitePoset, FinitePreorder};

fn ids(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// A poset on `n` points: a random DAG along a shuffled order, each
/// forward pair present with probability `density`, then closed.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> FinitePoset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                rel[perm[a]][perm[b]] = true;
            }
        }
    }
    FinitePreorder::closure_of(ids("p", n), rel)
        .and_then(FinitePreorder::into_poset)
        .expect("a closed DAG is a poset")
}

/// Random size in `1..=max_n` and random density in `[0.1, 0.7]`.
pub fn random_poset_up_to(rng: &mut impl Rng, max_n: usize) -> FinitePoset {
    let n = rng.gen_range(1..=max_n);
    let density = rng.gen_range(0.1..0.7);
    random_poset(rng, n, density)
}

/// A poset on `2..=max_n` points that is not totally ordered.
pub fn random_non_total_poset(rng: &mut impl Rng, max_n: usize) -> FinitePoset {
    loop {
        let n = rng.gen_range(2..=max_n.max(2));
        let density = rng.gen_range(0.0..0.6);
        let p = random_poset(rng, n, density);
        if !p.is_total() {
            return p;
        }
    }
}

/// A chain on `n` points listed in shuffled order.
pub fn random_total_order(rng: &mut impl Rng, n: usize) -> FinitePoset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a..n {
            rel[perm[a]][perm[b]] = true;
        }
    }
    FinitePoset::from_relation(ids("t", n), rel).expect("chain")
}

/// Elements listed so that everything below `x` comes before `x`.
pub fn linear_extension(p: &FinitePoset) -> Vec<usize> {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| p.lt(y, x)).count());
    order
}

/// A random isotone function. Along a linear extension each value is the
/// larger of a fresh draw and the maximum below it, plus a nonnegative
/// step that is zero a third of the time (so ties occur).
pub fn random_isotone(rng: &mut impl Rng, p: &FinitePoset) -> RealFunction {
    let n = p.len();
    let mut values = vec![0.0; n];
    for x in linear_extension(p) {
        let floor = (0..n).filter(|&y| p.lt(y, x)).map(|y| values[y]).fold(f64::NEG_INFINITY, f64::max);
        let base = rng.gen_range(-3.0..3.0_f64).max(floor);
        let step = if rng.gen_bool(1.0 / 3.0) { 0.0 } else { rng.gen_range(0.0..2.0) };
        values[x] = base + step;
    }
    RealFunction { values }
}

/// A random isotone function with minimum value `0` or a little above.
pub fn random_nonneg_isotone(rng: &mut impl Rng, p: &FinitePoset) -> RealFunction {
    let f = random_isotone(rng, p);
    let lo = f.values.iter().copied().fold(f64::INFINITY, f64::min);
    let lift = if rng.gen_bool(0.5) { 0.0 } else { rng.gen_range(0.0..1.0) };
    f.map(|v| v - lo + lift)
}

/// A family determining the order of `p`: positive multiples of the
/// principal up-set indicators plus a few random isotone functions,
/// shuffled.
pub fn random_determining_set(rng: &mut impl Rng, p: &FinitePoset) -> Vec<RealFunction> {
    let mut s: Vec<RealFunction> = (0..p.len())
        .map(|x| RealFunction::indicator(&p.principal_upset(x)).scale(rng.gen_range(0.5..3.0)))
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        s.push(random_isotone(rng, p));
    }
    s.shuffle(rng);
    s
}

/// Random isotone functions on `p`, drawn until they span `ℝⁿ`.
pub fn random_spanning_isotone_set(rng: &mut impl Rng, p: &FinitePoset) -> Vec<RealFunction> {
    let n = p.len();
    let mut s = Vec::new();
    while !spans_everything(n, &s) {
        s.push(random_isotone(rng, p));
    }
    s
}

/// `n ∈ 2..=max_n` random points of the unit square with Euclidean
/// distances.
pub fn random_metric_space(rng: &mut impl Rng, max_n: usize) -> FiniteMetricSpace {
    let n = rng.gen_range(2..=max_n.max(2));
    let coords: Vec<Vec<f64>> = (0..n).map(|_| vec![rng.gen::<f64>(), rng.gen::<f64>()]).collect();
    FiniteMetricSpace::euclidean(ids("x", n), &coords).expect("distinct random points")
}

/// A nonempty random subset of the points.
pub fn random_landmarks(rng: &mut impl Rng, e: &FiniteMetricSpace) -> Vec<String> {
    let k = rng.gen_range(1..=e.len());
    let mut pts = e.points().to_vec();
    pts.shuffle(rng);
    pts.truncate(k);
    pts
}

pub fn random_unit_vector(rng: &mut impl Rng) -> Vec3 {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// A random point of `K` (not uniform for hulls).
pub fn random_in_region(rng: &mut impl Rng, k: &SphericalRegion) -> Vec3 {
    match k.spec() {
        RegionSpec::Full => random_unit_vector(rng),
        RegionSpec::Cap { center, radius } => {
            // Uniform on the cap: cos of the polar angle is uniform.
            let cz = rng.gen_range(radius.cos()..=1.0);
            let phi = rng.gen_range(0.0..2.0 * PI);
            let r = (1.0 - cz * cz).max(0.0).sqrt();
            let e1 = vec3::orthogonal(center);
            let e2 = vec3::cross(center, &e1);
            let v = vec3::add(
                &vec3::scale(center, cz),
                &vec3::add(&vec3::scale(&e1, r * phi.cos()), &vec3::scale(&e2, r * phi.sin())),
            );
            vec3::normalize(&v)
        }
        RegionSpec::Hull { .. } => {
            let ks = k.extreme_vertices();
            let mut v = [0.0; 3];
            for kv in ks {
                // Sparse weights so the boundary gets sampled too.
                let w = if rng.gen_bool(0.3) { 0.0 } else { rng.gen::<f64>() };
                v = vec3::add(&v, &vec3::scale(kv, w));
            }
            if vec3::norm(&v) == 0.0 {
                ks[rng.gen_range(0..ks.len())]
            } else {
                vec3::normalize(&v)
            }
        }
    }
}

/// A random member `cσ⁰ + s·k·σ` of `I_K`, `k ∈ K`, `s ≥ 0`.
pub fn random_iso_member(rng: &mut impl Rng, k: &SphericalRegion) -> HermitianMatrix {
    let dir = random_in_region(rng, k);
    let s = rng.gen_range(0.0..5.0);
    PauliCoords::new(rng.gen_range(-5.0..5.0), vec3::scale(&dir, s)).to_matrix()
}

/// A random positive member of `I_K` with distinct eigenvalues.
pub fn random_positive_iso_member(rng: &mut impl Rng, k: &SphericalRegion) -> HermitianMatrix {
    let dir = random_in_region(rng, k);
    let s = rng.gen_range(0.01..5.0);
    let lowest = if rng.gen_bool(0.2) { 0.0 } else { rng.gen_range(0.0..3.0) };
    PauliCoords::new(lowest + s, vec3::scale(&dir, s)).to_matrix()
}

/// A random 2×2 Hermitian matrix with entries of size up to 5.
pub fn random_hermitian2(rng: &mut impl Rng) -> HermitianMatrix {
    let v = [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)];
    PauliCoords::new(rng.gen_range(-5.0..5.0), v).to_matrix()
}

/// Ten regions: caps of radius 0.1, 0.3, π/4 and π/2, five hulls and the
/// whole sphere.
pub fn region_fixtures() -> Vec<(String, SphericalRegion)> {
    let n = |v: Vec3| vec3::normalize(&v);
    let e3 = [0.0, 0.0, 1.0];
    let cap = |c: Vec3, r: f64| SphericalRegion::cap(c, r).expect("fixture cap");
    let hull = |vs: Vec<Vec3>| SphericalRegion::hull(vs).expect("fixture hull");
    vec![
        ("cap_0.1".into(), cap(e3, 0.1)),
        ("cap_0.3_tilted".into(), cap(n([1.0, -2.0, 0.5]), 0.3)),
        ("cap_pi_4".into(), cap(e3, FRAC_PI_4)),
        ("cap_pi_2".into(), cap(e3, FRAC_PI_2)),
        ("octant".into(), hull(vec![[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], e3])),
        ("narrow_triangle".into(), hull(vec![n([0.05, 0.0, 1.0]), n([-0.02, 0.04, 1.0]), n([-0.02, -0.04, 1.0])])),
        (
            "square".into(),
            hull(vec![n([1.0, 1.0, 1.0]), n([-1.0, 1.0, 1.0]), n([-1.0, -1.0, 1.0]), n([1.0, -1.0, 1.0])]),
        ),
        (
            "pentagon_tilted".into(),
            hull(
                (0..5)
                    .map(|i| {
                        let a = 2.0 * PI * i as f64 / 5.0;
                        n([0.8 * a.cos() + 0.3, 0.8 * a.sin(), -1.0])
                    })
                    .collect(),
            ),
        ),
        (
            "wide_with_inner_vertex".into(),
            hull(vec![
                n([1.0, 0.0, 0.1]),
                n([-0.5, 0.9, 0.1]),
                n([-0.5, -0.9, 0.1]),
                n([0.0, 0.0, 1.0]),
                n([0.1, 0.1, 1.0]),
            ]),
        ),
        ("full".into(), SphericalRegion::full()),
    ]
}
