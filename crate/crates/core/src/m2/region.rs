use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::{vec3, M2Error, Vec3, GEOM_TOL};

/// Unit-norm tolerance for region centers and vertices.
const UNIT_TOL: f64 = 1e-12;
/// Directions closer than this (in chord length) are the same vertex.
const SAME_DIRECTION: f64 = 1e-9;

/// JSON form of a region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegionSpec {
    #[serde(alias = "full_sphere")]
    Full,
    Cap { center: Vec3, radius: f64 },
    Hull { vertices: Vec<Vec3> },
}

/// A closed geodesically convex region `K` of the unit sphere with
/// nonempty interior.
///
/// Cap radii are angles on the unit sphere; the Fubini–Study radius of the
/// same cap is half of it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RegionSpec", into = "RegionSpec")]
pub struct SphericalRegion {
    spec: RegionSpec,
    /// Inward unit normals of the facets of `ℝ₊K` (hulls only).
    facets: Vec<Vec3>,
    /// Extreme rays of `ℝ₊K` (hulls only).
    extreme: Vec<Vec3>,
}

impl From<SphericalRegion> for RegionSpec {
    fn from(r: SphericalRegion) -> Self {
        r.spec
    }
}

impl TryFrom<RegionSpec> for SphericalRegion {
    type Error = M2Error;
    fn try_from(spec: RegionSpec) -> Result<Self, M2Error> {
        match spec {
            RegionSpec::Full => Ok(SphericalRegion::full()),
            RegionSpec::Cap { center, radius } => SphericalRegion::cap(center, radius),
            RegionSpec::Hull { vertices } => SphericalRegion::hull(vertices),
        }
    }
}

fn check_unit(v: &Vec3, what: &str) -> Result<Vec3, M2Error> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(M2Error::InvalidRegion(format!("{what} has a non-finite coordinate")));
    }
    let n = vec3::norm(v);
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(M2Error::InvalidRegion(format!("{what} has norm {n}, expected 1")));
    }
    Ok(vec3::scale(v, 1.0 / n))
}

/// Facet normals of the cone spanned by `vs`: for every pair spanning a
/// plane with all of `vs` on one side, the normal oriented towards them.
fn cone_facets(vs: &[Vec3]) -> Vec<Vec3> {
    let mut facets: Vec<Vec3> = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let cr = vec3::cross(&vs[i], &vs[j]);
            if vec3::norm(&cr) <= 1e-12 {
                continue;
            }
            let n = vec3::normalize(&cr);
            let dots: Vec<f64> = vs.iter().map(|k| vec3::dot(k, &n)).collect();
            let oriented = if dots.iter().all(|&d| d >= -1e-12) {
                n
            } else if dots.iter().all(|&d| d <= 1e-12) {
                vec3::scale(&n, -1.0)
            } else {
                continue;
            };
            if !facets.iter().any(|f| vec3::dist(f, &oriented) <= SAME_DIRECTION) {
                facets.push(oriented);
            }
        }
    }
    facets
}

impl SphericalRegion {
    pub fn full() -> Self {
        SphericalRegion { spec: RegionSpec::Full, facets: vec![], extreme: vec![] }
    }

    /// Cap of angular radius `radius ∈ (0, π/2]` around a unit `center`.
    pub fn cap(center: Vec3, radius: f64) -> Result<Self, M2Error> {
        let center = check_unit(&center, "cap center")?;
        if !(radius > 0.0 && radius <= FRAC_PI_2 + UNIT_TOL) {
            return Err(M2Error::InvalidRegion(format!("cap radius {radius} outside (0, π/2]")));
        }
        Ok(SphericalRegion {
            spec: RegionSpec::Cap { center, radius: radius.min(FRAC_PI_2) },
            facets: vec![],
            extreme: vec![],
        })
    }

    /// Geodesic convex hull of unit vectors lying in an open half-sphere,
    /// with nonempty interior.
    pub fn hull(vertices: Vec<Vec3>) -> Result<Self, M2Error> {
        let mut unique: Vec<Vec3> = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            let u = check_unit(v, &format!("hull vertex {i}"))?;
            if !unique.iter().any(|w| vec3::dist(w, &u) <= SAME_DIRECTION) {
                unique.push(u);
            }
        }
        let facets = cone_facets(&unique);
        if facets.len() < 3 {
            return Err(M2Error::InvalidRegion(
                "hull vertices must span a cone with nonempty interior inside an open half-sphere".into(),
            ));
        }
        // For a pointed full-dimensional cone the facet normals sum to an
        // interior point of the dual cone.
        let axis = vec3::normalize(&facets.iter().fold([0.0; 3], |acc, f| vec3::add(&acc, f)));
        if unique.iter().any(|k| vec3::dot(k, &axis) <= GEOM_TOL) {
            return Err(M2Error::InvalidRegion("hull vertices are not in an open half-sphere".into()));
        }
        // Extreme rays lie on at least two distinct facet planes.
        let extreme: Vec<Vec3> = unique
            .iter()
            .filter(|k| facets.iter().filter(|f| vec3::dot(k, f).abs() <= 1e-12).count() >= 2)
            .copied()
            .collect();
        Ok(SphericalRegion { spec: RegionSpec::Hull { vertices }, facets, extreme })
    }

    pub fn spec(&self) -> &RegionSpec {
        &self.spec
    }

    pub fn is_full(&self) -> bool {
        matches!(self.spec, RegionSpec::Full)
    }

    /// Extreme vertices of a hull region (empty for caps and the sphere).
    pub fn extreme_vertices(&self) -> &[Vec3] {
        &self.extreme
    }

    /// Inward facet normals of the cone over a hull region.
    pub fn facet_normals(&self) -> &[Vec3] {
        &self.facets
    }

    /// Whether the unit vector `u` lies in `K`.
    pub fn contains(&self, u: &Vec3) -> bool {
        match &self.spec {
            RegionSpec::Full => true,
            RegionSpec::Cap { center, radius } => vec3::angle(u, center) <= radius + GEOM_TOL,
            RegionSpec::Hull { .. } => self.facets.iter().all(|f| vec3::dot(u, f) >= -GEOM_TOL),
        }
    }

    /// Whether `v ∈ ℝ₊K`, with absolute tolerance [`GEOM_TOL`] on the
    /// distance to the cone (so tiny vectors are always members).
    pub fn cone_contains(&self, v: &Vec3) -> bool {
        let len = vec3::norm(v);
        if len <= GEOM_TOL {
            return true;
        }
        match &self.spec {
            RegionSpec::Full => true,
            RegionSpec::Cap { center, radius } => {
                let excess = vec3::angle(v, center) - radius;
                excess <= 0.0 || len * excess.min(FRAC_PI_2).sin() <= GEOM_TOL
            }
            RegionSpec::Hull { .. } => self.facets.iter().all(|f| vec3::dot(v, f) >= -GEOM_TOL),
        }
    }

    /// Whether `d` lies in the dual cone `{d | d·m ≥ 0 ∀ m ∈ K}`, within
    /// [`GEOM_TOL`].
    pub fn dual_contains(&self, d: &Vec3) -> bool {
        let len = vec3::norm(d);
        match &self.spec {
            RegionSpec::Full => len <= GEOM_TOL,
            RegionSpec::Cap { center, radius } => {
                // min over the cap of d·m is |d| cos(angle(d, center) + θ).
                len <= GEOM_TOL || len * (vec3::angle(d, center) + radius).min(std::f64::consts::PI).cos() >= -GEOM_TOL
            }
            RegionSpec::Hull { .. } => self.extreme.iter().all(|k| vec3::dot(d, k) >= -GEOM_TOL),
        }
    }

    /// Nonnegative coefficients `c` with `u = Σ cᵢ·kᵢ` over the extreme
    /// vertices of a hull, if `u` is in the cone (found on a subset of at
    /// most three vertices). `None` for caps and the sphere.
    pub fn conic_coefficients(&self, u: &Vec3) -> Option<Vec<f64>> {
        if !matches!(self.spec, RegionSpec::Hull { .. }) {
            return None;
        }
        let ks = &self.extreme;
        let m = ks.len();
        let residual_ok = |coeffs: &[(usize, f64)]| {
            let back = coeffs.iter().fold([0.0; 3], |acc, &(i, c)| vec3::add(&acc, &vec3::scale(&ks[i], c)));
            vec3::dist(&back, u) <= GEOM_TOL * (1.0 + vec3::norm(u))
        };
        let finish = |coeffs: Vec<(usize, f64)>| {
            let mut out = vec![0.0; m];
            for (i, c) in coeffs {
                out[i] = c.max(0.0);
            }
            out
        };
        let triples = (0..m).flat_map(|i| (i + 1..m).flat_map(move |j| (j + 1..m).map(move |l| (i, j, l))));
        for (i, j, l) in triples {
            let det = vec3::dot(&ks[i], &vec3::cross(&ks[j], &ks[l]));
            if det.abs() <= 1e-12 {
                continue;
            }
            // Cramer's rule.
            let a = vec3::dot(u, &vec3::cross(&ks[j], &ks[l])) / det;
            let b = vec3::dot(&ks[i], &vec3::cross(u, &ks[l])) / det;
            let c = vec3::dot(&ks[i], &vec3::cross(&ks[j], u)) / det;
            let coeffs = vec![(i, a), (j, b), (l, c)];
            if a >= -GEOM_TOL && b >= -GEOM_TOL && c >= -GEOM_TOL && residual_ok(&coeffs) {
                return Some(finish(coeffs));
            }
        }
        // Rays on the boundary between two vertices, or along one.
        for i in 0..m {
            for j in i..m {
                let (a, b) = if i == j {
                    (vec3::dot(u, &ks[i]), 0.0)
                } else {
                    let g = vec3::dot(&ks[i], &ks[j]);
                    let (ui, uj) = (vec3::dot(u, &ks[i]), vec3::dot(u, &ks[j]));
                    let det = 1.0 - g * g;
                    ((ui - g * uj) / det, (uj - g * ui) / det)
                };
                let coeffs = vec![(i, a), (j, b)];
                if a >= -GEOM_TOL && b >= -GEOM_TOL && residual_ok(&coeffs) {
                    return Some(finish(coeffs));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: Vec3 = [1.0, 0.0, 0.0];
    const E2: Vec3 = [0.0, 1.0, 0.0];
    const E3: Vec3 = [0.0, 0.0, 1.0];

    fn octant() -> SphericalRegion {
        SphericalRegion::hull(vec![E1, E2, E3]).unwrap()
    }

    #[test]
    fn cap_membership() {
        let k = SphericalRegion::cap(E3, 0.3).unwrap();
        assert!(k.contains(&E3));
        assert!(!k.contains(&[0.0, 0.0, -1.0]));
        assert!(k.contains(&[0.3_f64.sin(), 0.0, 0.3_f64.cos()]));
        assert!(!k.contains(&[0.31_f64.sin(), 0.0, 0.31_f64.cos()]));
        assert!(SphericalRegion::full().contains(&[0.0, -1.0, 0.0]));
    }

    #[test]
    fn rejects_bad_regions() {
        assert!(SphericalRegion::cap([0.0, 0.0, 2.0], 0.3).is_err());
        assert!(SphericalRegion::cap(E3, 0.0).is_err());
        assert!(SphericalRegion::cap(E3, 2.0).is_err());
        // Flat: all in the plane z = 0 through the origin.
        assert!(SphericalRegion::hull(vec![E1, E2, vec3::normalize(&[1.0, 1.0, 0.0])]).is_err());
        // Not in an open half-sphere.
        assert!(SphericalRegion::hull(vec![E1, [-1.0, 0.0, 0.0], E3, E2]).is_err());
        let r: Result<SphericalRegion, _> = serde_json::from_str(r#"{"kind":"cap","center":[0,0,1],"radius":-1}"#);
        assert!(r.is_err());
    }

    #[test]
    fn hull_facets_and_extremes() {
        let k = octant();
        assert_eq!(k.facet_normals().len(), 3);
        assert_eq!(k.extreme_vertices().len(), 3);
        assert!(k.contains(&vec3::normalize(&[1.0, 1.0, 1.0])));
        assert!(!k.contains(&vec3::normalize(&[1.0, -0.1, 1.0])));
        // A vertex inside the cone is not extreme.
        let with_inner = SphericalRegion::hull(vec![E1, E2, E3, vec3::normalize(&[1.0, 1.0, 1.0])]).unwrap();
        assert_eq!(with_inner.extreme_vertices().len(), 3);
    }

    #[test]
    fn conic_coefficients_agree_with_facets() {
        let k = octant();
        let u = vec3::normalize(&[1.0, 2.0, 3.0]);
        let c = k.conic_coefficients(&u).unwrap();
        assert!(c.iter().all(|&x| x >= 0.0));
        assert!(k.conic_coefficients(&[-1.0, 0.0, 0.0]).is_none());
        // Boundary ray between two vertices.
        assert!(k.conic_coefficients(&vec3::normalize(&[1.0, 1.0, 0.0])).is_some());
    }

    #[test]
    fn dual_cones() {
        let half = SphericalRegion::cap(E3, FRAC_PI_2).unwrap();
        assert!(half.dual_contains(&E3));
        assert!(!half.dual_contains(&vec3::normalize(&[0.01, 0.0, 1.0])));
        assert!(SphericalRegion::full().dual_contains(&[0.0; 3]));
        assert!(!SphericalRegion::full().dual_contains(&E3));
        let narrow = SphericalRegion::cap(E3, 0.2).unwrap();
        assert!(narrow.dual_contains(&E3));
        assert!(!narrow.dual_contains(&E1));
        // The octant is self-dual.
        assert!(octant().dual_contains(&E1));
        assert!(!octant().dual_contains(&[-0.1, 1.0, 1.0]));
    }

    #[test]
    fn cone_tolerates_tiny_vectors() {
        let k = SphericalRegion::cap(E3, 0.1).unwrap();
        assert!(k.cone_contains(&[1e-12, 0.0, -1e-12]));
        assert!(!k.cone_contains(&[1.0, 0.0, 0.0]));
        assert!(k.cone_contains(&[0.0, 0.0, 5.0]));
    }

    #[test]
    fn json_round_trip() {
        for text in [
            r#"{"kind":"cap","center":[0.0,0.0,1.0],"radius":0.3}"#,
            r#"{"kind":"hull","vertices":[[1.0,0.0,0.0],[0.0,1.0,0.0],[0.0,0.0,1.0]]}"#,
            r#"{"kind":"full"}"#,
        ] {
            let r: SphericalRegion = serde_json::from_str(text).unwrap();
            assert_eq!(serde_json::to_string(&r).unwrap(), text);
        }
    }
}
