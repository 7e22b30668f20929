//! Isocones of `M₂(ℂ)` and the geometry of qubit states.
//!
//! Every isocone of `M₂(ℂ)` is `I_K = ℝ₊K + ℝσ⁰` for a closed geodesically
//! convex region `K` of the unit sphere `Σ` of traceless Hermitian matrices
//! (coordinates on the Pauli basis). States are points of the Bloch ball;
//! pure states sit on `Σ` via the Hopf map.

mod region;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hermitian::{self, ComplexMatrix, HermitianError, HermitianMatrix};

pub use region::{RegionSpec, SphericalRegion};

pub type Vec3 = [f64; 3];

/// Absolute tolerance for geometric comparisons.
pub const GEOM_TOL: f64 = 1e-9;
/// Eigenvalues closer than this make a normal matrix scalar.
pub const SCALAR_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum M2Error {
    #[error("vector has norm {0}, expected 1")]
    NotNormalized(f64),
    #[error("matrix is not normal (defect {0:e})")]
    NotNormal(f64),
    #[error("not a rotation: {0}")]
    NotARotation(String),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("expected a 2x2 matrix, got {0}x{0}")]
    DimensionMismatch(usize),
    #[error(transparent)]
    Hermitian(#[from] HermitianError),
}

impl M2Error {
    pub fn kind(&self) -> &'static str {
        match self {
            M2Error::NotNormalized(_) => "NotNormalized",
            M2Error::NotNormal(_) => "NotNormal",
            M2Error::NotARotation(_) => "NotARotation",
            M2Error::InvalidRegion(_) => "InvalidRegion",
            M2Error::InvalidState(_) => "InvalidState",
            M2Error::DimensionMismatch(_) => "DimensionMismatch",
            M2Error::Hermitian(e) => e.kind(),
        }
    }
}

pub mod vec3 {
    use super::Vec3;

    pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }

    pub fn norm(a: &Vec3) -> f64 {
        dot(a, a).sqrt()
    }

    pub fn add(a: &Vec3, b: &Vec3) -> Vec3 {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
    }

    pub fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
        [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    }

    pub fn scale(a: &Vec3, k: f64) -> Vec3 {
        [a[0] * k, a[1] * k, a[2] * k]
    }

    pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
        [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    }

    pub fn dist(a: &Vec3, b: &Vec3) -> f64 {
        norm(&sub(a, b))
    }

    /// `a / ‖a‖`; the zero vector is returned unchanged.
    pub fn normalize(a: &Vec3) -> Vec3 {
        let n = norm(a);
        if n == 0.0 {
            *a
        } else {
            scale(a, 1.0 / n)
        }
    }

    /// Angle in `[0, π]`, computed with `atan2` for accuracy near 0 and π.
    pub fn angle(a: &Vec3, b: &Vec3) -> f64 {
        norm(&cross(a, b)).atan2(dot(a, b))
    }

    /// Some unit vector orthogonal to `a`.
    pub fn orthogonal(a: &Vec3) -> Vec3 {
        let i = (0..3).min_by(|&i, &j| a[i].abs().partial_cmp(&a[j].abs()).unwrap()).unwrap();
        let mut e = [0.0; 3];
        e[i] = 1.0;
        normalize(&cross(a, &e))
    }

    /// Rotation of `v` about the unit `axis` by `angle` (Rodrigues).
    pub fn rotate(v: &Vec3, axis: &Vec3, angle: f64) -> Vec3 {
        let (s, c) = angle.sin_cos();
        let term1 = scale(v, c);
        let term2 = scale(&cross(axis, v), s);
        let term3 = scale(axis, dot(axis, v) * (1.0 - c));
        add(&add(&term1, &term2), &term3)
    }
}

/// `a = c·σ⁰ + v·σ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliCoords {
    pub c: f64,
    pub v: Vec3,
}

impl PauliCoords {
    pub fn new(c: f64, v: Vec3) -> Self {
        PauliCoords { c, v }
    }

    pub fn from_matrix(a: &HermitianMatrix) -> Result<Self, M2Error> {
        if a.dim() != 2 {
            return Err(M2Error::DimensionMismatch(a.dim()));
        }
        let (a00, a11, a10) = (a.get(0, 0).re, a.get(1, 1).re, a.get(1, 0));
        Ok(PauliCoords {
            c: 0.5 * (a00 + a11),
            v: [a10.re, a10.im, 0.5 * (a00 - a11)],
        })
    }

    pub fn to_matrix(&self) -> HermitianMatrix {
        let [x, y, z] = self.v;
        HermitianMatrix::from_rows(vec![
            vec![Complex64::new(self.c + z, 0.0), Complex64::new(x, -y)],
            vec![Complex64::new(x, y), Complex64::new(self.c - z, 0.0)],
        ])
        .expect("Pauli combination is hermitian")
    }

    /// Eigenvalues `c − ‖v‖ ≤ c + ‖v‖`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let r = vec3::norm(&self.v);
        (self.c - r, self.c + r)
    }
}

/// Projector `(σ⁰ + u·σ)/2` onto the pure state with Bloch vector `u`.
pub fn pure_projector(u: &Vec3) -> HermitianMatrix {
    PauliCoords::new(0.5, vec3::scale(u, 0.5)).to_matrix()
}

pub type Qubit = [Complex64; 2];

/// Hopf map `(2Re(ξ̄₁ξ₂), 2Im(ξ̄₁ξ₂), |ξ₁|² − |ξ₂|²)` for a unit `ξ`.
pub fn hopf(xi: &Qubit) -> Result<Vec3, M2Error> {
    let n = (xi[0].norm_sqr() + xi[1].norm_sqr()).sqrt();
    if (n - 1.0).abs() > GEOM_TOL {
        return Err(M2Error::NotNormalized(n));
    }
    let w = xi[0].conj() * xi[1];
    Ok([2.0 * w.re, 2.0 * w.im, xi[0].norm_sqr() - xi[1].norm_sqr()])
}

/// A unit representative `ξ` with `hopf(ξ) = u`.
pub fn hopf_section(u: &Vec3) -> Qubit {
    let [x, y, z] = *u;
    if z >= 0.0 {
        let n = (2.0 * (1.0 + z)).sqrt();
        [Complex64::new((1.0 + z) / n, 0.0), Complex64::new(x / n, y / n)]
    } else {
        let n = (2.0 * (1.0 - z)).sqrt();
        [Complex64::new(x / n, -y / n), Complex64::new((1.0 - z) / n, 0.0)]
    }
}

/// A pure state: a unit representative and its Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PureStatePoint {
    #[serde(serialize_with = "serialize_qubit")]
    pub xi: Qubit,
    pub bloch: Vec3,
}

fn serialize_qubit<S: serde::Serializer>(xi: &Qubit, s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    [[xi[0].re, xi[0].im], [xi[1].re, xi[1].im]].serialize(s)
}

impl PureStatePoint {
    pub fn from_xi(xi: Qubit) -> Result<Self, M2Error> {
        Ok(PureStatePoint { bloch: hopf(&xi)?, xi })
    }

    pub fn from_bloch(bloch: Vec3) -> Result<Self, M2Error> {
        let n = vec3::norm(&bloch);
        if (n - 1.0).abs() > GEOM_TOL {
            return Err(M2Error::NotNormalized(n));
        }
        let bloch = vec3::scale(&bloch, 1.0 / n);
        Ok(PureStatePoint { xi: hopf_section(&bloch), bloch })
    }

    /// `ξ*mξ = c + v·bloch` for `m = cσ⁰ + v·σ`.
    pub fn expectation(&self, m: &PauliCoords) -> f64 {
        m.c + vec3::dot(&m.v, &self.bloch)
    }
}

/// A density matrix `ρ = (σ⁰ + bloch·σ)/2` with `‖bloch‖ ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityState {
    pub bloch: Vec3,
}

impl DensityState {
    pub fn new(bloch: Vec3) -> Result<Self, M2Error> {
        let n = vec3::norm(&bloch);
        if !n.is_finite() || n > 1.0 + 1e-12 {
            return Err(M2Error::InvalidState(format!("Bloch vector norm {n} exceeds 1")));
        }
        Ok(DensityState { bloch })
    }

    pub fn matrix(&self) -> HermitianMatrix {
        PauliCoords::new(0.5, vec3::scale(&self.bloch, 0.5)).to_matrix()
    }
}

impl From<PureStatePoint> for DensityState {
    fn from(p: PureStatePoint) -> Self {
        DensityState { bloch: p.bloch }
    }
}

/// JSON state: `{"xi": [[re, im], [re, im]]}` or `{"bloch": [x, y, z]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateJson {
    Xi { xi: [[f64; 2]; 2] },
    Bloch { bloch: Vec3 },
}

impl StateJson {
    pub fn to_pure(&self) -> Result<PureStatePoint, M2Error> {
        match self {
            StateJson::Xi { xi } => PureStatePoint::from_xi([
                Complex64::new(xi[0][0], xi[0][1]),
                Complex64::new(xi[1][0], xi[1][1]),
            ]),
            StateJson::Bloch { bloch } => PureStatePoint::from_bloch(*bloch),
        }
    }

    pub fn to_density(&self) -> Result<DensityState, M2Error> {
        match self {
            StateJson::Xi { .. } => self.to_pure().map(DensityState::from),
            StateJson::Bloch { bloch } => DensityState::new(*bloch),
        }
    }
}

/// The isocone `I_K = ℝ₊K + ℝσ⁰`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct M2Isocone {
    pub region: SphericalRegion,
}

impl M2Isocone {
    pub fn new(region: SphericalRegion) -> Self {
        M2Isocone { region }
    }

    pub fn contains(&self, a: &HermitianMatrix) -> Result<bool, M2Error> {
        iso_membership(&self.region, a)
    }
}

/// `a ∈ I_K`: the `v`-part of `a` lies in `ℝ₊K`; the `σ⁰` part is free.
pub fn iso_membership(k: &SphericalRegion, a: &HermitianMatrix) -> Result<bool, M2Error> {
    Ok(k.cone_contains(&PauliCoords::from_matrix(a)?.v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Order of two Bloch-ball points under `≤_{I_K}`: `p ≤ q` iff
/// `φ_p(m) ≤ φ_q(m)` on `K`, i.e. `q − p` is in the dual cone of `ℝ₊K`.
pub fn bloch_order(k: &SphericalRegion, p: &Vec3, q: &Vec3) -> Relation {
    if vec3::dist(p, q) <= GEOM_TOL {
        return Relation::Equal;
    }
    if k.dual_contains(&vec3::sub(q, p)) {
        Relation::Less
    } else if k.dual_contains(&vec3::sub(p, q)) {
        Relation::Greater
    } else {
        Relation::Incomparable
    }
}

pub fn pure_state_order(k: &SphericalRegion, p: &PureStatePoint, q: &PureStatePoint) -> Relation {
    bloch_order(k, &p.bloch, &q.bloch)
}

pub fn state_order(k: &SphericalRegion, p: &DensityState, q: &DensityState) -> Relation {
    bloch_order(k, &p.bloch, &q.bloch)
}

/// Fubini–Study distance `arccos(p·q)/2 ∈ [0, π/2]`.
pub fn fubini_study(p: &PureStatePoint, q: &PureStatePoint) -> f64 {
    vec3::angle(&p.bloch, &q.bloch) / 2.0
}

/// `|⟨ξ|η⟩|²`.
pub fn transition_probability(p: &PureStatePoint, q: &PureStatePoint) -> f64 {
    (p.xi[0].conj() * q.xi[0] + p.xi[1].conj() * q.xi[1]).norm_sqr()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transversality {
    /// `h⃗(ξ) ∈ K` only: `λ₂ ⪯ λ₁`.
    Lambda2BelowLambda1,
    /// `−h⃗(ξ) ∈ K` only: `λ₁ ⪯ λ₂`.
    Lambda1BelowLambda2,
    /// Both in `K`: `λ₁ ∼ λ₂`.
    IncomparableSpectrum,
    /// Neither in `K`.
    NotTransverse,
    /// One-point spectrum.
    Scalar,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransversalityReport {
    pub case: Transversality,
    /// `[re, im]`.
    pub lambda1: [f64; 2],
    pub lambda2: [f64; 2],
    /// `h⃗(ξ)` for the eigenvector `ξ` of `λ₁`; absent for scalars.
    pub axis: Option<Vec3>,
}

/// Classifies a normal `n = p·diag(λ₁, λ₂)·p*` against `K` by where
/// `±h⃗(ξ)` falls, `ξ` the first column of `p`.
///
/// Writing `n = H₁ + iH₂` with commuting Hermitian parts, both `v`-parts lie
/// on one axis `u` and `n = cσ⁰ + w·(u·σ)` with complex `c`, `w`. Then
/// `λ₁ = c + w` has eigenvector `ξ` with `h⃗(ξ) = u`. The sign of `u` is
/// fixed so that `λ₁` is the larger eigenvalue in `(Re, Im)` order.
pub fn transversality(k: &SphericalRegion, n: &ComplexMatrix) -> Result<TransversalityReport, M2Error> {
    if n.dim() != 2 {
        return Err(M2Error::DimensionMismatch(n.dim()));
    }
    let defect = n.normality_defect();
    if defect > GEOM_TOL {
        return Err(M2Error::NotNormal(defect));
    }
    let adj = n.adjoint();
    let part = |sign: f64, rot: Complex64| {
        let rows = (0..2)
            .map(|i| (0..2).map(|j| (n.get(i, j) + adj.get(i, j) * sign) * rot * 0.5).collect())
            .collect();
        // Normality makes these Hermitian up to rounding.
        let m = ComplexMatrix::from_rows(rows).expect("2x2");
        let sym = (0..2)
            .map(|i| (0..2).map(|j| (m.get(i, j) + m.get(j, i).conj()) * 0.5).collect())
            .collect();
        PauliCoords::from_matrix(&HermitianMatrix::from_rows(sym).expect("symmetrized"))
            .expect("2x2")
    };
    let h1 = part(1.0, Complex64::new(1.0, 0.0));
    let h2 = part(-1.0, Complex64::new(0.0, -1.0));
    let c = Complex64::new(h1.c, h2.c);
    let (r1, r2) = (vec3::norm(&h1.v), vec3::norm(&h2.v));
    if 2.0 * r1.hypot(r2) <= SCALAR_TOL {
        return Ok(TransversalityReport {
            case: Transversality::Scalar,
            lambda1: [c.re, c.im],
            lambda2: [c.re, c.im],
            axis: None,
        });
    }
    let mut u = vec3::normalize(if r1 >= r2 { &h1.v } else { &h2.v });
    let mut w = Complex64::new(vec3::dot(&h1.v, &u), vec3::dot(&h2.v, &u));
    if w.re < 0.0 || (w.re == 0.0 && w.im < 0.0) {
        u = vec3::scale(&u, -1.0);
        w = -w;
    }
    let (l1, l2) = (c + w, c - w);
    let case = match (k.contains(&u), k.contains(&vec3::scale(&u, -1.0))) {
        (true, false) => Transversality::Lambda2BelowLambda1,
        (false, true) => Transversality::Lambda1BelowLambda2,
        (true, true) => Transversality::IncomparableSpectrum,
        (false, false) => Transversality::NotTransverse,
    };
    Ok(TransversalityReport { case, lambda1: [l1.re, l1.im], lambda2: [l2.re, l2.im], axis: Some(u) })
}

/// `x = ½((λ₁+λ₂)σ⁰ + (λ₁−λ₂)·h⃗(ξ))` for Hermitian `x` with eigenvalue `λ₁`
/// on the unit eigenvector `ξ`.
pub fn from_spectral_data(lambda1: f64, lambda2: f64, xi: &Qubit) -> Result<HermitianMatrix, M2Error> {
    let h = hopf(xi)?;
    Ok(PauliCoords::new(0.5 * (lambda1 + lambda2), vec3::scale(&h, 0.5 * (lambda1 - lambda2))).to_matrix())
}

/// Coefficients with `a ∨ b = αa + (1−α)b + βσ⁰`, `α ∈ [0,1]`, `β ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JoinCoeffs {
    pub alpha: f64,
    pub beta: f64,
}

fn lattice_coeffs(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<(f64, f64, f64, f64), M2Error> {
    let pa = PauliCoords::from_matrix(a)?;
    let pb = PauliCoords::from_matrix(b)?;
    let t = pa.c - pb.c;
    let r = vec3::norm(&vec3::sub(&pa.v, &pb.v));
    // |a − b| = s·σ⁰ + g·ŵ·σ with ŵ the direction of v_a − v_b.
    let s = 0.5 * ((t + r).abs() + (t - r).abs());
    let g = 0.5 * ((t + r).abs() - (t - r).abs());
    Ok((t, r, s, g))
}

/// `a ∨ b = b + (a−b)/2 + |a−b|/2`. With `a − b = tσ⁰ + w·σ`, `r = ‖w‖`,
/// the `σ`-part forces `α = 1/2 + (|t+r| − |t−r|)/(4r)`, and `β` absorbs
/// the rest of the `σ⁰`-part. For `r = 0` the limit `α ∈ {0, 1}` is taken,
/// and `a = b` gives `(1/2, 0)`.
pub fn join_coeffs(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<JoinCoeffs, M2Error> {
    let (t, r, s, g) = lattice_coeffs(a, b)?;
    let alpha = if r > 0.0 {
        0.5 + g / (2.0 * r)
    } else if t > 0.0 {
        1.0
    } else if t < 0.0 {
        0.0
    } else {
        0.5
    };
    let alpha = alpha.clamp(0.0, 1.0);
    let beta = 0.5 * t + 0.5 * s - alpha * t;
    Ok(JoinCoeffs { alpha, beta: beta.max(0.0) })
}

/// Coefficients with `a ∧ b = αa + (1−α)b − βσ⁰`, `α ∈ [0,1]`, `β ≥ 0`.
pub fn meet_coeffs(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<JoinCoeffs, M2Error> {
    let (t, r, s, g) = lattice_coeffs(a, b)?;
    let alpha = if r > 0.0 {
        0.5 - g / (2.0 * r)
    } else if t > 0.0 {
        0.0
    } else if t < 0.0 {
        1.0
    } else {
        0.5
    };
    let alpha = alpha.clamp(0.0, 1.0);
    let beta = alpha * t - 0.5 * t + 0.5 * s;
    Ok(JoinCoeffs { alpha, beta: beta.max(0.0) })
}

/// Two members of `I_K ∩ C₊` breaking `‖a + b‖ = ‖a‖ + ‖b‖`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct M2CoboundedWitness {
    pub k1: Vec3,
    pub k2: Vec3,
    #[serde(skip)]
    pub a: HermitianMatrix,
    #[serde(skip)]
    pub b: HermitianMatrix,
    pub norm_of_sum: f64,
    pub sum_of_norms: f64,
    pub slack: f64,
}

/// Picks two far-apart points `k₁ ≠ k₂` of `K` and returns
/// `a = σ⁰ + k₁·σ`, `b = σ⁰ + k₂·σ`, so `‖a‖ = ‖b‖ = 2` and
/// `‖a + b‖ = 2 + ‖k₁ + k₂‖ < 4`. Norms are evaluated spectrally.
pub fn cobounded_witness(k: &SphericalRegion) -> Option<M2CoboundedWitness> {
    let (k1, k2) = match k.spec() {
        RegionSpec::Full => ([0.0, 0.0, 1.0], [0.0, 0.0, -1.0]),
        RegionSpec::Cap { center, radius } => {
            let axis = vec3::orthogonal(center);
            (vec3::rotate(center, &axis, *radius), vec3::rotate(center, &axis, -radius))
        }
        RegionSpec::Hull { .. } => {
            let ks = k.extreme_vertices();
            let mut best: Option<(f64, Vec3, Vec3)> = None;
            for i in 0..ks.len() {
                for j in i + 1..ks.len() {
                    let ang = vec3::angle(&ks[i], &ks[j]);
                    if best.is_none_or(|(b, _, _)| ang > b) {
                        best = Some((ang, ks[i], ks[j]));
                    }
                }
            }
            let (_, a, b) = best?;
            (a, b)
        }
    };
    if vec3::dist(&k1, &k2) <= GEOM_TOL {
        return None;
    }
    let a = PauliCoords::new(1.0, k1).to_matrix();
    let b = PauliCoords::new(1.0, k2).to_matrix();
    let norm_of_sum = hermitian::operator_norm(&(&a + &b));
    let sum_of_norms = hermitian::operator_norm(&a) + hermitian::operator_norm(&b);
    Some(M2CoboundedWitness { k1, k2, a, b, norm_of_sum, sum_of_norms, slack: sum_of_norms - norm_of_sum })
}

pub type Rotation = [[f64; 3]; 3];

fn apply(r: &Rotation, v: &Vec3) -> Vec3 {
    [vec3::dot(&r[0], v), vec3::dot(&r[1], v), vec3::dot(&r[2], v)]
}

fn check_rotation(r: &Rotation) -> Result<(), M2Error> {
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { 1.0 } else { 0.0 };
            let got = vec3::dot(&r[i], &r[j]);
            if (got - want).abs() > GEOM_TOL {
                return Err(M2Error::NotARotation(format!("rows {i}, {j} have inner product {got}")));
            }
        }
    }
    let det = vec3::dot(&r[0], &vec3::cross(&r[1], &r[2]));
    if (det - 1.0).abs() > GEOM_TOL {
        return Err(M2Error::NotARotation(format!("determinant {det}")));
    }
    Ok(())
}

/// Whether the rotation `R` (acting on Pauli `v`-parts) maps `K` onto
/// itself, i.e. whether conjugation by the corresponding unitary fixes
/// `I_K`.
pub fn rotation_preserves(k: &SphericalRegion, r: &Rotation) -> Result<bool, M2Error> {
    check_rotation(r)?;
    Ok(match k.spec() {
        RegionSpec::Full => true,
        RegionSpec::Cap { center, .. } => vec3::dist(&apply(r, center), center) <= GEOM_TOL,
        RegionSpec::Hull { .. } => {
            let ks = k.extreme_vertices();
            ks.iter().all(|v| {
                let image = apply(r, v);
                ks.iter().any(|w| vec3::dist(&image, w) <= GEOM_TOL)
            })
        }
    })
}

/// Rotation matrix about the unit `axis` by `angle`.
pub fn rotation_about(axis: &Vec3, angle: f64) -> Rotation {
    let cols = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]].map(|e| vec3::rotate(&e, axis, angle));
    [
        [cols[0][0], cols[1][0], cols[2][0]],
        [cols[0][1], cols[1][1], cols[2][1]],
        [cols[0][2], cols[1][2], cols[2][2]],
    ]
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

    use super::*;

    const E1: Vec3 = [1.0, 0.0, 0.0];
    const E3: Vec3 = [0.0, 0.0, 1.0];
    const SOUTH: Vec3 = [0.0, 0.0, -1.0];

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn north_cap(theta: f64) -> SphericalRegion {
        SphericalRegion::cap(E3, theta).unwrap()
    }

    fn pure(b: Vec3) -> PureStatePoint {
        PureStatePoint::from_bloch(b).unwrap()
    }

    #[test]
    fn hopf_examples() {
        assert_eq!(hopf(&[z(1.0, 0.0), z(0.0, 0.0)]).unwrap(), E3);
        let h = hopf(&[z(FRAC_1_SQRT_2, 0.0), z(FRAC_1_SQRT_2, 0.0)]).unwrap();
        assert!(vec3::dist(&h, &E1) < 1e-15);
        let h = hopf(&[z(FRAC_1_SQRT_2, 0.0), z(0.0, FRAC_1_SQRT_2)]).unwrap();
        assert!(vec3::dist(&h, &[0.0, 1.0, 0.0]) < 1e-15);
        assert_eq!(hopf(&[z(1.0, 0.0), z(1.0, 0.0)]).unwrap_err().kind(), "NotNormalized");
    }

    #[test]
    fn hopf_section_inverts() {
        for u in [E3, SOUTH, E1, vec3::normalize(&[1.0, -2.0, 0.5]), vec3::normalize(&[0.3, 0.1, -3.0])] {
            assert!(vec3::dist(&hopf(&hopf_section(&u)).unwrap(), &u) < 1e-14);
        }
    }

    #[test]
    fn pauli_round_trip() {
        let p = PauliCoords::new(7.0, [0.5, -1.5, 2.0]);
        let back = PauliCoords::from_matrix(&p.to_matrix()).unwrap();
        assert!((back.c - p.c).abs() <= 1e-12 && vec3::dist(&back.v, &p.v) <= 1e-12);
        let s2 = PauliCoords::from_matrix(&HermitianMatrix::pauli(2)).unwrap();
        assert_eq!(s2.v, [0.0, 1.0, 0.0]);
    }

    #[test]
    fn membership_examples() {
        let k = north_cap(0.3);
        let a = &HermitianMatrix::pauli(3) + &HermitianMatrix::scalar(2, 7.0);
        assert!(iso_membership(&k, &a).unwrap());
        assert!(!iso_membership(&k, &HermitianMatrix::pauli(1)).unwrap());
        assert!(iso_membership(&k, &HermitianMatrix::scalar(2, -3.0)).unwrap());
        assert_eq!(
            iso_membership(&k, &HermitianMatrix::identity(3)).unwrap_err().kind(),
            "DimensionMismatch"
        );
    }

    #[test]
    fn pure_state_order_examples() {
        let half = north_cap(FRAC_PI_2);
        assert_eq!(pure_state_order(&half, &pure(SOUTH), &pure(E3)), Relation::Less);
        assert_eq!(pure_state_order(&half, &pure(E3), &pure(SOUTH)), Relation::Greater);
        assert_eq!(pure_state_order(&half, &pure(SOUTH), &pure(E1)), Relation::Incomparable);
        let full = SphericalRegion::full();
        assert_eq!(pure_state_order(&full, &pure(SOUTH), &pure(E3)), Relation::Incomparable);
        assert_eq!(pure_state_order(&full, &pure(E1), &pure(E1)), Relation::Equal);
    }

    #[test]
    fn state_order_examples() {
        let k = north_cap(0.2);
        let mixed = DensityState::new([0.0; 3]).unwrap();
        let north = DensityState::new(E3).unwrap();
        assert_eq!(state_order(&k, &mixed, &north), Relation::Less);
        assert_eq!(state_order(&k, &north, &north), Relation::Equal);
        let side = DensityState::new([0.5, 0.0, 0.0]).unwrap();
        assert_eq!(state_order(&k, &mixed, &side), Relation::Incomparable);
        assert!(DensityState::new([1.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn fubini_study_examples() {
        assert_eq!(fubini_study(&pure(E3), &pure(E3)), 0.0);
        assert!((fubini_study(&pure(E3), &pure(E1)) - FRAC_PI_4).abs() < 1e-15);
        let (n, s) = (pure(E3), pure(SOUTH));
        assert!((fubini_study(&n, &s) - FRAC_PI_2).abs() < 1e-15);
        assert!(transition_probability(&n, &s) < 1e-30);
        let q = pure(vec3::normalize(&[0.2, -0.7, 0.4]));
        let d = fubini_study(&n, &q);
        assert!((transition_probability(&n, &q) - d.cos().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn transversality_cases() {
        let cap = north_cap(0.3);
        let s1 = HermitianMatrix::pauli(1);
        let s3 = HermitianMatrix::pauli(3);
        let case = |k: &SphericalRegion, m: &HermitianMatrix| transversality(k, m.as_complex()).unwrap().case;
        assert_eq!(case(&cap, &s3), Transversality::Lambda2BelowLambda1);
        assert_eq!(case(&cap, &(-&s3)), Transversality::Lambda1BelowLambda2);
        assert_eq!(case(&cap, &s1), Transversality::NotTransverse);
        assert_eq!(case(&SphericalRegion::full(), &s3), Transversality::IncomparableSpectrum);
        assert_eq!(case(&cap, &HermitianMatrix::scalar(2, 2.0)), Transversality::Scalar);
        let r = transversality(&cap, s3.as_complex()).unwrap();
        assert_eq!((r.lambda1, r.lambda2), ([1.0, 0.0], [-1.0, 0.0]));
    }

    #[test]
    fn transversality_on_non_hermitian_normal() {
        // i·σ³ + σ⁰: eigenvalues 1 ± i on the σ³ axis.
        let n = ComplexMatrix::from_rows(vec![vec![z(1.0, 1.0), z(0.0, 0.0)], vec![z(0.0, 0.0), z(1.0, -1.0)]]).unwrap();
        let r = transversality(&north_cap(0.3), &n).unwrap();
        assert_eq!(r.case, Transversality::Lambda2BelowLambda1);
        assert_eq!(r.lambda1, [1.0, 1.0]);
        let not_normal = ComplexMatrix::from_rows(vec![vec![z(0.0, 0.0), z(1.0, 0.0)], vec![z(0.0, 0.0), z(0.0, 0.0)]]).unwrap();
        assert_eq!(transversality(&north_cap(0.3), &not_normal).unwrap_err().kind(), "NotNormal");
    }

    fn check_join(a: &HermitianMatrix, b: &HermitianMatrix) -> JoinCoeffs {
        let jc = join_coeffs(a, b).unwrap();
        let rebuilt = &(&a.scale(jc.alpha) + &b.scale(1.0 - jc.alpha)) + &HermitianMatrix::scalar(2, jc.beta);
        assert!(rebuilt.dist(&hermitian::join(a, b).unwrap()) <= 1e-9);
        assert!((0.0..=1.0).contains(&jc.alpha) && jc.beta >= 0.0);
        let mc = meet_coeffs(a, b).unwrap();
        let rebuilt = &(&a.scale(mc.alpha) + &b.scale(1.0 - mc.alpha)) - &HermitianMatrix::scalar(2, mc.beta);
        assert!(rebuilt.dist(&hermitian::meet(a, b).unwrap()) <= 1e-9);
        jc
    }

    #[test]
    fn join_coeff_examples() {
        let s3 = HermitianMatrix::pauli(3);
        let jc = check_join(&s3, &(-&s3));
        assert_eq!((jc.alpha, jc.beta), (0.5, 1.0));
        check_join(&HermitianMatrix::diag(&[3.0, 0.0]), &HermitianMatrix::diag(&[1.0, 2.0]));
        let b = &HermitianMatrix::pauli(1) + &HermitianMatrix::pauli(2).scale(0.3);
        let a = &b + &HermitianMatrix::scalar(2, 5.0);
        assert_eq!(check_join(&a, &b), JoinCoeffs { alpha: 1.0, beta: 0.0 });
        assert_eq!(join_coeffs(&b, &b).unwrap(), JoinCoeffs { alpha: 0.5, beta: 0.0 });
    }

    #[test]
    fn cobounded_witness_examples() {
        let w = cobounded_witness(&north_cap(0.3)).unwrap();
        assert!((vec3::angle(&w.k1, &w.k2) - 0.6).abs() < 1e-12);
        assert!((w.slack - 2.0 * (1.0 - 0.3_f64.cos())).abs() < 1e-12);
        let w = cobounded_witness(&SphericalRegion::full()).unwrap();
        assert!((w.slack - 2.0).abs() < 1e-12);
        let tri = SphericalRegion::hull(vec![
            vec3::normalize(&[1.0, 0.0, 1.0]),
            vec3::normalize(&[-0.5, 0.8, 1.0]),
            vec3::normalize(&[-0.5, -0.8, 1.0]),
        ])
        .unwrap();
        let w = cobounded_witness(&tri).unwrap();
        assert!(w.slack > 0.1);
        assert!(iso_membership(&tri, &w.a).unwrap() && iso_membership(&tri, &w.b).unwrap());
    }

    #[test]
    fn rotation_examples() {
        let cap = north_cap(0.4);
        assert!(rotation_preserves(&cap, &rotation_about(&E3, 1.234)).unwrap());
        assert!(!rotation_preserves(&cap, &rotation_about(&E1, PI)).unwrap());
        assert!(rotation_preserves(&SphericalRegion::full(), &rotation_about(&E1, 0.7)).unwrap());
        let reflection = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]];
        assert_eq!(rotation_preserves(&cap, &reflection).unwrap_err().kind(), "NotARotation");
        let octant = SphericalRegion::hull(vec![E1, [0.0, 1.0, 0.0], E3]).unwrap();
        let cyc = rotation_about(&vec3::normalize(&[1.0, 1.0, 1.0]), 2.0 * PI / 3.0);
        assert!(rotation_preserves(&octant, &cyc).unwrap());
        assert!(!rotation_preserves(&octant, &rotation_about(&E3, FRAC_PI_4)).unwrap());
    }

    #[test]
    fn spectral_data_reconstructs() {
        let x = PauliCoords::new(0.7, [0.3, -0.4, 1.2]).to_matrix();
        let d = hermitian::spectral(&x);
        let xi = [d.eigenvectors[1][0], d.eigenvectors[1][1]];
        let back = from_spectral_data(d.eigenvalues[1], d.eigenvalues[0], &xi).unwrap();
        assert!(back.dist(&x) <= 1e-9);
    }

    #[test]
    fn state_json_forms() {
        let s: StateJson = serde_json::from_str(r#"{"xi":[[1,0],[0,0]]}"#).unwrap();
        assert_eq!(s.to_pure().unwrap().bloch, E3);
        let s: StateJson = serde_json::from_str(r#"{"bloch":[0,0,-1]}"#).unwrap();
        assert_eq!(s.to_pure().unwrap().bloch, SOUTH);
        let s: StateJson = serde_json::from_str(r#"{"bloch":[0,0,0.5]}"#).unwrap();
        assert!(s.to_pure().is_err());
        assert!(s.to_density().is_ok());
    }
}
