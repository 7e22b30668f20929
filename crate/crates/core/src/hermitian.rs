//! Small self-adjoint complex matrices: spectral decomposition, functional
//! calculus, the `∨`/`∧` operations and positivity.
//!
//! `n = 2` is diagonalized in closed form through Pauli coordinates
//! `a = cσ⁰ + v·σ` (eigenvalues `c ± |v|`). Larger sizes use cyclic complex
//! Jacobi rotations. Only spectral projectors are used downstream, so the
//! basis chosen inside a degenerate eigenspace never matters.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Entries further than this from Hermitian symmetry are rejected.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues closer than this share a spectral projector.
pub const CLUSTER_TOL: f64 = 1e-10;
/// Spectral positivity threshold.
pub const POSITIVITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HermitianError {
    #[error("matrix is not hermitian (asymmetry {0:e})")]
    NotHermitian(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("function undefined at eigenvalue {0}")]
    DomainError(f64),
    #[error("malformed matrix: {0}")]
    Malformed(String),
}

impl HermitianError {
    pub fn kind(&self) -> &'static str {
        match self {
            HermitianError::NotHermitian(_) => "NotHermitian",
            HermitianError::DimensionMismatch(..) => "DimensionMismatch",
            HermitianError::DomainError(_) => "DomainError",
            HermitianError::Malformed(_) => "Malformed",
        }
    }
}

/// A general square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self, HermitianError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(HermitianError::Malformed("matrix must be square".into()));
        }
        if rows.iter().flatten().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(HermitianError::Malformed("non-finite entry".into()));
        }
        Ok(ComplexMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.n + j] = z;
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn frobenius_dist(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖n*n − nn*‖_F`.
    pub fn normality_defect(&self) -> f64 {
        let adj = self.adjoint();
        adj.matmul(self).frobenius_dist(&self.matmul(&adj))
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.data.chunks(self.n.max(1)).map(<[_]>::to_vec).take(self.n).collect()
    }
}

/// An `n × n` complex self-adjoint matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
}

/// Eigenvalues in ascending order with orthonormal eigenvector columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomp {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` is the unit eigenvector for `eigenvalues[k]`.
    pub eigenvectors: Vec<Vec<Complex64>>,
}

/// A spectral projector with its (cluster-averaged) eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProjector {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    pub projector: HermitianMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub norm: f64,
    pub positive: bool,
    pub positive_invertible: bool,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl HermitianMatrix {
    /// Symmetrizes `(m + m*)/2` when `m` is Hermitian within
    /// [`HERMITIAN_TOL`]; rejects it otherwise.
    pub fn new(m: ComplexMatrix) -> Result<Self, HermitianError> {
        let n = m.n;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((m.get(i, j) - m.get(j, i).conj()).norm());
            }
        }
        if worst > HERMITIAN_TOL {
            return Err(HermitianError::NotHermitian(worst));
        }
        let mut out = m.clone();
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, (m.get(i, j) + m.get(j, i).conj()) * 0.5);
            }
        }
        Ok(HermitianMatrix { inner: out })
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self, HermitianError> {
        Self::new(ComplexMatrix::from_rows(rows)?)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, HermitianError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| c(x)).collect()).collect())
    }

    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = ComplexMatrix::zeros(n);
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, c(v));
        }
        HermitianMatrix { inner: m }
    }

    pub fn identity(n: usize) -> Self {
        HermitianMatrix { inner: ComplexMatrix::identity(n) }
    }

    pub fn scalar(n: usize, k: f64) -> Self {
        Self::identity(n).scale(k)
    }

    /// Pauli matrix `σᵏ`, `k ∈ {0, 1, 2, 3}` (`σ⁰` is the identity).
    pub fn pauli(k: usize) -> Self {
        let (o, l, i) = (c(0.0), c(1.0), Complex64::new(0.0, 1.0));
        let rows = match k {
            0 => [[l, o], [o, l]],
            1 => [[o, l], [l, o]],
            2 => [[o, -i], [i, o]],
            3 => [[l, o], [o, -l]],
            _ => panic!("Pauli index {k} out of range"),
        };
        HermitianMatrix {
            inner: ComplexMatrix { n: 2, data: rows.concat() },
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.inner.get(i, j)
    }

    pub fn as_complex(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn scale(&self, k: f64) -> Self {
        HermitianMatrix {
            inner: ComplexMatrix {
                n: self.inner.n,
                data: self.inner.data.iter().map(|z| z * k).collect(),
            },
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        HermitianMatrix {
            inner: ComplexMatrix {
                n: self.inner.n,
                data: self.inner.data.iter().zip(&other.inner.data).map(|(&a, &b)| op(a, b)).collect(),
            },
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.get(i, i).re).sum()
    }

    /// `‖a − b‖` in the Frobenius norm.
    pub fn dist(&self, other: &Self) -> f64 {
        self.inner.frobenius_dist(&other.inner)
    }

    /// Product `ab`, Hermitian only when `a` and `b` commute.
    pub fn product(&self, other: &Self) -> ComplexMatrix {
        self.inner.matmul(&other.inner)
    }

    /// `‖ab − ba‖_F`.
    pub fn commutator_norm(&self, other: &Self) -> f64 {
        self.product(other).frobenius_dist(&other.product(self))
    }

    /// Rank-one projector `vv*` (for a unit `v`).
    pub fn outer(v: &[Complex64]) -> Self {
        let n = v.len();
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, v[i] * v[j].conj());
            }
        }
        HermitianMatrix { inner: m }
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.inner.rows()
    }
}

impl Add for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn add(self, rhs: Self) -> HermitianMatrix {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn sub(self, rhs: Self) -> HermitianMatrix {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn neg(self) -> HermitianMatrix {
        self.scale(-1.0)
    }
}

impl Mul<&HermitianMatrix> for f64 {
    type Output = HermitianMatrix;
    fn mul(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        rhs.scale(self)
    }
}

impl fmt::Display for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|z| format!("{:.6}{:+.6}i", z.re, z.im)).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn spectral_2x2(a: &HermitianMatrix) -> SpectralDecomp {
    let a00 = a.get(0, 0).re;
    let a11 = a.get(1, 1).re;
    let off = a.get(1, 0);
    let center = 0.5 * (a00 + a11);
    let (x, y, z) = (off.re, off.im, 0.5 * (a00 - a11));
    let r = (x * x + y * y + z * z).sqrt();
    if r == 0.0 {
        return SpectralDecomp {
            eigenvalues: vec![center, center],
            eigenvectors: vec![vec![c(1.0), c(0.0)], vec![c(0.0), c(1.0)]],
        };
    }
    let (ux, uy, uz) = (x / r, y / r, z / r);
    // Unit eigenvector of u·σ for +1, from whichever row is better
    // conditioned.
    let top = if uz >= 0.0 {
        let norm = (2.0 * (1.0 + uz)).sqrt();
        [c((1.0 + uz) / norm), Complex64::new(ux, uy) / norm]
    } else {
        let norm = (2.0 * (1.0 - uz)).sqrt();
        [Complex64::new(ux, -uy) / norm, c((1.0 - uz) / norm)]
    };
    let bottom = [-top[1].conj(), top[0].conj()];
    SpectralDecomp {
        eigenvalues: vec![center - r, center + r],
        eigenvectors: vec![bottom.to_vec(), top.to_vec()],
    }
}

fn spectral_jacobi(a: &HermitianMatrix) -> SpectralDecomp {
    let n = a.dim();
    let mut m = a.inner.clone();
    let mut v = ComplexMatrix::identity(n);
    let scale = m.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let w = m.get(p, q);
                let r = w.norm();
                if r <= 1e-300 {
                    continue;
                }
                // Rotate the phase of column/row q so that m[p][q] = r is real.
                let phase = w / r;
                for k in 0..n {
                    let z = m.get(k, q) * phase.conj();
                    m.set(k, q, z);
                }
                for k in 0..n {
                    let z = m.get(q, k) * phase;
                    m.set(q, k, z);
                }
                for k in 0..n {
                    let z = v.get(k, q) * phase.conj();
                    v.set(k, q, z);
                }
                // Real Jacobi rotation zeroing the now-real (p, q) entry.
                let alpha = m.get(p, p).re;
                let beta = m.get(q, q).re;
                let theta = 0.5 * (2.0 * r).atan2(beta - alpha);
                let (s, cs) = theta.sin_cos();
                for k in 0..n {
                    let (mp, mq) = (m.get(k, p), m.get(k, q));
                    m.set(k, p, mp * cs - mq * s);
                    m.set(k, q, mp * s + mq * cs);
                }
                for k in 0..n {
                    let (mp, mq) = (m.get(p, k), m.get(q, k));
                    m.set(p, k, mp * cs - mq * s);
                    m.set(q, k, mp * s + mq * cs);
                }
                for k in 0..n {
                    let (vp, vq) = (v.get(k, p), v.get(k, q));
                    v.set(k, p, vp * cs - vq * s);
                    v.set(k, q, vp * s + vq * cs);
                }
                m.set(p, q, c(0.0));
                m.set(q, p, c(0.0));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).re.partial_cmp(&m.get(j, j).re).unwrap());
    SpectralDecomp {
        eigenvalues: order.iter().map(|&i| m.get(i, i).re).collect(),
        eigenvectors: order.iter().map(|&i| (0..n).map(|k| v.get(k, i)).collect()).collect(),
    }
}

/// Eigen-decomposition with ascending eigenvalues.
pub fn spectral(a: &HermitianMatrix) -> SpectralDecomp {
    match a.dim() {
        0 => SpectralDecomp { eigenvalues: vec![], eigenvectors: vec![] },
        1 => SpectralDecomp {
            eigenvalues: vec![a.get(0, 0).re],
            eigenvectors: vec![vec![c(1.0)]],
        },
        2 => spectral_2x2(a),
        _ => spectral_jacobi(a),
    }
}

impl SpectralDecomp {
    pub fn reconstruct(&self) -> HermitianMatrix {
        let n = self.eigenvalues.len();
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .fold(HermitianMatrix::scalar(n, 0.0), |acc, (&l, v)| &acc + &HermitianMatrix::outer(v).scale(l))
    }

    /// Projectors onto eigenvalue clusters (consecutive gaps ≤
    /// [`CLUSTER_TOL`]), ascending.
    pub fn projectors(&self) -> Vec<SpectralProjector> {
        let n = self.eigenvalues.len();
        let mut out: Vec<SpectralProjector> = Vec::new();
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && self.eigenvalues[end] - self.eigenvalues[end - 1] <= CLUSTER_TOL {
                end += 1;
            }
            let members = start..end;
            let eigenvalue = self.eigenvalues[members.clone()].iter().sum::<f64>() / (end - start) as f64;
            let projector = members.fold(HermitianMatrix::scalar(n, 0.0), |acc, k| {
                &acc + &HermitianMatrix::outer(&self.eigenvectors[k])
            });
            out.push(SpectralProjector { eigenvalue, multiplicity: end - start, projector });
            start = end;
        }
        out
    }
}

/// `f(a) = Σ f(λ)·P_λ` over spectral projectors. `f` returns `None` (or a
/// non-finite value) where it is undefined.
pub fn func_calc(a: &HermitianMatrix, f: impl Fn(f64) -> Option<f64>) -> Result<HermitianMatrix, HermitianError> {
    let n = a.dim();
    let mut out = HermitianMatrix::scalar(n, 0.0);
    for proj in spectral(a).projectors() {
        let value = f(proj.eigenvalue)
            .filter(|v| v.is_finite())
            .ok_or(HermitianError::DomainError(proj.eigenvalue))?;
        out = &out + &proj.projector.scale(value);
    }
    Ok(out)
}

pub fn abs(a: &HermitianMatrix) -> HermitianMatrix {
    func_calc(a, |x| Some(x.abs())).expect("|x| is defined everywhere")
}

/// Positive square root; negative eigenvalues down to `-POSITIVITY_TOL`
/// are read as zero.
pub fn sqrt(a: &HermitianMatrix) -> Result<HermitianMatrix, HermitianError> {
    func_calc(a, |x| {
        if x >= 0.0 {
            Some(x.sqrt())
        } else if x >= -POSITIVITY_TOL {
            Some(0.0)
        } else {
            None
        }
    })
}

/// `(a ∨ b, a ∧ b)` with `a ∨ b = (a+b)/2 + |a−b|/2` and
/// `a ∧ b = (a+b)/2 − |a−b|/2`, sharing one `|a − b|`.
pub fn lattice_ops(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<(HermitianMatrix, HermitianMatrix), HermitianError> {
    if a.dim() != b.dim() {
        return Err(HermitianError::DimensionMismatch(a.dim(), b.dim()));
    }
    let mid = (a + b).scale(0.5);
    let half_gap = abs(&(a - b)).scale(0.5);
    Ok((&mid + &half_gap, &mid - &half_gap))
}

pub fn join(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<HermitianMatrix, HermitianError> {
    lattice_ops(a, b).map(|(j, _)| j)
}

pub fn meet(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<HermitianMatrix, HermitianError> {
    lattice_ops(a, b).map(|(_, m)| m)
}

pub fn classify(a: &HermitianMatrix) -> Classification {
    classify_tol(a, POSITIVITY_TOL)
}

/// As [`classify`], with eigenvalues within `tol` of zero counted as zero.
pub fn classify_tol(a: &HermitianMatrix, tol: f64) -> Classification {
    let ev = spectral(a).eigenvalues;
    let lo = ev.first().copied().unwrap_or(0.0);
    let hi = ev.last().copied().unwrap_or(0.0);
    Classification {
        norm: lo.abs().max(hi.abs()),
        positive: lo >= -tol,
        positive_invertible: lo > tol,
    }
}

pub fn operator_norm(a: &HermitianMatrix) -> f64 {
    classify(a).norm
}

/// One term `c·P` of a projection decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionTerm {
    pub coefficient: f64,
    pub projection: HermitianMatrix,
}

/// `a = λ₁·h₁(a) + Σ_{k≥2} (λ_k − λ_{k−1})·h_k(a)` with eigenvalue clusters
/// `λ₁ < … < λ_m` and `h_k(a)` the projector onto eigenvalues `≥ λ_k`
/// (so `h₁(a) = 1`). All coefficients but the first are positive; the
/// first is nonnegative exactly when `a ≥ 0`.
pub fn projection_decomposition(a: &HermitianMatrix) -> Vec<ProjectionTerm> {
    let projectors = spectral(a).projectors();
    let n = a.dim();
    let mut terms = Vec::with_capacity(projectors.len());
    for k in 0..projectors.len() {
        let upper = projectors[k..]
            .iter()
            .fold(HermitianMatrix::scalar(n, 0.0), |acc, p| &acc + &p.projector);
        let coefficient = if k == 0 {
            projectors[0].eigenvalue
        } else {
            projectors[k].eigenvalue - projectors[k - 1].eigenvalue
        };
        terms.push(ProjectionTerm { coefficient, projection: upper });
    }
    terms
}

/// JSON form `{"n": 2, "re": [[...]], "im": [[...]]}`; `im` may be omitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default)]
    pub im: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn to_complex(&self) -> Result<ComplexMatrix, HermitianError> {
        let n = self.n;
        let bad = |what: &str| HermitianError::Malformed(format!("`{what}` must be {n}x{n}"));
        if self.re.len() != n || self.re.iter().any(|r| r.len() != n) {
            return Err(bad("re"));
        }
        let im_present = !self.im.is_empty();
        if im_present && (self.im.len() != n || self.im.iter().any(|r| r.len() != n)) {
            return Err(bad("im"));
        }
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Complex64::new(self.re[i][j], if im_present { self.im[i][j] } else { 0.0 }))
                    .collect()
            })
            .collect();
        ComplexMatrix::from_rows(rows)
    }

    pub fn to_hermitian(&self) -> Result<HermitianMatrix, HermitianError> {
        HermitianMatrix::new(self.to_complex()?)
    }
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        let rows = m.rows();
        MatrixJson {
            n: m.dim(),
            re: rows.iter().map(|r| r.iter().map(|z| z.re).collect()).collect(),
            im: rows.iter().map(|r| r.iter().map(|z| z.im).collect()).collect(),
        }
    }
}

impl From<&HermitianMatrix> for MatrixJson {
    fn from(m: &HermitianMatrix) -> Self {
        MatrixJson::from(m.as_complex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn close(a: &HermitianMatrix, b: &HermitianMatrix, tol: f64) -> bool {
        a.dist(b) <= tol
    }

    /// Roots of `λ² − tr·λ + det` for a 2×2 Hermitian matrix.
    fn char_poly_roots(a: &HermitianMatrix) -> (f64, f64) {
        let tr = a.trace();
        let det = (a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0)).re;
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        ((tr - disc) / 2.0, (tr + disc) / 2.0)
    }

    #[test]
    fn spectral_examples() {
        assert_eq!(spectral(&HermitianMatrix::diag(&[2.0, 1.0])).eigenvalues, vec![1.0, 2.0]);
        let s1 = HermitianMatrix::pauli(1);
        assert_eq!(char_poly_roots(&s1), (-1.0, 1.0));
        assert_eq!(spectral(&s1).eigenvalues, vec![-1.0, 1.0]);
        let id = spectral(&HermitianMatrix::identity(2));
        assert_eq!(id.eigenvalues, vec![1.0, 1.0]);
        assert!(close(&id.reconstruct(), &HermitianMatrix::identity(2), 1e-12));
    }

    #[test]
    fn jacobi_on_3x3_and_4x4() {
        let i = Complex64::new(0.0, 1.0);
        let a = HermitianMatrix::from_rows(vec![
            vec![c(2.0), c(1.0) + i, c(0.5)],
            vec![c(1.0) - i, c(-1.0), 0.3 * i],
            vec![c(0.5), -0.3 * i, c(0.7)],
        ])
        .unwrap();
        let d = spectral(&a);
        assert!(d.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        assert!(close(&d.reconstruct(), &a, 1e-9));
        // Trace and Frobenius norm are spectral invariants.
        assert!((d.eigenvalues.iter().sum::<f64>() - a.trace()).abs() < 1e-12);
        let fro: f64 = a.rows().iter().flatten().map(|z| z.norm_sqr()).sum();
        assert!((d.eigenvalues.iter().map(|l| l * l).sum::<f64>() - fro).abs() < 1e-10);

        let b = HermitianMatrix::diag(&[3.0, -1.0, 3.0, 0.5]);
        let db = spectral(&b);
        assert_eq!(db.eigenvalues, vec![-1.0, 0.5, 3.0, 3.0]);
        assert_eq!(db.projectors().len(), 3);
    }

    #[test]
    fn func_calc_examples() {
        let s0 = HermitianMatrix::pauli(0);
        let s1 = HermitianMatrix::pauli(1);
        let s3 = HermitianMatrix::pauli(3);
        assert!(close(&abs(&s3), &s0, 1e-12));
        assert!(close(&sqrt(&s0.scale(4.0)).unwrap(), &s0.scale(2.0), 1e-12));
        assert!(close(&abs(&(&s3 - &s1)), &s0.scale(SQRT2), 1e-12));
        assert!(close(&func_calc(&s1, Some).unwrap(), &s1, 1e-12));
        assert_eq!(sqrt(&s3).unwrap_err().kind(), "DomainError");
    }

    #[test]
    fn lattice_examples() {
        let (j, m) = lattice_ops(&HermitianMatrix::diag(&[3.0, 0.0]), &HermitianMatrix::diag(&[1.0, 2.0])).unwrap();
        assert!(close(&j, &HermitianMatrix::diag(&[3.0, 2.0]), 1e-12));
        assert!(close(&m, &HermitianMatrix::diag(&[1.0, 0.0]), 1e-12));

        let s0 = HermitianMatrix::pauli(0);
        let s1 = HermitianMatrix::pauli(1);
        let s3 = HermitianMatrix::pauli(3);
        let expected = &(&s3 + &s1).scale(0.5) + &s0.scale(SQRT2 / 2.0);
        assert!(close(&join(&s3, &s1).unwrap(), &expected, 1e-12));
        assert!(close(&join(&s1, &s1).unwrap(), &s1, 1e-12));

        let err = lattice_ops(&s0, &HermitianMatrix::identity(3)).unwrap_err();
        assert_eq!(err.kind(), "DimensionMismatch");
    }

    #[test]
    fn classify_examples() {
        let s3 = HermitianMatrix::pauli(3);
        let c3 = classify(&s3);
        assert_eq!((c3.norm, c3.positive), (1.0, false));
        let p = classify(&(&HermitianMatrix::pauli(0) + &s3));
        assert!(p.positive && !p.positive_invertible);
        let two = classify(&HermitianMatrix::scalar(2, 2.0));
        assert!(two.positive_invertible);
        assert_eq!(two.norm, 2.0);
    }

    #[test]
    fn rejects_non_hermitian() {
        let err = HermitianMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap_err();
        assert_eq!(err.kind(), "NotHermitian");
        // Tiny asymmetry is symmetrized away.
        let a = HermitianMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0 + 1e-13, 0.0]]).unwrap();
        assert_eq!(a.get(0, 1), a.get(1, 0));
    }

    #[test]
    fn projection_decomposition_reconstructs() {
        let a = HermitianMatrix::from_real_rows(&[vec![2.0, 1.0, 0.0], vec![1.0, 2.0, 0.0], vec![0.0, 0.0, 3.0]]).unwrap();
        let terms = projection_decomposition(&a);
        // Eigenvalues 1, 3, 3.
        assert_eq!(terms.len(), 2);
        assert!((terms[0].coefficient - 1.0).abs() < 1e-12);
        assert!((terms[1].coefficient - 2.0).abs() < 1e-12);
        let back = terms.iter().fold(HermitianMatrix::scalar(3, 0.0), |acc, t| &acc + &t.projection.scale(t.coefficient));
        assert!(close(&back, &a, 1e-9));
    }

    #[test]
    fn json_accepts_real_only() {
        let js: MatrixJson = serde_json::from_str(r#"{"n":2,"re":[[1,0],[0,-1]]}"#).unwrap();
        assert_eq!(js.to_hermitian().unwrap(), HermitianMatrix::pauli(3));
    }
}
