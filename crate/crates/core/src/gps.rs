//! Orders on finite metric spaces from distances to landmarks.
//!
//! For landmarks `K ⊆ E`, `x ≤_K y` iff `d(x,z) ≤ d(y,z)` for every
//! `z ∈ K`: points further from every landmark are larger. The reversed
//! orientation uses `≥` and yields the dual order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::FinitePreorder;

/// Distance differences below this are ties.
pub const DIST_TOL: f64 = 1e-12;
/// Slack allowed in the triangle inequality.
pub const TRIANGLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GpsError {
    #[error("unknown point id `{0}`")]
    UnknownId(String),
    #[error("duplicate point id `{0}`")]
    DuplicateId(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
}

impl GpsError {
    pub fn kind(&self) -> &'static str {
        match self {
            GpsError::UnknownId(_) => "UnknownId",
            GpsError::DuplicateId(_) => "DuplicateId",
            GpsError::InvalidMetric(_) => "InvalidMetric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `x ≤ y ⇔ d(x,z) ≤ d(y,z)`.
    #[default]
    Remark,
    /// `x ≤ y ⇔ d(x,z) ≥ d(y,z)`.
    Reversed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiniteMetricSpace {
    points: Vec<String>,
    dist: Vec<Vec<f64>>,
}

impl FiniteMetricSpace {
    pub fn new(points: Vec<String>, dist: Vec<Vec<f64>>) -> Result<Self, GpsError> {
        let n = points.len();
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(GpsError::DuplicateId(p.clone()));
            }
        }
        let bad = |msg: String| Err(GpsError::InvalidMetric(msg));
        if dist.len() != n || dist.iter().any(|r| r.len() != n) {
            return bad(format!("distance matrix must be {n}x{n}"));
        }
        for i in 0..n {
            if dist[i][i] != 0.0 {
                return bad(format!("d({0},{0}) = {1}", points[i], dist[i][i]));
            }
            for j in 0..n {
                let d = dist[i][j];
                if !d.is_finite() || d < 0.0 {
                    return bad(format!("d({},{}) = {d}", points[i], points[j]));
                }
                if i != j && d == 0.0 {
                    return bad(format!("distinct points {} and {} at distance 0", points[i], points[j]));
                }
                if d != dist[j][i] {
                    return bad(format!("asymmetric distance between {} and {}", points[i], points[j]));
                }
                for k in 0..n {
                    if d > dist[i][k] + dist[k][j] + TRIANGLE_TOL {
                        return bad(format!(
                            "triangle inequality fails for {}, {}, {}",
                            points[i], points[k], points[j]
                        ));
                    }
                }
            }
        }
        Ok(FiniteMetricSpace { points, dist })
    }

    /// The Euclidean metric on points of `ℝᵈ`.
    pub fn euclidean(points: Vec<String>, coords: &[Vec<f64>]) -> Result<Self, GpsError> {
        let dist = coords
            .iter()
            .map(|a| {
                coords
                    .iter()
                    .map(|b| a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt())
                    .collect()
            })
            .collect();
        Self::new(points, dist)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.dist[i][j]
    }

    pub fn resolve(&self, ids: &[String]) -> Result<Vec<usize>, GpsError> {
        ids.iter()
            .map(|id| self.points.iter().position(|p| p == id).ok_or_else(|| GpsError::UnknownId(id.clone())))
            .collect()
    }

    /// `x ↦ d(x, z)`.
    pub fn distance_function(&self, z: usize) -> Vec<f64> {
        (0..self.len()).map(|x| self.dist[x][z]).collect()
    }
}

/// Whether `x ↦ (d(x,z))_{z∈K}` is injective.
pub fn gps_complete(e: &FiniteMetricSpace, landmarks: &[String]) -> Result<bool, GpsError> {
    let ks = e.resolve(landmarks)?;
    let n = e.len();
    Ok((0..n).all(|x| {
        (x + 1..n).all(|y| ks.iter().any(|&z| (e.dist(x, z) - e.dist(y, z)).abs() > DIST_TOL))
    }))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GpsOrder {
    pub preorder: FinitePreorder,
    /// The landmarks are GPS-complete, so the preorder is a partial order.
    pub complete: bool,
}

pub fn gps_order(e: &FiniteMetricSpace, landmarks: &[String], orientation: Orientation) -> Result<GpsOrder, GpsError> {
    let ks = e.resolve(landmarks)?;
    let n = e.len();
    let below = |x: usize, y: usize, z: usize| match orientation {
        Orientation::Remark => e.dist(x, z) <= e.dist(y, z) + DIST_TOL,
        Orientation::Reversed => e.dist(x, z) + DIST_TOL >= e.dist(y, z),
    };
    let rel = (0..n)
        .map(|x| (0..n).map(|y| ks.iter().all(|&z| below(x, y, z))).collect())
        .collect();
    // Ties within the tolerance need not chain, so close the relation.
    let preorder = FinitePreorder::closure_of(e.points().to_vec(), rel).expect("square relation");
    Ok(GpsOrder { preorder, complete: gps_complete(e, landmarks)? })
}

/// `{"points": [...], "dist": [[...]], "landmarks": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GpsJson {
    pub points: Vec<String>,
    pub dist: Vec<Vec<f64>>,
    #[serde(default)]
    pub landmarks: Vec<String>,
}

impl GpsJson {
    pub fn space(&self) -> Result<FiniteMetricSpace, GpsError> {
        FiniteMetricSpace::new(self.points.clone(), self.dist.clone())
    }
}
