//! Cones of isotone real functions on finite posets.
//!
//! On a finite discrete space every function is continuous, so the cone
//! `I(P)` is the polyhedral cone `{f : f(x) ≤ f(y) whenever x ≤ y}`. It is
//! closed automatically (finite dimension), contains the constants, and is
//! stable under sums, nonnegative scaling and pointwise max/min.

mod cobounded;
mod decompose;
mod expr;
mod minimal;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::{FinitePoset, FinitePreorder};

pub use cobounded::{cobounded_commutative, CoboundedCondition, CoboundedReport, CoboundedViolation};
pub use decompose::{reconstruct, upset_decomposition, UpsetTerm};
pub use expr::{eval_expr, prune, stone_nachbin_express, LatticeExpr};
pub use minimal::{minimal_witness, MinimalityWitness};

/// Default slack for `f(x) ≤ f(y)` comparisons.
pub const ISOTONE_TOL: f64 = 1e-12;
/// Tolerance for reconstructing a function from an expression or a
/// decomposition.
pub const RECONSTRUCTION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConeError {
    #[error("function has {got} values, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("function has a non-finite value at position {0}")]
    NonFinite(usize),
    #[error("function is not isotone: f({0}) > f({1})")]
    NotIsotone(String, String),
    #[error("function takes the negative value {value} at `{id}`")]
    NegativeValues { id: String, value: f64 },
    #[error("the generators do not determine the order: `{0}` vs `{1}`")]
    OrderNotDetermined(String, String),
    #[error("the generators do not separate `{0}` and `{1}`")]
    PointsNotSeparated(String, String),
    #[error("generator index {index} out of range ({len} generators)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("join or meet with no arguments")]
    EmptyLattice,
    #[error("negative scale factor {0}")]
    NegativeScale(f64),
}

impl ConeError {
    pub fn kind(&self) -> &'static str {
        match self {
            ConeError::DimensionMismatch { .. } => "DimensionMismatch",
            ConeError::NonFinite(_) => "NonFinite",
            ConeError::NotIsotone(..) => "NotIsotone",
            ConeError::NegativeValues { .. } => "NegativeValues",
            ConeError::OrderNotDetermined(..) => "OrderNotDetermined",
            ConeError::PointsNotSeparated(..) => "PointsNotSeparated",
            ConeError::IndexOutOfRange { .. } => "IndexOutOfRange",
            ConeError::EmptyLattice => "EmptyLattice",
            ConeError::NegativeScale(_) => "NegativeScale",
        }
    }
}

/// A real function on a finite set, aligned with element order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealFunction {
    pub values: Vec<f64>,
}

impl RealFunction {
    pub fn new(values: Vec<f64>) -> Result<Self, ConeError> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(ConeError::NonFinite(i));
        }
        Ok(RealFunction { values })
    }

    pub fn constant(n: usize, c: f64) -> Self {
        RealFunction { values: vec![c; n] }
    }

    pub fn indicator(members: &[bool]) -> Self {
        RealFunction {
            values: members.iter().map(|&m| if m { 1.0 } else { 0.0 }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn zip_with(&self, other: &Self, op: impl Fn(f64, f64) -> f64) -> Self {
        RealFunction {
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| op(a, b)).collect(),
        }
    }

    pub fn map(&self, op: impl Fn(f64) -> f64) -> Self {
        RealFunction {
            values: self.values.iter().map(|&a| op(a)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|a| k * a)
    }

    pub fn max(&self, other: &Self) -> Self {
        self.zip_with(other, f64::max)
    }

    pub fn min(&self, other: &Self) -> Self {
        self.zip_with(other, f64::min)
    }

    /// Sup norm (the C*-norm of the diagonal algebra).
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    fn check_len(&self, n: usize) -> Result<(), ConeError> {
        if self.len() != n {
            return Err(ConeError::DimensionMismatch { expected: n, got: self.len() });
        }
        Ok(())
    }
}

fn first_violation(p: &FinitePreorder, f: &RealFunction, tol: f64) -> Option<(usize, usize)> {
    let n = p.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| p.leq(i, j) && f.values[i] > f.values[j] + tol)
}

/// `x ≤ y ⇒ f(x) ≤ f(y) + tol` for every related pair.
pub fn is_isotone_tol(p: &FinitePreorder, f: &RealFunction, tol: f64) -> Result<bool, ConeError> {
    f.check_len(p.len())?;
    Ok(first_violation(p, f, tol).is_none())
}

pub fn is_isotone(p: &FinitePoset, f: &RealFunction) -> Result<bool, ConeError> {
    is_isotone_tol(p.as_preorder(), f, ISOTONE_TOL)
}

pub(crate) fn require_isotone(p: &FinitePoset, f: &RealFunction) -> Result<(), ConeError> {
    f.check_len(p.len())?;
    match first_violation(p.as_preorder(), f, ISOTONE_TOL) {
        Some((i, j)) => Err(ConeError::NotIsotone(
            p.elements()[i].clone(),
            p.elements()[j].clone(),
        )),
        None => Ok(()),
    }
}

/// The cone `I(P)` of isotone functions on a finite poset.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotoneCone {
    poset: FinitePoset,
}

impl IsotoneCone {
    pub fn new(poset: FinitePoset) -> Self {
        IsotoneCone { poset }
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn contains(&self, f: &RealFunction) -> Result<bool, ConeError> {
        is_isotone(&self.poset, f)
    }

    /// Members of `I₊`: isotone and nonnegative.
    pub fn contains_positive(&self, f: &RealFunction) -> Result<bool, ConeError> {
        Ok(self.contains(f)? && f.values.iter().all(|&v| v >= -ISOTONE_TOL))
    }

    /// Indicators of every up-set, in a fixed enumeration order.
    pub fn upset_indicators(&self) -> Vec<RealFunction> {
        enumerate_upsets(&self.poset, usize::MAX)
            .unwrap_or_default()
            .iter()
            .map(|u| RealFunction::indicator(u))
            .collect()
    }
}

/// All up-sets of `p`, or `None` if there are more than `limit`.
///
/// Elements are decided from the top down; an element may join the set
/// only when everything strictly above it already has, so every leaf of
/// the search is an up-set and no branch is wasted.
pub fn enumerate_upsets(p: &FinitePoset, limit: usize) -> Option<Vec<Vec<bool>>> {
    let n = p.len();
    // Order elements by the size of their strict up-set, largest last, so
    // that all strict successors of an element come before it.
    let mut order: Vec<usize> = (0..n).collect();
    let above = |x: usize| (0..n).filter(|&y| p.lt(x, y)).count();
    order.sort_by_key(|&x| above(x));
    let mut out = Vec::new();
    let mut current = vec![false; n];
    fn rec(
        p: &FinitePoset,
        order: &[usize],
        k: usize,
        current: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
        limit: usize,
    ) -> bool {
        if k == order.len() {
            if out.len() >= limit {
                return false;
            }
            out.push(current.clone());
            return true;
        }
        let x = order[k];
        if !rec(p, order, k + 1, current, out, limit) {
            return false;
        }
        let n = current.len();
        if (0..n).all(|y| !p.lt(x, y) || current[y]) {
            current[x] = true;
            let ok = rec(p, order, k + 1, current, out, limit);
            current[x] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    if rec(p, &order, 0, &mut current, &mut out, limit) {
        Some(out)
    } else {
        None
    }
}

/// The preorder `≤_S` with a flag telling whether `S` separates points.
#[derive(Debug, Clone, PartialEq)]
pub struct InducedOrder {
    pub preorder: FinitePreorder,
    pub separates: bool,
}

impl InducedOrder {
    pub fn into_poset(self) -> Option<FinitePoset> {
        self.preorder.into_poset().ok()
    }
}

/// `x ≤_S y ⇔ ∀ s ∈ S, s(x) ≤ s(y)`, comparing exactly.
pub fn order_from_functions(elements: Vec<String>, s: &[RealFunction]) -> Result<InducedOrder, ConeError> {
    order_from_functions_tol(elements, s, 0.0)
}

/// As [`order_from_functions`], with `s(x) ≤ s(y) + tol`. Values within
/// `tol` count as ties; the relation is closed transitively in case ties
/// chain.
pub fn order_from_functions_tol(
    elements: Vec<String>,
    s: &[RealFunction],
    tol: f64,
) -> Result<InducedOrder, ConeError> {
    let n = elements.len();
    for f in s {
        f.check_len(n)?;
    }
    let rel = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| s.iter().all(|f| f.values[i] <= f.values[j] + tol))
                .collect()
        })
        .collect();
    let preorder = FinitePreorder::closure_of(elements, rel)
        .map_err(|_| ConeError::DimensionMismatch { expected: n, got: n })?;
    let separates = preorder.is_antisymmetric();
    Ok(InducedOrder { preorder, separates })
}

/// Membership in the isocone `⟨S⟩` generated by `S`.
///
/// Every isocone axiom preserves isotonicity for `≤_S`, so `⟨S⟩ ⊆ I(≤_S)`;
/// when `S` separates points the lattice Stone–Weierstrass theorem gives
/// equality, and membership reduces to isotonicity.
pub fn generated_cone_contains(
    elements: Vec<String>,
    s: &[RealFunction],
    f: &RealFunction,
) -> Result<bool, ConeError> {
    let induced = order_from_functions(elements, s)?;
    if let Some((i, j)) = induced.preorder.antisymmetry_violation() {
        let e = induced.preorder.elements();
        return Err(ConeError::PointsNotSeparated(e[i].clone(), e[j].clone()));
    }
    is_isotone_tol(&induced.preorder, f, ISOTONE_TOL)
}

/// Whether the functions span `ℝⁿ` (rank `n`), by Gaussian elimination
/// with partial pivoting.
pub fn spans_everything(n: usize, s: &[RealFunction]) -> bool {
    let mut rows: Vec<Vec<f64>> = s.iter().map(|f| f.values.clone()).collect();
    let scale = rows
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0_f64, |m, v| m.max(v.abs()))
        .max(1.0);
    let eps = 1e-10 * scale;
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..rows.len()).max_by(|&a, &b| {
            rows[a][col].abs().partial_cmp(&rows[b][col].abs()).unwrap()
        });
        let Some(pivot) = pivot else { break };
        if rows[pivot][col].abs() <= eps {
            continue;
        }
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            let factor = rows[r][col] / rows[rank][col];
            for c in col..n {
                rows[r][c] -= factor * rows[rank][c];
            }
        }
        rank += 1;
    }
    rank == n
}
