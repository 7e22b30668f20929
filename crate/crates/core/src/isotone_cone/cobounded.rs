use serde::Serialize;

use super::RealFunction;
use crate::poset::FinitePoset;

const NORM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoboundedCondition {
    /// `‖f + g‖ = ‖f‖ + ‖g‖` on `I₊`.
    Sum,
    /// `‖f⁻¹ + g⁻¹‖ = ‖f⁻¹‖ + ‖g⁻¹‖` on positive invertible members.
    Inverse,
}

/// A pair of cone members breaking norm additivity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoboundedViolation {
    pub condition: CoboundedCondition,
    pub f: RealFunction,
    pub g: RealFunction,
    /// Norm of `f + g` (or of `f⁻¹ + g⁻¹`).
    pub norm_of_sum: f64,
    /// `‖f‖ + ‖g‖` (or `‖f⁻¹‖ + ‖g⁻¹‖`).
    pub sum_of_norms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoboundedReport {
    pub cobounded: bool,
    pub witness: Option<CoboundedViolation>,
}

fn shifted_indicator(members: &[bool]) -> RealFunction {
    RealFunction::indicator(members).map(|v| 1.0 + v)
}

fn check(condition: CoboundedCondition, f: &RealFunction, g: &RealFunction) -> Option<CoboundedViolation> {
    let (a, b) = match condition {
        CoboundedCondition::Sum => (f.clone(), g.clone()),
        CoboundedCondition::Inverse => (f.map(f64::recip), g.map(f64::recip)),
    };
    let norm_of_sum = a.add(&b).sup_norm();
    let sum_of_norms = a.sup_norm() + b.sup_norm();
    (sum_of_norms - norm_of_sum > NORM_TOL).then(|| CoboundedViolation {
        condition,
        f: f.clone(),
        g: g.clone(),
        norm_of_sum,
        sum_of_norms,
    })
}

/// Tests norm additivity of `I₊(P)` under the sup norm.
///
/// The candidates are `1 + 1_{↑x}` for the sum condition and
/// `1 + 1_{P∖↓x}` for the inverse condition, over all pairs of elements.
/// `‖(1 + 1_{↑a}) + (1 + 1_{↑b})‖ = 4` exactly when `↑a ∩ ↑b ≠ ∅`, and the
/// inverse pair reaches its norm bound exactly when `↓a ∩ ↓b ≠ ∅`; two
/// distinct maximal (minimal) elements therefore always produce a
/// violation, and a finite poset lacking a top (bottom) has two of them.
pub fn cobounded_commutative(p: &FinitePoset) -> CoboundedReport {
    let n = p.len();
    let ups: Vec<RealFunction> = (0..n).map(|x| shifted_indicator(&p.principal_upset(x))).collect();
    let co_downs: Vec<RealFunction> = (0..n)
        .map(|x| {
            let down = p.principal_downset(x);
            shifted_indicator(&down.iter().map(|&d| !d).collect::<Vec<_>>())
        })
        .collect();
    let pairs = || (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)));
    let witness = pairs()
        .find_map(|(i, j)| check(CoboundedCondition::Sum, &ups[i], &ups[j]))
        .or_else(|| pairs().find_map(|(i, j)| check(CoboundedCondition::Inverse, &co_downs[i], &co_downs[j])));
    CoboundedReport {
        cobounded: witness.is_none(),
        witness,
    }
}
