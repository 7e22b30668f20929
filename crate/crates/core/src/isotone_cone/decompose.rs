use serde::{Deserialize, Serialize};

use super::{require_isotone, ConeError, RealFunction, ISOTONE_TOL};
use crate::poset::FinitePoset;

/// One term `coefficient · 1_U` of an up-set decomposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UpsetTerm {
    pub coefficient: f64,
    pub members: Vec<String>,
    pub indicator: RealFunction,
}

/// Writes a nonnegative isotone `f` as `Σ cᵢ·1_{Uᵢ}` with `cᵢ ≥ 0` and
/// each `Uᵢ` an up-set.
///
/// Distinct values `λ₁ < … < λ_m` (values closer than `1e-12` merged into
/// one level) give `f = λ₁·1_P + Σ_{k≥2} (λ_k − λ_{k−1})·1_{f ≥ λ_k}`.
/// Zero coefficients are omitted. In the diagonal algebra each `1_U` is a
/// projection in the cone.
pub fn upset_decomposition(p: &FinitePoset, f: &RealFunction) -> Result<Vec<UpsetTerm>, ConeError> {
    require_isotone(p, f)?;
    let n = p.len();
    if let Some(i) = (0..n).find(|&i| f.values[i] < -ISOTONE_TOL) {
        return Err(ConeError::NegativeValues {
            id: p.elements()[i].clone(),
            value: f.values[i],
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| f.values[a].partial_cmp(&f.values[b]).unwrap());

    // level[x] = index of the value cluster of x; cluster_min[k] = its value.
    let mut level = vec![0usize; n];
    let mut cluster_min: Vec<f64> = Vec::new();
    let mut prev: Option<f64> = None;
    for &x in &order {
        let v = f.values[x];
        match prev {
            Some(pv) if v - pv <= ISOTONE_TOL => {}
            _ => cluster_min.push(v),
        }
        level[x] = cluster_min.len() - 1;
        prev = Some(v);
    }

    let mut terms = Vec::new();
    for (k, &lambda) in cluster_min.iter().enumerate() {
        let coefficient = if k == 0 {
            lambda.max(0.0)
        } else {
            lambda - cluster_min[k - 1]
        };
        if coefficient == 0.0 {
            continue;
        }
        let members_mask: Vec<bool> = (0..n).map(|x| level[x] >= k).collect();
        terms.push(UpsetTerm {
            coefficient,
            members: (0..n)
                .filter(|&x| members_mask[x])
                .map(|x| p.elements()[x].clone())
                .collect(),
            indicator: RealFunction::indicator(&members_mask),
        });
    }
    Ok(terms)
}

/// `Σ cᵢ·1_{Uᵢ}` on `n` points.
pub fn reconstruct(n: usize, terms: &[UpsetTerm]) -> RealFunction {
    terms.iter().fold(RealFunction::constant(n, 0.0), |acc, t| {
        acc.add(&t.indicator.scale(t.coefficient))
    })
}
