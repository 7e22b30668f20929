//! Finite preorders and posets.
//!
//! Elements are identified by string ids. Internally an element is its
//! position in the declared list; every public output refers back to ids.
//! The relation is stored as a dense boolean matrix, `rel[i][j]` meaning
//! `element_i ⪯ element_j`. Sizes are expected to stay in the hundreds, so
//! the cubic closure is fine.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng::seeded;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    #[error("unknown element id `{0}`")]
    UnknownId(String),
    #[error("relation is not antisymmetric: `{0}` and `{1}` are mutually related")]
    AntisymmetryViolation(String, String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: `{0}` ⪯ `{1}` ⪯ `{2}`")]
    NotTransitive(String, String, String),
    #[error("relation matrix has shape {rows}x{cols}, expected {n}x{n}")]
    DimensionMismatch { rows: usize, cols: usize, n: usize },
}

impl PosetError {
    pub fn kind(&self) -> &'static str {
        match self {
            PosetError::DuplicateId(_) => "DuplicateId",
            PosetError::UnknownId(_) => "UnknownId",
            PosetError::AntisymmetryViolation(..) => "AntisymmetryViolation",
            PosetError::NotReflexive(_) => "NotReflexive",
            PosetError::NotTransitive(..) => "NotTransitive",
            PosetError::DimensionMismatch { .. } => "DimensionMismatch",
        }
    }
}

/// A reflexive and transitive relation on a finite set of ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePreorder {
    elements: Vec<String>,
    rel: Vec<Vec<bool>>,
}

/// A finite partial order: a preorder that is also antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    inner: FinitePreorder,
}

fn index_map(elements: &[String]) -> Result<HashMap<&str, usize>, PosetError> {
    let mut map = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        if map.insert(e.as_str(), i).is_some() {
            return Err(PosetError::DuplicateId(e.clone()));
        }
    }
    Ok(map)
}

/// Reflexive-transitive closure, Warshall style.
pub(crate) fn close(rel: &mut [Vec<bool>]) {
    let n = rel.len();
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if !rel[i][k] {
                continue;
            }
            for j in 0..n {
                if rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
}

impl FinitePreorder {
    /// Builds the reflexive-transitive closure of `pairs`.
    pub fn from_pairs<S: AsRef<str>>(
        elements: Vec<String>,
        pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        let index = index_map(&elements)?;
        let n = elements.len();
        let mut rel = vec![vec![false; n]; n];
        for (a, b) in pairs {
            let i = *index
                .get(a.as_ref())
                .ok_or_else(|| PosetError::UnknownId(a.as_ref().to_string()))?;
            let j = *index
                .get(b.as_ref())
                .ok_or_else(|| PosetError::UnknownId(b.as_ref().to_string()))?;
            rel[i][j] = true;
        }
        close(&mut rel);
        Ok(FinitePreorder { elements, rel })
    }

    /// Validates an explicit relation matrix without closing it.
    pub fn from_relation(elements: Vec<String>, rel: Vec<Vec<bool>>) -> Result<Self, PosetError> {
        index_map(&elements)?;
        let n = elements.len();
        if rel.len() != n {
            return Err(PosetError::DimensionMismatch { rows: rel.len(), cols: n, n });
        }
        for row in &rel {
            if row.len() != n {
                return Err(PosetError::DimensionMismatch { rows: n, cols: row.len(), n });
            }
        }
        for i in 0..n {
            if !rel[i][i] {
                return Err(PosetError::NotReflexive(elements[i].clone()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !rel[i][j] {
                    continue;
                }
                for k in 0..n {
                    if rel[j][k] && !rel[i][k] {
                        return Err(PosetError::NotTransitive(
                            elements[i].clone(),
                            elements[j].clone(),
                            elements[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(FinitePreorder { elements, rel })
    }

    /// Closes an arbitrary relation matrix (shape must be `n x n`).
    pub fn closure_of(elements: Vec<String>, mut rel: Vec<Vec<bool>>) -> Result<Self, PosetError> {
        index_map(&elements)?;
        let n = elements.len();
        if rel.len() != n || rel.iter().any(|r| r.len() != n) {
            return Err(PosetError::DimensionMismatch { rows: rel.len(), cols: n, n });
        }
        close(&mut rel);
        Ok(FinitePreorder { elements, rel })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        &self.rel
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rel[i][j]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, PosetError> {
        self.elements
            .iter()
            .position(|e| e == id)
            .ok_or_else(|| PosetError::UnknownId(id.to_string()))
    }

    /// First mutually related pair of distinct elements, if any.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.rel[i][j] && self.rel[j][i])
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_violation().is_none()
    }

    pub fn into_poset(self) -> Result<FinitePoset, PosetError> {
        match self.antisymmetry_violation() {
            Some((i, j)) => Err(PosetError::AntisymmetryViolation(
                self.elements[i].clone(),
                self.elements[j].clone(),
            )),
            None => Ok(FinitePoset { inner: self }),
        }
    }

    /// All related pairs `(x, y)` with `x ≠ y`, as ids.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.rel[i][j] {
                    out.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        out
    }
}

/// The quotient of a preorder by mutual relatedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub poset: FinitePoset,
    /// `projection[i]` is the class index of element `i` of the preorder.
    pub projection: Vec<usize>,
}

impl Reduction {
    /// Class id of the element `id` of the original preorder.
    pub fn class_of<'a>(&'a self, source: &FinitePreorder, id: &str) -> Result<&'a str, PosetError> {
        let i = source.index_of(id)?;
        Ok(&self.poset.elements()[self.projection[i]])
    }
}

/// Collapses each class of mutually related elements to one point.
///
/// Singleton classes keep their id; larger classes are named by joining
/// member ids with `|` in declaration order.
pub fn reduce_preorder(q: &FinitePreorder) -> Reduction {
    let n = q.len();
    let mut projection = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for i in 0..n {
        if projection[i] != usize::MAX {
            continue;
        }
        let class = reps.len();
        let members: Vec<usize> = (i..n).filter(|&j| q.leq(i, j) && q.leq(j, i)).collect();
        for &m in &members {
            projection[m] = class;
        }
        reps.push(i);
        names.push(
            members
                .iter()
                .map(|&m| q.elements[m].as_str())
                .collect::<Vec<_>>()
                .join("|"),
        );
    }
    let k = reps.len();
    let rel = (0..k)
        .map(|a| (0..k).map(|b| q.leq(reps[a], reps[b])).collect())
        .collect();
    Reduction {
        poset: FinitePoset {
            inner: FinitePreorder { elements: names, rel },
        },
        projection,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CombineMode {
    Product,
    DisjointUnion,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Bounds {
    pub top: Option<String>,
    pub bottom: Option<String>,
}

impl Bounds {
    pub fn is_bounded(&self) -> bool {
        self.top.is_some() && self.bottom.is_some()
    }
}

impl FinitePoset {
    pub fn from_pairs<S: AsRef<str>>(elements: Vec<String>, pairs: &[(S, S)]) -> Result<Self, PosetError> {
        FinitePreorder::from_pairs(elements, pairs)?.into_poset()
    }

    pub fn from_relation(elements: Vec<String>, rel: Vec<Vec<bool>>) -> Result<Self, PosetError> {
        FinitePreorder::from_relation(elements, rel)?.into_poset()
    }

    /// The poset with no relations besides equality.
    pub fn antichain<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Self {
        let elements: Vec<String> = ids.into_iter().map(Into::into).collect();
        let n = elements.len();
        let rel = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        FinitePoset::from_relation(elements, rel).expect("antichain ids must be distinct")
    }

    /// The chain `ids[0] < ids[1] < ...`.
    pub fn chain<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Self {
        let elements: Vec<String> = ids.into_iter().map(Into::into).collect();
        let n = elements.len();
        let rel = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        FinitePoset::from_relation(elements, rel).expect("chain ids must be distinct")
    }

    pub fn as_preorder(&self) -> &FinitePreorder {
        &self.inner
    }

    pub fn into_preorder(self) -> FinitePreorder {
        self.inner
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        self.inner.elements()
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        self.inner.relation()
    }

    pub fn index_of(&self, id: &str) -> Result<usize, PosetError> {
        self.inner.index_of(id)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.inner.leq(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.inner.leq(i, j)
    }

    /// `x ∼ y`: distinct and unrelated in both directions.
    #[inline]
    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        i != j && !self.inner.leq(i, j) && !self.inner.leq(j, i)
    }

    pub fn pairs(&self) -> Vec<(String, String)> {
        self.inner.pairs()
    }

    pub fn is_total(&self) -> bool {
        self.first_incomparable_pair().is_none()
    }

    pub fn first_incomparable_pair(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.incomparable(i, j))
    }

    /// Indicator of `↑x`, read as a 0/1 vector over elements.
    pub fn principal_upset(&self, x: usize) -> Vec<bool> {
        (0..self.len()).map(|y| self.leq(x, y)).collect()
    }

    pub fn principal_downset(&self, x: usize) -> Vec<bool> {
        (0..self.len()).map(|y| self.leq(y, x)).collect()
    }

    pub fn is_upset(&self, members: &[bool]) -> bool {
        let n = self.len();
        (0..n).all(|x| !members[x] || (0..n).all(|y| !self.leq(x, y) || members[y]))
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&x| (0..n).all(|y| !self.lt(x, y))).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&x| (0..n).all(|y| !self.lt(y, x))).collect()
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between:
    /// the transitive reduction, as data.
    pub fn hasse_edges(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((self.elements()[x].clone(), self.elements()[y].clone()));
                }
            }
        }
        out
    }

    /// Indices of the closed interval `{z | x ≤ z ≤ y}`.
    pub fn interval_indices(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect()
    }

    /// The closed interval `[x, y]` as ids; empty when `x ≰ y`.
    pub fn interval(&self, x: &str, y: &str) -> Result<Vec<String>, PosetError> {
        let i = self.index_of(x)?;
        let j = self.index_of(y)?;
        Ok(self
            .interval_indices(i, j)
            .into_iter()
            .map(|z| self.elements()[z].clone())
            .collect())
    }

    fn top_index(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&t| (0..n).all(|x| self.leq(x, t)))
    }

    fn bottom_index(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&b| (0..n).all(|x| self.leq(b, x)))
    }

    pub fn bounds(&self) -> Bounds {
        Bounds {
            top: self.top_index().map(|t| self.elements()[t].clone()),
            bottom: self.bottom_index().map(|b| self.elements()[b].clone()),
        }
    }

    /// Whether the induced subposet on `members` has a greatest and a
    /// lowest element.
    pub fn is_gem(&self, members: &[usize]) -> bool {
        let has_top = members.iter().any(|&t| members.iter().all(|&x| self.leq(x, t)));
        let has_bottom = members.iter().any(|&b| members.iter().all(|&x| self.leq(b, x)));
        has_top && has_bottom
    }

    /// Induced subposet on `members` (in the given order).
    pub fn restrict(&self, members: &[usize]) -> FinitePoset {
        let elements = members.iter().map(|&i| self.elements()[i].clone()).collect();
        let rel = members
            .iter()
            .map(|&i| members.iter().map(|&j| self.leq(i, j)).collect())
            .collect();
        FinitePoset {
            inner: FinitePreorder { elements, rel },
        }
    }
}

impl fmt::Display for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset on {} elements", self.len())?;
        for (a, b) in self.hasse_edges() {
            write!(f, "\n  {a} < {b}")?;
        }
        Ok(())
    }
}

/// Closure of `pairs`; fails when the closure relates two distinct ids
/// both ways (use [`FinitePreorder::from_pairs`] for that case).
pub fn build_poset<S: AsRef<str>>(elements: Vec<String>, pairs: &[(S, S)]) -> Result<FinitePoset, PosetError> {
    FinitePoset::from_pairs(elements, pairs)
}

pub fn build_preorder<S: AsRef<str>>(elements: Vec<String>, pairs: &[(S, S)]) -> Result<FinitePreorder, PosetError> {
    FinitePreorder::from_pairs(elements, pairs)
}

/// Product order (ids `(x,y)`) or disjoint union (ids `0:x`, `1:y`).
pub fn combine(p: &FinitePoset, q: &FinitePoset, mode: CombineMode) -> FinitePoset {
    match mode {
        CombineMode::Product => {
            let (n, m) = (p.len(), q.len());
            let mut elements = Vec::with_capacity(n * m);
            for a in p.elements() {
                for b in q.elements() {
                    elements.push(format!("({a},{b})"));
                }
            }
            let rel = (0..n * m)
                .map(|u| {
                    (0..n * m)
                        .map(|v| p.leq(u / m, v / m) && q.leq(u % m, v % m))
                        .collect()
                })
                .collect();
            FinitePoset {
                inner: FinitePreorder { elements, rel },
            }
        }
        CombineMode::DisjointUnion => {
            let (n, m) = (p.len(), q.len());
            let elements = p
                .elements()
                .iter()
                .map(|a| format!("0:{a}"))
                .chain(q.elements().iter().map(|b| format!("1:{b}")))
                .collect();
            let rel = (0..n + m)
                .map(|u| {
                    (0..n + m)
                        .map(|v| match (u < n, v < n) {
                            (true, true) => p.leq(u, v),
                            (false, false) => q.leq(u - n, v - n),
                            _ => false,
                        })
                        .collect()
                })
                .collect();
            FinitePoset {
                inner: FinitePreorder { elements, rel },
            }
        }
    }
}

/// A sprinkled causal set in a 1+1 dimensional causal diamond.
#[derive(Debug, Clone)]
pub struct Sprinkling {
    pub poset: FinitePoset,
    /// `(t, x)` coordinates, aligned with the poset's elements.
    pub coords: Vec<(f64, f64)>,
}

impl Sprinkling {
    pub fn time(&self) -> Vec<f64> {
        self.coords.iter().map(|&(t, _)| t).collect()
    }
}

/// Uniform sprinkling of `n` points into the diamond `|t| + |x| ≤ 1`.
///
/// Points are drawn in light-cone coordinates `u, v ∈ [0, 1)`, so
/// `x ≺ y` iff `Δu ≥ 0 ∧ Δv ≥ 0`, which is `Δt ≥ |Δx|`. Exact coincidences
/// are broken by index so the result is always antisymmetric.
pub fn sprinkle_minkowski(n: usize, seed: u64) -> Sprinkling {
    let mut rng = seeded(seed);
    let uv: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
    let coords = uv
        .iter()
        .map(|&(u, v)| (u + v - 1.0, u - v))
        .collect();
    let elements = (0..n).map(|i| format!("e{i}")).collect();
    let rel = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (ui, vi) = uv[i];
                    let (uj, vj) = uv[j];
                    if i == j {
                        true
                    } else if ui == uj && vi == vj {
                        i < j
                    } else {
                        ui <= uj && vi <= vj
                    }
                })
                .collect()
        })
        .collect();
    Sprinkling {
        poset: FinitePoset {
            inner: FinitePreorder { elements, rel },
        },
        coords,
    }
}

/// JSON form: `{"elements": [...], "pairs": [[a, b], ...]}`, with an
/// optional full `relation` matrix on output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub pairs: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<Vec<bool>>>,
}

impl PosetJson {
    /// Closure of the declared pairs, or the declared relation when it is
    /// given without pairs.
    pub fn to_preorder(&self) -> Result<FinitePreorder, PosetError> {
        match (&self.relation, self.pairs.is_empty()) {
            (Some(rel), true) => FinitePreorder::from_relation(self.elements.clone(), rel.clone()),
            _ => FinitePreorder::from_pairs(self.elements.clone(), &self.pairs),
        }
    }

    pub fn to_poset(&self) -> Result<FinitePoset, PosetError> {
        self.to_preorder()?.into_poset()
    }
}

impl From<&FinitePreorder> for PosetJson {
    fn from(q: &FinitePreorder) -> Self {
        PosetJson {
            elements: q.elements().to_vec(),
            pairs: q.pairs(),
            relation: Some(q.relation().to_vec()),
        }
    }
}

impl From<&FinitePoset> for PosetJson {
    fn from(p: &FinitePoset) -> Self {
        PosetJson::from(p.as_preorder())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    fn diamond() -> FinitePoset {
        build_poset(
            ids(&["bot", "l", "r", "top"]),
            &[("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")],
        )
        .unwrap()
    }

    #[test]
    fn chain_closure_is_transitive() {
        let p = build_poset(ids(&["a", "b", "c"]), &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert!(p.is_total());
    }

    #[test]
    fn single_point() {
        let p = build_poset::<&str>(ids(&["x"]), &[]).unwrap();
        assert_eq!(p.relation(), &[vec![true]]);
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = build_poset(ids(&["a", "b"]), &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err.kind(), "AntisymmetryViolation");
    }

    #[test]
    fn unknown_and_duplicate_ids() {
        assert_eq!(
            build_poset(ids(&["a"]), &[("a", "z")]).unwrap_err(),
            PosetError::UnknownId("z".into())
        );
        assert_eq!(
            build_poset::<&str>(ids(&["a", "a"]), &[]).unwrap_err(),
            PosetError::DuplicateId("a".into())
        );
    }

    #[test]
    fn reduce_collapses_mutual_pair() {
        let q = build_preorder(ids(&["x", "y", "z"]), &[("x", "y"), ("y", "x"), ("y", "z")]).unwrap();
        let red = reduce_preorder(&q);
        assert_eq!(red.poset.elements(), &ids(&["x|y", "z"]));
        assert_eq!(red.projection, vec![0, 0, 1]);
        assert!(red.poset.lt(0, 1));
        assert_eq!(red.class_of(&q, "y").unwrap(), "x|y");
    }

    #[test]
    fn reduce_of_poset_is_identity() {
        let p = diamond();
        let red = reduce_preorder(p.as_preorder());
        assert_eq!(red.poset, p);
        assert_eq!(red.projection, vec![0, 1, 2, 3]);
    }

    #[test]
    fn reduce_complete_preorder_to_point() {
        let q = build_preorder(ids(&["a", "b", "c"]), &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let red = reduce_preorder(&q);
        assert_eq!(red.poset.len(), 1);
        assert_eq!(red.projection, vec![0, 0, 0]);
    }

    #[test]
    fn product_of_two_chains_is_diamond() {
        let c2 = FinitePoset::chain(["0", "1"]);
        let p = combine(&c2, &c2, CombineMode::Product);
        let i = |s: &str| p.index_of(s).unwrap();
        assert!(p.lt(i("(0,0)"), i("(0,1)")));
        assert!(p.lt(i("(0,0)"), i("(1,0)")));
        assert!(p.lt(i("(0,1)"), i("(1,1)")));
        assert!(p.incomparable(i("(0,1)"), i("(1,0)")));
        assert!(p.bounds().is_bounded());
    }

    #[test]
    fn disjoint_union_of_two_chains() {
        let c2 = FinitePoset::chain(["0", "1"]);
        let p = combine(&c2, &c2, CombineMode::DisjointUnion);
        assert_eq!(p.len(), 4);
        assert_eq!(p.pairs().len(), 2);
        assert!(p.incomparable(0, 2) && p.incomparable(0, 3) && p.incomparable(1, 2));
        assert!(!p.bounds().is_bounded());
    }

    #[test]
    fn product_with_point_is_relabelling() {
        let p = diamond();
        let pt = FinitePoset::chain(["*"]);
        let prod = combine(&p, &pt, CombineMode::Product);
        assert_eq!(prod.relation(), p.relation());
    }

    #[test]
    fn intervals() {
        let d = diamond();
        assert_eq!(d.interval("bot", "top").unwrap().len(), 4);
        let c = FinitePoset::chain(["a", "b", "c"]);
        assert_eq!(c.interval("a", "c").unwrap(), ids(&["a", "b", "c"]));
        assert!(c.interval("c", "a").unwrap().is_empty());
        assert_eq!(c.interval("a", "q").unwrap_err().kind(), "UnknownId");
    }

    #[test]
    fn bounds_examples() {
        let c = FinitePoset::chain(["a", "b", "c"]);
        assert_eq!(c.bounds(), Bounds { top: Some("c".into()), bottom: Some("a".into()) });
        let v = build_poset(ids(&["a", "b", "c"]), &[("a", "c"), ("b", "c")]).unwrap();
        assert_eq!(v.bounds(), Bounds { top: Some("c".into()), bottom: None });
        let ac = FinitePoset::antichain(["a", "b"]);
        assert_eq!(ac.bounds(), Bounds::default());
    }

    #[test]
    fn hasse_of_chain() {
        let c = FinitePoset::chain(["a", "b", "c"]);
        assert_eq!(
            c.hasse_edges(),
            vec![("a".into(), "b".into()), ("b".into(), "c".into())]
        );
    }

    #[test]
    fn sprinkle_small_cases() {
        assert!(sprinkle_minkowski(0, 3).poset.is_empty());
        assert_eq!(sprinkle_minkowski(1, 3).poset.len(), 1);
    }

    #[test]
    fn sprinkle_is_a_poset_with_isotone_time() {
        let s = sprinkle_minkowski(50, 42);
        let p = s.poset.clone();
        // Re-validates reflexivity, transitivity and antisymmetry.
        FinitePoset::from_relation(p.elements().to_vec(), p.relation().to_vec()).unwrap();
        let t = s.time();
        for i in 0..50 {
            for j in 0..50 {
                if p.leq(i, j) {
                    assert!(t[i] <= t[j]);
                    let (ti, xi) = s.coords[i];
                    let (tj, xj) = s.coords[j];
                    assert!(tj - ti >= (xj - xi).abs() - 1e-12);
                }
            }
        }
        assert_eq!(sprinkle_minkowski(50, 42).poset, p);
    }

    #[test]
    fn json_roundtrip() {
        let d = diamond();
        let js = serde_json::to_string(&PosetJson::from(&d)).unwrap();
        let back: PosetJson = serde_json::from_str(&js).unwrap();
        assert_eq!(back.to_poset().unwrap(), d);
    }
}
