//! Finite commutative I*-algebras and the poset they come from.
//!
//! The diagonal algebra `ℂᴾ` of a finite poset carries the cone of
//! isotone functions. Its characters are the evaluations `ev_x`, ordered by
//! `ev_x ≤ ev_y ⇔ f(x) ≤ f(y)` for every `f` in the cone, and this order
//! gives `P` back.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::isotone_cone::{enumerate_upsets, is_isotone, order_from_functions, spans_everything, IsotoneCone, RealFunction};
use crate::poset::{FinitePoset, FinitePreorder, PosetError};

/// Up-set families larger than this fall back to principal up-sets.
const UPSET_LIMIT: usize = 1 << 14;

/// The diagonal algebra over `P` with the cone `I(P)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteCommutativeIStar {
    cone: IsotoneCone,
}

impl FiniteCommutativeIStar {
    pub fn cone(&self) -> &IsotoneCone {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.poset().len()
    }

    /// Characters, named by the element they evaluate at.
    pub fn characters(&self) -> &[String] {
        self.cone.poset().elements()
    }

    /// Gelfand transform of a diagonal element: its values on characters.
    pub fn gelfand(&self, f: &RealFunction) -> BTreeMap<String, f64> {
        self.characters().iter().cloned().zip(f.values.iter().copied()).collect()
    }

    /// Generators of the cone: up-set indicators (or principal up-set
    /// indicators for very wide posets) and the constant `1`.
    pub fn generators(&self) -> Vec<RealFunction> {
        let p = self.cone.poset();
        let n = p.len();
        let mut gens: Vec<RealFunction> = match enumerate_upsets(p, UPSET_LIMIT) {
            Some(ups) => ups.iter().map(|u| RealFunction::indicator(u)).collect(),
            None => (0..n).map(|x| RealFunction::indicator(&p.principal_upset(x))).collect(),
        };
        gens.push(RealFunction::constant(n, 1.0));
        gens
    }

    /// The generators span the whole algebra, so the cone is an isocone.
    pub fn spans(&self) -> bool {
        spans_everything(self.dim(), &self.generators())
    }
}

pub fn algebra_from_poset(p: &FinitePoset) -> FiniteCommutativeIStar {
    FiniteCommutativeIStar { cone: IsotoneCone::new(p.clone()) }
}

/// The order on characters induced by the cone generators.
pub fn character_order(a: &FiniteCommutativeIStar) -> FinitePoset {
    order_from_functions(a.characters().to_vec(), &a.generators())
        .expect("generators have the algebra's dimension")
        .into_poset()
        .expect("up-set indicators separate points")
}

/// A map between element sets, `{"map": {"n1": "m1", ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub map: BTreeMap<String, String>,
}

/// `g : N → M` as an index table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetMap {
    pub image: Vec<usize>,
}

impl PosetMap {
    /// Resolves ids; every element of `n` must be mapped into `m`.
    pub fn from_ids(n: &FinitePoset, m: &FinitePoset, map: &BTreeMap<String, String>) -> Result<Self, PosetError> {
        if let Some(extra) = map.keys().find(|k| n.index_of(k).is_err()) {
            return Err(PosetError::UnknownId(extra.clone()));
        }
        let image = n
            .elements()
            .iter()
            .map(|x| {
                let target = map.get(x).ok_or_else(|| PosetError::UnknownId(x.clone()))?;
                m.index_of(target)
            })
            .collect::<Result<_, _>>()?;
        Ok(PosetMap { image })
    }

    pub fn identity(n: usize) -> Self {
        PosetMap { image: (0..n).collect() }
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &PosetMap) -> PosetMap {
        PosetMap { image: inner.image.iter().map(|&i| self.image[i]).collect() }
    }

    /// `g*f = f ∘ g`.
    pub fn pullback(&self, f: &RealFunction) -> RealFunction {
        RealFunction { values: self.image.iter().map(|&i| f.values[i]).collect() }
    }

    pub fn is_isotone(&self, n: &FinitePoset, m: &FinitePoset) -> bool {
        let k = n.len();
        (0..k).all(|x| (0..k).all(|y| !n.leq(x, y) || m.leq(self.image[x], self.image[y])))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    /// Composition with a map is always a unital `*`-morphism.
    pub star_morphism: bool,
    pub isotone: bool,
    pub pullback_preserves_cone: bool,
}

/// Reports whether `g : N → M` is isotone and, separately, whether `g*`
/// maps every generator of `I(M)` into `I(N)` (enough, as `g*` is linear
/// and positive).
pub fn morphism_check(n: &FinitePoset, m: &FinitePoset, g: &PosetMap) -> MorphismReport {
    let target = algebra_from_poset(m);
    let preserves = target
        .generators()
        .iter()
        .all(|f| is_isotone(n, &g.pullback(f)).expect("pullback has the source dimension"));
    MorphismReport { star_morphism: true, isotone: g.is_isotone(n, m), pullback_preserves_cone: preserves }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualityCheck {
    pub cobounded: bool,
    pub bounded: bool,
    pub agree: bool,
}

/// Compares norm additivity of the cone against `P` having both a top and
/// a bottom.
pub fn cobounded_duality_check(p: &FinitePoset) -> DualityCheck {
    let cobounded = crate::isotone_cone::cobounded_commutative(p).cobounded;
    let bounded = p.bounds().is_bounded();
    DualityCheck { cobounded, bounded, agree: cobounded == bounded }
}

/// The order that the cone induces on the joint spectrum of commuting
/// diagonal elements `f₁, …, f_p`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointSpectrum {
    /// Distinct value tuples `(f₁(x), …, f_p(x))`, sorted.
    pub points: Vec<Vec<f64>>,
    /// `s ⪯ t` iff every cone member that is a function of the `fᵢ` is
    /// no larger at `s` than at `t`.
    pub order: FinitePreorder,
}

impl JointSpectrum {
    /// Whether `⪯` is contained in the product order of `ℝᵖ`.
    pub fn within_product_order(&self) -> bool {
        let k = self.points.len();
        (0..k).all(|s| {
            (0..k).all(|t| {
                !self.order.leq(s, t) || self.points[s].iter().zip(&self.points[t]).all(|(a, b)| a <= b)
            })
        })
    }
}

/// Functions `g` of the joint values with `g ∘ F` isotone are exactly those
/// isotone for the transitive closure of `F(x) → F(y)` over `x ≤ y`.
pub fn joint_spectrum_order(p: &FinitePoset, fs: &[RealFunction]) -> JointSpectrum {
    let n = p.len();
    let tuple = |x: usize| fs.iter().map(|f| f.values[x]).collect::<Vec<f64>>();
    let mut points: Vec<Vec<f64>> = (0..n).map(tuple).collect();
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    points.dedup();
    let k = points.len();
    let at = |x: usize| points.iter().position(|t| *t == tuple(x)).unwrap();
    let mut rel = vec![vec![false; k]; k];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, y) {
                rel[at(x)][at(y)] = true;
            }
        }
    }
    let ids = (0..k).map(|i| format!("s{i}")).collect();
    let order = FinitePreorder::closure_of(ids, rel).expect("square relation");
    JointSpectrum { points, order }
}
