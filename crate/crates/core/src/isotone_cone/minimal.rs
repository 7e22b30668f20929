use serde::Serialize;

use super::{is_isotone, RealFunction};
use crate::poset::FinitePoset;

/// Certificate that `I(P)` is not a minimal isocone: for an incomparable
/// pair `(x, y)`, the cone `J = {f ∈ I(P) | f(x) ≤ f(y)}` is a strictly
/// smaller isocone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalityWitness {
    pub x: String,
    pub y: String,
    #[serde(skip)]
    x_index: usize,
    #[serde(skip)]
    y_index: usize,
    /// Member of `J` with `g(x) < g(y)`.
    pub g: RealFunction,
    /// Member of `I(P)` outside `J`.
    pub g_prime: RealFunction,
}

impl MinimalityWitness {
    pub fn in_j(&self, f: &RealFunction) -> bool {
        f.values[self.x_index] <= f.values[self.y_index]
    }

    /// A member `h` of `J` with `h(a) ≠ h(b)`, for `a ≠ b`.
    ///
    /// Start from a step function `f` separating `a` and `b`. If it is
    /// already in `J`, or `g` separates the pair, use that. Otherwise
    /// reflect `f` across `ker(ev_x − ev_y)` along `g`:
    /// `h = f − 2·[(f(x) − f(y)) / (g(x) − g(y))]·g`. The coefficient on
    /// `g` is positive, so `h` stays isotone, `h(x) − h(y) = −(f(x) − f(y))`
    /// puts it in `J`, and `g(a) = g(b)` keeps `h(a) − h(b) = f(a) − f(b)`.
    pub fn separating(&self, p: &FinitePoset, a: usize, b: usize) -> RealFunction {
        assert_ne!(a, b, "separating needs distinct points");
        let step = |z: usize| RealFunction::indicator(&p.principal_upset(z));
        let f = if !p.leq(a, b) { step(a) } else { step(b) };
        if self.in_j(&f) {
            return f;
        }
        if self.g.values[a] != self.g.values[b] {
            return self.g.clone();
        }
        let (x, y) = (self.x_index, self.y_index);
        let coeff = -2.0 * (f.values[x] - f.values[y]) / (self.g.values[x] - self.g.values[y]);
        f.add(&self.g.scale(coeff))
    }

    /// Checks every claim of the certificate on `p`: `x ∼ y`, `g ∈ J` with
    /// `g(x) < g(y)`, `g' ∈ I(P) \ J`, and `J` separates all points through
    /// [`separating`](Self::separating) (so its span is everything and it
    /// is an isocone).
    pub fn verify(&self, p: &FinitePoset) -> bool {
        let (x, y) = (self.x_index, self.y_index);
        if !p.incomparable(x, y) {
            return false;
        }
        let iso = |f: &RealFunction| is_isotone(p, f).unwrap_or(false);
        if !(iso(&self.g) && self.g.values[x] < self.g.values[y]) {
            return false;
        }
        if !(iso(&self.g_prime) && !self.in_j(&self.g_prime)) {
            return false;
        }
        let n = p.len();
        (0..n).all(|a| {
            (0..n).filter(|&b| b != a).all(|b| {
                let h = self.separating(p, a, b);
                iso(&h) && self.in_j(&h) && h.values[a] != h.values[b]
            })
        })
    }
}

/// `None` for total orders (whose isotone cone is minimal); otherwise a
/// certificate built on the first incomparable pair.
///
/// With `x ∼ y`, the step function `H_y` (indicator of `↑y`) has
/// `H_y(x) = 0 < 1 = H_y(y)`, and `H_x` has the opposite inequality.
pub fn minimal_witness(p: &FinitePoset) -> Option<MinimalityWitness> {
    let (x, y) = p.first_incomparable_pair()?;
    Some(MinimalityWitness {
        x: p.elements()[x].clone(),
        y: p.elements()[y].clone(),
        x_index: x,
        y_index: y,
        g: RealFunction::indicator(&p.principal_upset(y)),
        g_prime: RealFunction::indicator(&p.principal_upset(x)),
    })
}
