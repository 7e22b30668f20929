//! Lattice-cone expressions over a generator family and the constructive
//! Stone–Nachbin interpolation.

use serde::{Deserialize, Serialize};

use super::{order_from_functions, require_isotone, ConeError, RealFunction};
use crate::poset::FinitePoset;

/// An expression built from generators and constants with `+`,
/// nonnegative scaling, pointwise max (`join`) and min (`meet`).
///
/// Serialized as nested tagged objects: `{"gen":0}`, `{"const":3.0}`,
/// `{"op":"sum","args":[...]}`, `{"op":"scale","factor":2.0,"args":[e]}`,
/// `{"op":"join","args":[...]}`, `{"op":"meet","args":[...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "Repr", try_from = "Repr")]
pub enum LatticeExpr {
    Generator(usize),
    Constant(f64),
    Sum(Vec<LatticeExpr>),
    Scale(f64, Box<LatticeExpr>),
    Join(Vec<LatticeExpr>),
    Meet(Vec<LatticeExpr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OpName {
    Sum,
    Scale,
    Join,
    Meet,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Gen {
        gen: usize,
    },
    Const {
        #[serde(rename = "const")]
        value: f64,
    },
    Node {
        op: OpName,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        factor: Option<f64>,
        args: Vec<LatticeExpr>,
    },
}

impl From<LatticeExpr> for Repr {
    fn from(e: LatticeExpr) -> Self {
        match e {
            LatticeExpr::Generator(gen) => Repr::Gen { gen },
            LatticeExpr::Constant(value) => Repr::Const { value },
            LatticeExpr::Sum(args) => Repr::Node { op: OpName::Sum, factor: None, args },
            LatticeExpr::Scale(k, child) => Repr::Node {
                op: OpName::Scale,
                factor: Some(k),
                args: vec![*child],
            },
            LatticeExpr::Join(args) => Repr::Node { op: OpName::Join, factor: None, args },
            LatticeExpr::Meet(args) => Repr::Node { op: OpName::Meet, factor: None, args },
        }
    }
}

impl TryFrom<Repr> for LatticeExpr {
    type Error = String;

    fn try_from(r: Repr) -> Result<Self, String> {
        Ok(match r {
            Repr::Gen { gen } => LatticeExpr::Generator(gen),
            Repr::Const { value } => LatticeExpr::Constant(value),
            Repr::Node { op: OpName::Scale, factor, mut args } => {
                let k = factor.ok_or("scale node needs a `factor`")?;
                if !(k >= 0.0) {
                    return Err(format!("negative scale factor {k}"));
                }
                if args.len() != 1 {
                    return Err("scale node takes exactly one argument".into());
                }
                LatticeExpr::Scale(k, Box::new(args.remove(0)))
            }
            Repr::Node { op: OpName::Sum, args, .. } => LatticeExpr::Sum(args),
            Repr::Node { op: OpName::Join, args, .. } => LatticeExpr::Join(args),
            Repr::Node { op: OpName::Meet, args, .. } => LatticeExpr::Meet(args),
        })
    }
}

impl LatticeExpr {
    /// `λ·gen + μ`, the two-point interpolant shape.
    pub fn affine(gen: usize, lambda: f64, mu: f64) -> Self {
        LatticeExpr::Sum(vec![
            LatticeExpr::Scale(lambda, Box::new(LatticeExpr::Generator(gen))),
            LatticeExpr::Constant(mu),
        ])
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            LatticeExpr::Generator(_) | LatticeExpr::Constant(_) => 1,
            LatticeExpr::Scale(_, c) => c.size(),
            LatticeExpr::Sum(a) | LatticeExpr::Join(a) | LatticeExpr::Meet(a) => {
                a.iter().map(LatticeExpr::size).sum()
            }
        }
    }
}

/// Evaluates `expr` against generators `s` on `n` points.
pub fn eval_expr(expr: &LatticeExpr, s: &[RealFunction], n: usize) -> Result<RealFunction, ConeError> {
    for g in s {
        if g.len() != n {
            return Err(ConeError::DimensionMismatch { expected: n, got: g.len() });
        }
    }
    eval_inner(expr, s, n)
}

fn eval_inner(expr: &LatticeExpr, s: &[RealFunction], n: usize) -> Result<RealFunction, ConeError> {
    match expr {
        LatticeExpr::Generator(i) => s
            .get(*i)
            .cloned()
            .ok_or(ConeError::IndexOutOfRange { index: *i, len: s.len() }),
        LatticeExpr::Constant(c) => Ok(RealFunction::constant(n, *c)),
        LatticeExpr::Scale(k, child) => {
            if *k < 0.0 {
                return Err(ConeError::NegativeScale(*k));
            }
            Ok(eval_inner(child, s, n)?.scale(*k))
        }
        LatticeExpr::Sum(args) => args.iter().try_fold(RealFunction::constant(n, 0.0), |acc, a| {
            Ok(acc.add(&eval_inner(a, s, n)?))
        }),
        LatticeExpr::Join(args) | LatticeExpr::Meet(args) => {
            let is_join = matches!(expr, LatticeExpr::Join(_));
            let mut it = args.iter();
            let first = it.next().ok_or(ConeError::EmptyLattice)?;
            it.try_fold(eval_inner(first, s, n)?, |acc, a| {
                let v = eval_inner(a, s, n)?;
                Ok(if is_join { acc.max(&v) } else { acc.min(&v) })
            })
        }
    }
}

/// Writes an isotone target `f` as `⋁_x ⋀_y f_{x,y}` over generators `s`.
///
/// `f_{x,y}` agrees with `f` at `x` and `y`: a constant when
/// `f(x) = f(y)`, otherwise `λ·j + μ` with
/// `λ = (f(y) − f(x)) / (j(y) − j(x))` and `μ = f(x) − λ·j(x)`, where `j`
/// is the generator with the widest gap `j(y) − j(x)` of the same sign as
/// `f(y) − f(x)`. Such a `j` exists because `s` determines the order.
/// Then `⋀_y f_{x,y}` meets `f` at `x` and stays below it elsewhere, so the
/// outer join is exactly `f`. The tree is emitted unsimplified; see
/// [`prune`].
pub fn stone_nachbin_express(
    p: &FinitePoset,
    s: &[RealFunction],
    target: &RealFunction,
) -> Result<LatticeExpr, ConeError> {
    let n = p.len();
    let induced = order_from_functions(p.elements().to_vec(), s)?;
    for i in 0..n {
        for j in 0..n {
            if induced.preorder.leq(i, j) != p.leq(i, j) {
                return Err(ConeError::OrderNotDetermined(
                    p.elements()[i].clone(),
                    p.elements()[j].clone(),
                ));
            }
        }
    }
    require_isotone(p, target)?;
    let fv = &target.values;

    let interpolant = |x: usize, y: usize| -> LatticeExpr {
        let (fx, fy) = (fv[x], fv[y]);
        if fx == fy {
            return LatticeExpr::Constant(fx);
        }
        let rising = fy > fx;
        let best = s
            .iter()
            .enumerate()
            .map(|(k, j)| (k, j.values[y] - j.values[x]))
            .filter(|&(_, gap)| if rising { gap > 0.0 } else { gap < 0.0 })
            .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap());
        let (k, gap) = best.expect("order determined by generators");
        let lambda = (fy - fx) / gap;
        let mu = fx - lambda * s[k].values[x];
        LatticeExpr::affine(k, lambda, mu)
    };

    let joins = (0..n)
        .map(|x| LatticeExpr::Meet((0..n).map(|y| interpolant(x, y)).collect()))
        .collect();
    Ok(LatticeExpr::Join(joins))
}

/// Simplifies `expr` without changing its value on `s`.
///
/// Drops join (meet) arguments dominated pointwise from above (below) by
/// a kept argument, folds constant-only nodes, removes zero constants
/// from sums and unit scalings, and unwraps single-argument nodes. Every
/// rewrite is exact in floating point: `max`, `min`, `x + 0` and `1·x`
/// introduce no rounding.
pub fn prune(expr: &LatticeExpr, s: &[RealFunction], n: usize) -> Result<LatticeExpr, ConeError> {
    Ok(match expr {
        LatticeExpr::Generator(_) | LatticeExpr::Constant(_) => {
            eval_expr(expr, s, n)?;
            expr.clone()
        }
        LatticeExpr::Scale(k, child) => {
            let c = prune(child, s, n)?;
            match c {
                _ if *k == 1.0 => c,
                LatticeExpr::Constant(v) => LatticeExpr::Constant(k * v),
                c => LatticeExpr::Scale(*k, Box::new(c)),
            }
        }
        LatticeExpr::Sum(args) => {
            let mut kept: Vec<LatticeExpr> = Vec::new();
            for a in args {
                match prune(a, s, n)? {
                    LatticeExpr::Constant(v) if v == 0.0 => {}
                    other => kept.push(other),
                }
            }
            match kept.len() {
                0 => LatticeExpr::Constant(0.0),
                1 => kept.pop().unwrap(),
                _ => LatticeExpr::Sum(kept),
            }
        }
        LatticeExpr::Join(args) | LatticeExpr::Meet(args) => {
            let is_join = matches!(expr, LatticeExpr::Join(_));
            // `a` is dominated by `b` if b ≥ a (join) or b ≤ a (meet) everywhere.
            let dominated = |a: &RealFunction, b: &RealFunction| {
                a.values
                    .iter()
                    .zip(&b.values)
                    .all(|(x, y)| if is_join { y >= x } else { y <= x })
            };
            let mut kept: Vec<(LatticeExpr, RealFunction)> = Vec::new();
            for a in args {
                let pa = prune(a, s, n)?;
                let va = eval_expr(&pa, s, n)?;
                if kept.iter().any(|(_, vk)| dominated(&va, vk)) {
                    continue;
                }
                kept.retain(|(_, vk)| !dominated(vk, &va));
                kept.push((pa, va));
            }
            match kept.len() {
                0 => return Err(ConeError::EmptyLattice),
                1 => kept.pop().unwrap().0,
                _ => {
                    let items: Vec<LatticeExpr> = kept.into_iter().map(|(e, _)| e).collect();
                    if is_join {
                        LatticeExpr::Join(items)
                    } else {
                        LatticeExpr::Meet(items)
                    }
                }
            }
        }
    })
}
