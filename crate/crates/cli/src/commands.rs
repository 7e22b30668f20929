use std::collections::BTreeMap;

use clap::{Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use isocone::acceptance;
use isocone::duality::{
    algebra_from_poset, character_order, cobounded_duality_check, morphism_check, MapJson, PosetMap,
};
use isocone::fixtures::random_unit_vector;
use isocone::gps::{gps_complete, gps_order, GpsJson, Orientation};
use isocone::hermitian::{self, HermitianMatrix, MatrixJson};
use isocone::isotone_cone::{
    cobounded_commutative, eval_expr, generated_cone_contains, is_isotone_tol, minimal_witness,
    order_from_functions_tol, prune, stone_nachbin_express, upset_decomposition, LatticeExpr, RealFunction,
    ISOTONE_TOL,
};
use isocone::m2::{self, RegionSpec, Rotation, SphericalRegion, StateJson, Vec3};
use isocone::poset::{combine, reduce_preorder, sprinkle_minkowski, CombineMode, PosetError, PosetJson};
use isocone::rng::seeded;
use isocone::FinitePreorder;

use crate::io::{load, CliError, CliResult};
use crate::{Ctx, Format};

const JSON: &[Format] = &[Format::Json];
const JSON_CSV: &[Format] = &[Format::Json, Format::Csv];

fn emit<T: Serialize>(ctx: &Ctx, value: &T) -> CliResult<()> {
    ctx.require(JSON)?;
    ctx.sink.write_json(value)
}

/// Emits the strict pairs of a preorder as `x,y` rows.
fn pairs_csv(ctx: &Ctx, q: &FinitePreorder) -> CliResult<()> {
    let mut rows: Vec<Vec<String>> = q.pairs().into_iter().map(|(x, y)| vec![x, y]).collect();
    rows.sort();
    ctx.sink.write_csv(&["x", "y"], rows)
}

fn region(arg: &str) -> CliResult<SphericalRegion> {
    let spec: RegionSpec = load(arg)?;
    Ok(SphericalRegion::try_from(spec)?)
}

fn matrix(arg: &str) -> CliResult<HermitianMatrix> {
    Ok(load::<MatrixJson>(arg)?.to_hermitian()?)
}

#[derive(Subcommand)]
pub enum PosetCmd {
    /// Validate a poset and report whether it has a top and a bottom.
    Check {
        #[arg(long = "in")]
        input: String,
    },
    /// Collapse the mutually related classes of a preorder.
    Reduce {
        #[arg(long = "in")]
        input: String,
    },
    /// Product or disjoint union of two posets.
    Combine {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Elements between two ids.
    Interval {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Top and bottom elements, if any.
    Bounds {
        #[arg(long = "in")]
        input: String,
    },
    /// Causal set sprinkled into a 1+1 dimensional causal diamond.
    Sprinkle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Mode {
    Product,
    DisjointUnion,
}

pub fn poset(ctx: &Ctx, cmd: PosetCmd) -> CliResult<()> {
    match cmd {
        PosetCmd::Check { input } => {
            let pj: PosetJson = load(&input)?;
            match pj.to_poset() {
                Ok(p) => emit(ctx, &json!({ "valid": true, "bounded": p.bounds().is_bounded() })),
                Err(
                    e @ (PosetError::AntisymmetryViolation(..)
                    | PosetError::NotReflexive(_)
                    | PosetError::NotTransitive(..)),
                ) => emit(ctx, &json!({ "valid": false, "kind": e.kind(), "detail": e.to_string() })),
                Err(e) => Err(e.into()),
            }
        }
        PosetCmd::Reduce { input } => {
            let q = load::<PosetJson>(&input)?.to_preorder()?;
            let red = reduce_preorder(&q);
            let projection: BTreeMap<&str, &str> = q
                .elements()
                .iter()
                .zip(&red.projection)
                .map(|(id, &c)| (id.as_str(), red.poset.elements()[c].as_str()))
                .collect();
            emit(ctx, &json!({ "poset": PosetJson::from(&red.poset), "projection": projection }))
        }
        PosetCmd::Combine { left, right, mode } => {
            let p = load::<PosetJson>(&left)?.to_poset()?;
            let q = load::<PosetJson>(&right)?.to_poset()?;
            let mode = match mode {
                Mode::Product => CombineMode::Product,
                Mode::DisjointUnion => CombineMode::DisjointUnion,
            };
            emit(ctx, &PosetJson::from(&combine(&p, &q, mode)))
        }
        PosetCmd::Interval { input, x, y } => {
            let p = load::<PosetJson>(&input)?.to_poset()?;
            emit(ctx, &json!({ "interval": p.interval(&x, &y)? }))
        }
        PosetCmd::Bounds { input } => {
            let p = load::<PosetJson>(&input)?.to_poset()?;
            emit(ctx, &p.bounds())
        }
        PosetCmd::Sprinkle { n, seed } => {
            ctx.require(JSON_CSV)?;
            let s = sprinkle_minkowski(n, seed);
            if ctx.format == Format::Csv {
                return pairs_csv(ctx, s.poset.as_preorder());
            }
            emit(ctx, &json!({ "poset": PosetJson::from(&s.poset), "coords": s.coords, "seed": seed }))
        }
    }
}

#[derive(Subcommand)]
pub enum ConeCmd {
    /// Whether a function is isotone.
    Isotone {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        f: String,
    },
    /// The preorder induced by a family of functions.
    OrderFrom {
        /// JSON list of element ids.
        #[arg(long)]
        elements: String,
        /// JSON list of functions.
        #[arg(long)]
        functions: String,
    },
    /// Express an isotone function through a determining family.
    Express {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        f: String,
        /// Emit the unsimplified expression tree.
        #[arg(long)]
        raw: bool,
    },
    /// Evaluate a lattice expression.
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value = "[]")]
        gens: String,
        /// Domain size; needed only without generators.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Write a nonnegative isotone function as a positive sum of up-set indicators.
    Decompose {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        f: String,
    },
    /// Membership in the cone generated by a separating family.
    Contains {
        #[arg(long)]
        elements: String,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        f: String,
    },
    /// Whether the isotone cone is minimal, with a certificate if not.
    Minimal {
        #[arg(long)]
        poset: String,
    },
    /// Norm additivity of the positive isotone cone.
    Cobounded {
        #[arg(long)]
        poset: String,
    },
}

pub fn cone(ctx: &Ctx, cmd: ConeCmd) -> CliResult<()> {
    match cmd {
        ConeCmd::Isotone { poset, f } => {
            let q = load::<PosetJson>(&poset)?.to_preorder()?;
            let f: RealFunction = load(&f)?;
            let ok = is_isotone_tol(&q, &f, ctx.tol.unwrap_or(ISOTONE_TOL))?;
            emit(ctx, &json!({ "isotone": ok }))
        }
        ConeCmd::OrderFrom { elements, functions } => {
            ctx.require(JSON_CSV)?;
            let elements: Vec<String> = load(&elements)?;
            let fs: Vec<RealFunction> = load(&functions)?;
            let induced = order_from_functions_tol(elements, &fs, ctx.tol.unwrap_or(0.0))?;
            if ctx.format == Format::Csv {
                return pairs_csv(ctx, &induced.preorder);
            }
            emit(ctx, &json!({ "order": PosetJson::from(&induced.preorder), "separates": induced.separates }))
        }
        ConeCmd::Express { poset, gens, f, raw } => {
            let p = load::<PosetJson>(&poset)?.to_poset()?;
            let s: Vec<RealFunction> = load(&gens)?;
            let f: RealFunction = load(&f)?;
            let mut expr = stone_nachbin_express(&p, &s, &f)?;
            if !raw {
                expr = prune(&expr, &s, p.len())?;
            }
            emit(ctx, &json!({ "expr": expr, "size": expr.size() }))
        }
        ConeCmd::Eval { expr, gens, n } => {
            let e: LatticeExpr = load(&expr)?;
            let s: Vec<RealFunction> = load(&gens)?;
            let n = match (n, s.first()) {
                (Some(n), _) => n,
                (None, Some(g)) => g.len(),
                (None, None) => return Err(CliError::new("Usage", "--n is required without --gens")),
            };
            emit(ctx, &eval_expr(&e, &s, n)?)
        }
        ConeCmd::Decompose { poset, f } => {
            let p = load::<PosetJson>(&poset)?.to_poset()?;
            let f: RealFunction = load(&f)?;
            emit(ctx, &json!({ "terms": upset_decomposition(&p, &f)? }))
        }
        ConeCmd::Contains { elements, gens, f } => {
            let elements: Vec<String> = load(&elements)?;
            let s: Vec<RealFunction> = load(&gens)?;
            let f: RealFunction = load(&f)?;
            emit(ctx, &json!({ "contains": generated_cone_contains(elements, &s, &f)? }))
        }
        ConeCmd::Minimal { poset } => {
            let p = load::<PosetJson>(&poset)?.to_poset()?;
            let w = minimal_witness(&p);
            emit(ctx, &json!({ "minimal": w.is_none(), "witness": w }))
        }
        ConeCmd::Cobounded { poset } => {
            let p = load::<PosetJson>(&poset)?.to_poset()?;
            emit(ctx, &cobounded_commutative(&p))
        }
    }
}

#[derive(Subcommand)]
pub enum HermCmd {
    /// Eigenvalues, eigenvectors and spectral projectors.
    Spectral {
        #[arg(long)]
        a: String,
    },
    /// Functional calculus: abs, sqrt, exp, log, inv, square, pos, neg, step:T, pow:P.
    Fn {
        #[arg(long)]
        a: String,
        #[arg(long = "f")]
        func: String,
    },
    /// `a ∨ b` and `a ∧ b`.
    Lattice {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Operator norm and positivity.
    Classify {
        #[arg(long)]
        a: String,
    },
}

fn scalar_function(spec: &str) -> CliResult<Box<dyn Fn(f64) -> Option<f64>>> {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => {
            let v: f64 = a.parse().map_err(|_| CliError::new("Usage", format!("bad parameter in `{spec}`")))?;
            (n, Some(v))
        }
        None => (spec, None),
    };
    let f: Box<dyn Fn(f64) -> Option<f64>> = match (name, arg) {
        ("abs", None) => Box::new(|x| Some(x.abs())),
        ("sqrt", None) => Box::new(|x| (x >= 0.0).then(|| x.sqrt())),
        ("exp", None) => Box::new(|x| Some(x.exp())),
        ("log", None) => Box::new(|x| (x > 0.0).then(|| x.ln())),
        ("inv", None) => Box::new(|x| (x != 0.0).then(|| 1.0 / x)),
        ("square", None) => Box::new(|x| Some(x * x)),
        ("pos", None) => Box::new(|x| Some(x.max(0.0))),
        ("neg", None) => Box::new(|x| Some((-x).max(0.0))),
        ("step", Some(t)) => Box::new(move |x| Some(if x >= t { 1.0 } else { 0.0 })),
        ("pow", Some(p)) => Box::new(move |x| {
            let y = x.powf(p);
            y.is_finite().then_some(y)
        }),
        _ => return Err(CliError::new("Usage", format!("unknown function `{spec}`"))),
    };
    Ok(f)
}

pub fn herm(ctx: &Ctx, cmd: HermCmd) -> CliResult<()> {
    match cmd {
        HermCmd::Spectral { a } => {
            let a = matrix(&a)?;
            let d = hermitian::spectral(&a);
            let vectors: Vec<Vec<[f64; 2]>> =
                d.eigenvectors.iter().map(|v| v.iter().map(|z| [z.re, z.im]).collect()).collect();
            let projectors: Vec<_> = d
                .projectors()
                .iter()
                .map(|p| {
                    json!({
                        "eigenvalue": p.eigenvalue,
                        "multiplicity": p.multiplicity,
                        "projector": MatrixJson::from(&p.projector),
                    })
                })
                .collect();
            emit(ctx, &json!({ "eigenvalues": d.eigenvalues, "eigenvectors": vectors, "projectors": projectors }))
        }
        HermCmd::Fn { a, func } => {
            let a = matrix(&a)?;
            let f = scalar_function(&func)?;
            emit(ctx, &MatrixJson::from(&hermitian::func_calc(&a, f)?))
        }
        HermCmd::Lattice { a, b } => {
            let (j, m) = hermitian::lattice_ops(&matrix(&a)?, &matrix(&b)?)?;
            emit(ctx, &json!({ "join": MatrixJson::from(&j), "meet": MatrixJson::from(&m) }))
        }
        HermCmd::Classify { a } => {
            let a = matrix(&a)?;
            let c = match ctx.tol {
                Some(t) => hermitian::classify_tol(&a, t),
                None => hermitian::classify(&a),
            };
            emit(ctx, &c)
        }
    }
}

#[derive(Subcommand)]
pub enum M2Cmd {
    /// Bloch vector of a unit spinor, or a spinor for a Bloch vector.
    Hopf {
        /// `[[re, im], [re, im]]`.
        #[arg(long, required_unless_present = "bloch", conflicts_with = "bloch")]
        xi: Option<String>,
        #[arg(long)]
        bloch: Option<String>,
    },
    /// Membership of a 2x2 Hermitian matrix in the isocone of a region.
    Member {
        #[arg(long)]
        region: String,
        #[arg(long)]
        a: String,
    },
    /// Order between pure states, or a scan of random states against `--p`.
    Order {
        #[arg(long)]
        region: String,
        #[arg(long)]
        p: String,
        #[arg(long, required_unless_present = "scan", conflicts_with = "scan")]
        q: Option<String>,
        /// Number of random states to compare with `--p`.
        #[arg(long, requires = "seed")]
        scan: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Order between density states.
    StateOrder {
        #[arg(long)]
        region: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Fubini–Study distance and transition probability.
    Fs {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Where the spectrum of a normal matrix sits relative to a region.
    Transverse {
        #[arg(long)]
        region: String,
        /// Complex 2x2 matrix `{"n":2,"re":[[..]],"im":[[..]]}`.
        #[arg(long)]
        n: String,
    },
    /// Coefficients writing `a ∨ b` and `a ∧ b` through `a`, `b` and the identity.
    JoinCoeffs {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// A pair breaking norm additivity, if the cone admits one.
    Cobounded {
        #[arg(long)]
        region: String,
    },
    /// Whether a rotation maps a region onto itself.
    Rotation {
        #[arg(long)]
        region: String,
        /// 3x3 rotation matrix as nested rows.
        #[arg(long, required_unless_present = "axis", conflicts_with = "axis")]
        matrix: Option<String>,
        #[arg(long, requires = "angle")]
        axis: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        angle: Option<f64>,
    },
}

pub fn m2(ctx: &Ctx, cmd: M2Cmd) -> CliResult<()> {
    match cmd {
        M2Cmd::Hopf { xi, bloch } => match (xi, bloch) {
            (Some(xi), _) => {
                let xi: [[f64; 2]; 2] = load(&xi)?;
                emit(ctx, &json!({ "bloch": StateJson::Xi { xi }.to_pure()?.bloch }))
            }
            (None, Some(b)) => {
                let p = StateJson::Bloch { bloch: load(&b)? }.to_pure()?;
                emit(ctx, &json!({ "xi": serde_json::to_value(p).expect("state serializes")["xi"] }))
            }
            (None, None) => unreachable!("clap requires one of --xi, --bloch"),
        },
        M2Cmd::Member { region: r, a } => {
            let k = region(&r)?;
            emit(ctx, &json!({ "member": m2::iso_membership(&k, &matrix(&a)?)? }))
        }
        M2Cmd::Order { region: r, p, q, scan, seed } => {
            let k = region(&r)?;
            let p = load::<StateJson>(&p)?.to_pure()?;
            if let Some(q) = q {
                let q = load::<StateJson>(&q)?.to_pure()?;
                return emit(ctx, &json!({ "relation": m2::pure_state_order(&k, &p, &q) }));
            }
            ctx.require(JSON_CSV)?;
            let count = scan.expect("clap requires --q or --scan");
            let seed = seed.expect("clap requires --seed with --scan");
            let mut rng = seeded(seed);
            let rows: Vec<(Vec3, m2::Relation, f64)> = (0..count)
                .map(|_| {
                    let q = m2::PureStatePoint::from_bloch(random_unit_vector(&mut rng)).expect("unit vector");
                    (q.bloch, m2::pure_state_order(&k, &p, &q), m2::fubini_study(&p, &q))
                })
                .collect();
            if ctx.format == Format::Csv {
                let csv_rows = rows
                    .iter()
                    .map(|(b, rel, d)| {
                        let rel = serde_json::to_value(rel).expect("relation serializes");
                        vec![
                            b[0].to_string(),
                            b[1].to_string(),
                            b[2].to_string(),
                            rel.as_str().unwrap_or_default().to_string(),
                            d.to_string(),
                        ]
                    })
                    .collect();
                return ctx.sink.write_csv(&["x", "y", "z", "relation", "fubini_study"], csv_rows);
            }
            let samples: Vec<_> = rows
                .iter()
                .map(|(b, rel, d)| json!({ "bloch": b, "relation": rel, "fubini_study": d }))
                .collect();
            emit(ctx, &json!({ "seed": seed, "p": p.bloch, "samples": samples }))
        }
        M2Cmd::StateOrder { region: r, p, q } => {
            let k = region(&r)?;
            let p = load::<StateJson>(&p)?.to_density()?;
            let q = load::<StateJson>(&q)?.to_density()?;
            emit(ctx, &json!({ "relation": m2::state_order(&k, &p, &q) }))
        }
        M2Cmd::Fs { p, q } => {
            let p = load::<StateJson>(&p)?.to_pure()?;
            let q = load::<StateJson>(&q)?.to_pure()?;
            emit(
                ctx,
                &json!({
                    "distance": m2::fubini_study(&p, &q),
                    "transition_probability": m2::transition_probability(&p, &q),
                }),
            )
        }
        M2Cmd::Transverse { region: r, n } => {
            let k = region(&r)?;
            let n = load::<MatrixJson>(&n)?.to_complex().map_err(m2::M2Error::from)?;
            emit(ctx, &m2::transversality(&k, &n)?)
        }
        M2Cmd::JoinCoeffs { a, b } => {
            let (a, b) = (matrix(&a)?, matrix(&b)?);
            emit(ctx, &json!({ "join": m2::join_coeffs(&a, &b)?, "meet": m2::meet_coeffs(&a, &b)? }))
        }
        M2Cmd::Cobounded { region: r } => {
            let w = m2::cobounded_witness(&region(&r)?);
            emit(ctx, &json!({ "cobounded": w.is_none(), "witness": w }))
        }
        M2Cmd::Rotation { region: r, matrix: m, axis, angle } => {
            let k = region(&r)?;
            let rot: Rotation = match (m, axis, angle) {
                (Some(m), _, _) => load(&m)?,
                (None, Some(axis), Some(angle)) => {
                    let axis: Vec3 = load(&axis)?;
                    let n = m2::vec3::norm(&axis);
                    if n == 0.0 {
                        return Err(m2::M2Error::NotARotation("zero axis".into()).into());
                    }
                    m2::rotation_about(&m2::vec3::scale(&axis, 1.0 / n), angle)
                }
                _ => return Err(CliError::new("Usage", "give --matrix, or --axis with --angle")),
            };
            emit(ctx, &json!({ "preserves": m2::rotation_preserves(&k, &rot)? }))
        }
    }
}

#[derive(Subcommand)]
pub enum DualCmd {
    /// The diagonal algebra of a poset with its isotone cone.
    FromPoset {
        #[arg(long)]
        poset: String,
    },
    /// The order recovered on characters of the algebra of a poset.
    Characters {
        #[arg(long)]
        poset: String,
    },
    /// Whether a map of posets is isotone and its pullback preserves the cones.
    Morphism {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// `{"map": {"n1": "m1", ...}}`.
        #[arg(long)]
        map: String,
    },
    /// Norm additivity of the cone against boundedness of the poset.
    CoboundedDuality {
        #[arg(long)]
        poset: String,
    },
}

pub fn dual(ctx: &Ctx, cmd: DualCmd) -> CliResult<()> {
    match cmd {
        DualCmd::FromPoset { poset } => {
            let p = load::<PosetJson>(&poset)?.to_poset()?;
            let a = algebra_from_poset(&p);
            emit(
                ctx,
                &json!({
                    "dim": a.dim(),
                    "characters": a.characters(),
                    "generators": a.generators(),
                    "spans": a.spans(),
                }),
            )
        }
        DualCmd::Characters { poset } => {
            let p = load::<PosetJson>(&poset)?.to_poset()?;
            let back = character_order(&algebra_from_poset(&p));
            emit(ctx, &json!({ "order": PosetJson::from(&back), "round_trip": back == p }))
        }
        DualCmd::Morphism { source, target, map } => {
            let n = load::<PosetJson>(&source)?.to_poset()?;
            let m = load::<PosetJson>(&target)?.to_poset()?;
            let g = PosetMap::from_ids(&n, &m, &load::<MapJson>(&map)?.map)?;
            emit(ctx, &morphism_check(&n, &m, &g))
        }
        DualCmd::CoboundedDuality { poset } => {
            let p = load::<PosetJson>(&poset)?.to_poset()?;
            emit(ctx, &cobounded_duality_check(&p))
        }
    }
}

#[derive(Subcommand)]
pub enum GpsCmd {
    /// Whether the landmarks separate all points.
    Complete {
        #[arg(long)]
        space: String,
        /// JSON list of landmark ids; overrides those in the space.
        #[arg(long)]
        landmarks: Option<String>,
    },
    /// The order by distances to the landmarks.
    Order {
        #[arg(long)]
        space: String,
        #[arg(long)]
        landmarks: Option<String>,
        #[arg(long, value_enum, default_value_t = Orient::Remark)]
        orientation: Orient,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Orient {
    /// `x ≤ y` iff `x` is no farther than `y` from every landmark.
    Remark,
    /// `x ≤ y` iff `x` is no closer than `y` to every landmark.
    Reversed,
}

fn gps_input(space: &str, landmarks: Option<String>) -> CliResult<(isocone::gps::FiniteMetricSpace, Vec<String>)> {
    let g: GpsJson = load(space)?;
    let ks = match landmarks {
        Some(l) => load(&l)?,
        None => g.landmarks.clone(),
    };
    Ok((g.space()?, ks))
}

pub fn gps(ctx: &Ctx, cmd: GpsCmd) -> CliResult<()> {
    match cmd {
        GpsCmd::Complete { space, landmarks } => {
            let (e, ks) = gps_input(&space, landmarks)?;
            emit(ctx, &json!({ "complete": gps_complete(&e, &ks)? }))
        }
        GpsCmd::Order { space, landmarks, orientation } => {
            ctx.require(JSON_CSV)?;
            let (e, ks) = gps_input(&space, landmarks)?;
            let orientation = match orientation {
                Orient::Remark => Orientation::Remark,
                Orient::Reversed => Orientation::Reversed,
            };
            let o = gps_order(&e, &ks, orientation)?;
            if ctx.format == Format::Csv {
                return pairs_csv(ctx, &o.preorder);
            }
            emit(
                ctx,
                &json!({ "order": PosetJson::from(&o.preorder), "complete": o.complete, "orientation": orientation }),
            )
        }
    }
}

#[derive(Subcommand)]
pub enum AcceptCmd {
    /// Run every acceptance criterion.
    All {
        #[arg(long)]
        seed: u64,
    },
    /// Run a single criterion.
    One {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        seed: u64,
    },
}

pub fn accept(ctx: &Ctx, cmd: AcceptCmd) -> CliResult<()> {
    ctx.require(&[Format::Json, Format::Text])?;
    let report = match cmd {
        AcceptCmd::All { seed } => acceptance::run_all(seed),
        AcceptCmd::One { id, seed } => {
            let c = acceptance::run_criterion(id, seed).ok_or_else(|| {
                CliError::new("Usage", format!("unknown criterion {id}; known: {:?}", acceptance::criterion_ids()))
            })?;
            acceptance::AcceptanceReport { seed, all_passed: c.passed, criteria: vec![c] }
        }
    };
    if ctx.format == Format::Text {
        let lines: Vec<String> = report.criteria.iter().map(|c| c.line()).collect();
        return ctx.sink.write_text(&lines.join("\n"));
    }
    ctx.sink.write_json(&report)
}
