//! The `fmp` command line.
//!
//! Every subcommand reads its inputs from flags, from a file path, from an
//! inline JSON argument (anything starting with `{` or `[`) or from standard
//! input (`-` or an omitted path), and writes either a plain-text table or,
//! with `--json`, a single JSON document.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input (or a
//! counterexample from `bielliptic verify`), 3 an inconclusive result under
//! `--strict`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bielliptic::{self, BiellipticType, NumClass, SheafClass};
use crate::elliptic::{self, EllipticSurfaceData, RankDegree, TransformMatrix};
use crate::json::{self, BigIntJson};
use crate::lattice::{GenusVerdict, IsometryVerdict, Lattice, SearchLimits};
use crate::mukai::{
    self, IntersectionData, MukaiVector, SignConvention, SurfaceChernData, SurfaceKind,
};
use crate::partner::{self, SurfaceDescriptor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "fmp",
    version,
    about = "Exact invariants and lattice obstructions for Fourier-Mukai partners of surfaces"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit with code 3 when any part of the result is inconclusive.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Largest discriminant group enumerated exhaustively.
    #[arg(long, global = true, default_value_t = SearchLimits::default().group_cap)]
    pub cap: u64,
    /// Coefficient radius of the indefinite isometry search.
    #[arg(long, global = true, default_value_t = SearchLimits::default().radius)]
    pub radius: i64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral lattices given as {"gram": [[...]]}.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Mukai vectors and Riemann-Roch on K3 and abelian surfaces.
    #[command(subcommand)]
    Mukai(MukaiCmd),
    /// Relative transforms and Jacobians of elliptic surfaces.
    #[command(subcommand)]
    Elliptic(EllipticCmd),
    /// Numerical classes on bielliptic surfaces.
    #[command(subcommand)]
    Bielliptic(BiellipticCmd),
    /// Partner reports for surface descriptors.
    #[command(subcommand)]
    Surface(SurfaceCmd),
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Determinant, signature, parity and discriminant form.
    Info { input: Option<String> },
    /// Genus comparison of two even lattices.
    GenusEq { left: String, right: String },
    /// Isometry test with a witness when one is found.
    Isometric { left: String, right: String },
    /// Integral overlattices of finite index.
    Overlattices {
        input: Option<String>,
        /// Include odd overlattices.
        #[arg(long)]
        all: bool,
    },
    /// Whether the discriminant group is 2-elementary.
    TwoElementary { input: Option<String> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    K3,
    Abelian,
}

impl From<KindArg> for SurfaceKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::K3 => SurfaceKind::K3,
            KindArg::Abelian => SurfaceKind::Abelian,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConventionArg {
    /// s = ch₂ + ε·r
    Added,
    /// s = ch₂ − ε·r
    Subtracted,
}

impl From<ConventionArg> for SignConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Added => SignConvention::Added,
            ConventionArg::Subtracted => SignConvention::Subtracted,
        }
    }
}

#[derive(Args, Debug)]
pub struct KindOpts {
    #[arg(long, value_enum, default_value = "k3")]
    pub kind: KindArg,
    #[arg(long, value_enum, default_value = "added")]
    pub convention: ConventionArg,
}

#[derive(Subcommand, Debug)]
pub enum MukaiCmd {
    /// ⟨v₁, v₂⟩ for vectors written r,D₁,…,Dₙ,s.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        v1: String,
        #[arg(long, allow_hyphen_values = true)]
        v2: String,
        /// NS Gram matrix, inline or as a path.
        #[arg(long)]
        ns: String,
    },
    /// Mukai vector of {"r", "c1", "ch2"}.
    Vector {
        input: Option<String>,
        #[command(flatten)]
        opts: KindOpts,
    },
    /// χ(E, F) from surface Riemann-Roch.
    Chi {
        e: String,
        f: String,
        /// {"ns_gram", "K", "chiO"}, inline or as a path.
        #[arg(long)]
        ambient: String,
    },
    /// Both sides of χ(E, F) = −⟨v(E), v(F)⟩.
    Consistency {
        e: String,
        f: String,
        #[arg(long)]
        ns: String,
        #[command(flatten)]
        opts: KindOpts,
    },
}

#[derive(Subcommand, Debug)]
pub enum EllipticCmd {
    /// M·(r, d) for M = [[c, a], [d, b]] in SL₂(ℤ).
    Act {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Rank and fibre degree as r,d.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Whether M lifts to a relative transform: λ | d and a > 0.
    Validate {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        lambda: i64,
    },
    /// Relative Jacobian candidates J(b).
    Partners {
        /// {"lambda", "kodaira_nonzero"}; ignored when --lambda is given.
        input: Option<String>,
        #[arg(long)]
        lambda: Option<i64>,
        /// The surface has Kodaira dimension zero.
        #[arg(long)]
        kodaira_zero: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum BiellipticCmd {
    /// a₁b₂ + a₂b₁ for classes a,b; Euler form for classes r,a,b,s.
    Pairing {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Matrix taking (r, ka) to (0, h).
    Reduce {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
    },
    /// Brute-force check of v_k(ka) ≤ v_k(r) on admissible classes.
    Verify {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 24)]
        bound: i64,
    },
    /// Validate (n, k) and optionally test a class r,a,b,s for admissibility.
    Type {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SurfaceCmd {
    /// Partner report of one surface descriptor.
    Partners { input: Option<String> },
    /// Invariant and lattice comparison of two descriptors.
    Compare { left: String, right: String },
    /// Overlattice count of W = NS ⊕ T.
    Budget { input: Option<String> },
}

/// Result of one command before rendering.
struct Output {
    text: String,
    json: Value,
    inconclusive: bool,
    exit: i32,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            inconclusive: false,
            exit: EXIT_OK,
        }
    }
}

struct Ctx<'a> {
    limits: SearchLimits,
    stdin: &'a mut dyn Read,
}

type Res<T> = Result<T, String>;

impl Ctx<'_> {
    fn read(&mut self, arg: Option<&str>) -> Res<String> {
        match arg {
            None | Some("-") => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| format!("reading standard input: {e}"))?;
                Ok(s)
            }
            Some(s) if s.trim_start().starts_with(['{', '[']) => Ok(s.to_string()),
            Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
        }
    }

    fn parse<T: DeserializeOwned>(&mut self, arg: Option<&str>, what: &str) -> Res<T> {
        let text = self.read(arg)?;
        serde_json::from_str(&text).map_err(|e| format!("invalid {what}: {e}"))
    }

    /// A lattice as {"gram": ...} or a bare Gram matrix.
    fn lattice(&mut self, arg: Option<&str>) -> Res<Lattice> {
        let text = self.read(arg)?;
        let value: Value =
            serde_json::from_str(&text).map_err(|e| format!("invalid lattice: {e}"))?;
        let value = if value.is_array() {
            json!({ "gram": value })
        } else {
            value
        };
        serde_json::from_value(value).map_err(|e| format!("invalid lattice: {e}"))
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn ints(s: &str) -> Res<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("not an integer: {t:?}"))
        })
        .collect()
}

fn big_ints(s: &str) -> Res<Vec<BigInt>> {
    s.split(',').map(json::parse_int).collect()
}

fn matrix2(s: &str) -> Res<[[i64; 2]; 2]> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(s)
        .or_else(|_| ints(s).map(|v| v.chunks(2).map(<[i64]>::to_vec).collect()))
        .map_err(|_| {
            format!("expected a 2x2 matrix such as [[0,1],[-1,0]] or 0,1,-1,0, got {s:?}")
        })?;
    match rows.as_slice() {
        [r0, r1] if r0.len() == 2 && r1.len() == 2 => Ok([[r0[0], r0[1]], [r1[0], r1[1]]]),
        _ => Err(format!("expected a 2x2 matrix, got {s:?}")),
    }
}

/// `r,D₁,…,Dₙ,s`; a single middle `0` stands for the zero class.
fn mukai_arg(s: &str, ns_rank: usize) -> Res<MukaiVector> {
    let v = big_ints(s)?;
    let d = if v.len() == ns_rank + 2 {
        v[1..v.len() - 1].to_vec()
    } else if v.len() == 3 && v[1] == BigInt::from(0) {
        vec![BigInt::from(0); ns_rank]
    } else {
        return Err(format!(
            "{s:?} has {} entries, expected r, {ns_rank} NS coordinates and s",
            v.len()
        ));
    };
    Ok(MukaiVector {
        r: v[0].clone(),
        d,
        s: v[v.len() - 1].clone(),
        kind: SurfaceKind::K3,
    })
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_gram(l: &Lattice) -> String {
    let rows: Vec<String> = l.gram().to_rows().iter().map(|r| fmt_vec(r)).collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_group(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = factors.iter().map(|d| format!("Z/{d}")).collect();
    parts.join(" + ")
}

fn lattice_info(l: &Lattice) -> Output {
    let sig = l.signature();
    let form = l.discriminant_form();
    let mut text = String::new();
    let _ = writeln!(text, "rank          {}", l.rank());
    let _ = writeln!(text, "determinant   {}", l.determinant());
    let _ = writeln!(text, "signature     ({}, {})", sig.positive, sig.negative);
    let _ = writeln!(
        text,
        "parity        {}",
        if l.is_even() { "even" } else { "odd" }
    );
    let _ = writeln!(text, "discriminant  {}", fmt_group(form.factors()));
    if !form.is_trivial() {
        let b: Vec<String> = form
            .generator_bilinear()
            .iter()
            .map(|r| fmt_vec(&r.iter().map(json::format_rational).collect::<Vec<_>>()))
            .collect();
        let _ = writeln!(text, "b (mod 1)     [{}]", b.join(", "));
        if let Some(q) = form.generator_quadratic() {
            let q: Vec<String> = q.iter().map(json::format_rational).collect();
            let _ = writeln!(text, "q (mod 2)     {}", fmt_vec(&q));
        }
    }
    let json = json!({
        "rank": l.rank(),
        "determinant": BigIntJson(l.determinant()),
        "signature": [sig.positive, sig.negative],
        "even": l.is_even(),
        "unimodular": l.is_unimodular(),
        "two_elementary": l.is_two_elementary(),
        "discriminant_form": to_json(&form),
    });
    Output::new(text, json)
}

fn run_lattice(cmd: LatticeCmd, ctx: &mut Ctx) -> Res<Output> {
    match cmd {
        LatticeCmd::Info { input } => Ok(lattice_info(&ctx.lattice(input.as_deref())?)),
        LatticeCmd::GenusEq { left, right } => {
            let a = ctx.lattice(Some(&left))?;
            let b = ctx.lattice(Some(&right))?;
            let v = a.same_genus(&b, &ctx.limits).map_err(|e| e.to_string())?;
            let text = match &v {
                GenusVerdict::Same => "same genus\n".to_string(),
                GenusVerdict::Different { separated_by } => {
                    format!("different genus (separated by {separated_by})\n")
                }
                GenusVerdict::Inconclusive { order, cap } => {
                    format!("inconclusive: discriminant group of order {order} exceeds cap {cap}\n")
                }
            };
            let mut out = Output::new(text, to_json(&v));
            out.inconclusive = matches!(v, GenusVerdict::Inconclusive { .. });
            Ok(out)
        }
        LatticeCmd::Isometric { left, right } => {
            let a = ctx.lattice(Some(&left))?;
            let b = ctx.lattice(Some(&right))?;
            let v = a.isometric(&b, &ctx.limits);
            let text = match &v {
                IsometryVerdict::Isometric { witness } => {
                    let rows: Vec<String> =
                        witness.0.to_rows().iter().map(|r| fmt_vec(r)).collect();
                    format!("isometric\nwitness [{}]\n", rows.join(", "))
                }
                IsometryVerdict::NotIsometric { separated_by } => {
                    format!("not isometric (separated by {separated_by})\n")
                }
                IsometryVerdict::Inconclusive { radius } => {
                    format!(
                        "inconclusive: no isometry with coefficients in [-{radius}, {radius}]\n"
                    )
                }
            };
            let mut out = Output::new(text, to_json(&v));
            out.inconclusive = matches!(v, IsometryVerdict::Inconclusive { .. });
            Ok(out)
        }
        LatticeCmd::Overlattices { input, all } => {
            let l = ctx.lattice(input.as_deref())?;
            let found = l
                .overlattices(!all, &ctx.limits)
                .map_err(|e| e.to_string())?;
            let mut text = format!("{} overlattice(s)\n", found.len());
            for o in &found {
                let _ = writeln!(text, "  index {:>3}  {}", o.index, fmt_gram(&o.lattice));
            }
            Ok(Output::new(
                text,
                json!({ "count": found.len(), "overlattices": to_json(&found) }),
            ))
        }
        LatticeCmd::TwoElementary { input } => {
            let l = ctx.lattice(input.as_deref())?;
            let factors = l.discriminant_group();
            let yes = l.is_two_elementary();
            let text = format!(
                "{}\ndiscriminant {}\n",
                if yes {
                    "2-elementary"
                } else {
                    "not 2-elementary"
                },
                fmt_group(&factors)
            );
            let json = json!({
                "two_elementary": yes,
                "discriminant_group": factors.into_iter().map(BigIntJson).collect::<Vec<_>>(),
            });
            Ok(Output::new(text, json))
        }
    }
}

fn fmt_mukai(v: &MukaiVector) -> String {
    format!("({}, {}, {})", v.r, fmt_vec(&v.d), v.s)
}

fn run_mukai(cmd: MukaiCmd, ctx: &mut Ctx) -> Res<Output> {
    let err = |e: mukai::MukaiError| e.to_string();
    match cmd {
        MukaiCmd::Pair { v1, v2, ns } => {
            let ns = ctx.lattice(Some(&ns))?;
            let a = mukai_arg(&v1, ns.rank())?;
            let b = mukai_arg(&v2, ns.rank())?;
            let p = mukai::mukai_pairing(&a, &b, &ns).map_err(err)?;
            Ok(Output::new(
                format!("{p}\n"),
                json!({ "pairing": BigIntJson(p) }),
            ))
        }
        MukaiCmd::Vector { input, opts } => {
            let cd: SurfaceChernData = ctx.parse(input.as_deref(), "Chern data")?;
            let kind = SurfaceKind::from(opts.kind);
            let v = mukai::mukai_vector_with(&cd, kind, opts.convention.into()).map_err(err)?;
            let json = json!({
                "r": BigIntJson(v.r.clone()),
                "D": v.d.iter().cloned().map(BigIntJson).collect::<Vec<_>>(),
                "s": BigIntJson(v.s.clone()),
                "epsilon": kind.epsilon(),
            });
            Ok(Output::new(format!("{}\n", fmt_mukai(&v)), json))
        }
        MukaiCmd::Chi { e, f, ambient } => {
            let e: SurfaceChernData = ctx.parse(Some(&e), "Chern data")?;
            let f: SurfaceChernData = ctx.parse(Some(&f), "Chern data")?;
            let amb: IntersectionData = ctx.parse(Some(&ambient), "intersection data")?;
            let chi = mukai::euler_pairing(&e, &f, &amb).map_err(err)?;
            Ok(Output::new(
                format!("{chi}\n"),
                json!({ "chi": BigIntJson(chi) }),
            ))
        }
        MukaiCmd::Consistency { e, f, ns, opts } => {
            let e: SurfaceChernData = ctx.parse(Some(&e), "Chern data")?;
            let f: SurfaceChernData = ctx.parse(Some(&f), "Chern data")?;
            let ns = ctx.lattice(Some(&ns))?;
            let c = mukai::rr_sides(&e, &f, opts.kind.into(), &ns, opts.convention.into())
                .map_err(err)?;
            let text = format!(
                "chi(E,F)        {}\n-<v(E),v(F)>    {}\n{}\n",
                c.euler,
                c.minus_mukai,
                if c.holds {
                    "consistent"
                } else {
                    "INCONSISTENT"
                }
            );
            Ok(Output::new(text, to_json(&c)))
        }
    }
}

fn run_elliptic(cmd: EllipticCmd, ctx: &mut Ctx) -> Res<Output> {
    let err = |e: elliptic::EllipticError| e.to_string();
    match cmd {
        EllipticCmd::Act { matrix, v } => {
            let m = TransformMatrix::new(matrix2(&matrix)?).map_err(err)?;
            let v = match ints(&v)?.as_slice() {
                [r, d] => RankDegree { r: *r, d: *d },
                _ => return Err(format!("expected r,d, got {v:?}")),
            };
            let w = elliptic::fm_action(&m, v).map_err(err)?;
            Ok(Output::new(format!("({}, {})\n", w.r, w.d), to_json(&w)))
        }
        EllipticCmd::Validate { matrix, lambda } => {
            let m = TransformMatrix::new(matrix2(&matrix)?).map_err(err)?;
            let x = EllipticSurfaceData::new(lambda, true).map_err(err)?;
            let ok = elliptic::validate_transform(&m, &x).map_err(err)?;
            let text = if ok {
                format!("valid: {lambda} divides d = {} and a = {} > 0\n", m.d, m.a)
            } else {
                format!(
                    "invalid: needs {lambda} | d (d = {}) and a > 0 (a = {})\n",
                    m.d, m.a
                )
            };
            Ok(Output::new(
                text,
                json!({ "valid": ok, "matrix": m.rows(), "lambda": lambda }),
            ))
        }
        EllipticCmd::Partners {
            input,
            lambda,
            kodaira_zero,
        } => {
            let x = match lambda {
                Some(l) => EllipticSurfaceData::new(l, !kodaira_zero).map_err(err)?,
                None => {
                    let x: EllipticSurfaceData =
                        ctx.parse(input.as_deref(), "elliptic surface data")?;
                    EllipticSurfaceData::new(x.lambda, x.kodaira_nonzero).map_err(err)?
                }
            };
            let p = elliptic::enumerate_partners(&x).map_err(err)?;
            let list: Vec<String> = p.residues.iter().map(|b| format!("J({b})")).collect();
            let text = format!(
                "{}{} candidate(s): {}\n",
                if p.count_is_upper_bound {
                    "at most "
                } else {
                    ""
                },
                p.count,
                list.join(", ")
            );
            Ok(Output::new(text, to_json(&p)))
        }
    }
}

fn sheaf_arg(s: &str) -> Res<SheafClass> {
    match ints(s)?.as_slice() {
        [r, a, b, s] => Ok(SheafClass::new(*r, *a, *b, *s)),
        _ => Err(format!("expected r,a,b,s, got {s:?}")),
    }
}

fn run_bielliptic(cmd: BiellipticCmd) -> Res<Output> {
    let err = |e: bielliptic::BiellipticError| e.to_string();
    match cmd {
        BiellipticCmd::Pairing { x, y } => {
            let (xs, ys) = (ints(&x)?, ints(&y)?);
            match (xs.as_slice(), ys.as_slice()) {
                ([a1, b1], [a2, b2]) => {
                    let p = bielliptic::num_pairing(
                        &NumClass { a: *a1, b: *b1 },
                        &NumClass { a: *a2, b: *b2 },
                    );
                    Ok(Output::new(format!("{p}\n"), json!({ "pairing": p })))
                }
                ([_, _, _, _], [_, _, _, _]) => {
                    let chi = bielliptic::euler_bielliptic(&sheaf_arg(&x)?, &sheaf_arg(&y)?);
                    Ok(Output::new(format!("{chi}\n"), json!({ "chi": chi })))
                }
                _ => Err("expected two classes a,b or two classes r,a,b,s".into()),
            }
        }
        BiellipticCmd::Reduce { r, k, a } => {
            let m = bielliptic::rank_reduction(r, k, a).map_err(err)?;
            let image = m.apply([r, k * a]);
            let text = format!(
                "M = {}\nh = {}\nM·({r}, {}) = ({}, {})\n",
                fmt_vec(&m.matrix.iter().map(|row| fmt_vec(row)).collect::<Vec<_>>()),
                m.h,
                k * a,
                image[0],
                image[1]
            );
            Ok(Output::new(
                text,
                json!({ "matrix": m.matrix, "h": m.h, "image": image }),
            ))
        }
        BiellipticCmd::Verify { n, k, bound } => {
            let t = BiellipticType::new(n, k).map_err(err)?;
            let rep = bielliptic::verify_divisibility_claim(&t, bound);
            let mut text = format!(
                "type ({n}, {k}), bound {bound}: {} admissible class(es) checked, {} counterexample(s), {} shift failure(s)\n",
                rep.checked,
                rep.counterexamples.len(),
                rep.shift_failures.len()
            );
            for v in rep.counterexamples.iter().chain(&rep.shift_failures) {
                let _ = writeln!(text, "  ({}, {}, {}, {})", v.r, v.c1.a, v.c1.b, v.s);
            }
            let mut out = Output::new(text, to_json(&rep));
            if !rep.holds() {
                out.exit = EXIT_INVALID;
            }
            Ok(out)
        }
        BiellipticCmd::Type { n, k, class } => {
            let t = BiellipticType::new(n, k).map_err(err)?;
            let mut text = format!(
                "bielliptic type (n, k) = ({n}, {k})\nA = {n}A', B = {k}B', A·B = {}\n",
                n * k
            );
            let mut json = json!({ "n": n, "k": k, "valid": true, "fibre_product": n * k });
            if let Some(c) = class {
                let v = sheaf_arg(&c)?;
                let ok = bielliptic::is_admissible(&v, &t);
                let _ = writeln!(
                    text,
                    "class {c}: {}",
                    if ok { "admissible" } else { "not admissible" }
                );
                json["admissible"] = Value::Bool(ok);
            }
            Ok(Output::new(text, json))
        }
    }
}

fn run_surface(cmd: SurfaceCmd, ctx: &mut Ctx) -> Res<Output> {
    let err = |e: partner::PartnerError| e.to_string();
    match cmd {
        SurfaceCmd::Partners { input } => {
            let d: SurfaceDescriptor = ctx.parse(input.as_deref(), "surface descriptor")?;
            let r = partner::fm_partner_report(&d, &ctx.limits).map_err(err)?;
            let mut out = Output::new(r.to_string(), to_json(&r));
            out.inconclusive = r.is_inconclusive();
            Ok(out)
        }
        SurfaceCmd::Compare { left, right } => {
            let x: SurfaceDescriptor = ctx.parse(Some(&left), "surface descriptor")?;
            let y: SurfaceDescriptor = ctx.parse(Some(&right), "surface descriptor")?;
            let r = partner::compare(&x, &y, &ctx.limits).map_err(err)?;
            let mut out = Output::new(r.to_string(), to_json(&r));
            out.inconclusive = r.is_inconclusive();
            Ok(out)
        }
        SurfaceCmd::Budget { input } => {
            let d: SurfaceDescriptor = ctx.parse(input.as_deref(), "surface descriptor")?;
            let b = partner::finiteness_budget(&d, &ctx.limits).map_err(err)?;
            let text = format!(
                "|A_W| = {} ({})\neven overlattices {}\nsubgroups         {}\n",
                b.discriminant_order,
                fmt_group(&b.discriminant_group),
                b.even_overlattices,
                b.subgroups
            );
            Ok(Output::new(text, to_json(&b)))
        }
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        limits: SearchLimits {
            group_cap: cli.cap,
            radius: cli.radius,
            ..SearchLimits::default()
        },
        stdin,
    };
    let result = match cli.command {
        Command::Lattice(c) => run_lattice(c, &mut ctx),
        Command::Mukai(c) => run_mukai(c, &mut ctx),
        Command::Elliptic(c) => run_elliptic(c, &mut ctx),
        Command::Bielliptic(c) => run_bielliptic(c),
        Command::Surface(c) => run_surface(c, &mut ctx),
    };
    match result {
        Ok(o) => {
            let written = if cli.json {
                let mut s = serde_json::to_string_pretty(&o.json).expect("serializable");
                s.push('\n');
                out.write_all(s.as_bytes())
            } else {
                out.write_all(o.text.as_bytes())
            };
            if written.is_err() {
                return EXIT_INVALID;
            }
            if o.exit != EXIT_OK {
                o.exit
            } else if cli.strict && o.inconclusive {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            }
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut stdin: &[u8] = b"";
        let code = run(
            std::iter::once("fmp").chain(args.iter().copied()),
            &mut stdin,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn call_json(args: &[&str]) -> (i32, Value) {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let (code, out, err) = call(&full);
        assert!(err.is_empty(), "stderr: {err}");
        (code, serde_json::from_str(&out).unwrap())
    }

    #[test]
    fn lattice_info_of_two() {
        let (code, v) = call_json(&["lattice", "info", r#"{"gram": [[2]]}"#]);
        assert_eq!(code, 0);
        assert_eq!(v["determinant"], json!(2));
        assert_eq!(v["signature"], json!([1, 0]));
        assert_eq!(v["discriminant_form"]["factors"], json!([2]));
        assert_eq!(v["discriminant_form"]["quadratic"], json!(["1/2"]));
    }

    #[test]
    fn elliptic_partners_six() {
        let (code, v) = call_json(&["elliptic", "partners", "--lambda", "6"]);
        assert_eq!(code, 0);
        assert_eq!(v["residues"], json!([1]));
        assert_eq!(v["count"], json!(1));
    }

    #[test]
    fn mukai_pair_points() {
        let (code, out, _) = call(&[
            "mukai",
            "pair",
            "--v1",
            "0,0,1",
            "--v2",
            "0,0,1",
            "--ns",
            "[[0,1],[1,0]]",
        ]);
        assert_eq!((code, out.as_str()), (0, "0\n"));
        let (code, out, _) = call(&[
            "mukai",
            "pair",
            "--v1",
            "1,0,0,0",
            "--v2",
            "0,0,0,1",
            "--ns",
            "[[0,1],[1,0]]",
        ]);
        assert_eq!((code, out.as_str()), (0, "-1\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["lattice", "info", "[[1,2],[3,4]]"]).0, EXIT_INVALID);
        assert_eq!(call(&["lattice", "frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(
            call(&["elliptic", "partners", "--lambda", "4", "--kodaira-zero"]).0,
            EXIT_INVALID
        );
        let strict = [
            "--strict",
            "--cap",
            "1",
            "lattice",
            "genus-eq",
            "[[2,1],[1,12]]",
            "[[4,1],[1,6]]",
        ];
        assert_eq!(call(&strict).0, EXIT_INCONCLUSIVE);
        assert_eq!(call(&strict[1..]).0, EXIT_OK);
    }

    #[test]
    fn mukai_arg_shapes() {
        assert_eq!(mukai_arg("1,2,3,4", 2).unwrap().d.len(), 2);
        assert_eq!(mukai_arg("1,0,4", 2).unwrap().d, vec![BigInt::from(0); 2]);
        assert!(mukai_arg("1,5,4", 2).is_err());
    }

    #[test]
    fn matrix_forms() {
        assert_eq!(matrix2("[[0,1],[-1,0]]").unwrap(), [[0, 1], [-1, 0]]);
        assert_eq!(matrix2("0,1,-1,0").unwrap(), [[0, 1], [-1, 0]]);
        assert!(matrix2("[[1,2,3]]").is_err());
    }
}
