//! Case split over minimal surfaces and the lattice-level partner tests.
//!
//! A smooth minimal projective surface either has only itself as FM
//! partner, or is elliptic of nonzero Kodaira dimension (partners among
//! relative Jacobians), or is K3/abelian (partners governed by Hodge
//! isometries of transcendental lattices). Hodge data is not modelled, so
//! for K3 and abelian surfaces the engine reports only what abstract
//! lattice arithmetic can decide: a pair is *ruled out*, a *possible
//! partner (lattice-level)*, or *inconclusive* when a search bound is hit.
//!
//! Every line of a report carries a citation anchor from [`CITATIONS`].

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bielliptic::BiellipticType;
use crate::elliptic::{self, EllipticSurfaceData};
use crate::json;
use crate::lattice::{GenusVerdict, IsometryVerdict, Lattice, LatticeError, SearchLimits};

/// Anchors used in reports, with what each one stands for.
pub const CITATIONS: &[(&str, &str)] = &[
    ("classification:main", "minimal surfaces with a nontrivial FM partner are elliptic, K3 or abelian"),
    ("minimality:hypothesis", "the classification assumes a smooth minimal projective surface"),
    ("self-only:general-type", "a surface of general type has no FM partner but itself"),
    ("self-only:ruled-non-elliptic", "a ruled non-elliptic surface has no FM partner but itself"),
    ("self-only:enriques", "an Enriques surface has no FM partner but itself"),
    ("self-only:bielliptic", "a bielliptic surface has no FM partner but itself"),
    ("elliptic:relative-jacobians", "partners of an elliptic surface of nonzero Kodaira dimension are relative Jacobians J(b), b coprime to λ"),
    ("invariant:canonical-order", "FM partners have canonical bundles of the same order"),
    ("invariant:picard-euler", "FM partners have the same Picard number and topological Euler number"),
    ("k3-abelian:transcendental-isometry", "K3/abelian partners have Hodge-isometric transcendental lattices"),
    ("k3-abelian:ns-genus", "derived necessary condition: K3/abelian partners have Néron-Severi lattices of the same genus"),
    ("abelian:duality", "an abelian partner is determined only up to passing to the dual variety"),
    ("finiteness:overlattices", "overlattices of W = NS ⊕ T correspond to isotropic subgroups of the finite group W*/W"),
];

pub fn citation_text(anchor: &str) -> Option<&'static str> {
    CITATIONS
        .iter()
        .find(|(a, _)| *a == anchor)
        .map(|(_, t)| *t)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartnerError {
    #[error("descriptor of class {class} is missing field `{field}`")]
    MissingField {
        class: SurfaceClass,
        field: &'static str,
    },
    #[error("inconsistent descriptor: {0}")]
    Inconsistent(String),
    #[error("comparison needs two surfaces of class k3 or abelian")]
    NotK3OrAbelian,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceClass {
    GeneralType,
    RuledNonElliptic,
    Enriques,
    Bielliptic,
    EllipticNonzeroKodaira,
    K3,
    Abelian,
}

impl SurfaceClass {
    pub const ALL: [SurfaceClass; 7] = [
        SurfaceClass::GeneralType,
        SurfaceClass::RuledNonElliptic,
        SurfaceClass::Enriques,
        SurfaceClass::Bielliptic,
        SurfaceClass::EllipticNonzeroKodaira,
        SurfaceClass::K3,
        SurfaceClass::Abelian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SurfaceClass::GeneralType => "general_type",
            SurfaceClass::RuledNonElliptic => "ruled_non_elliptic",
            SurfaceClass::Enriques => "enriques",
            SurfaceClass::Bielliptic => "bielliptic",
            SurfaceClass::EllipticNonzeroKodaira => "elliptic_nonzero_kodaira",
            SurfaceClass::K3 => "k3",
            SurfaceClass::Abelian => "abelian",
        }
    }

    fn is_k3_or_abelian(self) -> bool {
        matches!(self, SurfaceClass::K3 | SurfaceClass::Abelian)
    }

    /// `b₂`, when fixed by the class.
    fn second_betti(self) -> Option<usize> {
        match self {
            SurfaceClass::K3 => Some(22),
            SurfaceClass::Abelian => Some(6),
            _ => None,
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A minimal surface given by its class and whatever invariants are known.
///
/// `omega_order = 0` stands for a canonical bundle of infinite order.
/// Invariants determined by the class (for instance `e = 24` for K3) are
/// filled in by [`SurfaceDescriptor::validated`] when absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDescriptor {
    pub class: SurfaceClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub picard_number: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_number: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bielliptic_type: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ns: Option<Lattice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Lattice>,
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub minimal: bool,
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl SurfaceDescriptor {
    pub fn new(class: SurfaceClass) -> Self {
        SurfaceDescriptor {
            class,
            omega_order: None,
            picard_number: None,
            euler_number: None,
            lambda: None,
            bielliptic_type: None,
            ns: None,
            t: None,
            minimal: true,
        }
    }

    /// A K3 or abelian surface with the given lattices; the Picard number
    /// is read off `ns`.
    pub fn with_lattices(class: SurfaceClass, ns: Lattice, t: Lattice) -> Self {
        SurfaceDescriptor {
            picard_number: Some(ns.rank() as i64),
            ns: Some(ns),
            t: Some(t),
            ..SurfaceDescriptor::new(class)
        }
    }

    /// Checks the invariants against the class and fills in the ones the
    /// class determines.
    pub fn validated(&self) -> Result<SurfaceDescriptor, PartnerError> {
        let mut d = self.clone();
        let bad = |msg: String| Err(PartnerError::Inconsistent(msg));
        let fixed: (Option<u64>, Option<i64>, Option<i64>) = match d.class {
            SurfaceClass::K3 => (Some(1), Some(24), None),
            SurfaceClass::Abelian => (Some(1), Some(0), None),
            SurfaceClass::Enriques => (Some(2), Some(12), Some(10)),
            SurfaceClass::Bielliptic => {
                let (n, k) = d.bielliptic_type.ok_or(PartnerError::MissingField {
                    class: d.class,
                    field: "bielliptic_type",
                })?;
                if BiellipticType::new(n, k).is_err() {
                    return bad(format!("({n}, {k}) is not a bielliptic type"));
                }
                (Some(n as u64), Some(0), Some(2))
            }
            _ => (None, None, None),
        };
        for (name, given, expected) in [
            (
                "omega_order",
                d.omega_order.map(|x| x as i64),
                fixed.0.map(|x| x as i64),
            ),
            ("euler_number", d.euler_number, fixed.1),
            ("picard_number", d.picard_number, fixed.2),
        ] {
            if let (Some(g), Some(e)) = (given, expected) {
                if g != e {
                    return bad(format!("{} has {name} {e}, descriptor says {g}", d.class));
                }
            }
        }
        d.omega_order = d.omega_order.or(fixed.0);
        d.euler_number = d.euler_number.or(fixed.1);
        d.picard_number = d.picard_number.or(fixed.2);
        if d.picard_number.is_none() {
            d.picard_number = d.ns.as_ref().map(|l| l.rank() as i64);
        }
        if let Some(rho) = d.picard_number {
            if rho < 1 {
                return bad(format!(
                    "Picard number {rho} of a projective surface must be positive"
                ));
            }
        }
        if d.class == SurfaceClass::EllipticNonzeroKodaira {
            let lambda = d.lambda.ok_or(PartnerError::MissingField {
                class: d.class,
                field: "lambda",
            })?;
            if lambda < 1 {
                return bad(format!("λ = {lambda} must be at least 1"));
            }
        }
        if let Some(ns) = &d.ns {
            if d.picard_number != Some(ns.rank() as i64) {
                return bad(format!(
                    "ns has rank {}, Picard number is {}",
                    ns.rank(),
                    d.picard_number.unwrap_or_default()
                ));
            }
            let sig = ns.signature();
            if sig.positive != 1 {
                return bad(format!(
                    "ns has signature ({}, {}), expected one positive direction",
                    sig.positive, sig.negative
                ));
            }
        }
        if let (Some(b2), Some(ns), Some(t)) = (d.class.second_betti(), &d.ns, &d.t) {
            if ns.rank() + t.rank() != b2 {
                return bad(format!(
                    "rank ns + rank t = {} but b₂({}) = {b2}",
                    ns.rank() + t.rank(),
                    d.class
                ));
            }
        }
        if let (Some(b2), Some(t)) = (d.class.second_betti(), &d.t) {
            let sig = t.signature();
            if sig.positive != 2 || sig.positive + sig.negative > b2 {
                return bad(format!(
                    "t has signature ({}, {}), expected (2, *)",
                    sig.positive, sig.negative
                ));
            }
        }
        Ok(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    pub citation: String,
}

impl Check {
    fn new(name: &str, status: CheckStatus, detail: String, citation: &str) -> Self {
        Check {
            name: name.to_string(),
            status,
            detail,
            citation: citation.to_string(),
        }
    }

    fn binary(name: &str, pass: bool, detail: String, citation: &str) -> Self {
        let status = if pass {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check::new(name, status, detail, citation)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    RuledOut,
    PossiblePartnerLatticeLevel,
    Inconclusive,
}

impl Outcome {
    fn from_checks(checks: &[Check]) -> Outcome {
        if checks.iter().any(|c| c.status == CheckStatus::Fail) {
            Outcome::RuledOut
        } else if checks.iter().any(|c| c.status == CheckStatus::Inconclusive) {
            Outcome::Inconclusive
        } else {
            Outcome::PossiblePartnerLatticeLevel
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::RuledOut => "ruled out",
            Outcome::PossiblePartnerLatticeLevel => "possible partner (lattice-level)",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    SelfOnly,
    EllipticCandidates {
        residues: Vec<i64>,
        count: usize,
        count_is_upper_bound: bool,
    },
    LatticeObstruction {
        outcome: Outcome,
        checks: Vec<Check>,
    },
    HypothesisOutOfScope {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartnerReport {
    pub verdict: Verdict,
    pub citations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PartnerReport {
    fn new(verdict: Verdict, citations: &[&str]) -> Self {
        PartnerReport {
            verdict,
            citations: citations.iter().map(|c| c.to_string()).collect(),
            notes: Vec::new(),
        }
    }

    /// Whether any part of the report stopped at a search bound.
    pub fn is_inconclusive(&self) -> bool {
        match &self.verdict {
            Verdict::LatticeObstruction { outcome, checks } => {
                *outcome == Outcome::Inconclusive
                    || checks.iter().any(|c| c.status == CheckStatus::Inconclusive)
            }
            _ => false,
        }
    }

    /// Every anchor referenced by the report, including per-check ones.
    pub fn all_citations(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.citations.iter().map(String::as_str).collect();
        if let Verdict::LatticeObstruction { checks, .. } = &self.verdict {
            out.extend(checks.iter().map(|c| c.citation.as_str()));
        }
        out
    }
}

impl fmt::Display for PartnerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::SelfOnly => writeln!(f, "verdict: the only FM partner is the surface itself")?,
            Verdict::EllipticCandidates {
                residues,
                count,
                count_is_upper_bound,
            } => {
                let list: Vec<String> = residues.iter().map(|b| format!("J({b})")).collect();
                let bound = if *count_is_upper_bound {
                    "at most "
                } else {
                    ""
                };
                writeln!(
                    f,
                    "verdict: {bound}{count} partner(s) among {}",
                    list.join(", ")
                )?;
            }
            Verdict::LatticeObstruction { outcome, checks } => {
                writeln!(f, "verdict: {outcome}")?;
                let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
                for c in checks {
                    let status = match c.status {
                        CheckStatus::Pass => "pass",
                        CheckStatus::Fail => "FAIL",
                        CheckStatus::Inconclusive => "????",
                    };
                    writeln!(
                        f,
                        "  {status}  {:width$}  {}  [{}]",
                        c.name, c.detail, c.citation
                    )?;
                }
            }
            Verdict::HypothesisOutOfScope { reason } => {
                writeln!(f, "verdict: out of scope ({reason})")?
            }
        }
        writeln!(f, "citations: {}", self.citations.join(", "))?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

fn describe(v: Option<i64>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "?".into(),
    }
}

fn describe_order(v: Option<u64>) -> String {
    match v {
        Some(0) => "∞".into(),
        Some(x) => x.to_string(),
        None => "?".into(),
    }
}

/// Order of `ω`, Picard number and Euler number must agree for partners.
/// A value unknown on either side yields an inconclusive line.
pub fn necessary_invariants(x: &SurfaceDescriptor, y: &SurfaceDescriptor) -> Vec<Check> {
    fn compare<T: PartialEq>(
        name: &str,
        a: Option<T>,
        b: Option<T>,
        detail: String,
        cite: &str,
    ) -> Check {
        match (a, b) {
            (Some(a), Some(b)) => Check::binary(name, a == b, detail, cite),
            _ => Check::new(name, CheckStatus::Inconclusive, detail, cite),
        }
    }
    vec![
        compare(
            "omega_order",
            x.omega_order,
            y.omega_order,
            format!(
                "{} vs {}",
                describe_order(x.omega_order),
                describe_order(y.omega_order)
            ),
            "invariant:canonical-order",
        ),
        compare(
            "picard_number",
            x.picard_number,
            y.picard_number,
            format!(
                "{} vs {}",
                describe(x.picard_number),
                describe(y.picard_number)
            ),
            "invariant:picard-euler",
        ),
        compare(
            "euler_number",
            x.euler_number,
            y.euler_number,
            format!(
                "{} vs {}",
                describe(x.euler_number),
                describe(y.euler_number)
            ),
            "invariant:picard-euler",
        ),
    ]
}

fn require<'a>(
    d: &'a SurfaceDescriptor,
    field: &'static str,
    v: &'a Option<Lattice>,
) -> Result<&'a Lattice, PartnerError> {
    v.as_ref().ok_or(PartnerError::MissingField {
        class: d.class,
        field,
    })
}

fn signature_text(l: &Lattice) -> String {
    let s = l.signature();
    format!("({}, {})", s.positive, s.negative)
}

/// Lattice-level comparison of two K3 or abelian surfaces.
///
/// Any failed line rules the pair out. Otherwise the pair is a possible
/// partner at lattice level, never more: a Hodge isometry of transcendental
/// lattices is needed and periods are not part of the data.
pub fn k3_abelian_obstruction(
    x: &SurfaceDescriptor,
    y: &SurfaceDescriptor,
    limits: &SearchLimits,
) -> Result<PartnerReport, PartnerError> {
    if !x.class.is_k3_or_abelian() || !y.class.is_k3_or_abelian() {
        return Err(PartnerError::NotK3OrAbelian);
    }
    let x = x.validated()?;
    let y = y.validated()?;
    let (nx, tx) = (require(&x, "ns", &x.ns)?, require(&x, "t", &x.t)?);
    let (ny, ty) = (require(&y, "ns", &y.ns)?, require(&y, "t", &y.t)?);

    let mut checks = necessary_invariants(&x, &y);
    let tcite = "k3-abelian:transcendental-isometry";
    checks.push(Check::binary(
        "t_rank",
        tx.rank() == ty.rank(),
        format!("{} vs {}", tx.rank(), ty.rank()),
        tcite,
    ));
    checks.push(Check::binary(
        "t_signature",
        tx.signature() == ty.signature(),
        format!("{} vs {}", signature_text(tx), signature_text(ty)),
        tcite,
    ));
    checks.push(Check::binary(
        "t_determinant",
        tx.determinant() == ty.determinant(),
        format!("{} vs {}", tx.determinant(), ty.determinant()),
        tcite,
    ));
    let iso = tx.isometric(ty, limits);
    checks.push(match &iso {
        IsometryVerdict::Isometric { .. } => Check::new(
            "t_isometric",
            CheckStatus::Pass,
            "isometry found".into(),
            tcite,
        ),
        IsometryVerdict::NotIsometric { separated_by } => Check::new(
            "t_isometric",
            CheckStatus::Fail,
            format!("separated by {separated_by}"),
            tcite,
        ),
        IsometryVerdict::Inconclusive { radius } => Check::new(
            "t_isometric",
            CheckStatus::Inconclusive,
            format!("no isometry with coefficients in [-{radius}, {radius}]"),
            tcite,
        ),
    });
    let gcite = "k3-abelian:ns-genus";
    checks.push(match nx.same_genus(ny, limits) {
        Ok(GenusVerdict::Same) => Check::new(
            "ns_same_genus",
            CheckStatus::Pass,
            "same genus".into(),
            gcite,
        ),
        Ok(GenusVerdict::Different { separated_by }) => Check::new(
            "ns_same_genus",
            CheckStatus::Fail,
            format!("separated by {separated_by}"),
            gcite,
        ),
        Ok(GenusVerdict::Inconclusive { order, cap }) => Check::new(
            "ns_same_genus",
            CheckStatus::Inconclusive,
            format!("discriminant group of order {order} exceeds cap {cap}"),
            gcite,
        ),
        Err(e) => Check::new(
            "ns_same_genus",
            CheckStatus::Inconclusive,
            e.to_string(),
            gcite,
        ),
    });

    let outcome = Outcome::from_checks(&checks);
    let mut report = PartnerReport::new(
        Verdict::LatticeObstruction { outcome, checks },
        &["classification:main", tcite, gcite],
    );
    report.notes.push(
        "a full decision needs a Hodge isometry of transcendental lattices; period data is not modelled"
            .into(),
    );
    report
        .notes
        .push("same-genus Néron-Severi lattices is a derived necessary condition".into());
    if x.class == SurfaceClass::Abelian || y.class == SurfaceClass::Abelian {
        report.citations.push("abelian:duality".into());
        report
            .notes
            .push("an abelian partner is identified only up to its dual variety".into());
    }
    Ok(report)
}

/// Compares two arbitrary surfaces: the necessary invariants always, and
/// the lattice tests when both are K3 or abelian.
pub fn compare(
    x: &SurfaceDescriptor,
    y: &SurfaceDescriptor,
    limits: &SearchLimits,
) -> Result<PartnerReport, PartnerError> {
    let lattices =
        |d: &SurfaceDescriptor| d.class.is_k3_or_abelian() && d.ns.is_some() && d.t.is_some();
    if lattices(x) && lattices(y) {
        return k3_abelian_obstruction(x, y, limits);
    }
    let x = x.validated()?;
    let y = y.validated()?;
    let mut checks = necessary_invariants(&x, &y);
    checks.push(Check::binary(
        "class",
        x.class == y.class,
        format!("{} vs {}", x.class, y.class),
        "classification:main",
    ));
    let outcome = Outcome::from_checks(&checks);
    let mut report = PartnerReport::new(
        Verdict::LatticeObstruction { outcome, checks },
        &[
            "classification:main",
            "invariant:canonical-order",
            "invariant:picard-euler",
        ],
    );
    if outcome != Outcome::RuledOut {
        report
            .notes
            .push("only numerical invariants were compared".into());
    }
    Ok(report)
}

/// The partner report of a single surface.
pub fn fm_partner_report(
    x: &SurfaceDescriptor,
    limits: &SearchLimits,
) -> Result<PartnerReport, PartnerError> {
    if !x.minimal {
        return Ok(PartnerReport::new(
            Verdict::HypothesisOutOfScope {
                reason: "the classification covers minimal surfaces only".into(),
            },
            &["minimality:hypothesis"],
        ));
    }
    let x = x.validated()?;
    let self_only = |anchor: &str| {
        Ok(PartnerReport::new(
            Verdict::SelfOnly,
            &["classification:main", anchor],
        ))
    };
    match x.class {
        SurfaceClass::GeneralType => self_only("self-only:general-type"),
        SurfaceClass::RuledNonElliptic => self_only("self-only:ruled-non-elliptic"),
        SurfaceClass::Enriques => self_only("self-only:enriques"),
        SurfaceClass::Bielliptic => self_only("self-only:bielliptic"),
        SurfaceClass::EllipticNonzeroKodaira => {
            let lambda = x.lambda.expect("validated");
            let data = EllipticSurfaceData::new(lambda, true)
                .map_err(|e| PartnerError::Inconsistent(e.to_string()))?;
            let p = elliptic::enumerate_partners(&data)
                .map_err(|e| PartnerError::Inconsistent(e.to_string()))?;
            let mut report = PartnerReport::new(
                Verdict::EllipticCandidates {
                    residues: p.residues,
                    count: p.count,
                    count_is_upper_bound: p.count_is_upper_bound,
                },
                &["classification:main", "elliptic:relative-jacobians"],
            );
            if p.count_is_upper_bound {
                report
                    .notes
                    .push("distinct residues are not known to give non-isomorphic surfaces".into());
            }
            Ok(report)
        }
        SurfaceClass::K3 | SurfaceClass::Abelian => {
            let mut report = k3_abelian_obstruction(&x, &x, limits)?;
            match finiteness_budget(&x, limits) {
                Ok(b) => report.notes.push(format!(
                    "W = NS ⊕ T has |A_W| = {} and {} even overlattice(s) out of {} subgroup(s)",
                    b.discriminant_order, b.even_overlattices, b.subgroups
                )),
                Err(e) => report.notes.push(format!("overlattice count skipped: {e}")),
            }
            report.citations.push("finiteness:overlattices".into());
            Ok(report)
        }
    }
}

/// Desk-scale instance of the finiteness argument for `W = NS ⊕ T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessBudget {
    #[serde(with = "json::bigint")]
    pub discriminant_order: BigInt,
    #[serde(with = "json::bigint_vec")]
    pub discriminant_group: Vec<BigInt>,
    /// Even overlattices of `W`, i.e. isotropic subgroups of `A_W`.
    pub even_overlattices: usize,
    /// All subgroups of `A_W`.
    pub subgroups: usize,
    pub citation: String,
}

pub fn finiteness_budget(
    x: &SurfaceDescriptor,
    limits: &SearchLimits,
) -> Result<FinitenessBudget, PartnerError> {
    if !x.class.is_k3_or_abelian() {
        return Err(PartnerError::NotK3OrAbelian);
    }
    let ns = require(x, "ns", &x.ns)?;
    let t = require(x, "t", &x.t)?;
    let w = ns.direct_sum(t);
    let form = w.discriminant_form();
    Ok(FinitenessBudget {
        discriminant_order: form.order(),
        discriminant_group: form.factors().to_vec(),
        even_overlattices: w.overlattices(true, limits)?.len(),
        subgroups: crate::lattice::subgroup_count(&w, limits)?,
        citation: "finiteness:overlattices".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(rows: &[&[i64]]) -> Lattice {
        Lattice::from_rows(rows).unwrap()
    }

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    fn k3(ns: Lattice, t: Lattice) -> SurfaceDescriptor {
        SurfaceDescriptor::with_lattices(SurfaceClass::K3, ns, t)
    }

    /// Rank-20 negative definite stand-in: twenty copies of `[-2]`.
    fn neg_diag(n: usize, v: i64) -> Lattice {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = v;
        }
        Lattice::from_rows(&rows).unwrap()
    }

    #[test]
    fn self_only_classes() {
        for (class, anchor) in [
            (SurfaceClass::GeneralType, "self-only:general-type"),
            (
                SurfaceClass::RuledNonElliptic,
                "self-only:ruled-non-elliptic",
            ),
            (SurfaceClass::Enriques, "self-only:enriques"),
        ] {
            let r = fm_partner_report(&SurfaceDescriptor::new(class), &limits()).unwrap();
            assert_eq!(r.verdict, Verdict::SelfOnly);
            assert!(r.citations.iter().any(|c| c == anchor));
        }
        let mut b = SurfaceDescriptor::new(SurfaceClass::Bielliptic);
        b.bielliptic_type = Some((4, 2));
        let r = fm_partner_report(&b, &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::SelfOnly);
        assert!(r.citations.contains(&"self-only:bielliptic".to_string()));
    }

    #[test]
    fn missing_and_inconsistent_fields() {
        let b = SurfaceDescriptor::new(SurfaceClass::Bielliptic);
        assert!(matches!(
            fm_partner_report(&b, &limits()),
            Err(PartnerError::MissingField {
                field: "bielliptic_type",
                ..
            })
        ));
        let e = SurfaceDescriptor::new(SurfaceClass::EllipticNonzeroKodaira);
        assert!(matches!(
            fm_partner_report(&e, &limits()),
            Err(PartnerError::MissingField {
                field: "lambda",
                ..
            })
        ));
        let mut k = SurfaceDescriptor::new(SurfaceClass::K3);
        k.euler_number = Some(0);
        assert!(matches!(k.validated(), Err(PartnerError::Inconsistent(_))));
        let k = SurfaceDescriptor::new(SurfaceClass::K3);
        assert!(matches!(
            fm_partner_report(&k, &limits()),
            Err(PartnerError::MissingField { field: "ns", .. })
        ));
    }

    #[test]
    fn elliptic_dispatch() {
        let mut e = SurfaceDescriptor::new(SurfaceClass::EllipticNonzeroKodaira);
        e.lambda = Some(5);
        let r = fm_partner_report(&e, &limits()).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::EllipticCandidates {
                residues: vec![1, 2],
                count: 2,
                count_is_upper_bound: true
            }
        );
    }

    #[test]
    fn non_minimal_is_out_of_scope() {
        let mut d = SurfaceDescriptor::new(SurfaceClass::GeneralType);
        d.minimal = false;
        let r = fm_partner_report(&d, &limits()).unwrap();
        assert!(matches!(r.verdict, Verdict::HypothesisOutOfScope { .. }));
    }

    #[test]
    fn invariant_mismatches() {
        let enriques = SurfaceDescriptor::new(SurfaceClass::Enriques)
            .validated()
            .unwrap();
        let mut k3 = SurfaceDescriptor::new(SurfaceClass::K3)
            .validated()
            .unwrap();
        k3.picard_number = Some(10);
        let checks = necessary_invariants(&enriques, &k3);
        let status: Vec<_> = checks.iter().map(|c| c.status).collect();
        assert_eq!(
            status,
            vec![CheckStatus::Fail, CheckStatus::Pass, CheckStatus::Fail]
        );
        let same = necessary_invariants(&enriques, &enriques);
        assert!(same.iter().all(|c| c.status == CheckStatus::Pass));
    }

    #[test]
    fn k3_lattice_checks() {
        let t = l(&[&[2, 1], &[1, 12]]).direct_sum(&neg_diag(1, -2));
        // NS of rank 19 with signature (1, 18); T of rank 3 with signature (2, 1)
        let ns = Lattice::hyperbolic().direct_sum(&neg_diag(17, -2));
        let x = k3(ns.clone(), t.clone());
        let r = fm_partner_report(&x, &limits()).unwrap();
        match &r.verdict {
            Verdict::LatticeObstruction { outcome, checks } => {
                assert_eq!(*outcome, Outcome::PossiblePartnerLatticeLevel);
                assert!(checks.iter().all(|c| c.status == CheckStatus::Pass));
            }
            v => panic!("unexpected verdict {v:?}"),
        }
        for c in r.all_citations() {
            assert!(citation_text(c).is_some(), "unknown anchor {c}");
        }
    }

    #[test]
    fn k3_rank_mismatch_ruled_out() {
        let x = k3(
            Lattice::hyperbolic().direct_sum(&neg_diag(17, -2)),
            l(&[&[2, 1], &[1, 12]]).direct_sum(&neg_diag(1, -2)),
        );
        let y = k3(
            Lattice::hyperbolic().direct_sum(&neg_diag(16, -2)),
            l(&[&[2, 0], &[0, 2]]).direct_sum(&neg_diag(2, -2)),
        );
        let r = k3_abelian_obstruction(&x, &y, &limits()).unwrap();
        match r.verdict {
            Verdict::LatticeObstruction { outcome, checks } => {
                assert_eq!(outcome, Outcome::RuledOut);
                let rank = checks.iter().find(|c| c.name == "t_rank").unwrap();
                assert_eq!(rank.status, CheckStatus::Fail);
            }
            v => panic!("unexpected verdict {v:?}"),
        }
    }

    #[test]
    fn budget_examples() {
        let ab = |ns: Lattice, t: Lattice| {
            SurfaceDescriptor::with_lattices(SurfaceClass::Abelian, ns, t)
        };
        let h = Lattice::hyperbolic();
        let b = finiteness_budget(&ab(h.clone(), h.direct_sum(&h)), &limits()).unwrap();
        assert_eq!((b.even_overlattices, b.subgroups), (1, 1));
        let b = finiteness_budget(&ab(h.rescale(2).unwrap(), h.direct_sum(&h)), &limits()).unwrap();
        assert_eq!((b.even_overlattices, b.subgroups), (3, 5));
        assert_eq!(b.discriminant_order, BigInt::from(4));
    }

    #[test]
    fn descriptor_json_round_trip() {
        let text = r#"{"class": "bielliptic", "bielliptic_type": [4, 2]}"#;
        let d: SurfaceDescriptor = serde_json::from_str(text).unwrap();
        assert_eq!(d.bielliptic_type, Some((4, 2)));
        assert!(d.minimal);
        let back: SurfaceDescriptor =
            serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
    }
}
