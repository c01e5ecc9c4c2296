//! Certificate engine for symplectic capacities.
//!
//! Two-sided bounds for the Gromov width, the Hofer-Zehnder capacity, its
//! pi_1-sensitive variant, the two pseudo capacities of Hofer-Zehnder type
//! and the Gromov-Witten capacity are derived by forward-chaining a fixed
//! set of rules, each tagged with the quotation anchor of the inequality it
//! implements.  Every certificate carries the chain of rules that produced
//! each bound; `replay` re-derives a certificate from scratch and compares.
//!
//! All values are exact rational multiples of pi, or unknown.

use crate::catalog::{dual_of_domain, CatalogEntry, HssctFamily, PairSource};
use crate::error::Error;
use crate::json::J;
use crate::jts::{Family, JtsSpec};
use crate::quantum::{find_point_class_pair, GrassSpec};
use crate::Result;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rat = Ratio<i64>;

/// Exact bound value in multiples of pi.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Known(Rat),
    Infinite,
    Unknown,
}

impl Bound {
    pub fn scaled(&self, a: Rat) -> Bound {
        match self {
            Bound::Known(v) => Bound::Known(v * a),
            other => *other,
        }
    }

    pub fn to_json(&self) -> J {
        match self {
            Bound::Known(v) => J::obj(vec![
                ("den", J::Int(*v.denom())),
                ("num", J::Int(*v.numer())),
                ("unit", J::str("pi")),
            ]),
            Bound::Infinite => J::str("inf"),
            Bound::Unknown => J::str("unknown"),
        }
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Known(v) => write!(f, "{v}*pi"),
            Bound::Infinite => write!(f, "inf"),
            Bound::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// Gromov width c_G
    CG,
    /// Hofer-Zehnder capacity c_HZ
    CHZ,
    /// pi_1-sensitive Hofer-Zehnder capacity
    CHZPi1,
    /// pseudo capacity C^(2)_HZ(.; pt, gamma)
    C2,
    /// pseudo capacity C^(2o)_HZ(.; pt, gamma)
    C2O,
    /// Gromov-Witten capacity GW(.; pt, gamma)
    GW,
}

impl Quantity {
    pub const ALL: [Quantity; 6] = [
        Quantity::CG,
        Quantity::CHZ,
        Quantity::CHZPi1,
        Quantity::C2,
        Quantity::C2O,
        Quantity::GW,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::CG => "cG",
            Quantity::CHZ => "cHZ",
            Quantity::CHZPi1 => "cHZ_pi1",
            Quantity::C2 => "C2",
            Quantity::C2O => "C2o",
            Quantity::GW => "GW",
        }
    }

    pub fn parse(s: &str) -> Result<Quantity> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown quantity {s:?}")))
    }
}

/// Space expressions the engine reasons about.
#[derive(Debug, Clone, PartialEq)]
pub enum SpaceExpr {
    Hssct(HssctFamily),
    CartanDomain(JtsSpec),
    Ball { real_dim: usize },
    Cylinder { real_dim: usize },
    ClosedGeneric { name: String, real_dim: usize },
    Product(Vec<(Rat, SpaceExpr)>),
}

impl std::fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceExpr::Hssct(fam) => write!(f, "{}", fam.canonical_name()),
            SpaceExpr::CartanDomain(spec) => match spec.family() {
                Family::TypeI { p, q } => write!(f, "I[{p},{q}]"),
                Family::TypeII { n } => write!(f, "II[{n}]"),
                Family::TypeIII { n } => write!(f, "III[{n}]"),
                Family::TypeIV { n } => write!(f, "IV[{n}]"),
            },
            SpaceExpr::Ball { real_dim } => write!(f, "ball[{real_dim}]"),
            SpaceExpr::Cylinder { real_dim } => write!(f, "cyl[{real_dim}]"),
            SpaceExpr::ClosedGeneric { name, real_dim } => write!(f, "closed[{name},{real_dim}]"),
            SpaceExpr::Product(factors) => {
                write!(f, "prod(")?;
                for (i, (a, x)) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}*{}", rat_str(*a), x)?;
                }
                write!(f, ")")
            }
        }
    }
}

pub fn rat_str(r: Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Registered rules: (name, quotation anchor of the inequality used).
pub const RULES: &[(&str, &str)] = &[
    (
        "nontriviality",
        "c(B^{2n}(1), omega_0) = pi = c(Z^{2n}(1), omega_0)",
    ),
    ("conformality", "c(M, lambda omega) = |lambda| c(M, omega)"),
    (
        "ball_into_domain",
        "(B^{2n}(1), omega_0) subset (Omega, omega_0)",
    ),
    (
        "ball_into_product",
        "B^{2n_1+...+2n_r}(1) subset x_{j=1}^r B^{2n_j}(1)",
    ),
    (
        "domain_into_cylinder",
        "Omega subset tilde-Z --W--> Z^{2n}(1)",
    ),
    ("symplectic_duality", "Phi_Omega^* omega_FS = omega_0"),
    ("gw_nonvanishing", "Psi_{A,0,3}(pt; alpha, beta, pt) != 0"),
    ("gw_area_floor", "Psi_{A,g,m+2} = 0 if omega(A) < 0"),
    (
        "pseudo_capacity_chain",
        "c_G <= C^{(2)}_{HZ}(pt, gamma) <= C^{(2o)}_{HZ}(pt, gamma) <= pi",
    ),
    (
        "low_dimensional_width",
        "whose Gromov width is well-known to be equal to pi",
    ),
    (
        "product_nonvanishing_upper",
        "C_{HZ}^{(2o)}(N x M, omega + a omega_FS; pt, [N] x gamma) <= |a| pi",
    ),
    (
        "hz_superadditivity",
        "c_{HZ}(N_1 x N_2) >= c_{HZ}(N_1) + c_{HZ}(N_2)",
    ),
    ("projective_hz", "c_{HZ}(CP^n, omega_FS) = pi"),
    (
        "projective_product_hz_upper",
        "c_{HZ}(CP^{n_1} x ... x CP^{n_r}, ...) <= (|a_1|+...+|a_r|) pi",
    ),
    (
        "cp1_product_width",
        "c_G(CP^1 x ... x CP^1, ...) = min{|a_1|,...,|a_r|} pi",
    ),
    (
        "closed_times_ball_cylinder",
        "c_{HZ}(N x B^{2n}(r)) = c_{HZ}(N x Z^{2n}(r)) = pi r^2",
    ),
    (
        "smallest_capacity",
        "the Gromov width is the smallest symplectic capacity",
    ),
    (
        "width_below_pseudo",
        "c_G(M, omega) <= C^{(2)}_{HZ}(M, omega; pt, alpha)",
    ),
    (
        "pseudo_order",
        "C^{(2)}_{HZ}(. ; alpha_1, alpha_2) <= C^{(2o)}_{HZ}(. ; alpha_1, alpha_2)",
    ),
    (
        "pseudo_below_true",
        "C^{(2)}_{HZ}(. ; alpha_1, alpha_2) <= C_{HZ} <= c_{HZ}",
    ),
    (
        "hz_below_pi1",
        "c_{HZ}(M, omega) <= c^o_{HZ}(M, omega) for closed M",
    ),
    (
        "seshadri_width_bound",
        "epsilon(L) <= c_G(M, omega_L); then epsilon(L) <= 1",
    ),
    (
        "pluecker_atlas",
        "S(M, omega_FS) <= N + 1 via P: G(k,n) -> CP^{binom(n,k)-1}",
    ),
];

pub fn anchor_of(rule: &str) -> &'static str {
    RULES
        .iter()
        .find(|(name, _)| *name == rule)
        .map(|(_, anchor)| *anchor)
        .unwrap_or("unregistered")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub rule: String,
    pub anchor: String,
    pub side: Side,
    pub value: Bound,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub space: SpaceExpr,
    pub quantity: Quantity,
    pub lower: Bound,
    pub upper: Bound,
    pub steps: Vec<Step>,
}

impl Certificate {
    pub fn both_known(&self) -> bool {
        matches!(self.lower, Bound::Known(_) | Bound::Infinite)
            && matches!(self.upper, Bound::Known(_) | Bound::Infinite)
    }

    pub fn to_json(&self) -> J {
        J::obj(vec![
            ("space", J::str(self.space.to_string())),
            ("quantity", J::str(self.quantity.name())),
            ("lower", self.lower.to_json()),
            ("upper", self.upper.to_json()),
            (
                "steps",
                J::Arr(
                    self.steps
                        .iter()
                        .map(|s| {
                            J::obj(vec![
                                ("rule", J::str(s.rule.clone())),
                                ("ref", J::str(s.anchor.clone())),
                                ("side", J::str(s.side.name())),
                                ("value", s.value.to_json()),
                                ("detail", J::str(s.detail.clone())),
                            ])
                        })
                        .collect(),
                ),
            ),
        ])
    }
}

/// One candidate bound with the chain of rules deriving it.
#[derive(Debug, Clone)]
struct Contribution {
    side: Side,
    value: Rat,
    chain: Vec<(&'static str, String)>,
}

impl Contribution {
    fn new(side: Side, value: Rat, chain: Vec<(&'static str, String)>) -> Self {
        Contribution { side, value, chain }
    }
}

fn one() -> Rat {
    Rat::one()
}

/// Validate the expression and flatten nested products, multiplying scales.
pub fn canonicalize(space: &SpaceExpr) -> Result<SpaceExpr> {
    match space {
        SpaceExpr::Hssct(family) => {
            CatalogEntry::lookup(*family)?;
            Ok(space.clone())
        }
        SpaceExpr::CartanDomain(_) => Ok(space.clone()),
        SpaceExpr::Ball { real_dim } | SpaceExpr::Cylinder { real_dim } => {
            if *real_dim < 2 || real_dim % 2 != 0 {
                return Err(Error::InvalidSpec(format!(
                    "real dimension must be even and positive, got {real_dim}"
                )));
            }
            Ok(space.clone())
        }
        SpaceExpr::ClosedGeneric { name, real_dim } => {
            if *real_dim < 2 || real_dim % 2 != 0 {
                return Err(Error::InvalidSpec(format!(
                    "real dimension must be even and positive, got {real_dim}"
                )));
            }
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidSpec(format!("bad manifold name {name:?}")));
            }
            Ok(space.clone())
        }
        SpaceExpr::Product(factors) => {
            if factors.is_empty() {
                return Err(Error::InvalidSpec("empty product".into()));
            }
            let mut flat = Vec::new();
            for (a, x) in factors {
                if a.is_zero() {
                    return Err(Error::InvalidSpec("zero scale in product".into()));
                }
                match canonicalize(x)? {
                    SpaceExpr::Product(inner) => {
                        for (b, y) in inner {
                            flat.push((a * b, y));
                        }
                    }
                    other => flat.push((*a, other)),
                }
            }
            Ok(SpaceExpr::Product(flat))
        }
    }
}

/// Catalog entry of an irreducible compact factor, if the expression is one.
fn entry_of(space: &SpaceExpr) -> Option<CatalogEntry> {
    match space {
        SpaceExpr::Hssct(family) => CatalogEntry::lookup(*family).ok(),
        _ => None,
    }
}

/// Bounded-domain reading of a factor: Cartan domains as themselves, balls
/// as the rank-one domains of type I(1, n).
fn as_domain(space: &SpaceExpr) -> Option<JtsSpec> {
    match space {
        SpaceExpr::CartanDomain(spec) => Some(*spec),
        SpaceExpr::Ball { real_dim } => JtsSpec::type_i(1, real_dim / 2).ok(),
        _ => None,
    }
}

fn is_closed(space: &SpaceExpr) -> bool {
    matches!(space, SpaceExpr::Hssct(_) | SpaceExpr::ClosedGeneric { .. })
}

/// The nonvanishing codimension pair of an entry, resolving "computed"
/// entries through the quantum search.
pub fn nonvanishing_pair(entry: &CatalogEntry) -> Result<(i64, i64, String)> {
    match entry.pair {
        PairSource::Codims(a, b) => Ok((
            a,
            b,
            format!(
                "catalog pair for {}: complex codimensions ({a}, {b}), d = 1",
                entry.family.canonical_name()
            ),
        )),
        PairSource::Computed => {
            let HssctFamily::Grass { k, n } = entry.family else {
                return Err(Error::UnknownFactor(entry.family.canonical_name()));
            };
            let spec = GrassSpec::new(k, n)?;
            let (alpha, beta) = find_point_class_pair(spec)?;
            let (a, b) = (alpha.size() as i64, beta.size() as i64);
            Ok((
                a,
                b,
                format!(
                    "search on {}: Psi_(d=1)(s[{alpha}], s[{beta}], pt) != 0, codims ({a}, {b})",
                    entry.family.canonical_name()
                ),
            ))
        }
    }
}

fn contributions_single(space: &SpaceExpr, q: Quantity) -> Result<Vec<Contribution>> {
    let mut out = Vec::new();
    match space {
        SpaceExpr::Ball { .. } | SpaceExpr::Cylinder { .. } => {
            if q != Quantity::GW {
                let what = if matches!(space, SpaceExpr::Ball { .. }) {
                    "ball"
                } else {
                    "cylinder"
                };
                for side in [Side::Lower, Side::Upper] {
                    out.push(Contribution::new(
                        side,
                        one(),
                        vec![("nontriviality", format!("unit {what} has capacity pi"))],
                    ));
                }
            }
        }
        SpaceExpr::CartanDomain(spec) => {
            if matches!(q, Quantity::CG | Quantity::CHZ | Quantity::CHZPi1) {
                out.push(Contribution::new(
                    Side::Lower,
                    one(),
                    vec![(
                        "ball_into_domain",
                        format!("B^{{2n}}(1) included in {space} by the spectral bound"),
                    )],
                ));
                out.push(Contribution::new(
                    Side::Upper,
                    one(),
                    vec![(
                        "domain_into_cylinder",
                        format!("{space} rotated into the unit cylinder, spec {spec:?}"),
                    )],
                ));
            }
        }
        SpaceExpr::Hssct(_) => {
            let entry = entry_of(space).expect("validated");
            if matches!(q, Quantity::CG | Quantity::CHZ | Quantity::CHZPi1) {
                out.push(Contribution::new(
                    Side::Lower,
                    one(),
                    vec![
                        (
                            "ball_into_domain",
                            "unit ball included in the noncompact dual domain".to_string(),
                        ),
                        (
                            "symplectic_duality",
                            format!("domain embedded symplectically into {space}"),
                        ),
                    ],
                ));
            }
            if q == Quantity::GW {
                out.push(Contribution::new(
                    Side::Lower,
                    one(),
                    vec![(
                        "gw_area_floor",
                        "positive-area classes are integer multiples of pi".to_string(),
                    )],
                ));
                let (_, _, detail) = nonvanishing_pair(&entry)?;
                out.push(Contribution::new(
                    Side::Upper,
                    one(),
                    vec![("gw_nonvanishing", detail)],
                ));
            }
            if q == Quantity::CG {
                let (_, _, detail) = nonvanishing_pair(&entry)?;
                if entry.complex_dim >= 2 {
                    out.push(Contribution::new(
                        Side::Upper,
                        one(),
                        vec![
                            ("gw_nonvanishing", detail),
                            (
                                "pseudo_capacity_chain",
                                "width bounded through the pseudo capacities by pi".to_string(),
                            ),
                        ],
                    ));
                } else {
                    // the projective line: the chain through the pseudo
                    // capacities needs dim >= 4, the width itself is classical
                    out.push(Contribution::new(
                        Side::Upper,
                        one(),
                        vec![
                            ("gw_nonvanishing", detail),
                            (
                                "low_dimensional_width",
                                "one-dimensional case settled classically".to_string(),
                            ),
                        ],
                    ));
                }
            }
            if matches!(q, Quantity::C2 | Quantity::C2O) && entry.complex_dim >= 2 {
                let (_, _, detail) = nonvanishing_pair(&entry)?;
                out.push(Contribution::new(
                    Side::Upper,
                    one(),
                    vec![
                        ("gw_nonvanishing", detail),
                        (
                            "pseudo_capacity_chain",
                            "pseudo capacities bounded by the GW capacity".to_string(),
                        ),
                    ],
                ));
            }
            if q == Quantity::CHZ && entry.is_projective() {
                out.push(Contribution::new(
                    Side::Upper,
                    one(),
                    vec![("projective_hz", format!("{space} is a projective space"))],
                ));
            }
        }
        SpaceExpr::ClosedGeneric { .. } => {}
        SpaceExpr::Product(factors) => {
            out.extend(contributions_product(factors, q)?);
        }
    }
    Ok(out)
}

fn contributions_product(factors: &[(Rat, SpaceExpr)], q: Quantity) -> Result<Vec<Contribution>> {
    let mut out = Vec::new();
    let scales: Vec<Rat> = factors.iter().map(|(a, _)| a.abs()).collect();
    let unit_scale = scales.iter().all(|a| a.is_one());
    let min_scale = scales
        .iter()
        .copied()
        .reduce(|a, b| a.min(b))
        .expect("nonempty");
    let sum_scale: Rat = scales.iter().copied().sum();

    // lower bound through the ball chain: every factor must absorb a ball
    let all_domain_or_dual = factors
        .iter()
        .all(|(_, x)| as_domain(x).is_some() || entry_of(x).is_some());
    if unit_scale
        && all_domain_or_dual
        && matches!(q, Quantity::CG | Quantity::CHZ | Quantity::CHZPi1)
    {
        let mut chain = vec![
            (
                "ball_into_product",
                "unit ball included in the product of unit balls".to_string(),
            ),
            (
                "ball_into_domain",
                "factor balls included in the factor domains".to_string(),
            ),
        ];
        if factors.iter().any(|(_, x)| entry_of(x).is_some()) {
            chain.push((
                "symplectic_duality",
                "compact factors reached through their noncompact duals".to_string(),
            ));
        }
        out.push(Contribution::new(Side::Lower, one(), chain));
    }

    // upper bound through the product nonvanishing inequality
    if matches!(q, Quantity::CG | Quantity::C2 | Quantity::C2O) {
        let others_ok = factors
            .iter()
            .all(|(_, x)| is_closed(x) || as_domain(x).is_some());
        if others_ok {
            // candidates: irreducible compact factors, or domains whose
            // compact dual is an irreducible catalog entry
            let mut best: Option<(Rat, CatalogEntry, bool)> = None;
            for ((_, x), a) in factors.iter().zip(&scales) {
                let candidate = match x {
                    SpaceExpr::Hssct(_) => entry_of(x),
                    _ => as_domain(x)
                        .and_then(|s| dual_of_domain(s).ok())
                        .and_then(|f| CatalogEntry::lookup(f).ok()),
                };
                if let Some(entry) = candidate {
                    let dualized = !matches!(x, SpaceExpr::Hssct(_));
                    match &best {
                        Some((b, _, _)) if b <= a => {}
                        _ => best = Some((*a, entry, dualized)),
                    }
                }
            }
            if let Some((a, entry, dualized)) = best {
                let (_, _, pair_detail) = nonvanishing_pair(&entry)?;
                let mut chain = Vec::new();
                if dualized || factors.iter().any(|(_, x)| as_domain(x).is_some()) {
                    chain.push((
                        "symplectic_duality",
                        "domain factors transported to their compact duals".to_string(),
                    ));
                }
                chain.push(("gw_nonvanishing", pair_detail));
                chain.push((
                    "product_nonvanishing_upper",
                    format!(
                        "distinguished factor {} with scale |a| = {}",
                        entry.family.canonical_name(),
                        rat_str(a)
                    ),
                ));
                if q == Quantity::CG {
                    chain.push((
                        "width_below_pseudo",
                        "width bounded by the pseudo capacity".to_string(),
                    ));
                }
                out.push(Contribution::new(Side::Upper, a, chain));
            }
        }
    }

    // superadditivity of the Hofer-Zehnder capacities over closed factors
    if matches!(q, Quantity::CHZ | Quantity::CHZPi1) && factors.len() >= 2 {
        let all_closed = factors.iter().all(|(_, x)| is_closed(x));
        if all_closed {
            let mut total = Rat::zero();
            let mut known = 0usize;
            let mut names = Vec::new();
            for ((_, x), a) in factors.iter().zip(&scales) {
                let inner = bounds_engine(x, Quantity::CHZ, true)?;
                if let Bound::Known(l) = inner.lower {
                    total += l * *a;
                    known += 1;
                    names.push(format!("{x}: {}", rat_str(l * *a)));
                }
            }
            if known > 0 {
                let mut chain = vec![(
                    "hz_superadditivity",
                    format!("factor lower bounds: {}", names.join("; ")),
                )];
                if q == Quantity::CHZPi1 {
                    chain.push((
                        "hz_below_pi1",
                        "the lower bound transfers to the pi_1-sensitive capacity".to_string(),
                    ));
                }
                out.push(Contribution::new(Side::Lower, total, chain));
            }
        }
    }

    // products of projective spaces: Hofer-Zehnder upper bound
    if q == Quantity::CHZ {
        let all_projective = factors
            .iter()
            .all(|(_, x)| entry_of(x).map(|e| e.is_projective()).unwrap_or(false));
        if all_projective {
            out.push(Contribution::new(
                Side::Upper,
                sum_scale,
                vec![(
                    "projective_product_hz_upper",
                    format!("sum of |a_i| over {} projective factors", factors.len()),
                )],
            ));
        }
    }

    // products of projective lines: the width is known exactly
    if q == Quantity::CG && factors.len() >= 2 {
        let all_lines = factors
            .iter()
            .all(|(_, x)| entry_of(x).map(|e| e.is_line()).unwrap_or(false));
        if all_lines {
            for side in [Side::Lower, Side::Upper] {
                out.push(Contribution::new(
                    side,
                    min_scale,
                    vec![(
                        "cp1_product_width",
                        format!("min of |a_i| over {} line factors", factors.len()),
                    )],
                ));
            }
        }
    }

    // one bounded factor against closed ones: the Hofer-Zehnder capacity is
    // pinned by the sandwich through the ball and the cylinder
    if q == Quantity::CHZ && factors.len() >= 2 {
        let bounded: Vec<usize> = factors
            .iter()
            .enumerate()
            .filter(|(_, (_, x))| !is_closed(x))
            .map(|(i, _)| i)
            .collect();
        if bounded.len() == 1 {
            let i = bounded[0];
            let (_, x) = &factors[i];
            let a = scales[i];
            let chain_ok = match x {
                SpaceExpr::Cylinder { .. } | SpaceExpr::Ball { .. } => Some(vec![(
                    "closed_times_ball_cylinder",
                    format!("bounded factor {x} with scale |a| = {}", rat_str(a)),
                )]),
                SpaceExpr::CartanDomain(_) => Some(vec![
                    ("ball_into_domain", format!("N x B included in N x {x}")),
                    (
                        "domain_into_cylinder",
                        format!("N x {x} rotated into N x Z"),
                    ),
                    (
                        "closed_times_ball_cylinder",
                        format!("both ends have capacity |a| pi, |a| = {}", rat_str(a)),
                    ),
                ]),
                _ => None,
            };
            if let Some(chain) = chain_ok {
                for side in [Side::Lower, Side::Upper] {
                    out.push(Contribution::new(side, a, chain.clone()));
                }
            }
        }
    }

    Ok(out)
}

/// Cross-quantity transfers through the capacity orderings; these only
/// consult transfer-free bounds, so the recursion terminates.
fn transfer_contributions(space: &SpaceExpr, q: Quantity) -> Result<Vec<Contribution>> {
    let mut out = Vec::new();
    let primitive = |qq: Quantity| bounds_engine(space, qq, false);
    match q {
        Quantity::CG => {
            for (src, rule) in [
                (Quantity::CHZ, "smallest_capacity"),
                (Quantity::CHZPi1, "smallest_capacity"),
                (Quantity::C2, "width_below_pseudo"),
            ] {
                if let Bound::Known(u) = primitive(src)?.upper {
                    out.push(Contribution::new(
                        Side::Upper,
                        u,
                        vec![(rule, format!("upper bound inherited from {}", src.name()))],
                    ));
                }
            }
        }
        Quantity::CHZ | Quantity::CHZPi1 => {
            if let Bound::Known(l) = primitive(Quantity::CG)?.lower {
                out.push(Contribution::new(
                    Side::Lower,
                    l,
                    vec![(
                        "smallest_capacity",
                        "lower bound inherited from the Gromov width".to_string(),
                    )],
                ));
            }
        }
        Quantity::C2 => {
            if let Bound::Known(l) = primitive(Quantity::CG)?.lower {
                out.push(Contribution::new(
                    Side::Lower,
                    l,
                    vec![(
                        "width_below_pseudo",
                        "the width bounds the pseudo capacity from below".to_string(),
                    )],
                ));
            }
            if let Bound::Known(u) = primitive(Quantity::CHZ)?.upper {
                out.push(Contribution::new(
                    Side::Upper,
                    u,
                    vec![(
                        "pseudo_below_true",
                        "pseudo capacity below the true Hofer-Zehnder capacity".to_string(),
                    )],
                ));
            }
        }
        Quantity::C2O => {
            if let Bound::Known(l) = primitive(Quantity::CG)?.lower {
                out.push(Contribution::new(
                    Side::Lower,
                    l,
                    vec![
                        (
                            "width_below_pseudo",
                            "the width bounds C2 from below".to_string(),
                        ),
                        ("pseudo_order", "C2 <= C2o".to_string()),
                    ],
                ));
            }
        }
        Quantity::GW => {}
    }
    Ok(out)
}

fn fold(space: &SpaceExpr, q: Quantity, contribs: Vec<Contribution>) -> Result<Certificate> {
    let mut lower: Option<(Rat, Vec<(&'static str, String)>)> = None;
    let mut upper: Option<(Rat, Vec<(&'static str, String)>)> = None;
    for c in contribs {
        match c.side {
            Side::Lower => match &lower {
                Some((v, _)) if *v >= c.value => {}
                _ => lower = Some((c.value, c.chain)),
            },
            Side::Upper => match &upper {
                Some((v, _)) if *v <= c.value => {}
                _ => upper = Some((c.value, c.chain)),
            },
        }
    }
    if let (Some((l, _)), Some((u, _))) = (&lower, &upper) {
        if l > u {
            return Err(Error::InternalConsistency(format!(
                "derived lower {l} above upper {u} for {} of {space}",
                q.name()
            )));
        }
    }
    let mut steps = Vec::new();
    let mut push_chain = |side: Side, value: Bound, chain: &[(&'static str, String)]| {
        for (rule, detail) in chain {
            steps.push(Step {
                rule: rule.to_string(),
                anchor: anchor_of(rule).to_string(),
                side,
                value,
                detail: detail.clone(),
            });
        }
    };
    let lower_bound = match &lower {
        Some((v, chain)) => {
            push_chain(Side::Lower, Bound::Known(*v), chain);
            Bound::Known(*v)
        }
        None => Bound::Unknown,
    };
    let upper_bound = match &upper {
        Some((v, chain)) => {
            push_chain(Side::Upper, Bound::Known(*v), chain);
            Bound::Known(*v)
        }
        None => Bound::Unknown,
    };
    Ok(Certificate {
        space: space.clone(),
        quantity: q,
        lower: lower_bound,
        upper: upper_bound,
        steps,
    })
}

fn scale_certificate(inner: Certificate, a: Rat, outer: &SpaceExpr) -> Certificate {
    let mut steps = vec![Step {
        rule: "conformality".to_string(),
        anchor: anchor_of("conformality").to_string(),
        side: Side::Lower,
        value: Bound::Known(a),
        detail: format!("scaled form: bounds multiplied by |a| = {}", rat_str(a)),
    }];
    for mut s in inner.steps {
        s.value = s.value.scaled(a);
        steps.push(s);
    }
    Certificate {
        space: outer.clone(),
        quantity: inner.quantity,
        lower: inner.lower.scaled(a),
        upper: inner.upper.scaled(a),
        steps,
    }
}

fn bounds_engine(space: &SpaceExpr, q: Quantity, with_transfers: bool) -> Result<Certificate> {
    // conformality normalization of products
    if let SpaceExpr::Product(factors) = space {
        if factors.len() == 1 {
            let (a, inner) = &factors[0];
            let cert = bounds_engine(inner, q, with_transfers)?;
            return Ok(scale_certificate(cert, a.abs(), space));
        }
        // a common absolute scale factors out of the whole product
        let common = factors[0].0.abs();
        if !common.is_one() && factors.iter().all(|(a, _)| a.abs() == common) {
            let unit =
                SpaceExpr::Product(factors.iter().map(|(_, x)| (one(), x.clone())).collect());
            let cert = bounds_engine(&unit, q, with_transfers)?;
            return Ok(scale_certificate(cert, common, space));
        }
    }
    let mut contribs = contributions_single(space, q)?;
    if with_transfers {
        contribs.extend(transfer_contributions(space, q)?);
    }
    fold(space, q, contribs)
}

/// Tightest certificate derivable by the registered rules.
pub fn capacity_bounds(space: &SpaceExpr, q: Quantity) -> Result<Certificate> {
    let canonical = canonicalize(space)?;
    bounds_engine(&canonical, q, true)
}

/// Re-derive the certificate from scratch and compare; the engine is
/// deterministic, so a sound certificate replays to itself.
pub fn replay(cert: &Certificate) -> Result<bool> {
    for step in &cert.steps {
        if !RULES.iter().any(|(name, _)| *name == step.rule) {
            return Ok(false);
        }
        if anchor_of(&step.rule) != step.anchor {
            return Ok(false);
        }
    }
    let fresh = capacity_bounds(&cert.space, cert.quantity)?;
    Ok(fresh.lower == cert.lower && fresh.upper == cert.upper && fresh.steps == cert.steps)
}

/// Upper bound 1 for the Seshadri constant of the normalized ample line
/// bundle over an irreducible compact factor, derived from the width.
pub fn seshadri_upper(family: HssctFamily) -> Result<(Rat, Vec<Step>)> {
    let space = SpaceExpr::Hssct(family);
    let cert = capacity_bounds(&space, Quantity::CG)?;
    let Bound::Known(u) = cert.upper else {
        return Err(Error::Unsupported(format!(
            "no width upper bound available for {}",
            family.canonical_name()
        )));
    };
    let mut steps = cert.steps;
    steps.push(Step {
        rule: "seshadri_width_bound".to_string(),
        anchor: anchor_of("seshadri_width_bound").to_string(),
        side: Side::Upper,
        value: Bound::Known(u),
        detail: format!(
            "epsilon(L) <= c_G <= {} pi with c_1(L) = [omega_FS/pi]",
            rat_str(u)
        ),
    });
    Ok((u, steps))
}

/// Chart-count upper bound from the Pluecker embedding: binom(n, k) charts
/// for the Grassmannian; unknown for the other families.
pub fn atlas_upper(family: HssctFamily) -> Option<i64> {
    match family {
        HssctFamily::Grass { k, n } => {
            let mut acc: i128 = 1;
            for i in 0..k {
                acc = acc * (n as i128 - i as i128) / (i as i128 + 1);
            }
            i64::try_from(acc).ok()
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi() -> Bound {
        Bound::Known(Rat::one())
    }

    fn grass(k: usize, n: u32) -> SpaceExpr {
        SpaceExpr::Hssct(HssctFamily::Grass { k, n })
    }

    fn cp1() -> SpaceExpr {
        grass(1, 2)
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn grassmannian_width_is_pi() {
        let cert = capacity_bounds(&grass(2, 4), Quantity::CG).unwrap();
        assert_eq!(cert.lower, pi());
        assert_eq!(cert.upper, pi());
        assert!(cert.steps.iter().any(|s| s.rule == "gw_nonvanishing"));
        assert!(cert.steps.iter().any(|s| s.rule == "pseudo_capacity_chain"));
        assert!(cert.steps.iter().any(|s| s.rule == "symplectic_duality"));
    }

    #[test]
    fn cartan_domain_capacities_are_pi() {
        let spec = JtsSpec::type_i(2, 2).unwrap();
        for q in [Quantity::CG, Quantity::CHZ] {
            let cert = capacity_bounds(&SpaceExpr::CartanDomain(spec), q).unwrap();
            assert_eq!(cert.lower, pi());
            assert_eq!(cert.upper, pi());
            assert!(cert.steps.iter().any(|s| s.rule == "ball_into_domain"));
            assert!(cert.steps.iter().any(|s| s.rule == "domain_into_cylinder"));
        }
    }

    #[test]
    fn scaled_cp1_product_example() {
        let space = SpaceExpr::Product(vec![(rat(1, 1), cp1()), (rat(2, 1), cp1())]);
        let cert = capacity_bounds(&space, Quantity::CG).unwrap();
        assert_eq!(cert.lower, pi());
        assert_eq!(cert.upper, pi());
        assert!(cert.steps.iter().any(|s| s.rule == "cp1_product_width"));
    }

    #[test]
    fn mixed_hssct_product_hz_example() {
        let space = SpaceExpr::Product(vec![
            (rat(1, 1), grass(2, 4)),
            (rat(1, 1), SpaceExpr::Hssct(HssctFamily::Quadric { m: 3 })),
        ]);
        let cert = capacity_bounds(&space, Quantity::CHZ).unwrap();
        assert_eq!(cert.lower, Bound::Known(rat(2, 1)));
        assert_eq!(cert.upper, Bound::Unknown);
        assert!(cert.steps.iter().any(|s| s.rule == "hz_superadditivity"));
        assert!(!cert.both_known());
    }

    #[test]
    fn closed_times_domain_example() {
        let space = SpaceExpr::Product(vec![
            (
                rat(1, 1),
                SpaceExpr::ClosedGeneric {
                    name: "N".into(),
                    real_dim: 6,
                },
            ),
            (
                rat(1, 1),
                SpaceExpr::CartanDomain(JtsSpec::type_iii(2).unwrap()),
            ),
        ]);
        let cert = capacity_bounds(&space, Quantity::CHZ).unwrap();
        assert_eq!(cert.lower, pi());
        assert_eq!(cert.upper, pi());
        assert!(cert
            .steps
            .iter()
            .any(|s| s.rule == "closed_times_ball_cylinder"));
    }

    #[test]
    fn projective_products_close_the_hz_gap() {
        let space = SpaceExpr::Product(vec![(rat(2, 1), grass(1, 3)), (rat(3, 2), grass(1, 2))]);
        let cert = capacity_bounds(&space, Quantity::CHZ).unwrap();
        assert_eq!(cert.lower, Bound::Known(rat(7, 2)));
        assert_eq!(cert.upper, Bound::Known(rat(7, 2)));
    }

    #[test]
    fn hssct_unit_products_have_width_pi() {
        let space = SpaceExpr::Product(vec![
            (rat(1, 1), grass(2, 4)),
            (rat(1, 1), SpaceExpr::Hssct(HssctFamily::LGDual { n: 2 })),
        ]);
        let cert = capacity_bounds(&space, Quantity::CG).unwrap();
        assert_eq!(cert.lower, pi());
        assert_eq!(cert.upper, pi());
    }

    #[test]
    fn scaled_product_width_upper_is_min_scale() {
        let space = SpaceExpr::Product(vec![(rat(3, 1), grass(2, 4)), (rat(2, 1), grass(1, 3))]);
        let cert = capacity_bounds(&space, Quantity::CG).unwrap();
        assert_eq!(cert.upper, Bound::Known(rat(2, 1)));
    }

    #[test]
    fn cartan_products() {
        let d22 = SpaceExpr::CartanDomain(JtsSpec::type_i(2, 2).unwrap());
        let d4 = SpaceExpr::CartanDomain(JtsSpec::type_iv(3).unwrap());
        let unit = SpaceExpr::Product(vec![(rat(1, 1), d22.clone()), (rat(1, 1), d4.clone())]);
        let cert = capacity_bounds(&unit, Quantity::CG).unwrap();
        assert_eq!(cert.lower, pi());
        assert_eq!(cert.upper, pi());

        let scaled = SpaceExpr::Product(vec![(rat(5, 1), d22), (rat(3, 1), d4)]);
        let cert = capacity_bounds(&scaled, Quantity::CG).unwrap();
        assert_eq!(cert.upper, Bound::Known(rat(3, 1)));
    }

    #[test]
    fn ball_and_cylinder_are_normalized() {
        for space in [
            SpaceExpr::Ball { real_dim: 6 },
            SpaceExpr::Cylinder { real_dim: 4 },
        ] {
            for q in [Quantity::CG, Quantity::CHZ, Quantity::CHZPi1] {
                let cert = capacity_bounds(&space, q).unwrap();
                assert_eq!(cert.lower, pi());
                assert_eq!(cert.upper, pi());
            }
        }
    }

    #[test]
    fn conformality_is_exact_bound_for_bound() {
        let base = grass(2, 5);
        for q in [Quantity::CG, Quantity::CHZ, Quantity::GW] {
            let inner = capacity_bounds(&base, q).unwrap();
            for a in [rat(3, 2), rat(-7, 3), rat(2, 1)] {
                let scaled = SpaceExpr::Product(vec![(a, base.clone())]);
                let cert = capacity_bounds(&scaled, q).unwrap();
                assert_eq!(cert.lower, inner.lower.scaled(a.abs()));
                assert_eq!(cert.upper, inner.upper.scaled(a.abs()));
                assert!(cert.steps.iter().any(|s| s.rule == "conformality"));
            }
        }
    }

    #[test]
    fn hz_upper_is_unknown_for_nonprojective_hssct() {
        let cert = capacity_bounds(&grass(2, 4), Quantity::CHZ).unwrap();
        assert_eq!(cert.lower, pi());
        assert_eq!(cert.upper, Bound::Unknown);
    }

    #[test]
    fn pseudo_capacities_on_grassmannians() {
        for q in [Quantity::C2, Quantity::C2O, Quantity::GW] {
            let cert = capacity_bounds(&grass(2, 4), q).unwrap();
            assert_eq!(cert.lower, pi(), "{}", q.name());
            assert_eq!(cert.upper, pi(), "{}", q.name());
        }
    }

    #[test]
    fn width_chain_is_monotone() {
        // lower(cG) <= lower(C2) on every emitted pair
        for space in [
            grass(2, 4),
            SpaceExpr::Hssct(HssctFamily::CayleyPlane),
            cp1(),
        ] {
            let cg = capacity_bounds(&space, Quantity::CG).unwrap();
            let c2 = capacity_bounds(&space, Quantity::C2).unwrap();
            if let (Bound::Known(a), Bound::Known(b)) = (cg.lower, c2.lower) {
                assert!(a <= b);
            } else {
                panic!("expected known lower bounds");
            }
        }
    }

    #[test]
    fn replay_accepts_and_detects_tampering() {
        let cert = capacity_bounds(&grass(2, 4), Quantity::CG).unwrap();
        assert!(replay(&cert).unwrap());
        let mut tampered = cert.clone();
        tampered.upper = Bound::Known(rat(2, 1));
        assert!(!replay(&tampered).unwrap());
        let mut bad_anchor = cert.clone();
        bad_anchor.steps[0].anchor = "made up".into();
        assert!(!replay(&bad_anchor).unwrap());
    }

    #[test]
    fn seshadri_and_atlas() {
        let (v, steps) = seshadri_upper(HssctFamily::Grass { k: 2, n: 4 }).unwrap();
        assert_eq!(v, Rat::one());
        assert!(steps.iter().any(|s| s.rule == "seshadri_width_bound"));
        let (v, _) = seshadri_upper(HssctFamily::Quadric { m: 3 }).unwrap();
        assert_eq!(v, Rat::one());
        let (v, _) = seshadri_upper(HssctFamily::Grass { k: 1, n: 2 }).unwrap();
        assert_eq!(v, Rat::one());

        assert_eq!(atlas_upper(HssctFamily::Grass { k: 2, n: 4 }), Some(6));
        assert_eq!(atlas_upper(HssctFamily::Grass { k: 1, n: 5 }), Some(5));
        assert_eq!(atlas_upper(HssctFamily::LGDual { n: 3 }), None);
    }

    #[test]
    fn nested_products_flatten() {
        let inner = SpaceExpr::Product(vec![(rat(3, 1), cp1())]);
        let outer = SpaceExpr::Product(vec![(rat(2, 1), inner), (rat(1, 1), cp1())]);
        let flat = canonicalize(&outer).unwrap();
        assert_eq!(
            flat,
            SpaceExpr::Product(vec![(rat(6, 1), cp1()), (rat(1, 1), cp1())])
        );
        let cert = capacity_bounds(&outer, Quantity::CG).unwrap();
        assert_eq!(cert.lower, pi());
        assert_eq!(cert.upper, pi());
    }

    #[test]
    fn canonical_printing() {
        let space = SpaceExpr::Product(vec![
            (
                rat(1, 1),
                SpaceExpr::CartanDomain(JtsSpec::type_i(2, 3).unwrap()),
            ),
            (rat(-3, 2), SpaceExpr::Hssct(HssctFamily::Quadric { m: 4 })),
        ]);
        assert_eq!(space.to_string(), "prod(1*I[2,3],-3/2*quadric[4])");
        assert_eq!(
            SpaceExpr::ClosedGeneric {
                name: "N".into(),
                real_dim: 8
            }
            .to_string(),
            "closed[N,8]"
        );
    }

    #[test]
    fn invalid_spaces_are_rejected() {
        assert!(canonicalize(&SpaceExpr::Ball { real_dim: 3 }).is_err());
        assert!(canonicalize(&SpaceExpr::Product(vec![])).is_err());
        assert!(canonicalize(&SpaceExpr::Product(vec![(rat(0, 1), cp1())])).is_err());
    }
}
