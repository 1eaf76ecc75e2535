//! The catalog of irreducible symmetric spaces of compact type.
//!
//! Each space is an entry binding a family label and its integer parameters
//! to a simple root system together with an involution datum in Gantmacher
//! standard form: a diagram automorphism `theta0` plus, for inner cases, the
//! index `i` of the distinguished coweight `h_i`. The datum is all that is
//! needed downstream to split roots into moved / noncompact / compact parts.

use std::fmt;
use std::str::FromStr;

use serde_json::json;
use thiserror::Error;

use crate::root_system::{Family, LieType, Root, RootSystem, RootSystemError};

/// Which of the dispatch rules applies to a catalog entry.
///
/// `Inner` covers involutions of the form `exp(2*pi*i ad h_i)`; `SplitAi`
/// is the special type A case whose restricted roots keep full length;
/// `PureOuter` is a plain diagram automorphism; `Mixed` combines both (the
/// odd-odd orthogonal family); `EqualLengthRule` marks entries whose bound
/// follows from all roots sharing one length, with the involution left
/// unspecified; `GroupManifold` is a compact simple group viewed as a
/// symmetric space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Inner,
    SplitAi,
    PureOuter,
    Mixed,
    EqualLengthRule,
    GroupManifold,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Inner => "INNER",
            CaseTag::SplitAi => "SPLIT_AI",
            CaseTag::PureOuter => "PURE_OUTER",
            CaseTag::Mixed => "MIXED",
            CaseTag::EqualLengthRule => "EQUAL_LENGTH_RULE",
            CaseTag::GroupManifold => "GROUP_MANIFOLD",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown space label `{0}`")]
    UnknownLabel(String),
    #[error("invalid parameters for {label}: {reason}")]
    InvalidParams { label: String, reason: String },
    #[error("{operation} is not supported for {case_tag} entries")]
    Unsupported {
        case_tag: CaseTag,
        operation: &'static str,
    },
    #[error("permutation is not a Cartan-preserving involution: {0}")]
    NotAnAutomorphism(String),
    #[error("inconsistent involution datum: {0}")]
    InvalidDatum(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// An order-1-or-2 symmetry of the Dynkin diagram, stored as a 0-based
/// permutation of the nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism {
            perm: (0..rank).collect(),
        }
    }

    /// Validate that `perm` (0-based images) is an involution preserving the
    /// Cartan matrix.
    pub fn new(perm: Vec<usize>, cartan: &[Vec<i64>]) -> Result<Self, CatalogError> {
        let l = cartan.len();
        if perm.len() != l || perm.iter().any(|&p| p >= l) {
            return Err(CatalogError::NotAnAutomorphism(format!(
                "length-{} permutation on {l} nodes",
                perm.len()
            )));
        }
        for (i, &pi) in perm.iter().enumerate() {
            if perm[pi] != i {
                return Err(CatalogError::NotAnAutomorphism(format!(
                    "not an involution at node {}",
                    i + 1
                )));
            }
        }
        for i in 0..l {
            for j in 0..l {
                if cartan[perm[i]][perm[j]] != cartan[i][j] {
                    return Err(CatalogError::NotAnAutomorphism(format!(
                        "Cartan entry ({},{}) not preserved",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(DiagramAutomorphism { perm })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// 0-based image of a 0-based node.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// The 2-cycles `{j, perm(j)}` with `j < perm(j)`, in increasing order
    /// of `j` (0-based).
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        self.perm
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p)
            .map(|(i, &p)| (i, p))
            .collect()
    }

    /// Apply to a coefficient vector: the image of `sum m_i alpha_i` is
    /// `sum m_i alpha_{perm(i)}`, so coefficient `j` of the image is
    /// `m_{perm(j)}` (the permutation is its own inverse).
    pub fn apply(&self, root: &Root) -> Root {
        assert_eq!(root.dim(), self.perm.len());
        Root::from_coeffs(self.perm.iter().map(|&p| root.coeff(p)).collect())
    }
}

/// Involution datum in Gantmacher standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GantmacherDatum {
    theta0: DiagramAutomorphism,
    /// 1-based node index of `h_i`, present exactly for the cases with an
    /// inner factor.
    index_i: Option<usize>,
    case_tag: CaseTag,
}

impl GantmacherDatum {
    pub fn new(
        theta0: DiagramAutomorphism,
        index_i: Option<usize>,
        case_tag: CaseTag,
    ) -> Result<Self, CatalogError> {
        let l = theta0.rank();
        if let Some(i) = index_i {
            if i == 0 || i > l {
                return Err(CatalogError::InvalidDatum(format!(
                    "index {i} out of range 1..={l}"
                )));
            }
        }
        let (want_identity, want_index) = match case_tag {
            CaseTag::Inner => (true, true),
            CaseTag::SplitAi | CaseTag::EqualLengthRule | CaseTag::GroupManifold => (true, false),
            CaseTag::PureOuter => (false, false),
            CaseTag::Mixed => (false, true),
        };
        if theta0.is_identity() != want_identity {
            return Err(CatalogError::InvalidDatum(format!(
                "{case_tag} requires theta0 {} the identity",
                if want_identity {
                    "to be"
                } else {
                    "different from"
                }
            )));
        }
        if index_i.is_some() != want_index {
            return Err(CatalogError::InvalidDatum(format!(
                "{case_tag} requires index_i to be {}",
                if want_index { "present" } else { "absent" }
            )));
        }
        Ok(GantmacherDatum {
            theta0,
            index_i,
            case_tag,
        })
    }

    pub fn theta0(&self) -> &DiagramAutomorphism {
        &self.theta0
    }

    /// 1-based index of `h_i`, when present.
    pub fn index_i(&self) -> Option<usize> {
        self.index_i
    }

    pub fn case_tag(&self) -> CaseTag {
        self.case_tag
    }

    /// The action of `theta0` on a root.
    pub fn theta0_on_root(&self, root: &Root) -> Root {
        self.theta0.apply(root)
    }
}

/// Family labels of the classification, plus compact group manifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceLabel {
    AI,
    AII,
    AIII,
    BDI,
    DIII,
    CI,
    CII,
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
    Group(LieType),
}

impl fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceLabel::AI => write!(f, "AI"),
            SpaceLabel::AII => write!(f, "AII"),
            SpaceLabel::AIII => write!(f, "AIII"),
            SpaceLabel::BDI => write!(f, "BDI"),
            SpaceLabel::DIII => write!(f, "DIII"),
            SpaceLabel::CI => write!(f, "CI"),
            SpaceLabel::CII => write!(f, "CII"),
            SpaceLabel::EI => write!(f, "EI"),
            SpaceLabel::EII => write!(f, "EII"),
            SpaceLabel::EIII => write!(f, "EIII"),
            SpaceLabel::EIV => write!(f, "EIV"),
            SpaceLabel::EV => write!(f, "EV"),
            SpaceLabel::EVI => write!(f, "EVI"),
            SpaceLabel::EVII => write!(f, "EVII"),
            SpaceLabel::EVIII => write!(f, "EVIII"),
            SpaceLabel::EIX => write!(f, "EIX"),
            SpaceLabel::FI => write!(f, "FI"),
            SpaceLabel::FII => write!(f, "FII"),
            SpaceLabel::G => write!(f, "G"),
            SpaceLabel::Group(t) => write!(f, "GROUP({t})"),
        }
    }
}

impl FromStr for SpaceLabel {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let u = s.trim().to_ascii_uppercase();
        if let Some(inner) = u.strip_prefix("GROUP(").and_then(|r| r.strip_suffix(')')) {
            let t: LieType = inner
                .trim()
                .parse()
                .map_err(|_| CatalogError::UnknownLabel(s.trim().to_string()))?;
            return Ok(SpaceLabel::Group(t));
        }
        Ok(match u.as_str() {
            "AI" => SpaceLabel::AI,
            "AII" => SpaceLabel::AII,
            "AIII" => SpaceLabel::AIII,
            "BDI" => SpaceLabel::BDI,
            "DIII" => SpaceLabel::DIII,
            "CI" => SpaceLabel::CI,
            "CII" => SpaceLabel::CII,
            "EI" => SpaceLabel::EI,
            "EII" => SpaceLabel::EII,
            "EIII" => SpaceLabel::EIII,
            "EIV" => SpaceLabel::EIV,
            "EV" => SpaceLabel::EV,
            "EVI" => SpaceLabel::EVI,
            "EVII" => SpaceLabel::EVII,
            "EVIII" => SpaceLabel::EVIII,
            "EIX" => SpaceLabel::EIX,
            "FI" => SpaceLabel::FI,
            "FII" => SpaceLabel::FII,
            "G" => SpaceLabel::G,
            _ => return Err(CatalogError::UnknownLabel(s.trim().to_string())),
        })
    }
}

/// Integer parameters of a family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Params {
    None,
    N(usize),
    PQ(usize, usize),
}

impl Params {
    fn describe(&self) -> String {
        match self {
            Params::None => String::new(),
            Params::N(n) => format!("n={n}"),
            Params::PQ(p, q) => format!("p={p}, q={q}"),
        }
    }
}

/// A fully resolved catalog entry.
#[derive(Clone, Debug)]
pub struct SpaceSpec {
    label: SpaceLabel,
    params: Params,
    lie_type: LieType,
    datum: GantmacherDatum,
    meta_rank: usize,
    meta_dim: usize,
}

impl SpaceSpec {
    pub fn label(&self) -> SpaceLabel {
        self.label
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn datum(&self) -> &GantmacherDatum {
        &self.datum
    }

    /// Rank of the symmetric space per the classification table.
    pub fn meta_rank(&self) -> usize {
        self.meta_rank
    }

    /// Dimension of the symmetric space per the classification table.
    pub fn meta_dim(&self) -> usize {
        self.meta_dim
    }

    /// The family label, e.g. `"BDI"` or `"GROUP(G2)"`.
    pub fn type_label(&self) -> String {
        self.label.to_string()
    }

    /// Conventional name of the compact space with parameters substituted
    /// (empty for the exceptional families, matching the classification
    /// table's blank cells).
    pub fn name(&self) -> String {
        match (self.label, self.params) {
            (SpaceLabel::AI, Params::N(n)) => format!("SU({n})/SO({n})"),
            (SpaceLabel::AII, Params::N(n)) => format!("SU({})/Sp({n})", 2 * n),
            (SpaceLabel::AIII, Params::PQ(p, q)) => {
                format!("SU({})/S(U({p})xU({q}))", p + q)
            }
            (SpaceLabel::BDI, Params::PQ(p, q)) => format!("SO({})/SO({p})xSO({q})", p + q),
            (SpaceLabel::DIII, Params::N(n)) => format!("SO({})/U({n})", 2 * n),
            (SpaceLabel::CI, Params::N(n)) => format!("Sp({n})/U({n})"),
            (SpaceLabel::CII, Params::PQ(p, q)) => format!("Sp({})/Sp({p})xSp({q})", p + q),
            (SpaceLabel::Group(t), _) => {
                let l = t.rank();
                match t.family() {
                    Family::A => format!("SU({})", l + 1),
                    Family::B => format!("Spin({})", 2 * l + 1),
                    Family::C => format!("Sp({l})"),
                    Family::D => format!("Spin({})", 2 * l),
                    Family::E | Family::F | Family::G => t.to_string(),
                }
            }
            _ => String::new(),
        }
    }

    /// JSON form: label, params, underlying type, and the involution datum
    /// with a 1-based permutation.
    pub fn to_json(&self) -> serde_json::Value {
        let params = match self.params {
            Params::None => json!({}),
            Params::N(n) => json!({ "n": n }),
            Params::PQ(p, q) => json!({ "p": p, "q": q }),
        };
        let perm_one_based: Vec<usize> =
            self.datum.theta0().perm().iter().map(|&p| p + 1).collect();
        json!({
            "label": self.type_label(),
            "params": params,
            "lie_type": self.lie_type.to_string(),
            "case_tag": self.datum.case_tag().as_str(),
            "theta0_perm": perm_one_based,
            "index_i": self.datum.index_i(),
            "rank": self.meta_rank,
            "dim": self.meta_dim,
        })
    }
}

/// How far the parametric families are swept when building the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogLimits {
    /// Bound on single parameters `n` and on the rank of underlying root
    /// systems (group manifolds, AII's rank `2n-1`).
    pub max_n: usize,
    /// Bound on `p+q` for the two-parameter families.
    pub max_pq: usize,
}

impl Default for CatalogLimits {
    fn default() -> Self {
        CatalogLimits {
            max_n: 12,
            max_pq: 12,
        }
    }
}

/// Canonical type for raw family/rank, plus the 0-based node relabeling
/// from the raw numbering into the canonical one (identity when no aliasing
/// happens). `C2` folds onto `B2` (swapping short and long nodes) and `D3`
/// onto `A3` (the fork center becomes the chain center).
fn canonical_with_node_map(
    family: Family,
    rank: usize,
) -> Result<(LieType, Vec<usize>), RootSystemError> {
    let t = LieType::new(family, rank)?;
    let map = match (family, rank) {
        (Family::C, 2) => vec![1, 0],
        (Family::D, 3) => vec![1, 0, 2],
        _ => (0..rank).collect(),
    };
    Ok((t, map))
}

fn remap_index(map: &[usize], index_one_based: usize) -> usize {
    map[index_one_based - 1] + 1
}

fn remap_perm(map: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; perm.len()];
    for (u, &pu) in perm.iter().enumerate() {
        out[map[u]] = map[pu];
    }
    out
}

fn invalid(label: SpaceLabel, reason: impl Into<String>) -> CatalogError {
    CatalogError::InvalidParams {
        label: label.to_string(),
        reason: reason.into(),
    }
}

fn require_n(label: SpaceLabel, params: Params) -> Result<usize, CatalogError> {
    match params {
        Params::N(n) => Ok(n),
        other => Err(invalid(
            label,
            format!("expected a single parameter n, got {:?}", other.describe()),
        )),
    }
}

fn require_pq(label: SpaceLabel, params: Params) -> Result<(usize, usize), CatalogError> {
    match params {
        Params::PQ(p, q) => Ok((p, q)),
        other => Err(invalid(
            label,
            format!("expected parameters p and q, got {:?}", other.describe()),
        )),
    }
}

fn require_no_params(label: SpaceLabel, params: Params) -> Result<(), CatalogError> {
    match params {
        Params::None => Ok(()),
        other => Err(invalid(
            label,
            format!("takes no parameters, got {:?}", other.describe()),
        )),
    }
}

/// Resolve a family label and parameters into a full catalog entry,
/// canonicalizing parameter order (`p <= q`) and low-rank type aliases.
pub fn resolve(label: SpaceLabel, params: Params) -> Result<SpaceSpec, CatalogError> {
    let (params, lie_type, node_map, raw_datum, meta_rank, meta_dim) = match label {
        SpaceLabel::AI => {
            let n = require_n(label, params)?;
            if n < 2 {
                return Err(invalid(label, "n must be at least 2"));
            }
            let (t, map) = canonical_with_node_map(Family::A, n - 1)?;
            (
                Params::N(n),
                t,
                map,
                (None, CaseTag::SplitAi),
                n - 1,
                (n - 1) * (n + 2) / 2,
            )
        }
        SpaceLabel::AII => {
            let n = require_n(label, params)?;
            if n < 2 {
                return Err(invalid(label, "n must be at least 2"));
            }
            let (t, map) = canonical_with_node_map(Family::A, 2 * n - 1)?;
            (
                Params::N(n),
                t,
                map,
                (Some(PermSpec::Reversal), CaseTag::PureOuter),
                n - 1,
                (n - 1) * (2 * n + 1),
            )
        }
        SpaceLabel::AIII => {
            let (p, q) = require_pq(label, params)?;
            let (p, q) = (p.min(q), p.max(q));
            if p < 1 {
                return Err(invalid(label, "p and q must be at least 1"));
            }
            let (t, map) = canonical_with_node_map(Family::A, p + q - 1)?;
            (
                Params::PQ(p, q),
                t,
                map,
                (Some(PermSpec::InnerIndex(p)), CaseTag::Inner),
                p,
                2 * p * q,
            )
        }
        SpaceLabel::BDI => {
            let (p, q) = require_pq(label, params)?;
            let (p, q) = (p.min(q), p.max(q));
            if p < 1 {
                return Err(invalid(label, "p and q must be at least 1"));
            }
            if p + q < 5 {
                return Err(invalid(label, "p+q must be at least 5"));
            }
            let s = p + q;
            let (t, map, spec) = if s % 2 == 1 {
                // Odd total: type B, one of p, q is even.
                let l = (s - 1) / 2;
                let even = if p % 2 == 0 { p } else { q };
                let (t, map) = canonical_with_node_map(Family::B, l)?;
                (
                    t,
                    map,
                    (Some(PermSpec::InnerIndex(even / 2)), CaseTag::Inner),
                )
            } else {
                let l = s / 2;
                let (t, map) = canonical_with_node_map(Family::D, l)?;
                if p % 2 == 0 {
                    (t, map, (Some(PermSpec::InnerIndex(p / 2)), CaseTag::Inner))
                } else if p == 1 {
                    (t, map, (Some(PermSpec::ForkSwap), CaseTag::PureOuter))
                } else {
                    (
                        t,
                        map,
                        (
                            Some(PermSpec::ForkSwapWithIndex((p - 1) / 2)),
                            CaseTag::Mixed,
                        ),
                    )
                }
            };
            (Params::PQ(p, q), t, map, spec, p, p * q)
        }
        SpaceLabel::DIII => {
            let n = require_n(label, params)?;
            if n < 4 {
                return Err(invalid(label, "n must be at least 4"));
            }
            let (t, map) = canonical_with_node_map(Family::D, n)?;
            (
                Params::N(n),
                t,
                map,
                (Some(PermSpec::InnerIndex(n)), CaseTag::Inner),
                n / 2,
                n * (n - 1),
            )
        }
        SpaceLabel::CI => {
            let n = require_n(label, params)?;
            if n < 2 {
                return Err(invalid(label, "n must be at least 2"));
            }
            let (t, map) = canonical_with_node_map(Family::C, n)?;
            (
                Params::N(n),
                t,
                map,
                (Some(PermSpec::InnerIndex(n)), CaseTag::Inner),
                n,
                n * (n + 1),
            )
        }
        SpaceLabel::CII => {
            let (p, q) = require_pq(label, params)?;
            let (p, q) = (p.min(q), p.max(q));
            if p < 1 {
                return Err(invalid(label, "p and q must be at least 1"));
            }
            let (t, map) = canonical_with_node_map(Family::C, p + q)?;
            (
                Params::PQ(p, q),
                t,
                map,
                (Some(PermSpec::InnerIndex(p)), CaseTag::Inner),
                p,
                4 * p * q,
            )
        }
        SpaceLabel::EI | SpaceLabel::EII | SpaceLabel::EIII => {
            require_no_params(label, params)?;
            let (t, map) = canonical_with_node_map(Family::E, 6)?;
            let (rank, dim) = match label {
                SpaceLabel::EI => (6, 42),
                SpaceLabel::EII => (4, 40),
                _ => (2, 32),
            };
            (
                Params::None,
                t,
                map,
                (None, CaseTag::EqualLengthRule),
                rank,
                dim,
            )
        }
        SpaceLabel::EIV => {
            require_no_params(label, params)?;
            let (t, map) = canonical_with_node_map(Family::E, 6)?;
            (
                Params::None,
                t,
                map,
                (Some(PermSpec::E6Outer), CaseTag::PureOuter),
                2,
                26,
            )
        }
        SpaceLabel::EV | SpaceLabel::EVI | SpaceLabel::EVII => {
            require_no_params(label, params)?;
            let (t, map) = canonical_with_node_map(Family::E, 7)?;
            let (rank, dim) = match label {
                SpaceLabel::EV => (7, 70),
                SpaceLabel::EVI => (4, 64),
                _ => (3, 54),
            };
            (
                Params::None,
                t,
                map,
                (None, CaseTag::EqualLengthRule),
                rank,
                dim,
            )
        }
        SpaceLabel::EVIII | SpaceLabel::EIX => {
            require_no_params(label, params)?;
            let (t, map) = canonical_with_node_map(Family::E, 8)?;
            let (rank, dim) = if label == SpaceLabel::EVIII {
                (8, 128)
            } else {
                (4, 112)
            };
            (
                Params::None,
                t,
                map,
                (None, CaseTag::EqualLengthRule),
                rank,
                dim,
            )
        }
        SpaceLabel::FI => {
            require_no_params(label, params)?;
            let (t, map) = canonical_with_node_map(Family::F, 4)?;
            (
                Params::None,
                t,
                map,
                (Some(PermSpec::InnerIndex(1)), CaseTag::Inner),
                4,
                28,
            )
        }
        SpaceLabel::FII => {
            require_no_params(label, params)?;
            let (t, map) = canonical_with_node_map(Family::F, 4)?;
            (
                Params::None,
                t,
                map,
                (Some(PermSpec::InnerIndex(4)), CaseTag::Inner),
                1,
                16,
            )
        }
        SpaceLabel::G => {
            require_no_params(label, params)?;
            let (t, map) = canonical_with_node_map(Family::G, 2)?;
            (
                Params::None,
                t,
                map,
                (Some(PermSpec::InnerIndex(2)), CaseTag::Inner),
                2,
                8,
            )
        }
        SpaceLabel::Group(t) => {
            require_no_params(label, params)?;
            let l = t.rank();
            let map = (0..l).collect();
            (
                Params::None,
                t,
                map,
                (None, CaseTag::GroupManifold),
                l,
                l + 2 * t.positive_root_count(),
            )
        }
    };

    let rs = RootSystem::new(lie_type);
    let raw_rank = node_map.len();
    let (theta0, index_i) = match raw_datum.0 {
        None => (DiagramAutomorphism::identity(raw_rank), None),
        Some(PermSpec::InnerIndex(i)) => (
            DiagramAutomorphism::identity(raw_rank),
            Some(remap_index(&node_map, i)),
        ),
        Some(PermSpec::Reversal) => {
            let raw: Vec<usize> = (0..raw_rank).rev().collect();
            (
                DiagramAutomorphism::new(remap_perm(&node_map, &raw), rs.cartan())?,
                None,
            )
        }
        Some(PermSpec::ForkSwap) => {
            let mut raw: Vec<usize> = (0..raw_rank).collect();
            raw.swap(raw_rank - 2, raw_rank - 1);
            (
                DiagramAutomorphism::new(remap_perm(&node_map, &raw), rs.cartan())?,
                None,
            )
        }
        Some(PermSpec::ForkSwapWithIndex(i)) => {
            let mut raw: Vec<usize> = (0..raw_rank).collect();
            raw.swap(raw_rank - 2, raw_rank - 1);
            (
                DiagramAutomorphism::new(remap_perm(&node_map, &raw), rs.cartan())?,
                Some(remap_index(&node_map, i)),
            )
        }
        Some(PermSpec::E6Outer) => {
            let raw = vec![5, 1, 4, 3, 2, 0];
            (
                DiagramAutomorphism::new(remap_perm(&node_map, &raw), rs.cartan())?,
                None,
            )
        }
    };
    let datum = GantmacherDatum::new(theta0, index_i, raw_datum.1)?;
    if datum.case_tag() == CaseTag::Inner {
        let i = datum.index_i().unwrap();
        let m = rs.highest().coeff(i - 1);
        if m != 1 && m != 2 {
            return Err(CatalogError::InvalidDatum(format!(
                "index {i} has highest-root coefficient {m}, need 1 or 2"
            )));
        }
    }
    Ok(SpaceSpec {
        label,
        params,
        lie_type,
        datum,
        meta_rank,
        meta_dim,
    })
}

/// Shorthand descriptions of the involutions used by [`resolve`], phrased
/// in the raw (pre-canonicalization) node numbering.
enum PermSpec {
    /// Identity `theta0` with `h_i` at this 1-based node.
    InnerIndex(usize),
    /// The order-reversing chain symmetry (type A).
    Reversal,
    /// Swap of the two fork nodes (type D).
    ForkSwap,
    /// Fork swap combined with `h_i` at this 1-based node (type D, mixed).
    ForkSwapWithIndex(usize),
    /// The rank-6 exceptional diagram's reflection: 1<->6, 3<->5.
    E6Outer,
}

/// All catalog entries within the given sweep limits, in classification
/// table order, followed by the group manifolds.
pub fn catalog(limits: CatalogLimits) -> Result<Vec<SpaceSpec>, CatalogError> {
    let mut out = Vec::new();
    for n in 2..=limits.max_n {
        out.push(resolve(SpaceLabel::AI, Params::N(n))?);
    }
    for n in 2..=limits.max_n.div_ceil(2) {
        out.push(resolve(SpaceLabel::AII, Params::N(n))?);
    }
    for s in 2..=limits.max_pq {
        for p in 1..=s / 2 {
            out.push(resolve(SpaceLabel::AIII, Params::PQ(p, s - p))?);
        }
    }
    for s in 5..=limits.max_pq {
        for p in 1..=s / 2 {
            out.push(resolve(SpaceLabel::BDI, Params::PQ(p, s - p))?);
        }
    }
    for n in 4..=limits.max_n {
        out.push(resolve(SpaceLabel::DIII, Params::N(n))?);
    }
    for n in 2..=limits.max_n {
        out.push(resolve(SpaceLabel::CI, Params::N(n))?);
    }
    for s in 2..=limits.max_pq {
        for p in 1..=s / 2 {
            out.push(resolve(SpaceLabel::CII, Params::PQ(p, s - p))?);
        }
    }
    for label in [
        SpaceLabel::EI,
        SpaceLabel::EII,
        SpaceLabel::EIII,
        SpaceLabel::EIV,
        SpaceLabel::EV,
        SpaceLabel::EVI,
        SpaceLabel::EVII,
        SpaceLabel::EVIII,
        SpaceLabel::EIX,
        SpaceLabel::FI,
        SpaceLabel::FII,
        SpaceLabel::G,
    ] {
        out.push(resolve(label, Params::None)?);
    }
    let mut group_types: Vec<LieType> = Vec::new();
    for l in 1..=limits.max_n {
        group_types.push(LieType::new(Family::A, l).unwrap());
    }
    for l in 2..=limits.max_n {
        group_types.push(LieType::new(Family::B, l).unwrap());
    }
    for l in 3..=limits.max_n {
        group_types.push(LieType::new(Family::C, l).unwrap());
    }
    for l in 4..=limits.max_n {
        group_types.push(LieType::new(Family::D, l).unwrap());
    }
    for t in [
        LieType::new(Family::E, 6).unwrap(),
        LieType::new(Family::E, 7).unwrap(),
        LieType::new(Family::E, 8).unwrap(),
        LieType::new(Family::F, 4).unwrap(),
        LieType::new(Family::G, 2).unwrap(),
    ] {
        if t.rank() <= limits.max_n {
            group_types.push(t);
        }
    }
    for t in group_types {
        out.push(resolve(SpaceLabel::Group(t), Params::None)?);
    }
    Ok(out)
}

/// The decomposition of the full root set (both signs) induced by an
/// involution datum.
#[derive(Clone, Debug)]
pub struct RootPartition {
    moved: Vec<Root>,
    noncompact: Vec<Root>,
    compact: Vec<Root>,
}

impl RootPartition {
    /// Roots with `theta0(alpha) != alpha`.
    pub fn moved(&self) -> &[Root] {
        &self.moved
    }

    /// Roots whose root spaces sit in the tangent part.
    pub fn noncompact(&self) -> &[Root] {
        &self.noncompact
    }

    /// Roots whose root spaces sit in the isotropy part.
    pub fn compact(&self) -> &[Root] {
        &self.compact
    }

    pub fn noncompact_positive(&self) -> Vec<&Root> {
        self.noncompact.iter().filter(|r| r.is_positive()).collect()
    }

    pub fn moved_positive(&self) -> Vec<&Root> {
        self.moved.iter().filter(|r| r.is_positive()).collect()
    }
}

/// Split all roots of `rs` according to the datum. Only the four directly
/// derivable cases are supported; the mixed and equal-length entries do not
/// carry enough involution data.
pub fn partition_roots(
    rs: &RootSystem,
    datum: &GantmacherDatum,
) -> Result<RootPartition, CatalogError> {
    let mut moved = Vec::new();
    let mut noncompact = Vec::new();
    let mut compact = Vec::new();
    let all = || {
        rs.positive()
            .iter()
            .cloned()
            .chain(rs.positive().iter().map(Root::negated))
    };
    match datum.case_tag() {
        CaseTag::Inner => {
            let i = datum.index_i().unwrap() - 1;
            for root in all() {
                if root.coeff(i) % 2 != 0 {
                    noncompact.push(root);
                } else {
                    compact.push(root);
                }
            }
        }
        CaseTag::PureOuter => {
            for root in all() {
                if datum.theta0_on_root(&root) != root {
                    moved.push(root);
                } else {
                    compact.push(root);
                }
            }
        }
        CaseTag::SplitAi | CaseTag::GroupManifold => {
            noncompact.extend(all());
        }
        tag @ (CaseTag::Mixed | CaseTag::EqualLengthRule) => {
            return Err(CatalogError::Unsupported {
                case_tag: tag,
                operation: "root partition",
            });
        }
    }
    Ok(RootPartition {
        moved,
        noncompact,
        compact,
    })
}
