//! Embedded reference data: closed-form bounds per family, the reference
//! positive-root lists for the three exceptional systems used to pin the
//! enumerator, and the constancy-criterion thresholds. The data lives in a
//! versioned JSON file so the expected values stay separate from the code
//! that recomputes them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::catalog::{Params, SpaceLabel, SpaceSpec};
use crate::exact::{parse_rat, rat_int, Rational};
use crate::root_system::Family;

const DATA: &str = include_str!("../data/expectations.json");

#[derive(Debug, Deserialize)]
pub struct Expectations {
    families: Vec<FamilyForm>,
    exceptional: Vec<ExceptionalForm>,
    groups: GroupForms,
    positive_roots: BTreeMap<String, Vec<Vec<i64>>>,
    thresholds: Thresholds,
}

#[derive(Debug, Deserialize)]
struct FamilyForm {
    label: String,
    #[allow(dead_code)]
    parameter: String,
    min: usize,
    /// The bound is `1 / (a*t + b)` where `t` is `n` or `p+q`.
    bound_denom: [i64; 2],
    rank: RankForm,
    dim: DimForm,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RankForm {
    /// `a*t + b`
    Affine {
        a: i64,
        b: i64,
    },
    /// `min(p, q)`
    MinPq,
    Const {
        value: usize,
    },
    /// `floor(n/2)`
    HalfFloor,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum DimForm {
    /// `(num[0]*t^2 + num[1]*t + num[2]) / den`
    Poly { num: [i64; 3], den: i64 },
    /// `factor * p * q`
    MulPq { factor: i64 },
}

#[derive(Debug, Deserialize)]
struct ExceptionalForm {
    label: String,
    bound: String,
    rank: usize,
    dim: usize,
}

#[derive(Debug, Deserialize)]
struct GroupForms {
    /// Per family letter, the bound is `1 / (a*l + b)` in the rank `l`.
    classical: BTreeMap<String, [i64; 2]>,
    exceptional: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
pub struct Thresholds {
    conservative: BTreeMap<String, usize>,
    conservative_pass: Vec<String>,
    relaxed_boundary: RelaxedBoundary,
}

#[derive(Debug, Deserialize)]
pub struct RelaxedBoundary {
    pub label: String,
    pub margin: String,
}

/// The parsed data file (parsed once, then shared).
pub fn expectations() -> &'static Expectations {
    static CELL: OnceLock<Expectations> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(DATA).expect("embedded expectations parse"))
}

/// Which closed-form row of the bound table a catalog entry belongs to.
/// The orthogonal family splits by rank.
fn family_key(spec: &SpaceSpec) -> Option<(&'static str, usize)> {
    match (spec.label(), spec.params()) {
        (SpaceLabel::AI, Params::N(n)) => Some(("AI", n)),
        (SpaceLabel::AII, Params::N(n)) => Some(("AII", n)),
        (SpaceLabel::AIII, Params::PQ(p, q)) => Some(("AIII", p + q)),
        (SpaceLabel::BDI, Params::PQ(1, q)) => Some(("BDI_RANK1", 1 + q)),
        (SpaceLabel::BDI, Params::PQ(p, q)) => Some(("BDI", p + q)),
        (SpaceLabel::DIII, Params::N(n)) => Some(("DIII", n)),
        (SpaceLabel::CI, Params::N(n)) => Some(("CI", n)),
        (SpaceLabel::CII, Params::PQ(p, q)) => Some(("CII", p + q)),
        _ => None,
    }
}

impl Expectations {
    fn family(&self, label: &str) -> Option<&FamilyForm> {
        self.families.iter().find(|f| f.label == label)
    }

    fn exceptional(&self, label: &str) -> Option<&ExceptionalForm> {
        self.exceptional.iter().find(|e| e.label == label)
    }

    /// Closed-form bound for a catalog entry, when the data file covers it
    /// (it covers every producible entry).
    pub fn bound_for(&self, spec: &SpaceSpec) -> Option<Rational> {
        if let Some((key, t)) = family_key(spec) {
            let form = self.family(key)?;
            if t < form.min {
                return None;
            }
            let [a, b] = form.bound_denom;
            return Some(rat_int(1) / rat_int(a * t as i64 + b));
        }
        if let SpaceLabel::Group(lt) = spec.label() {
            let l = lt.rank() as i64;
            return match lt.family() {
                Family::E | Family::F | Family::G => {
                    parse_rat(self.groups.exceptional.get(&lt.to_string())?)
                }
                f => {
                    let [a, b] = *self.groups.classical.get(&f.to_string())?;
                    Some(rat_int(1) / rat_int(a * l + b))
                }
            };
        }
        parse_rat(&self.exceptional(&spec.type_label())?.bound)
    }

    /// Rank column of the bound table, where the data file states one.
    pub fn rank_for(&self, spec: &SpaceSpec) -> Option<usize> {
        if let Some((key, t)) = family_key(spec) {
            let form = self.family(key)?;
            return Some(match form.rank {
                RankForm::Affine { a, b } => (a * t as i64 + b) as usize,
                RankForm::MinPq => match spec.params() {
                    Params::PQ(p, q) => p.min(q),
                    _ => return None,
                },
                RankForm::Const { value } => value,
                RankForm::HalfFloor => t / 2,
            });
        }
        Some(self.exceptional(&spec.type_label())?.rank)
    }

    /// Dimension column of the bound table, where the data file states one.
    pub fn dim_for(&self, spec: &SpaceSpec) -> Option<usize> {
        if let Some((key, t)) = family_key(spec) {
            let form = self.family(key)?;
            return Some(match form.dim {
                DimForm::Poly { num, den } => {
                    let t = t as i64;
                    let value = num[0] * t * t + num[1] * t + num[2];
                    assert_eq!(value % den, 0);
                    (value / den) as usize
                }
                DimForm::MulPq { factor } => match spec.params() {
                    Params::PQ(p, q) => factor as usize * p * q,
                    _ => return None,
                },
            });
        }
        Some(self.exceptional(&spec.type_label())?.dim)
    }

    /// Reference positive-root list (coefficient vectors) for a type named
    /// in the data file.
    pub fn positive_roots(&self, lie_type: &str) -> Option<&[Vec<i64>]> {
        self.positive_roots.get(lie_type).map(Vec::as_slice)
    }

    pub fn reference_root_types(&self) -> impl Iterator<Item = &str> {
        self.positive_roots.keys().map(String::as_str)
    }

    /// Expected minimal parameter per family under the stricter criterion.
    pub fn conservative_thresholds(&self) -> &BTreeMap<String, usize> {
        &self.thresholds.conservative
    }

    /// Exceptional entries expected to pass the stricter criterion.
    pub fn conservative_pass(&self) -> &[String] {
        &self.thresholds.conservative_pass
    }

    /// The entry expected to sit exactly on the relaxed-criterion boundary.
    pub fn relaxed_boundary(&self) -> &RelaxedBoundary {
        &self.thresholds.relaxed_boundary
    }
}
