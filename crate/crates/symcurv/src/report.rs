//! Curvature reports and the constancy criteria.
//!
//! A report bundles the computed bound with the Ricci constant, the
//! curvature range of the noncompact dual, and cross-checks against the
//! catalog metadata. On top of it sit the two harmonic-map constancy
//! criteria (`b >= 2a` and its relaxed `b >= sqrt(2) a` variant, compared
//! via `c^2` so everything stays rational), the per-family threshold
//! search, and the assembly of the full bound table.

use std::fmt;

use num::Signed;
use thiserror::Error;

use crate::catalog::{
    catalog, partition_roots, resolve, CaseTag, CatalogError, CatalogLimits, Params, SpaceLabel,
    SpaceSpec,
};
use crate::exact::{fmt_rat, rat, rat_int, Rational};
use crate::expectations::expectations;
use crate::restricted::{max_restricted_sq_length, RestrictedError, RestrictedRootResult};
use crate::root_system::RootSystem;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Restricted(#[from] RestrictedError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("cross-check failed: {0}")]
    Mismatch(String),
}

/// Lower sectional-curvature bound of the compact space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerBound {
    /// Zero is attained whenever the rank exceeds one.
    Zero,
    /// Rank-one pinching constants are out of scope.
    NotComputed,
}

impl fmt::Display for LowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerBound::Zero => f.write_str("0"),
            LowerBound::NotComputed => f.write_str("NOT_COMPUTED"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CurvatureReport {
    space: SpaceSpec,
    restricted: RestrictedRootResult,
    upper_bound: Rational,
    lower_bound: LowerBound,
    ricci: Rational,
    notes: Vec<String>,
}

impl CurvatureReport {
    pub fn space(&self) -> &SpaceSpec {
        &self.space
    }

    pub fn restricted(&self) -> &RestrictedRootResult {
        &self.restricted
    }

    /// The sectional-curvature upper bound of the compact space; the
    /// noncompact dual has curvature in `[-upper_bound, 0]`.
    pub fn upper_bound(&self) -> &Rational {
        &self.upper_bound
    }

    pub fn lower_bound(&self) -> LowerBound {
        self.lower_bound
    }

    /// Magnitude of the Ricci constant (the noncompact dual's Ricci is its
    /// negative).
    pub fn ricci(&self) -> &Rational {
        &self.ricci
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn to_json(&self) -> serde_json::Value {
        let conservative = sampson_check(self, SampsonCriterion::Conservative);
        let relaxed = sampson_check(self, SampsonCriterion::Relaxed);
        serde_json::json!({
            "space": self.space.to_json(),
            "name": self.space.name(),
            "bound": fmt_rat(&self.upper_bound),
            "lower_bound": self.lower_bound.to_string(),
            "ricci": fmt_rat(&self.ricci),
            "rank": self.space.meta_rank(),
            "dim": self.space.meta_dim(),
            "sampson": {
                "conservative": conservative.passes,
                "relaxed": relaxed.passes,
                "margins": {
                    "conservative": fmt_rat(&conservative.margin),
                    "relaxed": fmt_rat(&relaxed.margin),
                },
            },
            "notes": self.notes,
        })
    }
}

fn case_note(tag: CaseTag) -> &'static str {
    match tag {
        CaseTag::Inner => {
            "bound: squared length of the leading strongly orthogonal root of the noncompact set"
        }
        CaseTag::SplitAi => {
            "bound: restricted roots keep full length, so the highest root's squared length applies"
        }
        CaseTag::PureOuter => {
            "bound: maximal squared projection onto the vector part of the outer involution"
        }
        CaseTag::Mixed => {
            "bound: maximal root length; the mixed involution's noncompact set is not derived here"
        }
        CaseTag::EqualLengthRule => {
            "bound: all roots share one squared length, which the bound equals"
        }
        CaseTag::GroupManifold => "bound: group manifold, maximal squared root length",
    }
}

/// Build the full report for a catalog entry, cross-checking computed rank
/// and (for inner involutions) the noncompact-root count against the
/// catalog metadata.
pub fn curvature_report(spec: &SpaceSpec) -> Result<CurvatureReport, ReportError> {
    let restricted = max_restricted_sq_length(spec)?;
    if let Some(rank) = restricted.computed_rank() {
        if rank != spec.meta_rank() {
            return Err(ReportError::Mismatch(format!(
                "{}: computed rank {rank} does not match the expected rank {}",
                spec.type_label(),
                spec.meta_rank()
            )));
        }
    }
    if spec.datum().case_tag() == CaseTag::Inner {
        let rs = RootSystem::new(spec.lie_type());
        let part = partition_roots(&rs, spec.datum())?;
        if part.noncompact().len() != spec.meta_dim() {
            return Err(ReportError::Mismatch(format!(
                "{}: {} noncompact roots but expected dimension {}",
                spec.type_label(),
                part.noncompact().len(),
                spec.meta_dim()
            )));
        }
    }
    let ricci = if spec.datum().case_tag() == CaseTag::GroupManifold {
        rat(1, 4)
    } else {
        rat(1, 2)
    };
    let lower_bound = if spec.meta_rank() > 1 {
        LowerBound::Zero
    } else {
        LowerBound::NotComputed
    };
    let upper_bound = restricted.max_sq_length().clone();
    let mut notes = vec![case_note(spec.datum().case_tag()).to_string()];
    if spec.label() == SpaceLabel::CII {
        notes.push(
            "the parity rule's highest noncompact root differs from the conventional choice; \
             both are short roots, so the bound is unaffected"
                .to_string(),
        );
    }
    notes.push(format!(
        "noncompact dual: sectional curvature in [-{}, 0], Ricci -{}",
        fmt_rat(&upper_bound),
        fmt_rat(&ricci)
    ));
    Ok(CurvatureReport {
        space: spec.clone(),
        restricted,
        upper_bound,
        lower_bound,
        ricci,
        notes,
    })
}

/// The two constancy criteria: `b >= 2a` and `b >= sqrt(2) a`, handled via
/// `c^2` so the comparison stays rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SampsonCriterion {
    Conservative,
    Relaxed,
}

impl SampsonCriterion {
    pub fn c_squared(&self) -> Rational {
        match self {
            SampsonCriterion::Conservative => rat_int(4),
            SampsonCriterion::Relaxed => rat_int(2),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SampsonCriterion::Conservative => "conservative",
            SampsonCriterion::Relaxed => "relaxed",
        }
    }
}

impl fmt::Display for SampsonCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampsonVerdict {
    pub criterion: SampsonCriterion,
    /// `a^2`: the curvature magnitude bound of the noncompact dual.
    pub a_sq: Rational,
    /// `b^2`: the magnitude of the dual's Ricci constant.
    pub b_sq: Rational,
    pub passes: bool,
    /// `b^2 - c^2 a^2`; non-negative exactly when the criterion holds.
    pub margin: Rational,
}

impl SampsonVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "criterion": self.criterion.as_str(),
            "a_sq": fmt_rat(&self.a_sq),
            "b_sq": fmt_rat(&self.b_sq),
            "passes": self.passes,
            "margin": fmt_rat(&self.margin),
        })
    }
}

/// Evaluate one constancy criterion for a report. Boundary equality counts
/// as a pass: the condition is non-strict.
pub fn sampson_check(report: &CurvatureReport, criterion: SampsonCriterion) -> SampsonVerdict {
    let a_sq = report.upper_bound().clone();
    let b_sq = report.ricci().clone();
    let margin = &b_sq - criterion.c_squared() * &a_sq;
    SampsonVerdict {
        criterion,
        a_sq,
        b_sq,
        passes: !margin.is_negative(),
        margin,
    }
}

/// Parametric family cases for the threshold search; the orthogonal family
/// splits into its rank-one and higher-rank rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThresholdFamily {
    AI,
    AII,
    AIII,
    BdiRank1,
    BdiRankAbove1,
    DIII,
    CI,
    CII,
}

impl ThresholdFamily {
    pub const ALL: [ThresholdFamily; 8] = [
        ThresholdFamily::AI,
        ThresholdFamily::AII,
        ThresholdFamily::AIII,
        ThresholdFamily::BdiRank1,
        ThresholdFamily::BdiRankAbove1,
        ThresholdFamily::DIII,
        ThresholdFamily::CI,
        ThresholdFamily::CII,
    ];

    /// Key used by the embedded threshold table.
    pub fn key(&self) -> &'static str {
        match self {
            ThresholdFamily::AI => "AI",
            ThresholdFamily::AII => "AII",
            ThresholdFamily::AIII => "AIII",
            ThresholdFamily::BdiRank1 => "BDI_RANK1",
            ThresholdFamily::BdiRankAbove1 => "BDI_RANK_GT1",
            ThresholdFamily::DIII => "DIII",
            ThresholdFamily::CI => "CI",
            ThresholdFamily::CII => "CII",
        }
    }

    /// Smallest admissible parameter value (`n`, or `p+q`).
    pub fn min_parameter(&self) -> usize {
        match self {
            ThresholdFamily::AI | ThresholdFamily::AII | ThresholdFamily::CI => 2,
            ThresholdFamily::AIII | ThresholdFamily::CII => 2,
            ThresholdFamily::BdiRank1 | ThresholdFamily::BdiRankAbove1 => 5,
            ThresholdFamily::DIII => 4,
        }
    }

    /// Largest parameter value swept for a given cap on the underlying
    /// root-system rank (the quaternionic family sits on rank `2n-1`).
    pub fn max_parameter(&self, max_rank: usize) -> usize {
        match self {
            ThresholdFamily::AII => max_rank.div_ceil(2),
            _ => max_rank,
        }
    }

    /// All catalog entries of this family case at parameter value `t`.
    pub fn instances(&self, t: usize) -> Result<Vec<SpaceSpec>, CatalogError> {
        let mut out = Vec::new();
        match self {
            ThresholdFamily::AI => out.push(resolve(SpaceLabel::AI, Params::N(t))?),
            ThresholdFamily::AII => out.push(resolve(SpaceLabel::AII, Params::N(t))?),
            ThresholdFamily::DIII => out.push(resolve(SpaceLabel::DIII, Params::N(t))?),
            ThresholdFamily::CI => out.push(resolve(SpaceLabel::CI, Params::N(t))?),
            ThresholdFamily::AIII => {
                for p in 1..=t / 2 {
                    out.push(resolve(SpaceLabel::AIII, Params::PQ(p, t - p))?);
                }
            }
            ThresholdFamily::CII => {
                for p in 1..=t / 2 {
                    out.push(resolve(SpaceLabel::CII, Params::PQ(p, t - p))?);
                }
            }
            ThresholdFamily::BdiRank1 => out.push(resolve(SpaceLabel::BDI, Params::PQ(1, t - 1))?),
            ThresholdFamily::BdiRankAbove1 => {
                for p in 2..=t / 2 {
                    out.push(resolve(SpaceLabel::BDI, Params::PQ(p, t - p))?);
                }
            }
        }
        Ok(out)
    }
}

/// Whether every entry of the family case at parameter value `t` passes
/// the criterion. Errors when the family has no instances at `t`.
pub fn all_pass_at(
    family: ThresholdFamily,
    t: usize,
    criterion: SampsonCriterion,
) -> Result<bool, ReportError> {
    let mut any = false;
    for spec in family.instances(t)? {
        any = true;
        let report = curvature_report(&spec)?;
        if !sampson_check(&report, criterion).passes {
            return Ok(false);
        }
    }
    if !any {
        return Err(ReportError::Mismatch(format!(
            "no instances of {} at parameter {t}",
            family.key()
        )));
    }
    Ok(true)
}

/// Smallest parameter value (`n`, or `p+q`) at which every entry of the
/// family passes the criterion. Verified to persist up to `sweep_max`
/// (the bound decreases in the parameter, so a later failure would signal
/// an internal error).
pub fn sampson_threshold(
    family: ThresholdFamily,
    criterion: SampsonCriterion,
    sweep_max: usize,
) -> Result<usize, ReportError> {
    let mut threshold = None;
    for t in family.min_parameter()..=family.max_parameter(sweep_max) {
        let passes = all_pass_at(family, t, criterion)?;
        match threshold {
            None if passes => threshold = Some(t),
            Some(t0) if !passes => {
                return Err(ReportError::Mismatch(format!(
                    "{} fails at {t} after passing at {t0}",
                    family.key()
                )));
            }
            _ => {}
        }
    }
    threshold.ok_or_else(|| {
        ReportError::Mismatch(format!(
            "{} never passes {} up to parameter {sweep_max}",
            family.key(),
            criterion
        ))
    })
}

/// One row of the bound table.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub type_label: String,
    pub name: String,
    pub rank: usize,
    pub dim: usize,
    pub bound: Rational,
    /// The closed-form value from the embedded data, asserted equal to the
    /// computed bound during assembly.
    pub closed_form: Rational,
}

impl TableRow {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.type_label,
            "space": self.name,
            "rank": self.rank,
            "dimension": self.dim,
            "bound": fmt_rat(&self.bound),
            "closed_form": fmt_rat(&self.closed_form),
        })
    }
}

/// Assemble the bound table over the given sweeps: one row per catalog
/// entry, each computed bound checked exactly against its closed form.
pub fn bound_table(limits: CatalogLimits) -> Result<Vec<TableRow>, ReportError> {
    let e = expectations();
    let mut rows = Vec::new();
    for spec in catalog(limits)? {
        let report = curvature_report(&spec)?;
        let closed_form = e.bound_for(&spec).ok_or_else(|| {
            ReportError::Mismatch(format!(
                "no closed-form bound recorded for {}",
                spec.type_label()
            ))
        })?;
        if closed_form != *report.upper_bound() {
            return Err(ReportError::Mismatch(format!(
                "{}: computed bound {} differs from closed form {}",
                spec.type_label(),
                fmt_rat(report.upper_bound()),
                fmt_rat(&closed_form)
            )));
        }
        if let Some(rank) = e.rank_for(&spec) {
            if rank != spec.meta_rank() {
                return Err(ReportError::Mismatch(format!(
                    "{}: rank column {rank} differs from metadata {}",
                    spec.type_label(),
                    spec.meta_rank()
                )));
            }
        }
        if let Some(dim) = e.dim_for(&spec) {
            if dim != spec.meta_dim() {
                return Err(ReportError::Mismatch(format!(
                    "{}: dimension column {dim} differs from metadata {}",
                    spec.type_label(),
                    spec.meta_dim()
                )));
            }
        }
        rows.push(TableRow {
            type_label: spec.type_label(),
            name: spec.name(),
            rank: spec.meta_rank(),
            dim: spec.meta_dim(),
            bound: report.upper_bound().clone(),
            closed_form,
        });
    }
    if rows.is_empty() {
        return Err(ReportError::Mismatch("empty table selection".to_string()));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    fn report_for(label: &str, params: Params) -> CurvatureReport {
        let spec = resolve(label.parse().unwrap(), params).unwrap();
        curvature_report(&spec).unwrap()
    }

    #[test]
    fn reports_carry_bound_ricci_and_metadata() {
        let fi = report_for("FI", Params::None);
        assert_eq!(fmt_rat(fi.upper_bound()), "1/9");
        assert_eq!(fmt_rat(fi.ricci()), "1/2");
        assert_eq!(fi.space().meta_rank(), 4);
        assert_eq!(fi.space().meta_dim(), 28);
        assert_eq!(fi.lower_bound(), LowerBound::Zero);

        let rank1 = report_for("BDI", Params::PQ(1, 5));
        assert_eq!(fmt_rat(rank1.upper_bound()), "1/8");
        assert_eq!(rank1.lower_bound(), LowerBound::NotComputed);

        let group = report_for("GROUP(G2)", Params::None);
        assert_eq!(fmt_rat(group.upper_bound()), "1/4");
        assert_eq!(fmt_rat(group.ricci()), "1/4");
        assert_eq!(group.space().meta_dim(), 14);
    }

    #[test]
    fn reports_mention_dual_curvature_range() {
        let r = report_for("EIV", Params::None);
        assert!(r
            .notes()
            .iter()
            .any(|n| n.contains("[-1/24, 0]") && n.contains("-1/2")));
        let cii = report_for("CII", Params::PQ(1, 2));
        assert!(cii.notes().iter().any(|n| n.contains("parity rule")));
    }

    #[test]
    fn criterion_checks_are_exact() {
        let ai8 = report_for("AI", Params::N(8));
        let v = sampson_check(&ai8, SampsonCriterion::Conservative);
        assert!(v.passes);
        assert!(v.margin.is_zero());

        let ai4 = report_for("AI", Params::N(4));
        let v = sampson_check(&ai4, SampsonCriterion::Conservative);
        assert!(!v.passes);
        assert_eq!(fmt_rat(&v.margin), "-1/2");

        let g = report_for("G", Params::None);
        assert!(!sampson_check(&g, SampsonCriterion::Conservative).passes);
        let relaxed = sampson_check(&g, SampsonCriterion::Relaxed);
        assert!(relaxed.passes);
        assert_eq!(fmt_rat(&relaxed.margin), "0");
    }

    #[test]
    fn thresholds_match_reference_list() {
        for family in ThresholdFamily::ALL {
            let expected = *expectations()
                .conservative_thresholds()
                .get(family.key())
                .unwrap();
            let got = sampson_threshold(family, SampsonCriterion::Conservative, 12).unwrap();
            assert_eq!(got, expected, "{}", family.key());
        }
    }

    #[test]
    fn thresholds_are_sharp() {
        for family in [
            ThresholdFamily::AI,
            ThresholdFamily::AIII,
            ThresholdFamily::BdiRank1,
            ThresholdFamily::BdiRankAbove1,
            ThresholdFamily::DIII,
            ThresholdFamily::CI,
            ThresholdFamily::CII,
        ] {
            let t = sampson_threshold(family, SampsonCriterion::Conservative, 12).unwrap();
            assert!(t > family.min_parameter(), "{}", family.key());
            assert!(!all_pass_at(family, t - 1, SampsonCriterion::Conservative).unwrap());
        }
        // The quaternionic family passes from its smallest member on.
        let t =
            sampson_threshold(ThresholdFamily::AII, SampsonCriterion::Conservative, 12).unwrap();
        assert_eq!(t, ThresholdFamily::AII.min_parameter());
    }

    #[test]
    fn exceptional_entries_pass_conservative() {
        for label in expectations().conservative_pass() {
            let r = report_for(label, Params::None);
            assert!(
                sampson_check(&r, SampsonCriterion::Conservative).passes,
                "{label}"
            );
        }
    }

    #[test]
    fn table_rows_match_closed_forms() {
        let rows = bound_table(CatalogLimits {
            max_n: 6,
            max_pq: 7,
        })
        .unwrap();
        for row in &rows {
            assert_eq!(row.bound, row.closed_form, "{}", row.type_label);
        }
        let fii = rows.iter().find(|r| r.type_label == "FII").unwrap();
        assert_eq!(
            (fii.rank, fii.dim, fmt_rat(&fii.bound).as_str()),
            (1, 16, "1/18")
        );
        assert_eq!(fii.name, "");
        let dyn_row = rows
            .iter()
            .find(|r| r.type_label == "DIII" && r.name == "SO(12)/U(6)")
            .unwrap();
        assert_eq!(fmt_rat(&dyn_row.bound), "1/10");
    }

    #[test]
    fn report_json_shape() {
        let r = report_for("G", Params::None);
        let v = r.to_json();
        assert_eq!(v["bound"], "1/4");
        assert_eq!(v["ricci"], "1/2");
        assert_eq!(v["rank"], 2);
        assert_eq!(v["dim"], 8);
        assert_eq!(v["sampson"]["conservative"], false);
        assert_eq!(v["sampson"]["relaxed"], true);
        assert_eq!(v["sampson"]["margins"]["relaxed"], "0");
        assert_eq!(v["lower_bound"], "0");
        assert_eq!(v["space"]["case_tag"], "INNER");

        let rank1 = report_for("FII", Params::None);
        assert_eq!(rank1.to_json()["lower_bound"], "NOT_COMPUTED");
    }
}
