//! Whole-catalog verification.
//!
//! Seven independent suites re-derive everything the library claims:
//! closed-form reproduction of the bound table, embedded reference root
//! lists, the Killing normalization identities, agreement between the
//! direct and exhaustive bound routes, rank/dimension metadata, criterion
//! thresholds, and structural invariants of the projection machinery.
//! The `verify` subcommand and the acceptance suite both run [`run_all`].

use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::{
    catalog, partition_roots, resolve, CaseTag, CatalogLimits, Params, SpaceLabel, SpaceSpec,
};
use crate::exact::{fmt_rat, parse_rat, rat_int, Rational};
use crate::expectations::expectations;
use crate::report::{
    all_pass_at, curvature_report, sampson_check, sampson_threshold, SampsonCriterion,
    ThresholdFamily,
};
use crate::restricted::{brute_force_bound, max_restricted_sq_length, restricted_sq_length};
use crate::root_system::{Family, LieType, RootSystem};

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    /// Stable kebab-case suite name.
    pub name: &'static str,
    /// Number of individual comparisons made.
    pub checked: usize,
    /// One entry per failed comparison, human-readable.
    pub failures: Vec<String>,
}

impl CriterionResult {
    fn new(name: &'static str) -> Self {
        CriterionResult {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.checked += 1;
        self.failures.push(msg);
    }
}

/// Label plus conventional name, so failure messages pin the exact
/// instance (the bare label leaves family parameters ambiguous).
fn entry_name(spec: &SpaceSpec) -> String {
    let name = spec.name();
    if name.is_empty() {
        spec.type_label()
    } else {
        format!("{} {}", spec.type_label(), name)
    }
}

/// Run every suite in order and collect the results.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        check_bound_table(),
        check_reference_root_lists(),
        check_killing_normalization(),
        check_oracle_equivalence(),
        check_rank_dimension(),
        check_sampson_thresholds(),
        check_structural_properties(),
    ]
}

/// The published sweep of the bound table: every classical family over its
/// documented parameter window plus the twelve exceptional entries.
fn table_sweep() -> Result<Vec<SpaceSpec>, crate::catalog::CatalogError> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push(resolve(SpaceLabel::AI, Params::N(n))?);
    }
    for n in 2..=6 {
        out.push(resolve(SpaceLabel::AII, Params::N(n))?);
    }
    for s in 2..=12 {
        for p in 1..=s / 2 {
            out.push(resolve(SpaceLabel::AIII, Params::PQ(p, s - p))?);
        }
    }
    for s in 5..=12 {
        for p in 1..=s / 2 {
            out.push(resolve(SpaceLabel::BDI, Params::PQ(p, s - p))?);
        }
    }
    for n in 4..=8 {
        out.push(resolve(SpaceLabel::DIII, Params::N(n))?);
    }
    for n in 2..=10 {
        out.push(resolve(SpaceLabel::CI, Params::N(n))?);
    }
    for s in 2..=8 {
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
    Ok(out)
}

/// Every computed bound over the published sweep equals its closed form by
/// exact rational equality; rank and dimension columns match where the
/// closed forms are on record.
pub fn check_bound_table() -> CriterionResult {
    let mut out = CriterionResult::new("bound-table-reproduction");
    let e = expectations();
    let sweep = match table_sweep() {
        Ok(s) => s,
        Err(err) => {
            out.fail(format!("sweep construction failed: {err}"));
            return out;
        }
    };
    for spec in &sweep {
        let label = entry_name(spec);
        let report = match curvature_report(spec) {
            Ok(r) => r,
            Err(err) => {
                out.fail(format!("{label}: {err}"));
                continue;
            }
        };
        match e.bound_for(spec) {
            Some(closed) => out.check(*report.upper_bound() == closed, || {
                format!(
                    "{label}: computed bound {} differs from closed form {}",
                    fmt_rat(report.upper_bound()),
                    fmt_rat(&closed)
                )
            }),
            None => out.fail(format!("{label}: no closed-form bound on record")),
        }
        if let Some(rank) = e.rank_for(spec) {
            out.check(rank == spec.meta_rank(), || {
                format!(
                    "{label}: cataloged rank {} differs from closed form {rank}",
                    spec.meta_rank()
                )
            });
        }
        if let Some(dim) = e.dim_for(spec) {
            out.check(dim == spec.meta_dim(), || {
                format!(
                    "{label}: cataloged dimension {} differs from closed form {dim}",
                    spec.meta_dim()
                )
            });
        }
    }
    out
}

/// Enumerated positive roots of the embedded reference types equal the
/// recorded coefficient lists as sets, with the expected cardinalities.
pub fn check_reference_root_lists() -> CriterionResult {
    let mut out = CriterionResult::new("reference-root-lists");
    let e = expectations();
    for name in e.reference_root_types() {
        let lie_type: LieType = match name.parse() {
            Ok(t) => t,
            Err(err) => {
                out.fail(format!("{name}: not a recognized type: {err}"));
                continue;
            }
        };
        let rs = RootSystem::new(lie_type);
        let listed = e.positive_roots(name).unwrap_or(&[]);
        let listed_set: BTreeSet<&[i64]> = listed.iter().map(|r| r.as_slice()).collect();
        let computed: BTreeSet<&[i64]> = rs.positive().iter().map(|r| r.coeffs()).collect();
        out.check(listed_set.len() == listed.len(), || {
            format!("{name}: the recorded list contains duplicates")
        });
        out.check(listed.len() == rs.lie_type().positive_root_count(), || {
            format!(
                "{name}: {} recorded roots, expected {}",
                listed.len(),
                rs.lie_type().positive_root_count()
            )
        });
        for row in listed {
            out.check(computed.contains(row.as_slice()), || {
                format!("{name}: recorded root {row:?} was not enumerated")
            });
        }
        out.check(computed == listed_set, || {
            format!("{name}: enumerated roots do not match the recorded list")
        });
    }
    out
}

/// All simple types through rank 12.
fn all_types_up_to(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for (family, min) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
    ] {
        for rank in min..=max_rank {
            out.push(LieType::new(family, rank).expect("classical rank in range"));
        }
    }
    for (family, rank) in [
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ] {
        if rank <= max_rank {
            out.push(LieType::new(family, rank).expect("exceptional rank is fixed"));
        }
    }
    out
}

/// The two defining identities of the trace-form normalization, checked in
/// exact integer arithmetic on every simple type through rank 12: for each
/// root, its squared length times the sum of squared pairing integers over
/// the positive roots is 2; and the form itself equals twice the sum of
/// rank-one products over the positive roots.
pub fn check_killing_normalization() -> CriterionResult {
    let mut out = CriterionResult::new("killing-normalization");
    for lie_type in all_types_up_to(12) {
        let rs = RootSystem::new(lie_type);
        let l = rs.rank();
        let ig = rs.int_gram();
        let denom = rs.gram_denom();
        let pos = rs.positive();
        let m = pos.len();
        // s[b][j] = denom * (beta_b, alpha_j); pair[a][b] = denom * (beta_a, beta_b)
        let s: Vec<Vec<i64>> = pos
            .iter()
            .map(|beta| {
                (0..l)
                    .map(|j| (0..l).map(|k| beta.coeff(k) * ig[k][j]).sum())
                    .collect()
            })
            .collect();
        let pair: Vec<Vec<i64>> = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| (0..l).map(|j| pos[a].coeff(j) * s[b][j]).sum())
                    .collect()
            })
            .collect();
        for a in 0..m {
            let n_alpha = pair[a][a];
            let mut sum_sq = 0i64;
            let mut integral = true;
            for row in &pair {
                let num = 2 * row[a];
                if num % n_alpha != 0 {
                    integral = false;
                    break;
                }
                let c = num / n_alpha;
                sum_sq += c * c;
            }
            out.check(integral && n_alpha * sum_sq == 2 * denom, || {
                format!("{lie_type}: length normalization fails at root {}", pos[a])
            });
        }
        for i in 0..l {
            for j in i..l {
                let total: i64 = (0..m).map(|b| s[b][i] * s[b][j]).sum();
                out.check(2 * total == denom * ig[i][j], || {
                    format!(
                        "{lie_type}: trace identity fails at simple pair ({}, {})",
                        i + 1,
                        j + 1
                    )
                });
            }
        }
    }
    out
}

/// The exhaustive projection scan and the direct computation agree on every
/// catalog entry where both are defined, up to underlying rank 10.
pub fn check_oracle_equivalence() -> CriterionResult {
    let mut out = CriterionResult::new("oracle-equivalence");
    let entries = match catalog(CatalogLimits::default()) {
        Ok(v) => v,
        Err(err) => {
            out.fail(format!("catalog construction failed: {err}"));
            return out;
        }
    };
    for spec in &entries {
        let computable = matches!(
            spec.datum().case_tag(),
            CaseTag::Inner | CaseTag::SplitAi | CaseTag::PureOuter | CaseTag::GroupManifold
        );
        if !computable || spec.lie_type().rank() > 10 {
            continue;
        }
        let label = entry_name(spec);
        match (max_restricted_sq_length(spec), brute_force_bound(spec)) {
            (Ok(fast), Ok(brute)) => out.check(*fast.max_sq_length() == brute, || {
                format!(
                    "{label}: direct bound {} differs from exhaustive bound {}",
                    fmt_rat(fast.max_sq_length()),
                    fmt_rat(&brute)
                )
            }),
            (Err(err), _) => out.fail(format!("{label}: direct route failed: {err}")),
            (_, Err(err)) => out.fail(format!("{label}: exhaustive route failed: {err}")),
        }
    }
    out
}

/// Computed rank (sequence length or vector-part dimension) matches the
/// cataloged rank wherever it is computed, and the noncompact root count
/// matches the cataloged dimension on every inner entry.
pub fn check_rank_dimension() -> CriterionResult {
    let mut out = CriterionResult::new("rank-dimension-cross-checks");
    let entries = match catalog(CatalogLimits::default()) {
        Ok(v) => v,
        Err(err) => {
            out.fail(format!("catalog construction failed: {err}"));
            return out;
        }
    };
    for spec in &entries {
        let label = entry_name(spec);
        let tag = spec.datum().case_tag();
        if matches!(tag, CaseTag::Inner | CaseTag::SplitAi | CaseTag::PureOuter) {
            match max_restricted_sq_length(spec) {
                Ok(res) => match res.computed_rank() {
                    Some(rank) => out.check(rank == spec.meta_rank(), || {
                        format!(
                            "{label}: computed rank {rank} differs from cataloged rank {}",
                            spec.meta_rank()
                        )
                    }),
                    None => out.fail(format!("{label}: rank not computed for a resolved case")),
                },
                Err(err) => out.fail(format!("{label}: {err}")),
            }
        }
        if tag == CaseTag::Inner {
            let rs = RootSystem::new(spec.lie_type());
            match partition_roots(&rs, spec.datum()) {
                Ok(part) => out.check(part.noncompact().len() == spec.meta_dim(), || {
                    format!(
                        "{label}: {} noncompact roots differ from cataloged dimension {}",
                        part.noncompact().len(),
                        spec.meta_dim()
                    )
                }),
                Err(err) => out.fail(format!("{label}: {err}")),
            }
        }
    }
    out
}

/// Threshold sweeps under the conservative criterion reproduce the recorded
/// minimal parameters with sharp boundaries on both sides; every recorded
/// singleton passes; the recorded boundary case fails the conservative
/// criterion and passes the relaxed one with margin exactly zero.
pub fn check_sampson_thresholds() -> CriterionResult {
    let mut out = CriterionResult::new("sampson-thresholds");
    let e = expectations();
    let recorded = e.conservative_thresholds();
    for family in ThresholdFamily::ALL {
        let key = family.key();
        let Some(&want) = recorded.get(key) else {
            out.fail(format!("{key}: no recorded threshold"));
            continue;
        };
        match sampson_threshold(family, SampsonCriterion::Conservative, 12) {
            Ok(got) => out.check(got == want, || {
                format!("{key}: computed threshold {got} differs from recorded {want}")
            }),
            Err(err) => {
                out.fail(format!("{key}: {err}"));
                continue;
            }
        }
        match all_pass_at(family, want, SampsonCriterion::Conservative) {
            Ok(ok) => out.check(ok, || {
                format!("{key}: fails at its recorded threshold {want}")
            }),
            Err(err) => out.fail(format!("{key}: {err}")),
        }
        if want > family.min_parameter() {
            match all_pass_at(family, want - 1, SampsonCriterion::Conservative) {
                Ok(ok) => out.check(!ok, || {
                    format!("{key}: already passes below the threshold, at {}", want - 1)
                }),
                Err(err) => out.fail(format!("{key}: {err}")),
            }
        }
    }
    for label in e.conservative_pass() {
        let spec = label
            .parse::<SpaceLabel>()
            .map_err(|err| format!("{label}: {err}"))
            .and_then(|l| resolve(l, Params::None).map_err(|err| format!("{label}: {err}")));
        match spec.and_then(|s| curvature_report(&s).map_err(|err| format!("{label}: {err}"))) {
            Ok(report) => {
                let verdict = sampson_check(&report, SampsonCriterion::Conservative);
                out.check(verdict.passes, || {
                    format!(
                        "{label}: expected to pass the conservative criterion, margin {}",
                        fmt_rat(&verdict.margin)
                    )
                });
            }
            Err(msg) => out.fail(msg),
        }
    }
    let boundary = e.relaxed_boundary();
    let spec = boundary
        .label
        .parse::<SpaceLabel>()
        .map_err(|err| format!("{}: {err}", boundary.label))
        .and_then(|l| resolve(l, Params::None).map_err(|err| format!("{}: {err}", boundary.label)));
    match spec
        .and_then(|s| curvature_report(&s).map_err(|err| format!("{}: {err}", boundary.label)))
    {
        Ok(report) => {
            let conservative = sampson_check(&report, SampsonCriterion::Conservative);
            let relaxed = sampson_check(&report, SampsonCriterion::Relaxed);
            out.check(!conservative.passes, || {
                format!(
                    "{}: unexpectedly meets the conservative criterion",
                    boundary.label
                )
            });
            out.check(relaxed.passes, || {
                format!("{}: fails the relaxed criterion", boundary.label)
            });
            out.check(relaxed.margin == rat_int(0), || {
                format!(
                    "{}: relaxed margin {} is not zero",
                    boundary.label,
                    fmt_rat(&relaxed.margin)
                )
            });
            let recorded_margin = parse_rat(&boundary.margin);
            out.check(recorded_margin.as_ref() == Some(&relaxed.margin), || {
                format!(
                    "{}: relaxed margin {} differs from recorded {}",
                    boundary.label,
                    fmt_rat(&relaxed.margin),
                    boundary.margin
                )
            });
        }
        Err(msg) => out.fail(msg),
    }
    out
}

/// Monotonicity bucket for an entry: a family series name plus the swept
/// parameter, for families where the bound is a function of one parameter.
fn sweep_bucket(spec: &SpaceSpec) -> Option<(String, usize)> {
    match (spec.label(), spec.params()) {
        (SpaceLabel::AI, Params::N(n)) => Some(("AI".into(), n)),
        (SpaceLabel::AII, Params::N(n)) => Some(("AII".into(), n)),
        (SpaceLabel::DIII, Params::N(n)) => Some(("DIII".into(), n)),
        (SpaceLabel::CI, Params::N(n)) => Some(("CI".into(), n)),
        (SpaceLabel::AIII, Params::PQ(p, q)) => Some(("AIII".into(), p + q)),
        (SpaceLabel::CII, Params::PQ(p, q)) => Some(("CII".into(), p + q)),
        (SpaceLabel::BDI, Params::PQ(1, q)) => Some(("BDI rank one".into(), q + 1)),
        (SpaceLabel::BDI, Params::PQ(p, q)) => Some(("BDI".into(), p + q)),
        (SpaceLabel::Group(t), _) => match t.family() {
            Family::A | Family::B | Family::C | Family::D => {
                Some((format!("group series {}", t.family()), t.rank()))
            }
            _ => None,
        },
        _ => None,
    }
}

/// Structural invariants over the full default sweep: sequences are
/// strongly orthogonal, the diagram involution is an isometry of the form,
/// projection never increases squared length, entries sharing a parameter
/// value share the bound, and the bound strictly decreases along every
/// family series.
pub fn check_structural_properties() -> CriterionResult {
    let mut out = CriterionResult::new("structural-properties");
    let entries = match catalog(CatalogLimits::default()) {
        Ok(v) => v,
        Err(err) => {
            out.fail(format!("catalog construction failed: {err}"));
            return out;
        }
    };
    let mut buckets: BTreeMap<String, BTreeMap<usize, Vec<Rational>>> = BTreeMap::new();
    for spec in &entries {
        let label = entry_name(spec);
        let rs = RootSystem::new(spec.lie_type());
        let datum = spec.datum();
        let res = match max_restricted_sq_length(spec) {
            Ok(r) => r,
            Err(err) => {
                out.fail(format!("{label}: {err}"));
                continue;
            }
        };

        let gammas = res.gammas();
        for g in gammas {
            out.check(rs.is_root(g), || {
                format!("{label}: sequence entry {g} is not a root")
            });
        }
        for a in 0..gammas.len() {
            for b in a + 1..gammas.len() {
                let (ga, gb) = (&gammas[a], &gammas[b]);
                let strongly = rs.int_pairing(ga, gb) == 0
                    && !rs.is_root(&ga.add(gb))
                    && !rs.is_root(&ga.sub(gb));
                out.check(strongly, || {
                    format!("{label}: sequence roots {ga} and {gb} are not strongly orthogonal")
                });
            }
        }

        let theta = datum.theta0();
        if !theta.is_identity() {
            let ig = rs.int_gram();
            let l = rs.rank();
            let mut bad = None;
            for i in 0..l {
                for j in 0..l {
                    if ig[theta.image(i)][theta.image(j)] != ig[i][j] {
                        bad = Some((i + 1, j + 1));
                    }
                }
            }
            out.check(bad.is_none(), || {
                format!(
                    "{label}: the involution distorts the form at simple pair {:?}",
                    bad.unwrap()
                )
            });
        }

        match datum.case_tag() {
            CaseTag::Inner => match partition_roots(&rs, datum) {
                Ok(part) => {
                    for alpha in part.noncompact() {
                        match restricted_sq_length(&rs, alpha, gammas, &[]) {
                            Ok(value) => out.check(value <= rs.sq_length(alpha), || {
                                format!("{label}: projection lengthens root {alpha}")
                            }),
                            Err(err) => out.fail(format!("{label}: {err}")),
                        }
                    }
                }
                Err(err) => out.fail(format!("{label}: {err}")),
            },
            CaseTag::PureOuter => match partition_roots(&rs, datum) {
                Ok(part) => {
                    for alpha in part.moved() {
                        match restricted_sq_length(&rs, alpha, &[], res.vector_basis()) {
                            Ok(value) => out.check(value <= rs.sq_length(alpha), || {
                                format!("{label}: projection lengthens root {alpha}")
                            }),
                            Err(err) => out.fail(format!("{label}: {err}")),
                        }
                    }
                }
                Err(err) => out.fail(format!("{label}: {err}")),
            },
            _ => {}
        }

        if let Some((series, t)) = sweep_bucket(spec) {
            buckets
                .entry(series)
                .or_default()
                .entry(t)
                .or_default()
                .push(res.max_sq_length().clone());
        }
    }
    for (series, by_t) in &buckets {
        let mut values: Vec<(usize, &Rational)> = Vec::new();
        for (t, bounds) in by_t {
            let first = &bounds[0];
            out.check(bounds.iter().all(|v| v == first), || {
                format!("{series}: entries at parameter {t} disagree on the bound")
            });
            values.push((*t, first));
        }
        for w in values.windows(2) {
            out.check(w[1].1 < w[0].1, || {
                format!(
                    "{series}: bound does not decrease from parameter {} to {}",
                    w[0].0, w[1].0
                )
            });
        }
    }
    out
}
