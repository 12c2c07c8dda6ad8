//! Subcommand bodies. Each returns the text to print and an exit code, so
//! the binary stays a thin argument parser.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use pxp::format::{
    build_candidate, equation_template, segre_oracle, BasketEntry, CY3Candidate, CandidateJson,
    EquationTemplate, FormatWeights, OrbifoldPoint, RationalJson,
};
use pxp::qseries::expand;
use pxp::search::{enumerate, Filter, SearchConfig, SearchJson, SearchResult};
use pxp::stratum::{
    candidate_strata, crepant_h11, type_one_centers, type_one_plane, validate_basket, HodgeRecord,
    StrataReport, ValidationReport,
};
use pxp::unproj::{
    ci_degeneration, family_table, generic_model_check, higher_embedding_diagnostic, node_count,
    node_count_raw, project, project_auto, tj_classes, CiReport, Divisor, FamilyInputs,
    FamilyTable, ModelStatus, PfaffianModel, RefKind, TJFormat,
};
use serde::Serialize;

use crate::fixtures::{Fixture, FixtureSet, WorkedCase};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

pub type CliResult = Result<Outcome, CliError>;

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Fixture set plus a lazily computed search at the fixture bound.
pub struct Session {
    pub fixtures: FixtureSet,
    table: OnceLock<SearchResult>,
}

impl Session {
    pub fn new(fixtures: FixtureSet) -> Self {
        Session {
            fixtures,
            table: OnceLock::new(),
        }
    }

    pub fn table_search(&self) -> &SearchResult {
        self.table
            .get_or_init(|| enumerate(&SearchConfig::new(self.fixtures.search.max_weight_sum)))
    }
}

/// A candidate together with whatever fixture data applies to it.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub candidate: CY3Candidate,
    pub row: Option<Fixture>,
    pub worked: Option<WorkedCase>,
}

/// `a11;r2,r3;c2,c3` as a format.
pub fn parse_format(s: &str) -> Result<FormatWeights, CliError> {
    let bad = || CliError::Usage(format!("expected a11;r2,r3;c2,c3, got {s:?}"));
    let parts: Vec<&str> = s.split(';').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let a11: u32 = parts[0].parse().map_err(|_| bad())?;
    let pair = |p: &str| -> Result<(u32, u32), CliError> {
        let v = parse_list(p).map_err(|_| bad())?;
        match v[..] {
            [x, y] => Ok((x, y)),
            _ => Err(bad()),
        }
    };
    if a11 == 0 {
        return Err(bad());
    }
    Ok(FormatWeights::new(a11, pair(parts[1])?, pair(parts[2])?))
}

fn parse_list(s: &str) -> Result<Vec<u32>, std::num::ParseIntError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(|x| x.trim().parse()).collect()
}

/// Resolve a candidate reference: a fixture row number, a candidate JSON
/// file, or `a11;r2,r3;c2,c3;cones;ci`.
pub fn resolve(session: &Session, reference: &str) -> Result<Resolved, CliError> {
    let fx = &session.fixtures;
    if let Ok(id) = reference.trim().parse::<u32>() {
        if let Some(ex) = fx.excluded(id) {
            return Err(CliError::Usage(format!("row {id} is not available: {}", ex.note)));
        }
        let row = fx
            .row(id)
            .ok_or_else(|| CliError::Usage(format!("unknown candidate row {id}")))?
            .clone();
        let worked = fx.worked(id).cloned();
        let mut candidate = match &worked {
            Some(w) => build_candidate(&w.format, &w.cones, &w.ci)
                .map_err(|e| CliError::Failure(format!("row {id}: {e}")))?,
            None => {
                let g = session
                    .table_search()
                    .groups
                    .iter()
                    .find(|g| {
                        let c = g.representative();
                        (c.equation_degrees.clone(), c.ambient.clone()) == row.key()
                    })
                    .ok_or_else(|| CliError::Failure(format!("row {id} not found by the search")))?;
                g.representative().clone()
            }
        };
        candidate.basket = row.basket.clone();
        return Ok(Resolved {
            candidate,
            row: Some(row),
            worked,
        });
    }
    let path = Path::new(reference);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {reference}: {e}")))?;
        let j: CandidateJson = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{reference}: {e}")))?;
        let candidate = CY3Candidate::from_json(&j).map_err(|e| CliError::Failure(e.to_string()))?;
        return Ok(Resolved {
            candidate,
            row: None,
            worked: None,
        });
    }
    let parts: Vec<&str> = reference.split(';').collect();
    if parts.len() == 5 {
        let fw = parse_format(&parts[..3].join(";"))?;
        let bad = |_| CliError::Usage(format!("bad candidate reference {reference:?}"));
        let cones = parse_list(parts[3]).map_err(bad)?;
        let ci = parse_list(parts[4]).map_err(bad)?;
        let candidate = build_candidate(&fw, &cones, &ci).map_err(|e| CliError::Failure(e.to_string()))?;
        return Ok(Resolved {
            candidate,
            row: None,
            worked: None,
        });
    }
    Err(CliError::Usage(format!("unknown candidate {reference:?}")))
}

// ---------------------------------------------------------------------------
// search

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowMatch {
    pub row_id: u32,
    pub group_id: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub expected_groups: usize,
    pub found_groups: usize,
    pub rows: Vec<RowMatch>,
    /// Groups matching no fixture row.
    pub unmatched_groups: Vec<String>,
}

impl FixtureCheck {
    pub fn matched(&self) -> usize {
        self.rows.iter().filter(|r| r.group_id.is_some()).count()
    }

    pub fn passed(&self) -> bool {
        self.matched() == self.rows.len() && self.found_groups == self.expected_groups
    }
}

pub fn check_fixtures(res: &SearchResult, fx: &FixtureSet) -> FixtureCheck {
    let mut used = BTreeSet::new();
    let rows = fx
        .rows
        .iter()
        .map(|r| {
            let g = res.groups.iter().find(|g| {
                g.equation_degrees().contains(&r.equation_degrees) && g.ambient() == r.ambient
            });
            if let Some(g) = g {
                used.insert(g.id());
            }
            RowMatch {
                row_id: r.row_id,
                group_id: g.map(|g| g.id()),
            }
        })
        .collect();
    let expected_groups = if res.config.max_weight_sum == fx.search.max_weight_sum {
        fx.search.hilbert_series_count
    } else {
        res.groups.len()
    };
    FixtureCheck {
        expected_groups,
        found_groups: res.groups.len(),
        rows,
        unmatched_groups: res.groups.iter().map(|g| g.id()).filter(|id| !used.contains(id)).collect(),
    }
}

#[derive(Serialize)]
struct SearchOutput<'a> {
    #[serde(flatten)]
    search: &'a SearchJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixture_check: Option<&'a FixtureCheck>,
}

pub fn run_search(
    session: &Session,
    max_weight_sum: u32,
    filter: Filter,
    check: bool,
    out: Option<&Path>,
    fmt: OutputFormat,
) -> CliResult {
    let cfg = SearchConfig {
        filter,
        ..SearchConfig::new(max_weight_sum)
    };
    let res = enumerate(&cfg);
    let json = res.to_json();
    let fc = check.then(|| check_fixtures(&res, &session.fixtures));
    let doc = to_json(&SearchOutput {
        search: &json,
        fixture_check: fc.as_ref(),
    });
    if let Some(p) = out {
        std::fs::write(p, &doc).map_err(|e| CliError::Failure(format!("cannot write {}: {e}", p.display())))?;
    }
    let mut s = String::new();
    match fmt {
        OutputFormat::Json => s = doc,
        OutputFormat::Text => {
            for g in &res.groups {
                let c = g.representative();
                let types = g
                    .strata
                    .as_ref()
                    .map(|r| points_text(&r.types().into_keys().collect::<Vec<_>>()))
                    .unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{}  {:<44} D^3 = {:<6} members {:>3}  {}",
                    g.id(),
                    c.embedding_string(),
                    c.d3.to_string(),
                    g.members.len(),
                    types
                );
            }
            let _ = writeln!(s, "{} groups from {} candidates", res.groups.len(), res.enumerated);
            if let Some(fc) = &fc {
                for r in &fc.rows {
                    let _ = writeln!(
                        s,
                        "row {:>2}: {}",
                        r.row_id,
                        r.group_id.as_deref().map_or("MISSING".to_string(), |g| format!("matched {g}"))
                    );
                }
                for g in &fc.unmatched_groups {
                    let _ = writeln!(s, "group {g}: no fixture row");
                }
                let _ = writeln!(
                    s,
                    "{} groups (expected {}), {}/{} fixtures matched",
                    fc.found_groups,
                    fc.expected_groups,
                    fc.matched(),
                    fc.rows.len()
                );
            }
        }
    }
    let code = match &fc {
        Some(fc) if !fc.passed() => EXIT_FAILURE,
        _ => EXIT_OK,
    };
    Ok(Outcome { code, stdout: s })
}

fn points_text(ps: &[OrbifoldPoint]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn basket_text(b: &[BasketEntry]) -> String {
    if b.is_empty() {
        return "none (smooth)".into();
    }
    b.iter()
        .map(|e| {
            if e.count == 1 {
                e.point().to_string()
            } else {
                format!("{}x{}", e.count, e.point())
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Clone, Debug, Serialize)]
pub struct TypeOneCenter {
    pub point: OrbifoldPoint,
    pub plane: [u32; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub candidate: CandidateJson,
    pub row_id: Option<u32>,
    pub embedding: String,
    pub weight_matrix: [[u32; 3]; 3],
    pub numerator: String,
    pub series: Vec<i64>,
    pub validation: ValidationReport,
    pub strata: StrataReport,
    pub type_one_centers: Vec<TypeOneCenter>,
    pub h11_resolved: Option<i64>,
    /// Uses the stored h21 of the fixture row.
    pub hodge_stored: Option<HodgeRecord>,
    pub template: EquationTemplate,
}

pub fn analyze(r: &Resolved) -> AnalyzeReport {
    let c = &r.candidate;
    let series = expand(&c.hilbert, 10)
        .coeffs()
        .iter()
        .map(|q| i64::try_from(q.to_integer()).expect("small coefficient"))
        .collect();
    AnalyzeReport {
        candidate: c.to_json(),
        row_id: r.row.as_ref().map(|f| f.row_id),
        embedding: c.embedding_string(),
        weight_matrix: c.weight_matrix().a,
        numerator: c.numerator().to_string(),
        series,
        validation: validate_basket(c, &c.basket),
        strata: candidate_strata(c),
        type_one_centers: type_one_centers(c, &c.basket)
            .into_iter()
            .map(|p| TypeOneCenter {
                plane: type_one_plane(&c.ambient, &p).expect("type-I"),
                point: p,
            })
            .collect(),
        h11_resolved: crepant_h11(&c.basket, 2).ok(),
        hodge_stored: r.row.as_ref().and_then(|f| HodgeRecord::new(&c.basket, f.h21).ok()),
        template: equation_template(c),
    }
}

pub fn run_analyze(session: &Session, reference: &str, fmt: OutputFormat) -> CliResult {
    let r = resolve(session, reference)?;
    let a = analyze(&r);
    if fmt == OutputFormat::Json {
        return Ok(Outcome::ok(to_json(&a)));
    }
    let c = &r.candidate;
    let mut s = String::new();
    if let Some(id) = a.row_id {
        let _ = writeln!(s, "row {id}");
    }
    let _ = writeln!(s, "{}", a.embedding);
    let _ = writeln!(s, "format {}  cones {:?}  ci {:?}", c.format, c.cones, c.ci_degrees);
    for row in &a.weight_matrix {
        let _ = writeln!(s, "  {:?}", row);
    }
    let _ = writeln!(s, "numerator: {}", a.numerator);
    let _ = writeln!(s, "series: {:?}", a.series);
    let _ = writeln!(s, "D^3 = {}", c.d3);
    let _ = writeln!(s, "basket: {}", basket_text(&c.basket));
    for p in &a.validation.points {
        let _ = writeln!(s, "  {} {:?} {}", p.point.point(), p.verdict, p.notes.join("; "));
    }
    match &a.strata.defect {
        Some(d) => {
            let _ = writeln!(s, "strata: {d}");
        }
        None => {
            let types: Vec<OrbifoldPoint> = a.strata.types().into_keys().collect();
            let _ = writeln!(
                s,
                "strata: isolated orbifold points {}",
                if types.is_empty() { "none".into() } else { points_text(&types) }
            );
        }
    }
    for t in &a.type_one_centers {
        let _ = writeln!(s, "type-I centre {} -> plane P({},{},{})", t.point, t.plane[0], t.plane[1], t.plane[2]);
    }
    if let Some(h) = a.h11_resolved {
        let _ = writeln!(s, "h11 of crepant resolution: {h}");
    }
    if let Some(h) = &a.hodge_stored {
        let _ = writeln!(s, "h21 = {} [stored], e(X) = {}", h.h21, h.euler);
    }
    let _ = write!(s, "{}", a.template);
    if !s.ends_with('\n') {
        s.push('\n');
    }
    Ok(Outcome::ok(s))
}

// ---------------------------------------------------------------------------
// project

fn center_point(r: &Resolved, k: Option<u32>) -> Result<OrbifoldPoint, CliError> {
    let c = &r.candidate;
    let mut pts: Vec<OrbifoldPoint> = c.basket.iter().map(BasketEntry::point).collect();
    if pts.is_empty() {
        pts = candidate_strata(c).types().into_keys().collect();
    }
    match k {
        Some(k) => pts
            .into_iter()
            .find(|p| p.r == k)
            .ok_or_else(|| CliError::Usage(format!("no orbifold point of index {k}"))),
        None => {
            if let Some(w) = &r.worked {
                return Ok(w.center.point());
            }
            pts.into_iter()
                .find(|p| type_one_plane(&c.ambient, p).is_some())
                .ok_or_else(|| CliError::Failure("no numerical type-I centre".into()))
        }
    }
}

/// Projection from the chosen centre, with its 0-based cell.
pub fn model_for(r: &Resolved, k: Option<u32>) -> Result<(PfaffianModel, (usize, usize)), CliError> {
    let p = center_point(r, k)?;
    let fail = |e: pxp::unproj::UnprojError| CliError::Failure(e.to_string());
    match &r.worked {
        Some(w) if w.center.point() == p => {
            let cell = w.cell0();
            Ok((project(&r.candidate, &p, cell).map_err(fail)?, cell))
        }
        _ => project_auto(&r.candidate, &p).map_err(fail),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectReport {
    pub center: OrbifoldPoint,
    /// 1-based.
    pub cell: [usize; 2],
    pub b: Vec<RationalJson>,
    pub entries: Vec<Vec<i64>>,
    pub pf_degrees: [i64; 5],
    pub adjunction: i64,
    pub ambient7: Vec<u32>,
    pub divisor: Divisor,
    pub status: ModelStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci_degeneration: Option<CiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci_error: Option<String>,
}

pub fn project_report(m: &PfaffianModel, center: OrbifoldPoint, cell: (usize, usize)) -> ProjectReport {
    let status = generic_model_check(m);
    let (ci, ci_error) = match status {
        ModelStatus::ZeroEntry { i, j } => match ci_degeneration(m, (i, j)) {
            Ok(r) => (Some(r), None),
            Err(e) => (None, Some(e.to_string())),
        },
        _ => (None, None),
    };
    ProjectReport {
        center,
        cell: [cell.0 + 1, cell.1 + 1],
        b: m.b.iter().map(RationalJson::from).collect(),
        entries: m.entry_rows(),
        pf_degrees: m.pf_degrees(),
        adjunction: m.adjunction(),
        ambient7: m.ambient7.clone(),
        divisor: m.divisor.clone(),
        status,
        ci_degeneration: ci,
        ci_error,
    }
}

pub fn run_project(session: &Session, reference: &str, center: Option<u32>, fmt: OutputFormat) -> CliResult {
    let r = resolve(session, reference)?;
    let p = center_point(&r, center)?;
    let (m, cell) = model_for(&r, center)?;
    let rep = project_report(&m, p.clone(), cell);
    if fmt == OutputFormat::Json {
        return Ok(Outcome::ok(to_json(&rep)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "projection from {} at matrix cell ({}, {})", p, rep.cell[0], rep.cell[1]);
    let _ = writeln!(s, "{m}");
    let _ = writeln!(s, "generic model: {:?}", rep.status);
    if let Some(ci) = &rep.ci_degeneration {
        let o = &ci.chosen;
        let _ = writeln!(
            s,
            "Pf{} (degree {}) eliminates the coordinate m{}{}: complete intersection of degrees {:?} in P({})",
            o.pfaffian,
            o.degree,
            o.paired_entry.0,
            o.paired_entry.1,
            o.ci_degrees,
            pxp::format::exp_notation(&o.ambient)
        );
        if ci.ambiguous {
            let _ = writeln!(s, "warning: {} Pfaffians could eliminate a coordinate", ci.options.len());
        }
    }
    if let Some(e) = &rep.ci_error {
        let _ = writeln!(s, "{e}");
    }
    Ok(Outcome::ok(s))
}

// ---------------------------------------------------------------------------
// tomjerry

#[derive(Clone, Debug, Serialize)]
pub struct FormatLine {
    pub format: TJFormat,
    pub raw: String,
    pub nodes: Result<u64, String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TomJerryReport {
    pub classes: Vec<Vec<TJFormat>>,
    pub formats: Vec<FormatLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<FamilyTable>,
}

pub fn format_lines(m: &PfaffianModel) -> Vec<FormatLine> {
    TJFormat::all()
        .into_iter()
        .map(|f| FormatLine {
            format: f,
            raw: node_count_raw(m, f).to_string(),
            nodes: node_count(m, f).map_err(|e| e.to_string()),
            warnings: higher_embedding_diagnostic(m, f),
        })
        .collect()
}

/// Family table for a row, using the worked-case metadata where present.
pub fn tomjerry(
    r: &Resolved,
    center: Option<u32>,
    reference: Option<(i64, RefKind)>,
) -> Result<TomJerryReport, CliError> {
    let (m, _) = model_for(r, center)?;
    let reference = reference.or_else(|| {
        let w = r.worked.as_ref()?;
        Some((w.euler_reference?, w.reference_kind?))
    });
    let table = match reference {
        Some((e, kind)) => {
            let realizable = match &r.worked {
                Some(w) => Some(w.realizable_formats().map_err(CliError::Failure)?),
                None => None,
            };
            let extra = r
                .worked
                .as_ref()
                .map(|w| w.low_codim.iter().map(|l| (l.name.clone(), l.nodes)).collect())
                .unwrap_or_default();
            let inputs = FamilyInputs {
                model: m.clone(),
                realizable,
                euler_reference: e,
                reference_kind: kind,
                extra,
            };
            Some(family_table(&r.candidate, &inputs).map_err(|e| CliError::Failure(e.to_string()))?)
        }
        None => None,
    };
    Ok(TomJerryReport {
        classes: tj_classes(&m),
        formats: format_lines(&m),
        table,
    })
}

pub fn run_tomjerry(
    session: &Session,
    reference: &str,
    center: Option<u32>,
    euler_ref: Option<i64>,
    ref_nodes: Option<u64>,
    fmt: OutputFormat,
) -> CliResult {
    let r = resolve(session, reference)?;
    let kind = match ref_nodes {
        Some(n) => RefKind::KnownFamily { nodes: n },
        None => RefKind::GenericY,
    };
    if ref_nodes.is_some() && euler_ref.is_none() {
        return Err(CliError::Usage("--ref-nodes needs --euler-ref".into()));
    }
    let rep = tomjerry(&r, center, euler_ref.map(|e| (e, kind)))?;
    if fmt == OutputFormat::Json {
        return Ok(Outcome::ok(to_json(&rep)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{:<6} {:>8} {:>8}", "format", "h2", "nodes");
    for l in &rep.formats {
        let n = match &l.nodes {
            Ok(n) => n.to_string(),
            Err(_) => "-".into(),
        };
        let _ = writeln!(s, "{:<6} {:>8} {:>8}", l.format.to_string(), l.raw, n);
        for w in &l.warnings {
            let _ = writeln!(s, "       warning: {w}");
        }
    }
    let classes: Vec<String> = rep
        .classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    let _ = writeln!(s, "classes: {}", classes.join(" "));
    match &rep.table {
        Some(t) => {
            let _ = writeln!(s, "{t}");
        }
        None => {
            let _ = writeln!(s, "no Euler reference: pass --euler-ref");
        }
    }
    Ok(Outcome::ok(s))
}

// ---------------------------------------------------------------------------
// report

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cell<T> {
    pub value: T,
    /// `Some(agrees)` for computed cells, `None` for stored ones.
    pub check: Option<bool>,
}

impl<T: std::fmt::Display> Cell<T> {
    fn render(&self) -> String {
        match self.check {
            Some(true) => format!("{} ✓", self.value),
            Some(false) => format!("{} ✗", self.value),
            None => format!("{} [stored]", self.value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub row_id: u32,
    pub embedding: Cell<String>,
    pub points: Cell<String>,
    pub d3: Cell<String>,
    pub h21: Cell<i64>,
    pub h11_resolved: Cell<i64>,
    pub families: Cell<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub rows: Vec<SummaryRow>,
    pub notes: Vec<String>,
}

impl Summary {
    /// Computed cells that disagree with the fixtures.
    pub fn mismatches(&self) -> usize {
        self.rows
            .iter()
            .map(|r| {
                [
                    r.embedding.check,
                    r.points.check,
                    r.d3.check,
                    r.h21.check,
                    r.h11_resolved.check,
                    r.families.check,
                ]
                .iter()
                .filter(|c| **c == Some(false))
                .count()
            })
            .sum()
    }
}

/// Number of Tom/Jerry families for a worked row; a row with no nodal
/// degeneration keeps only its P2xP2 family.
pub fn worked_family_count(r: &Resolved) -> Result<Option<usize>, CliError> {
    let Some(w) = &r.worked else { return Ok(None) };
    if w.realizable.is_empty() && w.low_codim.is_empty() {
        return Ok(Some(1));
    }
    let rep = tomjerry(r, None, None)?;
    Ok(rep.table.map(|t| t.family_count))
}

pub fn summary(session: &Session) -> Result<Summary, CliError> {
    let fx = &session.fixtures;
    let res = session.table_search();
    let mut rows = Vec::new();
    for f in &fx.rows {
        let group = res
            .groups
            .iter()
            .find(|g| g.equation_degrees().contains(&f.equation_degrees) && g.ambient() == f.ambient);
        let fixture_embedding = format!(
            "X_{{{}}} in P({})",
            pxp::format::exp_notation(&f.equation_degrees),
            pxp::format::exp_notation(&f.ambient)
        );
        let declared: BTreeSet<OrbifoldPoint> = f.basket.iter().map(BasketEntry::point).collect();
        let (points_ok, d3_ok) = match group {
            Some(g) => {
                let found: BTreeSet<OrbifoldPoint> = g
                    .strata
                    .as_ref()
                    .map(|s| s.types().into_keys().collect())
                    .unwrap_or_default();
                (found == declared, g.representative().d3 == f.d3.to_rational())
            }
            None => (false, false),
        };
        let h11 = crepant_h11(&f.basket, 2).ok();
        let families = match fx.worked(f.row_id) {
            Some(_) => {
                let r = resolve(session, &f.row_id.to_string())?;
                let n = worked_family_count(&r)?;
                Cell {
                    value: n.unwrap_or(0),
                    check: Some(n == Some(f.families)),
                }
            }
            None => Cell {
                value: f.families,
                check: None,
            },
        };
        rows.push(SummaryRow {
            row_id: f.row_id,
            embedding: Cell {
                value: fixture_embedding,
                check: Some(group.is_some()),
            },
            points: Cell {
                value: basket_text(&f.basket),
                check: Some(points_ok),
            },
            d3: Cell {
                value: format!("{}", f.d3.to_rational()),
                check: Some(d3_ok),
            },
            h21: Cell {
                value: f.h21,
                check: None,
            },
            h11_resolved: Cell {
                value: h11.unwrap_or(-1),
                check: Some(h11 == Some(f.h11_resolved)),
            },
            families,
        });
    }
    let notes = fx
        .excluded
        .iter()
        .map(|e| format!("row {} omitted: {}", e.row_id, e.note))
        .collect();
    Ok(Summary { rows, notes })
}

/// Table-style rendering of [`Summary`].
pub fn render_summary(s: &Summary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3}  {:<44} {:<34} {:<10} {:<13} {:<7} #Fam.",
        "HS", "Embedding", "Orbifold points", "D^3", "h21(X)", "h11(^X)"
    );
    for r in &s.rows {
        let _ = writeln!(
            out,
            "{:>3}  {:<44} {:<34} {:<10} {:<13} {:<7} {}",
            r.row_id,
            r.embedding.render(),
            r.points.render(),
            r.d3.render(),
            r.h21.render(),
            r.h11_resolved.render(),
            r.families.render()
        );
    }
    for n in &s.notes {
        let _ = writeln!(out, "{n}");
    }
    let _ = writeln!(out, "{} rows, {} computed cells disagree", s.rows.len(), s.mismatches());
    out
}

pub fn run_report(session: &Session, fmt: OutputFormat) -> CliResult {
    let s = summary(session)?;
    let code = if s.mismatches() == 0 { EXIT_OK } else { EXIT_FAILURE };
    let stdout = match fmt {
        OutputFormat::Json => to_json(&s),
        OutputFormat::Text => render_summary(&s),
    };
    Ok(Outcome { code, stdout })
}

// ---------------------------------------------------------------------------
// oracle

pub fn run_oracle(format: &str, order: usize, fmt: OutputFormat) -> CliResult {
    let fw = parse_format(format)?;
    let s = segre_oracle(&fw, order);
    let coeffs: Vec<String> = s.coeffs().iter().map(|q| q.to_string()).collect();
    Ok(Outcome::ok(match fmt {
        OutputFormat::Json => to_json(&serde_json::json!({
            "format": fw,
            "order": order,
            "coefficients": s.coeffs().iter().map(RationalJson::from).collect::<Vec<_>>(),
        })),
        OutputFormat::Text => format!("{}\n", coeffs.join(" ")),
    }))
}
