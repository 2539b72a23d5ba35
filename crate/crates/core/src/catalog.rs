//! Classification catalogs, embedded reference tables, audits and rendering.
//!
//! A catalog row is the full analysis of one monomial curve: invariants,
//! canonical model, gonality and every scroll of the least useful dimension
//! containing the canonical model. One-point catalogs walk all numerical
//! semigroups of the requested genera; two-point catalogs replay the
//! exponent tuples of the embedded two-point tables.
//!
//! The embedded tables are the published classification tables, verbatim.
//! [`audit_fixture`] recomputes every row and reports the fields that
//! disagree; rows known to disagree carry an `expected_flag` marker.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chow::{SurfaceRecord, SurfaceStructure};
use crate::curve::{normalize, same_up_to_reversal, CurveAnalysis, CurveError, Flags, MonomialCurve};
use crate::scroll::{min_scroll_dimension, scroll_structures};
use crate::semigroup::{enumerate_genus_bounded, SemigroupError, DEFAULT_MAX_GENUS};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown fixture {0:?}; known fixtures: {known}", known = FIXTURE_NAMES.join(", "))]
    UnknownFixture(String),
    #[error("malformed fixture {name}: {source}")]
    MalformedFixture { name: String, source: serde_json::Error },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Which curves a catalog ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularPoints {
    /// One curve per numerical semigroup, singular only at `0`.
    #[default]
    One,
    /// The exponent tuples of the two-point reference tables.
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Filters {
    pub non_gorenstein: bool,
    /// Keep rows whose canonical model lies on a scroll of exactly this
    /// dimension and on none smaller (surfaces count from 2).
    pub scroll_dim: Option<u32>,
    pub singular_points: SingularPoints,
}

/// One scroll containing the canonical model.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct StructureSummary {
    pub dims: Vec<u32>,
    pub step: u32,
    pub ell: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Computed,
    Fixture,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub exponents: Vec<u32>,
    pub genus: u32,
    pub gonality: u32,
    pub eta: u32,
    pub mu: u32,
    pub g_prime: u32,
    pub flags: Flags,
    pub canonical: Vec<u32>,
    pub structures: Vec<StructureSummary>,
    #[serde(skip)]
    pub class: &'static str,
    #[serde(skip)]
    pub scroll_dim: u32,
    #[serde(skip)]
    pub provenance: Provenance,
}

/// Dimension of the smallest scroll worth reporting: a single progression
/// is a rational normal curve, which still lies on surface scrolls.
pub fn scroll_dimension(canonical: &[u32]) -> u32 {
    min_scroll_dimension(canonical).max(2)
}

/// Scrolls of dimension `d` containing the curve with exponents `set`.
pub fn structures(set: &[u32], d: u32) -> Vec<StructureSummary> {
    let mut out: Vec<StructureSummary> = scroll_structures(set, d)
        .iter()
        .map(|s| StructureSummary { dims: s.scroll_type().dims().to_vec(), step: s.step(), ell: s.ell() })
        .collect();
    out.sort();
    out
}

impl CatalogRow {
    pub fn from_analysis(a: CurveAnalysis, provenance: Provenance) -> Self {
        let scroll_dim = scroll_dimension(&a.canonical);
        let structures = structures(&a.canonical, scroll_dim);
        CatalogRow {
            class: a.class_label(),
            exponents: a.exponents,
            genus: a.genus,
            gonality: a.gonality,
            eta: a.eta,
            mu: a.mu,
            g_prime: a.g_prime,
            flags: a.flags,
            canonical: a.canonical,
            structures,
            scroll_dim,
            provenance,
        }
    }

    pub fn from_curve(c: &MonomialCurve, provenance: Provenance) -> Result<Self, CatalogError> {
        Ok(Self::from_analysis(c.analyze()?, provenance))
    }

    fn keep(&self, f: &Filters) -> bool {
        (!f.non_gorenstein || self.eta > 0) && f.scroll_dim.is_none_or(|d| d == self.scroll_dim)
    }
}

/// Builds the catalog for `genus_range`, deterministic and order-stable.
pub fn build_catalog(genus_range: RangeInclusive<u32>, filters: &Filters) -> Result<Vec<CatalogRow>, CatalogError> {
    let (lo, hi) = (*genus_range.start(), *genus_range.end());
    if hi > DEFAULT_MAX_GENUS {
        return Err(SemigroupError::BoundExceeded { requested: hi, bound: DEFAULT_MAX_GENUS }.into());
    }
    let curves: Vec<MonomialCurve> = match filters.singular_points {
        SingularPoints::One => {
            let mut curves = Vec::new();
            for g in lo.max(1)..=hi {
                curves.extend(enumerate_genus_bounded(g, DEFAULT_MAX_GENUS)?.map(|s| MonomialCurve::one_point(&s)));
            }
            curves
        }
        SingularPoints::Two => {
            let mut curves = Vec::new();
            for fixture in all_fixtures()? {
                if fixture.kind != FixtureKind::TwoPoint || !genus_range.contains(&fixture.genus) {
                    continue;
                }
                for row in &fixture.rows {
                    curves.push(MonomialCurve::new(&row.curve)?);
                }
            }
            curves
        }
    };
    let provenance = match filters.singular_points {
        SingularPoints::One => Provenance::Computed,
        SingularPoints::Two => Provenance::Fixture,
    };
    let rows: Result<Vec<CatalogRow>, CatalogError> =
        curves.par_iter().map(|c| CatalogRow::from_curve(c, provenance)).collect();
    let mut rows: Vec<CatalogRow> = rows?.into_iter().filter(|r| r.keep(filters)).collect();
    // enumeration order within a genus is already canonical
    rows.sort_by_key(|r| r.genus);
    Ok(rows)
}

/// The record [`check_theorem21`](crate::chow::check_theorem21) consumes:
/// invariants of `c` with every surface scroll containing its canonical
/// model.
pub fn surface_record(c: &MonomialCurve, a: &CurveAnalysis) -> Result<SurfaceRecord, CatalogError> {
    let gonality_canonical = match c.canonical_model()? {
        Some(model) => model.curve.gonality(),
        None => 1,
    };
    let structures =
        structures(&a.canonical, 2).into_iter().map(|s| SurfaceStructure { m: s.dims[0], ell: s.ell }).collect();
    Ok(SurfaceRecord {
        g: a.genus,
        g_prime: a.g_prime,
        eta: a.eta,
        mu: a.mu,
        kunz: a.flags.kunz,
        almost_gorenstein: a.flags.almost_gorenstein,
        non_gorenstein_points: a.non_gorenstein_points,
        gonality: a.gonality,
        gonality_canonical,
        structures,
    })
}

// ---------------------------------------------------------------------------
// fixtures

pub const FIXTURE_NAMES: [&str; 8] = [
    "surface-g4",
    "surface-g5",
    "surface-g6",
    "two-point-g4",
    "two-point-g5",
    "threefold-g6",
    "threefold-g7",
    "threefold-g8",
];

fn fixture_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "surface-g4" => include_str!("../fixtures/surface-g4.json"),
        "surface-g5" => include_str!("../fixtures/surface-g5.json"),
        "surface-g6" => include_str!("../fixtures/surface-g6.json"),
        "two-point-g4" => include_str!("../fixtures/two-point-g4.json"),
        "two-point-g5" => include_str!("../fixtures/two-point-g5.json"),
        "threefold-g6" => include_str!("../fixtures/threefold-g6.json"),
        "threefold-g7" => include_str!("../fixtures/threefold-g7.json"),
        "threefold-g8" => include_str!("../fixtures/threefold-g8.json"),
        _ => return None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureKind {
    Surface,
    TwoPoint,
    Threefold,
}

/// A reference table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub kind: FixtureKind,
    pub genus: u32,
    pub rows: Vec<FixtureRow>,
}

/// One table row. `canonical` holds the printed exponents of `C′`, in the
/// printed order and possibly negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub curve: Vec<u32>,
    pub gonality: u32,
    pub canonical: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mn: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_flag: Option<ExpectedFlag>,
}

/// A known disagreement between a table row and the recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedFlag {
    pub fields: Vec<String>,
    pub note: String,
}

pub fn load_fixture(name: &str) -> Result<Fixture, CatalogError> {
    let src = fixture_source(name).ok_or_else(|| CatalogError::UnknownFixture(name.to_string()))?;
    serde_json::from_str(src).map_err(|source| CatalogError::MalformedFixture { name: name.to_string(), source })
}

pub fn all_fixtures() -> Result<Vec<Fixture>, CatalogError> {
    FIXTURE_NAMES.iter().map(|n| load_fixture(n)).collect()
}

// ---------------------------------------------------------------------------
// audit

/// One field of a fixture row that disagrees with the recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldMismatch {
    pub field: String,
    pub fixture: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlaggedRow {
    pub row: usize,
    pub curve: Vec<u32>,
    pub mismatches: Vec<FieldMismatch>,
    /// The row carries an `expected_flag` covering exactly these fields.
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    #[serde(skip)]
    pub fixture: String,
    pub matched: usize,
    pub flagged: Vec<FlaggedRow>,
}

impl AuditReport {
    pub fn total(&self) -> usize {
        self.matched + self.flagged.len()
    }

    /// Flagged rows not pre-registered in the fixture.
    pub fn unexpected(&self) -> impl Iterator<Item = &FlaggedRow> {
        self.flagged.iter().filter(|f| !f.expected)
    }

    /// Pre-registered flags that did not reproduce.
    pub fn missing_expected(&self, fixture: &Fixture) -> Vec<usize> {
        fixture
            .rows
            .iter()
            .enumerate()
            .filter(|(i, r)| r.expected_flag.is_some() && !self.flagged.iter().any(|f| f.row == *i))
            .map(|(i, _)| i)
            .collect()
    }
}

fn show<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

/// Recomputes every row of the named table.
pub fn audit_fixture(name: &str) -> Result<AuditReport, CatalogError> {
    let fixture = load_fixture(name)?;
    audit(&fixture)
}

pub fn audit(fixture: &Fixture) -> Result<AuditReport, CatalogError> {
    let results: Result<Vec<Vec<FieldMismatch>>, CatalogError> =
        fixture.rows.par_iter().map(|row| audit_row(fixture, row)).collect();
    let mut report = AuditReport { fixture: fixture.name.clone(), matched: 0, flagged: Vec::new() };
    for (i, (row, mismatches)) in fixture.rows.iter().zip(results?).enumerate() {
        if mismatches.is_empty() {
            report.matched += 1;
            continue;
        }
        let expected = row.expected_flag.as_ref().is_some_and(|e| {
            let mut a: Vec<&str> = e.fields.iter().map(String::as_str).collect();
            let mut b: Vec<&str> = mismatches.iter().map(|m| m.field.as_str()).collect();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        });
        report.flagged.push(FlaggedRow { row: i, curve: row.curve.clone(), mismatches, expected });
    }
    Ok(report)
}

fn audit_row(fixture: &Fixture, row: &FixtureRow) -> Result<Vec<FieldMismatch>, CatalogError> {
    let curve = MonomialCurve::new(&row.curve)?;
    let a = curve.analyze()?;
    let mut out = Vec::new();
    let mut check = |field: &str, ok: bool, fixture: String, computed: String| {
        if !ok {
            out.push(FieldMismatch { field: field.to_string(), fixture, computed });
        }
    };

    check("genus", a.genus == fixture.genus, fixture.genus.to_string(), a.genus.to_string());
    let printed = normalize(row.canonical.iter().copied());
    check("canonical", same_up_to_reversal(&printed, &a.canonical), show(&printed), show(&a.canonical));
    check("gonality", a.gonality == row.gonality, row.gonality.to_string(), a.gonality.to_string());

    match fixture.kind {
        FixtureKind::Surface => {
            if let Some(class) = &row.class {
                check("class", a.class_label() == class, class.clone(), a.class_label().to_string());
            }
            let pairs: Vec<(u32, u32)> = structures(&a.canonical, 2).iter().map(|s| (s.dims[0], s.ell)).collect();
            if let (Some(m), Some(ell)) = (row.m, row.ell) {
                let ms: Vec<u32> = pairs.iter().map(|p| p.0).collect();
                let ells: Vec<u32> = pairs.iter().filter(|p| p.0 == m).map(|p| p.1).collect();
                if !ms.contains(&m) {
                    check("m", false, m.to_string(), show(&pairs));
                } else {
                    check("ell", ells.contains(&ell), format!("(m, ℓ) = ({m}, {ell})"), show(&pairs));
                }
            }
        }
        FixtureKind::TwoPoint => {
            if let Some([d0, dinf]) = row.delta {
                let computed = [curve.branches().delta_zero(), curve.branches().delta_infinity()];
                check("delta", computed == [d0, dinf], show([d0, dinf]), show(computed));
            }
            if let Some(m) = row.m {
                let ms: Vec<u32> = structures(&a.canonical, 2).iter().map(|s| s.dims[0]).collect();
                check("m", ms.contains(&m), m.to_string(), show(&ms));
            }
        }
        FixtureKind::Threefold => {
            let dim = min_scroll_dimension(&a.canonical);
            check("scroll_dim", dim == 3, "3".into(), dim.to_string());
            if let Some(mn) = row.mn {
                let mns: Vec<[u32; 2]> = structures(&a.canonical, 3).iter().map(|s| [s.dims[0], s.dims[1]]).collect();
                check("mn", mns.contains(&mn), show(mn), show(&mns));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// rendering

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(format!("unknown format {other:?}; expected json, csv or md")),
        }
    }
}

/// `(1:t^a:t^b:…)`, omitting a leading zero exponent.
pub fn projective(exponents: &[u32]) -> String {
    let mut s = String::from("(1");
    for &e in exponents.iter().filter(|&&e| e != 0) {
        match e {
            1 => s.push_str(":t"),
            _ => write!(s, ":t^{e}").unwrap(),
        }
    }
    s.push(')');
    s
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn structure_label(s: &StructureSummary) -> String {
    format!("S({}) r={} ℓ={}", join(&s.dims, ","), s.step, s.ell)
}

pub const CSV_HEADER: [&str; 11] = [
    "exponents",
    "genus",
    "gonality",
    "eta",
    "mu",
    "g_prime",
    "class",
    "canonical",
    "scroll_dim",
    "structures",
    "provenance",
];

pub fn render_rows(rows: &[CatalogRow], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).unwrap();
            for r in rows {
                let structures: Vec<String> = r.structures.iter().map(structure_label).collect();
                let provenance = match r.provenance {
                    Provenance::Computed => "computed",
                    Provenance::Fixture => "fixture",
                };
                w.write_record([
                    join(&r.exponents, " "),
                    r.genus.to_string(),
                    r.gonality.to_string(),
                    r.eta.to_string(),
                    r.mu.to_string(),
                    r.g_prime.to_string(),
                    r.class.to_string(),
                    join(&r.canonical, " "),
                    r.scroll_dim.to_string(),
                    structures.join("; "),
                    provenance.to_string(),
                ])
                .unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Markdown => {
            let mut s = String::from("| C | g | gn | class | C′ | structures |\n|---|---|---|---|---|---|\n");
            for r in rows {
                let structures: Vec<String> = r.structures.iter().map(structure_label).collect();
                writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} |",
                    projective(&r.exponents),
                    r.genus,
                    r.gonality,
                    r.class,
                    projective(&r.canonical),
                    structures.join("<br>")
                )
                .unwrap();
            }
            s
        }
    }
}

pub fn render_report(report: &AuditReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(report).expect("report serializes") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["row", "curve", "field", "fixture", "computed", "expected"]).unwrap();
            for f in &report.flagged {
                for m in &f.mismatches {
                    w.write_record([
                        f.row.to_string(),
                        join(&f.curve, " "),
                        m.field.clone(),
                        m.fixture.clone(),
                        m.computed.clone(),
                        f.expected.to_string(),
                    ])
                    .unwrap();
                }
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Markdown => {
            let mut s = format!("**{}**: {}/{} rows matched\n", report.fixture, report.matched, report.total());
            if !report.flagged.is_empty() {
                s.push_str("\n| row | C | field | table | computed | expected |\n|---|---|---|---|---|---|\n");
                for f in &report.flagged {
                    for m in &f.mismatches {
                        writeln!(
                            s,
                            "| {} | {} | {} | {} | {} | {} |",
                            f.row,
                            projective(&f.curve),
                            m.field,
                            m.fixture,
                            m.computed,
                            if f.expected { "yes" } else { "no" }
                        )
                        .unwrap();
                    }
                }
            }
            s
        }
    }
}
