use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use canonical_scrolls::catalog::{
    audit_fixture, build_catalog, projective, render_report, render_rows, scroll_dimension, structures, Filters,
    Format, SingularPoints, StructureSummary,
};
use canonical_scrolls::chow::{pa_from_bundle, Ambient, DivisorClass, RankTwoBundleClass};
use canonical_scrolls::curve::{SheafData, SingularLocus};
use canonical_scrolls::scroll::{min_scroll_dimension, minor_check, scroll_structures};
use canonical_scrolls::{CurveAnalysis, MonomialCurve};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_DISCREPANCY: u8 = 3;

/// Canonical models, gonality and scroll geometry of rational monomial curves.
#[derive(Debug, Parser)]
#[command(name = "canonical-scrolls", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full invariants of one curve.
    Analyze {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, value_enum, default_value_t = ShortFormat::Json)]
        format: ShortFormat,
    },
    /// Exponents of the canonical model.
    Canonical {
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Least degree of a monomial pencil, with a witness.
    Gonality {
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Scrolls containing the canonical model, up to a given dimension.
    Scrolls {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value_t = 3)]
        max_dim: u32,
    },
    /// Classification table over a genus range.
    Catalog {
        /// `4`, `4..8` or `4..=8`; both ends inclusive.
        #[arg(long, value_parser = parse_genus_range)]
        genus: (u32, u32),
        #[arg(long)]
        non_gorenstein: bool,
        #[arg(long)]
        scroll_dim: Option<u32>,
        #[arg(long, value_enum, default_value_t = PointsArg::One)]
        singular_points: PointsArg,
        #[arg(long, value_parser = parse_format, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute an embedded reference table.
    Audit {
        #[arg(long)]
        fixture: String,
        /// Exit with status 3 if any row is flagged.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_parser = parse_format, default_value = "json")]
        format: Format,
    },
    /// Closed-form evaluations on smooth scrolls.
    Formula {
        #[command(subcommand)]
        which: FormulaCommand,
    },
}

#[derive(Debug, Subcommand)]
enum FormulaCommand {
    /// χ and h⁰ of O(hH + fF) on the balanced d-fold scroll of degree e.
    Chi {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
        #[arg(long, allow_negative_numbers = true)]
        h: i64,
        #[arg(long, allow_negative_numbers = true)]
        f: i64,
    },
    /// Arithmetic genus of the zero locus of a rank-two bundle with
    /// c₁ = uH + vF and c₂ = wH² + zHF on the threefold scroll of degree e.
    PaBundle {
        #[arg(long)]
        e: u32,
        #[arg(long, allow_negative_numbers = true)]
        u: i64,
        #[arg(long, allow_negative_numbers = true)]
        v: i64,
        #[arg(long, allow_negative_numbers = true)]
        w: i64,
        #[arg(long, allow_negative_numbers = true)]
        z: i64,
    },
}

#[derive(Debug, Args)]
struct CurveArg {
    /// Comma-separated exponents of `(1 : t^a₁ : … : t^aₙ)`.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    exponents: Vec<u32>,
}

impl CurveArg {
    fn curve(&self) -> Result<MonomialCurve, Failure> {
        MonomialCurve::new(&self.exponents).map_err(invalid)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShortFormat {
    Json,
    Md,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PointsArg {
    One,
    Two,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_genus_range(s: &str) -> Result<(u32, u32), String> {
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let g = num(s)?;
            (g, g)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INVALID, message: e.to_string() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Analyze { curve, format } => analyze(&curve.curve()?, format),
        Command::Canonical { curve } => canonical(&curve.curve()?),
        Command::Gonality { curve } => gonality(&curve.curve()?),
        Command::Scrolls { curve, max_dim } => scrolls(&curve.curve()?, max_dim),
        Command::Catalog { genus, non_gorenstein, scroll_dim, singular_points, format, out } => {
            let filters = Filters {
                non_gorenstein,
                scroll_dim,
                singular_points: match singular_points {
                    PointsArg::One => SingularPoints::One,
                    PointsArg::Two => SingularPoints::Two,
                },
            };
            let rows = build_catalog(genus.0..=genus.1, &filters).map_err(invalid)?;
            let text = render_rows(&rows, format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Audit { fixture, strict, format } => {
            let report = audit_fixture(&fixture).map_err(invalid)?;
            let text = render_report(&report, format);
            if strict && !report.flagged.is_empty() {
                print!("{text}");
                return Err(Failure {
                    code: EXIT_DISCREPANCY,
                    message: format!("{} of {} rows flagged", report.flagged.len(), report.total()),
                });
            }
            Ok(text)
        }
        Command::Formula { which } => formula(which),
    }
}

/// A JSON number when it fits, a string otherwise.
fn big(x: &BigInt) -> serde_json::Value {
    i64::try_from(x).map_or_else(|_| x.to_string().into(), Into::into)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes") + "\n"
}

#[derive(Serialize)]
struct AnalyzeOutput {
    #[serde(flatten)]
    analysis: CurveAnalysis,
    class: &'static str,
    delta: [u32; 2],
    canonical_sheaf: SheafData,
    scroll_dim: u32,
    structures: Vec<StructureSummary>,
}

fn analyze(c: &MonomialCurve, format: ShortFormat) -> Result<String, Failure> {
    let analysis = c.analyze().map_err(invalid)?;
    let canonical_sheaf = c.sheaf_degree_h0(&c.canonical_differential_exponents()).map_err(invalid)?;
    let scroll_dim = scroll_dimension(&analysis.canonical);
    let out = AnalyzeOutput {
        class: analysis.class_label(),
        delta: [c.branches().delta_zero(), c.branches().delta_infinity()],
        canonical_sheaf,
        scroll_dim,
        structures: structures(&analysis.canonical, scroll_dim),
        analysis,
    };
    Ok(match format {
        ShortFormat::Json => to_json(&out),
        ShortFormat::Md => analyze_markdown(&out),
    })
}

fn analyze_markdown(o: &AnalyzeOutput) -> String {
    let a = &o.analysis;
    let mut s = String::from("| invariant | value |\n|---|---|\n");
    let flags = &a.flags;
    let rows: Vec<(&str, String)> = vec![
        ("C", projective(&a.exponents)),
        ("g", a.genus.to_string()),
        ("δ₀, δ∞", format!("{}, {}", o.delta[0], o.delta[1])),
        ("g′", a.g_prime.to_string()),
        ("η", a.eta.to_string()),
        ("μ", a.mu.to_string()),
        ("class", o.class.to_string()),
        (
            "flags",
            [
                ("Gorenstein", flags.gorenstein),
                ("Kunz", flags.kunz),
                ("almost Gorenstein", flags.almost_gorenstein),
                ("nearly Gorenstein", flags.nearly_gorenstein),
                ("nearly normal", flags.nearly_normal),
            ]
            .iter()
            .filter(|f| f.1)
            .map(|f| f.0)
            .collect::<Vec<_>>()
            .join(", "),
        ),
        ("gonality", format!("{} (pencil O⟨1, t^{}⟩)", a.gonality, a.gonality_pencil)),
        ("C′", projective(&a.canonical)),
        ("hyperelliptic", a.hyperelliptic.to_string()),
        ("deg ω, h⁰(ω)", format!("{}, {}", o.canonical_sheaf.degree, o.canonical_sheaf.h0)),
        ("scroll dimension", o.scroll_dim.to_string()),
    ];
    for (k, v) in rows {
        writeln!(s, "| {k} | {v} |").unwrap();
    }
    for st in &o.structures {
        let dims: Vec<String> = st.dims.iter().map(u32::to_string).collect();
        writeln!(s, "| scroll | S({}), step {}, ℓ = {} |", dims.join(","), st.step, st.ell).unwrap();
    }
    s
}

#[derive(Serialize)]
struct CanonicalOutput {
    exponents: Vec<u32>,
    differentials: Vec<i64>,
    canonical: Vec<u32>,
    projective: String,
    hyperelliptic: bool,
}

fn canonical(c: &MonomialCurve) -> Result<String, Failure> {
    if c.genus() == 0 {
        return Err(invalid("curve has genus 0"));
    }
    let canonical = c.canonical_exponents().map_err(invalid)?;
    let hyperelliptic = c.canonical_model().map_err(invalid)?.is_some_and(|m| m.degree_of_map > 1);
    Ok(to_json(&CanonicalOutput {
        exponents: c.exponents().to_vec(),
        differentials: c.canonical_differential_exponents(),
        projective: projective(&canonical),
        canonical,
        hyperelliptic,
    }))
}

#[derive(Serialize)]
struct GonalityOutput {
    exponents: Vec<u32>,
    genus: u32,
    gonality: u32,
    pencil: i64,
    window: i64,
    /// False when both points are singular: the value is then the least
    /// degree among monomial pencils, not a certified gonality.
    certified: bool,
}

fn gonality(c: &MonomialCurve) -> Result<String, Failure> {
    let (gonality, pencil) = c.gonality_witness();
    Ok(to_json(&GonalityOutput {
        exponents: c.exponents().to_vec(),
        genus: c.genus(),
        gonality,
        pencil,
        window: c.pencil_window(),
        certified: c.singular_locus() != SingularLocus::Both,
    }))
}

#[derive(Serialize)]
struct ScrollEntry {
    dim: u32,
    dims: Vec<u32>,
    step: u32,
    ell: u32,
    smooth: bool,
    blocks: Vec<Vec<u32>>,
    minors_vanish: bool,
}

#[derive(Serialize)]
struct ScrollsOutput {
    canonical: Vec<u32>,
    min_dim: u32,
    structures: Vec<ScrollEntry>,
}

fn scrolls(c: &MonomialCurve, max_dim: u32) -> Result<String, Failure> {
    if c.genus() == 0 {
        return Err(invalid("curve has genus 0"));
    }
    let canonical = c.canonical_exponents().map_err(invalid)?;
    if max_dim as usize > canonical.len() {
        return Err(invalid(format!("--max-dim {max_dim} exceeds the {} canonical exponents", canonical.len())));
    }
    let mut entries = Vec::new();
    for d in 1..=max_dim {
        for s in scroll_structures(&canonical, d) {
            let ty = s.scroll_type();
            entries.push(ScrollEntry {
                dim: d,
                dims: ty.dims().to_vec(),
                step: s.step(),
                ell: s.ell(),
                smooth: ty.is_smooth(),
                blocks: s.blocks().to_vec(),
                minors_vanish: minor_check(&canonical, &s),
            });
        }
    }
    Ok(to_json(&ScrollsOutput { min_dim: min_scroll_dimension(&canonical), canonical, structures: entries }))
}

#[derive(Serialize)]
struct ChiOutput {
    d: u32,
    e: u32,
    n: u32,
    h: i64,
    f: i64,
    chi: serde_json::Value,
    h0: serde_json::Value,
    higher_vanishing: bool,
}

#[derive(Serialize)]
struct PaOutput {
    e: u32,
    u: i64,
    v: i64,
    w: i64,
    z: i64,
    degree: i64,
    pa: serde_json::Value,
}

fn formula(which: FormulaCommand) -> Result<String, Failure> {
    match which {
        FormulaCommand::Chi { d, e, h, f } => {
            let amb = Ambient::balanced(d, e).map_err(invalid)?;
            let class = DivisorClass::new(h, f);
            let chi: BigInt = amb.euler_characteristic(class).map_err(invalid)?;
            let h0 = amb.h0_class(class);
            Ok(to_json(&ChiOutput {
                d,
                e,
                n: amb.n(),
                h,
                f,
                chi: big(&chi),
                h0: big(&h0.h0),
                higher_vanishing: h0.higher_vanishing,
            }))
        }
        FormulaCommand::PaBundle { e, u, v, w, z } => {
            let b = RankTwoBundleClass::new(u, v, w, z);
            let pa = pa_from_bundle(e, &b).map_err(invalid)?;
            Ok(to_json(&PaOutput { e, u, v, w, z, degree: w * i64::from(e) + z, pa: big(&pa) }))
        }
    }
}
