//! Subcommand implementations. Each returns a finished [`ReportDocument`];
//! nothing here prints.

use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;

use orderstat::bounds::BoundsPair;
use orderstat::decimal::{format_f64, round_half_away};
use orderstat::dist::conjecture::{conjecture_scan, Method, TIE_TOL};
use orderstat::dist::mc::{mc_rho, McConfig};
use orderstat::dist::moments::SampleMoments;
use orderstat::dist::{DistRegistry, DistSpec};
use orderstat::golden::{
    compare_reference, fixture_file_name, render_fixture, render_notes, CellStatus, NOTES_FILE_NAME, REFERENCE_SIZES,
};
use orderstat::proofcheck::{positivity_scan, IneqId, IneqSpec};
use orderstat::scan::{
    bounds_grid, describe_ks, edge_grid, identities_grid, lemma_random, theorem1_grid, theorem2_grid,
    uniform_shape_grid, ScanCell,
};
use orderstat::{Rational, Scalar, VerificationReport};

use crate::document::{Cell, ReportDocument, Summary};
use crate::error::CliError;

pub type CmdResult = Result<ReportDocument, CliError>;

/// Inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: usize,
    pub hi: usize,
}

impl IndexRange {
    pub fn range(self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("`{v}`: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if hi < lo {
            return Err(format!("empty range {s}"));
        }
        Ok(IndexRange { lo, hi })
    }
}

impl std::fmt::Display for IndexRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

fn rho_text(h: f64, precision: usize) -> Cell {
    Cell::Decimal(format_f64(h.sqrt(), precision))
}

/// `h(k)` rows for one `(n, t)`: exact when the distribution has a closed
/// form, quadrature otherwise.
fn table_rows(
    doc: &mut ReportDocument,
    spec: &DistSpec,
    n: usize,
    t: usize,
    moments: Option<&SampleMoments>,
    precision: usize,
) -> Result<(), CliError> {
    let ks: Vec<usize> = (1..=n - t).collect();
    match spec.reference {
        Some(reference) => {
            let hs = ks
                .iter()
                .map(|&k| reference.h(n, k, t))
                .collect::<orderstat::Result<Vec<Rational>>>()?;
            let max = hs.iter().max().expect("at least one k").clone();
            for (&k, h) in ks.iter().zip(&hs) {
                doc.push(vec![
                    n.into(),
                    t.into(),
                    k.into(),
                    Cell::Fraction(h.clone()),
                    Cell::Decimal(round_half_away(h, precision)),
                    rho_text(h.to_f64(), precision),
                    (*h == max).into(),
                ]);
            }
        }
        None => {
            let moments = moments.expect("moments computed for quadrature tables");
            let rhos = ks
                .iter()
                .map(|&k| moments.rho(spec, k, t))
                .collect::<orderstat::Result<Vec<f64>>>()?;
            let max = rhos.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            for (&k, &rho) in ks.iter().zip(&rhos) {
                doc.push(vec![
                    n.into(),
                    t.into(),
                    k.into(),
                    Cell::Empty,
                    Cell::Decimal(format_f64(rho * rho, precision)),
                    Cell::Decimal(format_f64(rho, precision)),
                    (max - rho <= TIE_TOL).into(),
                ]);
            }
        }
    }
    Ok(())
}

/// Correlation table for one `t`, or for every `t` when `t` is `None`.
pub fn table(registry: &DistRegistry, n: usize, t: Option<usize>, dist: &str, precision: usize) -> CmdResult {
    let spec = registry.get(dist)?;
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    let ts: Vec<usize> = match t {
        Some(t) if t == 0 || t >= n => {
            return Err(CliError::Usage(format!(
                "--t must satisfy 1 <= t <= n - 1, got n={n}, t={t}"
            )))
        }
        Some(t) => vec![t],
        None => (1..n).collect(),
    };
    let moments = match spec.reference {
        Some(_) => None,
        None => Some(SampleMoments::compute(spec, n)?),
    };
    let mut doc = ReportDocument::new("table", &["n", "t", "k", "h_exact", "h", "rho", "peak"])
        .param("n", n)
        .param("t", Cell::opt(t, Cell::from))
        .param("dist", spec.name.as_str())
        .param(
            "method",
            if spec.reference.is_some() {
                "exact"
            } else {
                "quadrature"
            },
        )
        .param("precision", precision);
    for t in ts {
        table_rows(&mut doc, spec, n, t, moments.as_ref(), precision)?;
    }
    Ok(doc)
}

/// Write the reference fixtures and discrepancy notes into `dir`.
pub fn gold(dir: &Path) -> CmdResult {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let write = |name: &str, body: String| {
        let path = dir.join(name);
        fs::write(&path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    };
    let cells = compare_reference();
    let mut doc = ReportDocument::new("table", &["file", "n", "cells", "last_digit", "typo"])
        .param("gold", dir.display().to_string());
    for n in REFERENCE_SIZES {
        let name = fixture_file_name(n);
        write(&name, render_fixture(n))?;
        let of_n: Vec<_> = cells.iter().filter(|c| c.n == n).collect();
        let count = |s: CellStatus| of_n.iter().filter(|c| c.status == s).count();
        doc.push(vec![
            name.into(),
            n.into(),
            of_n.len().into(),
            count(CellStatus::LastDigit).into(),
            count(CellStatus::Typo).into(),
        ]);
    }
    write(NOTES_FILE_NAME, render_notes())?;
    doc.push(vec![
        NOTES_FILE_NAME.into(),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
    ]);
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyTarget {
    Thm1,
    Edge,
    Thm2,
    Identities,
    Bounds,
    Lemma,
    UniformShape,
}

impl VerifyTarget {
    pub fn name(self) -> &'static str {
        match self {
            VerifyTarget::Thm1 => "thm1",
            VerifyTarget::Edge => "edge",
            VerifyTarget::Thm2 => "thm2",
            VerifyTarget::Identities => "identities",
            VerifyTarget::Bounds => "bounds",
            VerifyTarget::Lemma => "lemma",
            VerifyTarget::UniformShape => "uniform-shape",
        }
    }

    /// Smallest `n` with at least one cell.
    pub fn min_n(self) -> usize {
        match self {
            VerifyTarget::Thm1 | VerifyTarget::Bounds => 4,
            VerifyTarget::Edge => 3,
            VerifyTarget::Thm2 | VerifyTarget::UniformShape => 2,
            VerifyTarget::Identities | VerifyTarget::Lemma => 1,
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            VerifyTarget::Thm2 => 40,
            VerifyTarget::Identities => 50,
            _ => 60,
        }
    }
}

fn scan_document(target: VerifyTarget, cells: &[ScanCell]) -> ReportDocument {
    let mut doc = ReportDocument::new("verify", &["n", "t", "checks", "failed", "status"]);
    let mut total = VerificationReport::new(target.name(), "");
    for c in cells {
        let failed = c.report.failures.len();
        doc.push(vec![
            c.n.into(),
            Cell::opt(c.t, Cell::from),
            c.report.checks_run.into(),
            failed.into(),
            if failed == 0 { "pass" } else { "fail" }.into(),
        ]);
        total.absorb(c.report.clone());
    }
    doc.summary = Summary::from_report(&total).detail("cells", cells.len());
    doc
}

fn bounds_document(n_lo: usize, n_hi: usize) -> CmdResult {
    let cells = bounds_grid(n_lo, n_hi)?;
    let mut doc = ReportDocument::new(
        "verify",
        &[
            "n",
            "t",
            "m",
            "holding_k",
            "all_k",
            "rho_lower",
            "h_peak",
            "rho_upper",
            "checks",
            "failed",
        ],
    );
    let mut total = VerificationReport::new("bounds", "");
    for c in &cells {
        let BoundsPair {
            lower, upper, target, ..
        } = &c.peak;
        doc.push(vec![
            c.n.into(),
            c.t.into(),
            c.m.into(),
            describe_ks(&c.holding_ks).into(),
            c.all_k_hold().into(),
            Cell::Fraction(lower.clone()),
            Cell::Fraction(target.clone()),
            Cell::Fraction(upper.clone()),
            c.report.checks_run.into(),
            c.report.failures.len().into(),
        ]);
        total.absorb(c.report.clone());
    }
    doc.summary = Summary::from_report(&total).detail("cells", cells.len());
    Ok(doc)
}

pub fn verify(target: VerifyTarget, n_min: Option<usize>, n_max: Option<usize>, cases: u64, seed: u64) -> CmdResult {
    let n_hi = n_max.unwrap_or(target.default_n_max());
    let n_lo = n_min.unwrap_or(target.min_n()).max(target.min_n());
    if target != VerifyTarget::Lemma && n_hi < n_lo {
        return Err(CliError::Usage(format!(
            "{} needs --n-max >= {n_lo}, got {n_hi}",
            target.name()
        )));
    }
    let mut doc = match target {
        VerifyTarget::Thm1 => scan_document(target, &theorem1_grid(n_lo, n_hi)?),
        VerifyTarget::Edge => scan_document(target, &edge_grid(n_lo, n_hi)?),
        VerifyTarget::Thm2 => scan_document(target, &theorem2_grid(n_lo, n_hi)?),
        VerifyTarget::Identities => scan_document(target, &identities_grid(n_lo, n_hi)?),
        VerifyTarget::UniformShape => scan_document(target, &uniform_shape_grid(n_lo, n_hi)?),
        VerifyTarget::Bounds => bounds_document(n_lo, n_hi)?,
        VerifyTarget::Lemma => {
            let report = lemma_random(cases, seed)?;
            let mut doc = ReportDocument::new("verify", &["cases", "checks", "failed"]);
            doc.push(vec![
                cases.into(),
                report.checks_run.into(),
                report.failures.len().into(),
            ]);
            doc.summary = Summary::from_report(&report);
            doc.seed = Some(seed);
            return Ok(doc.param("target", target.name()).param("cases", cases));
        }
    };
    doc.parameters.push(("target".into(), target.name().into()));
    doc.parameters.push(("n_min".into(), n_lo.into()));
    doc.parameters.push(("n_max".into(), n_hi.into()));
    Ok(doc)
}

/// Grid maxima as given on the command line; unset ones take the defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GridMaxima {
    pub m: Option<i64>,
    pub t: Option<i64>,
    pub k: Option<i64>,
    pub x: Option<i64>,
}

pub fn proofcheck(id: &str, maxima: GridMaxima) -> CmdResult {
    let id = IneqId::from_str(id).map_err(|e| CliError::Usage(e.to_string()))?;
    let values = match id {
        IneqId::P19 => {
            if maxima.m.is_some() {
                return Err(CliError::Usage("P19 takes --k-max, --t-max and --x-max".into()));
            }
            vec![maxima.k.unwrap_or(60), maxima.t.unwrap_or(60), maxima.x.unwrap_or(60)]
        }
        _ => {
            if maxima.k.is_some() || maxima.x.is_some() {
                return Err(CliError::Usage(format!("{id} takes --m-max and --t-max")));
            }
            vec![maxima.m.unwrap_or(200), maxima.t.unwrap_or(200)]
        }
    };
    let spec = IneqSpec::up_to(id, &values)?;
    let scan = positivity_scan(&spec)?;
    let names = id.parameter_names();
    let at = |point: &[i64]| {
        names
            .iter()
            .zip(point)
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    };

    let mut doc = ReportDocument::new("proofcheck", &[names[0], "cells", "min_value", "min_at"])
        .param("id", id.as_str())
        .param("grid", spec.describe());
    for row in &scan.rows {
        doc.push(vec![
            row.first.into(),
            row.cells.into(),
            Cell::BigInt(row.min_value.to_string()),
            at(&row.min_at).into(),
        ]);
    }
    let (min, min_at) = scan.minimum().expect("grids are non-empty");
    doc.summary = Summary::from_report(&scan.report)
        .detail("cells", spec.cells())
        .detail("minimum", Cell::BigInt(min.to_string()))
        .detail("minimum_at", at(min_at));
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExploreMethod {
    Quad,
    Mc,
}

pub fn explore(
    registry: &DistRegistry,
    dist: &str,
    n: IndexRange,
    t: Option<IndexRange>,
    method: ExploreMethod,
    mc: McConfig,
) -> CmdResult {
    let spec = registry.get(dist)?;
    if n.lo < 2 {
        return Err(CliError::Usage(format!("--n must start at 2 or more, got {n}")));
    }
    let t = t.unwrap_or(IndexRange { lo: 1, hi: n.hi - 1 });
    if t.lo == 0 {
        return Err(CliError::Usage("--t must start at 1 or more".into()));
    }
    let method_value = match method {
        ExploreMethod::Quad => Method::Quadrature,
        ExploreMethod::Mc => Method::MonteCarlo(mc),
    };
    let scan = conjecture_scan(spec, n.range(), t.range(), &method_value)?;

    let mut doc = ReportDocument::new(
        "explore",
        &[
            "n",
            "t",
            "rho",
            "stderr",
            "rho_uniform",
            "peak",
            "expected_peak",
            "peak_conforms",
            "uniform_margin",
            "below_uniform",
            "rho_exact",
            "exact_agrees",
            "error",
        ],
    )
    .param("dist", spec.name.as_str())
    .param("shape", format!("{:?}", spec.shape).to_lowercase())
    .param("n", n.to_string())
    .param("t", t.to_string())
    .param("method", if method == ExploreMethod::Quad { "quad" } else { "mc" });
    if method == ExploreMethod::Mc {
        doc = doc.param("samples", mc.samples).param("batch_size", mc.batch_size);
        doc.seed = Some(mc.seed);
    }
    for c in &scan.cells {
        doc.push(vec![
            c.n.into(),
            c.t.into(),
            Cell::floats(&c.rhos),
            Cell::opt(c.stderrs.as_deref(), Cell::floats),
            Cell::floats(&c.uniform_rhos),
            Cell::ints(&c.peaks),
            Cell::opt(c.expected_peaks.as_deref(), Cell::ints),
            Cell::opt(c.conj1_conforms, Cell::from),
            Cell::float(c.conj2_margin),
            Cell::opt(c.conj2_holds, Cell::from),
            Cell::opt(c.reference_rhos.as_deref(), Cell::floats),
            Cell::opt(c.reference_agrees, Cell::from),
            Cell::opt(c.error.as_ref(), |e| e.to_string().into()),
        ]);
    }
    doc.summary = Summary::from_report(&scan.report).detail("cells", scan.cells.len());
    Ok(doc)
}

pub fn mc(registry: &DistRegistry, dist: &str, n: usize, k: usize, t: usize, cfg: McConfig) -> CmdResult {
    let spec = registry.get(dist)?;
    let est = mc_rho(spec, n, k, t, &cfg)?;
    let exact = spec.reference.map(|r| r.rho(n, k, t)).transpose()?;
    let z = exact.map(|e| (est.rho_hat - e).abs() / est.stderr);
    let mut doc = ReportDocument::new(
        "mc",
        &[
            "n",
            "k",
            "t",
            "rho_hat",
            "stderr",
            "samples",
            "batches",
            "rho_exact",
            "z",
            "within_3se",
        ],
    )
    .param("dist", spec.name.as_str())
    .param("n", n)
    .param("k", k)
    .param("t", t)
    .param("samples", cfg.samples)
    .param("batch_size", cfg.batch_size);
    doc.seed = Some(cfg.seed);
    let within = z.map(|z| z <= orderstat::dist::conjecture::MC_SIGMAS);
    doc.push(vec![
        n.into(),
        k.into(),
        t.into(),
        Cell::float(est.rho_hat),
        Cell::float(est.stderr),
        est.samples.into(),
        est.batches.into(),
        Cell::opt(exact, Cell::float),
        Cell::opt(z, Cell::float),
        Cell::opt(within, Cell::from),
    ]);
    doc.summary = Summary {
        passed: within.map_or(0, |w| w as u64),
        failed: within.map_or(0, |w| !w as u64),
        details: Vec::new(),
        failures: match (within, exact) {
            (Some(false), Some(e)) => vec![format!(
                "[n={n},k={k},t={t}] expected |{} - {e}| <= 3 * {}",
                est.rho_hat, est.stderr
            )],
            _ => Vec::new(),
        },
    };
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("3..8".parse::<IndexRange>().unwrap(), IndexRange { lo: 3, hi: 8 });
        assert_eq!("3..=8".parse::<IndexRange>().unwrap(), IndexRange { lo: 3, hi: 8 });
        assert_eq!("5".parse::<IndexRange>().unwrap(), IndexRange { lo: 5, hi: 5 });
        assert!("8..3".parse::<IndexRange>().is_err());
        assert!("a..3".parse::<IndexRange>().is_err());
    }

    #[test]
    fn uniform_table_ties() {
        let doc = table(&DistRegistry::with_builtins(), 6, Some(2), "uniform", 3).unwrap();
        let peaks: Vec<_> = doc
            .rows
            .iter()
            .filter(|r| r[6] == Cell::Bool(true))
            .map(|r| r[2].clone())
            .collect();
        assert_eq!(peaks, [Cell::Int(2), Cell::Int(3)]);
    }

    #[test]
    fn verify_rejects_too_small_range() {
        assert!(matches!(
            verify(VerifyTarget::Thm1, None, Some(3), 0, 0),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn proofcheck_single_cell() {
        let doc = proofcheck(
            "I10-odd",
            GridMaxima {
                m: Some(2),
                t: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(doc.rows.len(), 1);
        assert_eq!(doc.rows[0][2], Cell::BigInt("1980".into()));
        assert!(doc.passed());
    }
}
