//! Parallel sweeps of the exact verifiers over `(n, t)` grids. Cells are
//! independent; results come back in grid order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{rho_peak_bounds, sandwich_holding_ks, BoundsPair};
use crate::error::Result;
use crate::exact::{identity_one, identity_two};
use crate::report::VerificationReport;
use crate::verify::{
    lemma_check, peak_index, uniform_shape, verify_edge_case, verify_edge_contrast, verify_theorem1, verify_theorem2,
};
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanCell {
    pub n: usize,
    pub t: Option<usize>,
    pub report: VerificationReport,
}

fn pairs(
    n_lo: usize,
    n_hi: usize,
    t_of: impl Fn(usize) -> std::ops::RangeInclusive<usize> + Sync,
) -> Vec<(usize, usize)> {
    (n_lo..=n_hi).flat_map(|n| t_of(n).map(move |t| (n, t))).collect()
}

fn merge(claim: &str, range: String, cells: &[ScanCell]) -> VerificationReport {
    let mut total = VerificationReport::new(claim, range);
    for c in cells {
        total.absorb(c.report.clone());
    }
    total
}

/// Unimodality for every `4 <= n`, `1 <= t <= n - 3` in range.
pub fn theorem1_grid(n_lo: usize, n_hi: usize) -> Result<Vec<ScanCell>> {
    pairs(n_lo.max(4), n_hi, |n| 1..=n.saturating_sub(3))
        .into_par_iter()
        .map(|(n, t)| {
            Ok(ScanCell {
                n,
                t: Some(t),
                report: verify_theorem1(n, t)?,
            })
        })
        .collect()
}

/// Edge case `t = n - 2`, with the uniform tie contrast.
pub fn edge_grid(n_lo: usize, n_hi: usize) -> Result<Vec<ScanCell>> {
    (n_lo.max(3)..=n_hi)
        .into_par_iter()
        .map(|n| {
            let mut report = verify_edge_case(n)?;
            report.absorb(verify_edge_contrast(n)?);
            Ok(ScanCell {
                n,
                t: Some(n - 2),
                report,
            })
        })
        .collect()
}

pub fn theorem2_grid(n_lo: usize, n_hi: usize) -> Result<Vec<ScanCell>> {
    (n_lo.max(2)..=n_hi)
        .into_par_iter()
        .map(|n| {
            Ok(ScanCell {
                n,
                t: None,
                report: verify_theorem2(n)?,
            })
        })
        .collect()
}

pub fn identities_grid(n_lo: usize, n_hi: usize) -> Result<Vec<ScanCell>> {
    (n_lo.max(1)..=n_hi)
        .into_par_iter()
        .map(|n| {
            let mut report = identity_one(n)?;
            report.absorb(identity_two(n)?);
            Ok(ScanCell { n, t: None, report })
        })
        .collect()
}

pub fn uniform_shape_grid(n_lo: usize, n_hi: usize) -> Result<Vec<ScanCell>> {
    pairs(n_lo.max(2), n_hi, |n| 1..=n - 1)
        .into_par_iter()
        .map(|(n, t)| {
            Ok(ScanCell {
                n,
                t: Some(t),
                report: uniform_shape(n, t)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsCell {
    pub n: usize,
    pub t: usize,
    pub m: usize,
    /// `k` for which `lower < h(k) < upper` holds.
    pub holding_ks: Vec<usize>,
    pub peak: BoundsPair<Rational>,
    pub report: VerificationReport,
}

impl BoundsCell {
    pub fn all_k_hold(&self) -> bool {
        self.holding_ks.len() == self.n - self.t
    }
}

/// The `h(k)` sandwich for every `k`, and the peak `rho` sandwich, over
/// `1 <= t <= n - 3`.
pub fn bounds_grid(n_lo: usize, n_hi: usize) -> Result<Vec<BoundsCell>> {
    pairs(n_lo.max(4), n_hi, |n| 1..=n.saturating_sub(3))
        .into_par_iter()
        .map(|(n, t)| {
            let m = peak_index(n, t)?.m;
            let holding_ks = sandwich_holding_ks(n, t)?;
            let peak: BoundsPair<Rational> = rho_peak_bounds(n, t)?;
            let mut report = VerificationReport::new("bounds", format!("n={n},t={t}"));
            for k in 1..=n - t {
                report.check(holding_ks.contains(&k), || format!("n={n},t={t},k={k}"), 1.0, "=", 1.0);
            }
            let lower_sq = &peak.lower * &peak.lower;
            let upper_sq = &peak.upper * &peak.upper;
            report.check_lt(|| format!("n={n},t={t},m={m},rho-lower^2"), &lower_sq, &peak.target);
            report.check_lt(|| format!("n={n},t={t},m={m},rho-upper^2"), &peak.target, &upper_sq);
            Ok(BoundsCell {
                n,
                t,
                m,
                holding_ks,
                peak,
                report,
            })
        })
        .collect()
}

/// Mediant lemma on `cases` random positive rationals with numerators and
/// denominators in `1..=1000`.
pub fn lemma_random(cases: u64, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = VerificationReport::new("lemma", format!("{cases} random cases, seed={seed}"));
    for _ in 0..cases {
        let mut draw = || {
            Rational::new(
                rng.random_range(1..=1000i64).into(),
                rng.random_range(1..=1000i64).into(),
            )
        };
        let (a, b, c, d) = (draw(), draw(), draw(), draw());
        total.absorb(lemma_check(&a, &b, &c, &d)?);
    }
    Ok(total)
}

/// Collapse a cell list into one report.
pub fn summarize(claim: &str, range: String, cells: &[ScanCell]) -> VerificationReport {
    merge(claim, range, cells)
}

/// Compact `1-5,7,9-10` rendering of a sorted index list.
pub fn describe_ks(ks: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < ks.len() {
        let start = ks[i];
        let mut end = start;
        while i + 1 < ks.len() && ks[i + 1] == end + 1 {
            i += 1;
            end = ks[i];
        }
        parts.push(if start == end {
            start.to_string()
        } else {
            format!("{start}-{end}")
        });
        i += 1;
    }
    parts.join(",")
}
