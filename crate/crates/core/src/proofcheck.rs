//! Big-integer positivity scans of the polynomial inequalities that the
//! unimodality and comparison proofs reduce to.
//!
//! Each inequality is evaluated in its unexpanded product form after
//! substituting `n`, so no hand-expanded coefficients are involved.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    /// `n - t` even: `n = 2m + t`.
    Even,
    /// `n - t` odd: `n = 2m + t - 1`.
    Odd,
}

impl Parity {
    fn sample_size(self, m: i64, t: i64) -> i64 {
        match self {
            Parity::Even => 2 * m + t,
            Parity::Odd => 2 * m + t - 1,
        }
    }
}

fn prod(factors: &[i64]) -> BigInt {
    factors.iter().fold(BigInt::from(1), |acc, &f| acc * f)
}

fn check_peak_params(m: i64, t: i64) -> Result<()> {
    if m < 2 || t < 1 {
        return Err(Error::OutOfRegime(format!("need m >= 2 and t >= 1; got m={m}, t={t}")));
    }
    Ok(())
}

/// Lower-bound step at the peak:
/// `(2n+1)(2n+1-2m-2t)[n^2+(n+1-m)^2+2n(n+1-m)(m-1)](n-m)^2
///   - 8(m+t) n^2 (n+1-m)^2 (n-m-t)^2`.
pub fn eval_ineq3(m: i64, t: i64, parity: Parity) -> Result<BigInt> {
    check_peak_params(m, t)?;
    let n = parity.sample_size(m, t);
    let bracket = prod(&[n, n]) + prod(&[n + 1 - m, n + 1 - m]) + prod(&[2, n, n + 1 - m, m - 1]);
    let left = prod(&[2 * n + 1, 2 * n + 1 - 2 * m - 2 * t, n - m, n - m]) * bracket;
    let right = prod(&[8, m + t, n, n, n + 1 - m, n + 1 - m, n - m - t, n - m - t]);
    Ok(left - right)
}

/// Step just below the peak:
/// `(2n+1)(2n+3-2m)[n^2+(n+2-m-t)^2+2n(n+2-m-t)(m+t-2)](n+1-m-t)^2
///   - 8(m-1) n^2 (n+2-m-t)^2 (n+1-m)^2`.
pub fn eval_ineq10(m: i64, t: i64, parity: Parity) -> Result<BigInt> {
    check_peak_params(m, t)?;
    let n = parity.sample_size(m, t);
    let r = n + 2 - m - t;
    let bracket = prod(&[n, n]) + prod(&[r, r]) + prod(&[2, n, r, m + t - 2]);
    let left = prod(&[2 * n + 1, 2 * n + 3 - 2 * m, n + 1 - m - t, n + 1 - m - t]) * bracket;
    let right = prod(&[8, m - 1, n, n, r, r, n + 1 - m, n + 1 - m]);
    Ok(left - right)
}

/// Sufficient condition for exponential-below-uniform with `k, t >= 2`,
/// `n = k + t + x`:
/// `k(n+1-k-t)(2n+1)(2n+3-2k)(n+1-k)^2[n^2+(n+1-k-t)^2+2n(n+1-k-t)(k+t-1)]
///   - 2(k+t)(n+1-k) n^2 (n+1-k-t)^2 [(2n+1)(2n+3-2k)+4(k-1)(n+1-k)^2]`.
pub fn eval_p19(k: i64, t: i64, x: i64) -> Result<BigInt> {
    if k < 2 || t < 2 || x < 0 {
        return Err(Error::OutOfRegime(format!(
            "need k >= 2, t >= 2, x >= 0; got k={k}, t={t}, x={x}"
        )));
    }
    let n = k + t + x;
    let a = n + 1 - k - t;
    let b = n + 1 - k;
    let d_bracket = prod(&[n, n]) + prod(&[a, a]) + prod(&[2, n, a, k + t - 1]);
    let n_bracket = prod(&[2 * n + 1, 2 * n + 3 - 2 * k]) + prod(&[4, k - 1, b, b]);
    let left = prod(&[k, a, 2 * n + 1, 2 * n + 3 - 2 * k, b, b]) * d_bracket;
    let right = prod(&[2, k + t, b, n, n, a, a]) * n_bracket;
    Ok(left - right)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IneqId {
    I3Even,
    I3Odd,
    I10Even,
    I10Odd,
    P19,
}

impl IneqId {
    pub const ALL: [IneqId; 5] = [
        IneqId::I3Even,
        IneqId::I3Odd,
        IneqId::I10Even,
        IneqId::I10Odd,
        IneqId::P19,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IneqId::I3Even => "I3-even",
            IneqId::I3Odd => "I3-odd",
            IneqId::I10Even => "I10-even",
            IneqId::I10Odd => "I10-odd",
            IneqId::P19 => "P19",
        }
    }

    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            IneqId::P19 => &["k", "t", "x"],
            _ => &["m", "t"],
        }
    }

    /// Smallest admissible value of each parameter.
    fn minima(self) -> &'static [i64] {
        match self {
            IneqId::P19 => &[2, 2, 0],
            _ => &[2, 1],
        }
    }

    /// Evaluate at one grid point; `point` follows [`IneqId::parameter_names`].
    pub fn eval(self, point: &[i64]) -> Result<BigInt> {
        match (self, point) {
            (IneqId::I3Even, &[m, t]) => eval_ineq3(m, t, Parity::Even),
            (IneqId::I3Odd, &[m, t]) => eval_ineq3(m, t, Parity::Odd),
            (IneqId::I10Even, &[m, t]) => eval_ineq10(m, t, Parity::Even),
            (IneqId::I10Odd, &[m, t]) => eval_ineq10(m, t, Parity::Odd),
            (IneqId::P19, &[k, t, x]) => eval_p19(k, t, x),
            _ => Err(Error::InvalidArgument(format!(
                "{} takes {} parameters, got {}",
                self,
                self.parameter_names().len(),
                point.len()
            ))),
        }
    }
}

impl fmt::Display for IneqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IneqId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IneqId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown inequality id `{s}`")))
    }
}

/// An inequality together with an inclusive integer grid for each parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqSpec {
    id: IneqId,
    ranges: Vec<(i64, i64)>,
}

impl IneqSpec {
    /// Rejects grids that reach below the inequality's preconditions or are empty.
    pub fn new(id: IneqId, ranges: Vec<(i64, i64)>) -> Result<Self> {
        let names = id.parameter_names();
        if ranges.len() != names.len() {
            return Err(Error::InvalidArgument(format!(
                "{id} needs {} ranges, got {}",
                names.len(),
                ranges.len()
            )));
        }
        for ((&(lo, hi), name), &min) in ranges.iter().zip(names).zip(id.minima()) {
            if lo < min {
                return Err(Error::OutOfRegime(format!(
                    "{id}: {name} starts at {lo}, must be >= {min}"
                )));
            }
            if hi < lo {
                return Err(Error::InvalidArgument(format!(
                    "{id}: empty range for {name}: {lo}..={hi}"
                )));
            }
        }
        Ok(Self { id, ranges })
    }

    /// Grid from each parameter's minimum up to the given maxima.
    pub fn up_to(id: IneqId, maxima: &[i64]) -> Result<Self> {
        let ranges = id.minima().iter().zip(maxima).map(|(&lo, &hi)| (lo, hi)).collect();
        Self::new(id, ranges)
    }

    /// Grids sized for sub-minute runs.
    pub fn default_grid(id: IneqId) -> Self {
        let maxima: &[i64] = match id {
            IneqId::P19 => &[60, 60, 60],
            _ => &[200, 200],
        };
        Self::up_to(id, maxima).expect("default grid respects preconditions")
    }

    pub fn id(&self) -> IneqId {
        self.id
    }

    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    pub fn cells(&self) -> u64 {
        self.ranges.iter().map(|&(lo, hi)| (hi - lo + 1) as u64).product()
    }

    pub fn describe(&self) -> String {
        self.id
            .parameter_names()
            .iter()
            .zip(&self.ranges)
            .map(|(name, (lo, hi))| format!("{name}={lo}..={hi}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Minimum over one slice of the grid, where the first parameter is fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct RowMinimum {
    pub first: i64,
    pub cells: u64,
    pub min_value: BigInt,
    pub min_at: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityScan {
    pub spec: IneqSpec,
    pub rows: Vec<RowMinimum>,
    pub report: VerificationReport,
}

impl PositivityScan {
    /// Overall minimum and where it was attained (first in grid order on ties).
    pub fn minimum(&self) -> Option<(&BigInt, &[i64])> {
        let mut best: Option<&RowMinimum> = None;
        for row in &self.rows {
            if best.is_none_or(|b| row.min_value < b.min_value) {
                best = Some(row);
            }
        }
        best.map(|r| (&r.min_value, r.min_at.as_slice()))
    }
}

fn format_point(names: &[&str], point: &[i64]) -> String {
    names
        .iter()
        .zip(point)
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Evaluate the inequality on every grid cell; non-positive cells are failures.
/// Rows (fixed first parameter) are evaluated in parallel and merged in order.
pub fn positivity_scan(spec: &IneqSpec) -> Result<PositivityScan> {
    let id = spec.id;
    let names = id.parameter_names();
    let (first_lo, first_hi) = spec.ranges[0];
    let rest = &spec.ranges[1..];

    let rows: Vec<(RowMinimum, VerificationReport)> = (first_lo..=first_hi)
        .into_par_iter()
        .map(|first| -> Result<(RowMinimum, VerificationReport)> {
            let mut report = VerificationReport::new(id.as_str(), String::new());
            let mut best: Option<(BigInt, Vec<i64>)> = None;
            let mut point = vec![first];
            point.extend(rest.iter().map(|r| r.0));
            let mut cells = 0;
            loop {
                let value = id.eval(&point)?;
                cells += 1;
                let positive = value.is_positive();
                if best.as_ref().is_none_or(|(b, _)| value < *b) {
                    best = Some((value.clone(), point.clone()));
                }
                report.check(
                    positive,
                    || format_point(names, &point),
                    Rational::from_integer(value),
                    ">",
                    Rational::from_integer(0.into()),
                );
                // odometer over the remaining parameters
                let mut i = point.len() - 1;
                loop {
                    if i == 0 {
                        let (min_value, min_at) = best.expect("grid is non-empty");
                        return Ok((
                            RowMinimum {
                                first,
                                cells,
                                min_value,
                                min_at,
                            },
                            report,
                        ));
                    }
                    if point[i] < rest[i - 1].1 {
                        point[i] += 1;
                        break;
                    }
                    point[i] = rest[i - 1].0;
                    i -= 1;
                }
            }
        })
        .collect::<Result<_>>()?;

    let mut report = VerificationReport::new(format!("positivity-{id}"), spec.describe());
    let mut minima = Vec::with_capacity(rows.len());
    for (row, r) in rows {
        report.absorb(r);
        minima.push(row);
    }
    Ok(PositivityScan {
        spec: spec.clone(),
        rows: minima,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_cells_are_positive() {
        assert!(eval_ineq3(2, 1, Parity::Even).unwrap().is_positive());
        assert!(eval_ineq3(2, 1, Parity::Odd).unwrap().is_positive());
        assert!(eval_ineq10(2, 1, Parity::Even).unwrap().is_positive());
        assert!(eval_ineq10(3, 2, Parity::Odd).unwrap().is_positive());
        assert!(eval_p19(2, 2, 0).unwrap().is_positive());
        assert!(eval_p19(2, 2, 10).unwrap().is_positive());
    }

    #[test]
    fn frozen_values() {
        // Big-integer evaluation of the product forms, computed independently.
        assert_eq!(eval_ineq3(2, 1, Parity::Even).unwrap(), big(1695));
        assert_eq!(eval_ineq3(2, 1, Parity::Odd).unwrap(), big(1836));
        assert_eq!(eval_ineq10(2, 1, Parity::Even).unwrap(), big(20971));
        assert_eq!(eval_ineq10(2, 1, Parity::Odd).unwrap(), big(1980));
        assert_eq!(eval_ineq10(3, 2, Parity::Odd).unwrap(), big(32405));
        assert_eq!(eval_p19(2, 2, 0).unwrap(), big(8478));
        assert_eq!(eval_p19(2, 2, 10).unwrap(), big(14220778));
    }

    /// The peak step is the exact statement `h(m) > (n-m-t)^2/(n-m)^2` with
    /// the tail sums replaced by integral bounds; a positive value must imply
    /// the rational inequality between those bounds.
    #[test]
    fn ineq3_sign_matches_rational_form() {
        for m in 2..12i64 {
            for t in 1..12i64 {
                for parity in [Parity::Even, Parity::Odd] {
                    let n = parity.sample_size(m, t);
                    let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
                    let nb = q(
                        n * n + (n + 1 - m).pow(2) + 2 * n * (n + 1 - m) * (m - 1),
                        2 * n * n * (n + 1 - m).pow(2),
                    );
                    let db = q(4 * (m + t), (2 * n + 1) * (2 * n + 1 - 2 * m - 2 * t));
                    let rhs = q((n - m - t).pow(2), (n - m).pow(2));
                    let sign = eval_ineq3(m, t, parity).unwrap().is_positive();
                    assert_eq!(nb / db > rhs, sign, "m={m} t={t} {parity:?}");
                }
            }
        }
    }

    #[test]
    fn preconditions_are_gated() {
        assert!(matches!(eval_ineq3(1, 1, Parity::Even), Err(Error::OutOfRegime(_))));
        assert!(eval_ineq10(2, 0, Parity::Odd).is_err());
        assert!(eval_p19(1, 2, 0).is_err());
        assert!(eval_p19(2, 2, -1).is_err());
        assert!(matches!(
            IneqSpec::new(IneqId::I3Even, vec![(1, 5), (1, 5)]),
            Err(Error::OutOfRegime(_))
        ));
        assert!(IneqSpec::new(IneqId::P19, vec![(2, 5), (2, 5)]).is_err());
        assert!(IneqSpec::new(IneqId::P19, vec![(2, 5), (2, 1), (0, 1)]).is_err());
    }

    #[test]
    fn ids_round_trip_through_strings() {
        for id in IneqId::ALL {
            assert_eq!(id.as_str().parse::<IneqId>().unwrap(), id);
        }
        assert!("I4-even".parse::<IneqId>().is_err());
    }

    #[test]
    fn single_cell_scan() {
        let spec = IneqSpec::up_to(IneqId::I10Odd, &[2, 1]).unwrap();
        let scan = positivity_scan(&spec).unwrap();
        assert!(scan.report.passed());
        assert_eq!(scan.report.checks_run, 1);
        assert_eq!(scan.minimum().unwrap(), (&big(1980), &[2i64, 1][..]));
    }

    #[test]
    fn scan_reports_minimum_location() {
        let spec = IneqSpec::up_to(IneqId::P19, &[6, 5, 4]).unwrap();
        let scan = positivity_scan(&spec).unwrap();
        assert_eq!(scan.report.checks_run, spec.cells());
        assert_eq!(scan.rows.len(), 5);
        let (v, at) = scan.minimum().unwrap();
        assert_eq!((v.clone(), at.to_vec()), (big(8478), vec![2, 2, 0]));
    }
}
