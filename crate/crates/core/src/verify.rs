//! Exact checks of the unimodality and comparison results for exponential
//! and uniform order-statistic correlations.
//!
//! Every comparison here is between exact rationals. Ties count as failures
//! wherever the claim is strict.

use num_traits::Zero;

use crate::error::{out_of_range, Error, Result};
use crate::exact::{h_uniform, harmonic_sum, HarmonicOrder, SquareSums};
use crate::report::VerificationReport;
use crate::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Peak location of `h(k)` at fixed `(n, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeakIndex {
    pub n: usize,
    pub t: usize,
    pub m: usize,
}

/// `(n-t)/2` when `n - t` is even, `(n-t+1)/2` when odd. Defined for any
/// `n - t >= 1`; the unimodality claim itself needs `t <= n - 3`.
pub(crate) fn peak_rule(n: usize, t: usize) -> usize {
    let d = n - t;
    if d.is_multiple_of(2) {
        d / 2
    } else {
        d.div_ceil(2)
    }
}

pub fn peak_index(n: usize, t: usize) -> Result<PeakIndex> {
    if t < 1 || n < t + 3 {
        return Err(out_of_range(format!(
            "peak index needs 1 <= t <= n-3; got n={n}, t={t}"
        )));
    }
    Ok(PeakIndex {
        n,
        t,
        m: peak_rule(n, t),
    })
}

/// Mediant comparisons for positive `a, b, c, d`:
/// if `a/(a+b) > c/d` then `a/(a+b) > (a+c)/(a+b+d) > c/d`;
/// if `a/(a+b) < c/d` then `a/(a+b) < (a+c)/(a+b+d)`.
pub fn lemma_check(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<VerificationReport> {
    let zero = Rational::zero();
    if [a, b, c, d].iter().any(|x| **x <= zero) {
        return Err(Error::InvalidArgument("lemma inputs must be positive".into()));
    }
    let params = || format!("a={a},b={b},c={c},d={d}");
    let left = a / (a + b);
    let right = c / d;
    let mediant = (a + c) / (a + b + d);
    let mut report = VerificationReport::new("lemma", params());
    if left > right {
        report.check_gt(params, &left, &mediant);
        report.check_gt(params, &mediant, &right);
    } else if left < right {
        report.check_lt(params, &left, &mediant);
    }
    Ok(report)
}

/// `h(1) < ... < h(m) > h(m+1) > ... > h(n-t)` for exponential samples.
pub fn verify_theorem1(n: usize, t: usize) -> Result<VerificationReport> {
    let PeakIndex { m, .. } = peak_index(n, t)?;
    let sums = SquareSums::<Rational>::new(n);
    let hs: Vec<Rational> = (1..=n - t).map(|k| sums.h(k, t)).collect::<Result<_>>()?;
    let mut report = VerificationReport::new("thm1-unimodal", format!("n={n},t={t},m={m}"));
    for k in 1..n - t {
        let (here, next) = (&hs[k - 1], &hs[k]);
        let params = || format!("n={n},t={t},k={k}");
        if k < m {
            report.check_lt(params, here, next);
        } else {
            report.check_gt(params, here, next);
        }
    }
    Ok(report)
}

/// At `t = n - 2`: `h(1) > h(2)` for exponential samples, plus the integral
/// bound `sum_{i=2}^{n} 1/i^2 < 4(n-1)/(3(2n+1)) < (n-1)^2/n^2` behind it.
pub fn verify_edge_case(n: usize) -> Result<VerificationReport> {
    if n < 3 {
        return Err(out_of_range(format!("edge case needs n >= 3, got {n}")));
    }
    let t = n - 2;
    let sums = SquareSums::<Rational>::new(n);
    let h1 = sums.h(1, t)?;
    let h2 = sums.h(2, t)?;
    let params = || format!("n={n},t={t}");
    let mut report = VerificationReport::new("thm1-edge", params());
    report.check_gt(params, &h1, &h2);

    let tail: Rational = harmonic_sum(2, n, HarmonicOrder::Second)?;
    let (ni, n1) = (n as i64, n as i64 - 1);
    let integral_bound = q(4 * n1, 3 * (2 * ni + 1));
    report.check_lt(|| format!("n={n},sum_2^n"), &tail, &integral_bound);
    report.check_lt(|| format!("n={n},integral"), &integral_bound, &q(n1 * n1, ni * ni));
    Ok(report)
}

/// `h_exp(n,k,t) < h_uniform(n,k,t)` for every `k + t <= n`.
pub fn verify_theorem2(n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(out_of_range(format!("comparison needs n >= 2, got {n}")));
    }
    let sums = SquareSums::<Rational>::new(n);
    let mut report = VerificationReport::new("thm2-exp-below-uniform", format!("n={n}"));
    for t in 1..n {
        for k in 1..=n - t {
            let he = sums.h(k, t)?;
            let hu: Rational = h_uniform(n, k, t)?;
            report.check_lt(|| format!("n={n},k={k},t={t}"), &he, &hu);
        }
    }
    Ok(report)
}

/// Shape of the uniform correlation in `k`: strictly unimodal with peak `m`
/// when `n - t` is odd, and increasing to a tie `h(m) = h(m+1)` followed by a
/// strict decrease when `n - t` is even. At `t = n - 2` both values equal
/// `2/(n(n-1))`. `t = n - 1` has a single value and passes vacuously.
pub fn uniform_shape(n: usize, t: usize) -> Result<VerificationReport> {
    if t < 1 || t >= n {
        return Err(out_of_range(format!("need 1 <= t <= n-1; got n={n}, t={t}")));
    }
    let hs: Vec<Rational> = (1..=n - t).map(|k| h_uniform(n, k, t)).collect::<Result<_>>()?;
    let m = peak_rule(n, t);
    let even = (n - t).is_multiple_of(2);
    let mut report = VerificationReport::new("uniform-shape", format!("n={n},t={t},m={m}"));
    for k in 1..n - t {
        let (here, next) = (&hs[k - 1], &hs[k]);
        let params = || format!("n={n},t={t},k={k}");
        if k < m {
            report.check_lt(params, here, next);
        } else if k == m && even {
            report.check_eq(params, here, next);
        } else {
            report.check_gt(params, here, next);
        }
    }
    if t + 2 == n {
        let edge = q(2, (n * (n - 1)) as i64);
        report.check_eq(|| format!("n={n},k=1"), &hs[0], &edge);
        report.check_eq(|| format!("n={n},k=2"), &hs[1], &edge);
    }
    Ok(report)
}

/// Index map for negated exponentials `Y_i = -X_{n+1-i}`:
/// `corr(Y_(i), Y_(i+t)) = corr(X_(j), X_(j+t))` with `j = n + 1 - i - t`.
pub fn reflection_map(n: usize, i: usize, t: usize) -> Result<(usize, usize)> {
    if i < 1 || t < 1 || i + t > n {
        return Err(out_of_range(format!(
            "need i >= 1, t >= 1, i + t <= n; got n={n}, i={i}, t={t}"
        )));
    }
    Ok((n + 1 - i - t, t))
}

/// The exponential edge case is strict while the uniform one is a tie.
pub fn verify_edge_contrast(n: usize) -> Result<VerificationReport> {
    if n < 3 {
        return Err(out_of_range(format!("edge case needs n >= 3, got {n}")));
    }
    let t = n - 2;
    let sums = SquareSums::<Rational>::new(n);
    let mut report = VerificationReport::new("edge-contrast", format!("n={n}"));
    report.check_gt(|| format!("n={n},exp"), &sums.h(1, t)?, &sums.h(2, t)?);
    report.check_eq(
        || format!("n={n},uniform"),
        &h_uniform::<Rational>(n, 1, t)?,
        &h_uniform::<Rational>(n, 2, t)?,
    );
    Ok(report)
}
