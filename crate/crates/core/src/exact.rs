//! Exact moments and correlations of exponential and uniform order statistics.
//!
//! With unit rate, the spacings `Y_i = X_(i) - X_(i-1)` are independent
//! exponentials with mean `1/(n+1-i)`, so
//!
//! ```text
//! E X_(k)   = sum_{i=n+1-k}^{n} 1/i
//! Var X_(k) = sum_{i=n+1-k}^{n} 1/i^2
//! Cov(X_(k), X_(k+t)) = Var X_(k)
//! ```
//!
//! and the squared correlation `h(k) = rho^2_{k,t}` is a ratio of two tails of
//! the series `sum 1/i^2`. Correlations are always carried squared; square
//! roots only appear when rendering.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_pair, out_of_range, Result};
use crate::report::VerificationReport;
use crate::scalar::{product, Scalar};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicOrder {
    /// `sum 1/i`
    First,
    /// `sum 1/i^2`
    Second,
}

/// `sum_{i=a}^{b} 1/i^p` for `p` in {1, 2}.
pub fn harmonic_sum<T: Scalar>(a: usize, b: usize, order: HarmonicOrder) -> Result<T> {
    if a < 1 || b < a {
        return Err(out_of_range(format!(
            "harmonic sum needs 1 <= a <= b, got a={a}, b={b}"
        )));
    }
    let mut acc = T::zero();
    for i in a..=b {
        let i = i as i64;
        let term = match order {
            HarmonicOrder::First => T::from_int(i),
            HarmonicOrder::Second => T::from_int(i) * T::from_int(i),
        };
        acc = acc + T::one() / term;
    }
    Ok(acc)
}

/// Mean and variance of the `k`-th order statistic of `n` unit-rate exponentials.
#[derive(Debug, Clone, PartialEq)]
pub struct OsMoments<T> {
    pub n: usize,
    pub k: usize,
    pub mean: T,
    pub variance: T,
}

pub fn exp_os_moments<T: Scalar>(n: usize, k: usize) -> Result<OsMoments<T>> {
    if n < 2 || k < 1 || k > n {
        return Err(out_of_range(format!("need n >= 2 and 1 <= k <= n; got n={n}, k={k}")));
    }
    Ok(OsMoments {
        n,
        k,
        mean: harmonic_sum(n + 1 - k, n, HarmonicOrder::First)?,
        variance: harmonic_sum(n + 1 - k, n, HarmonicOrder::Second)?,
    })
}

/// `Cov(X_(k), X_(k+t))` for unit-rate exponentials. The later spacings are
/// independent of `X_(k)`, so this is just `Var X_(k)`.
pub fn exp_cov<T: Scalar>(n: usize, k: usize, t: usize) -> Result<T> {
    check_pair(n, k, t)?;
    harmonic_sum(n + 1 - k, n, HarmonicOrder::Second)
}

/// Squared correlation of `X_(k)` and `X_(k+t)` for exponential samples.
pub fn h_exp<T: Scalar>(n: usize, k: usize, t: usize) -> Result<T> {
    check_pair(n, k, t)?;
    let num: T = harmonic_sum(n + 1 - k, n, HarmonicOrder::Second)?;
    let den: T = harmonic_sum(n + 1 - k - t, n, HarmonicOrder::Second)?;
    Ok(num / den)
}

/// Squared correlation of `X_(k)` and `X_(k+t)` for uniform samples:
/// `k(n+1-k-t) / ((k+t)(n+1-k))`.
pub fn h_uniform<T: Scalar>(n: usize, k: usize, t: usize) -> Result<T> {
    check_pair(n, k, t)?;
    let (n, k, t) = (n as i64, k as i64, t as i64);
    Ok(product::<T>(&[k, n + 1 - k - t]) / product::<T>(&[k + t, n + 1 - k]))
}

/// Tails `S(a) = sum_{i=a}^{n} 1/i^2` for one sample size, so that every
/// `h(k)` for that `n` is a single division.
#[derive(Debug, Clone)]
pub struct SquareSums<T> {
    n: usize,
    // tails[a] = S(a) for a in 1..=n+1; tails[0] unused.
    tails: Vec<T>,
}

impl<T: Scalar> SquareSums<T> {
    pub fn new(n: usize) -> Self {
        let mut tails = vec![T::zero(); n + 2];
        for a in (1..=n).rev() {
            let a64 = a as i64;
            tails[a] = tails[a + 1].clone() + T::one() / (T::from_int(a64) * T::from_int(a64));
        }
        Self { n, tails }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `sum_{i=a}^{n} 1/i^2`; zero for `a = n + 1`.
    pub fn tail(&self, a: usize) -> &T {
        &self.tails[a]
    }

    pub fn variance(&self, k: usize) -> &T {
        self.tail(self.n + 1 - k)
    }

    pub fn h(&self, k: usize, t: usize) -> Result<T> {
        check_pair(self.n, k, t)?;
        Ok(self.tails[self.n + 1 - k].clone() / self.tails[self.n + 1 - k - t].clone())
    }
}

/// Families with exact closed-form correlations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactFamily {
    Exponential,
    Uniform,
}

impl ExactFamily {
    pub fn h<T: Scalar>(self, n: usize, k: usize, t: usize) -> Result<T> {
        match self {
            ExactFamily::Exponential => h_exp(n, k, t),
            ExactFamily::Uniform => h_uniform(n, k, t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistTag {
    Exponential,
    Uniform,
    Generic(String),
}

impl DistTag {
    pub fn name(&self) -> &str {
        match self {
            DistTag::Exponential => "exponential",
            DistTag::Uniform => "uniform",
            DistTag::Generic(s) => s,
        }
    }
}

impl From<ExactFamily> for DistTag {
    fn from(f: ExactFamily) -> Self {
        match f {
            ExactFamily::Exponential => DistTag::Exponential,
            ExactFamily::Uniform => DistTag::Uniform,
        }
    }
}

/// `h(k)` for `k = 1..=n-t` at fixed `(n, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrTable<T> {
    pub n: usize,
    pub t: usize,
    pub values: Vec<(usize, T)>,
    /// First index attaining the maximum.
    pub peak_k: usize,
    pub distribution: DistTag,
}

impl<T: Scalar> CorrTable<T> {
    pub fn from_values(n: usize, t: usize, hs: Vec<T>, distribution: DistTag) -> Result<Self> {
        if t < 1 || t >= n || hs.len() != n - t {
            return Err(out_of_range(format!(
                "table for n={n}, t={t} needs {} values, got {}",
                n.saturating_sub(t),
                hs.len()
            )));
        }
        let mut peak = 0;
        for (i, h) in hs.iter().enumerate() {
            if *h > hs[peak] {
                peak = i;
            }
        }
        Ok(Self {
            n,
            t,
            values: hs.into_iter().enumerate().map(|(i, h)| (i + 1, h)).collect(),
            peak_k: peak + 1,
            distribution,
        })
    }

    pub fn h(&self, k: usize) -> Option<&T> {
        self.values.get(k.checked_sub(1)?).map(|(_, h)| h)
    }

    /// Every `k` attaining the maximum (more than one for tied peaks).
    pub fn peaks(&self) -> Vec<usize> {
        let max = &self.values[self.peak_k - 1].1;
        self.values.iter().filter(|(_, h)| h == max).map(|(k, _)| *k).collect()
    }
}

pub fn corr_table<T: Scalar>(n: usize, t: usize, family: ExactFamily) -> Result<CorrTable<T>> {
    if t < 1 || t >= n {
        return Err(out_of_range(format!("need 1 <= t <= n-1; got n={n}, t={t}")));
    }
    let hs = match family {
        ExactFamily::Exponential => {
            let sums = SquareSums::<T>::new(n);
            (1..=n - t).map(|k| sums.h(k, t)).collect::<Result<Vec<_>>>()?
        }
        ExactFamily::Uniform => (1..=n - t).map(|k| h_uniform(n, k, t)).collect::<Result<Vec<_>>>()?,
    };
    CorrTable::from_values(n, t, hs, family.into())
}

/// Alternating binomial sum `sum_{i=1}^{n} C(n,i) (-1)^{i+1} / i^p`, evaluated
/// left to right with exact rationals.
fn alternating_binomial_sum(n: usize, order: HarmonicOrder) -> Rational {
    let mut binom = BigInt::one();
    let mut acc = Rational::zero();
    for i in 1..=n {
        binom = binom * BigInt::from(n + 1 - i) / BigInt::from(i);
        let power = match order {
            HarmonicOrder::First => BigInt::from(i),
            HarmonicOrder::Second => BigInt::from(i) * BigInt::from(i),
        };
        let term = Rational::new(binom.clone(), power);
        if i % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Both sides of `sum C(n,i)(-1)^{i+1}/i^2 = (sum 1/i^2 + (sum 1/i)^2) / 2`.
pub fn identity_one_sides(n: usize) -> Result<(Rational, Rational)> {
    if n < 1 {
        return Err(out_of_range("identity needs n >= 1"));
    }
    let lhs = alternating_binomial_sum(n, HarmonicOrder::Second);
    let h1: Rational = harmonic_sum(1, n, HarmonicOrder::First)?;
    let h2: Rational = harmonic_sum(1, n, HarmonicOrder::Second)?;
    let rhs = (h2 + &h1 * &h1) / Rational::from_integer(2.into());
    Ok((lhs, rhs))
}

/// Both sides of `sum C(n,i)(-1)^{i+1}/i = sum 1/i`.
pub fn identity_two_sides(n: usize) -> Result<(Rational, Rational)> {
    if n < 1 {
        return Err(out_of_range("identity needs n >= 1"));
    }
    let lhs = alternating_binomial_sum(n, HarmonicOrder::First);
    let rhs = harmonic_sum(1, n, HarmonicOrder::First)?;
    Ok((lhs, rhs))
}

pub fn identity_one(n: usize) -> Result<VerificationReport> {
    let (lhs, rhs) = identity_one_sides(n)?;
    let mut report = VerificationReport::new("identity-1", format!("n={n}"));
    report.check_eq(|| format!("n={n}"), &lhs, &rhs);
    Ok(report)
}

pub fn identity_two(n: usize) -> Result<VerificationReport> {
    let (lhs, rhs) = identity_two_sides(n)?;
    let mut report = VerificationReport::new("identity-2", format!("n={n}"));
    report.check_eq(|| format!("n={n}"), &lhs, &rhs);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::round_half_away;
    use crate::Error;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    /// Independent oracle: sum of exact terms built from scratch.
    fn brute_h(n: usize, k: usize, t: usize) -> Rational {
        let tail = |a: usize| -> Rational {
            (a..=n)
                .map(|i| q(1, (i * i) as i64))
                .fold(Rational::zero(), |s, x| s + x)
        };
        tail(n + 1 - k) / tail(n + 1 - k - t)
    }

    #[test]
    fn harmonic_sum_examples() {
        assert_eq!(harmonic_sum::<Rational>(1, 1, HarmonicOrder::First).unwrap(), q(1, 1));
        assert_eq!(harmonic_sum::<Rational>(1, 2, HarmonicOrder::Second).unwrap(), q(5, 4));
        assert_eq!(
            harmonic_sum::<Rational>(4, 5, HarmonicOrder::Second).unwrap(),
            q(41, 400)
        );
    }

    #[test]
    fn harmonic_sum_rejects_bad_windows() {
        assert!(matches!(
            harmonic_sum::<f64>(0, 3, HarmonicOrder::First),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            harmonic_sum::<f64>(4, 3, HarmonicOrder::First),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn moments_examples() {
        let m = exp_os_moments::<Rational>(5, 1).unwrap();
        assert_eq!((m.mean, m.variance), (q(1, 5), q(1, 25)));
        let m = exp_os_moments::<Rational>(2, 2).unwrap();
        assert_eq!((m.mean, m.variance), (q(3, 2), q(5, 4)));
        assert_eq!(exp_os_moments::<Rational>(5, 5).unwrap().mean, q(137, 60));
        assert!(exp_os_moments::<Rational>(1, 1).is_err());
        assert!(exp_os_moments::<Rational>(5, 6).is_err());
        assert!(exp_os_moments::<Rational>(5, 0).is_err());
    }

    #[test]
    fn covariance_examples() {
        assert_eq!(exp_cov::<Rational>(5, 1, 1).unwrap(), q(1, 25));
        assert_eq!(exp_cov::<Rational>(5, 2, 3).unwrap(), q(41, 400));
        assert!(exp_cov::<Rational>(5, 2, 4).is_err());
    }

    #[test]
    fn h_exp_examples() {
        assert_eq!(h_exp::<Rational>(5, 1, 1).unwrap(), q(16, 41));
        let r3 = |x: Rational| round_half_away(&x, 3);
        assert_eq!(r3(h_exp(5, 1, 1).unwrap()), "0.390");
        assert_eq!(r3(h_exp(6, 3, 1).unwrap()), "0.540");
        assert_eq!(r3(h_exp(8, 4, 3).unwrap()), "0.197");
    }

    #[test]
    fn h_uniform_examples() {
        assert_eq!(h_uniform::<Rational>(2, 1, 1).unwrap(), q(1, 4));
        for n in 3..30usize {
            assert_eq!(h_uniform::<Rational>(n, 1, n - 2).unwrap(), q(2, (n * (n - 1)) as i64));
        }
        assert_eq!(h_uniform::<Rational>(6, 2, 2).unwrap(), q(3, 10));
        assert_eq!(h_uniform::<Rational>(6, 3, 2).unwrap(), q(3, 10));
    }

    #[test]
    fn square_sums_agree_with_direct_ratio() {
        for n in 2..25 {
            let sums = SquareSums::<Rational>::new(n);
            for t in 1..n {
                for k in 1..=n - t {
                    let fast = sums.h(k, t).unwrap();
                    assert_eq!(fast, brute_h(n, k, t));
                    assert_eq!(fast, h_exp::<Rational>(n, k, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn float_path_tracks_exact_path() {
        for n in 2..40 {
            for t in 1..n {
                for k in 1..=n - t {
                    let exact: Rational = h_exp(n, k, t).unwrap();
                    let approx: f64 = h_exp(n, k, t).unwrap();
                    assert!((Scalar::to_f64(&exact) - approx).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn corr_table_examples() {
        let t: CorrTable<Rational> = corr_table(5, 1, ExactFamily::Exponential).unwrap();
        let shown: Vec<_> = t.values.iter().map(|(_, h)| round_half_away(h, 3)).collect();
        assert_eq!(shown, ["0.390", "0.480", "0.461", "0.317"]);
        assert_eq!(t.peak_k, 2);

        let t: CorrTable<Rational> = corr_table(9, 4, ExactFamily::Exponential).unwrap();
        let shown: Vec<_> = t.values.iter().map(|(_, h)| round_half_away(h, 3)).collect();
        assert_eq!(shown, ["0.106", "0.157", "0.167", "0.141", "0.075"]);

        let t: CorrTable<Rational> = corr_table(5, 4, ExactFamily::Exponential).unwrap();
        assert_eq!(t.values.len(), 1);
        assert_eq!(round_half_away(&t.values[0].1, 3), "0.027");

        let u: CorrTable<Rational> = corr_table(6, 2, ExactFamily::Uniform).unwrap();
        assert_eq!(u.peaks(), vec![2, 3]);
        assert_eq!(u.peak_k, 2);

        assert!(corr_table::<f64>(5, 5, ExactFamily::Exponential).is_err());
        assert!(corr_table::<f64>(5, 0, ExactFamily::Uniform).is_err());
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity_one_sides(1).unwrap(), (q(1, 1), q(1, 1)));
        assert_eq!(identity_one_sides(2).unwrap(), (q(7, 4), q(7, 4)));
        assert_eq!(identity_two_sides(1).unwrap(), (q(1, 1), q(1, 1)));
        assert_eq!(identity_two_sides(2).unwrap(), (q(3, 2), q(3, 2)));
        assert!(identity_one(30).unwrap().passed());
        assert!(identity_two(50).unwrap().passed());
        assert!(identity_one(0).is_err());
    }

    #[test]
    fn identity_one_matches_second_moment_of_maximum() {
        // E X_(n)^2 = Var + mean^2 = 2 * lhs of the identity.
        for n in 2..20 {
            let m = exp_os_moments::<Rational>(n, n).unwrap();
            let (lhs, _) = identity_one_sides(n).unwrap();
            assert_eq!(&m.variance + &m.mean * &m.mean, lhs * q(2, 1));
        }
    }
}
