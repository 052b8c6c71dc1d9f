//! Closed-form brackets for the exponential squared correlation `h(k)` and
//! for the peak correlation `rho_{m,t}`.
//!
//! All formulas are evaluated as written, factor by factor, in the caller's
//! scalar type. Comparisons between an unsquared `rho` bound and the squared
//! target are done by squaring the bound.

use num_traits::{One, Signed};

use crate::error::{out_of_range, Error, Result};
use crate::exact::{h_exp, SquareSums};
use crate::scalar::{product, Scalar};
use crate::verify::peak_index;
use crate::Rational;

/// What `lower` and `upper` bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bracket {
    /// The squared correlation `h` itself.
    Squared,
    /// The correlation `rho = sqrt(h)`; the stored target is still `h`.
    Unsquared,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsPair<T> {
    pub lower: T,
    pub upper: T,
    /// Always the squared correlation `h`.
    pub target: T,
    pub bracket: Bracket,
}

impl<T: Scalar> BoundsPair<T> {
    pub fn holds(&self) -> bool {
        self.lower_holds() && self.upper_holds()
    }

    pub fn lower_holds(&self) -> bool {
        match self.bracket {
            Bracket::Squared => self.lower < self.target,
            Bracket::Unsquared => self.lower < T::zero() || self.lower.square() < self.target,
        }
    }

    pub fn upper_holds(&self) -> bool {
        match self.bracket {
            Bracket::Squared => self.target < self.upper,
            Bracket::Unsquared => self.upper > T::zero() && self.target < self.upper.square(),
        }
    }

    pub fn gap(&self) -> T {
        self.upper.clone() - self.lower.clone()
    }

    /// Target on the same scale as the bounds, as a float.
    pub fn target_on_scale(&self) -> f64 {
        match self.bracket {
            Bracket::Squared => self.target.to_f64(),
            Bracket::Unsquared => self.target.to_f64().sqrt(),
        }
    }
}

fn check_regime(n: usize, t: usize) -> Result<()> {
    if t < 1 || n < t + 3 {
        return Err(Error::OutOfRegime(format!(
            "bounds need 1 <= t <= n-3; got n={n}, t={t}"
        )));
    }
    Ok(())
}

/// Integral-comparison bounds `lower < h(k) < upper` for exponential samples.
pub fn h_bounds<T: Scalar>(n: usize, k: usize, t: usize) -> Result<BoundsPair<T>> {
    let (lower, upper) = h_bound_values(n, k, t)?;
    Ok(BoundsPair {
        lower,
        upper,
        target: h_exp(n, k, t)?,
        bracket: Bracket::Squared,
    })
}

/// The two bound formulas without the target.
pub fn h_bound_values<T: Scalar>(n: usize, k: usize, t: usize) -> Result<(T, T)> {
    check_regime(n, t)?;
    if k < 1 || k + t > n {
        return Err(out_of_range(format!("need 1 <= k <= n-t; got n={n}, k={k}, t={t}")));
    }
    let (n, k, t) = (n as i64, k as i64, t as i64);
    let lower_bracket =
        product::<T>(&[n, n]) + product::<T>(&[n + 1 - k, n + 1 - k]) + product::<T>(&[2, n, n + 1 - k, k - 1]);
    let lower = product::<T>(&[2 * n + 1, 2 * n + 1 - 2 * k - 2 * t]) * lower_bracket
        / product::<T>(&[8, n, n, n + 1 - k, n + 1 - k, k + t]);

    let r = n + 1 - k - t;
    let upper_bracket = product::<T>(&[n, n]) + product::<T>(&[r, r]) + product::<T>(&[2, n, r, k + t - 1]);
    let upper = product::<T>(&[8, n, n, r, r, k]) / (product::<T>(&[2 * n + 1, 2 * n + 1 - 2 * k]) * upper_bracket);
    Ok((lower, upper))
}

/// `(n-m-t)/(n-m) < rho_{m,t} < (n+1-m-t)/(n+1-m)` at the peak index `m`.
pub fn rho_peak_bounds<T: Scalar>(n: usize, t: usize) -> Result<BoundsPair<T>> {
    check_regime(n, t)?;
    let m = peak_index(n, t)?.m;
    let (ni, mi, ti) = (n as i64, m as i64, t as i64);
    Ok(BoundsPair {
        lower: T::ratio(ni - mi - ti, ni - mi),
        upper: T::ratio(ni + 1 - mi - ti, ni + 1 - mi),
        target: h_exp(n, m, t)?,
        bracket: Bracket::Unsquared,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticCase {
    /// `n - floor(nx)` even.
    FloorEven,
    /// `n - floor(nx)` odd.
    FloorOdd,
    /// `nx` integer and `n - nx` even.
    IntegerEven,
    /// `nx` integer and `n - nx` odd.
    IntegerOdd,
}

/// Peak-correlation bounds with the gap parameter tied to `n` by `t = floor(nx)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticBounds {
    pub n: usize,
    pub x: Rational,
    pub t: usize,
    pub m: usize,
    pub case: AsymptoticCase,
    pub pair: BoundsPair<Rational>,
}

impl AsymptoticBounds {
    /// `(1-x)/(1+x)`, the common limit of both bounds.
    pub fn limit(&self) -> Rational {
        let one = Rational::one();
        (&one - &self.x) / (&one + &self.x)
    }
}

pub fn rho_asymptotic_bounds(n: usize, x: &Rational) -> Result<AsymptoticBounds> {
    if !x.is_positive() || *x >= Rational::one() {
        return Err(Error::InvalidArgument(format!("x must lie in (0, 1), got {x}")));
    }
    let nx = x * Rational::from_integer(n.into());
    let t_big = nx.floor().to_integer();
    let t: usize = t_big
        .try_into()
        .map_err(|_| Error::OutOfRegime(format!("floor(n x) out of range for n={n}")))?;
    check_regime(n, t)
        .map_err(|_| Error::OutOfRegime(format!("t = floor(n x) = {t} must satisfy 1 <= t <= n-3 (n={n})")))?;
    let m = peak_index(n, t)?.m;
    let even = (n - t).is_multiple_of(2);
    let integer = nx.is_integer();
    let (ni, ti) = (n as i64, t as i64);
    let one = Rational::one();
    let (case, lower, upper) = if integer {
        let inv_n = Rational::new(1.into(), n.into());
        let shift = if even {
            &inv_n * Rational::from_integer(2.into())
        } else {
            inv_n.clone()
        };
        if even {
            (
                AsymptoticCase::IntegerEven,
                (&one - x) / (&one + x),
                (&one - x + &shift) / (&one + x + &shift),
            )
        } else {
            (
                AsymptoticCase::IntegerOdd,
                (&one - x - &shift) / (&one + x - &shift),
                (&one - x + &shift) / (&one + x + &shift),
            )
        }
    } else if even {
        (
            AsymptoticCase::FloorEven,
            Rational::ratio(ni - ti, ni + ti),
            Rational::ratio(ni - ti + 2, ni + ti + 2),
        )
    } else {
        (
            AsymptoticCase::FloorOdd,
            Rational::ratio(ni - ti - 1, ni + ti - 1),
            Rational::ratio(ni - ti + 1, ni + ti + 1),
        )
    };
    Ok(AsymptoticBounds {
        n,
        x: x.clone(),
        t,
        m,
        case,
        pair: BoundsPair {
            lower,
            upper,
            target: h_exp(n, m, t)?,
            bracket: Bracket::Unsquared,
        },
    })
}

/// The `k` (1-based) for which the `h_bounds` sandwich holds at `(n, t)`.
pub fn sandwich_holding_ks(n: usize, t: usize) -> Result<Vec<usize>> {
    check_regime(n, t)?;
    let sums = SquareSums::<Rational>::new(n);
    let mut holding = Vec::new();
    for k in 1..=n - t {
        let (lower, upper) = h_bound_values::<Rational>(n, k, t)?;
        let h = sums.h(k, t)?;
        if lower < h && h < upper {
            holding.push(k);
        }
    }
    Ok(holding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::parse_rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn h_bounds_example_n5() {
        let b: BoundsPair<Rational> = h_bounds(5, 2, 1).unwrap();
        assert_eq!(b.lower, q(4455, 9600));
        assert_eq!(b.upper, q(3600, 7238));
        assert!(b.holds());
        assert!((b.target.to_f64() - 0.4798).abs() < 5e-5);
    }

    #[test]
    fn h_bounds_examples() {
        let b: BoundsPair<Rational> = h_bounds(8, 4, 1).unwrap();
        assert!(b.lower.to_f64() < 0.624 && 0.624 < b.upper.to_f64());
        assert!(b.holds());
        assert!(h_bounds::<Rational>(20, 5, 3).unwrap().holds());
        assert!(matches!(h_bounds::<Rational>(8, 1, 6), Err(Error::OutOfRegime(_))));
        assert!(h_bounds::<Rational>(8, 6, 3).is_err());
    }

    #[test]
    fn float_bounds_match_exact() {
        for (n, k, t) in [(5, 2, 1), (20, 5, 3), (40, 17, 9)] {
            let e: BoundsPair<Rational> = h_bounds(n, k, t).unwrap();
            let f: BoundsPair<f64> = h_bounds(n, k, t).unwrap();
            assert!((e.lower.to_f64() - f.lower).abs() < 1e-14);
            assert!((e.upper.to_f64() - f.upper).abs() < 1e-14);
        }
    }

    #[test]
    fn peak_bounds_examples() {
        let b: BoundsPair<Rational> = rho_peak_bounds(8, 2).unwrap();
        assert_eq!((b.lower.clone(), b.upper.clone()), (q(3, 5), q(4, 6)));
        assert!(b.holds());
        assert!((b.target_on_scale() - 0.6197).abs() < 1e-3);

        let b: BoundsPair<Rational> = rho_peak_bounds(9, 3).unwrap();
        assert_eq!((b.lower.clone(), b.upper.clone()), (q(1, 2), q(4, 7)));
        assert!(b.holds());

        let b: BoundsPair<Rational> = rho_peak_bounds(6, 1).unwrap();
        assert_eq!((b.lower.clone(), b.upper.clone()), (q(2, 3), q(3, 4)));
        assert!(b.holds());
        assert!((b.target_on_scale() - 0.540f64.sqrt()).abs() < 1e-3);
    }

    #[test]
    fn asymptotic_even_case() {
        let a = rho_asymptotic_bounds(100, &q(1, 2)).unwrap();
        assert_eq!(a.t, 50);
        assert_eq!(a.case, AsymptoticCase::IntegerEven);
        assert_eq!((a.pair.lower.clone(), a.pair.upper.clone()), (q(50, 150), q(52, 152)));
        assert!(a.pair.holds());

        let a = rho_asymptotic_bounds(99, &q(1, 2)).unwrap();
        assert_eq!(a.t, 49);
        assert_eq!(a.case, AsymptoticCase::FloorEven);
        assert!(a.pair.holds());
    }

    #[test]
    fn asymptotic_cases_agree_with_peak_bounds() {
        for x in ["0.5", "1/3", "0.25", "2/5", "0.1", "0.37"] {
            let x = parse_rational(x).unwrap();
            for n in 5..120 {
                let Ok(a) = rho_asymptotic_bounds(n, &x) else { continue };
                let peak: BoundsPair<Rational> = rho_peak_bounds(n, a.t).unwrap();
                assert_eq!(a.pair.lower, peak.lower, "n={n} x={x}");
                assert_eq!(a.pair.upper, peak.upper, "n={n} x={x}");
                assert!(a.pair.holds());
            }
        }
    }

    #[test]
    fn asymptotic_gap_small_for_large_n() {
        let a = rho_asymptotic_bounds(200, &q(1, 2)).unwrap();
        assert!(a.pair.gap().to_f64() < 0.03);
        assert!(a.pair.lower < a.limit() || a.pair.lower == a.limit());
        assert!(a.limit() < a.pair.upper);
    }

    #[test]
    fn asymptotic_rejects_degenerate_inputs() {
        assert!(rho_asymptotic_bounds(10, &q(0, 1)).is_err());
        assert!(rho_asymptotic_bounds(10, &q(1, 1)).is_err());
        // floor(10 * 0.05) = 0
        assert!(rho_asymptotic_bounds(10, &q(1, 20)).is_err());
        // floor(10 * 0.9) = 9 > n - 3
        assert!(rho_asymptotic_bounds(10, &q(9, 10)).is_err());
    }

    #[test]
    fn sandwich_holds_for_every_k_small_grid() {
        for n in 4..25 {
            for t in 1..=n - 3 {
                let ks = sandwich_holding_ks(n, t).unwrap();
                assert_eq!(ks, (1..=n - t).collect::<Vec<_>>());
            }
        }
    }
}
