use std::fmt::Debug;

use num_traits::{Num, ToPrimitive};

use crate::Rational;

/// Field-like number type the closed-form order-statistic formulas are
/// evaluated in.
///
/// Implemented for `f32`, `f64` and [`Rational`]. Only `Rational` gives exact
/// comparisons; the float instances exist for fast approximate evaluation
/// and for cross-checking the exact path.
pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync {
    fn from_int(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_int(v: i64) -> Self {
        v as f32
    }

    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for Rational {
    fn from_int(v: i64) -> Self {
        Rational::from_integer(v.into())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Product of small integer factors, evaluated in `T` so that nothing
/// overflows before reaching the scalar type.
pub(crate) fn product<T: Scalar>(factors: &[i64]) -> T {
    factors.iter().fold(T::one(), |acc, &f| acc * T::from_int(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_is_exact_for_rationals() {
        let r = Rational::ratio(6, 8);
        assert_eq!(r, Rational::new(3.into(), 4.into()));
        assert_eq!(Scalar::to_f64(&r), 0.75);
    }

    #[test]
    fn product_of_factors() {
        assert_eq!(product::<f64>(&[2, 3, 7]), 42.0);
        let big: Rational = product(&[1 << 40, 1 << 40]);
        assert_eq!(big, Rational::from_integer(num_bigint::BigInt::from(1u128 << 80)));
    }
}
