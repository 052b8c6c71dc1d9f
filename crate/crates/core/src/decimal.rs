//! Presentation helpers for exact and floating-point values.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::Rational;

/// Round to `places` decimals, half away from zero, and render with exactly
/// that many digits after the point.
pub fn round_half_away(x: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let twice = scaled * Rational::from_integer(2.into());
    // floor(|x| * 10^p + 1/2) == floor((2|x| 10^p + 1) / 2)
    let numer = twice.numer() + twice.denom();
    let rounded = (numer / twice.denom()).div_floor(&BigInt::from(2));
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let negative = x.is_negative() && !rounded.is_zero();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        let frac = frac_part.to_string();
        out.push('.');
        out.extend(std::iter::repeat_n('0', places - frac.len()));
        out.push_str(&frac);
    }
    out
}

/// Same rounding rule applied to the exact binary value of an `f64`.
pub fn format_f64(x: f64, places: usize) -> String {
    match Rational::from_float(x) {
        Some(r) => round_half_away(&r, places),
        None => x.to_string(),
    }
}

/// `num/den`, always with an explicit denominator.
pub fn fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse `a/b`, an integer, or a plain decimal such as `0.35` into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    let value = Rational::new(digits, den);
    Some(if neg { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rounds_half_away_from_zero() {
        assert_eq!(round_half_away(&q(1, 8), 2), "0.13");
        assert_eq!(round_half_away(&q(-1, 8), 2), "-0.13");
        assert_eq!(round_half_away(&q(16, 41), 3), "0.390");
        assert_eq!(round_half_away(&q(3, 2), 0), "2");
        assert_eq!(round_half_away(&q(-1, 1000), 2), "0.00");
        assert_eq!(round_half_away(&q(1, 100), 3), "0.010");
    }

    #[test]
    fn float_uses_exact_binary_value() {
        // 0.125 is exact in binary, so it rounds up.
        assert_eq!(format_f64(0.125, 2), "0.13");
        // 2.675 is stored slightly below, so it rounds down.
        assert_eq!(format_f64(2.675, 2), "2.67");
    }

    #[test]
    fn fractions_always_carry_denominator() {
        assert_eq!(fraction_string(&q(1, 1)), "1/1");
        assert_eq!(fraction_string(&q(4455, 9600)), "297/640");
    }

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_rational("0.5"), Some(q(1, 2)));
        assert_eq!(parse_rational("2/6"), Some(q(1, 3)));
        assert_eq!(parse_rational("-.25"), Some(q(-1, 4)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }
}
