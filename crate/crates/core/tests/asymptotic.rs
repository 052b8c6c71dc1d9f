use num_traits::Signed;
use orderstat::bounds::{rho_asymptotic_bounds, AsymptoticCase};
use orderstat::Rational;

fn x(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

#[test]
fn peak_correlation_sits_inside_the_bounds() {
    for (p, q) in [(1, 2), (1, 3), (2, 5), (3, 7), (1, 10)] {
        for n in 8..=120 {
            let Ok(b) = rho_asymptotic_bounds(n, &x(p, q)) else {
                continue;
            };
            let (lo2, hi2) = (&b.pair.lower * &b.pair.lower, &b.pair.upper * &b.pair.upper);
            assert!(
                lo2 <= b.pair.target && b.pair.target < hi2,
                "x={p}/{q} n={n} {:?}",
                b.case
            );
        }
    }
}

#[test]
fn gap_shrinks_along_the_integer_lattice() {
    // with n a multiple of 2q, nx is an integer and n - nx is even
    for (p, q) in [(1, 2), (1, 3), (2, 5), (3, 7)] {
        let mut previous: Option<Rational> = None;
        for step in 1..=20 {
            let n = (2 * q * step) as usize;
            let Ok(b) = rho_asymptotic_bounds(n, &x(p, q)) else {
                continue;
            };
            assert_eq!(b.case, AsymptoticCase::IntegerEven);
            let t = Rational::from_integer(b.t.into());
            let n_r = Rational::from_integer(n.into());
            let four = Rational::from_integer(4.into());
            let two = Rational::from_integer(2.into());
            assert_eq!(b.pair.gap(), four * &t / ((&n_r + &t) * (&n_r + &t + two)));
            if let Some(prev) = &previous {
                assert!(b.pair.gap() < *prev, "x={p}/{q} n={n}");
            }
            previous = Some(b.pair.gap());
        }
    }
}

#[test]
fn bounds_approach_the_limit() {
    let x = x(1, 3);
    let b = rho_asymptotic_bounds(1500, &x).unwrap();
    let tol = Rational::new(1.into(), 500.into());
    assert!((&b.pair.lower - b.limit()).abs() < tol);
    assert!((&b.pair.upper - b.limit()).abs() < tol);
}
