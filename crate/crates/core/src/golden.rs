//! Published three-decimal tables of `h(k)` for `n = 5, 6, 8, 9`, compared
//! against exact values.
//!
//! A published cell either matches the exact value rounded half away from
//! zero, is off by one unit in the last place (a rounding slip), or is off by
//! more than that (a transcription error).

use std::fmt::Write as _;

use num_traits::Signed;

use crate::decimal::{fraction_string, parse_rational, round_half_away};
use crate::exact::SquareSums;
use crate::Rational;

/// `(n, t, h(1..=n-t))` as printed.
pub const REFERENCE_TABLES: &[(usize, usize, &[&str])] = &[
    (5, 1, &["0.390", "0.480", "0.461", "0.317"]),
    (5, 2, &["0.187", "0.221", "0.146"]),
    (5, 3, &["0.086", "0.070"]),
    (5, 4, &["0.027"]),
    (6, 1, &["0.410", "0.520", "0.540", "0.491", "0.329"]),
    (6, 2, &["0.213", "0.281", "0.265", "0.162"]),
    (6, 3, &["0.115", "0.138", "0.087"]),
    (6, 4, &["0.056", "0.045"]),
    (6, 5, &["0.019"]),
    (8, 1, &["0.434", "0.565", "0.615", "0.624", "0.599", "0.526", "0.345"]),
    (8, 2, &["0.245", "0.347", "0.384", "0.374", "0.315", "0.182"]),
    (8, 3, &["0.151", "0.217", "0.230", "0.197", "0.109"]),
    (8, 4, &["0.094", "0.130", "0.121", "0.068"]),
    (8, 5, &["0.056", "0.068", "0.042"]),
    (8, 6, &["0.030", "0.024"]),
    (8, 7, &["0.010"]),
    (
        9,
        1,
        &["0.441", "0.578", "0.635", "0.656", "0.650", "0.617", "0.537", "0.351"],
    ),
    (9, 2, &["0.355", "0.367", "0.417", "0.426", "0.401", "0.331", "0.188"]),
    (9, 3, &["0.162", "0.241", "0.271", "0.263", "0.215", "0.116"]),
    (9, 4, &["0.106", "0.157", "0.167", "0.141", "0.075"]),
    (9, 5, &["0.069", "0.097", "0.090", "0.050"]),
    (9, 6, &["0.043", "0.052", "0.031"]),
    (9, 7, &["0.022", "0.018"]),
    (9, 8, &["0.008"]),
];

pub const REFERENCE_SIZES: [usize; 4] = [5, 6, 8, 9];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CellStatus {
    Match,
    /// Off by at most one unit in the third decimal.
    LastDigit,
    /// Off by more than one unit in the third decimal.
    Typo,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Match => "match",
            CellStatus::LastDigit => "last-digit",
            CellStatus::Typo => "typo",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellComparison {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub published: &'static str,
    pub exact: Rational,
    pub rounded: String,
    pub status: CellStatus,
}

pub fn compare_reference() -> Vec<CellComparison> {
    let ulp = Rational::new(1.into(), 1000.into());
    let mut out = Vec::new();
    for &(n, t, row) in REFERENCE_TABLES {
        let sums = SquareSums::<Rational>::new(n);
        for (i, &published) in row.iter().enumerate() {
            let k = i + 1;
            let exact = sums.h(k, t).expect("reference cells are in range");
            let rounded = round_half_away(&exact, 3);
            let printed = parse_rational(published).expect("reference values parse");
            let status = if rounded == published {
                CellStatus::Match
            } else if (&exact - printed).abs() <= ulp {
                CellStatus::LastDigit
            } else {
                CellStatus::Typo
            };
            out.push(CellComparison {
                n,
                t,
                k,
                published,
                exact,
                rounded,
                status,
            });
        }
    }
    out
}

/// Fixture CSV for one sample size: every reference cell with its exact value.
pub fn render_fixture(n: usize) -> String {
    let mut s = String::from("n,t,k,h_exact,h_3dp,published,status\n");
    for c in compare_reference().into_iter().filter(|c| c.n == n) {
        writeln!(
            s,
            "{},{},{},{},{},{},{}",
            c.n,
            c.t,
            c.k,
            fraction_string(&c.exact),
            c.rounded,
            c.published,
            c.status.as_str()
        )
        .unwrap();
    }
    s
}

/// Sidecar listing every published cell that disagrees with the exact value.
pub fn render_notes() -> String {
    let cells = compare_reference();
    let mut s = String::from("# Published h(k) cells that differ from exact rounding\n");
    for status in [CellStatus::Typo, CellStatus::LastDigit] {
        writeln!(s, "\n## {}", status.as_str()).unwrap();
        for c in cells.iter().filter(|c| c.status == status) {
            writeln!(
                s,
                "n={} t={} k={}: published {}, exact {} = {}",
                c.n,
                c.t,
                c.k,
                c.published,
                fraction_string(&c.exact),
                round_half_away(&c.exact, 6)
            )
            .unwrap();
        }
    }
    s
}

pub fn fixture_file_name(n: usize) -> String {
    format!("h_exp_n{n}.csv")
}

pub const NOTES_FILE_NAME: &str = "discrepancies.md";
