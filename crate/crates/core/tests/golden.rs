use std::fs;
use std::path::PathBuf;

use orderstat::decimal::parse_rational;
use orderstat::golden::{fixture_file_name, render_fixture, render_notes, NOTES_FILE_NAME, REFERENCE_SIZES};
use orderstat::{h_exp, h_uniform, Rational};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

#[test]
fn committed_fixtures_match_renderer() {
    for n in REFERENCE_SIZES {
        assert_eq!(fixture(&fixture_file_name(n)), render_fixture(n), "n={n}");
    }
    assert_eq!(fixture(NOTES_FILE_NAME), render_notes());
}

#[test]
fn fixture_fractions_match_stored_oracle_values() {
    // (n, t, k, h) frozen from an independent brute-force evaluation
    let frozen = [
        (5, 1, 1, "16/41"),
        (9, 2, 1, "3136/12289"),
        (9, 8, 1, "78400/9778141"),
        (6, 4, 1, "100/1769"),
    ];
    for (n, t, k, h) in frozen {
        let csv = fixture(&fixture_file_name(n));
        let line = format!("{n},{t},{k},{h},");
        assert!(csv.lines().any(|l| l.starts_with(&line)), "missing {line}");
    }
}

#[test]
fn oracle_values_outside_the_tables() {
    assert_eq!(h_exp::<Rational>(8, 3, 2).unwrap(), q("45025/117349"));
    assert_eq!(
        h_exp::<Rational>(20, 7, 5).unwrap(),
        q("1369411304028625/3725248509888161")
    );
    assert_eq!(
        h_exp::<Rational>(40, 13, 9).unwrap(),
        q("333129023855643460778291981025/837874901119434521653745727409")
    );
    assert_eq!(h_uniform::<Rational>(6, 2, 2).unwrap(), q("3/10"));
    assert_eq!(h_uniform::<Rational>(9, 4, 3).unwrap(), q("2/7"));
}

#[test]
fn typo_is_listed_in_notes() {
    let notes = fixture(NOTES_FILE_NAME);
    let typo_section = notes.split("## last-digit").next().unwrap();
    assert!(typo_section.contains("n=9 t=2 k=1: published 0.355, exact 3136/12289"));
    assert_eq!(typo_section.matches("published").count(), 1);
}
