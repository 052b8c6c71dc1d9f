use std::fmt;

use crate::decimal::fraction_string;
use crate::Rational;

/// A value taking part in a comparison: exact when it came from rational
/// arithmetic, approximate when it came from quadrature or simulation.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Exact(Rational),
    Approx(f64),
}

impl Quantity {
    pub fn to_f64(&self) -> f64 {
        match self {
            Quantity::Exact(r) => crate::Scalar::to_f64(r),
            Quantity::Approx(x) => *x,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Exact(r) => f.write_str(&fraction_string(r)),
            Quantity::Approx(x) => write!(f, "{x:e}"),
        }
    }
}

impl From<Rational> for Quantity {
    fn from(r: Rational) -> Self {
        Quantity::Exact(r)
    }
}

impl From<f64> for Quantity {
    fn from(x: f64) -> Self {
        Quantity::Approx(x)
    }
}

/// One failed comparison `lhs <relation> rhs`, with the values that were compared.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub parameters: String,
    pub lhs: Quantity,
    pub relation: &'static str,
    pub rhs: Quantity,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] expected {} {} {}",
            self.parameters, self.lhs, self.relation, self.rhs
        )
    }
}

/// Pass/fail ledger for one claim over some parameter range.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameter_range: String,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, parameter_range: impl Into<String>) -> Self {
        Self {
            claim_id: claim_id.into(),
            parameter_range: parameter_range.into(),
            checks_run: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record one comparison; `holds` is the outcome.
    pub fn check(
        &mut self,
        holds: bool,
        parameters: impl FnOnce() -> String,
        lhs: impl Into<Quantity>,
        relation: &'static str,
        rhs: impl Into<Quantity>,
    ) -> bool {
        self.checks_run += 1;
        if !holds {
            self.failures.push(Failure {
                parameters: parameters(),
                lhs: lhs.into(),
                relation,
                rhs: rhs.into(),
            });
        }
        holds
    }

    /// Exact strict/non-strict comparison helpers.
    pub fn check_lt(&mut self, params: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) -> bool {
        self.check(lhs < rhs, params, lhs.clone(), "<", rhs.clone())
    }

    pub fn check_gt(&mut self, params: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) -> bool {
        self.check(lhs > rhs, params, lhs.clone(), ">", rhs.clone())
    }

    pub fn check_eq(&mut self, params: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) -> bool {
        self.check(lhs == rhs, params, lhs.clone(), "=", rhs.clone())
    }

    /// Fold another report's counts and failures into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks_run += other.checks_run;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}): {} checks, {} failures -> {}",
            self.claim_id,
            self.parameter_range,
            self.checks_run,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
