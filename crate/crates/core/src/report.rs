//! Verification records shared by every checker.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::algebra::{Poly, Rational};

/// One verified (or refuted) identity: the operation, its inputs, the two
/// sides that were compared, and the verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub op: String,
    pub inputs: BTreeMap<String, Value>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub detail: BTreeMap<String, String>,
}

impl Check {
    /// A failing record with empty sides, to be filled in.
    pub fn new(op: &str) -> Self {
        Check {
            op: op.to_string(),
            inputs: BTreeMap::new(),
            lhs: String::new(),
            rhs: String::new(),
            pass: false,
            detail: BTreeMap::new(),
        }
    }

    pub fn compare(op: &str, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        Check::new(op).values(lhs, rhs, pass)
    }

    /// Compares two polynomials as polynomials.
    pub fn compare_poly(op: &str, lhs: Poly, rhs: Poly) -> Self {
        let pass = lhs == rhs;
        let check = Check::new(op).values(&lhs, &rhs, pass);
        if pass {
            check
        } else {
            check.extra("difference", (lhs - rhs).to_string())
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn values(mut self, lhs: impl fmt::Display, rhs: impl fmt::Display, pass: bool) -> Self {
        self.lhs = lhs.to_string();
        self.rhs = rhs.to_string();
        self.pass = pass;
        self
    }

    pub fn extra(mut self, key: &str, value: impl Into<String>) -> Self {
        self.detail.insert(key.to_string(), value.into());
        self
    }

    /// Marks the check failed with an error message.
    pub fn failed(mut self, error: impl Into<String>) -> Self {
        self.pass = false;
        self.detail.insert("error".to_string(), error.into());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "ok  " } else { "FAIL" };
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{verdict} {}({}): {} = {}", self.op, inputs.join(", "), self.lhs, self.rhs)?;
        for (k, v) in &self.detail {
            write!(f, " [{k}: {v}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_shape() {
        let c = Check::compare("balance", 10.into(), 10.into()).input("t", 0);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"op":"balance","inputs":{"t":0},"lhs":"10","rhs":"10","pass":true}"#
        );
        assert_eq!(c.to_string(), "ok   balance(t=0): 10 = 10");
    }

    #[test]
    fn poly_mismatch_reports_difference() {
        let c = Check::compare_poly("p", Poly::var("t"), Poly::constant(1));
        assert!(!c.pass);
        assert_eq!(c.detail["difference"], "t - 1");
    }
}
