use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{LaurentPoly, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// First disagreement found: which comparison, where, and both values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub comparison: String,
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity at one size. Each side carries its own provenance so a
/// check can never compare a quantity against itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub n: usize,
    pub status: Status,
    pub witness: Option<Witness>,
    pub provenance: BTreeMap<String, String>,
    pub seed: Option<u64>,
    /// False for checks that record a known discrepancy rather than gate a run.
    pub gating: bool,
    /// Names of the sub-comparisons that ran, plus any non-gating observations.
    pub detail: Vec<String>,
}

impl IdentityCheck {
    pub fn new(identity: impl Into<String>, n: usize, lhs: &str, rhs: &str) -> Self {
        let provenance = BTreeMap::from([("lhs".to_string(), lhs.to_string()), ("rhs".to_string(), rhs.to_string())]);
        assert_ne!(lhs, rhs, "both sides of a check share provenance");
        IdentityCheck {
            identity: identity.into(),
            n,
            status: Status::Pass,
            witness: None,
            provenance,
            seed: None,
            gating: true,
            detail: Vec::new(),
        }
    }

    pub fn skipped(identity: impl Into<String>, n: usize, reason: impl Into<String>) -> Self {
        IdentityCheck {
            identity: identity.into(),
            n,
            status: Status::Skipped,
            witness: None,
            provenance: BTreeMap::new(),
            seed: None,
            gating: true,
            detail: vec![reason.into()],
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn non_gating(mut self) -> Self {
        self.gating = false;
        self
    }

    /// A failure that should stop a run.
    pub fn blocking_failure(&self) -> bool {
        self.gating && self.status == Status::Fail
    }

    pub fn note(&mut self, s: impl Into<String>) {
        let s = s.into();
        if !self.detail.contains(&s) {
            self.detail.push(s);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, comparison: &str, at: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) {
        if self.status == Status::Skipped {
            return;
        }
        if self.witness.is_none() {
            self.witness =
                Some(Witness { comparison: comparison.into(), at: at.into(), lhs: lhs.into(), rhs: rhs.into() });
        }
        self.status = Status::Fail;
    }

    pub fn equal<T: PartialEq + fmt::Display>(
        &mut self,
        comparison: &str,
        at: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.note(comparison);
        if lhs != rhs {
            self.fail(comparison, at, lhs.to_string(), rhs.to_string());
            return false;
        }
        true
    }

    /// Coefficient-by-coefficient comparison of two Laurent polynomials.
    pub fn laurent<R: Ring + fmt::Display>(
        &mut self,
        comparison: &str,
        lhs: &LaurentPoly<R>,
        rhs: &LaurentPoly<R>,
    ) -> bool {
        self.note(comparison);
        if let Some((e, a, b)) = first_difference(lhs, rhs) {
            self.fail(comparison, format!("{}^{e}", lhs.variable()), a.to_string(), b.to_string());
            return false;
        }
        true
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "n": self.n,
            "status": self.status,
            "witness": self.witness,
            "provenance": self.provenance,
            "seed": self.seed,
            "gating": self.gating,
            "detail": self.detail,
        })
    }
}

/// Smallest exponent at which the coefficients differ.
pub fn first_difference<R: Ring>(a: &LaurentPoly<R>, b: &LaurentPoly<R>) -> Option<(i64, R, R)> {
    let mut exps: Vec<i64> = a.terms().chain(b.terms()).map(|(e, _)| e).collect();
    exps.sort_unstable();
    exps.dedup();
    exps.into_iter().find_map(|e| {
        let (x, y) = (a.coeff(e), b.coeff(e));
        (x != y).then_some((e, x, y))
    })
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<28} n={:<3} {}", self.identity, self.n, self.status)?;
        if !self.gating {
            f.write_str(" (non-gating)")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "  [{} at {}: {} vs {}]", w.comparison, w.at, w.lhs, w.rhs)?;
        }
        if self.status == Status::Skipped {
            if let Some(r) = self.detail.first() {
                write!(f, "  ({r})")?;
            }
        }
        Ok(())
    }
}
