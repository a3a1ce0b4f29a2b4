//! Structured pass/fail results.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::module::ModuleElement;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first mismatch found: where, which monomial, and both coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub context: String,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub terms_compared: u64,
    pub shapes_enumerated: u64,
    pub wall_time_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub status: Status,
    pub witness: Option<Witness>,
    pub stats: Stats,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds several reports into one; the first failure wins.
    pub fn combine(name: impl Into<String>, reports: Vec<VerificationReport>) -> VerificationReport {
        let mut stats = Stats::default();
        let mut witness = None;
        let mut notes = Vec::new();
        for r in reports {
            stats.terms_compared += r.stats.terms_compared;
            stats.shapes_enumerated += r.stats.shapes_enumerated;
            stats.wall_time_ms += r.stats.wall_time_ms;
            if witness.is_none() {
                if let Some(mut w) = r.witness {
                    w.context = format!("{}: {}", r.name, w.context);
                    witness = Some(w);
                }
            }
            notes.extend(r.notes);
        }
        VerificationReport {
            name: name.into(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
            stats,
            notes,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {} ({} terms, {} shapes, {} ms)",
            self.name, self.stats.terms_compared, self.stats.shapes_enumerated, self.stats.wall_time_ms
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n  at {}: coefficient of {}: lhs {} vs rhs {}", w.context, w.monomial, w.lhs, w.rhs)?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Accumulates comparisons and keeps the first failure.
pub struct Checker {
    name: String,
    start: Instant,
    stats: Stats,
    witness: Option<Witness>,
    notes: Vec<String>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Checker {
            name: name.into(),
            start: Instant::now(),
            stats: Stats::default(),
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn shape(&mut self) {
        self.stats.shapes_enumerated += 1;
    }

    pub fn shapes(&mut self, n: u64) {
        self.stats.shapes_enumerated += n;
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn fail(&mut self, context: impl Into<String>, monomial: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) {
        if self.witness.is_none() {
            self.witness = Some(Witness {
                context: context.into(),
                monomial: monomial.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            });
        }
    }

    /// Compares two polynomials exactly; returns whether they agree.
    pub fn poly(&mut self, context: impl fmt::Display, lhs: &Poly, rhs: &Poly) -> bool {
        self.stats.terms_compared += (lhs.len() + rhs.len()) as u64;
        match lhs.first_difference(rhs) {
            None => true,
            Some((m, a, b)) => {
                self.fail(context.to_string(), lhs.monomial_string(m), a.to_string(), b.to_string());
                false
            }
        }
    }

    pub fn module(&mut self, context: impl fmt::Display, lhs: &ModuleElement, rhs: &ModuleElement) -> bool {
        self.stats.terms_compared += lhs.iter().chain(rhs.iter()).map(|(_, p)| p.len() as u64).sum::<u64>();
        match lhs.first_difference(rhs) {
            None => true,
            Some((lam, a, b)) => {
                let (m, ca, cb) = a.first_difference(&b).expect("coefficients differ");
                self.fail(
                    format!("{context}, at [{lam}]"),
                    a.monomial_string(m),
                    ca.to_string(),
                    cb.to_string(),
                );
                false
            }
        }
    }

    pub fn int<T: fmt::Display + PartialEq>(&mut self, context: impl fmt::Display, lhs: T, rhs: T) -> bool {
        self.stats.terms_compared += 1;
        if lhs == rhs {
            true
        } else {
            self.fail(context.to_string(), "1", lhs.to_string(), rhs.to_string());
            false
        }
    }

    pub fn finish(self) -> VerificationReport {
        let mut stats = self.stats;
        stats.wall_time_ms = self.start.elapsed().as_millis();
        VerificationReport {
            name: self.name,
            status: if self.witness.is_some() { Status::Fail } else { Status::Pass },
            witness: self.witness,
            stats,
            notes: self.notes,
        }
    }
}
