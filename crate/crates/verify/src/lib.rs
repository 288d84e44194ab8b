//! Runner for the acceptance gate: each criterion is timed against its
//! budget and reported on one line.

use std::fmt;
use std::time::{Duration, Instant};

/// Free-form findings collected while a criterion runs.
#[derive(Debug, Default)]
pub struct Notes(Vec<String>);

impl Notes {
    pub fn push(&mut self, line: impl Into<String>) {
        self.0.push(line.into());
    }

    /// Records `ok` under `label` and returns it.
    pub fn check(&mut self, label: impl fmt::Display, ok: bool) -> bool {
        self.0.push(format!("{} {label}", if ok { "ok  " } else { "FAIL" }));
        ok
    }

    pub fn lines(&self) -> &[String] {
        &self.0
    }
}

#[derive(Debug)]
pub struct Verdict {
    pub id: &'static str,
    pub title: &'static str,
    pub held: bool,
    pub elapsed: Duration,
    pub budget: Duration,
    pub notes: Notes,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.held && self.elapsed <= self.budget
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {}: {} {} [{:.3}s, budget {:.1}s]",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs_f64()
        )?;
        if self.held && !self.passed() {
            write!(f, " (over budget)")?;
        }
        Ok(())
    }
}

/// Runs `body`, which returns whether the criterion holds.
pub fn run(
    id: &'static str,
    title: &'static str,
    budget: Duration,
    body: impl FnOnce(&mut Notes) -> bool,
) -> Verdict {
    let mut notes = Notes::default();
    let start = Instant::now();
    let held = body(&mut notes);
    Verdict {
        id,
        title,
        held,
        elapsed: start.elapsed(),
        budget,
        notes,
    }
}
