use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Disagreement with an unproved claim; reported, not a failure.
    Finding,
    /// Nothing to compare, e.g. a missing b-file.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Finding => "FINDING",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub sizes: String,
    pub status: Status,
    /// Extra information such as the counts that were compared.
    pub detail: String,
    /// Nonempty exactly when the check failed.
    pub counterexample: String,
}

impl Check {
    pub fn pass(
        name: impl Into<String>,
        sizes: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            sizes: sizes.into(),
            status: Status::Pass,
            detail: detail.into(),
            counterexample: String::new(),
        }
    }

    pub fn fail(
        name: impl Into<String>,
        sizes: impl Into<String>,
        counterexample: impl Into<String>,
    ) -> Self {
        let counterexample = counterexample.into();
        assert!(
            !counterexample.is_empty(),
            "a failing check needs a counterexample"
        );
        Check {
            name: name.into(),
            sizes: sizes.into(),
            status: Status::Fail,
            detail: String::new(),
            counterexample,
        }
    }

    pub fn with_status(mut self, status: Status, detail: impl Into<String>) -> Self {
        assert_ne!(status, Status::Fail, "use Check::fail");
        self.status = status;
        self.detail = detail.into();
        self.counterexample.clear();
        self
    }

    /// Pass when `result` is `Ok`, otherwise fail with its message.
    pub fn from_result(
        name: impl Into<String>,
        sizes: impl Into<String>,
        result: Result<String, String>,
    ) -> Self {
        match result {
            Ok(detail) => Check::pass(name, sizes, detail),
            Err(cx) => Check::fail(name, sizes, cx),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn exit_status(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            checks: &'a [Check],
            exit_status: i32,
        }
        let mut s = serde_json::to_string_pretty(&Out {
            checks: &self.checks,
            exit_status: self.exit_status(),
        })
        .expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<7} {} [{}]", c.status, c.name, c.sizes)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            if !c.counterexample.is_empty() {
                write!(f, ": counterexample {}", c.counterexample)?;
            }
            writeln!(f)?;
        }
        let fails = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), fails)
    }
}
