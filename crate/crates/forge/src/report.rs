use serde::Serialize;

/// Output style shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// One named check, tied to the acceptance criterion it certifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(
        criterion: u8,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            criterion,
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self {
            suite: suite.into(),
            seed,
            passed,
            checks,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => crate::json::to_text(self),
            Format::Table => {
                let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
                for c in &self.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    out.push_str(&format!(
                        "{mark} [{:>2}] {}: {}\n",
                        c.criterion, c.name, c.detail
                    ));
                }
                let ok = self.checks.iter().filter(|c| c.passed).count();
                let verdict = if self.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{verdict} {ok}/{} checks\n", self.checks.len()));
                out
            }
        }
    }
}
