//! Law-check reports.
//!
//! A [`Report`] is an ordered list of named [`Check`]s. Each check counts the
//! axiom instances it evaluated and keeps the first few failing witnesses.

use std::fmt;

use serde::Serialize;

/// Witnesses kept per check; failures beyond this are counted only.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    /// Records one instance. The witness closure only runs on failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.record(false, || witness.into());
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends every check of `other`, renamed to `prefix.name`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True when every check whose name starts with `prefix` passed.
    pub fn holds_for(&self, prefix: &str) -> bool {
        self.checks
            .iter()
            .filter(|c| c.name.starts_with(prefix))
            .all(Check::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn failed_names(&self) -> String {
        let names: Vec<&str> = self.failed().map(|c| c.name.as_str()).collect();
        names.join(", ")
    }

    /// Line-oriented `key=value` records, one per check and one per witness.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "check={} status={} instances={} failures={}\n",
                c.name,
                if c.passed() { "pass" } else { "fail" },
                c.instances,
                c.failures
            ));
            for w in &c.witnesses {
                out.push_str(&format!("witness check={} {}\n", c.name, w));
            }
        }
        out.push_str(&format!(
            "verdict={}\n",
            if self.holds() { "valid" } else { "invalid" }
        ));
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_lines())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_are_capped_but_failures_counted() {
        let mut c = Check::new("x");
        for i in 0..40 {
            c.record(i % 2 == 0, || format!("i={i}"));
        }
        assert_eq!(c.instances, 40);
        assert_eq!(c.failures, 20);
        assert_eq!(c.witnesses.len(), MAX_WITNESSES);
        assert_eq!(c.witnesses[0], "i=1");
    }

    #[test]
    fn empty_report_holds() {
        let r = Report::new();
        assert!(r.holds());
        assert!(r.to_lines().ends_with("verdict=valid\n"));
    }
}
