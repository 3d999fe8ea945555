//! Pass/fail reports made of named laws with counted violations.

use std::fmt;

const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: String,
    pub checks: usize,
    pub violations: usize,
    pub witnesses: Vec<String>,
}

/// Results of a verification suite, one entry per law in first-seen order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub laws: Vec<LawOutcome>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), laws: Vec::new() }
    }

    fn entry(&mut self, law: &str) -> &mut LawOutcome {
        let pos = match self.laws.iter().position(|l| l.law == law) {
            Some(p) => p,
            None => {
                self.laws.push(LawOutcome { law: law.to_string(), checks: 0, violations: 0, witnesses: Vec::new() });
                self.laws.len() - 1
            }
        };
        &mut self.laws[pos]
    }

    /// Records one check of `law`; the witness is only rendered on failure.
    pub fn check(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) -> bool {
        let e = self.entry(law);
        e.checks += 1;
        if !ok {
            e.violations += 1;
            if e.witnesses.len() < MAX_WITNESSES {
                e.witnesses.push(witness());
            }
        }
        ok
    }

    pub fn pass(&mut self, law: &str) {
        self.entry(law).checks += 1;
    }

    pub fn fail(&mut self, law: &str, witness: impl Into<String>) {
        let w = witness.into();
        self.check(law, false, || w);
    }

    /// Folds `other` into this report, keeping law order stable.
    pub fn merge(&mut self, other: Report) {
        for l in other.laws {
            let e = self.entry(&l.law);
            e.checks += l.checks;
            e.violations += l.violations;
            for w in l.witnesses {
                if e.witnesses.len() < MAX_WITNESSES {
                    e.witnesses.push(w);
                }
            }
        }
    }

    /// Like [`Report::merge`] but prefixes every law name.
    pub fn merge_prefixed(&mut self, prefix: &str, other: Report) {
        for mut l in other.laws {
            l.law = format!("{prefix}/{}", l.law);
            let mut r = Report::new("");
            r.laws.push(l);
            self.merge(r);
        }
    }

    pub fn violations(&self) -> usize {
        self.laws.iter().map(|l| l.violations).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }

    pub fn law(&self, law: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == law)
    }

    /// True if any law whose name contains `needle` was violated.
    pub fn violated(&self, needle: &str) -> bool {
        self.laws.iter().any(|l| l.violations > 0 && l.law.contains(needle))
    }

    /// Machine-readable `PASS|FAIL <suite> <violations>` line.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        format!("{verdict} {} {}", self.suite, self.violations())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for l in &self.laws {
            if l.violations == 0 {
                writeln!(f, "  ok   {} ({} checks)", l.law, l.checks)?;
            } else {
                writeln!(f, "  FAIL {} ({} of {} checks)", l.law, l.violations, l.checks)?;
                for w in &l.witnesses {
                    writeln!(f, "         {w}")?;
                }
            }
        }
        write!(f, "{}", self.summary_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_summary() {
        let mut r = Report::new("demo");
        r.check("a", true, || unreachable!());
        r.check("b", false, || "w1".into());
        r.check("b", false, || "w2".into());
        assert_eq!(r.violations(), 2);
        assert!(!r.passed());
        assert!(r.violated("b"));
        assert_eq!(r.summary_line(), "FAIL demo 2");
        let mut total = Report::new("all");
        total.merge_prefixed("x", r);
        assert_eq!(total.law("x/b").unwrap().witnesses, vec!["w1", "w2"]);
        assert_eq!(Report::new("empty").summary_line(), "PASS empty 0");
    }
}
