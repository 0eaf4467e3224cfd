//! Clause-by-clause verification reports, serializable to JSON.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub id: String,
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub clauses: Vec<Clause>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            clauses: Vec::new(),
            pass: true,
        }
    }

    /// Records a clause; it passes iff the rendered values agree.
    pub fn check(
        &mut self,
        id: &str,
        claim: &str,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
    ) -> &mut Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let pass = expected == computed;
        self.push(id, claim, expected, computed, pass)
    }

    pub fn push(
        &mut self,
        id: &str,
        claim: &str,
        expected: String,
        computed: String,
        pass: bool,
    ) -> &mut Self {
        self.pass &= pass;
        self.clauses.push(Clause {
            id: id.to_string(),
            claim: claim.to_string(),
            expected,
            computed,
            pass,
        });
        self
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    /// Appends another report's clauses, prefixing nothing.
    pub fn extend(&mut self, other: Report) {
        self.pass &= other.pass;
        self.clauses.extend(other.clauses);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {}",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        for c in &self.clauses {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {:<24} {}", c.id, c.claim)?;
            if !c.pass {
                writeln!(f, "       expected: {}", c.expected)?;
                writeln!(f, "       computed: {}", c.computed)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_pass_tracks_clauses() {
        let mut r = Report::new("demo");
        r.check("a", "one is one", 1, 1);
        assert!(r.pass);
        r.check("b", "two is three", 2, 3);
        assert!(!r.pass);
        assert!(!r.clause("b").unwrap().pass);
        assert!(r.to_string().contains("FAIL"));
    }
}
