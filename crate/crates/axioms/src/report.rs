use std::fmt;

/// Which axiom system a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum System {
    Gl,
    Sn,
    Local,
}

impl System {
    pub fn as_str(self) -> &'static str {
        match self {
            System::Gl => "GL",
            System::Sn => "SN",
            System::Local => "LOCAL",
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The outcome of one axiom: `witness` holds the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: &'static str,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub system: System,
    pub verdicts: Vec<Verdict>,
    /// Observations that do not affect the verdicts.
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub(crate) fn new(system: System) -> Self {
        AxiomReport { system, verdicts: Vec::new(), notes: Vec::new() }
    }

    pub(crate) fn record(&mut self, axiom: &'static str, outcome: Result<(), String>) {
        self.verdicts.push(Verdict { axiom, witness: outcome.err() });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn verdict(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.system, if self.passed() { "PASS" } else { "FAIL" })?;
        for v in &self.verdicts {
            match &v.witness {
                None => writeln!(f, "  {} PASS", v.axiom)?,
                Some(w) => writeln!(f, "  {} FAIL: {w}", v.axiom)?,
            }
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}
