use std::fmt;

/// Outcome of an exhaustive axiom sweep: pass, or the lexicographically
/// first failing axiom with its witness tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    Fail { axiom: &'static str, witness: Vec<usize> },
}

impl AxiomReport {
    pub fn pass() -> Self {
        AxiomReport::Pass
    }

    pub fn fail(axiom: &'static str, witness: Vec<usize>) -> Self {
        AxiomReport::Fail { axiom, witness }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomReport::Pass => write!(f, "PASS"),
            AxiomReport::Fail { axiom, witness } => {
                write!(f, "FAIL: {axiom} at witness {witness:?}")
            }
        }
    }
}
